#include "satake/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace satake {

int PositiveRoot::height() const { return std::accumulate(root_coords.begin(), root_coords.end(), 0); }

IntMatrix cartan_of_type(char letter, std::size_t n)
{
    auto bad = [&] {
        return RootDatumError(std::string("unsupported Dynkin type ") + letter + std::to_string(n));
    };
    IntMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    // a[i][j] = -r when alpha_i is long, alpha_j short and |alpha_i|^2 = r |alpha_j|^2.
    switch (letter) {
    case 'A':
        if (n < 1)
            throw bad();
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case 'B':
        if (n < 2)
            throw bad();
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        a[n - 2][n - 1] = -2;  // alpha_n short
        break;
    case 'C':
        if (n < 2)
            throw bad();
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        a[n - 1][n - 2] = -2;  // alpha_n long
        break;
    case 'D':
        if (n < 3)
            throw bad();
        for (std::size_t i = 0; i + 2 < n; ++i)
            link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        if (n < 6 || n > 8)
            throw bad();
        // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case 'F':
        if (n != 4)
            throw bad();
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[1][2] = -2;  // alpha_1, alpha_2 long
        break;
    case 'G':
        if (n != 2)
            throw bad();
        // alpha_1 short root (long coroot), alpha_2 long root.
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    default:
        throw bad();
    }
    return a;
}

namespace {

Rational determinant(QMatrix m)
{
    std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::vector<std::vector<std::size_t>> components(const IntMatrix& a)
{
    std::size_t n = a.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<std::size_t> nodes;
        std::deque<std::size_t> q{s};
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            auto i = q.front();
            q.pop_front();
            nodes.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && a[i][j] != 0 && comp[j] < 0) {
                    comp[j] = static_cast<int>(out.size());
                    q.push_back(j);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

void validate_cartan(const IntMatrix& a)
{
    std::size_t n = a.size();
    if (n == 0)
        throw RootDatumError("Cartan matrix must have positive rank");
    for (const auto& row : a)
        if (row.size() != n)
            throw RootDatumError("Cartan matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && a[i][j] != 2)
                throw RootDatumError("Cartan diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     ") is not 2");
            if (i != j && a[i][j] > 0)
                throw RootDatumError("positive off-diagonal Cartan entry at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
            if (i != j && (a[i][j] == 0) != (a[j][i] == 0))
                throw RootDatumError("Cartan entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     ") and its transpose disagree on vanishing");
        }
    for (const auto& block : components(a)) {
        std::size_t k = block.size();
        if (k > 16)
            throw RootDatumError("irreducible block too large to validate");
        // Finite type iff every principal minor of the block is positive.
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b))
                    idx.push_back(block[b]);
            QMatrix m(idx.size(), idx.size());
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    m(r, c) = a[idx[r]][idx[c]];
            if (determinant(m) <= 0) {
                std::ostringstream os;
                os << "Cartan block on nodes {";
                for (std::size_t b = 0; b < k; ++b)
                    os << (b ? "," : "") << block[b] + 1;
                os << "} is not of finite type";
                throw RootDatumError(os.str());
            }
        }
    }
}

std::string identify(const IntMatrix& a, const std::vector<std::size_t>& nodes, std::size_t n_positive,
                     const std::vector<int>& len2)
{
    std::size_t n = nodes.size();
    int max_bond = 0;
    for (auto i : nodes)
        for (auto j : nodes)
            if (i != j)
                max_bond = std::max(max_bond, a[i][j] * a[j][i]);
    std::string r = std::to_string(n);
    if (max_bond <= 1) {
        if (n_positive == n * (n + 1) / 2)
            return "A" + r;
        if (n_positive == n * (n - 1))
            return "D" + r;
        return "E" + r;
    }
    if (max_bond == 3)
        return "G2";
    if (n == 4 && n_positive == 24)
        return "F4";
    int longest = 0;
    for (auto i : nodes)
        longest = std::max(longest, len2[i]);
    std::size_t n_long = 0;
    for (auto i : nodes)
        n_long += len2[i] == longest;
    if (n == 2 || n_long == n - 1)
        return "B" + r;
    return "C" + r;
}

}  // namespace

RootDatum RootDatum::from_descriptor(const std::string& descriptor)
{
    std::string d;
    for (char c : descriptor)
        if (!std::isspace(static_cast<unsigned char>(c)))
            d += c;
    if (d.empty())
        throw RootDatumError("empty type descriptor");

    bool numeric = std::all_of(d.begin(), d.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '-' || c == '[' || c == ']' || c == ';';
    });
    if (numeric) {
        std::vector<int> flat;
        std::string tok;
        auto flush = [&] {
            if (!tok.empty()) {
                try {
                    flat.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw RootDatumError("bad integer in Cartan list: " + tok);
                }
                tok.clear();
            }
        };
        for (char c : d) {
            if (c == ',' || c == '[' || c == ']' || c == ';')
                flush();
            else
                tok += c;
        }
        flush();
        auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
        if (n == 0 || n * n != flat.size())
            throw RootDatumError("explicit Cartan list length " + std::to_string(flat.size()) + " is not a square");
        IntMatrix a(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = flat[i * n + j];
        return from_cartan(a);
    }

    std::vector<std::pair<char, std::size_t>> parts;
    std::size_t pos = 0;
    while (pos < d.size()) {
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(d[pos])));
        if (letter < 'A' || letter > 'G')
            throw RootDatumError("bad type descriptor: " + descriptor);
        ++pos;
        std::size_t start = pos;
        while (pos < d.size() && std::isdigit(static_cast<unsigned char>(d[pos])))
            ++pos;
        if (start == pos)
            throw RootDatumError("missing rank in type descriptor: " + descriptor);
        parts.emplace_back(letter, std::stoul(d.substr(start, pos - start)));
        if (pos < d.size()) {
            if (d[pos] != 'x' && d[pos] != 'X' && d[pos] != '*')
                throw RootDatumError("expected 'x' between factors in: " + descriptor);
            ++pos;
            if (pos == d.size())
                throw RootDatumError("trailing separator in: " + descriptor);
        }
    }
    std::size_t total = 0;
    for (auto& [l, n] : parts)
        total += n;
    IntMatrix a(total, std::vector<int>(total, 0));
    std::vector<std::string> labels;
    std::size_t off = 0;
    for (auto& [l, n] : parts) {
        auto block = cartan_of_type(l, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[off + i][off + j] = block[i][j];
        labels.push_back(std::string(1, l) + std::to_string(n));
        off += n;
    }
    RootDatum rd;
    rd.build(a, labels);
    return rd;
}

RootDatum RootDatum::from_cartan(const IntMatrix& cartan)
{
    RootDatum rd;
    rd.build(cartan, {});
    return rd;
}

void RootDatum::build(const IntMatrix& a, std::vector<std::string> labels)
{
    validate_cartan(a);
    rank_ = a.size();
    cartan_ = a;

    auto comps = components(a);
    factor_of_.assign(rank_, 0);
    for (std::size_t f = 0; f < comps.size(); ++f)
        for (auto i : comps[f])
            factor_of_[i] = f;

    // Symmetrizer: a_ij |alpha_j|^2 = a_ji |alpha_i|^2.
    std::vector<Rational> len(rank_, 0);
    for (const auto& comp : comps) {
        std::deque<std::size_t> q{comp.front()};
        len[comp.front()] = 1;
        while (!q.empty()) {
            auto i = q.front();
            q.pop_front();
            for (std::size_t j = 0; j < rank_; ++j)
                if (j != i && a[i][j] != 0 && len[j] == 0) {
                    len[j] = len[i] * a[j][i] / a[i][j];
                    q.push_back(j);
                }
        }
        Rational smallest = len[comp.front()];
        for (auto i : comp)
            smallest = std::min(smallest, len[i]);
        for (auto i : comp)
            len[i] /= smallest;
    }
    root_length2_.assign(rank_, 1);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (len[i].get_den() != 1)
            throw RootDatumError("Cartan matrix is not symmetrizable");
        root_length2_[i] = static_cast<int>(len[i].get_num().get_si());
    }

    // Roots and coroots by simultaneous reflection closure from the simple ones.
    std::map<std::vector<int>, std::vector<int>> roots;  // root coords -> coroot coords
    std::deque<std::vector<int>> queue;
    for (std::size_t i = 0; i < rank_; ++i) {
        std::vector<int> e(rank_, 0);
        e[i] = 1;
        roots[e] = e;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        auto beta_v = roots[beta];
        for (std::size_t j = 0; j < rank_; ++j) {
            int bj = 0;  // (beta, alpha_j^v)
            int jb = 0;  // (alpha_j, beta^v)
            for (std::size_t i = 0; i < rank_; ++i) {
                bj += beta[i] * a[i][j];
                jb += beta_v[i] * a[j][i];
            }
            auto r = beta;
            auto rv = beta_v;
            r[j] -= bj;
            rv[j] -= jb;
            if (!roots.count(r)) {
                if (roots.size() > 100000)
                    throw RootDatumError("root enumeration did not terminate");
                roots[r] = rv;
                queue.push_back(r);
            }
        }
    }

    positive_.clear();
    for (const auto& [r, rv] : roots) {
        if (!std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }))
            continue;
        PositiveRoot p;
        p.root_coords = r;
        p.coroot_coords = rv;
        p.weight = Weight(rank_);
        p.coroot = Coweight(rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t k = 0; k < rank_; ++k) {
                p.weight[k] += r[i] * a[i][k];
                p.coroot[k] += a[k][i] * rv[i];
            }
        p.factor = factor_of_[std::find_if(r.begin(), r.end(), [](int x) { return x != 0; }) - r.begin()];
        positive_.push_back(std::move(p));
    }
    std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
        if (x.height() != y.height())
            return x.height() < y.height();
        return x.root_coords > y.root_coords;
    });

    two_rho_dual_ = Coweight(rank_);
    for (const auto& p : positive_)
        two_rho_dual_ += p.coroot;

    QMatrix am(rank_, rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            am(i, j) = a[i][j];
    cartan_inverse_ = inverse(am);

    factors_.clear();
    for (std::size_t f = 0; f < comps.size(); ++f) {
        std::size_t npos = 0;
        for (const auto& p : positive_)
            npos += p.factor == f;
        std::string lab = identify(a, comps[f], npos, root_length2_);
        if (!labels.empty() && f < labels.size() && labels.size() == comps.size())
            lab = labels[f];
        factors_.push_back({lab, comps[f]});
    }
    label_.clear();
    for (std::size_t f = 0; f < factors_.size(); ++f)
        label_ += (f ? "x" : "") + factors_[f].label;
}

std::vector<Weight> RootDatum::positive_root_weights() const
{
    std::vector<Weight> out;
    for (const auto& p : positive_)
        out.push_back(p.weight);
    return out;
}

std::vector<Coweight> RootDatum::positive_coroots() const
{
    std::vector<Coweight> out;
    for (const auto& p : positive_)
        out.push_back(p.coroot);
    return out;
}

Weight RootDatum::simple_root(std::size_t i) const
{
    Weight w(rank_);
    for (std::size_t k = 0; k < rank_; ++k)
        w[k] = cartan_.at(i)[k];
    return w;
}

Coweight RootDatum::simple_coroot(std::size_t i) const
{
    Coweight c(rank_);
    for (std::size_t k = 0; k < rank_; ++k)
        c[k] = cartan_[k].at(i);
    return c;
}

Weight RootDatum::fundamental_weight(std::size_t i) const
{
    Weight w(rank_);
    w.coords.at(i) = 1;
    return w;
}

Coweight RootDatum::fundamental_coweight(std::size_t i) const
{
    Coweight c(rank_);
    c.coords.at(i) = 1;
    return c;
}

int RootDatum::pairing(const Weight& w, const Coweight& c) const
{
    if (w.size() != rank_ || c.size() != rank_)
        throw std::invalid_argument("pairing: rank mismatch");
    Rational total = 0;
    for (std::size_t k = 0; k < rank_; ++k) {
        if (w[k] == 0)
            continue;
        Rational xk = 0;
        for (std::size_t j = 0; j < rank_; ++j)
            xk += cartan_inverse_(k, j) * c[j];
        total += xk * w[k];
    }
    if (total.get_den() != 1)
        throw std::domain_error("pairing of " + w.str() + " with " + c.str() + " is not integral");
    return static_cast<int>(total.get_num().get_si());
}

int RootDatum::root_pairing(const std::vector<int>& root_coords, const Coweight& c) const
{
    if (root_coords.size() != rank_ || c.size() != rank_)
        throw std::invalid_argument("root pairing: rank mismatch");
    int s = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        s += root_coords[i] * c[i];
    return s;
}

Coweight RootDatum::reflect(const Coweight& c, std::size_t i) const
{
    Coweight out = c;
    int p = c[i];
    if (p != 0)
        for (std::size_t k = 0; k < rank_; ++k)
            out[k] -= p * cartan_[k][i];
    return out;
}

Weight RootDatum::reflect(const Weight& w, std::size_t i) const
{
    Weight out = w;
    int p = w[i];
    if (p != 0)
        for (std::size_t k = 0; k < rank_; ++k)
            out[k] -= p * cartan_[i][k];
    return out;
}

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& c) const
{
    if (c.size() != rank_)
        throw std::invalid_argument("weyl_orbit: rank mismatch");
    std::set<Coweight> seen{c};
    std::deque<Coweight> q{c};
    while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < rank_; ++i) {
            auto y = reflect(x, i);
            if (seen.insert(y).second)
                q.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

bool RootDatum::is_dominant(const Coweight& c) const
{
    return std::all_of(c.coords.begin(), c.coords.end(), [](int x) { return x >= 0; });
}

std::pair<Coweight, int> RootDatum::dominant_with_sign(const Coweight& c) const
{
    Coweight x = c;
    int sign = 1;
    for (;;) {
        auto it = std::find_if(x.coords.begin(), x.coords.end(), [](int v) { return v < 0; });
        if (it == x.coords.end())
            return {x, sign};
        x = reflect(x, static_cast<std::size_t>(it - x.coords.begin()));
        sign = -sign;
    }
}

std::pair<Coweight, bool> RootDatum::dominant_representative(const Coweight& c) const
{
    if (c.size() != rank_)
        throw std::invalid_argument("dominant_representative: rank mismatch");
    return {dominant_with_sign(c).first, is_dominant(c)};
}

int RootDatum::two_rho_pairing(const Coweight& c) const
{
    if (c.size() != rank_)
        throw std::invalid_argument("two_rho_pairing: rank mismatch");
    int s = 0;
    for (const auto& p : positive_)
        s += root_pairing(p.root_coords, c);
    return s;
}

std::vector<Rational> RootDatum::coroot_coordinates(const Coweight& c) const
{
    std::vector<Rational> x(rank_);
    for (std::size_t k = 0; k < rank_; ++k)
        for (std::size_t j = 0; j < rank_; ++j)
            x[k] += cartan_inverse_(k, j) * c[j];
    return x;
}

bool RootDatum::in_coroot_lattice(const Coweight& c) const
{
    auto x = coroot_coordinates(c);
    return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool RootDatum::dominates(const Coweight& lambda, const Coweight& mu) const
{
    auto x = coroot_coordinates(lambda - mu);
    return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.get_den() == 1 && q >= 0; });
}

std::vector<std::size_t> RootDatum::factor_support(const Coweight& c) const
{
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (auto i : factors_[f].nodes)
            if (c[i] != 0) {
                out.push_back(f);
                break;
            }
    return out;
}

bool RootDatum::is_long_coroot(std::size_t i) const
{
    // Coroot length is inverse to root length.
    for (auto j : factors_[factor_of_.at(i)].nodes)
        if (root_length2_[j] < root_length2_[i])
            return false;
    return true;
}

bool RootDatum::is_short_coroot(std::size_t i) const
{
    for (auto j : factors_[factor_of_.at(i)].nodes)
        if (root_length2_[j] > root_length2_[i])
            return false;
    return true;
}

LeviFactor RootDatum::levi_subdatum(std::size_t i) const
{
    if (i >= rank_)
        throw std::out_of_range("levi_subdatum: simple index " + std::to_string(i + 1) + " out of range 1.." +
                                std::to_string(rank_));
    return LeviFactor{RootDatum::from_descriptor("A1"), i, simple_root(i), simple_coroot(i), is_long_coroot(i),
                      is_short_coroot(i)};
}

}  // namespace satake
