#include "satake/satake.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

namespace satake {

namespace {

// One line {base + t * shift} of weights, with the H eigenvalue and dimension
// at each position.
struct Line {
    std::map<long, Coweight> weight;
    std::map<long, long> eigenvalue;
    std::map<long, std::size_t> dim;
};

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::map<Coweight, Line> split_into_lines(const WeightedOperator& e, const WeightedOperator& h)
{
    std::size_t j = 0;
    while (j < e.shift.size() && e.shift[j] == 0)
        ++j;
    if (j == e.shift.size())
        throw std::invalid_argument("sl2: raising operator has zero shift");
    if (!h.shift.is_zero())
        throw std::invalid_argument("sl2: H must preserve weights");

    std::map<Coweight, Line> lines;
    for (const auto& [mu, block] : h.blocks) {
        Rational s;
        if (block.rows() != block.cols() || !block.is_scalar(&s))
            throw std::invalid_argument("sl2: H is not scalar on weight " + mu.str());
        if (s.get_den() != 1)
            throw std::invalid_argument("sl2: non-integral H eigenvalue on weight " + mu.str());
        if (block.rows() == 0)
            continue;
        long t = floor_div(mu[j], e.shift[j]);
        Coweight base = mu - static_cast<int>(t) * e.shift;
        auto& line = lines[base];
        line.weight.emplace(t, mu);
        line.eigenvalue[t] = s.get_num().get_si();
        line.dim[t] = block.rows();
    }
    return lines;
}

std::size_t dim_at(const Line& line, long t)
{
    auto it = line.dim.find(t);
    return it == line.dim.end() ? 0 : it->second;
}

// E block from position t to t+1 with the correct shape.
QMatrix e_block(const WeightedOperator& e, const Line& line, long t)
{
    const std::size_t rows = dim_at(line, t + 1), cols = dim_at(line, t);
    if (rows && cols)
        if (const QMatrix* b = e.block(line.weight.at(t)); b && b->rows() == rows && b->cols() == cols)
            return *b;
    return QMatrix(rows, cols);
}

// Checks [H, E] = 2E on every nonzero block.
void check_commutation(const WeightedOperator& e, const Line& line)
{
    for (const auto& [t, mu] : line.weight) {
        if (!line.dim.count(t + 1))
            continue;
        if (e_block(e, line, t).is_zero())
            continue;
        if (line.eigenvalue.at(t + 1) - line.eigenvalue.at(t) != 2)
            throw std::invalid_argument("sl2: [H, E] != 2E at weight " + mu.str());
    }
}

std::string describe(long low, long high)
{
    std::ostringstream os;
    os << "E^" << high << " is not a bijection from the H=" << low << " to the H=" << high << " eigenspace";
    return os.str();
}

struct LefschetzFailure {
    std::string message;
    long low = 0, high = 0;
};

std::optional<LefschetzFailure> check_lefschetz(const WeightedOperator& e, const Line& line)
{
    for (const auto& [t, v] : line.eigenvalue) {
        if (v == 0)
            continue;
        const long m = std::abs(v);
        const long lo = v < 0 ? t : t - m;
        const long hi = lo + m;
        const std::size_t dlo = dim_at(line, lo), dhi = dim_at(line, hi);
        // Positions without a space carry no eigenvalue; treat them as the
        // eigenvalue they would have.
        if (dlo != dhi)
            return LefschetzFailure{describe(-m, m) + " (dimensions " + std::to_string(dlo) + " and " +
                                        std::to_string(dhi) + ")",
                                    -m, m};
        if (v > 0)
            continue;  // checked from the negative side
        QMatrix p = QMatrix::identity(dlo);
        for (long s = lo; s < hi; ++s)
            (p = e_block(e, line, s) * p).make_primitive();
        if (rank(p) != dlo)
            return LefschetzFailure{describe(-m, m), -m, m};
    }
    return std::nullopt;
}

}  // namespace

std::string lefschetz_failure(const WeightedOperator& e, const WeightedOperator& h)
{
    for (const auto& [base, line] : split_into_lines(e, h)) {
        check_commutation(e, line);
        if (auto f = check_lefschetz(e, line))
            return f->message + " on the line through " + line.weight.begin()->second.str();
    }
    return {};
}

WeightedOperator sl2_completion(const WeightedOperator& e, const WeightedOperator& h)
{
    WeightedOperator f(-e.shift);
    for (const auto& [base, line] : split_into_lines(e, h)) {
        check_commutation(e, line);
        if (auto fail = check_lefschetz(e, line))
            throw LefschetzError("sl2_completion: " + fail->message + " on the line through " +
                                     line.weight.begin()->second.str(),
                                 fail->low, fail->high);

        // Columns of C_t: string basis of V_t; columns of D_t: F applied to them.
        std::map<long, std::vector<QVector>> c_cols, d_cols;
        for (const auto& [t, v] : line.eigenvalue) {
            if (v > 0)
                continue;
            const long n = -v;
            // Primitive vectors: kernel of E^{n+1} on V_t.
            QMatrix p = QMatrix::identity(line.dim.at(t));
            for (long s = t; s <= t + n; ++s)
                (p = e_block(e, line, s) * p).make_primitive();
            // x_k = E^k x_0 / s_k with s_k chosen to give x_k a leading 1,
            // so F x_k = k(n-k+1) (s_{k-1}/s_k) x_{k-1}.
            for (auto& prim : nullspace(p)) {
                QVector x = prim;
                QVector prev;
                Rational ratio = 1;  // s_k / s_{k-1}
                for (long k = 0; k <= n; ++k) {
                    c_cols[t + k].push_back(x);
                    if (k == 0)
                        d_cols[t + k].push_back(QVector(dim_at(line, t - 1)));
                    else
                        d_cols[t + k].push_back([&] {
                            QVector y = prev;
                            Rational c = Rational(k * (n - k + 1)) / ratio;
                            for (auto& q : y)
                                q *= c;
                            return y;
                        }());
                    prev = x;
                    if (k < n) {
                        x = e_block(e, line, t + k).apply(x);
                        auto lead = std::find_if(x.begin(), x.end(), [](const Rational& q) { return q != 0; });
                        ratio = lead == x.end() ? Rational(1) : *lead;
                        if (ratio != 1)
                            for (auto& q : x)
                                q /= ratio;
                    }
                }
            }
        }
        for (const auto& [t, mu] : line.weight) {
            const std::size_t d = line.dim.at(t);
            const auto& cc = c_cols[t];
            if (cc.size() != d)
                throw std::logic_error("sl2_completion: string basis incomplete at " + mu.str());
            const std::size_t below = dim_at(line, t - 1);
            if (below == 0)
                continue;
            QMatrix c = QMatrix::from_columns(cc, d);
            QMatrix dm = QMatrix::from_columns(d_cols[t], below);
            QMatrix block = dm * inverse(c);
            if (!block.is_zero())
                f.blocks[mu] = std::move(block);
        }
    }
    return f;
}

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((unsigned __int128)a * b % kPrime); }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1)
            r = mulmod(r, a);
    return r;
}

struct ModField {
    using T = std::uint64_t;
    bool ok = true;
    T from(const Rational& q)
    {
        std::uint64_t num, den;
        if (q.is_small()) {
            auto reduce = [](std::int64_t v) {
                std::int64_t r = v % static_cast<std::int64_t>(kPrime);
                return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
            };
            num = reduce(q.small_num());
            den = reduce(q.small_den());
        } else {
            const mpq_class big = q.to_mpq();
            num = mpz_fdiv_ui(big.get_num_mpz_t(), kPrime);
            den = mpz_fdiv_ui(big.get_den_mpz_t(), kPrime);
        }
        if (den == 0) {
            ok = false;
            return 0;
        }
        return mulmod(num, powmod(den, kPrime - 2));
    }
    static bool zero(T a) { return a == 0; }
    static T inv(T a) { return powmod(a, kPrime - 2); }
    static T mul(T a, T b) { return mulmod(a, b); }
    static T sub(T a, T b) { return (a + kPrime - b) % kPrime; }
};

struct RatField {
    using T = Rational;
    bool ok = true;
    T from(const Rational& q) { return q; }
    static bool zero(const T& a) { return a == 0; }
    static T inv(const T& a) { return 1 / a; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
};

// Rank of a block-banded system: rows of block r touch only column blocks r
// and r+1. Columns are eliminated block by block; rows that survive a block
// carry over to the next one.
template <class Field>
std::optional<std::size_t> banded_rank(Field& field, const std::vector<std::vector<std::vector<Rational>>>& row_blocks,
                                       const std::vector<std::size_t>& col_offsets)
{
    using T = typename Field::T;
    const std::size_t ncols = col_offsets.back();
    std::vector<std::vector<T>> carry;
    std::size_t rank_total = 0;
    for (std::size_t c = 0; c + 1 < col_offsets.size(); ++c) {
        std::vector<std::vector<T>> rows = std::move(carry);
        carry.clear();
        if (c < row_blocks.size())
            for (const auto& r : row_blocks[c]) {
                std::vector<T> v(ncols);
                for (std::size_t k = 0; k < ncols; ++k)
                    if (r[k] != 0)
                        v[k] = field.from(r[k]);
                rows.push_back(std::move(v));
            }
        if (!field.ok)
            return std::nullopt;
        std::size_t next = 0;
        for (std::size_t col = col_offsets[c]; col < col_offsets[c + 1]; ++col) {
            std::size_t piv = next;
            while (piv < rows.size() && Field::zero(rows[piv][col]))
                ++piv;
            if (piv == rows.size())
                continue;
            std::swap(rows[piv], rows[next]);
            T inv = Field::inv(rows[next][col]);
            for (std::size_t r = next + 1; r < rows.size(); ++r) {
                if (Field::zero(rows[r][col]))
                    continue;
                T factor = Field::mul(rows[r][col], inv);
                for (std::size_t k = col; k < ncols; ++k)
                    if (!Field::zero(rows[next][k]))
                        rows[r][k] = Field::sub(rows[r][k], Field::mul(factor, rows[next][k]));
            }
            ++next;
        }
        rank_total += next;
        for (std::size_t r = next; r < rows.size(); ++r)
            carry.push_back(std::move(rows[r]));
    }
    return rank_total;
}

}  // namespace

std::size_t sl2_uniqueness_defect(const WeightedOperator& e, const WeightedOperator& h)
{
    std::size_t defect = 0;
    for (const auto& [base, line] : split_into_lines(e, h)) {
        const long t0 = line.dim.begin()->first, t1 = line.dim.rbegin()->first;
        // Unknown X_t : V_t -> V_{t-1}, column block index t - t0.
        std::vector<std::size_t> col_offsets{0};
        for (long t = t0; t <= t1; ++t)
            col_offsets.push_back(col_offsets.back() + dim_at(line, t) * dim_at(line, t - 1));
        const std::size_t ncols = col_offsets.back();
        if (ncols == 0)
            continue;
        auto col = [&](long t, std::size_t r, std::size_t c) {
            return col_offsets[t - t0] + r * dim_at(line, t) + c;
        };
        // Equation block t: E_{t-1} X_t - X_{t+1} E_t = 0 on V_t. It touches
        // the column blocks of X_t and X_{t+1}.
        std::vector<std::vector<std::vector<Rational>>> row_blocks;
        for (long t = t0; t <= t1; ++t) {
            const std::size_t d = dim_at(line, t), below = dim_at(line, t - 1), above = dim_at(line, t + 1);
            QMatrix em = e_block(e, line, t - 1);  // V_{t-1} -> V_t
            QMatrix ep = e_block(e, line, t);      // V_t -> V_{t+1}
            std::vector<std::vector<Rational>> rows;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    std::vector<Rational> row(ncols);
                    for (std::size_t c = 0; c < below; ++c)
                        if (em(a, c) != 0)
                            row[col(t, c, b)] += em(a, c);
                    for (std::size_t c = 0; c < above; ++c)
                        if (ep(c, b) != 0)
                            row[col(t + 1, a, c)] -= ep(c, b);
                    rows.push_back(std::move(row));
                }
            row_blocks.push_back(std::move(rows));
        }
        ModField mod;
        auto r = banded_rank(mod, row_blocks, col_offsets);
        if (r && *r == ncols)
            continue;
        RatField exact;
        defect += ncols - *banded_rank(exact, row_blocks, col_offsets);
    }
    return defect;
}

}  // namespace satake
