#include "satake/atoms.hpp"

#include "satake/satake.hpp"
#include "satake/verify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace satake {

std::string to_string(AtomKind k)
{
    switch (k) {
    case AtomKind::Zero: return "zero";
    case AtomKind::Minuscule: return "minuscule";
    case AtomKind::QuasiMinuscule: return "quasi-minuscule";
    case AtomKind::Neither: return "neither";
    }
    return "?";
}

Character omega_set(const RootDatum& d, const Coweight& lambda) { return freudenthal_character(d, lambda); }

namespace {

void require_dominant(const RootDatum& d, const Coweight& lambda, const char* who)
{
    if (lambda.size() != d.rank())
        throw std::invalid_argument(std::string(who) + ": rank mismatch");
    if (!d.is_dominant(lambda))
        throw std::invalid_argument(std::string(who) + ": " + lambda.str() + " is not dominant");
}

bool is_minuscule_fundamental(const RootDatum& d, std::size_t j)
{
    return std::all_of(d.positive_roots().begin(), d.positive_roots().end(),
                       [&](const PositiveRoot& p) { return p.root_coords[j] <= 1; });
}

}  // namespace

Coweight quasi_minuscule_coweight(const RootDatum& d, std::size_t factor)
{
    for (auto i : d.factors().at(factor).nodes)
        if (d.is_short_coroot(i))
            return d.dominant_representative(d.simple_coroot(i)).first;
    throw std::logic_error("quasi_minuscule_coweight: factor without short coroot");
}

AtomKind classify_coweight(const RootDatum& d, const Coweight& lambda)
{
    require_dominant(d, lambda, "classify_coweight");
    if (lambda.is_zero())
        return AtomKind::Zero;
    bool minuscule = std::all_of(d.positive_roots().begin(), d.positive_roots().end(), [&](const PositiveRoot& p) {
        return d.root_pairing(p.root_coords, lambda) <= 1;
    });
    if (minuscule)
        return AtomKind::Minuscule;
    auto support = d.factor_support(lambda);
    if (support.size() == 1 && lambda == quasi_minuscule_coweight(d, support[0]))
        return AtomKind::QuasiMinuscule;
    return AtomKind::Neither;
}

std::vector<Coweight> minuscule_coweights(const RootDatum& d)
{
    std::vector<Coweight> sums{d.zero()};
    for (const auto& f : d.factors()) {
        std::vector<Coweight> next = sums;
        for (auto j : f.nodes)
            if (is_minuscule_fundamental(d, j))
                for (const auto& s : sums)
                    next.push_back(s + d.fundamental_coweight(j));
        sums = std::move(next);
    }
    std::vector<Coweight> out;
    for (auto& s : sums)
        if (!s.is_zero())
            out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Coroot coordinates scaled by a common denominator, so dominance checks are
// integer arithmetic.
struct ScaledCoords {
    long denom = 1;
    std::vector<long> of(const RootDatum& d, const Coweight& c) const
    {
        auto x = d.coroot_coordinates(c);
        std::vector<long> out(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
            Rational y = x[k] * denom;
            out[k] = y.get_num().get_si();
        }
        return out;
    }
};

ScaledCoords scaling_for(const RootDatum& d)
{
    ScaledCoords s;
    for (std::size_t j = 0; j < d.rank(); ++j)
        for (const auto& q : d.coroot_coordinates(d.fundamental_coweight(j)))
            s.denom = std::lcm(s.denom, q.get_den().get_si());
    return s;
}

// Does V(lambda) occur in the tensor product of the simple modules of `atoms`?
bool occurs(const RootDatum& d, const std::vector<Coweight>& atoms, const std::vector<Character>& chars,
            const Coweight& lambda)
{
    if (atoms.empty())
        return lambda.is_zero();
    std::vector<Coweight> rest(atoms.size() + 1, d.zero());
    for (std::size_t k = atoms.size(); k-- > 0;)
        rest[k] = rest[k + 1] + atoms[k];
    std::set<Coweight> current{atoms[0]};
    for (std::size_t k = 1; k < atoms.size(); ++k) {
        std::set<Coweight> next;
        for (const auto& mu : current)
            for (const auto& [nu, m] : tensor_decomposition(d, mu, chars[k]))
                if (d.dominates(nu + rest[k + 1], lambda))
                    next.insert(nu);
        current = std::move(next);
    }
    return current.count(lambda) > 0;
}

}  // namespace

std::vector<AtomDescriptor> atom_decomposition(const RootDatum& d, const Coweight& lambda)
{
    require_dominant(d, lambda, "atom_decomposition");
    if (lambda.is_zero())
        return {};

    std::vector<Coweight> cand = minuscule_coweights(d);
    for (std::size_t f = 0; f < d.factors().size(); ++f) {
        const auto& nodes = d.factors()[f].nodes;
        if (std::none_of(nodes.begin(), nodes.end(), [&](std::size_t j) { return is_minuscule_fundamental(d, j); }))
            cand.push_back(quasi_minuscule_coweight(d, f));
    }
    std::sort(cand.begin(), cand.end());
    std::vector<Character> cand_chars;
    for (const auto& a : cand)
        cand_chars.push_back(omega_set(d, a));

    const auto scale = scaling_for(d);
    const auto target = scale.of(d, lambda);
    std::vector<std::vector<long>> cx;
    for (const auto& a : cand)
        cx.push_back(scale.of(d, a));

    const std::size_t r = d.rank();
    std::size_t lower = 1;
    for (std::size_t j = 0; j < r; ++j) {
        long best = 0;
        for (const auto& x : cx)
            best = std::max(best, x[j]);
        if (target[j] > 0 && best == 0)
            throw std::logic_error("atom_decomposition: no atom reaches coordinate " + std::to_string(j + 1));
        if (best > 0)
            lower = std::max<std::size_t>(lower, static_cast<std::size_t>((target[j] + best - 1) / best));
    }

    struct Option {
        long excess;
        std::vector<std::size_t> picks;  // candidate indices, nondecreasing
    };
    for (std::size_t n = lower; n <= lower + 4 * r + 8; ++n) {
        std::vector<Option> options;
        std::vector<std::size_t> counts(cand.size(), 0);
        std::vector<long> sum(r, 0);
        // Enumerate count vectors with total n.
        auto rec = [&](auto&& self, std::size_t idx, std::size_t left) -> void {
            if (idx + 1 == cand.size()) {
                counts[idx] = left;
                long excess = 0;
                for (std::size_t j = 0; j < r; ++j) {
                    long diff = sum[j] + static_cast<long>(left) * cx[idx][j] - target[j];
                    if (diff < 0 || diff % scale.denom != 0)
                        return;
                    excess += diff / scale.denom;
                }
                Option o{excess, {}};
                for (std::size_t a = 0; a < cand.size(); ++a)
                    o.picks.insert(o.picks.end(), counts[a], a);
                options.push_back(std::move(o));
                return;
            }
            for (std::size_t c = 0; c <= left; ++c) {
                counts[idx] = c;
                for (std::size_t j = 0; j < r; ++j)
                    sum[j] += static_cast<long>(c) * cx[idx][j];
                self(self, idx + 1, left - c);
                for (std::size_t j = 0; j < r; ++j)
                    sum[j] -= static_cast<long>(c) * cx[idx][j];
            }
        };
        rec(rec, 0, n);
        std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
            return a.excess != b.excess ? a.excess < b.excess : a.picks < b.picks;
        });
        for (const auto& o : options) {
            std::vector<Coweight> atoms;
            std::vector<Character> chars;
            for (auto a : o.picks) {
                atoms.push_back(cand[a]);
                chars.push_back(cand_chars[a]);
            }
            if (!occurs(d, atoms, chars, lambda))
                continue;
            std::vector<AtomDescriptor> out;
            for (auto a : o.picks)
                out.push_back({cand[a], classify_coweight(d, cand[a]), cand_chars[a]});
            return out;
        }
    }
    throw std::logic_error("atom_decomposition: no decomposition found for " + lambda.str());
}

GradedModule build_minuscule_atom(DatumPtr dp, const Coweight& lambda)
{
    const auto& d = *dp;
    if (classify_coweight(d, lambda) != AtomKind::Minuscule)
        throw std::invalid_argument("build_minuscule_atom: " + lambda.str() + " is not minuscule");
    Character ch;
    for (const auto& mu : d.weyl_orbit(lambda))
        ch[mu] = 1;
    GradedModule m = make_module(dp, ch);
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (const auto& [mu, s] : m.spaces)
            if (d.simple_pairing(i, mu) == -1)
                m.e[i].blocks[mu] = QMatrix::identity(1);
    complete_lowering_operators(m);
    return m;
}

namespace {

// Naive normalization: unit raising along every string, zero-weight basis
// indexed by the simple coroots lying in the orbit.
GradedModule naive_quasiminuscule(DatumPtr dp, const Coweight& lambda)
{
    const auto& d = *dp;
    const auto orbit = d.weyl_orbit(lambda);
    std::vector<std::size_t> zero_index;
    for (std::size_t i = 0; i < d.rank(); ++i)
        if (std::binary_search(orbit.begin(), orbit.end(), d.simple_coroot(i)))
            zero_index.push_back(i);

    Character ch;
    for (const auto& mu : orbit)
        ch[mu] = 1;
    ch[d.zero()] = static_cast<long>(zero_index.size());
    GradedModule m = make_module(dp, ch);
    const std::size_t z = zero_index.size();
    for (std::size_t i = 0; i < d.rank(); ++i) {
        for (const auto& mu : orbit)
            if (d.simple_pairing(i, mu) == -1)
                m.e[i].blocks[mu] = QMatrix::identity(1);
        auto pos = std::find(zero_index.begin(), zero_index.end(), i);
        if (pos == zero_index.end())
            continue;
        const std::size_t k = static_cast<std::size_t>(pos - zero_index.begin());
        QMatrix in(z, 1), out(1, z);
        in(k, 0) = 1;
        out(0, k) = 1;
        m.e[i].blocks[-d.simple_coroot(i)] = in;
        m.e[i].blocks[d.zero()] = out;
    }
    complete_lowering_operators(m);
    return m;
}

// Shapovalov model rescaled so that every raising block between two
// one-dimensional orbit weights is 1 (along a spanning tree of those edges).
GradedModule normalized_oracle(DatumPtr dp, const Coweight& lambda)
{
    const auto& d = *dp;
    GradedModule m = shapovalov_construct(dp, lambda);
    std::map<Coweight, Rational> scale;
    std::deque<Coweight> queue{lambda};
    scale[lambda] = 1;
    while (!queue.empty()) {
        auto mu = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < d.rank(); ++i) {
            // Up-edge mu -> mu + a_i (e block x): c(target) = c(mu) * x.
            auto up = mu + d.simple_coroot(i);
            if (m.dim(up) == 1 && !up.is_zero() && !scale.count(up))
                if (const QMatrix* b = m.e[i].block(mu); b && !b->is_zero()) {
                    scale[up] = scale[mu] * (*b)(0, 0);
                    queue.push_back(up);
                }
            // Down-edge: the e block from mu - a_i into mu: c(mu) = c(down) * x.
            auto down = mu - d.simple_coroot(i);
            if (m.dim(down) == 1 && !down.is_zero() && !scale.count(down))
                if (const QMatrix* b = m.e[i].block(down); b && !b->is_zero()) {
                    scale[down] = scale[mu] / (*b)(0, 0);
                    queue.push_back(down);
                }
        }
    }
    auto factor = [&](const Coweight& mu) -> Rational {
        auto it = scale.find(mu);
        return it == scale.end() ? Rational(1) : it->second;
    };
    // New basis v'_mu = c_mu v_mu: a block B from mu to nu becomes B c_mu / c_nu.
    for (auto* family : {&m.e, &m.f})
        for (auto& op : *family)
            for (auto& [mu, b] : op.blocks) {
                Rational s = factor(mu) / factor(mu + op.shift);
                b *= s;
            }
    complete_lowering_operators(m);
    return m;
}

}  // namespace

GradedModule build_quasiminuscule_atom(DatumPtr dp, const Coweight& lambda, bool* used_fallback)
{
    if (classify_coweight(*dp, lambda) != AtomKind::QuasiMinuscule)
        throw std::invalid_argument("build_quasiminuscule_atom: " + lambda.str() + " is not quasi-minuscule");
    if (used_fallback)
        *used_fallback = false;
    try {
        GradedModule m = naive_quasiminuscule(dp, lambda);
        if (verify_relations(m).passed())
            return m;
    } catch (const LefschetzError&) {
        // fall through to the oracle-based normalization
    }
    if (used_fallback)
        *used_fallback = true;
    GradedModule m = normalized_oracle(dp, lambda);
    auto report = verify_relations(m);
    if (!report.passed())
        throw std::logic_error("build_quasiminuscule_atom: relation checks fail after normalization");
    return m;
}

GradedModule build_atom(DatumPtr dp, const Coweight& lambda)
{
    switch (classify_coweight(*dp, lambda)) {
    case AtomKind::Zero: return trivial_module(dp);
    case AtomKind::Minuscule: return build_minuscule_atom(dp, lambda);
    case AtomKind::QuasiMinuscule: return build_quasiminuscule_atom(dp, lambda);
    case AtomKind::Neither: break;
    }
    throw std::invalid_argument("build_atom: " + lambda.str() + " is neither minuscule nor quasi-minuscule");
}

}  // namespace satake
