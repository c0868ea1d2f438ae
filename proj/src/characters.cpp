#include "satake/satake.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace satake {

long invariant_form(const RootDatum& d, const Coweight& x, const Coweight& y)
{
    long s = 0;
    for (const auto& p : d.positive_roots())
        s += static_cast<long>(d.root_pairing(p.root_coords, x)) * d.root_pairing(p.root_coords, y);
    return 2 * s;
}

long weyl_dimension(const RootDatum& d, const Coweight& lambda)
{
    if (!d.is_dominant(lambda))
        throw std::invalid_argument("weyl_dimension: " + lambda.str() + " is not dominant");
    // rho^v has all fundamental coordinates 1 for the dual group, and the
    // positive roots of G are the positive coroots of G^v.
    Coweight rho(std::vector<int>(d.rank(), 1));
    mpq_class prod = 1;
    for (const auto& p : d.positive_roots())
        prod *= mpq_class(d.root_pairing(p.root_coords, lambda + rho), d.root_pairing(p.root_coords, rho));
    prod.canonicalize();
    if (prod.get_den() != 1 || !prod.get_num().fits_slong_p())
        throw std::logic_error("weyl_dimension: non-integral result");
    return prod.get_num().get_si();
}

namespace {

// All mu with mu + k beta^v in the set for 0 <= k <= (beta, mu) and every
// root beta, generated from lambda.
std::set<Coweight> saturated_closure(const RootDatum& d, const Coweight& lambda)
{
    std::set<Coweight> seen{lambda};
    std::deque<Coweight> q{lambda};
    while (!q.empty()) {
        auto mu = q.front();
        q.pop_front();
        for (const auto& p : d.positive_roots()) {
            int k = d.root_pairing(p.root_coords, mu);
            int step = k > 0 ? -1 : 1;
            auto nu = mu;
            for (int t = 0; t < std::abs(k); ++t) {
                nu += step * p.coroot;
                if (seen.insert(nu).second)
                    q.push_back(nu);
            }
        }
    }
    return seen;
}

}  // namespace

Character freudenthal_character(const RootDatum& d, const Coweight& lambda)
{
    if (lambda.size() != d.rank())
        throw std::invalid_argument("freudenthal_character: rank mismatch");
    if (!d.is_dominant(lambda))
        throw std::invalid_argument("freudenthal_character: " + lambda.str() + " is not dominant");

    auto support = saturated_closure(d, lambda);
    std::vector<Coweight> dominant;
    for (const auto& mu : support)
        if (d.is_dominant(mu))
            dominant.push_back(mu);
    // Higher weights first: two_rho strictly decreases down the dominance order.
    std::stable_sort(dominant.begin(), dominant.end(), [&](const Coweight& a, const Coweight& b) {
        return d.two_rho_pairing(a) > d.two_rho_pairing(b);
    });

    const auto& two_rho = d.two_rho_dual();
    const long norm_lambda = invariant_form(d, lambda, lambda);
    std::map<Coweight, long> dom_mult;
    auto mult = [&](const Coweight& mu) -> long {
        if (!support.count(mu))
            return 0;
        return dom_mult.at(d.dominant_representative(mu).first);
    };

    for (const auto& mu : dominant) {
        if (mu == lambda) {
            dom_mult[mu] = 1;
            continue;
        }
        long num = 0;
        for (const auto& p : d.positive_roots()) {
            auto nu = mu + p.coroot;
            while (support.count(nu)) {
                num += mult(nu) * invariant_form(d, nu, p.coroot);
                nu += p.coroot;
            }
        }
        num *= 2;
        long den = norm_lambda - invariant_form(d, mu, mu) + invariant_form(d, lambda - mu, two_rho);
        if (den <= 0 || num % den != 0)
            throw std::logic_error("freudenthal_character: non-integral multiplicity at " + mu.str());
        dom_mult[mu] = num / den;
    }

    Character ch;
    for (const auto& mu : support)
        if (long m = mult(mu); m > 0)
            ch[mu] = m;
    if (dimension(ch) != weyl_dimension(d, lambda))
        throw std::logic_error("freudenthal_character: total disagrees with the Weyl dimension formula");
    return ch;
}

std::map<Coweight, long> tensor_decomposition(const RootDatum& d, const Coweight& mu, const Character& ch)
{
    Coweight rho(std::vector<int>(d.rank(), 1));
    std::map<Coweight, long> out;
    for (const auto& [w, m] : ch) {
        auto [x, sign] = d.dominant_with_sign(mu + w + rho);
        if (std::any_of(x.coords.begin(), x.coords.end(), [](int c) { return c == 0; }))
            continue;
        out[x - rho] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0)
            throw std::logic_error("tensor_decomposition: negative multiplicity at " + it->first.str());
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

Character multiply(const Character& a, const Character& b)
{
    Character out;
    for (const auto& [mu, m] : a)
        for (const auto& [nu, n] : b)
            out[mu + nu] += m * n;
    return out;
}

}  // namespace satake
