#include "satake/satake.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace satake {

// Realizes L(lambda) weight by weight from the top. A weight space V(mu) is
// spanned by the vectors f_i b with b running over the basis of V(mu + a_i);
// their contravariant inner products reduce, through
//   <f_i b, f_j b'> = <b, e_i f_j b'>,   e_i f_j = f_j e_i + delta_ij h_i,
// to data on higher weights. The radical of that Gram matrix is exactly the
// kernel of V(mu) in the Verma module, so a maximal independent set of
// candidates is a basis of the simple quotient.
GradedModule shapovalov_construct(DatumPtr dp, const Coweight& lambda, std::size_t cap)
{
    const auto& d = *dp;
    const std::size_t n = d.rank();
    if (lambda.size() != n)
        throw std::invalid_argument("shapovalov_construct: rank mismatch");
    if (!d.is_dominant(lambda))
        throw std::invalid_argument("shapovalov_construct: " + lambda.str() + " is not dominant");

    struct Space {
        std::size_t dim = 0;
        QMatrix gram;
    };
    std::map<Coweight, Space> built;
    // e[i][mu]: V(mu) -> V(mu + a_i);  f[i][mu]: V(mu) -> V(mu - a_i).
    std::vector<std::map<Coweight, QMatrix>> e(n), f(n);

    built[lambda] = Space{1, QMatrix::identity(1)};
    std::size_t total = 1;

    // Frontier ordered by decreasing 2(rho, mu); every mu + a_i is handled
    // before mu.
    auto later = [&](const Coweight& a, const Coweight& b) {
        int ha = d.two_rho_pairing(a), hb = d.two_rho_pairing(b);
        return ha != hb ? ha > hb : a < b;
    };
    std::set<Coweight, decltype(later)> frontier(later);
    for (std::size_t i = 0; i < n; ++i)
        frontier.insert(lambda - d.simple_coroot(i));

    while (!frontier.empty()) {
        const Coweight mu = *frontier.begin();
        frontier.erase(frontier.begin());

        struct Candidate {
            std::size_t i, k;
        };
        std::vector<Candidate> cand;
        for (std::size_t i = 0; i < n; ++i)
            if (auto it = built.find(mu + d.simple_coroot(i)); it != built.end())
                for (std::size_t k = 0; k < it->second.dim; ++k)
                    cand.push_back({i, k});
        if (cand.empty())
            continue;

        // For candidate (j, l), the vector e_i f_j b_l in V(mu + a_i).
        auto raise_of = [&](std::size_t i, const Candidate& c) {
            const auto up = mu + d.simple_coroot(i);
            const std::size_t dim_up = built.at(up).dim;
            QVector out(dim_up);
            const auto src = mu + d.simple_coroot(c.i);  // b_l lives here
            const auto via = src + d.simple_coroot(i);   // e_i b_l lives here
            if (auto eb = e[i].find(src); eb != e[i].end() && built.count(via)) {
                QVector unit(built.at(src).dim);
                unit[c.k] = 1;
                auto x = eb->second.apply(unit);
                if (auto fb = f[c.i].find(via); fb != f[c.i].end())
                    out = fb->second.apply(x);
            }
            if (i == c.i)
                out[c.k] += d.simple_pairing(i, src);
            return out;
        };

        const std::size_t m = cand.size();
        QMatrix gram(m, m);
        std::vector<std::vector<QVector>> raised(n);  // raised[i][col]
        for (std::size_t i = 0; i < n; ++i) {
            if (!built.count(mu + d.simple_coroot(i)))
                continue;
            raised[i].resize(m);
            for (std::size_t c = 0; c < m; ++c)
                raised[i][c] = raise_of(i, cand[c]);
        }
        for (std::size_t r = 0; r < m; ++r) {
            const auto& g = built.at(mu + d.simple_coroot(cand[r].i)).gram;
            const auto& col_vecs = raised[cand[r].i];
            for (std::size_t c = 0; c < m; ++c) {
                Rational s = 0;
                const auto& y = col_vecs[c];
                for (std::size_t t = 0; t < y.size(); ++t)
                    if (y[t] != 0)
                        s += g(cand[r].k, t) * y[t];
                gram(r, c) = s;
            }
        }

        auto ech = rref(gram);
        const auto& basis = ech.pivots;
        const std::size_t dim = basis.size();
        if (dim == 0)
            continue;
        total += dim;
        if (total > cap)
            throw CapExceeded("shapovalov_construct: dimension exceeds the cap of " + std::to_string(cap));

        QMatrix gb(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                gb(r, c) = gram(basis[r], basis[c]);
        const QMatrix gb_inv = inverse(gb);

        // Coordinates of every candidate: x = G_B^{-1} <basis, cand>.
        QMatrix coords(dim, m);
        {
            QMatrix rhs(dim, m);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    rhs(r, c) = gram(basis[r], c);
            coords = gb_inv * rhs;
        }

        for (std::size_t i = 0; i < n; ++i) {
            const auto up = mu + d.simple_coroot(i);
            auto it = built.find(up);
            if (it == built.end())
                continue;
            QMatrix fi(dim, it->second.dim);
            for (std::size_t c = 0; c < m; ++c)
                if (cand[c].i == i)
                    for (std::size_t r = 0; r < dim; ++r)
                        fi(r, cand[c].k) = coords(r, c);
            f[i][up] = std::move(fi);

            QMatrix ei(it->second.dim, dim);
            for (std::size_t c = 0; c < dim; ++c) {
                const auto& y = raised[i][basis[c]];
                for (std::size_t r = 0; r < y.size(); ++r)
                    ei(r, c) = y[r];
            }
            e[i][mu] = std::move(ei);
        }
        built[mu] = Space{dim, std::move(gb)};
        for (std::size_t i = 0; i < n; ++i)
            frontier.insert(mu - d.simple_coroot(i));
    }

    Character dims;
    for (const auto& [mu, s] : built)
        dims[mu] = static_cast<long>(s.dim);
    GradedModule out = make_module(dp, dims);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& [mu, b] : e[i])
            if (!b.is_zero())
                out.e[i].blocks[mu] = std::move(b);
        for (auto& [mu, b] : f[i])
            if (!b.is_zero())
                out.f[i].blocks[mu] = std::move(b);
    }
    return out;
}

}  // namespace satake
