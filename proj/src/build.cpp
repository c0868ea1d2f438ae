#include "satake/atoms.hpp"
#include "satake/satake.hpp"

#include <limits>
#include <set>

namespace satake {

namespace {

// Highest weights mu_1 = a_1, ..., mu_n = lambda with V(mu_k) inside
// V(mu_{k-1}) (x) V(a_k), minimizing the largest tensor product formed.
std::vector<Coweight> choose_chain(const RootDatum& d, const std::vector<AtomDescriptor>& atoms,
                                   const Coweight& lambda, std::size_t* max_dim)
{
    const std::size_t n = atoms.size();
    std::vector<Coweight> rest(n + 1, d.zero());
    for (std::size_t k = n; k-- > 0;)
        rest[k] = rest[k + 1] + atoms[k].coweight;

    // layers[k]: reachable highest weights after k+1 atoms, with successors.
    std::vector<std::map<Coweight, std::set<Coweight>>> succ(n);
    std::vector<std::set<Coweight>> layer(n);
    layer[0].insert(atoms[0].coweight);
    for (std::size_t k = 1; k < n; ++k)
        for (const auto& mu : layer[k - 1])
            for (const auto& [nu, m] : tensor_decomposition(d, mu, atoms[k].weights))
                if (d.dominates(nu + rest[k + 1], lambda)) {
                    layer[k].insert(nu);
                    succ[k - 1][mu].insert(nu);
                }
    if (!layer[n - 1].count(lambda))
        throw std::logic_error("build_ic_module: " + lambda.str() + " does not occur in the atom product");

    // Backward pruning to weights that still lead to lambda.
    std::vector<std::set<Coweight>> good(n);
    good[n - 1] = {lambda};
    for (std::size_t k = n - 1; k-- > 0;)
        for (const auto& mu : layer[k])
            for (const auto& nu : succ[k][mu])
                if (good[k + 1].count(nu)) {
                    good[k].insert(mu);
                    break;
                }

    // Minimax over the tensor dimensions; ties go to the smallest predecessor.
    std::map<Coweight, long> dims;
    auto wd = [&](const Coweight& mu) {
        auto it = dims.find(mu);
        if (it == dims.end())
            it = dims.emplace(mu, weyl_dimension(d, mu)).first;
        return it->second;
    };
    std::vector<std::map<Coweight, std::pair<long, Coweight>>> best(n);
    for (const auto& mu : good[0])
        best[0][mu] = {0, mu};
    for (std::size_t k = 1; k < n; ++k) {
        const long atom_dim = dimension(atoms[k].weights);
        for (const auto& [mu, entry] : best[k - 1]) {
            const long cost = std::max(entry.first, wd(mu) * atom_dim);
            for (const auto& nu : succ[k - 1][mu]) {
                if (!good[k].count(nu))
                    continue;
                auto it = best[k].find(nu);
                if (it == best[k].end() || cost < it->second.first)
                    best[k][nu] = {cost, mu};
            }
        }
    }
    std::vector<Coweight> chain(n);
    chain[n - 1] = lambda;
    for (std::size_t k = n - 1; k > 0; --k)
        chain[k - 1] = best[k].at(chain[k]).second;
    if (max_dim)
        *max_dim = static_cast<std::size_t>(best[n - 1].at(lambda).first);
    return chain;
}

}  // namespace

GradedModule build_ic_module(DatumPtr dp, const Coweight& lambda, std::size_t cap, IcBuildTrace* trace)
{
    const auto& d = *dp;
    if (lambda.size() != d.rank())
        throw std::invalid_argument("build_ic_module: coweight has " + std::to_string(lambda.size()) +
                                    " coordinates, rank is " + std::to_string(d.rank()));
    if (!d.is_dominant(lambda))
        throw std::invalid_argument("build_ic_module: " + lambda.str() + " is not dominant");
    const long target_dim = weyl_dimension(d, lambda);
    if (static_cast<std::size_t>(target_dim) > cap)
        throw CapExceeded("build_ic_module: dimension " + std::to_string(target_dim) + " exceeds the cap of " +
                          std::to_string(cap));
    if (lambda.is_zero())
        return trivial_module(dp);

    const auto atoms = atom_decomposition(d, lambda);
    std::size_t max_dim = 0;
    const auto chain = choose_chain(d, atoms, lambda, &max_dim);
    if (trace) {
        trace->atoms.clear();
        for (const auto& a : atoms)
            trace->atoms.push_back(a.coweight);
        trace->chain = chain;
        trace->max_tensor_dim = max_dim;
    }

    std::map<Coweight, GradedModule> cache;
    auto atom = [&](const Coweight& a) -> const GradedModule& {
        auto it = cache.find(a);
        if (it == cache.end())
            it = cache.emplace(a, build_atom(dp, a)).first;
        return it->second;
    };

    GradedModule m = atom(atoms[0].coweight);
    for (std::size_t k = 1; k < atoms.size(); ++k) {
        GradedModule t = tensor_module(m, atom(atoms[k].coweight));
        auto hv = highest_vectors(t, chain[k]);
        if (hv.empty())
            throw std::logic_error("build_ic_module: no highest vector of weight " + chain[k].str());
        m = generate_highest_weight_submodule(t, HomogeneousVector{chain[k], hv.front()}).module;
    }
    complete_lowering_operators(m);
    return m;
}

Character highest_weight_multiplicities(const GradedModule& m)
{
    Character out;
    for (const auto& [mu, s] : m.spaces)
        if (auto k = highest_vectors(m, mu).size())
            out[mu] = static_cast<long>(k);
    return out;
}

Character decompose_tensor_product(DatumPtr dp, const Coweight& a, const Coweight& b, std::size_t cap)
{
    const auto& d = *dp;
    for (const auto* c : {&a, &b})
        if (c->size() != d.rank() || !d.is_dominant(*c))
            throw std::invalid_argument("decompose: " + c->str() + " is not a dominant coweight of rank " +
                                        std::to_string(d.rank()));
    const long dim = weyl_dimension(d, a) * weyl_dimension(d, b);
    if (static_cast<std::size_t>(dim) > cap)
        throw CapExceeded("decompose: tensor dimension " + std::to_string(dim) + " exceeds the cap of " +
                          std::to_string(cap));
    return highest_weight_multiplicities(tensor_module(build_ic_module(dp, a, cap), build_ic_module(dp, b, cap)));
}

}  // namespace satake
