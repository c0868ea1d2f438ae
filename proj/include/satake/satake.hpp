#pragma once

#include "satake/module.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

inline constexpr std::size_t kDefaultDimensionCap = 400;

/// A construction would exceed the configured dimension cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Lefschetz hypothesis behind the sl(2) completion fails.
class LefschetzError : public std::runtime_error {
public:
    LefschetzError(const std::string& what, int low, int high)
        : std::runtime_error(what), low_eigenvalue(low), high_eigenvalue(high)
    {
    }
    int low_eigenvalue;
    int high_eigenvalue;
};

// ---- characters -----------------------------------------------------------

/// Invariant form (x, y) = sum over all roots of (alpha, x)(alpha, y).
long invariant_form(const RootDatum& d, const Coweight& x, const Coweight& y);

/// Weight multiplicities of the simple dual-group module with highest weight
/// lambda, by Freudenthal's recursion; the total is checked against the Weyl
/// dimension formula.
Character freudenthal_character(const RootDatum& d, const Coweight& lambda);
long weyl_dimension(const RootDatum& d, const Coweight& lambda);

/// Multiplicities of the simple constituents of V(mu) (x) M for a module M
/// with character `ch` (Brauer-Klimyk / Racah-Speiser).
std::map<Coweight, long> tensor_decomposition(const RootDatum& d, const Coweight& mu, const Character& ch);

/// Character product over the index set mu + nu = lambda.
Character multiply(const Character& a, const Character& b);

// ---- module constructions -------------------------------------------------

/// Coproduct x (x) 1 + 1 (x) x on every Chevalley operator. Basis of the
/// lambda space: pairs (mu, nu) with mu + nu = lambda in lexicographic order of
/// mu, each pair block in Kronecker order.
GradedModule tensor_module(const GradedModule& a, const GradedModule& b);

/// The unique F with [E, F] = H and [H, F] = -2F. `h` must carry a scalar
/// block for every weight of the module (that is how the space is known).
WeightedOperator sl2_completion(const WeightedOperator& e, const WeightedOperator& h);

/// Dimension of the space of X (shift -alpha_i) with [E, X] = 0; zero means
/// the completion is unique. Uses a mod-p rank certificate with an exact
/// rational fallback.
std::size_t sl2_uniqueness_defect(const WeightedOperator& e, const WeightedOperator& h);

/// Lefschetz test: for every k >= 1, E^k is a bijection from the H = -k part
/// to the H = +k part along each string of weights. Returns a description of
/// the first failure, or an empty string.
std::string lefschetz_failure(const WeightedOperator& e, const WeightedOperator& h);

/// Basis of the vectors of weight lambda killed by every e_i.
std::vector<QVector> highest_vectors(const GradedModule& m, const Coweight& lambda);

struct HomogeneousVector {
    Coweight weight;
    QVector coords;
};

struct Submodule {
    GradedModule module;
    /// Basis of each weight space as vectors of the ambient weight space.
    std::map<Coweight, std::vector<QVector>> embedding;
};

/// Smallest subspace containing v and closed under all e_i, f_i, with the
/// induced operators.
Submodule generate_submodule_with_embedding(const GradedModule& m, const HomogeneousVector& v);
GradedModule generate_submodule(const GradedModule& m, const HomogeneousVector& v);
/// Same span for a highest weight vector v (killed by every e_i), reached
/// with the f_i alone; h_i is set to (alpha_i, mu) on each weight space.
Submodule generate_highest_weight_submodule(const GradedModule& m, const HomogeneousVector& v);

/// Isotypic multiplicities of a module read off from its highest vectors:
/// the multiplicity of V(nu) is the dimension of the joint kernel of the
/// e_i on the weight-nu space.
Character highest_weight_multiplicities(const GradedModule& m);

/// Builds V(a) and V(b), tensors them and extracts highest vectors. Throws
/// CapExceeded when the product dimension exceeds `cap`.
Character decompose_tensor_product(DatumPtr d, const Coweight& a, const Coweight& b,
                                   std::size_t cap = kDefaultDimensionCap);

/// Replaces every f_i by the sl(2) completion of (e_i, h_i).
void complete_lowering_operators(GradedModule& m);

struct IcBuildTrace {
    std::vector<Coweight> atoms;
    std::vector<Coweight> chain;  // dominant highest weights after each step
    std::size_t max_tensor_dim = 0;
};

/// Cohomology of IC_lambda as a module: atoms are tensored one at a time and
/// the component of the next highest weight of the chain is cut out by a
/// highest vector; f_i are then recomputed by sl(2) completion.
GradedModule build_ic_module(DatumPtr d, const Coweight& lambda, std::size_t cap = kDefaultDimensionCap,
                             IcBuildTrace* trace = nullptr);

/// Independent realization of the simple module: lowering monomials modulo
/// the radical of the contravariant form.
GradedModule shapovalov_construct(DatumPtr d, const Coweight& lambda, std::size_t cap = kDefaultDimensionCap);

// ---- Levi restriction -----------------------------------------------------

struct StringSummand {
    Coweight top;                 // highest weight of the string
    std::vector<Coweight> weights;  // top, top - alpha_i^v, ...
    std::size_t length() const { return weights.size(); }
    Coweight component;           // representative of the restriction class
    int component_degree;         // 2(theta, rho - rho_M)
};

/// Decomposition under (e_i, h_i, f_i) into strings, one entry per string.
std::vector<StringSummand> levi_restrict(const GradedModule& m, std::size_t i);

/// Representative of mu modulo Z alpha_i^v with (alpha_i, rep) in {0, 1}.
Coweight levi_class_representative(const RootDatum& d, const Coweight& mu, std::size_t i);

}  // namespace satake
