#pragma once

#include "satake/linalg.hpp"
#include "satake/rootdata.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace satake {

/// Weight multiplicities, keyed by coweight (weights of the dual group).
using Character = std::map<Coweight, long>;

long dimension(const Character& ch);

// A weight-homogeneous linear operator: one block per source weight mapping
// into the source + shift weight space. Missing blocks are zero.
struct WeightedOperator {
    Coweight shift;
    std::map<Coweight, QMatrix> blocks;

    WeightedOperator() = default;
    explicit WeightedOperator(Coweight s) : shift(std::move(s)) {}

    const QMatrix* block(const Coweight& source) const;
    bool is_zero() const;
    /// Drops blocks that are entirely zero.
    void prune();

    friend bool operator==(const WeightedOperator& a, const WeightedOperator& b)
    {
        return a.shift == b.shift && a.blocks == b.blocks;
    }
};

struct WeightSpace {
    std::size_t dim = 0;
    int degree = 0;

    friend bool operator==(const WeightSpace&, const WeightSpace&) = default;
};

// Weight-graded module for the dual group: one weight space per coweight, each
// carrying its cohomological degree, plus the Chevalley operators e_i, f_i, h_i.
struct GradedModule {
    DatumPtr datum;
    std::map<Coweight, WeightSpace> spaces;
    std::vector<WeightedOperator> e, f, h;

    std::size_t dim() const;
    std::size_t dim(const Coweight& mu) const;
    bool has_weight(const Coweight& mu) const { return spaces.count(mu) > 0; }

    /// Operators with the right shifts and no blocks; h filled with (alpha_i, mu) Id.
    void reset_operators();
    void set_scalar_h();

    /// Same root datum, weight spaces and stored blocks.
    friend bool operator==(const GradedModule& a, const GradedModule& b)
    {
        const bool data = a.datum && b.datum ? *a.datum == *b.datum : a.datum == b.datum;
        return data && a.spaces == b.spaces && a.e == b.e && a.f == b.f && a.h == b.h;
    }
};

/// Module with the given weight spaces, degrees set to 2(rho, mu), empty e/f
/// and scalar h.
GradedModule make_module(DatumPtr datum, const Character& dims);

GradedModule trivial_module(DatumPtr datum);

Character character_of(const GradedModule& m);

// Algebra of weighted operators on a fixed module. All products respect the
// weight spaces of `m`; a block whose target weight is absent is zero.
WeightedOperator compose(const GradedModule& m, const WeightedOperator& a, const WeightedOperator& b);
WeightedOperator add(const GradedModule& m, const WeightedOperator& a, const WeightedOperator& b,
                     const Rational& scale_b = 1);
WeightedOperator commutator(const GradedModule& m, const WeightedOperator& a, const WeightedOperator& b);
WeightedOperator scaled(const WeightedOperator& a, const Rational& s);
WeightedOperator power(const GradedModule& m, const WeightedOperator& a, std::size_t k);

/// Block of `op` at source `mu`, or the zero block with the module's shapes.
QMatrix block_or_zero(const GradedModule& m, const WeightedOperator& op, const Coweight& mu);

/// First source weight at which the two operators differ, if any.
std::optional<Coweight> first_difference(const GradedModule& m, const WeightedOperator& a,
                                         const WeightedOperator& b);

/// Full matrix of `op` with the basis ordered by weight (lexicographic) and
/// then by position inside each weight space.
QMatrix assemble(const GradedModule& m, const WeightedOperator& op);

}  // namespace satake
