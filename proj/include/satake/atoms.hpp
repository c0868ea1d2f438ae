#pragma once

#include "satake/module.hpp"

#include <string>
#include <vector>

namespace satake {

enum class AtomKind { Zero, Minuscule, QuasiMinuscule, Neither };

std::string to_string(AtomKind k);

struct AtomDescriptor {
    Coweight coweight;
    AtomKind kind;
    Character weights;
};

/// Weight multiset of the simple module with highest weight lambda.
Character omega_set(const RootDatum& d, const Coweight& lambda);

/// Throws std::invalid_argument for non-dominant input.
AtomKind classify_coweight(const RootDatum& d, const Coweight& lambda);

/// The maximal short coroot of one irreducible factor: the dominant element
/// of the orbit of a simple coroot of minimal length.
Coweight quasi_minuscule_coweight(const RootDatum& d, std::size_t factor);

/// Minuscule dominant coweights, including sums across factors.
std::vector<Coweight> minuscule_coweights(const RootDatum& d);

/// Minimal list of atoms whose tensor product contains V(lambda); ties broken
/// by the smallest excess sum(atoms) - lambda, then lexicographically.
std::vector<AtomDescriptor> atom_decomposition(const RootDatum& d, const Coweight& lambda);

GradedModule build_minuscule_atom(DatumPtr d, const Coweight& lambda);

/// `used_fallback` reports whether the naive string normalization failed the
/// relation checks and the module was recovered from the Shapovalov model.
GradedModule build_quasiminuscule_atom(DatumPtr d, const Coweight& lambda, bool* used_fallback = nullptr);

/// Dispatches on the kind; the zero coweight gives the trivial module.
GradedModule build_atom(DatumPtr d, const Coweight& lambda);

}  // namespace satake
