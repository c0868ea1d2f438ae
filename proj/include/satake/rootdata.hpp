#pragma once

#include "satake/lattice.hpp"
#include "satake/linalg.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace satake {

using IntMatrix = std::vector<std::vector<int>>;

/// Thrown for descriptors or matrices that are not of finite type.
class RootDatumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A positive root together with its coroot. Root-basis coordinates are the
// coefficients on the simple roots; coroot-basis coordinates likewise on the
// simple coroots.
struct PositiveRoot {
    std::vector<int> root_coords;
    std::vector<int> coroot_coords;
    Weight weight;      // fundamental-weight coordinates
    Coweight coroot;    // fundamental-coweight coordinates
    std::size_t factor;
    int height() const;
};

struct Factor {
    std::string label;  // e.g. "G2"
    std::vector<std::size_t> nodes;
};

class RootDatum;

struct LeviFactor;

// Semisimple root datum with X^v the full coweight lattice (adjoint type), so
// every fundamental coweight is an element of X^v.
//
// Convention: cartan[i][j] = (alpha_i, alpha_j^v). Simple coroot alpha_j^v is
// column j of the Cartan matrix in fundamental-coweight coordinates; simple
// root alpha_i is row i in fundamental-weight coordinates.
class RootDatum {
public:
    /// "A2", "G2", "A1xA1", ... or a row-major integer list "2,-1,-1,2".
    static RootDatum from_descriptor(const std::string& descriptor);
    static RootDatum from_cartan(const IntMatrix& cartan);

    std::size_t rank() const { return rank_; }
    const IntMatrix& cartan() const { return cartan_; }
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const std::string& type_label() const { return label_; }
    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t factor_of(std::size_t i) const { return factor_of_[i]; }

    const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
    std::vector<Weight> positive_root_weights() const;
    std::vector<Coweight> positive_coroots() const;

    Weight simple_root(std::size_t i) const;
    Coweight simple_coroot(std::size_t i) const;
    Weight fundamental_weight(std::size_t i) const;
    Coweight fundamental_coweight(std::size_t i) const;
    Coweight zero() const { return Coweight(rank_); }
    /// Sum of positive coroots; twice the Weyl vector of the dual group.
    const Coweight& two_rho_dual() const { return two_rho_dual_; }

    /// Natural pairing X x X^v -> Z. Throws on rank mismatch, or when the
    /// weight is outside the lattice dual to X^v (non-integral value).
    int pairing(const Weight& w, const Coweight& c) const;
    /// (alpha, c) for a root given in root-basis coordinates.
    int root_pairing(const std::vector<int>& root_coords, const Coweight& c) const;
    int simple_pairing(std::size_t i, const Coweight& c) const { return c[i]; }

    Coweight reflect(const Coweight& c, std::size_t i) const;
    Weight reflect(const Weight& w, std::size_t i) const;

    /// Closure of {c} under the simple reflections, sorted lexicographically.
    std::vector<Coweight> weyl_orbit(const Coweight& c) const;
    bool is_dominant(const Coweight& c) const;
    /// Dominant element of the orbit and whether c already was dominant.
    std::pair<Coweight, bool> dominant_representative(const Coweight& c) const;
    /// Sign of the reflection word used to reach the dominant chamber.
    std::pair<Coweight, int> dominant_with_sign(const Coweight& c) const;

    /// Sum over positive roots of (alpha, c) = 2(rho, c).
    int two_rho_pairing(const Coweight& c) const;

    /// Coefficients of c on the simple coroots (rational in general).
    std::vector<Rational> coroot_coordinates(const Coweight& c) const;
    bool in_coroot_lattice(const Coweight& c) const;
    /// lambda - mu is a nonnegative integer combination of simple coroots.
    bool dominates(const Coweight& lambda, const Coweight& mu) const;

    /// Support of c in terms of factors.
    std::vector<std::size_t> factor_support(const Coweight& c) const;

    /// Squared length of alpha_i, normalized so the shortest root of each
    /// factor has length 1.
    int root_length2(std::size_t i) const { return root_length2_[i]; }
    /// alpha_i^v has the maximal coroot length within its factor.
    bool is_long_coroot(std::size_t i) const;
    /// alpha_i^v has the minimal coroot length within its factor.
    bool is_short_coroot(std::size_t i) const;

    LeviFactor levi_subdatum(std::size_t i) const;

    friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.cartan_ == b.cartan_; }

private:
    RootDatum() = default;
    void build(const IntMatrix& cartan, std::vector<std::string> labels);

    std::size_t rank_ = 0;
    IntMatrix cartan_;
    std::string label_;
    std::vector<Factor> factors_;
    std::vector<std::size_t> factor_of_;
    std::vector<int> root_length2_;
    std::vector<PositiveRoot> positive_;
    Coweight two_rho_dual_;
    QMatrix cartan_inverse_;
};

/// Rank-one Levi subsystem on a single simple root.
struct LeviFactor {
    RootDatum datum;           // type A1
    std::size_t index;         // simple index in the ambient datum
    Weight root;               // alpha_i in the ambient weight lattice
    Coweight coroot;           // alpha_i^v in the ambient coweight lattice
    bool long_coroot;
    bool short_coroot;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

inline DatumPtr make_datum(const std::string& descriptor)
{
    return std::make_shared<const RootDatum>(RootDatum::from_descriptor(descriptor));
}

/// Cartan matrix of one irreducible finite type, e.g. ('B', 3).
IntMatrix cartan_of_type(char letter, std::size_t n);

}  // namespace satake
