#pragma once

#include "satake/atoms.hpp"
#include "satake/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace satake {

/// Cohomological degree 2(rho, mu) of the semi-infinite piece at mu.
int mv_degree(const RootDatum& d, const Coweight& mu);

/// Roots alpha with (alpha, lambda) <= 0, i.e. the root subgroups in the
/// stabilizer of e_lambda; sorted.
std::vector<Weight> isotropy_root_set(const RootDatum& d, const Coweight& lambda);

/// n = 2(rho - rho_{M_i}, mu) = 2(rho, mu) - (alpha_i, mu).
int levi_component_degree(const RootDatum& d, const Coweight& mu, std::size_t i);

enum class CellSection { Minuscule, QuasiMinuscule };
enum class CellTag { A, B, C };

std::string to_string(CellSection s);
std::string to_string(CellTag t);

// One row of the intersection case tables. Negative pairings are classified
// through s_i(mu): `reflected` is set and `reference` is the weight the
// tabulated case is stated for.
struct CellCase {
    CellSection section;
    CellTag tag;
    int pairing;          // (alpha_i, mu) of the queried weight
    bool reflected;
    Coweight reference;   // mu, or s_i(mu) when reflected
    std::vector<std::string> strata;  // intersections S^{M_i}_nu with the orbit closure
    std::string component;            // the M_i-component through the reference weight
};

struct CellReport {
    Coweight lambda, mu;
    std::size_t i;
    CellCase cell;
    std::vector<std::string> nonempty_strata;  // empty unless mu lies in Omega(lambda)
};

/// Throws std::invalid_argument unless lambda is minuscule dominant and mu
/// lies in its Weyl orbit.
CellCase minuscule_cell_case(const RootDatum& d, const Coweight& lambda, const Coweight& mu, std::size_t i);
/// Same for quasi-minuscule lambda. Pairing 2 forces mu = alpha_i^v with
/// alpha_i^v a short coroot; a violation throws std::logic_error.
CellCase quasiminuscule_cell_case(const RootDatum& d, const Coweight& lambda, const Coweight& mu, std::size_t i);

/// Dispatches on the kind of lambda and attaches strata when mu is a weight.
CellReport cell_report(const RootDatum& d, const Coweight& lambda, const Coweight& mu, std::size_t i);

struct BruhatOrbit {
    Coweight base;     // the point with (alpha_i, .) >= 0
    bool point;        // (alpha_i, base) = 0
    std::vector<std::string> cells;
};

/// M_i e_lambda: U_i e_lambda with the point e_{s_i lambda} when the pairing is
/// positive, a single point when it vanishes. Negative pairings are reported
/// through s_i(lambda).
BruhatOrbit bruhat_orbit(const RootDatum& d, std::size_t i, const Coweight& lambda);

struct Letter {
    bool raise;     // e_i when true, f_i otherwise
    std::size_t i;  // 0-based simple index
    std::string str() const;
};

/// Parses "e1", "f2", ... (1-based).
Letter parse_letter(const std::string& s);

struct FeasibilityVerdict {
    bool feasible = false;
    std::vector<Coweight> chain;           // weights visited, starting at mu
    std::vector<std::string> constraints;  // pairing conditions along the generic route
    std::string violated;                  // first violated constraint when infeasible
};

/// Whether the letters, applied left to right starting on the weight-mu
/// piece, can act nonzero on the cohomology of IC_lambda as far as supports
/// are concerned. lambda must be minuscule or quasi-minuscule.
FeasibilityVerdict support_feasible(const RootDatum& d, const Coweight& lambda, const Coweight& mu,
                                    const std::vector<Letter>& word);

struct CellsTable {
    Coweight lambda;
    AtomKind kind;
    std::vector<CellReport> rows;  // orbit weights (lexicographic) x simple indices
    struct WordEntry {
        std::vector<Letter> word;
        Coweight start;
        FeasibilityVerdict verdict;
    };
    std::vector<WordEntry> words;  // [e_i, f_j] and [f_j, e_i], i != j, from every weight
};

/// Throws std::invalid_argument when lambda is neither minuscule nor
/// quasi-minuscule.
CellsTable cells_table(const RootDatum& d, const Coweight& lambda);

}  // namespace satake
