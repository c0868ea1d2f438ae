#pragma once

#include "satake/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace satake {

struct Witness {
    Coweight weight;
    QMatrix residual;  // offending block, or the difference from the expected block
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    std::optional<Witness> witness;
};

struct VerificationReport {
    std::string module_id;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Appends the checks of `other`, then keeps all checks sorted by name.
    void merge(const VerificationReport& other);
    const CheckResult* find(const std::string& name) const;
};

VerificationReport verify_triples(const GradedModule& m);
VerificationReport verify_cross_commutators(const GradedModule& m);
VerificationReport verify_serre(const GradedModule& m);
VerificationReport verify_weight_shifts(const GradedModule& m);
VerificationReport verify_gradings(const GradedModule& m);
/// Also builds the Shapovalov model; that step honours `cap`.
VerificationReport compare_characters(const GradedModule& m, const Coweight& lambda, std::size_t cap = 400);
/// Lefschetz bijectivity and uniqueness of every sl(2) completion.
VerificationReport verify_lefschetz(const GradedModule& m);

/// Every relation check (no oracle comparison).
VerificationReport verify_relations(const GradedModule& m);
/// Relations plus the character oracles for highest weight lambda.
VerificationReport verify_all(const GradedModule& m, const Coweight& lambda, std::size_t cap = 400);

}  // namespace satake
