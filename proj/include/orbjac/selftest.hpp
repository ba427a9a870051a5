#pragma once

#include <random>

#include "orbjac/verify.hpp"

namespace orbjac::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The built-in catalog: every chain, loop and Thom-Sebastiani sum the
/// acceptance suite runs on.
const std::vector<std::pair<std::string, std::string>>& catalog();

// Acceptance criteria. Each runs standalone and reports one line.
CheckResult main_theorem_catalog();
CheckResult vanishing_within_atoms();
CheckResult closed_form_oracles();
CheckResult difference_derivative_identity(uint64_t seed, int count = 120);
CheckResult milnor_cross_check();
CheckResult algebra_axioms();
CheckResult kuenneth_assembly();
CheckResult invariant_dimensions();
CheckResult clifford_oracle(uint64_t seed, int count = 600);

std::vector<CheckResult> run_all(uint64_t seed);

// ----- independent oracles (never call the code paths they check) -----

/// Brute-force Clifford pairing via a local rewriting system: words are
/// normal ordered with derivations left of thetas, and theta-ending words
/// are killed by the module quotient. Single-word results by construction.
std::pair<int, uint32_t> contract_pair_bruteforce(uint32_t p1, uint32_t p2, uint32_t q1,
                                                  uint32_t q2);

/// Random sparse polynomial with small integer coefficients.
Poly random_poly(const VarSet& vs, const FieldPtr& fld, std::mt19937_64& rng, int maxdeg,
                 int maxterms);

}  // namespace orbjac::selftest
