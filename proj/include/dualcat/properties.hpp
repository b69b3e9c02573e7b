#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Module-invariant suites. Each suite runs a deterministic exhaustive or
// seeded-random grid and reports how many instances it checked; the unit
// tests and the acceptance suite both drive these.
namespace dualcat::properties {

struct Outcome {
    std::string name;
    uint64_t checked = 0;
    uint64_t failed = 0;
    std::string first_failure;

    bool pass() const { return checked > 0 && failed == 0; }
};

Outcome embed_homomorphism();            // embed(q+r), embed(q*r); canonical values
Outcome inverse_exhaustive();            // a * inv(a) = 1 for every unit, all p^e <= 343
Outcome legendre_multiplicative();       // (ab/p) = (a/p)(b/p), p <= 97
Outcome legendre_euler_vs_enumeration(); // Euler criterion vs square enumeration, p <= 97
Outcome central_binomial_half();         // C(-1/2,k) = C(2k,k)/(-4)^k mod p^e, p <= 97
Outcome binom_product_identities();      // thirds/quarters products vs exact right sides
Outcome catalan_table_matches_exact();   // table C_k / C(2k,k) vs reduced exact values
Outcome ljunggren_equality();            // both D forms agree on the standard grid
Outcome dual_involution();               // dual of dual is the identity
Outcome d_truncation();                  // natural x truncates the D sum at k = x
Outcome sequences_match_oracle();        // fast path vs exact oracle, p <= 47, e <= 3
Outcome thm_d_rhs_specialization();      // x1+x2 = -1, y1 = y2 collapses to (-1)^{<x1>_p}
Outcome thm_s_rhs_specialization();      // x1 = x2, y1 = y2 dichotomy
Outcome catalan_rhs_specializations();   // a = 2 and a = -6 closed forms, p <= 199
Outcome cor_rhs_zero_cases();            // cor2.4 / cor2.5 right sides really fall in the 0 branch
Outcome telescope_consistency();         // certificate endpoints reproduce the closed form

std::vector<Outcome> run_all();

}  // namespace dualcat::properties
