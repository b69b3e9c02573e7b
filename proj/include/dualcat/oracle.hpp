#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dualcat/modring.hpp"

// Brute-force ground truth. Everything here is evaluated over exact
// rationals with big-integer arithmetic and shares no computation path
// with the residue fast path: binomials come from GMP, reduction mod p^e
// uses mpz_invert rather than the modring extended Euclid.
namespace dualcat::oracle {

// C(x, k) as an exact rational, x rational, k >= 0.
Rational exact_binom(const Rational& x, int64_t k);

// C(n, k) for integer n of either sign.
mpz_class exact_binom_int(const mpz_class& n, int64_t k);

// The kth Catalan number.
mpz_class exact_catalan(int64_t k);

Rational exact_d(int64_t n, const Rational& x, const Rational& y);
Rational exact_d_ljunggren(int64_t n, const Rational& x, const Rational& y);
Rational exact_s(int64_t n, const Rational& x, const Rational& y);
Rational exact_j2(int64_t n);
Rational exact_catalan_inner(int64_t n, const Rational& a);

// Values for n = 0..count-1 in one pass (exact Pascal row).
std::vector<Rational> exact_d_values(int64_t count, const Rational& x, const Rational& y);
std::vector<Rational> exact_s_values(int64_t count, const Rational& x, const Rational& y);
std::vector<Rational> exact_j2_values(int64_t count);
std::vector<Rational> exact_catalan_inner_values(int64_t count, const Rational& a);

// Exact value of the full outer sum of the named statement at prime p.
// Statement ids: eq1.3, eq1.4, eq1.6, eq2.3, cor2.4, cor2.5, lemma3.1, kw-p3.
Rational exact_theorem_lhs(const std::string& statement_id, int64_t p,
                           const std::vector<std::pair<std::string, Rational>>& params);

// Reduction mod p^e on an independent code path (GMP modular inverse).
Residue reduce(const Rational& q, const Modulus& mod);

}  // namespace dualcat::oracle
