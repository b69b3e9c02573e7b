#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualcat/modring.hpp"

namespace dualcat {

// D_n(x,y) = sum_{k=0}^{n} C(n,k) C(x,k) y^k
Residue d_eval(int64_t n, const Rational& x, const Rational& y, const BinomialTables& tables);

// Same polynomial through the Ljunggren rewrite
// sum_{k=0}^{n} C(n,k) C(x+k,k) y^k (1-y)^{n-k}.
Residue d_eval_ljunggren(int64_t n, const Rational& x, const Rational& y,
                         const BinomialTables& tables);

// S_n(x,y) = sum_{k=0}^{n} C(n,k) C(x,k) C(-1-x,k) y^k
Residue s_eval(int64_t n, const Rational& x, const Rational& y, const BinomialTables& tables);

// J2~(n) = S_n(-1/2, -1)
Residue j2_eval(int64_t n, const BinomialTables& tables);

// sum_{k=0}^{n} C(n,k) C_k / a^k
Residue catalan_inner(int64_t n, const Rational& a, const BinomialTables& tables);

// Dual transform a_n* = sum_{k=0}^{n} C(n,k) (-1)^k a_k, exact.
Rational dual_transform(const std::vector<Rational>& a, int64_t n);

// Given coefficients t_j, returns g_n = sum_{j<=n} C(n,j) t_j for
// n = 0..t.size()-1, maintaining one Pascal row incrementally.
std::vector<int64_t> binomial_transform_values(std::span<const int64_t> coeffs,
                                               const Modulus& mod);

// Whole-sweep variants: value at every n in 0..p-1.
std::vector<int64_t> d_values(const Rational& x, const Rational& y, const BinomialTables& tables);
std::vector<int64_t> s_values(const Rational& x, const Rational& y, const BinomialTables& tables);
std::vector<int64_t> j2_values(const BinomialTables& tables);
std::vector<int64_t> catalan_inner_values(const Rational& a, const BinomialTables& tables);

int64_t dot_mod(std::span<const int64_t> a, std::span<const int64_t> b, const Modulus& mod);

}  // namespace dualcat
