#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dualcat/modring.hpp"
#include "dualcat/sequences.hpp"

namespace dualcat::verify {

// One checked congruence instance. For skipped instances (sweeps only)
// lhs/rhs stay 0 and skip_reason names the violated precondition.
struct VerificationRecord {
    std::string statement;
    int64_t p = 0;
    int e = 1;
    std::vector<std::pair<std::string, Rational>> params;
    int64_t lhs = 0;
    int64_t rhs = 0;
    bool pass = false;
    std::string skip_reason;

    bool skipped() const { return !skip_reason.empty(); }
};

struct SweepSummary {
    uint64_t passed = 0;
    uint64_t failed = 0;
    uint64_t skipped = 0;
};

struct SweepResult {
    std::vector<VerificationRecord> records;
    SweepSummary summary;
};

struct SweepPlan {
    std::vector<std::string> statements;
    int64_t p_min = 3;
    int64_t p_max = 47;
    std::vector<Rational> x_grid;
    std::vector<Rational> y_grid;
    std::vector<Rational> a_grid;
    std::vector<Rational> b_grid;
    std::vector<Rational> m_grid;
    bool include_rational_specials = false;
    int jobs = 1;
};

// Ids accepted by check/sweep: eq1.3 eq1.4 eq1.6 eq2.3 cor2.4 cor2.5
// lemma3.1 kw-p3. Records may additionally carry "eq2.2" (the general-case
// expression an eq1.3 instance falls back to when r1+r2 > p-1) and
// "lemma2.2" (telescoping identity).
const std::vector<std::string>& statement_ids();
bool is_known_statement(const std::string& id);

// --- single-instance checks (preconditions throw; they never skip) --------

VerificationRecord check_thm_D(int64_t p, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2);
VerificationRecord check_thm_S(int64_t p, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2);
VerificationRecord check_thm_catalan(int64_t p, const Rational& a);
VerificationRecord check_cor_ab(int64_t p, const Rational& a, const Rational& b);
VerificationRecord check_cor_halves_thirds(int64_t p, const Rational& a, const Rational& b);
VerificationRecord check_cor_34(int64_t p, const Rational& a, const Rational& b);
VerificationRecord check_lemma_catalan(int64_t p, const Rational& m);
VerificationRecord check_kw_mod_p3(int64_t p);

// Table-reusing variants for sweeps (tables must match the intended prime;
// check_kw_mod_p3 wants e = 3 tables, everything else e = 1).
VerificationRecord check_thm_D(const BinomialTables& t, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2);
VerificationRecord check_thm_S(const BinomialTables& t, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2);
VerificationRecord check_thm_catalan(const BinomialTables& t, const Rational& a);
VerificationRecord check_cor_ab(const BinomialTables& t, const Rational& a, const Rational& b);
VerificationRecord check_cor_halves_thirds(const BinomialTables& t, const Rational& a,
                                           const Rational& b);
VerificationRecord check_cor_34(const BinomialTables& t, const Rational& a, const Rational& b);
VerificationRecord check_lemma_catalan(const BinomialTables& t, const Rational& m);
VerificationRecord check_kw_mod_p3(const BinomialTables& t3);

// Profile-reusing variants: callers that sweep many parameter pairs at one
// prime may pass precomputed d_values/s_values/catalan_inner_values vectors.
VerificationRecord check_thm_D_prepared(const BinomialTables& t, std::span<const int64_t> d1,
                                        std::span<const int64_t> d2, const Rational& x1,
                                        const Rational& y1, const Rational& x2,
                                        const Rational& y2);
VerificationRecord check_thm_S_prepared(const BinomialTables& t, std::span<const int64_t> s1,
                                        std::span<const int64_t> s2, const Rational& x1,
                                        const Rational& y1, const Rational& x2,
                                        const Rational& y2);
VerificationRecord check_thm_catalan_prepared(const BinomialTables& t,
                                              std::span<const int64_t> inner, const Rational& a);
VerificationRecord check_cor_ab_prepared(const BinomialTables& t, std::span<const int64_t> d1,
                                         std::span<const int64_t> d2, const Rational& a,
                                         const Rational& b);
VerificationRecord check_cor_halves_thirds_prepared(const BinomialTables& t,
                                                    std::span<const int64_t> d1,
                                                    std::span<const int64_t> d2, const Rational& a,
                                                    const Rational& b);
VerificationRecord check_cor_34_prepared(const BinomialTables& t, std::span<const int64_t> s1,
                                         std::span<const int64_t> s2, const Rational& a,
                                         const Rational& b);

// Exact-arithmetic telescoping check of
//   sum_{k=0}^{n-1} C(k,i) C(k+j,j) = (-1)^j n/(i+j+1) C(n-1,i) C(-n-1,j)
// together with its certificate G(k) = (k-i)/(i+j+1) C(k,i) C(k+j,j),
// G(k+1)-G(k) = C(k,i)C(k+j,j), over all 0 <= i,j <= n-1 for 1 <= n <= n_max.
// One record per n: lhs = pairs checked, rhs = pairs that held.
std::vector<VerificationRecord> check_lemma_telescope(int64_t n_max);

// --- closed-form right sides, exposed for consistency properties ----------

struct DRhs {
    int64_t value = 0;
    bool general_case = false;  // true when r1+r2 > p-1 (the eq2.2 expression)
};
DRhs thm_d_rhs(const BinomialTables& t, const Rational& x1, const Rational& y1,
               const Rational& x2, const Rational& y2);
int64_t thm_s_rhs(const BinomialTables& t, const Rational& x1, const Rational& y1,
                  const Rational& x2, const Rational& y2);
int64_t thm_catalan_rhs(const BinomialTables& t, const Rational& a);
int64_t lemma_catalan_rhs(const BinomialTables& t, const Rational& m);

// --- sweeps ----------------------------------------------------------------

// Executes every instance of the plan; precondition violations become skip
// records. Record order is deterministic (statement, p ascending, params
// lexicographic) regardless of jobs.
SweepResult run_sweep(const SweepPlan& plan);

SweepSummary summarize(const std::vector<VerificationRecord>& records);

}  // namespace dualcat::verify
