#include "dualcat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <memory>
#include <thread>

namespace dualcat::verify {

namespace {

enum class Stmt { eq1_3, eq1_4, eq1_6, eq2_3, cor2_4, cor2_5, lemma3_1, kw_p3 };

const std::vector<std::pair<std::string, Stmt>>& stmt_table() {
    static const std::vector<std::pair<std::string, Stmt>> table = {
        {"eq1.3", Stmt::eq1_3},   {"eq1.4", Stmt::eq1_4},   {"eq1.6", Stmt::eq1_6},
        {"eq2.3", Stmt::eq2_3},   {"cor2.4", Stmt::cor2_4}, {"cor2.5", Stmt::cor2_5},
        {"lemma3.1", Stmt::lemma3_1}, {"kw-p3", Stmt::kw_p3},
    };
    return table;
}

Stmt parse_stmt(const std::string& id) {
    for (const auto& [name, stmt] : stmt_table())
        if (name == id) return stmt;
    throw unknown_statement("unknown statement id '" + id + "'");
}

std::string stmt_name(Stmt s) {
    for (const auto& [name, stmt] : stmt_table())
        if (stmt == s) return name;
    return "?";
}

using Params = std::vector<std::pair<std::string, Rational>>;

VerificationRecord make_record(std::string statement, int64_t p, int e, Params params,
                               int64_t lhs, int64_t rhs) {
    VerificationRecord rec;
    rec.statement = std::move(statement);
    rec.p = p;
    rec.e = e;
    rec.params = std::move(params);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.pass = lhs == rhs;
    return rec;
}

// r^k for k = 0..p-1
std::vector<int64_t> pow_table(int64_t r, int64_t p, int64_t m) {
    std::vector<int64_t> t(static_cast<size_t>(p));
    t[0] = 1 % m;
    for (int64_t k = 1; k < p; ++k) t[k] = mul_mod(t[k - 1], r, m);
    return t;
}

void require_unit(const Rational& q, const Modulus& mod, const char* name) {
    if (q.is_zero()) throw zero_parameter(std::string(name) + " must be nonzero");
    embed(q, mod);
    embed(Rational(1) / q, mod);
}

}  // namespace

const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, stmt] : stmt_table()) v.push_back(name);
        return v;
    }();
    return ids;
}

bool is_known_statement(const std::string& id) {
    for (const auto& [name, stmt] : stmt_table())
        if (name == id) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Closed-form right sides
// ---------------------------------------------------------------------------

DRhs thm_d_rhs(const BinomialTables& t, const Rational& x1, const Rational& y1,
               const Rational& x2, const Rational& y2) {
    assert(t.modulus().e() == 1);
    const Modulus& mod = t.modulus();
    const int64_t p = t.p(), m = t.m();
    const int64_t r1 = embed(x1, mod).value();
    const int64_t r2 = embed(x2, mod).value();
    const int64_t y1m = embed(y1, mod).value();
    const int64_t y2m = embed(y2, mod).value();
    if (r1 + r2 < p - 1) return {0, false};
    if (r1 + r2 == p - 1) {
        int64_t v = mul_mod(pow_mod(y1m, static_cast<uint64_t>(r1), m),
                            pow_mod(neg_mod(y2m, m), static_cast<uint64_t>(r2), m), m);
        return {v, false};
    }
    // r1 + r2 > p-1: no stated dichotomy; fall back to the general expression
    // (-1)^{r2} sum_{i+j=p-1} C(r1,i) C(r2,j) y1^i y2^j (y2-1)^{r2-j}.
    auto y1p = pow_table(y1m, p, m);
    auto y2p = pow_table(y2m, p, m);
    auto wp = pow_table(sub_mod(y2m, 1 % m, m), p, m);
    int64_t acc = 0;
    for (int64_t i = 0; i < p; ++i) {
        const int64_t j = p - 1 - i;
        if (i > r1 || j > r2) continue;
        int64_t term = mul_mod(t.binom_nat(r1, i), t.binom_nat(r2, j), m);
        term = mul_mod(term, mul_mod(y1p[i], y2p[j], m), m);
        term = mul_mod(term, wp[r2 - j], m);
        acc = add_mod(acc, term, m);
    }
    if (r2 % 2 == 1) acc = neg_mod(acc, m);
    return {acc, true};
}

int64_t thm_s_rhs(const BinomialTables& t, const Rational& x1, const Rational& y1,
                  const Rational& x2, const Rational& y2) {
    assert(t.modulus().e() == 1);
    const Modulus& mod = t.modulus();
    const int64_t p = t.p();
    const int64_t half = (p - 1) / 2;
    const int64_t r1 = embed(x1, mod).value();
    const int64_t r2 = embed(x2, mod).value();
    embed(y1, mod);
    embed(y2, mod);
    if (r1 != half || r2 != half) return 0;
    return Residue(legendre(-(y1 * y2), p), mod).value();
}

int64_t thm_catalan_rhs(const BinomialTables& t, const Rational& a) {
    assert(t.modulus().e() == 1);
    const Modulus& mod = t.modulus();
    const Rational delta = a * (a + Rational(4));
    Residue rhs = embed(Rational(4), mod) * Residue(legendre(Rational(-1), t.p()), mod) -
                  embed(a + Rational(4), mod) * Residue(legendre(delta, t.p()), mod) +
                  embed(a + Rational(1), mod);
    return rhs.value();
}

int64_t lemma_catalan_rhs(const BinomialTables& t, const Rational& m) {
    assert(t.modulus().e() == 1);
    const Modulus& mod = t.modulus();
    const Rational delta = m * (m - Rational(4));
    Residue rhs = embed((Rational(4) - m) / Rational(2), mod) *
                      Residue(legendre(delta, t.p()), mod) +
                  embed(m / Rational(2) - Rational(1), mod);
    return rhs.value();
}

// ---------------------------------------------------------------------------
// Prepared checks
// ---------------------------------------------------------------------------

VerificationRecord check_thm_D_prepared(const BinomialTables& t, std::span<const int64_t> d1,
                                        std::span<const int64_t> d2, const Rational& x1,
                                        const Rational& y1, const Rational& x2,
                                        const Rational& y2) {
    DRhs rhs = thm_d_rhs(t, x1, y1, x2, y2);
    int64_t lhs = dot_mod(d1, d2, t.modulus());
    return make_record(rhs.general_case ? "eq2.2" : "eq1.3", t.p(), 1,
                       {{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}}, lhs, rhs.value);
}

VerificationRecord check_thm_S_prepared(const BinomialTables& t, std::span<const int64_t> s1,
                                        std::span<const int64_t> s2, const Rational& x1,
                                        const Rational& y1, const Rational& x2,
                                        const Rational& y2) {
    int64_t rhs = thm_s_rhs(t, x1, y1, x2, y2);
    int64_t lhs = dot_mod(s1, s2, t.modulus());
    return make_record("eq1.4", t.p(), 1, {{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}},
                       lhs, rhs);
}

VerificationRecord check_thm_catalan_prepared(const BinomialTables& t,
                                              std::span<const int64_t> inner, const Rational& a) {
    require_unit(a, t.modulus(), "a");
    int64_t rhs = thm_catalan_rhs(t, a);
    int64_t lhs = dot_mod(inner, inner, t.modulus());
    return make_record("eq1.6", t.p(), 1, {{"a", a}}, lhs, rhs);
}

VerificationRecord check_cor_ab_prepared(const BinomialTables& t, std::span<const int64_t> d1,
                                         std::span<const int64_t> d2, const Rational& a,
                                         const Rational& b) {
    const Modulus& mod = t.modulus();
    require_unit(a, mod, "a");
    require_unit(b, mod, "b");
    int64_t lhs = dot_mod(d1, d2, mod);
    int64_t rhs = Residue(legendre(-(a * b), t.p()), mod).value();
    return make_record("eq2.3", t.p(), 1, {{"a", a}, {"b", b}}, lhs, rhs);
}

VerificationRecord check_cor_halves_thirds_prepared(const BinomialTables& t,
                                                    std::span<const int64_t> d1,
                                                    std::span<const int64_t> d2, const Rational& a,
                                                    const Rational& b) {
    if (t.p() % 3 != 1)
        throw wrong_residue_class("cor2.4 requires p = 1 (mod 3), got p=" + std::to_string(t.p()));
    embed(a, t.modulus());
    embed(b, t.modulus());
    int64_t lhs = dot_mod(d1, d2, t.modulus());
    return make_record("cor2.4", t.p(), 1, {{"a", a}, {"b", b}}, lhs, 0);
}

VerificationRecord check_cor_34_prepared(const BinomialTables& t, std::span<const int64_t> s1,
                                         std::span<const int64_t> s2, const Rational& a,
                                         const Rational& b) {
    if (t.p() < 5)
        throw prime_too_small("cor2.5 requires p > 3, got p=" + std::to_string(t.p()));
    require_unit(a, t.modulus(), "a");
    require_unit(b, t.modulus(), "b");
    int64_t lhs = dot_mod(s1, s2, t.modulus());
    return make_record("cor2.5", t.p(), 1, {{"a", a}, {"b", b}}, lhs, 0);
}

// ---------------------------------------------------------------------------
// Table-level checks
// ---------------------------------------------------------------------------

VerificationRecord check_thm_D(const BinomialTables& t, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2) {
    auto d1 = d_values(x1, y1, t);
    auto d2 = d_values(x2, y2, t);
    return check_thm_D_prepared(t, d1, d2, x1, y1, x2, y2);
}

VerificationRecord check_thm_S(const BinomialTables& t, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2) {
    auto s1 = s_values(x1, y1, t);
    auto s2 = s_values(x2, y2, t);
    return check_thm_S_prepared(t, s1, s2, x1, y1, x2, y2);
}

VerificationRecord check_thm_catalan(const BinomialTables& t, const Rational& a) {
    require_unit(a, t.modulus(), "a");
    auto inner = catalan_inner_values(a, t);
    return check_thm_catalan_prepared(t, inner, a);
}

VerificationRecord check_cor_ab(const BinomialTables& t, const Rational& a, const Rational& b) {
    require_unit(a, t.modulus(), "a");
    require_unit(b, t.modulus(), "b");
    const Rational half(-1, 2);
    auto d1 = d_values(half, Rational(-4) / a, t);
    auto d2 = d_values(half, Rational(-4) / b, t);
    return check_cor_ab_prepared(t, d1, d2, a, b);
}

VerificationRecord check_cor_halves_thirds(const BinomialTables& t, const Rational& a,
                                           const Rational& b) {
    if (t.p() % 3 != 1)
        throw wrong_residue_class("cor2.4 requires p = 1 (mod 3), got p=" + std::to_string(t.p()));
    auto d1 = d_values(Rational(-1, 2), a, t);
    auto d2 = d_values(Rational(-1, 3), b, t);
    return check_cor_halves_thirds_prepared(t, d1, d2, a, b);
}

VerificationRecord check_cor_34(const BinomialTables& t, const Rational& a, const Rational& b) {
    if (t.p() < 5)
        throw prime_too_small("cor2.5 requires p > 3, got p=" + std::to_string(t.p()));
    require_unit(a, t.modulus(), "a");
    require_unit(b, t.modulus(), "b");
    auto s1 = s_values(Rational(-1, 3), Rational(27) / a, t);
    auto s2 = s_values(Rational(-1, 4), Rational(64) / b, t);
    return check_cor_34_prepared(t, s1, s2, a, b);
}

VerificationRecord check_lemma_catalan(const BinomialTables& t, const Rational& m) {
    const Modulus& mod = t.modulus();
    require_unit(m, mod, "m");
    const int64_t mm = mod.m();
    const int64_t minv = embed(Rational(1) / m, mod).value();
    int64_t lhs = 0, mk = 1 % mm;
    for (int64_t k = 0; k < t.p(); ++k) {
        if (k > 0) mk = mul_mod(mk, minv, mm);
        lhs = add_mod(lhs, mul_mod(t.catalan(k), mk, mm), mm);
    }
    return make_record("lemma3.1", t.p(), 1, {{"m", m}}, lhs, lemma_catalan_rhs(t, m));
}

VerificationRecord check_kw_mod_p3(const BinomialTables& t3) {
    assert(t3.modulus().e() == 3);
    const Modulus& mod = t3.modulus();
    if (t3.p() < 5)
        throw prime_too_small("kw-p3 requires p > 3, got p=" + std::to_string(t3.p()));
    auto j2 = j2_values(t3);
    int64_t lhs = dot_mod(j2, j2, mod);
    int64_t rhs = Residue(legendre(Rational(-1), t3.p()), mod).value();
    return make_record("kw-p3", t3.p(), 3, {}, lhs, rhs);
}

// ---------------------------------------------------------------------------
// Prime-level entry points
// ---------------------------------------------------------------------------

VerificationRecord check_thm_D(int64_t p, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2) {
    BinomialTables t(Modulus(p, 1));
    return check_thm_D(t, x1, y1, x2, y2);
}

VerificationRecord check_thm_S(int64_t p, const Rational& x1, const Rational& y1,
                               const Rational& x2, const Rational& y2) {
    BinomialTables t(Modulus(p, 1));
    return check_thm_S(t, x1, y1, x2, y2);
}

VerificationRecord check_thm_catalan(int64_t p, const Rational& a) {
    BinomialTables t(Modulus(p, 1));
    return check_thm_catalan(t, a);
}

VerificationRecord check_cor_ab(int64_t p, const Rational& a, const Rational& b) {
    BinomialTables t(Modulus(p, 1));
    return check_cor_ab(t, a, b);
}

VerificationRecord check_cor_halves_thirds(int64_t p, const Rational& a, const Rational& b) {
    BinomialTables t(Modulus(p, 1));
    return check_cor_halves_thirds(t, a, b);
}

VerificationRecord check_cor_34(int64_t p, const Rational& a, const Rational& b) {
    BinomialTables t(Modulus(p, 1));
    return check_cor_34(t, a, b);
}

VerificationRecord check_lemma_catalan(int64_t p, const Rational& m) {
    BinomialTables t(Modulus(p, 1));
    return check_lemma_catalan(t, m);
}

VerificationRecord check_kw_mod_p3(int64_t p) {
    Modulus probe(p, 1);
    if (p < 5) throw prime_too_small("kw-p3 requires p > 3, got p=" + std::to_string(p));
    BinomialTables t3(Modulus(p, 3));
    return check_kw_mod_p3(t3);
}

// ---------------------------------------------------------------------------
// Telescoping identity (exact integer arithmetic)
// ---------------------------------------------------------------------------

std::vector<VerificationRecord> check_lemma_telescope(int64_t n_max) {
    if (n_max < 1) throw index_out_of_range("telescope needs n_max >= 1");

    // Pascal triangle rows 0..2*n_max-1, exact.
    const int64_t rows = 2 * n_max;
    std::vector<std::vector<mpz_class>> tri(static_cast<size_t>(rows));
    tri[0] = {mpz_class(1)};
    for (int64_t r = 1; r < rows; ++r) {
        tri[r].resize(static_cast<size_t>(r) + 1);
        tri[r][0] = 1;
        tri[r][r] = 1;
        for (int64_t c = 1; c < r; ++c) tri[r][c] = tri[r - 1][c - 1] + tri[r - 1][c];
    }
    auto at = [&tri](int64_t r, int64_t c) -> mpz_class {
        if (c < 0 || c > r) return mpz_class(0);
        return tri[static_cast<size_t>(r)][static_cast<size_t>(c)];
    };

    std::vector<VerificationRecord> records;
    records.reserve(static_cast<size_t>(n_max));
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t checked = 0, held = 0;
        for (int64_t i = 0; i < n; ++i) {
            for (int64_t j = 0; j < n; ++j) {
                ++checked;
                const int64_t denom = i + j + 1;
                bool ok = true;
                mpz_class sum(0);
                mpq_class g_k = mpq_class(0 - i) / denom * at(0, i) * at(j, j);
                for (int64_t k = 0; k < n; ++k) {
                    mpz_class f_k = at(k, i) * at(k + j, j);
                    mpq_class g_next =
                        mpq_class(k + 1 - i) / denom * (at(k + 1, i) * at(k + 1 + j, j));
                    if (g_next - g_k != f_k) {
                        ok = false;
                        break;
                    }
                    sum += f_k;
                    g_k = g_next;
                }
                if (ok) {
                    // closed form (-1)^j n/(i+j+1) C(n-1,i) C(-n-1,j)
                    mpz_class neg_binom;
                    mpz_class upper(-n - 1);
                    mpz_bin_ui(neg_binom.get_mpz_t(), upper.get_mpz_t(),
                               static_cast<unsigned long>(j));
                    mpq_class closed = mpq_class(n) / denom * at(n - 1, i) * neg_binom;
                    if (j % 2 == 1) closed = -closed;
                    ok = mpq_class(sum) == closed;
                }
                if (ok) ++held;
            }
        }
        VerificationRecord rec =
            make_record("lemma2.2", 0, 0, {{"n", Rational(static_cast<long>(n))}}, checked, held);
        records.push_back(std::move(rec));
    }
    return records;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

namespace {

struct Instance {
    Stmt stmt;
    int64_t p;
    Params params;
};

std::vector<Rational> normalized_grid(std::vector<Rational> grid) {
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<int64_t> odd_primes_in(int64_t lo, int64_t hi) {
    std::vector<int64_t> primes;
    for (int64_t q = std::max<int64_t>(3, lo); q <= hi; ++q)
        if (q % 2 == 1 && is_prime(static_cast<uint64_t>(q))) primes.push_back(q);
    return primes;
}

Rational find_param(const Params& params, const char* name) {
    for (const auto& [key, value] : params)
        if (key == name) return value;
    throw unknown_statement(std::string("missing parameter '") + name + "'");
}

VerificationRecord run_instance(const Instance& in, const BinomialTables& t1,
                                const BinomialTables* t3) {
    try {
        switch (in.stmt) {
            case Stmt::eq1_3:
                return check_thm_D(t1, find_param(in.params, "x1"), find_param(in.params, "y1"),
                                   find_param(in.params, "x2"), find_param(in.params, "y2"));
            case Stmt::eq1_4:
                return check_thm_S(t1, find_param(in.params, "x1"), find_param(in.params, "y1"),
                                   find_param(in.params, "x2"), find_param(in.params, "y2"));
            case Stmt::eq1_6:
                return check_thm_catalan(t1, find_param(in.params, "a"));
            case Stmt::eq2_3:
                return check_cor_ab(t1, find_param(in.params, "a"), find_param(in.params, "b"));
            case Stmt::cor2_4:
                return check_cor_halves_thirds(t1, find_param(in.params, "a"),
                                               find_param(in.params, "b"));
            case Stmt::cor2_5:
                return check_cor_34(t1, find_param(in.params, "a"), find_param(in.params, "b"));
            case Stmt::lemma3_1:
                return check_lemma_catalan(t1, find_param(in.params, "m"));
            case Stmt::kw_p3:
                if (in.p < 5)
                    throw prime_too_small("kw-p3 requires p > 3, got p=" + std::to_string(in.p));
                assert(t3 != nullptr);
                return check_kw_mod_p3(*t3);
        }
        throw unknown_statement("unhandled statement");
    } catch (const error& err) {
        VerificationRecord rec;
        rec.statement = stmt_name(in.stmt);
        rec.p = in.p;
        rec.e = in.stmt == Stmt::kw_p3 ? 3 : 1;
        rec.params = in.params;
        rec.skip_reason = err.kind();
        return rec;
    }
}

}  // namespace

SweepSummary summarize(const std::vector<VerificationRecord>& records) {
    SweepSummary s;
    for (const auto& rec : records) {
        if (rec.skipped())
            ++s.skipped;
        else if (rec.pass)
            ++s.passed;
        else
            ++s.failed;
    }
    return s;
}

SweepResult run_sweep(const SweepPlan& plan) {
    std::vector<Stmt> stmts;
    for (const auto& id : plan.statements) {
        Stmt s = parse_stmt(id);
        if (std::find(stmts.begin(), stmts.end(), s) == stmts.end()) stmts.push_back(s);
    }

    std::vector<Rational> xs = normalized_grid(plan.x_grid);
    if (plan.include_rational_specials) {
        for (const Rational& s : {Rational(-1, 2), Rational(-1, 3), Rational(-2, 3),
                                  Rational(-1, 4), Rational(-3, 4), Rational(-1, 6)})
            xs.push_back(s);
        xs = normalized_grid(std::move(xs));
    }
    const std::vector<Rational> ys = normalized_grid(plan.y_grid);
    const std::vector<Rational> as = normalized_grid(plan.a_grid);
    const std::vector<Rational> bs = normalized_grid(plan.b_grid);
    const std::vector<Rational> ms = normalized_grid(plan.m_grid);
    const std::vector<int64_t> primes = odd_primes_in(plan.p_min, plan.p_max);

    std::vector<Instance> instances;
    for (Stmt stmt : stmts) {
        for (int64_t p : primes) {
            switch (stmt) {
                case Stmt::eq1_3:
                case Stmt::eq1_4:
                    for (const auto& x1 : xs)
                        for (const auto& y1 : ys)
                            for (const auto& x2 : xs)
                                for (const auto& y2 : ys)
                                    instances.push_back(
                                        {stmt, p, {{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}}});
                    break;
                case Stmt::eq1_6:
                    for (const auto& a : as) instances.push_back({stmt, p, {{"a", a}}});
                    break;
                case Stmt::eq2_3:
                case Stmt::cor2_4:
                case Stmt::cor2_5:
                    for (const auto& a : as)
                        for (const auto& b : bs)
                            instances.push_back({stmt, p, {{"a", a}, {"b", b}}});
                    break;
                case Stmt::lemma3_1:
                    for (const auto& m : ms) instances.push_back({stmt, p, {{"m", m}}});
                    break;
                case Stmt::kw_p3:
                    instances.push_back({stmt, p, {}});
                    break;
            }
        }
    }

    SweepResult result;
    result.records.resize(instances.size());

    // Group by prime so tables are built once and stay read-only while the
    // group's instances run, possibly in parallel.
    std::map<int64_t, std::vector<size_t>> by_prime;
    for (size_t i = 0; i < instances.size(); ++i) by_prime[instances[i].p].push_back(i);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int jobs = std::max(1, std::min<int>(plan.jobs, static_cast<int>(hw) * 4));

    for (const auto& [p, index_list] : by_prime) {
        BinomialTables t1{Modulus(p, 1)};
        std::unique_ptr<BinomialTables> t3;
        bool wants_kw = false;
        for (size_t i : index_list)
            if (instances[i].stmt == Stmt::kw_p3) wants_kw = true;
        if (wants_kw && p >= 5) t3 = std::make_unique<BinomialTables>(Modulus(p, 3));

        auto work = [&](size_t idx) {
            const Instance& in = instances[idx];
            result.records[idx] = run_instance(in, t1, t3.get());
        };
        if (jobs <= 1 || index_list.size() < 2) {
            for (size_t i : index_list) work(i);
        } else {
            std::atomic<size_t> next{0};
            auto worker = [&] {
                for (size_t k = next.fetch_add(1); k < index_list.size(); k = next.fetch_add(1))
                    work(index_list[k]);
            };
            std::vector<std::thread> pool;
            const size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), index_list.size());
            pool.reserve(nthreads);
            for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    result.summary = summarize(result.records);
    return result;
}

}  // namespace dualcat::verify
