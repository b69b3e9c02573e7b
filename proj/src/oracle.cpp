#include "dualcat/oracle.hpp"

#include <algorithm>

namespace dualcat::oracle {

namespace {

mpq_class binom_nat_q(int64_t n, int64_t k) {
    if (k < 0 || k > n) return mpq_class(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return mpq_class(b);
}

Rational find_param(const std::vector<std::pair<std::string, Rational>>& params,
                    const std::string& name) {
    for (const auto& [key, value] : params)
        if (key == name) return value;
    throw unknown_statement("missing parameter '" + name + "'");
}

mpq_class dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    mpq_class acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
    return acc;
}

// Coefficient vectors t_j such that the sequence value at n is
// sum_j C(n,j) t_j; shared by the exact D/S/J2/Catalan sweeps.
std::vector<Rational> binomial_transform(int64_t count, const std::vector<mpq_class>& t) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<mpz_class> row(static_cast<size_t>(count), 0);
    for (int64_t n = 0; n < count; ++n) {
        row[static_cast<size_t>(n)] = 1;
        for (int64_t j = n - 1; j >= 1; --j) row[j] += row[j - 1];
        mpq_class acc(0);
        for (int64_t j = 0; j <= n; ++j) acc += row[j] * t[static_cast<size_t>(j)];
        out.emplace_back(Rational(acc));
    }
    return out;
}

std::vector<mpq_class> d_coeffs(int64_t count, const Rational& x, const Rational& y) {
    std::vector<mpq_class> t(static_cast<size_t>(count));
    mpq_class cx(1), yk(1);
    for (int64_t j = 0; j < count; ++j) {
        if (j > 0) {
            cx *= (x.raw() - (j - 1)) / j;
            yk *= y.raw();
        }
        t[static_cast<size_t>(j)] = cx * yk;
    }
    return t;
}

std::vector<mpq_class> s_coeffs(int64_t count, const Rational& x, const Rational& y) {
    mpq_class x2 = -1 - x.raw();
    std::vector<mpq_class> t(static_cast<size_t>(count));
    mpq_class cx(1), cx2(1), yk(1);
    for (int64_t j = 0; j < count; ++j) {
        if (j > 0) {
            cx *= (x.raw() - (j - 1)) / j;
            cx2 *= (x2 - (j - 1)) / j;
            yk *= y.raw();
        }
        t[static_cast<size_t>(j)] = cx * cx2 * yk;
    }
    return t;
}

std::vector<mpq_class> catalan_inner_coeffs(int64_t count, const Rational& a) {
    if (a.is_zero()) throw zero_parameter("catalan inner sum requires a != 0");
    std::vector<mpq_class> t(static_cast<size_t>(count));
    mpq_class ak(1);
    for (int64_t j = 0; j < count; ++j) {
        if (j > 0) ak *= a.raw();
        t[static_cast<size_t>(j)] = mpq_class(exact_catalan(j)) / ak;
    }
    return t;
}

}  // namespace

Rational exact_binom(const Rational& x, int64_t k) {
    if (k < 0) return Rational(0);
    mpq_class acc(1);
    for (int64_t i = 0; i < k; ++i) acc *= (x.raw() - i) / (i + 1);
    return Rational(acc);
}

mpz_class exact_binom_int(const mpz_class& n, int64_t k) {
    mpz_class b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return b;
}

mpz_class exact_catalan(int64_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    mpz_class c;
    mpz_divexact_ui(c.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k + 1));
    return c;
}

Rational exact_d(int64_t n, const Rational& x, const Rational& y) {
    mpq_class acc(0), cx(1), yk(1);
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            cx *= (x.raw() - (k - 1)) / k;
            yk *= y.raw();
        }
        acc += binom_nat_q(n, k) * cx * yk;
    }
    return Rational(acc);
}

Rational exact_d_ljunggren(int64_t n, const Rational& x, const Rational& y) {
    mpq_class acc(0), cxk(1), yk(1);
    mpq_class one_minus_y = 1 - y.raw();
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            // C(x+k, k) = C(x+k-1, k-1) * (x+k) / k
            cxk *= (x.raw() + k) / k;
            yk *= y.raw();
        }
        mpq_class pw(1);
        for (int64_t i = 0; i < n - k; ++i) pw *= one_minus_y;
        acc += binom_nat_q(n, k) * cxk * yk * pw;
    }
    return Rational(acc);
}

Rational exact_s(int64_t n, const Rational& x, const Rational& y) {
    mpq_class x2 = -1 - x.raw();
    mpq_class acc(0), cx(1), cx2(1), yk(1);
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            cx *= (x.raw() - (k - 1)) / k;
            cx2 *= (x2 - (k - 1)) / k;
            yk *= y.raw();
        }
        acc += binom_nat_q(n, k) * cx * cx2 * yk;
    }
    return Rational(acc);
}

Rational exact_j2(int64_t n) {
    return exact_s(n, Rational(-1, 2), Rational(-1));
}

Rational exact_catalan_inner(int64_t n, const Rational& a) {
    if (a.is_zero()) throw zero_parameter("catalan inner sum requires a != 0");
    mpq_class acc(0), ak(1);
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) ak *= a.raw();
        acc += binom_nat_q(n, k) * mpq_class(exact_catalan(k)) / ak;
    }
    return Rational(acc);
}

std::vector<Rational> exact_d_values(int64_t count, const Rational& x, const Rational& y) {
    return binomial_transform(count, d_coeffs(count, x, y));
}

std::vector<Rational> exact_s_values(int64_t count, const Rational& x, const Rational& y) {
    return binomial_transform(count, s_coeffs(count, x, y));
}

std::vector<Rational> exact_j2_values(int64_t count) {
    return exact_s_values(count, Rational(-1, 2), Rational(-1));
}

std::vector<Rational> exact_catalan_inner_values(int64_t count, const Rational& a) {
    return binomial_transform(count, catalan_inner_coeffs(count, a));
}

Rational exact_theorem_lhs(const std::string& statement_id, int64_t p,
                           const std::vector<std::pair<std::string, Rational>>& params) {
    if (statement_id == "eq1.3" || statement_id == "eq2.2") {
        auto d1 = exact_d_values(p, find_param(params, "x1"), find_param(params, "y1"));
        auto d2 = exact_d_values(p, find_param(params, "x2"), find_param(params, "y2"));
        return Rational(dot(d1, d2));
    }
    if (statement_id == "eq1.4") {
        auto s1 = exact_s_values(p, find_param(params, "x1"), find_param(params, "y1"));
        auto s2 = exact_s_values(p, find_param(params, "x2"), find_param(params, "y2"));
        return Rational(dot(s1, s2));
    }
    if (statement_id == "eq1.6") {
        auto inner = exact_catalan_inner_values(p, find_param(params, "a"));
        return Rational(dot(inner, inner));
    }
    if (statement_id == "eq2.3") {
        Rational four(4);
        auto d1 = exact_d_values(p, Rational(-1, 2), -(four / find_param(params, "a")));
        auto d2 = exact_d_values(p, Rational(-1, 2), -(four / find_param(params, "b")));
        return Rational(dot(d1, d2));
    }
    if (statement_id == "cor2.4") {
        auto d1 = exact_d_values(p, Rational(-1, 2), find_param(params, "a"));
        auto d2 = exact_d_values(p, Rational(-1, 3), find_param(params, "b"));
        return Rational(dot(d1, d2));
    }
    if (statement_id == "cor2.5") {
        auto s1 = exact_s_values(p, Rational(-1, 3), Rational(27) / find_param(params, "a"));
        auto s2 = exact_s_values(p, Rational(-1, 4), Rational(64) / find_param(params, "b"));
        return Rational(dot(s1, s2));
    }
    if (statement_id == "lemma3.1") {
        Rational m = find_param(params, "m");
        if (m.is_zero()) throw zero_parameter("lemma3.1 requires m != 0");
        mpq_class acc(0), mk(1);
        for (int64_t k = 0; k < p; ++k) {
            if (k > 0) mk *= m.raw();
            acc += mpq_class(exact_catalan(k)) / mk;
        }
        return Rational(acc);
    }
    if (statement_id == "kw-p3") {
        auto j2 = exact_j2_values(p);
        return Rational(dot(j2, j2));
    }
    throw unknown_statement("unknown statement id '" + statement_id + "'");
}

Residue reduce(const Rational& q, const Modulus& mod) {
    // Denominator safety is a hard error: every in-scope statement has an
    // exact LHS whose denominator is coprime to p.
    mpz_class m(static_cast<long>(mod.m()));
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), q.den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw not_p_adic("denominator of " + q.str() + " not invertible mod " + mod.str());
    mpz_class t;
    mpz_mod(t.get_mpz_t(), q.num().get_mpz_t(), m.get_mpz_t());
    t *= den_inv;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    return Residue(static_cast<int64_t>(mpz_get_ui(t.get_mpz_t())), mod);
}

}  // namespace dualcat::oracle
