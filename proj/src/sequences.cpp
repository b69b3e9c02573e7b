#include "dualcat/sequences.hpp"

#include <cassert>

namespace dualcat {

namespace {

// Residues of x, x-1, x-2, ... appear as incremental falling-factorial
// factors; keeping num/den reduced once avoids an inversion per step.
struct EmbeddedRational {
    int64_t num_m;
    int64_t den_m;
    int64_t den_inv;
    int64_t m;

    EmbeddedRational(const Rational& q, const Modulus& mod) {
        if (mpz_fdiv_ui(q.den().get_mpz_t(), static_cast<unsigned long>(mod.p())) == 0)
            throw not_p_adic(q.str() + " is not p-adic at p=" + std::to_string(mod.p()));
        m = mod.m();
        num_m = static_cast<int64_t>(mpz_fdiv_ui(q.num().get_mpz_t(), static_cast<unsigned long>(m)));
        den_m = static_cast<int64_t>(mpz_fdiv_ui(q.den().get_mpz_t(), static_cast<unsigned long>(m)));
        den_inv = inv_mod(den_m, m);
    }

    int64_t value() const { return mul_mod(num_m, den_inv, m); }

    // residue of x - i
    int64_t shifted_down(int64_t i) const {
        return mul_mod(sub_mod(num_m, mul_mod(i % m, den_m, m), m), den_inv, m);
    }

    // residue of x + i
    int64_t shifted_up(int64_t i) const {
        return mul_mod(add_mod(num_m, mul_mod(i % m, den_m, m), m), den_inv, m);
    }
};

void check_n(int64_t n, const BinomialTables& tables) {
    if (n < 0 || n >= tables.p())
        throw k_too_large("n=" + std::to_string(n) + " outside table range for p=" +
                          std::to_string(tables.p()));
}

}  // namespace

Residue d_eval(int64_t n, const Rational& x, const Rational& y, const BinomialTables& tables) {
    check_n(n, tables);
    const Modulus& mod = tables.modulus();
    const int64_t m = mod.m();
    EmbeddedRational xe(x, mod);
    const int64_t ym = embed(y, mod).value();
    int64_t acc = 0, cx = 1 % m, yk = 1 % m;
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            cx = mul_mod(mul_mod(cx, xe.shifted_down(k - 1), m), tables.inv_small(k), m);
            yk = mul_mod(yk, ym, m);
        }
        acc = add_mod(acc, mul_mod(tables.binom_nat(n, k), mul_mod(cx, yk, m), m), m);
    }
    return Residue(acc, mod);
}

Residue d_eval_ljunggren(int64_t n, const Rational& x, const Rational& y,
                         const BinomialTables& tables) {
    check_n(n, tables);
    const Modulus& mod = tables.modulus();
    const int64_t m = mod.m();
    EmbeddedRational xe(x, mod);
    const int64_t ym = embed(y, mod).value();
    const int64_t om = sub_mod(1 % m, ym, m);  // 1 - y
    std::vector<int64_t> om_pow(static_cast<size_t>(n) + 1);
    om_pow[0] = 1 % m;
    for (int64_t i = 1; i <= n; ++i) om_pow[i] = mul_mod(om_pow[i - 1], om, m);
    int64_t acc = 0, cxk = 1 % m, yk = 1 % m;
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            // C(x+k, k) = C(x+k-1, k-1) * (x+k) / k
            cxk = mul_mod(mul_mod(cxk, xe.shifted_up(k), m), tables.inv_small(k), m);
            yk = mul_mod(yk, ym, m);
        }
        int64_t term = mul_mod(tables.binom_nat(n, k), mul_mod(cxk, yk, m), m);
        acc = add_mod(acc, mul_mod(term, om_pow[n - k], m), m);
    }
    return Residue(acc, mod);
}

Residue s_eval(int64_t n, const Rational& x, const Rational& y, const BinomialTables& tables) {
    check_n(n, tables);
    const Modulus& mod = tables.modulus();
    const int64_t m = mod.m();
    EmbeddedRational xe(x, mod);
    EmbeddedRational xe2(-(Rational(1) + x), mod);
    const int64_t ym = embed(y, mod).value();
    int64_t acc = 0, cx = 1 % m, cx2 = 1 % m, yk = 1 % m;
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            int64_t ik = tables.inv_small(k);
            cx = mul_mod(mul_mod(cx, xe.shifted_down(k - 1), m), ik, m);
            cx2 = mul_mod(mul_mod(cx2, xe2.shifted_down(k - 1), m), ik, m);
            yk = mul_mod(yk, ym, m);
        }
        int64_t term = mul_mod(cx, mul_mod(cx2, yk, m), m);
        acc = add_mod(acc, mul_mod(tables.binom_nat(n, k), term, m), m);
    }
    return Residue(acc, mod);
}

Residue j2_eval(int64_t n, const BinomialTables& tables) {
    return s_eval(n, Rational(-1, 2), Rational(-1), tables);
}

Residue catalan_inner(int64_t n, const Rational& a, const BinomialTables& tables) {
    check_n(n, tables);
    if (a.is_zero()) throw zero_parameter("catalan inner sum requires a != 0");
    const Modulus& mod = tables.modulus();
    const int64_t m = mod.m();
    embed(a, mod);  // enforces p not dividing a.den
    const int64_t ainv = embed(Rational(1) / a, mod).value();
    int64_t acc = 0, ak = 1 % m;
    for (int64_t k = 0; k <= n; ++k) {
        if (k > 0) ak = mul_mod(ak, ainv, m);
        int64_t term = mul_mod(tables.catalan(k), ak, m);
        acc = add_mod(acc, mul_mod(tables.binom_nat(n, k), term, m), m);
    }
    return Residue(acc, mod);
}

Rational dual_transform(const std::vector<Rational>& a, int64_t n) {
    if (n < 0 || static_cast<size_t>(n) >= a.size())
        throw index_out_of_range("dual transform needs terms a_0..a_n, got " +
                                 std::to_string(a.size()) + " for n=" + std::to_string(n));
    mpq_class acc(0);
    for (int64_t k = 0; k <= n; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        if (k % 2 == 1) b = -b;
        acc += b * a[static_cast<size_t>(k)].raw();
    }
    return Rational(acc);
}

std::vector<int64_t> binomial_transform_values(std::span<const int64_t> coeffs,
                                               const Modulus& mod) {
    const int64_t m = mod.m();
    const int64_t count = static_cast<int64_t>(coeffs.size());
    std::vector<int64_t> out(static_cast<size_t>(count));
    std::vector<int64_t> row(static_cast<size_t>(count), 0);
    for (int64_t n = 0; n < count; ++n) {
        row[n] = 1 % m;
        for (int64_t j = n - 1; j >= 1; --j) row[j] = add_mod(row[j], row[j - 1], m);
        int64_t acc = 0;
        for (int64_t j = 0; j <= n; ++j) acc = add_mod(acc, mul_mod(row[j], coeffs[j], m), m);
        out[n] = acc;
    }
    return out;
}

namespace {

std::vector<int64_t> d_coeffs(const Rational& x, const Rational& y, const BinomialTables& t) {
    const Modulus& mod = t.modulus();
    const int64_t m = mod.m();
    EmbeddedRational xe(x, mod);
    const int64_t ym = embed(y, mod).value();
    std::vector<int64_t> coeffs(static_cast<size_t>(t.p()));
    int64_t cx = 1 % m, yk = 1 % m;
    for (int64_t j = 0; j < t.p(); ++j) {
        if (j > 0) {
            cx = mul_mod(mul_mod(cx, xe.shifted_down(j - 1), m), t.inv_small(j), m);
            yk = mul_mod(yk, ym, m);
        }
        coeffs[j] = mul_mod(cx, yk, m);
    }
    return coeffs;
}

std::vector<int64_t> s_coeffs(const Rational& x, const Rational& y, const BinomialTables& t) {
    const Modulus& mod = t.modulus();
    const int64_t m = mod.m();
    EmbeddedRational xe(x, mod);
    EmbeddedRational xe2(-(Rational(1) + x), mod);
    const int64_t ym = embed(y, mod).value();
    std::vector<int64_t> coeffs(static_cast<size_t>(t.p()));
    int64_t cx = 1 % m, cx2 = 1 % m, yk = 1 % m;
    for (int64_t j = 0; j < t.p(); ++j) {
        if (j > 0) {
            int64_t ij = t.inv_small(j);
            cx = mul_mod(mul_mod(cx, xe.shifted_down(j - 1), m), ij, m);
            cx2 = mul_mod(mul_mod(cx2, xe2.shifted_down(j - 1), m), ij, m);
            yk = mul_mod(yk, ym, m);
        }
        coeffs[j] = mul_mod(cx, mul_mod(cx2, yk, m), m);
    }
    return coeffs;
}

}  // namespace

std::vector<int64_t> d_values(const Rational& x, const Rational& y, const BinomialTables& t) {
    return binomial_transform_values(d_coeffs(x, y, t), t.modulus());
}

std::vector<int64_t> s_values(const Rational& x, const Rational& y, const BinomialTables& t) {
    return binomial_transform_values(s_coeffs(x, y, t), t.modulus());
}

std::vector<int64_t> j2_values(const BinomialTables& t) {
    return s_values(Rational(-1, 2), Rational(-1), t);
}

std::vector<int64_t> catalan_inner_values(const Rational& a, const BinomialTables& t) {
    if (a.is_zero()) throw zero_parameter("catalan inner sum requires a != 0");
    const Modulus& mod = t.modulus();
    const int64_t m = mod.m();
    embed(a, mod);
    const int64_t ainv = embed(Rational(1) / a, mod).value();
    std::vector<int64_t> coeffs(static_cast<size_t>(t.p()));
    int64_t ak = 1 % m;
    for (int64_t j = 0; j < t.p(); ++j) {
        if (j > 0) ak = mul_mod(ak, ainv, m);
        coeffs[j] = mul_mod(t.catalan(j), ak, m);
    }
    return binomial_transform_values(coeffs, mod);
}

int64_t dot_mod(std::span<const int64_t> a, std::span<const int64_t> b, const Modulus& mod) {
    assert(a.size() == b.size());
    const int64_t m = mod.m();
    int64_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc = add_mod(acc, mul_mod(a[i], b[i], m), m);
    return acc;
}

}  // namespace dualcat
