#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dualcat {

// ---------------------------------------------------------------------------
// Errors. Every domain error carries a stable kind id; sweeps turn these into
// skip records, the CLI turns them into exit code 2.
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
public:
    error(const char* kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    const char* kind() const noexcept { return kind_; }

private:
    const char* kind_;
};

class modulus_mismatch : public error {
public:
    explicit modulus_mismatch(const std::string& msg) : error("ModulusMismatch", msg) {}
};

class not_invertible : public error {
public:
    explicit not_invertible(const std::string& msg) : error("NotInvertible", msg) {}
};

class not_p_adic : public error {
public:
    explicit not_p_adic(const std::string& msg) : error("NotPAdic", msg) {}
};

class k_too_large : public error {
public:
    explicit k_too_large(const std::string& msg) : error("KTooLarge", msg) {}
};

class not_odd_prime : public error {
public:
    explicit not_odd_prime(const std::string& msg) : error("NotOddPrime", msg) {}
};

class invalid_modulus : public error {
public:
    explicit invalid_modulus(const std::string& msg) : error("InvalidModulus", msg) {}
};

class zero_parameter : public error {
public:
    explicit zero_parameter(const std::string& msg) : error("ZeroParameter", msg) {}
};

class wrong_residue_class : public error {
public:
    explicit wrong_residue_class(const std::string& msg) : error("WrongResidueClass", msg) {}
};

class prime_too_small : public error {
public:
    explicit prime_too_small(const std::string& msg) : error("PrimeTooSmall", msg) {}
};

class unknown_statement : public error {
public:
    explicit unknown_statement(const std::string& msg) : error("UnknownStatement", msg) {}
};

class index_out_of_range : public error {
public:
    explicit index_out_of_range(const std::string& msg) : error("IndexOutOfRange", msg) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error("ParseError", msg) {}
};

// ---------------------------------------------------------------------------
// Low-level kernels on canonical representatives in [0, m), m < 2^63.
// ---------------------------------------------------------------------------

inline int64_t add_mod(int64_t a, int64_t b, int64_t m) {
    int64_t c = a - (m - b);
    return c < 0 ? c + m : c;
}

inline int64_t sub_mod(int64_t a, int64_t b, int64_t m) {
    int64_t c = a - b;
    return c < 0 ? c + m : c;
}

inline int64_t neg_mod(int64_t a, int64_t m) {
    return a == 0 ? 0 : m - a;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    using u128 = unsigned __int128;
    return static_cast<int64_t>(u128(a) * u128(b) % u128(m));
}

// pow_mod(0, 0, m) == 1: the 0^0 = 1 convention is load-bearing for the
// y = 0 and y = 1 edge cases of the sequence sums.
int64_t pow_mod(int64_t base, uint64_t exp, int64_t m);

// Extended Euclid on m; throws not_invertible when gcd(a, m) > 1.
int64_t inv_mod(int64_t a, int64_t m);

// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime(uint64_t n);

// ---------------------------------------------------------------------------
// Modulus: an odd prime power p^e with e in {1,2,3}.
// ---------------------------------------------------------------------------

class Modulus {
public:
    explicit Modulus(int64_t p, int e = 1);

    // Accepts "p" or "p^e", e.g. "7^3".
    static Modulus parse(std::string_view text);

    int64_t p() const { return p_; }
    int e() const { return e_; }
    int64_t m() const { return m_; }
    std::string str() const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    int64_t p_;
    int64_t m_;
    int e_;
};

// ---------------------------------------------------------------------------
// Residue: canonical representative in [0, m) together with its modulus.
// ---------------------------------------------------------------------------

class Residue {
public:
    Residue(int64_t value, Modulus mod)
        : mod_(mod), v_(((value % mod.m()) + mod.m()) % mod.m()) {}

    int64_t value() const { return v_; }
    const Modulus& modulus() const { return mod_; }

    Residue operator+(const Residue& rhs) const {
        check_same(rhs);
        return unchecked(add_mod(v_, rhs.v_, mod_.m()), mod_);
    }
    Residue operator-(const Residue& rhs) const {
        check_same(rhs);
        return unchecked(sub_mod(v_, rhs.v_, mod_.m()), mod_);
    }
    Residue operator*(const Residue& rhs) const {
        check_same(rhs);
        return unchecked(mul_mod(v_, rhs.v_, mod_.m()), mod_);
    }
    Residue operator-() const { return unchecked(neg_mod(v_, mod_.m()), mod_); }

    Residue& operator+=(const Residue& rhs) { return *this = *this + rhs; }
    Residue& operator-=(const Residue& rhs) { return *this = *this - rhs; }
    Residue& operator*=(const Residue& rhs) { return *this = *this * rhs; }

    Residue pow(uint64_t exp) const {
        return unchecked(pow_mod(v_, exp, mod_.m()), mod_);
    }
    Residue inv() const;

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    static Residue unchecked(int64_t v, Modulus mod) {
        Residue r(mod);
        r.v_ = v;
        return r;
    }
    explicit Residue(Modulus mod) : mod_(mod), v_(0) {}
    void check_same(const Residue& rhs) const;

    Modulus mod_;
    int64_t v_;
};

// ---------------------------------------------------------------------------
// Rational: exact num/den in lowest terms, den > 0. The carrier for every
// p-adic integer parameter (x, y, a, b, m).
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    // Accepts an optional sign, then "num" or "num/den" with den > 0.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator+(const Rational& rhs) const { return Rational(mpq_class(q_ + rhs.q_)); }
    Rational operator-(const Rational& rhs) const { return Rational(mpq_class(q_ - rhs.q_)); }
    Rational operator*(const Rational& rhs) const { return Rational(mpq_class(q_ * rhs.q_)); }
    Rational operator/(const Rational& rhs) const;
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    std::string str() const;

private:
    mpq_class q_;
};

// ---------------------------------------------------------------------------
// Embedding of p-adic rationals and the small number-theoretic maps.
// ---------------------------------------------------------------------------

// (q.num mod m) * inv(q.den mod m); requires p not dividing q.den.
Residue embed(const Rational& q, const Modulus& mod);

// Least r in [0, p) with x = r (mod p).
int64_t least_residue(const Rational& x, int64_t p);

// Legendre symbol of <a>_p via Euler's criterion; 0 when p divides <a>_p.
int legendre(const Rational& a, int64_t p);

// ---------------------------------------------------------------------------
// Per-prime tables: factorials, inverse factorials, and division-free
// central-binomial / Catalan columns, all mod p^e, indices 0..p-1.
// ---------------------------------------------------------------------------

class BinomialTables {
public:
    explicit BinomialTables(const Modulus& mod);

    const Modulus& modulus() const { return mod_; }
    int64_t p() const { return mod_.p(); }
    int64_t m() const { return mod_.m(); }

    int64_t fact(int64_t i) const { return fact_[check_index(i)]; }
    int64_t inv_fact(int64_t i) const { return inv_fact_[check_index(i)]; }
    int64_t central(int64_t k) const { return central_[check_index(k)]; }
    int64_t catalan(int64_t k) const { return catalan_[check_index(k)]; }

    // 1/k mod p^e for 1 <= k <= p-1.
    int64_t inv_small(int64_t k) const {
        assert(k >= 1);
        return mul_mod(inv_fact_[check_index(k)], fact_[k - 1], mod_.m());
    }

    // C(n, k) mod p^e for 0 <= n <= p-1 (zero for k > n).
    int64_t binom_nat(int64_t n, int64_t k) const {
        assert(n >= 0 && n < p());
        if (k < 0 || k > n) return 0;
        int64_t r = mul_mod(fact_[n], inv_fact_[k], mod_.m());
        return mul_mod(r, inv_fact_[n - k], mod_.m());
    }

private:
    size_t check_index(int64_t i) const {
        assert(i >= 0 && i < p());
        return static_cast<size_t>(i);
    }

    Modulus mod_;
    std::vector<int64_t> fact_, inv_fact_, central_, catalan_;
};

inline BinomialTables build_tables(const Modulus& mod) { return BinomialTables(mod); }

// Residue of x(x-1)...(x-k+1)/k! for rational x; requires k < p and p
// not dividing x.den.
Residue binom(const Rational& x, int64_t k, const BinomialTables& tables);
Residue binom(const Rational& x, int64_t k, const Modulus& mod);

}  // namespace dualcat
