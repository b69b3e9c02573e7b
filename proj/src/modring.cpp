#include "dualcat/modring.hpp"

#include <array>

namespace dualcat {

int64_t pow_mod(int64_t base, uint64_t exp, int64_t m) {
    int64_t result = 1;
    base %= m;
    if (base < 0) base += m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

int64_t inv_mod(int64_t a, int64_t m) {
    a %= m;
    if (a < 0) a += m;
    int64_t r0 = a, r1 = m;
    int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw not_invertible(std::to_string(a) + " has no inverse mod " + std::to_string(m));
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mul = [n](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((unsigned __int128)a * b % n);
    };
    auto pown = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    };
    // This base set is a proven witness set for all n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pown(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Modulus
// ---------------------------------------------------------------------------

Modulus::Modulus(int64_t p, int e) : p_(p), e_(e) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<uint64_t>(p)))
        throw not_odd_prime(std::to_string(p) + " is not an odd prime");
    if (e < 1 || e > 3)
        throw invalid_modulus("exponent must be 1, 2 or 3, got " + std::to_string(e));
    using u128 = unsigned __int128;
    u128 m = 1;
    for (int i = 0; i < e; ++i) m *= static_cast<u128>(p);
    if (m >= (u128(1) << 63))
        throw invalid_modulus("p^e overflows: p=" + std::to_string(p) + " e=" + std::to_string(e));
    m_ = static_cast<int64_t>(m);
}

Modulus Modulus::parse(std::string_view text) {
    size_t caret = text.find('^');
    std::string_view p_part = text.substr(0, caret);
    if (p_part.empty() || p_part.size() > 18)
        throw parse_error("bad modulus literal '" + std::string(text) + "'");
    int64_t p = 0;
    for (char c : p_part) {
        if (c < '0' || c > '9')
            throw parse_error("bad modulus literal '" + std::string(text) + "'");
        p = p * 10 + (c - '0');
    }
    int e = 1;
    if (caret != std::string_view::npos) {
        std::string_view e_part = text.substr(caret + 1);
        if (e_part.size() != 1 || e_part[0] < '0' || e_part[0] > '9')
            throw parse_error("bad modulus literal '" + std::string(text) + "'");
        e = e_part[0] - '0';
    }
    return Modulus(p, e);
}

std::string Modulus::str() const {
    return e_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(e_);
}

// ---------------------------------------------------------------------------
// Residue
// ---------------------------------------------------------------------------

void Residue::check_same(const Residue& rhs) const {
    if (mod_ != rhs.mod_)
        throw modulus_mismatch("mixed moduli " + mod_.str() + " and " + rhs.mod_.str());
}

Residue Residue::inv() const {
    if (v_ % mod_.p() == 0)
        throw not_invertible(std::to_string(v_) + " is divisible by p=" + std::to_string(mod_.p()));
    return unchecked(inv_mod(v_, mod_.m()), mod_);
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(long num, long den) {
    if (den == 0) throw zero_parameter("rational with zero denominator");
    if (den < 0) {  // gmpxx reads the two-argument denominator as unsigned
        num = -num;
        den = -den;
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw zero_parameter("rational with zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw zero_parameter("division by zero rational");
    return Rational(mpq_class(q_ / rhs.q_));
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw parse_error("bad rational literal '" + std::string(text) + "'");
    };
    std::string_view rest = text;
    std::string sign;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        if (rest[0] == '-') sign = "-";
        rest.remove_prefix(1);
    }
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    size_t slash = rest.find('/');
    std::string_view num_part = rest.substr(0, slash);
    if (!all_digits(num_part)) return fail();
    mpz_class num(sign + std::string(num_part));
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_part = rest.substr(slash + 1);
        if (!all_digits(den_part)) return fail();
        den = mpz_class(std::string(den_part));
        if (den == 0) return fail();
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

// ---------------------------------------------------------------------------
// Embedding and symbols
// ---------------------------------------------------------------------------

namespace {

int64_t mod_of_mpz(const mpz_class& z, int64_t m) {
    return static_cast<int64_t>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(m)));
}

void require_p_adic(const Rational& q, int64_t p) {
    if (mpz_fdiv_ui(q.den().get_mpz_t(), static_cast<unsigned long>(p)) == 0)
        throw not_p_adic(q.str() + " is not p-adic at p=" + std::to_string(p));
}

}  // namespace

Residue embed(const Rational& q, const Modulus& mod) {
    require_p_adic(q, mod.p());
    int64_t num_m = mod_of_mpz(q.num(), mod.m());
    int64_t den_m = mod_of_mpz(q.den(), mod.m());
    return Residue(mul_mod(num_m, inv_mod(den_m, mod.m()), mod.m()), mod);
}

int64_t least_residue(const Rational& x, int64_t p) {
    return embed(x, Modulus(p, 1)).value();
}

int legendre(const Rational& a, int64_t p) {
    int64_t r = least_residue(a, p);
    if (r == 0) return 0;
    int64_t t = pow_mod(r, static_cast<uint64_t>((p - 1) / 2), p);
    assert(t == 1 || t == p - 1);
    return t == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// BinomialTables
// ---------------------------------------------------------------------------

BinomialTables::BinomialTables(const Modulus& mod) : mod_(mod) {
    const int64_t p = mod.p();
    const int64_t m = mod.m();
    const size_t n = static_cast<size_t>(p);

    fact_.resize(n);
    inv_fact_.resize(n);
    fact_[0] = 1 % m;
    for (size_t i = 1; i < n; ++i) fact_[i] = mul_mod(fact_[i - 1], static_cast<int64_t>(i), m);
    inv_fact_[n - 1] = inv_mod(fact_[n - 1], m);
    for (size_t i = n - 1; i > 0; --i)
        inv_fact_[i - 1] = mul_mod(inv_fact_[i], static_cast<int64_t>(i), m);

    // Central binomials and Catalan numbers come out of a rolling Pascal row
    // with additions only: C(2k,k) is divisible by p for (p-1)/2 < k < p and
    // C_k = C(2k,k)/(k+1) hits p | k+1 at k = p-1, so dividing is not an
    // option at e > 1.
    central_.resize(n);
    catalan_.resize(n);
    std::vector<int64_t> row(2 * n - 1, 0);
    row[0] = 1 % m;
    central_[0] = 1 % m;
    catalan_[0] = 1 % m;
    for (int64_t r = 1; r <= 2 * static_cast<int64_t>(n) - 2; ++r) {
        row[r] = 1 % m;
        for (int64_t j = r - 1; j >= 1; --j) row[j] = add_mod(row[j], row[j - 1], m);
        if (r % 2 == 0) {
            int64_t k = r / 2;
            central_[k] = row[k];
            catalan_[k] = sub_mod(row[k], row[k - 1], m);
        }
    }
}

// ---------------------------------------------------------------------------
// Binomial with rational upper argument
// ---------------------------------------------------------------------------

namespace {

// Falling-factorial product x(x-1)...(x-k+1) mod m, with x = num/den.
int64_t falling_product(const Rational& x, int64_t k, int64_t m) {
    int64_t num_m = mod_of_mpz(x.num(), m);
    int64_t den_m = mod_of_mpz(x.den(), m);
    int64_t acc = 1 % m;
    for (int64_t i = 0; i < k; ++i)
        acc = mul_mod(acc, sub_mod(num_m, mul_mod(i % m, den_m, m), m), m);
    int64_t den_inv = inv_mod(den_m, m);
    return mul_mod(acc, pow_mod(den_inv, static_cast<uint64_t>(k), m), m);
}

void check_binom_args(const Rational& x, int64_t k, int64_t p) {
    if (k < 0 || k >= p)
        throw k_too_large("binomial lower index " + std::to_string(k) +
                          " out of range for p=" + std::to_string(p));
    require_p_adic(x, p);
}

}  // namespace

Residue binom(const Rational& x, int64_t k, const BinomialTables& tables) {
    const Modulus& mod = tables.modulus();
    check_binom_args(x, k, mod.p());
    int64_t r = mul_mod(falling_product(x, k, mod.m()), tables.inv_fact(k), mod.m());
    return Residue(r, mod);
}

Residue binom(const Rational& x, int64_t k, const Modulus& mod) {
    check_binom_args(x, k, mod.p());
    int64_t fact_k = 1 % mod.m();
    for (int64_t i = 2; i <= k; ++i) fact_k = mul_mod(fact_k, i, mod.m());
    int64_t r = mul_mod(falling_product(x, k, mod.m()), inv_mod(fact_k, mod.m()), mod.m());
    return Residue(r, mod);
}

}  // namespace dualcat
