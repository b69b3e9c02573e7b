#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualcat/oracle.hpp"
#include "dualcat/properties.hpp"
#include "dualcat/sequences.hpp"

using namespace dualcat;

namespace {

const std::vector<Rational>& rational_specials() {
    static const std::vector<Rational> xs = {Rational(-1, 2), Rational(-1, 3), Rational(-2, 3),
                                             Rational(-1, 4), Rational(-3, 4), Rational(-1, 6)};
    return xs;
}

}  // namespace

TEST_CASE("d_eval basics") {
    BinomialTables t{Modulus(13, 1)};
    for (const Rational& x : rational_specials()) {
        for (const Rational& y : {Rational(0), Rational(2), Rational(-4, 3)}) {
            CHECK(d_eval(0, x, y, t).value() == 1);
            CHECK(d_eval(1, x, y, t) == embed(Rational(1) + x * y, t.modulus()));
        }
    }
    CHECK_THROWS_AS(d_eval(13, Rational(1), Rational(1), t), k_too_large);
    CHECK_THROWS_AS(d_eval(1, Rational(1, 13), Rational(1), t), not_p_adic);
    CHECK_THROWS_AS(d_eval(1, Rational(1), Rational(1, 13), t), not_p_adic);
}

TEST_CASE("d at y = 1 is the Vandermonde binomial") {
    // exact: D_n(x, 1) = C(n+x, n)
    for (int64_t n = 0; n <= 10; ++n) {
        for (const Rational& x : rational_specials()) {
            CHECK(oracle::exact_d(n, x, Rational(1)) ==
                  oracle::exact_binom(x + Rational(static_cast<long>(n)), n));
        }
        CHECK(oracle::exact_d(n, Rational(3), Rational(1)) ==
              oracle::exact_binom(Rational(3 + static_cast<long>(n)), n));
    }
    // fast path agrees after reduction
    BinomialTables t{Modulus(13, 1)};
    for (int64_t n = 0; n <= 10; ++n)
        for (const Rational& x : rational_specials())
            CHECK(d_eval(n, x, Rational(1), t) ==
                  oracle::reduce(oracle::exact_binom(x + Rational(static_cast<long>(n)), n),
                                 t.modulus()));
}

TEST_CASE("d at x = -1/2 sums central binomials") {
    // D_k(-1/2, -4/m) = sum_j C(k,j) C(2j,j) / m^j
    BinomialTables t{Modulus(11, 1)};
    for (const Rational& m : {Rational(1), Rational(2), Rational(-6), Rational(3)}) {
        for (int64_t k = 0; k < 11; ++k) {
            mpq_class rhs(0), mj(1);
            for (int64_t j = 0; j <= k; ++j) {
                if (j > 0) mj *= m.raw();
                mpz_class cnj, c2j;
                mpz_bin_uiui(cnj.get_mpz_t(), static_cast<unsigned long>(k),
                             static_cast<unsigned long>(j));
                mpz_bin_uiui(c2j.get_mpz_t(), static_cast<unsigned long>(2 * j),
                             static_cast<unsigned long>(j));
                rhs += cnj * c2j / mj;
            }
            CHECK(d_eval(k, Rational(-1, 2), Rational(-4) / m, t) ==
                  oracle::reduce(Rational(rhs), t.modulus()));
        }
    }
}

TEST_CASE("ljunggren form") {
    BinomialTables t7{Modulus(7, 1)};
    CHECK(d_eval_ljunggren(2, Rational(1), Rational(2), t7).value() == 5);
    CHECK(d_eval(2, Rational(1), Rational(2), t7).value() == 5);
    for (const Rational& x : rational_specials()) {
        CHECK(d_eval_ljunggren(0, x, Rational(2), t7).value() == 1);
        // at y = 1 only the k = n term survives: C(x+n, n)
        for (int64_t n = 0; n < 7; ++n)
            CHECK(d_eval_ljunggren(n, x, Rational(1), t7) ==
                  oracle::reduce(oracle::exact_binom(x + Rational(static_cast<long>(n)), n),
                                 t7.modulus()));
    }
}

TEST_CASE("s_eval basics") {
    BinomialTables t{Modulus(11, 1)};
    for (const Rational& x : rational_specials())
        CHECK(s_eval(0, x, Rational(-4, 3), t).value() == 1);

    // S_n(2, 1) = 3n^2 - 9n + 1: C(2,k) truncates the sum at k = 2
    const long expected[5] = {1, -5, -5, 1, 13};
    for (int64_t n = 0; n <= 4; ++n)
        CHECK(oracle::exact_s(n, Rational(2), Rational(1)) == Rational(expected[n]));
    for (int64_t p : {5, 7, 11}) {
        BinomialTables tp{Modulus(p, 1)};
        for (int64_t n = 0; n < p; ++n) {
            Rational poly(3 * n * n - 9 * n + 1);
            CHECK(s_eval(n, Rational(2), Rational(1), tp) == embed(poly, tp.modulus()));
        }
    }
}

TEST_CASE("j2 values") {
    CHECK(oracle::exact_j2(0) == Rational(1));
    CHECK(oracle::exact_j2(1) == Rational(3, 4));
    CHECK(oracle::exact_j2(2) == Rational(41, 64));  // 1 - 1/2 + 9/64, oracle-confirmed

    for (int e : {1, 3}) {
        BinomialTables t{Modulus(7, e)};
        for (int64_t n = 0; n < 7; ++n) {
            CHECK(j2_eval(n, t) == s_eval(n, Rational(-1, 2), Rational(-1), t));
            CHECK(j2_eval(n, t) == oracle::reduce(oracle::exact_j2(n), t.modulus()));
        }
    }
}

TEST_CASE("catalan inner sums") {
    BinomialTables t{Modulus(59, 1)};
    for (const Rational& a : {Rational(1), Rational(2), Rational(-1, 2)})
        CHECK(catalan_inner(0, a, t).value() == 1);
    CHECK(catalan_inner(2, Rational(1), t).value() == 5);
    CHECK(catalan_inner(4, Rational(1), t).value() == 51);
    CHECK(oracle::exact_catalan_inner(4, Rational(1)) == Rational(51));

    CHECK_THROWS_AS(catalan_inner(2, Rational(0), t), zero_parameter);
    CHECK_THROWS_AS(catalan_inner(2, Rational(59), t), not_p_adic);
    CHECK_THROWS_AS(catalan_inner(2, Rational(1, 59), t), not_p_adic);
}

TEST_CASE("dual transform") {
    std::vector<Rational> delta = {Rational(1), Rational(0), Rational(0), Rational(0)};
    for (int64_t n = 0; n < 4; ++n) CHECK(dual_transform(delta, n) == Rational(1));

    // a_k = (-1)^k C(3,k): dual is C(n+3, n)
    std::vector<Rational> alt;
    for (int64_t k = 0; k <= 3; ++k)
        alt.push_back(k % 2 == 0 ? oracle::exact_binom(Rational(3), k)
                                 : -oracle::exact_binom(Rational(3), k));
    CHECK(dual_transform(alt, 2) == Rational(10));  // C(5,2)

    std::vector<Rational> seq = {Rational(1), Rational(2), Rational(5)};
    std::vector<Rational> dual;
    for (int64_t n = 0; n < 3; ++n) dual.push_back(dual_transform(seq, n));
    for (int64_t n = 0; n < 3; ++n) CHECK(dual_transform(dual, n) == seq[n]);

    CHECK_THROWS_AS(dual_transform(seq, 3), index_out_of_range);
    CHECK_THROWS_AS(dual_transform(seq, -1), index_out_of_range);
}

TEST_CASE("sweep vectors agree with scalar evaluation") {
    for (int64_t p : {5, 13}) {
        for (int e : {1, 2, 3}) {
            BinomialTables t{Modulus(p, e)};
            const Rational x(-1, 2), y(-4, 3);
            auto dv = d_values(x, y, t);
            auto sv = s_values(x, y, t);
            auto jv = j2_values(t);
            auto cv = catalan_inner_values(Rational(2), t);
            REQUIRE(dv.size() == static_cast<size_t>(p));
            for (int64_t n = 0; n < p; ++n) {
                CHECK(dv[n] == d_eval(n, x, y, t).value());
                CHECK(sv[n] == s_eval(n, x, y, t).value());
                CHECK(jv[n] == j2_eval(n, t).value());
                CHECK(cv[n] == catalan_inner(n, Rational(2), t).value());
            }
        }
    }
}

TEST_CASE("module invariants") {
    for (auto outcome : {properties::ljunggren_equality(), properties::dual_involution(),
                         properties::d_truncation(), properties::sequences_match_oracle()}) {
        INFO(outcome.name, ": ", outcome.first_failure);
        CHECK(outcome.pass());
    }
}
