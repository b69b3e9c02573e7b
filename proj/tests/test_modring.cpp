#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualcat/modring.hpp"
#include "dualcat/oracle.hpp"
#include "dualcat/properties.hpp"

using namespace dualcat;

TEST_CASE("modulus construction and parsing") {
    Modulus m(7, 3);
    CHECK(m.p() == 7);
    CHECK(m.e() == 3);
    CHECK(m.m() == 343);
    CHECK(m.str() == "7^3");

    CHECK(Modulus::parse("11").m() == 11);
    CHECK(Modulus::parse("5^2").m() == 25);
    CHECK(Modulus::parse("7^3") == Modulus(7, 3));

    CHECK_THROWS_AS(Modulus(2, 1), not_odd_prime);
    CHECK_THROWS_AS(Modulus(1, 1), not_odd_prime);
    CHECK_THROWS_AS(Modulus(9, 1), not_odd_prime);
    CHECK_THROWS_AS(Modulus(91, 1), not_odd_prime);  // 7 * 13
    CHECK_THROWS_AS(Modulus(5, 0), invalid_modulus);
    CHECK_THROWS_AS(Modulus(5, 4), invalid_modulus);
    CHECK_THROWS_AS(Modulus(4294967311LL, 2), invalid_modulus);  // p^2 > 2^63

    CHECK_THROWS_AS(Modulus::parse(""), parse_error);
    CHECK_THROWS_AS(Modulus::parse("7^"), parse_error);
    CHECK_THROWS_AS(Modulus::parse("7^0"), invalid_modulus);
    CHECK_THROWS_AS(Modulus::parse("x"), parse_error);
    CHECK_THROWS_AS(Modulus::parse("4^2"), not_odd_prime);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(is_prime(499));
    CHECK(is_prime(2097143));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(341));     // 11 * 31, 2-pseudoprime
    CHECK_FALSE(is_prime(561));     // Carmichael
    CHECK_FALSE(is_prime(25326001));
}

TEST_CASE("residue ring operations") {
    Modulus m5(5, 1);
    CHECK((Residue(3, m5) + Residue(4, m5)).value() == 2);
    CHECK(Residue(7, m5).pow(0).value() == 1);
    CHECK(Residue(0, m5).pow(0).value() == 1);  // 0^0 = 1 by convention

    Modulus m125(5, 3);
    CHECK((Residue(2, m125) * Residue(63, m125)).value() == 1);

    CHECK(Residue(-3, m5).value() == 2);  // canonical form on construction
    CHECK((-Residue(0, m5)).value() == 0);
    CHECK((Residue(1, m5) - Residue(3, m5)).value() == 3);

    Modulus m7(7, 1);
    CHECK_THROWS_AS(Residue(1, m5) + Residue(1, m7), modulus_mismatch);
}

TEST_CASE("modular inverse") {
    CHECK(Residue(2, Modulus(5, 1)).inv().value() == 3);
    CHECK(Residue(3, Modulus(7, 2)).inv().value() == 33);  // 3 * 33 = 99 = 2*49 + 1
    CHECK_THROWS_AS(Residue(5, Modulus(5, 2)).inv(), not_invertible);
}

TEST_CASE("rational parsing and arithmetic") {
    Rational q = Rational::parse("-4/3");
    CHECK(q.num() == -4);
    CHECK(q.den() == 3);
    CHECK(q.str() == "-4/3");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("+3/6") == Rational(1, 2));
    CHECK(Rational(4, -2) == Rational(-2));  // denominator sign normalized

    CHECK_THROWS_AS(Rational::parse(""), parse_error);
    CHECK_THROWS_AS(Rational::parse("/3"), parse_error);
    CHECK_THROWS_AS(Rational::parse("4/"), parse_error);
    CHECK_THROWS_AS(Rational::parse("4/-3"), parse_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), parse_error);
    CHECK_THROWS_AS(Rational::parse("4/0"), parse_error);

    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
    CHECK((Rational(1) / Rational(-2)) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), zero_parameter);
}

TEST_CASE("embedding p-adic rationals") {
    CHECK(embed(Rational(-1, 2), Modulus(5, 1)).value() == 2);
    CHECK(embed(Rational(7), Modulus(7, 1)).value() == 0);
    CHECK_THROWS_AS(embed(Rational(1, 3), Modulus(3, 1)), not_p_adic);
    CHECK(embed(Rational(-1, 2), Modulus(5, 3)).value() == 62);  // 2*62 = 124 = -1 mod 125
}

TEST_CASE("least residue") {
    CHECK(least_residue(Rational(-1, 2), 5) == 2);
    CHECK(least_residue(Rational(-1, 3), 7) == 2);
    CHECK(least_residue(Rational(3), 5) == 3);
    CHECK_THROWS_AS(least_residue(Rational(1, 5), 5), not_p_adic);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(Rational(2), 7) == 1);
    CHECK(legendre(Rational(0), 5) == 0);
    CHECK(legendre(Rational(-1), 5) == 1);
    CHECK(legendre(Rational(-1), 7) == -1);
    CHECK(legendre(Rational(10), 5) == 0);
}

TEST_CASE("binomial with rational upper argument") {
    BinomialTables t7{Modulus(7, 1)};
    CHECK(binom(Rational(4), 2, t7).value() == 6);
    CHECK(binom(Rational(4), 2, Modulus(101, 1)).value() == 6);

    // oracle first: C(-1/2, 2) = 3/8 exactly, then reduced
    Rational exact = oracle::exact_binom(Rational(-1, 2), 2);
    CHECK(exact == Rational(3, 8));
    CHECK(binom(Rational(-1, 2), 2, t7) == oracle::reduce(exact, t7.modulus()));
    CHECK(binom(Rational(-1, 2), 2, t7).value() == 3);

    CHECK(binom(Rational(-1, 2), 0, t7).value() == 1);
    CHECK(binom(Rational(5), 6, t7).value() == 0);  // k > natural x
    CHECK_THROWS_AS(binom(Rational(1), 7, t7), k_too_large);
    CHECK_THROWS_AS(binom(Rational(1), -1, t7), k_too_large);
    CHECK_THROWS_AS(binom(Rational(1, 3), 1, Modulus(3, 1)), not_p_adic);

    // tables route and self-contained route agree
    for (int64_t k = 0; k < 7; ++k)
        CHECK(binom(Rational(-1, 2), k, t7) == binom(Rational(-1, 2), k, t7.modulus()));
}

TEST_CASE("binomial tables") {
    BinomialTables t47{Modulus(47, 1)};
    const int64_t expected_catalan[6] = {1, 1, 2, 5, 14, 42};
    for (int64_t k = 0; k < 6; ++k) CHECK(t47.catalan(k) == expected_catalan[k]);

    BinomialTables t5{Modulus(5, 1)};
    CHECK(t5.central(4) == 0);  // C(8,4) = 70 = 14*5

    for (int64_t p : {5, 7, 11, 13, 31}) {
        BinomialTables t{Modulus(p, 1)};
        CHECK(t.fact(p - 1) == p - 1);  // Wilson: (p-1)! = -1 (mod p)
    }

    BinomialTables t7{Modulus(7, 1)};
    CHECK(t7.binom_nat(4, 2) == 6);
    CHECK(t7.binom_nat(4, 5) == 0);
    CHECK(t7.binom_nat(6, 3) == 20 % 7);
    for (int64_t i = 0; i < 7; ++i)
        CHECK(mul_mod(t7.fact(i), t7.inv_fact(i), 7) == 1);
}

TEST_CASE("module invariants") {
    for (auto outcome : {properties::embed_homomorphism(), properties::inverse_exhaustive(),
                         properties::legendre_multiplicative(),
                         properties::legendre_euler_vs_enumeration(),
                         properties::central_binomial_half(),
                         properties::binom_product_identities(),
                         properties::catalan_table_matches_exact()}) {
        INFO(outcome.name, ": ", outcome.first_failure);
        CHECK(outcome.pass());
    }
}
