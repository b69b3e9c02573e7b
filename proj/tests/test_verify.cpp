#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualcat/oracle.hpp"
#include "dualcat/properties.hpp"
#include "dualcat/report.hpp"
#include "dualcat/verify.hpp"

using namespace dualcat;
using namespace dualcat::verify;

namespace {

int64_t oracle_lhs(const std::string& statement, int64_t p,
                   const std::vector<std::pair<std::string, Rational>>& params, int e = 1) {
    return oracle::reduce(oracle::exact_theorem_lhs(statement, p, params), Modulus(p, e)).value();
}

}  // namespace

TEST_CASE("eq1.3 instances") {
    auto rec = check_thm_D(5, Rational(1), Rational(1), Rational(3), Rational(1));
    CHECK(rec.statement == "eq1.3");
    CHECK(rec.lhs == 4);  // 294 mod 5
    CHECK(rec.rhs == 4);  // (-1)^3 * 1^1
    CHECK(rec.pass);
    CHECK(rec.lhs == oracle_lhs("eq1.3", 5,
                                {{"x1", Rational(1)},
                                 {"y1", Rational(1)},
                                 {"x2", Rational(3)},
                                 {"y2", Rational(1)}}));

    // r = 2 < p-1: the zero branch; oracle value 55 = sum (k+1)^2
    auto rec0 = check_thm_D(5, Rational(1), Rational(1), Rational(1), Rational(1));
    CHECK(rec0.lhs == 0);
    CHECK(rec0.rhs == 0);
    CHECK(rec0.pass);

    CHECK_THROWS_AS(check_thm_D(9, Rational(1), Rational(1), Rational(1), Rational(1)),
                    not_odd_prime);
    CHECK_THROWS_AS(check_thm_D(5, Rational(1, 5), Rational(1), Rational(1), Rational(1)),
                    not_p_adic);
}

TEST_CASE("r beyond p-1 falls back to the general expression") {
    // r1 = r2 = 3 at p = 5, so r = 6 > p-1; proved congruence, distinct id
    auto rec = check_thm_D(5, Rational(3), Rational(1), Rational(3), Rational(2));
    CHECK(rec.statement == "eq2.2");
    CHECK(rec.pass);
    CHECK(rec.lhs == oracle_lhs("eq1.3", 5,
                                {{"x1", Rational(3)},
                                 {"y1", Rational(1)},
                                 {"x2", Rational(3)},
                                 {"y2", Rational(2)}}));

    // exhaustively over a small prime: every r > p-1 instance passes
    BinomialTables t{Modulus(7, 1)};
    for (int64_t x1 = 0; x1 < 7; ++x1)
        for (int64_t x2 = 0; x2 < 7; ++x2)
            for (const Rational& y1 : {Rational(1), Rational(2), Rational(-4, 3)})
                for (const Rational& y2 : {Rational(1), Rational(2)}) {
                    if (x1 + x2 <= 6) continue;
                    auto r = check_thm_D(t, Rational(static_cast<long>(x1)), y1,
                                         Rational(static_cast<long>(x2)), y2);
                    CHECK(r.statement == "eq2.2");
                    CHECK(r.pass);
                }
}

TEST_CASE("eq1.4 instances") {
    auto rec = check_thm_S(5, Rational(2), Rational(1), Rational(2), Rational(1));
    CHECK(rec.lhs == 1);  // 221 mod 5
    CHECK(rec.rhs == 1);  // legendre(-1, 5)
    CHECK(rec.pass);
    CHECK(rec.lhs == oracle_lhs("eq1.4", 5,
                                {{"x1", Rational(2)},
                                 {"y1", Rational(1)},
                                 {"x2", Rational(2)},
                                 {"y2", Rational(1)}}));

    auto rec0 = check_thm_S(5, Rational(1), Rational(1), Rational(2), Rational(1));
    CHECK(rec0.rhs == 0);  // r1 != (p-1)/2
    CHECK(rec0.pass);
}

TEST_CASE("eq1.6 instances") {
    auto rec = check_thm_catalan(5, Rational(1));
    CHECK(rec.lhs == 1);  // 2856 mod 5
    CHECK(rec.rhs == 1);  // 4*1 - 5*0 + 2
    CHECK(rec.pass);

    CHECK_THROWS_AS(check_thm_catalan(5, Rational(0)), zero_parameter);
    CHECK_THROWS_AS(check_thm_catalan(5, Rational(5)), not_p_adic);
    CHECK_THROWS_AS(check_thm_catalan(5, Rational(1, 5)), not_p_adic);
}

TEST_CASE("eq2.3 instances") {
    BinomialTables t5{Modulus(5, 1)};
    CHECK(check_cor_ab(t5, Rational(1), Rational(1)).rhs == 1);  // legendre(-1, 5)

    auto rec = check_cor_ab(5, Rational(1), Rational(2));
    CHECK(rec.rhs == 4);  // legendre(-2, 5) = -1
    CHECK(rec.pass);
    CHECK(rec.lhs == oracle_lhs("eq2.3", 5, {{"a", Rational(1)}, {"b", Rational(2)}}));

    for (int64_t p : {5, 7, 11, 13}) {
        auto conj = check_cor_ab(p, Rational(2), Rational(-6));
        CHECK(conj.pass);
        CHECK(conj.rhs == Residue(legendre(Rational(3), p), Modulus(p, 1)).value());
    }
    CHECK_THROWS_AS(check_cor_ab(5, Rational(0), Rational(1)), zero_parameter);
    CHECK_THROWS_AS(check_cor_ab(5, Rational(2), Rational(10)), not_p_adic);
}

TEST_CASE("cor2.4 instances") {
    auto rec = check_cor_halves_thirds(7, Rational(1), Rational(1));
    CHECK(rec.rhs == 0);
    CHECK(rec.lhs == 0);
    CHECK(rec.pass);
    CHECK(rec.lhs == oracle_lhs("cor2.4", 7, {{"a", Rational(1)}, {"b", Rational(1)}}));

    CHECK(check_cor_halves_thirds(13, Rational(2), Rational(3)).pass);
    CHECK(check_cor_halves_thirds(13, Rational(0), Rational(-1, 2)).pass);
    CHECK_THROWS_AS(check_cor_halves_thirds(5, Rational(1), Rational(1)), wrong_residue_class);
}

TEST_CASE("cor2.5 instances") {
    auto rec = check_cor_34(5, Rational(1), Rational(1));
    CHECK(rec.rhs == 0);
    CHECK(rec.pass);
    CHECK(rec.lhs == oracle_lhs("cor2.5", 5, {{"a", Rational(1)}, {"b", Rational(1)}}));

    CHECK(check_cor_34(7, Rational(2), Rational(3)).pass);
    CHECK_THROWS_AS(check_cor_34(3, Rational(1), Rational(1)), prime_too_small);
    CHECK_THROWS_AS(check_cor_34(7, Rational(7), Rational(1)), not_p_adic);
}

TEST_CASE("lemma3.1 instances") {
    auto rec = check_lemma_catalan(5, Rational(1));
    CHECK(rec.lhs == 3);  // C_0..C_4 sum to 23
    CHECK(rec.rhs == 3);
    CHECK(rec.pass);

    for (int64_t p : {5, 7, 11, 13}) {
        BinomialTables t{Modulus(p, 1)};
        CHECK(lemma_catalan_rhs(t, Rational(4)) == 1);  // 4-m = 0 kills the symbol term
        CHECK(check_lemma_catalan(t, Rational(4)).pass);
    }

    auto rec7 = check_lemma_catalan(7, Rational(2));
    CHECK(rec7.rhs == 6);  // legendre(-4, 7) = -1
    CHECK(rec7.pass);
    CHECK(rec7.lhs == oracle_lhs("lemma3.1", 7, {{"m", Rational(2)}}));

    CHECK_THROWS_AS(check_lemma_catalan(5, Rational(0)), zero_parameter);
}

TEST_CASE("kw-p3 instances") {
    auto rec5 = check_kw_mod_p3(5);
    CHECK(rec5.e == 3);
    CHECK(rec5.rhs == 1);
    CHECK(rec5.pass);
    CHECK(rec5.lhs == oracle_lhs("kw-p3", 5, {}, 3));

    CHECK(check_kw_mod_p3(7).rhs == 342);    // p = 3 (mod 4)
    CHECK(check_kw_mod_p3(11).rhs == 1330);
    CHECK_THROWS_AS(check_kw_mod_p3(3), prime_too_small);
    CHECK_THROWS_AS(check_kw_mod_p3(4), not_odd_prime);
}

TEST_CASE("telescoping identity hand expansions") {
    auto lhs_sum = [](int64_t n, int64_t i, int64_t j) {
        mpz_class sum(0);
        for (int64_t k = 0; k < n; ++k)
            sum += oracle::exact_binom_int(mpz_class(k), i) *
                   oracle::exact_binom_int(mpz_class(k + j), j);
        return sum;
    };
    auto rhs_closed = [](int64_t n, int64_t i, int64_t j) {
        mpq_class v = mpq_class(n) / (i + j + 1) *
                      (oracle::exact_binom_int(mpz_class(n - 1), i) *
                       oracle::exact_binom_int(mpz_class(-n - 1), j));
        if (j % 2 == 1) v = -v;
        return v;
    };
    CHECK(lhs_sum(2, 0, 0) == 2);
    CHECK(rhs_closed(2, 0, 0) == 2);
    CHECK(lhs_sum(3, 1, 1) == 8);  // 0 + 2 + 6
    CHECK(oracle::exact_binom_int(mpz_class(-4), 1) == -4);
    CHECK(rhs_closed(3, 1, 1) == 8);  // (-1) * 3/3 * C(2,1) * C(-4,1)
    for (int64_t n : {1, 2, 5, 9}) {
        CHECK(lhs_sum(n, n - 1, 0) == 1);  // single surviving term
        CHECK(rhs_closed(n, n - 1, 0) == 1);
    }
}

TEST_CASE("telescoping identity") {
    auto records = check_lemma_telescope(12);
    REQUIRE(records.size() == 12);
    for (int64_t n = 1; n <= 12; ++n) {
        const auto& rec = records[static_cast<size_t>(n - 1)];
        CHECK(rec.statement == "lemma2.2");
        CHECK(rec.pass);
        CHECK(rec.lhs == n * n);
        CHECK(rec.rhs == n * n);
        CHECK(rec.params.at(0).second == Rational(static_cast<long>(n)));
    }
    CHECK_THROWS_AS(check_lemma_telescope(0), index_out_of_range);
}

TEST_CASE("sweep enumeration and summary") {
    SweepPlan plan;
    plan.statements = {"eq1.3"};
    plan.p_min = 3;
    plan.p_max = 5;
    plan.x_grid = {Rational(0), Rational(1)};
    plan.y_grid = {Rational(0), Rational(1)};
    auto result = run_sweep(plan);
    CHECK(result.records.size() == 32);  // 2 primes * 4 x-pairs * 4 y-pairs
    CHECK(result.summary.passed == 32);
    CHECK(result.summary.failed == 0);
    CHECK(result.summary.skipped == 0);
    // deterministic order: p ascending first
    CHECK(result.records.front().p == 3);
    CHECK(result.records.back().p == 5);

    SweepPlan empty = plan;
    empty.p_min = 24;
    empty.p_max = 28;
    auto none = run_sweep(empty);
    CHECK(none.records.empty());
    CHECK(none.summary.passed == 0);
    CHECK(none.summary.skipped == 0);

    SweepPlan bad = plan;
    bad.statements = {"eq9.9"};
    CHECK_THROWS_AS(run_sweep(bad), unknown_statement);
}

TEST_CASE("sweep skip records") {
    SweepPlan plan;
    plan.statements = {"cor2.4"};
    plan.p_min = 5;
    plan.p_max = 5;
    plan.a_grid = {Rational(1)};
    plan.b_grid = {Rational(1), Rational(2)};
    auto result = run_sweep(plan);
    REQUIRE(result.records.size() == 2);
    for (const auto& rec : result.records) {
        CHECK(rec.skipped());
        CHECK(rec.skip_reason == "WrongResidueClass");
        CHECK_FALSE(rec.pass);
    }
    CHECK(result.summary.skipped == 2);

    SweepPlan kw;
    kw.statements = {"kw-p3"};
    kw.p_min = 3;
    kw.p_max = 7;
    auto kwres = run_sweep(kw);
    REQUIRE(kwres.records.size() == 3);
    CHECK(kwres.records[0].skip_reason == "PrimeTooSmall");  // p = 3
    CHECK(kwres.records[1].pass);                            // p = 5
    CHECK(kwres.records[2].pass);                            // p = 7

    SweepPlan mixed;
    mixed.statements = {"eq1.6"};
    mixed.p_min = 5;
    mixed.p_max = 5;
    mixed.a_grid = {Rational(0), Rational(5), Rational(1, 5), Rational(2)};
    auto mres = run_sweep(mixed);
    REQUIRE(mres.records.size() == 4);  // sorted grid: 0, 1/5, 2, 5
    CHECK(mres.records[0].skip_reason == "ZeroParameter");
    CHECK(mres.records[1].skip_reason == "NotPAdic");
    CHECK(mres.records[2].pass);
    CHECK(mres.records[3].skip_reason == "NotPAdic");
}

TEST_CASE("sweep output is independent of jobs") {
    SweepPlan plan;
    plan.statements = {"eq1.3", "eq1.4", "lemma3.1", "kw-p3"};
    plan.p_min = 3;
    plan.p_max = 13;
    plan.x_grid = {Rational(0), Rational(2)};
    plan.y_grid = {Rational(1), Rational(-4, 3)};
    plan.m_grid = {Rational(1), Rational(3), Rational(-2)};
    plan.include_rational_specials = true;
    plan.jobs = 1;
    auto serial = run_sweep(plan);
    plan.jobs = 4;
    auto parallel = run_sweep(plan);
    CHECK(to_json(serial).dump() == to_json(parallel).dump());
    CHECK(serial.records.size() == parallel.records.size());
}

TEST_CASE("sweep grids are sorted and deduplicated") {
    SweepPlan plan;
    plan.statements = {"eq1.6"};
    plan.p_min = 7;
    plan.p_max = 7;
    plan.a_grid = {Rational(2), Rational(1), Rational(2), Rational(4, 2)};
    auto result = run_sweep(plan);
    REQUIRE(result.records.size() == 2);
    CHECK(result.records[0].params.at(0).second == Rational(1));
    CHECK(result.records[1].params.at(0).second == Rational(2));
}

TEST_CASE("record serialization") {
    auto rec = check_thm_catalan(5, Rational(1));
    auto j = to_json(rec);
    CHECK(j.dump() ==
          R"({"statement":"eq1.6","p":5,"e":1,"params":{"a":"1"},"lhs":1,"rhs":1,"pass":true,"skip_reason":null})");

    SweepPlan plan;
    plan.statements = {"cor2.4"};
    plan.p_min = 5;
    plan.p_max = 5;
    plan.a_grid = {Rational(-1, 2)};
    plan.b_grid = {Rational(1)};
    auto skipped = run_sweep(plan);
    auto js = to_json(skipped.records.at(0));
    CHECK(js["skip_reason"] == "WrongResidueClass");
    CHECK(js["params"]["a"] == "-1/2");

    std::string csv = to_csv({rec});
    CHECK(csv ==
          "statement,p,e,params,lhs,rhs,pass,skip_reason\n"
          "eq1.6,5,1,a=1,1,1,true,\n");

    std::string table = to_table({rec});
    CHECK(table.find("eq1.6") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);
}

TEST_CASE("statement catalog") {
    CHECK(statement_ids().size() == 8);
    CHECK(is_known_statement("eq1.3"));
    CHECK(is_known_statement("kw-p3"));
    CHECK_FALSE(is_known_statement("eq2.2"));  // derived id, not directly plannable
    CHECK_FALSE(is_known_statement("nope"));
}

TEST_CASE("module invariants") {
    for (auto outcome :
         {properties::thm_d_rhs_specialization(), properties::thm_s_rhs_specialization(),
          properties::catalan_rhs_specializations(), properties::cor_rhs_zero_cases(),
          properties::telescope_consistency()}) {
        INFO(outcome.name, ": ", outcome.first_failure);
        CHECK(outcome.pass());
    }
}
