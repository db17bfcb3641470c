#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qchar/identities.hpp"
#include "qchar/suite.hpp"

using namespace qchar;

TEST_CASE("classical cauchy identity") {
    CHECK(verify_cauchy_schur(1, 1, 3).verified);
    CHECK(verify_cauchy_schur(2, 2, 4).verified);
    CHECK(verify_cauchy_schur(3, 2, 5).verified);
}

TEST_CASE("classical cauchy detects a dropped schur pair") {
    auto rep = testing::cauchy_schur_with_dropped_lambda(2, 2, 4, Partition{1, 1});
    REQUIRE_FALSE(rep.verified);
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(rep.first_mismatch->x_exponents == std::vector<int>{1, 1});
    CHECK(rep.first_mismatch->y_exponents == std::vector<int>{1, 1});
}

TEST_CASE("q-whittaker cauchy identity, single variable") {
    auto rep = verify_cauchy_whittaker(1, 1, 2, 3);
    CHECK(rep.verified);
}

TEST_CASE("q-whittaker cauchy identity at small scale") {
    CHECK(verify_cauchy_whittaker(2, 2, 3, 5).verified);
    CHECK(verify_cauchy_whittaker(1, 2, 3, 4).verified);
}

TEST_CASE("dropping one euler factor is caught at x1x2y1y2 q^1") {
    auto rep = testing::cauchy_whittaker_with_dropped_qfactor(2, 2, 3, 5, Partition{1, 1});
    REQUIRE_FALSE(rep.verified);
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(rep.first_mismatch->x_exponents == std::vector<int>{1, 1});
    CHECK(rep.first_mismatch->y_exponents == std::vector<int>{1, 1});
    CHECK(rep.first_mismatch->q_power == 1);
}

TEST_CASE("cauchy-whittaker rejects n > m") {
    CHECK_THROWS_AS(verify_cauchy_whittaker(3, 2, 3, 3), std::invalid_argument);
}

TEST_CASE("q = 0 whittaker cauchy agrees with the classical identity") {
    CHECK(verify_cauchy_whittaker(2, 2, 3, 0).verified);
    CHECK(verify_cauchy_schur(2, 2, 3).verified);
}

TEST_CASE("wedge identity") {
    CHECK(verify_wedge_identity(1, 2, 4).verified);
    CHECK(verify_wedge_identity(2, 4, 6).verified);
    CHECK(verify_wedge_identity(3, 5, 8).verified);
}

TEST_CASE("graded schur-weyl") {
    CHECK(verify_schur_weyl_current(2, 2, 3).verified);
    CHECK(verify_schur_weyl_current(1, 3, 4).verified);
    CHECK(verify_schur_weyl_current(3, 3, 5).verified);
}

TEST_CASE("bgg reciprocity for small weights") {
    auto r0 = verify_bgg_gl2(Partition{1}, 0);
    CHECK(r0.verified);
    CHECK_FALSE(r0.inconclusive);

    auto r1 = verify_bgg_gl2(Partition{1, 1}, 2);
    CHECK(r1.verified);

    auto r2 = verify_bgg_gl2(Partition{2}, 3);
    CHECK(r2.verified);
    CHECK_THROWS_AS(verify_bgg_gl2(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("bgg with a starved cutoff reports inconclusive, not failure") {
    auto rep = verify_bgg_gl2(Partition{1}, 4, 1);
    CHECK(rep.inconclusive);
    CHECK_FALSE(rep.verified);
}

TEST_CASE("verified at (D,Q) implies verified at smaller parameters") {
    REQUIRE(verify_cauchy_whittaker(2, 2, 3, 5).verified);
    for (int d = 0; d <= 3; ++d)
        for (int k = 0; k <= 5; k += 2) CHECK(verify_cauchy_whittaker(2, 2, d, k).verified);
    REQUIRE(verify_wedge_identity(2, 4, 5).verified);
    for (int d = 1; d <= 4; d += 3)
        for (int k = 0; k <= 5; k += 5) CHECK(verify_wedge_identity(2, d, k).verified);
}

TEST_CASE("sweep identities") {
    CHECK(verify_kato_vs_whittaker(5).verified);
    CHECK(verify_dim_product(4, 3).verified);
    CHECK(verify_sign_multiplicity(4).verified);
    CHECK(verify_q0_schur(4, 3).verified);
    CHECK(verify_q1_elementary(4, 3).verified);
}

TEST_CASE("single-coefficient mutations are detected and localized") {
    std::mt19937_64 rng(20240812);
    for (int trial = 0; trial < 6; ++trial) {
        Perturbation tamper{trial % 2, rng()};
        MutationRecord where;
        auto rep = verify_cauchy_whittaker(2, 2, 2, 3, tamper, &where);
        REQUIRE_FALSE(rep.verified);
        REQUIRE(rep.first_mismatch.has_value());
        CHECK(rep.first_mismatch->x_exponents == where.x_exponents);
        CHECK(rep.first_mismatch->y_exponents == where.y_exponents);
        CHECK(rep.first_mismatch->q_power == where.q_power);
    }
    for (int trial = 0; trial < 4; ++trial) {
        Perturbation tamper{trial % 2, rng()};
        MutationRecord where;
        auto rep = verify_wedge_identity(2, 3, 4, tamper, &where);
        REQUIRE_FALSE(rep.verified);
        REQUIRE(rep.first_mismatch.has_value());
        CHECK(rep.first_mismatch->x_exponents == where.x_exponents);
        CHECK(rep.first_mismatch->q_power == where.q_power);
    }
}

TEST_CASE("suite runner") {
    std::vector<SuiteJob> grid = {
        {"wedge", {{"n", 1}, {"deg", 2}, {"qdeg", 3}}},
        {"sign-multiplicity", {{"max_size", 3}}},
        {"kato-vs-whittaker", {{"max_size", 4}}},
    };
    SuiteSummary summary;
    auto reports = run_suite(grid, 2, &summary);
    REQUIRE(reports.size() == 3);
    CHECK(summary.total == 3);
    CHECK(summary.verified == 3);
    CHECK(summary.failed == 0);
    CHECK(summary.inconclusive == 0);

    CHECK_THROWS_AS(run_job(SuiteJob{"no-such-identity", {}}), std::invalid_argument);
}

TEST_CASE("report json follows the schema") {
    auto rep = verify_wedge_identity(1, 2, 2);
    Json j = to_json(rep);
    CHECK(j.at("identity") == "wedge");
    CHECK(j.at("verified") == true);
    CHECK(j.at("first_mismatch").is_null());
    CHECK(j.at("params").at("n") == 1);
    CHECK(j.contains("elapsed_ms"));

    auto bad = testing::cauchy_schur_with_dropped_lambda(2, 2, 3, Partition{1, 1});
    Json jb = to_json(bad);
    CHECK(jb.at("first_mismatch").at("x_exponents") == Json::array({1, 1}));
    CHECK(jb.at("first_mismatch").at("q_power") == 0);
}
