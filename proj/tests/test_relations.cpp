#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qchar/relations.hpp"

using namespace qchar;

namespace {

// hand-rolled convolution for n = 2: P_m = sum_{a+b=m} (z11^a z22^b - z12^a z21^b),
// minus 1 at m = 0.  Independent of the determinant expansion code path.
MatPoly sl2_oracle(int m) {
    MatPoly p;
    for (int a = 0; a <= m; ++a) {
        p.add({MatVar{1, 1, a}, MatVar{2, 2, m - a}}, 1);
        p.add({MatVar{1, 2, a}, MatVar{2, 1, m - a}}, -1);
    }
    if (m == 0) p.add({}, -1);
    return p;
}

}  // namespace

TEST_CASE("sl2 relation series P0 and P1 match the classical expansion") {
    auto ps = current_group_relations(2, 2);
    REQUIRE(ps.size() == 3);

    MatPoly p0;
    p0.add({MatVar{1, 1, 0}, MatVar{2, 2, 0}}, 1);
    p0.add({MatVar{1, 2, 0}, MatVar{2, 1, 0}}, -1);
    p0.add({}, -1);
    CHECK(ps[0] == p0);

    MatPoly p1;
    p1.add({MatVar{1, 1, 0}, MatVar{2, 2, 1}}, 1);
    p1.add({MatVar{1, 1, 1}, MatVar{2, 2, 0}}, 1);
    p1.add({MatVar{1, 2, 0}, MatVar{2, 1, 1}}, -1);
    p1.add({MatVar{1, 2, 1}, MatVar{2, 1, 0}}, -1);
    CHECK(ps[1] == p1);
}

TEST_CASE("sl2 relation series matches the convolution oracle") {
    auto ps = current_group_relations(2, 4);
    for (int m = 0; m <= 4; ++m) CHECK(ps[static_cast<std::size_t>(m)] == sl2_oracle(m));
}

TEST_CASE("P2 term count: six products with superscripts (0,2),(1,1),(2,0)") {
    auto ps = current_group_relations(2, 2);
    CHECK(ps[2].terms().size() == 6);
    // the diagonal products carry +1, the antidiagonal ones -1
    for (const auto& [mono, c] : ps[2].terms()) {
        REQUIRE(mono.size() == 2);
        CHECK(mono[0].k + mono[1].k == 2);
        CHECK(c == (mono[0].j == 1 ? 1 : -1));
    }
}

TEST_CASE("n = 3 determinant structure") {
    auto ps = current_group_relations(3, 1);
    CHECK(ps[0].terms().size() == 7);  // 6 Leibniz terms + the constant
    CHECK(ps[1].terms().size() == 18); // each Leibniz term convolves in 3 spots
}

TEST_CASE("range checks") {
    CHECK_THROWS_AS(current_group_relations(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(current_group_relations(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(current_group_relations(2, -1), std::invalid_argument);
}

TEST_CASE("rendering is deterministic and readable") {
    auto ps = current_group_relations(2, 0);
    CHECK(ps[0].str() == "-1 + z[1,1]^(0)*z[2,2]^(0) - z[1,2]^(0)*z[2,1]^(0)");
}
