#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qchar/partition.hpp"

using namespace qchar;

TEST_CASE("conjugate") {
    CHECK(Partition{4, 3, 1}.conjugate() == Partition{3, 2, 2, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{3, 3, 3, 1}.conjugate() == Partition{4, 3, 3});
}

TEST_CASE("conjugate is an involution up to size 10") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& la : partitions_of(n, std::max(n, 1)))
            CHECK(la.conjugate().conjugate() == la);
}

TEST_CASE("partitions_of enumeration") {
    auto p42 = partitions_of(4, 2);
    REQUIRE(p42.size() == 3);
    CHECK(p42[0] == Partition{4});
    CHECK(p42[1] == Partition{3, 1});
    CHECK(p42[2] == Partition{2, 2});

    auto p03 = partitions_of(0, 3);
    REQUIRE(p03.size() == 1);
    CHECK(p03[0] == Partition{});

    CHECK(partitions_of(5, 5).size() == 7);
}

TEST_CASE("partition numbers up to 10") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(static_cast<int>(partitions_of(n, std::max(n, 1)).size()) == expected[n]);
}

TEST_CASE("reverse-lexicographic order is decreasing") {
    for (int n = 1; n <= 9; ++n) {
        auto ps = partitions_of(n, n);
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
    }
}

TEST_CASE("dominance examples") {
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK(dominance_leq(Partition{2, 1}, Partition{2, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order for N <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions_of(n, n);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominance_leq(a, b) && dominance_leq(b, c))
                        CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("d_stat") {
    CHECK(d_stat(Partition{1, 1, 1}) == 0);
    CHECK(d_stat(Partition{2, 1}) == 1);
    CHECK(d_stat(Partition{3, 3, 3, 1}) == 9);
}

TEST_CASE("d_stat of shape and conjugate counts aligned cell pairs") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& la : partitions_of(n, std::max(n, 1))) {
            // aligned pairs counted directly over the diagram cells
            long pairs = 0;
            for (int r = 0; r < la.length(); ++r)
                for (int c1 = 0; c1 < la.part(r); ++c1)
                    for (int c2 = c1 + 1; c2 < la.part(r); ++c2) ++pairs;  // same row
            Partition conj = la.conjugate();
            for (int c = 0; c < conj.length(); ++c)
                for (int r1 = 0; r1 < conj.part(c); ++r1)
                    for (int r2 = r1 + 1; r2 < conj.part(c); ++r2) ++pairs;  // same column
            CHECK(d_stat(la) + d_stat(conj) == pairs);
        }
}

TEST_CASE("text round trip") {
    CHECK(Partition::parse("3,3,1") == Partition{3, 3, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("1,0") == Partition{1});
    CHECK(Partition{3, 3, 1}.str() == "3,3,1");
    CHECK(Partition{}.str().empty());
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}
