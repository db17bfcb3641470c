#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qchar/kato.hpp"

using namespace qchar;

TEST_CASE("snake rule golden values") {
    CHECK(column_k({1, 2, 8, 10}, {4, 5, 9}) == 0);
    CHECK(column_k({1, 2, 8, 10}, {3, 6, 7}) == 2);
    CHECK(column_k({4, 5, 9}, {3, 6, 7}) == 3);
}

TEST_CASE("snake rule errors") {
    CHECK_THROWS_AS(column_k({1}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(column_k({1, 2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(column_k({1, 2}, {1, 3}), std::invalid_argument);
}

TEST_CASE("filling degree of the worked example") {
    Filling f;
    f.shape = Partition{3, 3, 3, 1};
    f.columns = {{1, 2, 8, 10}, {4, 5, 9}, {3, 6, 7}};
    CHECK(filling_degree(f) == 5);
}

TEST_CASE("filling degree simple cases") {
    Filling single;
    single.shape = Partition{1, 1, 1};
    single.columns = {{1, 2, 3}};
    CHECK(filling_degree(single) == 0);

    Filling f21;
    f21.shape = Partition{2, 1};
    f21.columns = {{2, 3}, {1}};
    CHECK(filling_degree(f21) == 1);
}

TEST_CASE("enumeration counts") {
    CHECK(all_fillings(Partition{1, 1}).size() == 1);
    CHECK(all_fillings(Partition{2}).size() == 2);
    CHECK(all_fillings(Partition{2, 1}).size() == 3);
    for (int size = 0; size <= 6; ++size)
        for (const auto& la : partitions_of(size, std::max(size, 1)))
            CHECK(Int(static_cast<long>(all_fillings(la).size())) == filling_count(la));
}

TEST_CASE("enumeration matches a brute-force permutation filter") {
    for (int size = 1; size <= 6; ++size)
        for (const auto& la : partitions_of(size, size)) {
            std::set<std::vector<int>> via_enum;
            enumerate_fillings(la, [&](const Filling& f) {
                std::vector<int> flat;
                for (const auto& col : f.columns)
                    flat.insert(flat.end(), col.begin(), col.end());
                via_enum.insert(flat);
            });
            // brute force: all permutations placed column-major, keep the
            // column-increasing ones
            Partition conj = la.conjugate();
            std::vector<int> perm(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
            std::set<std::vector<int>> via_filter;
            do {
                bool ok = true;
                std::size_t pos = 0;
                for (int h : conj.parts()) {
                    for (int r = 1; r < h && ok; ++r)
                        if (perm[pos + static_cast<std::size_t>(r)] <
                            perm[pos + static_cast<std::size_t>(r - 1)])
                            ok = false;
                    pos += static_cast<std::size_t>(h);
                }
                if (ok) via_filter.insert(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(via_enum == via_filter);
        }
}

TEST_CASE("enumeration order is deterministic") {
    auto fills = all_fillings(Partition{2, 1});
    REQUIRE(fills.size() == 3);
    CHECK(filling_line(fills[0]) == "[1,2][3] deg=0");
    CHECK(filling_line(fills[1]) == "[1,3][2] deg=0");
    CHECK(filling_line(fills[2]) == "[2,3][1] deg=1");
}

TEST_CASE("graded dimensions") {
    CHECK(kato_graded_dim(Partition{2}) == QPoly::from_coeffs({1, 1}));
    CHECK(kato_graded_dim(Partition{2, 1}) == QPoly::from_coeffs({2, 1}));
    CHECK(kato_graded_dim(Partition{1, 1, 1}) == QPoly(1));
    CHECK(kato_graded_dim(Partition{3}) == QPoly::from_coeffs({1, 2, 2, 1}));
    CHECK(kato_graded_dim(Partition{}) == QPoly(1));
}

TEST_CASE("value at q=1 is the multinomial and the top term is q^d") {
    for (int size = 0; size <= 7; ++size)
        for (const auto& la : partitions_of(size, std::max(size, 1))) {
            QPoly k = kato_graded_dim(la);
            CHECK(k.eval_at_one() == filling_count(la));
            CHECK(kato_top_check(la));
            CHECK(k.degree() == d_stat(la));
            CHECK(k.leading() == 1);
        }
}

TEST_CASE("enumeration bound is enforced with an estimate") {
    CHECK_THROWS_WITH_AS(
        (void)all_fillings(Partition{6, 5}),
        doctest::Contains("exceeds bound"), std::invalid_argument);
    CHECK_NOTHROW((void)all_fillings(Partition{6, 5}, 12));
}

TEST_CASE("global kato character") {
    CHECK(global_kato_char(Partition{1}, 2) ==
          QSeries::from_poly(QPoly::from_coeffs({1, 1, 1}), 2));
    CHECK(global_kato_char(Partition{1, 1}, 1) == QSeries::from_poly(QPoly::from_coeffs({1, 1}), 1));
    CHECK(global_kato_char(Partition{2}, 2) == QSeries::from_poly(QPoly::from_coeffs({1, 2, 3}), 2));
}
