#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qchar/sympoly.hpp"

using namespace qchar;

namespace {

Rat eval_at(const SymPoly<QPoly>& f, const std::vector<Rat>& point) {
    Rat total(0);
    for (const auto& [m, c] : f.terms()) {
        REQUIRE(c.degree() <= 0);  // q-free inputs only
        Rat term(c.coeff(0));
        for (std::size_t i = 0; i < m.x.size(); ++i)
            for (int e = 0; e < m.x[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

// s_lambda(point) by the bialternant ratio det(x_i^{lambda_j + n - j}) / Vandermonde
Rat bialternant_at(const Partition& la, const std::vector<Rat>& point) {
    int n = static_cast<int>(point.size());
    auto det = [&](const std::vector<int>& powers) {
        std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat v(1);
                for (int e = 0; e < powers[static_cast<std::size_t>(j)]; ++e)
                    v *= point[static_cast<std::size_t>(i)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
        Rat d(1);
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (piv < n && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0)
                ++piv;
            if (piv == n) return Rat(0);
            if (piv != col) {
                std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
                d = -d;
            }
            d *= a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int row = col + 1; row < n; ++row) {
                Rat f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                        a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                for (int j = col; j < n; ++j)
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                        f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
        return d;
    };
    std::vector<int> top(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        top[static_cast<std::size_t>(j)] = la.part(j) + n - 1 - j;
        bottom[static_cast<std::size_t>(j)] = n - 1 - j;
    }
    return det(top) / det(bottom);
}

}  // namespace

TEST_CASE("monomial_sym examples") {
    CHECK(monomial_sym(Partition{1}, 2).terms().size() == 2);
    CHECK(monomial_sym(Partition{1, 1}, 2).terms().size() == 1);
    CHECK(monomial_sym(Partition{2, 1}, 2).terms().size() == 2);
    CHECK_THROWS_AS(monomial_sym(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("elementary and complete examples") {
    CHECK(elementary(2, 3).terms().size() == 3);
    CHECK(elementary(4, 3).is_zero());
    SymPoly<QPoly> h2 = complete(2, 2);
    CHECK(h2.terms().size() == 3);
    CHECK(h2 == schur(Partition{2}, 2));
    CHECK(elementary(2, 2) == schur(Partition{1, 1}, 2));
}

TEST_CASE("schur vanishes when the shape is longer than the alphabet") {
    CHECK(schur(Partition{1, 1, 1}, 2).is_zero());
    CHECK(schur(Partition{2, 2, 1, 1}, 3).is_zero());
}

TEST_CASE("schur s_(2,1) in 3 variables") {
    SymPoly<QPoly> s = schur(Partition{2, 1}, 3);
    CHECK(eval_at(s, {Rat(1), Rat(1), Rat(1)}) == Rat(8));
    CHECK(s.is_symmetric());
    CHECK(s.coeff(Monomial{{2, 1, 0}, {}}, QPoly()) == QPoly(1));
    CHECK(s.coeff(Monomial{{1, 1, 1}, {}}, QPoly()) == QPoly(2));
}

TEST_CASE("schur matches the bialternant ratio at sample points") {
    std::vector<std::vector<Rat>> points = {
        {Rat(2), Rat(3)},
        {Rat(1, 2), Rat(5)},
        {Rat(2), Rat(3), Rat(5)},
        {Rat(1, 3), Rat(2), Rat(7)},
        {Rat(2), Rat(3), Rat(5), Rat(7)},
    };
    for (int size = 0; size <= 6; ++size)
        for (const auto& la : partitions_of(size, std::max(size, 1)))
            for (const auto& pt : points) {
                int n = static_cast<int>(pt.size());
                if (la.length() > n) continue;
                CHECK(eval_at(schur(la, n), pt) == bialternant_at(la, pt));
            }
}

TEST_CASE("schur at all-ones equals the Weyl dimension product") {
    for (int size = 0; size <= 6; ++size)
        for (const auto& la : partitions_of(size, std::max(size, 1)))
            for (int n = std::max(la.length(), 1); n <= 4; ++n) {
                Rat dim(1);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        Rat f(la.part(i) - la.part(j) + j - i, j - i);
                        f.canonicalize();
                        dim *= f;
                    }
                std::vector<Rat> ones(static_cast<std::size_t>(n), Rat(1));
                CHECK(eval_at(schur(la, n), ones) == dim);
            }
}

TEST_CASE("cauchy kernel equals schur pairs for small degree") {
    const int n = 2, m = 3, D = 6;
    SymPoly<Rat> lhs(n, m);
    lhs.add_term(Monomial{std::vector<int>(n, 0), std::vector<int>(m, 0)}, Rat(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            SymPoly<Rat> factor(n, m);
            for (int r = 0; r <= D; ++r) {
                Monomial mono{std::vector<int>(n, 0), std::vector<int>(m, 0)};
                mono.x[static_cast<std::size_t>(i)] = r;
                mono.y[static_cast<std::size_t>(j)] = r;
                factor.add_term(std::move(mono), Rat(1));
            }
            lhs = (lhs * factor).truncate_degree(D, D);
        }
    SymPoly<Rat> rhs(n, m);
    for (int N = 0; N <= D; ++N)
        for (const auto& la : partitions_of(N, std::min(n, m))) {
            SymPoly<Rat> sx(n, m), sy(n, m);
            SymPoly<QPoly> sn = schur(la, n), sm = schur(la, m);
            for (const auto& [mono, c] : sn.terms())
                sx.add_term(Monomial{mono.x, std::vector<int>(m, 0)}, Rat(c.coeff(0)));
            for (const auto& [mono, c] : sm.terms())
                sy.add_term(Monomial{std::vector<int>(n, 0), mono.x}, Rat(c.coeff(0)));
            rhs += sx * sy;
        }
    CHECK(lhs == rhs);
}

TEST_CASE("expand_schur_basis") {
    auto m1 = expand_schur_basis(schur(Partition{2, 1}, 3));
    REQUIRE(m1.size() == 1);
    CHECK(m1.at(Partition{2, 1}) == QPoly(1));

    SymPoly<QPoly> e1 = elementary(1, 2);
    auto m2 = expand_schur_basis(e1 * e1);  // h1^2 = s_2 + s_11
    REQUIRE(m2.size() == 2);
    CHECK(m2.at(Partition{2}) == QPoly(1));
    CHECK(m2.at(Partition{1, 1}) == QPoly(1));

    SymPoly<QPoly> bad(2);
    bad.add_term(Monomial{{1, 0}, {}}, QPoly(1));
    CHECK_THROWS_AS(expand_schur_basis(bad), std::invalid_argument);
}

TEST_CASE("expand_schur_basis round trip on random combinations") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3, N = 5;
        std::map<Partition, QPoly> want;
        SymPoly<QPoly> f(n);
        for (const auto& la : partitions_of(N, n)) {
            if (coeff(rng) <= 2) continue;
            QPoly c = QPoly(coeff(rng)) + QPoly::q_power(1, coeff(rng));
            want[la] = c;
            f += schur(la, n) * c;
        }
        CHECK(expand_schur_basis(f) == want);
    }
}

TEST_CASE("coeff_squarefree examples") {
    CHECK(coeff_squarefree(schur(Partition{1, 1}, 2), 2) == QPoly(1));
    CHECK(coeff_squarefree(schur(Partition{2}, 2), 2) == QPoly(1));
    CHECK(coeff_squarefree(schur(Partition{2, 1}, 3), 3) == QPoly(2));
}

TEST_CASE("is_symmetric detects broken orbits") {
    SymPoly<QPoly> f = monomial_sym(Partition{2, 1}, 3);
    CHECK(f.is_symmetric());
    f.add_term(Monomial{{2, 1, 0}, {}}, QPoly(1));
    CHECK_FALSE(f.is_symmetric());
}

TEST_CASE("specialize_q") {
    SymPoly<QPoly> f(1);
    f.add_term(Monomial{{1}, {}}, QPoly(1) + QPoly::q_power(2, 3));
    CHECK(specialize_q(f, 0).coeff(Monomial{{1}, {}}, QPoly()) == QPoly(1));
    CHECK(specialize_q(f, 1).coeff(Monomial{{1}, {}}, QPoly()) == QPoly(4));
}
