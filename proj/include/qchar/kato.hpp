#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/partition.hpp"
#include "qchar/series.hpp"
#include "qchar/whittaker.hpp"

namespace qchar {

/// Bijective placement of 1..|shape| into the diagram, strictly increasing
/// down every column.  Stored column-major: columns[c][r] is the entry in
/// column c, row r (row 0 on top).
struct Filling {
    Partition shape;
    std::vector<std::vector<int>> columns;
};

/// Snake rule for one ordered pair of filled columns, sigma left of tau,
/// len(sigma) >= len(tau) >= 1, all entries distinct.  Row r carries sign
/// '<' when sigma_r < tau_r (or tau has no cell in row r) and '>' otherwise;
/// scanning from the bottom row upward with a virtual leading '<', k counts
/// the positions whose sign differs from the previously scanned one.
inline int column_k(const std::vector<int>& sigma, const std::vector<int>& tau) {
    if (sigma.size() < tau.size() || tau.empty())
        throw std::invalid_argument("column_k: need len(sigma) >= len(tau) >= 1");
    int k = 0;
    bool prev_less = true;  // baseline below the bottom row
    for (std::size_t r = sigma.size(); r-- > 0;) {
        bool less = r >= tau.size() ? true : sigma[r] < tau[r];
        if (r < tau.size() && sigma[r] == tau[r])
            throw std::invalid_argument("column_k: entries must be distinct");
        if (less != prev_less) ++k;
        prev_less = less;
    }
    return k;
}

/// Degree of a filling: sum of column_k over ordered column pairs.
inline int filling_degree(const Filling& f) {
    int d = 0;
    for (std::size_t i = 0; i < f.columns.size(); ++i)
        for (std::size_t j = i + 1; j < f.columns.size(); ++j)
            d += column_k(f.columns[i], f.columns[j]);
    return d;
}

inline constexpr int kDefaultFillingBound = 10;

/// Number of fillings: |lambda|! / prod_i (lambda^t_i)!.
inline Int filling_count(const Partition& la) {
    Int count;
    mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(la.size()));
    Partition conj = la.conjugate();
    for (int h : conj.parts()) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(h));
        count /= f;
    }
    return count;
}

namespace detail {

inline void check_filling_bound(const Partition& la, int bound) {
    if (la.size() > bound) {
        std::ostringstream os;
        os << "enumerate_fillings: |lambda| = " << la.size() << " exceeds bound " << bound
           << " (about " << filling_count(la).get_str() << " fillings)";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace detail

/// Visits every column-increasing filling in deterministic order: columns
/// filled left to right, each column's entry set chosen in lexicographic
/// order among the remaining numbers.
inline void enumerate_fillings(const Partition& la,
                               const std::function<void(const Filling&)>& visit,
                               int bound = kDefaultFillingBound) {
    detail::check_filling_bound(la, bound);
    int n = la.size();
    Partition conj = la.conjugate();
    Filling f;
    f.shape = la;
    f.columns.resize(conj.parts().size());
    std::vector<int> remaining(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) remaining[static_cast<std::size_t>(i)] = i + 1;
    if (n == 0) {
        visit(f);
        return;
    }
    auto rec = [&](auto&& self, std::size_t col) -> void {
        if (col == f.columns.size()) {
            visit(f);
            return;
        }
        int h = conj.parts()[col];
        std::vector<std::size_t> pick(static_cast<std::size_t>(h));
        auto choose = [&](auto&& chooser, int start, int depth) -> void {
            if (depth == h) {
                std::vector<int>& c = f.columns[col];
                c.clear();
                for (auto i : pick) c.push_back(remaining[i]);
                std::vector<int> rest;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        rest.push_back(remaining[i]);
                std::swap(remaining, rest);
                self(self, col + 1);
                std::swap(remaining, rest);
                return;
            }
            for (int i = start; i <= static_cast<int>(remaining.size()) - (h - depth); ++i) {
                pick[static_cast<std::size_t>(depth)] = static_cast<std::size_t>(i);
                chooser(chooser, i + 1, depth + 1);
            }
        };
        choose(choose, 0, 0);
    };
    rec(rec, 0);
}

inline std::vector<Filling> all_fillings(const Partition& la, int bound = kDefaultFillingBound) {
    std::vector<Filling> out;
    enumerate_fillings(la, [&](const Filling& f) { out.push_back(f); }, bound);
    return out;
}

/// Graded dimension of the local module attached to lambda:
/// sum over fillings of q^degree.
inline QPoly kato_graded_dim(const Partition& la, int bound = kDefaultFillingBound) {
    std::vector<Int> coeffs;
    enumerate_fillings(la, [&](const Filling& f) {
        int d = filling_degree(f);
        if (d >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(d) + 1, Int(0));
        coeffs[static_cast<std::size_t>(d)] += 1;
    }, bound);
    if (coeffs.empty()) coeffs.assign(1, Int(1));  // empty shape: one empty filling
    return QPoly::from_coeffs(std::move(coeffs));
}

/// True iff the leading term of the graded dimension is exactly
/// q^{d_stat(lambda)} with coefficient 1.
inline bool kato_top_check(const Partition& la, int bound = kDefaultFillingBound) {
    QPoly k = kato_graded_dim(la, bound);
    return k.degree() == d_stat(la) && k.leading() == 1;
}

/// Graded character of the global module: free over the highest-weight
/// algebra with generator set graded like the local module.
inline QSeries global_kato_char(const Partition& la, int order,
                                int bound = kDefaultFillingBound) {
    QSeries g = QSeries::from_poly(kato_graded_dim(la, bound), order);
    return g * hw_algebra_char(la, std::max(la.size(), 1), order);
}

/// CLI line format: "[1,2,8,10][4,5,9][3,6,7] deg=5".
inline std::string filling_line(const Filling& f) {
    std::ostringstream os;
    for (const auto& col : f.columns) {
        os << '[';
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (i) os << ',';
            os << col[i];
        }
        os << ']';
    }
    os << " deg=" << filling_degree(f);
    return os.str();
}

}  // namespace qchar
