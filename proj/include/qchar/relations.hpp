#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/series.hpp"

namespace qchar {

/// Matrix-entry coefficient variable z_{i,j}^{(k)} (1-based i, j).
struct MatVar {
    int i;
    int j;
    int k;
    auto operator<=>(const MatVar&) const = default;
};

/// Multilinear monomial in the z-variables (exponents are always 1 here:
/// determinant terms never repeat a matrix entry).
using MatMonomial = std::vector<MatVar>;

/// Sparse integer polynomial in the z_{i,j}^{(k)}.
class MatPoly {
public:
    void add(MatMonomial m, Int c) {
        std::sort(m.begin(), m.end());
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<MatMonomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const MatPoly&) const = default;

    friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
        MatPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                MatMonomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                r.add(std::move(m), ca * cb);
            }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1 || m.empty()) os << a.get_str() << (m.empty() ? "" : "*");
            for (std::size_t t = 0; t < m.size(); ++t) {
                if (t) os << "*";
                os << "z[" << m[t].i << "," << m[t].j << "]^(" << m[t].k << ")";
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<MatMonomial, Int> terms_;
};

/// Coefficients P_0..P_M of t^m in det(z(t)) - 1, where
/// z(t)_{i,j} = sum_{k<=M} z_{i,j}^{(k)} t^k: the defining relations of the
/// special linear current group cut out inside the matrix ring.
inline std::vector<MatPoly> current_group_relations(int n, int max_order) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("current_group_relations: n must be in [2,4]");
    if (max_order < 0) throw std::invalid_argument("current_group_relations: negative order");

    std::vector<MatPoly> out(static_cast<std::size_t>(max_order) + 1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        Int sign = inv % 2 ? -1 : 1;
        // convolve the n series entries z_{i, perm(i)}(t) keeping t^m, m <= M
        std::vector<int> ks(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int row, int used) -> void {
            if (row == n) {
                MatMonomial m;
                for (int i = 0; i < n; ++i)
                    m.push_back(MatVar{i + 1, perm[static_cast<std::size_t>(i)] + 1,
                                       ks[static_cast<std::size_t>(i)]});
                out[static_cast<std::size_t>(used)].add(std::move(m), sign);
                return;
            }
            for (int k = 0; k + used <= max_order; ++k) {
                ks[static_cast<std::size_t>(row)] = k;
                self(self, row + 1, used + k);
            }
        };
        rec(rec, 0, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));

    out[0].add(MatMonomial{}, Int(-1));
    return out;
}

}  // namespace qchar
