#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qchar/partition.hpp"
#include "qchar/series.hpp"

namespace qchar {

/// Exponent vectors for the two alphabets x_1..x_nx and y_1..y_ny.
struct Monomial {
    std::vector<int> x;
    std::vector<int> y;

    auto operator<=>(const Monomial&) const = default;

    int x_degree() const {
        int d = 0;
        for (int e : x) d += e;
        return d;
    }
    int y_degree() const {
        int d = 0;
        for (int e : y) d += e;
        return d;
    }
};

namespace ring {

inline bool is_zero(const QPoly& v) { return v.is_zero(); }
inline bool is_zero(const QSeries& v) { return v.is_zero(); }
inline bool is_zero(const QRat& v) { return v.is_zero(); }
inline bool is_zero(const Rat& v) { return v == 0; }

}  // namespace ring

/// Sparse polynomial in one or two alphabets over an exact q-coefficient
/// ring.  Terms are kept in lexicographic monomial order, so iteration,
/// comparison and rendering are deterministic.
template <typename R>
class SymPoly {
public:
    explicit SymPoly(int nx, int ny = 0) : nx_(nx), ny_(ny) {
        if (nx < 0 || ny < 0) throw std::invalid_argument("SymPoly: negative alphabet size");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const std::map<Monomial, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, const R& c) {
        check_key(m);
        if (ring::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second = it->second + c;
            if (ring::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Coefficient lookup; `zero` supplies the ring zero (rings such as
    /// QSeries carry a truncation order that a default ctor cannot guess).
    R coeff(const Monomial& m, const R& zero) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
        a.check_same(b);
        SymPoly r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
        a.check_same(b);
        SymPoly r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        a.check_same(b);
        SymPoly r(a.nx_, a.ny_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += mb.x[i];
                for (std::size_t i = 0; i < m.y.size(); ++i) m.y[i] += mb.y[i];
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }

    SymPoly& operator+=(const SymPoly& o) { *this = *this + o; return *this; }
    SymPoly& operator-=(const SymPoly& o) { *this = *this - o; return *this; }
    SymPoly& operator*=(const SymPoly& o) { *this = *this * o; return *this; }

    SymPoly operator*(const R& c) const {
        SymPoly r(nx_, ny_);
        for (const auto& [m, v] : terms_) r.add_term(m, v * c);
        return r;
    }

    bool operator==(const SymPoly&) const = default;

    /// Drops all terms of x-degree (resp. y-degree) above the bound.
    SymPoly truncate_degree(int max_x, int max_y = -1) const {
        SymPoly r(nx_, ny_);
        for (const auto& [m, c] : terms_) {
            if (m.x_degree() > max_x) continue;
            if (max_y >= 0 && m.y_degree() > max_y) continue;
            r.terms_.emplace(m, c);
        }
        return r;
    }

    /// Exact symmetry check: within each S_nx x S_ny orbit all stored
    /// coefficients agree and the whole orbit is present.
    bool is_symmetric() const {
        std::map<Monomial, std::pair<R, long>> classes;
        for (const auto& [m, c] : terms_) {
            Monomial rep = m;
            std::sort(rep.x.begin(), rep.x.end(), std::greater<int>());
            std::sort(rep.y.begin(), rep.y.end(), std::greater<int>());
            auto [it, inserted] = classes.emplace(std::move(rep), std::make_pair(c, 1L));
            if (!inserted) {
                if (!(it->second.first == c)) return false;
                ++it->second.second;
            }
        }
        for (const auto& [rep, info] : classes)
            if (info.second != orbit_size(rep.x) * orbit_size(rep.y)) return false;
        return true;
    }

    template <typename R2>
    SymPoly<R2> map_coefficients(const std::function<R2(const R&)>& f) const {
        SymPoly<R2> r(nx_, ny_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

private:
    void check_key(const Monomial& m) const {
        if (static_cast<int>(m.x.size()) != nx_ || static_cast<int>(m.y.size()) != ny_)
            throw std::invalid_argument("SymPoly: monomial arity mismatch");
        for (int e : m.x)
            if (e < 0) throw std::invalid_argument("SymPoly: negative exponent");
        for (int e : m.y)
            if (e < 0) throw std::invalid_argument("SymPoly: negative exponent");
    }

    void check_same(const SymPoly& o) const {
        if (nx_ != o.nx_ || ny_ != o.ny_)
            throw std::invalid_argument("SymPoly: alphabet size mismatch");
    }

    static long orbit_size(const std::vector<int>& sorted_desc) {
        long total = 1, run = 1;
        long pos = 0;
        for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
            ++pos;
            total = total * pos;
            if (i > 0 && sorted_desc[i] == sorted_desc[i - 1]) ++run;
            else run = 1;
            total /= run;
        }
        return total;  // multinomial: distinct permutations of the vector
    }

    int nx_;
    int ny_;
    std::map<Monomial, R> terms_;
};

namespace detail {

inline std::vector<int> padded_parts(const Partition& la, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < la.length() && i < n; ++i) v[static_cast<std::size_t>(i)] = la.part(i);
    return v;
}

inline Monomial x_monomial(std::vector<int> xexp) { return Monomial{std::move(xexp), {}}; }

}  // namespace detail

/// m_lambda(x_1..x_n): sum over the distinct permutations of lambda padded
/// to length n.
inline SymPoly<QPoly> monomial_sym(const Partition& la, int n) {
    if (la.length() > n)
        throw std::invalid_argument("monomial_sym: partition longer than alphabet");
    SymPoly<QPoly> r(n);
    std::vector<int> v = detail::padded_parts(la, n);
    std::sort(v.begin(), v.end());
    do {
        r.add_term(detail::x_monomial(v), QPoly(1));
    } while (std::next_permutation(v.begin(), v.end()));
    return r;
}

/// e_k(x_1..x_n); zero when k > n.
inline SymPoly<QPoly> elementary(int k, int n) {
    if (k < 0) throw std::invalid_argument("elementary: negative degree");
    SymPoly<QPoly> r(n);
    if (k > n) return r;
    std::vector<int> idx(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int start, int chosen) -> void {
        if (chosen == k) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
            r.add_term(detail::x_monomial(std::move(e)), QPoly(1));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<std::size_t>(chosen)] = i;
            self(self, i + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    return r;
}

/// h_k(x_1..x_n): all monomials of degree k.
inline SymPoly<QPoly> complete(int k, int n) {
    if (k < 0) throw std::invalid_argument("complete: negative degree");
    SymPoly<QPoly> r(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n - 1) {
            e[static_cast<std::size_t>(var)] = remaining;
            r.add_term(detail::x_monomial(e), QPoly(1));
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            e[static_cast<std::size_t>(var)] = d;
            self(self, var + 1, remaining - d);
        }
    };
    if (n == 0) {
        if (k == 0) r.add_term(Monomial{{}, {}}, QPoly(1));
        return r;
    }
    rec(rec, 0, k);
    return r;
}

inline int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

/// Schur polynomial s_lambda(x_1..x_n) by the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}); returns 0 when the partition is too long.
/// The determinant is expanded row by row with minors memoized on the
/// remaining column set.
inline SymPoly<QPoly> schur(const Partition& la, int n) {
    if (la.length() > n) return SymPoly<QPoly>(n);
    int l = la.length();
    SymPoly<QPoly> unit(n);
    unit.add_term(detail::x_monomial(std::vector<int>(static_cast<std::size_t>(n), 0)), QPoly(1));
    if (l == 0) return unit;
    int maxh = la.part(0) + l;
    std::vector<SymPoly<QPoly>> h;
    h.reserve(static_cast<std::size_t>(maxh) + 1);
    for (int k = 0; k <= maxh; ++k) h.push_back(complete(k, n));

    std::map<unsigned, SymPoly<QPoly>> minors;
    auto minor = [&](auto&& self, unsigned cols) -> const SymPoly<QPoly>& {
        auto it = minors.find(cols);
        if (it != minors.end()) return it->second;
        if (cols == 0) return minors.emplace(0u, unit).first->second;
        int row = l - __builtin_popcount(cols);
        SymPoly<QPoly> acc(n);
        int sign = 1;
        for (int c = 0; c < l; ++c) {
            unsigned bit = 1u << c;
            if (!(cols & bit)) continue;
            int k = la.part(row) - (row + 1) + (c + 1);
            if (k >= 0 && !h[static_cast<std::size_t>(k)].is_zero()) {
                SymPoly<QPoly> term = h[static_cast<std::size_t>(k)] * self(self, cols & ~bit);
                if (sign > 0) acc += term;
                else acc -= term;
            }
            sign = -sign;
        }
        return minors.emplace(cols, std::move(acc)).first->second;
    };
    return minor(minor, (1u << l) - 1u);
}

/// Shared Schur cache; the basis-change peeling hits the same shapes over
/// and over.
inline const SymPoly<QPoly>& schur_cached(const Partition& la, int n) {
    static std::mutex mu;
    static std::map<std::pair<Partition, int>, std::unique_ptr<const SymPoly<QPoly>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(la, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<const SymPoly<QPoly>>(schur(la, n))).first;
    return *it->second;
}

/// Coefficient of x_1 x_2 ... x_n.
template <typename R>
R coeff_squarefree(const SymPoly<R>& f, int n, const R& zero) {
    if (f.nx() != n || f.ny() != 0)
        throw std::invalid_argument("coeff_squarefree: alphabet mismatch");
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 1), {}};
    return f.coeff(m, zero);
}

inline QPoly coeff_squarefree(const SymPoly<QPoly>& f, int n) {
    return coeff_squarefree<QPoly>(f, n, QPoly());
}

/// Expands a symmetric homogeneous polynomial in the Schur basis by
/// dominance peeling: subtract c * s_nu at the dominance-maximal surviving
/// exponent (reverse-lexicographic tie-break) until nothing is left.
inline std::map<Partition, QPoly> expand_schur_basis(const SymPoly<QPoly>& f) {
    if (f.ny() != 0)
        throw std::invalid_argument("expand_schur_basis: single alphabet required");
    if (!f.is_symmetric())
        throw std::invalid_argument("expand_schur_basis: input is not symmetric");
    for (const auto& [m, c] : f.terms())
        if (m.x_degree() != f.terms().begin()->first.x_degree())
            throw std::invalid_argument("expand_schur_basis: input is not homogeneous");
    int n = f.nx();
    std::map<Partition, QPoly> out;
    SymPoly<QPoly> rest = f;
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000)
            throw std::logic_error("expand_schur_basis: no strict descent");
        // candidate shapes present in the support
        std::vector<Partition> shapes;
        for (const auto& [m, c] : rest.terms()) {
            std::vector<int> v = m.x;
            std::sort(v.begin(), v.end(), std::greater<int>());
            Partition p(std::move(v));
            if (std::find(shapes.begin(), shapes.end(), p) == shapes.end())
                shapes.push_back(std::move(p));
        }
        // dominance-maximal, reverse-lexicographic greatest among maxima
        Partition best;
        bool have = false;
        for (const auto& p : shapes) {
            bool maximal = true;
            for (const auto& q : shapes)
                if (q != p && dominance_leq(p, q)) { maximal = false; break; }
            if (!maximal) continue;
            if (!have || best < p) { best = p; have = true; }
        }
        if (!have) throw std::logic_error("expand_schur_basis: empty support");
        Monomial rep{detail::padded_parts(best, n), {}};
        QPoly c = rest.coeff(rep, QPoly());
        if (c.is_zero()) throw std::logic_error("expand_schur_basis: missing representative");
        out[best] += c;
        rest -= schur_cached(best, n) * c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Sum of all coefficients, i.e. the value at x = (1,...,1).
inline QPoly eval_at_all_ones(const SymPoly<QPoly>& f) {
    QPoly s;
    for (const auto& [m, c] : f.terms()) s += c;
    return s;
}

/// q |-> q0 specialization, keeping the exact integer/rational result as a
/// constant coefficient.
inline SymPoly<QPoly> specialize_q(const SymPoly<QPoly>& f, long q0) {
    return f.map_coefficients<QPoly>([q0](const QPoly& c) {
        if (q0 == 0) return QPoly(c.coeff(0));
        if (q0 == 1) return QPoly(c.eval_at_one());
        Rat v = c.eval(Rat(q0));
        if (v.get_den() != 1) throw std::logic_error("specialize_q: non-integer value");
        return QPoly(Int(v.get_num()));
    });
}

inline SymPoly<QSeries> to_series(const SymPoly<QPoly>& f, int order) {
    return f.map_coefficients<QSeries>(
        [order](const QPoly& c) { return QSeries::from_poly(c, order); });
}

}  // namespace qchar
