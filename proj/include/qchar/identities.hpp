#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "qchar/kato.hpp"
#include "qchar/partition.hpp"
#include "qchar/relations.hpp"
#include "qchar/series.hpp"
#include "qchar/sympoly.hpp"
#include "qchar/whittaker.hpp"

namespace qchar {

struct FirstMismatch {
    std::vector<int> x_exponents;
    std::vector<int> y_exponents;
    int q_power = 0;
    std::string lhs;
    std::string rhs;
};

/// Structured verification outcome; verified is true iff no mismatch was
/// found and the run was conclusive.
struct IdentityReport {
    std::string identity;
    std::map<std::string, long> params;
    bool verified = false;
    bool inconclusive = false;
    std::optional<FirstMismatch> first_mismatch;
    long elapsed_ms = 0;
    std::vector<std::string> notes;
};

/// Single-coefficient tamper request: used by the perturbation-sensitivity
/// suite to check that a mismatch is detected and localized.
struct Perturbation {
    int side = 0;  // 0 = left-hand side, 1 = right-hand side
    std::uint64_t seed = 0;
};

struct MutationRecord {
    std::vector<int> x_exponents;
    std::vector<int> y_exponents;
    int q_power = 0;
};

namespace detail {

class Stopwatch {
public:
    long ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0_)
                                     .count());
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline std::optional<FirstMismatch> compare_series_polys(const SymPoly<QSeries>& lhs,
                                                         const SymPoly<QSeries>& rhs) {
    std::set<Monomial> keys;
    for (const auto& [m, c] : lhs.terms()) keys.insert(m);
    for (const auto& [m, c] : rhs.terms()) keys.insert(m);
    for (const auto& m : keys) {
        int order = -1;
        for (const auto* side : {&lhs, &rhs}) {
            auto it = side->terms().find(m);
            if (it != side->terms().end())
                order = order < 0 ? it->second.order() : std::min(order, it->second.order());
        }
        for (int k = 0; k <= order; ++k) {
            auto value = [&](const SymPoly<QSeries>& f) {
                auto it = f.terms().find(m);
                return it == f.terms().end() ? Rat(0) : it->second.coeff(k);
            };
            Rat a = value(lhs), b = value(rhs);
            if (a != b)
                return FirstMismatch{m.x, m.y, k, a.get_str(), b.get_str()};
        }
    }
    return std::nullopt;
}

inline std::optional<FirstMismatch> compare_rational_polys(const SymPoly<Rat>& lhs,
                                                           const SymPoly<Rat>& rhs) {
    std::set<Monomial> keys;
    for (const auto& [m, c] : lhs.terms()) keys.insert(m);
    for (const auto& [m, c] : rhs.terms()) keys.insert(m);
    for (const auto& m : keys) {
        Rat a = lhs.coeff(m, Rat(0)), b = rhs.coeff(m, Rat(0));
        if (a != b) return FirstMismatch{m.x, m.y, 0, a.get_str(), b.get_str()};
    }
    return std::nullopt;
}

inline MutationRecord mutate(SymPoly<QSeries>& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::logic_error("mutate: empty polynomial");
    std::size_t idx = seed % f.terms().size();
    auto it = f.terms().begin();
    std::advance(it, static_cast<long>(idx));
    Monomial key = it->first;
    int order = it->second.order();
    int k = static_cast<int>((seed / (f.terms().size() + 1)) % (static_cast<std::uint64_t>(order) + 1));
    QSeries delta(order);
    delta.coeff_ref(k) = 1;
    f.add_term(key, delta);
    return MutationRecord{key.x, key.y, k};
}

inline MutationRecord mutate(SymPoly<Rat>& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::logic_error("mutate: empty polynomial");
    std::size_t idx = seed % f.terms().size();
    auto it = f.terms().begin();
    std::advance(it, static_cast<long>(idx));
    Monomial key = it->first;
    f.add_term(key, Rat(1));
    return MutationRecord{key.x, key.y, 0};
}

inline SymPoly<Rat> to_rational(const SymPoly<QPoly>& f) {
    return f.map_coefficients<Rat>([](const QPoly& c) {
        if (c.degree() > 0) throw std::logic_error("to_rational: q-dependent coefficient");
        return Rat(c.coeff(0));
    });
}

/// Places an x-alphabet polynomial into the two-alphabet ring (n, m).
template <typename R>
SymPoly<R> embed_x(const SymPoly<R>& f, int m) {
    SymPoly<R> r(f.nx(), m);
    for (const auto& [mono, c] : f.terms())
        r.add_term(Monomial{mono.x, std::vector<int>(static_cast<std::size_t>(m), 0)}, c);
    return r;
}

template <typename R>
SymPoly<R> embed_y(const SymPoly<R>& f, int n) {
    SymPoly<R> r(n, f.nx());
    for (const auto& [mono, c] : f.terms())
        r.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), mono.x}, c);
    return r;
}

}  // namespace detail

namespace builders {

/// prod_{i<=n, j<=m} (1 - x_i y_j)^{-1}, kept to bidegree at most D.
inline SymPoly<Rat> cauchy_schur_lhs(int n, int m, int max_deg) {
    SymPoly<Rat> acc(n, m);
    acc.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0),
                          std::vector<int>(static_cast<std::size_t>(m), 0)},
                 Rat(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            SymPoly<Rat> factor(n, m);
            for (int r = 0; r <= max_deg; ++r) {
                Monomial mono{std::vector<int>(static_cast<std::size_t>(n), 0),
                              std::vector<int>(static_cast<std::size_t>(m), 0)};
                mono.x[static_cast<std::size_t>(i)] = r;
                mono.y[static_cast<std::size_t>(j)] = r;
                factor.add_term(std::move(mono), Rat(1));
            }
            acc = (acc * factor).truncate_degree(max_deg, max_deg);
        }
    return acc;
}

/// sum_{N<=D} sum_{lambda of N, len <= min(n,m)} s_lambda(x) s_lambda(y).
inline SymPoly<Rat> cauchy_schur_rhs(int n, int m, int max_deg,
                                     const Partition* drop_lambda = nullptr) {
    SymPoly<Rat> acc(n, m);
    for (int N = 0; N <= max_deg; ++N)
        for (const auto& la : partitions_of(N, std::min(n, m))) {
            if (drop_lambda && la == *drop_lambda) continue;
            acc += detail::embed_x(detail::to_rational(schur(la, n)), m) *
                   detail::embed_y(detail::to_rational(schur(la, m)), n);
        }
    return acc;
}

/// prod_{i,j} prod_{k=0}^{Q} (1 - x_i y_j q^k)^{-1} mod q^{Q+1}, bidegree <= D.
inline SymPoly<QSeries> cauchy_whittaker_lhs(int n, int m, int max_deg, int order) {
    SymPoly<QSeries> acc(n, m);
    acc.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0),
                          std::vector<int>(static_cast<std::size_t>(m), 0)},
                 QSeries::one(order));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k <= order; ++k) {
                SymPoly<QSeries> factor(n, m);
                for (int r = 0; r <= max_deg; ++r) {
                    if (static_cast<long>(k) * r > order) break;
                    Monomial mono{std::vector<int>(static_cast<std::size_t>(n), 0),
                                  std::vector<int>(static_cast<std::size_t>(m), 0)};
                    mono.x[static_cast<std::size_t>(i)] = r;
                    mono.y[static_cast<std::size_t>(j)] = r;
                    QSeries c(order);
                    c.coeff_ref(k * r) = 1;
                    factor.add_term(std::move(mono), c);
                }
                acc = (acc * factor).truncate_degree(max_deg, max_deg);
            }
    return acc;
}

/// sum over lambda of p_lambda(x) p_lambda(y) prod_i 1/(q)_{lambda_i - lambda_{i+1}}.
inline SymPoly<QSeries> cauchy_whittaker_rhs(int n, int m, int max_deg, int order,
                                             const Partition* drop_qfactor_for = nullptr) {
    SymPoly<QSeries> acc(n, m);
    for (int N = 0; N <= max_deg; ++N)
        for (const auto& la : partitions_of(N, std::min(n, m))) {
            QSeries scalar = QSeries::one(order);
            if (!(drop_qfactor_for && la == *drop_qfactor_for))
                scalar = hw_algebra_char(la, std::max(la.length(), 1), order);
            auto px = to_series(whittaker_p(la, n), order);
            auto py = to_series(whittaker_p(la, m), order);
            acc += detail::embed_x(px, m) * detail::embed_y(py, n) * scalar;
        }
    return acc;
}

/// prod_{i<=n} prod_{k=0}^{Q} (1 + x_i q^k) mod q^{Q+1}, degree <= D.
inline SymPoly<QSeries> wedge_lhs(int n, int max_deg, int order) {
    SymPoly<QSeries> acc(n, 0);
    acc.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), {}},
                 QSeries::one(order));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= order; ++k) {
            SymPoly<QSeries> factor(n, 0);
            factor.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), {}},
                            QSeries::one(order));
            Monomial mono{std::vector<int>(static_cast<std::size_t>(n), 0), {}};
            mono.x[static_cast<std::size_t>(i)] = 1;
            QSeries c(order);
            c.coeff_ref(k) = 1;
            factor.add_term(std::move(mono), c);
            acc = (acc * factor).truncate_degree(max_deg);
        }
    return acc;
}

/// sum over lambda of q^{d(lambda)} / (q)_lambda * p_lambda(x), with
/// (q)_lambda = prod_i (q)_{lambda_i - lambda_{i+1}}.
inline SymPoly<QSeries> wedge_rhs(int n, int max_deg, int order) {
    SymPoly<QSeries> acc(n, 0);
    for (int N = 0; N <= max_deg; ++N)
        for (const auto& la : partitions_of(N, n)) {
            QSeries scalar =
                QSeries::from_poly(QPoly::q_power(static_cast<int>(d_stat(la))), order) *
                hw_algebra_char(la, std::max(la.length(), 1), order);
            acc += to_series(whittaker_p(la, n), order) * scalar;
        }
    return acc;
}

/// (x_1 + ... + x_m)^{n} / (q)_1^{n}: the character of the n-th tensor power
/// of the vector current module.
inline SymPoly<QSeries> schur_weyl_lhs(int n_boxes, int m_vars, int order) {
    SymPoly<QSeries> sum(m_vars, 0);
    for (int i = 0; i < m_vars; ++i) {
        Monomial mono{std::vector<int>(static_cast<std::size_t>(m_vars), 0), {}};
        mono.x[static_cast<std::size_t>(i)] = 1;
        sum.add_term(std::move(mono), QSeries::one(order));
    }
    SymPoly<QSeries> acc(m_vars, 0);
    acc.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(m_vars), 0), {}},
                 QSeries::one(order));
    for (int t = 0; t < n_boxes; ++t) acc *= sum;
    QSeries scale = QSeries::one(order);
    for (int t = 0; t < n_boxes; ++t) scale *= inv_qpoch(1, order);
    return acc * scale;
}

/// sum over lambda of n_boxes of ch(global Weyl) * graded dim of the local
/// Kato module.
inline SymPoly<QSeries> schur_weyl_rhs(int n_boxes, int m_vars, int order) {
    SymPoly<QSeries> acc(m_vars, 0);
    for (const auto& la : partitions_of(n_boxes, std::min(n_boxes == 0 ? 1 : n_boxes, m_vars))) {
        QSeries scalar = hw_algebra_char(la, std::max(la.length(), 1), order) *
                         QSeries::from_poly(kato_graded_dim(la), order);
        acc += to_series(whittaker_p(la, m_vars), order) * scalar;
    }
    return acc;
}

}  // namespace builders

namespace detail {

template <typename Poly, typename Builder1, typename Builder2>
IdentityReport run_two_sided(std::string name, std::map<std::string, long> params,
                             Builder1&& build_lhs, Builder2&& build_rhs,
                             const std::optional<Perturbation>& tamper,
                             MutationRecord* applied) {
    Stopwatch sw;
    IdentityReport rep;
    rep.identity = std::move(name);
    rep.params = std::move(params);
    Poly lhs = build_lhs();
    Poly rhs = build_rhs();
    if (tamper) {
        MutationRecord rec = mutate(tamper->side == 0 ? lhs : rhs, tamper->seed);
        if (applied) *applied = rec;
    }
    std::optional<FirstMismatch> mm;
    if constexpr (std::is_same_v<Poly, SymPoly<QSeries>>)
        mm = compare_series_polys(lhs, rhs);
    else
        mm = compare_rational_polys(lhs, rhs);
    rep.first_mismatch = mm;
    rep.verified = !mm.has_value();
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace detail

/// Classical Cauchy kernel vs. the sum of Schur pairs, per total degree up
/// to D; exact rational comparison.
inline IdentityReport verify_cauchy_schur(int n, int m, int max_deg,
                                          const std::optional<Perturbation>& tamper = {},
                                          MutationRecord* applied = nullptr) {
    if (n < 1 || m < 1) throw std::invalid_argument("verify_cauchy_schur: need n, m >= 1");
    return detail::run_two_sided<SymPoly<Rat>>(
        "cauchy-schur", {{"n", n}, {"m", m}, {"D", max_deg}},
        [&] { return builders::cauchy_schur_lhs(n, m, max_deg); },
        [&] { return builders::cauchy_schur_rhs(n, m, max_deg); }, tamper, applied);
}

/// q-deformed Cauchy kernel vs. the q-Whittaker sum, coefficientwise in
/// (x, y, q) up to bidegree D and q-order Q.
inline IdentityReport verify_cauchy_whittaker(int n, int m, int max_deg, int order,
                                              const std::optional<Perturbation>& tamper = {},
                                              MutationRecord* applied = nullptr) {
    if (n > m) throw std::invalid_argument("verify_cauchy_whittaker: requires n <= m");
    if (n < 1) throw std::invalid_argument("verify_cauchy_whittaker: need n >= 1");
    return detail::run_two_sided<SymPoly<QSeries>>(
        "cauchy-whittaker", {{"n", n}, {"m", m}, {"D", max_deg}, {"Q", order}},
        [&] { return builders::cauchy_whittaker_lhs(n, m, max_deg, order); },
        [&] { return builders::cauchy_whittaker_rhs(n, m, max_deg, order); }, tamper, applied);
}

inline IdentityReport verify_wedge_identity(int n, int max_deg, int order,
                                            const std::optional<Perturbation>& tamper = {},
                                            MutationRecord* applied = nullptr) {
    if (n < 1) throw std::invalid_argument("verify_wedge_identity: need n >= 1");
    return detail::run_two_sided<SymPoly<QSeries>>(
        "wedge", {{"n", n}, {"D", max_deg}, {"Q", order}},
        [&] { return builders::wedge_lhs(n, max_deg, order); },
        [&] { return builders::wedge_rhs(n, max_deg, order); }, tamper, applied);
}

inline IdentityReport verify_schur_weyl_current(int n_boxes, int m_vars, int order,
                                                const std::optional<Perturbation>& tamper = {},
                                                MutationRecord* applied = nullptr) {
    if (m_vars < 1) throw std::invalid_argument("verify_schur_weyl_current: need m >= 1");
    if (n_boxes < 0) throw std::invalid_argument("verify_schur_weyl_current: need n >= 0");
    return detail::run_two_sided<SymPoly<QSeries>>(
        "schur-weyl-current", {{"n", n_boxes}, {"m", m_vars}, {"Q", order}},
        [&] { return builders::schur_weyl_lhs(n_boxes, m_vars, order); },
        [&] { return builders::schur_weyl_rhs(n_boxes, m_vars, order); }, tamper, applied);
}

// ---------------------------------------------------------------------------
// Reciprocity check in one character variable z (x1 = z, x2 = 1/z).

using Laurent = std::map<int, QSeries>;

namespace detail {

inline void laurent_add(Laurent& f, int zpow, const QSeries& c) {
    auto [it, inserted] = f.emplace(zpow, c);
    if (!inserted) it->second += c;
}

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) laurent_add(r, pa + pb, ca * cb);
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

inline Laurent laurent_scale(const Laurent& a, const QSeries& s) {
    Laurent r;
    for (const auto& [p, c] : a) {
        QSeries v = c * s;
        if (!v.is_zero()) r.emplace(p, v);
    }
    return r;
}

/// (1 - q^k z^s)^{-1} truncated at the q-order; requires k >= 1.
inline Laurent laurent_geometric(int k, int zstep, int order) {
    if (k < 1) throw std::invalid_argument("laurent_geometric: need k >= 1");
    Laurent r;
    for (int t = 0; static_cast<long>(t) * k <= order; ++t) {
        QSeries c(order);
        c.coeff_ref(t * k) = 1;
        r.emplace(t * zstep, c);
    }
    return r;
}

inline MutationRecord mutate(Laurent& f, std::uint64_t seed) {
    if (f.empty()) throw std::logic_error("mutate: empty Laurent polynomial");
    std::size_t idx = seed % f.size();
    auto it = f.begin();
    std::advance(it, static_cast<long>(idx));
    int order = it->second.order();
    int k = static_cast<int>((seed / (f.size() + 1)) % (static_cast<std::uint64_t>(order) + 1));
    it->second.coeff_ref(k) += 1;
    return MutationRecord{{it->first}, {}, k};
}

inline std::optional<FirstMismatch> compare_laurent(const Laurent& lhs, const Laurent& rhs) {
    std::set<int> keys;
    for (const auto& [p, c] : lhs) keys.insert(p);
    for (const auto& [p, c] : rhs) keys.insert(p);
    for (int p : keys) {
        int order = -1;
        for (const auto* side : {&lhs, &rhs}) {
            auto it = side->find(p);
            if (it != side->end())
                order = order < 0 ? it->second.order() : std::min(order, it->second.order());
        }
        for (int k = 0; k <= order; ++k) {
            auto value = [&](const Laurent& f) {
                auto it = f.find(p);
                return it == f.end() ? Rat(0) : it->second.coeff(k);
            };
            Rat a = value(lhs), b = value(rhs);
            if (a != b) return FirstMismatch{{p}, {}, k, a.get_str(), b.get_str()};
        }
    }
    return std::nullopt;
}

/// s_mu(z, 1/z) for a two-row gl_2 weight.
inline Laurent laurent_schur(int mu1, int mu2, int order) {
    Laurent r;
    for (int j = 0; j <= mu1 - mu2; ++j) {
        QSeries one = QSeries::one(order);
        laurent_add(r, mu1 - mu2 - 2 * j, one);
    }
    return r;
}

/// Monomial-basis coefficients of p_{(m,0)} in two variables: the reference
/// orthogonalization for small m, the validated closed form beyond it.
inline std::map<Partition, QPoly> two_var_row_expansion(int m) {
    constexpr int kGramSchmidtLimit = 8;
    Partition la = m == 0 ? Partition{} : Partition{m};
    if (m <= kGramSchmidtLimit) return WhittakerTable::global().m_expansion(la);
    return two_row_m_expansion(la);
}

/// p_{(m,0)}(z, 1/z; q) as a Laurent polynomial.
inline Laurent laurent_whittaker_row(int m, int order) {
    Laurent r;
    for (const auto& [mu, c] : two_var_row_expansion(m)) {
        if (mu.length() > 2) continue;
        int a = mu.part(0), b = mu.part(1);
        QSeries cs = QSeries::from_poly(c, order);
        laurent_add(r, a - b, cs);
        if (a != b) laurent_add(r, b - a, cs);
    }
    return r;
}

/// [W_{(m,0)} : V_{(m-a,a)}]_q from the Schur expansion; equals the
/// difference of consecutive monomial coefficients in two variables.
inline QPoly bgg_multiplicity(int m, int a) {
    auto exp = two_var_row_expansion(m);
    auto coeff_at = [&](int j) {
        if (j < 0 || m - j < j) return QPoly();
        Partition key = j == 0 ? (m == 0 ? Partition{} : Partition{m})
                               : Partition{std::vector<int>{m - j, j}};
        auto it = exp.find(key);
        return it == exp.end() ? QPoly() : it->second;
    };
    return coeff_at(a) - coeff_at(a - 1);
}

}  // namespace detail

/// Graded reciprocity in the z-character of gl_2: the induced-module series
/// s_mu(z,1/z) * prod_k (1-q^k)^{-2} (1-q^k z^2)^{-1} (1-q^k z^{-2})^{-1}
/// against the sum over lambda = mu + a*(1,-1) of [W_lambda : V_mu]_q times
/// the global Weyl character.  In this rank-2 normalization the central
/// current directions act freely on every standard object, so each summand
/// carries 1/(q)_{lambda_1 - lambda_2} times the full Euler factor
/// prod_{k<=Q} (1-q^k)^{-1}; the determinant twist is invisible at
/// x = (z, 1/z).  The cutoff is adaptive: the sum stops once the newly
/// computed multiplicity has q-valuation above Q, and the run is flagged
/// inconclusive if the observed valuations fail to be monotone.
inline IdentityReport verify_bgg_gl2(const Partition& mu, int order, int max_cutoff = 64,
                                     const std::optional<Perturbation>& tamper = {},
                                     MutationRecord* applied = nullptr) {
    if (mu.length() > 2) throw std::invalid_argument("verify_bgg_gl2: mu must have length <= 2");
    if (order < 0) throw std::invalid_argument("verify_bgg_gl2: negative q-order");
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "bgg-gl2";
    rep.params = {{"mu1", mu.part(0)}, {"mu2", mu.part(1)}, {"Q", order}};

    Laurent lhs = detail::laurent_schur(mu.part(0), mu.part(1), order);
    for (int k = 1; k <= order; ++k) {
        lhs = detail::laurent_mul(lhs, detail::laurent_geometric(k, 2, order));
        lhs = detail::laurent_mul(lhs, detail::laurent_geometric(k, -2, order));
        QSeries cartan = QSeries::from_poly(QPoly(1) - QPoly::q_power(k), order).inverse();
        lhs = detail::laurent_scale(lhs, cartan * cartan);
    }

    Laurent rhs;
    QSeries euler = inv_qpoch_infinity(order);
    int width = mu.part(0) - mu.part(1);
    std::vector<int> valuations;
    bool conclusive = false;
    int used_cutoff = 0;
    for (int a = 0; a <= max_cutoff; ++a) {
        int m = width + 2 * a;
        QPoly mult = detail::bgg_multiplicity(m, a);
        int val = mult.is_zero() ? order + 1 : mult.valuation();
        {
            std::ostringstream os;
            os << "lambda=(" << mu.part(0) + a << "," << mu.part(1) - a
               << ") min-q-valuation=" << val;
            rep.notes.push_back(os.str());
        }
        if (val > order) {
            conclusive = true;
            used_cutoff = a;
            break;
        }
        valuations.push_back(val);
        Laurent term = detail::laurent_scale(
            detail::laurent_whittaker_row(m, order),
            QSeries::from_poly(mult, order) * inv_qpoch(m, order) * euler);
        for (const auto& [p, c] : term) detail::laurent_add(rhs, p, c);
        used_cutoff = a;
    }
    for (std::size_t i = 1; i < valuations.size(); ++i)
        if (valuations[i] < valuations[i - 1]) conclusive = false;
    rep.params["cutoff"] = used_cutoff;

    if (tamper) {
        MutationRecord rec = detail::mutate(tamper->side == 0 ? lhs : rhs, tamper->seed);
        if (applied) *applied = rec;
    }
    rep.first_mismatch = detail::compare_laurent(lhs, rhs);
    rep.inconclusive = !conclusive;
    rep.verified = !rep.first_mismatch.has_value();
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Cross-pipeline consistency suites, reported in the same format.

namespace detail {

inline std::vector<Partition> shapes_up_to(int max_size) {
    std::vector<Partition> out{Partition{}};
    for (int N = 1; N <= max_size; ++N)
        for (const auto& la : partitions_of(N, N)) out.push_back(la);
    return out;
}

inline std::optional<FirstMismatch> compare_qpoly_at(const Partition& la, const QPoly& a,
                                                     const QPoly& b) {
    if (a == b) return std::nullopt;
    int top = std::max(a.degree(), b.degree());
    for (int k = 0; k <= top; ++k)
        if (a.coeff(k) != b.coeff(k))
            return FirstMismatch{la.parts(), {}, k, a.coeff(k).get_str(), b.coeff(k).get_str()};
    return std::nullopt;
}

}  // namespace detail

/// Filling enumeration against the squarefree coefficient of p_lambda:
/// two independent pipelines for the graded dimension of the local module.
inline IdentityReport verify_kato_vs_whittaker(int max_size) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "kato-vs-whittaker";
    rep.params = {{"max_size", max_size}};
    rep.verified = true;
    for (const auto& la : detail::shapes_up_to(max_size)) {
        int n = std::max(la.size(), 1);
        QPoly filling = kato_graded_dim(la);
        QPoly character =
            la.empty() ? QPoly(1) : coeff_squarefree(whittaker_p(la, n), n);
        if (auto mm = detail::compare_qpoly_at(la, filling, character)) {
            rep.first_mismatch = mm;
            rep.verified = false;
            break;
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// dim W_lambda at q=1 against the product over fundamental weights.
inline IdentityReport verify_dim_product(int max_size, int max_vars) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "dim-product";
    rep.params = {{"max_size", max_size}, {"max_vars", max_vars}};
    rep.verified = true;
    for (const auto& la : detail::shapes_up_to(max_size)) {
        for (int n = std::max(la.length(), 1); n <= max_vars; ++n) {
            if (dim_product_check(la, n)) continue;
            rep.verified = false;
            rep.first_mismatch =
                FirstMismatch{la.parts(), {n}, 0,
                              eval_at_all_ones(whittaker_p(la, n)).eval_at_one().get_str(),
                              "product over fundamental dims"};
            break;
        }
        if (!rep.verified) break;
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Sign-representation multiplicity equals q^{d(lambda)}.
inline IdentityReport verify_sign_multiplicity(int max_size) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "sign-multiplicity";
    rep.params = {{"max_size", max_size}};
    rep.verified = true;
    for (const auto& la : detail::shapes_up_to(max_size)) {
        QPoly got = sign_multiplicity(la);
        QPoly want = QPoly::q_power(static_cast<int>(d_stat(la)));
        if (auto mm = detail::compare_qpoly_at(la, got, want)) {
            rep.first_mismatch = mm;
            rep.verified = false;
            break;
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// q = 0 specialization against the Schur polynomial.
inline IdentityReport verify_q0_schur(int max_size, int max_vars) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "q0-schur";
    rep.params = {{"max_size", max_size}, {"max_vars", max_vars}};
    rep.verified = true;
    for (const auto& la : detail::shapes_up_to(max_size)) {
        for (int n = std::max(la.length(), 1); n <= max_vars; ++n) {
            if (specialize_q(whittaker_p(la, n), 0) == schur(la, n)) continue;
            rep.verified = false;
            rep.first_mismatch = FirstMismatch{la.parts(), {n}, 0, "p at q=0", "schur"};
            break;
        }
        if (!rep.verified) break;
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// q = 1 specialization against prod_i e_{(lambda^t)_i}.
inline IdentityReport verify_q1_elementary(int max_size, int max_vars) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "q1-elementary";
    rep.params = {{"max_size", max_size}, {"max_vars", max_vars}};
    rep.verified = true;
    for (const auto& la : detail::shapes_up_to(max_size)) {
        for (int n = std::max(la.length(), 1); n <= max_vars; ++n) {
            SymPoly<QPoly> prod(n);
            prod.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), {}},
                          QPoly(1));
            Partition conj = la.conjugate();
            for (int h : conj.parts()) prod *= elementary(h, n);
            if (specialize_q(whittaker_p(la, n), 1) == prod) continue;
            rep.verified = false;
            rep.first_mismatch = FirstMismatch{la.parts(), {n}, 0, "p at q=1", "e-product"};
            break;
        }
        if (!rep.verified) break;
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

namespace testing {

/// Targeted perturbation scenarios: drop one Schur pair from the classical
/// kernel sum, or one Euler factor from the deformed sum.
inline IdentityReport cauchy_schur_with_dropped_lambda(int n, int m, int max_deg,
                                                       const Partition& dropped) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "cauchy-schur[dropped]";
    rep.params = {{"n", n}, {"m", m}, {"D", max_deg}};
    auto lhs = builders::cauchy_schur_lhs(n, m, max_deg);
    auto rhs = builders::cauchy_schur_rhs(n, m, max_deg, &dropped);
    rep.first_mismatch = detail::compare_rational_polys(lhs, rhs);
    rep.verified = !rep.first_mismatch.has_value();
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline IdentityReport cauchy_whittaker_with_dropped_qfactor(int n, int m, int max_deg, int order,
                                                            const Partition& victim) {
    detail::Stopwatch sw;
    IdentityReport rep;
    rep.identity = "cauchy-whittaker[dropped-qfactor]";
    rep.params = {{"n", n}, {"m", m}, {"D", max_deg}, {"Q", order}};
    auto lhs = builders::cauchy_whittaker_lhs(n, m, max_deg, order);
    auto rhs = builders::cauchy_whittaker_rhs(n, m, max_deg, order, &victim);
    rep.first_mismatch = detail::compare_series_polys(lhs, rhs);
    rep.verified = !rep.first_mismatch.has_value();
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace testing

}  // namespace qchar
