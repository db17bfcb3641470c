#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qchar/json_io.hpp"
#include "qchar/partition.hpp"
#include "qchar/series.hpp"
#include "qchar/sympoly.hpp"

namespace qchar {

namespace detail {

/// Multiplication by the power sum p_r in the monomial basis of symmetric
/// functions: p_r * m_mu = sum over distinct part values s of mu (0 allowed,
/// meaning a new part) of mult_nu(s+r) * m_nu, where nu = mu with one s
/// replaced by s + r.
inline std::map<Partition, Int> p_times_m(int r, const std::map<Partition, Int>& f) {
    std::map<Partition, Int> out;
    for (const auto& [mu, c] : f) {
        std::vector<int> values{0};
        for (int p : mu.parts())
            if (std::find(values.begin(), values.end(), p) == values.end())
                values.push_back(p);
        for (int s : values) {
            std::vector<int> nu = mu.parts();
            if (s > 0) nu.erase(std::find(nu.begin(), nu.end(), s));
            nu.push_back(s + r);
            std::sort(nu.begin(), nu.end(), std::greater<int>());
            long mult = static_cast<long>(std::count(nu.begin(), nu.end(), s + r));
            out[Partition(std::move(nu))] += c * mult;
        }
    }
    return out;
}

inline Int z_factor(const Partition& rho) {
    Int z(1);
    int run = 0;
    const auto& parts = rho.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
        z *= parts[i];
        z *= run;
    }
    return z;
}

/// Per-degree orthogonalization workspace.  Everything is expressed in
/// power-sum coordinates, where the t = 0 Macdonald pairing is diagonal:
/// <p_rho, p_rho> = z_rho * prod_i (1 - q^{rho_i}).
class DegreeEngine {
public:
    explicit DegreeEngine(int n_boxes) : n_(n_boxes) {
        auto desc = partitions_of(n_, std::max(n_, 1));
        asc_.assign(desc.rbegin(), desc.rend());
        for (std::size_t i = 0; i < asc_.size(); ++i)
            index_[asc_[i]] = static_cast<int>(i);
        build_transition();
        built_.resize(asc_.size());
    }

    const std::vector<Partition>& basis() const { return asc_; }

    int index_of(const Partition& la) const {
        auto it = index_.find(la);
        if (it == index_.end()) throw std::invalid_argument("DegreeEngine: wrong degree");
        return it->second;
    }

    /// Monomial-basis expansion of the orthogonal polynomial attached to
    /// asc_[idx]; coefficients are guaranteed integer q-polynomials.
    const std::map<Partition, QPoly>& m_expansion(int idx) {
        ensure_built(idx);
        return built_[static_cast<std::size_t>(idx)]->mexp;
    }

private:
    struct PData {
        std::vector<QRat> pc;
        QRat norm2;
        std::map<Partition, QPoly> mexp;
    };

    void build_transition() {
        const std::size_t k = asc_.size();
        p_in_m_.assign(k, std::vector<Rat>(k, Rat(0)));
        for (std::size_t r = 0; r < k; ++r) {
            std::map<Partition, Int> rep{{Partition{}, Int(1)}};
            for (int part : asc_[r].parts()) rep = p_times_m(part, rep);
            for (const auto& [mu, c] : rep)
                p_in_m_[r][static_cast<std::size_t>(index_of(mu))] = Rat(c);
        }
        m_in_p_ = invert(p_in_m_);
        z_.reserve(k);
        w_.reserve(k);
        for (const auto& rho : asc_) {
            z_.push_back(z_factor(rho));
            QPoly w(1);
            for (int part : rho.parts()) w *= QPoly(1) - QPoly::q_power(part);
            w_.push_back(std::move(w));
        }
    }

    static std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& a) {
        const std::size_t k = a.size();
        std::vector<std::vector<Rat>> m(a), inv(k, std::vector<Rat>(k, Rat(0)));
        for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (piv < k && m[piv][col] == 0) ++piv;
            if (piv == k) throw std::logic_error("DegreeEngine: singular transition matrix");
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
            Rat d = m[col][col];
            for (std::size_t j = 0; j < k; ++j) { m[col][j] /= d; inv[col][j] /= d; }
            for (std::size_t row = 0; row < k; ++row) {
                if (row == col || m[row][col] == 0) continue;
                Rat f = m[row][col];
                for (std::size_t j = 0; j < k; ++j) {
                    m[row][j] -= f * m[col][j];
                    inv[row][j] -= f * inv[col][j];
                }
            }
        }
        return inv;
    }

    QRat pairing(const std::vector<QRat>& a, const std::vector<QRat>& b) const {
        QRat acc;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero() || b[i].is_zero()) continue;
            acc += a[i] * b[i] * QRat(QPoly(z_[i]) * w_[i]);
        }
        return acc;
    }

    std::vector<QRat> to_qrat(const std::vector<Rat>& v) const {
        std::vector<QRat> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) r[i] = QRat(v[i]);
        return r;
    }

    void ensure_built(int idx) {
        for (int j = 0; j <= idx; ++j) {
            if (built_[static_cast<std::size_t>(j)]) continue;
            PData d;
            std::vector<QRat> mj = to_qrat(m_in_p_[static_cast<std::size_t>(j)]);
            d.pc = mj;
            for (int k = 0; k < j; ++k) {
                const PData& pk = *built_[static_cast<std::size_t>(k)];
                QRat c = pairing(mj, pk.pc) / pk.norm2;
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < d.pc.size(); ++i)
                    if (!pk.pc[i].is_zero()) d.pc[i] -= c * pk.pc[i];
            }
            d.norm2 = pairing(d.pc, d.pc);
            if (d.norm2.is_zero())
                throw std::logic_error("DegreeEngine: isotropic vector in orthogonalization");
            d.mexp = to_m_basis(d.pc, asc_[static_cast<std::size_t>(j)]);
            built_[static_cast<std::size_t>(j)] = std::move(d);
        }
    }

    std::map<Partition, QPoly> to_m_basis(const std::vector<QRat>& pc, const Partition& la) const {
        std::map<Partition, QPoly> out;
        for (std::size_t mu = 0; mu < asc_.size(); ++mu) {
            QRat acc;
            for (std::size_t rho = 0; rho < pc.size(); ++rho) {
                if (pc[rho].is_zero() || p_in_m_[rho][mu] == 0) continue;
                acc += pc[rho] * QRat(p_in_m_[rho][mu]);
            }
            if (acc.is_zero()) continue;
            QPoly c = qrat_reduce_to_poly(acc);  // aborts unless exactly polynomial
            const Partition& m = asc_[mu];
            if (!dominance_leq(m, la))
                throw std::logic_error("DegreeEngine: support escapes the dominance ideal");
            if (m == la && !(c == QPoly(1)))
                throw std::logic_error("DegreeEngine: leading coefficient is not 1");
            out.emplace(m, std::move(c));
        }
        return out;
    }

    int n_;
    std::vector<Partition> asc_;
    std::map<Partition, int> index_;
    std::vector<std::vector<Rat>> p_in_m_;
    std::vector<std::vector<Rat>> m_in_p_;
    std::vector<Int> z_;
    std::vector<QPoly> w_;
    std::vector<std::optional<PData>> built_;
};

/// Closed form for two-row shapes in two variables: the monomial-basis
/// coefficients of p_{(a,b)}(x1,x2;q) are Gaussian binomials
/// [a-b choose j]_q at (a-j, b+j).  Used where the generic
/// orthogonalization would be needlessly expensive; validated against it
/// in the test suite.
inline std::map<Partition, QPoly> two_row_m_expansion(const Partition& la) {
    if (la.length() > 2) throw std::invalid_argument("two_row_m_expansion: length > 2");
    int a = la.part(0), b = la.part(1);
    std::map<Partition, QPoly> out;
    for (int j = 0; a - j >= b + j; ++j)
        out[Partition{std::vector<int>{a - j, b + j}}] = gaussian_binomial(a - b, j);
    return out;
}

}  // namespace detail

/// Memoized q-Whittaker data.  The alphabet-free monomial expansion is
/// cached per shape; assembled polynomials are cached per (shape, n) and
/// optionally persisted to a cache directory as JSON.
class WhittakerTable {
public:
    static WhittakerTable& global() {
        static WhittakerTable t;
        return t;
    }

    void set_cache_dir(std::string dir) {
        std::lock_guard<std::mutex> lock(mu_);
        cache_dir_ = std::move(dir);
        if (!cache_dir_.empty()) std::filesystem::create_directories(cache_dir_);
    }

    std::map<Partition, QPoly> m_expansion(const Partition& la) {
        std::lock_guard<std::mutex> lock(mu_);
        return m_expansion_locked(la);
    }

    SymPoly<QPoly> p(const Partition& la, int n) {
        if (la.length() > n)
            throw std::invalid_argument("whittaker_p: partition longer than alphabet");
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(la, n);
        if (auto it = assembled_.find(key); it != assembled_.end()) return *it->second;
        if (!cache_dir_.empty()) {
            if (auto f = load_cached(la, n)) {
                auto sp = std::make_shared<const SymPoly<QPoly>>(std::move(*f));
                assembled_.emplace(key, sp);
                return *sp;
            }
        }
        SymPoly<QPoly> out(n);
        for (const auto& [mu, c] : m_expansion_locked(la)) {
            if (mu.length() > n) continue;
            out += monomial_sym(mu, n) * c;
        }
        auto sp = std::make_shared<const SymPoly<QPoly>>(std::move(out));
        assembled_.emplace(key, sp);
        if (!cache_dir_.empty()) store_cached(la, n, *sp);
        return *sp;
    }

    static std::string cache_filename(const Partition& la, int n) {
        return "p_" + (la.empty() ? std::string("0") : la.str()) + "_" + std::to_string(n) +
               ".json";
    }

private:
    std::map<Partition, QPoly> m_expansion_locked(const Partition& la) {
        int nb = la.size();
        auto& eng = engines_[nb];
        if (!eng) eng = std::make_unique<detail::DegreeEngine>(nb);
        return eng->m_expansion(eng->index_of(la));
    }

    std::optional<SymPoly<QPoly>> load_cached(const Partition& la, int n) const {
        auto path = std::filesystem::path(cache_dir_) / cache_filename(la, n);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        try {
            Json j = Json::parse(in);
            SymPoly<QPoly> f = sympoly_qpoly_from_json(j);
            if (f.nx() != n || f.ny() != 0) return std::nullopt;
            return f;
        } catch (const std::exception&) {
            return std::nullopt;  // unreadable cache entries are recomputed
        }
    }

    void store_cached(const Partition& la, int n, const SymPoly<QPoly>& f) const {
        auto path = std::filesystem::path(cache_dir_) / cache_filename(la, n);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << to_json(f).dump(2) << "\n";
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
    }

    std::mutex mu_;
    std::map<int, std::unique_ptr<detail::DegreeEngine>> engines_;
    std::map<std::pair<Partition, int>, std::shared_ptr<const SymPoly<QPoly>>> assembled_;
    std::string cache_dir_;
};

/// p_lambda(x_1..x_n; q): monic dominance-triangular in the monomial basis
/// and orthogonal for the t = 0 Macdonald pairing.  Coefficients come out
/// of the orthogonalization as exact integer q-polynomials or the whole
/// computation aborts.
inline SymPoly<QPoly> whittaker_p(const Partition& la, int n) {
    return WhittakerTable::global().p(la, n);
}

/// Graded character of the local Weyl module: same polynomial, the
/// representation-theoretic name.
inline SymPoly<QPoly> local_weyl_char(const Partition& la, int n) {
    return whittaker_p(la, n);
}

/// Hilbert series of the highest-weight algebra:
/// prod_{i=1}^{n} 1/(q)_{lambda_i - lambda_{i+1}}.
inline QSeries hw_algebra_char(const Partition& la, int n, int order) {
    QSeries r = QSeries::one(order);
    for (int i = 0; i < n; ++i) r *= inv_qpoch(la.part(i) - la.part(i + 1), order);
    return r;
}

/// Graded character of the global Weyl module, truncated at q^order.
inline SymPoly<QSeries> global_weyl_char(const Partition& la, int n, int order) {
    return to_series(whittaker_p(la, n), order) * hw_algebra_char(la, n, order);
}

/// Schur-basis expansion of p_lambda; the graded multiplicities
/// [W_lambda : V_mu]_q.  Values must be q-polynomials with nonnegative
/// integer coefficients.
inline std::map<Partition, QPoly> weyl_schur_multiplicities(const Partition& la, int n) {
    auto mult = expand_schur_basis(whittaker_p(la, n));
    for (const auto& [mu, c] : mult)
        for (int k = 0; k <= c.degree(); ++k)
            if (c.coeff(k) < 0)
                throw std::logic_error(
                    "weyl_schur_multiplicities: negative coefficient at s_" + mu.str());
    return mult;
}

/// dim W_lambda = prod_i (dim W_{omega_i})^{lambda_i - lambda_{i+1}} with
/// the fundamental local Weyl modules being the exterior powers.
inline bool dim_product_check(const Partition& la, int n) {
    if (la.length() > n)
        throw std::invalid_argument("dim_product_check: partition longer than alphabet");
    Int lhs = eval_at_all_ones(whittaker_p(la, n)).eval_at_one();
    Int rhs(1);
    for (int i = 0; i < n - 1; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(i + 1));
        for (int rep = 0; rep < la.part(i) - la.part(i + 1); ++rep) rhs *= binom;
    }
    return lhs == rhs;
}

/// Coefficient of the sign representation s_{(1^n)} in p_lambda at n = |lambda|.
inline QPoly sign_multiplicity(const Partition& la) {
    int n = la.size();
    if (n == 0) return QPoly(1);
    auto mult = weyl_schur_multiplicities(la, n);
    Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    auto it = mult.find(ones);
    return it == mult.end() ? QPoly() : it->second;
}

}  // namespace qchar
