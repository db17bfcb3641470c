#pragma once

#include <gmpxx.h>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qchar {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a q-rational that should have been a polynomial is not.
/// Downstream this is an internal-consistency alarm, never a user error.
struct NonPolynomialCoefficient : std::runtime_error {
    explicit NonPolynomialCoefficient(const std::string& what) : std::runtime_error(what) {}
};

/// Element of Z[q], dense, leading stored coefficient nonzero.
/// The zero polynomial stores no coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(long v) { if (v != 0) c_.assign(1, Int(v)); }
    QPoly(Int v) { if (v != 0) c_.assign(1, std::move(v)); }

    static QPoly q_power(int k, Int coeff = 1) {
        if (k < 0) throw std::invalid_argument("QPoly: negative q-power");
        QPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, Int(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    static QPoly from_coeffs(std::vector<Int> c) {
        QPoly p;
        p.c_ = std::move(c);
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const Int& coeff(int k) const {
        static const Int zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    /// Lowest nonzero power; throws on the zero polynomial.
    int valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        throw std::domain_error("QPoly::valuation: zero polynomial");
    }

    const Int& leading() const {
        if (is_zero()) throw std::domain_error("QPoly::leading: zero polynomial");
        return c_.back();
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            if (k < a.c_.size()) r.c_[k] += a.c_[k];
            if (k < b.c_.size()) r.c_[k] += b.c_[k];
        }
        r.normalize();
        return r;
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

    QPoly operator-() const {
        QPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        QPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    QPoly& operator+=(const QPoly& o) { *this = *this + o; return *this; }
    QPoly& operator-=(const QPoly& o) { *this = *this - o; return *this; }
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }

    bool operator==(const QPoly&) const = default;

    Int eval_at_one() const {
        Int s(0);
        for (const auto& x : c_) s += x;
        return s;
    }

    Rat eval(const Rat& q0) const {
        Rat s(0);
        for (std::size_t k = c_.size(); k-- > 0;) s = s * q0 + Rat(c_[k]);
        return s;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Int a = c_[k];
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (k == 0) os << a.get_str();
            else {
                if (a != 1) os << a.get_str() << "*";
                os << "q";
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

namespace detail {

inline Int poly_content(const QPoly& p) {
    Int g(0);
    for (const auto& x : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial
}

/// Divides every coefficient by d; d must divide exactly.
inline QPoly poly_div_int(const QPoly& p, const Int& d) {
    if (d == 0) throw std::domain_error("poly_div_int: division by zero");
    std::vector<Int> c(p.coeffs());
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("poly_div_int: inexact");
        x /= d;
    }
    return QPoly::from_coeffs(std::move(c));
}

inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    Int c = poly_content(p);
    return poly_div_int(p, c);
}

/// Exact division in Z[q]; returns nullopt if b does not divide a there.
inline std::optional<QPoly> exact_divide(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
    if (a.is_zero()) return QPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& lead = rem[static_cast<std::size_t>(k + b.degree())];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
        Int f = lead / b.leading();
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return QPoly::from_coeffs(std::move(quot));
}

/// Pseudo-remainder of primitive a by primitive b (deg a >= deg b).
inline QPoly pseudo_rem(QPoly a, const QPoly& b) {
    int d = a.degree() - b.degree();
    QPoly lb(b.leading());
    for (int i = 0; i <= d; ++i) a = a * lb;
    // standard long division; every step is now exact on the leading term
    std::vector<Int> rem(a.coeffs());
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        if (static_cast<std::size_t>(k + b.degree()) >= rem.size()) continue;
        Int lead = rem[static_cast<std::size_t>(k + b.degree())];
        if (lead == 0) continue;
        Int f = lead / b.leading();
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    return QPoly::from_coeffs(std::move(rem));
}

/// gcd in Z[q], primitive PRS; result has positive leading coefficient.
inline QPoly poly_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.is_zero() || b.leading() > 0 ? b : -b;
    if (b.is_zero()) return a.leading() > 0 ? a : -a;
    Int ca = poly_content(a), cb = poly_content(b);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = poly_div_int(a, ca);
    b = poly_div_int(b, cb);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        QPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? QPoly() : primitive_part(r);
        if (!b.is_zero() && a.degree() < b.degree()) std::swap(a, b);
    }
    QPoly g = a * QPoly(cg);
    return g.leading() > 0 ? g : -g;
}

}  // namespace detail

/// (q)_n = prod_{l=1}^{n} (1 - q^l); (q)_0 = 1.
inline QPoly qpoch(int n) {
    if (n < 0) throw std::invalid_argument("qpoch: negative index");
    QPoly r(1);
    for (int l = 1; l <= n; ++l) r *= QPoly(1) - QPoly::q_power(l);
    return r;
}

/// Gaussian binomial [m choose k]_q via the Pascal recurrence; exact in Z[q].
inline QPoly gaussian_binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) return QPoly();
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPoly(1);
    for (int i = 1; i <= m; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                QPoly::q_power(j) * row[static_cast<std::size_t>(j)] +
                row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

/// Truncated power series over Q: coefficients of q^0..q^order inclusive.
/// Binary operations take the minimum truncation order of the operands.
class QSeries {
public:
    explicit QSeries(int order) : order_(check_order(order)), c_(static_cast<std::size_t>(order) + 1, Rat(0)) {}

    static QSeries one(int order) {
        QSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    static QSeries from_poly(const QPoly& p, int order) {
        QSeries s(order);
        for (int k = 0; k <= std::min(order, p.degree()); ++k)
            s.c_[static_cast<std::size_t>(k)] = Rat(p.coeff(k));
        return s;
    }

    int order() const { return order_; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    const Rat& coeff(int k) const {
        if (k < 0 || k > order_)
            throw std::out_of_range("QSeries::coeff: beyond truncation order");
        return c_[static_cast<std::size_t>(k)];
    }

    Rat& coeff_ref(int k) {
        if (k < 0 || k > order_)
            throw std::out_of_range("QSeries::coeff_ref: beyond truncation order");
        return c_[static_cast<std::size_t>(k)];
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k)
            r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k)
            r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }

    QSeries operator-() const {
        QSeries r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; i + j <= r.order_; ++j)
                if (b.coeff(j) != 0)
                    r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    QSeries& operator+=(const QSeries& o) { *this = *this + o; return *this; }
    QSeries& operator-=(const QSeries& o) { *this = *this - o; return *this; }
    QSeries& operator*=(const QSeries& o) { *this = *this * o; return *this; }

    bool operator==(const QSeries&) const = default;

    /// Multiplicative inverse up to the truncation order.
    QSeries inverse() const {
        if (c_[0] == 0)
            throw std::domain_error("QSeries::inverse: constant term is zero");
        QSeries r(order_);
        r.c_[0] = 1 / c_[0];
        for (int k = 1; k <= order_; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j)
                acc += c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(k - j)];
            r.c_[static_cast<std::size_t>(k)] = -acc / c_[0];
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            if (c_[static_cast<std::size_t>(k)] == 0) continue;
            os << (first ? "" : " + ") << c_[static_cast<std::size_t>(k)].get_str();
            if (k >= 1) os << "*q" << (k > 1 ? "^" + std::to_string(k) : "");
            first = false;
        }
        if (first) os << "0";
        os << " + O(q^" << order_ + 1 << ")";
        return os.str();
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("QSeries: negative truncation order");
        return order;
    }

    int order_;
    std::vector<Rat> c_;
};

/// 1/(q)_n as a series truncated at `order`.
inline QSeries inv_qpoch(int n, int order) {
    return QSeries::from_poly(qpoch(n), order).inverse();
}

/// 1/(q)_infty truncated at `order`; factors (1-q^l) with l > order are
/// invisible below q^{order+1}.
inline QSeries inv_qpoch_infinity(int order) {
    return inv_qpoch(order, order);
}

/// Ratio of integer q-polynomials in canonical form: gcd removed, integer
/// contents coprime, denominator with positive leading coefficient.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long v) : num_(v), den_(1) {}
    QRat(QPoly p) : num_(std::move(p)), den_(1) {}
    QRat(const Rat& r) : num_(Int(r.get_num())), den_(Int(r.get_den())) {}
    QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw std::domain_error("QRat: division by zero");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRat operator-() const { QRat r(*this); r.num_ = -r.num_; return r; }
    QRat& operator+=(const QRat& o) { *this = *this + o; return *this; }
    QRat& operator-=(const QRat& o) { *this = *this - o; return *this; }
    QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }
    QRat& operator/=(const QRat& o) { *this = *this / o; return *this; }

    bool operator==(const QRat&) const = default;

    bool is_polynomial() const { return den_ == QPoly(1); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
        if (num_.is_zero()) { den_ = QPoly(1); return; }
        QPoly g = detail::poly_gcd(num_, den_);
        if (g.degree() > 0 || g.leading() != 1) {
            num_ = *detail::exact_divide(num_, g);
            den_ = *detail::exact_divide(den_, g);
        }
        Int cn = detail::poly_content(num_), cd = detail::poly_content(den_);
        Int c;
        mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (c > 1) {
            num_ = detail::poly_div_int(num_, c);
            den_ = detail::poly_div_int(den_, c);
        }
        if (den_.leading() < 0) { num_ = -num_; den_ = -den_; }
    }

    QPoly num_;
    QPoly den_;
};

/// Exact quotient when the denominator divides the numerator.  On a
/// canonical QRat that means den == 1; anything else is reported as a
/// non-polynomial coefficient, the orthogonalization pipeline's alarm.
inline QPoly qrat_reduce_to_poly(const QRat& r) {
    if (!r.is_polynomial())
        throw NonPolynomialCoefficient("qrat_reduce_to_poly: remainder nonzero, " + r.str());
    return r.num();
}

}  // namespace qchar
