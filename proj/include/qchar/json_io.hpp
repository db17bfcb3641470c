#pragma once

#include <string>

#include "json.hpp"
#include "qchar/partition.hpp"
#include "qchar/series.hpp"
#include "qchar/sympoly.hpp"

namespace qchar {

using Json = nlohmann::json;

inline Json to_json(const QPoly& p) {
    Json a = Json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(k).get_str());
    return a;
}

inline QPoly qpoly_from_json(const Json& j) {
    std::vector<Int> c;
    for (const auto& s : j) c.emplace_back(s.get<std::string>());
    return QPoly::from_coeffs(std::move(c));
}

inline Json to_json(const QSeries& s) {
    Json a = Json::array();
    for (int k = 0; k <= s.order(); ++k) a.push_back(s.coeff(k).get_str());
    return Json{{"coefficients", a}, {"truncation_order", s.order()}};
}

inline QSeries qseries_from_json(const Json& j) {
    int order = j.at("truncation_order").get<int>();
    QSeries s(order);
    const auto& a = j.at("coefficients");
    for (int k = 0; k <= order && k < static_cast<int>(a.size()); ++k) {
        Rat v(a[static_cast<std::size_t>(k)].get<std::string>());
        v.canonicalize();
        s.coeff_ref(k) = v;
    }
    return s;
}

namespace detail {

inline Json coeff_json(const QPoly& c) { return to_json(c); }
inline Json coeff_json(const QSeries& c) { return to_json(c); }
inline Json coeff_json(const Rat& c) { return Json(c.get_str()); }
inline Json coeff_json(const QRat& c) {
    return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}};
}

template <typename R>
const char* ring_tag();
template <>
inline const char* ring_tag<QPoly>() { return "integer-qpoly"; }
template <>
inline const char* ring_tag<QSeries>() { return "rational-qseries"; }
template <>
inline const char* ring_tag<QRat>() { return "q-rational"; }
template <>
inline const char* ring_tag<Rat>() { return "rational"; }

}  // namespace detail

template <typename R>
Json to_json(const SymPoly<R>& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back(Json{{"exponents_x", m.x},
                             {"exponents_y", m.y},
                             {"coefficient", detail::coeff_json(c)}});
    }
    return Json{{"n_x", f.nx()}, {"n_y", f.ny()},
                {"ring", detail::ring_tag<R>()}, {"terms", terms}};
}

inline SymPoly<QPoly> sympoly_qpoly_from_json(const Json& j) {
    if (j.at("ring").get<std::string>() != detail::ring_tag<QPoly>())
        throw std::invalid_argument("sympoly_qpoly_from_json: wrong ring tag");
    SymPoly<QPoly> f(j.at("n_x").get<int>(), j.at("n_y").get<int>());
    for (const auto& t : j.at("terms")) {
        Monomial m{t.at("exponents_x").get<std::vector<int>>(),
                   t.at("exponents_y").get<std::vector<int>>()};
        f.add_term(std::move(m), qpoly_from_json(t.at("coefficient")));
    }
    return f;
}

}  // namespace qchar
