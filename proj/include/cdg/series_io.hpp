#ifndef CDG_SERIES_IO_HPP
#define CDG_SERIES_IO_HPP

#include <string>

#include <json.hpp>

#include "cdg/series.hpp"

namespace cdg {

using json = nlohmann::json;

/* Series serialize with big integers as decimal strings:
 *   {"var":"u","order":N,"coeffs":[["num","den"],...]}
 * Bivariate series nest a t-polynomial array per u-coefficient. */

inline json to_json(const Rational& q) {
    return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

inline Rational rational_from_json(const json& j) {
    return rational_from_strings(j.at(0).get<std::string>(), j.at(1).get<std::string>());
}

inline json to_json(const Poly& p, const std::string& var = "y") {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_json(p.coeff(k)));
    return json{{"var", var}, {"coeffs", coeffs}};
}

inline Poly poly_from_json(const json& j) {
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(rational_from_json(c));
    return Poly(std::move(cs));
}

inline json to_json(const SeriesQ& s, const std::string& var = "u") {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_json(s.coeff(k)));
    return json{{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline SeriesQ seriesq_from_json(const json& j) {
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(rational_from_json(c));
    return SeriesQ(std::move(cs), j.at("order").get<int>());
}

inline json to_json(const SeriesB& s, const std::string& var = "u", const std::string& tvar = "t") {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        const Poly& p = s.coeff(k);
        json tp = json::array();
        for (int g = 0; g <= p.degree(); ++g) tp.push_back(to_json(p.coeff(g)));
        coeffs.push_back(tp);
    }
    return json{{"var", var}, {"tvar", tvar}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline SeriesB seriesb_from_json(const json& j) {
    SeriesB out(j.at("order").get<int>());
    int k = 0;
    for (const auto& tp : j.at("coeffs")) {
        std::vector<Rational> cs;
        for (const auto& c : tp) cs.push_back(rational_from_json(c));
        out.set_coeff(k++, Poly(std::move(cs)));
    }
    return out;
}

}  // namespace cdg

#endif
