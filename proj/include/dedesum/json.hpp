#ifndef DEDESUM_JSON_HPP_INCLUDED
#define DEDESUM_JSON_HPP_INCLUDED

// JSON forms of the exchanged values:
//   Cyclotomic  {"order": m, "coeffs": ["p/q", ...]}
//   character   {"modulus": q, "label": "q:e1,e2", "order": k, "parity": +-1, "conductor": f}
//   matrix      {"a": "..", "b": "..", "c": "..", "d": "..", "level": N}

#include <json.hpp> // nlohmann/json, vendored

#include <stdexcept>
#include <string>

#include "dedesum/characters.hpp"
#include "dedesum/cyclotomic.hpp"
#include "dedesum/modgroup.hpp"

namespace dedesum {

using Json = nlohmann::ordered_json;

inline std::string rational_to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline Json to_json(const Cyclotomic& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(rational_to_string(c));
    return Json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j)
{
    const Int m = j.at("order").get<Int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<Int>(coeffs.size()) != euler_phi(m))
        throw std::invalid_argument("cyclotomic JSON: expected phi(order) coefficients");
    std::vector<Rational> v;
    for (const auto& c : coeffs)
        v.push_back(rational_from_string(c.get<std::string>()));
    return Cyclotomic::from_powers(m, std::move(v));
}

inline Json to_json(const DirichletCharacter& chi)
{
    return Json{{"modulus", chi.modulus()},
                {"label", chi.label()},
                {"order", chi.order()},
                {"parity", chi.parity()},
                {"conductor", chi.conductor()}};
}

inline Json to_json(const GammaMatrix& g)
{
    return Json{{"a", g.a().get_str()},
                {"b", g.b().get_str()},
                {"c", g.c().get_str()},
                {"d", g.d().get_str()},
                {"level", g.level()}};
}

inline GammaMatrix gamma_from_json(const Json& j)
{
    auto entry = [&](const char* key) {
        const auto& v = j.at(key);
        mpz_class z;
        if (v.is_string()) {
            if (z.set_str(v.get<std::string>(), 10) != 0)
                throw std::invalid_argument(std::string("matrix JSON: malformed entry ") + key);
        } else {
            z = v.get<long>();
        }
        return z;
    };
    return {entry("a"), entry("b"), entry("c"), entry("d"), j.at("level").get<Int>()};
}

} // namespace dedesum

#endif // DEDESUM_JSON_HPP_INCLUDED
