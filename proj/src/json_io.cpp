#include "foamlab/json_io.hpp"

#include "foamlab/errors.hpp"

namespace foamlab {

nlohmann::json poly_to_json(const SymPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back({{"exponents", it->first}, {"coeff", it->second}});
    return out;
}

SymPoly poly_from_json(const nlohmann::json& j, int nvars, Coeffs k) {
    if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
    SymPoly p(nvars, k);
    for (const auto& t : j) {
        if (!t.contains("exponents") || !t.contains("coeff")) throw DomainError("polynomial term needs exponents and coeff");
        p.add_term(t.at("exponents").get<Exponents>(), t.at("coeff").get<std::int64_t>());
    }
    return p;
}

nlohmann::json laurent_to_json(const LaurentQ& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"qexp", e}, {"coeff", c}});
    return out;
}

LaurentQ laurent_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("Laurent JSON must be an array");
    LaurentQ p;
    for (const auto& t : j) p.add_term(t.at("qexp").get<int>(), t.at("coeff").get<std::int64_t>());
    return p;
}

}  // namespace foamlab
