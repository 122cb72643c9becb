#pragma once

#include <string>

#include <json.hpp>

#include "lsym/basis.hpp"
#include "lsym/prob.hpp"

namespace lsym {

/**
 * JSON schema for a series:
 *   {"degree_bound": D, "basis": "m|e|h|p|s",
 *    "terms": [{"partition": [..], "coeff": "<scalar string>"}]}
 * terms sorted by the documented partition order.
 */
template <AdamsScalar C>
nlohmann::json series_to_json(const SymSeries<C>& f, Basis b) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [tau, c] : to_basis(f, b)) {
        terms.push_back({{"partition", tau.parts()},
                         {"coeff", ring_traits<C>::to_string(c)}});
    }
    return {{"degree_bound", f.degree_bound()},
            {"basis", std::string(1, basis_char(b))},
            {"terms", terms}};
}

template <AdamsScalar C>
SymSeries<C> series_from_json(const nlohmann::json& j) {
    int d = j.at("degree_bound").get<int>();
    Basis b = parse_basis(j.at("basis").get<std::string>());
    std::map<Partition, C> coeffs;
    for (const auto& t : j.at("terms")) {
        Partition tau(t.at("partition").get<std::vector<int>>());
        coeffs[tau] = ring_traits<C>::parse(t.at("coeff").get<std::string>());
    }
    return from_basis(b, coeffs, d);
}

// RandomVariable schema: {"outcomes": [{"prob": "1/2", "value": "<scalar>"}]}
template <AdamsScalar C>
RandomVariable<C> random_variable_from_json(const nlohmann::json& j) {
    RandomVariable<C> x;
    for (const auto& o : j.at("outcomes"))
        x.outcomes.push_back({parse_rational(o.at("prob").get<std::string>()),
                              ring_traits<C>::parse(o.at("value").get<std::string>())});
    x.validate();
    return x;
}

template <AdamsScalar C>
nlohmann::json random_variable_to_json(const RandomVariable<C>& x) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (const auto& o : x.outcomes)
        outcomes.push_back({{"prob", lsym::to_string(o.prob)},
                            {"value", ring_traits<C>::to_string(o.value)}});
    return {{"outcomes", outcomes}};
}

} // namespace lsym
