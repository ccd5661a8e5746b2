#include "blochlab/json_io.hpp"

#include <stdexcept>

namespace blochlab {

Json polynomial_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const Complex& c : p.coefficients())
        arr.push_back(Json::array({c.real(), c.imag()}));
    return arr;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::runtime_error("polynomial_from_json: expected a nonempty array");
    std::vector<Complex> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::runtime_error("polynomial_from_json: coefficients must be [re, im] pairs");
        coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return Polynomial(std::move(coeffs));
}

namespace {

Json analytic_to_json(const AnalyticFunction& f) {
    if (const auto* p = dynamic_cast<const Polynomial*>(&f))
        return polynomial_to_json(*p);
    if (dynamic_cast<const LogFixture*>(&f))
        return Json("log_fixture");
    throw std::runtime_error("harmonic_map_to_json: analytic part has no serializable form");
}

AnalyticPtr analytic_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "log_fixture")
            return make_log_fixture();
        throw std::runtime_error("harmonic_map_from_json: unknown named function '" +
                                 j.get<std::string>() + "'");
    }
    return std::make_shared<Polynomial>(polynomial_from_json(j));
}

}  // namespace

Json harmonic_map_to_json(const HarmonicMap& f) {
    Json j = Json::object();
    j["h"] = analytic_to_json(f.h());
    j["g"] = analytic_to_json(f.g());
    return j;
}

HarmonicMap harmonic_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("g"))
        throw std::runtime_error("harmonic_map_from_json: expected an object with 'h' and 'g'");
    return HarmonicMap(analytic_from_json(j.at("h")), analytic_from_json(j.at("g")));
}

Json sup_estimate_to_json(const SupEstimate& e) {
    Json j = Json::object();
    j["value"] = e.value;
    j["argmax"] = Json::array({e.argmax.real(), e.argmax.imag()});
    j["grid_value"] = e.grid_value;
    j["refined"] = e.refined;
    j["tolerance"] = e.tolerance;
    return j;
}

}  // namespace blochlab
