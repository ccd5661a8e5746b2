#pragma once

#include <json.hpp>

#include "blochlab/harmonic.hpp"
#include "blochlab/seminorms.hpp"

namespace blochlab {

// ordered_json keeps insertion order, so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

// [[re, im], ...], constant coefficient first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"h": <coeffs or "log_fixture">, "g": <coeffs or "log_fixture">}.
// Throws std::runtime_error for analytic parts with no coefficient form.
Json harmonic_map_to_json(const HarmonicMap& f);
HarmonicMap harmonic_map_from_json(const Json& j);

Json sup_estimate_to_json(const SupEstimate& e);

}  // namespace blochlab
