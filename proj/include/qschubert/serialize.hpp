#pragma once

#include <string>

#include <json.hpp>

#include "qschubert/qhring.hpp"
#include "qschubert/reduce.hpp"

namespace qschubert {

using json = nlohmann::ordered_json;

/// "1,1,0"
std::string format_lambda(const CorootVector& lambda);
/// Parses "1,1,0" (or "[1,1,0]") against the rank of rs.
CorootVector parse_lambda(const RootSystem& rs, std::string_view text);

/// Human-readable (u | v | w | λ), words in canonical form.
std::string format_quad(const RootSystem& rs, const Quad& q);

json to_json(const RootSystem& rs, const Quad& q);
Quad quad_from_json(const RootSystem& rs, const json& j);

/// [{"rule", "alpha", "direction"?, "before", "after"}]; "direction" only on rewrites.
json to_json(const RootSystem& rs, const ReductionTrace& trace);
ReductionTrace trace_from_json(const RootSystem& rs, const json& j);

/// {"terms":[{"w","lambda","coeff"}]} in term order.
json to_json(const RootSystem& rs, const QHElement& x);

/// Integer JSON value when it fits in 64 bits, else a decimal string.
json integer_json(const mpz_class& value);

}  // namespace qschubert
