#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/polynomial.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/ratfunc.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace kacpoly {

using Json = nlohmann::ordered_json;

/// Built-in quivers: a1, a2, a3, d4, triangle, kronecker<m> (m >= 0).
std::optional<Quiver> builtin_quiver(const std::string& name);

/// {"vertices": [...], "arrows": [{"from": .., "to": ..}, ...]}.
/// Throws DomainError on malformed documents or invalid quivers.
Quiver quiver_from_json(const Json& doc);
Json quiver_to_json(const Quiver& q);

/// A built-in name, or else a path to a quiver JSON file.
Quiver load_quiver(const std::string& name_or_path);

/// "1,0,2" -> (1,0,2). Throws DomainError on malformed input.
DimVector parse_dim_list(const std::string& text);

/// Ascending coefficients as decimal strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& coefficients);
/// {"num": [...], "den": [...]}.
Json ratfunc_to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const Json& doc);

Json dimvector_to_json(const DimVector& v);

} // namespace kacpoly
