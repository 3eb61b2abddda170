#pragma once

#include <string>

#include "turan/combinat.hpp"
#include "turan/facets.hpp"
#include "turan/inequalities.hpp"

namespace turan {

// Canonical JSON forms of the core types. Documents are deterministic:
// fixed key order, edges ascending by colex rank, weights as "p/q" strings.
// indent < 0 emits compact single-line output.

std::string to_json_string(const EdgeSet& edges, int indent = 2);
std::string to_json_string(const LinearInequality& ineq, int indent = 2);
std::string to_json_string(const CGDerivation& derivation, int indent = 2);
std::string to_json_string(const FacetVerdict& verdict, int indent = 2);
std::string to_json_string(const ValidityReport& report, int indent = 2);

EdgeSet edge_set_from_json(const std::string& text);
LinearInequality inequality_from_json(const std::string& text);

}  // namespace turan
