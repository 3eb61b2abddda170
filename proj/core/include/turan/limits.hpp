#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

// Thrown when an instance exceeds a configured size cap. Distinct from
// std::invalid_argument so callers can map it to a "computation refused"
// exit path rather than a usage error.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Process-wide size caps. Everything here is desk scale; the caps exist so
// that a typo on the command line fails fast instead of grinding.
namespace limits {

// Maximum number of edge coordinates C(n,r) an EdgeSet may carry.
std::uint64_t max_edges();
void set_max_edges(std::uint64_t value);

// Maximum number of optimal edge sets / tight points enumerated before the
// search marks its result as truncated.
std::uint64_t max_optima();
void set_max_optima(std::uint64_t value);

// Maximum number of clique rows in a constraint system.
std::uint64_t max_lp_rows();
void set_max_lp_rows(std::uint64_t value);

// Largest ambient (edge count) for which facet verification will enumerate
// tight-point extensions outside the inequality's support.
std::uint64_t max_extension_ambient();

}  // namespace limits

}  // namespace turan
