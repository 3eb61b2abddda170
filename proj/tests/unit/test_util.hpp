#pragma once

#include <cstdint>

#include "turan/limits.hpp"

namespace turan_test {

// Restores the optima cap on scope exit so cap-twiddling tests can't leak.
struct OptimaCapGuard {
  std::uint64_t saved;
  explicit OptimaCapGuard(std::uint64_t value) : saved(turan::limits::max_optima()) {
    turan::limits::set_max_optima(value);
  }
  ~OptimaCapGuard() { turan::limits::set_max_optima(saved); }
};

struct EdgeCapGuard {
  std::uint64_t saved;
  explicit EdgeCapGuard(std::uint64_t value) : saved(turan::limits::max_edges()) {
    turan::limits::set_max_edges(value);
  }
  ~EdgeCapGuard() { turan::limits::set_max_edges(saved); }
};

}  // namespace turan_test
