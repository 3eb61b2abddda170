#include "turan/limits.hpp"

#include <atomic>

namespace turan::limits {

namespace {
std::atomic<std::uint64_t> g_max_edges{4096};
std::atomic<std::uint64_t> g_max_optima{100000};
std::atomic<std::uint64_t> g_max_lp_rows{10000};
}  // namespace

std::uint64_t max_edges() { return g_max_edges.load(); }
void set_max_edges(std::uint64_t value) { g_max_edges.store(value); }

std::uint64_t max_optima() { return g_max_optima.load(); }
void set_max_optima(std::uint64_t value) { g_max_optima.store(value); }

std::uint64_t max_lp_rows() { return g_max_lp_rows.load(); }
void set_max_lp_rows(std::uint64_t value) { g_max_lp_rows.store(value); }

std::uint64_t max_extension_ambient() { return 28; }

}  // namespace turan::limits
