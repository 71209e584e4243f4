#ifndef SATWALK_CONFIG_HPP
#define SATWALK_CONFIG_HPP

#include <cstdint>

namespace satwalk {

// Resource limits for operations that enumerate state spaces exhaustively.
// All limits are overridable per call site; these are the defaults.
struct Limits {
  int enum_vars = 26;                 // max n for count_solutions (2^26 assignments)
  std::uint64_t enum_points = std::uint64_t(1) << 26; // max search-space size for exact sweeps
  int dense_table_vars = 22;          // max n for dense per-state transition tables
  int resample_budget = 10000;        // attempts before generate_planted(unique) gives up
};

inline Limits &limits() {
  static Limits l;
  return l;
}

// Clause/variable ratio used by generators when the caller does not give L.
inline constexpr double default_clause_ratio = 4.55;

} // namespace satwalk

#endif
