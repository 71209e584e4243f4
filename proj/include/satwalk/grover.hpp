#ifndef SATWALK_GROVER_HPP
#define SATWALK_GROVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "satwalk/cnf.hpp"
#include "satwalk/walk.hpp"

namespace satwalk {

// A product search space over walk inputs: the listed start bits range
// over {0,1} and the listed tape symbols over {0,1,2}, everything else is
// frozen at the base point. A point is marked when the walk it describes
// reaches a satisfying state.
struct SearchSpace {
  const Formula *f = nullptr;
  Assignment x_base;
  std::vector<std::uint32_t> free_x; // strictly increasing variable indices
  WalkTape w_base;
  std::vector<std::size_t> free_w;   // strictly increasing symbol indices

  // 2^|free_x| * 3^|free_w|; throws past 2^63
  std::uint64_t size() const;

  // Point index idx = x_rank + 2^|free_x| * w_rank, with x_rank read as a
  // bit vector over free_x and w_rank as base-3 digits over free_w.
  Assignment assignment_at(std::uint64_t idx) const;
  WalkTape tape_at(std::uint64_t idx) const;
};

// Reusable per-formula precomputation shared by repeated marked-set
// queries: the dense transition table, the hit map of the most recently
// used full tape, and the tape-suffix count levels. All three depend only
// on the formula (the hit map also on its tape), so callers issuing many
// queries against one formula pass the same context to every call.
// Not thread-safe.
class GroverContext {
public:
  explicit GroverContext(const Formula &f);

  const Formula *formula() const { return f_; }
  // null when the formula is too large for the dense table
  const TransTable *table() const { return table_ ? &*table_ : nullptr; }

  // per-state hit map for walks driven by the full tape w
  const std::vector<std::uint8_t> &hits_for(const WalkTape &w);
  // levels [0..R]; level r counts length-r tape suffixes that hit
  const std::vector<std::vector<std::uint64_t>> &suffix_counts(std::size_t R);

private:
  const Formula *f_;
  std::optional<TransTable> table_;
  std::optional<WalkTape> hits_tape_;
  std::vector<std::uint8_t> hits_;
  std::vector<std::vector<std::uint64_t>> counts_;
};

// Exact number of marked points. Uses the dense transition table when the
// formula fits and the free tape symbols form a suffix (or are absent);
// otherwise enumerates, refusing spaces beyond limits().enum_points.
// A context built on the same Formula object is used when given.
std::uint64_t count_marked(const SearchSpace &space,
                           GroverContext *ctx = nullptr);

// floor(pi/4 sqrt(N/t)) for 1 <= t < N, otherwise 0.
std::uint64_t grover_iterations(std::uint64_t N, std::uint64_t t);

// sin^2((2k+1) asin(sqrt(t/N))): the probability that k amplification
// rounds over N points with t marked end on a marked one.
double grover_success_prob(std::uint64_t N, std::uint64_t t, std::uint64_t k);

struct GroverDraw {
  bool marked;
  Assignment x;              // full start assignment of the drawn point
  WalkTape w;                // full tape of the drawn point
  std::uint64_t iterations;  // amplification rounds charged
  std::uint64_t space_size;
  std::uint64_t marked_count;
  double success_prob;
};

// One emulated amplified measurement: with the success probability above
// the draw is uniform over marked points, otherwise uniform over unmarked
// ones. The round count defaults to grover_iterations(N, t); a caller
// that fixes the schedule without knowing t can override it.
GroverDraw emulate_grover(const SearchSpace &space, Rng &rng,
                          std::optional<std::uint64_t> iterations_override =
                              std::nullopt,
                          GroverContext *ctx = nullptr);

// Register estimate for running the walk coherently: n start qubits,
// ceil(m log2 3) tape qubits and a step counter of m ceil(log2 L) qubits.
std::uint64_t estimate_qubits(std::uint32_t n, std::size_t m,
                              std::uint32_t L);

} // namespace satwalk

#endif
