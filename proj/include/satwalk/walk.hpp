#ifndef SATWALK_WALK_HPP
#define SATWALK_WALK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satwalk/cnf.hpp"
#include "satwalk/rng.hpp"

namespace satwalk {

// Ternary walk randomness w: symbol j in {0,1,2} selects which literal of
// the first violated clause is flipped at step j. Stored packed, 2 bits
// per symbol; the packing is internal, all access goes through get/set.
class WalkTape {
public:
  WalkTape() = default;
  explicit WalkTape(std::size_t m) : size_(m), words_((m + 31) / 32, 0) {}
  explicit WalkTape(const std::vector<std::uint8_t> &symbols);

  std::size_t size() const { return size_; }

  std::uint32_t get(std::size_t i) const {
    return static_cast<std::uint32_t>(words_[i >> 5] >> ((i & 31) * 2)) & 3u;
  }

  void set(std::size_t i, std::uint32_t v); // v must be in {0,1,2}

  bool operator==(const WalkTape &) const = default;

  std::string to_string() const;                  // "0120..."
  static WalkTape from_string(const std::string &s);
  static WalkTape concat(const WalkTape &a, const WalkTape &b);

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

WalkTape random_tape(std::size_t m, Rng &rng); // one trit draw per symbol

// Base-3 enumeration of all tapes of length m, symbol 0 least significant.
// Requires m <= 40 so the rank fits in 64 bits.
WalkTape nth_tape(std::size_t m, std::uint64_t rank);
std::uint64_t tape_rank(const WalkTape &w);
std::uint64_t pow3(std::size_t e); // 3^e, throws once past 64 bits

// Full record of one deterministic walk: states x_0..x_m and the index of
// the first satisfying state, if any. Satisfying states are absorbing, so
// hit_step present is equivalent to the final state satisfying f.
struct WalkTrace {
  std::vector<Assignment> states;
  std::optional<std::size_t> hit_step;
};

// The deterministic walk map: step j flips the w_j-th literal's variable
// of the first violated clause, or does nothing once satisfied.
// Reference implementation; use WalkEngine for bulk work.
WalkTrace schoening_walk(const Formula &f, const Assignment &x0,
                         const WalkTape &w);

// True iff the walk's final state satisfies f.
bool oracle(const Formula &f, const Assignment &x0, const WalkTape &w);

// Up to N independent length-m walks from uniform starts with uniform
// per-step choices, checking for satisfaction at every step. Returns the
// first satisfying state found; the winner is deterministic in seed
// (lowest iteration index wins even if iterations were run concurrently).
std::optional<Assignment> solve_classical(const Formula &f, std::uint64_t N,
                                          std::size_t m, std::uint64_t seed);

// Number of differing bits; lengths must match.
std::uint32_t hamming(const Assignment &x, const Assignment &y);

// Uniform over the C(n,h) assignments at Hamming distance exactly h from
// x_star. Deterministic in seed (or draws from the given stream).
Assignment sample_hamming_sphere(const Assignment &x_star, std::uint32_t h,
                                 Rng &rng);
Assignment sample_hamming_sphere(const Assignment &x_star, std::uint32_t h,
                                 std::uint64_t seed);

/*--------------------------------------------------------------------*/

// Incremental walker: tracks per-clause satisfied-literal counts and a
// bitset of violated clauses, so one step costs O(occurrences of the
// flipped variable) instead of a scan over all clauses. Works for any n.
class WalkEngine {
public:
  explicit WalkEngine(const Formula &f);

  void reset(const Assignment &x0);

  bool satisfied() const { return num_violated_ == 0; }
  std::uint32_t first_violated_index() const; // requires !satisfied()

  // Flips the c-th literal's variable of the first violated clause.
  // No-op when satisfied. Returns the flipped variable, if any.
  std::optional<std::uint32_t> step(std::uint32_t c);

  // Runs the whole tape; returns the index of the first satisfying state
  // (0 = x0 itself), or nullopt if none of x_0..x_m satisfies f.
  std::optional<std::size_t> run(const Assignment &x0, const WalkTape &w);

  bool bit(std::uint32_t var) const {
    return (state_[var >> 6] >> (var & 63)) & 1u;
  }
  Assignment assignment() const;

  const Formula &formula() const { return *f_; }

private:
  void flip(std::uint32_t var);

  const Formula *f_;
  std::vector<std::uint64_t> state_;    // assignment bits
  std::vector<std::uint8_t> sat_count_; // satisfied literals per clause
  std::vector<std::uint64_t> violated_; // bitset over clause indices
  std::uint32_t num_violated_ = 0;
  // flattened per-variable occurrence lists: clause index + literal sign
  std::vector<std::uint32_t> occ_off_;
  std::vector<std::uint32_t> occ_clause_;
  std::vector<std::uint8_t> occ_neg_;
};

/*--------------------------------------------------------------------*/

// Dense tabulation of the walk map for n <= limits().dense_table_vars:
// for every packed state, whether it satisfies f and where each of the
// three literal choices of its first violated clause leads. Turns walks,
// marked-point counting and tape-space dynamic programming into table
// lookups over the 2^n states.
class TransTable {
public:
  explicit TransTable(const Formula &f);

  std::uint32_t n() const { return n_; }
  std::uint64_t num_states() const { return std::uint64_t(1) << n_; }

  bool sat(std::uint32_t state) const {
    return (sat_[state >> 6] >> (state & 63)) & 1u;
  }
  std::uint64_t solution_count() const; // popcount of the sat bitmap

  std::uint32_t next(std::uint32_t state, std::uint32_t c) const {
    return trans_[std::size_t(state) * 3 + c];
  }

  // Walks from `state` along the tape starting at symbol `from`; returns
  // the first satisfying state's step index offset by `from`, or nullopt.
  std::optional<std::size_t> run(std::uint32_t state, const WalkTape &w,
                                 std::size_t from = 0) const;

  // State reached after consuming the whole tape (absorbing at
  // satisfaction only in the sense that satisfied states do not move).
  std::uint32_t advance(std::uint32_t state, const WalkTape &w) const;

  // Byte map over all states: 1 iff the walk with this fixed tape,
  // started at the state, reaches a satisfying state within |w| steps.
  std::vector<std::uint8_t> hits_with_tape(const WalkTape &w) const;

private:
  std::uint32_t n_;
  std::vector<std::uint64_t> sat_;
  std::vector<std::uint32_t> trans_;
};

} // namespace satwalk

#endif
