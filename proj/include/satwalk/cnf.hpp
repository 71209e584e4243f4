#ifndef SATWALK_CNF_HPP
#define SATWALK_CNF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satwalk/rng.hpp"

namespace satwalk {

// One variable occurrence. `var` indexes into [0, n).
struct Literal {
  std::uint32_t var = 0;
  bool neg = false;

  bool operator==(const Literal &) const = default;
};

// Exactly three literals, in source order. Shorter source clauses are
// padded by repeating the last literal, so the width is an invariant.
struct Clause {
  Literal lit[3];

  bool operator==(const Clause &) const = default;
};

// 3-CNF over n boolean variables. Clause order is semantically significant:
// it defines "first violated clause" for the walk. Treat as immutable once
// built; everything downstream shares Formula by const reference.
struct Formula {
  std::uint32_t n = 0;
  std::vector<Clause> clauses;

  std::uint32_t num_clauses() const {
    return static_cast<std::uint32_t>(clauses.size());
  }

  bool operator==(const Formula &) const = default;
};

// One bit per variable, values 0/1, length n.
using Assignment = std::vector<std::uint8_t>;

// True iff literal l holds under x.
inline bool literal_true(const Literal &l, const Assignment &x) {
  return (x[l.var] != 0) != l.neg;
}

inline bool clause_true(const Clause &c, const Assignment &x) {
  return literal_true(c.lit[0], x) || literal_true(c.lit[1], x) ||
         literal_true(c.lit[2], x);
}

// ---- DIMACS I/O ------------------------------------------------------

// Accepts 'c' comments, one "p cnf n L" header, then L zero-terminated
// clauses of width 1..3 (short clauses are padded by repeating the last
// literal). Throws std::runtime_error on malformed input, out-of-range
// variables, width > 3, or clause count mismatch.
Formula parse_dimacs(const std::string &text);

// Inverse of parse_dimacs: all three literals of every clause are written
// verbatim, so parse(serialize(f)) == f byte-for-byte on a round trip.
std::string serialize_dimacs(const Formula &f);

// ---- Evaluation ------------------------------------------------------

// True iff every clause has at least one satisfied literal.
bool evaluate(const Formula &f, const Assignment &x);

// Smallest index of an unsatisfied clause, or nullopt iff x satisfies f.
std::optional<std::uint32_t> first_violated(const Formula &f,
                                            const Assignment &x);

// Exact model count by exhaustive enumeration. Requires
// f.n <= limits().enum_vars.
std::uint64_t count_solutions(const Formula &f);

// ---- Generation ------------------------------------------------------

// L clauses, each over 3 distinct uniformly chosen variables with uniform
// polarities. Deterministic in seed. Requires n >= 3.
Formula generate_random(int n, int L, std::uint64_t seed);

// Formula planted around a hidden assignment x*: clauses are resampled
// until satisfied by x*, so evaluate(f, x*) is true by construction.
// With unique=true, whole formulas are resampled until count_solutions
// is 1 (requires n <= limits().enum_vars; gives up after
// limits().resample_budget formulas).
std::pair<Formula, Assignment> generate_planted(int n, int L,
                                                std::uint64_t seed,
                                                bool unique);

// ---- Small helpers ---------------------------------------------------

// "0110..." <-> Assignment; bit i of the string is variable i.
std::string to_bitstring(const Assignment &x);
Assignment from_bitstring(const std::string &s);

// Dense state index for n <= 32: bit i of the result is variable i.
inline std::uint32_t pack_assignment(const Assignment &x) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    v |= static_cast<std::uint32_t>(x[i] != 0) << i;
  return v;
}

inline Assignment unpack_assignment(std::uint32_t v, std::uint32_t n) {
  Assignment x(n);
  for (std::uint32_t i = 0; i < n; ++i)
    x[i] = static_cast<std::uint8_t>((v >> i) & 1u);
  return x;
}

inline Assignment random_assignment(std::uint32_t n, Rng &rng) {
  Assignment x(n);
  for (auto &b : x)
    b = static_cast<std::uint8_t>(rng.coin());
  return x;
}

} // namespace satwalk

#endif
