#ifndef SATWALK_MARKOV_HPP
#define SATWALK_MARKOV_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "satwalk/binomial.hpp"
#include "satwalk/cnf.hpp"
#include "satwalk/walk.hpp"

namespace satwalk {

// Signed-distance model of the walk: from distance d the chain moves to
// d-1 with probability 1/3 and to d+1 with probability 2/3, without a
// barrier at zero. Success means a final position <= 0 after m steps;
// the start is binomial(n, 1/2). This lower-bounds the true walk's hit
// probability on satisfiable instances.
double z_walk_success(std::uint32_t n, std::size_t m);
Rational z_walk_success_exact(std::uint32_t n, std::size_t m);

// Same model conditioned on a fixed start distance j.
double z_walk_success_given(std::uint32_t j, std::size_t m);
Rational z_walk_success_given_exact(std::uint32_t j, std::size_t m);

// Independent evaluation of z_walk_success by stepping the chain's full
// distribution for m steps instead of summing the closed form.
Rational z_walk_success_chain(std::uint32_t n, std::size_t m);

// Smallest number of independent tries N with (1-p)^N <= eps.
std::uint64_t sampling_overhead(double p, double eps);

/*--------------------------------------------------------------------*/

// One walk driven by tape b, together with the dominating counting
// process d_tilde: it starts at the Hamming distance from x_star, is
// absorbing at 0, and otherwise decrements exactly when the tape symbol
// equals the preferred slot, the lowest-index literal of the current
// first violated clause that x_star satisfies (0 once the state itself
// satisfies f). When x_star is the unique satisfying assignment, the
// walk's true distance never exceeds d_tilde at any step.
struct CoupledTrace {
  std::vector<Assignment> states;       // x_0 .. x_m
  std::vector<std::uint32_t> d_tilde;   // same length as states
  std::vector<std::uint8_t> preferred;  // one slot per step
};

CoupledTrace coupled_walk(const Formula &f, const Assignment &x_star,
                          const Assignment &x0, const WalkTape &b);

// Tape-space change of variables: symbol s of the result is
// (b_s - preferred_s) mod 3, with preferred_s computed along the walk
// that b itself drives. For fixed f, x_star and x0 this is a bijection
// on {0,1,2}^m, so uniform walk randomness induces uniform chain
// randomness. The inverse reconstructs b symbol by symbol, stepping the
// walk as it goes.
WalkTape pessimistic_tape(const Formula &f, const Assignment &x_star,
                          const Assignment &x0, const WalkTape &b);
WalkTape pessimistic_tape_inverse(const Formula &f, const Assignment &x_star,
                                  const Assignment &x0,
                                  const WalkTape &b_tilde);

// Exhaustively checks that `map` permutes all 3^m tapes of length m.
bool tape_map_is_bijective(
    std::size_t m, const std::function<WalkTape(const WalkTape &)> &map);

/*--------------------------------------------------------------------*/

// Per-step shift: value in {0,1,2} that may depend on the assignment and
// on tape symbols strictly before position s only.
using StepMap =
    std::function<std::uint8_t(const Assignment &a, const WalkTape &b,
                               std::size_t s)>;

// Change of variables on {0,1}^n x {0,1,2}^l: the assignment passes
// through unchanged and symbol s becomes (b_s - f(a, b, s)) mod 3. For
// any prefix-respecting f this permutes the product space; the inverse
// rebuilds the original tape symbol by symbol. pessimistic_tape is the
// instance where f is the preferred slot along the walk driven by b.
std::pair<Assignment, WalkTape> bijection_q(const StepMap &f,
                                            const Assignment &a,
                                            const WalkTape &b);
std::pair<Assignment, WalkTape> bijection_q_inverse(const StepMap &f,
                                                    const Assignment &a,
                                                    const WalkTape &b_tilde);

// Pushes the uniform law on the product space through the map and checks
// the image is exactly uniform: every pair hit exactly once. Requires
// n <= 4 and l <= 5.
using PairMap =
    std::function<std::pair<Assignment, WalkTape>(const Assignment &,
                                                  const WalkTape &)>;
bool uniformity_check(std::uint32_t n, std::size_t l, const PairMap &map);
bool uniformity_check(std::uint32_t n, std::size_t l, const StepMap &f);

} // namespace satwalk

#endif
