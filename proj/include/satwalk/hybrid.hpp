#ifndef SATWALK_HYBRID_HPP
#define SATWALK_HYBRID_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satwalk/cnf.hpp"
#include "satwalk/grover.hpp"
#include "satwalk/rates.hpp"
#include "satwalk/walk.hpp"

namespace satwalk {

// Cost account of one scheme execution. classical_queries counts full
// walk-and-check oracle evaluations. grover_iterations_total sums the
// amplification rounds over all emulated invocations.
// coherent_stretch_max is the largest single-invocation product
// rounds * m, a proxy for the depth that invocation would have to hold
// coherently. outer_loop_counts tallies consumed iterations per named
// loop; degenerate loops (a single point to sample) are not tallied.
struct CostLedger {
  std::uint64_t classical_queries = 0;
  std::uint64_t grover_iterations_total = 0;
  std::uint64_t coherent_stretch_max = 0;
  std::map<std::string, std::uint64_t> outer_loop_counts;
};

// Analytic knobs plus the derived integer instantiation of one scheme.
// Knobs a scheme does not use stay NaN and loop counts it does not use
// stay 1. The start splits as low variables [0, bits_c) classical, high
// variables [bits_c, n) quantum; the tape as prefix [0, m_c) classical,
// suffix [m_c, m) quantum.
struct SchemeParams {
  Scheme scheme = Scheme::classical;
  double epsilon = 0.1;
  std::uint32_t n = 0;
  std::size_t m = 0;

  double kappa = NAN, mu = NAN, nu = NAN, z = NAN;
  double kappa_c = NAN, kappa_q = NAN;
  double mu_c = NAN, mu_q = NAN, nu_c = NAN, nu_q = NAN;

  std::uint32_t bits_c = 0, bits_q = 0;
  std::size_t m_c = 0, m_q = 0;

  std::uint64_t N1 = 1, N2 = 1;
  std::uint64_t N1_c = 1, N1_q = 1;
  std::uint64_t N2_c = 1, N2_q = 1;
  std::uint64_t N_c = 1, N_q = 1;

  // amplification rounds used in calibrated mode: floor(sqrt(nominal))
  std::uint64_t grover_schedule = 0;
  // true: rounds computed from the exact marked count per invocation;
  // false: every invocation runs grover_schedule rounds
  bool optimal_schedule = true;

  std::uint64_t repeats = 1;               // whole-body repetitions
  std::optional<Assignment> forced_start;  // test hook: pins every x draw
};

// Knob overrides for derive_params; NaN means the scheme default.
// chi applies to fgw only and fixes its coherence budget.
struct Knobs {
  double kappa = NAN, nu = NAN, mu = NAN, z = NAN;
  double kappa_c = NAN, kappa_q = NAN;
  double chi = NAN;
};

// Instantiates a scheme on a concrete formula: rounds the knobs to
// integer sphere and descent targets (half up), rejects roundings that
// break the distance-budget inequality, evaluates the event
// probabilities as exact binomials, and sizes every sampling loop by
// sampling_overhead at an even split of epsilon across the scheme's
// non-degenerate classical loops. Quantum loop sizes are nominal: they
// fix the calibrated round count floor(sqrt(N)) but the default runner
// schedules rounds from the exact marked count instead.
SchemeParams derive_params(Scheme scheme, const Formula &f, double epsilon,
                           const Knobs &knobs = {});

struct SchemeRun {
  Scheme scheme = Scheme::classical;
  SchemeParams params;
  std::optional<Assignment> result;  // satisfies the formula when present
  CostLedger ledger;
  std::uint64_t seed = 0;
};

// Executes the scheme: classical is a single loop of N1*N2 independent
// trials; gi/fgi nest a start loop under each tape draw with the
// remaining start bits amplified; gw/fgw nest a tape-prefix loop under
// each start draw with the tape suffix amplified; efg samples the joint
// classical block and amplifies the joint remainder; hfgi repeats the
// fgi body `repeats` times with one tape per repetition. Deterministic
// in seed; every outer iteration draws from its own split stream, so
// the first success in iteration order wins regardless of scheduling.
SchemeRun run_scheme(const Formula &f, const SchemeParams &params,
                     std::uint64_t seed);

using InstanceFamily =
    std::function<Formula(std::uint32_t n, std::uint64_t seed)>;

struct EmpiricalRate {
  std::uint32_t n = 0;
  double rate = 0;     // mean of log2(queries + rounds) / n
  double std_err = 0;  // sample standard error of that mean
  std::uint64_t trials = 0;
};

// Runs `trials` fresh instances per n and averages the per-run
// log2-cost/n, where cost = classical_queries + grover_iterations_total.
std::vector<EmpiricalRate> empirical_rate(Scheme scheme,
                                          const InstanceFamily &family,
                                          const std::vector<std::uint32_t> &ns,
                                          std::uint64_t trials,
                                          double epsilon, std::uint64_t seed);

// Exact conditional behavior of the walk under one fixed tape, computed
// by sweeping all 2^n starts through the dense transition table.
// fraction_by_h[h] is the probability that the walk stopped exactly at
// the reference assignment given a uniform start at Hamming distance h;
// hit_fraction is the share of all starts whose walk satisfies anything.
// aggregate_rate = -log2(hit_fraction) / (2n): the log-cost rate of an
// amplified search whose oracle is this walk.
struct ConditionalRates {
  std::vector<double> fraction_by_h;   // index 0..n
  std::vector<double> sphere_log2;     // log2 C(n,h), same indexing
  double hit_fraction = 0;
  double aggregate_rate = 0;
};

ConditionalRates derandomized_conditional_rate(const Formula &f,
                                               const Assignment &x_star,
                                               const WalkTape &w);

struct SphereRow {
  std::uint32_t h = 0;
  double estimate = 0;  // Pr[walk stops exactly at the reference]
  double std_err = 0;
  double theory = 0;    // 2^{-h}
};

// Monte Carlo of the conditional hit law: per h, `samples` starts drawn
// uniformly from the distance-h sphere, walked for round-half-up(mu*n)
// steps. By default every sample draws a fresh tape, so the estimate
// targets the tape-averaged law the theory column states; with
// fixed_tape=true one tape is drawn up front and shared by all samples.
std::vector<SphereRow> sphere_experiment(const Formula &f,
                                         const Assignment &x_star,
                                         std::uint32_t h_max,
                                         std::uint64_t samples, double mu,
                                         std::uint64_t seed,
                                         bool fixed_tape = false);

} // namespace satwalk

#endif
