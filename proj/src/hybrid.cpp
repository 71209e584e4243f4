#include "satwalk/hybrid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "satwalk/binomial.hpp"
#include "satwalk/markov.hpp"

namespace satwalk {

namespace {

double pick(double knob, double fallback) {
  return std::isnan(knob) ? fallback : knob;
}

std::uint32_t round_half_up(double x) {
  if (x < 0) throw std::domain_error("negative size target");
  return static_cast<std::uint32_t>(std::floor(x + 0.5));
}

// C(bits, k) / 2^bits
double sphere_prob(std::uint32_t bits, std::uint32_t k) {
  if (k > bits) throw std::domain_error("sphere radius exceeds block size");
  const Rational p(binomial(bits, k), BigInt(1) << bits);
  return p.convert_to<double>();
}

// C(syms, d) (1/3)^d (2/3)^{syms-d}
double descent_prob(std::size_t syms, std::size_t d) {
  if (d > syms) throw std::domain_error("descent target exceeds block size");
  const Rational p(binomial(syms, d) * (BigInt(1) << (syms - d)),
                   boost::multiprecision::pow(BigInt(3), unsigned(syms)));
  return p.convert_to<double>();
}

std::uint64_t isqrt_floor(std::uint64_t v) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(double(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_distance_budget(std::uint64_t radius_total, std::size_t m,
                           std::uint64_t descents_total) {
  // a walk of m steps starting radius_total away and descending
  // descents_total times ends at radius_total + m - 2*descents_total;
  // the rounded targets must keep that at or below zero
  if (radius_total + m > 2 * descents_total)
    throw std::domain_error(
        "rounded sphere and descent targets cannot reach the solution");
}

struct Runner {
  const Formula &f;
  const SchemeParams &p;
  SchemeRun &run;
  WalkEngine engine;
  std::optional<GroverContext> ctx;
  Rng root;

  Runner(const Formula &formula, const SchemeParams &params, SchemeRun &r,
         std::uint64_t seed)
      : f(formula), p(params), run(r), engine(formula), root(seed) {
    if (p.scheme != Scheme::classical) ctx.emplace(formula);
  }

  void tally(const char *loop) { ++run.ledger.outer_loop_counts[loop]; }

  // one full walk-and-check oracle evaluation
  bool verify(const Assignment &x, const WalkTape &w) {
    ++run.ledger.classical_queries;
    if (engine.run(x, w)) {
      run.result = engine.assignment();
      return true;
    }
    return false;
  }

  GroverDraw amplify(const SearchSpace &space, Rng &rng) {
    const std::optional<std::uint64_t> override_k =
        p.optimal_schedule ? std::nullopt
                           : std::optional<std::uint64_t>(p.grover_schedule);
    GroverDraw d = emulate_grover(space, rng, override_k, &*ctx);
    run.ledger.grover_iterations_total += d.iterations;
    run.ledger.coherent_stretch_max =
        std::max(run.ledger.coherent_stretch_max, d.iterations * p.m);
    return d;
  }

  Assignment draw_start(Rng &rng) {
    if (p.forced_start) return *p.forced_start;
    return random_assignment(p.n, rng);
  }

  void run_classical() {
    const unsigned __int128 total =
        (unsigned __int128)p.N1 * (unsigned __int128)p.N2;
    if (total >> 62) throw std::domain_error("trial count overflow");
    for (std::uint64_t i = 0; i < std::uint64_t(total) && !run.result; ++i) {
      Rng rng = root.split(i);
      tally("trials");
      const Assignment x = draw_start(rng);
      const WalkTape w = random_tape(p.m, rng);
      verify(x, w);
    }
  }

  // gi is fgi with no classical start bits and a single inner iteration
  void run_start_amplified() {
    const std::uint64_t inner = p.scheme == Scheme::gi ? 1 : p.N1_c;
    std::vector<std::uint32_t> free_x(p.bits_q);
    std::iota(free_x.begin(), free_x.end(), p.bits_c);
    for (std::uint64_t i = 0; i < p.N2 && !run.result; ++i) {
      Rng rng = root.split(i);
      if (p.m > 0) tally("tapes");
      const WalkTape w = random_tape(p.m, rng);
      for (std::uint64_t j = 0; j < inner && !run.result; ++j) {
        if (p.bits_c > 0) tally("starts");
        SearchSpace space;
        space.f = &f;
        space.x_base = Assignment(p.n, 0);
        space.free_x = free_x;
        space.w_base = w;
        for (std::uint32_t v = 0; v < p.bits_c; ++v)
          space.x_base[v] = rng.coin();
        const GroverDraw d = amplify(space, rng);
        verify(d.x, d.w);
      }
    }
  }

  // gw is fgw with no classical tape prefix and a single inner iteration
  void run_tape_amplified() {
    const std::uint64_t inner = p.scheme == Scheme::gw ? 1 : p.N2_c;
    std::vector<std::size_t> free_w(p.m_q);
    std::iota(free_w.begin(), free_w.end(), p.m_c);
    for (std::uint64_t i = 0; i < p.N1 && !run.result; ++i) {
      Rng rng = root.split(i);
      if (p.n > 0) tally("starts");
      const Assignment x = draw_start(rng);
      for (std::uint64_t j = 0; j < inner && !run.result; ++j) {
        if (p.m_c > 0) tally("tapes");
        SearchSpace space;
        space.f = &f;
        space.x_base = x;
        space.w_base = WalkTape(p.m);
        space.free_w = free_w;
        for (std::size_t s = 0; s < p.m_c; ++s)
          space.w_base.set(s, rng.trit());
        const GroverDraw d = amplify(space, rng);
        verify(d.x, d.w);
      }
    }
  }

  void run_joint_amplified() {
    std::vector<std::uint32_t> free_x(p.bits_q);
    std::iota(free_x.begin(), free_x.end(), p.bits_c);
    std::vector<std::size_t> free_w(p.m_q);
    std::iota(free_w.begin(), free_w.end(), p.m_c);
    for (std::uint64_t i = 0; i < p.N_c && !run.result; ++i) {
      Rng rng = root.split(i);
      if (p.bits_c + p.m_c > 0) tally("draws");
      SearchSpace space;
      space.f = &f;
      space.x_base = Assignment(p.n, 0);
      space.free_x = free_x;
      space.w_base = WalkTape(p.m);
      space.free_w = free_w;
      for (std::uint32_t v = 0; v < p.bits_c; ++v)
        space.x_base[v] = rng.coin();
      for (std::size_t s = 0; s < p.m_c; ++s)
        space.w_base.set(s, rng.trit());
      const GroverDraw d = amplify(space, rng);
      verify(d.x, d.w);
    }
  }

  void run_repeated_heuristic() {
    std::vector<std::uint32_t> free_x(p.bits_q);
    std::iota(free_x.begin(), free_x.end(), p.bits_c);
    for (std::uint64_t rep = 0; rep < p.repeats && !run.result; ++rep) {
      Rng rng = root.split(rep);
      tally("repeats");
      if (p.m > 0) tally("tapes");
      const WalkTape w = random_tape(p.m, rng);
      for (std::uint64_t j = 0; j < p.N1_c && !run.result; ++j) {
        if (p.bits_c > 0) tally("starts");
        SearchSpace space;
        space.f = &f;
        space.x_base = Assignment(p.n, 0);
        space.free_x = free_x;
        space.w_base = w;
        for (std::uint32_t v = 0; v < p.bits_c; ++v)
          space.x_base[v] = rng.coin();
        const GroverDraw d = amplify(space, rng);
        verify(d.x, d.w);
      }
    }
  }
};

} // namespace

SchemeParams derive_params(Scheme scheme, const Formula &f, double epsilon,
                           const Knobs &knobs) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  SchemeParams p;
  p.scheme = scheme;
  p.epsilon = epsilon;
  p.n = f.n;
  const std::uint32_t n = f.n;

  switch (scheme) {
    case Scheme::classical: {
      p.kappa = pick(knobs.kappa, 1.0 / 3.0);
      p.nu = pick(knobs.nu, 2.0 / 3.0);
      p.mu = pick(knobs.mu, 3.0 * p.kappa);
      p.m = round_half_up(p.mu * n);
      const std::uint32_t k = round_half_up(p.kappa * n);
      const std::uint32_t d = round_half_up(p.nu * double(p.m));
      check_distance_budget(k, p.m, d);
      const int loops = (n > 0) + (p.m > 0);
      const double share = epsilon / std::max(1, loops);
      p.N1 = sampling_overhead(sphere_prob(n, k), share);
      p.N2 = sampling_overhead(descent_prob(p.m, d), share);
      break;
    }
    case Scheme::gi: {
      p.kappa = pick(knobs.kappa, 1.0 / 5.0);
      p.nu = pick(knobs.nu, 2.0 / 3.0);
      p.mu = pick(knobs.mu, 3.0 * p.kappa);
      p.m = round_half_up(p.mu * n);
      const std::uint32_t k = round_half_up(p.kappa * n);
      const std::uint32_t d = round_half_up(p.nu * double(p.m));
      check_distance_budget(k, p.m, d);
      const double share = epsilon / std::max(1, int(p.m > 0));
      p.N1 = sampling_overhead(sphere_prob(n, k), share);
      p.N2 = sampling_overhead(descent_prob(p.m, d), share);
      p.bits_q = n;
      p.grover_schedule = isqrt_floor(p.N1);
      break;
    }
    case Scheme::gw: {
      p.kappa = pick(knobs.kappa, std::sqrt(2.0) - 1.0);
      p.nu = pick(knobs.nu, 2.0 / 3.0);
      p.mu = pick(knobs.mu, 3.0 * p.kappa);
      p.m = round_half_up(p.mu * n);
      const std::uint32_t k = round_half_up(p.kappa * n);
      const std::uint32_t d = round_half_up(p.nu * double(p.m));
      check_distance_budget(k, p.m, d);
      const double share = epsilon / std::max(1, int(n > 0));
      p.N1 = sampling_overhead(sphere_prob(n, k), share);
      p.N2 = sampling_overhead(descent_prob(p.m, d), share);
      p.m_q = p.m;
      p.grover_schedule = isqrt_floor(p.N2);
      break;
    }
    case Scheme::fgi: {
      p.z = pick(knobs.z, 0.5);
      if (!(p.z >= 0.0 && p.z <= 1.0))
        throw std::domain_error("split fraction must lie in [0,1]");
      p.kappa_c = pick(knobs.kappa_c, pick(knobs.kappa, 1.0 / 3.0));
      p.kappa_q = pick(knobs.kappa_q, pick(knobs.kappa, 1.0 / 3.0));
      p.nu = pick(knobs.nu, 2.0 / 3.0);
      p.bits_q = static_cast<std::uint32_t>(std::floor(p.z * n));
      p.bits_c = n - p.bits_q;
      const double kbar =
          n == 0 ? 0.0 : (p.kappa_c * p.bits_c + p.kappa_q * p.bits_q) / n;
      p.mu = pick(knobs.mu, 3.0 * kbar);
      p.m = round_half_up(p.mu * n);
      const std::uint32_t k_c = round_half_up(p.kappa_c * p.bits_c);
      const std::uint32_t k_q = round_half_up(p.kappa_q * p.bits_q);
      const std::uint32_t d = round_half_up(p.nu * double(p.m));
      check_distance_budget(std::uint64_t(k_c) + k_q, p.m, d);
      const int loops = (p.m > 0) + (p.bits_c > 0);
      const double share = epsilon / std::max(1, loops);
      p.N2 = sampling_overhead(descent_prob(p.m, d), share);
      p.N1_c = sampling_overhead(sphere_prob(p.bits_c, k_c), share);
      p.N1_q = sampling_overhead(sphere_prob(p.bits_q, k_q), share);
      p.grover_schedule = isqrt_floor(p.N1_q);
      break;
    }
    case Scheme::fgw: {
      const double chi = pick(knobs.chi, 1.0 / 12.0);
      const FgwKnobs fp = fgw_params(chi);
      p.kappa = fp.kappa;
      p.mu_c = fp.mu_c;
      p.mu_q = fp.mu_q;
      p.nu_c = fp.nu_c;
      p.nu_q = fp.nu_q;
      p.m_c = round_half_up(p.mu_c * n);
      p.m_q = round_half_up(p.mu_q * n);
      p.m = p.m_c + p.m_q;
      p.mu = p.mu_c + p.mu_q;
      const std::uint32_t k = round_half_up(p.kappa * n);
      const std::uint32_t d_c = round_half_up(p.nu_c * double(p.m_c));
      const std::uint32_t d_q = round_half_up(p.nu_q * double(p.m_q));
      check_distance_budget(k, p.m, std::uint64_t(d_c) + d_q);
      const int loops = (n > 0) + (p.m_c > 0);
      const double share = epsilon / std::max(1, loops);
      p.N1 = sampling_overhead(sphere_prob(n, k), share);
      p.N2_c = sampling_overhead(descent_prob(p.m_c, d_c), share);
      p.N2_q = sampling_overhead(descent_prob(p.m_q, d_q), share);
      p.grover_schedule = isqrt_floor(p.N2_q);
      break;
    }
    case Scheme::efg: {
      p.z = pick(knobs.z, 0.5);
      if (!(p.z >= 0.0 && p.z <= 1.0))
        throw std::domain_error("split fraction must lie in [0,1]");
      p.kappa = pick(knobs.kappa, 1.0 / 3.0);
      p.nu = pick(knobs.nu, 2.0 / 3.0);
      p.mu = pick(knobs.mu, 3.0 * p.kappa);
      p.bits_q = static_cast<std::uint32_t>(std::floor(p.z * n));
      p.bits_c = n - p.bits_q;
      p.m = round_half_up(p.mu * n);
      p.m_q = static_cast<std::size_t>(std::floor(p.z * double(p.m)));
      p.m_c = p.m - p.m_q;
      const std::uint32_t k_c = round_half_up(p.kappa * p.bits_c);
      const std::uint32_t k_q = round_half_up(p.kappa * p.bits_q);
      const std::uint32_t d_c = round_half_up(p.nu * double(p.m_c));
      const std::uint32_t d_q = round_half_up(p.nu * double(p.m_q));
      check_distance_budget(std::uint64_t(k_c) + k_q, p.m,
                            std::uint64_t(d_c) + d_q);
      const int loops = (p.bits_c + p.m_c > 0) ? 1 : 0;
      const double share = epsilon / std::max(1, loops);
      p.N_c = sampling_overhead(
          sphere_prob(p.bits_c, k_c) * descent_prob(p.m_c, d_c), share);
      p.N_q = sampling_overhead(
          sphere_prob(p.bits_q, k_q) * descent_prob(p.m_q, d_q), share);
      p.grover_schedule = isqrt_floor(p.N_q);
      break;
    }
    case Scheme::hfgi: {
      p.z = pick(knobs.z, 0.5);
      if (!(p.z >= 0.0 && p.z <= 1.0))
        throw std::domain_error("split fraction must lie in [0,1]");
      p.mu = pick(knobs.mu, 3.0);
      p.m = round_half_up(p.mu * n);
      p.bits_q = static_cast<std::uint32_t>(std::floor(p.z * n));
      p.bits_c = n - p.bits_q;
      p.N1_c = static_cast<std::uint64_t>(
          std::ceil(std::exp2(gamma_classical * p.bits_c)));
      p.N1_q = static_cast<std::uint64_t>(
          std::ceil(std::exp2(gamma_classical * p.bits_q / 2.0)));
      p.repeats = sampling_overhead(0.5, epsilon);
      p.grover_schedule = isqrt_floor(p.N1_q);
      break;
    }
  }
  return p;
}

SchemeRun run_scheme(const Formula &f, const SchemeParams &params,
                     std::uint64_t seed) {
  if (params.n != f.n)
    throw std::invalid_argument("params derived for a different size");
  if (params.forced_start && params.forced_start->size() != f.n)
    throw std::invalid_argument("forced start has the wrong length");
  SchemeRun run;
  run.scheme = params.scheme;
  run.params = params;
  run.seed = seed;
  Runner r(f, params, run, seed);
  switch (params.scheme) {
    case Scheme::classical: r.run_classical(); break;
    case Scheme::gi:
    case Scheme::fgi: r.run_start_amplified(); break;
    case Scheme::gw:
    case Scheme::fgw: r.run_tape_amplified(); break;
    case Scheme::efg: r.run_joint_amplified(); break;
    case Scheme::hfgi: r.run_repeated_heuristic(); break;
  }
  return run;
}

std::vector<EmpiricalRate> empirical_rate(Scheme scheme,
                                          const InstanceFamily &family,
                                          const std::vector<std::uint32_t> &ns,
                                          std::uint64_t trials,
                                          double epsilon,
                                          std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("at least one trial");
  std::vector<EmpiricalRate> out;
  Rng root(seed);
  for (const std::uint32_t n : ns) {
    Rng stream = root.split(n);
    double sum = 0, sum_sq = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng pair = stream.split(t);
      const Formula f = family(n, pair.u64());
      const SchemeParams params = derive_params(scheme, f, epsilon);
      const SchemeRun run = run_scheme(f, params, pair.u64());
      const double cost = double(run.ledger.classical_queries +
                                 run.ledger.grover_iterations_total);
      const double v = std::log2(std::max(1.0, cost)) / double(n);
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / double(trials);
    double se = 0;
    if (trials > 1) {
      const double var =
          std::max(0.0, (sum_sq - sum * mean) / double(trials - 1));
      se = std::sqrt(var / double(trials));
    }
    out.push_back({n, mean, se, trials});
  }
  return out;
}

ConditionalRates derandomized_conditional_rate(const Formula &f,
                                               const Assignment &x_star,
                                               const WalkTape &w) {
  if (!evaluate(f, x_star))
    throw std::invalid_argument("reference assignment must satisfy f");
  const TransTable table(f);
  const std::uint32_t n = f.n;
  const std::size_t states = std::size_t(table.num_states());

  // stop[v]: the state where the walk from v driven by w halts, either
  // the first satisfying state or wherever the tape runs out
  std::vector<std::uint32_t> stop(states), next_level(states);
  for (std::size_t v = 0; v < states; ++v)
    stop[v] = static_cast<std::uint32_t>(v);
  for (std::size_t j = w.size(); j-- > 0;) {
    const std::uint32_t c = w.get(j);
    for (std::size_t v = 0; v < states; ++v) {
      const std::uint32_t state = static_cast<std::uint32_t>(v);
      next_level[v] = table.sat(state) ? state : stop[table.next(state, c)];
    }
    stop.swap(next_level);
  }

  const std::uint32_t star = pack_assignment(x_star);
  std::vector<std::uint64_t> at_star(n + 1, 0);
  std::uint64_t satisfied = 0;
  for (std::size_t v = 0; v < states; ++v) {
    if (table.sat(stop[v])) ++satisfied;
    if (stop[v] == star)
      ++at_star[std::uint32_t(
          std::popcount(static_cast<std::uint32_t>(v) ^ star))];
  }

  ConditionalRates out;
  out.fraction_by_h.resize(n + 1);
  out.sphere_log2.resize(n + 1);
  for (std::uint32_t h = 0; h <= n; ++h) {
    const double sphere = binomial(n, h).convert_to<double>();
    out.fraction_by_h[h] = double(at_star[h]) / sphere;
    out.sphere_log2[h] = std::log2(sphere);
  }
  out.hit_fraction = double(satisfied) / double(states);
  out.aggregate_rate = -std::log2(out.hit_fraction) / (2.0 * n);
  return out;
}

std::vector<SphereRow> sphere_experiment(const Formula &f,
                                         const Assignment &x_star,
                                         std::uint32_t h_max,
                                         std::uint64_t samples, double mu,
                                         std::uint64_t seed,
                                         bool fixed_tape) {
  if (!evaluate(f, x_star))
    throw std::invalid_argument("reference assignment must satisfy f");
  if (h_max > f.n) throw std::invalid_argument("sphere radius exceeds n");
  if (samples == 0) throw std::invalid_argument("at least one sample");
  if (!(mu > 0)) throw std::invalid_argument("walk length factor positive");
  const std::size_t m = round_half_up(mu * f.n);

  WalkEngine engine(f);
  Rng root(seed);
  WalkTape shared(m);
  if (fixed_tape) {
    Rng tape_stream = root.split(std::uint64_t(h_max) + 1);
    shared = random_tape(m, tape_stream);
  }

  std::vector<SphereRow> rows;
  for (std::uint32_t h = 0; h <= h_max; ++h) {
    Rng rng = root.split(h);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Assignment x = sample_hamming_sphere(x_star, h, rng);
      const WalkTape w = fixed_tape ? shared : random_tape(m, rng);
      if (engine.run(x, w) && engine.assignment() == x_star) ++hits;
    }
    const double est = double(hits) / double(samples);
    rows.push_back({h, est, std::sqrt(est * (1.0 - est) / double(samples)),
                    std::exp2(-double(h))});
  }
  return rows;
}

} // namespace satwalk
