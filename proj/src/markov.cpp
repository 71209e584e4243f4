#include "satwalk/markov.hpp"

#include <cmath>
#include <stdexcept>

namespace satwalk {

namespace {

// log2 of C(m,l) (1/3)^l (2/3)^(m-l) = C(m,l) 2^(m-l) / 3^m
double log2_step_term(std::size_t m, std::size_t l) {
  return log2_binomial(static_cast<std::uint32_t>(m),
                       static_cast<std::uint32_t>(l)) +
         double(m - l) - double(m) * std::log2(3.0);
}

Rational exact_step_term(std::size_t m, std::size_t l) {
  const BigInt numer = binomial(static_cast<std::uint32_t>(m),
                                static_cast<std::uint32_t>(l))
                       << (m - l);
  return Rational(numer, boost::multiprecision::pow(BigInt(3), unsigned(m)));
}

// smallest number of down-moves l with final position j + m - 2l <= 0
std::size_t min_down_moves(std::uint32_t j, std::size_t m) {
  return (j + m + 1) / 2;
}

} // namespace

double z_walk_success_given(std::uint32_t j, std::size_t m) {
  double total = 0;
  for (std::size_t l = min_down_moves(j, m); l <= m; ++l)
    total += std::exp2(log2_step_term(m, l));
  return total;
}

Rational z_walk_success_given_exact(std::uint32_t j, std::size_t m) {
  Rational total = 0;
  for (std::size_t l = min_down_moves(j, m); l <= m; ++l)
    total += exact_step_term(m, l);
  return total;
}

double z_walk_success(std::uint32_t n, std::size_t m) {
  double total = 0;
  for (std::uint32_t j = 0; j <= n; ++j)
    total += std::exp2(log2_binomial(n, j) - double(n)) *
             z_walk_success_given(j, m);
  return total;
}

Rational z_walk_success_exact(std::uint32_t n, std::size_t m) {
  Rational total = 0;
  const Rational scale(1, BigInt(1) << n);
  for (std::uint32_t j = 0; j <= n; ++j)
    total += scale * binomial(n, j) * z_walk_success_given_exact(j, m);
  return total;
}

Rational z_walk_success_chain(std::uint32_t n, std::size_t m) {
  // positions -m .. n+m, stored with offset m
  const std::size_t size = n + 2 * m + 1;
  std::vector<Rational> dist(size, Rational(0));
  const Rational scale(1, BigInt(1) << n);
  for (std::uint32_t j = 0; j <= n; ++j)
    dist[m + j] = scale * binomial(n, j);
  const Rational down(1, 3), up(2, 3);
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<Rational> next(size, Rational(0));
    for (std::size_t k = 0; k < size; ++k) {
      if (dist[k] == 0) continue;
      if (k > 0) next[k - 1] += dist[k] * down;
      if (k + 1 < size) next[k + 1] += dist[k] * up;
    }
    dist.swap(next);
  }
  Rational total = 0;
  for (std::size_t k = 0; k <= m; ++k) total += dist[k]; // positions <= 0
  return total;
}

std::uint64_t sampling_overhead(double p, double eps) {
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("success probability must be in (0,1]");
  if (!(eps > 0.0))
    throw std::invalid_argument("failure tolerance must be positive");
  if (p == 1.0 || eps >= 1.0) return 1;
  const double log_fail = std::log1p(-p); // < 0
  const double log_eps = std::log(eps);
  double guess = std::ceil(log_eps / log_fail);
  if (!(guess >= 1)) guess = 1;
  std::uint64_t N = static_cast<std::uint64_t>(guess);
  while (N > 1 && double(N - 1) * log_fail <= log_eps) --N;
  while (double(N) * log_fail > log_eps) ++N;
  return N;
}

/*--------------------------------------------------------------------*/

namespace {

// lowest-index literal of the first violated clause that x_star makes
// true; 0 once the engine's state satisfies the formula
std::uint8_t preferred_slot(const WalkEngine &engine,
                            const Assignment &x_star) {
  if (engine.satisfied()) return 0;
  const Clause &cl =
      engine.formula().clauses[engine.first_violated_index()];
  for (std::uint8_t r = 0; r < 3; ++r)
    if (literal_true(cl.lit[r], x_star)) return r;
  throw std::logic_error("reference assignment violates a clause");
}

} // namespace

CoupledTrace coupled_walk(const Formula &f, const Assignment &x_star,
                          const Assignment &x0, const WalkTape &b) {
  if (!evaluate(f, x_star))
    throw std::invalid_argument("reference assignment must satisfy f");
  WalkEngine engine(f);
  engine.reset(x0);
  CoupledTrace trace;
  trace.states.reserve(b.size() + 1);
  trace.d_tilde.reserve(b.size() + 1);
  trace.preferred.reserve(b.size());
  trace.states.push_back(x0);
  std::uint32_t d = hamming(x0, x_star);
  trace.d_tilde.push_back(d);
  for (std::size_t s = 0; s < b.size(); ++s) {
    const std::uint8_t pref = preferred_slot(engine, x_star);
    trace.preferred.push_back(pref);
    engine.step(b.get(s));
    trace.states.push_back(engine.assignment());
    if (d > 0) d = (b.get(s) == pref) ? d - 1 : d + 1;
    trace.d_tilde.push_back(d);
  }
  return trace;
}

WalkTape pessimistic_tape(const Formula &f, const Assignment &x_star,
                          const Assignment &x0, const WalkTape &b) {
  if (!evaluate(f, x_star))
    throw std::invalid_argument("reference assignment must satisfy f");
  WalkEngine engine(f);
  engine.reset(x0);
  WalkTape out(b.size());
  for (std::size_t s = 0; s < b.size(); ++s) {
    const std::uint8_t pref = preferred_slot(engine, x_star);
    out.set(s, (b.get(s) + 3 - pref) % 3);
    engine.step(b.get(s));
  }
  return out;
}

WalkTape pessimistic_tape_inverse(const Formula &f, const Assignment &x_star,
                                  const Assignment &x0,
                                  const WalkTape &b_tilde) {
  if (!evaluate(f, x_star))
    throw std::invalid_argument("reference assignment must satisfy f");
  WalkEngine engine(f);
  engine.reset(x0);
  WalkTape b(b_tilde.size());
  for (std::size_t s = 0; s < b_tilde.size(); ++s) {
    const std::uint8_t pref = preferred_slot(engine, x_star);
    b.set(s, (b_tilde.get(s) + pref) % 3);
    engine.step(b.get(s));
  }
  return b;
}

bool tape_map_is_bijective(
    std::size_t m, const std::function<WalkTape(const WalkTape &)> &map) {
  const std::uint64_t total = pow3(m);
  std::vector<std::uint8_t> seen(total, 0);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    const WalkTape image = map(nth_tape(m, rank));
    if (image.size() != m) return false;
    const std::uint64_t r = tape_rank(image);
    if (seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

std::pair<Assignment, WalkTape> bijection_q(const StepMap &f,
                                            const Assignment &a,
                                            const WalkTape &b) {
  WalkTape out(b.size());
  for (std::size_t s = 0; s < b.size(); ++s)
    out.set(s, (b.get(s) + 3 - f(a, b, s) % 3) % 3);
  return {a, out};
}

std::pair<Assignment, WalkTape> bijection_q_inverse(const StepMap &f,
                                                    const Assignment &a,
                                                    const WalkTape &b_tilde) {
  // symbol s of the shift depends only on symbols before s, all of which
  // are already reconstructed into b by the time it is needed
  WalkTape b(b_tilde.size());
  for (std::size_t s = 0; s < b_tilde.size(); ++s)
    b.set(s, (b_tilde.get(s) + f(a, b, s) % 3) % 3);
  return {a, b};
}

bool uniformity_check(std::uint32_t n, std::size_t l, const PairMap &map) {
  if (n > 4 || l > 5) throw std::domain_error("space too large");
  const std::uint64_t assignments = std::uint64_t(1) << n;
  const std::uint64_t tapes = pow3(l);
  std::vector<std::uint8_t> seen(std::size_t(assignments * tapes), 0);
  for (std::uint64_t ar = 0; ar < assignments; ++ar) {
    Assignment a(n);
    for (std::uint32_t v = 0; v < n; ++v) a[v] = (ar >> v) & 1;
    for (std::uint64_t br = 0; br < tapes; ++br) {
      const auto [ia, ib] = map(a, nth_tape(l, br));
      if (ia.size() != n || ib.size() != l) return false;
      std::uint64_t cell = 0;
      for (std::uint32_t v = 0; v < n; ++v)
        cell |= std::uint64_t(ia[v] & 1) << v;
      cell = cell * tapes + tape_rank(ib);
      if (seen[cell]) return false;
      seen[cell] = 1;
    }
  }
  return true;
}

bool uniformity_check(std::uint32_t n, std::size_t l, const StepMap &f) {
  return uniformity_check(n, l, [&f](const Assignment &a, const WalkTape &b) {
    return bijection_q(f, a, b);
  });
}

} // namespace satwalk
