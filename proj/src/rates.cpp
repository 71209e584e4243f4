#include "satwalk/rates.hpp"

#include <algorithm>
#include <stdexcept>

#include "satwalk/binomial.hpp"

namespace satwalk {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::classical: return "classical";
    case Scheme::gi: return "gi";
    case Scheme::gw: return "gw";
    case Scheme::fgi: return "fgi";
    case Scheme::fgw: return "fgw";
    case Scheme::efg: return "efg";
    case Scheme::hfgi: return "hfgi";
  }
  throw std::invalid_argument("unknown scheme");
}

Scheme scheme_from_name(const std::string &name) {
  for (Scheme s : {Scheme::classical, Scheme::gi, Scheme::gw, Scheme::fgi,
                   Scheme::fgw, Scheme::efg, Scheme::hfgi})
    if (scheme_name(s) == name) return s;
  throw std::invalid_argument("unknown scheme name: " + name);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("entropy argument must lie in [0,1]");
  double h = 0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

double relative_entropy(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("divergence argument must lie in [0,1]");
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("divergence reference must lie in (0,1)");
  double d = 0;
  if (p > 0) d += p * std::log2(p / q);
  if (p < 1) d += (1 - p) * std::log2((1 - p) / (1 - q));
  return d;
}

double rate_classical(double mu, double kappa, double nu) {
  if (!(mu >= 0.0)) throw std::domain_error("walk length must be nonnegative");
  if (!(kappa >= 0.0 && kappa <= 1.0))
    throw std::domain_error("sphere radius must lie in [0,1]");
  if (kappa > mu * (2 * nu - 1) + 1e-12)
    throw std::domain_error("walk cannot descend far enough: need "
                            "kappa <= mu*(2nu-1)");
  return 1 - binary_entropy(kappa) + mu * relative_entropy(nu, 1.0 / 3);
}

RatePoint rate_gi(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::domain_error("sphere radius must lie in (0,1)");
  const double search = (1 - binary_entropy(kappa)) / 2;
  return {search, search + kappa}; // tape sampling costs 3kappa*D(2/3||1/3)
}

RatePoint rate_gw(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::domain_error("sphere radius must lie in (0,1)");
  const double search = kappa / 2; // half of 3kappa*D(2/3||1/3)
  return {search, 1 - binary_entropy(kappa) + search};
}

RatePoint rate_fgi(double z, double kappa_c, double kappa_q) {
  if (!(z >= 0.0 && z <= 1.0))
    throw std::domain_error("register split must lie in [0,1]");
  const RatePoint quantum = rate_gi(kappa_q);
  const double classical = 1 - binary_entropy(kappa_c) + kappa_c;
  return {z * quantum.chi, (1 - z) * classical + z * quantum.gamma};
}

FgwKnobs fgw_params(double chi) {
  if (!(chi >= 0.0 && chi <= gamma_classical / 2))
    throw std::domain_error("coherence rate must lie in [0, gamma_c/2]");
  return {1.0 / 3, 1 - 6 * chi, 2.0 / 3, 6 * chi, 2.0 / 3};
}

RatePoint rate_fgw(double chi) {
  const FgwKnobs k = fgw_params(chi);
  const double quantum = k.mu_q * relative_entropy(k.nu_q, 1.0 / 3) / 2;
  const double gamma = 1 - binary_entropy(k.kappa) +
                       k.mu_c * relative_entropy(k.nu_c, 1.0 / 3) + quantum;
  return {quantum, gamma};
}

RatePoint rate_efg(double z) {
  if (!(z >= 0.0 && z <= 1.0))
    throw std::domain_error("register split must lie in [0,1]");
  // gamma = (1-z)*g + z*g/2 rewritten so both endpoints are bit-exact
  const double coherent = z * (gamma_classical / 2);
  return {coherent, gamma_classical - coherent};
}

namespace {

template <typename F>
double golden_min(F f, double lo, double hi) {
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (f1 <= f2) {
      b = x2, x2 = x1, f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    } else {
      a = x1, x1 = x2, f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    }
  }
  return (a + b) / 2;
}

} // namespace

SchemeOptimum optimize_scheme(Scheme s) {
  switch (s) {
    case Scheme::classical: {
      const double k = golden_min(
          [](double x) { return 1 - binary_entropy(x) + x; }, 1e-9, 0.999);
      return {k, {0.0, 1 - binary_entropy(k) + k}};
    }
    case Scheme::gi: {
      const double k =
          golden_min([](double x) { return rate_gi(x).gamma; }, 1e-9, 0.999);
      return {k, rate_gi(k)};
    }
    case Scheme::gw: {
      const double k =
          golden_min([](double x) { return rate_gw(x).gamma; }, 1e-9, 0.999);
      return {k, rate_gw(k)};
    }
    default:
      throw std::invalid_argument(
          "optimization is defined for the single-knob schemes only");
  }
}

std::vector<CurvePoint> tradeoff_curve(std::size_t points_per_scheme) {
  if (points_per_scheme < 2)
    throw std::invalid_argument("a sweep needs at least two points");
  std::vector<CurvePoint> rows;
  const auto sweep = [&](Scheme s, double lo, double hi, auto eval) {
    for (std::size_t i = 0; i < points_per_scheme; ++i) {
      const double knob =
          lo + (hi - lo) * double(i) / double(points_per_scheme - 1);
      const RatePoint p = eval(knob);
      rows.push_back({s, knob, p.chi, p.gamma});
    }
  };

  rows.push_back({Scheme::classical, 1.0 / 3, 0.0, gamma_classical});
  sweep(Scheme::gi, 0.02, 0.5, [](double k) { return rate_gi(k); });
  sweep(Scheme::gw, 0.02, 0.5, [](double k) { return rate_gw(k); });
  for (Scheme s : {Scheme::gi, Scheme::gw}) {
    const SchemeOptimum best = optimize_scheme(s);
    rows.push_back({s, best.knob, best.point.chi, best.point.gamma});
  }
  sweep(Scheme::fgi, 0.0, 1.0,
        [](double z) { return rate_fgi(z, 1.0 / 3, 1.0 / 5); });
  sweep(Scheme::fgw, 0.0, gamma_classical / 2,
        [](double chi) { return rate_fgw(chi); });
  sweep(Scheme::efg, 0.0, 1.0, [](double z) { return rate_efg(z); });

  std::sort(rows.begin(), rows.end(), [](const CurvePoint &a,
                                         const CurvePoint &b) {
    if (a.chi != b.chi) return a.chi < b.chi;
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.scheme < b.scheme;
  });
  return rows;
}

EntropyBounds entropy_binomial_bounds(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::domain_error("binomial index out of range");
  if (n == 0) return {0.0, 0.0, 0.0};
  const double h = binary_entropy(double(k) / n);
  const double count = n <= 60
                           ? std::log2(binomial(n, k).convert_to<double>())
                           : log2_binomial(n, k);
  return {n * h - std::log2(double(n) + 1), count, n * h};
}

} // namespace satwalk
