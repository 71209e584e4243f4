#ifndef SATWALK_RATES_HPP
#define SATWALK_RATES_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace satwalk {

enum class Scheme { classical, gi, gw, fgi, fgw, efg, hfgi };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string &name);

// runtime-rate exponent of the plain walk scheme, 2 - log2(3)
inline const double gamma_classical = 2.0 - std::log2(3.0);

double binary_entropy(double p);            // H, bits
double relative_entropy(double p, double q); // D(p||q), bits

// Exponent of the expected number of walk steps when starts are drawn
// on the kappa*n sphere and tapes conditioned on a nu fraction of
// descending steps over mu*n of them: 1 - H(kappa) + mu*D(nu||1/3).
// Requires mu*(2nu-1) >= kappa so the walk can descend far enough.
double rate_classical(double mu, double kappa, double nu);

// A scheme evaluated at fixed knobs: coherence-rate exponent chi (longest
// uninterrupted quantum register time) and runtime-rate exponent gamma.
struct RatePoint {
  double chi = 0;
  double gamma = 0;
};

RatePoint rate_gi(double kappa); // starts under Grover, tapes sampled
RatePoint rate_gw(double kappa); // starts sampled, tapes under Grover

// Start register split z|(1-z) between Grover and classical sampling;
// the two parts target their own sphere radii.
RatePoint rate_fgi(double z, double kappa_c, double kappa_q);

// Tape split: classical prefix of mu_c*n steps, Grover suffix of mu_q*n.
// Knobs are pinned by the target chi; mu_c goes negative past chi = 1/6,
// where no instantiation exists and only the rate formula extends.
struct FgwKnobs {
  double kappa;
  double mu_c, nu_c;
  double mu_q, nu_q;
};
FgwKnobs fgw_params(double chi);
RatePoint rate_fgw(double chi);

// Both registers split jointly by z; sweeping z traces the whole segment
// from the classical point to (gamma_classical/2, gamma_classical/2).
RatePoint rate_efg(double z);

// Minimizes gamma over the scheme's single knob (classical, gi, gw).
struct SchemeOptimum {
  double knob;
  RatePoint point;
};
SchemeOptimum optimize_scheme(Scheme s);

// One row of the trade-off picture. The knob is kappa for gi and gw,
// z for fgi (kappa_c = 1/3, kappa_q = 1/5) and efg, chi for fgw.
struct CurvePoint {
  Scheme scheme;
  double knob;
  double chi;
  double gamma;
};
std::vector<CurvePoint> tradeoff_curve(std::size_t points_per_scheme = 64);

// log2 of (2^n H(k/n)) / (n+1), of C(n,k) itself, and of 2^(n H(k/n)).
struct EntropyBounds {
  double log2_lower;
  double log2_count;
  double log2_upper;
};
EntropyBounds entropy_binomial_bounds(std::uint32_t n, std::uint32_t k);

} // namespace satwalk

#endif
