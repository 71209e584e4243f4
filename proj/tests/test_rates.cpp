#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "satwalk/rates.hpp"

using namespace satwalk;

TEST_CASE("binary entropy, hand values") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(1.0 / 3) ==
        doctest::Approx(std::log2(3.0) - 2.0 / 3).epsilon(1e-14));
  for (double p : {0.1, 0.25, 0.4})
    CHECK(binary_entropy(p) == doctest::Approx(binary_entropy(1 - p)));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("relative entropy, hand values") {
  for (double p : {0.0, 0.2, 0.5, 1.0})
    if (p > 0 && p < 1) CHECK(relative_entropy(p, p) == doctest::Approx(0.0));
  CHECK(relative_entropy(2.0 / 3, 1.0 / 3) ==
        doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(relative_entropy(1.0, 1.0 / 3) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-14));
  CHECK(relative_entropy(0.0, 1.0 / 3) ==
        doctest::Approx(std::log2(1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(relative_entropy(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(relative_entropy(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(relative_entropy(-0.1, 0.5), std::domain_error);
}

TEST_CASE("plain walk rate") {
  CHECK(gamma_classical == 2.0 - std::log2(3.0));
  CHECK(gamma_classical == doctest::Approx(0.41503749927884376));
  CHECK(rate_classical(1.0, 1.0 / 3, 2.0 / 3) ==
        doctest::Approx(gamma_classical).epsilon(1e-14));
  CHECK_THROWS_AS(rate_classical(0.0, 0.5, 2.0 / 3), std::domain_error);
  CHECK_THROWS_AS(rate_classical(1.4, 0.5, 2.0 / 3), std::domain_error);
  CHECK(rate_classical(1.5, 0.5, 2.0 / 3) ==
        doctest::Approx(1 - binary_entropy(0.5) + 0.5));
  // with the walk length pinned to 3kappa and nu = 2/3, the exponent is
  // 1 - H(kappa) + kappa
  for (double k : {0.1, 0.2, 1.0 / 3, 0.45})
    CHECK(rate_classical(3 * k, k, 2.0 / 3) ==
          doctest::Approx(1 - binary_entropy(k) + k).epsilon(1e-14));
}

TEST_CASE("scheme rate formulas") {
  const RatePoint gi = rate_gi(0.2);
  CHECK(gi.chi == doctest::Approx(0.13903595255631884).epsilon(1e-12));
  CHECK(gi.gamma == doctest::Approx(0.33903595255631885).epsilon(1e-12));
  for (double k : {0.1, 0.2, 0.3, 0.4})
    CHECK(rate_gi(k).gamma - rate_gi(k).chi == doctest::Approx(k));

  const double k_gw = std::sqrt(2.0) - 1;
  const RatePoint gw = rate_gw(k_gw);
  CHECK(gw.chi == doctest::Approx(0.20710678118654757).epsilon(1e-12));
  CHECK(gw.gamma == doctest::Approx(0.22844669683638796).epsilon(1e-12));
  for (double k : {0.1, 0.2, 0.3, 0.4}) {
    const RatePoint p = rate_gw(k);
    CHECK(p.gamma ==
          doctest::Approx(1 - binary_entropy(2 * p.chi) + p.chi));
  }
  CHECK_THROWS_AS(rate_gi(0.0), std::domain_error);
  CHECK_THROWS_AS(rate_gw(1.0), std::domain_error);
}

TEST_CASE("single-knob optima") {
  const SchemeOptimum cl = optimize_scheme(Scheme::classical);
  CHECK(cl.knob == doctest::Approx(1.0 / 3).epsilon(1e-6));
  CHECK(cl.point.gamma == doctest::Approx(gamma_classical).epsilon(1e-6));
  CHECK(cl.point.chi == 0.0);

  const SchemeOptimum gi = optimize_scheme(Scheme::gi);
  CHECK(gi.knob == doctest::Approx(0.2).epsilon(1e-6));
  CHECK(gi.point.chi == doctest::Approx(0.13903595255631884).epsilon(1e-6));
  CHECK(gi.point.gamma == doctest::Approx(0.33903595255631885).epsilon(1e-6));

  const SchemeOptimum gw = optimize_scheme(Scheme::gw);
  CHECK(gw.knob == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-6));
  CHECK(gw.point.chi == doctest::Approx(0.20710678118654757).epsilon(1e-6));
  CHECK(gw.point.gamma == doctest::Approx(0.22844669683638796).epsilon(1e-6));
  // the tape-side scheme lands just short of the halved rate in runtime
  // and just past it in coherence
  const double half = gamma_classical / 2;
  CHECK(gw.point.gamma - half == doctest::Approx(0.020928).epsilon(1e-3));
  CHECK(gw.point.gamma - half >= 0.0);
  CHECK(gw.point.gamma - half <= 0.021);
  CHECK(gw.point.chi - half == doctest::Approx(-0.000412).epsilon(1e-2));
  CHECK(gw.point.chi - half >= -0.0005);
  CHECK(gw.point.chi - half <= 0.0);

  CHECK_THROWS_AS(optimize_scheme(Scheme::fgi), std::invalid_argument);
}

TEST_CASE("split-start scheme interpolates its two endpoints") {
  const double kc = 1.0 / 3, kq = 0.2;
  const RatePoint z0 = rate_fgi(0.0, kc, kq);
  CHECK(z0.chi == 0.0);
  CHECK(z0.gamma == doctest::Approx(gamma_classical).epsilon(1e-14));
  const RatePoint z1 = rate_fgi(1.0, kc, kq);
  CHECK(z1.chi == doctest::Approx(rate_gi(kq).chi));
  CHECK(z1.gamma == doctest::Approx(rate_gi(kq).gamma));
  const RatePoint mid = rate_fgi(0.5, kc, kq);
  CHECK(mid.chi == doctest::Approx((z0.chi + z1.chi) / 2).epsilon(1e-14));
  CHECK(mid.gamma == doctest::Approx((z0.gamma + z1.gamma) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(rate_fgi(1.5, kc, kq), std::domain_error);
}

TEST_CASE("split-tape scheme collapses onto the trade-off line") {
  for (int i = 0; i <= 1000; ++i) {
    const double chi = gamma_classical / 2 * i / 1000.0;
    const RatePoint p = rate_fgw(chi);
    CHECK(p.chi == doctest::Approx(chi).epsilon(1e-12));
    CHECK(std::abs(p.gamma - (gamma_classical - chi)) <= 1e-9);
  }
  const FgwKnobs mid = fgw_params(1.0 / 12);
  CHECK(mid.kappa == doctest::Approx(1.0 / 3));
  CHECK(mid.mu_c == doctest::Approx(0.5));
  CHECK(mid.mu_q == doctest::Approx(0.5));
  CHECK(mid.nu_c == doctest::Approx(2.0 / 3));
  CHECK(mid.nu_q == doctest::Approx(2.0 / 3));
  CHECK(fgw_params(0.0).mu_q == doctest::Approx(0.0));
  CHECK(fgw_params(0.2).mu_c < 0.0); // no instantiation past 1/6
  CHECK_THROWS_AS(fgw_params(0.3), std::domain_error);
}

TEST_CASE("joint split endpoints are exact") {
  const RatePoint z0 = rate_efg(0.0);
  CHECK(z0.chi == 0.0);
  CHECK(z0.gamma == doctest::Approx(gamma_classical).epsilon(1e-15));
  const RatePoint z1 = rate_efg(1.0);
  CHECK(z1.chi == doctest::Approx(gamma_classical / 2).epsilon(1e-15));
  CHECK(z1.gamma == doctest::Approx(gamma_classical / 2).epsilon(1e-15));
  for (double z : {0.25, 0.5, 0.75})
    CHECK(rate_efg(z).gamma ==
          doctest::Approx(gamma_classical - rate_efg(z).chi).epsilon(1e-14));
}

TEST_CASE("every emitted point obeys the trade-off floor") {
  const auto rows = tradeoff_curve(128);
  REQUIRE(rows.size() >= 5 * 128);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i - 1].chi <= rows[i].chi);
  bool seen[6] = {};
  for (const CurvePoint &p : rows) {
    seen[int(p.scheme)] = true;
    CHECK(p.gamma >= gamma_classical - p.chi - 1e-9);
    CHECK(p.chi >= 0.0);
  }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("entropy bounds sandwich the binomial coefficient") {
  for (std::uint32_t n = 1; n <= 30; ++n)
    for (std::uint32_t k = 0; k <= n; ++k) {
      const EntropyBounds b = entropy_binomial_bounds(n, k);
      CHECK(b.log2_lower <= b.log2_count + 1e-9);
      CHECK(b.log2_count <= b.log2_upper + 1e-9);
    }
  const EntropyBounds b = entropy_binomial_bounds(4, 2);
  CHECK(b.log2_count == doctest::Approx(std::log2(6.0)));
  CHECK(b.log2_upper == doctest::Approx(4.0));
  CHECK(b.log2_lower == doctest::Approx(4.0 - std::log2(5.0)));
}

TEST_CASE("scheme names round trip") {
  for (Scheme s : {Scheme::classical, Scheme::gi, Scheme::gw, Scheme::fgi,
                   Scheme::fgw, Scheme::efg})
    CHECK(scheme_from_name(scheme_name(s)) == s);
  CHECK_THROWS_AS(scheme_from_name("nope"), std::invalid_argument);
}
