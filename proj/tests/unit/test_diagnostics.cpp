// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "muskat/diagnostics.hpp"
#include "muskat/errors.hpp"
#include "oracles.hpp"

using namespace muskat;

namespace
{

FluidParams contrast_params()
{
  FluidParams p;
  p.mu1 = 1.0;
  p.mu2 = 2.0;
  p.kappa1 = 1.0;
  p.kappa2 = 0.5;
  p.rho1 = 0.5;
  p.rho2 = 2.0;
  p.g = 1.5;
  return p;
}

PeriodicCurve wavy(std::size_t n)
{
  return PeriodicCurve::from_functions(
      n, [](double a) { return 0.03 * std::sin(2 * a); },
      [](double a) { return 0.1 * std::cos(a) + 0.04 * std::sin(3 * a); });
}

}  // namespace

TEST_CASE("sigma on the flat state")
{
  const std::size_t n = 64;
  const FluidParams p = contrast_params();
  const SimState s = make_state(PeriodicCurve::flat(n, 0.0), PeriodicCurve::flat(n, -2.0), p);
  const SigmaField sig = rayleigh_taylor_sigma(s);
  CHECK(max_abs(sig.sigma - SpectralScalar::constant(n, (p.rho2 - p.rho1) * p.g)) < 1e-12);
  CHECK(sig.min == doctest::Approx((p.rho2 - p.rho1) * p.g));
}

TEST_CASE("equal viscosities: sigma is the gravity term only")
{
  const std::size_t n = 64;
  FluidParams p = contrast_params();
  p.mu2 = p.mu1;
  const SimState s = make_state(wavy(n), PeriodicCurve::flat(n, -1.5), p);
  const SpectralScalar dz1 = SpectralScalar::constant(n, 1.0) + derivative(s.z.p1(), 1);
  CHECK(max_abs(rayleigh_taylor_sigma(s).sigma - ((p.rho2 - p.rho1) * p.g) * dz1) == 0.0);
}

TEST_CASE("sigma matches a refined-grid evaluation")
{
  const std::size_t n = 64;
  const FluidParams p = contrast_params();
  const PeriodicCurve z = wavy(n);
  const PeriodicCurve h = PeriodicCurve::flat(n, -1.5);
  const SpectralScalar coarse = rayleigh_taylor_sigma(make_state(z, h, p)).sigma;
  const SpectralScalar fine =
      rayleigh_taylor_sigma(make_state(z.resampled(2 * n), h.resampled(2 * n), p)).sigma;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j)
  {
    worst = std::max(worst, std::abs(coarse[j] - fine[2 * j]));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("sigma is invariant under horizontal translation")
{
  const std::size_t n = 64;
  const FluidParams p = contrast_params();
  const PeriodicCurve z = wavy(n);
  const PeriodicCurve h = PeriodicCurve::flat(n, -1.5);
  const SpectralScalar a = rayleigh_taylor_sigma(make_state(z, h, p)).sigma;
  const SpectralScalar b =
      rayleigh_taylor_sigma(make_state(z.translated(1.1, 0.0), h.translated(1.1, 0.0), p)).sigma;
  CHECK(max_abs(a - b) < 1e-12);
}

TEST_CASE("dissipation")
{
  const std::size_t n = 64;
  SUBCASE("flat state")
  {
    const SimState s = make_state(PeriodicCurve::flat(n, 0.0), PeriodicCurve::flat(n, -2.0), contrast_params());
    CHECK(dissipation_term(s, 3) == 0.0);
    CHECK(dissipation_quadratic_form(s.z, 3) == 0.0);
  }
  SUBCASE("single mode Plancherel oracle")
  {
    FluidParams p = contrast_params();
    p.mu2 = p.mu1;  // sigma constant
    const double a = 0.01;
    for (int k : {1, 2, 5})
    {
      const PeriodicCurve z = PeriodicCurve::from_functions(
          n, [](double) { return 0.0; }, [=](double x) { return a * std::cos(k * x); });
      const double form = dissipation_quadratic_form(z, 3);
      const double expected = kPi * a * a * std::pow(k, 7);
      CHECK(form == doctest::Approx(expected).epsilon(1e-9));
      const SimState s = make_state(z, PeriodicCurve::flat(n, -2.0), p);
      const double sigma = (p.rho2 - p.rho1) * p.g;
      const double area = 1.0 + 0.5 * a * a * k * k;
      const double term = -p.kappa1 * sigma * expected / (kTwoPi * (p.mu1 + p.mu2) * area);
      CHECK(dissipation_term(s, 3) == doctest::Approx(term).epsilon(1e-9));
    }
  }
  SUBCASE("quadratic form is nonnegative")
  {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t)
    {
      const PeriodicCurve z = oracle::random_curve(n, 12, 0.3, 0.0, rng);
      for (int k = 1; k <= 6; ++k)
      {
        const SpectralScalar d1 = derivative(z.p1(), k);
        const SpectralScalar d2 = derivative(z.p2(), k);
        CHECK(dissipation_quadratic_form(z, k) >=
              -1e-12 * (inner_product(d1, d1) + inner_product(d2, d2)));
      }
    }
  }
}

TEST_CASE("energy functional")
{
  const std::size_t n = 64;
  const SimState flat = make_state(PeriodicCurve::flat(n, 0.0), PeriodicCurve::flat(n, -2.0), contrast_params());
  CHECK(energy_functional(flat, 3) == doctest::Approx(1.0625).epsilon(1e-13));

  const SimState s = make_state(wavy(n), PeriodicCurve::flat(n, -1.5), contrast_params());
  const double f = arc_chord_norm(s.z);
  const double d = separation_norm(s.z, s.h);
  const double h3 = curve_sobolev_norm(s.z, 3);
  CHECK(energy_functional(s, 3) == f * f + d * d + h3 * h3);
  const DiagnosticsRecord r = diagnose(s, 3);
  CHECK(r.energy == energy_functional(s, 3));
  CHECK(r.arc_chord == f);
  CHECK(r.separation == d);
  CHECK(r.sobolev_z == h3);
  CHECK(r.sigma_min == rayleigh_taylor_sigma(s).min);
  CHECK(r.dissipation == doctest::Approx(dissipation_term(s, 3)).epsilon(1e-14));
}

TEST_CASE("sigma minimum drift")
{
  DiagnosticsRecord r;
  std::vector<DiagnosticsRecord> one{r};
  try
  {
    sigma_min_drift(one);
    FAIL("expected InsufficientData");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::InsufficientData);
  }
  std::vector<DiagnosticsRecord> flat(5);
  for (std::size_t i = 0; i < flat.size(); ++i)
  {
    flat[i].t = 0.1 * static_cast<double>(i);
    flat[i].sigma_min = 1.0;
  }
  CHECK(sigma_min_drift(flat) == 0.0);
  flat[3].sigma_min = 0.9;
  CHECK(sigma_min_drift(flat) == doctest::Approx(1.0));
}
