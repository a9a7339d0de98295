// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "muskat/curves.hpp"
#include "muskat/errors.hpp"
#include "oracles.hpp"

using namespace muskat;

namespace
{

PeriodicCurve sine_curve(std::size_t n, double a, double offset = 0.0)
{
  return PeriodicCurve::from_functions(
      n, [](double) { return 0.0; }, [=](double x) { return offset + a * std::sin(x); });
}

ErrorCode code_of(const std::function<void()> &f)
{
  try
  {
    f();
  }
  catch (const Error &e)
  {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("fluid parameters derive gamma and N")
{
  FluidParams p;
  CHECK(p.gamma1() == 0.0);
  CHECK(p.gamma2() == 0.0);
  CHECK(p.big_n() == 1.0);
  p.mu2 = 3.0;
  CHECK(p.gamma1() == 0.5);
  FluidParams q;
  q.kappa2 = 0.0;
  CHECK(code_of([&] { q.validate(); }) == ErrorCode::Validation);
}

TEST_CASE("arc-chord norm")
{
  CHECK(arc_chord_norm(PeriodicCurve::flat(64, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  const PeriodicCurve z = sine_curve(64, 0.1);
  CHECK(arc_chord_norm(z) == doctest::Approx(oracle::brute_arc_chord(z, 256)).epsilon(1e-6));
  // A wavier curve whose sup is attained off the diagonal.
  const PeriodicCurve w = PeriodicCurve::from_functions(
      64, [](double x) { return 0.4 * std::sin(x); }, [](double x) { return 0.6 * std::cos(2 * x); });
  CHECK(arc_chord_norm(w) == doctest::Approx(oracle::brute_arc_chord(w, 256)).epsilon(1e-2));
  CHECK(arc_chord_norm(w) <= oracle::brute_arc_chord(w, 256) * (1.0 + 1e-12));
}

TEST_CASE("coincident nodes raise SelfIntersection")
{
  const std::size_t n = 16;
  std::vector<double> p1(n, 0.0);
  p1[1] = -kTwoPi / n;
  const PeriodicCurve z(SpectralScalar(p1), SpectralScalar::zeros(n));
  CHECK(code_of([&] { arc_chord_norm(z); }) == ErrorCode::SelfIntersection);
}

TEST_CASE("separation norm")
{
  CHECK(separation_norm(PeriodicCurve::flat(64, 0.0), PeriodicCurve::flat(64, -2.0)) ==
        doctest::Approx(0.25).epsilon(1e-15));
  const PeriodicCurve z = sine_curve(64, 0.1);
  const PeriodicCurve h = PeriodicCurve::flat(64, -1.0);
  const double d = oracle::brute_min_distance(z, h, 256);
  CHECK(separation_norm(z, h) == doctest::Approx(1.0 / (d * d)).epsilon(1e-6));
  CHECK(code_of([&] { separation_norm(PeriodicCurve::flat(64, 0.0), PeriodicCurve::flat(64, 0.0)); }) ==
        ErrorCode::CurveContact);
}

TEST_CASE("parametrization defect")
{
  CHECK(parametrization_defect(PeriodicCurve::flat(64, 0.3)) == 0.0);
  const PeriodicCurve z = sine_curve(64, 0.1);
  // |dz|^2 = 1 + 0.01 cos^2, mean 1.005; sup |.| / A = 0.005 / 1.005.
  CHECK(parametrization_defect(z) == doctest::Approx(0.005 / 1.005).epsilon(1e-12));
}

TEST_CASE("uniform resampling")
{
  SUBCASE("already uniform curve is unchanged")
  {
    const PeriodicCurve z = PeriodicCurve::flat(64, 0.5);
    const PeriodicCurve r = resample_uniform(z);
    CHECK(max_abs(r.p1() - z.p1()) < 1e-10);
    CHECK(max_abs(r.p2() - z.p2()) < 1e-10);
  }
  SUBCASE("jittered flat parametrization becomes the uniform line")
  {
    const PeriodicCurve z = PeriodicCurve::from_functions(
        64, [](double a) { return 0.05 * std::sin(a); }, [](double) { return 0.0; });
    const PeriodicCurve r = resample_uniform(z);
    CHECK(max_abs(r.p1()) < 1e-10);
    CHECK(max_abs(r.p2()) < 1e-15);
  }
  SUBCASE("wavy curve: defect below 1e-8 and image preserved")
  {
    const PeriodicCurve z = sine_curve(64, 0.2);
    const PeriodicCurve r = resample_uniform(z);
    CHECK(parametrization_defect(r) <= 1e-8);
    CHECK(r.point(0) == z.point(0));
    // Every resampled node lies on the original curve: y = 0.2 sin(x).
    for (std::size_t j = 0; j < 64; ++j)
    {
      const cplx p = r.point(j);
      CHECK(std::abs(p.imag() - 0.2 * std::sin(p.real())) < 1e-9);
    }
    // Dense polyline comparison of the interpolant.
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
      const cplx p = r.evaluate(-kPi + kTwoPi * i / 1000.0);
      worst = std::max(worst, std::abs(p.imag() - 0.2 * std::sin(p.real())));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("translation and resampling of curves")
{
  const PeriodicCurve z = sine_curve(32, 0.1);
  const PeriodicCurve t = z.translated(0.3, -0.2);
  for (std::size_t j = 0; j < 32; ++j)
  {
    CHECK(std::abs(t.point(j) - (z.point(j) + cplx(0.3, -0.2))) < 1e-14);
  }
  const PeriodicCurve f = z.resampled(128);
  CHECK(std::abs(f.point(4) - z.point(1)) < 1e-14);
}
