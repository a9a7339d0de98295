// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "muskat/errors.hpp"
#include "muskat/spectral.hpp"
#include "muskat/verify.hpp"

using namespace muskat;

namespace
{

SpectralScalar wave(std::size_t n, double (*f)(double), int k)
{
  return SpectralScalar::from_function(n, [=](double a) { return f(k * a); });
}

double cos_fn(double x) { return std::cos(x); }
double sin_fn(double x) { return std::sin(x); }

}  // namespace

TEST_CASE("construction validates the grid")
{
  CHECK_THROWS_AS(SpectralScalar(std::vector<double>(7, 0.0)), Error);
  CHECK_THROWS_AS(SpectralScalar(std::vector<double>(6, 0.0)), Error);
  CHECK_NOTHROW(SpectralScalar(std::vector<double>(8, 0.0)));
}

TEST_CASE("modes round trip exactly and samples match")
{
  std::mt19937_64 rng(3);
  const SpectralScalar f = random_trig_polynomial(32, 10, rng);
  const SpectralScalar g(std::vector<double>(f.samples().begin(), f.samples().end()));
  for (std::size_t k = 0; k < f.modes().size(); ++k)
  {
    CHECK(std::abs(f.modes()[k] - g.modes()[k]) < 1e-14);
  }
  const auto m = std::vector<cplx>(f.modes().begin(), f.modes().end());
  const SpectralScalar h = SpectralScalar::from_modes(32, m);
  for (std::size_t k = 0; k < m.size(); ++k)
  {
    CHECK(h.modes()[k] == m[k]);
  }
}

TEST_CASE("derivative examples")
{
  const std::size_t n = 32;
  CHECK(max_abs(derivative(wave(n, cos_fn, 3), 1) + 3.0 * wave(n, sin_fn, 3)) < 1e-13);
  for (int order = 1; order <= 6; ++order)
  {
    CHECK(max_abs(derivative(SpectralScalar::constant(n, 2.5), order)) == 0.0);
  }
  CHECK(max_abs(derivative(wave(n, cos_fn, 1), 2) + wave(n, cos_fn, 1)) < 1e-13);
  CHECK_THROWS_AS(derivative(wave(n, cos_fn, 1), 0), Error);
  CHECK_THROWS_AS(derivative(wave(n, cos_fn, 1), 7), Error);
}

TEST_CASE("hilbert examples")
{
  const std::size_t n = 32;
  for (int k = 1; k < 16; ++k)
  {
    CHECK(max_abs(hilbert(wave(n, cos_fn, k)) - wave(n, sin_fn, k)) < 1e-13);
    CHECK(max_abs(hilbert(wave(n, sin_fn, k)) + wave(n, cos_fn, k)) < 1e-13);
  }
  CHECK(max_abs(hilbert(SpectralScalar::constant(n, 4.0))) == 0.0);
  std::mt19937_64 rng(5);
  const SpectralScalar f = random_trig_polynomial(n, 12, rng);
  CHECK(max_abs(hilbert(hilbert(f)) + f.without_mean()) < 1e-13);
}

TEST_CASE("fractional laplacian examples")
{
  const std::size_t n = 64;
  for (int k = 1; k < 20; ++k)
  {
    CHECK(max_abs(fractional_laplacian(wave(n, cos_fn, k), 1.0) - k * wave(n, cos_fn, k)) < 1e-12);
    CHECK(max_abs(fractional_laplacian(wave(n, cos_fn, k), 0.5) -
                  std::sqrt(double(k)) * wave(n, cos_fn, k)) < 1e-12);
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t)
  {
    const SpectralScalar f = random_trig_polynomial(n, 16, rng);
    CHECK(max_abs(derivative(hilbert(f), 1) - fractional_laplacian(f, 1.0)) < 1e-12);
    CHECK(max_abs(fractional_laplacian(hilbert(f), 1.0) + derivative(f, 1)) < 1e-12);
  }
  CHECK_THROWS_AS(fractional_laplacian(wave(n, cos_fn, 1), 1.5), Error);
}

TEST_CASE("mollifier examples")
{
  const std::size_t n = 64;
  const double eps = 0.1;
  CHECK(max_abs(mollify(SpectralScalar::constant(n, 3.0), eps) - SpectralScalar::constant(n, 3.0)) < 1e-15);
  for (int k = 1; k < 32; ++k)
  {
    const double m = std::exp(-std::pow(eps * k, 4));
    CHECK(max_abs(mollify(wave(n, cos_fn, k), eps) - m * wave(n, cos_fn, k)) < 1e-14);
  }
  // Even input stays even: f(alpha) = f(-alpha) maps node j to node n - j.
  const SpectralScalar even = SpectralScalar::from_function(
      n, [](double a) { return std::cos(a) + 0.3 * std::cos(5 * a) + 0.1; });
  const SpectralScalar m = mollify(even, 0.2);
  for (std::size_t j = 1; j < n; ++j)
  {
    CHECK(std::abs(m[j] - m[n - j]) < 1e-14);
  }
  CHECK_THROWS_AS(mollify(even, -1.0), Error);
}

TEST_CASE("sobolev norm examples")
{
  const std::size_t n = 32;
  CHECK(sobolev_norm(SpectralScalar::zeros(n), 3) == 0.0);
  CHECK(sobolev_norm(wave(n, cos_fn, 1), 0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(sobolev_norm(wave(n, cos_fn, 1), 1) == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-14));
  // cos(k a) in H^s: pi (1 + k^2)^s.
  CHECK(sobolev_norm(wave(n, cos_fn, 3), 3) ==
        doctest::Approx(std::sqrt(kPi * std::pow(10.0, 3))).epsilon(1e-14));
  CHECK(sobolev_norm(SpectralScalar::constant(n, 1.0), 2) ==
        doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-14));
}

TEST_CASE("Parseval and inner products")
{
  std::mt19937_64 rng(17);
  const std::size_t n = 64;
  const SpectralScalar f = random_trig_polynomial(n, 20, rng);
  CHECK(l2_norm(f) == doctest::Approx(sobolev_norm(f, 0)).epsilon(1e-13));
  CHECK(inner_product(f, f) == doctest::Approx(l2_norm(f) * l2_norm(f)).epsilon(1e-13));
}

TEST_CASE("periodic antiderivative")
{
  const std::size_t n = 32;
  const SpectralScalar f = wave(n, cos_fn, 2);
  const SpectralScalar F = periodic_antiderivative(f);
  CHECK(max_abs(derivative(F, 1) - f) < 1e-14);
  CHECK(std::abs(F.mean()) < 1e-15);
}

TEST_CASE("band-limited resampling and evaluation")
{
  std::mt19937_64 rng(23);
  const SpectralScalar f = random_trig_polynomial(32, 10, rng);
  const SpectralScalar g = f.resampled(128);
  for (std::size_t j = 0; j < 128; ++j)
  {
    CHECK(std::abs(g[j] - f.evaluate(grid_node(128, j))) < 1e-13);
  }
  const SpectralScalar back = g.resampled(32);
  CHECK(max_abs(back - f) < 1e-13);
}
