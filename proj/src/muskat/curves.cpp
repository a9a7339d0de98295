// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

constexpr double kChordFloor = 1e-14;
constexpr double kContactFloor = 1e-12;

}  // namespace

void FluidParams::validate() const
{
  const double values[] = {mu1, mu2, kappa1, kappa2, rho1, rho2, g};
  for (double v : values)
  {
    if (!std::isfinite(v))
    {
      fail(ErrorCode::Validation, "fluid parameters must be finite");
    }
  }
  if (!(mu1 + mu2 > 0.0))
  {
    fail(ErrorCode::Validation, "mu1 + mu2 must be positive");
  }
  if (!(kappa1 + kappa2 > 0.0))
  {
    fail(ErrorCode::Validation, "kappa1 + kappa2 must be positive");
  }
  if (!(std::abs(gamma1()) < 1.0))
  {
    fail(ErrorCode::Validation,
         "|gamma1| = |(mu2 - mu1)/(mu1 + mu2)| must be < 1, got " + std::to_string(gamma1()));
  }
  if (!(std::abs(gamma2()) < 1.0))
  {
    fail(ErrorCode::Validation, "|gamma2| = |(kappa1 - kappa2)/(kappa1 + kappa2)| must be < 1, got " +
                                    std::to_string(gamma2()));
  }
}

PeriodicCurve::PeriodicCurve(SpectralScalar p1, SpectralScalar p2)
  : p1_(std::move(p1)), p2_(std::move(p2))
{
  if (p1_.size() != p2_.size())
  {
    fail(ErrorCode::InvalidArgument, "curve components must share the grid");
  }
}

PeriodicCurve PeriodicCurve::flat(std::size_t n, double height)
{
  return {SpectralScalar::zeros(n), SpectralScalar::constant(n, height)};
}

PeriodicCurve PeriodicCurve::from_functions(std::size_t n,
                                            const std::function<double(double)> &p1,
                                            const std::function<double(double)> &p2)
{
  return {SpectralScalar::from_function(n, p1), SpectralScalar::from_function(n, p2)};
}

cplx PeriodicCurve::point(std::size_t j) const
{
  return {grid_node(size(), j) + p1_[j], p2_[j]};
}

std::vector<cplx> PeriodicCurve::points() const
{
  std::vector<cplx> out(size());
  for (std::size_t j = 0; j < out.size(); ++j)
  {
    out[j] = point(j);
  }
  return out;
}

std::vector<cplx> PeriodicCurve::tangents() const
{
  const SpectralScalar d1 = derivative(p1_, 1);
  const SpectralScalar d2 = derivative(p2_, 1);
  std::vector<cplx> out(size());
  for (std::size_t j = 0; j < out.size(); ++j)
  {
    out[j] = {1.0 + d1[j], d2[j]};
  }
  return out;
}

cplx PeriodicCurve::evaluate(double alpha) const
{
  return {alpha + p1_.evaluate(alpha), p2_.evaluate(alpha)};
}

PeriodicCurve PeriodicCurve::translated(double dx, double dy) const
{
  return {p1_ + SpectralScalar::constant(size(), dx), p2_ + SpectralScalar::constant(size(), dy)};
}

PeriodicCurve PeriodicCurve::resampled(std::size_t m) const
{
  return {p1_.resampled(m), p2_.resampled(m)};
}

double arc_chord_norm(const PeriodicCurve &z)
{
  const std::size_t n = z.size();
  const auto pts = z.points();
  const auto tan = z.tangents();
  double sup = 0.0;
  for (std::size_t j = 0; j < n; ++j)
  {
    const double speed = std::abs(tan[j]);
    if (speed < kChordFloor)
    {
      fail(ErrorCode::SelfIntersection, "curve is singular at node " + std::to_string(j));
    }
    sup = std::max(sup, 1.0 / speed);
    for (std::size_t m = 1; m < n; ++m)
    {
      // beta = 2 pi m' / n with m' the representative of m in (-n/2, n/2].
      const std::ptrdiff_t shift = (m <= n / 2) ? static_cast<std::ptrdiff_t>(m)
                                                : static_cast<std::ptrdiff_t>(m) -
                                                      static_cast<std::ptrdiff_t>(n);
      const double beta = kTwoPi * static_cast<double>(std::abs(shift)) / static_cast<double>(n);
      const std::size_t other = (j + n - m) % n;
      const double chord = std::abs(periodic_difference(pts[j], pts[other]));
      if (chord < kChordFloor)
      {
        fail(ErrorCode::SelfIntersection, "nodes " + std::to_string(j) + " and " +
                                              std::to_string(other) + " coincide");
      }
      sup = std::max(sup, beta / chord);
    }
  }
  return sup;
}

double separation_norm(const PeriodicCurve &z, const PeriodicCurve &h)
{
  if (z.size() != h.size())
  {
    fail(ErrorCode::InvalidArgument, "curves must share the grid");
  }
  const auto zp = z.points();
  const auto hp = h.points();
  double min_sq = std::numeric_limits<double>::infinity();
  for (const cplx &a : zp)
  {
    for (const cplx &b : hp)
    {
      min_sq = std::min(min_sq, std::norm(periodic_difference(a, b)));
    }
  }
  if (std::sqrt(min_sq) < kContactFloor)
  {
    fail(ErrorCode::CurveContact, "curves touch");
  }
  return 1.0 / min_sq;
}

double parametrization_defect(const PeriodicCurve &z)
{
  const auto tan = z.tangents();
  double mean = 0.0;
  for (const cplx &t : tan)
  {
    mean += std::norm(t);
  }
  mean /= static_cast<double>(tan.size());
  double sup = 0.0;
  for (const cplx &t : tan)
  {
    sup = std::max(sup, std::abs(std::norm(t) - mean));
  }
  return sup / mean;
}

namespace
{

// One arclength sweep. New parameter theta(alpha) = alpha + q(alpha) with
// q = (S(alpha) - S(-pi)) / mean speed and S the periodic antiderivative of
// the speed; nodes are placed at the preimages of the uniform grid.
PeriodicCurve arclength_sweep(const PeriodicCurve &z)
{
  const std::size_t n = z.size();
  const auto tan = z.tangents();
  std::vector<double> speed(n);
  for (std::size_t j = 0; j < n; ++j)
  {
    speed[j] = std::abs(tan[j]);
  }
  const SpectralScalar speed_field(std::move(speed));
  const double mean_speed = speed_field.mean();
  if (!(mean_speed > 0.0))
  {
    fail(ErrorCode::DegenerateParametrization, "curve has zero length");
  }
  const SpectralScalar anti = periodic_antiderivative(speed_field);
  const double anchor = anti.evaluate(-kPi);

  std::vector<double> p1(n), p2(n);
  p1[0] = z.p1()[0];
  p2[0] = z.p2()[0];
  for (std::size_t j = 1; j < n; ++j)
  {
    const double theta = grid_node(n, j);
    double alpha = theta - (anti.evaluate(theta) - anchor) / mean_speed;
    for (int it = 0; it < 50; ++it)
    {
      const double residual = alpha + (anti.evaluate(alpha) - anchor) / mean_speed - theta;
      const double slope = speed_field.evaluate(alpha) / mean_speed;
      const double step = residual / slope;
      alpha -= step;
      if (std::abs(step) < 1e-15)
      {
        break;
      }
    }
    const cplx pos = z.evaluate(alpha);
    p1[j] = pos.real() - theta;
    p2[j] = pos.imag();
  }
  return {SpectralScalar(std::move(p1)), SpectralScalar(std::move(p2))};
}

}  // namespace

PeriodicCurve resample_uniform(const PeriodicCurve &z, double accept)
{
  constexpr double kTarget = 1e-13;
  double defect = parametrization_defect(z);
  if (defect <= kTarget)
  {
    return z;
  }
  PeriodicCurve current = z;
  for (int sweep = 0; sweep < 100; ++sweep)
  {
    PeriodicCurve next = arclength_sweep(current);
    const double next_defect = parametrization_defect(next);
    if (!(next_defect < defect))
    {
      // Stalled at the discretization floor.
      break;
    }
    current = std::move(next);
    defect = next_defect;
    if (defect <= kTarget)
    {
      break;
    }
  }
  if (!(defect <= accept))
  {
    char buf[96];
    std::snprintf(buf, sizeof buf, "arclength resampling stalled with defect %.3e", defect);
    fail(ErrorCode::NoConvergence, buf);
  }
  return current;
}

}  // namespace muskat
