// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "muskat/spectral.hpp"

namespace muskat
{

/// Viscosities, permeabilities and densities of the two phases (fluid 1 above
/// the interface), plus gravity.
struct FluidParams
{
  double mu1 = 1.0;
  double mu2 = 1.0;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double rho1 = 0.0;
  double rho2 = 1.0;
  double g = 1.0;

  double gamma1() const { return (mu2 - mu1) / (mu1 + mu2); }
  double gamma2() const { return (kappa1 - kappa2) / (kappa1 + kappa2); }
  double big_n() const { return 2.0 * kappa1 * g * (rho2 - rho1) / (mu2 + mu1); }

  /// Throws Validation on a non-admissible parameter set.
  void validate() const;
};

/// Horizontally periodic interface alpha -> (alpha + p1(alpha), p2(alpha)).
/// Points are handled as complex numbers x + i y.
class PeriodicCurve
{
public:
  PeriodicCurve() = default;
  PeriodicCurve(SpectralScalar p1, SpectralScalar p2);

  static PeriodicCurve flat(std::size_t n, double height);
  static PeriodicCurve from_functions(std::size_t n, const std::function<double(double)> &p1,
                                      const std::function<double(double)> &p2);

  std::size_t size() const noexcept { return p1_.size(); }
  const SpectralScalar &p1() const noexcept { return p1_; }
  const SpectralScalar &p2() const noexcept { return p2_; }

  cplx point(std::size_t j) const;
  std::vector<cplx> points() const;
  /// d curve / d alpha at the nodes.
  std::vector<cplx> tangents() const;
  /// Curve position at an arbitrary parameter value (trigonometric interpolation).
  cplx evaluate(double alpha) const;

  PeriodicCurve translated(double dx, double dy) const;
  PeriodicCurve resampled(std::size_t m) const;

private:
  SpectralScalar p1_;
  SpectralScalar p2_;
};

/// Difference a - b with the horizontal part reduced to the nearest 2pi image.
inline cplx periodic_difference(cplx a, cplx b)
{
  const cplx d = a - b;
  return {std::remainder(d.real(), kTwoPi), d.imag()};
}

/// sup over grid pairs of |beta| / |z(alpha) - z(alpha - beta)|, together with
/// the diagonal limit 1 / |dz/dalpha|. Throws SelfIntersection on a chord
/// shorter than 1e-14.
double arc_chord_norm(const PeriodicCurve &z);

/// 1 / min |z(alpha) - h(beta)|^2 over grid pairs. Throws CurveContact when
/// the curves come within 1e-12 of each other.
double separation_norm(const PeriodicCurve &z, const PeriodicCurve &h);

/// sup_alpha | |dz/dalpha|^2 - A | / A with A the grid mean of |dz/dalpha|^2.
double parametrization_defect(const PeriodicCurve &z);

/// Reparametrizes by arclength so that |dz/dalpha| is uniform, keeping the
/// node at alpha = -pi fixed. Sweeps until the defect reaches 1e-13 or stops
/// improving; throws NoConvergence when it is then still above accept.
PeriodicCurve resample_uniform(const PeriodicCurve &z, double accept = 1e-8);

}  // namespace muskat
