// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace muskat
{

namespace
{

VectorField br_velocity(const SimState &state)
{
  const std::size_t n = state.z.size();
  const auto w1 = state.vort.omega1.values().samples();
  const auto w2 = state.vort.omega2.values().samples();
  const bool zero = std::all_of(w1.begin(), w1.end(), [](double v) { return v == 0.0; }) &&
                    std::all_of(w2.begin(), w2.end(), [](double v) { return v == 0.0; });
  if (zero)
  {
    return {SpectralScalar::zeros(n), SpectralScalar::zeros(n)};
  }
  const InteractionOperator op(state.z, state.h, state.h_block);
  return op.velocity_on_z(w1, w2);
}

double mean_speed_sq(const PeriodicCurve &z)
{
  const SpectralScalar dz1 = SpectralScalar::constant(z.size(), 1.0) + derivative(z.p1(), 1);
  const SpectralScalar dz2 = derivative(z.p2(), 1);
  return (dz1 * dz1 + dz2 * dz2).mean();
}

SigmaField sigma_from(const SimState &state, const VectorField &br)
{
  const auto &p = state.params;
  const PeriodicCurve &z = state.z;
  const SpectralScalar dz1 = SpectralScalar::constant(z.size(), 1.0) + derivative(z.p1(), 1);
  const SpectralScalar dz2 = derivative(z.p2(), 1);
  const SpectralScalar normal_part = br.y * dz1 - br.x * dz2;
  const SpectralScalar sigma =
      ((p.mu2 - p.mu1) / p.kappa1) * normal_part + ((p.rho2 - p.rho1) * p.g) * dz1;
  double m = std::numeric_limits<double>::infinity();
  for (double v : sigma.samples())
  {
    m = std::min(m, v);
  }
  return {sigma, m};
}

// d^k of the curve; the (alpha, 0) part only survives at k = 1 and is
// annihilated by Lambda, so the periodic part suffices.
std::pair<SpectralScalar, SpectralScalar> periodic_derivatives(const PeriodicCurve &z, int k)
{
  if (k < 1 || k > 6)
  {
    fail(ErrorCode::InvalidArgument, "dissipation order must be in [1, 6]");
  }
  return {derivative(z.p1(), k), derivative(z.p2(), k)};
}

double dissipation_from(const SimState &state, const SpectralScalar &sigma, int k)
{
  const auto [d1, d2] = periodic_derivatives(state.z, k);
  const SpectralScalar integrand =
      sigma * (d1 * fractional_laplacian(d1, 1.0) + d2 * fractional_laplacian(d2, 1.0));
  const double area = mean_speed_sq(state.z);
  const auto &p = state.params;
  const double integral =
      inner_product(integrand, SpectralScalar::constant(sigma.size(), 1.0)) / area;
  return -p.kappa1 / (kTwoPi * (p.mu1 + p.mu2)) * integral;
}

}  // namespace

SigmaField rayleigh_taylor_sigma(const SimState &state)
{
  return sigma_from(state, br_velocity(state));
}

double curve_sobolev_norm(const PeriodicCurve &z, int k)
{
  return std::hypot(sobolev_norm(z.p1(), k), sobolev_norm(z.p2(), k));
}

double dissipation_quadratic_form(const PeriodicCurve &z, int k)
{
  const auto [d1, d2] = periodic_derivatives(z, k);
  return inner_product(d1, fractional_laplacian(d1, 1.0)) +
         inner_product(d2, fractional_laplacian(d2, 1.0));
}

double dissipation_term(const SimState &state, int k)
{
  return dissipation_from(state, rayleigh_taylor_sigma(state).sigma, k);
}

double energy_functional(const SimState &state, int k)
{
  const double f = arc_chord_norm(state.z);
  const double d = separation_norm(state.z, state.h);
  const double s = curve_sobolev_norm(state.z, k);
  return f * f + d * d + s * s;
}

double sigma_min_drift(std::span<const DiagnosticsRecord> series)
{
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t pairs = 0;
  const DiagnosticsRecord *prev = nullptr;
  for (const auto &r : series)
  {
    if (!r.accepted)
    {
      continue;
    }
    if (prev != nullptr && r.t > prev->t)
    {
      worst = std::max(worst, (prev->sigma_min - r.sigma_min) / (r.t - prev->t));
      ++pairs;
    }
    prev = &r;
  }
  if (pairs == 0)
  {
    fail(ErrorCode::InsufficientData, "sigma drift needs at least two accepted records");
  }
  return worst;
}

DiagnosticsRecord diagnose(const SimState &state, int k, bool accepted)
{
  DiagnosticsRecord r;
  r.t = state.t;
  r.accepted = accepted;
  r.sobolev_z = curve_sobolev_norm(state.z, k);
  r.sobolev_omega = std::hypot(sobolev_norm(state.vort.omega1.values(), 1),
                               sobolev_norm(state.vort.omega2.values(), 1));
  r.arc_chord = arc_chord_norm(state.z);
  r.separation = separation_norm(state.z, state.h);

  const VectorField br = br_velocity(state);
  const SigmaField sigma = sigma_from(state, br);
  r.sigma_min = sigma.min;
  r.dissipation = dissipation_from(state, sigma.sigma, k);
  r.energy = r.arc_chord * r.arc_chord + r.separation * r.separation + r.sobolev_z * r.sobolev_z;

  const SpectralScalar c = tangential_speed(state.z, br);
  const SpectralScalar dz1 = SpectralScalar::constant(state.z.size(), 1.0) +
                             derivative(state.z.p1(), 1);
  const SpectralScalar dz2 = derivative(state.z.p2(), 1);
  const SpectralScalar vx = br.x + c * dz1;
  const SpectralScalar vy = br.y + c * dz2;
  for (std::size_t j = 0; j < vx.size(); ++j)
  {
    r.max_velocity = std::max(r.max_velocity, std::hypot(vx[j], vy[j]));
  }
  r.param_defect = parametrization_defect(state.z);
  r.c_jump = tangential_speed_jump(state.z, br);
  r.dissipation_form = dissipation_quadratic_form(state.z, k);
  const auto [d1, d2] = periodic_derivatives(state.z, k);
  r.dk_norm_sq = inner_product(d1, d1) + inner_product(d2, d2);
  return r;
}

}  // namespace muskat
