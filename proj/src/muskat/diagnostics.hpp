// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "muskat/evolution.hpp"

namespace muskat
{

struct DiagnosticsRecord
{
  double t = 0.0;
  double sobolev_z = 0.0;      // ||z||_{H^k} of the periodic part
  double sobolev_omega = 0.0;  // H^1 of (omega1, omega2)
  double arc_chord = 0.0;
  double separation = 0.0;
  double sigma_min = 0.0;
  double dissipation = 0.0;
  double energy = 0.0;
  bool accepted = true;

  // Not part of the CSV series.
  double max_velocity = 0.0;
  double param_defect = 0.0;
  double c_jump = 0.0;
  double dissipation_form = 0.0;
  double dk_norm_sq = 0.0;
};

struct SigmaField
{
  SpectralScalar sigma;
  double min = 0.0;  // m(t), grid minimum
};

/// sigma = (mu2 - mu1)/kappa1 (BR(omega1,z) + BR(omega2,h)) . dz^perp + (rho2 - rho1) g dz1
/// with dz^perp = (-dz2, dz1). Uses the amplitudes cached in the state.
SigmaField rayleigh_taylor_sigma(const SimState &state);

/// ||z||_{H^k} of the periodic part, (||p1||^2 + ||p2||^2)^(1/2).
double curve_sobolev_norm(const PeriodicCurve &z, int k);

/// int_T d^k z . Lambda(d^k z), k >= 1. Nonnegative up to rounding.
double dissipation_quadratic_form(const PeriodicCurve &z, int k);

/// -kappa1 / (2 pi (mu1 + mu2)) int_T sigma / A  d^k z . Lambda(d^k z)
double dissipation_term(const SimState &state, int k);

/// ||F(z)||^2_inf + ||d(z,h)||^2_inf + ||z||^2_{H^k}
double energy_functional(const SimState &state, int k);

/// Worst per-step decrease rate of m(t), max_i (m_i - m_{i+1}) / (t_{i+1} - t_i)
/// over consecutive accepted records. Throws InsufficientData with fewer than
/// two records.
double sigma_min_drift(std::span<const DiagnosticsRecord> series);

/// Full record for the current state.
DiagnosticsRecord diagnose(const SimState &state, int k, bool accepted = true);

}  // namespace muskat
