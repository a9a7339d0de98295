// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "muskat/errors.hpp"
#include "muskat/vorticity.hpp"

namespace muskat
{

struct SimState
{
  double t = 0.0;
  PeriodicCurve z;
  PeriodicCurve h;
  /// Amplitudes solved on the current z.
  VorticityPair vort;
  FluidParams params;
  /// Mollifier width; 0 runs the unregularized system.
  double eps = 0.0;
  /// h-on-h kernel block, shared across steps.
  std::shared_ptr<const KernelBlock> h_block;
};

/// Builds a state at time t and solves the amplitudes for it.
SimState make_state(PeriodicCurve z, PeriodicCurve h, const FluidParams &params, double eps = 0.0,
                    double t = 0.0);

/// Tangential speed that keeps |dz/dalpha|^2 independent of alpha:
///   c(alpha) = (alpha + pi)/(2 pi A) int_T dz . d(u) - int_{-pi}^{alpha} dz . d(u) / A
/// with A the grid mean of |dz/dalpha|^2 and u the Birkhoff-Rott velocity.
/// Throws DegenerateParametrization when A < 1e-14.
SpectralScalar tangential_speed(const PeriodicCurve &z, const VectorField &velocity_noc);

/// c(pi) - c(-pi) from the two terms of the defining formula, by quadrature.
double tangential_speed_jump(const PeriodicCurve &z, const VectorField &velocity_noc);

struct VelocityEvaluation
{
  VectorField br;        // BR(omega1, z)_z + BR(omega2, h)_z
  SpectralScalar c;      // tangential speed
  VectorField velocity;  // br + c dz/dalpha
  VorticityPair vort;
};

/// Solves the amplitudes for curve z (keeping h, params, eps from context)
/// and evaluates the interface velocity.
VelocityEvaluation evaluate_velocity(const SimState &context, const PeriodicCurve &z);

/// Velocity of the current state, z_t = BR(omega1, z) + BR(omega2, h) + c dz.
VectorField interface_velocity(const SimState &state);

struct StepGuards
{
  double max_arc_chord = 1e3;
  double min_separation = 1e-3;
  /// Resample to uniform arclength when the parametrization defect exceeds this.
  double resample_threshold = 1e-6;
};

enum class RejectReason
{
  NonFinite,
  ArcChord,
  Separation,
  Solver,
};

class StepRejected : public Error
{
public:
  StepRejected(RejectReason reason, const std::string &what)
    : Error(ErrorCode::StepRejected, what), reason_(reason)
  {
  }

  RejectReason reason() const noexcept { return reason_; }

private:
  RejectReason reason_;
};

/// Classical four-stage step with signed dt and no guards or resampling.
SimState rk4_advance(const SimState &state, double dt);

/// Guarded step: dt > 0, resamples when the defect exceeds the threshold and
/// throws StepRejected when the new curve violates a guard.
SimState rk4_step(const SimState &state, double dt, const StepGuards &guards = {});

}  // namespace muskat
