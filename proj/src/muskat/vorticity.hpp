// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "muskat/brkernels.hpp"

namespace muskat
{

struct VorticityPair
{
  AmplitudeField omega1;  // on z
  AmplitudeField omega2;  // on h
  int iterations = 0;
  /// L2 norm of omega + M T omega - forcing after the last iterate.
  double residual = 0.0;
};

struct SolveOptions
{
  double tol = 1e-12;
  int max_iter = 500;
  /// Mollifier width for the regularized system; 0 disables it.
  double eps = 0.0;
};

/// (-N dz2/dalpha, 0)
AmplitudePair forcing(const PeriodicCurve &z, const FluidParams &params);

/// Solves
///   omega1 = -gamma1 (T1 omega1 + T2 omega2) - N dz2/dalpha
///   omega2 = -gamma2 (T3 omega1 + T4 omega2)
/// by fixed-point iteration started from the forcing, stopping when the
/// relative L2 update drops below tol. With eps > 0 the whole right-hand side
/// is smoothed by the mollifier applied twice. Throws NoConvergence after
/// max_iter sweeps.
VorticityPair solve_vorticity(const PeriodicCurve &z, const PeriodicCurve &h,
                              const FluidParams &params, const SolveOptions &options = {});

/// Same, reusing a prebuilt operator.
VorticityPair solve_vorticity(const InteractionOperator &op, const PeriodicCurve &z,
                              const FluidParams &params, const SolveOptions &options = {});

/// Dense collocation LU solve of the same discrete system (n <= 256). Used
/// as an independent check on the iteration.
VorticityPair solve_vorticity_dense(const PeriodicCurve &z, const PeriodicCurve &h,
                                    const FluidParams &params, double eps = 0.0);

}  // namespace muskat
