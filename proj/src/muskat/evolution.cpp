// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/evolution.hpp"

#include <cmath>
#include <string>

namespace muskat
{

namespace
{

SolveOptions solve_options(const SimState &s)
{
  SolveOptions o;
  o.eps = s.eps;
  return o;
}

bool is_zero(const SpectralScalar &f)
{
  for (double v : f.samples())
  {
    if (v != 0.0)
    {
      return false;
    }
  }
  return true;
}

bool all_finite(const PeriodicCurve &z)
{
  for (std::size_t j = 0; j < z.size(); ++j)
  {
    if (!std::isfinite(z.p1()[j]) || !std::isfinite(z.p2()[j]))
    {
      return false;
    }
  }
  return true;
}

PeriodicCurve shifted(const PeriodicCurve &z, const VectorField &v, double dt)
{
  return {z.p1() + dt * v.x, z.p2() + dt * v.y};
}

// Geometry and solver failures inside a step become step rejections.
[[noreturn]] void reject_from(const Error &e)
{
  switch (e.code())
  {
    case ErrorCode::SelfIntersection:
      throw StepRejected(RejectReason::ArcChord, e.what());
    case ErrorCode::CurveContact:
      throw StepRejected(RejectReason::Separation, e.what());
    case ErrorCode::NoConvergence:
    case ErrorCode::DegenerateParametrization:
      throw StepRejected(RejectReason::Solver, e.what());
    default:
      throw e;
  }
}

}  // namespace

SimState make_state(PeriodicCurve z, PeriodicCurve h, const FluidParams &params, double eps,
                    double t)
{
  params.validate();
  if (!(eps >= 0.0))
  {
    fail(ErrorCode::InvalidArgument, "mollifier width must be nonnegative");
  }
  if (z.size() != h.size())
  {
    fail(ErrorCode::InvalidArgument, "curves must share the grid");
  }
  SimState s;
  s.t = t;
  s.z = std::move(z);
  s.h = std::move(h);
  s.params = params;
  s.eps = eps;
  s.h_block = InteractionOperator::make_h_block(s.h);
  s.vort = evaluate_velocity(s, s.z).vort;
  return s;
}

SpectralScalar tangential_speed(const PeriodicCurve &z, const VectorField &velocity_noc)
{
  const SpectralScalar dz1 = SpectralScalar::constant(z.size(), 1.0) + derivative(z.p1(), 1);
  const SpectralScalar dz2 = derivative(z.p2(), 1);
  const double area = (dz1 * dz1 + dz2 * dz2).mean();
  if (!(area >= 1e-14))
  {
    fail(ErrorCode::DegenerateParametrization, "|dz/dalpha|^2 vanishes");
  }
  const SpectralScalar g =
      (1.0 / area) * (dz1 * derivative(velocity_noc.x, 1) + dz2 * derivative(velocity_noc.y, 1));
  // The linear part of the first term cancels the mean of the second; what
  // remains is minus the periodic antiderivative, pinned to 0 at alpha = -pi
  // (node 0).
  const SpectralScalar anti = periodic_antiderivative(g);
  return -(anti - SpectralScalar::constant(z.size(), anti[0]));
}

double tangential_speed_jump(const PeriodicCurve &z, const VectorField &velocity_noc)
{
  const SpectralScalar dz1 = SpectralScalar::constant(z.size(), 1.0) + derivative(z.p1(), 1);
  const SpectralScalar dz2 = derivative(z.p2(), 1);
  const double area = (dz1 * dz1 + dz2 * dz2).mean();
  const SpectralScalar integrand =
      dz1 * derivative(velocity_noc.x, 1) + dz2 * derivative(velocity_noc.y, 1);
  const double total = inner_product(integrand, SpectralScalar::constant(z.size(), 1.0));
  auto c_at = [&](double alpha, double partial) {
    return (alpha + kPi) / (kTwoPi * area) * total - partial / area;
  };
  return c_at(kPi, total) - c_at(-kPi, 0.0);
}

VelocityEvaluation evaluate_velocity(const SimState &context, const PeriodicCurve &z)
{
  const std::size_t n = z.size();
  const auto f = forcing(z, context.params);
  if (is_zero(f.first.values()))
  {
    VectorField zero{SpectralScalar::zeros(n), SpectralScalar::zeros(n)};
    return {zero, SpectralScalar::zeros(n), zero,
            {AmplitudeField::zeros(n), AmplitudeField::zeros(n), 0, 0.0}};
  }
  const InteractionOperator op(z, context.h, context.h_block);
  VorticityPair vort = solve_vorticity(op, z, context.params, solve_options(context));
  VectorField br = op.velocity_on_z(vort.omega1.values().samples(), vort.omega2.values().samples());
  SpectralScalar c = tangential_speed(z, br);
  const SpectralScalar dz1 = SpectralScalar::constant(n, 1.0) + derivative(z.p1(), 1);
  const SpectralScalar dz2 = derivative(z.p2(), 1);
  VectorField velocity{br.x + c * dz1, br.y + c * dz2};
  return {std::move(br), std::move(c), std::move(velocity), std::move(vort)};
}

VectorField interface_velocity(const SimState &state)
{
  return evaluate_velocity(state, state.z).velocity;
}

SimState rk4_advance(const SimState &state, double dt)
{
  const PeriodicCurve &z0 = state.z;
  const VectorField k1 = evaluate_velocity(state, z0).velocity;
  const VectorField k2 = evaluate_velocity(state, shifted(z0, k1, 0.5 * dt)).velocity;
  const VectorField k3 = evaluate_velocity(state, shifted(z0, k2, 0.5 * dt)).velocity;
  const VectorField k4 = evaluate_velocity(state, shifted(z0, k3, dt)).velocity;
  const double w = dt / 6.0;
  SimState next = state;
  next.t = state.t + dt;
  next.z = PeriodicCurve(z0.p1() + w * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                         z0.p2() + w * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y));
  next.vort = evaluate_velocity(next, next.z).vort;
  return next;
}

SimState rk4_step(const SimState &state, double dt, const StepGuards &guards)
{
  if (!(dt > 0.0) || !std::isfinite(dt))
  {
    fail(ErrorCode::InvalidArgument, "time step must be positive");
  }
  SimState next;
  try
  {
    next = rk4_advance(state, dt);
  }
  catch (const Error &e)
  {
    reject_from(e);
  }
  if (!all_finite(next.z))
  {
    throw StepRejected(RejectReason::NonFinite, "non-finite interface after step");
  }
  try
  {
    if (parametrization_defect(next.z) > guards.resample_threshold)
    {
      next.z = resample_uniform(next.z, guards.resample_threshold);
      next.vort = evaluate_velocity(next, next.z).vort;
    }
    const double arc_chord = arc_chord_norm(next.z);
    if (!(arc_chord <= guards.max_arc_chord))
    {
      throw StepRejected(RejectReason::ArcChord,
                         "arc-chord norm " + std::to_string(arc_chord) + " exceeds guard");
    }
    const double separation = separation_norm(next.z, next.h);
    if (!(1.0 / std::sqrt(separation) >= guards.min_separation))
    {
      throw StepRejected(RejectReason::Separation, "curves closer than the separation guard");
    }
  }
  catch (const StepRejected &)
  {
    throw;
  }
  catch (const Error &e)
  {
    reject_from(e);
  }
  return next;
}

}  // namespace muskat
