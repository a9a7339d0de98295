// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "muskat/io.hpp"

namespace muskat
{

namespace
{

double max_speed(const VectorField &v)
{
  double m = 0.0;
  for (std::size_t j = 0; j < v.x.size(); ++j)
  {
    m = std::max(m, std::hypot(v.x[j], v.y[j]));
  }
  return m;
}

ExitReason exit_for(RejectReason reason)
{
  switch (reason)
  {
    case RejectReason::ArcChord:
      return ExitReason::ArcChordBlowup;
    case RejectReason::Separation:
      return ExitReason::CurveContact;
    default:
      return ExitReason::StepRejected;
  }
}

// Record for a rejected step: the last accepted state flagged as rejected.
DiagnosticsRecord rejected_record(const SimState &state, int k, double t)
{
  DiagnosticsRecord r = diagnose(state, k, false);
  r.t = t;
  return r;
}

}  // namespace

const char *to_string(ExitReason reason)
{
  switch (reason)
  {
    case ExitReason::Completed:
      return "Completed";
    case ExitReason::RTViolated:
      return "RTViolated";
    case ExitReason::ArcChordBlowup:
      return "ArcChordBlowup";
    case ExitReason::CurveContact:
      return "CurveContact";
    case ExitReason::StepRejected:
      return "StepRejected";
  }
  return "Unknown";
}

SimState initial_state(const RunConfig &config)
{
  validate(config);
  PeriodicCurve z = build_curve(config.z, config.n);
  const PeriodicCurve h = build_curve(config.h, config.n);
  if (config.eps > 0.0)
  {
    z = PeriodicCurve(mollify(z.p1(), config.eps), mollify(z.p2(), config.eps));
  }
  if (parametrization_defect(z) > StepGuards{}.resample_threshold)
  {
    z = resample_uniform(z, StepGuards{}.resample_threshold);
  }
  return make_state(std::move(z), h, config.params, config.eps, 0.0);
}

double select_dt(const RunConfig &config, const SimState &initial)
{
  if (config.dt)
  {
    return *config.dt;
  }
  const double speed = max_speed(interface_velocity(initial));
  if (!(speed > 0.0))
  {
    return config.t_end / 100.0;
  }
  const double h = kTwoPi / static_cast<double>(config.n);
  return std::min(0.5 * h / speed, config.t_end / 10.0);
}

RunResult run(const RunConfig &config, const StepObserver &observer)
{
  validate(config);
  RunResult result;
  SimState state;
  try
  {
    state = initial_state(config);
  }
  catch (const Error &e)
  {
    if (e.code() == ErrorCode::Validation || e.code() == ErrorCode::InvalidArgument)
    {
      throw;
    }
    // Initial data the solver cannot handle: nothing to integrate.
    result.exit = e.code() == ErrorCode::CurveContact ? ExitReason::CurveContact
                  : e.code() == ErrorCode::SelfIntersection ? ExitReason::ArcChordBlowup
                                                           : ExitReason::StepRejected;
    result.message = e.what();
    return result;
  }

  const StepGuards guards{config.guards.max_arc_chord, config.guards.min_separation,
                          StepGuards{}.resample_threshold};
  result.dt = select_dt(config, state);

  DiagnosticsRecord record = diagnose(state, config.k, true);
  result.series.push_back(record);
  if (observer)
  {
    observer(state, record, 0);
  }
  if (record.sigma_min < config.guards.min_sigma)
  {
    result.exit = ExitReason::RTViolated;
    result.message = "Rayleigh-Taylor condition violated at t = 0";
    result.final_state = std::move(state);
    return result;
  }

  const double tol = 1e-12 * config.t_end;
  while (state.t < config.t_end - tol)
  {
    const double dt = std::min(result.dt, config.t_end - state.t);
    try
    {
      state = rk4_step(state, dt, guards);
    }
    catch (const StepRejected &e)
    {
      result.series.push_back(rejected_record(state, config.k, state.t + dt));
      result.exit = exit_for(e.reason());
      result.message = e.what();
      break;
    }
    ++result.steps;
    record = diagnose(state, config.k, true);
    result.series.push_back(record);
    if (observer)
    {
      observer(state, record, result.steps);
    }
    if (record.sigma_min < config.guards.min_sigma)
    {
      char buf[96];
      std::snprintf(buf, sizeof buf, "Rayleigh-Taylor condition violated at t = %.6g", state.t);
      result.exit = ExitReason::RTViolated;
      result.message = buf;
      break;
    }
  }
  result.final_state = std::move(state);
  return result;
}

RunResult run_and_write(const RunConfig &config)
{
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec)
  {
    fail(ErrorCode::Io, "cannot create output directory '" + config.output_dir + "'");
  }
  const fs::path dir(config.output_dir);
  Viewport view;
  bool have_view = false;
  std::size_t last_snapshot = static_cast<std::size_t>(-1);

  auto snapshot = [&](const SimState &s, std::size_t step) {
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_%04zu.json", step);
    write_text_file((dir / name).string(), curve_to_json(s.z, &s.t));
    if (config.svg)
    {
      if (!have_view)
      {
        view = viewport_for(s.z, s.h);
        have_view = true;
      }
      std::snprintf(name, sizeof name, "frame_%04zu.svg", step);
      write_text_file((dir / name).string(),
                      render_svg(s.z, s.h, rayleigh_taylor_sigma(s).sigma, view));
    }
    last_snapshot = step;
  };

  RunResult result = run(config, [&](const SimState &s, const DiagnosticsRecord &, std::size_t step) {
    if (config.snapshot_stride > 0 && step % static_cast<std::size_t>(config.snapshot_stride) == 0)
    {
      snapshot(s, step);
    }
  });
  if (config.snapshot_stride > 0 && !result.series.empty() && last_snapshot != result.steps)
  {
    snapshot(result.final_state, result.steps);
  }
  write_series_csv((dir / "series.csv").string(), result.series);
  return result;
}

}  // namespace muskat
