// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "muskat/config.hpp"
#include "muskat/diagnostics.hpp"

namespace muskat
{

enum class ExitReason
{
  Completed = 0,
  RTViolated = 1,
  ArcChordBlowup = 2,
  CurveContact = 3,
  StepRejected = 4,
};

const char *to_string(ExitReason reason);

struct RunResult
{
  /// Record at t = 0 followed by one record per attempted step.
  std::vector<DiagnosticsRecord> series;
  SimState final_state;
  ExitReason exit = ExitReason::Completed;
  std::string message;
  double dt = 0.0;
  std::size_t steps = 0;
};

/// Called with the state and its record, once at t = 0 and after every
/// accepted step, with the number of accepted steps so far.
using StepObserver =
    std::function<void(const SimState &, const DiagnosticsRecord &, std::size_t)>;

/// Initial state of a run: curves built from the presets, z mollified when
/// eps > 0 and resampled to uniform arclength when needed.
SimState initial_state(const RunConfig &config);

/// Time step used by a run: config dt, else 0.5 (2 pi / n) / max|velocity|
/// capped at t_end / 10, or t_end / 100 when the initial velocity vanishes.
double select_dt(const RunConfig &config, const SimState &initial);

/// Integrates to t_end or until a guard trips. Only validation errors are
/// thrown; physical failures end the run with the matching exit reason.
RunResult run(const RunConfig &config, const StepObserver &observer = {});

/// run() plus artifacts in config.output_dir: series.csv, snapshot_XXXX.json
/// every snapshot_stride steps (and at the end) and matching frame_XXXX.svg
/// when enabled. Throws Io on write failures.
RunResult run_and_write(const RunConfig &config);

}  // namespace muskat
