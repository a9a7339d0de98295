// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muskat/curves.hpp"

namespace muskat
{

/// One Fourier term a cos(k alpha) + b sin(k alpha) of a periodic part.
struct ModeTerm
{
  int k = 1;
  double cos_coef = 0.0;
  double sin_coef = 0.0;
};

/// Initial curve description. Presets:
///   "flat"   : p2 = offset
///   "cosine" : p2 = offset + amplitude cos(mode alpha)
///   "modes"  : p1, p2 from explicit term lists, p2 shifted by offset
struct CurveSpec
{
  std::string preset = "flat";
  double offset = 0.0;
  double amplitude = 0.0;
  int mode = 1;
  std::vector<ModeTerm> p1;
  std::vector<ModeTerm> p2;
};

struct RunGuards
{
  double min_sigma = 0.0;
  double max_arc_chord = 1e3;
  double min_separation = 1e-3;
};

struct RunConfig
{
  std::size_t n = 64;
  double t_end = 1.0;
  /// Fixed step; when absent, 0.5 (2 pi / n) / max|velocity| at t = 0.
  std::optional<double> dt;
  int k = 3;
  double eps = 0.0;
  FluidParams params;
  CurveSpec z;
  CurveSpec h = CurveSpec{"flat", -2.0, 0.0, 1, {}, {}};
  std::string output_dir = "out";
  int snapshot_stride = 10;
  bool svg = true;
  RunGuards guards;
};

/// Parses and validates a JSON config document. Throws Parse on malformed
/// JSON and Validation on inadmissible values (including |gamma_i| >= 1).
RunConfig parse_config_text(const std::string &text);

/// Reads the file, then parse_config_text. Throws Io when unreadable.
RunConfig parse_config(const std::string &path);

/// Throws Validation on inadmissible values.
void validate(const RunConfig &config);

PeriodicCurve build_curve(const CurveSpec &spec, std::size_t n);

/// Human-readable echo of the configuration and the derived gamma1, gamma2, N.
std::string describe(const RunConfig &config);

}  // namespace muskat
