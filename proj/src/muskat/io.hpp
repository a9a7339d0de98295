// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "muskat/diagnostics.hpp"

namespace muskat
{

inline constexpr const char *kSeriesHeader =
    "t,h3,omega_h1,arc_chord,separation,sigma_min,dissipation,energy,accepted";

/// One CSV row (no trailing newline), values printed with %.17g.
std::string series_row(const DiagnosticsRecord &record);

/// Header plus one row per record. Throws Io on write failure.
void write_series_csv(const std::string &path, std::span<const DiagnosticsRecord> series);

/// {"n": n, "p1_modes": [[re, im], ...], "p2_modes": [...]} for k = 0..n/2,
/// plus "t" when given.
std::string curve_to_json(const PeriodicCurve &curve, const double *t = nullptr);

/// Inverse of curve_to_json; modes are restored exactly. Throws Parse or
/// Validation on malformed input.
PeriodicCurve curve_from_json(const std::string &text);

/// Fixed drawing window in physical coordinates.
struct Viewport
{
  double x_min = -4.0;
  double x_max = 4.0;
  double y_min = -3.0;
  double y_max = 1.0;
};

/// Window enclosing both curves with a margin.
Viewport viewport_for(const PeriodicCurve &z, const PeriodicCurve &h);

/// Polylines of z and h; z segments are colored by the sign of sigma.
std::string render_svg(const PeriodicCurve &z, const PeriodicCurve &h,
                       const SpectralScalar &sigma, const Viewport &view);

/// Writes text to path. Throws Io on failure.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace muskat
