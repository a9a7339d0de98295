// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "muskat/config.hpp"
#include "muskat/brkernels.hpp"

namespace muskat
{

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Random trigonometric polynomial with modes 0..max_mode, coefficients
/// uniform in [-1, 1].
SpectralScalar random_trig_polynomial(std::size_t n, int max_mode, std::mt19937_64 &rng);

/// Distance between the mean heights of z and h in the configuration, or 2
/// when that is not positive.
double reference_depth(const RunConfig &config);

/// Property and oracle suites on the configured grid and geometry: Fourier
/// calculus identities, the pointwise Lambda inequality, flat-strip round
/// trip, adjointness, flat Poisson multipliers, spectral radius, fixed point
/// versus dense solve, and dissipation positivity.
std::vector<CheckResult> run_verification(const RunConfig &config, std::uint64_t seed);

/// Dominant eigenvalue estimate of M T* for the configured geometry.
SpectralRadiusEstimate spectrum(const RunConfig &config, int n_probe = 60);

}  // namespace muskat
