// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "muskat/spectral.hpp"

namespace muskat
{

/// Boundary-trace maps across the flat strip 0 < y < 1 with harmonic
/// extensions above and below. With s = sign(k):
///   H1 (m+, w) = (-w  - s m+ sinh k) / cosh k
///   H2h(m+, w) = ( m+ - s w  sinh k) / cosh k
///   H2z(f, m-) = ( m- + s f  sinh k) / cosh k
///   H3 (f, m-) = ( f  - s m- sinh k) / cosh k
enum class StripOperator
{
  H1,
  H2z,
  H2h,
  H3,
};

SpectralScalar apply_strip_operator(StripOperator which, const SpectralScalar &a,
                                    const SpectralScalar &b);

/// Maps (f, m-) down to (m+, w) with H2z, H3 and back with H1, H2h, and
/// returns (||H1(m+, w) - s1 f||_L2, ||H2h(m+, w) - m-||_L2).
std::pair<double, double> round_trip_defect(const SpectralScalar &f, const SpectralScalar &m_minus,
                                            double s1 = -1.0);

}  // namespace muskat
