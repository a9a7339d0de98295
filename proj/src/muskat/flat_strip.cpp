// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/flat_strip.hpp"

#include <cmath>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

// 1/cosh k without overflow for large k.
double sech(double k)
{
  const double e = std::exp(-k);
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

SpectralScalar apply_strip_operator(StripOperator which, const SpectralScalar &a,
                                    const SpectralScalar &b)
{
  if (a.size() != b.size())
  {
    fail(ErrorCode::InvalidArgument, "strip operands live on different grids");
  }
  const std::size_t n = a.size();
  const auto am = a.modes();
  const auto bm = b.modes();
  std::vector<cplx> out(am.size());
  for (std::size_t k = 0; k < out.size(); ++k)
  {
    const double kk = static_cast<double>(k);
    // For k >= 0, sign(k) sinh(k) / cosh(k) = tanh(k) and sign(0) = 0.
    const double t = std::tanh(kk);
    const double s = sech(kk);
    switch (which)
    {
      case StripOperator::H1:  // (m+, w)
        out[k] = -s * bm[k] - t * am[k];
        break;
      case StripOperator::H2h:  // (m+, w)
        out[k] = s * am[k] - t * bm[k];
        break;
      case StripOperator::H2z:  // (f, m-)
        out[k] = s * bm[k] + t * am[k];
        break;
      case StripOperator::H3:  // (f, m-)
        out[k] = s * am[k] - t * bm[k];
        break;
    }
  }
  return SpectralScalar::from_modes(n, std::move(out));
}

std::pair<double, double> round_trip_defect(const SpectralScalar &f, const SpectralScalar &m_minus,
                                            double s1)
{
  const SpectralScalar m_plus = apply_strip_operator(StripOperator::H2z, f, m_minus);
  const SpectralScalar w = apply_strip_operator(StripOperator::H3, f, m_minus);
  const SpectralScalar f_back = apply_strip_operator(StripOperator::H1, m_plus, w);
  const SpectralScalar m_back = apply_strip_operator(StripOperator::H2h, m_plus, w);
  return {l2_norm(f_back - s1 * f), l2_norm(m_back - m_minus)};
}

}  // namespace muskat
