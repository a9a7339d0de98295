// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace muskat
{

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Node j of the uniform periodic grid, alpha_j = -pi + 2 pi j / n.
inline double grid_node(std::size_t n, std::size_t j)
{
  return -kPi + kTwoPi * static_cast<double>(j) / static_cast<double>(n);
}

/// Real 2pi-periodic field sampled on the uniform grid, together with its
/// Fourier coefficients. Coefficients are stored for k = 0..n/2 in the
/// convention f(alpha) = sum_k fhat(k) exp(i k alpha); negative k follow
/// from conjugate symmetry. The Nyquist coefficient is real and represents
/// fhat(n/2) cos(n alpha / 2).
///
/// Values are immutable once constructed.
class SpectralScalar
{
public:
  SpectralScalar() = default;

  /// Builds from grid samples. Throws InvalidArgument unless n is even and >= 8.
  explicit SpectralScalar(std::vector<double> samples);

  /// Builds from the half spectrum k = 0..n/2. Imaginary parts of the mean and
  /// Nyquist coefficients are dropped. The stored modes are exactly the ones
  /// passed in.
  static SpectralScalar from_modes(std::size_t n, std::vector<cplx> modes);

  static SpectralScalar zeros(std::size_t n);
  static SpectralScalar constant(std::size_t n, double value);
  static SpectralScalar from_function(std::size_t n,
                                      const std::function<double(double)> &f);

  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  std::span<const double> samples() const noexcept { return samples_; }
  std::span<const cplx> modes() const noexcept { return modes_; }
  double operator[](std::size_t j) const { return samples_[j]; }
  double mean() const { return modes_.empty() ? 0.0 : modes_[0].real(); }

  /// Trigonometric interpolant at an arbitrary parameter value.
  double evaluate(double alpha) const;

  /// Band-limited interpolation onto an m-point grid (zero padding or
  /// truncation). The Nyquist coefficient is split symmetrically on refinement.
  SpectralScalar resampled(std::size_t m) const;

  /// Applies a Fourier multiplier symbol(k), k >= 0, extended to negative k by
  /// conjugate symmetry. When odd is set the Nyquist coefficient is zeroed.
  SpectralScalar with_multiplier(const std::function<cplx(double)> &symbol,
                                 bool odd) const;

  SpectralScalar without_mean() const;

  friend SpectralScalar operator+(const SpectralScalar &a, const SpectralScalar &b);
  friend SpectralScalar operator-(const SpectralScalar &a, const SpectralScalar &b);
  friend SpectralScalar operator*(double s, const SpectralScalar &a);
  friend SpectralScalar operator-(const SpectralScalar &a);
  /// Pointwise product on the grid.
  friend SpectralScalar operator*(const SpectralScalar &a, const SpectralScalar &b);

private:
  std::vector<double> samples_;
  std::vector<cplx> modes_;
};

/// Order-th derivative, order in [1, 6].
SpectralScalar derivative(const SpectralScalar &f, int order);

/// Periodic Hilbert transform, multiplier -i sign(k).
SpectralScalar hilbert(const SpectralScalar &f);

/// Lambda^s, multiplier |k|^s, s in [0, 1].
SpectralScalar fractional_laplacian(const SpectralScalar &f, double s);

/// Smoothing by the even mass-one multiplier exp(-(eps k)^4).
SpectralScalar mollify(const SpectralScalar &f, double eps);

/// Periodic antiderivative of the mean-free part, itself mean-free.
SpectralScalar periodic_antiderivative(const SpectralScalar &f);

/// (sum_j (1 + j^2)^k |fhat(j)|^2 2 pi)^(1/2) over the full discrete spectrum.
double sobolev_norm(const SpectralScalar &f, int k);

/// Trapezoidal quadrature of a*b over one period.
double inner_product(const SpectralScalar &a, const SpectralScalar &b);

double l2_norm(const SpectralScalar &f);
double max_abs(const SpectralScalar &f);

}  // namespace muskat
