// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

// One r2c/c2r plan pair per grid size and thread. Only the planner needs the
// lock; execution on thread-owned buffers is reentrant.
class FftPlans
{
public:
  explicit FftPlans(std::size_t n) : n_(n)
  {
    real_ = fftw_alloc_real(n);
    spec_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_, spec_, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec_, real_, FFTW_ESTIMATE);
  }

  ~FftPlans()
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
    fftw_free(real_);
    fftw_free(spec_);
  }

  FftPlans(const FftPlans &) = delete;
  FftPlans &operator=(const FftPlans &) = delete;

  std::vector<cplx> forward(std::span<const double> samples)
  {
    std::copy(samples.begin(), samples.end(), real_);
    fftw_execute(forward_);
    std::vector<cplx> modes(n_ / 2 + 1);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t k = 0; k < modes.size(); ++k)
    {
      // Grid starts at -pi: shift the phase by (-1)^k.
      const double sign = (k % 2 == 0) ? scale : -scale;
      modes[k] = cplx(spec_[k][0], spec_[k][1]) * sign;
    }
    return modes;
  }

  std::vector<double> backward(std::span<const cplx> modes)
  {
    for (std::size_t k = 0; k < modes.size(); ++k)
    {
      const cplx m = (k % 2 == 0) ? modes[k] : -modes[k];
      spec_[k][0] = m.real();
      spec_[k][1] = m.imag();
    }
    fftw_execute(backward_);
    return std::vector<double>(real_, real_ + n_);
  }

private:
  static std::mutex &planner_mutex()
  {
    static std::mutex m;
    return m;
  }

  std::size_t n_;
  double *real_ = nullptr;
  fftw_complex *spec_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

FftPlans &plans_for(std::size_t n)
{
  thread_local std::map<std::size_t, std::unique_ptr<FftPlans>> cache;
  auto &slot = cache[n];
  if (!slot)
  {
    slot = std::make_unique<FftPlans>(n);
  }
  return *slot;
}

void check_grid_size(std::size_t n)
{
  if (n < 8 || n % 2 != 0)
  {
    fail(ErrorCode::InvalidArgument,
         "grid size must be even and >= 8, got " + std::to_string(n));
  }
}

void check_same_grid(const SpectralScalar &a, const SpectralScalar &b)
{
  if (a.size() != b.size())
  {
    fail(ErrorCode::InvalidArgument, "fields live on different grids");
  }
}

}  // namespace

SpectralScalar::SpectralScalar(std::vector<double> samples) : samples_(std::move(samples))
{
  check_grid_size(samples_.size());
  modes_ = plans_for(samples_.size()).forward(samples_);
}

SpectralScalar SpectralScalar::from_modes(std::size_t n, std::vector<cplx> modes)
{
  check_grid_size(n);
  if (modes.size() != n / 2 + 1)
  {
    fail(ErrorCode::InvalidArgument, "expected n/2+1 Fourier coefficients");
  }
  modes.front().imag(0.0);
  modes.back().imag(0.0);
  SpectralScalar f;
  f.samples_ = plans_for(n).backward(modes);
  f.modes_ = std::move(modes);
  return f;
}

SpectralScalar SpectralScalar::zeros(std::size_t n)
{
  return SpectralScalar(std::vector<double>(n, 0.0));
}

SpectralScalar SpectralScalar::constant(std::size_t n, double value)
{
  return SpectralScalar(std::vector<double>(n, value));
}

SpectralScalar SpectralScalar::from_function(std::size_t n,
                                             const std::function<double(double)> &f)
{
  check_grid_size(n);
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j)
  {
    s[j] = f(grid_node(n, j));
  }
  return SpectralScalar(std::move(s));
}

double SpectralScalar::evaluate(double alpha) const
{
  const std::size_t n = size();
  const std::size_t half = n / 2;
  double acc = modes_[0].real();
  for (std::size_t k = 1; k < half; ++k)
  {
    const double phase = static_cast<double>(k) * alpha;
    acc += 2.0 * (modes_[k].real() * std::cos(phase) - modes_[k].imag() * std::sin(phase));
  }
  acc += modes_[half].real() * std::cos(static_cast<double>(half) * alpha);
  return acc;
}

SpectralScalar SpectralScalar::resampled(std::size_t m) const
{
  check_grid_size(m);
  const std::size_t n = size();
  if (m == n)
  {
    return *this;
  }
  std::vector<cplx> out(m / 2 + 1, cplx(0.0, 0.0));
  if (m > n)
  {
    std::copy(modes_.begin(), modes_.end() - 1, out.begin());
    // cos(n alpha / 2) splits evenly between +n/2 and -n/2.
    out[n / 2] = 0.5 * modes_[n / 2];
  }
  else
  {
    std::copy(modes_.begin(), modes_.begin() + static_cast<std::ptrdiff_t>(m / 2), out.begin());
    out[m / 2] = cplx(2.0 * modes_[m / 2].real(), 0.0);
  }
  return from_modes(m, std::move(out));
}

SpectralScalar SpectralScalar::with_multiplier(const std::function<cplx(double)> &symbol,
                                               bool odd) const
{
  const std::size_t half = size() / 2;
  std::vector<cplx> out(modes_.size());
  for (std::size_t k = 0; k < half; ++k)
  {
    out[k] = modes_[k] * symbol(static_cast<double>(k));
  }
  out[half] = odd ? cplx(0.0, 0.0) : modes_[half] * symbol(static_cast<double>(half)).real();
  return from_modes(size(), std::move(out));
}

SpectralScalar SpectralScalar::without_mean() const
{
  std::vector<cplx> out(modes_.begin(), modes_.end());
  out[0] = 0.0;
  return from_modes(size(), std::move(out));
}

SpectralScalar operator+(const SpectralScalar &a, const SpectralScalar &b)
{
  check_same_grid(a, b);
  std::vector<double> s(a.size());
  for (std::size_t j = 0; j < s.size(); ++j)
  {
    s[j] = a.samples_[j] + b.samples_[j];
  }
  return SpectralScalar(std::move(s));
}

SpectralScalar operator-(const SpectralScalar &a, const SpectralScalar &b)
{
  check_same_grid(a, b);
  std::vector<double> s(a.size());
  for (std::size_t j = 0; j < s.size(); ++j)
  {
    s[j] = a.samples_[j] - b.samples_[j];
  }
  return SpectralScalar(std::move(s));
}

SpectralScalar operator*(double c, const SpectralScalar &a)
{
  SpectralScalar out;
  out.samples_.resize(a.size());
  out.modes_.resize(a.modes_.size());
  for (std::size_t j = 0; j < a.size(); ++j)
  {
    out.samples_[j] = c * a.samples_[j];
  }
  for (std::size_t k = 0; k < a.modes_.size(); ++k)
  {
    out.modes_[k] = c * a.modes_[k];
  }
  return out;
}

SpectralScalar operator-(const SpectralScalar &a)
{
  return -1.0 * a;
}

SpectralScalar operator*(const SpectralScalar &a, const SpectralScalar &b)
{
  check_same_grid(a, b);
  std::vector<double> s(a.size());
  for (std::size_t j = 0; j < s.size(); ++j)
  {
    s[j] = a.samples_[j] * b.samples_[j];
  }
  return SpectralScalar(std::move(s));
}

SpectralScalar derivative(const SpectralScalar &f, int order)
{
  if (order < 1 || order > 6)
  {
    fail(ErrorCode::InvalidArgument, "derivative order must be in [1, 6]");
  }
  return f.with_multiplier(
      [order](double k) {
        cplx m(1.0, 0.0);
        for (int i = 0; i < order; ++i)
        {
          m *= cplx(0.0, k);
        }
        return m;
      },
      order % 2 == 1);
}

SpectralScalar hilbert(const SpectralScalar &f)
{
  return f.with_multiplier(
      [](double k) { return k > 0.0 ? cplx(0.0, -1.0) : cplx(0.0, 0.0); }, true);
}

SpectralScalar fractional_laplacian(const SpectralScalar &f, double s)
{
  if (!(s >= 0.0 && s <= 1.0))
  {
    fail(ErrorCode::InvalidArgument, "fractional order must lie in [0, 1]");
  }
  if (s == 0.0)
  {
    return f;
  }
  return f.with_multiplier([s](double k) { return cplx(std::pow(k, s), 0.0); }, false);
}

SpectralScalar mollify(const SpectralScalar &f, double eps)
{
  if (!(eps > 0.0))
  {
    fail(ErrorCode::InvalidArgument, "mollifier width must be positive");
  }
  return f.with_multiplier(
      [eps](double k) {
        const double x = eps * k;
        return cplx(std::exp(-(x * x) * (x * x)), 0.0);
      },
      false);
}

SpectralScalar periodic_antiderivative(const SpectralScalar &f)
{
  return f.with_multiplier(
      [](double k) { return k > 0.0 ? cplx(0.0, -1.0 / k) : cplx(0.0, 0.0); }, true);
}

double sobolev_norm(const SpectralScalar &f, int k)
{
  if (k < 0)
  {
    fail(ErrorCode::InvalidArgument, "Sobolev order must be nonnegative");
  }
  const auto modes = f.modes();
  const std::size_t half = f.size() / 2;
  auto weight = [k](double j) { return std::pow(1.0 + j * j, k); };
  double acc = std::norm(modes[0]);
  for (std::size_t j = 1; j < half; ++j)
  {
    acc += 2.0 * weight(static_cast<double>(j)) * std::norm(modes[j]);
  }
  acc += weight(static_cast<double>(half)) * std::norm(modes[half]);
  return std::sqrt(acc * kTwoPi);
}

double inner_product(const SpectralScalar &a, const SpectralScalar &b)
{
  check_same_grid(a, b);
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
  {
    acc += a[j] * b[j];
  }
  return acc * kTwoPi / static_cast<double>(a.size());
}

double l2_norm(const SpectralScalar &f)
{
  return std::sqrt(inner_product(f, f));
}

double max_abs(const SpectralScalar &f)
{
  double m = 0.0;
  for (double v : f.samples())
  {
    m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace muskat
