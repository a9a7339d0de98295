// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/brkernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

constexpr double kChordFloor = 1e-14;
constexpr double kContactFloor = 1e-12;

// cot(w / 2). Far from the real axis the exponential form avoids overflow.
cplx half_cot(cplx w)
{
  const cplx zeta = 0.5 * w;
  if (std::abs(zeta.imag()) < 20.0)
  {
    return 1.0 / std::tan(zeta);
  }
  const bool upper = zeta.imag() > 0.0;
  const cplx q = std::exp(cplx(0.0, 2.0) * (upper ? zeta : std::conj(zeta)));
  const cplx c = cplx(0.0, 1.0) * (q + 1.0) / (q - 1.0);
  return upper ? c : std::conj(c);
}

cplx kernel_entry(cplx target, cplx source, double weight)
{
  const cplx w = periodic_difference(target, source);
  return weight * cplx(0.0, 1.0) * std::conj(half_cot(w)) / (4.0 * kPi);
}

void project_mean(std::vector<double> &f)
{
  double mean = 0.0;
  for (double v : f)
  {
    mean += v;
  }
  mean /= static_cast<double>(f.size());
  for (double &v : f)
  {
    v -= mean;
  }
}

std::vector<double> add(std::vector<double> a, const std::vector<double> &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    a[i] += b[i];
  }
  return a;
}

void check_sizes(std::size_t expected, std::size_t got)
{
  if (expected != got)
  {
    fail(ErrorCode::InvalidArgument, "amplitude and curve live on different grids");
  }
}

}  // namespace

KernelBlock KernelBlock::self(const PeriodicCurve &sheet)
{
  KernelBlock b;
  b.n_ = sheet.size();
  b.g_.assign(b.n_ * b.n_, cplx(0.0, 0.0));
  const auto pts = sheet.points();
  const double weight = 2.0 * kTwoPi / static_cast<double>(b.n_);
  for (std::size_t i = 0; i < b.n_; ++i)
  {
    for (std::size_t j = (i + 1) % 2; j < b.n_; j += 2)
    {
      if (std::abs(periodic_difference(pts[i], pts[j])) < kChordFloor)
      {
        fail(ErrorCode::SelfIntersection,
             "sheet nodes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
      b.g_[i * b.n_ + j] = kernel_entry(pts[i], pts[j], weight);
    }
  }
  return b;
}

KernelBlock KernelBlock::cross(const PeriodicCurve &source, const PeriodicCurve &target)
{
  if (source.size() != target.size())
  {
    fail(ErrorCode::InvalidArgument, "curves must share the grid");
  }
  KernelBlock b;
  b.n_ = source.size();
  b.g_.resize(b.n_ * b.n_);
  const auto src = source.points();
  const auto tgt = target.points();
  const double weight = kTwoPi / static_cast<double>(b.n_);
  for (std::size_t i = 0; i < b.n_; ++i)
  {
    for (std::size_t j = 0; j < b.n_; ++j)
    {
      if (std::abs(periodic_difference(tgt[i], src[j])) < kContactFloor)
      {
        fail(ErrorCode::CurveContact, "curves touch");
      }
      b.g_[i * b.n_ + j] = kernel_entry(tgt[i], src[j], weight);
    }
  }
  return b;
}

std::vector<cplx> KernelBlock::velocity(std::span<const double> omega) const
{
  check_sizes(n_, omega.size());
  std::vector<cplx> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
  {
    const cplx *row = g_.data() + i * n_;
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n_; ++j)
    {
      acc += row[j] * omega[j];
    }
    out[i] = acc;
  }
  return out;
}

std::vector<double> KernelBlock::tangential(std::span<const double> omega,
                                            std::span<const cplx> target_tangents) const
{
  const auto u = velocity(omega);
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
  {
    out[i] = 2.0 * (u[i] * std::conj(target_tangents[i])).real();
  }
  return out;
}

std::vector<double> KernelBlock::adjoint_tangential(std::span<const double> u,
                                                    std::span<const cplx> source_tangents) const
{
  check_sizes(n_, u.size());
  std::vector<cplx> weighted(n_);
  for (std::size_t j = 0; j < n_; ++j)
  {
    weighted[j] = std::conj(source_tangents[j]) * u[j];
  }
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
  {
    const cplx *row = g_.data() + i * n_;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j)
    {
      acc += (row[j] * weighted[j]).real();
    }
    out[i] = -2.0 * acc;
  }
  return out;
}

Eigen::MatrixXd KernelBlock::tangential_matrix(std::span<const cplx> target_tangents) const
{
  Eigen::MatrixXd m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
  {
    const cplx tc = std::conj(target_tangents[i]);
    for (std::size_t j = 0; j < n_; ++j)
    {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          2.0 * (g_[i * n_ + j] * tc).real();
    }
  }
  return m;
}

namespace
{

VectorField to_vector_field(const std::vector<cplx> &u)
{
  std::vector<double> x(u.size()), y(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
  {
    x[i] = u[i].real();
    y[i] = u[i].imag();
  }
  return {SpectralScalar(std::move(x)), SpectralScalar(std::move(y))};
}

bool all_zero(std::span<const double> f)
{
  return std::all_of(f.begin(), f.end(), [](double v) { return v == 0.0; });
}

}  // namespace

VectorField br_self(const PeriodicCurve &gamma, const AmplitudeField &omega)
{
  check_sizes(gamma.size(), omega.size());
  const auto w = omega.values().samples();
  if (all_zero(w))
  {
    arc_chord_norm(gamma);
    return {SpectralScalar::zeros(gamma.size()), SpectralScalar::zeros(gamma.size())};
  }
  return to_vector_field(KernelBlock::self(gamma).velocity(w));
}

VectorField br_cross(const PeriodicCurve &source, const AmplitudeField &omega,
                     const PeriodicCurve &target)
{
  check_sizes(source.size(), omega.size());
  return to_vector_field(KernelBlock::cross(source, target).velocity(omega.values().samples()));
}

InteractionOperator::InteractionOperator(const PeriodicCurve &z, const PeriodicCurve &h,
                                         std::shared_ptr<const KernelBlock> hh)
  : n_(z.size()),
    tz_(z.tangents()),
    th_(h.tangents()),
    zz_(KernelBlock::self(z)),
    zh_(KernelBlock::cross(h, z)),
    hz_(KernelBlock::cross(z, h)),
    hh_(hh ? std::move(hh) : make_h_block(h))
{
  if (hh_->size() != n_)
  {
    fail(ErrorCode::InvalidArgument, "precomputed h block has the wrong size");
  }
}

std::shared_ptr<const KernelBlock> InteractionOperator::make_h_block(const PeriodicCurve &h)
{
  return std::make_shared<const KernelBlock>(KernelBlock::self(h));
}

std::pair<std::vector<double>, std::vector<double>> InteractionOperator::apply(
    std::span<const double> u, std::span<const double> v) const
{
  auto first = add(zz_.tangential(u, tz_), zh_.tangential(v, tz_));
  auto second = add(hz_.tangential(u, th_), hh_->tangential(v, th_));
  project_mean(first);
  project_mean(second);
  return {std::move(first), std::move(second)};
}

std::pair<std::vector<double>, std::vector<double>> InteractionOperator::apply_adjoint(
    std::span<const double> u, std::span<const double> v) const
{
  auto first = add(zz_.adjoint_tangential(u, tz_), zh_.adjoint_tangential(v, th_));
  auto second = add(hz_.adjoint_tangential(u, tz_), hh_->adjoint_tangential(v, th_));
  project_mean(first);
  project_mean(second);
  return {std::move(first), std::move(second)};
}

VectorField InteractionOperator::velocity_on_z(std::span<const double> omega1,
                                               std::span<const double> omega2) const
{
  auto u = zz_.velocity(omega1);
  const auto w = zh_.velocity(omega2);
  for (std::size_t i = 0; i < u.size(); ++i)
  {
    u[i] += w[i];
  }
  return to_vector_field(u);
}

Eigen::MatrixXd InteractionOperator::dense() const
{
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd m(2 * n, 2 * n);
  m.block(0, 0, n, n) = zz_.tangential_matrix(tz_);
  m.block(0, n, n, n) = zh_.tangential_matrix(tz_);
  m.block(n, 0, n, n) = hz_.tangential_matrix(th_);
  m.block(n, n, n, n) = hh_->tangential_matrix(th_);
  // Output projection onto mean-zero fields, per component.
  for (Eigen::Index half = 0; half < 2; ++half)
  {
    auto rows = m.middleRows(half * n, n);
    const Eigen::RowVectorXd col_mean = rows.colwise().mean();
    rows.rowwise() -= col_mean;
  }
  return m;
}

AmplitudePair apply_T(const PeriodicCurve &z, const PeriodicCurve &h, const AmplitudeField &u,
                      const AmplitudeField &v)
{
  check_sizes(z.size(), u.size());
  check_sizes(h.size(), v.size());
  const InteractionOperator op(z, h);
  auto [a, b] = op.apply(u.values().samples(), v.values().samples());
  return {AmplitudeField(std::move(a)), AmplitudeField(std::move(b))};
}

AmplitudePair apply_T_adjoint(const PeriodicCurve &z, const PeriodicCurve &h,
                              const AmplitudeField &u, const AmplitudeField &v)
{
  check_sizes(z.size(), u.size());
  check_sizes(h.size(), v.size());
  const InteractionOperator op(z, h);
  auto [a, b] = op.apply_adjoint(u.values().samples(), v.values().samples());
  return {AmplitudeField(std::move(a)), AmplitudeField(std::move(b))};
}

SpectralRadiusEstimate spectral_radius(const PeriodicCurve &z, const PeriodicCurve &h,
                                       const FluidParams &params, int n_probe)
{
  if (n_probe < 20)
  {
    fail(ErrorCode::InvalidArgument, "spectral radius probe needs at least 20 iterations");
  }
  const InteractionOperator op(z, h);
  const auto n = static_cast<Eigen::Index>(op.size());
  const double g1 = params.gamma1();
  const double g2 = params.gamma2();

  auto apply_scaled = [&](const Eigen::VectorXd &x) {
    const std::span<const double> u(x.data(), static_cast<std::size_t>(n));
    const std::span<const double> v(x.data() + n, static_cast<std::size_t>(n));
    auto [a, b] = op.apply_adjoint(u, v);
    Eigen::VectorXd y(2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
      y(i) = g1 * a[static_cast<std::size_t>(i)];
      y(n + i) = g2 * b[static_cast<std::size_t>(i)];
    }
    return y;
  };

  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  auto random_mean_free = [&]() {
    Eigen::VectorXd x(2 * n);
    for (Eigen::Index i = 0; i < 2 * n; ++i)
    {
      x(i) = normal(rng);
    }
    x.head(n).array() -= x.head(n).mean();
    x.tail(n).array() -= x.tail(n).mean();
    return x;
  };

  const Eigen::Index block = std::min<Eigen::Index>(8, 2 * n - 2);
  // Orthonormalize in place; rank-deficient columns are refilled at random so
  // that the block keeps full dimension (e.g. a vanishing operator).
  auto orthonormalize = [&](Eigen::MatrixXd &q) {
    for (Eigen::Index c = 0; c < q.cols(); ++c)
    {
      for (int attempt = 0; attempt < 3; ++attempt)
      {
        const double before = q.col(c).norm();
        for (int pass = 0; pass < 2; ++pass)
        {
          for (Eigen::Index p = 0; p < c; ++p)
          {
            q.col(c) -= q.col(p).dot(q.col(c)) * q.col(p);
          }
        }
        const double after = q.col(c).norm();
        if (after > 1e-10 * std::max(before, 1e-300))
        {
          q.col(c) /= after;
          break;
        }
        q.col(c) = random_mean_free();
      }
    }
  };

  Eigen::MatrixXd q(2 * n, block);
  for (Eigen::Index c = 0; c < block; ++c)
  {
    q.col(c) = random_mean_free();
  }
  orthonormalize(q);

  SpectralRadiusEstimate result;
  Eigen::MatrixXd y(2 * n, block);
  for (int it = 0; it < n_probe; ++it)
  {
    for (Eigen::Index c = 0; c < block; ++c)
    {
      y.col(c) = apply_scaled(q.col(c));
    }
    const Eigen::MatrixXd ritz = q.transpose() * y;
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(ritz, false);
    double dominant = 0.0;
    for (Eigen::Index k = 0; k < block; ++k)
    {
      dominant = std::max(dominant, std::abs(solver.eigenvalues()(k)));
    }
    result.trace.push_back(dominant);
    q = y;
    orthonormalize(q);
  }
  result.value = result.trace.back();
  const double last_change = std::abs(result.trace[result.trace.size() - 1] -
                                      result.trace[result.trace.size() - 2]);
  result.converged = last_change <= 1e-6;
  return result;
}

}  // namespace muskat
