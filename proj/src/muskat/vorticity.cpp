// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/vorticity.hpp"

#include <cmath>
#include <string>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

using Vec = std::vector<double>;

Vec to_vec(const AmplitudeField &f)
{
  const auto s = f.values().samples();
  return Vec(s.begin(), s.end());
}

// Mollifier applied twice; identity when eps == 0.
Vec smooth(const Vec &f, double eps)
{
  if (eps == 0.0)
  {
    return f;
  }
  const SpectralScalar twice = mollify(mollify(SpectralScalar(f), eps), eps);
  return Vec(twice.samples().begin(), twice.samples().end());
}

double sum_sq(const Vec &a)
{
  double acc = 0.0;
  for (double v : a)
  {
    acc += v * v;
  }
  return acc;
}

double diff_sq(const Vec &a, const Vec &b)
{
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    acc += (a[i] - b[i]) * (a[i] - b[i]);
  }
  return acc;
}

struct Iterate
{
  Vec w1;
  Vec w2;
};

// S (f - M T w)
Iterate fixed_point_map(const InteractionOperator &op, const Iterate &w, const Vec &f1,
                        double g1, double g2, double eps)
{
  auto [t1, t2] = op.apply(w.w1, w.w2);
  Vec r1(f1.size()), r2(f1.size());
  for (std::size_t i = 0; i < f1.size(); ++i)
  {
    r1[i] = f1[i] - g1 * t1[i];
    r2[i] = -g2 * t2[i];
  }
  return {smooth(r1, eps), smooth(r2, eps)};
}

void check_options(const SolveOptions &options)
{
  if (!(options.tol > 0.0))
  {
    fail(ErrorCode::InvalidArgument, "solver tolerance must be positive");
  }
  if (options.max_iter < 1)
  {
    fail(ErrorCode::InvalidArgument, "solver needs at least one iteration");
  }
  if (!(options.eps >= 0.0))
  {
    fail(ErrorCode::InvalidArgument, "mollifier width must be nonnegative");
  }
}

}  // namespace

AmplitudePair forcing(const PeriodicCurve &z, const FluidParams &params)
{
  const SpectralScalar f1 = -params.big_n() * derivative(z.p2(), 1);
  return {AmplitudeField(f1), AmplitudeField::zeros(z.size())};
}

VorticityPair solve_vorticity(const PeriodicCurve &z, const PeriodicCurve &h,
                              const FluidParams &params, const SolveOptions &options)
{
  check_options(options);
  if (z.size() != h.size())
  {
    fail(ErrorCode::InvalidArgument, "curves must share the grid");
  }
  const auto f = forcing(z, params);
  if (l2_norm(f.first.values()) == 0.0)
  {
    return {AmplitudeField::zeros(z.size()), AmplitudeField::zeros(z.size()), 0, 0.0};
  }
  const InteractionOperator op(z, h);
  return solve_vorticity(op, z, params, options);
}

VorticityPair solve_vorticity(const InteractionOperator &op, const PeriodicCurve &z,
                              const FluidParams &params, const SolveOptions &options)
{
  check_options(options);
  params.validate();
  const double g1 = params.gamma1();
  const double g2 = params.gamma2();
  const Vec f1 = to_vec(forcing(z, params).first);

  const Vec start = smooth(f1, options.eps);
  Iterate w{start, Vec(f1.size(), 0.0)};
  if (sum_sq(start) == 0.0)
  {
    return {AmplitudeField::zeros(z.size()), AmplitudeField::zeros(z.size()), 0, 0.0};
  }

  int iterations = 0;
  bool converged = false;
  Iterate next;
  while (iterations < options.max_iter)
  {
    next = fixed_point_map(op, w, f1, g1, g2, options.eps);
    ++iterations;
    const double update = std::sqrt(diff_sq(next.w1, w.w1) + diff_sq(next.w2, w.w2));
    const double size = std::sqrt(sum_sq(next.w1) + sum_sq(next.w2));
    w = std::move(next);
    if (!std::isfinite(update))
    {
      break;
    }
    if (update <= options.tol * size)
    {
      converged = true;
      break;
    }
  }
  if (!converged)
  {
    fail(ErrorCode::NoConvergence, "vorticity iteration did not converge in " +
                                       std::to_string(options.max_iter) + " sweeps");
  }

  const Iterate image = fixed_point_map(op, w, f1, g1, g2, options.eps);
  const double dx = kTwoPi / static_cast<double>(f1.size());
  const double residual = std::sqrt(dx * (diff_sq(w.w1, image.w1) + diff_sq(w.w2, image.w2)));
  return {AmplitudeField(w.w1), AmplitudeField(w.w2), iterations, residual};
}

VorticityPair solve_vorticity_dense(const PeriodicCurve &z, const PeriodicCurve &h,
                                    const FluidParams &params, double eps)
{
  params.validate();
  const std::size_t n = z.size();
  if (n > 256)
  {
    fail(ErrorCode::InvalidArgument, "dense vorticity solve is limited to n <= 256");
  }
  const InteractionOperator op(z, h);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd scaled = op.dense();
  scaled.topRows(m) *= params.gamma1();
  scaled.bottomRows(m) *= params.gamma2();

  const Vec f1 = to_vec(forcing(z, params).first);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * m);
  const Vec sf1 = smooth(f1, eps);
  for (Eigen::Index i = 0; i < m; ++i)
  {
    rhs(i) = sf1[static_cast<std::size_t>(i)];
  }

  if (eps > 0.0)
  {
    // Left-multiply each component block by the smoothing matrix, one column
    // at a time.
    for (Eigen::Index c = 0; c < 2 * m; ++c)
    {
      for (Eigen::Index half = 0; half < 2; ++half)
      {
        Vec col(n);
        for (Eigen::Index i = 0; i < m; ++i)
        {
          col[static_cast<std::size_t>(i)] = scaled(half * m + i, c);
        }
        const Vec sm = smooth(col, eps);
        for (Eigen::Index i = 0; i < m; ++i)
        {
          scaled(half * m + i, c) = sm[static_cast<std::size_t>(i)];
        }
      }
    }
  }

  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(2 * m, 2 * m) + scaled;
  const Eigen::VectorXd sol = system.partialPivLu().solve(rhs);
  Vec w1(n), w2(n);
  for (Eigen::Index i = 0; i < m; ++i)
  {
    w1[static_cast<std::size_t>(i)] = sol(i);
    w2[static_cast<std::size_t>(i)] = sol(m + i);
  }
  const Eigen::VectorXd res = system * sol - rhs;
  const double dx = kTwoPi / static_cast<double>(n);
  return {AmplitudeField(std::move(w1)), AmplitudeField(std::move(w2)), 1,
          std::sqrt(dx) * res.norm()};
}

}  // namespace muskat
