// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "muskat/curves.hpp"

namespace muskat
{

struct VectorField
{
  SpectralScalar x;
  SpectralScalar y;
};

/// Vorticity amplitude on a curve. The mean is projected out on construction.
class AmplitudeField
{
public:
  AmplitudeField() = default;
  explicit AmplitudeField(const SpectralScalar &values) : values_(values.without_mean()) {}
  explicit AmplitudeField(std::vector<double> samples)
    : AmplitudeField(SpectralScalar(std::move(samples)))
  {
  }

  static AmplitudeField zeros(std::size_t n) { return AmplitudeField(SpectralScalar::zeros(n)); }

  const SpectralScalar &values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

private:
  SpectralScalar values_;
};

using AmplitudePair = std::pair<AmplitudeField, AmplitudeField>;

/// Periodized Birkhoff-Rott interaction between a source sheet and a set of
/// target nodes, stored as the complex matrix G with
///   (u1 + i u2)(target_i) = sum_j G_ij omega(source_j).
/// The image sum over horizontal translates is done in closed form,
///   sum_n 1 / (conj(w) + 2 pi n) = cot(conj(w) / 2) / 2,
/// so G_ij = weight_ij * i * conj(cot(w_ij / 2)) / (4 pi), w_ij = x_i - y_j.
class KernelBlock
{
public:
  /// Sheet acting on its own nodes. The principal value is taken with the
  /// alternating-point rule: only nodes of opposite parity, weight 4 pi / n.
  static KernelBlock self(const PeriodicCurve &sheet);

  /// Sheet acting on the nodes of another curve (trapezoidal rule).
  static KernelBlock cross(const PeriodicCurve &source, const PeriodicCurve &target);

  std::size_t size() const noexcept { return n_; }

  std::vector<cplx> velocity(std::span<const double> omega) const;

  /// 2 u(target_i) . t_i for the target tangents t.
  std::vector<double> tangential(std::span<const double> omega,
                                 std::span<const cplx> target_tangents) const;

  /// Adjoint of tangential() with respect to grid quadrature on both curves:
  ///   out_i = -2 sum_j Re(G_ij conj(s_j)) u_j, s the source tangents.
  std::vector<double> adjoint_tangential(std::span<const double> u,
                                         std::span<const cplx> source_tangents) const;

  /// Dense real matrix of tangential().
  Eigen::MatrixXd tangential_matrix(std::span<const cplx> target_tangents) const;

private:
  std::size_t n_ = 0;
  std::vector<cplx> g_;  // row-major, n_ x n_
};

/// Birkhoff-Rott velocity of the sheet omega on gamma, evaluated on gamma.
VectorField br_self(const PeriodicCurve &gamma, const AmplitudeField &omega);

/// Velocity induced by the sheet on source at the nodes of target.
VectorField br_cross(const PeriodicCurve &source, const AmplitudeField &omega,
                     const PeriodicCurve &target);

/// The coupled operator (T1 T2; T3 T4) for the pair (z, h), with all four
/// kernel blocks precomputed. Outputs are projected onto mean-zero fields.
class InteractionOperator
{
public:
  /// A precomputed h-on-h block may be passed in since h never moves.
  InteractionOperator(const PeriodicCurve &z, const PeriodicCurve &h,
                      std::shared_ptr<const KernelBlock> hh = nullptr);

  std::size_t size() const noexcept { return n_; }
  const std::vector<cplx> &z_tangents() const noexcept { return tz_; }
  const std::vector<cplx> &h_tangents() const noexcept { return th_; }

  /// (T1 u + T2 v, T3 u + T4 v)
  std::pair<std::vector<double>, std::vector<double>> apply(std::span<const double> u,
                                                            std::span<const double> v) const;
  /// (T1* u + T3* v, T2* u + T4* v)
  std::pair<std::vector<double>, std::vector<double>> apply_adjoint(
      std::span<const double> u, std::span<const double> v) const;

  /// BR(omega1, z)_z + BR(omega2, h)_z
  VectorField velocity_on_z(std::span<const double> omega1, std::span<const double> omega2) const;

  /// Dense 2n x 2n matrix of the projected operator, unknowns ordered (u, v).
  Eigen::MatrixXd dense() const;

  static std::shared_ptr<const KernelBlock> make_h_block(const PeriodicCurve &h);

private:
  std::size_t n_;
  std::vector<cplx> tz_;
  std::vector<cplx> th_;
  KernelBlock zz_;
  KernelBlock zh_;  // sources on h, targets on z
  KernelBlock hz_;  // sources on z, targets on h
  std::shared_ptr<const KernelBlock> hh_;
};

AmplitudePair apply_T(const PeriodicCurve &z, const PeriodicCurve &h, const AmplitudeField &u,
                      const AmplitudeField &v);

AmplitudePair apply_T_adjoint(const PeriodicCurve &z, const PeriodicCurve &h,
                              const AmplitudeField &u, const AmplitudeField &v);

struct SpectralRadiusEstimate
{
  double value = 0.0;
  bool converged = false;
  /// Estimate after each iteration.
  std::vector<double> trace;
};

/// Dominant |lambda| of diag(gamma1, gamma2) T* by block power (subspace)
/// iteration with Rayleigh-Ritz extraction. converged is false when the last
/// two estimates differ by more than 1e-6; the estimate is still returned.
SpectralRadiusEstimate spectral_radius(const PeriodicCurve &z, const PeriodicCurve &h,
                                       const FluidParams &params, int n_probe);

}  // namespace muskat
