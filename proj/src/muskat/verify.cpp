// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "muskat/diagnostics.hpp"
#include "muskat/flat_strip.hpp"
#include "muskat/vorticity.hpp"

namespace muskat
{

namespace
{

std::string sci(const char *label, double value, double bound)
{
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.3e (bound %.1e)", label, value, bound);
  return buf;
}

CheckResult bounded(std::string name, const char *label, double value, double bound)
{
  return {std::move(name), std::isfinite(value) && value <= bound, sci(label, value, bound)};
}

double dot(std::span<const double> a, std::span<const double> b)
{
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    s += a[i] * b[i];
  }
  return s;
}

std::vector<double> to_vector(const SpectralScalar &f)
{
  return {f.samples().begin(), f.samples().end()};
}

void calculus_checks(std::size_t n, std::mt19937_64 &rng, std::vector<CheckResult> &out)
{
  const int kmax = static_cast<int>(n / 4);
  double hh = 0.0;
  double dh = 0.0;
  double lh = 0.0;
  for (int trial = 0; trial < 20; ++trial)
  {
    const SpectralScalar f = random_trig_polynomial(n, kmax, rng);
    const double scale = std::max(1.0, max_abs(derivative(f, 1)));
    hh = std::max(hh, max_abs(hilbert(hilbert(f)) + f.without_mean()) / scale);
    dh = std::max(dh, max_abs(derivative(hilbert(f), 1) - fractional_laplacian(f, 1.0)) / scale);
    lh = std::max(lh, max_abs(fractional_laplacian(hilbert(f), 1.0) + derivative(f, 1)) / scale);
  }
  out.push_back(bounded("hilbert_involution", "max |HHf + (f - mean)|", hh, 1e-12));
  out.push_back(bounded("derivative_of_hilbert", "max |dHf - Lambda f|", dh, 1e-12));
  out.push_back(bounded("lambda_of_hilbert", "max |Lambda Hf + df|", lh, 1e-12));
}

void pointwise_inequality_check(std::size_t n, std::mt19937_64 &rng, std::vector<CheckResult> &out)
{
  // Band limit n/4 keeps f^2 free of aliasing.
  const int kmax = std::max(1, static_cast<int>(n / 4) - 1);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial)
  {
    const SpectralScalar f = random_trig_polynomial(n, kmax, rng);
    const SpectralScalar g = f * fractional_laplacian(f, 1.0) - 0.5 * fractional_laplacian(f * f, 1.0);
    const double h1 = sobolev_norm(f, 1);
    double m = 0.0;
    for (double v : g.samples())
    {
      m = std::min(m, v);
    }
    worst = std::max(worst, -m / (h1 * h1));
  }
  out.push_back(bounded("pointwise_lambda_inequality", "max -(f Lf - L(f^2)/2) / |f|_H1^2", worst, 1e-10));
}

void strip_checks(std::size_t n, std::mt19937_64 &rng, std::vector<CheckResult> &out)
{
  const int kmax = static_cast<int>(n / 4);
  double defect = 0.0;
  double excess = -1.0;
  for (int trial = 0; trial < 20; ++trial)
  {
    const SpectralScalar a = random_trig_polynomial(n, kmax, rng);
    const SpectralScalar b = random_trig_polynomial(n, kmax, rng);
    const auto [df, dm] = round_trip_defect(a, b, -1.0);
    defect = std::max({defect, df, dm});
    for (auto op : {StripOperator::H1, StripOperator::H2z, StripOperator::H2h, StripOperator::H3})
    {
      const double lhs = l2_norm(apply_strip_operator(op, a, b));
      excess = std::max(excess, lhs - (l2_norm(a) + l2_norm(b)));
    }
  }
  out.push_back(bounded("strip_round_trip", "max round-trip defect", defect, 1e-12));
  out.push_back({"strip_boundedness", excess <= 1e-12,
                 sci("max |H(a,b)| - |a| - |b|", excess, 1e-12)});
}

void adjointness_check(const PeriodicCurve &z, const PeriodicCurve &h, std::mt19937_64 &rng,
                       std::vector<CheckResult> &out)
{
  const std::size_t n = z.size();
  const int kmax = static_cast<int>(n / 4);
  const InteractionOperator op(z, h);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial)
  {
    const auto u = to_vector(random_trig_polynomial(n, kmax, rng).without_mean());
    const auto v = to_vector(random_trig_polynomial(n, kmax, rng).without_mean());
    const auto a = to_vector(random_trig_polynomial(n, kmax, rng).without_mean());
    const auto b = to_vector(random_trig_polynomial(n, kmax, rng).without_mean());
    const auto [tu, tv] = op.apply(u, v);
    const auto [sa, sb] = op.apply_adjoint(a, b);
    const double lhs = dot(tu, a) + dot(tv, b);
    const double rhs = dot(u, sa) + dot(v, sb);
    const double scale = std::sqrt((dot(tu, tu) + dot(tv, tv)) * (dot(a, a) + dot(b, b))) + 1e-300;
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  out.push_back(bounded("adjointness", "max |<Tu,v> - <u,T*v>| / (|Tu||v|)", worst, 1e-8));
}

void poisson_check(std::size_t n, double d, std::vector<CheckResult> &out)
{
  const PeriodicCurve z = PeriodicCurve::flat(n, 0.0);
  const PeriodicCurve h = PeriodicCurve::flat(n, -d);
  const InteractionOperator op(z, h);
  const std::vector<double> zero(n, 0.0);
  double worst = 0.0;
  for (int k = 1; k <= static_cast<int>(n / 4); ++k)
  {
    for (int phase = 0; phase < 2; ++phase)
    {
      const SpectralScalar w = SpectralScalar::from_function(
          n, [=](double a) { return phase == 0 ? std::cos(k * a) : std::sin(k * a); });
      const auto wv = to_vector(w);
      const double m = std::exp(-k * d);
      const auto [t2, t4] = op.apply(zero, wv);
      const auto [t1, t3] = op.apply(wv, zero);
      for (std::size_t j = 0; j < n; ++j)
      {
        worst = std::max(worst, std::abs(t2[j] + m * wv[j]));
        worst = std::max(worst, std::abs(t3[j] - m * wv[j]));
      }
    }
  }
  out.push_back(bounded("poisson_multipliers", "max |T2 + e^-kd|, |T3 - e^-kd|", worst, 1e-9));
}

}  // namespace

SpectralScalar random_trig_polynomial(std::size_t n, int max_mode, std::mt19937_64 &rng)
{
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<cplx> modes(n / 2 + 1, cplx(0.0, 0.0));
  const int top = std::min<int>(max_mode, static_cast<int>(n / 2) - 1);
  for (int k = 0; k <= top; ++k)
  {
    const double re = coef(rng);
    const double im = coef(rng);
    modes[k] = k == 0 ? cplx(re, 0.0) : 0.5 * cplx(re, im);
  }
  return SpectralScalar::from_modes(n, std::move(modes));
}

double reference_depth(const RunConfig &config)
{
  const double d = build_curve(config.z, config.n).p2().mean() -
                   build_curve(config.h, config.n).p2().mean();
  return d > 0.0 ? d : 2.0;
}

std::vector<CheckResult> run_verification(const RunConfig &config, std::uint64_t seed)
{
  validate(config);
  std::mt19937_64 rng(seed);
  const std::size_t n = config.n;
  std::vector<CheckResult> out;

  calculus_checks(n, rng, out);
  pointwise_inequality_check(n, rng, out);
  strip_checks(n, rng, out);

  const PeriodicCurve z = build_curve(config.z, n);
  const PeriodicCurve h = build_curve(config.h, n);
  try
  {
    adjointness_check(z, h, rng, out);
  }
  catch (const Error &e)
  {
    out.push_back({"adjointness", false, e.what()});
  }

  const double d = reference_depth(config);
  poisson_check(n, d, out);

  const double g1 = config.params.gamma1();
  const double g2 = config.params.gamma2();
  const double flat_expected = std::sqrt(std::abs(g1 * g2)) * std::exp(-d);
  const auto flat =
      spectral_radius(PeriodicCurve::flat(n, 0.0), PeriodicCurve::flat(n, -d), config.params, 60);
  out.push_back({"spectral_radius_flat", std::abs(flat.value - flat_expected) <= 1e-3,
                 sci("|rho - sqrt(g1 g2) e^-d|", std::abs(flat.value - flat_expected), 1e-3)});

  try
  {
    const auto rho = spectral_radius(z, h, config.params, 60);
    out.push_back({"spectral_radius_below_one", rho.value < 1.0,
                   sci("rho(M T*)", rho.value, 1.0)});
  }
  catch (const Error &e)
  {
    out.push_back({"spectral_radius_below_one", false, e.what()});
  }

  if (n <= 256)
  {
    try
    {
      SolveOptions opts;
      opts.eps = config.eps;
      const VorticityPair fp = solve_vorticity(z, h, config.params, opts);
      const VorticityPair lu = solve_vorticity_dense(z, h, config.params, config.eps);
      const double diff = std::hypot(l2_norm(fp.omega1.values() - lu.omega1.values()),
                                     l2_norm(fp.omega2.values() - lu.omega2.values()));
      const double scale = std::max(
          1.0, std::hypot(l2_norm(lu.omega1.values()), l2_norm(lu.omega2.values())));
      out.push_back(bounded("solver_matches_dense", "relative L2 difference", diff / scale, 1e-10));
    }
    catch (const Error &e)
    {
      out.push_back({"solver_matches_dense", false, e.what()});
    }
  }

  const double form = dissipation_quadratic_form(z, config.k);
  const SpectralScalar d1 = derivative(z.p1(), config.k);
  const SpectralScalar d2 = derivative(z.p2(), config.k);
  const double dk = inner_product(d1, d1) + inner_product(d2, d2);
  out.push_back({"dissipation_positivity", form >= -1e-12 * dk,
                 sci("-form / |d^k z|^2", dk > 0.0 ? -form / dk : -form, 1e-12)});
  return out;
}

SpectralRadiusEstimate spectrum(const RunConfig &config, int n_probe)
{
  validate(config);
  return spectral_radius(build_curve(config.z, config.n), build_curve(config.h, config.n),
                         config.params, n_probe);
}

}  // namespace muskat
