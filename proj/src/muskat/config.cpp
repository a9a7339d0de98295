// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

using nlohmann::json;

void reject_unknown(const json &obj, const std::set<std::string> &known, const std::string &where)
{
  for (const auto &[key, value] : obj.items())
  {
    if (!known.count(key))
    {
      fail(ErrorCode::Validation, "unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read(const json &obj, const char *key, T &into)
{
  if (obj.contains(key))
  {
    try
    {
      into = obj.at(key).get<T>();
    }
    catch (const json::exception &e)
    {
      fail(ErrorCode::Validation, std::string("bad value for '") + key + "': " + e.what());
    }
  }
}

std::vector<ModeTerm> read_terms(const json &arr, const std::string &where)
{
  if (!arr.is_array())
  {
    fail(ErrorCode::Validation, where + " must be an array of [k, cos, sin] triples");
  }
  std::vector<ModeTerm> out;
  for (const auto &t : arr)
  {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number() ||
        !t[2].is_number())
    {
      fail(ErrorCode::Validation, where + " entries must be [k, cos, sin]");
    }
    out.push_back({t[0].get<int>(), t[1].get<double>(), t[2].get<double>()});
  }
  return out;
}

CurveSpec read_curve(const json &obj, CurveSpec spec, const std::string &where)
{
  if (!obj.is_object())
  {
    fail(ErrorCode::Validation, where + " must be an object");
  }
  reject_unknown(obj, {"preset", "offset", "amplitude", "mode", "p1", "p2"}, where);
  read(obj, "preset", spec.preset);
  read(obj, "offset", spec.offset);
  read(obj, "amplitude", spec.amplitude);
  read(obj, "mode", spec.mode);
  if (obj.contains("p1"))
  {
    spec.p1 = read_terms(obj["p1"], where + ".p1");
  }
  if (obj.contains("p2"))
  {
    spec.p2 = read_terms(obj["p2"], where + ".p2");
  }
  if (!obj.contains("preset") && (obj.contains("p1") || obj.contains("p2")))
  {
    spec.preset = "modes";
  }
  return spec;
}

void validate_curve(const CurveSpec &c, std::size_t n, const std::string &where)
{
  if (c.preset != "flat" && c.preset != "cosine" && c.preset != "modes")
  {
    fail(ErrorCode::Validation, where + ": unknown preset '" + c.preset + "'");
  }
  if (!std::isfinite(c.offset) || !std::isfinite(c.amplitude))
  {
    fail(ErrorCode::Validation, where + ": values must be finite");
  }
  const int max_k = static_cast<int>(n / 2) - 1;
  if (c.preset == "cosine" && (c.mode < 1 || c.mode > max_k))
  {
    fail(ErrorCode::Validation, where + ": mode must lie in [1, n/2 - 1]");
  }
  for (const auto *terms : {&c.p1, &c.p2})
  {
    for (const auto &t : *terms)
    {
      if (t.k < 1 || t.k > max_k || !std::isfinite(t.cos_coef) || !std::isfinite(t.sin_coef))
      {
        fail(ErrorCode::Validation, where + ": mode terms need 1 <= k <= n/2 - 1 and finite coefficients");
      }
    }
  }
}

}  // namespace

RunConfig parse_config_text(const std::string &text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    fail(ErrorCode::Parse, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
  {
    fail(ErrorCode::Validation, "config must be a JSON object");
  }
  reject_unknown(doc,
                 {"n", "t_end", "dt", "k", "eps", "mu1", "mu2", "kappa1", "kappa2", "rho1", "rho2",
                  "g", "z", "h", "output_dir", "snapshot_stride", "svg", "guards"},
                 "config");
  RunConfig c;
  read(doc, "n", c.n);
  read(doc, "t_end", c.t_end);
  if (doc.contains("dt") && !doc["dt"].is_null())
  {
    double dt = 0.0;
    read(doc, "dt", dt);
    c.dt = dt;
  }
  read(doc, "k", c.k);
  read(doc, "eps", c.eps);
  read(doc, "mu1", c.params.mu1);
  read(doc, "mu2", c.params.mu2);
  read(doc, "kappa1", c.params.kappa1);
  read(doc, "kappa2", c.params.kappa2);
  read(doc, "rho1", c.params.rho1);
  read(doc, "rho2", c.params.rho2);
  read(doc, "g", c.params.g);
  if (doc.contains("z"))
  {
    c.z = read_curve(doc["z"], c.z, "z");
  }
  if (doc.contains("h"))
  {
    c.h = read_curve(doc["h"], c.h, "h");
  }
  read(doc, "output_dir", c.output_dir);
  read(doc, "snapshot_stride", c.snapshot_stride);
  read(doc, "svg", c.svg);
  if (doc.contains("guards"))
  {
    const json &g = doc["guards"];
    if (!g.is_object())
    {
      fail(ErrorCode::Validation, "guards must be an object");
    }
    reject_unknown(g, {"min_sigma", "max_arc_chord", "min_separation"}, "guards");
    read(g, "min_sigma", c.guards.min_sigma);
    read(g, "max_arc_chord", c.guards.max_arc_chord);
    read(g, "min_separation", c.guards.min_separation);
  }
  validate(c);
  return c;
}

RunConfig parse_config(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    fail(ErrorCode::Io, "cannot read config file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void validate(const RunConfig &c)
{
  if (c.n < 8 || c.n % 2 != 0)
  {
    fail(ErrorCode::Validation, "n must be even and >= 8");
  }
  if (!(c.t_end > 0.0) || !std::isfinite(c.t_end))
  {
    fail(ErrorCode::Validation, "t_end must be positive");
  }
  if (c.dt && (!(*c.dt > 0.0) || !std::isfinite(*c.dt)))
  {
    fail(ErrorCode::Validation, "dt must be positive");
  }
  if (c.k < 1 || c.k > 6)
  {
    fail(ErrorCode::Validation, "Sobolev order k must lie in [1, 6]");
  }
  if (!(c.eps >= 0.0) || !std::isfinite(c.eps))
  {
    fail(ErrorCode::Validation, "eps must be nonnegative");
  }
  if (c.snapshot_stride < 0)
  {
    fail(ErrorCode::Validation, "snapshot_stride must be nonnegative (0 disables snapshots)");
  }
  if (!(c.guards.max_arc_chord > 0.0) || !(c.guards.min_separation >= 0.0) ||
      !std::isfinite(c.guards.min_sigma))
  {
    fail(ErrorCode::Validation, "guards must be finite with positive arc-chord bound");
  }
  c.params.validate();
  validate_curve(c.z, c.n, "z");
  validate_curve(c.h, c.n, "h");
}

PeriodicCurve build_curve(const CurveSpec &spec, std::size_t n)
{
  auto series = [](const std::vector<ModeTerm> &terms) {
    return [terms](double a) {
      double v = 0.0;
      for (const auto &t : terms)
      {
        v += t.cos_coef * std::cos(t.k * a) + t.sin_coef * std::sin(t.k * a);
      }
      return v;
    };
  };
  if (spec.preset == "flat")
  {
    return PeriodicCurve::flat(n, spec.offset);
  }
  if (spec.preset == "cosine")
  {
    const double amp = spec.amplitude;
    const int mode = spec.mode;
    const double off = spec.offset;
    return PeriodicCurve::from_functions(
        n, [](double) { return 0.0; }, [=](double a) { return off + amp * std::cos(mode * a); });
  }
  if (spec.preset == "modes")
  {
    const auto p2 = series(spec.p2);
    const double off = spec.offset;
    return PeriodicCurve::from_functions(n, series(spec.p1),
                                         [=](double a) { return off + p2(a); });
  }
  fail(ErrorCode::Validation, "unknown curve preset '" + spec.preset + "'");
}

std::string describe(const RunConfig &c)
{
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "n=%zu t_end=%g dt=%s k=%d eps=%g\n"
                "mu1=%g mu2=%g kappa1=%g kappa2=%g rho1=%g rho2=%g g=%g\n"
                "gamma1=%.17g gamma2=%.17g N=%.17g\n",
                c.n, c.t_end, c.dt ? std::to_string(*c.dt).c_str() : "auto", c.k, c.eps,
                c.params.mu1, c.params.mu2, c.params.kappa1, c.params.kappa2, c.params.rho1,
                c.params.rho2, c.params.g, c.params.gamma1(), c.params.gamma2(), c.params.big_n());
  return buf;
}

}  // namespace muskat
