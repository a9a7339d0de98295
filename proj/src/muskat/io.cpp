// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "muskat/errors.hpp"

namespace muskat
{

namespace
{

using nlohmann::json;

json modes_to_json(const SpectralScalar &f)
{
  json arr = json::array();
  for (const cplx &c : f.modes())
  {
    arr.push_back({c.real(), c.imag()});
  }
  return arr;
}

SpectralScalar modes_from_json(const json &arr, std::size_t n, const char *name)
{
  if (!arr.is_array() || arr.size() != n / 2 + 1)
  {
    fail(ErrorCode::Validation, std::string(name) + " must hold n/2 + 1 [re, im] pairs");
  }
  std::vector<cplx> modes;
  modes.reserve(arr.size());
  for (const auto &pair : arr)
  {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
    {
      fail(ErrorCode::Validation, std::string(name) + " entries must be [re, im]");
    }
    modes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return SpectralScalar::from_modes(n, std::move(modes));
}

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string series_row(const DiagnosticsRecord &r)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d", r.t,
                r.sobolev_z, r.sobolev_omega, r.arc_chord, r.separation, r.sigma_min,
                r.dissipation, r.energy, r.accepted ? 1 : 0);
  return buf;
}

void write_series_csv(const std::string &path, std::span<const DiagnosticsRecord> series)
{
  std::string text = std::string(kSeriesHeader) + "\n";
  for (const auto &r : series)
  {
    text += series_row(r) + "\n";
  }
  write_text_file(path, text);
}

std::string curve_to_json(const PeriodicCurve &curve, const double *t)
{
  json doc;
  doc["n"] = curve.size();
  doc["p1_modes"] = modes_to_json(curve.p1());
  doc["p2_modes"] = modes_to_json(curve.p2());
  if (t != nullptr)
  {
    doc["t"] = *t;
  }
  return doc.dump();
}

PeriodicCurve curve_from_json(const std::string &text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    fail(ErrorCode::Parse, std::string("curve snapshot is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() ||
      !doc.contains("p1_modes") || !doc.contains("p2_modes"))
  {
    fail(ErrorCode::Validation, "curve snapshot needs n, p1_modes and p2_modes");
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  if (n < 8 || n % 2 != 0)
  {
    fail(ErrorCode::Validation, "curve snapshot n must be even and >= 8");
  }
  return {modes_from_json(doc["p1_modes"], n, "p1_modes"),
          modes_from_json(doc["p2_modes"], n, "p2_modes")};
}

Viewport viewport_for(const PeriodicCurve &z, const PeriodicCurve &h)
{
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (const auto *c : {&z, &h})
  {
    for (const cplx &p : c->points())
    {
      lo = first ? p.imag() : std::min(lo, p.imag());
      hi = first ? p.imag() : std::max(hi, p.imag());
      first = false;
    }
  }
  const double margin = 0.25 * std::max(hi - lo, 1.0);
  return {-kPi - 0.5, kPi + 0.5, lo - margin, hi + margin};
}

std::string render_svg(const PeriodicCurve &z, const PeriodicCurve &h,
                       const SpectralScalar &sigma, const Viewport &view)
{
  const double width = 800.0;
  const double height = width * (view.y_max - view.y_min) / (view.x_max - view.x_min);
  auto px = [&](cplx p) {
    return fmt((p.real() - view.x_min) / (view.x_max - view.x_min) * width) + "," +
           fmt((view.y_max - p.imag()) / (view.y_max - view.y_min) * height);
  };
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
                    "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
                    fmt(height) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto hp = h.points();
  out += "<polyline fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" points=\"";
  for (std::size_t j = 0; j <= hp.size(); ++j)
  {
    const cplx p = j < hp.size() ? hp[j] : hp[0] + kTwoPi;
    out += px(p) + " ";
  }
  out += "\"/>\n";

  const auto zp = z.points();
  for (std::size_t j = 0; j < zp.size(); ++j)
  {
    const cplx a = zp[j];
    const cplx b = j + 1 < zp.size() ? zp[j + 1] : zp[0] + kTwoPi;
    const double s = 0.5 * (sigma[j] + sigma[(j + 1) % zp.size()]);
    out += "<line x1=\"" + fmt((a.real() - view.x_min) / (view.x_max - view.x_min) * width) +
           "\" y1=\"" + fmt((view.y_max - a.imag()) / (view.y_max - view.y_min) * height) +
           "\" x2=\"" + fmt((b.real() - view.x_min) / (view.x_max - view.x_min) * width) +
           "\" y2=\"" + fmt((view.y_max - b.imag()) / (view.y_max - view.y_min) * height) +
           "\" stroke=\"" + (s > 0.0 ? "#1a7f37" : "#cf222e") + "\" stroke-width=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::string &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  }
  out << text;
  if (!out)
  {
    fail(ErrorCode::Io, "failed writing '" + path + "'");
  }
}

}  // namespace muskat
