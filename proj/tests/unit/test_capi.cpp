// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "muskat/muskat.h"

namespace
{

std::string tmp_dir()
{
  const char *env = std::getenv("MUSKAT_TEST_TMP");
  return env != nullptr ? env : "/tmp/muskat_capi_test";
}

void count_check(const char *, int passed, const char *, void *user)
{
  auto *counts = static_cast<int *>(user);
  counts[passed ? 0 : 1] += 1;
}

void collect(int, double estimate, void *user)
{
  static_cast<std::vector<double> *>(user)->push_back(estimate);
}

}  // namespace

TEST_CASE("config errors map to status codes")
{
  mk_config *cfg = nullptr;
  CHECK(mk_config_parse("{\"kappa2\": 0}", &cfg) == MK_ERR_VALIDATION);
  CHECK(cfg == nullptr);
  CHECK(std::string(mk_last_error()).find("gamma2") != std::string::npos);
  CHECK(mk_config_parse("{", &cfg) == MK_ERR_PARSE);
  CHECK(mk_config_load("/nonexistent.json", &cfg) == MK_ERR_IO);
  CHECK(mk_config_parse(nullptr, &cfg) == MK_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mk_status_string(MK_ERR_VALIDATION)) == "Validation");
}

TEST_CASE("run, verify and spectrum through the C API")
{
  mk_config *cfg = nullptr;
  REQUIRE(mk_config_parse("{\"n\": 32, \"t_end\": 0.1, \"dt\": 0.05, \"mu2\": 2, \"kappa2\": 0.5,"
                          " \"z\": {\"preset\": \"cosine\", \"amplitude\": 0.05, \"mode\": 1},"
                          " \"h\": {\"offset\": -1.5}, \"svg\": false}",
                          &cfg) == MK_OK);
  REQUIRE(mk_config_set_output_dir(cfg, tmp_dir().c_str()) == MK_OK);
  char *text = nullptr;
  REQUIRE(mk_config_describe(cfg, &text) == MK_OK);
  CHECK(std::string(text).find("gamma1=0.333") != std::string::npos);
  mk_string_free(text);

  mk_run_summary summary{};
  REQUIRE(mk_run(cfg, &summary) == MK_OK);
  CHECK(summary.exit_reason == MK_EXIT_COMPLETED);
  CHECK(summary.steps == 2);
  CHECK(summary.records == 3);
  CHECK(std::abs(summary.t_final - 0.1) < 1e-12);
  CHECK(std::string(mk_exit_reason_string(summary.exit_reason)) == "Completed");

  int counts[2] = {0, 0};
  int failed = -1;
  REQUIRE(mk_verify(cfg, 11, count_check, counts, &failed) == MK_OK);
  CHECK(failed == 0);
  CHECK(counts[1] == 0);
  CHECK(counts[0] >= 12);

  double rho = 0.0;
  int converged = 0;
  std::vector<double> trace;
  REQUIRE(mk_spectrum(cfg, 30, &rho, &converged, collect, &trace) == MK_OK);
  CHECK(trace.size() == 30);
  CHECK(rho > 0.0);
  CHECK(rho < 1.0);
  mk_config_free(cfg);
}

TEST_CASE("curve handles")
{
  const size_t n = 16;
  std::vector<double> p1(n, 0.0), p2(n);
  for (size_t j = 0; j < n; ++j)
  {
    p2[j] = 0.1 * std::sin(-M_PI + 2 * M_PI * j / n);
  }
  mk_curve *z = nullptr;
  REQUIRE(mk_curve_from_samples(n, p1.data(), p2.data(), &z) == MK_OK);
  CHECK(mk_curve_size(z) == n);

  char *json = nullptr;
  REQUIRE(mk_curve_to_json(z, &json) == MK_OK);
  mk_curve *back = nullptr;
  REQUIRE(mk_curve_from_json(json, &back) == MK_OK);
  mk_string_free(json);
  std::vector<double> q1(n), q2(n);
  REQUIRE(mk_curve_samples(back, q1.data(), q2.data()) == MK_OK);
  for (size_t j = 0; j < n; ++j)
  {
    CHECK(std::abs(q2[j] - p2[j]) < 1e-15);
  }

  double defect = 0.0;
  REQUIRE(mk_curve_parametrization_defect(z, &defect) == MK_OK);
  CHECK(defect > 1e-3);
  mk_curve *uniform = nullptr;
  REQUIRE(mk_curve_resample_uniform(z, &uniform) == MK_OK);
  REQUIRE(mk_curve_parametrization_defect(uniform, &defect) == MK_OK);
  CHECK(defect <= 1e-8);

  std::vector<double> flat(n, -1.0), zero(n, 0.0);
  mk_curve *h = nullptr;
  REQUIRE(mk_curve_from_samples(n, zero.data(), flat.data(), &h) == MK_OK);
  double sep = 0.0;
  REQUIRE(mk_curve_separation(z, h, &sep) == MK_OK);
  CHECK(sep > 1.0);
  double ac = 0.0;
  REQUIRE(mk_curve_arc_chord(z, &ac) == MK_OK);
  CHECK(ac >= 1.0 - 1e-12);

  mk_fluid_params params{0.05, 0.95, 0.95, 0.05, 0.0, 1.0, 1.0};
  double rho = 0.0;
  mk_curve *flat_z = nullptr;
  REQUIRE(mk_curve_from_samples(n, zero.data(), zero.data(), &flat_z) == MK_OK);
  REQUIRE(mk_spectral_radius(flat_z, h, &params, 40, &rho, nullptr, nullptr, nullptr) == MK_OK);
  CHECK(std::abs(rho - 0.9 * std::exp(-1.0)) < 1e-3);

  CHECK(mk_curve_from_samples(7, p1.data(), p2.data(), &z) == MK_ERR_INVALID_ARGUMENT);
  mk_curve *same = nullptr;
  REQUIRE(mk_curve_from_samples(n, zero.data(), zero.data(), &same) == MK_OK);
  CHECK(mk_curve_separation(flat_z, same, &sep) == MK_ERR_CURVE_CONTACT);

  mk_curve_free(same);
  mk_curve_free(flat_z);
  mk_curve_free(h);
  mk_curve_free(uniform);
  mk_curve_free(back);
  mk_curve_free(z);
}
