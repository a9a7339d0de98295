// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <string>

#include "muskat/muskat.h"

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

int report_error(mk_status status)
{
  std::fprintf(stderr, "error (%s): %s\n", mk_status_string(status), mk_last_error());
  return kExitValidation;
}

struct Options
{
  std::string config;
  std::string out;
  std::uint64_t seed = 1;
  int probes = 60;
};

// Loads the config and applies --out; returns nullptr after reporting.
mk_config *load(const Options &opts, int &code)
{
  mk_config *cfg = nullptr;
  mk_status s = mk_config_load(opts.config.c_str(), &cfg);
  if (s == MK_OK && !opts.out.empty())
  {
    s = mk_config_set_output_dir(cfg, opts.out.c_str());
  }
  if (s != MK_OK)
  {
    mk_config_free(cfg);
    code = report_error(s);
    return nullptr;
  }
  char *text = nullptr;
  if (mk_config_describe(cfg, &text) == MK_OK)
  {
    std::fputs(text, stdout);
    mk_string_free(text);
  }
  return cfg;
}

int cmd_run(const Options &opts)
{
  int code = kExitOk;
  mk_config *cfg = load(opts, code);
  if (cfg == nullptr)
  {
    return code;
  }
  mk_run_summary summary{};
  const mk_status s = mk_run(cfg, &summary);
  mk_config_free(cfg);
  if (s != MK_OK)
  {
    return report_error(s);
  }
  std::printf("exit=%s t=%.17g dt=%.17g steps=%zu records=%zu sigma_min=%.17g\n",
              mk_exit_reason_string(summary.exit_reason), summary.t_final, summary.dt,
              summary.steps, summary.records, summary.sigma_min_final);
  if (summary.exit_reason != MK_EXIT_COMPLETED && mk_last_error()[0] != '\0')
  {
    std::printf("reason: %s\n", mk_last_error());
  }
  return kExitOk;
}

void print_check(const char *name, int passed, const char *detail, void *)
{
  std::printf("%s %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
}

int cmd_verify(const Options &opts)
{
  int code = kExitOk;
  mk_config *cfg = load(opts, code);
  if (cfg == nullptr)
  {
    return code;
  }
  std::printf("seed=%" PRIu64 "\n", opts.seed);
  int failed = 0;
  const mk_status s = mk_verify(cfg, opts.seed, print_check, nullptr, &failed);
  mk_config_free(cfg);
  if (s != MK_OK)
  {
    return report_error(s);
  }
  std::printf("%d check(s) failed\n", failed);
  return failed == 0 ? kExitOk : kExitVerification;
}

void print_trace(int iteration, double estimate, void *)
{
  std::printf("iter %d: %.17g\n", iteration, estimate);
}

int cmd_spectrum(const Options &opts)
{
  int code = kExitOk;
  mk_config *cfg = load(opts, code);
  if (cfg == nullptr)
  {
    return code;
  }
  double estimate = 0.0;
  int converged = 0;
  const mk_status s = mk_spectrum(cfg, opts.probes, &estimate, &converged, print_trace, nullptr);
  mk_config_free(cfg);
  if (s != MK_OK)
  {
    return report_error(s);
  }
  std::printf("spectral_radius=%.17g converged=%s\n", estimate, converged ? "yes" : "no");
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Two-phase Muskat interface simulator with a fixed bottom boundary"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--config", opts.config, "JSON configuration file")->required();
    sub->add_option("--out", opts.out, "Output directory (overrides the config)");
    sub->add_option("--seed", opts.seed, "Seed for randomized suites");
  };
  CLI::App *run = app.add_subcommand("run", "Integrate the interface and write artifacts");
  CLI::App *verify = app.add_subcommand("verify", "Run the property and oracle suites");
  CLI::App *spectrum = app.add_subcommand("spectrum", "Estimate the spectral radius of M T*");
  add_common(run);
  add_common(verify);
  add_common(spectrum);
  spectrum->add_option("--probes", opts.probes, "Power iterations (>= 20)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }
  if (run->parsed())
  {
    return cmd_run(opts);
  }
  if (verify->parsed())
  {
    return cmd_verify(opts);
  }
  return cmd_spectrum(opts);
}
