// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/muskat.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "muskat/io.hpp"
#include "muskat/run.hpp"
#include "muskat/verify.hpp"

struct mk_config
{
  muskat::RunConfig value;
};

struct mk_curve
{
  muskat::PeriodicCurve value;
};

namespace
{

thread_local std::string g_last_error;

mk_status record(mk_status status, const char *message)
{
  g_last_error = message;
  return status;
}

template <typename F>
mk_status guarded(F &&body)
{
  try
  {
    g_last_error.clear();
    body();
    return MK_OK;
  }
  catch (const muskat::Error &e)
  {
    return record(static_cast<mk_status>(static_cast<int>(e.code())), e.what());
  }
  catch (const std::bad_alloc &)
  {
    return record(MK_ERR_INTERNAL, "out of memory");
  }
  catch (const std::exception &e)
  {
    return record(MK_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return record(MK_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char *what)
{
  if (!condition)
  {
    muskat::fail(muskat::ErrorCode::InvalidArgument, what);
  }
}

char *dup_string(const std::string &s)
{
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

muskat::FluidParams to_params(const mk_fluid_params &p)
{
  return {p.mu1, p.mu2, p.kappa1, p.kappa2, p.rho1, p.rho2, p.g};
}

}  // namespace

extern "C" {

const char *mk_last_error(void)
{
  return g_last_error.c_str();
}

const char *mk_status_string(mk_status status)
{
  if (status == MK_OK)
  {
    return "ok";
  }
  if (status == MK_ERR_INTERNAL)
  {
    return "internal error";
  }
  return muskat::to_string(static_cast<muskat::ErrorCode>(static_cast<int>(status)));
}

const char *mk_exit_reason_string(mk_exit_reason reason)
{
  return muskat::to_string(static_cast<muskat::ExitReason>(static_cast<int>(reason)));
}

const char *mk_version(void)
{
  return "0.1.0";
}

void mk_string_free(char *text)
{
  delete[] text;
}

mk_status mk_config_load(const char *path, mk_config **out)
{
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new mk_config{muskat::parse_config(path)};
  });
}

mk_status mk_config_parse(const char *json_text, mk_config **out)
{
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new mk_config{muskat::parse_config_text(json_text)};
  });
}

void mk_config_free(mk_config *config)
{
  delete config;
}

mk_status mk_config_set_output_dir(mk_config *config, const char *dir)
{
  return guarded([&] {
    require(config != nullptr && dir != nullptr, "null argument");
    config->value.output_dir = dir;
  });
}

mk_status mk_config_describe(const mk_config *config, char **out)
{
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    *out = dup_string(muskat::describe(config->value));
  });
}

mk_status mk_config_fluid_params(const mk_config *config, mk_fluid_params *out)
{
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    const auto &p = config->value.params;
    *out = {p.mu1, p.mu2, p.kappa1, p.kappa2, p.rho1, p.rho2, p.g};
  });
}

mk_status mk_config_curves(const mk_config *config, mk_curve **z, mk_curve **h)
{
  return guarded([&] {
    require(config != nullptr && z != nullptr && h != nullptr, "null argument");
    auto zc = std::make_unique<mk_curve>(mk_curve{muskat::build_curve(config->value.z, config->value.n)});
    auto hc = std::make_unique<mk_curve>(mk_curve{muskat::build_curve(config->value.h, config->value.n)});
    *z = zc.release();
    *h = hc.release();
  });
}

mk_status mk_curve_from_samples(size_t n, const double *p1, const double *p2, mk_curve **out)
{
  return guarded([&] {
    require(p1 != nullptr && p2 != nullptr && out != nullptr, "null argument");
    *out = new mk_curve{muskat::PeriodicCurve(muskat::SpectralScalar(std::vector<double>(p1, p1 + n)),
                                              muskat::SpectralScalar(std::vector<double>(p2, p2 + n)))};
  });
}

mk_status mk_curve_from_json(const char *json_text, mk_curve **out)
{
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new mk_curve{muskat::curve_from_json(json_text)};
  });
}

mk_status mk_curve_to_json(const mk_curve *curve, char **out)
{
  return guarded([&] {
    require(curve != nullptr && out != nullptr, "null argument");
    *out = dup_string(muskat::curve_to_json(curve->value));
  });
}

void mk_curve_free(mk_curve *curve)
{
  delete curve;
}

size_t mk_curve_size(const mk_curve *curve)
{
  return curve == nullptr ? 0 : curve->value.size();
}

mk_status mk_curve_samples(const mk_curve *curve, double *p1, double *p2)
{
  return guarded([&] {
    require(curve != nullptr && p1 != nullptr && p2 != nullptr, "null argument");
    const auto a = curve->value.p1().samples();
    const auto b = curve->value.p2().samples();
    std::copy(a.begin(), a.end(), p1);
    std::copy(b.begin(), b.end(), p2);
  });
}

mk_status mk_curve_arc_chord(const mk_curve *curve, double *out)
{
  return guarded([&] {
    require(curve != nullptr && out != nullptr, "null argument");
    *out = muskat::arc_chord_norm(curve->value);
  });
}

mk_status mk_curve_separation(const mk_curve *z, const mk_curve *h, double *out)
{
  return guarded([&] {
    require(z != nullptr && h != nullptr && out != nullptr, "null argument");
    *out = muskat::separation_norm(z->value, h->value);
  });
}

mk_status mk_curve_parametrization_defect(const mk_curve *curve, double *out)
{
  return guarded([&] {
    require(curve != nullptr && out != nullptr, "null argument");
    *out = muskat::parametrization_defect(curve->value);
  });
}

mk_status mk_curve_resample_uniform(const mk_curve *curve, mk_curve **out)
{
  return guarded([&] {
    require(curve != nullptr && out != nullptr, "null argument");
    *out = new mk_curve{muskat::resample_uniform(curve->value)};
  });
}

mk_status mk_spectral_radius(const mk_curve *z, const mk_curve *h, const mk_fluid_params *params,
                             int n_probe, double *estimate, int *converged,
                             mk_trace_callback trace, void *user)
{
  return guarded([&] {
    require(z != nullptr && h != nullptr && params != nullptr && estimate != nullptr,
            "null argument");
    const muskat::FluidParams p = to_params(*params);
    p.validate();
    const auto est = muskat::spectral_radius(z->value, h->value, p, n_probe);
    if (trace != nullptr)
    {
      for (std::size_t i = 0; i < est.trace.size(); ++i)
      {
        trace(static_cast<int>(i) + 1, est.trace[i], user);
      }
    }
    *estimate = est.value;
    if (converged != nullptr)
    {
      *converged = est.converged ? 1 : 0;
    }
  });
}

mk_status mk_run(const mk_config *config, mk_run_summary *summary)
{
  return guarded([&] {
    require(config != nullptr && summary != nullptr, "null argument");
    const muskat::RunResult r = muskat::run_and_write(config->value);
    summary->exit_reason = static_cast<mk_exit_reason>(static_cast<int>(r.exit));
    summary->t_final = r.final_state.t;
    summary->dt = r.dt;
    summary->steps = r.steps;
    summary->records = r.series.size();
    summary->sigma_min_final = r.series.empty() ? 0.0 : r.series.back().sigma_min;
    if (!r.message.empty())
    {
      g_last_error = r.message;
    }
  });
}

mk_status mk_verify(const mk_config *config, uint64_t seed, mk_check_callback report, void *user,
                    int *n_failed)
{
  return guarded([&] {
    require(config != nullptr && n_failed != nullptr, "null argument");
    int failed = 0;
    for (const auto &c : muskat::run_verification(config->value, seed))
    {
      failed += c.passed ? 0 : 1;
      if (report != nullptr)
      {
        report(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
      }
    }
    *n_failed = failed;
  });
}

mk_status mk_spectrum(const mk_config *config, int n_probe, double *estimate, int *converged,
                      mk_trace_callback trace, void *user)
{
  return guarded([&] {
    require(config != nullptr && estimate != nullptr, "null argument");
    const auto est = muskat::spectrum(config->value, n_probe);
    if (trace != nullptr)
    {
      for (std::size_t i = 0; i < est.trace.size(); ++i)
      {
        trace(static_cast<int>(i) + 1, est.trace[i], user);
      }
    }
    *estimate = est.value;
    if (converged != nullptr)
    {
      *converged = est.converged ? 1 : 0;
    }
  });
}

}  // extern "C"
