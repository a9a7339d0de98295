// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace muskat
{

// Mirrors mk_status in the C API; keep the numeric values in sync.
enum class ErrorCode : int
{
  InvalidArgument = 1,
  SelfIntersection = 2,
  CurveContact = 3,
  NoConvergence = 4,
  DegenerateParametrization = 5,
  StepRejected = 6,
  InsufficientData = 7,
  Validation = 8,
  Io = 9,
  Parse = 10,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &what)
    : std::runtime_error(what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what)
{
  throw Error(code, what);
}

}  // namespace muskat
