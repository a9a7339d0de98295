// Copyright 2026 The muskat-bim Authors
// SPDX-License-Identifier: Apache-2.0

#include "muskat/errors.hpp"

namespace muskat
{

const char *to_string(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::SelfIntersection:
      return "SelfIntersection";
    case ErrorCode::CurveContact:
      return "CurveContact";
    case ErrorCode::NoConvergence:
      return "NoConvergence";
    case ErrorCode::DegenerateParametrization:
      return "DegenerateParametrization";
    case ErrorCode::StepRejected:
      return "StepRejected";
    case ErrorCode::InsufficientData:
      return "InsufficientData";
    case ErrorCode::Validation:
      return "Validation";
    case ErrorCode::Io:
      return "Io";
    case ErrorCode::Parse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace muskat
