/*
 * Copyright 2026 The hsal authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSAL_ERRORS_HPP
#define HSAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsal {

// Base class for all library errors. The CLI maps these to exit code 3
// (numeric/budget failures); anything else is a usage error.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidAngle : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct NonFiniteIntegrand : Error {
  using Error::Error;
};
struct QuadratureFailure : Error {
  using Error::Error;
};
struct NonPositiveTime : Error {
  using Error::Error;
};
struct InvalidBoundaryParam : Error {
  using Error::Error;
};
struct InvalidTime : Error {
  using Error::Error;
};
struct InvalidShift : Error {
  using Error::Error;
};
struct OddDimension : Error {
  using Error::Error;
};
struct ExpansionTooLarge : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct TruncationFailure : Error {
  using Error::Error;
};
struct OverlappingIntervals : Error {
  using Error::Error;
};
struct DimensionCap : Error {
  using Error::Error;
};
struct RejectionBudgetExceeded : Error {
  using Error::Error;
};
struct SkewRepairFailure : Error {
  using Error::Error;
};

}  // namespace hsal

#endif  // HSAL_ERRORS_HPP
