// Copyright 2026 The mdlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDLC_ERROR_HPP
#define MDLC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mdlc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MDLC_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

MDLC_DEFINE_ERROR(FieldError);
MDLC_DEFINE_ERROR(DivisionByZero);
MDLC_DEFINE_ERROR(DimensionError);
MDLC_DEFINE_ERROR(InvariantError);
MDLC_DEFINE_ERROR(FormatError);
MDLC_DEFINE_ERROR(CoprimalityError);
MDLC_DEFINE_ERROR(InconsistentBasisError);
MDLC_DEFINE_ERROR(RangeError);

#undef MDLC_DEFINE_ERROR

/// Thrown when a request would exceed an enumeration or memory budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mdlc

#endif  // MDLC_ERROR_HPP
