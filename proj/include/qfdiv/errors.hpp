// Copyright 2026 The qfdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFDIV_ERRORS_HPP
#define QFDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfdiv {

/// Base class for all qfdiv errors. Catching this catches every library
/// failure that is reported by exception.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QFDIV_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                           \
  public:                                                               \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

QFDIV_DEFINE_ERROR(DimensionMismatch);
QFDIV_DEFINE_ERROR(LengthMismatch);
QFDIV_DEFINE_ERROR(DomainError);
QFDIV_DEFINE_ERROR(NotPsd);
QFDIV_DEFINE_ERROR(NotNormalized);
QFDIV_DEFINE_ERROR(NotStrictlyConvex);
QFDIV_DEFINE_ERROR(NotOperatorConvex);
QFDIV_DEFINE_ERROR(InfiniteDivergence);
QFDIV_DEFINE_ERROR(SingularState);
QFDIV_DEFINE_ERROR(NotQubit);
QFDIV_DEFINE_ERROR(OutsideBall);
QFDIV_DEFINE_ERROR(InvalidParameters);
QFDIV_DEFINE_ERROR(UnsupportedDimension);
QFDIV_DEFINE_ERROR(InvalidFunction);
QFDIV_DEFINE_ERROR(ParseError);

#undef QFDIV_DEFINE_ERROR

}  // namespace qfdiv

#endif  // QFDIV_ERRORS_HPP
