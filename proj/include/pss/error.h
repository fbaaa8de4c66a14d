// Copyright 2026 The PSS Authors
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

#ifndef PSS_ERROR_H
#define PSS_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace pss {

enum class ErrorKind {
    NotHalfInteger,
    ResourceLimit,
    DimensionMismatch,
    NotApplicable,
    NotNormalizable,
    NotClifford,
    MalformedNormalForm,
    NonUnitary,
    NotIsometry,
    SynthesisIncomplete,
    ResidualNotPermutation,
    SyntaxError,
    WidthError,
    ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// The single exception type thrown by the library.
///
/// `detail` carries a machine-readable payload when one exists: the stuck
/// variables for NotNormalizable, the residual path sum (JSON) for
/// SynthesisIncomplete and ResidualNotPermutation.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::string detail = {})
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          detail_(std::move(detail)) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace pss

#endif
