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

#include "pss/error.h"

namespace pss {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHalfInteger:
            return "NotHalfInteger";
        case ErrorKind::ResourceLimit:
            return "ResourceLimit";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotApplicable:
            return "NotApplicable";
        case ErrorKind::NotNormalizable:
            return "NotNormalizable";
        case ErrorKind::NotClifford:
            return "NotClifford";
        case ErrorKind::MalformedNormalForm:
            return "MalformedNormalForm";
        case ErrorKind::NonUnitary:
            return "NonUnitary";
        case ErrorKind::NotIsometry:
            return "NotIsometry";
        case ErrorKind::SynthesisIncomplete:
            return "SynthesisIncomplete";
        case ErrorKind::ResidualNotPermutation:
            return "ResidualNotPermutation";
        case ErrorKind::SyntaxError:
            return "SyntaxError";
        case ErrorKind::WidthError:
            return "WidthError";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

}  // namespace pss
