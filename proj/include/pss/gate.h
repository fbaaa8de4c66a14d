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

#ifndef PSS_GATE_H
#define PSS_GATE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pss/dyadic.h"

namespace pss {

enum class GateName : uint8_t {
    X,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    H,
    CX,
    CZ,
    Swap,
    CCX,
    CCZ,
    MCX,
    RZ,
    CRZ,
    MCRZ,
    GPhase,
};

std::string_view gate_name_str(GateName name);
std::optional<GateName> parse_gate_name(std::string_view text);
bool gate_has_angle(GateName name);
/// Fixed qubit count, or -1 for the variadic mcx/mcrz.
int gate_arity(GateName name);

/// A gate acting on explicit qubits. For controlled gates the controls come
/// first and the target last. rz(a) is diag(1, e^{2 pi i a}); crz and mcrz
/// apply that phase when every listed qubit is 1. gphase multiplies by
/// e^{2 pi i a} and takes no qubits.
struct Gate {
    GateName name = GateName::X;
    std::vector<uint32_t> qubits;
    Dyadic angle;

    /// Checks arity, distinct qubits and (when width is given) range.
    /// Throws WidthError or SyntaxError.
    void validate(std::optional<uint32_t> width = std::nullopt) const;

    Gate inverse() const;
    bool is_clifford() const;
    std::string str() const;

    bool operator==(const Gate &other) const = default;
};

Gate make_gate(GateName name, std::vector<uint32_t> qubits, Dyadic angle = {});

}  // namespace pss

#endif
