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

#include "pss/gate.h"

#include <algorithm>
#include <array>

#include "pss/error.h"

namespace pss {

namespace {

struct GateInfo {
    GateName name;
    std::string_view text;
    int arity;
    bool angle;
};

constexpr std::array<GateInfo, 17> kGates = {{
    {GateName::X, "x", 1, false},
    {GateName::Z, "z", 1, false},
    {GateName::S, "s", 1, false},
    {GateName::Sdg, "sdg", 1, false},
    {GateName::T, "t", 1, false},
    {GateName::Tdg, "tdg", 1, false},
    {GateName::H, "h", 1, false},
    {GateName::CX, "cx", 2, false},
    {GateName::CZ, "cz", 2, false},
    {GateName::Swap, "swap", 2, false},
    {GateName::CCX, "ccx", 3, false},
    {GateName::CCZ, "ccz", 3, false},
    {GateName::MCX, "mcx", -1, false},
    {GateName::RZ, "rz", 1, true},
    {GateName::CRZ, "crz", 2, true},
    {GateName::MCRZ, "mcrz", -1, true},
    {GateName::GPhase, "gphase", 0, true},
}};

const GateInfo &info(GateName name) {
    return kGates[static_cast<size_t>(name)];
}

}  // namespace

std::string_view gate_name_str(GateName name) {
    return info(name).text;
}

std::optional<GateName> parse_gate_name(std::string_view text) {
    for (const auto &g : kGates) {
        if (g.text == text) {
            return g.name;
        }
    }
    return std::nullopt;
}

bool gate_has_angle(GateName name) {
    return info(name).angle;
}

int gate_arity(GateName name) {
    return info(name).arity;
}

void Gate::validate(std::optional<uint32_t> width) const {
    int arity = gate_arity(name);
    if (arity >= 0 && qubits.size() != static_cast<size_t>(arity)) {
        throw Error(
            ErrorKind::SyntaxError,
            std::string(gate_name_str(name)) + " takes " + std::to_string(arity) + " qubit(s), got " +
                std::to_string(qubits.size()));
    }
    if (arity < 0 && qubits.size() < 2) {
        throw Error(ErrorKind::SyntaxError, std::string(gate_name_str(name)) + " needs at least one control");
    }
    std::vector<uint32_t> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::SyntaxError, "repeated qubit in " + str());
    }
    if (width.has_value()) {
        for (uint32_t q : qubits) {
            if (q >= *width) {
                throw Error(
                    ErrorKind::WidthError,
                    "qubit " + std::to_string(q) + " out of range for width " + std::to_string(*width));
            }
        }
    }
}

Gate make_gate(GateName name, std::vector<uint32_t> qubits, Dyadic angle) {
    Gate g{name, std::move(qubits), gate_has_angle(name) ? angle : Dyadic()};
    g.validate();
    return g;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (name) {
        case GateName::S:
            g.name = GateName::Sdg;
            break;
        case GateName::Sdg:
            g.name = GateName::S;
            break;
        case GateName::T:
            g.name = GateName::Tdg;
            break;
        case GateName::Tdg:
            g.name = GateName::T;
            break;
        case GateName::RZ:
        case GateName::CRZ:
        case GateName::MCRZ:
        case GateName::GPhase:
            g.angle = -angle;
            break;
        default:
            break;
    }
    return g;
}

bool Gate::is_clifford() const {
    switch (name) {
        case GateName::X:
        case GateName::Z:
        case GateName::S:
        case GateName::Sdg:
        case GateName::H:
        case GateName::CX:
        case GateName::CZ:
        case GateName::Swap:
            return true;
        default:
            return false;
    }
}

std::string Gate::str() const {
    std::string s(gate_name_str(name));
    if (gate_has_angle(name)) {
        s += " " + angle.str();
    }
    for (uint32_t q : qubits) {
        s += " " + std::to_string(q);
    }
    return s;
}

}  // namespace pss
