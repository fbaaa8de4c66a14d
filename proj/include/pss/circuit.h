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

#ifndef PSS_CIRCUIT_H
#define PSS_CIRCUIT_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pss/gate.h"
#include "pss/matrix.h"
#include "pss/pathsum.h"

namespace pss {

/// A gate list over `width` qubits; gates[0] acts first.
struct Circuit {
    uint32_t width = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(uint32_t w) : width(w) {
    }

    /// Validates and appends.
    void append(Gate g);
    void append(GateName name, std::vector<uint32_t> qubits, Dyadic angle = {});
    void extend(const Circuit &other);
    Circuit inverse() const;

    /// Text format: "qubits N" then one gate per line.
    std::string str() const;
    /// Throws SyntaxError (with line:column) or WidthError.
    static Circuit parse(std::string_view text);

    bool operator==(const Circuit &other) const = default;
};

PathSum simulate(const Circuit &c);

struct CircuitStats {
    size_t total = 0;
    std::map<std::string, size_t> counts;
    size_t t_count = 0;
    /// Number of H gates on the longest causal chain.
    size_t h_layers = 0;

    std::string str() const;
};

CircuitStats stats(const Circuit &c);

enum class RandomKind { Clifford, CliffordT };

/// Gates drawn uniformly from {h, s, cx} (plus t for CliffordT), qubits
/// uniform without repetition.
Circuit random_circuit(RandomKind kind, uint32_t n, size_t gates, uint64_t seed);

/// Textbook matrix of a gate on its own qubits (relabeled 0..arity-1).
CMatrix gate_matrix(const Gate &g);

/// Dense state-vector simulation, independent of the path-sum machinery.
CMatrix circuit_unitary(const Circuit &c);

}  // namespace pss

#endif
