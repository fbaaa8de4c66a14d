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

#ifndef PSS_PATHSUM_H
#define PSS_PATHSUM_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pss/gate.h"
#include "pss/matrix.h"
#include "pss/poly.h"

namespace pss {

/// The operator |x> -> 2^(-sqrt2/2) sum_y e^{2 pi i phase(x,y)} |outputs(x,y)>
/// over m = `inputs` input variables x0..x(m-1) and the path variables
/// y_j, j in `pathvars`. The constant term of `phase` is the global phase.
struct PathSum {
    uint32_t inputs = 0;
    std::vector<BoolPoly> outputs;
    std::vector<uint32_t> pathvars;  // sorted ascending
    int64_t sqrt2 = 0;
    PhasePoly phase;

    static PathSum identity(uint32_t n);

    uint32_t num_outputs() const {
        return static_cast<uint32_t>(outputs.size());
    }
    uint32_t num_paths() const {
        return static_cast<uint32_t>(pathvars.size());
    }
    bool has_path(uint32_t j) const;
    /// Adds and returns a path variable with an index above all others.
    Var fresh_path();
    void remove_path(uint32_t j);
    uint32_t next_path_index() const {
        return pathvars.empty() ? 0 : pathvars.back() + 1;
    }

    /// Throws ParseError when a polynomial mentions an unknown variable.
    void check_vars() const;

    /// Renumbers path variables to y0..y(k-1) preserving order.
    void compact_paths();

    std::string to_json() const;
    static PathSum from_json(std::string_view text);
    /// Multi-line human readable rendering.
    std::string str() const;

    bool operator==(const PathSum &other) const = default;
};

/// Applies g after p (g acts on p's output positions).
void apply_gate(PathSum &p, const Gate &g);

/// The defining sum of a gate on its own qubits, relabeled 0..arity-1.
PathSum gate_sum(const Gate &g);

PathSum compose(const PathSum &after, const PathSum &before);
PathSum tensor(const PathSum &a, const PathSum &b);
PathSum dagger(const PathSum &p);

/// Brute-force evaluation. Bits are given per variable (index i is x_i /
/// output i). Throws ResourceLimit when the enumeration exceeds max_bits.
struct OracleLimits {
    unsigned max_bits = 22;
};
Amplitude evaluate(
    const PathSum &p, const std::vector<bool> &in_bits, const std::vector<bool> &out_bits, OracleLimits lim = {});
CMatrix to_matrix(const PathSum &p, OracleLimits lim = {});

}  // namespace pss

#endif
