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

#ifndef PSS_CLIFFORD_H
#define PSS_CLIFFORD_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pss/circuit.h"
#include "pss/pathsum.h"
#include "pss/rewrite.h"

namespace pss {

/// Phase = l/8 + (Lx + Ly)/4 + (Qx + Qy + sum_i y_i R_i)/2 and
/// f_j = fx_j + fy_j + b_j, for a sum in Clifford normal form.
struct NormalFormParts {
    uint32_t l = 0;  // Z8
    std::map<Var, uint32_t> Lx;  // values in Z4, nonzero
    std::map<Var, uint32_t> Ly;
    std::vector<std::pair<Var, Var>> Qx;
    std::vector<std::pair<Var, Var>> Qy;
    std::vector<BoolPoly> R;  // per path variable (in pathvars order)
    std::vector<BoolPoly> fx;
    std::vector<BoolPoly> fy;
    std::vector<bool> b;
    std::vector<uint32_t> owner;  // per path variable, its output index

    /// Rebuilds the sum the parts came from.
    PathSum reassemble(uint32_t inputs, const std::vector<uint32_t> &pathvars, int64_t sqrt2) const;
};

/// Splits a normal-form sum. Throws MalformedNormalForm.
NormalFormParts decompose(const CliffordNormalForm &nf);

struct CliffordSynthOptions {
    bool ignore_global_phase = false;
};

/// Exact 8-stage synthesis of a square Clifford sum. Throws NotClifford,
/// NotNormalizable or NonUnitary.
Circuit synth_clifford(const PathSum &p, CliffordSynthOptions opts = {});

/// Synthesis of a Clifford isometry (inputs <= outputs). Qubits at
/// positions >= inputs are ancillas prepared in |0>. Throws NotIsometry.
Circuit synth_isometry(const PathSum &p, CliffordSynthOptions opts = {});

struct StageProfile {
    static constexpr std::array<const char *, 10> kNames = {
        "gphase", "s1", "cz1", "cx1", "h", "cx2", "x", "cz2", "s2", "swap"};
    std::array<size_t, 10> counts{};
    bool conforming = true;

    std::string str() const;
    std::string to_json() const;
};

StageProfile stage_profile(const Circuit &c);

}  // namespace pss

#endif
