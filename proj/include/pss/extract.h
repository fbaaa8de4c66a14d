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

#ifndef PSS_EXTRACT_H
#define PSS_EXTRACT_H

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "pss/circuit.h"
#include "pss/pathsum.h"

namespace pss {

/// Synthesis works by applying gates to the left of the remaining sum until
/// it becomes the identity: current = G_t ... G_1 * original. The circuit
/// for the original is then the inverses of the applied gates in reverse.
struct SynthState {
    PathSum current;
    std::vector<Gate> applied;

    explicit SynthState(PathSum p) : current(std::move(p)) {
    }

    void apply(const Gate &g);
    /// The circuit realizing the original sum, given that `current` is
    /// e^{2 pi i phase} times the identity.
    Circuit circuit(Dyadic phase = {}) const;
};

struct Reducible {
    Var var;
    uint32_t qubit = 0;
    BoolPoly q;
};

/// A path variable z that is exactly output `qubit`, occurs in no other
/// output, and whose phase quotient is (1/2) lift(q). Smallest index wins.
std::optional<Reducible> find_reducible(const PathSum &p);

/// Applies H on r.qubit to the left of p, removing r.var.
void h_reduce(PathSum &p, const Reducible &r);

/// Gaussian elimination on the outputs; emits CX and X gates.
bool affine_simplify(SynthState &st);

/// The phase rewritten in the frame z_i = f_i, with the monomial rewrites
/// applied left to right.
struct Frame {
    std::vector<std::pair<Monomial, BoolPoly>> rewrites;
    PhasePoly framed;
};
Frame frame_phase(const PathSum &p);
/// Substitutes z_i := f_i back; equal to p.phase as a function.
PhasePoly unframe(const PathSum &p, const PhasePoly &framed);

/// Removes every framed monomial over frame variables alone with a
/// (multi-)controlled phase gate.
bool phase_simplify(SynthState &st);

/// Removes monomials over exposed variables from other outputs with
/// multiply-controlled X gates.
bool nonlinear_simplify(SynthState &st);

/// Phase monomials with coefficient finer than 1/2 that mention a path
/// variable.
size_t blocking_score(const PathSum &p);

/// Substitutions x <- x + y that unblock y. Returns false, leaving p
/// unchanged, when none is found.
bool degree_reduce(PathSum &p, Var y);

struct SynthOptions {
    bool ignore_global_phase = false;
    std::ostream *trace = nullptr;
};

/// General synthesis. Throws SynthesisIncomplete or ResidualNotPermutation
/// (detail: the remaining sum as JSON).
Circuit synthesize(const PathSum &p, SynthOptions opts = {});

/// The gate adding `angle * prod(f_q)` to the phase, named by its standard
/// form when there is one (z, s, t, cz, ccz, ...).
Gate phase_gate(std::vector<uint32_t> qubits, Dyadic angle);

}  // namespace pss

#endif
