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

#ifndef PSS_FRONTENDS_H
#define PSS_FRONTENDS_H

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pss/circuit.h"
#include "pss/extract.h"
#include "pss/pathsum.h"

namespace pss {

/// simulate(), normalizing after every Hadamard so the sum stays small.
/// Clifford prefixes are also kept in normal form.
PathSum simulate_reduced(const Circuit &c);

/// QFT_n|x> = 2^(-n/2) sum_y e^{2 pi i x y / 2^n} |y>, with x and y read
/// most significant bit first.
PathSum qft_sum(uint32_t n);

// ---------------------------------------------------------------- formulas

struct Formula {
    enum class Op { Var, Not, And, Or };
    Op op = Op::Var;
    uint32_t var = 0;  // for Var: input index
    std::vector<Formula> args;

    static Formula variable(uint32_t i) {
        return Formula{Op::Var, i, {}};
    }
    static Formula negate(Formula a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);

    bool eval(uint64_t assignment) const;  // bit i is variable i
    size_t connectives() const;
    std::string str(const std::vector<std::string> &names) const;
};

struct ParsedFormula {
    Formula root;
    std::vector<std::string> vars;  // in first-occurrence order
};

/// Grammar: f := VAR | "!" f | f "&" f | f "|" f | "(" f ")", with
/// precedence ! > & > |. Throws ParseError.
ParsedFormula parse_formula(std::string_view text);

/// The sum with |x> -> phi(x) |x> built from the Tseytin clauses of phi.
/// Connectives are numbered in pre-order (the root is clause 1).
PathSum tseytin_encode(const Formula &phi, uint32_t num_vars);

enum class TautVerdict { Tautology, NotTautology };
struct TautResult {
    TautVerdict verdict = TautVerdict::NotTautology;
    /// Whether the encoded sum's matrix was diag(phi(x)) and equal to the
    /// identity exactly for tautologies.
    bool encoding_agrees = false;
};
TautResult taut_check(const Formula &phi, uint32_t num_vars, OracleLimits lim = {});

// ---------------------------------------------------------------- verification

enum class Verdict { Equal, EqualUpToGlobalPhase, NotEqual, Inconclusive };
std::string_view verdict_name(Verdict v);

struct VerifyOptions {
    bool strict_phase = false;
    unsigned max_oracle_qubits = 10;
};

struct VerifyResult {
    Verdict verdict = Verdict::Inconclusive;
    /// The global phase (in turns) for EqualUpToGlobalPhase.
    Dyadic phase;
    double oracle_phase = 0;
    bool via_oracle = false;

    std::string str() const;
};

using Operator = std::variant<Circuit, PathSum>;
VerifyResult verify_equiv(const Operator &a, const Operator &b, VerifyOptions opts = {});

/// simulate, then synthesize over the high-level gate set, then verify.
Circuit decompile(const Circuit &c, SynthOptions opts = {}, VerifyOptions vopts = {});

struct CliffordPassOptions {
    size_t min_run = 4;
    bool ignore_global_phase = false;
};

struct CliffordPassReport {
    Circuit circuit;
    size_t runs_replaced = 0;
    CircuitStats before;
    CircuitStats after;
    Verdict verdict = Verdict::Inconclusive;
};

/// Resynthesizes maximal runs of Clifford gates.
CliffordPassReport clifford_pass(const Circuit &c, CliffordPassOptions opts = {});

}  // namespace pss

#endif
