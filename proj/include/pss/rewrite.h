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

#ifndef PSS_REWRITE_H
#define PSS_REWRITE_H

#include <optional>
#include <string>
#include <vector>

#include "pss/pathsum.h"

namespace pss {

enum class Rule { Elim, HH, Omega, Subst };

struct RuleApplication {
    Rule rule = Rule::Elim;
    std::vector<Var> eliminated;
    /// For HH the substitution x <- f; for Subst the substitution y <- y + f.
    std::optional<std::pair<Var, BoolPoly>> substitution;

    std::string str() const;
};

/// sum_y |psi> = 2 |psi> when y occurs nowhere.
PathSum rule_elim(const PathSum &p, Var y);
/// sum_{x,y} (-1)^{y(x+f)} |psi(x)> = 2 |psi(f)>.
PathSum rule_hh(const PathSum &p, Var y);
/// sum_y i^y (-1)^{yf} |psi> = omega sqrt2 (-i)^f |psi>, and its conjugate.
PathSum rule_omega(const PathSum &p, Var y);
/// sum_y |psi(y)> = sum_y |psi(y + f)>.
PathSum rule_subst(const PathSum &p, Var y, const BoolPoly &f);

/// In-place variants returning false (and leaving p untouched) when the
/// rule does not apply.
bool try_elim(PathSum &p, Var y, RuleApplication *app = nullptr);
bool try_hh(PathSum &p, Var y, RuleApplication *app = nullptr);
bool try_omega(PathSum &p, Var y, RuleApplication *app = nullptr);
void apply_subst(PathSum &p, Var y, const BoolPoly &f);

/// Applies Elim, HH and Omega to a fixpoint, always to the smallest path
/// variable admitting one. Returns the number of applications.
size_t normalize_in_place(PathSum &p, std::vector<RuleApplication> *log = nullptr);

struct Normalized {
    PathSum sum;
    std::vector<RuleApplication> log;
};
Normalized normalize(const PathSum &p);

struct CliffordNormalForm {
    PathSum sum;
    /// owner[pos] is the output index equal to the path variable
    /// sum.pathvars[pos].
    std::vector<uint32_t> owner;
};

/// Normalizes a Clifford sum until every path variable is one output.
/// Throws NotNormalizable (detail: the stuck variables).
CliffordNormalForm normal_form_clifford(const PathSum &p);

/// In place; returns the owner map. Same errors.
std::vector<uint32_t> normal_form_clifford_in_place(PathSum &p);

enum class SumClass { Clifford, General };
SumClass classify(const PathSum &p);
inline bool is_clifford(const PathSum &p) {
    return classify(p) == SumClass::Clifford;
}

/// The global phase if p normalizes to the identity with unit scalar
/// magnitude, nothing otherwise.
std::optional<Dyadic> identity_phase(const PathSum &p);
bool is_identity(const PathSum &p);
bool is_identity_strict(const PathSum &p);

enum class Unitarity { Unitary, NonUnitary };
/// Throws NotClifford for non-Clifford or non-square sums.
Unitarity clifford_unitarity(const PathSum &p);

}  // namespace pss

#endif
