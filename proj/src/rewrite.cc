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

#include "pss/rewrite.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pss/error.h"

namespace pss {

std::string RuleApplication::str() const {
    static const char *kNames[] = {"elim", "hh", "omega", "subst"};
    std::string s = kNames[static_cast<int>(rule)];
    for (Var v : eliminated) {
        s += " " + v.str();
    }
    if (substitution.has_value()) {
        s += " [" + substitution->first.str() + " <- ";
        if (rule == Rule::Subst) {
            s += substitution->first.str() + " + ";
        }
        s += substitution->second.str() + "]";
    }
    return s;
}

namespace {

bool in_outputs(const PathSum &p, Var y) {
    for (const auto &f : p.outputs) {
        if (f.contains_var(y)) {
            return true;
        }
    }
    return false;
}

void require_path(const PathSum &p, Var y) {
    if (!y.is_path() || !p.has_path(y.index())) {
        throw Error(ErrorKind::NotApplicable, y.str() + " is not a path variable");
    }
}

bool all_half(const PhasePoly &q) {
    for (const auto &[m, c] : q.terms()) {
        if (c.log2den() > 1) {
            return false;
        }
    }
    return true;
}

// Given the half-part F of y's quotient, the smallest path variable x != y
// occurring in F only as the linear monomial x.
std::optional<Var> hh_target(const PathSum &p, const BoolPoly &f, Var y) {
    std::optional<Var> best;
    for (const auto &m : f.terms()) {
        if (m.degree() != 1) {
            continue;
        }
        Var x = m.top();
        if (!x.is_path() || x == y || !p.has_path(x.index())) {
            continue;
        }
        if (best.has_value() && best->index() < x.index()) {
            continue;
        }
        bool elsewhere = false;
        for (const auto &other : f.terms()) {
            if (other.degree() > 1 && other.contains(x)) {
                elsewhere = true;
                break;
            }
        }
        if (!elsewhere) {
            best = x;
        }
    }
    return best;
}

void do_hh(PathSum &p, Var y, Var x, const BoolPoly &f, PhasePoly rest) {
    p.phase = subst_phase(rest, x, f);
    for (auto &out : p.outputs) {
        out = subst_bool(out, x, f);
    }
    p.remove_path(x.index());
    p.remove_path(y.index());
    p.sqrt2 -= 2;
}

// Omega applies when q = c + (1/2) lift(f) with c in {1/4, 3/4}.
bool omega_shape(const PhasePoly &q, Dyadic *c, BoolPoly *f) {
    Dyadic k = q.constant_term();
    if (k != Dyadic::quarter() && k != Dyadic::make(3, 2)) {
        return false;
    }
    std::vector<Monomial> terms;
    for (const auto &[m, coeff] : q.terms()) {
        if (m.is_constant()) {
            continue;
        }
        if (coeff != Dyadic::half()) {
            return false;
        }
        terms.push_back(m);
    }
    *c = k;
    *f = BoolPoly::from_terms(std::move(terms));
    return true;
}

void do_omega(PathSum &p, Var y, Dyadic c, const BoolPoly &f, PhasePoly rest) {
    p.phase = std::move(rest);
    if (c == Dyadic::quarter()) {
        p.phase.add(Monomial(), Dyadic::eighth());
        p.phase.add_lift(f, Dyadic::make(3, 2));
    } else {
        p.phase.add(Monomial(), Dyadic::make(7, 3));
        p.phase.add_lift(f, Dyadic::quarter());
    }
    p.remove_path(y.index());
    p.sqrt2 -= 1;
}

}  // namespace

bool try_elim(PathSum &p, Var y, RuleApplication *app) {
    require_path(p, y);
    if (p.phase.contains_var(y) || in_outputs(p, y)) {
        return false;
    }
    p.remove_path(y.index());
    p.sqrt2 -= 2;
    if (app != nullptr) {
        *app = {Rule::Elim, {y}, std::nullopt};
    }
    return true;
}

bool try_hh(PathSum &p, Var y, RuleApplication *app) {
    require_path(p, y);
    if (in_outputs(p, y)) {
        return false;
    }
    auto [q, r] = quotient(p.phase, y);
    if (!all_half(q)) {
        return false;
    }
    BoolPoly half = half_part(q);
    auto x = hh_target(p, half, y);
    if (!x.has_value()) {
        return false;
    }
    BoolPoly f = half + BoolPoly(*x);
    if (app != nullptr) {
        *app = {Rule::HH, {y, *x}, std::make_pair(*x, f)};
    }
    do_hh(p, y, *x, f, std::move(r));
    return true;
}

bool try_omega(PathSum &p, Var y, RuleApplication *app) {
    require_path(p, y);
    if (in_outputs(p, y)) {
        return false;
    }
    auto [q, r] = quotient(p.phase, y);
    Dyadic c;
    BoolPoly f;
    if (!omega_shape(q, &c, &f)) {
        return false;
    }
    if (app != nullptr) {
        *app = {Rule::Omega, {y}, std::nullopt};
    }
    do_omega(p, y, c, f, std::move(r));
    return true;
}

void apply_subst(PathSum &p, Var y, const BoolPoly &f) {
    require_path(p, y);
    if (f.contains_var(y)) {
        throw Error(ErrorKind::NotApplicable, "substitution for " + y.str() + " mentions it");
    }
    for (Var v : f.vars()) {
        bool ok = (v.is_input() && v.index() < p.inputs) || (v.is_path() && p.has_path(v.index()));
        if (!ok) {
            throw Error(ErrorKind::NotApplicable, "substitution mentions unbound " + v.str());
        }
    }
    if (f.is_zero()) {
        return;
    }
    BoolPoly g = BoolPoly(y) + f;
    p.phase = subst_phase(p.phase, y, g);
    for (auto &out : p.outputs) {
        out = subst_bool(out, y, g);
    }
}

PathSum rule_elim(const PathSum &p, Var y) {
    PathSum r = p;
    if (!try_elim(r, y)) {
        throw Error(ErrorKind::NotApplicable, "elim does not apply to " + y.str());
    }
    return r;
}

PathSum rule_hh(const PathSum &p, Var y) {
    PathSum r = p;
    if (!try_hh(r, y)) {
        throw Error(ErrorKind::NotApplicable, "hh does not apply to " + y.str());
    }
    return r;
}

PathSum rule_omega(const PathSum &p, Var y) {
    PathSum r = p;
    if (!try_omega(r, y)) {
        throw Error(ErrorKind::NotApplicable, "omega does not apply to " + y.str());
    }
    return r;
}

PathSum rule_subst(const PathSum &p, Var y, const BoolPoly &f) {
    PathSum r = p;
    apply_subst(r, y, f);
    return r;
}

// ---------------------------------------------------------------- normalize

size_t normalize_in_place(PathSum &p, std::vector<RuleApplication> *log) {
    size_t applied = 0;
    while (!p.pathvars.empty()) {
        // One pass buckets every phase term under each path variable it
        // contains, giving all quotients at once.
        std::unordered_map<uint32_t, std::vector<std::pair<const Monomial *, Dyadic>>> buckets;
        for (const auto &[m, c] : p.phase.terms()) {
            for (Var v : m.vars()) {
                if (v.is_path()) {
                    buckets[v.index()].emplace_back(&m, c);
                }
            }
        }
        std::unordered_set<uint32_t> in_out;
        for (const auto &f : p.outputs) {
            for (const auto &m : f.terms()) {
                for (Var v : m.vars()) {
                    if (v.is_path()) {
                        in_out.insert(v.index());
                    }
                }
            }
        }
        bool progress = false;
        for (uint32_t j : p.pathvars) {
            if (in_out.count(j)) {
                continue;
            }
            Var y = Var::path(j);
            RuleApplication app;
            auto it = buckets.find(j);
            if (it == buckets.end()) {
                try_elim(p, y, &app);
                progress = true;
            } else {
                bool half = true;
                Dyadic k;
                bool omega_ok = true;
                for (const auto &[m, c] : it->second) {
                    if (c.log2den() > 1) {
                        half = false;
                    }
                    if (m->degree() == 1) {
                        k = c;
                    } else if (c != Dyadic::half()) {
                        omega_ok = false;
                    }
                }
                if (half) {
                    progress = try_hh(p, y, &app);
                } else if (omega_ok && (k == Dyadic::quarter() || k == Dyadic::make(3, 2))) {
                    progress = try_omega(p, y, &app);
                }
            }
            if (progress) {
                applied++;
                if (log != nullptr) {
                    log->push_back(std::move(app));
                }
                break;
            }
        }
        if (!progress) {
            break;
        }
    }
    return applied;
}

Normalized normalize(const PathSum &p) {
    Normalized r{p, {}};
    normalize_in_place(r.sum, &r.log);
    return r;
}

std::vector<uint32_t> normal_form_clifford_in_place(PathSum &p) {
    while (true) {
        normalize_in_place(p);
        // Give every path variable an output equal to it.
        std::vector<int> owner_of_output(p.outputs.size(), -1);
        std::vector<uint32_t> owner(p.pathvars.size(), UINT32_MAX);
        std::vector<uint32_t> stuck;
        for (size_t pos = 0; pos < p.pathvars.size(); pos++) {
            Var y = Var::path(p.pathvars[pos]);
            for (size_t j = 0; j < p.outputs.size(); j++) {
                if (owner_of_output[j] < 0 && p.outputs[j].contains(Monomial(y))) {
                    BoolPoly rest = p.outputs[j] + BoolPoly(y);
                    if (!rest.contains_var(y)) {
                        apply_subst(p, y, rest);
                        owner_of_output[j] = static_cast<int>(pos);
                        owner[pos] = static_cast<uint32_t>(j);
                        break;
                    }
                }
            }
            if (owner[pos] == UINT32_MAX) {
                stuck.push_back(p.pathvars[pos]);
            }
        }
        if (stuck.empty()) {
            return owner;
        }
        if (normalize_in_place(p) == 0) {
            std::string vars;
            for (uint32_t j : stuck) {
                vars += (vars.empty() ? "" : " ") + Var::path(j).str();
            }
            throw Error(ErrorKind::NotNormalizable, "no rule applies to " + vars, vars);
        }
    }
}

CliffordNormalForm normal_form_clifford(const PathSum &p) {
    CliffordNormalForm nf{p, {}};
    nf.owner = normal_form_clifford_in_place(nf.sum);
    return nf;
}

SumClass classify(const PathSum &p) {
    for (const auto &f : p.outputs) {
        if (f.degree() > 1) {
            return SumClass::General;
        }
    }
    for (const auto &[m, c] : p.phase.terms()) {
        unsigned d = c.log2den();
        size_t deg = m.degree();
        bool ok = (d <= 1 && deg <= 2) || (d == 2 && deg <= 1) || (d == 3 && deg == 0);
        if (!ok) {
            return SumClass::General;
        }
    }
    return SumClass::Clifford;
}

std::optional<Dyadic> identity_phase(const PathSum &p) {
    PathSum r = p;
    normalize_in_place(r);
    if (!r.pathvars.empty() && classify(r) == SumClass::Clifford) {
        try {
            normal_form_clifford_in_place(r);
        } catch (const Error &) {
            return std::nullopt;
        }
    }
    if (!r.pathvars.empty() || r.sqrt2 != 0 || r.inputs != r.outputs.size()) {
        return std::nullopt;
    }
    for (uint32_t i = 0; i < r.outputs.size(); i++) {
        if (!r.outputs[i].is_var(Var::input(i))) {
            return std::nullopt;
        }
    }
    for (const auto &[m, c] : r.phase.terms()) {
        if (!m.is_constant()) {
            return std::nullopt;
        }
    }
    return r.phase.constant_term();
}

bool is_identity(const PathSum &p) {
    return identity_phase(p).has_value();
}

bool is_identity_strict(const PathSum &p) {
    auto ph = identity_phase(p);
    return ph.has_value() && ph->is_zero();
}

Unitarity clifford_unitarity(const PathSum &p) {
    if (p.inputs != p.outputs.size()) {
        throw Error(ErrorKind::NotClifford, "unitarity needs a square sum");
    }
    if (classify(p) != SumClass::Clifford) {
        throw Error(ErrorKind::NotClifford, "sum is not Clifford");
    }
    PathSum d = dagger(p);
    if (identity_phase(compose(d, p)).has_value() && identity_phase(compose(p, d)).has_value()) {
        return Unitarity::Unitary;
    }
    return Unitarity::NonUnitary;
}

}  // namespace pss
