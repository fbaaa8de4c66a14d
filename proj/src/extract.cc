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

#include "pss/extract.h"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>

#include "pss/error.h"
#include "pss/rewrite.h"

namespace pss {

void SynthState::apply(const Gate &g) {
    apply_gate(current, g);
    applied.push_back(g);
}

Circuit SynthState::circuit(Dyadic phase) const {
    Circuit c(current.num_outputs());
    if (!phase.is_zero()) {
        c.append(GateName::GPhase, {}, phase);
    }
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        c.append(it->inverse());
    }
    return c;
}

Gate phase_gate(std::vector<uint32_t> qubits, Dyadic angle) {
    std::sort(qubits.begin(), qubits.end());
    switch (qubits.size()) {
        case 0:
            return Gate{GateName::GPhase, {}, angle};
        case 1:
            if (angle == Dyadic::half()) {
                return Gate{GateName::Z, qubits, {}};
            }
            if (angle == Dyadic::quarter()) {
                return Gate{GateName::S, qubits, {}};
            }
            if (angle == Dyadic::make(3, 2)) {
                return Gate{GateName::Sdg, qubits, {}};
            }
            if (angle == Dyadic::eighth()) {
                return Gate{GateName::T, qubits, {}};
            }
            if (angle == Dyadic::make(7, 3)) {
                return Gate{GateName::Tdg, qubits, {}};
            }
            return Gate{GateName::RZ, qubits, angle};
        case 2:
            if (angle == Dyadic::half()) {
                return Gate{GateName::CZ, qubits, {}};
            }
            return Gate{GateName::CRZ, qubits, angle};
        case 3:
            if (angle == Dyadic::half()) {
                return Gate{GateName::CCZ, qubits, {}};
            }
            return Gate{GateName::MCRZ, qubits, angle};
        default:
            return Gate{GateName::MCRZ, qubits, angle};
    }
}

// ---------------------------------------------------------------- reduction

std::optional<Reducible> find_reducible(const PathSum &p) {
    std::map<uint32_t, int> bare_at;
    std::map<uint32_t, int> occurrences;
    for (uint32_t j = 0; j < p.num_outputs(); j++) {
        Var v;
        if (p.outputs[j].is_single_var(&v) && v.is_path()) {
            bare_at[v.index()] = static_cast<int>(j);
        }
        for (Var w : p.outputs[j].vars()) {
            if (w.is_path()) {
                occurrences[w.index()]++;
            }
        }
    }
    for (const auto &[idx, j] : bare_at) {
        if (occurrences[idx] != 1) {
            continue;
        }
        Var z = Var::path(idx);
        auto [q, r] = quotient(p.phase, z);
        if (q.max_log2den() > 1) {
            continue;
        }
        return Reducible{z, static_cast<uint32_t>(j), half_part(q)};
    }
    return std::nullopt;
}

void h_reduce(PathSum &p, const Reducible &r) {
    auto [q, rest] = quotient(p.phase, r.var);
    p.phase = std::move(rest);
    p.outputs[r.qubit] = r.q;
    p.remove_path(r.var.index());
    p.sqrt2 -= 1;
}

// ---------------------------------------------------------------- affine

namespace {

using Row = boost::dynamic_bitset<>;

}  // namespace

bool affine_simplify(SynthState &st) {
    PathSum &p = st.current;
    uint32_t n = p.num_outputs();
    // Columns: every non-constant monomial in canonical order.
    std::vector<Monomial> cols;
    for (const auto &f : p.outputs) {
        for (const auto &m : f.terms()) {
            if (!m.is_constant()) {
                cols.push_back(m);
            }
        }
    }
    std::sort(cols.begin(), cols.end(), MonoLess());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<Row> rows(n, Row(cols.size()));
    for (uint32_t j = 0; j < n; j++) {
        for (const auto &m : p.outputs[j].terms()) {
            if (!m.is_constant()) {
                auto it = std::lower_bound(cols.begin(), cols.end(), m, MonoLess());
                rows[j].set(static_cast<size_t>(it - cols.begin()));
            }
        }
    }
    size_t before = 0;
    for (const auto &r : rows) {
        before += r.count();
    }

    std::vector<std::pair<uint32_t, uint32_t>> ops;  // (control, target)
    std::vector<Row> work = rows;
    std::vector<bool> pivoted(n, false);
    for (size_t c = 0; c < cols.size(); c++) {
        int best = -1;
        Var v;
        bool single_input = cols[c].degree() == 1 && cols[c].top().is_input();
        for (uint32_t r = 0; r < n; r++) {
            if (pivoted[r] || !work[r][c]) {
                continue;
            }
            if (single_input && cols[c].top().index() == r) {
                best = static_cast<int>(r);
                break;
            }
            if (best < 0 || work[r].count() < work[best].count()) {
                best = static_cast<int>(r);
            }
        }
        (void)v;
        if (best < 0) {
            continue;
        }
        pivoted[best] = true;
        for (uint32_t r = 0; r < n; r++) {
            if (r != static_cast<uint32_t>(best) && work[r][c]) {
                work[r] ^= work[best];
                ops.emplace_back(best, r);
            }
        }
    }
    size_t after = 0;
    for (const auto &r : work) {
        after += r.count();
    }
    if (after > before) {
        // Fall back to greedy row additions that strictly shrink a row.
        ops.clear();
        work = rows;
        while (true) {
            size_t gain = 0;
            std::pair<uint32_t, uint32_t> pick;
            for (uint32_t i = 0; i < n; i++) {
                for (uint32_t j = 0; j < n; j++) {
                    if (i == j) {
                        continue;
                    }
                    size_t w = (work[i] ^ work[j]).count();
                    if (w < work[i].count() && work[i].count() - w > gain) {
                        gain = work[i].count() - w;
                        pick = {j, i};
                    }
                }
            }
            if (gain == 0) {
                break;
            }
            work[pick.second] ^= work[pick.first];
            ops.push_back(pick);
        }
    }
    for (const auto &[ctl, tgt] : ops) {
        st.apply(Gate{GateName::CX, {ctl, tgt}, {}});
    }
    bool emitted = !ops.empty();
    for (uint32_t j = 0; j < n; j++) {
        if (p.outputs[j].has_constant()) {
            st.apply(Gate{GateName::X, {j}, {}});
            emitted = true;
        }
    }
    return emitted;
}

// ---------------------------------------------------------------- phase

namespace {

PhasePoly subst_monomial(const PhasePoly &p, const Monomial &l, const BoolPoly &rep) {
    PhasePoly r;
    for (const auto &[m, c] : p.terms()) {
        if (l.subset_of(m)) {
            Monomial rest = m;
            for (Var v : l.vars()) {
                rest = rest.without(v);
            }
            r.add_mono_lift(rest, rep, c);
        } else {
            r.add(m, c);
        }
    }
    return r;
}

BoolPoly subst_monomial(const BoolPoly &f, const Monomial &l, const BoolPoly &rep) {
    std::vector<Monomial> keep;
    BoolPoly hit;
    for (const auto &m : f.terms()) {
        if (l.subset_of(m)) {
            Monomial rest = m;
            for (Var v : l.vars()) {
                rest = rest.without(v);
            }
            hit += BoolPoly(rest) * rep;
        } else {
            keep.push_back(m);
        }
    }
    return BoolPoly::from_terms(std::move(keep)) + hit;
}

}  // namespace

Frame frame_phase(const PathSum &p) {
    Frame fr;
    fr.framed = p.phase;
    std::vector<BoolPoly> outs = p.outputs;
    for (uint32_t i = 0; i < outs.size(); i++) {
        const Monomial *pick = nullptr;
        for (const auto &m : outs[i].terms()) {
            bool single_frame = m.degree() == 1 && m.top().kind() == VarKind::Frame;
            if (!m.is_constant() && !single_frame) {
                pick = &m;
                break;
            }
        }
        if (pick == nullptr) {
            continue;
        }
        Monomial l = *pick;
        BoolPoly rep = BoolPoly(Var::frame(i)) + outs[i] + BoolPoly(l);
        fr.framed = subst_monomial(fr.framed, l, rep);
        for (uint32_t j = i + 1; j < outs.size(); j++) {
            outs[j] = subst_monomial(outs[j], l, rep);
        }
        fr.rewrites.emplace_back(std::move(l), std::move(rep));
    }
    return fr;
}

PhasePoly unframe(const PathSum &p, const PhasePoly &framed) {
    VarMap back;
    for (uint32_t i = 0; i < p.num_outputs(); i++) {
        back[Var::frame(i)] = p.outputs[i];
    }
    return subst_many(framed, back);
}

bool phase_simplify(SynthState &st) {
    Frame fr = frame_phase(st.current);
    std::vector<Gate> gates;
    for (const auto &[m, c] : fr.framed.terms()) {
        if (m.is_constant() || !m.all_of_kind(VarKind::Frame)) {
            continue;
        }
        std::vector<uint32_t> qubits;
        for (Var v : m.vars()) {
            qubits.push_back(v.index());
        }
        gates.push_back(phase_gate(std::move(qubits), -c));
    }
    for (const auto &g : gates) {
        st.apply(g);
    }
    return !gates.empty();
}

// ---------------------------------------------------------------- nonlinear

bool nonlinear_simplify(SynthState &st) {
    PathSum &p = st.current;
    std::map<Var, uint32_t> exposed;
    for (uint32_t j = 0; j < p.num_outputs(); j++) {
        Var v;
        if (p.outputs[j].is_single_var(&v) && !exposed.count(v)) {
            exposed[v] = j;
        }
    }
    bool emitted = false;
    for (uint32_t j = 0; j < p.num_outputs(); j++) {
        std::vector<Monomial> targets;
        for (const auto &m : p.outputs[j].terms()) {
            if (m.degree() < 2) {
                continue;
            }
            bool ok = true;
            for (Var v : m.vars()) {
                auto it = exposed.find(v);
                if (it == exposed.end() || it->second == j) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                targets.push_back(m);
            }
        }
        for (const auto &m : targets) {
            std::vector<uint32_t> qubits;
            for (Var v : m.vars()) {
                qubits.push_back(exposed[v]);
            }
            std::sort(qubits.begin(), qubits.end());
            qubits.push_back(j);
            GateName name = qubits.size() == 3 ? GateName::CCX : GateName::MCX;
            st.apply(Gate{name, std::move(qubits), {}});
            emitted = true;
        }
    }
    return emitted;
}

// ---------------------------------------------------------------- degree reduction

size_t blocking_score(const PathSum &p) {
    size_t score = 0;
    for (const auto &[m, c] : p.phase.terms()) {
        if (c.log2den() >= 2 && m.any_of_kind(VarKind::Path)) {
            score++;
        }
    }
    return score;
}

namespace {

// Monomials whose coefficient in y's quotient is an odd multiple of 1/4.
std::vector<Monomial> quarter_part(const PathSum &p, Var y, bool *finer) {
    auto [q, r] = quotient(p.phase, y);
    std::vector<Monomial> out;
    *finer = false;
    for (const auto &[m, c] : q.terms()) {
        if (c.log2den() == 2) {
            out.push_back(m);
        } else if (c.log2den() > 2) {
            *finer = true;
        }
    }
    return out;
}

bool quotient_is_half(const PathSum &p, Var y) {
    return quotient(p.phase, y).first.max_log2den() <= 1;
}

// Solves sum_i s_i * cols[i] = target over Z2 (vectors as sorted monomial
// sets). Returns the indicator vector if consistent.
std::optional<std::vector<bool>> solve_z2(
    const std::vector<std::vector<Monomial>> &cols, const std::vector<Monomial> &target) {
    std::vector<Monomial> basis;
    for (const auto &c : cols) {
        basis.insert(basis.end(), c.begin(), c.end());
    }
    basis.insert(basis.end(), target.begin(), target.end());
    std::sort(basis.begin(), basis.end(), MonoLess());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    size_t rows = basis.size();
    size_t nc = cols.size();
    auto index = [&](const Monomial &m) {
        return static_cast<size_t>(std::lower_bound(basis.begin(), basis.end(), m, MonoLess()) - basis.begin());
    };
    // Augmented matrix, one bitset per row of length nc + 1.
    std::vector<Row> a(rows, Row(nc + 1));
    for (size_t i = 0; i < nc; i++) {
        for (const auto &m : cols[i]) {
            a[index(m)].flip(i);
        }
    }
    for (const auto &m : target) {
        a[index(m)].flip(nc);
    }
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < rows; c++) {
        size_t s = r;
        while (s < rows && !a[s][c]) {
            s++;
        }
        if (s == rows) {
            continue;
        }
        std::swap(a[r], a[s]);
        for (size_t t = 0; t < rows; t++) {
            if (t != r && a[t][c]) {
                a[t] ^= a[r];
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    for (size_t t = r; t < rows; t++) {
        if (a[t][nc]) {
            return std::nullopt;
        }
    }
    std::vector<bool> s(nc, false);
    for (size_t t = 0; t < pivot_col.size(); t++) {
        s[pivot_col[t]] = a[t][nc];
    }
    return s;
}

}  // namespace

bool degree_reduce(PathSum &p, Var y) {
    size_t score = blocking_score(p);
    bool finer = false;
    std::vector<Monomial> target = quarter_part(p, y, &finer);
    if (!target.empty() && !finer) {
        std::sort(target.begin(), target.end(), MonoLess());
        // Effect of each single substitution x <- x + y on y's quarter part.
        std::vector<Var> cands;
        std::vector<std::vector<Monomial>> deltas;
        for (uint32_t j : p.pathvars) {
            Var x = Var::path(j);
            if (x == y || quotient(p.phase, x).first.max_log2den() > 2) {
                continue;
            }
            PathSum trial = p;
            apply_subst(trial, x, BoolPoly(y));
            bool f2 = false;
            std::vector<Monomial> after = quarter_part(trial, y, &f2);
            std::sort(after.begin(), after.end(), MonoLess());
            std::vector<Monomial> delta;
            std::set_symmetric_difference(
                after.begin(), after.end(), target.begin(), target.end(), std::back_inserter(delta), MonoLess());
            if (!delta.empty() && !f2) {
                cands.push_back(x);
                deltas.push_back(std::move(delta));
            }
        }
        if (auto s = solve_z2(deltas, target)) {
            PathSum trial = p;
            bool any = false;
            for (size_t i = 0; i < cands.size(); i++) {
                if ((*s)[i]) {
                    apply_subst(trial, cands[i], BoolPoly(y));
                    any = true;
                }
            }
            if (any && (quotient_is_half(trial, y) || blocking_score(trial) < score)) {
                p = std::move(trial);
                return true;
            }
        }
    }
    for (uint32_t j : p.pathvars) {
        Var x = Var::path(j);
        if (x == y) {
            continue;
        }
        PathSum trial = p;
        apply_subst(trial, x, BoolPoly(y));
        if (blocking_score(trial) < score) {
            p = std::move(trial);
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------- driver

namespace {

bool outputs_identity(const PathSum &p) {
    for (uint32_t j = 0; j < p.num_outputs(); j++) {
        if (!p.outputs[j].is_var(Var::input(j))) {
            return false;
        }
    }
    return true;
}

bool phase_constant(const PathSum &p) {
    for (const auto &[m, c] : p.phase.terms()) {
        if (!m.is_constant()) {
            return false;
        }
    }
    return true;
}

// Swaps outputs that are a permutation of the inputs into place.
bool unpermute(SynthState &st) {
    PathSum &p = st.current;
    uint32_t n = p.num_outputs();
    std::vector<bool> seen(n, false);
    for (const auto &f : p.outputs) {
        Var v;
        if (!f.is_single_var(&v) || !v.is_input() || v.index() >= n || seen[v.index()]) {
            return false;
        }
        seen[v.index()] = true;
    }
    bool emitted = false;
    for (uint32_t j = 0; j < n; j++) {
        if (p.outputs[j].is_var(Var::input(j))) {
            continue;
        }
        for (uint32_t i = j + 1; i < n; i++) {
            if (p.outputs[i].is_var(Var::input(j))) {
                st.apply(Gate{GateName::Swap, {j, i}, {}});
                emitted = true;
                break;
            }
        }
    }
    return emitted;
}

void trace(const SynthOptions &opts, const std::string &what, const SynthState &st) {
    if (opts.trace != nullptr) {
        *opts.trace << "# " << what << " (" << st.applied.size() << " gates applied)\n" << st.current.str() << "\n";
    }
}

}  // namespace

Circuit synthesize(const PathSum &p, SynthOptions opts) {
    if (p.inputs != p.num_outputs()) {
        throw Error(ErrorKind::DimensionMismatch, "synthesis needs a square sum");
    }
    SynthState st(p);
    normalize_in_place(st.current);
    size_t budget = 4 * st.current.num_paths() + 4;
    size_t iterations = 0;
    trace(opts, "start", st);
    while (st.current.num_paths() > 0) {
        if (++iterations > budget) {
            throw Error(ErrorKind::SynthesisIncomplete, "iteration budget exhausted", st.current.to_json());
        }
        if (auto r = find_reducible(st.current)) {
            h_reduce(st.current, *r);
            st.applied.push_back(Gate{GateName::H, {r->qubit}, {}});
            normalize_in_place(st.current);
            trace(opts, "h " + std::to_string(r->qubit), st);
            continue;
        }
        affine_simplify(st);
        phase_simplify(st);
        nonlinear_simplify(st);
        phase_simplify(st);
        size_t k = st.current.num_paths();
        normalize_in_place(st.current);
        trace(opts, "simplified", st);
        if (st.current.num_paths() < k || find_reducible(st.current)) {
            continue;
        }
        bool progress = false;
        for (auto it = st.current.pathvars.rbegin(); it != st.current.pathvars.rend(); ++it) {
            if (degree_reduce(st.current, Var::path(*it))) {
                progress = true;
                break;
            }
        }
        if (!progress) {
            throw Error(ErrorKind::SynthesisIncomplete, "no variable can be reduced", st.current.to_json());
        }
        trace(opts, "degree reduced", st);
    }
    if (st.current.sqrt2 != 0) {
        throw Error(ErrorKind::ResidualNotPermutation, "residual is not unitary", st.current.to_json());
    }
    size_t rounds = 2 * static_cast<size_t>(st.current.num_outputs()) + 4;
    for (size_t round = 0; round < rounds; round++) {
        if (outputs_identity(st.current) && phase_constant(st.current)) {
            break;
        }
        bool changed = affine_simplify(st);
        changed |= phase_simplify(st);
        changed |= nonlinear_simplify(st);
        changed |= unpermute(st);
        changed |= phase_simplify(st);
        if (!changed) {
            break;
        }
    }
    trace(opts, "residual", st);
    if (!outputs_identity(st.current)) {
        throw Error(ErrorKind::ResidualNotPermutation, "residual outputs are not reducible", st.current.to_json());
    }
    if (!phase_constant(st.current)) {
        throw Error(ErrorKind::SynthesisIncomplete, "residual phase is not constant", st.current.to_json());
    }
    return st.circuit(opts.ignore_global_phase ? Dyadic() : st.current.phase.constant_term());
}

}  // namespace pss
