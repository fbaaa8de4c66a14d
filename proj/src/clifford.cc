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

#include "pss/clifford.h"

#include <boost/dynamic_bitset.hpp>

#include "pss/error.h"

namespace pss {

namespace {

using Row = boost::dynamic_bitset<>;

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorKind::MalformedNormalForm, what);
}

uint32_t position_of(const std::vector<uint32_t> &pathvars, Var y) {
    auto it = std::lower_bound(pathvars.begin(), pathvars.end(), y.index());
    if (it == pathvars.end() || *it != y.index()) {
        malformed("unknown path variable " + y.str());
    }
    return static_cast<uint32_t>(it - pathvars.begin());
}

// CNOTs (control, target), in application order, realizing x -> A x for an
// invertible square A. Returns false when A is singular.
bool cnot_synth(std::vector<Row> a, std::vector<std::pair<uint32_t, uint32_t>> *out) {
    size_t n = a.size();
    std::vector<std::pair<uint32_t, uint32_t>> ops;
    for (size_t c = 0; c < n; c++) {
        if (!a[c][c]) {
            size_t r = c + 1;
            while (r < n && !a[r][c]) {
                r++;
            }
            if (r == n) {
                return false;
            }
            a[c] ^= a[r];
            ops.emplace_back(static_cast<uint32_t>(r), static_cast<uint32_t>(c));
        }
        for (size_t r = 0; r < n; r++) {
            if (r != c && a[r][c]) {
                a[r] ^= a[c];
                ops.emplace_back(static_cast<uint32_t>(c), static_cast<uint32_t>(r));
            }
        }
    }
    out->assign(ops.rbegin(), ops.rend());
    return true;
}

void emit_phase_power(Circuit &c, uint32_t power, uint32_t q) {
    switch (power % 4) {
        case 1:
            c.append(GateName::S, {q});
            break;
        case 2:
            c.append(GateName::Z, {q});
            break;
        case 3:
            c.append(GateName::Sdg, {q});
            break;
        default:
            break;
    }
}

Circuit synthesize_parts(const PathSum &p, const NormalFormParts &parts, CliffordSynthOptions opts) {
    uint32_t m = p.inputs;
    uint32_t n = p.num_outputs();
    uint32_t k = p.num_paths();
    if (p.sqrt2 != static_cast<int64_t>(k)) {
        throw Error(
            ErrorKind::NonUnitary,
            "normalization 2^(-" + std::to_string(p.sqrt2) + "/2) does not match " + std::to_string(k) +
                " path variables");
    }
    std::vector<int> owned_by(n, -1);
    for (uint32_t pos = 0; pos < k; pos++) {
        owned_by[parts.owner[pos]] = static_cast<int>(pos);
    }

    // Rows of the linear map feeding the Hadamard layer: R_i at owned
    // positions, fx_j elsewhere.
    std::vector<Row> a(n, Row(m));
    for (uint32_t j = 0; j < n; j++) {
        const BoolPoly &src = owned_by[j] >= 0 ? parts.R[owned_by[j]] : parts.fx[j];
        for (const auto &mono : src.terms()) {
            a[j].set(mono.top().index());
        }
    }
    // Complete to an invertible n x n map; ancilla columns m..n-1 take unit
    // vectors on rows outside a pivot set.
    std::vector<Row> reduced = a;
    std::vector<bool> pivot(n, false);
    for (uint32_t col = 0; col < m; col++) {
        uint32_t r = 0;
        while (r < n && (pivot[r] || !reduced[r][col])) {
            r++;
        }
        if (r == n) {
            throw Error(
                m == n ? ErrorKind::NonUnitary : ErrorKind::NotIsometry,
                "the map feeding the Hadamard layer is singular");
        }
        pivot[r] = true;
        for (uint32_t s = 0; s < n; s++) {
            if (s != r && reduced[s][col]) {
                reduced[s] ^= reduced[r];
            }
        }
    }
    std::vector<Row> t(n, Row(n));
    uint32_t next_anc = m;
    for (uint32_t j = 0; j < n; j++) {
        for (uint32_t col = 0; col < m; col++) {
            t[j][col] = a[j][col];
        }
        if (!pivot[j]) {
            t[j].set(next_anc++);
        }
    }
    std::vector<std::pair<uint32_t, uint32_t>> cnots;
    if (!cnot_synth(t, &cnots)) {
        throw Error(ErrorKind::NonUnitary, "the map feeding the Hadamard layer is singular");
    }

    Circuit c(n);
    if (!opts.ignore_global_phase && parts.l % 8 != 0) {
        c.append(GateName::GPhase, {}, Dyadic::make(parts.l % 8, 3));
    }
    for (const auto &[v, power] : parts.Lx) {
        emit_phase_power(c, power, v.index());
    }
    for (const auto &[u, v] : parts.Qx) {
        c.append(GateName::CZ, {u.index(), v.index()});
    }
    for (const auto &[ctl, tgt] : cnots) {
        c.append(GateName::CX, {ctl, tgt});
    }
    for (uint32_t pos = 0; pos < k; pos++) {
        c.append(GateName::H, {parts.owner[pos]});
    }
    for (uint32_t j = 0; j < n; j++) {
        if (owned_by[j] >= 0) {
            continue;
        }
        for (const auto &mono : parts.fy[j].terms()) {
            uint32_t pos = position_of(p.pathvars, mono.top());
            c.append(GateName::CX, {parts.owner[pos], j});
        }
    }
    for (uint32_t j = 0; j < n; j++) {
        if (parts.b[j]) {
            c.append(GateName::X, {j});
        }
    }
    for (const auto &[u, v] : parts.Qy) {
        c.append(GateName::CZ, {parts.owner[position_of(p.pathvars, u)], parts.owner[position_of(p.pathvars, v)]});
    }
    for (const auto &[v, power] : parts.Ly) {
        emit_phase_power(c, power, parts.owner[position_of(p.pathvars, v)]);
    }
    return c;
}

Circuit synth_common(const PathSum &p, CliffordSynthOptions opts) {
    if (classify(p) != SumClass::Clifford) {
        throw Error(ErrorKind::NotClifford, "sum is not Clifford");
    }
    CliffordNormalForm nf = normal_form_clifford(p);
    NormalFormParts parts = decompose(nf);
    return synthesize_parts(nf.sum, parts, opts);
}

}  // namespace

PathSum NormalFormParts::reassemble(uint32_t inputs, const std::vector<uint32_t> &pathvars, int64_t sqrt2) const {
    PathSum p;
    p.inputs = inputs;
    p.pathvars = pathvars;
    p.sqrt2 = sqrt2;
    p.phase.add(Monomial(), Dyadic::make(l, 3));
    for (const auto *lin : {&Lx, &Ly}) {
        for (const auto &[v, c] : *lin) {
            p.phase.add(Monomial(v), Dyadic::make(c, 2));
        }
    }
    for (const auto *quad : {&Qx, &Qy}) {
        for (const auto &[u, v] : *quad) {
            p.phase.add(Monomial::of({u, v}), Dyadic::half());
        }
    }
    for (size_t pos = 0; pos < R.size(); pos++) {
        p.phase.add_mono_lift(Monomial(Var::path(pathvars[pos])), R[pos], Dyadic::half());
    }
    for (size_t j = 0; j < fx.size(); j++) {
        p.outputs.push_back(fx[j] + fy[j] + BoolPoly::constant(b[j]));
    }
    return p;
}

NormalFormParts decompose(const CliffordNormalForm &nf) {
    const PathSum &p = nf.sum;
    NormalFormParts parts;
    parts.owner = nf.owner;
    parts.R.assign(p.num_paths(), BoolPoly());
    if (nf.owner.size() != p.num_paths()) {
        malformed("ownership map does not cover the path variables");
    }
    for (const auto &[m, c] : p.phase.terms()) {
        switch (m.degree()) {
            case 0:
                if (c.log2den() > 3) {
                    malformed("global phase " + c.str() + " is not a power of omega");
                }
                parts.l = static_cast<uint32_t>(c.num() << (3 - c.log2den()));
                break;
            case 1: {
                if (c.log2den() > 2) {
                    malformed("linear coefficient " + c.str() + " on " + m.str());
                }
                uint32_t z4 = static_cast<uint32_t>(c.num() << (2 - c.log2den()));
                (m.top().is_input() ? parts.Lx : parts.Ly)[m.top()] = z4;
                break;
            }
            case 2: {
                if (c != Dyadic::half()) {
                    malformed("quadratic coefficient " + c.str() + " on " + m.str());
                }
                Var hi = m.vars()[0];
                Var lo = m.vars()[1];
                if (hi.is_input()) {
                    parts.Qx.emplace_back(lo, hi);
                } else if (lo.is_path()) {
                    parts.Qy.emplace_back(lo, hi);
                } else {
                    parts.R[position_of(p.pathvars, hi)] += BoolPoly(lo);
                }
                break;
            }
            default:
                malformed("phase term " + m.str() + " has degree above 2");
        }
    }
    for (uint32_t j = 0; j < p.num_outputs(); j++) {
        BoolPoly fx;
        BoolPoly fy;
        bool b = false;
        for (const auto &m : p.outputs[j].terms()) {
            if (m.is_constant()) {
                b = true;
            } else if (m.degree() > 1) {
                malformed("output " + std::to_string(j) + " is not affine");
            } else if (m.top().is_input()) {
                fx.toggle(m);
            } else {
                fy.toggle(m);
            }
        }
        parts.fx.push_back(std::move(fx));
        parts.fy.push_back(std::move(fy));
        parts.b.push_back(b);
    }
    for (uint32_t pos = 0; pos < p.num_paths(); pos++) {
        uint32_t j = nf.owner[pos];
        if (j >= p.num_outputs() || !p.outputs[j].is_var(Var::path(p.pathvars[pos]))) {
            malformed("path variable " + Var::path(p.pathvars[pos]).str() + " does not own its output");
        }
    }
    return parts;
}

Circuit synth_clifford(const PathSum &p, CliffordSynthOptions opts) {
    if (p.inputs != p.num_outputs()) {
        throw Error(ErrorKind::NotClifford, "Clifford synthesis needs a square sum");
    }
    return synth_common(p, opts);
}

Circuit synth_isometry(const PathSum &p, CliffordSynthOptions opts) {
    if (p.inputs > p.num_outputs()) {
        throw Error(ErrorKind::NotIsometry, "more inputs than outputs");
    }
    try {
        return synth_common(p, opts);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NonUnitary && p.inputs < p.num_outputs()) {
            throw Error(ErrorKind::NotIsometry, e.what());
        }
        throw;
    }
}

// ---------------------------------------------------------------- profile

StageProfile stage_profile(const Circuit &c) {
    StageProfile prof;
    size_t stage = 0;
    for (const auto &g : c.gates) {
        std::vector<size_t> options;
        switch (g.name) {
            case GateName::GPhase:
                options = {0};
                break;
            case GateName::S:
            case GateName::Sdg:
            case GateName::Z:
                options = {1, 8};
                break;
            case GateName::CZ:
                options = {2, 7};
                break;
            case GateName::CX:
                options = {3, 5};
                break;
            case GateName::H:
                options = {4};
                break;
            case GateName::X:
                options = {6};
                break;
            case GateName::Swap:
                options = {9};
                break;
            default:
                break;
        }
        bool placed = false;
        for (size_t s : options) {
            if (s >= stage) {
                stage = s;
                prof.counts[s]++;
                placed = true;
                break;
            }
        }
        if (!placed) {
            prof.conforming = false;
        }
    }
    return prof;
}

std::string StageProfile::str() const {
    std::string s = conforming ? "conforming" : "non-conforming";
    for (size_t i = 0; i < kNames.size(); i++) {
        s += std::string(" ") + kNames[i] + "=" + std::to_string(counts[i]);
    }
    return s;
}

std::string StageProfile::to_json() const {
    std::string s = "{\"stages\": {";
    for (size_t i = 0; i < kNames.size(); i++) {
        s += std::string(i ? ", " : "") + "\"" + kNames[i] + "\": " + std::to_string(counts[i]);
    }
    s += std::string("}, \"conforming\": ") + (conforming ? "true" : "false") + "}";
    return s;
}

}  // namespace pss
