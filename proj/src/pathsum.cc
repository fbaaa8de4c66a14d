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

#include "pss/pathsum.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include "json.hpp"
#include "pss/error.h"

namespace pss {

PathSum PathSum::identity(uint32_t n) {
    PathSum p;
    p.inputs = n;
    for (uint32_t i = 0; i < n; i++) {
        p.outputs.emplace_back(Var::input(i));
    }
    return p;
}

bool PathSum::has_path(uint32_t j) const {
    return std::binary_search(pathvars.begin(), pathvars.end(), j);
}

Var PathSum::fresh_path() {
    uint32_t j = next_path_index();
    pathvars.push_back(j);
    return Var::path(j);
}

void PathSum::remove_path(uint32_t j) {
    auto it = std::lower_bound(pathvars.begin(), pathvars.end(), j);
    if (it != pathvars.end() && *it == j) {
        pathvars.erase(it);
    }
}

void PathSum::check_vars() const {
    auto check = [&](Var v) {
        bool ok = (v.is_input() && v.index() < inputs) || (v.is_path() && has_path(v.index()));
        if (!ok) {
            throw Error(ErrorKind::ParseError, "unbound variable " + v.str());
        }
    };
    for (const auto &[m, c] : phase.terms()) {
        for (Var v : m.vars()) {
            check(v);
        }
    }
    for (const auto &f : outputs) {
        for (const auto &m : f.terms()) {
            for (Var v : m.vars()) {
                check(v);
            }
        }
    }
}

void PathSum::compact_paths() {
    std::map<Var, Var> r;
    for (uint32_t i = 0; i < pathvars.size(); i++) {
        if (pathvars[i] != i) {
            r[Var::path(pathvars[i])] = Var::path(i);
        }
    }
    if (r.empty()) {
        return;
    }
    phase = rename(phase, r);
    for (auto &f : outputs) {
        f = rename(f, r);
    }
    for (uint32_t i = 0; i < pathvars.size(); i++) {
        pathvars[i] = i;
    }
}

// ---------------------------------------------------------------- gates

namespace {

BoolPoly product_of(const PathSum &p, const std::vector<uint32_t> &qubits, size_t count) {
    BoolPoly prod = BoolPoly::one();
    for (size_t i = 0; i < count; i++) {
        prod = prod * p.outputs[qubits[i]];
    }
    return prod;
}

}  // namespace

void apply_gate(PathSum &p, const Gate &g) {
    g.validate(p.num_outputs());
    const auto &q = g.qubits;
    switch (g.name) {
        case GateName::X:
            p.outputs[q[0]] += BoolPoly::one();
            break;
        case GateName::Z:
            p.phase.add_lift(p.outputs[q[0]], Dyadic::half());
            break;
        case GateName::S:
            p.phase.add_lift(p.outputs[q[0]], Dyadic::quarter());
            break;
        case GateName::Sdg:
            p.phase.add_lift(p.outputs[q[0]], -Dyadic::quarter());
            break;
        case GateName::T:
            p.phase.add_lift(p.outputs[q[0]], Dyadic::eighth());
            break;
        case GateName::Tdg:
            p.phase.add_lift(p.outputs[q[0]], -Dyadic::eighth());
            break;
        case GateName::RZ:
            p.phase.add_lift(p.outputs[q[0]], g.angle);
            break;
        case GateName::H: {
            Var y = p.fresh_path();
            p.phase.add_mono_lift(Monomial(y), p.outputs[q[0]], Dyadic::half());
            p.outputs[q[0]] = BoolPoly(y);
            p.sqrt2 += 1;
            break;
        }
        case GateName::CX:
            p.outputs[q[1]] += p.outputs[q[0]];
            break;
        case GateName::CZ:
        case GateName::CCZ:
            p.phase.add_lift(product_of(p, q, q.size()), Dyadic::half());
            break;
        case GateName::CRZ:
        case GateName::MCRZ:
            p.phase.add_lift(product_of(p, q, q.size()), g.angle);
            break;
        case GateName::Swap:
            std::swap(p.outputs[q[0]], p.outputs[q[1]]);
            break;
        case GateName::CCX:
        case GateName::MCX:
            p.outputs[q.back()] += product_of(p, q, q.size() - 1);
            break;
        case GateName::GPhase:
            p.phase.add(Monomial(), g.angle);
            break;
    }
}

PathSum gate_sum(const Gate &g) {
    Gate local = g;
    for (uint32_t i = 0; i < local.qubits.size(); i++) {
        local.qubits[i] = i;
    }
    PathSum p = PathSum::identity(static_cast<uint32_t>(local.qubits.size()));
    apply_gate(p, local);
    return p;
}

// ---------------------------------------------------------------- composition

PathSum compose(const PathSum &after, const PathSum &before) {
    if (before.num_outputs() != after.inputs) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "cannot compose: " + std::to_string(before.num_outputs()) + " outputs into " +
                std::to_string(after.inputs) + " inputs");
    }
    PathSum r;
    r.inputs = before.inputs;
    r.pathvars = before.pathvars;
    r.sqrt2 = before.sqrt2 + after.sqrt2;
    uint32_t offset = before.next_path_index();
    VarMap sub;
    for (uint32_t i = 0; i < after.inputs; i++) {
        sub[Var::input(i)] = before.outputs[i];
    }
    for (uint32_t pos = 0; pos < after.pathvars.size(); pos++) {
        sub[Var::path(after.pathvars[pos])] = BoolPoly(Var::path(offset + pos));
        r.pathvars.push_back(offset + pos);
    }
    r.phase = before.phase + subst_many(after.phase, sub);
    for (const auto &f : after.outputs) {
        r.outputs.push_back(subst_many(f, sub));
    }
    return r;
}

PathSum tensor(const PathSum &a, const PathSum &b) {
    PathSum r = a;
    std::map<Var, Var> ren;
    for (uint32_t i = 0; i < b.inputs; i++) {
        ren[Var::input(i)] = Var::input(a.inputs + i);
    }
    uint32_t offset = a.next_path_index();
    for (uint32_t pos = 0; pos < b.pathvars.size(); pos++) {
        ren[Var::path(b.pathvars[pos])] = Var::path(offset + pos);
        r.pathvars.push_back(offset + pos);
    }
    r.inputs += b.inputs;
    r.sqrt2 += b.sqrt2;
    r.phase += rename(b.phase, ren);
    for (const auto &f : b.outputs) {
        r.outputs.push_back(rename(f, ren));
    }
    return r;
}

PathSum dagger(const PathSum &p) {
    uint32_t m = p.inputs;
    uint32_t k = p.num_paths();
    uint32_t n = p.num_outputs();
    std::map<Var, Var> ren;
    for (uint32_t i = 0; i < m; i++) {
        ren[Var::input(i)] = Var::path(i);
    }
    for (uint32_t pos = 0; pos < k; pos++) {
        ren[Var::path(p.pathvars[pos])] = Var::path(m + pos);
    }
    PathSum r;
    r.inputs = n;
    r.sqrt2 = p.sqrt2 + 2 * static_cast<int64_t>(n);
    for (uint32_t j = 0; j < m + k + n; j++) {
        r.pathvars.push_back(j);
    }
    r.phase = -rename(p.phase, ren);
    for (uint32_t j = 0; j < n; j++) {
        BoolPoly diff = rename(p.outputs[j], ren) + BoolPoly(Var::input(j));
        r.phase.add_mono_lift(Monomial(Var::path(m + k + j)), diff, Dyadic::half());
    }
    for (uint32_t i = 0; i < m; i++) {
        r.outputs.emplace_back(Var::path(i));
    }
    return r;
}

// ---------------------------------------------------------------- oracle

namespace {

// The sum compiled to bitmasks over the combined assignment word: input x_i
// at bit i, the pos-th path variable at bit m + pos.
struct Compiled {
    uint32_t m = 0;
    uint32_t k = 0;
    uint32_t n = 0;
    unsigned den = 0;  // phases tracked mod 2^den
    uint64_t den_mask = 0;
    std::vector<std::pair<uint64_t, uint64_t>> phase_terms;  // (mask, coeff)
    std::vector<std::vector<uint64_t>> out_terms;
    // Per path position: terms containing it, as (mask without the bit, coeff/out index).
    std::vector<std::vector<std::pair<uint64_t, uint64_t>>> phase_by_bit;
    std::vector<std::vector<std::pair<uint64_t, uint32_t>>> out_by_bit;
    std::vector<Amplitude> roots;
    double scale = 1.0;
};

Compiled compile(const PathSum &p, OracleLimits lim) {
    Compiled c;
    c.m = p.inputs;
    c.k = p.num_paths();
    c.n = p.num_outputs();
    if (c.m + c.k > lim.max_bits || c.n > lim.max_bits) {
        throw Error(
            ErrorKind::ResourceLimit,
            "oracle enumeration of " + std::to_string(c.m + c.k) + " bits exceeds the cap of " +
                std::to_string(lim.max_bits));
    }
    auto bit_of = [&](Var v) -> uint64_t {
        if (v.is_input()) {
            return uint64_t{1} << v.index();
        }
        auto it = std::lower_bound(p.pathvars.begin(), p.pathvars.end(), v.index());
        return uint64_t{1} << (c.m + static_cast<uint32_t>(it - p.pathvars.begin()));
    };
    auto mask_of = [&](const Monomial &mono) {
        uint64_t mask = 0;
        for (Var v : mono.vars()) {
            mask |= bit_of(v);
        }
        return mask;
    };
    c.den = static_cast<unsigned>(p.phase.max_log2den());
    c.den_mask = c.den >= 64 ? ~uint64_t{0} : (uint64_t{1} << c.den) - 1;
    c.phase_by_bit.resize(c.k);
    c.out_by_bit.resize(c.k);
    for (const auto &[mono, coeff] : p.phase.terms()) {
        uint64_t mask = mask_of(mono);
        uint64_t value = coeff.num() << (c.den - coeff.log2den());
        c.phase_terms.emplace_back(mask, value);
        for (uint32_t b = 0; b < c.k; b++) {
            uint64_t bit = uint64_t{1} << (c.m + b);
            if (mask & bit) {
                c.phase_by_bit[b].emplace_back(mask ^ bit, value);
            }
        }
    }
    for (uint32_t j = 0; j < c.n; j++) {
        c.out_terms.emplace_back();
        for (const auto &mono : p.outputs[j].terms()) {
            uint64_t mask = mask_of(mono);
            c.out_terms.back().push_back(mask);
            for (uint32_t b = 0; b < c.k; b++) {
                uint64_t bit = uint64_t{1} << (c.m + b);
                if (mask & bit) {
                    c.out_by_bit[b].emplace_back(mask ^ bit, j);
                }
            }
        }
    }
    if (c.den <= 16) {
        size_t size = size_t{1} << c.den;
        c.roots.resize(size);
        for (size_t i = 0; i < size; i++) {
            c.roots[i] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(size));
        }
    }
    c.scale = std::pow(2.0, -static_cast<double>(p.sqrt2) / 2.0);
    return c;
}

Amplitude root_of(const Compiled &c, uint64_t phase) {
    if (!c.roots.empty()) {
        return c.roots[phase];
    }
    double turns = std::ldexp(static_cast<double>(phase), -static_cast<int>(c.den));
    return std::polar(1.0, 2 * std::numbers::pi * turns);
}

// Column x of the operator (x given in the word layout), written into col.
void column(const Compiled &c, uint64_t x, std::vector<Amplitude> &col) {
    std::fill(col.begin(), col.end(), Amplitude(0));
    uint64_t a = x;
    uint64_t phase = 0;
    for (const auto &[mask, value] : c.phase_terms) {
        if ((a & mask) == mask) {
            phase += value;
        }
    }
    uint64_t row = 0;
    for (uint32_t j = 0; j < c.n; j++) {
        bool bit = false;
        for (uint64_t mask : c.out_terms[j]) {
            bit ^= (a & mask) == mask;
        }
        if (bit) {
            row |= uint64_t{1} << (c.n - 1 - j);
        }
    }
    col[row] += root_of(c, phase & c.den_mask);
    uint64_t steps = uint64_t{1} << c.k;
    for (uint64_t i = 1; i < steps; i++) {
        uint32_t b = static_cast<uint32_t>(std::countr_zero(i));
        uint64_t bit = uint64_t{1} << (c.m + b);
        a ^= bit;
        bool set = (a & bit) != 0;
        for (const auto &[rest, value] : c.phase_by_bit[b]) {
            if ((a & rest) == rest) {
                phase += set ? value : (0 - value);
            }
        }
        for (const auto &[rest, j] : c.out_by_bit[b]) {
            if ((a & rest) == rest) {
                row ^= uint64_t{1} << (c.n - 1 - j);
            }
        }
        col[row] += root_of(c, phase & c.den_mask);
    }
    for (auto &v : col) {
        v *= c.scale;
    }
}

uint64_t input_word(uint64_t column_index, uint32_t m) {
    uint64_t a = 0;
    for (uint32_t i = 0; i < m; i++) {
        if ((column_index >> (m - 1 - i)) & 1) {
            a |= uint64_t{1} << i;
        }
    }
    return a;
}

}  // namespace

Amplitude evaluate(
    const PathSum &p, const std::vector<bool> &in_bits, const std::vector<bool> &out_bits, OracleLimits lim) {
    if (in_bits.size() != p.inputs || out_bits.size() != p.num_outputs()) {
        throw Error(ErrorKind::DimensionMismatch, "bit-vector lengths do not match the sum");
    }
    Compiled c = compile(p, lim);
    uint64_t a = 0;
    for (uint32_t i = 0; i < c.m; i++) {
        if (in_bits[i]) {
            a |= uint64_t{1} << i;
        }
    }
    uint64_t row = 0;
    for (uint32_t j = 0; j < c.n; j++) {
        if (out_bits[j]) {
            row |= uint64_t{1} << (c.n - 1 - j);
        }
    }
    std::vector<Amplitude> col(size_t{1} << c.n);
    column(c, a, col);
    return col[row];
}

CMatrix to_matrix(const PathSum &p, OracleLimits lim) {
    Compiled c = compile(p, lim);
    size_t rows = size_t{1} << c.n;
    size_t cols = size_t{1} << c.m;
    CMatrix mat(rows, cols);
    std::vector<Amplitude> col(rows);
    for (size_t x = 0; x < cols; x++) {
        column(c, input_word(x, c.m), col);
        for (size_t r = 0; r < rows; r++) {
            mat(r, x) = col[r];
        }
    }
    return mat;
}

// ---------------------------------------------------------------- text

namespace {

using json = nlohmann::ordered_json;

json mono_json(const Monomial &m) {
    json arr = json::array();
    for (auto it = m.vars().rbegin(); it != m.vars().rend(); ++it) {
        arr.push_back(it->str());
    }
    return arr;
}

Monomial mono_from_json(const json &arr) {
    std::vector<Var> vars;
    for (const auto &v : arr) {
        vars.push_back(Var::parse(v.get<std::string>()));
    }
    size_t count = vars.size();
    Monomial m = Monomial::from_vars(std::move(vars));
    if (m.degree() != count) {
        throw Error(ErrorKind::ParseError, "repeated variable in monomial");
    }
    return m;
}

}  // namespace

std::string PathSum::to_json() const {
    std::set<Var> used;
    for (const auto &[m, c] : phase.terms()) {
        used.insert(m.vars().begin(), m.vars().end());
    }
    for (const auto &f : outputs) {
        for (const auto &m : f.terms()) {
            used.insert(m.vars().begin(), m.vars().end());
        }
    }
    int64_t unused = 0;
    for (uint32_t j : pathvars) {
        if (!used.count(Var::path(j))) {
            unused++;
        }
    }
    json doc;
    doc["inputs"] = inputs;
    doc["outputs"] = outputs.size();
    doc["sqrt2"] = sqrt2 - 2 * unused;
    json terms = json::array();
    for (const auto &[m, c] : phase.terms()) {
        json t;
        t["num"] = c.num();
        t["log2den"] = c.log2den();
        t["mono"] = mono_json(m);
        terms.push_back(std::move(t));
    }
    doc["phase"] = std::move(terms);
    json outs = json::array();
    for (const auto &f : outputs) {
        json o = json::array();
        for (const auto &m : f.terms()) {
            o.push_back(mono_json(m));
        }
        outs.push_back(std::move(o));
    }
    doc["out"] = std::move(outs);
    return doc.dump();
}

PathSum PathSum::from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    PathSum p;
    try {
        p.inputs = doc.at("inputs").get<uint32_t>();
        size_t n = doc.at("outputs").get<size_t>();
        p.sqrt2 = doc.at("sqrt2").get<int64_t>();
        std::set<uint32_t> paths;
        auto note = [&](const Monomial &m) {
            for (Var v : m.vars()) {
                if (v.kind() == VarKind::Frame || (v.is_input() && v.index() >= p.inputs)) {
                    throw Error(ErrorKind::ParseError, "variable " + v.str() + " is not bound");
                }
                if (v.is_path()) {
                    paths.insert(v.index());
                }
            }
        };
        for (const auto &t : doc.at("phase")) {
            Dyadic c = Dyadic::make_canonical(t.at("num").get<uint64_t>(), t.at("log2den").get<unsigned>());
            Monomial m = mono_from_json(t.at("mono"));
            if (c.is_zero() || p.phase.terms().count(m)) {
                throw Error(ErrorKind::ParseError, "non-canonical phase term " + m.str());
            }
            note(m);
            p.phase.add(m, c);
        }
        const auto &outs = doc.at("out");
        if (outs.size() != n) {
            throw Error(ErrorKind::ParseError, "\"out\" has " + std::to_string(outs.size()) + " entries, expected " + std::to_string(n));
        }
        for (const auto &o : outs) {
            std::vector<Monomial> terms;
            for (const auto &m : o) {
                terms.push_back(mono_from_json(m));
                note(terms.back());
            }
            size_t count = terms.size();
            BoolPoly f = BoolPoly::from_terms(std::move(terms));
            if (f.size() != count) {
                throw Error(ErrorKind::ParseError, "repeated monomial in an output");
            }
            p.outputs.push_back(std::move(f));
        }
        p.pathvars.assign(paths.begin(), paths.end());
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return p;
}

std::string PathSum::str() const {
    std::string s = "inputs " + std::to_string(inputs) + ", sqrt2 " + std::to_string(sqrt2) + ", paths {";
    for (size_t i = 0; i < pathvars.size(); i++) {
        s += (i ? " " : "") + Var::path(pathvars[i]).str();
    }
    s += "}\nphase " + phase.str() + "\nout";
    for (size_t j = 0; j < outputs.size(); j++) {
        s += (j ? " | " : " ") + outputs[j].str();
    }
    return s;
}

}  // namespace pss
