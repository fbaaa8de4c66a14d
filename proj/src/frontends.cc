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

#include "pss/frontends.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pss/clifford.h"
#include "pss/error.h"
#include "pss/rewrite.h"

namespace pss {

PathSum simulate_reduced(const Circuit &c) {
    PathSum p = PathSum::identity(c.width);
    for (const auto &g : c.gates) {
        apply_gate(p, g);
        if (g.name != GateName::H) {
            continue;
        }
        normalize_in_place(p);
        if (p.num_paths() > 0 && is_clifford(p)) {
            try {
                normal_form_clifford_in_place(p);
            } catch (const Error &) {
                // Leave it; the caller's pipeline reports the failure.
            }
        }
    }
    return p;
}

PathSum qft_sum(uint32_t n) {
    if (n == 0) {
        throw Error(ErrorKind::DimensionMismatch, "qft needs at least one qubit");
    }
    PathSum p;
    p.inputs = n;
    p.sqrt2 = n;
    for (uint32_t k = 0; k < n; k++) {
        p.pathvars.push_back(k);
        p.outputs.emplace_back(Var::path(k));
    }
    for (uint32_t j = 1; j <= n; j++) {
        for (uint32_t k = 1; k <= n; k++) {
            if (j + k > n) {
                p.phase.add(Monomial::of({Var::input(j - 1), Var::path(k - 1)}), Dyadic::make(1, j + k - n));
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------- formulas

Formula Formula::negate(Formula a) {
    return Formula{Op::Not, 0, {std::move(a)}};
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula{Op::And, 0, {std::move(a), std::move(b)}};
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula{Op::Or, 0, {std::move(a), std::move(b)}};
}

bool Formula::eval(uint64_t assignment) const {
    switch (op) {
        case Op::Var:
            return (assignment >> var) & 1;
        case Op::Not:
            return !args[0].eval(assignment);
        case Op::And:
            return args[0].eval(assignment) && args[1].eval(assignment);
        case Op::Or:
            return args[0].eval(assignment) || args[1].eval(assignment);
    }
    return false;
}

size_t Formula::connectives() const {
    size_t c = op == Op::Var ? 0 : 1;
    for (const auto &a : args) {
        c += a.connectives();
    }
    return c;
}

std::string Formula::str(const std::vector<std::string> &names) const {
    switch (op) {
        case Op::Var:
            return var < names.size() ? names[var] : "v" + std::to_string(var);
        case Op::Not:
            return "!" + args[0].str(names);
        case Op::And:
            return "(" + args[0].str(names) + " & " + args[1].str(names) + ")";
        case Op::Or:
            return "(" + args[0].str(names) + " | " + args[1].str(names) + ")";
    }
    return "";
}

namespace {

class FormulaParser {
   public:
    explicit FormulaParser(std::string_view text) : text_(text) {
    }

    ParsedFormula run() {
        ParsedFormula out;
        out.root = parse_or(out.vars);
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return out;
    }

   private:
    [[noreturn]] void fail(const std::string &what) {
        throw Error(ErrorKind::ParseError, "formula column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            pos_++;
        }
    }

    bool eat(char ch) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            pos_++;
            return true;
        }
        return false;
    }

    Formula parse_or(std::vector<std::string> &vars) {
        Formula f = parse_and(vars);
        while (eat('|')) {
            f = Formula::disj(std::move(f), parse_and(vars));
        }
        return f;
    }

    Formula parse_and(std::vector<std::string> &vars) {
        Formula f = parse_not(vars);
        while (eat('&')) {
            f = Formula::conj(std::move(f), parse_not(vars));
        }
        return f;
    }

    Formula parse_not(std::vector<std::string> &vars) {
        if (eat('!')) {
            return Formula::negate(parse_not(vars));
        }
        if (eat('(')) {
            Formula f = parse_or(vars);
            if (!eat(')')) {
                fail("expected ')'");
            }
            return f;
        }
        skip();
        if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z') {
            fail("expected a variable");
        }
        size_t start = pos_;
        while (pos_ < text_.size() &&
               ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9') ||
                text_[pos_] == '_')) {
            pos_++;
        }
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) {
            vars.push_back(name);
            it = vars.end() - 1;
        }
        return Formula::variable(static_cast<uint32_t>(it - vars.begin()));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

// Pre-order numbering of connectives; returns the Z2 polynomial naming the
// value of `f` (an input for leaves, a clause variable otherwise) and
// collects clause polynomials.
BoolPoly tseytin_walk(
    const Formula &f, uint32_t k, std::vector<BoolPoly> &clauses, std::vector<uint32_t> &clause_index) {
    if (f.op == Formula::Op::Var) {
        return BoolPoly(Var::input(f.var));
    }
    uint32_t i = static_cast<uint32_t>(clauses.size());
    clauses.emplace_back();
    clause_index.push_back(i);
    Var zi = Var::path(1 + k + i);
    std::vector<BoolPoly> kids;
    for (const auto &a : f.args) {
        kids.push_back(tseytin_walk(a, k, clauses, clause_index));
    }
    switch (f.op) {
        case Formula::Op::Not:
            clauses[i] = BoolPoly::one() + kids[0];
            break;
        case Formula::Op::And:
            clauses[i] = kids[0] * kids[1];
            break;
        case Formula::Op::Or:
            clauses[i] = kids[0] + kids[1] + kids[0] * kids[1];
            break;
        default:
            break;
    }
    return BoolPoly(zi);
}

}  // namespace

ParsedFormula parse_formula(std::string_view text) {
    return FormulaParser(text).run();
}

PathSum tseytin_encode(const Formula &phi, uint32_t num_vars) {
    uint32_t k = static_cast<uint32_t>(phi.connectives());
    std::vector<BoolPoly> clauses;
    std::vector<uint32_t> order;
    BoolPoly root = tseytin_walk(phi, k, clauses, order);
    PathSum p = PathSum::identity(num_vars);
    // y0 checks the root; y1..yk check the clauses; y(k+1)..y(2k) carry
    // the clause values.
    for (uint32_t j = 0; j < 2 * k + 1; j++) {
        p.pathvars.push_back(j);
    }
    p.sqrt2 = 2 * (static_cast<int64_t>(k) + 1);
    p.phase.add_mono_lift(Monomial(Var::path(0)), BoolPoly::one() + root, Dyadic::half());
    for (uint32_t i = 0; i < k; i++) {
        BoolPoly diff = BoolPoly(Var::path(1 + k + i)) + clauses[i];
        p.phase.add_mono_lift(Monomial(Var::path(1 + i)), diff, Dyadic::half());
    }
    return p;
}

TautResult taut_check(const Formula &phi, uint32_t num_vars, OracleLimits lim) {
    if (num_vars > 24) {
        throw Error(ErrorKind::ResourceLimit, "too many variables to enumerate");
    }
    TautResult res;
    bool taut = true;
    uint64_t count = uint64_t{1} << num_vars;
    for (uint64_t a = 0; a < count; a++) {
        taut = taut && phi.eval(a);
    }
    res.verdict = taut ? TautVerdict::Tautology : TautVerdict::NotTautology;
    CMatrix m = to_matrix(tseytin_encode(phi, num_vars), lim);
    CMatrix expect(count, count);
    for (uint64_t col = 0; col < count; col++) {
        // Matrix indices are big-endian; formula assignments are not.
        uint64_t a = 0;
        for (uint32_t i = 0; i < num_vars; i++) {
            if ((col >> (num_vars - 1 - i)) & 1) {
                a |= uint64_t{1} << i;
            }
        }
        expect(col, col) = phi.eval(a) ? 1.0 : 0.0;
    }
    bool diag = approx_equal(m, expect);
    bool ident = approx_equal(m, CMatrix::identity(count));
    res.encoding_agrees = diag && (ident == taut);
    return res;
}

// ---------------------------------------------------------------- verification

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal:
            return "Equal";
        case Verdict::EqualUpToGlobalPhase:
            return "EqualUpToGlobalPhase";
        case Verdict::NotEqual:
            return "NotEqual";
        case Verdict::Inconclusive:
            return "Inconclusive";
    }
    return "";
}

std::string VerifyResult::str() const {
    std::string s(verdict_name(verdict));
    if (verdict == Verdict::EqualUpToGlobalPhase) {
        s += via_oracle ? "(" + std::to_string(oracle_phase) + ")" : "(" + phase.str() + ")";
    }
    if (via_oracle) {
        s += " [matrix oracle]";
    }
    return s;
}

namespace {

uint32_t width_in(const Operator &op) {
    if (const auto *c = std::get_if<Circuit>(&op)) {
        return c->width;
    }
    return std::get<PathSum>(op).inputs;
}

uint32_t width_out(const Operator &op) {
    if (const auto *c = std::get_if<Circuit>(&op)) {
        return c->width;
    }
    return std::get<PathSum>(op).num_outputs();
}

// Normalizes, then retries with path-variable substitutions while they remove
// path variables. The number of attempts is bounded by the initial
// path count.
void reduce_miter(PathSum &s) {
    normalize_in_place(s);
    size_t budget = s.num_paths();
    bool progress = true;
    while (progress && s.num_paths() > 0 && !is_clifford(s)) {
        progress = false;
        for (auto it = s.pathvars.rbegin(); it != s.pathvars.rend() && !progress && budget > 0; ++it) {
            budget--;
            PathSum t = s;
            if (degree_reduce(t, Var::path(*it))) {
                normalize_in_place(t);
                if (t.num_paths() < s.num_paths()) {
                    s = std::move(t);
                    progress = true;
                }
            }
        }
    }
}

PathSum sum_of(const Operator &op) {
    if (const auto *c = std::get_if<Circuit>(&op)) {
        return simulate_reduced(*c);
    }
    return std::get<PathSum>(op);
}

CMatrix matrix_of(const Operator &op, unsigned max_qubits) {
    if (const auto *c = std::get_if<Circuit>(&op)) {
        return circuit_unitary(*c);
    }
    return to_matrix(std::get<PathSum>(op), OracleLimits{std::max(22u, 2 * max_qubits)});
}

}  // namespace

VerifyResult verify_equiv(const Operator &a, const Operator &b, VerifyOptions opts) {
    if (width_in(a) != width_in(b) || width_out(a) != width_out(b)) {
        throw Error(ErrorKind::DimensionMismatch, "operators have different shapes");
    }
    PathSum s;
    const auto *ca = std::get_if<Circuit>(&a);
    const auto *cb = std::get_if<Circuit>(&b);
    if (ca != nullptr && cb != nullptr) {
        Circuit both = *cb;
        both.extend(ca->inverse());
        s = simulate_reduced(both);
    } else {
        s = compose(dagger(sum_of(a)), sum_of(b));
    }
    VerifyResult res;
    reduce_miter(s);
    std::optional<Dyadic> ph = identity_phase(s);
    if (!ph && s.num_paths() > 0 && ca != nullptr && cb != nullptr) {
        // The other miter, b^dagger a, sometimes reduces where a^dagger b sticks.
        Circuit both = *ca;
        both.extend(cb->inverse());
        PathSum t = simulate_reduced(both);
        reduce_miter(t);
        if (auto tph = identity_phase(t)) {
            ph = -*tph;
            s = std::move(t);
        } else if (t.num_paths() == 0) {
            s = std::move(t);
        }
    }
    if (ph) {
        res.phase = *ph;
        if (ph->is_zero()) {
            res.verdict = Verdict::Equal;
        } else {
            res.verdict = opts.strict_phase ? Verdict::NotEqual : Verdict::EqualUpToGlobalPhase;
        }
        return res;
    }
    if (s.num_paths() == 0) {
        res.verdict = Verdict::NotEqual;
        return res;
    }
    if (is_clifford(s)) {
        try {
            PathSum t = s;
            normal_form_clifford_in_place(t);
            if (t.num_paths() > 0) {
                res.verdict = Verdict::NotEqual;
                return res;
            }
        } catch (const Error &) {
        }
    }
    // Symbolic check was inconclusive; use the matrix oracle at desk scale.
    if (width_in(a) > opts.max_oracle_qubits || width_out(a) > opts.max_oracle_qubits) {
        return res;
    }
    try {
        CMatrix ma = matrix_of(a, opts.max_oracle_qubits);
        CMatrix mb = matrix_of(b, opts.max_oracle_qubits);
        res.via_oracle = true;
        Amplitude ph;
        if (approx_equal(ma, mb)) {
            res.verdict = Verdict::Equal;
        } else if (equal_up_to_phase(mb, ma, kOracleTolerance, &ph)) {
            res.oracle_phase = std::arg(ph) / (2 * std::numbers::pi);
            if (res.oracle_phase < 0) {
                res.oracle_phase += 1;
            }
            res.verdict = opts.strict_phase ? Verdict::NotEqual : Verdict::EqualUpToGlobalPhase;
        } else {
            res.verdict = Verdict::NotEqual;
        }
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::ResourceLimit) {
            throw;
        }
        res.via_oracle = false;
    }
    return res;
}

Circuit decompile(const Circuit &c, SynthOptions opts, VerifyOptions vopts) {
    Circuit out = synthesize(simulate_reduced(c), opts);
    vopts.strict_phase = vopts.strict_phase && !opts.ignore_global_phase;
    VerifyResult v = verify_equiv(c, out, vopts);
    if (v.verdict == Verdict::NotEqual) {
        throw Error(ErrorKind::SynthesisIncomplete, "decompiled circuit failed verification");
    }
    return out;
}

CliffordPassReport clifford_pass(const Circuit &c, CliffordPassOptions opts) {
    CliffordPassReport rep;
    rep.before = stats(c);
    Circuit out(c.width);
    size_t i = 0;
    while (i < c.gates.size()) {
        if (!c.gates[i].is_clifford()) {
            out.append(c.gates[i++]);
            continue;
        }
        size_t j = i;
        while (j < c.gates.size() && c.gates[j].is_clifford()) {
            j++;
        }
        if (j - i < opts.min_run) {
            for (; i < j; i++) {
                out.append(c.gates[i]);
            }
            continue;
        }
        std::vector<uint32_t> touched;
        for (size_t t = i; t < j; t++) {
            touched.insert(touched.end(), c.gates[t].qubits.begin(), c.gates[t].qubits.end());
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        std::vector<uint32_t> local(c.width, 0);
        for (uint32_t q = 0; q < touched.size(); q++) {
            local[touched[q]] = q;
        }
        Circuit sub(static_cast<uint32_t>(touched.size()));
        for (size_t t = i; t < j; t++) {
            Gate g = c.gates[t];
            for (auto &q : g.qubits) {
                q = local[q];
            }
            sub.append(std::move(g));
        }
        try {
            Circuit synth = synth_clifford(simulate_reduced(sub), {opts.ignore_global_phase});
            for (Gate g : synth.gates) {
                for (auto &q : g.qubits) {
                    q = touched[q];
                }
                out.append(std::move(g));
            }
            rep.runs_replaced++;
        } catch (const Error &) {
            for (size_t t = i; t < j; t++) {
                out.append(c.gates[t]);
            }
        }
        i = j;
    }
    VerifyOptions vopts;
    VerifyResult v = verify_equiv(c, out, vopts);
    rep.verdict = v.verdict;
    if (v.verdict == Verdict::NotEqual && !opts.ignore_global_phase) {
        throw Error(ErrorKind::SynthesisIncomplete, "Clifford pass changed the circuit");
    }
    rep.circuit = std::move(out);
    rep.after = stats(rep.circuit);
    return rep;
}

}  // namespace pss
