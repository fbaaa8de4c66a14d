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

// Acceptance checks. Prints one PASS/FAIL line per criterion; exits
// non-zero if any fails. Criteria can be selected by number on the
// command line.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pss/circuit.h"
#include "pss/clifford.h"
#include "pss/error.h"
#include "pss/extract.h"
#include "pss/frontends.h"
#include "pss/matrix.h"
#include "pss/pathsum.h"
#include "pss/rewrite.h"
#include "test_util.h"

using namespace pss;
using namespace pss::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void fail(const std::string &why) {
        pass = false;
        if (failures.size() < 5) {
            failures.push_back(why);
        }
    }
};

PathSum sum(uint32_t m, std::vector<uint32_t> paths, std::vector<std::string> outs, std::string phase, int64_t sqrt2) {
    PathSum p;
    p.inputs = m;
    p.pathvars = std::move(paths);
    for (const auto &o : outs) {
        p.outputs.push_back(bp(o));
    }
    if (!phase.empty()) {
        p.phase = pp(phase);
    }
    p.sqrt2 = sqrt2;
    return p;
}

// 1. Clifford round trip.
void clifford_round_trip(Outcome &out) {
    for (size_t gates : {size_t{500}, size_t{1000}}) {
        size_t ok = 0;
        double synth_time = 0;
        double worst = 0;
        double verify_time = 0;
        for (uint64_t seed = 0; seed < 200; seed++) {
            Circuit c = random_circuit(RandomKind::Clifford, 20, gates, seed);
            std::string tag = "n=20 g=" + std::to_string(gates) + " seed=" + std::to_string(seed);
            try {
                auto t0 = Clock::now();
                Circuit r = synth_clifford(simulate_reduced(c));
                double dt = seconds_since(t0);
                synth_time += dt;
                worst = std::max(worst, dt);
                if (!stage_profile(r).conforming || stats(r).h_layers > 1) {
                    out.fail(tag + ": output not in stage form");
                    continue;
                }
                auto t1 = Clock::now();
                VerifyResult v = verify_equiv(c, r, {.strict_phase = true});
                verify_time += seconds_since(t1);
                if (v.verdict != Verdict::Equal) {
                    out.fail(tag + ": verify " + v.str());
                    continue;
                }
                ok++;
            } catch (const Error &e) {
                out.fail(tag + ": " + e.what());
            }
        }
        out.detail << "g=" << gates << " " << ok << "/200 ok, synth avg " << std::setprecision(3)
                   << synth_time / 200 << "s max " << worst << "s, verify avg " << verify_time / 200 << "s; ";
        if (worst >= 5.0) {
            out.fail("runtime target exceeded at g=" + std::to_string(gates));
        }
    }
    size_t exact = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        uint32_t n = 2 + static_cast<uint32_t>(seed % 7);
        Circuit c = random_circuit(RandomKind::Clifford, n, 200, 1000 + seed);
        Circuit r = synth_clifford(simulate_reduced(c));
        double d = max_abs_diff(circuit_unitary(r), circuit_unitary(c));
        if (d < 1e-9) {
            exact++;
        } else {
            out.fail("n=" + std::to_string(n) + " seed=" + std::to_string(1000 + seed) + ": matrix differs by " +
                     std::to_string(d));
        }
    }
    out.detail << "matrix-exact " << exact << "/50 at n<=8";
}

// 2. Clifford+T heuristic success rate.

// Dense state-vector oracle for widths beyond the matrix oracle. Qubit 0
// is the most significant bit of a basis index.
void apply_circuit(const Circuit &c, std::vector<Amplitude> &state) {
    const size_t n = c.width;
    for (const auto &g : c.gates) {
        CMatrix m = gate_matrix(g);
        size_t a = g.qubits.size();
        size_t local = size_t{1} << a;
        std::vector<size_t> offset(local, 0);
        size_t mask = 0;
        for (size_t k = 0; k < a; k++) {
            mask |= size_t{1} << (n - 1 - g.qubits[k]);
        }
        for (size_t l = 0; l < local; l++) {
            for (size_t k = 0; k < a; k++) {
                if ((l >> (a - 1 - k)) & 1) {
                    offset[l] |= size_t{1} << (n - 1 - g.qubits[k]);
                }
            }
        }
        std::vector<std::vector<std::pair<size_t, Amplitude>>> nonzero(local);
        for (size_t r = 0; r < local; r++) {
            for (size_t l = 0; l < local; l++) {
                if (m(r, l) != Amplitude(0)) {
                    nonzero[r].emplace_back(l, m(r, l));
                }
            }
        }
        std::vector<Amplitude> in(local);
        for (size_t base = 0; base < state.size(); base++) {
            if (base & mask) {
                continue;
            }
            for (size_t l = 0; l < local; l++) {
                in[l] = state[base | offset[l]];
            }
            for (size_t r = 0; r < local; r++) {
                Amplitude acc = 0;
                for (const auto &[l, v] : nonzero[r]) {
                    acc += v * in[l];
                }
                state[base | offset[r]] = acc;
            }
        }
    }
}

// Compares a and b exactly (global phase included) on a random basis
// state and on a random product state.
bool statevector_equal(const Circuit &a, const Circuit &b, uint64_t seed) {
    std::mt19937_64 rng(seed);
    size_t dim = size_t{1} << a.width;
    Circuit prep(a.width);
    for (uint32_t q = 0; q < a.width; q++) {
        prep.append(GateName::H, {q});
        prep.append(rng() % 2 == 0 ? GateName::T : GateName::S, {q});
        prep.append(GateName::H, {q});
    }
    for (int trial = 0; trial < 2; trial++) {
        std::vector<Amplitude> sa(dim, 0);
        sa[rng() % dim] = 1;
        if (trial == 1) {
            apply_circuit(prep, sa);
        }
        std::vector<Amplitude> sb = sa;
        apply_circuit(a, sa);
        apply_circuit(b, sb);
        for (size_t i = 0; i < dim; i++) {
            if (std::abs(sa[i] - sb[i]) >= 1e-9) {
                return false;
            }
        }
    }
    return true;
}

void clifford_t_success(Outcome &out) {
    struct Row {
        size_t gates;
        double threshold;
    };
    for (Row row : {Row{100, 0.90}, Row{300, 0.50}}) {
        size_t ok = 0;
        size_t inconclusive = 0;
        for (uint64_t seed = 0; seed < 200; seed++) {
            Circuit c = random_circuit(RandomKind::CliffordT, 20, row.gates, seed);
            Circuit r;
            try {
                r = synthesize(simulate_reduced(c));
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::SynthesisIncomplete && e.kind() != ErrorKind::ResidualNotPermutation) {
                    out.fail("seed " + std::to_string(seed) + ": unexpected " + e.what());
                }
                continue;
            }
            ok++;
            std::string tag = "g=" + std::to_string(row.gates) + " seed=" + std::to_string(seed);
            VerifyResult v = verify_equiv(c, r, {.strict_phase = true});
            if (v.verdict == Verdict::Inconclusive) {
                inconclusive++;
                if (!statevector_equal(c, r, seed)) {
                    out.fail(tag + ": state-vector oracle disagrees");
                }
            } else if (v.verdict != Verdict::Equal) {
                out.fail(tag + ": " + v.str());
            }
        }
        double rate = static_cast<double>(ok) / 200;
        out.detail << "g=" << row.gates << " success " << std::setprecision(3) << 100 * rate << "% ("
                   << ok - inconclusive << " path-sum verified, " << inconclusive << " by state-vector oracle); ";
        if (rate < row.threshold) {
            out.fail("success rate below threshold at g=" + std::to_string(row.gates));
        }
    }
    size_t checked = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        size_t gates = seed % 2 == 0 ? 100 : 300;
        Circuit c = random_circuit(RandomKind::CliffordT, 8, gates, 5000 + seed);
        try {
            Circuit r = synthesize(simulate_reduced(c));
            checked++;
            if (max_abs_diff(circuit_unitary(r), circuit_unitary(c)) >= 1e-9) {
                out.fail("oracle mismatch at n=8 seed " + std::to_string(5000 + seed));
            }
        } catch (const Error &) {
        }
    }
    out.detail << "oracle-checked " << checked << " successes at n=8";
}

// 3. Bench report columns; the sign of the average change is recorded.
std::string run(const std::string &args, int *code) {
    std::string cmd = std::string(PSS_BINARY) + " " + args;
    std::string text;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        *code = -1;
        return text;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        text.append(buf, got);
    }
    int status = pclose(pipe);
    *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return text;
}

void bench_columns(Outcome &out) {
    struct Config {
        const char *kind;
        uint32_t gates;
    };
    for (Config cfg : {Config{"clifford", 500}, Config{"clifford", 1000}, Config{"clifford+t", 100},
                       Config{"clifford+t", 300}}) {
        std::string args = std::string("bench ") + cfg.kind + " 20 " + std::to_string(cfg.gates) + " 10 --seed 0";
        int code = 0;
        std::string table = run(args, &code);
        if (code != 0 || table.find("avg. change") == std::string::npos ||
            table.find("success") == std::string::npos || table.find("time") == std::string::npos) {
            out.fail(args + ": table columns missing");
            continue;
        }
        std::string js = run(args + " --json", &code);
        try {
            auto j = nlohmann::json::parse(js);
            const auto &agg = j.at("aggregate");
            for (const char *key : {"kind", "qubits", "gates", "count", "success_rate", "avg_change_percent", "avg_ms"}) {
                if (!agg.contains(key)) {
                    out.fail(args + ": aggregate lacks " + key);
                }
            }
            for (const auto &row : j.at("rows")) {
                for (const char *key : {"seed", "success", "in_gates", "out_gates", "ms"}) {
                    if (!row.contains(key)) {
                        out.fail(args + ": row lacks " + key);
                    }
                }
            }
            double change = agg.at("avg_change_percent").get<double>();
            out.detail << cfg.kind << "/" << cfg.gates << " change " << (change < 0 ? "-" : "+") << std::fixed
                       << std::setprecision(1) << std::abs(change) << "%; ";
            out.detail.unsetf(std::ios::fixed);
        } catch (const std::exception &e) {
            out.fail(args + ": " + e.what());
        }
    }
}

// 4. QFT.
void qft(Outcome &out) {
    for (uint32_t n = 1; n <= 8; n++) {
        Circuit c = synthesize(qft_sum(n));
        if (!equal_up_to_phase(circuit_unitary(c), dft_matrix(n), 1e-9)) {
            out.fail("QFT_" + std::to_string(n) + " differs from the DFT");
        }
    }
    auto t0 = Clock::now();
    Circuit big = synthesize(qft_sum(32));
    double dt = seconds_since(t0);
    CircuitStats s = stats(big);
    out.detail << "n=1..8 match DFT; n=32 synthesized in " << std::setprecision(3) << dt << "s (" << s.total
               << " gates)";
    if (dt >= 60) {
        out.fail("n=32 took too long");
    }
    VerifyResult v = verify_equiv(qft_sum(32), big);
    out.detail << ", path-sum verify " << v.str();
    if (v.verdict == Verdict::NotEqual) {
        out.fail("n=32 circuit does not verify");
    }
}

// 5. Rewrite soundness.
void rewrite_soundness(Outcome &out) {
    std::mt19937_64 rng(2026);
    size_t applications = 0;
    size_t per_rule[4] = {0, 0, 0, 0};
    for (int t = 0; t < 1000; t++) {
        uint32_t n = 1 + static_cast<uint32_t>(rng() % 6);
        uint32_t k = static_cast<uint32_t>(rng() % 7);
        PathSum p = random_sum(rng, n, k);
        CMatrix ref = to_matrix(p);
        auto check = [&](const PathSum &q, int rule, const std::string &what) {
            applications++;
            per_rule[rule]++;
            double d = max_abs_diff(to_matrix(q), ref);
            if (!(d < 1e-9)) {
                out.fail("sum " + std::to_string(t) + " " + what + ": differs by " + std::to_string(d));
            }
        };
        std::vector<Var> all;
        for (uint32_t i = 0; i < n; i++) {
            all.push_back(x(i));
        }
        for (uint32_t j : p.pathvars) {
            all.push_back(Var::path(j));
        }
        for (uint32_t j : p.pathvars) {
            Var v = Var::path(j);
            PathSum q = p;
            if (try_elim(q, v)) {
                check(q, 0, "elim " + v.str());
            }
            q = p;
            if (try_hh(q, v)) {
                check(q, 1, "hh " + v.str());
            }
            q = p;
            if (try_omega(q, v)) {
                check(q, 2, "omega " + v.str());
            }
            std::vector<Var> others;
            for (Var w : all) {
                if (w != v) {
                    others.push_back(w);
                }
            }
            BoolPoly f = random_bool(rng, others, 1 + rng() % 3, 2);
            check(rule_subst(p, v, f), 3, "subst " + v.str() + " += " + f.str());
        }
    }
    out.detail << applications << " applications (elim " << per_rule[0] << ", hh " << per_rule[1] << ", omega "
               << per_rule[2] << ", subst " << per_rule[3] << ")";
}

// 6. Unitarity encoding.
bool eval_formula(const Formula &f, uint64_t a) {
    switch (f.op) {
        case Formula::Op::Var:
            return (a >> f.var) & 1;
        case Formula::Op::Not:
            return !eval_formula(f.args[0], a);
        case Formula::Op::And:
            return eval_formula(f.args[0], a) && eval_formula(f.args[1], a);
        case Formula::Op::Or:
            return eval_formula(f.args[0], a) || eval_formula(f.args[1], a);
    }
    return false;
}

void for_each_formula(uint32_t vars, size_t connectives, const std::function<void(const Formula &)> &fn) {
    if (connectives == 0) {
        for (uint32_t i = 0; i < vars; i++) {
            fn(Formula::variable(i));
        }
        return;
    }
    for_each_formula(vars, connectives - 1, [&](const Formula &a) { fn(Formula::negate(a)); });
    for (size_t left = 0; left < connectives; left++) {
        for_each_formula(vars, left, [&](const Formula &a) {
            for_each_formula(vars, connectives - 1 - left, [&](const Formula &b) {
                fn(Formula::conj(a, b));
                fn(Formula::disj(a, b));
            });
        });
    }
}

Formula random_formula(std::mt19937_64 &rng, uint32_t vars, size_t connectives) {
    if (connectives == 0) {
        return Formula::variable(static_cast<uint32_t>(rng() % vars));
    }
    switch (rng() % 3) {
        case 0:
            return Formula::negate(random_formula(rng, vars, connectives - 1));
        default: {
            size_t left = rng() % connectives;
            Formula a = random_formula(rng, vars, left);
            Formula b = random_formula(rng, vars, connectives - 1 - left);
            return rng() % 2 == 0 ? Formula::conj(a, b) : Formula::disj(a, b);
        }
    }
}

void unitarity_encoding(Outcome &out) {
    size_t checked = 0;
    size_t tautologies = 0;
    auto check = [&](const Formula &phi, uint32_t vars) {
        checked++;
        uint64_t dim = uint64_t{1} << vars;
        CMatrix m = to_matrix(tseytin_encode(phi, vars));
        CMatrix expect(dim, dim);
        bool taut = true;
        for (uint64_t col = 0; col < dim; col++) {
            uint64_t a = 0;
            for (uint32_t i = 0; i < vars; i++) {
                if ((col >> (vars - 1 - i)) & 1) {
                    a |= uint64_t{1} << i;
                }
            }
            bool value = eval_formula(phi, a);
            taut = taut && value;
            expect(col, col) = value ? 1.0 : 0.0;
        }
        tautologies += taut;
        std::vector<std::string> names = {"a", "b", "c", "d", "e"};
        if (!(max_abs_diff(m, expect) < 1e-9)) {
            out.fail(phi.str(names) + ": matrix is not diag(phi)");
        } else if (is_unitary(m) != taut) {
            out.fail(phi.str(names) + ": unitarity disagrees with TAUT");
        }
    };
    for (size_t c = 0; c <= 5; c++) {
        for_each_formula(3, c, [&](const Formula &phi) { check(phi, 3); });
    }
    size_t exhaustive = checked;
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; t++) {
        uint32_t vars = 3 + static_cast<uint32_t>(rng() % 3);
        size_t connectives = 6 + rng() % 3;
        check(random_formula(rng, vars, connectives), vars);
    }
    out.detail << exhaustive << " exhaustive + " << checked - exhaustive << " random formulas, " << tautologies
               << " tautologies";
}

// 7. Worked examples.
void worked_examples(Outcome &out) {
    auto expect_circuit = [&](const std::string &name, const Circuit &got, const std::string &want) {
        if (got != Circuit::parse(want)) {
            out.fail(name + ": got\n" + got.str());
        }
    };
    auto expect_matrix = [&](const std::string &name, const CMatrix &got, const CMatrix &want) {
        if (!(max_abs_diff(got, want) < 1e-9)) {
            out.fail(name + ": matrix differs");
        }
    };
    size_t examples = 0;

    // Affine then nonlinear simplification.
    PathSum affine = sum(4, {}, {"x0", "x1", "x2 + x0x1", "x3 + x2"}, "", 0);
    Circuit ac = synthesize(affine);
    expect_matrix("affine", circuit_unitary(ac), to_matrix(affine));
    CircuitStats as = stats(ac);
    if (as.total != 2 || as.counts["cx"] != 1 || as.counts["ccx"] != 1) {
        out.fail("affine: expected one cx and one ccx, got\n" + ac.str());
    }
    examples++;

    // Phase simplification with a frame change.
    PathSum framed = sum(2, {0}, {"x0 + x1", "y0"}, "7/8·x0 + 1/4·x0y0 + 3/4·x1y0 + 1/2·x0x1y0", 1);
    SynthState st(framed);
    if (!phase_simplify(st) || st.current.phase != pp("7/8·x0 + 1/2·x0y0") || st.applied.size() != 1 ||
        st.applied[0].name != GateName::CRZ) {
        out.fail("phase simplification: controlled-S not removed");
    }
    expect_matrix("phase simplification synth", circuit_unitary(synthesize(framed)), to_matrix(framed));
    examples++;

    // Phase simplification ending in a single T.
    PathSum tof_t = sum(3, {}, {"x0", "x1", "x2 + x0x1"}, "1/8·x2 + 1/8·x0x1 + 3/4·x0x1x2", 0);
    expect_circuit("single T", synthesize(tof_t), "qubits 3\nccx 0 1 2\nt 2\n");
    expect_matrix("single T", circuit_unitary(synthesize(tof_t)), to_matrix(tof_t));
    examples++;

    // Degree reduction.
    PathSum degree = sum(2, {0, 1}, {"y0", "y1"}, "1/4·x1y0 + 3/4·x1y1 + 1/2·x0y0 + 1/2·x0y1 + 1/2·x1y0y1", 2);
    Circuit dc = synthesize(degree);
    expect_circuit("degree reduction", dc, "qubits 2\nh 0\ncrz 1/4 0 1\nh 1\ncx 1 0\n");
    expect_matrix("degree reduction", circuit_unitary(dc), to_matrix(degree));
    examples++;

    // Controlled-S decompilation.
    Circuit cs = decompile(Circuit::parse("qubits 2\nt 0\nt 1\ncx 0 1\ntdg 1\ncx 0 1\n"));
    expect_circuit("controlled-S", cs, "qubits 2\ncrz 1/4 0 1\n");
    CMatrix lambda_s = CMatrix::identity(4);
    lambda_s(3, 3) = Amplitude(0, 1);
    expect_matrix("controlled-S", circuit_unitary(cs), lambda_s);
    examples++;

    // CCZ decompilation, with and without the target Hadamards.
    const std::string core =
        "t 0\nt 1\nt 2\ncx 0 1\ncx 1 2\ncx 2 0\ntdg 0\ntdg 1\nt 2\ncx 1 0\ntdg 0\ncx 1 2\ncx 2 0\ncx 0 1\n";
    Circuit ccz = decompile(Circuit::parse("qubits 3\n" + core));
    expect_circuit("CCZ", ccz, "qubits 3\nccz 0 1 2\n");
    CMatrix ccz_m = CMatrix::identity(8);
    ccz_m(7, 7) = -1;
    expect_matrix("CCZ", circuit_unitary(ccz), ccz_m);
    Circuit ccx = decompile(Circuit::parse("qubits 3\nh 2\n" + core + "h 2\n"));
    expect_circuit("Toffoli", ccx, "qubits 3\nccx 0 1 2\n");
    examples++;

    // Optimization figures.
    Circuit fig_a = Circuit::parse("qubits 3\nccx 0 1 2\ncx 2 1\nccx 0 1 2\ncx 2 1\nccx 0 1 2\n");
    Circuit opt_a = decompile(fig_a);
    expect_circuit("cascade 1", opt_a, "qubits 3\nccx 0 2 1\n");
    expect_matrix("cascade 1", circuit_unitary(opt_a), circuit_unitary(fig_a));
    Circuit fig_b = Circuit::parse("qubits 4\nccx 0 1 2\ncx 2 3\nccx 0 1 2\ncx 2 3\nccx 0 1 2\n");
    Circuit opt_b = decompile(fig_b);
    expect_circuit("cascade 2", opt_b, "qubits 4\ncx 2 3\nccx 0 1 2\ncx 2 3\n");
    expect_matrix("cascade 2", circuit_unitary(opt_b), circuit_unitary(fig_b));
    examples++;

    // QFT_3 as drawn.
    Circuit q3 = synthesize(qft_sum(3));
    expect_circuit("QFT_3", q3, "qubits 3\nswap 0 2\nh 2\ncrz 1/4 1 2\nh 1\ncrz 1/4 0 1\ncrz 1/8 0 2\nh 0\n");
    examples++;

    out.detail << examples << " example groups";
}

// 8. Clifford unitarity decision.
void unitarity_decision(Outcome &out) {
    size_t unitary_ok = 0;
    size_t mutated_ok = 0;
    size_t oracle_checked = 0;
    auto oracle = [&](const PathSum &p, bool expect_unitary, const std::string &tag) {
        if (p.inputs > 6) {
            return;
        }
        oracle_checked++;
        if (is_unitary(to_matrix(p)) != expect_unitary) {
            out.fail(tag + ": oracle disagrees");
        }
    };
    std::mt19937_64 rng(8);
    for (uint64_t seed = 0; seed < 100; seed++) {
        uint32_t n = 2 + static_cast<uint32_t>(seed % 10);
        PathSum p = simulate(random_circuit(RandomKind::Clifford, n, 10 * n, seed));
        std::string tag = "seed " + std::to_string(seed);
        if (clifford_unitarity(p) == Unitarity::Unitary) {
            unitary_ok++;
        } else {
            out.fail(tag + ": unitary sum classified NonUnitary");
        }
        CliffordNormalForm nf = normal_form_clifford(p);
        oracle(nf.sum, true, tag);

        PathSum mutated;
        bool zero_r = seed % 2 == 1 && nf.sum.num_paths() > 0;
        if (zero_r) {
            NormalFormParts parts = decompose(nf);
            parts.R[rng() % parts.R.size()] = BoolPoly();
            mutated = parts.reassemble(nf.sum.inputs, nf.sum.pathvars, nf.sum.sqrt2);
        } else {
            mutated = nf.sum;
            uint32_t i = static_cast<uint32_t>(rng() % n);
            uint32_t j = static_cast<uint32_t>((i + 1 + rng() % (n - 1)) % n);
            mutated.outputs[j] = mutated.outputs[i];
        }
        tag += zero_r ? " (zeroed R)" : " (duplicated output)";
        if (clifford_unitarity(mutated) == Unitarity::NonUnitary) {
            mutated_ok++;
        } else {
            out.fail(tag + ": mutated sum classified Unitary");
        }
        oracle(mutated, false, tag);
    }
    out.detail << unitary_ok << "/100 unitary, " << mutated_ok << "/100 mutated, " << oracle_checked
               << " oracle cross-checks";
}

struct Criterion {
    int id;
    const char *name;
    void (*fn)(Outcome &);
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> all = {
        {1, "Clifford round trip", clifford_round_trip},
        {2, "Clifford+T synthesis success", clifford_t_success},
        {3, "bench report columns", bench_columns},
        {4, "QFT", qft},
        {5, "rewrite soundness", rewrite_soundness},
        {6, "unitarity encoding", unitarity_encoding},
        {7, "worked examples", worked_examples},
        {8, "Clifford unitarity decision", unitarity_decision},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; i++) {
        selected.insert(std::stoi(argv[i]));
    }
    bool all_pass = true;
    for (const auto &c : all) {
        if (!selected.empty() && !selected.count(c.id)) {
            continue;
        }
        Outcome out;
        auto t0 = Clock::now();
        try {
            c.fn(out);
        } catch (const std::exception &e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        all_pass = all_pass && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << out.detail.str()
                  << " (" << std::fixed << std::setprecision(1) << dt << "s)" << std::endl;
        std::cout.unsetf(std::ios::fixed);
        for (const auto &f : out.failures) {
            std::cout << "    " << f << std::endl;
        }
    }
    return all_pass ? 0 : 1;
}
