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

#include <gtest/gtest.h>

#include "pss/clifford.h"
#include "pss/error.h"
#include "test_util.h"

using namespace pss;
using namespace pss::testing;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

PathSum state(std::vector<uint32_t> paths, std::vector<std::string> outs, std::string phase, int64_t sqrt2) {
    PathSum p;
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

}  // namespace

TEST(decompose, examples) {
    NormalFormParts h = decompose(normal_form_clifford(gate_sum(make_gate(GateName::H, {0}))));
    ASSERT_EQ(h.R.size(), 1u);
    EXPECT_EQ(h.R[0], bp("x0"));
    EXPECT_TRUE(h.Lx.empty() && h.Ly.empty() && h.Qx.empty() && h.Qy.empty());
    EXPECT_EQ(h.l, 0u);

    NormalFormParts s = decompose(normal_form_clifford(gate_sum(make_gate(GateName::S, {0}))));
    EXPECT_TRUE(s.R.empty());
    ASSERT_EQ(s.Lx.size(), 1u);
    EXPECT_EQ(s.Lx.at(x(0)), 1u);

    CliffordNormalForm nf = normal_form_clifford(simulate(circuit("qubits 2\nh 0\ncx 0 1\n")));
    NormalFormParts b = decompose(nf);
    ASSERT_EQ(b.R.size(), 1u);
    EXPECT_EQ(b.R[0], bp("x0"));
    EXPECT_EQ(b.fy[1], BoolPoly(y(nf.sum.pathvars[0])));
    EXPECT_EQ(b.fx[1], bp("x1"));
}

TEST(decompose, reassembles) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        Circuit c = random_circuit(RandomKind::Clifford, 2 + seed % 7, 60, seed);
        c.append(GateName::GPhase, {}, Dyadic::make(static_cast<int64_t>(seed % 8), 3));
        CliffordNormalForm nf = normal_form_clifford(simulate(c));
        NormalFormParts parts = decompose(nf);
        EXPECT_EQ(parts.reassemble(nf.sum.inputs, nf.sum.pathvars, nf.sum.sqrt2), nf.sum);
    }
}

TEST(synth_clifford, examples) {
    EXPECT_EQ(synth_clifford(gate_sum(make_gate(GateName::H, {0}))), circuit("qubits 1\nh 0\n"));
    PathSum dup = PathSum::identity(2);
    dup.outputs[1] = bp("x0");
    EXPECT_EQ(kind_of([&] { synth_clifford(dup); }), ErrorKind::NonUnitary);
    EXPECT_EQ(kind_of([] { synth_clifford(gate_sum(make_gate(GateName::T, {0}))); }), ErrorKind::NotClifford);
}

TEST(synth_clifford, exact_on_random_circuits) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        Circuit c = random_circuit(RandomKind::Clifford, 8, 200, seed);
        Circuit out = synth_clifford(simulate(c));
        EXPECT_LT(max_abs_diff(circuit_unitary(out), circuit_unitary(c)), kOracleTolerance) << seed;
        StageProfile prof = stage_profile(out);
        EXPECT_TRUE(prof.conforming) << out.str();
        // Gate-count bounds per stage.
        uint32_t n = 8;
        EXPECT_LE(prof.counts[1], n);
        EXPECT_LE(prof.counts[8], n);
        EXPECT_LE(prof.counts[2], n * (n - 1) / 2);
        EXPECT_LE(prof.counts[7], n * (n - 1) / 2);
        EXPECT_LE(prof.counts[3], n * n);
        EXPECT_LE(stats(out).h_layers, 1u);
    }
}

TEST(synth_clifford, small_widths_with_phase) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        Circuit c = random_circuit(RandomKind::Clifford, 2 + seed % 4, 30, seed);
        c.append(GateName::Z, {0});
        c.append(GateName::CZ, {0, 1});
        c.append(GateName::Sdg, {1});
        c.append(GateName::GPhase, {}, Dyadic::make(5, 3));
        PathSum p = simulate(c);
        Circuit out = synth_clifford(p);
        EXPECT_LT(max_abs_diff(to_matrix(p), circuit_unitary(out)), kOracleTolerance);
        Circuit nophase = synth_clifford(p, {true});
        for (const auto &g : nophase.gates) {
            EXPECT_NE(g.name, GateName::GPhase);
        }
        EXPECT_TRUE(equal_up_to_phase(circuit_unitary(nophase), circuit_unitary(c), kOracleTolerance, nullptr));
    }
}

TEST(synth_isometry, examples) {
    Circuit bell = synth_isometry(state({0}, {"y0", "y0"}, "", 1));
    EXPECT_EQ(bell, circuit("qubits 2\nh 0\ncx 0 1\n"));

    Circuit zero = synth_isometry(state({}, {"0"}, "", 0));
    EXPECT_TRUE(zero.gates.empty());

    Circuit plus_i = synth_isometry(state({0}, {"y0"}, "1/4·y0", 1));
    EXPECT_EQ(plus_i, circuit("qubits 1\nh 0\ns 0\n"));

    // Not an isometry: x1 is lost.
    PathSum bad;
    bad.inputs = 2;
    bad.outputs = {bp("x0"), bp("x0"), bp("x0")};
    EXPECT_EQ(kind_of([&] { synth_isometry(bad); }), ErrorKind::NotIsometry);
}

TEST(synth_isometry, stabilizer_states) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        uint32_t n = 2 + seed % 4;
        Circuit c = random_circuit(RandomKind::Clifford, n, 30, seed);
        PathSum prep = compose(simulate(c), state({}, std::vector<std::string>(n, "0"), "", 0));
        Circuit out = synth_isometry(prep);
        StageProfile prof = stage_profile(out);
        EXPECT_TRUE(prof.conforming);
        EXPECT_EQ(prof.counts[1] + prof.counts[2] + prof.counts[3], 0u);  // no pre-H stages for states
        CMatrix u = circuit_unitary(out);
        CMatrix col(size_t{1} << n, 1);
        for (size_t r = 0; r < col.rows; r++) {
            col(r, 0) = u(r, 0);
        }
        EXPECT_LT(max_abs_diff(col, to_matrix(prep)), kOracleTolerance);
    }
}

TEST(stage_profile, examples) {
    EXPECT_FALSE(stage_profile(circuit("qubits 1\nh 0\ns 0\nh 0\n")).conforming);
    StageProfile p = stage_profile(circuit("qubits 2\ns 0\ncz 0 1\ncx 0 1\nh 0\n"));
    EXPECT_TRUE(p.conforming);
    EXPECT_EQ(p.counts[1], 1u);
    EXPECT_EQ(p.counts[2], 1u);
    EXPECT_EQ(p.counts[3], 1u);
    EXPECT_EQ(p.counts[4], 1u);
    EXPECT_EQ(p.to_json(),
              R"({"stages": {"gphase": 0, "s1": 1, "cz1": 1, "cx1": 1, "h": 1, "cx2": 0, "x": 0, "cz2": 0, "s2": 0, "swap": 0}, "conforming": true})");
}
