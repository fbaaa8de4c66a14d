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

#include "pss/error.h"
#include "pss/pathsum.h"
#include "pss/rewrite.h"
#include "test_util.h"

using namespace pss;
using namespace pss::testing;

namespace {

PathSum eta() {
    PathSum p;
    p.pathvars = {0};
    p.outputs = {BoolPoly(y(0)), BoolPoly(y(0))};
    return p;
}

PathSum epsilon() {
    PathSum p;
    p.inputs = 2;
    p.pathvars = {0};
    p.sqrt2 = 2;
    p.phase = pp("1/2·x0y0 + 1/2·x1y0");
    return p;
}

}  // namespace

TEST(gate_sum, definitions) {
    PathSum t = gate_sum(make_gate(GateName::T, {0}));
    EXPECT_EQ(t.inputs, 1u);
    EXPECT_EQ(t.num_paths(), 0u);
    EXPECT_EQ(t.sqrt2, 0);
    EXPECT_EQ(t.phase, pp("1/8·x0"));
    EXPECT_EQ(t.outputs[0], bp("x0"));

    PathSum cx = gate_sum(make_gate(GateName::CX, {0, 1}));
    EXPECT_TRUE(cx.phase.is_zero());
    EXPECT_EQ(cx.outputs[0], bp("x0"));
    EXPECT_EQ(cx.outputs[1], bp("x0 + x1"));

    PathSum tof = gate_sum(make_gate(GateName::CCX, {0, 1, 2}));
    EXPECT_EQ(tof.outputs[2], bp("x2 + x0x1"));

    PathSum h = gate_sum(make_gate(GateName::H, {0}));
    EXPECT_EQ(h.num_paths(), 1u);
    EXPECT_EQ(h.sqrt2, 1);
    EXPECT_EQ(h.phase, pp("1/2·x0y0"));
    EXPECT_EQ(h.outputs[0], bp("y0"));
}

TEST(gate_sum, textbook_matrices) {
    std::vector<Gate> gates = {
        make_gate(GateName::X, {0}),          make_gate(GateName::Z, {0}),
        make_gate(GateName::S, {0}),          make_gate(GateName::Sdg, {0}),
        make_gate(GateName::T, {0}),          make_gate(GateName::Tdg, {0}),
        make_gate(GateName::H, {0}),          make_gate(GateName::CX, {0, 1}),
        make_gate(GateName::CX, {1, 0}),      make_gate(GateName::CZ, {0, 1}),
        make_gate(GateName::Swap, {0, 1}),    make_gate(GateName::CCX, {0, 1, 2}),
        make_gate(GateName::CCX, {2, 0, 1}),  make_gate(GateName::CCZ, {0, 1, 2}),
        make_gate(GateName::MCX, {0, 1, 2}),  make_gate(GateName::MCX, {1, 0}),
        make_gate(GateName::RZ, {0}, Dyadic::parse("3/16")),
        make_gate(GateName::CRZ, {1, 0}, Dyadic::parse("1/4")),
        make_gate(GateName::MCRZ, {0, 2, 1}, Dyadic::parse("5/8")),
        make_gate(GateName::GPhase, {}, Dyadic::parse("1/8")),
    };
    for (const auto &g : gates) {
        PathSum p = gate_sum(g);
        EXPECT_LT(max_abs_diff(to_matrix(p), gate_matrix(g)), kOracleTolerance) << g.str();
    }
}

TEST(compose, examples) {
    PathSum h = gate_sum(make_gate(GateName::H, {0}));
    PathSum hh = compose(h, h);
    EXPECT_EQ(hh.num_paths(), 2u);
    EXPECT_TRUE(is_identity_strict(hh));

    PathSum t = gate_sum(make_gate(GateName::T, {0}));
    EXPECT_EQ(compose(t, t), gate_sum(make_gate(GateName::S, {0})));

    PathSum cx = gate_sum(make_gate(GateName::CX, {0, 1}));
    EXPECT_EQ(compose(cx, cx), PathSum::identity(2));
}

TEST(tensor, examples) {
    EXPECT_EQ(tensor(PathSum::identity(1), PathSum::identity(1)), PathSum::identity(2));
    PathSum hi = tensor(gate_sum(make_gate(GateName::H, {0})), PathSum::identity(1));
    EXPECT_EQ(hi.num_paths(), 1u);
    EXPECT_EQ(hi.phase, pp("1/2·x0y0"));
    EXPECT_EQ(hi.outputs[0], bp("y0"));
    EXPECT_EQ(hi.outputs[1], bp("x1"));
    PathSum ts = tensor(gate_sum(make_gate(GateName::T, {0})), gate_sum(make_gate(GateName::S, {0})));
    EXPECT_EQ(ts.phase, pp("1/8·x0 + 1/4·x1"));
}

TEST(dagger, examples) {
    PathSum tdg = normalize(dagger(gate_sum(make_gate(GateName::T, {0})))).sum;
    EXPECT_EQ(tdg.num_paths(), 0u);
    EXPECT_EQ(tdg.phase, pp("7/8·x0"));
    EXPECT_EQ(tdg.outputs[0], bp("x0"));
    EXPECT_EQ(tdg.sqrt2, 0);

    PathSum h = gate_sum(make_gate(GateName::H, {0}));
    EXPECT_LT(max_abs_diff(to_matrix(normalize(dagger(h)).sum), to_matrix(h)), kOracleTolerance);
    EXPECT_EQ(normalize(dagger(h)).sum.num_paths(), 1u);

    PathSum cx = gate_sum(make_gate(GateName::CX, {0, 1}));
    EXPECT_EQ(normalize(dagger(cx)).sum, cx);
}

TEST(evaluate, examples) {
    PathSum h = gate_sum(make_gate(GateName::H, {0}));
    EXPECT_NEAR(std::abs(evaluate(h, {false}, {false}) - Amplitude(std::sqrt(0.5))), 0, 1e-12);
    PathSum cx = gate_sum(make_gate(GateName::CX, {0, 1}));
    EXPECT_NEAR(std::abs(evaluate(cx, {true, true}, {true, false}) - Amplitude(1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(evaluate(epsilon(), {false, true}, {})), 0, 1e-12);
    EXPECT_NEAR(std::abs(evaluate(epsilon(), {true, true}, {}) - Amplitude(1)), 0, 1e-12);
}

TEST(to_matrix, examples) {
    EXPECT_LT(max_abs_diff(to_matrix(PathSum::identity(2)), CMatrix::identity(4)), kOracleTolerance);
    CMatrix h(2, 2);
    double r = std::sqrt(0.5);
    h(0, 0) = r;
    h(0, 1) = r;
    h(1, 0) = r;
    h(1, 1) = -r;
    EXPECT_LT(max_abs_diff(to_matrix(gate_sum(make_gate(GateName::H, {0}))), h), kOracleTolerance);
    CMatrix e = to_matrix(eta());
    ASSERT_EQ(e.rows, 4u);
    ASSERT_EQ(e.cols, 1u);
    EXPECT_NEAR(std::abs(e(0, 0) - Amplitude(1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(e(3, 0) - Amplitude(1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(e(1, 0)) + std::abs(e(2, 0)), 0, 1e-12);
}

TEST(to_matrix, resource_limit) {
    PathSum p = PathSum::identity(12);
    for (uint32_t j = 0; j < 12; j++) {
        p.pathvars.push_back(j);
    }
    try {
        to_matrix(p, OracleLimits{20});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
    }
}

TEST(to_matrix, agrees_with_evaluate) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; t++) {
        PathSum p = random_sum(rng, 3, 3);
        CMatrix m = to_matrix(p);
        for (uint32_t col = 0; col < 8; col++) {
            for (uint32_t row = 0; row < 8; row++) {
                std::vector<bool> in, out;
                for (int b = 2; b >= 0; b--) {
                    in.push_back((col >> b) & 1);
                    out.push_back((row >> b) & 1);
                }
                ASSERT_LT(std::abs(m(row, col) - evaluate(p, in, out)), 1e-9);
            }
        }
    }
}

TEST(homomorphism, compose_tensor_dagger) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; t++) {
        PathSum a = random_sum(rng, 2, 2);
        PathSum b = random_sum(rng, 2, 2);
        CMatrix ma = to_matrix(a);
        CMatrix mb = to_matrix(b);
        PathSum ab = compose(a, b);
        EXPECT_LT(max_abs_diff(to_matrix(ab), ma * mb), 1e-9);
        EXPECT_LT(max_abs_diff(to_matrix(tensor(a, b)), kron(ma, mb)), 1e-9);
        EXPECT_LT(max_abs_diff(to_matrix(dagger(a)), ma.adjoint()), 1e-9);
        // Freshness: no variable collisions.
        EXPECT_NO_THROW(ab.check_vars());
        std::set<uint32_t> uniq(ab.pathvars.begin(), ab.pathvars.end());
        EXPECT_EQ(uniq.size(), ab.pathvars.size());
    }
}

TEST(json, round_trip_and_schema) {
    PathSum h = gate_sum(make_gate(GateName::H, {0}));
    EXPECT_EQ(
        h.to_json(),
        R"({"inputs":1,"outputs":1,"sqrt2":1,"phase":[{"num":1,"log2den":1,"mono":["x0","y0"]}],"out":[[["y0"]]]})");
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; t++) {
        PathSum p = random_sum(rng, 3, 3);
        PathSum q = PathSum::from_json(p.to_json());
        EXPECT_LT(max_abs_diff(to_matrix(p), to_matrix(q)), 1e-9);
        EXPECT_EQ(PathSum::from_json(q.to_json()), q);
    }
    EXPECT_THROW(PathSum::from_json(R"({"inputs":1,"outputs":1,"sqrt2":0,"phase":[{"num":2,"log2den":2,"mono":["x0"]}],"out":[[["x0"]]]})"), Error);
    EXPECT_THROW(PathSum::from_json(R"({"inputs":1,"outputs":1,"sqrt2":0,"phase":[],"out":[[["x4"]]]})"), Error);
    EXPECT_THROW(PathSum::from_json("{"), Error);
}
