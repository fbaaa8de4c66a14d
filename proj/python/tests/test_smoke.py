# Copyright 2026 The PSS Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest

import pss


def dft(n):
    d = 2**n
    r, c = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return np.exp(2j * np.pi * r * c / d) / np.sqrt(d)


def test_hadamard_sum_matches_matrix():
    h = pss.simulate(pss.Circuit.parse("qubits 1\nh 0\n"))
    assert h.inputs == 1 and h.num_paths == 1
    np.testing.assert_allclose(h.to_matrix(), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-12)
    assert pss.PathSum.from_json(h.to_json()) == h


def test_qft_synthesis_matches_dft():
    c = pss.synthesize(pss.qft(3))
    assert c.stats()["counts"]["h"] == 3
    u = c.unitary()
    k = np.flatnonzero(np.abs(u) > 1e-9)[0]
    phase = dft(3).flat[k] / u.flat[k]
    np.testing.assert_allclose(u * phase, dft(3), atol=1e-9)


def test_clifford_round_trip():
    c = pss.random_circuit("clifford", 5, 60, seed=4)
    r = pss.synth_clifford(pss.simulate_reduced(c))
    np.testing.assert_allclose(r.unitary(), c.unitary(), atol=1e-9)
    assert pss.verify(c, r)["verdict"] == "Equal"


def test_verify_verdicts():
    t = pss.Circuit.parse("qubits 1\nt 0\n")
    tdg = pss.Circuit.parse("qubits 1\ntdg 0\n")
    assert pss.verify(t, tdg)["verdict"] == "NotEqual"
    zx = pss.Circuit.parse("qubits 1\nz 0\nx 0\nz 0\nx 0\n")
    res = pss.verify(zx, pss.Circuit(1))
    assert res["verdict"] == "EqualUpToGlobalPhase"
    assert res["phase"] == pytest.approx(0.5)


def test_decompile_and_pass():
    cs = pss.Circuit.parse("qubits 2\nt 0\nt 1\ncx 0 1\ntdg 1\ncx 0 1\n")
    assert pss.decompile(cs).gates() == ["crz 1/2^2 0 1"]
    hht = pss.Circuit.parse("qubits 1\nh 0\nh 0\nt 0\n")
    assert str(pss.clifford_pass(hht, min_run=2)) == "qubits 1\nt 0\n"


def test_taut():
    assert pss.taut("x | !x")
    assert not pss.taut("x & y")


def test_errors_carry_kind():
    with pytest.raises(pss.Error) as info:
        pss.Circuit.parse("qubits 1\nh 3\n")
    assert info.value.kind == "WidthError"
    dup = pss.PathSum.from_json('{"inputs":2,"outputs":2,"sqrt2":0,"phase":[],"out":[[["x0"]],[["x0"]]]}')
    assert not dup.is_unitary_clifford()
    with pytest.raises(pss.Error):
        pss.synth_clifford(dup)
