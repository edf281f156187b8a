# Copyright 2026 The qptlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

qptlab = pytest.importorskip("qptlab")


def test_instance_round_trip():
    inst = qptlab.generate_instance(8, 20, 3, qptlab.SatMode.KSAT, 7)
    assert inst.n == 8 and inst.m == 20
    back = qptlab.read_dimacs(qptlab.write_dimacs(inst))
    assert back.m == 20
    assert qptlab.write_dimacs(back) == qptlab.write_dimacs(inst)


def test_cost_and_gradient():
    inst = qptlab.generate_instance(6, 12, 3, qptlab.SatMode.ONE_IN_K, 3)
    ham = qptlab.build_cost_hamiltonian(inst)
    assert ham.dim == 64
    params = qptlab.QaoaParams([0.3], [0.2])
    c = qptlab.cost(ham, params)
    assert 0.0 <= c <= 4 * 12
    ga = qptlab.gradient(ham, params)
    gf = qptlab.gradient(ham, params, method="fd")
    assert max(abs(a - b) for a, b in zip(ga, gf)) < 1e-4


def test_train_improves():
    inst = qptlab.generate_instance(6, 6, 2, qptlab.SatMode.ONE_IN_K, 11)
    ham = qptlab.build_cost_hamiltonian(inst)
    r = qptlab.train(ham, 4, seed=5)
    assert r.final_cost <= r.initial_cost + 1e-12
    dist = qptlab.measure_distribution(qptlab.evolve(ham, r.params))
    assert abs(sum(dist) - 1.0) < 1e-9


def test_brute_force_and_satisfiability():
    inst = qptlab.generate_instance(8, 30, 3, qptlab.SatMode.KSAT, 13)
    best, witness, degeneracy = qptlab.brute_force_max_sat(inst)
    assert 0 < best <= 30 and degeneracy >= 1
    assert qptlab.is_satisfiable(inst) == (best == 30)


def test_lie_closure_and_bound():
    ham = qptlab.build_symmetric_hamiltonian(4, 3)
    dim, truncated = qptlab.lie_closure_dim(ham)
    assert not truncated
    assert 1 <= dim <= qptlab.dla_dim_upper_bound(4)


def test_otoc_identity_circuit():
    inst = qptlab.generate_instance(5, 10, 3, qptlab.SatMode.ONE_IN_K, 2)
    ham = qptlab.build_cost_hamiltonian(inst)
    assert qptlab.otoc(ham, qptlab.QaoaParams()) == pytest.approx(1.0, abs=1e-10)
    d = 2.0**5
    assert qptlab.haar_otoc_value(5) == pytest.approx(-d / (d * d - 1))


def test_gap_and_anneal():
    inst = qptlab.generate_instance(4, 4, 2, qptlab.SatMode.ONE_IN_K, 9)
    ham = qptlab.build_cost_hamiltonian(inst)
    report = qptlab.min_gap(ham, qptlab.default_s_grid(21))
    assert report.min_gap >= 0.0
    assert 0.0 < report.argmin_s < 1.0
    assert qptlab.anneal(ham, total_time=20.0) > 0.5


def test_mwis_reduction():
    inst = qptlab.generate_instance(8, 8, 3, qptlab.SatMode.ONE_IN_K, 21)
    ham = qptlab.build_cost_hamiltonian(inst)
    g = qptlab.reduce_to_mwis(ham)
    s = qptlab.greedy_mwis(g, qptlab.GreedyRule.GWMIN)
    assert qptlab.is_independent_set(g, s)
    opt_w, _ = qptlab.brute_force_mwis(g)
    assert qptlab.set_weight(g, s) <= opt_w + 1e-9
    assert qptlab.set_weight(g, s) >= qptlab.greedy_bound(g, qptlab.GreedyRule.GWMIN) - 1e-9
    assert (opt_w == pytest.approx(8.0)) == qptlab.is_satisfiable(inst)


def test_gate_list_text():
    inst = qptlab.generate_instance(4, 6, 3, qptlab.SatMode.KSAT, 5)
    ham = qptlab.build_cost_hamiltonian(inst)
    text = qptlab.gate_list_text(ham, qptlab.QaoaParams([0.4], [0.3]))
    lines = [l for l in text.splitlines() if l]
    assert any(l.startswith("RX q") for l in lines)
    assert all(l.split()[0] in ("RZ", "RZZ", "RZZZ", "RX") for l in lines)


def test_seed_derivation_determinism():
    assert qptlab.derive_seed(1, 2, 3) == qptlab.derive_seed(1, 2, 3)
    seen = {qptlab.derive_seed(9, i, r) for i in range(100) for r in range(10)}
    assert len(seen) == 1000
