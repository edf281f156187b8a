// Copyright 2026 The qptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "qptlab/dla.hpp"

using namespace qptlab;

TEST_CASE("symplectic commutation test") {
    PauliString x{1, 0}, z{0, 1}, y{1, 1};
    CHECK(x.commutes_with(x));
    CHECK_FALSE(x.commutes_with(z));
    CHECK_FALSE(x.commutes_with(y));
    PauliString xx{3, 0}, zz{0, 3};
    CHECK(xx.commutes_with(zz));  // two anticommuting sites commute overall
}

TEST_CASE("string rendering follows the leftmost-is-qubit-0 charset") {
    CHECK(PauliString{1, 0}.str(3) == "XII");
    CHECK(PauliString{0, 4}.str(3) == "IIZ");
    CHECK(PauliString{3, 2}.str(3) == "XYI");
}

TEST_CASE("single-site commutator: [X, Z] / i = -2Y") {
    PauliElement x, z;
    x.n = z.n = 1;
    x.add({1, 0}, 1);
    z.add({0, 1}, 1);
    PauliElement c = commutator(x, z);
    REQUIRE(c.terms.size() == 1);
    auto it = c.terms.begin();
    CHECK(it->first == PauliString{1, 1});
    CHECK(it->second == Rational(-2));
}

TEST_CASE("commuting strings drop out of the bracket") {
    PauliElement a, b;
    a.n = b.n = 2;
    a.add({3, 0}, 1);  // XX
    b.add({0, 3}, 1);  // ZZ
    CHECK(commutator(a, b).empty());
    CHECK(commutator(a, a).empty());
}

TEST_CASE("transverse field against the zz chain gives the yz + zy combination") {
    int n = 3;
    PauliElement field, zz;
    field.n = zz.n = n;
    for (int i = 0; i < n; i++) field.add({uint32_t{1} << i, 0}, 1);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            zz.add({0, (uint32_t{1} << i) | (uint32_t{1} << j)}, 1);
    PauliElement c = commutator(field, zz);
    // Every term is Y on one site, Z on another, with one common coefficient.
    REQUIRE(c.terms.size() == 6);
    Rational coeff = c.terms.begin()->second;
    CHECK(coeff != 0);
    for (const auto& [s, v] : c.terms) {
        CHECK(v == coeff);
        CHECK(__builtin_popcount(s.x) == 1);   // one Y site
        CHECK(__builtin_popcount(s.z) == 2);   // Y site plus one Z site
        CHECK((s.z & s.x) == s.x);
    }
}

TEST_CASE("closure of {X, Z} on one qubit is the full su(2)") {
    PauliElement x, z;
    x.n = z.n = 1;
    x.add({1, 0}, 1);
    z.add({0, 1}, 1);
    LieClosure c = lie_closure({x, z});
    CHECK(c.dim == 3);
    CHECK_FALSE(c.truncated);
    CHECK(c.basis.size() == 3);
}

TEST_CASE("max_dim truncation is flagged") {
    PauliElement x, z;
    x.n = z.n = 1;
    x.add({1, 0}, 1);
    z.add({0, 1}, 1);
    LieClosure c = lie_closure({x, z}, 2);
    CHECK(c.truncated);
    CHECK(c.dim <= 2);
}

TEST_CASE("dimension bound formula") {
    CHECK(dim_upper_bound(1) == 3);
    CHECK(dim_upper_bound(2) == 9);
    CHECK(dim_upper_bound(6) == 83);
    for (int n = 1; n <= 8; n++) {
        // binom(n+3, n) - 1
        int64_t b = (int64_t(n + 1) * (n + 2) * (n + 3)) / 6 - 1;
        CHECK(dim_upper_bound(n) == b);
    }
}

TEST_CASE("symmetric-limit generators close below the cubic bound") {
    for (int n : {3, 4}) {
        for (int k : {2, 3}) {
            CostHamiltonian ham = build_symmetric_hamiltonian(n, k);
            auto [hc, hb] = qaoa_generators(ham);
            LieClosure c = lie_closure({hc, hb});
            CHECK_FALSE(c.truncated);
            CHECK(c.dim >= 1);
            CHECK(c.dim <= dim_upper_bound(n));
        }
    }
}

TEST_CASE("generic instances reach the full closure dimension scaling") {
    SatInstance inst = generate_instance(4, 12, 3, SatMode::OneInKSatPlus, 91);
    CostHamiltonian ham = build_cost_hamiltonian(inst);
    auto [hc, hb] = qaoa_generators(ham);
    LieClosure c = lie_closure({hc, hb}, -1, false);
    CHECK(c.basis.empty());  // keep_basis = false skips materialization
    CHECK(c.dim > dim_upper_bound(4) / 2);  // generic case is not symmetric
    CHECK(c.dim <= 255);                    // 4^n - 1
}

TEST_CASE("scan aggregates per-instance dimensions") {
    std::vector<DlaPoint> pts =
        dla_scan(3, 2, SatMode::OneInKSatPlus, {1.0, 2.0}, 4, 17);
    REQUIRE(pts.size() == 2);
    for (const DlaPoint& p : pts) {
        REQUIRE(p.dims.size() == 4);
        double mean = 0;
        for (int d : p.dims) {
            CHECK(d >= 1);
            CHECK(d <= 63);
            mean += d;
        }
        CHECK(p.mean_dim == doctest::Approx(mean / 4));
    }
}

TEST_CASE("generator text round trip") {
    PauliElement e = parse_pauli_element("3/2 * XIZ", 3);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms.begin()->first == PauliString{1, 4});
    CHECK(e.terms.begin()->second == Rational(3, 2));
    std::string text = pauli_element_text(e);
    PauliElement back = parse_pauli_element(text, 3);
    CHECK(back.terms == e.terms);
    std::vector<PauliElement> gens = parse_generators("1 * XI\n-2 * ZZ\n", 2);
    REQUIRE(gens.size() == 2);
    CHECK(gens[1].terms.begin()->second == Rational(-2));
}
