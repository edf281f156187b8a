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

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qptlab/hamiltonian.hpp"

using namespace qptlab;

TEST_CASE("exactly-one penalty takes values {0, 1, 4} on a 3-variable clause") {
    Clause c;
    c.lits = {{0, 1}, {1, 1}, {2, 1}};
    // ((sum sigma^z) - 1)^2 / 4 with sigma^z = +1 for false, -1 for true.
    for (uint64_t b = 0; b < 8; b++) {
        int t = __builtin_popcountll(b);
        double expected = (t == 1) ? 0 : (t == 3 ? 4 : 1);
        CHECK(clause_penalty(c, SatMode::OneInKSatPlus, 3, b) ==
              doctest::Approx(expected));
    }
    Clause c2;
    c2.lits = {{0, 1}, {1, 1}};
    for (uint64_t b = 0; b < 4; b++) {
        double expected = (__builtin_popcountll(b) == 1) ? 0 : 1;
        CHECK(clause_penalty(c2, SatMode::OneInKSatPlus, 2, b) ==
              doctest::Approx(expected));
    }
}

TEST_CASE("diagonal equals per-clause penalties and violation counts") {
    for (SatMode mode : {SatMode::KSat, SatMode::OneInKSatPlus}) {
        for (int k : {2, 3}) {
            SatInstance inst = generate_instance(6, 20, k, mode, 31 + k);
            CostHamiltonian ham = build_cost_hamiltonian(inst);
            REQUIRE(ham.diag.size() == 64);
            for (uint64_t b = 0; b < 64; b++) {
                double direct = 0;
                for (const Clause& c : inst.clauses)
                    direct += clause_penalty(c, mode, k, b);
                CHECK(ham.diag[b] == doctest::Approx(direct).epsilon(1e-14));
                if (mode == SatMode::KSat)
                    CHECK(ham.diag[b] ==
                          doctest::Approx(count_violations(inst, b)));
                CHECK(energy(ham, b) == doctest::Approx(ham.diag[b]));
            }
        }
    }
}

TEST_CASE("many-body expansion reproduces the diagonal to 1e-12") {
    for (SatMode mode : {SatMode::KSat, SatMode::OneInKSatPlus}) {
        for (int k : {2, 3}) {
            SatInstance inst = generate_instance(8, 32, k, mode, 501 + k);
            CostHamiltonian ham = build_cost_hamiltonian(inst);
            for (uint64_t b = 0; b < ham.dim(); b++) {
                CHECK(std::abs(table_energy(ham.table, b) - ham.diag[b]) < 1e-12);
            }
        }
    }
}

TEST_CASE("coefficient table bookkeeping is consistent") {
    SatInstance inst = generate_instance(7, 21, 3, SatMode::OneInKSatPlus, 9);
    CostHamiltonian ham = build_cost_hamiltonian(inst);
    const CoefficientTable& t = ham.table;
    CHECK(t.n == 7);
    CHECK(t.m == 21);
    int occ_total = 0;
    for (int o : t.occ) occ_total += o;
    CHECK(occ_total == 3 * 21);  // each clause touches k variables
    // h_i = -sum_a A_ia; all-positive literals give h_i = -occ_i.
    for (int i = 0; i < t.n; i++) CHECK(t.h[i] == -t.occ[i]);
    CHECK(t.j_at(2, 5) == t.j_at(5, 2));
    CHECK(t.j_at(3, 3) == 0);
}

TEST_CASE("symmetric limit Hamiltonians match their closed forms") {
    int n = 5;
    CostHamiltonian two = build_symmetric_hamiltonian(n, 2);
    CostHamiltonian three = build_symmetric_hamiltonian(n, 3);
    for (uint64_t b = 0; b < (uint64_t{1} << n); b++) {
        double zz = 0, z = 0;
        std::vector<int> s(n);
        for (int i = 0; i < n; i++) s[i] = ((b >> i) & 1) ? -1 : 1;
        for (int i = 0; i < n; i++) {
            z += s[i];
            for (int j = i + 1; j < n; j++) zz += s[i] * s[j];
        }
        CHECK(two.diag[b] == doctest::Approx(zz).epsilon(1e-12));
        CHECK(three.diag[b] ==
              doctest::Approx(2.0 / (n - 1) * zz - z).epsilon(1e-12));
    }
}

TEST_CASE("mean two-body coefficient matches the ensemble prediction") {
    int n = 10, m = 40, samples = 400;
    CoefficientStats s3 =
        coefficient_statistics(n, m, 3, SatMode::OneInKSatPlus, samples, 21);
    double pred3 = 6.0 * m / (n * (n - 1.0));
    CHECK(std::abs(s3.mean_J - pred3) < 4 * s3.se_mean_J + 1e-12);
    CoefficientStats s2 =
        coefficient_statistics(n, m, 2, SatMode::OneInKSatPlus, samples, 22);
    double pred2 = 2.0 * m / (n * (n - 1.0));
    CHECK(std::abs(s2.mean_J - pred2) < 4 * s2.se_mean_J + 1e-12);
    // KSat signs are symmetric, so J averages to zero.
    CoefficientStats sk = coefficient_statistics(n, m, 3, SatMode::KSat, samples, 23);
    CHECK(std::abs(sk.mean_J) < 4 * sk.se_mean_J + 1e-12);
}

TEST_CASE("random-assignment baseline") {
    CHECK(random_guess_baseline(3, SatMode::KSat) == doctest::Approx(7.0 / 8));
    CHECK(random_guess_baseline(2, SatMode::KSat) == doctest::Approx(3.0 / 4));
    CHECK(random_guess_baseline(3, SatMode::OneInKSatPlus) ==
          doctest::Approx(3.0 / 8));
    CHECK(random_guess_baseline(2, SatMode::OneInKSatPlus) ==
          doctest::Approx(1.0 / 2));
}

TEST_CASE("diag export writes the documented binary layout") {
    SatInstance inst = generate_instance(4, 8, 3, SatMode::KSat, 2);
    CostHamiltonian ham = build_cost_hamiltonian(inst);
    std::string path = "/tmp/qptlab_test_diag.bin";
    write_diag(ham, path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    char magic[8];
    in.read(magic, 8);
    CHECK(std::string(magic, 8) == "QPTDIAG1");
    uint32_t rn = 0, rmode = 0;
    in.read(reinterpret_cast<char*>(&rn), 4);
    in.read(reinterpret_cast<char*>(&rmode), 4);
    CHECK(rn == 4);
    std::vector<double> vals(16);
    in.read(reinterpret_cast<char*>(vals.data()), 16 * 8);
    REQUIRE(in.good());
    for (int i = 0; i < 16; i++) CHECK(vals[i] == doctest::Approx(ham.diag[i]));
    std::remove(path.c_str());
}
