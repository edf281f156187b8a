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
#include <numbers>

#include "qptlab/statevector.hpp"

using namespace qptlab;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("plus state has unit sigma^x expectation on every qubit") {
    StateVector psi = plus_state(3);
    REQUIRE(psi.amps.size() == 8);
    for (const cdouble& a : psi.amps)
        CHECK(std::abs(a - cdouble(1.0 / std::sqrt(8.0), 0)) < 1e-14);
    for (int q = 0; q < 3; q++) {
        StateVector flipped = psi;
        apply_pauli(flipped, uint64_t{1} << q, 0);
        cdouble exp_x = inner_product(psi, flipped);
        CHECK(exp_x.real() == doctest::Approx(1.0));
        CHECK(std::abs(exp_x.imag()) < 1e-14);
    }
}

TEST_CASE("rx at beta = pi/2 maps |0> to -i|1>") {
    StateVector psi;
    psi.n = 1;
    psi.amps = {1.0, 0.0};
    apply_rx_layer(psi, kPi / 2);
    CHECK(std::abs(psi.amps[0]) < 1e-14);
    CHECK(std::abs(psi.amps[1] - cdouble(0, -1)) < 1e-14);
}

TEST_CASE("pauli y on |0> gives i|1>") {
    StateVector psi;
    psi.n = 1;
    psi.amps = {1.0, 0.0};
    apply_pauli(psi, 1, 1);  // Y = i X Z
    CHECK(std::abs(psi.amps[0]) < 1e-14);
    CHECK(std::abs(psi.amps[1] - cdouble(0, 1)) < 1e-14);
}

TEST_CASE("pauli strings square to the identity") {
    StateVector psi = plus_state(4);
    apply_diagonal_phase(psi, std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9,
                                                  10, 11, 12, 13, 14, 15},
                         0.37);
    StateVector twice = psi;
    apply_pauli(twice, 0b1011, 0b0110);
    apply_pauli(twice, 0b1011, 0b0110);
    for (uint64_t b = 0; b < 16; b++)
        CHECK(std::abs(twice.amps[b] - psi.amps[b]) < 1e-14);
}

TEST_CASE("diagonal phase matches the analytic kernel and preserves norm") {
    StateVector psi = plus_state(2);
    std::vector<double> diag = {0.0, 1.0, 2.5, 4.0};
    double gamma = 0.81;
    apply_diagonal_phase(psi, diag, gamma);
    for (uint64_t b = 0; b < 4; b++) {
        cdouble want = 0.5 * std::exp(cdouble(0, -gamma * diag[b]));
        CHECK(std::abs(psi.amps[b] - want) < 1e-14);
    }
    CHECK(norm(psi) == doctest::Approx(1.0));
    CHECK(expectation_diagonal(psi, diag) == doctest::Approx(7.5 / 4));
}

TEST_CASE("weighted rx layer factorizes over qubits") {
    StateVector psi;
    psi.n = 2;
    psi.amps = {1.0, 0.0, 0.0, 0.0};
    std::vector<double> w = {0.3, 1.7};
    double beta = 0.49;
    apply_rx_layer(psi, beta, w);
    for (uint64_t b = 0; b < 4; b++) {
        cdouble want = 1.0;
        for (int q = 0; q < 2; q++) {
            double t = beta * w[q];
            want *= ((b >> q) & 1) ? cdouble(0, -std::sin(t)) : cdouble(std::cos(t), 0);
        }
        CHECK(std::abs(psi.amps[b] - want) < 1e-14);
    }
}

TEST_CASE("sum-x generator matches the rx-layer derivative at beta = 0") {
    StateVector psi = plus_state(3);
    apply_diagonal_phase(psi, std::vector<double>(8, 0.0), 0.0);
    std::vector<double> w = {1.0, 2.0, 0.5};
    std::vector<cdouble> y = apply_sum_x(psi, w);
    double h = 1e-6;
    StateVector plus = psi, minus = psi;
    apply_rx_layer(plus, h, w);
    apply_rx_layer(minus, -h, w);
    for (uint64_t b = 0; b < 8; b++) {
        cdouble fd = (plus.amps[b] - minus.amps[b]) / (2 * h);
        // d/dbeta exp(-i beta Sum) = -i Sum at beta = 0.
        CHECK(std::abs(fd - cdouble(0, -1) * y[b]) < 1e-8);
    }
}

TEST_CASE("measurement distribution is normalized Born weights") {
    StateVector psi = plus_state(2);
    apply_rx_layer(psi, 0.3);
    std::vector<double> p = measure_distribution(psi);
    double total = 0;
    for (uint64_t b = 0; b < 4; b++) {
        CHECK(p[b] == doctest::Approx(std::norm(psi.amps[b])));
        total += p[b];
    }
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("eigendecompose solves sigma^x exactly and returns orthonormal vectors") {
    std::vector<std::vector<cdouble>> H = {{0.0, 1.0}, {1.0, 0.0}};
    EigenDecomposition ed = eigendecompose(H);
    REQUIRE(ed.values.size() == 2);
    CHECK(ed.values[0] == doctest::Approx(-1.0));
    CHECK(ed.values[1] == doctest::Approx(1.0));
    for (int a = 0; a < 2; a++) {
        // H v = lambda v
        for (int r = 0; r < 2; r++) {
            cdouble hv = H[r][0] * ed.vectors[a][0] + H[r][1] * ed.vectors[a][1];
            CHECK(std::abs(hv - ed.values[a] * ed.vectors[a][r]) < 1e-12);
        }
        for (int b = 0; b < 2; b++) {
            cdouble dot = std::conj(ed.vectors[a][0]) * ed.vectors[b][0] +
                          std::conj(ed.vectors[a][1]) * ed.vectors[b][1];
            CHECK(std::abs(dot - cdouble(a == b ? 1.0 : 0.0, 0)) < 1e-12);
        }
    }
}

TEST_CASE("inner product is conjugate linear in the first slot") {
    StateVector a = plus_state(2), b = plus_state(2);
    apply_diagonal_phase(a, std::vector<double>{1, 2, 3, 4}, 0.7);
    apply_diagonal_phase(b, std::vector<double>{4, 1, 2, 2}, 0.2);
    cdouble ab = inner_product(a, b);
    cdouble ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
    CHECK(std::abs(inner_product(a, a) - cdouble(1, 0)) < 1e-14);
}
