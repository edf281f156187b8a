// Copyright 2026 The qptlab Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qptlab {

using cdouble = std::complex<double>;

/// Dense 2^n-amplitude state. Bit convention: qubit i is bit i of the basis
/// index; bit value 1 is |1> (sigma^z = -1).
struct StateVector {
    int n = 0;
    std::vector<cdouble> amps;

    uint64_t dim() const { return uint64_t{1} << n; }
};

StateVector plus_state(int n);

/// |z> -> exp(-i gamma diag[z]) |z>
void apply_diagonal_phase(StateVector& state, std::span<const double> diag,
                          double gamma);

/// prod_i exp(-i beta w_i sigma^x_i); uniform weights when w is empty.
void apply_rx_layer(StateVector& state, double beta,
                    std::span<const double> weights = {});

/// y = (sum_i w_i sigma^x_i) |state>, the transverse-field generator apply.
std::vector<cdouble> apply_sum_x(const StateVector& state,
                                 std::span<const double> weights = {});

double expectation_diagonal(const StateVector& state, std::span<const double> diag);

/// Hermitian Pauli string i^{|x&z|} X^x Z^z applied in place.
void apply_pauli(StateVector& state, uint64_t x_mask, uint64_t z_mask);

cdouble inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& state);

std::vector<double> measure_distribution(const StateVector& state);

/// Dense Hermitian eigendecomposition (ascending values, orthonormal
/// columns). Guarded at n <= 12; serves the QAA gap studies and oracles.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<cdouble>> vectors;  // vectors[i] belongs to values[i]
};

EigenDecomposition eigendecompose(const std::vector<std::vector<cdouble>>& H);

}  // namespace qptlab
