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

#include "qptlab/statevector.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qptlab {

StateVector plus_state(int n) {
    if (n < 1 || n > 26) throw std::invalid_argument("plus_state: n out of range");
    StateVector s;
    s.n = n;
    s.amps.assign(uint64_t{1} << n, cdouble(std::pow(2.0, -0.5 * n), 0.0));
    return s;
}

void apply_diagonal_phase(StateVector& state, std::span<const double> diag,
                          double gamma) {
    if (diag.size() != state.dim())
        throw std::invalid_argument("apply_diagonal_phase: dimension mismatch");
    for (uint64_t z = 0; z < state.dim(); ++z) {
        double phi = -gamma * diag[z];
        state.amps[z] *= cdouble(std::cos(phi), std::sin(phi));
    }
}

void apply_rx_layer(StateVector& state, double beta,
                    std::span<const double> weights) {
    if (!weights.empty() && weights.size() != static_cast<size_t>(state.n))
        throw std::invalid_argument("apply_rx_layer: weight length mismatch");
    for (int q = 0; q < state.n; ++q) {
        double w = weights.empty() ? 1.0 : weights[q];
        double c = std::cos(beta * w);
        double s = std::sin(beta * w);
        const uint64_t stride = uint64_t{1} << q;
        // In-place butterfly over pairs (z, z | stride).
        for (uint64_t base = 0; base < state.dim(); base += 2 * stride) {
            for (uint64_t lo = base; lo < base + stride; ++lo) {
                cdouble a0 = state.amps[lo];
                cdouble a1 = state.amps[lo + stride];
                state.amps[lo] = c * a0 - cdouble(0, s) * a1;
                state.amps[lo + stride] = c * a1 - cdouble(0, s) * a0;
            }
        }
    }
}

std::vector<cdouble> apply_sum_x(const StateVector& state,
                                 std::span<const double> weights) {
    if (!weights.empty() && weights.size() != static_cast<size_t>(state.n))
        throw std::invalid_argument("apply_sum_x: weight length mismatch");
    std::vector<cdouble> out(state.dim(), cdouble(0, 0));
    for (int q = 0; q < state.n; ++q) {
        double w = weights.empty() ? 1.0 : weights[q];
        if (w == 0.0) continue;
        const uint64_t bit = uint64_t{1} << q;
        for (uint64_t z = 0; z < state.dim(); ++z) out[z] += w * state.amps[z ^ bit];
    }
    return out;
}

double expectation_diagonal(const StateVector& state, std::span<const double> diag) {
    if (diag.size() != state.dim())
        throw std::invalid_argument("expectation_diagonal: dimension mismatch");
    double acc = 0.0;
    for (uint64_t z = 0; z < state.dim(); ++z) acc += std::norm(state.amps[z]) * diag[z];
    return acc;
}

void apply_pauli(StateVector& state, uint64_t x_mask, uint64_t z_mask) {
    if (state.n < 64 && ((x_mask | z_mask) >> state.n) != 0)
        throw std::invalid_argument("apply_pauli: mask exceeds qubit count");
    // W = i^{|x&z|} X^x Z^z, so W|b> = i^c (-1)^{|z&b|} |b ^ x>.
    int c = std::popcount(x_mask & z_mask) & 3;
    cdouble phase = c == 0   ? cdouble(1, 0)
                    : c == 1 ? cdouble(0, 1)
                    : c == 2 ? cdouble(-1, 0)
                             : cdouble(0, -1);
    std::vector<cdouble> out(state.dim());
    for (uint64_t b = 0; b < state.dim(); ++b) {
        cdouble v = phase * state.amps[b];
        if (std::popcount(z_mask & b) & 1) v = -v;
        out[b ^ x_mask] = v;
    }
    state.amps = std::move(out);
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    cdouble acc(0, 0);
    for (uint64_t z = 0; z < a.dim(); ++z) acc += std::conj(a.amps[z]) * b.amps[z];
    return acc;
}

double norm(const StateVector& state) {
    double acc = 0.0;
    for (const cdouble& a : state.amps) acc += std::norm(a);
    return std::sqrt(acc);
}

std::vector<double> measure_distribution(const StateVector& state) {
    std::vector<double> p(state.dim());
    for (uint64_t z = 0; z < state.dim(); ++z) p[z] = std::norm(state.amps[z]);
    return p;
}

EigenDecomposition eigendecompose(const std::vector<std::vector<cdouble>>& H) {
    const size_t d = H.size();
    if (d == 0 || d > (size_t{1} << 12))
        throw std::invalid_argument("eigendecompose: dimension guard (n <= 12)");
    Eigen::MatrixXcd M(d, d);
    for (size_t i = 0; i < d; ++i) {
        if (H[i].size() != d) throw std::invalid_argument("eigendecompose: ragged matrix");
        for (size_t j = 0; j < d; ++j) M(i, j) = H[i][j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose: solver failed");
    EigenDecomposition out;
    out.values.resize(d);
    out.vectors.assign(d, std::vector<cdouble>(d));
    for (size_t i = 0; i < d; ++i) {
        out.values[i] = solver.eigenvalues()(i);
        for (size_t j = 0; j < d; ++j) out.vectors[i][j] = solver.eigenvectors()(j, i);
    }
    return out;
}

}  // namespace qptlab
