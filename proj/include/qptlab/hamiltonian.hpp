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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qptlab/sat.hpp"

namespace qptlab {

/// Integer-valued many-body coefficients of a problem Hamiltonian, with the
/// common rational prefactor kept separate so the expansion identities hold
/// without drift:
///
///   k-SAT:     H = (K sigma^zzz + J sigma^zz - h sigma^z)/2^k + m/2^k
///   1-in-3+:   H = (h sigma^z + J sigma^zz)/2 + m
///   1-in-2+:   H = (J sigma^zz)/2 + m/2
///
/// with h_i = -sum_a A_ia, J_ij = sum_a A_ia A_ja, K_ijl = sum_a A_ia A_ja A_la
/// over the n x m literal-sign matrix A.
struct CoefficientTable {
    int n = 0;
    int m = 0;
    int k = 3;
    SatMode mode = SatMode::KSat;
    std::vector<int64_t> h;            // length n
    std::vector<int64_t> J;            // upper triangle, index via j_index()
    std::map<std::array<int, 3>, int64_t> K;  // k = 3 KSat only
    std::vector<int> occ;              // clause occurrence counts
    double prefactor = 1.0;            // rational scale on the Pauli terms
    double constant = 0.0;             // identity offset

    size_t j_index(int i, int j) const {  // requires i < j
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 +
               (j - i - 1);
    }
    int64_t j_at(int i, int j) const {
        if (i == j) return 0;
        if (i > j) std::swap(i, j);
        return J[j_index(i, j)];
    }
};

struct CostHamiltonian {
    CoefficientTable table;
    std::vector<double> diag;  // basis-state energies, length 2^n
    int n = 0;
    int m = 0;
    int k = 3;
    SatMode mode = SatMode::KSat;

    uint64_t dim() const { return uint64_t{1} << n; }
};

/// Per-clause penalty of one clause on one basis state: 1 per violated
/// clause in KSat and 1-in-2+ modes; {0,1,4} for 1-in-3+ (penalty
/// ((sum sigma^z) - 1)^2 / 4).
double clause_penalty(const Clause& c, SatMode mode, int k, uint64_t basis);

CostHamiltonian build_cost_hamiltonian(const SatInstance& inst);

double energy(const CostHamiltonian& ham, uint64_t basis);
double energy(const CostHamiltonian& ham, const Assignment& a);

/// Energy evaluated from the coefficient table (many-body form); the
/// expansion-identity cross-check against the per-clause diag.
double table_energy(const CoefficientTable& t, uint64_t basis);

/// Fully symmetric m >> n limit Hamiltonians:
///   1-in-2+:  sum_{i<j} sigma^z_i sigma^z_j
///   1-in-3+:  2/(n-1) sum_{i<j} sigma^z_i sigma^z_j - sum_i sigma^z_i
CostHamiltonian build_symmetric_hamiltonian(int n, int k);

struct CoefficientStats {
    double mean_J = 0, var_J = 0, se_mean_J = 0;
    double mean_h = 0, var_h = 0, se_mean_h = 0;
    int n_samples = 0;
};

CoefficientStats coefficient_statistics(int n, int m, int k, SatMode mode,
                                        int n_samples, uint64_t seed);

/// Expected satisfied fraction of a uniform random assignment:
/// 1 - 1/2^k for k-SAT, k/2^k for 1-in-k+.
double random_guess_baseline(int k, SatMode mode);

/// Debug export of the diagonal: magic "QPTDIAG1", u32 n, u32 mode, then
/// 2^n little-endian doubles.
void write_diag(const CostHamiltonian& ham, const std::string& path);

}  // namespace qptlab
