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

#include <vector>

#include "qptlab/hamiltonian.hpp"
#include "qptlab/statevector.hpp"

namespace qptlab {

/// Linear ramp s(t) = t / total_time.
struct AnnealSchedule {
    double total_time = 50.0;
    double dt = 0.0;  // 0 means total_time / 1e4

    double step() const { return dt > 0 ? dt : total_time * 1e-4; }
};

struct GapReport {
    double min_gap = 0;
    double argmin_s = 0;
    double inverse_gap_sq = 0;
    std::vector<double> gaps;  // one per interior s-grid point
};

/// Uniform interior grid for the gap scan: n_points values of s in (0, 1),
/// endpoints excluded to avoid trivial end-point degeneracies.
std::vector<double> default_s_grid(int n_points = 201);

/// Ground state of H_B' = sum_i occ_i sigma^x_i: tensor product of
/// (|0> - |1>)/sqrt(2).
StateVector anneal_initial_state(const CostHamiltonian& ham);

/// H(s) = s H_C + (1-s) H_B' with occ-weighted transverse field. The gap at
/// each s is lambda_D - lambda_0 where D is the degeneracy of the final
/// ground space (clustering tolerance 1e-9): the lowest D levels merge into
/// that space as s -> 1, so the relevant obstruction is the first level
/// above it. D = 1 recovers the plain spectral gap.
GapReport min_gap(const CostHamiltonian& ham, const std::vector<double>& s_grid);

/// Lowest two eigenvalues of H(s); exposed for oracle tests.
std::pair<double, double> lowest_two_eigenvalues(const CostHamiltonian& ham, double s);

/// Schroedinger integration i d/dt psi = H(t/T) psi with a unitary
/// second-order split of each step into cost and field half-steps.
StateVector evolve_anneal(const CostHamiltonian& ham, const AnnealSchedule& schedule);

/// Overlap with the D-degenerate ground space of H_C (basis-state
/// indicators of min(diag), clustering tolerance 1e-9).
double success_probability(const CostHamiltonian& ham, const StateVector& final_state);

struct QaaPoint {
    double ratio = 0;
    int m = 0;
    double median_inv_gap_sq = 0;
    double median_inv_gap_sq_sat = 0;    // satisfiable instances only
    double median_inv_gap_sq_unsat = 0;  // unsatisfiable instances only
    double mean_success = 0;
    int n_sat = 0;
    int n_unsat = 0;
};

std::vector<QaaPoint> qaa_scan(int n, int k, SatMode mode,
                               const std::vector<double>& ratio_grid, double total_time,
                               int n_instances, uint64_t seed, int s_points = 201);

}  // namespace qptlab
