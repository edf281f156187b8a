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

#include <string>
#include <vector>

#include "qptlab/hamiltonian.hpp"
#include "qptlab/rng.hpp"
#include "qptlab/statevector.hpp"

namespace qptlab {

struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    int p() const { return static_cast<int>(gammas.size()); }
};

/// Random parameter draw for gradient-SD and OTOC ensembles:
/// gamma in [0, 2pi), beta in [0, pi).
QaoaParams random_params(int p, CounterRng& rng);

/// Alternating diagonal-phase / transverse-mixing layers on |+>^n.
/// Non-empty weights replace the uniform mixing field (QAA reuse).
StateVector evolve(const CostHamiltonian& ham, const QaoaParams& params,
                   std::span<const double> weights = {});

double cost(const CostHamiltonian& ham, const QaoaParams& params);

enum class GradientMethod { Adjoint, CentralFD };

/// Full gradient, layout [dC/dgamma_1..p, dC/dbeta_1..p]. The adjoint path
/// is analytic with O(p) state sweeps; CentralFD uses symmetric differences.
std::vector<double> gradient(const CostHamiltonian& ham, const QaoaParams& params,
                             GradientMethod method = GradientMethod::Adjoint,
                             double fd_step = 1e-5);

/// d cost / d gamma_1 by central finite difference; the observable of the
/// gradient-SD experiments.
double gradient_gamma1_fd(const CostHamiltonian& ham, const QaoaParams& params,
                          double fd_step = 1e-5);

struct GradSdPoint {
    double ratio = 0;
    int m = 0;
    double mean_inv_sd = 0;   // mean over instances of 1/SD (censored SD=0 dropped)
    double inv_mean_sd = 0;   // alternative aggregate: 1 / mean SD
    double mean_sd = 0;
    int n_censored = 0;       // instances with SD = 0
    std::vector<double> instance_sds;
};

std::vector<GradSdPoint> grad_sd_scan(int n, int k, SatMode mode,
                                      const std::vector<double>& ratio_grid, int p,
                                      int n_instances, int n_param_samples,
                                      uint64_t seed);

struct PlateauPoint {
    int n = 0;
    int p = 0;
    double ratio = 0;
    double mean_sd = 0;
    double se_mean_sd = 0;
};

std::vector<PlateauPoint> barren_plateau_scan(int k, SatMode mode, double ratio,
                                              const std::vector<int>& p_grid,
                                              const std::vector<int>& n_grid,
                                              int n_instances, int n_param_samples,
                                              uint64_t seed);

struct InitStrategy {
    enum Kind { Random, PreOptimized } kind = Random;
    double random_range = 3.14159265358979323846;  // uniform [0, range]
    int cascade_step = 4;    // train p' = step, 2*step, ... reusing each optimum
    double epsilon = 0.1;    // fresh layers drawn uniformly in [0, epsilon]
};

struct StopRule {
    double cost_delta = 1e-6;
    double grad_norm = 1e-6;
    int max_steps = 10000;
};

struct TrainResult {
    QaoaParams params;
    double final_cost = 0;
    double initial_cost = 0;
    int steps = 0;
    double wall_time = 0;
    int repetition_index = 0;
};

TrainResult train(const CostHamiltonian& ham, int p, const InitStrategy& init,
                  const StopRule& stop, uint64_t seed);

struct AccuracyReport {
    double approx_ratio = 0;       // expected satisfied / brute-force maximum
    double expected_violations = 0;  // true per-basis-state violation counts
    double expected_energy = 0;      // <H_C>, the alternative decision observable
    bool decided_sat = false;
    bool success = false;            // decision agrees with the brute-force oracle
};

struct SolveResult {
    TrainResult best;
    AccuracyReport report;
};

/// Best-of-`reps` training runs followed by the measurement-statistics
/// accuracy report. Decision: SAT iff expected violations < e_th (strictly).
/// With energy_decision the thresholded observable is <H_C> instead.
SolveResult solve_with_repetitions(const CostHamiltonian& ham,
                                   const SatInstance& inst, int p, int reps,
                                   const InitStrategy& init, const StopRule& stop,
                                   double e_th, uint64_t seed,
                                   bool energy_decision = false);

AccuracyReport evaluate_accuracy(const CostHamiltonian& ham, const SatInstance& inst,
                                 const QaoaParams& params, double e_th,
                                 bool energy_decision = false);

/// One gate = exp(-i * angle * PauliWord) on the listed qubits.
struct Gate {
    std::string kind;  // RZ | RZZ | RZZZ | RX
    std::vector<int> qubits;
    double angle = 0;
};

std::vector<Gate> export_gate_list(const CostHamiltonian& ham,
                                   const QaoaParams& params);

/// Line-oriented text: `RZZ q<i> q<j> <angle>`, 17 significant digits.
std::string gate_list_text(const std::vector<Gate>& gates);

}  // namespace qptlab
