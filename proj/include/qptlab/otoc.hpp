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
#include "qptlab/qaoa.hpp"

namespace qptlab {

/// Single-qubit Pauli W for the correlator, on one site.
struct OtocOperator {
    char axis = 'Y';  // X | Y | Z
    int site = 0;
};

enum class TraceMethod { Exact, Stochastic };

struct OtocConfig {
    OtocOperator w1{'Y', 0};
    OtocOperator w2{'Y', 0};
    TraceMethod method = TraceMethod::Exact;
    int n_probe = 32;           // Stochastic only
    uint64_t probe_seed = 1;

    /// Default probe operators: sigma^y on the first qubit and on qubit
    /// floor(n/2).
    static OtocConfig defaults(int n) {
        OtocConfig cfg;
        cfg.w1 = {'Y', 0};
        cfg.w2 = {'Y', n / 2};
        return cfg;
    }
};

/// Infinite-temperature 4-point correlator of one QAOA unitary:
/// (1/d) Tr[W1 U^dag W2 U W1 U^dag W2 U]. Real part; the imaginary residual
/// is tracked as a numerical health metric when requested.
double otoc_single(const CostHamiltonian& ham, const QaoaParams& params,
                   const OtocConfig& cfg, double* imag_residual = nullptr);

struct OtocPoint {
    double ratio = 0;
    int m = 0;
    int p = 0;
    double mean_otoc = 0;
    double std_err = 0;
    double max_imag_residual = 0;
};

/// Double average over random instances and uniform random parameter draws
/// (gamma in [0,2pi), beta in [0,pi)).
std::vector<OtocPoint> otoc_ensemble(int n, int k, SatMode mode,
                                     const std::vector<double>& ratio_grid,
                                     const std::vector<int>& p_grid,
                                     int n_instances, int n_unitary_samples,
                                     uint64_t seed,
                                     const OtocConfig* cfg = nullptr);

/// Haar 2-design reference: -d / (d^2 - 1).
double haar_otoc_value(int n);

}  // namespace qptlab
