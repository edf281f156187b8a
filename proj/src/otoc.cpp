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

#include "qptlab/otoc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qptlab/parallel.hpp"
#include "qptlab/rng.hpp"

namespace qptlab {

namespace {

void pauli_masks(const OtocOperator& w, int n, uint64_t& x, uint64_t& z) {
    if (w.site < 0 || w.site >= n)
        throw std::invalid_argument("otoc: operator site out of range");
    uint64_t bit = uint64_t{1} << w.site;
    switch (w.axis) {
        case 'X': x = bit; z = 0; break;
        case 'Y': x = bit; z = bit; break;
        case 'Z': x = 0; z = bit; break;
        default: throw std::invalid_argument("otoc: operator axis must be X, Y or Z");
    }
}

void apply_u(StateVector& s, const CostHamiltonian& ham, const QaoaParams& params) {
    for (int l = 0; l < params.p(); ++l) {
        apply_diagonal_phase(s, ham.diag, params.gammas[l]);
        apply_rx_layer(s, params.betas[l]);
    }
}

void apply_u_dag(StateVector& s, const CostHamiltonian& ham, const QaoaParams& params) {
    for (int l = params.p() - 1; l >= 0; --l) {
        apply_rx_layer(s, -params.betas[l]);
        apply_diagonal_phase(s, ham.diag, -params.gammas[l]);
    }
}

// <phi| A A |phi> for A = W1 U^dag W2 U: two chains A|phi> and A^dag|phi>.
cdouble otoc_term(const CostHamiltonian& ham, const QaoaParams& params,
                  uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2,
                  const StateVector& phi) {
    StateVector a = phi;  // A |phi>
    apply_u(a, ham, params);
    apply_pauli(a, x2, z2);
    apply_u_dag(a, ham, params);
    apply_pauli(a, x1, z1);

    StateVector b = phi;  // A^dag |phi>
    apply_pauli(b, x1, z1);
    apply_u(b, ham, params);
    apply_pauli(b, x2, z2);
    apply_u_dag(b, ham, params);

    return inner_product(b, a);  // <phi|A A|phi> = <A^dag phi | A phi>
}

}  // namespace

double otoc_single(const CostHamiltonian& ham, const QaoaParams& params,
                   const OtocConfig& cfg, double* imag_residual) {
    uint64_t x1, z1, x2, z2;
    pauli_masks(cfg.w1, ham.n, x1, z1);
    pauli_masks(cfg.w2, ham.n, x2, z2);
    const uint64_t d = uint64_t{1} << ham.n;

    cdouble acc(0, 0);
    if (cfg.method == TraceMethod::Exact) {
        if (ham.n > 12) throw std::invalid_argument("otoc_single: Exact trace guarded at n <= 12");
        for (uint64_t b = 0; b < d; ++b) {
            StateVector phi;
            phi.n = ham.n;
            phi.amps.assign(d, cdouble(0, 0));
            phi.amps[b] = 1.0;
            acc += otoc_term(ham, params, x1, z1, x2, z2, phi);
        }
        acc /= static_cast<double>(d);
    } else {
        // Hutchinson estimator with random phase probes:
        // (1/d) Tr M = E_phi <phi|M|phi> for |phi> with i.i.d. unit phases.
        if (cfg.n_probe < 1) throw std::invalid_argument("otoc_single: n_probe < 1");
        CounterRng rng(cfg.probe_seed);
        double scale = std::pow(2.0, -0.5 * ham.n);
        for (int t = 0; t < cfg.n_probe; ++t) {
            StateVector phi;
            phi.n = ham.n;
            phi.amps.resize(d);
            for (uint64_t b = 0; b < d; ++b) {
                double th = 2.0 * std::numbers::pi * rng.next_double();
                phi.amps[b] = scale * cdouble(std::cos(th), std::sin(th));
            }
            acc += otoc_term(ham, params, x1, z1, x2, z2, phi);
        }
        acc /= static_cast<double>(cfg.n_probe);
    }
    if (imag_residual) *imag_residual = std::abs(acc.imag());
    return acc.real();
}

std::vector<OtocPoint> otoc_ensemble(int n, int k, SatMode mode,
                                     const std::vector<double>& ratio_grid,
                                     const std::vector<int>& p_grid,
                                     int n_instances, int n_unitary_samples,
                                     uint64_t seed, const OtocConfig* cfg_in) {
    if (n_instances < 1 || n_unitary_samples < 1)
        throw std::invalid_argument("otoc_ensemble: sample counts must be >= 1");
    OtocConfig cfg = cfg_in ? *cfg_in : OtocConfig::defaults(n);
    std::vector<OtocPoint> out;
    for (size_t g = 0; g < ratio_grid.size(); ++g) {
        for (size_t pi = 0; pi < p_grid.size(); ++pi) {
            OtocPoint pt;
            pt.ratio = ratio_grid[g];
            pt.m = static_cast<int>(std::lround(pt.ratio * n));
            pt.p = p_grid[pi];
            std::vector<double> values(n_instances, 0.0);
            std::vector<double> residuals(n_instances, 0.0);
            parallel_for(n_instances, [&](size_t i) {
                uint64_t inst_seed = derive_seed(seed, g * 100 + pi, i);
                SatInstance inst = generate_instance(n, pt.m, k, mode, inst_seed);
                CostHamiltonian ham = build_cost_hamiltonian(inst);
                CounterRng prng(derive_seed(inst_seed, 2, 0));
                double acc = 0, max_res = 0;
                for (int s = 0; s < n_unitary_samples; ++s) {
                    double res = 0;
                    acc += otoc_single(ham, random_params(pt.p, prng), cfg, &res);
                    max_res = std::max(max_res, res);
                }
                values[i] = acc / n_unitary_samples;
                residuals[i] = max_res;
            });
            double mean = 0;
            for (double v : values) mean += v;
            mean /= n_instances;
            double var = 0;
            for (double v : values) var += (v - mean) * (v - mean);
            var /= std::max(1, n_instances - 1);
            pt.mean_otoc = mean;
            pt.std_err = std::sqrt(var / n_instances);
            for (double r : residuals) pt.max_imag_residual = std::max(pt.max_imag_residual, r);
            out.push_back(pt);
        }
    }
    return out;
}

double haar_otoc_value(int n) {
    double d = std::pow(2.0, n);
    return -d / (d * d - 1.0);
}

}  // namespace qptlab
