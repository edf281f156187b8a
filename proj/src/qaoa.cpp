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

#include "qptlab/qaoa.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qptlab/bfgs.hpp"
#include "qptlab/parallel.hpp"

namespace qptlab {

QaoaParams random_params(int p, CounterRng& rng) {
    QaoaParams params;
    params.gammas.resize(p);
    params.betas.resize(p);
    for (int l = 0; l < p; ++l) params.gammas[l] = 2.0 * std::numbers::pi * rng.next_double();
    for (int l = 0; l < p; ++l) params.betas[l] = std::numbers::pi * rng.next_double();
    return params;
}

StateVector evolve(const CostHamiltonian& ham, const QaoaParams& params,
                   std::span<const double> weights) {
    if (params.gammas.size() != params.betas.size())
        throw std::invalid_argument("evolve: gamma/beta length mismatch");
    StateVector state = plus_state(ham.n);
    for (int l = 0; l < params.p(); ++l) {
        apply_diagonal_phase(state, ham.diag, params.gammas[l]);
        apply_rx_layer(state, params.betas[l], weights);
    }
    return state;
}

double cost(const CostHamiltonian& ham, const QaoaParams& params) {
    StateVector state = evolve(ham, params);
    return expectation_diagonal(state, ham.diag);
}

namespace {

std::vector<double> gradient_adjoint(const CostHamiltonian& ham,
                                     const QaoaParams& params) {
    const int p = params.p();
    std::vector<double> grad(2 * p, 0.0);
    StateVector psi = evolve(ham, params);

    // lambda = H_C |psi>; both vectors are then rolled back layer by layer.
    StateVector lam = psi;
    for (uint64_t z = 0; z < lam.dim(); ++z) lam.amps[z] *= ham.diag[z];

    for (int l = p - 1; l >= 0; --l) {
        // dC/dbeta_l = 2 Im <lambda | H_B | psi> at the state after layer l.
        std::vector<cdouble> hb_psi = apply_sum_x(psi);
        cdouble acc(0, 0);
        for (uint64_t z = 0; z < psi.dim(); ++z)
            acc += std::conj(lam.amps[z]) * hb_psi[z];
        grad[p + l] = 2.0 * acc.imag();

        apply_rx_layer(psi, -params.betas[l]);
        apply_rx_layer(lam, -params.betas[l]);

        // dC/dgamma_l = 2 Im <lambda | H_C | psi> after the mixing undo.
        acc = cdouble(0, 0);
        for (uint64_t z = 0; z < psi.dim(); ++z)
            acc += std::conj(lam.amps[z]) * ham.diag[z] * psi.amps[z];
        grad[l] = 2.0 * acc.imag();

        apply_diagonal_phase(psi, ham.diag, -params.gammas[l]);
        apply_diagonal_phase(lam, ham.diag, -params.gammas[l]);
    }
    return grad;
}

std::vector<double> gradient_fd(const CostHamiltonian& ham, const QaoaParams& params,
                                double step) {
    if (step <= 0) throw std::invalid_argument("gradient: fd step must be positive");
    const int p = params.p();
    std::vector<double> grad(2 * p, 0.0);
    QaoaParams pp = params;
    for (int l = 0; l < p; ++l) {
        pp.gammas[l] = params.gammas[l] + step;
        double fp = cost(ham, pp);
        pp.gammas[l] = params.gammas[l] - step;
        double fm = cost(ham, pp);
        pp.gammas[l] = params.gammas[l];
        grad[l] = (fp - fm) / (2.0 * step);
    }
    for (int l = 0; l < p; ++l) {
        pp.betas[l] = params.betas[l] + step;
        double fp = cost(ham, pp);
        pp.betas[l] = params.betas[l] - step;
        double fm = cost(ham, pp);
        pp.betas[l] = params.betas[l];
        grad[p + l] = (fp - fm) / (2.0 * step);
    }
    return grad;
}

}  // namespace

std::vector<double> gradient(const CostHamiltonian& ham, const QaoaParams& params,
                             GradientMethod method, double fd_step) {
    return method == GradientMethod::Adjoint ? gradient_adjoint(ham, params)
                                             : gradient_fd(ham, params, fd_step);
}

double gradient_gamma1_fd(const CostHamiltonian& ham, const QaoaParams& params,
                          double fd_step) {
    if (params.p() == 0) return 0.0;
    QaoaParams pp = params;
    pp.gammas[0] = params.gammas[0] + fd_step;
    double fp = cost(ham, pp);
    pp.gammas[0] = params.gammas[0] - fd_step;
    double fm = cost(ham, pp);
    return (fp - fm) / (2.0 * fd_step);
}

namespace {

double sample_sd(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(xs.size() - 1));
}

double instance_grad_sd(const CostHamiltonian& ham, int p, int n_param_samples,
                        uint64_t param_seed) {
    CounterRng rng(param_seed);
    std::vector<double> grads(n_param_samples);
    for (int s = 0; s < n_param_samples; ++s)
        grads[s] = gradient_gamma1_fd(ham, random_params(p, rng));
    return sample_sd(grads);
}

}  // namespace

std::vector<GradSdPoint> grad_sd_scan(int n, int k, SatMode mode,
                                      const std::vector<double>& ratio_grid, int p,
                                      int n_instances, int n_param_samples,
                                      uint64_t seed) {
    if (n_param_samples < 2)
        throw std::invalid_argument("grad_sd_scan: n_param_samples < 2");
    std::vector<GradSdPoint> out(ratio_grid.size());
    for (size_t g = 0; g < ratio_grid.size(); ++g) {
        GradSdPoint& pt = out[g];
        pt.ratio = ratio_grid[g];
        pt.m = static_cast<int>(std::lround(pt.ratio * n));
        pt.instance_sds.assign(n_instances, 0.0);
        parallel_for(n_instances, [&](size_t i) {
            uint64_t inst_seed = derive_seed(seed, g, i);
            SatInstance inst = generate_instance(n, pt.m, k, mode, inst_seed);
            CostHamiltonian ham = build_cost_hamiltonian(inst);
            pt.instance_sds[i] =
                instance_grad_sd(ham, p, n_param_samples, derive_seed(inst_seed, 1, 0));
        });
        double sum_inv = 0, sum_sd = 0;
        int live = 0;
        for (double sd : pt.instance_sds) {
            sum_sd += sd;
            if (sd > 0) {
                sum_inv += 1.0 / sd;
                ++live;
            } else {
                ++pt.n_censored;
            }
        }
        pt.mean_sd = n_instances ? sum_sd / n_instances : 0.0;
        pt.mean_inv_sd = live ? sum_inv / live : 0.0;
        pt.inv_mean_sd = pt.mean_sd > 0 ? 1.0 / pt.mean_sd : 0.0;
    }
    return out;
}

std::vector<PlateauPoint> barren_plateau_scan(int k, SatMode mode, double ratio,
                                              const std::vector<int>& p_grid,
                                              const std::vector<int>& n_grid,
                                              int n_instances, int n_param_samples,
                                              uint64_t seed) {
    std::vector<PlateauPoint> out;
    for (size_t ni = 0; ni < n_grid.size(); ++ni) {
        for (size_t pi = 0; pi < p_grid.size(); ++pi) {
            PlateauPoint pt;
            pt.n = n_grid[ni];
            pt.p = p_grid[pi];
            pt.ratio = ratio;
            int m = static_cast<int>(std::lround(ratio * pt.n));
            std::vector<double> sds(n_instances);
            parallel_for(n_instances, [&](size_t i) {
                uint64_t inst_seed = derive_seed(seed, ni * 1000 + pi, i);
                SatInstance inst = generate_instance(pt.n, m, k, mode, inst_seed);
                CostHamiltonian ham = build_cost_hamiltonian(inst);
                sds[i] = instance_grad_sd(ham, pt.p, n_param_samples,
                                          derive_seed(inst_seed, 1, 0));
            });
            double mean = 0;
            for (double sd : sds) mean += sd;
            mean /= std::max(1, n_instances);
            pt.mean_sd = mean;
            pt.se_mean_sd = sample_sd(sds) / std::sqrt(std::max(1, n_instances));
            out.push_back(pt);
        }
    }
    return out;
}

namespace {

QaoaParams initial_params(const CostHamiltonian& ham, int p, const InitStrategy& init,
                          const StopRule& stop, uint64_t seed, int* cascade_steps) {
    CounterRng rng(derive_seed(seed, 0xA11, 0));
    if (init.kind == InitStrategy::Random || p <= init.cascade_step) {
        QaoaParams params;
        params.gammas.resize(p);
        params.betas.resize(p);
        for (int l = 0; l < p; ++l) params.gammas[l] = init.random_range * rng.next_double();
        for (int l = 0; l < p; ++l) params.betas[l] = init.random_range * rng.next_double();
        return params;
    }
    // Pre-optimization: the first p' layers come from a trained p'-layer
    // circuit, the remainder starts uniformly in [0, epsilon].
    int p_prime = ((p - 1) / init.cascade_step) * init.cascade_step;
    TrainResult sub = train(ham, p_prime, init, stop, derive_seed(seed, 0xCA5, 0));
    if (cascade_steps) *cascade_steps += sub.steps;
    QaoaParams params = sub.params;
    for (int l = p_prime; l < p; ++l) {
        params.gammas.push_back(init.epsilon * rng.next_double());
        params.betas.push_back(init.epsilon * rng.next_double());
    }
    return params;
}

}  // namespace

TrainResult train(const CostHamiltonian& ham, int p, const InitStrategy& init,
                  const StopRule& stop, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    int cascade_steps = 0;
    QaoaParams params = initial_params(ham, p, init, stop, seed, &cascade_steps);

    TrainResult res;
    if (p == 0) {
        res.params = params;
        res.initial_cost = res.final_cost = cost(ham, params);
        res.steps = 0;
        return res;
    }

    auto pack = [p](const QaoaParams& q) {
        std::vector<double> x(q.gammas);
        x.insert(x.end(), q.betas.begin(), q.betas.end());
        return x;
    };
    auto unpack = [p](const std::vector<double>& x) {
        QaoaParams q;
        q.gammas.assign(x.begin(), x.begin() + p);
        q.betas.assign(x.begin() + p, x.end());
        return q;
    };

    ObjectiveFn fg = [&](const std::vector<double>& x, std::vector<double>& g) {
        QaoaParams q = unpack(x);
        g = gradient(ham, q, GradientMethod::Adjoint);
        double c = cost(ham, q);
        if (!std::isfinite(c))
            throw std::runtime_error("train: non-finite cost encountered");
        return c;
    };

    BfgsOptions opts;
    opts.cost_delta_tol = stop.cost_delta;
    opts.grad_norm_tol = stop.grad_norm;
    opts.max_steps = stop.max_steps;

    res.initial_cost = cost(ham, params);
    BfgsResult bf = bfgs_minimize(fg, pack(params), opts);
    res.params = unpack(bf.x);
    res.final_cost = std::min(bf.f, res.initial_cost);
    res.steps = bf.steps + cascade_steps;
    res.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

AccuracyReport evaluate_accuracy(const CostHamiltonian& ham, const SatInstance& inst,
                                 const QaoaParams& params, double e_th,
                                 bool energy_decision) {
    AccuracyReport rep;
    StateVector state = evolve(ham, params);
    std::vector<double> prob = measure_distribution(state);
    double exp_viol = 0, exp_sat = 0;
    for (uint64_t z = 0; z < state.dim(); ++z) {
        if (prob[z] == 0.0) continue;
        int v = count_violations(inst, z);
        exp_viol += prob[z] * v;
        exp_sat += prob[z] * (inst.m() - v);
    }
    rep.expected_violations = exp_viol;
    rep.expected_energy = expectation_diagonal(state, ham.diag);
    BruteForceResult bf = brute_force_max_sat(inst);
    rep.approx_ratio = bf.max_satisfied > 0 ? exp_sat / bf.max_satisfied : 1.0;
    double decision_value = energy_decision ? rep.expected_energy : exp_viol;
    rep.decided_sat = decision_value < e_th;  // ties decide UNSAT
    rep.success = rep.decided_sat == (bf.max_satisfied == inst.m());
    return rep;
}

SolveResult solve_with_repetitions(const CostHamiltonian& ham,
                                   const SatInstance& inst, int p, int reps,
                                   const InitStrategy& init, const StopRule& stop,
                                   double e_th, uint64_t seed, bool energy_decision) {
    if (reps < 1) throw std::invalid_argument("solve_with_repetitions: reps < 1");
    SolveResult out;
    bool have = false;
    for (int r = 0; r < reps; ++r) {
        TrainResult res = train(ham, p, init, stop, derive_seed(seed, 0x50F, r));
        res.repetition_index = r;
        if (!have || res.final_cost < out.best.final_cost) {
            out.best = res;
            have = true;
        }
    }
    out.report = evaluate_accuracy(ham, inst, out.best.params, e_th, energy_decision);
    return out;
}

std::vector<Gate> export_gate_list(const CostHamiltonian& ham,
                                   const QaoaParams& params) {
    std::vector<Gate> gates;
    const CoefficientTable& t = ham.table;
    const bool ksat = ham.mode == SatMode::KSat;
    const bool linear = ksat || ham.k == 3;  // 1-in-2+ has no RZ terms
    for (int l = 0; l < params.p(); ++l) {
        double g = params.gammas[l];
        if (linear) {
            for (int i = 0; i < ham.n; ++i) {
                if (t.h[i] == 0) continue;
                double coeff = t.prefactor * static_cast<double>(t.h[i]);
                gates.push_back({"RZ", {i}, (ksat ? -1.0 : 1.0) * g * coeff});
            }
        }
        for (int i = 0; i < ham.n; ++i)
            for (int j = i + 1; j < ham.n; ++j) {
                int64_t Jij = t.j_at(i, j);
                if (Jij == 0) continue;
                gates.push_back({"RZZ", {i, j}, g * t.prefactor * static_cast<double>(Jij)});
            }
        for (const auto& [ijl, Kv] : t.K) {
            if (Kv == 0) continue;
            gates.push_back({"RZZZ",
                             {ijl[0], ijl[1], ijl[2]},
                             g * t.prefactor * static_cast<double>(Kv)});
        }
        for (int i = 0; i < ham.n; ++i) gates.push_back({"RX", {i}, params.betas[l]});
    }
    return gates;
}

std::string gate_list_text(const std::vector<Gate>& gates) {
    std::ostringstream os;
    char buf[64];
    for (const Gate& g : gates) {
        os << g.kind;
        for (int q : g.qubits) os << " q" << q;
        std::snprintf(buf, sizeof(buf), " %.17g", g.angle);
        os << buf << "\n";
    }
    return os.str();
}

}  // namespace qptlab
