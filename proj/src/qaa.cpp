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

#include "qptlab/qaa.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qptlab/parallel.hpp"
#include "qptlab/rng.hpp"

namespace qptlab {

namespace {

constexpr double kDegeneracyTol = 1e-9;

std::vector<double> occ_weights(const CostHamiltonian& ham) {
    std::vector<double> w(ham.n);
    for (int i = 0; i < ham.n; ++i) w[i] = static_cast<double>(ham.table.occ[i]);
    return w;
}

extern "C" void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a,
                        const int* lda, double* w, double* work, const int* lwork,
                        int* iwork, const int* liwork, int* info);

Eigen::VectorXd dense_spectrum(const CostHamiltonian& ham,
                               const std::vector<double>& occ, double s) {
    const int d = static_cast<int>(ham.dim());
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(d, d);
    for (int z = 0; z < d; ++z) H(z, z) = s * ham.diag[z];
    for (int q = 0; q < ham.n; ++q) {
        const int bit = 1 << q;
        for (int z = 0; z < d; ++z) H(z ^ bit, z) += (1.0 - s) * occ[q];
    }
    Eigen::VectorXd w(d);
    int lwork = -1, liwork = -1, info = 0, iwork_query = 0;
    double work_query = 0;
    dsyevd_("N", "U", &d, H.data(), &d, w.data(), &work_query, &lwork, &iwork_query,
            &liwork, &info);
    lwork = static_cast<int>(work_query);
    liwork = iwork_query;
    std::vector<double> work(lwork);
    std::vector<int> iwork(liwork);
    dsyevd_("N", "U", &d, H.data(), &d, w.data(), work.data(), &lwork, iwork.data(),
            &liwork, &info);
    if (info != 0) throw std::runtime_error("dsyevd failed");
    return w;
}

uint64_t ground_degeneracy(const CostHamiltonian& ham) {
    double e0 = 1e300;
    for (double e : ham.diag) e0 = std::min(e0, e);
    uint64_t count = 0;
    for (double e : ham.diag)
        if (e <= e0 + kDegeneracyTol) ++count;
    return count;
}

double median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    size_t mid = xs.size() / 2;
    return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

}  // namespace

std::vector<double> default_s_grid(int n_points) {
    std::vector<double> grid(n_points);
    for (int i = 0; i < n_points; ++i)
        grid[i] = static_cast<double>(i + 1) / (n_points + 1);
    return grid;
}

StateVector anneal_initial_state(const CostHamiltonian& ham) {
    StateVector s;
    s.n = ham.n;
    const double amp = std::pow(2.0, -0.5 * ham.n);
    s.amps.resize(ham.dim());
    for (uint64_t b = 0; b < ham.dim(); ++b)
        s.amps[b] = (std::popcount(b) & 1) ? -amp : amp;
    return s;
}

std::pair<double, double> lowest_two_eigenvalues(const CostHamiltonian& ham, double s) {
    if (ham.n > 12) throw std::invalid_argument("lowest_two_eigenvalues: n <= 12 guard");
    Eigen::VectorXd evs = dense_spectrum(ham, occ_weights(ham), s);
    return {evs(0), evs(1)};
}

GapReport min_gap(const CostHamiltonian& ham, const std::vector<double>& s_grid) {
    if (ham.n > 12) throw std::invalid_argument("min_gap: n <= 12 capacity guard");
    if (s_grid.empty()) throw std::invalid_argument("min_gap: empty s grid");
    std::vector<double> occ = occ_weights(ham);
    // The lowest D levels merge into the D-degenerate final ground space as
    // s -> 1; the obstruction to adiabaticity is the level above them.
    const Eigen::Index level =
        std::min(static_cast<Eigen::Index>(ground_degeneracy(ham)),
                 static_cast<Eigen::Index>(ham.dim()) - 1);
    GapReport rep;
    rep.min_gap = 1e300;
    rep.gaps.resize(s_grid.size());
    for (size_t i = 0; i < s_grid.size(); ++i) {
        Eigen::VectorXd evs = dense_spectrum(ham, occ, s_grid[i]);
        double gap = evs(level) - evs(0);
        if (gap < kDegeneracyTol) gap = 0.0;
        rep.gaps[i] = gap;
        if (gap < rep.min_gap) {
            rep.min_gap = gap;
            rep.argmin_s = s_grid[i];
        }
    }
    rep.inverse_gap_sq = rep.min_gap > kDegeneracyTol
                             ? 1.0 / (rep.min_gap * rep.min_gap)
                             : 1.0 / (kDegeneracyTol * kDegeneracyTol);
    return rep;
}

StateVector evolve_anneal(const CostHamiltonian& ham, const AnnealSchedule& schedule) {
    if (ham.n > 12) throw std::invalid_argument("evolve_anneal: n <= 12 capacity guard");
    if (schedule.total_time <= 0)
        throw std::invalid_argument("evolve_anneal: total_time must be positive");
    double dt = schedule.step();
    if (dt > schedule.total_time) dt = schedule.total_time;
    std::vector<double> occ = occ_weights(ham);

    StateVector state = anneal_initial_state(ham);
    const int64_t n_steps =
        static_cast<int64_t>(std::ceil(schedule.total_time / dt - 1e-12));
    const double h = schedule.total_time / static_cast<double>(n_steps);
    // Strang split per step: cost half, full field, cost half, with s frozen
    // at the step midpoint. Exactly unitary.
    for (int64_t step = 0; step < n_steps; ++step) {
        double s = (static_cast<double>(step) + 0.5) * h / schedule.total_time;
        apply_diagonal_phase(state, ham.diag, s * h / 2.0);
        apply_rx_layer(state, (1.0 - s) * h, occ);
        apply_diagonal_phase(state, ham.diag, s * h / 2.0);
    }
    return state;
}

double success_probability(const CostHamiltonian& ham, const StateVector& final_state) {
    if (final_state.dim() != ham.dim())
        throw std::invalid_argument("success_probability: dimension mismatch");
    double e0 = 1e300;
    for (double e : ham.diag) e0 = std::min(e0, e);
    double p = 0;
    for (uint64_t z = 0; z < ham.dim(); ++z)
        if (ham.diag[z] <= e0 + kDegeneracyTol) p += std::norm(final_state.amps[z]);
    return p;
}

std::vector<QaaPoint> qaa_scan(int n, int k, SatMode mode,
                               const std::vector<double>& ratio_grid, double total_time,
                               int n_instances, uint64_t seed, int s_points) {
    std::vector<double> s_grid = default_s_grid(s_points);
    std::vector<QaaPoint> out(ratio_grid.size());
    for (size_t g = 0; g < ratio_grid.size(); ++g) {
        QaaPoint& pt = out[g];
        pt.ratio = ratio_grid[g];
        pt.m = static_cast<int>(std::lround(pt.ratio * n));
        std::vector<double> inv_gap(n_instances), success(n_instances);
        std::vector<char> sat(n_instances);
        parallel_for(n_instances, [&](size_t i) {
            SatInstance inst =
                generate_instance(n, pt.m, k, mode, derive_seed(seed, g, i));
            CostHamiltonian ham = build_cost_hamiltonian(inst);
            double e0 = 1e300;
            for (double e : ham.diag) e0 = std::min(e0, e);
            sat[i] = e0 < kDegeneracyTol;  // zero ground energy <=> satisfiable
            inv_gap[i] = min_gap(ham, s_grid).inverse_gap_sq;
            AnnealSchedule sched;
            sched.total_time = total_time;
            success[i] = success_probability(ham, evolve_anneal(ham, sched));
        });
        std::vector<double> all, s_sat, s_unsat;
        double mean_succ = 0;
        for (int i = 0; i < n_instances; ++i) {
            all.push_back(inv_gap[i]);
            (sat[i] ? s_sat : s_unsat).push_back(inv_gap[i]);
            mean_succ += success[i];
        }
        pt.median_inv_gap_sq = median(all);
        pt.median_inv_gap_sq_sat = median(s_sat);
        pt.median_inv_gap_sq_unsat = median(s_unsat);
        pt.mean_success = n_instances ? mean_succ / n_instances : 0.0;
        pt.n_sat = static_cast<int>(s_sat.size());
        pt.n_unsat = static_cast<int>(s_unsat.size());
    }
    return out;
}

}  // namespace qptlab
