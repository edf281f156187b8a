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

#include "qptlab/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "qptlab/rng.hpp"

namespace qptlab {

double clause_penalty(const Clause& c, SatMode mode, int k, uint64_t basis) {
    if (mode == SatMode::KSat) {
        return clause_satisfied(c, mode, basis) ? 0.0 : 1.0;
    }
    int n_true = 0;
    for (const Literal& l : c.lits) n_true += (basis >> l.var) & 1;
    if (k == 2) return n_true == 1 ? 0.0 : 1.0;
    // ((sum sigma^z) - 1)^2 / 4 with sigma^z = 1 - 2*value
    double s = static_cast<double>(k - 2 * n_true);
    return (s - 1.0) * (s - 1.0) / 4.0;
}

CostHamiltonian build_cost_hamiltonian(const SatInstance& inst) {
    if (inst.n > kMaxBruteForceQubits)
        throw std::invalid_argument("build_cost_hamiltonian: n exceeds capacity guard");
    CostHamiltonian ham;
    ham.n = inst.n;
    ham.m = inst.m();
    ham.k = inst.k;
    ham.mode = inst.mode;

    CoefficientTable& t = ham.table;
    t.n = inst.n;
    t.m = inst.m();
    t.k = inst.k;
    t.mode = inst.mode;
    t.h.assign(inst.n, 0);
    t.J.assign(static_cast<size_t>(inst.n) * (inst.n - 1) / 2, 0);
    t.occ.assign(inst.n, 0);

    for (const Clause& c : inst.clauses) {
        for (size_t a = 0; a < c.lits.size(); ++a) {
            t.h[c.lits[a].var] -= c.lits[a].sign;
            t.occ[c.lits[a].var] += 1;
            for (size_t b = a + 1; b < c.lits.size(); ++b) {
                t.J[t.j_index(c.lits[a].var, c.lits[b].var)] +=
                    static_cast<int64_t>(c.lits[a].sign) * c.lits[b].sign;
            }
        }
        if (inst.mode == SatMode::KSat && inst.k == 3) {
            t.K[{c.lits[0].var, c.lits[1].var, c.lits[2].var}] +=
                static_cast<int64_t>(c.lits[0].sign) * c.lits[1].sign * c.lits[2].sign;
        }
    }
    if (inst.mode == SatMode::KSat) {
        t.prefactor = 1.0 / static_cast<double>(1 << inst.k);
        t.constant = static_cast<double>(inst.m()) / (1 << inst.k);
    } else {
        t.prefactor = 0.5;
        t.constant = inst.k == 3 ? static_cast<double>(inst.m())
                                 : static_cast<double>(inst.m()) / 2.0;
    }

    ham.diag.assign(uint64_t{1} << inst.n, 0.0);
    for (const Clause& c : inst.clauses) {
        // Each clause touches only k bits; enumerate the 2^k local patterns
        // once and scatter over the 2^(n-k) untouched configurations.
        uint64_t mask = 0;
        for (const Literal& l : c.lits) mask |= uint64_t{1} << l.var;
        std::vector<double> local(uint64_t{1} << c.lits.size());
        for (uint64_t p = 0; p < local.size(); ++p) {
            uint64_t basis = 0;
            for (size_t i = 0; i < c.lits.size(); ++i)
                if ((p >> i) & 1) basis |= uint64_t{1} << c.lits[i].var;
            local[p] = clause_penalty(c, inst.mode, inst.k, basis);
        }
        for (uint64_t z = 0; z < ham.dim(); ++z) {
            uint64_t p = 0;
            for (size_t i = 0; i < c.lits.size(); ++i)
                if ((z >> c.lits[i].var) & 1) p |= uint64_t{1} << i;
            ham.diag[z] += local[p];
        }
    }
    return ham;
}

double energy(const CostHamiltonian& ham, uint64_t basis) {
    if (basis >= ham.dim()) throw std::invalid_argument("energy: basis index out of range");
    return ham.diag[basis];
}

double energy(const CostHamiltonian& ham, const Assignment& a) {
    if (static_cast<int>(a.size()) != ham.n)
        throw std::invalid_argument("energy: assignment length != n");
    return energy(ham, assignment_to_basis(a));
}

namespace {
inline double spin(uint64_t basis, int i) {  // sigma^z eigenvalue
    return ((basis >> i) & 1) ? -1.0 : 1.0;
}
}  // namespace

double table_energy(const CoefficientTable& t, uint64_t basis) {
    double acc = 0.0;
    const bool ksat = t.mode == SatMode::KSat;
    const bool linear = ksat || t.k == 3;  // 1-in-2+ carries no linear term
    if (linear) {
        double hz = 0.0;
        for (int i = 0; i < t.n; ++i) hz += static_cast<double>(t.h[i]) * spin(basis, i);
        acc += ksat ? -hz : hz;
    }
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j) {
            int64_t Jij = t.J[t.j_index(i, j)];
            if (Jij) acc += static_cast<double>(Jij) * spin(basis, i) * spin(basis, j);
        }
    for (const auto& [ijl, Kv] : t.K)
        acc += static_cast<double>(Kv) * spin(basis, ijl[0]) * spin(basis, ijl[1]) *
               spin(basis, ijl[2]);
    return t.prefactor * acc + t.constant;
}

CostHamiltonian build_symmetric_hamiltonian(int n, int k) {
    if (n < 2) throw std::invalid_argument("build_symmetric_hamiltonian: n < 2");
    if (k != 2 && k != 3)
        throw std::invalid_argument("build_symmetric_hamiltonian: k must be 2 or 3");
    CostHamiltonian ham;
    ham.n = n;
    ham.m = 0;
    ham.k = k;
    ham.mode = SatMode::OneInKSatPlus;
    CoefficientTable& t = ham.table;
    t.n = n;
    t.m = 0;
    t.k = k;
    t.mode = SatMode::OneInKSatPlus;
    t.occ.assign(n, 0);
    t.constant = 0.0;
    if (k == 2) {
        t.h.assign(n, 0);
        t.J.assign(static_cast<size_t>(n) * (n - 1) / 2, 1);
        t.prefactor = 1.0;
    } else {
        // 2/(n-1) sum sigma^zz - sum sigma^z, stored integer-scaled by (n-1).
        t.h.assign(n, -(n - 1));  // the 1-in-k+ form carries +h/2-style sign: h_i < 0
        t.J.assign(static_cast<size_t>(n) * (n - 1) / 2, 2);
        t.prefactor = 1.0 / static_cast<double>(n - 1);
    }
    ham.diag.assign(uint64_t{1} << n, 0.0);
    for (uint64_t z = 0; z < ham.dim(); ++z) ham.diag[z] = table_energy(t, z);
    return ham;
}

CoefficientStats coefficient_statistics(int n, int m, int k, SatMode mode,
                                        int n_samples, uint64_t seed) {
    if (n_samples < 30)
        throw std::invalid_argument("coefficient_statistics: n_samples < 30");
    CoefficientStats st;
    st.n_samples = n_samples;
    std::vector<double> js, hs;
    for (int s = 0; s < n_samples; ++s) {
        SatInstance inst = generate_instance(n, m, k, mode, derive_seed(seed, s, 0));
        CostHamiltonian ham = build_cost_hamiltonian(inst);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                js.push_back(static_cast<double>(ham.table.j_at(i, j)));
        for (int i = 0; i < n; ++i) hs.push_back(static_cast<double>(ham.table.h[i]));
    }
    auto moments = [](const std::vector<double>& xs, double& mean, double& var,
                      double& se) {
        mean = 0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        var = 0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= std::max<size_t>(1, xs.size() - 1);
        se = std::sqrt(var / static_cast<double>(xs.size()));
    };
    moments(js, st.mean_J, st.var_J, st.se_mean_J);
    moments(hs, st.mean_h, st.var_h, st.se_mean_h);
    return st;
}

double random_guess_baseline(int k, SatMode mode) {
    if (k != 2 && k != 3) throw std::invalid_argument("random_guess_baseline: k must be 2 or 3");
    double d = static_cast<double>(1 << k);
    return mode == SatMode::KSat ? 1.0 - 1.0 / d : static_cast<double>(k) / d;
}

void write_diag(const CostHamiltonian& ham, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_diag: cannot open " + path);
    f.write("QPTDIAG1", 8);
    uint32_t n = static_cast<uint32_t>(ham.n);
    uint32_t mode = ham.mode == SatMode::KSat ? 0u : 1u;
    f.write(reinterpret_cast<const char*>(&n), 4);
    f.write(reinterpret_cast<const char*>(&mode), 4);
    f.write(reinterpret_cast<const char*>(ham.diag.data()),
            static_cast<std::streamsize>(ham.diag.size() * sizeof(double)));
}

}  // namespace qptlab
