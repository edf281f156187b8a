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

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qptlab {

/// Gradient-based quasi-Newton minimizer with a dense inverse-Hessian
/// approximation (BFGS update) and backtracking Armijo line search.
/// Stops when the step-to-step cost decrease or the gradient norm falls
/// below the configured thresholds.
struct BfgsOptions {
    double cost_delta_tol = 1e-6;
    double grad_norm_tol = 1e-6;
    int max_steps = 10000;
};

struct BfgsResult {
    std::vector<double> x;
    double f = 0;
    int steps = 0;
    bool converged = false;
};

using ObjectiveFn =
    std::function<double(const std::vector<double>&, std::vector<double>&)>;

inline BfgsResult bfgs_minimize(const ObjectiveFn& fg, std::vector<double> x,
                                const BfgsOptions& opts = {}) {
    if (opts.max_steps < 1) throw std::invalid_argument("bfgs_minimize: max_steps < 1");
    const size_t d = x.size();
    std::vector<double> g(d), g_new(d);
    double f = fg(x, g);
    if (!std::isfinite(f)) throw std::runtime_error("bfgs_minimize: non-finite cost at start");

    BfgsResult res;
    res.x = x;
    res.f = f;
    if (d == 0) {
        res.converged = true;
        return res;
    }

    // Inverse Hessian approximation, row-major, starts as identity.
    std::vector<double> Hinv(d * d, 0.0);
    for (size_t i = 0; i < d; ++i) Hinv[i * d + i] = 1.0;

    auto norm2 = [](const std::vector<double>& v) {
        double s = 0;
        for (double x_i : v) s += x_i * x_i;
        return std::sqrt(s);
    };

    std::vector<double> p(d), x_new(d), s(d), y(d), Hy(d);
    for (int step = 1; step <= opts.max_steps; ++step) {
        res.steps = step;
        if (norm2(g) < opts.grad_norm_tol) {
            res.converged = true;
            break;
        }
        // p = -Hinv g
        double gTp = 0;
        for (size_t i = 0; i < d; ++i) {
            double acc = 0;
            for (size_t j = 0; j < d; ++j) acc -= Hinv[i * d + j] * g[j];
            p[i] = acc;
        }
        for (size_t i = 0; i < d; ++i) gTp += g[i] * p[i];
        if (gTp >= 0) {  // not a descent direction; reset to steepest descent
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < d; ++j) Hinv[i * d + j] = (i == j) ? 1.0 : 0.0;
                p[i] = -g[i];
            }
            gTp = 0;
            for (size_t i = 0; i < d; ++i) gTp += g[i] * p[i];
        }

        // Backtracking Armijo search.
        const double c1 = 1e-4;
        double alpha = 1.0;
        double f_new = f;
        bool accepted = false;
        for (int bt = 0; bt < 50; ++bt) {
            for (size_t i = 0; i < d; ++i) x_new[i] = res.x[i] + alpha * p[i];
            f_new = fg(x_new, g_new);
            if (std::isfinite(f_new) && f_new <= f + c1 * alpha * gTp) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            res.converged = true;  // no further decrease found
            break;
        }

        for (size_t i = 0; i < d; ++i) {
            s[i] = x_new[i] - res.x[i];
            y[i] = g_new[i] - g[i];
        }
        double sy = 0;
        for (size_t i = 0; i < d; ++i) sy += s[i] * y[i];
        if (sy > 1e-12) {
            // Hinv <- (I - s y^T / sy) Hinv (I - y s^T / sy) + s s^T / sy
            double yHy = 0;
            for (size_t i = 0; i < d; ++i) {
                double acc = 0;
                for (size_t j = 0; j < d; ++j) acc += Hinv[i * d + j] * y[j];
                Hy[i] = acc;
            }
            for (size_t i = 0; i < d; ++i) yHy += y[i] * Hy[i];
            double rho = 1.0 / sy;
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    Hinv[i * d + j] += rho * rho * (sy + yHy) * s[i] * s[j] -
                                       rho * (Hy[i] * s[j] + s[i] * Hy[j]);
        }

        double delta = f - f_new;
        res.x = x_new;
        f = f_new;
        g = g_new;
        if (f < res.f) res.f = f;
        if (delta < opts.cost_delta_tol) {
            res.converged = true;
            break;
        }
    }
    res.f = std::min(res.f, f);
    return res;
}

}  // namespace qptlab
