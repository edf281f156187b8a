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

#include "qptlab/sat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qptlab/rng.hpp"

namespace qptlab {

uint64_t assignment_to_basis(const Assignment& a) {
    uint64_t b = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i]) b |= uint64_t{1} << i;
    }
    return b;
}

Assignment basis_to_assignment(uint64_t basis, int n) {
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = (basis >> i) & 1;
    return a;
}

namespace {

Clause draw_clause(CounterRng& rng, int n, int k, SatMode mode) {
    Clause c;
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < k) {
        int v = static_cast<int>(rng.next_below(n));
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    for (int v : vars) {
        int sign = 1;
        if (mode == SatMode::KSat) sign = (rng.next_u64() & 1) ? 1 : -1;
        c.lits.push_back({v, sign});
    }
    return c;
}

}  // namespace

SatInstance generate_instance(int n, int m, int k, SatMode mode, uint64_t seed,
                              bool reject_duplicates) {
    if (k < 2 || n < k)
        throw std::invalid_argument("generate_instance: need n >= k >= 2");
    if (m < 0) throw std::invalid_argument("generate_instance: m < 0");
    SatInstance inst;
    inst.n = n;
    inst.k = k;
    inst.mode = mode;
    inst.seed = seed;
    CounterRng rng(seed);
    std::set<std::vector<Literal>> seen;
    while (inst.m() < m) {
        Clause c = draw_clause(rng, n, k, mode);
        if (reject_duplicates && !seen.insert(c.lits).second) continue;
        inst.clauses.push_back(std::move(c));
    }
    return inst;
}

bool clause_satisfied(const Clause& c, SatMode mode, uint64_t basis) {
    if (mode == SatMode::KSat) {
        for (const Literal& l : c.lits) {
            bool value = (basis >> l.var) & 1;
            if ((l.sign > 0) == value) return true;
        }
        return false;
    }
    int n_true = 0;
    for (const Literal& l : c.lits) n_true += (basis >> l.var) & 1;
    return n_true == 1;
}

int count_violations(const SatInstance& inst, uint64_t basis) {
    int v = 0;
    for (const Clause& c : inst.clauses)
        if (!clause_satisfied(c, inst.mode, basis)) ++v;
    return v;
}

int count_violations(const SatInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.size()) != inst.n)
        throw std::invalid_argument("count_violations: assignment length != n");
    return count_violations(inst, assignment_to_basis(a));
}

BruteForceResult brute_force_max_sat(const SatInstance& inst) {
    if (inst.n > kMaxBruteForceQubits)
        throw std::invalid_argument("brute_force_max_sat: n exceeds enumeration guard");
    BruteForceResult res;
    res.max_satisfied = -1;
    const uint64_t dim = uint64_t{1} << inst.n;
    for (uint64_t b = 0; b < dim; ++b) {
        int sat = inst.m() - count_violations(inst, b);
        if (sat > res.max_satisfied) {
            res.max_satisfied = sat;
            res.witness = basis_to_assignment(b, inst.n);
            res.ground_degeneracy = 1;
        } else if (sat == res.max_satisfied) {
            ++res.ground_degeneracy;
        }
    }
    return res;
}

bool is_satisfiable(const SatInstance& inst) {
    return brute_force_max_sat(inst).max_satisfied == inst.m();
}

std::vector<SatProbPoint> sat_probability(int n, int k, SatMode mode,
                                          const std::vector<double>& ratio_grid,
                                          int instances_per_point,
                                          uint64_t seed) {
    if (instances_per_point < 1)
        throw std::invalid_argument("sat_probability: instances_per_point < 1");
    std::vector<SatProbPoint> out;
    for (size_t g = 0; g < ratio_grid.size(); ++g) {
        SatProbPoint pt;
        pt.ratio = ratio_grid[g];
        pt.m = static_cast<int>(std::lround(pt.ratio * n));
        int n_sat = 0;
        for (int i = 0; i < instances_per_point; ++i) {
            uint64_t s = derive_seed(seed, g, i);
            if (is_satisfiable(generate_instance(n, pt.m, k, mode, s))) ++n_sat;
        }
        pt.p_sat = static_cast<double>(n_sat) / instances_per_point;
        pt.std_err = std::sqrt(pt.p_sat * (1.0 - pt.p_sat) / instances_per_point);
        out.push_back(pt);
    }
    return out;
}

std::string write_dimacs(const SatInstance& inst) {
    std::ostringstream os;
    if (inst.mode == SatMode::OneInKSatPlus) os << "c mode one-in-k\n";
    os << "c seed " << inst.seed << "\n";
    os << "p cnf " << inst.n << " " << inst.m() << "\n";
    for (const Clause& c : inst.clauses) {
        for (const Literal& l : c.lits) os << l.sign * (l.var + 1) << " ";
        os << "0\n";
    }
    return os.str();
}

void write_dimacs_file(const SatInstance& inst, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_dimacs_file: cannot open " + path);
    f << write_dimacs(inst);
}

SatInstance read_dimacs(const std::string& content) {
    SatInstance inst;
    inst.mode = SatMode::KSat;
    std::istringstream is(content);
    std::string line;
    int line_no = 0;
    int declared_m = -1;
    bool header_seen = false;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("dimacs parse error at line " +
                                 std::to_string(line_no) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") {
            std::string rest;
            ls >> rest;
            if (rest == "mode") {
                std::string mode_name;
                ls >> mode_name;
                if (mode_name == "one-in-k") inst.mode = SatMode::OneInKSatPlus;
            } else if (rest == "seed") {
                ls >> inst.seed;
            }
            continue;
        }
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> inst.n >> declared_m) || fmt != "cnf")
                fail("malformed 'p cnf' header");
            header_seen = true;
            continue;
        }
        if (!header_seen) fail("clause before 'p cnf' header");
        Clause c;
        int lit = 0;
        std::istringstream cs(line);
        while (cs >> lit && lit != 0) {
            int var = std::abs(lit) - 1;
            if (var < 0 || var >= inst.n) fail("literal out of range");
            c.lits.push_back({var, lit > 0 ? 1 : -1});
        }
        if (lit != 0) fail("clause not terminated by 0");
        std::sort(c.lits.begin(), c.lits.end(),
                  [](const Literal& a, const Literal& b) { return a.var < b.var; });
        for (size_t i = 1; i < c.lits.size(); ++i)
            if (c.lits[i].var == c.lits[i - 1].var) fail("repeated variable in clause");
        if (!inst.clauses.empty() && c.lits.size() != inst.clauses.front().lits.size())
            fail("clause arity differs from previous clauses");
        inst.clauses.push_back(std::move(c));
    }
    if (!header_seen)
        throw std::runtime_error("dimacs parse error: missing 'p cnf' line");
    if (declared_m != inst.m())
        throw std::runtime_error("dimacs parse error: header clause count " +
                                 std::to_string(declared_m) + " != " +
                                 std::to_string(inst.m()));
    inst.k = inst.clauses.empty() ? 3 : static_cast<int>(inst.clauses.front().lits.size());
    return inst;
}

SatInstance read_dimacs_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_dimacs_file: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return read_dimacs(ss.str());
}

}  // namespace qptlab
