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

#include <cstdint>
#include <string>
#include <vector>

namespace qptlab {

/// Brute-force enumeration guard: 2^26 basis states is the desk-scale limit.
constexpr int kMaxBruteForceQubits = 26;

enum class SatMode {
    KSat,           // clause true when at least one literal is true
    OneInKSatPlus,  // all literals positive; true iff exactly one variable true
};

struct Literal {
    int var;   // 0-based variable index
    int sign;  // +1 positive, -1 negated
    auto operator<=>(const Literal&) const = default;
};

/// Variables inside a clause are pairwise distinct and stored ascending.
struct Clause {
    std::vector<Literal> lits;
    bool operator==(const Clause&) const = default;
};

struct SatInstance {
    int n = 0;
    int k = 3;
    SatMode mode = SatMode::KSat;
    uint64_t seed = 0;
    std::vector<Clause> clauses;

    int m() const { return static_cast<int>(clauses.size()); }
    bool operator==(const SatInstance&) const = default;
};

/// Assignment convention used throughout: bit i of a basis index is variable
/// v_i, bit value 1 means "true" (spin-down |1>, sigma^z = -1).
using Assignment = std::vector<bool>;

uint64_t assignment_to_basis(const Assignment& a);
Assignment basis_to_assignment(uint64_t basis, int n);

/// Draws m clauses independently; each clause holds k distinct variables
/// chosen uniformly, signs uniform +-1 in KSat mode and all +1 in
/// OneInKSatPlus mode. Bit-identical regeneration from the same arguments.
/// With reject_duplicates set, clauses repeating an earlier (vars, signs)
/// combination are re-drawn (sensitivity checks only; default keeps
/// independent sampling).
SatInstance generate_instance(int n, int m, int k, SatMode mode, uint64_t seed,
                              bool reject_duplicates = false);

bool clause_satisfied(const Clause& c, SatMode mode, uint64_t basis);
int count_violations(const SatInstance& inst, uint64_t basis);
int count_violations(const SatInstance& inst, const Assignment& a);

struct BruteForceResult {
    int max_satisfied = 0;
    Assignment witness;
    uint64_t ground_degeneracy = 0;
};

/// Exact maximum satisfied-clause count over all 2^n assignments.
BruteForceResult brute_force_max_sat(const SatInstance& inst);

bool is_satisfiable(const SatInstance& inst);

struct SatProbPoint {
    double ratio = 0;
    int m = 0;
    double p_sat = 0;
    double std_err = 0;
};

std::vector<SatProbPoint> sat_probability(int n, int k, SatMode mode,
                                          const std::vector<double>& ratio_grid,
                                          int instances_per_point,
                                          uint64_t seed);

/// Extended DIMACS: `p cnf n m` header, clause lines of k signed 1-based
/// literals terminated by 0, optional `c mode one-in-k` and `c seed <u64>`
/// comment lines.
std::string write_dimacs(const SatInstance& inst);
void write_dimacs_file(const SatInstance& inst, const std::string& path);
SatInstance read_dimacs(const std::string& content);
SatInstance read_dimacs_file(const std::string& path);

}  // namespace qptlab
