// Copyright 2026 The qptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "qptlab/rng.hpp"
#include "qptlab/sat.hpp"

using namespace qptlab;

TEST_CASE("counter rng is a pure function of (seed, index)") {
    CounterRng a(42), b(42), c(43);
    for (int i = 0; i < 16; i++) {
        uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
        CHECK(va != c.next_u64());
    }
    CounterRng d(7);
    double x = d.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CounterRng e(7);
    for (int i = 0; i < 1000; i++) {
        uint64_t r = e.next_below(10);
        CHECK(r < 10);
    }
}

TEST_CASE("derive_seed is collision free over a sweep-sized domain") {
    std::unordered_set<uint64_t> seen;
    for (uint64_t i = 0; i < 1000; i++)
        for (uint64_t r = 0; r < 100; r++) seen.insert(derive_seed(123, i, r));
    CHECK(seen.size() == 100000);
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}

TEST_CASE("assignment and basis index agree on the bit convention") {
    Assignment a = {true, false, true};  // v0 = v2 = true
    CHECK(assignment_to_basis(a) == 0b101);
    Assignment back = basis_to_assignment(0b101, 3);
    CHECK(back == a);
    CHECK(assignment_to_basis(basis_to_assignment(0, 4)) == 0);
}

TEST_CASE("generate_instance regenerates bit-identically") {
    SatInstance x = generate_instance(10, 43, 3, SatMode::KSat, 99);
    SatInstance y = generate_instance(10, 43, 3, SatMode::KSat, 99);
    CHECK(x == y);
    SatInstance z = generate_instance(10, 43, 3, SatMode::KSat, 100);
    CHECK(x.clauses != z.clauses);
}

TEST_CASE("generated clauses hold distinct ascending variables") {
    for (uint64_t seed = 1; seed <= 5; seed++) {
        SatInstance inst = generate_instance(8, 30, 3, SatMode::OneInKSatPlus, seed);
        CHECK(inst.m() == 30);
        for (const Clause& c : inst.clauses) {
            REQUIRE(c.lits.size() == 3);
            CHECK(c.lits[0].var < c.lits[1].var);
            CHECK(c.lits[1].var < c.lits[2].var);
            for (const Literal& l : c.lits) CHECK(l.sign == 1);
        }
    }
    SatInstance ks = generate_instance(8, 200, 2, SatMode::KSat, 3);
    bool saw_neg = false, saw_pos = false;
    for (const Clause& c : ks.clauses)
        for (const Literal& l : c.lits) (l.sign < 0 ? saw_neg : saw_pos) = true;
    CHECK(saw_neg);
    CHECK(saw_pos);
}

TEST_CASE("reject_duplicates removes repeated (vars, signs) clauses") {
    SatInstance inst = generate_instance(5, 30, 2, SatMode::KSat, 5, true);
    std::set<std::vector<Literal>> seen;
    for (const Clause& c : inst.clauses) CHECK(seen.insert(c.lits).second);
}

TEST_CASE("clause semantics: at-least-one versus exactly-one") {
    Clause c;
    c.lits = {{0, 1}, {1, -1}, {2, 1}};  // v0 or not-v1 or v2
    CHECK(clause_satisfied(c, SatMode::KSat, 0b000));   // not-v1 true
    CHECK(clause_satisfied(c, SatMode::KSat, 0b001));
    CHECK_FALSE(clause_satisfied(c, SatMode::KSat, 0b010));
    Clause e;
    e.lits = {{0, 1}, {1, 1}, {2, 1}};
    CHECK_FALSE(clause_satisfied(e, SatMode::OneInKSatPlus, 0b000));
    CHECK(clause_satisfied(e, SatMode::OneInKSatPlus, 0b010));
    CHECK_FALSE(clause_satisfied(e, SatMode::OneInKSatPlus, 0b011));
    CHECK_FALSE(clause_satisfied(e, SatMode::OneInKSatPlus, 0b111));
}

TEST_CASE("count_violations matches per-clause evaluation") {
    SatInstance inst = generate_instance(6, 25, 3, SatMode::KSat, 11);
    for (uint64_t b = 0; b < 64; b++) {
        int direct = 0;
        for (const Clause& c : inst.clauses)
            direct += clause_satisfied(c, inst.mode, b) ? 0 : 1;
        CHECK(count_violations(inst, b) == direct);
    }
}

TEST_CASE("brute force reports the exact optimum and its degeneracy") {
    SatInstance inst;
    inst.n = 2;
    inst.k = 2;
    inst.mode = SatMode::KSat;
    inst.clauses.push_back({{{0, 1}, {1, 1}}});    // v0 or v1
    inst.clauses.push_back({{{0, -1}, {1, -1}}});  // not both
    BruteForceResult r = brute_force_max_sat(inst);
    CHECK(r.max_satisfied == 2);
    CHECK(r.ground_degeneracy == 2);  // 01 and 10
    CHECK(count_violations(inst, assignment_to_basis(r.witness)) == 0);
    CHECK(is_satisfiable(inst));

    inst.clauses.push_back({{{0, 1}, {1, -1}}});
    inst.clauses.push_back({{{0, -1}, {1, 1}}});
    inst.clauses.push_back({{{0, 1}, {1, 1}}});
    // v0 xor v1 plus both xnor directions cannot all hold with the first two.
    BruteForceResult r2 = brute_force_max_sat(inst);
    CHECK(r2.max_satisfied == 4);
    CHECK_FALSE(is_satisfiable(inst));
}

TEST_CASE("empty formula is satisfied with probability one") {
    std::vector<SatProbPoint> pts =
        sat_probability(6, 3, SatMode::KSat, {0.0, 10.0}, 20, 4);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].m == 0);
    CHECK(pts[0].p_sat == doctest::Approx(1.0));
    CHECK(pts[1].p_sat < 1.0);  // ratio 10 is deep in the unsatisfiable phase
    CHECK(pts[0].std_err == doctest::Approx(0.0));
}

TEST_CASE("dimacs round trip preserves instance identity") {
    for (SatMode mode : {SatMode::KSat, SatMode::OneInKSatPlus}) {
        SatInstance inst = generate_instance(9, 17, 3, mode, 77);
        std::string text = write_dimacs(inst);
        CHECK(text.find("p cnf 9 17") != std::string::npos);
        SatInstance back = read_dimacs(text);
        CHECK(back == inst);
    }
}

TEST_CASE("dimacs reader rejects malformed input") {
    CHECK_THROWS(read_dimacs("no header here\n"));
    CHECK_THROWS(read_dimacs("p cnf 3 1\n1 2 4 0\n"));  // variable out of range
}
