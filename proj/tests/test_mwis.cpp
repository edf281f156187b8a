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
#include <cmath>

#include "qptlab/mwis.hpp"
#include "qptlab/rng.hpp"

using namespace qptlab;

namespace {

WeightedGraph random_graph(int n, double edge_prob, uint64_t seed) {
    WeightedGraph g;
    g.n = n;
    g.weights.assign(n, 0.0);
    g.adj.assign(n, {});
    CounterRng rng(seed);
    for (int i = 0; i < n; i++) g.weights[i] = 1.0 + rng.next_double() * 9.0;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (rng.next_double() < edge_prob) g.add_edge(i, j);
    return g;
}

double set_total(const WeightedGraph& g, const std::vector<int>& s) {
    double t = 0;
    for (int v : s) t += g.weights[v];
    return t;
}

}  // namespace

TEST_CASE("star graph: heaviest-per-degree rule keeps the center") {
    WeightedGraph g;
    g.n = 4;
    g.weights = {10.0, 1.0, 1.0, 1.0};
    g.adj.assign(4, {});
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    std::vector<int> s = greedy_mwis(g, GreedyRule::GWMin);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == 0);  // center scores 10/4, leaves 1/2
    CHECK(is_independent_set(g, s));
}

TEST_CASE("edgeless graph: every rule returns all vertices") {
    WeightedGraph g;
    g.n = 5;
    g.weights = {1, 2, 3, 4, 5};
    g.adj.assign(5, {});
    for (GreedyRule r : {GreedyRule::GWMin, GreedyRule::GWMax, GreedyRule::GWMin2,
                         GreedyRule::WG}) {
        std::vector<int> s = greedy_mwis(g, r);
        CHECK(s.size() == 5);
        CHECK(set_total(g, s) == doctest::Approx(15.0));
        // Degree 0 everywhere makes the weight bound exact.
        CHECK(greedy_bound(g, r) == doctest::Approx(15.0));
    }
}

TEST_CASE("uniform triangle: the degree-normalized bound collapses to one") {
    WeightedGraph g;
    g.n = 3;
    g.weights = {1, 1, 1};
    g.adj.assign(3, {});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    CHECK(greedy_bound(g, GreedyRule::GWMin) == doctest::Approx(1.0));
    std::vector<int> s = greedy_mwis(g, GreedyRule::GWMin);
    CHECK(s.size() == 1);
    CHECK(s[0] == 0);  // uniform scores break ties at the lowest index
}

TEST_CASE("zero-weight vertices are deleted first by the weighted-greedy rule") {
    WeightedGraph g;
    g.n = 3;
    g.weights = {0.0, 2.0, 3.0};
    g.adj.assign(3, {});
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    std::vector<int> s = greedy_mwis(g, GreedyRule::WG);
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<int>{1, 2});
}

TEST_CASE("all rules return independent sets bounded by the optimum") {
    for (uint64_t seed = 1; seed <= 25; seed++) {
        int n = 4 + int(seed % 9);
        WeightedGraph g = random_graph(n, 0.4, seed);
        MwisResult opt = brute_force_mwis(g);
        CHECK(is_independent_set(g, opt.vertices));
        for (GreedyRule r : {GreedyRule::GWMin, GreedyRule::GWMax,
                             GreedyRule::GWMin2, GreedyRule::WG}) {
            std::vector<int> s = greedy_mwis(g, r);
            CHECK(is_independent_set(g, s));
            double w = set_total(g, s);
            CHECK(w <= opt.weight + 1e-9);
            CHECK(w >= greedy_bound(g, r) - 1e-9);  // the performance guarantee
        }
    }
}

TEST_CASE("best_greedy picks the maximizer across the four rules") {
    WeightedGraph g = random_graph(10, 0.35, 99);
    GreedyBounds b = best_greedy(g);
    double max_w = *std::max_element(b.weight, b.weight + 4);
    CHECK(b.best_weight == doctest::Approx(max_w));
    CHECK(is_independent_set(g, b.best_set));
    CHECK(set_total(g, b.best_set) == doctest::Approx(b.best_weight));
}

TEST_CASE("formula reduction: satisfiable iff the optimum weight equals m") {
    for (uint64_t seed = 1; seed <= 20; seed++) {
        int m = 4 + int(seed % 10);
        SatInstance inst =
            generate_instance(6, m, 3, SatMode::OneInKSatPlus, seed * 7);
        CostHamiltonian ham = build_cost_hamiltonian(inst);
        WeightedGraph g = reduce_to_mwis(ham.table);
        MwisResult opt = brute_force_mwis(g);
        bool sat = is_satisfiable(inst);
        if (sat) {
            CHECK(opt.weight == doctest::Approx(double(m)).epsilon(1e-9));
        } else {
            CHECK(opt.weight < m - 1e-9);
        }
    }
}

TEST_CASE("graph text round trip with comments") {
    WeightedGraph g = random_graph(7, 0.5, 5);
    std::string text = "# weighted graph\n" + write_graph(g);
    WeightedGraph back = read_graph(text);
    CHECK(back.n == g.n);
    for (int i = 0; i < g.n; i++) {
        CHECK(back.weights[i] == doctest::Approx(g.weights[i]));
        CHECK(back.adj[i] == g.adj[i]);
    }
    CHECK_THROWS(read_graph("e 0 1\nv 0 nope\n"));
}
