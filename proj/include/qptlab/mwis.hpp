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

#include "qptlab/hamiltonian.hpp"

namespace qptlab {

// Vertex-weighted undirected graph. Vertices are 0..n-1; the adjacency list
// of each vertex is kept sorted and duplicate-free.
struct WeightedGraph {
    int n = 0;
    std::vector<double> weights;
    std::vector<std::vector<int>> adj;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    size_t edge_count() const;
};

// Maps a formula to its conflict graph: vertex i has weight occ_i and an
// edge joins i,j whenever the pairwise coupling J_ij is positive.
WeightedGraph reduce_to_mwis(const CoefficientTable& table);

bool is_independent_set(const WeightedGraph& g, const std::vector<int>& vertices);
double set_weight(const WeightedGraph& g, const std::vector<int>& vertices);

enum class GreedyRule { GWMin, GWMax, GWMin2, WG };

// Runs one greedy heuristic to completion and returns the chosen independent
// set, sorted ascending. Ties are broken toward the lowest vertex index.
std::vector<int> greedy_mwis(const WeightedGraph& g, GreedyRule rule);

// Closed-form a-priori lower bound on the achievable set weight for a rule,
// evaluated on the initial graph.
double greedy_bound(const WeightedGraph& g, GreedyRule rule);

struct GreedyBounds {
    double best_weight = 0.0;
    GreedyRule best_rule = GreedyRule::GWMin;
    std::vector<int> best_set;
    double weight[4] = {0, 0, 0, 0};  // indexed by GreedyRule order
    double bound[4] = {0, 0, 0, 0};
};

// Evaluates all four rules and keeps the heaviest result.
GreedyBounds best_greedy(const WeightedGraph& g);

// Exhaustive maximum-weight independent set. Guarded at n <= 26.
struct MwisResult {
    double weight = 0.0;
    std::vector<int> vertices;
};
MwisResult brute_force_mwis(const WeightedGraph& g);

// Line format: "v <id> <weight>" and "e <id> <id>", '#' comments allowed.
std::string write_graph(const WeightedGraph& g);
WeightedGraph read_graph(const std::string& text);
void write_graph_file(const WeightedGraph& g, const std::string& path);
WeightedGraph read_graph_file(const std::string& path);

}  // namespace qptlab
