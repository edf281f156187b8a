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

#include "qptlab/mwis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qptlab {

void WeightedGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("add_edge: vertex out of range");
    auto insert = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert(adj[u], v);
    insert(adj[v], u);
}

bool WeightedGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

size_t WeightedGraph::edge_count() const {
    size_t total = 0;
    for (const auto& list : adj) total += list.size();
    return total / 2;
}

WeightedGraph reduce_to_mwis(const CoefficientTable& table) {
    if (table.mode != SatMode::OneInKSatPlus)
        throw std::invalid_argument("reduce_to_mwis: requires the one-in-k mode");
    WeightedGraph g;
    g.n = table.n;
    g.weights.resize(table.n);
    g.adj.resize(table.n);
    for (int i = 0; i < table.n; ++i) g.weights[i] = static_cast<double>(table.occ[i]);
    for (int i = 0; i < table.n; ++i)
        for (int j = i + 1; j < table.n; ++j)
            if (table.j_at(i, j) > 0) g.add_edge(i, j);
    return g;
}

bool is_independent_set(const WeightedGraph& g, const std::vector<int>& vertices) {
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || g.has_edge(vertices[a], vertices[b]))
                return false;
    return true;
}

double set_weight(const WeightedGraph& g, const std::vector<int>& vertices) {
    double w = 0;
    for (int v : vertices) w += g.weights[v];
    return w;
}

namespace {

// Working copy with incremental deletion; degree() reflects live vertices.
struct LiveGraph {
    const WeightedGraph* g;
    std::vector<char> alive;
    std::vector<int> deg;
    size_t live_edges = 0;

    explicit LiveGraph(const WeightedGraph& graph) : g(&graph) {
        alive.assign(graph.n, 1);
        deg.resize(graph.n);
        for (int v = 0; v < graph.n; ++v) deg[v] = graph.degree(v);
        live_edges = graph.edge_count();
    }
    void remove(int v) {
        alive[v] = 0;
        for (int u : g->adj[v])
            if (alive[u]) {
                --deg[u];
                --live_edges;
            }
        deg[v] = 0;
    }
    double closed_weight(int v) const {
        double w = g->weights[v];
        for (int u : g->adj[v])
            if (alive[u]) w += g->weights[u];
        return w;
    }
    double open_weight(int v) const { return closed_weight(v) - g->weights[v]; }
};

}  // namespace

std::vector<int> greedy_mwis(const WeightedGraph& g, GreedyRule rule) {
    LiveGraph live(g);
    std::vector<int> chosen;

    if (rule == GreedyRule::WG) {
        // Zero-weight vertices are never worth keeping; removing them can
        // only free their neighbours, and it keeps the score finite.
        for (int v = 0; v < g.n; ++v)
            if (g.weights[v] == 0.0) live.remove(v);
    }

    if (rule == GreedyRule::GWMax) {
        // Deletes the worst vertex while any edge remains; the survivors are
        // independent by construction.
        while (live.live_edges > 0) {
            int best = -1;
            double best_score = 0;
            for (int v = 0; v < g.n; ++v) {
                if (!live.alive[v] || live.deg[v] == 0) continue;
                double d = live.deg[v];
                double score = g.weights[v] / (d * (d + 1.0));
                if (best < 0 || score < best_score) {
                    best = v;
                    best_score = score;
                }
            }
            live.remove(best);
        }
        for (int v = 0; v < g.n; ++v)
            if (live.alive[v]) chosen.push_back(v);
        return chosen;
    }

    for (;;) {
        int best = -1;
        double best_score = 0;
        for (int v = 0; v < g.n; ++v) {
            if (!live.alive[v]) continue;
            double score;
            switch (rule) {
                case GreedyRule::GWMin:
                    score = g.weights[v] / (live.deg[v] + 1.0);
                    break;
                case GreedyRule::GWMin2: {
                    // Selecting by w(v) / w(N+[v]) is what makes the
                    // sum-of-w^2/w(N+) guarantee hold.
                    double cw = live.closed_weight(v);
                    score = cw > 0 ? g.weights[v] / cw
                                   : 1.0;  // isolated zero-weight vertex
                    break;
                }
                default:  // WG, minimized below via negation
                    score = -(live.open_weight(v) / g.weights[v]);
                    break;
            }
            if (best < 0 || score > best_score) {
                best = v;
                best_score = score;
            }
        }
        if (best < 0) break;
        chosen.push_back(best);
        for (int u : g.adj[best])
            if (live.alive[u]) live.remove(u);
        live.remove(best);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

double greedy_bound(const WeightedGraph& g, GreedyRule rule) {
    double total = 0;
    for (double w : g.weights) total += w;
    switch (rule) {
        case GreedyRule::GWMin:
        case GreedyRule::GWMax: {
            double b = 0;
            for (int v = 0; v < g.n; ++v) b += g.weights[v] / (g.degree(v) + 1.0);
            return b;
        }
        case GreedyRule::GWMin2: {
            double b = 0;
            for (int v = 0; v < g.n; ++v) {
                double cw = g.weights[v];
                for (int u : g.adj[v]) cw += g.weights[u];
                if (cw > 0) b += g.weights[v] * g.weights[v] / cw;
            }
            return b;
        }
        case GreedyRule::WG: {
            if (total == 0) return 0;
            double s = 0;
            for (int v = 0; v < g.n; ++v) {
                double nw = 0;
                for (int u : g.adj[v]) nw += g.weights[u];
                s += nw;
            }
            return total / (s / total + 1.0);
        }
    }
    return 0;
}

GreedyBounds best_greedy(const WeightedGraph& g) {
    GreedyBounds out;
    const GreedyRule rules[4] = {GreedyRule::GWMin, GreedyRule::GWMax,
                                 GreedyRule::GWMin2, GreedyRule::WG};
    for (int i = 0; i < 4; ++i) {
        std::vector<int> set = greedy_mwis(g, rules[i]);
        out.weight[i] = set_weight(g, set);
        out.bound[i] = greedy_bound(g, rules[i]);
        if (i == 0 || out.weight[i] > out.best_weight) {
            out.best_weight = out.weight[i];
            out.best_rule = rules[i];
            out.best_set = std::move(set);
        }
    }
    return out;
}

MwisResult brute_force_mwis(const WeightedGraph& g) {
    if (g.n > 26) throw std::invalid_argument("brute_force_mwis: n <= 26 guard");
    std::vector<uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) nbr[v] |= uint32_t{1} << u;
    MwisResult best;
    uint32_t best_mask = 0;
    const uint32_t end = uint32_t{1} << g.n;
    for (uint32_t mask = 0; mask < end; ++mask) {
        bool ok = true;
        double w = 0;
        for (int v = 0; v < g.n && ok; ++v)
            if (mask >> v & 1) {
                if (nbr[v] & mask) ok = false;
                w += g.weights[v];
            }
        if (ok && w > best.weight) {
            best.weight = w;
            best_mask = mask;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (best_mask >> v & 1) best.vertices.push_back(v);
    return best;
}

std::string write_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "# vertices " << g.n << "\n";
    out.precision(17);
    for (int v = 0; v < g.n; ++v) out << "v " << v << " " << g.weights[v] << "\n";
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v])
            if (u > v) out << "e " << v << " " << u << "\n";
    return out.str();
}

WeightedGraph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, double>> verts;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            int id;
            double w;
            if (!(ls >> id >> w) || id < 0 || w < 0)
                throw std::runtime_error("read_graph: bad vertex line " +
                                         std::to_string(line_no));
            verts.emplace_back(id, w);
            max_id = std::max(max_id, id);
        } else if (tag == "e") {
            int a, b;
            if (!(ls >> a >> b) || a < 0 || b < 0 || a == b)
                throw std::runtime_error("read_graph: bad edge line " +
                                         std::to_string(line_no));
            edges.emplace_back(a, b);
            max_id = std::max({max_id, a, b});
        } else {
            throw std::runtime_error("read_graph: unknown tag at line " +
                                     std::to_string(line_no));
        }
    }
    WeightedGraph g;
    g.n = max_id + 1;
    g.weights.assign(g.n, 0.0);
    g.adj.resize(g.n);
    for (auto [id, w] : verts) g.weights[id] = w;
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

void write_graph_file(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_graph_file: cannot open " + path);
    out << write_graph(g);
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_graph_file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph(buf.str());
}

}  // namespace qptlab
