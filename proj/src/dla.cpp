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

#include "qptlab/dla.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <Eigen/Dense>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qptlab/parallel.hpp"
#include "qptlab/rng.hpp"

namespace qptlab {


bool PauliString::commutes_with(const PauliString& o) const {
    int anti = std::popcount(x & o.z) + std::popcount(z & o.x);
    return (anti & 1) == 0;
}

std::string PauliString::str(int n) const {
    std::string s(n, 'I');
    for (int q = 0; q < n; ++q) {
        bool bx = (x >> q) & 1, bz = (z >> q) & 1;
        s[q] = bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

void PauliElement::add(const PauliString& s, const Rational& c) {
    if (c == 0) return;
    if (s.x == 0 && s.z == 0) return;  // traceless convention
    auto [it, inserted] = terms.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

namespace {

/// Structure constant of the scaled bracket: [W1, W2]/i = sign * 2 * W3 when
/// the strings anticommute, 0 otherwise. Phases: W1 W2 = i^e W3 with
/// e = c1 + c2 - c3 + 2*parity(z1 & x2) (mod 4), and [W1,W2] = 2 i^e W3 for
/// anticommuting strings, so e is odd and [W1,W2]/i = (+-2) W3.
int bracket_sign(const PauliString& a, const PauliString& b, PauliString& out) {
    if (a.commutes_with(b)) return 0;
    out.x = a.x ^ b.x;
    out.z = a.z ^ b.z;
    int c1 = std::popcount(a.x & a.z);
    int c2 = std::popcount(b.x & b.z);
    int c3 = std::popcount(out.x & out.z);
    int e = (c1 + c2 - c3 + 2 * (std::popcount(a.z & b.x) & 1)) & 3;
    return e == 1 ? 2 : -2;
}

}  // namespace

PauliElement commutator(const PauliElement& a, const PauliElement& b) {
    if (a.n != b.n) throw std::invalid_argument("commutator: qubit count mismatch");
    PauliElement out;
    out.n = a.n;
    PauliString s;
    for (const auto& [pa, ca] : a.terms)
        for (const auto& [pb, cb] : b.terms) {
            int sign = bracket_sign(pa, pb, s);
            if (sign) out.add(s, ca * cb * sign);
        }
    return out;
}

namespace {

// Dense real coordinate vector over Pauli-string indices ((x << n) | z,
// identity excluded by construction). Numeric rank tracking replaces exact
// elimination: closure dimensions at n = 6 need ~4e3 basis vectors, where
// integer coefficient growth is prohibitive.
int64_t string_index(const PauliString& s, int n) {
    return (int64_t{s.x} << n) | s.z;
}

PauliString string_at(int64_t idx, int n) {
    const uint32_t mask = (uint32_t{1} << n) - 1;
    return {static_cast<uint32_t>(idx >> n) & mask, static_cast<uint32_t>(idx) & mask};
}

Eigen::VectorXd to_dense(const PauliElement& e) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(int64_t{1} << (2 * e.n));
    for (const auto& [s, c] : e.terms)
        v(string_index(s, e.n)) = static_cast<double>(c);
    return v;
}

using SparseTerm = std::pair<PauliString, double>;

// [gen, v]/i with v given in dense coordinates; the generator stays sparse.
Eigen::VectorXd bracket_dense(const std::vector<SparseTerm>& gen,
                              const Eigen::VectorXd& v, int n) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
    PauliString w;
    for (int64_t idx = 0; idx < v.size(); ++idx) {
        double a = v(idx);
        if (a == 0.0) continue;
        PauliString s = string_at(idx, n);
        for (const auto& [g, c] : gen) {
            int sign = bracket_sign(g, s, w);
            if (sign) out(string_index(w, n)) += sign * c * a;
        }
    }
    return out;
}

// Orthonormal basis with chunked column storage; insert() runs modified
// Gram-Schmidt with one DGKS re-pass and accepts residuals above 1e-7.
struct NumericSpan {
    Eigen::MatrixXd cols;
    int64_t count = 0;

    explicit NumericSpan(int64_t rows) : cols(rows, 256) {}

    bool insert(Eigen::VectorXd v) {
        double nv = v.norm();
        if (nv < 1e-12) return false;
        v /= nv;
        for (int pass = 0; pass < 2; ++pass) {
            if (count == 0) break;
            auto B = cols.leftCols(count);
            v.noalias() -= B * (B.transpose() * v);
            if (pass == 0 && v.norm() > 0.5) break;
        }
        double r = v.norm();
        if (r < 1e-7) return false;
        if (count == cols.cols())
            cols.conservativeResize(Eigen::NoChange, cols.cols() * 2);
        cols.col(count++) = v / r;
        return true;
    }
};

PauliElement from_dense(const Eigen::VectorXd& v, int n) {
    PauliElement e;
    e.n = n;
    for (int64_t idx = 1; idx < v.size(); ++idx)
        if (std::abs(v(idx)) > 1e-10) e.add(string_at(idx, n), Rational(v(idx)));
    return e;
}

}  // namespace

LieClosure lie_closure(const std::vector<PauliElement>& generators, int64_t max_dim,
                       bool keep_basis) {
    if (generators.empty())
        throw std::invalid_argument("lie_closure: no generators");
    const int n = generators.front().n;
    for (const auto& g : generators)
        if (g.n != n) throw std::invalid_argument("lie_closure: mixed qubit counts");
    const int64_t full = (int64_t{1} << (2 * n)) - 1;
    if (max_dim < 0 || max_dim > full) max_dim = full;

    LieClosure out;
    NumericSpan span(int64_t{1} << (2 * n));
    std::vector<Eigen::VectorXd> worklist;

    std::vector<std::vector<SparseTerm>> sparse_gens;
    for (const auto& g : generators) {
        if (g.empty()) continue;
        std::vector<SparseTerm> sg;
        for (const auto& [s, c] : g.terms) sg.emplace_back(s, static_cast<double>(c));
        if (span.insert(to_dense(g))) {
            worklist.push_back(span.cols.col(span.count - 1));
            if (keep_basis) out.basis.push_back(from_dense(worklist.back(), n));
        }
        sparse_gens.push_back(std::move(sg));
    }

    // Left-normed brackets against the generator set span the closure, so
    // each accepted element is only commuted with the generators.
    for (size_t next = 0; next < worklist.size() && !out.truncated; ++next) {
        for (const auto& g : sparse_gens) {
            Eigen::VectorXd c = bracket_dense(g, worklist[next], n);
            if (!span.insert(std::move(c))) continue;
            if (span.count > max_dim) {
                out.truncated = true;  // partial result past the cap
                --span.count;
                break;
            }
            worklist.push_back(span.cols.col(span.count - 1));
            if (keep_basis) out.basis.push_back(from_dense(worklist.back(), n));
        }
    }
    out.dim = static_cast<int>(span.count);
    return out;
}

std::pair<PauliElement, PauliElement> qaoa_generators(const CostHamiltonian& ham) {
    const CoefficientTable& t = ham.table;
    PauliElement hc, hb;
    hc.n = hb.n = ham.n;
    const bool ksat = ham.mode == SatMode::KSat;
    const bool linear = ksat || ham.k == 3;
    if (linear) {
        for (int i = 0; i < ham.n; ++i) {
            if (t.h[i] == 0) continue;
            int64_t c = ksat ? -t.h[i] : t.h[i];
            hc.add({0, uint32_t{1} << i}, Rational(c));
        }
    }
    for (int i = 0; i < ham.n; ++i)
        for (int j = i + 1; j < ham.n; ++j) {
            int64_t Jij = t.j_at(i, j);
            if (Jij)
                hc.add({0, (uint32_t{1} << i) | (uint32_t{1} << j)}, Rational(Jij));
        }
    for (const auto& [ijl, Kv] : t.K) {
        if (Kv == 0) continue;
        uint32_t z = (uint32_t{1} << ijl[0]) | (uint32_t{1} << ijl[1]) |
                     (uint32_t{1} << ijl[2]);
        hc.add({0, z}, Rational(Kv));
    }
    for (int i = 0; i < ham.n; ++i) hb.add({uint32_t{1} << i, 0}, Rational(1));
    return {hc, hb};
}

int64_t dim_upper_bound(int n) {
    if (n < 1) throw std::invalid_argument("dim_upper_bound: n < 1");
    int64_t nn = n;
    return nn * (nn * nn + 6 * nn + 11) / 6;
}

std::vector<DlaPoint> dla_scan(int n, int k, SatMode mode,
                               const std::vector<double>& ratio_grid,
                               int n_instances, uint64_t seed,
                               int64_t max_dim) {
    if (n > 7) throw std::invalid_argument("dla_scan: n exceeds closure cost guard");
    std::vector<DlaPoint> out(ratio_grid.size());
    for (size_t g = 0; g < ratio_grid.size(); ++g) {
        DlaPoint& pt = out[g];
        pt.ratio = ratio_grid[g];
        pt.m = static_cast<int>(std::lround(pt.ratio * n));
        pt.dims.assign(n_instances, 0);
        parallel_for(n_instances, [&](size_t i) {
            SatInstance inst =
                generate_instance(n, pt.m, k, mode, derive_seed(seed, g, i));
            CostHamiltonian ham = build_cost_hamiltonian(inst);
            auto [hc, hb] = qaoa_generators(ham);
            std::vector<PauliElement> gens;
            if (!hc.empty()) gens.push_back(hc);
            gens.push_back(hb);
            pt.dims[i] = lie_closure(gens, max_dim, false).dim;
        });
        double sum = 0;
        for (int d : pt.dims) sum += d;
        pt.mean_dim = n_instances ? sum / n_instances : 0.0;
    }
    return out;
}

PauliElement parse_pauli_element(const std::string& line, int n) {
    std::istringstream is(line);
    std::string coeff_str, star, word;
    if (!(is >> coeff_str >> star >> word) || star != "*")
        throw std::runtime_error("parse_pauli_element: expected 'coeff * WORD'");
    if (static_cast<int>(word.size()) != n)
        throw std::runtime_error("parse_pauli_element: word length != n");
    Rational c(coeff_str);
    PauliString s;
    for (int q = 0; q < n; ++q) {
        switch (word[q]) {
            case 'I': break;
            case 'X': s.x |= uint32_t{1} << q; break;
            case 'Y': s.x |= uint32_t{1} << q; s.z |= uint32_t{1} << q; break;
            case 'Z': s.z |= uint32_t{1} << q; break;
            default:
                throw std::runtime_error("parse_pauli_element: bad Pauli character");
        }
    }
    PauliElement e;
    e.n = n;
    e.add(s, c);
    return e;
}

std::vector<PauliElement> parse_generators(const std::string& text, int n) {
    std::vector<PauliElement> gens;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        gens.push_back(parse_pauli_element(line, n));
    }
    return gens;
}

std::string pauli_element_text(const PauliElement& e) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : e.terms) {
        if (!first) os << " + ";
        os << c << " * " << s.str(e.n);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace qptlab
