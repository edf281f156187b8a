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

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qptlab/hamiltonian.hpp"

namespace qptlab {

using Rational = boost::multiprecision::cpp_rational;

/// Hermitian Pauli string in symplectic form: W(x, z) = i^{|x & z|} X^x Z^z.
/// The i^{|x & z|} factor fixes the canonical global phase (Y = i X Z).
struct PauliString {
    uint32_t x = 0;
    uint32_t z = 0;

    auto operator<=>(const PauliString&) const = default;
    uint64_t key() const { return (uint64_t{x} << 32) | z; }
    bool commutes_with(const PauliString& o) const;
    std::string str(int n) const;  // charset {I, X, Y, Z}, leftmost char = qubit 0
};

/// Real-linear combination of Hermitian Pauli strings with exact rational
/// coefficients. The identity string is excluded (traceless convention); DLA
/// elements are the Hermitian H of the anti-Hermitian iH.
struct PauliElement {
    int n = 0;
    std::map<PauliString, Rational> terms;

    void add(const PauliString& s, const Rational& c);
    bool empty() const { return terms.empty(); }
};

/// Exact commutator scaled Hermitian: returns [A, B] / i.
/// For single strings: [X, Z]/i = -2 Y.
PauliElement commutator(const PauliElement& a, const PauliElement& b);

struct LieClosure {
    std::vector<PauliElement> basis;  // linearly independent, reduced
    int dim = 0;
    bool truncated = false;
    std::vector<std::string> generator_provenance;
};

/// Fixed point of bracket-and-insert over the generators. Independence is
/// tracked numerically (orthonormal coordinate basis, residual threshold
/// 1e-7); structure constants are +-2, so true dependencies sit many orders
/// below the threshold. Left-normed brackets against the generators span the
/// full closure, so each new basis element is only commuted with the
/// generator set. max_dim < 0 means 4^n - 1; keep_basis = false skips the
/// sparse basis materialization (scan use).
LieClosure lie_closure(const std::vector<PauliElement>& generators,
                       int64_t max_dim = -1, bool keep_basis = true);

/// (H_C, H_B) as exact traceless elements; the common rational prefactor of
/// H_C is dropped (closure dimension is scale invariant).
std::pair<PauliElement, PauliElement> qaoa_generators(const CostHamiltonian& ham);

/// (1/6) n (n^2 + 6n + 11) = binom(n+3, n) - 1.
int64_t dim_upper_bound(int n);

struct DlaPoint {
    double ratio = 0;
    int m = 0;
    double mean_dim = 0;
    std::vector<int> dims;
};

/// max_dim < 0 runs every closure to completion; otherwise a closure that
/// reaches max_dim is stopped there and recorded at that value, which keeps
/// saturated instances (dim near 4^n - 1) affordable while preserving the
/// rank ordering of the per-ratio means.
std::vector<DlaPoint> dla_scan(int n, int k, SatMode mode,
                               const std::vector<double>& ratio_grid,
                               int n_instances, uint64_t seed,
                               int64_t max_dim = -1);

/// One element per line: `coeff * PAULI-WORD`, e.g. `3/2 * XIZ`.
PauliElement parse_pauli_element(const std::string& line, int n);
std::vector<PauliElement> parse_generators(const std::string& text, int n);
std::string pauli_element_text(const PauliElement& e);

}  // namespace qptlab
