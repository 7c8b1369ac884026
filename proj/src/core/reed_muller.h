// Copyright 2026 The dmbqc Authors
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

#ifndef DMBQC_CORE_REED_MULLER_H
#define DMBQC_CORE_REED_MULLER_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gf2.h"

namespace dmbqc {

// Coordinate convention used everywhere: coordinate j of a length-2^m word is
// the evaluation point (j_1, ..., j_m) with j_k = bit (k-1) of j, so v_1 is the
// least significant bit.

/// Binary Reed-Muller code R(r, m) with its monomial basis.
struct RMCode {
    int r = 0;
    int m = 0;
    /// Rows are monomial evaluations, ordered by degree then lexicographically.
    BinMatrix basis;
    /// Variables (1-based) of each basis monomial, aligned with basis rows.
    std::vector<std::vector<int>> monomials;

    size_t dim() const { return basis.rows(); }
    size_t length() const { return basis.cols(); }
};

/// Evaluation vector of the monomial prod_{k in vars} v_k over 2^m points.
BitVec monomial_vector(int m, const std::vector<int>& vars);

/// sum_{i <= r} C(m, i).
size_t rm_dimension(int r, int m);

RMCode rm_basis(int r, int m);

/// Basis rows with coordinate 0 (the all-zero evaluation point) deleted.
BinMatrix puncture(const RMCode& code);

/// CSS code built from punctured Reed-Muller codes: X side from R*(r, m),
/// Z side from R*(m - r - 1, m). The first row of each side is the logical.
struct CSSCode {
    size_t n = 0;
    BinMatrix gx;
    BinMatrix gz;
    BitVec x_logical;
    BitVec z_logical;
};

class OrthogonalityError : public std::runtime_error {
   public:
    OrthogonalityError(const std::string& what, size_t x_row, size_t z_row)
        : std::runtime_error(what), x_row(x_row), z_row(z_row) {}
    size_t x_row;
    size_t z_row;
};

/// Throws OrthogonalityError naming the offending (X row, Z row) pair, with
/// row 0 on each side denoting the logical operator.
CSSCode css_generators(int r, int m);

/// Largest code dimension accepted by the enumeration routines below.
inline constexpr size_t kMaxEnumerationDim = 32;

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Exact weight distribution {weight: count} of R(r, m) by enumeration.
std::map<size_t, uint64_t> weight_distribution(int r, int m, size_t max_dim = kMaxEnumerationDim);

/// Weight distribution of an arbitrary linear code given by generators.
std::map<size_t, uint64_t> weight_distribution(const BinMatrix& generators, size_t max_dim = kMaxEnumerationDim);

struct AxResult {
    int divisor_exponent = 0;
    int expected_exponent = 0;
    bool sharp = false;
    std::map<size_t, uint64_t> weights;
};

/// Empirical divisibility check: the minimum 2-adic valuation over all nonzero
/// codeword weights, compared against ceil(m / r) - 1.
AxResult ax_check(int r, int m, size_t max_dim = kMaxEnumerationDim);

}  // namespace dmbqc

#endif  // DMBQC_CORE_REED_MULLER_H
