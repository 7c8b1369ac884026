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

#include "reed_muller.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace dmbqc {

namespace {

void check_params(int r, int m) {
    if (m < 0 || r < 0 || r > m) {
        throw std::invalid_argument(
            "invalid Reed-Muller parameters (r=" + std::to_string(r) + ", m=" + std::to_string(m) +
            "): need 0 <= r <= m");
    }
    if (m > 20) {
        throw std::invalid_argument("m=" + std::to_string(m) + " exceeds the supported code length 2^20");
    }
}

// All k-subsets of {1..m} in lexicographic order.
void subsets_of_size(int m, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) {
        cur[static_cast<size_t>(i)] = i + 1;
    }
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == m - k + i + 1) {
            i--;
        }
        if (i < 0) {
            return;
        }
        cur[static_cast<size_t>(i)]++;
        for (int j = i + 1; j < k; j++) {
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
        }
    }
}

// Gray-code walk of a span whose words fit in 64 bits.
template <typename Fn>
void walk_small_span(const BinMatrix& basis, Fn&& fn) {
    std::vector<uint64_t> gens;
    for (const auto& row : basis.row_list()) {
        gens.push_back(row.to_uint());
    }
    uint64_t cur = 0;
    fn(cur);
    uint64_t total = uint64_t{1} << gens.size();
    for (uint64_t step = 1; step < total; step++) {
        cur ^= gens[static_cast<size_t>(std::countr_zero(step))];
        fn(cur);
    }
}

}  // namespace

BitVec monomial_vector(int m, const std::vector<int>& vars) {
    size_t n = size_t{1} << m;
    uint64_t mask = 0;
    for (int k : vars) {
        if (k < 1 || k > m) {
            throw std::invalid_argument("monomial variable out of range");
        }
        mask |= uint64_t{1} << (k - 1);
    }
    BitVec v(n);
    for (size_t j = 0; j < n; j++) {
        if ((j & mask) == mask) {
            v.set(j, true);
        }
    }
    return v;
}

size_t rm_dimension(int r, int m) {
    size_t total = 0;
    size_t binom = 1;
    for (int i = 0; i <= r && i <= m; i++) {
        total += binom;
        binom = binom * static_cast<size_t>(m - i) / static_cast<size_t>(i + 1);
    }
    return total;
}

RMCode rm_basis(int r, int m) {
    check_params(r, m);
    RMCode code;
    code.r = r;
    code.m = m;
    code.basis = BinMatrix(size_t{1} << m, std::vector<BitVec>{});
    for (int deg = 0; deg <= r; deg++) {
        std::vector<std::vector<int>> subsets;
        subsets_of_size(m, deg, subsets);
        for (auto& vars : subsets) {
            code.basis.push_row(monomial_vector(m, vars));
            code.monomials.push_back(std::move(vars));
        }
    }
    return code;
}

BinMatrix puncture(const RMCode& code) {
    if (code.r >= code.m) {
        throw std::invalid_argument(
            "puncturing requires r <= m - 1 (got r=" + std::to_string(code.r) + ", m=" + std::to_string(code.m) + ")");
    }
    size_t n = code.length() - 1;
    BinMatrix out(n, std::vector<BitVec>{});
    for (const auto& row : code.basis.row_list()) {
        BitVec p(n);
        row.for_each_one([&](size_t j) {
            if (j > 0) {
                p.set(j - 1, true);
            }
        });
        out.push_row(std::move(p));
    }
    return out;
}

CSSCode css_generators(int r, int m) {
    if (r < 0 || m < 1 || r > m - 1) {
        throw std::invalid_argument(
            "CSS construction requires 0 <= r <= m - 1 (got r=" + std::to_string(r) + ", m=" + std::to_string(m) + ")");
    }
    BinMatrix xs = puncture(rm_basis(r, m));
    BinMatrix zs = puncture(rm_basis(m - r - 1, m));
    for (size_t a = 0; a < xs.rows(); a++) {
        for (size_t b = 0; b < zs.rows(); b++) {
            bool odd = xs.row(a).dot(zs.row(b));
            bool want_odd = a == 0 && b == 0;
            if (odd != want_odd) {
                throw OrthogonalityError(
                    "CSS orthogonality violated between X row " + std::to_string(a) + " and Z row " +
                        std::to_string(b),
                    a, b);
            }
        }
    }
    CSSCode css;
    css.n = xs.cols();
    css.x_logical = xs.row(0);
    css.z_logical = zs.row(0);
    css.gx = BinMatrix(css.n, std::vector<BitVec>(xs.row_list().begin() + 1, xs.row_list().end()));
    css.gz = BinMatrix(css.n, std::vector<BitVec>(zs.row_list().begin() + 1, zs.row_list().end()));
    if (css.gx.rows() + css.gz.rows() != css.n - 1) {
        throw std::logic_error("CSS generator count does not equal n - 1");
    }
    return css;
}

std::map<size_t, uint64_t> weight_distribution(const BinMatrix& generators, size_t max_dim) {
    BinMatrix basis = independent_rows(generators);
    if (basis.rows() > max_dim) {
        throw BudgetExceeded(
            "code dimension " + std::to_string(basis.rows()) + " exceeds the enumeration limit " +
            std::to_string(max_dim));
    }
    std::map<size_t, uint64_t> dist;
    if (basis.cols() <= 64) {
        std::array<uint64_t, 65> counts{};
        walk_small_span(basis, [&](uint64_t w) { counts[static_cast<size_t>(std::popcount(w))]++; });
        for (size_t w = 0; w < counts.size(); w++) {
            if (counts[w]) {
                dist[w] = counts[w];
            }
        }
    } else {
        for_each_in_span(basis, [&](const BitVec& v) { dist[v.weight()]++; });
    }
    return dist;
}

std::map<size_t, uint64_t> weight_distribution(int r, int m, size_t max_dim) {
    check_params(r, m);
    if (rm_dimension(r, m) > max_dim) {
        throw BudgetExceeded(
            "R(" + std::to_string(r) + "," + std::to_string(m) + ") has dimension " +
            std::to_string(rm_dimension(r, m)) + ", above the enumeration limit " + std::to_string(max_dim));
    }
    return weight_distribution(rm_basis(r, m).basis, max_dim);
}

AxResult ax_check(int r, int m, size_t max_dim) {
    check_params(r, m);
    if (r == 0) {
        throw std::invalid_argument("ax_check requires r >= 1");
    }
    auto dist = weight_distribution(r, m, max_dim);
    int min_val = -1;
    for (const auto& [w, count] : dist) {
        if (w == 0) {
            continue;
        }
        int val = std::countr_zero(static_cast<uint64_t>(w));
        if (min_val < 0 || val < min_val) {
            min_val = val;
        }
    }
    AxResult res;
    res.divisor_exponent = min_val;
    res.expected_exponent = (m + r - 1) / r - 1;
    res.sharp = res.divisor_exponent == res.expected_exponent;
    res.weights = std::move(dist);
    return res;
}

}  // namespace dmbqc
