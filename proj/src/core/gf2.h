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

#ifndef DMBQC_CORE_GF2_H
#define DMBQC_CORE_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dmbqc {

/// Fixed-length vector over GF(2). Coordinate 0 is the first character of the
/// textual form; storage packs coordinate j into bit (j % 64) of word j / 64.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t len);

    /// Parses a string of '0'/'1' characters; coordinate 0 comes first.
    static BitVec from_string(std::string_view bits);
    /// Low `len` bits of `value`, bit k becoming coordinate k.
    static BitVec from_uint(uint64_t value, size_t len);
    static BitVec from_bits(std::span<const uint8_t> bits);
    static BitVec ones(size_t len);
    static BitVec unit(size_t len, size_t index);

    size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(size_t j) const { return (words_[j >> 6] >> (j & 63)) & 1; }
    void set(size_t j, bool value);
    void flip(size_t j) { words_[j >> 6] ^= uint64_t{1} << (j & 63); }

    size_t weight() const;
    bool is_zero() const;
    /// Mod-2 inner product.
    bool dot(const BitVec& other) const;
    /// Index of the lowest set coordinate, or size() when zero.
    size_t first_one() const;
    /// Coordinates as integer value; requires size() <= 64.
    uint64_t to_uint() const;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    bool operator==(const BitVec& other) const = default;
    /// Lexicographic on coordinates 0, 1, ... with 0 < 1.
    bool operator<(const BitVec& other) const;

    std::string str() const;
    std::vector<int> to_ints() const;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    /// Calls `fn(j)` for every coordinate j with value 1, in increasing order.
    template <typename Fn>
    void for_each_one(Fn&& fn) const {
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t word = words_[w];
            while (word) {
                fn(w * 64 + static_cast<size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

   private:
    void check_same_size(const BitVec& other) const;

    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec& v) const;
};

size_t weight(const BitVec& v);
BitVec coord_product(const BitVec& a, const BitVec& b);

enum class ApplyMode { kMod2, kInteger };

/// Binary matrix stored as a list of rows.
class BinMatrix {
   public:
    BinMatrix() = default;
    BinMatrix(size_t n_rows, size_t n_cols);
    /// All rows must have length n_cols.
    BinMatrix(size_t n_cols, std::vector<BitVec> rows);

    static BinMatrix identity(size_t n);
    /// Each string is one row, coordinate 0 first.
    static BinMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return n_cols_; }
    const BitVec& row(size_t k) const { return rows_[k]; }
    BitVec& row(size_t k) { return rows_[k]; }
    const std::vector<BitVec>& row_list() const { return rows_; }
    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
    void push_row(BitVec row);

    BinMatrix transpose() const;
    size_t rank() const;
    bool is_zero() const;
    /// Mod-2 product M v.
    BitVec multiply(const BitVec& v) const;
    bool operator==(const BinMatrix& other) const = default;

   private:
    size_t n_cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Row-by-row inner products of M with v, either reduced mod 2 or as integer
/// overlap counts.
std::vector<int64_t> mat_apply(const BinMatrix& m, const BitVec& v, ApplyMode mode);

struct Gf2Solution {
    BitVec x;
};
/// y with y^T A = 0 and y^T b = 1.
struct Gf2Infeasible {
    BitVec certificate;
};
using Gf2Result = std::variant<Gf2Solution, Gf2Infeasible>;

/// Solves A x = b over GF(2). Free variables are set to zero.
Gf2Result solve_gf2(const BinMatrix& a, const BitVec& b);

/// Basis of { y : y^T A = 0 }, one BitVec of length A.rows() per basis vector.
std::vector<BitVec> left_null_space(const BinMatrix& a);

/// Subset of the rows forming a basis of the row span, in original order.
BinMatrix independent_rows(const BinMatrix& generators);

/// Visits every element of the row span exactly once in Gray-code order,
/// starting from the zero vector. Dependent generators are dropped first.
void for_each_in_span(const BinMatrix& generators, const std::function<void(const BitVec&)>& fn);

/// Materialized for_each_in_span. The zero vector is first.
std::vector<BitVec> enumerate_span(const BinMatrix& generators);

/// Whether v lies in the row span of `generators`.
bool in_span(const BinMatrix& generators, const BitVec& v);

}  // namespace dmbqc

#endif  // DMBQC_CORE_GF2_H
