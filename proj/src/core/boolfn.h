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

#ifndef DMBQC_CORE_BOOLFN_H
#define DMBQC_CORE_BOOLFN_H

#include <functional>
#include <variant>
#include <vector>

#include "gf2.h"

namespace dmbqc {

/// A multi-output Boolean function given by its full table. Row v holds the
/// output for the input whose coordinate k is bit k of v.
class TruthTable {
   public:
    TruthTable() = default;
    TruthTable(size_t n_in, size_t n_out);
    TruthTable(size_t n_in, size_t n_out, std::vector<BitVec> rows);

    static TruthTable from_function(size_t n_in, size_t n_out, const std::function<BitVec(const BitVec&)>& fn);

    size_t n_in() const { return n_in_; }
    size_t n_out() const { return n_out_; }
    size_t size() const { return rows_.size(); }

    const BitVec& at(uint64_t input) const { return rows_[input]; }
    const BitVec& operator()(const BitVec& input) const;
    void set(uint64_t input, BitVec output);

    /// Single-output view of output coordinate `k`.
    TruthTable column(size_t k) const;

    bool operator==(const TruthTable& other) const = default;

   private:
    size_t n_in_ = 0;
    size_t n_out_ = 0;
    std::vector<BitVec> rows_;
};

/// x -> A x + b over GF(2).
struct AffineMap {
    BinMatrix a;
    BitVec b;

    AffineMap() = default;
    AffineMap(BinMatrix matrix, BitVec offset);
    static AffineMap linear(BinMatrix matrix);
    static AffineMap identity(size_t n);

    size_t in_dim() const { return a.cols(); }
    size_t out_dim() const { return a.rows(); }
    BitVec operator()(const BitVec& x) const;
};

struct Linear {
    AffineMap map;
};
/// f(0) + f(p) + f(q) + f(p + q) != 0.
struct Nonlinear {
    BitVec p;
    BitVec q;
};
using LinearityVerdict = std::variant<Linear, Nonlinear>;

/// Linear here means affine over GF(2).
LinearityVerdict is_linear(const TruthTable& tt);
inline bool verdict_is_linear(const LinearityVerdict& v) { return std::holds_alternative<Linear>(v); }

/// The maps of one direction of g == L3 o (f, L2) o L1, where (f, L2) maps y
/// to the concatenation of f(y) and L2(y).
struct EquivalenceMaps {
    AffineMap l1;
    AffineMap l2;
    AffineMap l3;
};

/// Whether g(x) == L3(f(L1 x), L2(L1 x)) for every x.
bool check_equiv_direction(const TruthTable& f, const TruthTable& g, const EquivalenceMaps& maps);

/// Both directions: g from f via `forward`, and f from g via `reverse`.
bool check_equiv_mod_linear(
    const TruthTable& f, const TruthTable& g, const EquivalenceMaps& forward, const EquivalenceMaps& reverse);

struct AndExtraction {
    BitVec a;
    BitVec b;
    BitVec c;
    /// g(r, s) = f(c + ra + sb) + f(c + ra) + f(c + sb) + f(c); equals r AND s.
    TruthTable g;
};

/// Throws std::invalid_argument if tt is linear or has more than one output.
AndExtraction and_from_nonlinear(const TruthTable& tt);

}  // namespace dmbqc

#endif  // DMBQC_CORE_BOOLFN_H
