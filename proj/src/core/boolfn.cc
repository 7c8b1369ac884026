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

#include "boolfn.h"

#include <stdexcept>
#include <string>

namespace dmbqc {

namespace {

constexpr size_t kMaxTableInputs = 26;

BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    a.for_each_one([&](size_t j) { out.set(j, true); });
    b.for_each_one([&](size_t j) { out.set(a.size() + j, true); });
    return out;
}

}  // namespace

TruthTable::TruthTable(size_t n_in, size_t n_out) : n_in_(n_in), n_out_(n_out) {
    if (n_in > kMaxTableInputs) {
        throw std::invalid_argument("truth tables support at most " + std::to_string(kMaxTableInputs) + " inputs");
    }
    rows_.assign(size_t{1} << n_in, BitVec(n_out));
}

TruthTable::TruthTable(size_t n_in, size_t n_out, std::vector<BitVec> rows)
    : n_in_(n_in), n_out_(n_out), rows_(std::move(rows)) {
    if (n_in > kMaxTableInputs || rows_.size() != (size_t{1} << n_in)) {
        throw std::invalid_argument("truth table must have exactly 2^n_in rows");
    }
    for (const auto& r : rows_) {
        if (r.size() != n_out) {
            throw std::invalid_argument("truth table row has the wrong output length");
        }
    }
}

TruthTable TruthTable::from_function(size_t n_in, size_t n_out, const std::function<BitVec(const BitVec&)>& fn) {
    TruthTable tt(n_in, n_out);
    for (uint64_t v = 0; v < tt.size(); v++) {
        tt.set(v, fn(BitVec::from_uint(v, n_in)));
    }
    return tt;
}

const BitVec& TruthTable::operator()(const BitVec& input) const {
    if (input.size() != n_in_) {
        throw std::invalid_argument("truth table input has the wrong length");
    }
    return rows_[input.to_uint()];
}

void TruthTable::set(uint64_t input, BitVec output) {
    if (output.size() != n_out_) {
        throw std::invalid_argument("truth table output has the wrong length");
    }
    rows_.at(input) = std::move(output);
}

TruthTable TruthTable::column(size_t k) const {
    TruthTable out(n_in_, 1);
    for (uint64_t v = 0; v < rows_.size(); v++) {
        BitVec bit(1);
        bit.set(0, rows_[v].get(k));
        out.set(v, std::move(bit));
    }
    return out;
}

AffineMap::AffineMap(BinMatrix matrix, BitVec offset) : a(std::move(matrix)), b(std::move(offset)) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("affine offset length does not match matrix rows");
    }
}

AffineMap AffineMap::linear(BinMatrix matrix) {
    size_t rows = matrix.rows();
    return AffineMap(std::move(matrix), BitVec(rows));
}

AffineMap AffineMap::identity(size_t n) { return linear(BinMatrix::identity(n)); }

BitVec AffineMap::operator()(const BitVec& x) const { return a.multiply(x) ^ b; }

LinearityVerdict is_linear(const TruthTable& tt) {
    size_t n = tt.n_in();
    const BitVec& offset = tt.at(0);
    BinMatrix a(tt.n_out(), n);
    for (size_t j = 0; j < n; j++) {
        BitVec col = tt.at(uint64_t{1} << j) ^ offset;
        col.for_each_one([&](size_t r) { a.set(r, j, true); });
    }
    AffineMap candidate(a, offset);

    // g(x) = f(x) + A x + b vanishes on 0 and the unit vectors. At the first
    // mismatch x, walk its bits: the first prefix where g turns nonzero gives
    // the witness (previous prefix, last unit vector).
    for (uint64_t v = 0; v < tt.size(); v++) {
        BitVec x = BitVec::from_uint(v, n);
        if (tt.at(v) == candidate(x)) {
            continue;
        }
        BitVec prefix(n);
        size_t last = 0;
        bool found = false;
        x.for_each_one([&](size_t j) {
            if (found) {
                return;
            }
            BitVec next = prefix;
            next.set(j, true);
            if (tt(next) != candidate(next)) {
                last = j;
                found = true;
                return;
            }
            prefix = std::move(next);
        });
        return Nonlinear{prefix, BitVec::unit(n, last)};
    }
    return Linear{std::move(candidate)};
}

bool check_equiv_direction(const TruthTable& f, const TruthTable& g, const EquivalenceMaps& maps) {
    if (maps.l1.in_dim() != g.n_in() || maps.l1.out_dim() != f.n_in() || maps.l2.in_dim() != f.n_in() ||
        maps.l3.in_dim() != f.n_out() + maps.l2.out_dim() || maps.l3.out_dim() != g.n_out()) {
        throw std::invalid_argument("equivalence maps have incompatible dimensions");
    }
    for (uint64_t v = 0; v < g.size(); v++) {
        BitVec x = BitVec::from_uint(v, g.n_in());
        BitVec y = maps.l1(x);
        if (maps.l3(concat(f(y), maps.l2(y))) != g.at(v)) {
            return false;
        }
    }
    return true;
}

bool check_equiv_mod_linear(
    const TruthTable& f, const TruthTable& g, const EquivalenceMaps& forward, const EquivalenceMaps& reverse) {
    return check_equiv_direction(f, g, forward) && check_equiv_direction(g, f, reverse);
}

AndExtraction and_from_nonlinear(const TruthTable& tt) {
    if (tt.n_out() != 1) {
        throw std::invalid_argument("AND extraction needs a single-output function");
    }
    auto verdict = is_linear(tt);
    const auto* nl = std::get_if<Nonlinear>(&verdict);
    if (nl == nullptr) {
        throw std::invalid_argument("function is linear; no AND gate can be extracted");
    }
    AndExtraction out{nl->p, nl->q, BitVec(tt.n_in()), TruthTable(2, 1)};
    auto f = [&](const BitVec& x) { return tt(x).get(0); };
    for (uint64_t v = 0; v < 4; v++) {
        bool r = v & 1;
        bool s = (v >> 1) & 1;
        BitVec ra = r ? out.a : BitVec(tt.n_in());
        BitVec sb = s ? out.b : BitVec(tt.n_in());
        bool val = f(out.c ^ ra ^ sb) ^ f(out.c ^ ra) ^ f(out.c ^ sb) ^ f(out.c);
        if (val != (r && s)) {
            throw std::logic_error("extracted gate is not AND");
        }
        BitVec bit(1);
        bit.set(0, val);
        out.g.set(v, std::move(bit));
    }
    return out;
}

}  // namespace dmbqc
