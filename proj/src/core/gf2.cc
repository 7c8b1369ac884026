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

#include "gf2.h"

#include <algorithm>
#include <stdexcept>

namespace dmbqc {

namespace {

size_t word_count(size_t len) { return (len + 63) / 64; }

}  // namespace

BitVec::BitVec(size_t len) : len_(len), words_(word_count(len), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t j = 0; j < bits.size(); j++) {
        if (bits[j] == '1') {
            v.set(j, true);
        } else if (bits[j] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(bits) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_uint(uint64_t value, size_t len) {
    if (len > 64) {
        throw std::invalid_argument("from_uint supports at most 64 coordinates");
    }
    BitVec v(len);
    if (len) {
        v.words_[0] = len == 64 ? value : value & ((uint64_t{1} << len) - 1);
    }
    return v;
}

BitVec BitVec::from_bits(std::span<const uint8_t> bits) {
    BitVec v(bits.size());
    for (size_t j = 0; j < bits.size(); j++) {
        if (bits[j] > 1) {
            throw std::invalid_argument("bit values must be 0 or 1");
        }
        v.set(j, bits[j] != 0);
    }
    return v;
}

BitVec BitVec::ones(size_t len) {
    BitVec v(len);
    for (size_t j = 0; j < len; j++) {
        v.set(j, true);
    }
    return v;
}

BitVec BitVec::unit(size_t len, size_t index) {
    BitVec v(len);
    v.set(index, true);
    return v;
}

void BitVec::set(size_t j, bool value) {
    uint64_t mask = uint64_t{1} << (j & 63);
    if (value) {
        words_[j >> 6] |= mask;
    } else {
        words_[j >> 6] &= ~mask;
    }
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec& other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVec::first_one() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + static_cast<size_t>(std::countr_zero(words_[w]));
        }
    }
    return len_;
}

uint64_t BitVec::to_uint() const {
    if (len_ > 64) {
        throw std::invalid_argument("to_uint requires at most 64 coordinates");
    }
    return words_.empty() ? 0 : words_[0];
}

BitVec& BitVec::operator^=(const BitVec& other) {
    check_same_size(other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    check_same_size(other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

bool BitVec::operator<(const BitVec& other) const {
    if (len_ != other.len_) {
        return len_ < other.len_;
    }
    for (size_t j = 0; j < len_; j++) {
        bool a = get(j);
        bool b = other.get(j);
        if (a != b) {
            return b;
        }
    }
    return false;
}

std::string BitVec::str() const {
    std::string out(len_, '0');
    for (size_t j = 0; j < len_; j++) {
        if (get(j)) {
            out[j] = '1';
        }
    }
    return out;
}

std::vector<int> BitVec::to_ints() const {
    std::vector<int> out(len_);
    for (size_t j = 0; j < len_; j++) {
        out[j] = get(j) ? 1 : 0;
    }
    return out;
}

void BitVec::check_same_size(const BitVec& other) const {
    if (len_ != other.len_) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(len_) + " vs " + std::to_string(other.len_));
    }
}

size_t BitVecHash::operator()(const BitVec& v) const {
    size_t h = std::hash<size_t>{}(v.size());
    for (uint64_t w : v.words()) {
        h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

size_t weight(const BitVec& v) { return v.weight(); }

BitVec coord_product(const BitVec& a, const BitVec& b) { return a & b; }

BinMatrix::BinMatrix(size_t n_rows, size_t n_cols) : n_cols_(n_cols), rows_(n_rows, BitVec(n_cols)) {}

BinMatrix::BinMatrix(size_t n_cols, std::vector<BitVec> rows) : n_cols_(n_cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != n_cols_) {
            throw std::invalid_argument("matrix row length does not match column count");
        }
    }
}

BinMatrix BinMatrix::identity(size_t n) {
    BinMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BinMatrix BinMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVec> parsed;
    for (auto s : rows) {
        parsed.push_back(BitVec::from_string(s));
    }
    size_t cols = parsed.empty() ? 0 : parsed.front().size();
    return BinMatrix(cols, std::move(parsed));
}

void BinMatrix::push_row(BitVec row) {
    if (row.size() != n_cols_) {
        throw std::invalid_argument("matrix row length does not match column count");
    }
    rows_.push_back(std::move(row));
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(n_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        rows_[r].for_each_one([&](size_t c) { t.set(c, r, true); });
    }
    return t;
}

size_t BinMatrix::rank() const { return independent_rows(*this).rows(); }

bool BinMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.is_zero(); });
}

BitVec BinMatrix::multiply(const BitVec& v) const {
    if (v.size() != n_cols_) {
        throw std::invalid_argument(
            "dimension mismatch: matrix has " + std::to_string(n_cols_) + " columns, vector has " +
            std::to_string(v.size()) + " coordinates");
    }
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

std::vector<int64_t> mat_apply(const BinMatrix& m, const BitVec& v, ApplyMode mode) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument(
            "dimension mismatch: matrix has " + std::to_string(m.cols()) + " columns, vector has " +
            std::to_string(v.size()) + " coordinates");
    }
    std::vector<int64_t> out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        auto overlap = static_cast<int64_t>((m.row(r) & v).weight());
        out[r] = mode == ApplyMode::kMod2 ? overlap % 2 : overlap;
    }
    return out;
}

namespace {

// Incremental elimination. Each pivot row is kept reduced against all earlier
// pivot columns, and remembers which earlier pivots' original rows it is built
// from, so certificates never need a dense history matrix.
class Eliminator {
   public:
    explicit Eliminator(size_t n_cols) : n_cols_(n_cols) {}

    struct Reduced {
        BitVec row;
        bool rhs;
        BitVec used;  // over pivot indices
    };

    Reduced reduce(const BitVec& row, bool rhs) const {
        Reduced out{row, rhs, BitVec(n_cols_)};
        for (size_t p = 0; p < pivots_.size(); p++) {
            const auto& piv = pivots_[p];
            if (out.row.get(piv.col)) {
                out.row ^= piv.row;
                out.rhs ^= piv.rhs;
                out.used ^= piv.combo;
            }
        }
        return out;
    }

    void add_pivot(size_t original_index, Reduced reduced) {
        size_t idx = pivots_.size();
        Pivot piv{reduced.row.first_one(), std::move(reduced.row), reduced.rhs, std::move(reduced.used),
                  original_index};
        piv.combo.set(idx, true);
        pivots_.push_back(std::move(piv));
    }

    /// Original row indices combined in `used`.
    std::vector<size_t> originals(const BitVec& used) const {
        std::vector<size_t> out;
        used.for_each_one([&](size_t p) { out.push_back(pivots_[p].original); });
        return out;
    }

    BitVec back_substitute() const {
        BitVec x(n_cols_);
        for (size_t p = pivots_.size(); p-- > 0;) {
            const auto& piv = pivots_[p];
            bool value = piv.rhs;
            BitVec rest = piv.row;
            rest.set(piv.col, false);
            value ^= rest.dot(x);
            x.set(piv.col, value);
        }
        return x;
    }

   private:
    struct Pivot {
        size_t col;
        BitVec row;
        bool rhs;
        BitVec combo;
        size_t original;
    };

    size_t n_cols_;
    std::vector<Pivot> pivots_;
};

BitVec indices_to_vec(size_t len, size_t extra, const std::vector<size_t>& idx) {
    BitVec out(len);
    out.set(extra, true);
    for (size_t k : idx) {
        out.flip(k);
    }
    return out;
}

}  // namespace

Gf2Result solve_gf2(const BinMatrix& a, const BitVec& b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument(
            "dimension mismatch: system has " + std::to_string(a.rows()) + " rows, right-hand side has " +
            std::to_string(b.size()) + " entries");
    }
    Eliminator elim(a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        auto red = elim.reduce(a.row(i), b.get(i));
        if (red.row.is_zero()) {
            if (red.rhs) {
                return Gf2Infeasible{indices_to_vec(a.rows(), i, elim.originals(red.used))};
            }
            continue;
        }
        elim.add_pivot(i, std::move(red));
    }
    return Gf2Solution{elim.back_substitute()};
}

std::vector<BitVec> left_null_space(const BinMatrix& a) {
    Eliminator elim(a.cols());
    std::vector<BitVec> basis;
    for (size_t i = 0; i < a.rows(); i++) {
        auto red = elim.reduce(a.row(i), false);
        if (red.row.is_zero()) {
            basis.push_back(indices_to_vec(a.rows(), i, elim.originals(red.used)));
        } else {
            elim.add_pivot(i, std::move(red));
        }
    }
    return basis;
}

BinMatrix independent_rows(const BinMatrix& generators) {
    Eliminator elim(generators.cols());
    BinMatrix out(generators.cols(), std::vector<BitVec>{});
    for (size_t i = 0; i < generators.rows(); i++) {
        auto red = elim.reduce(generators.row(i), false);
        if (!red.row.is_zero()) {
            elim.add_pivot(i, std::move(red));
            out.push_row(generators.row(i));
        }
    }
    return out;
}

void for_each_in_span(const BinMatrix& generators, const std::function<void(const BitVec&)>& fn) {
    BinMatrix basis = independent_rows(generators);
    size_t k = basis.rows();
    if (k >= 63) {
        throw std::length_error("span of dimension " + std::to_string(k) + " is too large to enumerate");
    }
    BitVec cur(generators.cols());
    fn(cur);
    uint64_t total = uint64_t{1} << k;
    for (uint64_t step = 1; step < total; step++) {
        cur ^= basis.row(static_cast<size_t>(std::countr_zero(step)));
        fn(cur);
    }
}

std::vector<BitVec> enumerate_span(const BinMatrix& generators) {
    std::vector<BitVec> out;
    for_each_in_span(generators, [&](const BitVec& v) { out.push_back(v); });
    return out;
}

bool in_span(const BinMatrix& generators, const BitVec& v) {
    Eliminator elim(generators.cols());
    for (size_t i = 0; i < generators.rows(); i++) {
        auto red = elim.reduce(generators.row(i), false);
        if (!red.row.is_zero()) {
            elim.add_pivot(i, std::move(red));
        }
    }
    return elim.reduce(v, false).row.is_zero();
}

}  // namespace dmbqc
