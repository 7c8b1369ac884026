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

#ifndef DMBQC_CORE_PHASE_STATE_H
#define DMBQC_CORE_PHASE_STATE_H

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gf2.h"

namespace dmbqc {

/// The state |S|^{-1/2} sum_{x in S} (-1)^{Q(x) + lin.x} |x>, where S is the
/// row span of `generators` and Q(x) = sum_{a<b} quad[a][b] x_a x_b.
class PhaseCosetState {
   public:
    PhaseCosetState() = default;
    /// Pairs (a, b) are 0-based qubit indices. Pairs with a > b are swapped,
    /// repeated pairs cancel, and a == b folds into the linear part.
    PhaseCosetState(BinMatrix generators, const std::vector<std::pair<size_t, size_t>>& quad_pairs, BitVec lin);
    explicit PhaseCosetState(BinMatrix generators);

    size_t n() const { return generators_.cols(); }
    /// log2 |S|.
    size_t k() const { return generators_.rows(); }
    const BinMatrix& generators() const { return generators_; }
    const BitVec& lin() const { return lin_; }
    /// Sorted (a, b) pairs with a < b.
    std::vector<std::pair<size_t, size_t>> quad_pairs() const;
    bool has_quadratic_phase() const;

    /// Q(x) mod 2.
    bool quad_form(const BitVec& x) const;
    /// (U + U^T) z, where U is the strictly upper triangular form matrix.
    BitVec polar(const BitVec& z) const;
    bool contains(const BitVec& x) const;

    /// Calls fn(x) for every x in S, in Gray-code order from 0.
    template <typename Fn>
    void for_each_support(Fn&& fn) const {
        BitVec cur(n());
        fn(cur);
        uint64_t total = uint64_t{1} << k();
        for (uint64_t step = 1; step < total; step++) {
            cur ^= generators_.row(static_cast<size_t>(std::countr_zero(step)));
            fn(cur);
        }
    }

   private:
    BinMatrix generators_;
    std::vector<BitVec> upper_;  // upper_[a] has bit b set iff quad[a][b] = 1, b > a
    BitVec lin_;
    // Echelon form of the generators for membership tests.
    std::vector<BitVec> echelon_;
    std::vector<size_t> echelon_cols_;
};

/// Measurement angles phi_j = pi * a_j / 2^D for odd numerators a_j.
struct AngleSpec {
    int D = 1;
    std::vector<int64_t> numerators;

    AngleSpec() = default;
    AngleSpec(int denominator_exponent, std::vector<int64_t> nums);
    static AngleSpec uniform(size_t n, int denominator_exponent);

    void validate() const;
    double angle(size_t j) const;
};

struct CorrelationContext {
    BitVec z;
    BitVec q;
};

/// (1 / norm) sum_e counts[e] * omega^e with omega = exp(2 pi i / modulus).
struct CyclotomicSum {
    uint64_t modulus = 2;
    std::map<uint64_t, uint64_t> counts;
    uint64_t norm = 1;

    uint64_t total() const;
    std::complex<double> value() const;
    bool operator==(const CyclotomicSum& other) const = default;
};

/// Exact <psi| prod_{j: z_j = 1} O_j[q_j] |psi> with
/// O_j[q] = cos(phi_j) X + (-1)^q sin(phi_j) Y.
CyclotomicSum expectation(const PhaseCosetState& state, const AngleSpec& angles, const CorrelationContext& ctx);

/// Exact <psi| X[z] |psi> as a histogram over {+1, -1} (modulus 2).
CyclotomicSum pauli_x_expectation(const PhaseCosetState& state, const BitVec& z);

struct ExtremalBit {
    enum class Kind { kExtremal, kNonExtremal, kNonRealExtremal };
    Kind kind = Kind::kNonExtremal;
    /// Output bit when kind == kExtremal.
    int bit = 0;
    /// The single exponent carrying all mass when kind == kNonRealExtremal.
    uint64_t exponent = 0;

    bool is_extremal() const { return kind == Kind::kExtremal; }
    bool operator==(const ExtremalBit& other) const = default;
};

ExtremalBit extremal_bit(const CyclotomicSum& s);

const char* kind_name(ExtremalBit::Kind kind);

/// Resource state spanned by the Reed-Muller code R(r, m), on 2^m qubits.
PhaseCosetState make_rm_state(int r, int m);

}  // namespace dmbqc

#endif  // DMBQC_CORE_PHASE_STATE_H
