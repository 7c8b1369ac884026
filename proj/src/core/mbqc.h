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


#ifndef DMBQC_CORE_MBQC_H
#define DMBQC_CORE_MBQC_H

#include <stdexcept>
#include <vector>

#include "boolfn.h"
#include "gf2.h"
#include "phase_state.h"

namespace dmbqc {

/// A measurement-based computation with mod-2 pre- and post-processing:
/// basis choices q = basis_map * i, outputs o = output_map * s, and
/// feed-forward q += order_map * s (which must be zero to be evaluated).
struct MBQCInstance {
    PhaseCosetState state;
    AngleSpec angles;
    /// n x n_in.
    BinMatrix basis_map;
    /// n_out x n.
    BinMatrix output_map;
    /// n x n.
    BinMatrix order_map;

    size_t n() const { return state.n(); }
    size_t n_in() const { return basis_map.cols(); }
    size_t n_out() const { return output_map.rows(); }

    /// Throws std::invalid_argument on inconsistent dimensions or an order
    /// relation with both k->l and l->k.
    void validate() const;
    bool is_flat() const { return order_map.is_zero(); }
};

class UnsupportedError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DeterminismViolation : public std::runtime_error {
   public:
    DeterminismViolation(const std::string& what, BitVec input, size_t row, BitVec basis, CyclotomicSum sum)
        : std::runtime_error(what), input(std::move(input)), row(row), basis(std::move(basis)), sum(std::move(sum)) {}
    BitVec input;
    size_t row;
    BitVec basis;
    CyclotomicSum sum;
};

struct RunResult {
    BitVec basis;
    std::vector<ExtremalBit> bits;
    std::vector<CyclotomicSum> sums;
    bool deterministic = false;

    /// Output bits; requires deterministic.
    BitVec output() const;
};

RunResult run(const MBQCInstance& inst, const BitVec& input);

inline constexpr size_t kMaxTruthTableInputs = 22;

/// Throws DeterminismViolation at the first non-extremal (input, row).
TruthTable truth_table(const MBQCInstance& inst);

struct AdmissibleSet {
    std::vector<BitVec> bases;
    /// Output bits for each admissible basis choice, aligned with `bases`.
    std::vector<BitVec> outputs;
    /// Size of the candidate span.
    uint64_t candidates = 0;
    bool vector_space = false;
};

inline constexpr size_t kMaxAdmissibleDim = 24;

/// Basis choices q in the row span of `q_space` for which every output row
/// is extremal.
AdmissibleSet admissible_inputs(
    const PhaseCosetState& state, const AngleSpec& angles, const BinMatrix& output_map, const BinMatrix& q_space);

/// Four-qubit GHZ resource with bases q = (i1, i2, i3, i1 + i2 + i3) and the
/// single output o = s1 + s2 + s3 + s4.
MBQCInstance example1_instance();

/// Toffoli section (t, c1, c2) -> (t + c1 c2, c1, c2).
TruthTable toffoli_table();

/// Maps taking the example-1 function to the Toffoli section.
EquivalenceMaps toffoli_forward_maps();
/// Maps taking the Toffoli section back to the example-1 function.
EquivalenceMaps toffoli_reverse_maps();

}  // namespace dmbqc

#endif  // DMBQC_CORE_MBQC_H
