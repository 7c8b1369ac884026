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


#include "mbqc.h"

#include <string>

namespace dmbqc {

void MBQCInstance::validate() const {
    size_t n = state.n();
    angles.validate();
    if (angles.numerators.size() != n) {
        throw std::invalid_argument("angle specification covers " + std::to_string(angles.numerators.size()) +
                                    " sites, expected " + std::to_string(n));
    }
    if (basis_map.rows() != n) {
        throw std::invalid_argument("basis map has " + std::to_string(basis_map.rows()) + " rows, expected " +
                                    std::to_string(n));
    }
    if (output_map.cols() != n) {
        throw std::invalid_argument("output map has " + std::to_string(output_map.cols()) + " columns, expected " +
                                    std::to_string(n));
    }
    if (order_map.rows() != n || order_map.cols() != n) {
        throw std::invalid_argument("order map must be " + std::to_string(n) + " x " + std::to_string(n));
    }
    for (size_t k = 0; k < n; k++) {
        for (size_t l = k; l < n; l++) {
            if (order_map.get(k, l) && order_map.get(l, k)) {
                throw std::invalid_argument(
                    "order map relates sites " + std::to_string(k) + " and " + std::to_string(l) + " both ways");
            }
        }
    }
}

BitVec RunResult::output() const {
    if (!deterministic) {
        throw std::logic_error("output requested from a non-deterministic run");
    }
    BitVec o(bits.size());
    for (size_t r = 0; r < bits.size(); r++) {
        o.set(r, bits[r].bit != 0);
    }
    return o;
}

RunResult run(const MBQCInstance& inst, const BitVec& input) {
    if (!inst.is_flat()) {
        throw UnsupportedError("evaluation requires a zero order map (no feed-forward)");
    }
    if (input.size() != inst.n_in()) {
        throw std::invalid_argument("input has length " + std::to_string(input.size()) + ", expected " +
                                    std::to_string(inst.n_in()));
    }
    RunResult res;
    res.basis = inst.basis_map.multiply(input);
    res.deterministic = true;
    for (size_t r = 0; r < inst.n_out(); r++) {
        CyclotomicSum s = expectation(inst.state, inst.angles, {inst.output_map.row(r), res.basis});
        ExtremalBit b = extremal_bit(s);
        res.deterministic = res.deterministic && b.is_extremal();
        res.bits.push_back(b);
        res.sums.push_back(std::move(s));
    }
    return res;
}

TruthTable truth_table(const MBQCInstance& inst) {
    if (inst.n_in() > kMaxTruthTableInputs) {
        throw std::invalid_argument("truth table over " + std::to_string(inst.n_in()) +
                                    " inputs exceeds the limit of " + std::to_string(kMaxTruthTableInputs));
    }
    inst.validate();
    TruthTable tt(inst.n_in(), inst.n_out());
    for (uint64_t v = 0; v < tt.size(); v++) {
        BitVec input = BitVec::from_uint(v, inst.n_in());
        RunResult res = run(inst, input);
        for (size_t r = 0; r < res.bits.size(); r++) {
            if (!res.bits[r].is_extremal()) {
                throw DeterminismViolation(
                    "output row " + std::to_string(r) + " is " + kind_name(res.bits[r].kind) + " at input " +
                        input.str(),
                    input, r, res.basis, res.sums[r]);
            }
        }
        tt.set(v, res.output());
    }
    return tt;
}

AdmissibleSet admissible_inputs(
    const PhaseCosetState& state, const AngleSpec& angles, const BinMatrix& output_map, const BinMatrix& q_space) {
    if (q_space.cols() != state.n() || output_map.cols() != state.n()) {
        throw std::invalid_argument("basis space and output map must have one column per qubit");
    }
    BinMatrix basis = independent_rows(q_space);
    if (basis.rows() > kMaxAdmissibleDim) {
        throw std::invalid_argument("basis space of dimension " + std::to_string(basis.rows()) +
                                    " exceeds the enumeration limit " + std::to_string(kMaxAdmissibleDim));
    }
    AdmissibleSet out;
    out.candidates = uint64_t{1} << basis.rows();
    for_each_in_span(basis, [&](const BitVec& q) {
        BitVec o(output_map.rows());
        for (size_t r = 0; r < output_map.rows(); r++) {
            ExtremalBit b = extremal_bit(expectation(state, angles, {output_map.row(r), q}));
            if (!b.is_extremal()) {
                return;
            }
            o.set(r, b.bit != 0);
        }
        out.bases.push_back(q);
        out.outputs.push_back(std::move(o));
    });
    // A subset of a span is itself a space iff its size is 2^rank.
    if (!out.bases.empty()) {
        size_t rank = BinMatrix(state.n(), out.bases).rank();
        out.vector_space = rank < 63 && out.bases.size() == (size_t{1} << rank);
    }
    return out;
}

MBQCInstance example1_instance() {
    MBQCInstance inst;
    inst.state = PhaseCosetState(BinMatrix::from_strings({"1111"}));
    inst.angles = AngleSpec::uniform(4, 2);
    inst.basis_map = BinMatrix::from_strings({"100", "010", "001", "111"});
    inst.output_map = BinMatrix::from_strings({"1111"});
    inst.order_map = BinMatrix(4, 4);
    return inst;
}

TruthTable toffoli_table() {
    return TruthTable::from_function(3, 3, [](const BitVec& x) {
        BitVec y = x;
        if (x.get(1) && x.get(2)) {
            y.flip(0);
        }
        return y;
    });
}

EquivalenceMaps toffoli_forward_maps() {
    return {
        AffineMap(BinMatrix::from_strings({"100", "110", "101"}), BitVec::from_string("011")),
        AffineMap(BinMatrix::from_strings({"110", "101", "100"}), BitVec::from_string("110")),
        AffineMap::linear(BinMatrix::from_strings({"1001", "0100", "0010"})),
    };
}

EquivalenceMaps toffoli_reverse_maps() {
    return {
        AffineMap(BinMatrix::from_strings({"100", "110", "101"}), BitVec::from_string("011")),
        AffineMap::linear(BinMatrix::from_strings({"100"})),
        AffineMap::linear(BinMatrix::from_strings({"1001"})),
    };
}

}  // namespace dmbqc
