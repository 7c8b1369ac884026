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


#ifndef DMBQC_CORE_CONTEXTUALITY_H
#define DMBQC_CORE_CONTEXTUALITY_H

#include <string>
#include <vector>

#include "boolfn.h"
#include "gf2.h"
#include "mbqc.h"

namespace dmbqc {

/// A measured correlation: sites z, basis bits q, deterministic parity o.
struct HVMContext {
    BitVec z;
    BitVec q;
    bool o = false;
};

/// Parity constraints on pre-assigned outcomes s_j = c_j + d_j q_j. Unknown
/// j is c_j and unknown n + j is d_j.
struct HVMSystem {
    size_t n = 0;
    std::vector<HVMContext> contexts;
    BinMatrix coefficients;
    BitVec parities;

    size_t rows() const { return contexts.size(); }
};

HVMSystem build_system(size_t n, std::vector<HVMContext> contexts);

struct ContextualityVerdict {
    enum class Kind { kHVMExists, kContextual };
    Kind kind = Kind::kHVMExists;
    /// (c, d) of length 2n when an assignment exists.
    BitVec assignment;
    /// Row indices, ascending, whose constraints sum to 0 = 1.
    std::vector<size_t> witness;
    /// Whether the witness is a minimum-weight certificate.
    bool minimized = false;

    bool contextual() const { return kind == Kind::kContextual; }
};

/// Witness minimization runs when the left null space has at most this
/// dimension.
inline constexpr size_t kMaxMinimizeDim = 20;

ContextualityVerdict decide(const HVMSystem& system);

bool assignment_satisfies(const HVMSystem& system, const BitVec& assignment);
bool witness_is_contradiction(const HVMSystem& system, const std::vector<size_t>& witness);

struct InstanceAnalysis {
    TruthTable table;
    HVMSystem system;
    ContextualityVerdict verdict;
};

/// Contexts from every (output row, input) pair, with duplicates removed.
/// Throws DeterminismViolation for non-deterministic instances.
InstanceAnalysis analyze_instance(const MBQCInstance& inst);

/// The contexts named by a Contextual verdict's witness.
std::vector<HVMContext> mermin_witness(const HVMSystem& system, const ContextualityVerdict& verdict);

/// Per site: 'L' for q = 1, 'R' for q = 0, 'I' off the support.
std::string context_label(const HVMContext& ctx);

}  // namespace dmbqc

#endif  // DMBQC_CORE_CONTEXTUALITY_H
