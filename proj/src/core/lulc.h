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


#ifndef DMBQC_CORE_LULC_H
#define DMBQC_CORE_LULC_H

#include <optional>
#include <utility>
#include <vector>

#include "gf2.h"
#include "mbqc.h"
#include "phase_state.h"

namespace dmbqc {

inline constexpr size_t kLulcQubits = 35;

/// Two 35-qubit stabilizer states over the same 64-element support, one with
/// a quadratic phase, related by a non-Clifford product of Z rotations.
struct LULCData {
    /// Six generators of the support.
    std::vector<BitVec> support;
    /// 0-based (a, b) pairs of the quadratic form.
    std::vector<std::pair<size_t, size_t>> quad;
    /// Odd rotation numerators in units of pi/8.
    std::vector<int> angles;
    /// Even shifts that keep the rotation valid.
    std::vector<int> shift1;
    std::vector<int> shift2;
    PhaseCosetState plain;
    PhaseCosetState twisted;
};

/// Embedded constants, validated against the recorded checksum and structural
/// invariants. Throws std::runtime_error on corruption.
const LULCData& load_data();

struct LUCheck {
    bool ok = false;
    /// Support element whose phase differs from the reference at x = 0.
    std::optional<BitVec> violation;
};

/// Whether prod_j exp(i pi/8 eps_j Z_j) maps the plain state to the twisted
/// one up to global phase, for eps = angles + a shift1 + b shift2 mod 8.
LUCheck verify_lu_family(int a, int b);
/// Same test for an arbitrary rotation vector eps (entries mod 8).
LUCheck verify_lu_rotation(const std::vector<int>& eps);

struct VSplit {
    int q = 0;
    int v = 0;
};

/// Rewrites e + k = (-1)^q e + 4 v mod 8 for odd e and even k in [0, 8).
VSplit v_split(int e, int k);

/// Bases q = a shift1/2 + b shift2/2, outputs read off the support generators.
MBQCInstance lulc_and_instance();

struct AndProtocolResult {
    BitVec basis;
    /// Engine outputs.
    BitVec o;
    /// Outputs predicted from v_split alone.
    BitVec eta;
    std::vector<CyclotomicSum> sums;
    bool consistent() const { return o == eta; }
};

/// Throws DeterminismViolation if a context is not extremal.
AndProtocolResult and_protocol(int a, int b);

/// <plain| X(xi^l) |plain> == +1 for every generator.
bool plain_stabilizer_check();

}  // namespace dmbqc

#endif  // DMBQC_CORE_LULC_H
