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


#ifndef DMBQC_CORE_ORACLE_H
#define DMBQC_CORE_ORACLE_H

#include <complex>
#include <cstdint>
#include <vector>

#include "gf2.h"
#include "mbqc.h"
#include "phase_state.h"

namespace dmbqc {

inline constexpr size_t kMaxDenseQubits = 20;

/// Amplitude at index x = sum_j x_j 2^j.
struct DenseState {
    size_t n = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
};

DenseState dense_state(const PhaseCosetState& s);

/// <psi| prod_{j in z} (cos phi_j X_j + (-1)^{q_j} sin phi_j Y_j) |psi>.
std::complex<double> dense_expectation(const DenseState& st, const AngleSpec& angles, const CorrelationContext& ctx);

enum class SiteOrder { kAscending, kDescending };

struct Sample {
    /// Outcome bits, s_j = 1 for eigenvalue -1.
    BitVec s;
    BitVec o;
};

/// Measures every site in turn with Born-rule sampling and collapse. Trial k
/// draws from its own generator seeded by (seed, k).
std::vector<Sample> sample_run(
    const MBQCInstance& inst, const BitVec& input, uint64_t seed, size_t trials,
    SiteOrder order = SiteOrder::kAscending);

}  // namespace dmbqc

#endif  // DMBQC_CORE_ORACLE_H
