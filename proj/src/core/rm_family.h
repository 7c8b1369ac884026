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


#ifndef DMBQC_CORE_RM_FAMILY_H
#define DMBQC_CORE_RM_FAMILY_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolfn.h"
#include "gf2.h"
#include "mbqc.h"
#include "reed_muller.h"

namespace dmbqc {

/// Computation on |R(r, m)> with bases q = [B(t, m)]^T i, outputs read off
/// [B(r, m)], and angles pi / 2^chi at every site.
struct FamilyParams {
    int r = 0;
    int t = 0;
    int m = 0;
    int chi = 1;

    void validate() const;
    std::string str() const;
};

/// Largest m accepted by build(); the order map alone is 4^m bits.
inline constexpr int kMaxBuildM = 12;

MBQCInstance build(const FamilyParams& p);

struct CounterExample {
    enum class Kind { kLinear, kBilinear };
    Kind kind = Kind::kLinear;
    BitVec c;
    /// Zero for linear failures.
    BitVec q;
    BitVec z;
    /// weight(c z) or weight(c q z), whichever failed.
    uint64_t weight = 0;
    /// The failed congruence is weight == 0 mod 2^modulus_exponent.
    int modulus_exponent = 0;
};

struct DeterminismVerdict {
    bool deterministic = false;
    std::optional<CounterExample> counterexample;
    /// Weight congruences evaluated.
    uint64_t checks = 0;
};

struct DeterminismOptions {
    enum class Method {
        /// Decides the congruences from products of basis vectors; exact and
        /// polynomial in the code dimensions for fixed chi.
        kExpansion,
        /// Enumerates every (c, q, z) triple.
        kEnumeration,
    };
    Method method = Method::kExpansion;
    /// Check every codeword z of R(r, m) instead of the basis rows only.
    bool all_z = false;
    /// Upper bound on weight congruences evaluated.
    uint64_t budget = uint64_t{1} << 32;
};

/// For all c in R(r, m), q in R(t, m) and z in B(r, m):
/// weight(c z) == 0 mod 2^chi and weight(c q z) == 0 mod 2^(chi - 1).
/// Throws BudgetExceeded when the work estimate exceeds options.budget.
DeterminismVerdict determinism_exact(const FamilyParams& p, const DeterminismOptions& options = {});

bool sufficient_condition(const FamilyParams& p);

class PromiseViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Output bits predicted from weights alone, without the expectation engine.
class ClosedForm {
   public:
    explicit ClosedForm(const FamilyParams& p);
    size_t n_in() const { return input_code_.dim(); }
    size_t n_out() const { return output_code_.dim(); }
    /// Throws PromiseViolation when a division in the formula is not exact.
    BitVec operator()(const BitVec& input) const;

   private:
    FamilyParams p_;
    RMCode input_code_;
    RMCode output_code_;
};

BitVec closed_form(const FamilyParams& p, const BitVec& input);

enum class Regime { kProbabilistic, kDeterministicLinear, kUnknown, kNonlinearDeterministic };
const char* regime_name(Regime regime);

struct PhaseCell {
    int r = 0;
    int m = 0;
    Regime regime = Regime::kProbabilistic;
    std::optional<int> chi_max;
    std::optional<int> witness_t;
};

Regime classify(int r, int m);

/// Smallest t in [0, m] with (r, t, m, chi) passing sufficient_condition.
std::optional<int> sufficiency_witness(int r, int m, int chi);

/// Cells for 1 <= m <= m_max and 0 <= r <= min(r_max, m), ordered by m then r.
std::vector<PhaseCell> phase_diagram(int r_max, int m_max);

struct Example2Row {
    std::vector<int> monomial;
    uint64_t support_weight = 0;
    uint64_t zeros = 0;
    uint64_t ones = 0;
    bool degree_one = false;
};

struct CorrespondenceCheck {
    FamilyParams params;
    DeterminismVerdict determinism;
    uint64_t candidates = 0;
    uint64_t admissible = 0;
    bool vector_space = false;
    /// Per output row: distinct output values seen on admissible inputs.
    std::vector<std::vector<int>> row_values;
    std::vector<bool> degree_one;
    /// Every degree-1 row reads 0 on every admissible input.
    bool degree_one_constant_zero = false;
};

struct Example2Report {
    FamilyParams params;
    DeterminismVerdict determinism;
    uint64_t inputs = 0;
    uint64_t admissible = 0;
    uint64_t sampled = 0;
    uint64_t sample_mismatches = 0;
    std::vector<Example2Row> rows;
    LinearityVerdict linearity;
    CorrespondenceCheck m4;
};

CorrespondenceCheck correspondence_check(const FamilyParams& p);

/// Evaluates (1, 2, 5, 2) on every input through ClosedForm, cross-checks
/// `samples` random inputs against run(), and runs the m = 4 correspondence.
Example2Report example2_report(uint64_t seed = 1, size_t samples = 256);

}  // namespace dmbqc

#endif  // DMBQC_CORE_RM_FAMILY_H
