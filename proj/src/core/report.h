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


#ifndef DMBQC_CORE_REPORT_H
#define DMBQC_CORE_REPORT_H

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "boolfn.h"
#include "mbqc.h"
#include "rm_family.h"

namespace dmbqc {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

json bits_json(const BitVec& v);
json matrix_json(const BinMatrix& m);
json state_to_json(const PhaseCosetState& s);
json instance_to_json(const MBQCInstance& inst);
/// Throws ParseError on malformed documents and std::invalid_argument on
/// inconsistent dimensions.
MBQCInstance instance_from_json(const json& doc);
MBQCInstance instance_from_json_text(const std::string& text);

struct Report {
    std::string command;
    json params = json::object();
    json payload = json::object();
    std::string version = kVersion;
    /// Tabular rendering, when the payload has one.
    std::optional<std::string> csv;
    /// False when the analysis itself failed (the payload says why).
    bool analysis_ok = true;

    json to_json() const;
    static Report from_json(const json& doc);
};

enum class Format { kJson, kCsv };

class UnsupportedFormat : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Stable key order, two-space indent, trailing newline.
std::string emit_report(const Report& r, Format format);

std::string truth_table_csv(const TruthTable& tt);

/// Limits shared by the report builders.
struct Budgets {
    uint64_t congruences = uint64_t{1} << 32;
};

Report report_phase_diagram(int r_max, int m_max);
Report report_family_eval(const FamilyParams& p, const std::string& input_bits);
Report report_family_table(const FamilyParams& p);
Report report_family_check(const FamilyParams& p, const Budgets& budgets = {});
Report report_example1();
Report report_example2();
Report report_lulc_verify();
Report report_lulc_and(int a, int b);
Report report_hvm(const MBQCInstance& inst);
Report report_oracle_compare(const MBQCInstance& inst, uint64_t seed = 1, size_t trials = 100);
Report report_ax(int r, int m, const Budgets& budgets = {});

}  // namespace dmbqc

#endif  // DMBQC_CORE_REPORT_H
