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


#include "report.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "contextuality.h"
#include "lulc.h"
#include "oracle.h"
#include "reed_muller.h"

namespace dmbqc {

namespace {

constexpr double kOracleTolerance = 1e-9;
constexpr size_t kOracleMaxInputBits = 16;
constexpr size_t kOracleSampleInputs = 8;

json histogram_json(const CyclotomicSum& s) {
    json counts = json::object();
    for (const auto& [e, c] : s.counts) {
        counts[std::to_string(e)] = c;
    }
    return {{"modulus", s.modulus}, {"norm", s.norm}, {"counts", counts}};
}

json extremal_json(const ExtremalBit& b, const CyclotomicSum& s) {
    json out = {{"kind", kind_name(b.kind)}, {"histogram", histogram_json(s)}};
    out["bit"] = b.is_extremal() ? json(b.bit) : json(nullptr);
    out["exponent"] = b.kind == ExtremalBit::Kind::kNonRealExtremal ? json(b.exponent) : json(nullptr);
    return out;
}

json violation_json(const DeterminismViolation& v) {
    return {{"input", v.input.str()}, {"row", v.row}, {"basis", v.basis.str()},
            {"histogram", histogram_json(v.sum)}, {"message", v.what()}};
}

json params_json(const FamilyParams& p) { return {{"r", p.r}, {"t", p.t}, {"m", p.m}, {"chi", p.chi}}; }

json linearity_json(const LinearityVerdict& v) {
    if (const auto* nl = std::get_if<Nonlinear>(&v)) {
        return {{"linear", false}, {"witness", {{"p", nl->p.str()}, {"q", nl->q.str()}}}};
    }
    return {{"linear", true}, {"witness", nullptr}};
}

json counterexample_json(const std::optional<CounterExample>& ce) {
    if (!ce) {
        return nullptr;
    }
    return {{"kind", ce->kind == CounterExample::Kind::kLinear ? "linear" : "bilinear"},
            {"c", ce->c.str()},
            {"q", ce->q.str()},
            {"z", ce->z.str()},
            {"weight", ce->weight},
            {"modulus_exponent", ce->modulus_exponent}};
}

json determinism_json(const DeterminismVerdict& v) {
    return {{"deterministic", v.deterministic}, {"checks", v.checks},
            {"counterexample", counterexample_json(v.counterexample)}};
}

json table_json(const TruthTable& tt) {
    json rows = json::array();
    for (uint64_t v = 0; v < tt.size(); v++) {
        rows.push_back({{"input", BitVec::from_uint(v, tt.n_in()).str()}, {"output", tt.at(v).str()}});
    }
    return {{"n_in", tt.n_in()}, {"n_out", tt.n_out()}, {"rows", rows}};
}

json verdict_json(const HVMSystem& sys, const ContextualityVerdict& v) {
    json out = {{"kind", v.contextual() ? "Contextual" : "HVMExists"}};
    if (!v.contextual()) {
        out["assignment"] = v.assignment.str();
        out["witness"] = nullptr;
        out["minimized"] = nullptr;
        return out;
    }
    json rows = json::array();
    for (size_t k : v.witness) {
        const HVMContext& c = sys.contexts[k];
        rows.push_back({{"row", k}, {"z", c.z.str()}, {"q", c.q.str()}, {"o", c.o ? 1 : 0},
                        {"label", context_label(c)}});
    }
    out["assignment"] = nullptr;
    out["witness"] = rows;
    out["minimized"] = v.minimized;
    return out;
}

BinMatrix matrix_from_json(const json& doc, const char* name, size_t cols) {
    if (!doc.is_array()) {
        throw ParseError(std::string(name) + " must be an array of rows");
    }
    BinMatrix m(cols, std::vector<BitVec>{});
    for (const auto& row : doc) {
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument(std::string(name) + " rows must have " + std::to_string(cols) + " entries");
        }
        BitVec v(cols);
        for (size_t j = 0; j < cols; j++) {
            if (!row[j].is_number_integer() || (row[j] != 0 && row[j] != 1)) {
                throw ParseError(std::string(name) + " entries must be 0 or 1");
            }
            v.set(j, row[j] == 1);
        }
        m.push_row(std::move(v));
    }
    return m;
}

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

size_t inferred_cols(const json& rows, size_t fallback) {
    if (rows.is_array() && !rows.empty() && rows[0].is_array()) {
        return rows[0].size();
    }
    return fallback;
}

Report make(const std::string& command, json params) {
    Report r;
    r.command = command;
    r.params = std::move(params);
    return r;
}

std::string phase_csv(const std::vector<PhaseCell>& cells) {
    std::ostringstream out;
    out << "r,m,class,chi_max,witness_t\n";
    for (const auto& c : cells) {
        out << c.r << ',' << c.m << ',' << regime_name(c.regime) << ',';
        if (c.chi_max) {
            out << *c.chi_max;
        }
        out << ',';
        if (c.witness_t) {
            out << *c.witness_t;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

json bits_json(const BitVec& v) {
    json out = json::array();
    for (size_t j = 0; j < v.size(); j++) {
        out.push_back(v.get(j) ? 1 : 0);
    }
    return out;
}

json matrix_json(const BinMatrix& m) {
    json out = json::array();
    for (const auto& row : m.row_list()) {
        out.push_back(bits_json(row));
    }
    return out;
}

json state_to_json(const PhaseCosetState& s) {
    json quad = json::array();
    for (auto [a, b] : s.quad_pairs()) {
        quad.push_back({a, b});
    }
    return {{"n", s.n()}, {"generators", matrix_json(s.generators())}, {"quad", quad}, {"lin", bits_json(s.lin())}};
}

json instance_to_json(const MBQCInstance& inst) {
    return {{"state", state_to_json(inst.state)},
            {"angles", {{"D", inst.angles.D}, {"numerators", inst.angles.numerators}}},
            {"Q", matrix_json(inst.basis_map)},
            {"Z", matrix_json(inst.output_map)},
            {"T", matrix_json(inst.order_map)}};
}

MBQCInstance instance_from_json(const json& doc) {
    try {
        const json& st = field(doc, "state");
        const json& nj = field(st, "n");
        if (!nj.is_number_unsigned()) {
            throw ParseError("state.n must be a nonnegative integer");
        }
        const size_t n = nj.get<size_t>();
        BinMatrix gens = matrix_from_json(field(st, "generators"), "state.generators", n);
        std::vector<std::pair<size_t, size_t>> quad;
        if (st.contains("quad")) {
            for (const auto& p : st.at("quad")) {
                if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
                    throw ParseError("state.quad entries must be [a, b] index pairs");
                }
                quad.emplace_back(p[0].get<size_t>(), p[1].get<size_t>());
            }
        }
        BitVec lin(n);
        if (st.contains("lin")) {
            BinMatrix l = matrix_from_json(json::array({st.at("lin")}), "state.lin", n);
            lin = l.row(0);
        }
        MBQCInstance inst;
        inst.state = PhaseCosetState(std::move(gens), quad, std::move(lin));

        const json& ang = field(doc, "angles");
        const json& dj = field(ang, "D");
        const json& nums = field(ang, "numerators");
        if (!dj.is_number_integer() || !nums.is_array()) {
            throw ParseError("angles must hold an integer D and a numerator list");
        }
        std::vector<int64_t> numerators;
        for (const auto& a : nums) {
            if (!a.is_number_integer()) {
                throw ParseError("angle numerators must be integers");
            }
            numerators.push_back(a.get<int64_t>());
        }
        inst.angles = AngleSpec(dj.get<int>(), std::move(numerators));

        const json& qj = field(doc, "Q");
        inst.basis_map = matrix_from_json(qj, "Q", inferred_cols(qj, 0));
        inst.output_map = matrix_from_json(field(doc, "Z"), "Z", n);
        inst.order_map = doc.contains("T") ? matrix_from_json(doc.at("T"), "T", n) : BinMatrix(n, n);
        inst.validate();
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed instance: ") + e.what());
    }
}

MBQCInstance instance_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance is not valid JSON: ") + e.what());
    }
    return instance_from_json(doc);
}

json Report::to_json() const {
    return {{"command", command}, {"params", params}, {"payload", payload}, {"version", version}};
}

Report Report::from_json(const json& doc) {
    Report r;
    r.command = doc.at("command").get<std::string>();
    r.params = doc.at("params");
    r.payload = doc.at("payload");
    r.version = doc.at("version").get<std::string>();
    return r;
}

std::string emit_report(const Report& r, Format format) {
    if (format == Format::kCsv) {
        if (!r.csv) {
            throw UnsupportedFormat("command '" + r.command + "' has no tabular output; use JSON");
        }
        return *r.csv;
    }
    return r.to_json().dump(2) + "\n";
}

std::string truth_table_csv(const TruthTable& tt) {
    std::ostringstream out;
    for (size_t k = 0; k < tt.n_in(); k++) {
        out << (k ? "," : "") << 'i' << (k + 1);
    }
    for (size_t k = 0; k < tt.n_out(); k++) {
        out << (k + tt.n_in() ? "," : "") << 'o' << (k + 1);
    }
    out << '\n';
    for (uint64_t v = 0; v < tt.size(); v++) {
        bool first = true;
        for (size_t k = 0; k < tt.n_in(); k++) {
            out << (first ? "" : ",") << ((v >> k) & 1);
            first = false;
        }
        for (size_t k = 0; k < tt.n_out(); k++) {
            out << (first ? "" : ",") << (tt.at(v).get(k) ? 1 : 0);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Report report_phase_diagram(int r_max, int m_max) {
    Report rep = make("phase-diagram", {{"r_max", r_max}, {"m_max", m_max}});
    auto cells = phase_diagram(r_max, m_max);
    json arr = json::array();
    for (const auto& c : cells) {
        arr.push_back({{"r", c.r},
                       {"m", c.m},
                       {"class", regime_name(c.regime)},
                       {"chi_max", c.chi_max ? json(*c.chi_max) : json(nullptr)},
                       {"witness_t", c.witness_t ? json(*c.witness_t) : json(nullptr)}});
    }
    rep.payload = {{"cells", arr}};
    rep.csv = phase_csv(cells);
    return rep;
}

Report report_family_eval(const FamilyParams& p, const std::string& input_bits) {
    json params = params_json(p);
    params["input"] = input_bits;
    Report rep = make("family eval", params);
    MBQCInstance inst = build(p);
    BitVec input = BitVec::from_string(input_bits);
    if (input.size() != inst.n_in()) {
        throw std::invalid_argument("input has " + std::to_string(input.size()) + " bits but " + p.str() +
                                    " takes " + std::to_string(inst.n_in()));
    }
    RunResult res = run(inst, input);
    RMCode out_code = rm_basis(p.r, p.m);
    json rows = json::array();
    for (size_t r = 0; r < res.bits.size(); r++) {
        json row = extremal_json(res.bits[r], res.sums[r]);
        row["row"] = r;
        row["monomial"] = out_code.monomials[r];
        rows.push_back(row);
    }
    rep.payload = {{"basis", res.basis.str()}, {"deterministic", res.deterministic}, {"rows", rows}};
    rep.payload["o"] = res.deterministic ? json(res.output().str()) : json(nullptr);
    try {
        rep.payload["closed_form"] = closed_form(p, input).str();
    } catch (const PromiseViolation& e) {
        rep.payload["closed_form"] = nullptr;
    }
    rep.analysis_ok = res.deterministic;
    return rep;
}

Report report_family_table(const FamilyParams& p) {
    Report rep = make("family table", params_json(p));
    MBQCInstance inst = build(p);
    try {
        TruthTable tt = truth_table(inst);
        rep.payload = {{"table", table_json(tt)}, {"violation", nullptr}};
        rep.csv = truth_table_csv(tt);
    } catch (const DeterminismViolation& v) {
        rep.payload = {{"table", nullptr}, {"violation", violation_json(v)}};
        rep.analysis_ok = false;
    }
    return rep;
}

Report report_family_check(const FamilyParams& p, const Budgets& budgets) {
    Report rep = make("family check", params_json(p));
    DeterminismOptions opts;
    opts.budget = budgets.congruences;
    DeterminismVerdict det = determinism_exact(p, opts);
    rep.payload = determinism_json(det);
    rep.payload["sufficient"] = sufficient_condition(p);
    rep.payload["linear"] = nullptr;
    rep.payload["nonlinearity_witness"] = nullptr;
    rep.payload["linearity_skipped"] = nullptr;
    if (!det.deterministic) {
        rep.payload["linearity_skipped"] = "not deterministic";
        return rep;
    }
    ClosedForm cf(p);
    if (cf.n_in() > kMaxTruthTableInputs) {
        rep.payload["linearity_skipped"] = "input space too large";
        return rep;
    }
    TruthTable tt = TruthTable::from_function(cf.n_in(), cf.n_out(), [&](const BitVec& x) { return cf(x); });
    json lin = linearity_json(is_linear(tt));
    rep.payload["linear"] = lin["linear"];
    rep.payload["nonlinearity_witness"] = lin["witness"];
    return rep;
}

Report report_example1() {
    Report rep = make("example1", json::object());
    MBQCInstance inst = example1_instance();
    InstanceAnalysis an = analyze_instance(inst);
    TruthTable toff = toffoli_table();
    MBQCInstance canon = build({0, 1, 2, 2});
    TruthTable canon_tt = truth_table(canon);
    // Recoding of canonical inputs onto the listed basis map.
    EquivalenceMaps recode{AffineMap::linear(BinMatrix::from_strings({"100", "110", "101"})),
                           AffineMap::linear(BinMatrix(0, 3)), AffineMap::identity(1)};
    bool canon_equiv = check_equiv_mod_linear(an.table, canon_tt, recode, recode);
    json lin = linearity_json(is_linear(an.table));
    rep.payload = {{"instance", instance_to_json(inst)},
                   {"table", table_json(an.table)},
                   {"linear", lin["linear"]},
                   {"nonlinearity_witness", lin["witness"]},
                   {"toffoli", {{"forward", check_equiv_direction(an.table, toff, toffoli_forward_maps())},
                                {"reverse", check_equiv_direction(toff, an.table, toffoli_reverse_maps())}}},
                   {"canonical", {{"params", params_json({0, 1, 2, 2})},
                                  {"table", table_json(canon_tt)},
                                  {"equivalent", canon_equiv}}},
                   {"contextuality", verdict_json(an.system, an.verdict)}};
    rep.csv = truth_table_csv(an.table);
    return rep;
}

Report report_example2() {
    Report rep = make("example2", json::object());
    Example2Report ex = example2_report();
    json rows = json::array();
    for (const auto& r : ex.rows) {
        rows.push_back({{"monomial", r.monomial},
                        {"support_weight", r.support_weight},
                        {"zeros", r.zeros},
                        {"ones", r.ones},
                        {"degree_one", r.degree_one}});
    }
    json lin = linearity_json(ex.linearity);
    json m4_rows = json::array();
    for (size_t k = 0; k < ex.m4.row_values.size(); k++) {
        m4_rows.push_back({{"values", ex.m4.row_values[k]}, {"degree_one", static_cast<bool>(ex.m4.degree_one[k])}});
    }
    rep.payload = {{"params", params_json(ex.params)},
                   {"determinism", determinism_json(ex.determinism)},
                   {"inputs", ex.inputs},
                   {"admissible", ex.admissible},
                   {"sampled", ex.sampled},
                   {"sample_mismatches", ex.sample_mismatches},
                   {"rows", rows},
                   {"linear", lin["linear"]},
                   {"nonlinearity_witness", lin["witness"]},
                   {"m4",
                    {{"params", params_json(ex.m4.params)},
                     {"determinism", determinism_json(ex.m4.determinism)},
                     {"candidates", ex.m4.candidates},
                     {"admissible", ex.m4.admissible},
                     {"vector_space", ex.m4.vector_space},
                     {"rows", m4_rows},
                     {"degree_one_constant_zero", ex.m4.degree_one_constant_zero},
                     {"correspondence_discrepancy", !ex.m4.degree_one_constant_zero}}}};
    rep.analysis_ok = ex.determinism.deterministic && ex.sample_mismatches == 0;
    return rep;
}

Report report_lulc_verify() {
    Report rep = make("lulc verify", json::object());
    json checks = json::array();
    bool all = true;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            LUCheck c = verify_lu_family(a, b);
            all = all && c.ok;
            checks.push_back({{"a", a}, {"b", b}, {"ok", c.ok},
                              {"violation", c.violation ? json(c.violation->str()) : json(nullptr)}});
        }
    }
    bool stab = plain_stabilizer_check();
    rep.payload = {{"checks", checks}, {"stabilizer", stab}, {"all_ok", all && stab}};
    rep.analysis_ok = all && stab;
    return rep;
}

Report report_lulc_and(int a, int b) {
    Report rep = make("lulc and", {{"a", a}, {"b", b}});
    AndProtocolResult res = and_protocol(a, b);
    std::vector<int> o;
    std::vector<int> eta;
    for (size_t l = 0; l < res.o.size(); l++) {
        o.push_back(res.o.get(l) ? 1 : 0);
        eta.push_back(res.eta.get(l) ? 1 : 0);
    }
    rep.payload = {{"basis", res.basis.str()}, {"o", o}, {"eta", eta}, {"consistent", res.consistent()}};
    rep.analysis_ok = res.consistent();
    return rep;
}

Report report_hvm(const MBQCInstance& inst) {
    Report rep = make("hvm", {{"n", inst.n()}, {"n_in", inst.n_in()}, {"n_out", inst.n_out()}});
    try {
        InstanceAnalysis an = analyze_instance(inst);
        json lin = linearity_json(is_linear(an.table));
        rep.payload = {{"deterministic", true},
                       {"violation", nullptr},
                       {"contexts", an.system.rows()},
                       {"linear", lin["linear"]},
                       {"nonlinearity_witness", lin["witness"]},
                       {"verdict", verdict_json(an.system, an.verdict)}};
    } catch (const DeterminismViolation& v) {
        rep.payload = {{"deterministic", false}, {"violation", violation_json(v)}, {"contexts", nullptr},
                       {"linear", nullptr}, {"nonlinearity_witness", nullptr}, {"verdict", nullptr}};
        rep.analysis_ok = false;
    }
    return rep;
}

Report report_oracle_compare(const MBQCInstance& inst, uint64_t seed, size_t trials) {
    Report rep = make("oracle-compare", {{"n", inst.n()}, {"seed", seed}, {"trials", trials}});
    inst.validate();
    if (!inst.is_flat()) {
        throw UnsupportedError("oracle comparison requires a zero order map");
    }
    if (inst.n_in() > kOracleMaxInputBits) {
        throw std::invalid_argument("oracle comparison enumerates at most 2^" + std::to_string(kOracleMaxInputBits) +
                                    " inputs");
    }
    DenseState dense = dense_state(inst.state);
    double max_dev = 0;
    uint64_t contexts = 0;
    std::vector<std::pair<BitVec, BitVec>> deterministic_inputs;
    const uint64_t n_inputs = uint64_t{1} << inst.n_in();
    for (uint64_t v = 0; v < n_inputs; v++) {
        BitVec input = BitVec::from_uint(v, inst.n_in());
        RunResult res = run(inst, input);
        for (size_t r = 0; r < inst.n_out(); r++) {
            auto exact = res.sums[r].value();
            auto brute = dense_expectation(dense, inst.angles, {inst.output_map.row(r), res.basis});
            max_dev = std::max(max_dev, std::abs(exact - brute));
            contexts++;
        }
        if (res.deterministic) {
            deterministic_inputs.emplace_back(input, res.output());
        }
    }
    // Spread the sampled inputs over the deterministic ones.
    size_t picks = std::min(kOracleSampleInputs, deterministic_inputs.size());
    bool constant = true;
    json sampled = json::array();
    for (size_t k = 0; k < picks; k++) {
        const auto& [input, expected] = deterministic_inputs[k * deterministic_inputs.size() / picks];
        bool ok = true;
        for (uint64_t s : {seed, seed + 1}) {
            for (const auto& smp : sample_run(inst, input, s, trials)) {
                ok = ok && smp.o == expected;
            }
        }
        constant = constant && ok;
        sampled.push_back({{"input", input.str()}, {"o", expected.str()}, {"constant", ok}});
    }
    bool within = max_dev < kOracleTolerance;
    rep.payload = {{"contexts", contexts},
                   {"max_deviation", max_dev},
                   {"tolerance", kOracleTolerance},
                   {"within_tolerance", within},
                   {"deterministic_inputs", deterministic_inputs.size()},
                   {"sampled", sampled},
                   {"sampling_constant", constant}};
    rep.analysis_ok = within && constant;
    return rep;
}

Report report_ax(int r, int m, const Budgets& budgets) {
    Report rep = make("ax", {{"r", r}, {"m", m}});
    size_t max_dim = 0;
    while (max_dim < 62 && (uint64_t{1} << (max_dim + 1)) <= budgets.congruences) {
        max_dim++;
    }
    AxResult ax = ax_check(r, m, max_dim);
    json weights = json::object();
    for (const auto& [w, c] : ax.weights) {
        weights[std::to_string(w)] = c;
    }
    rep.payload = {{"r", r}, {"m", m}, {"dim", rm_dimension(r, m)}, {"weights", weights},
                   {"divisor_exponent", ax.divisor_exponent}, {"expected_exponent", ax.expected_exponent},
                   {"sharp", ax.sharp}};
    rep.analysis_ok = ax.sharp;
    return rep;
}

}  // namespace dmbqc
