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


// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dmbqc/dmbqc.h"

namespace {

constexpr const char* kBudgetEnv = "DMBQC_ENUM_BUDGET";

int exit_code(dmbqc_status s) {
    switch (s) {
        case DMBQC_OK:
            return 0;
        case DMBQC_INVALID_ARGUMENT:
        case DMBQC_PARSE_ERROR:
        case DMBQC_UNSUPPORTED:
            return 2;
        default:
            return 1;
    }
}

int report_error(dmbqc_status s) {
    std::cerr << "error (" << dmbqc_status_name(s) << "): " << dmbqc_last_error() << "\n";
    return exit_code(s);
}

// Prints the report (when there is one) and maps the status to an exit code.
int emit(dmbqc_status s, dmbqc_report* rep, bool csv) {
    if (rep == nullptr) {
        return report_error(s);
    }
    std::string analysis_message = s == DMBQC_OK ? "" : dmbqc_last_error();
    char* text = nullptr;
    dmbqc_status rs = dmbqc_report_render(rep, csv ? DMBQC_FORMAT_CSV : DMBQC_FORMAT_JSON, &text);
    dmbqc_report_free(rep);
    if (rs != DMBQC_OK) {
        return report_error(rs);
    }
    std::fputs(text, stdout);
    dmbqc_string_free(text);
    if (s != DMBQC_OK) {
        std::cerr << "analysis failure: " << analysis_message << "\n";
    }
    return exit_code(s);
}

bool load_instance(const std::string& path, dmbqc_instance** out, int& code) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read instance file '" << path << "'\n";
        code = 2;
        return false;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    dmbqc_status s = dmbqc_instance_from_json(buf.str().c_str(), out);
    if (s != DMBQC_OK) {
        code = report_error(s);
        return false;
    }
    return true;
}

bool apply_budget_env() {
    const char* env = std::getenv(kBudgetEnv);
    if (env == nullptr || *env == '\0') {
        return true;
    }
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
        std::cerr << "error: " << kBudgetEnv << " must be a positive integer\n";
        return false;
    }
    dmbqc_set_enumeration_budget(v);
    return true;
}

struct FamilyArgs {
    int r = 0;
    int t = 0;
    int m = 0;
    int chi = 1;
};

void add_family_options(CLI::App* cmd, FamilyArgs& f) {
    cmd->add_option("--r", f.r, "order of the resource code")->required();
    cmd->add_option("--t", f.t, "order of the input code")->required();
    cmd->add_option("--m", f.m, "number of variables")->required();
    cmd->add_option("--chi", f.chi, "angle exponent; angles are pi / 2^chi")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of deterministic measurement-based computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dmbqc_version()));
    app.footer(std::string("Environment: ") + kBudgetEnv + " overrides the enumeration budget.");

    bool csv = false;
    bool json_flag = false;
    auto add_format = [&](CLI::App* cmd, bool with_csv) {
        auto* j = cmd->add_flag("--json", json_flag, "JSON output (default)");
        if (with_csv) {
            cmd->add_flag("--csv", csv, "CSV output")->excludes(j);
        }
    };

    int r_max = 0;
    int m_max = 0;
    auto* phase = app.add_subcommand("phase-diagram", "classify (r, m) cells of the deterministic regimes");
    phase->add_option("--rmax", r_max, "largest r")->required()->check(CLI::NonNegativeNumber);
    phase->add_option("--mmax", m_max, "largest m")->required()->check(CLI::NonNegativeNumber);
    add_format(phase, true);

    FamilyArgs fam;
    std::string input_bits;
    auto* family = app.add_subcommand("family", "Reed-Muller family computations");
    family->require_subcommand(1);
    auto* f_eval = family->add_subcommand("eval", "evaluate one input");
    add_family_options(f_eval, fam);
    f_eval->add_option("--input", input_bits, "input bits, first coordinate first")->required();
    add_format(f_eval, false);
    auto* f_table = family->add_subcommand("table", "full truth table");
    add_family_options(f_table, fam);
    add_format(f_table, true);
    auto* f_check = family->add_subcommand("check", "determinism, sufficiency and linearity verdicts");
    add_family_options(f_check, fam);
    add_format(f_check, false);

    auto* ex1 = app.add_subcommand("example1", "four-qubit GHZ computation and its analysis");
    add_format(ex1, true);
    auto* ex2 = app.add_subcommand("example2", "(1, 2, 5, 2) output statistics and the m = 4 comparison");
    add_format(ex2, false);

    int bit_a = 0;
    int bit_b = 0;
    auto* lulc = app.add_subcommand("lulc", "35-qubit LU-LC pair");
    lulc->require_subcommand(1);
    auto* l_verify = lulc->add_subcommand("verify", "check the local-unitary family for all (a, b)");
    add_format(l_verify, false);
    auto* l_and = lulc->add_subcommand("and", "run the AND protocol");
    l_and->add_option("--a", bit_a, "first input bit")->required()->check(CLI::Range(0, 1));
    l_and->add_option("--b", bit_b, "second input bit")->required()->check(CLI::Range(0, 1));
    add_format(l_and, false);

    std::string instance_path;
    auto* hvm = app.add_subcommand("hvm", "decide whether a hidden-variable model exists");
    hvm->add_option("--instance", instance_path, "instance JSON file")->required();
    add_format(hvm, false);

    uint64_t seed = 1;
    size_t trials = 100;
    auto* oracle = app.add_subcommand("oracle-compare", "compare the exact engine with dense simulation");
    oracle->add_option("--instance", instance_path, "instance JSON file")->required();
    oracle->add_option("--seed", seed, "sampling seed");
    oracle->add_option("--trials", trials, "trials per seed and input")->check(CLI::PositiveNumber);
    add_format(oracle, false);

    int ax_r = 1;
    int ax_m = 1;
    auto* ax = app.add_subcommand("ax", "weight divisibility of R(r, m) by enumeration");
    ax->add_option("--r", ax_r, "order")->required();
    ax->add_option("--m", ax_m, "number of variables")->required();
    add_format(ax, false);

    std::string which;
    auto* inst_cmd = app.add_subcommand("instance", "print a built-in instance as JSON");
    inst_cmd->add_option("which", which, "example1, lulc, or family")
        ->required()
        ->check(CLI::IsMember({"example1", "lulc", "family"}));
    FamilyArgs inst_fam;
    inst_cmd->add_option("--r", inst_fam.r, "order of the resource code (family)");
    inst_cmd->add_option("--t", inst_fam.t, "order of the input code (family)");
    inst_cmd->add_option("--m", inst_fam.m, "number of variables (family)");
    inst_cmd->add_option("--chi", inst_fam.chi, "angle exponent (family)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return 2;
    }
    if (!apply_budget_env()) {
        return 2;
    }

    dmbqc_report* rep = nullptr;
    if (*phase) {
        dmbqc_status s = dmbqc_report_phase_diagram(r_max, m_max, &rep);
        return emit(s, rep, csv);
    }
    if (*f_eval) {
        dmbqc_status s = dmbqc_report_family_eval(fam.r, fam.t, fam.m, fam.chi, input_bits.c_str(), &rep);
        return emit(s, rep, false);
    }
    if (*f_table) {
        dmbqc_status s = dmbqc_report_family_table(fam.r, fam.t, fam.m, fam.chi, &rep);
        return emit(s, rep, csv);
    }
    if (*f_check) {
        dmbqc_status s = dmbqc_report_family_check(fam.r, fam.t, fam.m, fam.chi, &rep);
        return emit(s, rep, false);
    }
    if (*ex1) {
        dmbqc_status s = dmbqc_report_example1(&rep);
        return emit(s, rep, csv);
    }
    if (*ex2) {
        dmbqc_status s = dmbqc_report_example2(&rep);
        return emit(s, rep, false);
    }
    if (*l_verify) {
        dmbqc_status s = dmbqc_report_lulc_verify(&rep);
        return emit(s, rep, false);
    }
    if (*l_and) {
        dmbqc_status s = dmbqc_report_lulc_and(bit_a, bit_b, &rep);
        return emit(s, rep, false);
    }
    if (*ax) {
        dmbqc_status s = dmbqc_report_ax(ax_r, ax_m, &rep);
        return emit(s, rep, false);
    }
    if (*hvm || *oracle) {
        dmbqc_instance* inst = nullptr;
        int code = 0;
        if (!load_instance(instance_path, &inst, code)) {
            return code;
        }
        dmbqc_status s = *hvm ? dmbqc_report_hvm(inst, &rep) : dmbqc_report_oracle_compare(inst, seed, trials, &rep);
        dmbqc_instance_free(inst);
        return emit(s, rep, false);
    }
    if (*inst_cmd) {
        dmbqc_instance* inst = nullptr;
        dmbqc_status s = which == "example1" ? dmbqc_instance_example1(&inst)
                         : which == "lulc"   ? dmbqc_instance_lulc_and(&inst)
                                             : dmbqc_instance_family(inst_fam.r, inst_fam.t, inst_fam.m, inst_fam.chi, &inst);
        if (s != DMBQC_OK) {
            return report_error(s);
        }
        char* text = nullptr;
        s = dmbqc_instance_to_json(inst, &text);
        dmbqc_instance_free(inst);
        if (s != DMBQC_OK) {
            return report_error(s);
        }
        std::cout << text << "\n";
        dmbqc_string_free(text);
        return 0;
    }
    return 2;
}
