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


#include "dmbqc/dmbqc.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "lulc.h"
#include "mbqc.h"
#include "reed_muller.h"
#include "report.h"
#include "rm_family.h"

struct dmbqc_instance {
    dmbqc::MBQCInstance inst;
};

struct dmbqc_report {
    dmbqc::Report report;
};

namespace {

thread_local std::string last_error;
std::atomic<uint64_t> enumeration_budget{uint64_t{1} << 32};

dmbqc_status fail(dmbqc_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes.
dmbqc_status guarded(const std::function<dmbqc_status()>& fn) {
    last_error.clear();
    try {
        return fn();
    } catch (const dmbqc::ParseError& e) {
        return fail(DMBQC_PARSE_ERROR, e.what());
    } catch (const dmbqc::UnsupportedError& e) {
        return fail(DMBQC_UNSUPPORTED, e.what());
    } catch (const dmbqc::UnsupportedFormat& e) {
        return fail(DMBQC_UNSUPPORTED, e.what());
    } catch (const dmbqc::BudgetExceeded& e) {
        return fail(DMBQC_BUDGET_EXCEEDED, e.what());
    } catch (const dmbqc::DeterminismViolation& e) {
        return fail(DMBQC_ANALYSIS_FAILURE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(DMBQC_INVALID_ARGUMENT, e.what());
    } catch (const std::length_error& e) {
        return fail(DMBQC_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DMBQC_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(DMBQC_INTERNAL_ERROR, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dmbqc_status store_instance(dmbqc::MBQCInstance inst, dmbqc_instance** out) {
    if (out == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null output pointer");
    }
    *out = new dmbqc_instance{std::move(inst)};
    return DMBQC_OK;
}

dmbqc_status produce(dmbqc_report** out, const std::function<dmbqc::Report()>& fn) {
    if (out == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null output pointer");
    }
    *out = nullptr;
    return guarded([&] {
        dmbqc::Report r = fn();
        bool ok = r.analysis_ok;
        *out = new dmbqc_report{std::move(r)};
        return ok ? DMBQC_OK : fail(DMBQC_ANALYSIS_FAILURE, "analysis failed; see the report payload");
    });
}

dmbqc::FamilyParams params(int r, int t, int m, int chi) { return {r, t, m, chi}; }

dmbqc::Budgets budgets() { return {enumeration_budget.load()}; }

}  // namespace

extern "C" {

const char* dmbqc_version(void) { return dmbqc::kVersion; }

const char* dmbqc_status_name(dmbqc_status status) {
    switch (status) {
        case DMBQC_OK:
            return "ok";
        case DMBQC_INVALID_ARGUMENT:
            return "invalid argument";
        case DMBQC_PARSE_ERROR:
            return "parse error";
        case DMBQC_UNSUPPORTED:
            return "unsupported";
        case DMBQC_BUDGET_EXCEEDED:
            return "budget exceeded";
        case DMBQC_ANALYSIS_FAILURE:
            return "analysis failure";
        case DMBQC_INTERNAL_ERROR:
            return "internal error";
    }
    return "unknown status";
}

const char* dmbqc_last_error(void) { return last_error.c_str(); }

void dmbqc_string_free(char* s) { std::free(s); }

void dmbqc_set_enumeration_budget(uint64_t budget) { enumeration_budget.store(budget); }

uint64_t dmbqc_enumeration_budget(void) { return enumeration_budget.load(); }

dmbqc_status dmbqc_instance_from_json(const char* json, dmbqc_instance** out) {
    if (json == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null JSON text");
    }
    return guarded([&] { return store_instance(dmbqc::instance_from_json_text(json), out); });
}

dmbqc_status dmbqc_instance_example1(dmbqc_instance** out) {
    return guarded([&] { return store_instance(dmbqc::example1_instance(), out); });
}

dmbqc_status dmbqc_instance_family(int r, int t, int m, int chi, dmbqc_instance** out) {
    return guarded([&] { return store_instance(dmbqc::build(params(r, t, m, chi)), out); });
}

dmbqc_status dmbqc_instance_lulc_and(dmbqc_instance** out) {
    return guarded([&] { return store_instance(dmbqc::lulc_and_instance(), out); });
}

dmbqc_status dmbqc_instance_dims(const dmbqc_instance* inst, size_t* n, size_t* n_in, size_t* n_out) {
    if (inst == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null instance");
    }
    if (n) *n = inst->inst.n();
    if (n_in) *n_in = inst->inst.n_in();
    if (n_out) *n_out = inst->inst.n_out();
    return DMBQC_OK;
}

dmbqc_status dmbqc_instance_to_json(const dmbqc_instance* inst, char** out) {
    if (inst == nullptr || out == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out = copy_string(dmbqc::instance_to_json(inst->inst).dump());
        return DMBQC_OK;
    });
}

dmbqc_status dmbqc_instance_run(const dmbqc_instance* inst, const uint8_t* input, size_t input_len, uint8_t* output,
                                size_t output_len) {
    if (inst == nullptr || (input == nullptr && input_len > 0) || (output == nullptr && output_len > 0)) {
        return fail(DMBQC_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        if (output_len != inst->inst.n_out()) {
            return fail(DMBQC_INVALID_ARGUMENT, "output buffer must hold " + std::to_string(inst->inst.n_out()) +
                                                    " bits");
        }
        dmbqc::RunResult res =
            dmbqc::run(inst->inst, dmbqc::BitVec::from_bits(std::span<const uint8_t>(input, input_len)));
        if (!res.deterministic) {
            return fail(DMBQC_ANALYSIS_FAILURE, "some output row is not deterministic for this input");
        }
        dmbqc::BitVec o = res.output();
        for (size_t k = 0; k < output_len; k++) {
            output[k] = o.get(k) ? 1 : 0;
        }
        return DMBQC_OK;
    });
}

void dmbqc_instance_free(dmbqc_instance* inst) { delete inst; }

dmbqc_status dmbqc_report_phase_diagram(int r_max, int m_max, dmbqc_report** out) {
    return produce(out, [&] { return dmbqc::report_phase_diagram(r_max, m_max); });
}

dmbqc_status dmbqc_report_family_eval(int r, int t, int m, int chi, const char* input_bits, dmbqc_report** out) {
    if (input_bits == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null input bits");
    }
    return produce(out, [&] { return dmbqc::report_family_eval(params(r, t, m, chi), input_bits); });
}

dmbqc_status dmbqc_report_family_table(int r, int t, int m, int chi, dmbqc_report** out) {
    return produce(out, [&] { return dmbqc::report_family_table(params(r, t, m, chi)); });
}

dmbqc_status dmbqc_report_family_check(int r, int t, int m, int chi, dmbqc_report** out) {
    return produce(out, [&] { return dmbqc::report_family_check(params(r, t, m, chi), budgets()); });
}

dmbqc_status dmbqc_report_example1(dmbqc_report** out) {
    return produce(out, [] { return dmbqc::report_example1(); });
}

dmbqc_status dmbqc_report_example2(dmbqc_report** out) {
    return produce(out, [] { return dmbqc::report_example2(); });
}

dmbqc_status dmbqc_report_lulc_verify(dmbqc_report** out) {
    return produce(out, [] { return dmbqc::report_lulc_verify(); });
}

dmbqc_status dmbqc_report_lulc_and(int a, int b, dmbqc_report** out) {
    return produce(out, [&] { return dmbqc::report_lulc_and(a, b); });
}

dmbqc_status dmbqc_report_hvm(const dmbqc_instance* inst, dmbqc_report** out) {
    if (inst == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null instance");
    }
    return produce(out, [&] { return dmbqc::report_hvm(inst->inst); });
}

dmbqc_status dmbqc_report_oracle_compare(const dmbqc_instance* inst, uint64_t seed, size_t trials,
                                         dmbqc_report** out) {
    if (inst == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null instance");
    }
    return produce(out, [&] { return dmbqc::report_oracle_compare(inst->inst, seed, trials); });
}

dmbqc_status dmbqc_report_ax(int r, int m, dmbqc_report** out) {
    return produce(out, [&] { return dmbqc::report_ax(r, m, budgets()); });
}

dmbqc_status dmbqc_report_render(const dmbqc_report* report, dmbqc_format format, char** out) {
    if (report == nullptr || out == nullptr) {
        return fail(DMBQC_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto fmt = format == DMBQC_FORMAT_CSV ? dmbqc::Format::kCsv : dmbqc::Format::kJson;
        *out = copy_string(dmbqc::emit_report(report->report, fmt));
        return DMBQC_OK;
    });
}

void dmbqc_report_free(dmbqc_report* report) { delete report; }

}  // extern "C"
