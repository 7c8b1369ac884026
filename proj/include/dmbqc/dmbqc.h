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


#ifndef DMBQC_DMBQC_H
#define DMBQC_DMBQC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DMBQC_API __declspec(dllexport)
#else
#define DMBQC_API __attribute__((visibility("default")))
#endif

typedef enum dmbqc_status {
  DMBQC_OK = 0,
  /* Bad parameter values or inconsistent dimensions. */
  DMBQC_INVALID_ARGUMENT = 1,
  /* Malformed instance document. */
  DMBQC_PARSE_ERROR = 2,
  /* Feature outside the evaluated model, e.g. a nonzero order map. */
  DMBQC_UNSUPPORTED = 3,
  /* Enumeration would exceed the configured budget. */
  DMBQC_BUDGET_EXCEEDED = 4,
  /* The analysis ran and failed, e.g. a determinism violation. A report, if
     requested, is still produced. */
  DMBQC_ANALYSIS_FAILURE = 5,
  DMBQC_INTERNAL_ERROR = 6
} dmbqc_status;

typedef enum dmbqc_format { DMBQC_FORMAT_JSON = 0, DMBQC_FORMAT_CSV = 1 } dmbqc_format;

typedef struct dmbqc_instance dmbqc_instance;
typedef struct dmbqc_report dmbqc_report;

DMBQC_API const char* dmbqc_version(void);
DMBQC_API const char* dmbqc_status_name(dmbqc_status status);

/* Message for the last failing call on this thread; empty when none. */
DMBQC_API const char* dmbqc_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
DMBQC_API void dmbqc_string_free(char* s);

/* Work limit for exhaustive checks (weight congruences, or 2^dim codewords). */
DMBQC_API void dmbqc_set_enumeration_budget(uint64_t budget);
DMBQC_API uint64_t dmbqc_enumeration_budget(void);

/* Instances. */
DMBQC_API dmbqc_status dmbqc_instance_from_json(const char* json, dmbqc_instance** out);
DMBQC_API dmbqc_status dmbqc_instance_example1(dmbqc_instance** out);
DMBQC_API dmbqc_status dmbqc_instance_family(int r, int t, int m, int chi, dmbqc_instance** out);
DMBQC_API dmbqc_status dmbqc_instance_lulc_and(dmbqc_instance** out);
DMBQC_API dmbqc_status dmbqc_instance_dims(const dmbqc_instance* inst, size_t* n, size_t* n_in, size_t* n_out);
DMBQC_API dmbqc_status dmbqc_instance_to_json(const dmbqc_instance* inst, char** out);
/* Writes n_out output bits. Returns DMBQC_ANALYSIS_FAILURE, leaving `output`
   untouched, when some output row is not deterministic. */
DMBQC_API dmbqc_status dmbqc_instance_run(const dmbqc_instance* inst, const uint8_t* input, size_t input_len,
                                          uint8_t* output, size_t output_len);
DMBQC_API void dmbqc_instance_free(dmbqc_instance* inst);

/* Reports. On DMBQC_OK or DMBQC_ANALYSIS_FAILURE, *out holds a report. */
DMBQC_API dmbqc_status dmbqc_report_phase_diagram(int r_max, int m_max, dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_family_eval(int r, int t, int m, int chi, const char* input_bits,
                                                dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_family_table(int r, int t, int m, int chi, dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_family_check(int r, int t, int m, int chi, dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_example1(dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_example2(dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_lulc_verify(dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_lulc_and(int a, int b, dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_hvm(const dmbqc_instance* inst, dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_oracle_compare(const dmbqc_instance* inst, uint64_t seed, size_t trials,
                                                   dmbqc_report** out);
DMBQC_API dmbqc_status dmbqc_report_ax(int r, int m, dmbqc_report** out);

/* DMBQC_UNSUPPORTED when the report has no tabular form and CSV is asked. */
DMBQC_API dmbqc_status dmbqc_report_render(const dmbqc_report* report, dmbqc_format format, char** out);
DMBQC_API void dmbqc_report_free(dmbqc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DMBQC_DMBQC_H */
