/*
 * Copyright 2026 The dmbqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <dmbqc/dmbqc.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                         \
  do {                                                                      \
    if (!(cond)) {                                                          \
      fprintf(stderr, "%s:%d: check failed: %s (last error: %s)\n", __FILE__, \
              __LINE__, #cond, dmbqc_last_error());                         \
      failures++;                                                           \
    }                                                                       \
  } while (0)

static void test_version(void) {
  CHECK(strcmp(dmbqc_version(), "0.1.0") == 0);
  CHECK(strcmp(dmbqc_status_name(DMBQC_OK), "ok") == 0);
  CHECK(strlen(dmbqc_status_name(DMBQC_BUDGET_EXCEEDED)) > 0);
}

static void test_example1_run(void) {
  dmbqc_instance* inst = NULL;
  size_t n = 0, n_in = 0, n_out = 0;
  uint64_t v;
  CHECK(dmbqc_instance_example1(&inst) == DMBQC_OK);
  CHECK(dmbqc_instance_dims(inst, &n, &n_in, &n_out) == DMBQC_OK);
  CHECK(n == 4 && n_in == 3 && n_out == 1);
  for (v = 0; v < 8; v++) {
    uint8_t in[3] = {(uint8_t)(v & 1), (uint8_t)((v >> 1) & 1), (uint8_t)((v >> 2) & 1)};
    uint8_t out[1] = {9};
    CHECK(dmbqc_instance_run(inst, in, 3, out, 1) == DMBQC_OK);
    CHECK(out[0] == (v == 0 || v == 7));
  }
  {
    uint8_t in[2] = {0, 0};
    uint8_t out[1];
    CHECK(dmbqc_instance_run(inst, in, 2, out, 1) == DMBQC_INVALID_ARGUMENT);
    CHECK(strlen(dmbqc_last_error()) > 0);
  }
  dmbqc_instance_free(inst);
}

static void test_json_round_trip(void) {
  dmbqc_instance* inst = NULL;
  dmbqc_instance* back = NULL;
  char* text = NULL;
  char* again = NULL;
  CHECK(dmbqc_instance_lulc_and(&inst) == DMBQC_OK);
  CHECK(dmbqc_instance_to_json(inst, &text) == DMBQC_OK);
  CHECK(dmbqc_instance_from_json(text, &back) == DMBQC_OK);
  CHECK(dmbqc_instance_to_json(back, &again) == DMBQC_OK);
  CHECK(text && again && strcmp(text, again) == 0);
  dmbqc_string_free(text);
  dmbqc_string_free(again);
  dmbqc_instance_free(inst);
  dmbqc_instance_free(back);

  CHECK(dmbqc_instance_from_json("{oops", &back) == DMBQC_PARSE_ERROR);
  CHECK(dmbqc_instance_from_json(NULL, &back) == DMBQC_INVALID_ARGUMENT);
}

static void test_unsupported_and_nondeterministic(void) {
  const char* doc =
      "{\"state\":{\"n\":2,\"generators\":[[1,1]]},\"angles\":{\"D\":2,\"numerators\":[1,1]},"
      "\"Q\":[[1],[0]],\"Z\":[[1,1]],\"T\":[[0,1],[0,0]]}";
  dmbqc_instance* inst = NULL;
  uint8_t in[1] = {0};
  uint8_t out[1];
  CHECK(dmbqc_instance_from_json(doc, &inst) == DMBQC_OK);
  CHECK(dmbqc_instance_run(inst, in, 1, out, 1) == DMBQC_UNSUPPORTED);
  dmbqc_instance_free(inst);

  CHECK(dmbqc_instance_family(1, 1, 2, 1, &inst) == DMBQC_OK);
  {
    uint8_t in3[3] = {0, 0, 0};
    uint8_t out3[3];
    int any_failure = 0;
    uint64_t v;
    for (v = 0; v < 8; v++) {
      in3[0] = v & 1;
      in3[1] = (v >> 1) & 1;
      in3[2] = (v >> 2) & 1;
      any_failure |= dmbqc_instance_run(inst, in3, 3, out3, 3) == DMBQC_ANALYSIS_FAILURE;
    }
    CHECK(any_failure);
  }
  dmbqc_instance_free(inst);
  CHECK(dmbqc_instance_family(3, 1, 2, 2, &inst) == DMBQC_INVALID_ARGUMENT);
}

static void test_reports(void) {
  dmbqc_report* rep = NULL;
  char* text = NULL;
  CHECK(dmbqc_report_phase_diagram(1, 4, &rep) == DMBQC_OK);
  CHECK(dmbqc_report_render(rep, DMBQC_FORMAT_CSV, &text) == DMBQC_OK);
  CHECK(text && strncmp(text, "r,m,class,chi_max,witness_t\n", 28) == 0);
  dmbqc_string_free(text);
  dmbqc_report_free(rep);

  CHECK(dmbqc_report_lulc_verify(&rep) == DMBQC_OK);
  CHECK(dmbqc_report_render(rep, DMBQC_FORMAT_CSV, &text) == DMBQC_UNSUPPORTED);
  CHECK(dmbqc_report_render(rep, DMBQC_FORMAT_JSON, &text) == DMBQC_OK);
  CHECK(text && strstr(text, "\"command\": \"lulc verify\"") != NULL);
  dmbqc_string_free(text);
  dmbqc_report_free(rep);

  rep = NULL;
  CHECK(dmbqc_report_family_table(1, 2, 4, 2, &rep) == DMBQC_ANALYSIS_FAILURE);
  CHECK(rep != NULL);
  dmbqc_report_free(rep);

  CHECK(dmbqc_report_family_eval(1, 2, 5, 2, "0000000000000000", &rep) == DMBQC_OK);
  dmbqc_report_free(rep);
  CHECK(dmbqc_report_family_eval(1, 2, 5, 2, "00000000000000000", &rep) == DMBQC_INVALID_ARGUMENT);
}

static void test_budget(void) {
  dmbqc_report* rep = NULL;
  uint64_t saved = dmbqc_enumeration_budget();
  dmbqc_set_enumeration_budget(1000);
  CHECK(dmbqc_enumeration_budget() == 1000);
  CHECK(dmbqc_report_ax(3, 6, &rep) == DMBQC_BUDGET_EXCEEDED);
  dmbqc_set_enumeration_budget(saved);
  CHECK(dmbqc_report_ax(2, 4, &rep) == DMBQC_OK);
  dmbqc_report_free(rep);
}

int main(void) {
  test_version();
  test_example1_run();
  test_json_round_trip();
  test_unsupported_and_nondeterministic();
  test_reports();
  test_budget();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
