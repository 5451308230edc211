#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "cmoment.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

static void measures_and_tables(void) {
  cm_measure* mu = NULL;
  EXPECT(cm_measure_dirac(1.0, 0.0, 1.0, "complex-plane", &mu) == CM_OK);
  EXPECT(cm_measure_size(mu) == 1);
  EXPECT(cm_measure_total_mass(mu) == 1.0);

  cm_table* t = NULL;
  EXPECT(cm_discrete_moments(mu, 2, &t) == CM_OK);
  EXPECT(cm_table_degree(t) == 2);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      double re = 0, im = 1;
      EXPECT(cm_table_entry(t, m, n, &re, &im) == CM_OK);
      EXPECT(re == 1.0 && im == 0.0);
    }
  double re, im;
  EXPECT(cm_table_entry(t, 3, 0, &re, &im) == CM_ERR_RANGE);

  char* report = NULL;
  EXPECT(cm_check_pd_quadrant(t, 1, 0, &report) == CM_OK);
  EXPECT(contains(report, "\"verdict\":\"psd\""));
  cm_string_free(report);

  char* text = NULL;
  EXPECT(cm_table_to_json(t, &text) == CM_OK);
  cm_table* back = NULL;
  EXPECT(cm_table_from_json(text, &back) == CM_OK);
  EXPECT(cm_table_degree(back) == 2);
  cm_string_free(text);
  cm_table_free(back);
  cm_table_free(t);
  cm_measure_free(mu);
}

static void errors(void) {
  cm_measure* mu = NULL;
  EXPECT(cm_measure_from_json("{\"atoms\": [", &mu) == CM_ERR_PARSE);
  EXPECT(mu == NULL);
  EXPECT(strlen(cm_last_error()) > 0);
  EXPECT(cm_measure_from_json("{\"atoms\":[{\"re\":1,\"w\":1}],\"bogus\":0}", &mu) == CM_ERR_PARSE);
  EXPECT(cm_measure_dirac(0.0, 0.0, 1.0, "punctured-plane", &mu) == CM_ERR_DOMAIN);
  EXPECT(cm_measure_dirac(1.0, 0.0, 1.0, NULL, &mu) == CM_ERR_INVALID_ARGUMENT);
  EXPECT(cm_discrete_moments(NULL, 2, NULL) == CM_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(cm_status_name(CM_ERR_RANK_DEFICIENT), "rank-deficient") == 0);
  EXPECT(strcmp(cm_status_name(CM_OK), "ok") == 0);

  char* out = NULL;
  EXPECT(cm_recover_atomic("{\"moments\":[1,1,1,1,1,1]}", 2, 0.0, &out) == CM_ERR_RANK_DEFICIENT);
  EXPECT(out == NULL);
  EXPECT(cm_demo("snu2", 2.0, 0, &out) == CM_ERR_DOMAIN);
  EXPECT(cm_demo("missing", 0.5, 0, &out) == CM_ERR_DOMAIN);
}

static void recovery(void) {
  char* out = NULL;
  EXPECT(cm_recover_atomic("{\"moments\":[1,1,2,4]}", 2, 0.0, &out) == CM_OK);
  EXPECT(contains(out, "\"jacobi\""));
  cm_string_free(out);

  EXPECT(cm_stieltjes_moment(3, 0.7, 0, &out) == CM_OK);
  EXPECT(contains(out, "\"closed_form\""));
  cm_string_free(out);

  EXPECT(cm_dc1_example(&out) == CM_OK);
  EXPECT(contains(out, "\"passed\":true"));
  cm_string_free(out);

  EXPECT(cm_tensor_sequence("{\"moments\":[1,0.5,0.25]}", "{\"moments\":[1,0,1]}", -1, &out) == CM_OK);
  EXPECT(contains(out, "[1,2,0.5]"));
  cm_string_free(out);
}

static void extensions_and_geometry(void) {
  cm_measure* mu = NULL;
  EXPECT(cm_measure_from_json(
             "{\"domain\":\"punctured-plane\",\"atoms\":[{\"re\":1,\"im\":1,\"w\":0.5},{\"re\":-2,\"w\":0.5}]}",
             &mu) == CM_OK);
  cm_extended* big = NULL;
  EXPECT(cm_build_extension(mu, NULL, 3, &big) == CM_OK);
  EXPECT(cm_extended_window(big) == 3);
  cm_table* small = NULL;
  EXPECT(cm_restrict(big, &small) == CM_OK);
  char* out = NULL;
  EXPECT(cm_is_extension(big, small, &out) == CM_OK);
  EXPECT(contains(out, "\"extends\":true"));
  cm_string_free(out);
  EXPECT(cm_check_pd_halfplane(big, 1, 0, &out) == CM_OK);
  EXPECT(contains(out, "\"psd\""));
  cm_string_free(out);
  cm_table_free(small);
  cm_extended_free(big);
  cm_measure_free(mu);

  cm_curve* circle = NULL;
  EXPECT(cm_curve_by_name("unit-circle", NULL, &circle) == CM_OK);
  EXPECT(cm_injectivity_test(circle, 200, &out) == CM_OK);
  EXPECT(contains(out, "\"verdict\":\"violated\""));
  cm_string_free(out);
  cm_curve_free(circle);

  cm_curve* witch = NULL;
  EXPECT(cm_curve_by_name("agnesi", "{\"a\":1,\"b\":1}", &witch) == CM_OK);
  cm_measure* apex = NULL;
  EXPECT(cm_measure_dirac(0.0, 1.0, 1.0, "complex-plane", &apex) == CM_OK);
  double residual = -1;
  EXPECT(cm_localization_residual(apex, witch, &residual) == CM_OK);
  EXPECT(residual == 0.0);
  cm_measure_free(apex);
  cm_curve_free(witch);

  int same = -1;
  EXPECT(cm_collinear_through_origin(1, 1, -2, -2, &same) == CM_OK && same == 1);
  EXPECT(cm_collinear_through_origin(1, 0, 0, 1, &same) == CM_OK && same == 0);

  int k = 0, l = 0;
  EXPECT(cm_flatness_for_support("{\"kind\":\"circle\"}", &k, &l) == CM_OK);
  EXPECT(k == 1 && l == -1);
}

static void precision_and_demos(void) {
  EXPECT(cm_get_precision() == 39);
  EXPECT(cm_set_precision(5) == CM_ERR_RANGE);
  EXPECT(cm_set_precision(60) == CM_OK);
  EXPECT(cm_get_precision() == 60);
  char* out = NULL;
  EXPECT(cm_stieltjes_moment(0, 0.0, 0, &out) == CM_OK);
  cm_string_free(out);
  EXPECT(cm_set_precision(39) == CM_OK);

  char* names = NULL;
  EXPECT(cm_demo_names(&names) == CM_OK);
  EXPECT(contains(names, "\"0notatom\""));
  cm_string_free(names);
  EXPECT(cm_demo("snu2", 0.5, 0, &out) == CM_OK);
  EXPECT(contains(out, "\"passed\":true"));
  cm_string_free(out);
}

int main(void) {
  measures_and_tables();
  errors();
  recovery();
  extensions_and_geometry();
  precision_and_demos();
  if (failures) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
