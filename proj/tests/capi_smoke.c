/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <string.h>

#include "comtrans.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(void) {
  comtrans_report* r = NULL;
  comtrans_matrix* m = NULL;
  comtrans_matrix* f = NULL;
  size_t rank = 0;

  EXPECT(strcmp(comtrans_version(), "1.0.0") == 0);

  EXPECT(comtrans_run_ct_dim(2, "auto", &r) == COMTRANS_OK);
  EXPECT(strstr(comtrans_report_text(r), "250") != NULL);
  EXPECT(strstr(comtrans_report_json(r, 0), "\"schema\": 1") != NULL);
  EXPECT(strstr(comtrans_report_json(r, 0), "timing") == NULL);
  EXPECT(strstr(comtrans_report_json(r, 1), "timing") != NULL);
  EXPECT(comtrans_report_attachment(r, "dump") == NULL);
  comtrans_report_free(r);

  EXPECT(comtrans_run_ct_groebner(&r) == COMTRANS_OK);
  EXPECT(strncmp(comtrans_report_attachment(r, "dump"), "18 12\n", 6) == 0);
  comtrans_report_free(r);

  EXPECT(comtrans_run_ct_dim(5, "enumerate", &r) == COMTRANS_RESOURCE);
  EXPECT(r == NULL);
  EXPECT(strlen(comtrans_last_error()) > 0);
  EXPECT(comtrans_run_identities(3, "nonsense", &r) == COMTRANS_USAGE);
  EXPECT(comtrans_run_degree7("com", "4x", &r) == COMTRANS_USAGE);
  EXPECT(comtrans_run_envelope("T", 6, NULL, 4, &r) == COMTRANS_CAP_EXCEEDED);
  EXPECT(comtrans_run_envelope("C", 6, "+1*aa -1*1\n", 0, &r) == COMTRANS_OK);
  EXPECT(strstr(comtrans_report_text(r), "loaded 1 polynomials") != NULL);
  comtrans_report_free(r);

  EXPECT(comtrans_matrix_parse("2 3\n1 2 3\n2 4 6\n", &m) == COMTRANS_OK);
  EXPECT(comtrans_matrix_rows(m) == 2 && comtrans_matrix_cols(m) == 3);
  EXPECT(comtrans_matrix_rank(m, &rank) == COMTRANS_OK && rank == 1);
  EXPECT(comtrans_matrix_rcf(m, &f) == COMTRANS_OK);
  EXPECT(strcmp(comtrans_matrix_dump(f), "1 3\n1 2 3\n") == 0);
  comtrans_matrix_free(f);
  comtrans_matrix_free(m);
  EXPECT(comtrans_matrix_parse("2 2\n1\n", &m) == COMTRANS_USAGE);

  comtrans_report_free(NULL);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures != 0;
}
