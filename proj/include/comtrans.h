#ifndef COMTRANS_H
#define COMTRANS_H

/* C interface to the comtrans library. All strings are UTF-8 and
   NUL-terminated; strings returned by the library stay valid until the
   owning handle is freed. */

#include <stddef.h>

#if defined(COMTRANS_BUILDING_LIBRARY)
#define COMTRANS_API __attribute__((visibility("default")))
#else
#define COMTRANS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum comtrans_status {
  COMTRANS_OK = 0,
  COMTRANS_RESOURCE = 2,      /* refused: outside desk scale, or overflow */
  COMTRANS_CAP_EXCEEDED = 3,  /* Groebner completion passed its degree cap */
  COMTRANS_USAGE = 64,        /* malformed argument */
  COMTRANS_INTERNAL = 70
} comtrans_status;

typedef struct comtrans_report comtrans_report;
typedef struct comtrans_matrix comtrans_matrix;

COMTRANS_API const char* comtrans_version(void);
/* Message of the last failure on this thread ("" if none). */
COMTRANS_API const char* comtrans_last_error(void);

COMTRANS_API comtrans_status comtrans_run_ct_groebner(comtrans_report** out);
/* method: "auto", "enumerate" or "structural". */
COMTRANS_API comtrans_status comtrans_run_ct_dim(size_t weight, const char* method, comtrans_report** out);
/* degree 3 or 5; ops: com, tra, both, wac, qdef2, assoc. */
COMTRANS_API comtrans_status comtrans_run_identities(size_t degree, const char* ops, comtrans_report** out);
/* ops: com, tra, mixed; partition may be NULL or "" for all of them. */
COMTRANS_API comtrans_status comtrans_run_degree7(const char* ops, const char* partition, comtrans_report** out);
/* kind: C, T, CT; presentation (text format) may be NULL; cap bounds the
   degree reached by Groebner completion (0 selects the default 12). */
COMTRANS_API comtrans_status comtrans_run_envelope(const char* kind, size_t max_degree, const char* presentation,
                                                   size_t cap, comtrans_report** out);
/* op: rank, rcf, kernel; dump: matrix in dump format. */
COMTRANS_API comtrans_status comtrans_run_matrix(const char* op, const char* dump, comtrans_report** out);

COMTRANS_API const char* comtrans_report_json(comtrans_report* r, int with_timing);
COMTRANS_API const char* comtrans_report_text(const comtrans_report* r);
COMTRANS_API double comtrans_report_seconds(const comtrans_report* r);
/* NULL if the report has no such attachment ("dump", "presentation"). */
COMTRANS_API const char* comtrans_report_attachment(const comtrans_report* r, const char* name);
COMTRANS_API void comtrans_report_free(comtrans_report* r);

COMTRANS_API comtrans_status comtrans_matrix_parse(const char* dump, comtrans_matrix** out);
COMTRANS_API size_t comtrans_matrix_rows(const comtrans_matrix* m);
COMTRANS_API size_t comtrans_matrix_cols(const comtrans_matrix* m);
COMTRANS_API comtrans_status comtrans_matrix_rank(const comtrans_matrix* m, size_t* rank);
/* Row canonical form, nonzero rows only. */
COMTRANS_API comtrans_status comtrans_matrix_rcf(const comtrans_matrix* m, comtrans_matrix** out);
COMTRANS_API const char* comtrans_matrix_dump(comtrans_matrix* m);
COMTRANS_API void comtrans_matrix_free(comtrans_matrix* m);

#ifdef __cplusplus
}
#endif

#endif
