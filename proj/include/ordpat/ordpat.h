#ifndef ORDPAT_H
#define ORDPAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ORDPAT_API __declspec(dllexport)
#else
#define ORDPAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ordpat_graph ordpat_graph;
typedef struct ordpat_pattern ordpat_pattern;
typedef struct ordpat_report ordpat_report;

typedef enum ordpat_status {
  ORDPAT_OK = 0,
  ORDPAT_ERR_PARSE = 1,         /* malformed graph or pattern text */
  ORDPAT_ERR_IO = 2,            /* file could not be read */
  ORDPAT_ERR_INVALID_ARGUMENT = 3,
  ORDPAT_ERR_PRECONDITION = 4,  /* engine does not apply to the pattern */
  ORDPAT_ERR_CAP = 5,           /* size or width cap exceeded */
  ORDPAT_ERR_INVALID_TREE = 6,
  ORDPAT_ERR_INTERNAL = 7
} ordpat_status;

/* Message of the last failed call on this thread ("" if none). */
ORDPAT_API const char* ordpat_last_error(void);
ORDPAT_API const char* ordpat_status_name(ordpat_status s);

/* Strings returned through char** are owned by the caller. */
ORDPAT_API void ordpat_string_free(char* s);

/* graphs */
ORDPAT_API ordpat_status ordpat_graph_parse(const char* text, size_t len, ordpat_graph** out);
ORDPAT_API ordpat_status ordpat_graph_load(const char* path, ordpat_graph** out);
/* edges: 2*m endpoints, pairs (u, v) with 1 <= u, v <= n */
ORDPAT_API ordpat_status ordpat_graph_from_edges(size_t n, const uint32_t* edges, size_t m, ordpat_graph** out);
/* model "gnm" uses m, "gnp" uses density */
ORDPAT_API ordpat_status ordpat_graph_generate(const char* model, size_t n, size_t m, double density, uint64_t seed,
                                               ordpat_graph** out);
ORDPAT_API size_t ordpat_graph_n(const ordpat_graph* g);
ORDPAT_API size_t ordpat_graph_m(const ordpat_graph* g);
ORDPAT_API ordpat_status ordpat_graph_render(const ordpat_graph* g, char** out);
ORDPAT_API void ordpat_graph_free(ordpat_graph* g);

/* patterns */
ORDPAT_API ordpat_status ordpat_pattern_parse(const char* text, size_t len, ordpat_pattern** out);
ORDPAT_API ordpat_status ordpat_pattern_load(const char* path, ordpat_pattern** out);
/* Three-vertex catalog names ("chordal", "co-forest", ...), "flat-cycle-K",
   "p-empty" / "p-a" / "p-ab" / ... and "p4-N" / "p4-Nm". */
ORDPAT_API ordpat_status ordpat_pattern_by_name(const char* name, ordpat_pattern** out);
ORDPAT_API ordpat_status ordpat_pattern_p4(int variant, int mirrored, ordpat_pattern** out);
ORDPAT_API int ordpat_pattern_k(const ordpat_pattern* p);
ORDPAT_API ordpat_status ordpat_pattern_render(const ordpat_pattern* p, char** out);
ORDPAT_API void ordpat_pattern_free(ordpat_pattern* p);

/* detection */
typedef struct ordpat_options {
  const char* engine; /* auto|oracle|three|clique|merge|forest|p4|geometry; NULL = auto */
  int width_cap;      /* merge engine; <= 0 means default (6) */
  int oracle_cap;     /* largest k the oracle accepts; <= 0 means default (8) */
} ordpat_options;

ORDPAT_API ordpat_status ordpat_detect(const ordpat_graph* g, const ordpat_pattern* p, const ordpat_options* opts,
                                       ordpat_report** out);
/* Engine auto-routing would pick, and why. */
ORDPAT_API ordpat_status ordpat_route(const ordpat_pattern* p, int width_cap, char** engine, char** reason);

ORDPAT_API int ordpat_report_found(const ordpat_report* r);
ORDPAT_API size_t ordpat_report_witness_size(const ordpat_report* r);
/* Copies min(cap, size) positions; returns the witness size. */
ORDPAT_API size_t ordpat_report_witness(const ordpat_report* r, uint32_t* buf, size_t cap);
ORDPAT_API const char* ordpat_report_engine(const ordpat_report* r);
ORDPAT_API double ordpat_report_millis(const ordpat_report* r);
/* {"schema":1, ...} */
ORDPAT_API ordpat_status ordpat_report_json(const ordpat_report* r, char** out);
ORDPAT_API void ordpat_report_free(ordpat_report* r);

/* True iff `positions` (k entries) realize p in g. */
ORDPAT_API ordpat_status ordpat_is_realization(const ordpat_graph* g, const ordpat_pattern* p, const uint32_t* positions,
                                               size_t k, int* ok);

/* k-partite clique instance in the edge-list format. */
ORDPAT_API ordpat_status ordpat_emit_reduction(const ordpat_graph* g, const ordpat_pattern* p, char** out);
/* Bounded merge tree of p, as an s-expression. */
ORDPAT_API ordpat_status ordpat_dump_tree(const ordpat_pattern* p, char** out);

#ifdef __cplusplus
}
#endif

#endif
