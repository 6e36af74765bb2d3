#ifndef STABRING_STABRING_H
#define STABRING_STABRING_H

/*
 * C interface to the stabring library.
 *
 * Graphs are opaque handles. Every call returns a stabring_status; on failure
 * stabring_last_error() describes the problem (per thread). Strings handed
 * out through char** parameters are NUL-terminated, owned by the caller and
 * released with stabring_free(). Vertex labels in all text are 1-based.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STABRING_BUILDING)
#    define STABRING_API __declspec(dllexport)
#  else
#    define STABRING_API __declspec(dllimport)
#  endif
#else
#  define STABRING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stabring_graph stabring_graph;

typedef enum stabring_status {
  STABRING_OK = 0,
  STABRING_ERR_PARSE = 1,
  STABRING_ERR_VALIDATION = 2,
  STABRING_ERR_ARGUMENT = 3,
  STABRING_ERR_IO = 4,
  STABRING_ERR_LIMIT = 5,
  STABRING_ERR_INTERNAL = 6
} stabring_status;

typedef enum stabring_input_format {
  STABRING_INPUT_AUTO = 0,
  STABRING_INPUT_EDGE_LIST = 1,
  STABRING_INPUT_GRAPH6 = 2
} stabring_input_format;

typedef enum stabring_output_format { STABRING_OUTPUT_JSON = 0, STABRING_OUTPUT_CSV = 1 } stabring_output_format;

typedef enum stabring_method { STABRING_METHOD_KEMPE = 0, STABRING_METHOD_FIBER = 1, STABRING_METHOD_BOTH = 2 } stabring_method;

typedef enum stabring_verdict {
  STABRING_QUADRATIC_UP_TO_BOUNDS = 0,
  STABRING_NON_QUADRATIC = 1,
  STABRING_METHODS_DISAGREE = 2
} stabring_verdict;

typedef struct stabring_config {
  int degree_bound;  /* 0: n+1 for perfect graphs, else 6 */
  int kempe_k_max;   /* 0: chi + 1 */
  uint64_t budget;   /* contraction search nodes */
  stabring_output_format format;
  unsigned threads;  /* catalog workers, 0: hardware concurrency */
} stabring_config;

/* Called once per output line of a catalog run (CSV: header first). */
typedef void (*stabring_line_callback)(const char* line, void* user);

STABRING_API const char* stabring_version(void);
STABRING_API const char* stabring_last_error(void);
STABRING_API void stabring_free(void* p);

STABRING_API void stabring_config_init(stabring_config* cfg);

STABRING_API stabring_status stabring_graph_parse(const char* text, size_t len, stabring_input_format format,
                                                  stabring_graph** out);
STABRING_API stabring_status stabring_graph_read_file(const char* path, stabring_input_format format,
                                                      stabring_graph** out);
STABRING_API void stabring_graph_free(stabring_graph* g);
STABRING_API int stabring_graph_order(const stabring_graph* g);
STABRING_API stabring_status stabring_graph_to_graph6(const stabring_graph* g, char** out);

/* degree_bound 0 picks the default. verdict may be NULL. */
STABRING_API stabring_status stabring_quadratic(const stabring_graph* g, stabring_method method, int degree_bound,
                                                stabring_output_format format, char** out, stabring_verdict* verdict);

/* Kempe classes of the k-colorings. from/to are optional colorings
   ("1,2,1,..."); when both are given the report says whether they are
   Kempe equivalent. */
STABRING_API stabring_status stabring_kempe(const stabring_graph* g, int k, const char* from, const char* to,
                                            stabring_output_format format, char** out);

STABRING_API stabring_status stabring_contractile(const stabring_graph* g, uint64_t budget,
                                                  stabring_output_format format, char** out);

STABRING_API stabring_status stabring_classes(const stabring_graph* g, stabring_output_format format, char** out);

/* consistent may be NULL. */
STABRING_API stabring_status stabring_analyze(const stabring_graph* g, const stabring_config* cfg, char** out,
                                              int* consistent);

/* source: "gen:n<=N", "gen:n=N" or a graph6 file path. */
STABRING_API stabring_status stabring_catalog(const char* source, const stabring_config* cfg,
                                              stabring_line_callback on_line, void* user, char** summary,
                                              uint64_t* violations);
/* Same, reading graph6 lines from a buffer. */
STABRING_API stabring_status stabring_catalog_text(const char* text, size_t len, const stabring_config* cfg,
                                                   stabring_line_callback on_line, void* user, char** summary,
                                                   uint64_t* violations);

#ifdef __cplusplus
}
#endif

#endif
