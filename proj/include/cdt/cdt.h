#ifndef CDT_CDT_H
#define CDT_CDT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CDT_API __attribute__((visibility("default")))
#else
#define CDT_API
#endif

typedef enum cdt_status {
  CDT_OK = 0,
  CDT_ERR_ARGUMENT = 1,   /* null pointer or bad option */
  CDT_ERR_UNKNOWN_GRAPH = 2,
  CDT_ERR_GRAPH6 = 3,     /* malformed graph6 text */
  CDT_ERR_INPUT = 4,      /* graph the pipeline cannot analyse */
  CDT_ERR_INTERNAL = 5,
} cdt_status;

typedef struct cdt_graph cdt_graph;

typedef struct cdt_options {
  double budget_seconds; /* per graph */
  int hamiltonicity;     /* nonzero to run the hamiltonicity search */
} cdt_options;

/* Message of the last failed call on this thread, "" when none. */
CDT_API const char* cdt_last_error(void);
CDT_API cdt_options cdt_default_options(void);

/* Catalog token such as "petersen" or "biggs-smith"; display names are also
   accepted. */
CDT_API cdt_status cdt_graph_from_catalog(const char* name, cdt_graph** out);
CDT_API cdt_status cdt_graph_from_graph6(const char* text, cdt_graph** out);
CDT_API void cdt_graph_free(cdt_graph* g);

CDT_API cdt_status cdt_graph_order(const cdt_graph* g, int* out);
CDT_API cdt_status cdt_graph_to_graph6(const cdt_graph* g, char** out);

/* Every call below hands back a NUL-terminated string owned by the caller,
   released with cdt_string_free. On failure *out is set to NULL. */
CDT_API void cdt_string_free(char* s);

/* The parameter table for all twelve graphs. */
CDT_API cdt_status cdt_catalog_json(char** out);
/* Metrics, groups, girth cycles and fastening. */
CDT_API cdt_status cdt_analyze_json(const cdt_graph* g, char** out);
/* Orientation outcome with the oriented cycles or an odd witness. */
CDT_API cdt_status cdt_orient_json(const cdt_graph* g, char** out);
/* Separator summary, censuses and surface. */
CDT_API cdt_status cdt_separator_json(const cdt_graph* g, char** out);
CDT_API cdt_status cdt_separator_dot(const cdt_graph* g, char** out);
CDT_API cdt_status cdt_graph_dot(const cdt_graph* g, char** out);

/* Verification report; *exit_code is 0 when nothing mismatched, 1 otherwise. */
CDT_API cdt_status cdt_verify_json(const cdt_graph* g, const cdt_options* opts, char** out, int* exit_code);
CDT_API cdt_status cdt_verify_all_json(const cdt_options* opts, char** out, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
