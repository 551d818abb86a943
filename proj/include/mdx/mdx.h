#ifndef MDX_H
#define MDX_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mdx_status {
    MDX_OK = 0,
    MDX_FAIL = 1,        /* an assertion or a property trial failed */
    MDX_PARSE_ERROR = 2, /* malformed or structurally invalid input */
    MDX_UNSUPPORTED = 3, /* outside the engine's domain */
    MDX_BAD_ARGUMENT = 4
} mdx_status;

const char* mdx_version(void);

/* An evaluation session: one chart, one ambient degree, one optional graph
   structure, and the accumulated let bindings.  Scripts evaluated against
   the same session share all of that state. */
typedef struct mdx_session mdx_session;

mdx_session* mdx_session_new(void);
void mdx_session_free(mdx_session* session);

/* Evaluates a script.  On success *output holds the printed values; on
   failure it holds the error message.  Free it with mdx_string_free. */
mdx_status mdx_session_eval(mdx_session* session, const char* source,
                            char** output);

typedef struct mdx_suite_config {
    uint64_t seed;
    int32_t trials;
    int32_t dimension;
    int32_t ambient;
    int32_t max_poly_degree;
    int32_t max_terms;
    int32_t coeff_bound;
    int32_t flip_schouten_sign; /* debug mutation hook, breaks bracket suites */
} mdx_suite_config;

/* Fills in the default configuration. */
void mdx_suite_config_init(mdx_suite_config* cfg);

/* Runs the named property suite, or every suite when name is "all".
   *report receives the text rendering, or a JSON array when as_json is
   nonzero; free it with mdx_string_free.  Returns MDX_FAIL when any trial
   fails, MDX_BAD_ARGUMENT for an unknown name or invalid configuration. */
mdx_status mdx_run_suite(const char* name, const mdx_suite_config* cfg,
                         int as_json, char** report);

/* Newline-separated "name\tdescription" lines; free with mdx_string_free. */
char* mdx_suite_list(void);

void mdx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
