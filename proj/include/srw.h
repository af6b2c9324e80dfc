/* C interface to the srw engine. All strings are UTF-8 and NUL-terminated.
 * Strings returned through char** must be released with srw_string_free. */
#ifndef SRW_H
#define SRW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SRW_BUILDING)
#    define SRW_API __declspec(dllexport)
#  else
#    define SRW_API __declspec(dllimport)
#  endif
#else
#  define SRW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srw_status {
    SRW_OK = 0,
    SRW_ERR_PARSE = 1,
    SRW_ERR_INVALID = 2,
    SRW_ERR_BUDGET = 3,
    SRW_ERR_HORIZON = 4,
    SRW_ERR_UNDECIDED = 5,
    SRW_ERR_UNSUPPORTED = 6,
    SRW_ERR_OVERFLOW = 7,
    SRW_ERR_ARGUMENT = 8, /* null pointer or similar misuse */
    SRW_ERR_INTERNAL = 9
} srw_status;

/* Command outcomes reported through srw_run. */
enum {
    SRW_OUTCOME_PASS = 0,      /* found / holds */
    SRW_OUTCOME_EXHAUSTED = 1, /* exhausted, closed at the horizon, check failed */
    SRW_OUTCOME_BUDGET = 3
};

typedef struct srw_context srw_context;
typedef struct srw_ordinal srw_ordinal;

SRW_API const char* srw_version(void);

/* Message for the last failing call on this thread ("" if none). */
SRW_API const char* srw_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
SRW_API long srw_last_error_position(void);

SRW_API void srw_string_free(char* s);

/* config_json may be NULL for defaults. */
SRW_API srw_status srw_context_new(const char* config_json, srw_context** out);
SRW_API void srw_context_free(srw_context* ctx);
SRW_API srw_status srw_context_set_threads(srw_context* ctx, unsigned threads);
SRW_API srw_status srw_context_set_format(srw_context* ctx, const char* format);
SRW_API srw_status srw_context_config(const srw_context* ctx, char** out_json);

/* Runs one command ("schreier.mem", "verify.hj", ...) with JSON parameters.
 * The report is rendered in the context's output format. */
SRW_API srw_status srw_run(srw_context* ctx, const char* command, const char* params_json, char** out_report,
                           int* out_outcome);
/* Newline-separated list of command names. */
SRW_API srw_status srw_commands(char** out_list);

SRW_API srw_status srw_ordinal_parse(const char* text, srw_ordinal** out);
SRW_API void srw_ordinal_free(srw_ordinal* o);
SRW_API srw_status srw_ordinal_format(const srw_ordinal* o, char** out_text);
/* -1, 0 or 1. */
SRW_API int srw_ordinal_compare(const srw_ordinal* a, const srw_ordinal* b);
SRW_API int srw_ordinal_is_limit(const srw_ordinal* o);
/* n-th term of the fundamental sequence; succ_rule selects the successor variant. */
SRW_API srw_status srw_ordinal_fixed_seq(const srw_ordinal* lambda, uint64_t n, int succ_rule, srw_ordinal** out);

SRW_API srw_status srw_schreier_mem(const srw_context* ctx, const srw_ordinal* xi, const uint32_t* elems, size_t count,
                                    int* out_member);

#ifdef __cplusplus
}
#endif

#endif
