#ifndef MHL_H
#define MHL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define MHL_API __attribute__((visibility("default")))
#else
#define MHL_API
#endif

typedef enum mhl_status {
    MHL_OK = 0,
    MHL_ERR_PARSE = 1,       /* malformed JSON, message carries the byte offset */
    MHL_ERR_SCHEMA = 2,      /* well-formed but not a valid problem */
    MHL_ERR_DIMENSION = 3,   /* shapes do not agree */
    MHL_ERR_UNSUPPORTED = 4, /* unknown kind */
    MHL_ERR_MATH = 5,        /* precondition of a library operation */
    MHL_ERR_ARGUMENT = 6,    /* null handle or bad index */
    MHL_ERR_INTERNAL = 7
} mhl_status;

typedef enum mhl_verdict { MHL_PASS = 0, MHL_FAIL = 1, MHL_NOT_EXISTS = 2 } mhl_verdict;

typedef struct mhl_problem mhl_problem;
typedef struct mhl_report mhl_report;

MHL_API const char* mhl_version(void);
MHL_API const char* mhl_status_name(mhl_status s);
/* Message of the last failing call on this thread; empty when none. */
MHL_API const char* mhl_last_error(void);

MHL_API size_t mhl_kind_count(void);
MHL_API const char* mhl_kind_name(size_t i);

MHL_API mhl_status mhl_problem_parse(const char* text, size_t len, mhl_problem** out);
MHL_API mhl_status mhl_problem_generate(const char* kind, uint64_t seed, size_t dim, mhl_problem** out);
/* Canonical text; release with mhl_string_free. */
MHL_API mhl_status mhl_problem_serialize(const mhl_problem* p, char** out);
MHL_API const char* mhl_problem_kind(const mhl_problem* p);
MHL_API void mhl_problem_free(mhl_problem* p);

/* timing != 0 records wall time in the report. */
MHL_API mhl_status mhl_run(const mhl_problem* p, int timing, mhl_report** out);
MHL_API mhl_verdict mhl_report_verdict(const mhl_report* r);
MHL_API const char* mhl_report_digest(const mhl_report* r);
MHL_API size_t mhl_report_clause_count(const mhl_report* r);
/* Pointers stay valid while the report lives. */
MHL_API mhl_status mhl_report_clause(const mhl_report* r, size_t i, const char** name, int* ok, const char** witness);
/* machine != 0 gives canonical JSON; otherwise text at the given verbosity (0..2). */
MHL_API mhl_status mhl_report_format(const mhl_report* r, int machine, int verbosity, char** out);
MHL_API void mhl_report_free(mhl_report* r);

MHL_API void mhl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
