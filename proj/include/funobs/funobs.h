#ifndef FUNOBS_H
#define FUNOBS_H

#include <stddef.h>

#if defined(_WIN32)
#define FUNOBS_API __declspec(dllexport)
#else
#define FUNOBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum funobs_status {
  FUNOBS_OK = 0,
  FUNOBS_ERR_PARSE = 1,
  FUNOBS_ERR_DIMENSION = 2,
  FUNOBS_ERR_INVALID_ARGUMENT = 3,
  FUNOBS_ERR_NOT_PROPER = 4,
  FUNOBS_ERR_UNSTABLE = 5,
  FUNOBS_ERR_NUMERIC = 6,
  FUNOBS_ERR_INTERNAL = 7
} funobs_status;

/* Property selection for funobs_check. */
enum {
  FUNOBS_FUNCTIONAL = 1u << 0,
  FUNOBS_STRONG = 1u << 1,
  FUNOBS_STRONG_STAR = 1u << 2,
  FUNOBS_HAUTUS = 1u << 3,       /* strong and strong-star with z = x */
  FUNOBS_LEFTINV = 1u << 4,      /* strong and strong-star with z = u */
  FUNOBS_DAROUACH = 1u << 5,     /* fixed-order conditions */
  FUNOBS_ALL = FUNOBS_FUNCTIONAL | FUNOBS_STRONG | FUNOBS_STRONG_STAR
};

typedef struct funobs_system funobs_system;
typedef struct funobs_report funobs_report;
typedef struct funobs_trajectory funobs_trajectory;

FUNOBS_API const char* funobs_version(void);
/* Message of the last failed call on this thread; never NULL. */
FUNOBS_API const char* funobs_last_error(void);
FUNOBS_API const char* funobs_status_string(funobs_status status);
/* Frees strings returned through char** out-parameters. */
FUNOBS_API void funobs_string_free(char* s);

FUNOBS_API funobs_status funobs_system_parse(const char* json, funobs_system** out);
FUNOBS_API funobs_status funobs_system_load(const char* path, funobs_system** out);
FUNOBS_API void funobs_system_free(funobs_system* sys);
/* Any of the out pointers may be NULL. */
FUNOBS_API void funobs_system_dims(const funobs_system* sys, size_t* n, size_t* m, size_t* p, size_t* q);
FUNOBS_API const char* funobs_system_name(const funobs_system* sys);
FUNOBS_API funobs_status funobs_system_serialize(const funobs_system* sys, char** json_out);
/* Expected verdict from the file metadata: 1 holds, 0 fails, -1 not recorded or unknown property. */
FUNOBS_API int funobs_system_expected(const funobs_system* sys, const char* property);

/* Runs the selected decision procedures (a FUNOBS_* mask). */
FUNOBS_API funobs_status funobs_check(const funobs_system* sys, unsigned properties, funobs_report** out);
/* Builds the canonical [M N] field solution and its classification. */
FUNOBS_API funobs_status funobs_witness(const funobs_system* sys, funobs_report** out);

/* 1 when every verdict in the report holds (and, for witness reports, the
   system is solvable over the field), 0 otherwise. */
FUNOBS_API int funobs_report_all_hold(const funobs_report* r);
FUNOBS_API size_t funobs_report_verdict_count(const funobs_report* r);
/* Property name and outcome of verdict i; returns 0 when i is out of range. */
FUNOBS_API int funobs_report_verdict(const funobs_report* r, size_t i, const char** property, int* holds);
FUNOBS_API funobs_status funobs_report_json(const funobs_report* r, char** json_out);
FUNOBS_API funobs_status funobs_report_text(const funobs_report* r, char** text_out);
FUNOBS_API void funobs_report_free(funobs_report* r);

/* observer_json: {"G","H","Q","R"} or {"N": ...}; scenario_json may be NULL for defaults. */
FUNOBS_API funobs_status funobs_simulate(const funobs_system* sys, const char* observer_json, const char* scenario_json,
                                         funobs_trajectory** out);
FUNOBS_API void funobs_trajectory_summary(const funobs_trajectory* t, int* decayed, double* final_sup, double* threshold,
                                          double* horizon, size_t* samples);
/* CSV keeps every `every`-th sample plus the last one; 0 or 1 keeps all. */
FUNOBS_API funobs_status funobs_trajectory_csv(const funobs_trajectory* t, size_t every, char** csv_out);
FUNOBS_API void funobs_trajectory_free(funobs_trajectory* t);

#ifdef __cplusplus
}
#endif

#endif
