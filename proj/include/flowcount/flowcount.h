#ifndef FLOWCOUNT_FLOWCOUNT_H
#define FLOWCOUNT_FLOWCOUNT_H

#include <stddef.h>

#if defined(FLOWCOUNT_BUILDING_LIBRARY)
#define FC_API __attribute__((visibility("default")))
#else
#define FC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  /* Null pointer or malformed argument to the API itself. */
  FC_ERR_ARGUMENT = 1,
  /* Input rejected: bad JSON, nonzero excess sum, uncapacitated cycle, ... */
  FC_ERR_VALIDATION = 2,
  FC_ERR_INTERNAL = 3,
  FC_ERR_OUT_OF_MEMORY = 4
} fc_status;

typedef struct fc_network fc_network;
typedef struct fc_result fc_result;

typedef struct fc_options {
  /* Worker threads for the residue sum; 0 or 1 runs serially. */
  unsigned workers;
} fc_options;

/* Networks. Strings returned through char** are freed with fc_string_free. */
FC_API fc_status fc_network_from_json(const char* json, fc_network** out);
FC_API void fc_network_destroy(fc_network* net);
FC_API fc_status fc_network_to_json(const fc_network* net, char** out);
/* Diagnostics report as JSON; FC_OK even when the network has problems. */
FC_API fc_status fc_network_validate(const fc_network* net, char** report);

/* Counting. options may be NULL. */
FC_API fc_status fc_count(const fc_network* net, const fc_options* options, fc_result** out);
FC_API fc_status fc_volume(const fc_network* net, const fc_options* options, fc_result** out);
FC_API fc_status fc_polynomial(const fc_network* net, const fc_options* options, fc_result** out);
FC_API fc_status fc_ehrhart(const fc_network* net, const fc_options* options, fc_result** out);
/* Integer vectors are passed as decimal strings. */
FC_API fc_status fc_kostant(const char* const* excess, size_t length, const fc_options* options, fc_result** out);
FC_API fc_status fc_transport(const char* const* rows, size_t row_count, const char* const* cols, size_t col_count,
                              const fc_options* options, fc_result** out);

/* JSON-valued results. */
FC_API fc_status fc_reduce(const fc_network* net, fc_result** out);
FC_API fc_status fc_chambers(const fc_network* net, fc_result** out);

/* Brute-force oracle. */
FC_API fc_status fc_oracle_count(const fc_network* net, fc_result** out);
FC_API fc_status fc_oracle_enumerate(const fc_network* net, size_t limit, fc_result** out);

/* Result accessors. The value string is owned by the result. */
FC_API const char* fc_result_value(const fc_result* result);
/* 1 when the value is a JSON document, 0 for a plain number or polynomial. */
FC_API int fc_result_is_json(const fc_result* result);
/* Number of special permutations summed over, or -1 when not applicable. */
FC_API long long fc_result_sp_size(const fc_result* result);
FC_API double fc_result_seconds(const fc_result* result);
FC_API void fc_result_destroy(fc_result* result);

/* Message of the last failed call on this thread ("" if none). */
FC_API const char* fc_last_error(void);
FC_API void fc_string_free(char* s);
FC_API const char* fc_version(void);

#ifdef __cplusplus
}
#endif

#endif
