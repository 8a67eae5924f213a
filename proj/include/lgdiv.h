/* C interface to the local-global divisibility toolkit: opaque group handles,
 * error codes, JSON reports.  All strings returned through char** are
 * allocated by the library and released with lgdiv_string_free. */
#ifndef LGDIV_H
#define LGDIV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lgdiv_group lgdiv_group;

typedef enum lgdiv_status {
    LGDIV_OK = 0,
    LGDIV_ERR_INVALID = 1,  /* malformed input, violated precondition */
    LGDIV_ERR_CAP = 2,      /* closure, search or budget cap exceeded */
    LGDIV_ERR_NOMEM = 3,
    LGDIV_ERR_INTERNAL = 4
} lgdiv_status;

/* Message for the last failing call in the current thread. */
const char* lgdiv_last_error(void);
void lgdiv_string_free(char* s);

/* Group input: {"p":5,"n":3,"generators":[[[1,0],[25,1]],...]} */
lgdiv_status lgdiv_group_from_json(const char* json, uint64_t cap, lgdiv_group** out);
/* Family spec: {"family":"n3-j-eq-m","p":5,"n":3,"i":0,"alpha":2,"theta":0} */
lgdiv_status lgdiv_group_from_family(const char* spec_json, uint64_t cap, lgdiv_group** out);
void lgdiv_group_free(lgdiv_group* g);
lgdiv_status lgdiv_group_order(const lgdiv_group* g, uint64_t* out);

/* Switches the cohomology solver to the per-element enumeration backend
 * (small groups only); used for cross-validation. */
#define LGDIV_BACKEND_ENUMERATION 1u

lgdiv_status lgdiv_analyze(const lgdiv_group* g, uint32_t flags, char** out);
lgdiv_status lgdiv_h1loc(const lgdiv_group* g, uint32_t flags, char** out);
lgdiv_status lgdiv_isogeny(const lgdiv_group* g, char** out);
lgdiv_status lgdiv_family_certify(const char* spec_json, uint64_t cap, char** out);
lgdiv_status lgdiv_grid(const char* config_json, char** out);
lgdiv_status lgdiv_search(const char* options_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LGDIV_H */
