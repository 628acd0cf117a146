/* partfreq: C API for the part-frequency matrix library.
 *
 * Exact integer partition transforms (Glaisher transposition, antidiagonal
 * rotation, orbit statistics), truncated q-series expansion, and executable
 * identity/congruence checks, exposed through opaque handles and status
 * codes. All returned strings are owned by the handle they came from and
 * stay valid until that handle is freed. On any failure the thread-local
 * message from pf_last_error() describes what went wrong.
 */
#ifndef PARTFREQ_H
#define PARTFREQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
    PF_OK = 0,
    PF_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or unknown name */
    PF_ERROR_PARSE = 2,            /* malformed partition/spec/params text */
    PF_ERROR_PRECONDITION = 3,     /* input outside an operation's domain */
    PF_ERROR_OVERFLOW = 4,         /* result exceeds 64-bit range */
    PF_ERROR_INTERNAL = 5
} pf_status;

const char* pf_status_name(pf_status status);
const char* pf_last_error(void);

/* ---- partitions ---- */

typedef struct pf_partition pf_partition;
typedef struct pf_partition_list pf_partition_list;

/* Parts need not be sorted; they are ordered nonincreasing internally. */
pf_status pf_partition_create(const uint64_t* parts, size_t count, pf_partition** out);
/* Comma-separated positive integers, e.g. "20,5,5,4". Empty string is the
 * empty partition. *reordered (optional) is set to 1 if sorting changed the
 * given order. */
pf_status pf_partition_parse(const char* text, int* reordered, pf_partition** out);
void pf_partition_free(pf_partition* p);

size_t pf_partition_size(const pf_partition* p);
uint64_t pf_partition_part(const pf_partition* p, size_t index);
uint64_t pf_partition_weight(const pf_partition* p);
/* Comma-separated canonical form; owned by the handle. */
const char* pf_partition_str(const pf_partition* p);

/* ---- transforms (modulus m >= 2) ---- */

pf_status pf_glaisher(const pf_partition* p, uint64_t m, pf_partition** out);
pf_status pf_rotate(const pf_partition* p, uint64_t m, uint64_t steps, pf_partition** out);
pf_status pf_orbit_size(const pf_partition* p, uint64_t m, uint64_t* out);
/* The whole rotation cycle: p, rho(p), ..., back to p (excluded). */
pf_status pf_orbit_cycle(const pf_partition* p, uint64_t m, pf_partition_list** out);
pf_status pf_ady_forward(const pf_partition* p, uint64_t m, pf_partition** out);
pf_status pf_ady_inverse(const pf_partition* p, uint64_t m, pf_partition** out);

size_t pf_partition_list_size(const pf_partition_list* list);
const pf_partition* pf_partition_list_get(const pf_partition_list* list, size_t index);
void pf_partition_list_free(pf_partition_list* list);

/* ---- orbit tables ---- */

typedef struct pf_orbit_table pf_orbit_table;

pf_status pf_orbit_table_compute(uint64_t n, uint64_t m, pf_orbit_table** out);
size_t pf_orbit_table_rows(const pf_orbit_table* t);
uint64_t pf_orbit_table_orbit_size(const pf_orbit_table* t, size_t row);
uint64_t pf_orbit_table_p_count(const pf_orbit_table* t, size_t row);
uint64_t pf_orbit_table_o_count(const pf_orbit_table* t, size_t row);
void pf_orbit_table_free(pf_orbit_table* t);

/* ---- q-series ---- */

typedef struct pf_series pf_series;

/* Expands a product spec such as "(q^2;q^2)^2 / ((q;q) (q^4;q^4))" to the
 * given truncation order. Coefficients are exact big integers, returned as
 * decimal strings. */
pf_status pf_series_expand(const char* product_spec, uint64_t order, pf_series** out);
pf_status pf_series_mod(const pf_series* s, uint64_t modulus, pf_series** out);
uint64_t pf_series_order(const pf_series* s);
const char* pf_series_coeff(const pf_series* s, uint64_t exponent);
void pf_series_free(pf_series* s);

/* p(n) as a decimal string; owned by the library's thread-local buffer and
 * valid until the next pf_partition_count call on the same thread. */
const char* pf_partition_count(uint64_t n);

/* ---- identity and congruence checks ---- */

typedef struct pf_report pf_report;

/* Known names: "pmm", "orbit1", "orbit2", "theorem4", "remark4",
 * "corollary8", "congruence", "ady". params_json carries the parameters,
 * e.g. {"m":5,"order":40} or {"A":5,"B":4,"C":5,"m":5,"nmax":39}.
 * A report is produced even when the check's verdict is a failure; the
 * status is nonzero only when the check could not run at all. */
pf_status pf_check_run(const char* name, const char* params_json, pf_report** out);
int pf_report_pass(const pf_report* r);
/* Full structured result: {"name", "params", "pass", "witness",
 * "mismatches":[{"where","lhs","rhs"}], "summary", "rows"}. */
const char* pf_report_json(const pf_report* r);
void pf_report_free(pf_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PARTFREQ_H */
