/* C interface to the tetrazero library: exact Dehn-invariant tests, angle
 * span dimensions, symmetry orbits, family generators and the dimension-five
 * edge bound for integer-edge tetrahedra.
 *
 * Conventions:
 *  - edge tuples are six positive integers in the order (12, 34, 13, 24, 14, 23)
 *  - functions return tz_status; results come back through out-parameters
 *  - strings returned through char** are heap-allocated JSON; release them
 *    with tz_string_free
 *  - tz_report is an opaque handle released with tz_report_free
 */
#ifndef TETRAZERO_H
#define TETRAZERO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tz_status {
    TZ_OK = 0,
    TZ_EINVAL = 1,      /* malformed arguments */
    TZ_EDEGENERATE = 2, /* input is not a nondegenerate tetrahedron */
    TZ_EVERIFY = 3,     /* an independent cross-check failed */
    TZ_EINTERNAL = 4
} tz_status;

typedef struct tz_report tz_report;

/* Most recent error message on this thread, or an empty string. */
const char* tz_last_error(void);

const char* tz_version(void);

void tz_string_free(char* s);

/* ---- single-tuple pipeline -------------------------------------------- */

typedef struct tz_check_options {
    int cross_check; /* verify against the numeric angle-sum oracle */
} tz_check_options;

tz_status tz_check(const int64_t edges[6], const tz_check_options* opts, tz_report** out);

void tz_report_free(tz_report* r);
int tz_report_valid(const tz_report* r);
int tz_report_dehn_zero(const tz_report* r);
/* -1 when the field is absent (invalid tuple). */
int tz_report_dimension(const tz_report* r);
/* Returns 1 and fills order/power when the product matched a root of unity. */
int tz_report_matched_root(const tz_report* r, int* order, int* power);
/* Fill six (three) entries; returns 0 for invalid tuples. */
int tz_report_canonical_form(const tz_report* r, int64_t out[6]);
int tz_report_opposite_sums(const tz_report* r, int64_t out[3]);
int tz_report_regge_orbit_size(const tz_report* r);
char* tz_report_json(const tz_report* r);
char* tz_report_csv_row(const tz_report* r);
char* tz_csv_header(void);

/* ---- enumeration ------------------------------------------------------- */

typedef struct tz_scan_options {
    int64_t max_edge;
    int workers;     /* >= 1 */
    int dedupe;      /* 0 none, 1 s4, 2 s4+regge */
    int emit_all;    /* also emit invalid / non-zero tuples */
    int cross_check;
} tz_scan_options;

/* Return nonzero from the callback to abort the scan (maps to TZ_OK). */
typedef int (*tz_report_callback)(const tz_report* r, void* user);

tz_status tz_scan(const tz_scan_options* opts, tz_report_callback cb, void* user);

/* ---- analysis ---------------------------------------------------------- */

/* Span dimension plus the valuation matrix rows, as JSON. */
tz_status tz_dim_json(const int64_t edges[6], char** out);

/* Orbit under vertex relabelings and/or Regge moves. group: 0 s4, 1 regge,
 * 2 both. up_to_s4 reports canonical representatives. */
tz_status tz_orbit_json(const int64_t edges[6], int group, int up_to_s4, char** out);

/* Family instances as JSON. family is one of "h1", "h2", "h3", "new-t",
 * "new-tp"; parameter is a rational literal like "16" or "1/2" (used by h1 and
 * the new families); max_denominator drives the h2/h3 searches. */
tz_status tz_family_json(const char* family, const char* parameter, int64_t max_denominator,
                         char** out);

/* The dimension-five edge-length bound report. */
tz_status tz_bound_case5_json(int precision_digits, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TETRAZERO_H */
