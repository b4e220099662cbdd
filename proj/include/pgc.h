#ifndef PGC_H
#define PGC_H

/* Planar-graph codec: C API over the C++ core.  All functions return a
 * pgc_status; details of the last failure are available from
 * pgc_last_error() (thread-local).  Objects come back as opaque handles
 * that must be released with the matching free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pgc_graph pgc_graph;

typedef enum {
    PGC_OK = 0,
    PGC_ERR_VALIDATION = 1, /* graph violates the requested property pi */
    PGC_ERR_CORRUPT = 2,    /* malformed or corrupted input data */
    PGC_ERR_USAGE = 3,      /* bad arguments */
    PGC_ERR_INTERNAL = 4
} pgc_status;

const char* pgc_last_error(void);

/* Directory for persisted base tables; NULL or "" keeps them in memory.
 * Overrides the PGC_TABLE_DIR environment variable. */
void pgc_set_table_dir(const char* dir);

/* .pg text format */
pgc_status pgc_graph_parse_pg(const char* text, size_t len, pgc_graph** out);
/* planar_mode selects the header mode word: 0 = plane, 1 = planar */
pgc_status pgc_graph_write_pg(const pgc_graph* g, int planar_mode, char** out_text);
void pgc_graph_free(pgc_graph* g);
void pgc_buffer_free(void* p);

int32_t pgc_graph_node_count(const pgc_graph* g);
int32_t pgc_graph_edge_count(const pgc_graph* g);

/* pi descriptor grammar:
 *   plane|planar,dir|undir,tri|3conn|2conn|conn|any,loops=<k>,multi=<k> */
pgc_status pgc_validate(const pgc_graph* g, const char* pi, char** violations_or_null);

/* b_enum/b_explicit <= 0 and rho <= 0 select the defaults (6, 64, 0.95). */
pgc_status pgc_encode(const pgc_graph* g, const char* pi, int b_enum, int b_explicit, double rho,
                      uint8_t** out, size_t* out_len);
pgc_status pgc_decode(const uint8_t* blob, size_t len, pgc_graph** out, int* planar_mode_out);
pgc_status pgc_stats_text(const uint8_t* blob, size_t len, char** out_text);

/* kind: triangulation | plane-connected | plane-any | multi-triangulation */
pgc_status pgc_generate(const char* kind, int32_t n, double fraction, uint64_t seed,
                        pgc_graph** out);

pgc_status pgc_table_alpha(const char* pi, int32_t n, uint64_t* alpha, int32_t* index_width);
pgc_status pgc_canonical_code(const pgc_graph* g, const char* pi, char** out_code);
pgc_status pgc_graph_equal(const pgc_graph* a, const pgc_graph* b, const char* pi,
                           int32_t* equal_out);

#ifdef __cplusplus
}
#endif

#endif /* PGC_H */
