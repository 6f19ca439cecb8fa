/*
 * C interface to the ioc library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Functions that can fail return an
 * ioc_status; on failure ioc_last_error() describes the problem (the message
 * is thread-local and valid until the next failing call on that thread).
 * Strings returned as `char*` are owned by the caller and released with
 * ioc_string_free; strings returned as `const char*` are borrowed from the
 * handle they came from.
 */
#ifndef IOC_IOC_H
#define IOC_IOC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(IOC_BUILDING_LIBRARY)
#define IOC_API __attribute__((visibility("default")))
#else
#define IOC_API
#endif

typedef enum ioc_status {
    IOC_OK = 0,
    IOC_INVALID_VERTEX = 1,
    IOC_EMPTY_GRAPH = 2,
    IOC_DISCONNECTED = 3,
    IOC_NOT_A_TREE = 4,
    IOC_NOT_PRESENT = 5,
    IOC_UNIVERSE_MISMATCH = 6,
    IOC_NO_CODE = 7,
    IOC_TOO_LARGE = 8,
    IOC_BAD_PARAM = 9,
    IOC_NOT_IN_FAMILY = 10,
    IOC_TOO_SMALL = 11,
    IOC_DEGREE_EXCEEDED = 12,
    IOC_FOUR_CYCLE_PRESENT = 13,
    IOC_PARSE_ERROR = 14,
    IOC_INTERNAL = 15,
    IOC_NULL_ARGUMENT = 16
} ioc_status;

typedef struct ioc_graph ioc_graph;
typedef struct ioc_vertex_set ioc_vertex_set;
typedef struct ioc_solve_result ioc_solve_result;
typedef struct ioc_construction ioc_construction;
typedef struct ioc_family ioc_family;
typedef struct ioc_audit_report ioc_audit_report;

IOC_API const char* ioc_status_name(ioc_status status);
IOC_API const char* ioc_last_error(void);
IOC_API void ioc_string_free(char* s);

/* ---- graphs ---- */

/* endpoints holds 2*edge_count vertex indices. */
IOC_API ioc_status ioc_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count, ioc_graph** out);
/* graph6 or edge-list text, detected automatically. */
IOC_API ioc_status ioc_graph_parse(const char* text, ioc_graph** out);
IOC_API ioc_status ioc_graph_read_file(const char* path, ioc_graph** out);
IOC_API void ioc_graph_free(ioc_graph* g);

IOC_API size_t ioc_graph_order(const ioc_graph* g);
IOC_API size_t ioc_graph_size(const ioc_graph* g);
IOC_API size_t ioc_graph_max_degree(const ioc_graph* g);
IOC_API int ioc_graph_is_connected(const ioc_graph* g);
IOC_API int ioc_graph_is_tree(const ioc_graph* g);
IOC_API int ioc_graph_is_twin_free(const ioc_graph* g);
IOC_API int ioc_graph_has_four_cycle(const ioc_graph* g);
IOC_API char* ioc_graph_to_graph6(const ioc_graph* g);
IOC_API char* ioc_graph_to_edge_list(const ioc_graph* g);
IOC_API ioc_status ioc_graph_canonical_graph6(const ioc_graph* g, char** out);

/* ---- vertex sets ---- */

IOC_API ioc_status ioc_vertex_set_create(size_t universe, const uint32_t* members, size_t count,
                                         ioc_vertex_set** out);
/* Vertex indices separated by commas and/or whitespace. */
IOC_API ioc_status ioc_vertex_set_parse(size_t universe, const char* text, ioc_vertex_set** out);
IOC_API void ioc_vertex_set_free(ioc_vertex_set* s);
IOC_API size_t ioc_vertex_set_universe(const ioc_vertex_set* s);
IOC_API size_t ioc_vertex_set_size(const ioc_vertex_set* s);
IOC_API int ioc_vertex_set_contains(const ioc_vertex_set* s, uint32_t v);
/* Copies up to capacity members in increasing order; returns the set size. */
IOC_API size_t ioc_vertex_set_members(const ioc_vertex_set* s, uint32_t* buffer, size_t capacity);

/* ---- verification ---- */

typedef struct ioc_verdict {
    int ok;
    int has_undominated;
    uint32_t undominated;
    int has_collision;
    uint32_t collision_u;
    uint32_t collision_v;
} ioc_verdict;

IOC_API ioc_status ioc_is_total_dominating(const ioc_graph* g, const ioc_vertex_set* code, ioc_verdict* out);
IOC_API ioc_status ioc_is_separating_open_code(const ioc_graph* g, const ioc_vertex_set* code, ioc_verdict* out);
IOC_API ioc_status ioc_is_io_code(const ioc_graph* g, const ioc_vertex_set* code, ioc_verdict* out);
IOC_API int ioc_admits_io_code(const ioc_graph* g);
IOC_API ioc_status ioc_signature(const ioc_graph* g, const ioc_vertex_set* code, uint32_t v, ioc_vertex_set** out);

/* ---- exact solver ---- */

IOC_API ioc_status ioc_solve(const ioc_graph* g, ioc_solve_result** out);
IOC_API ioc_status ioc_solve_oracle(const ioc_graph* g, size_t max_order, ioc_solve_result** out);
/* *out is NULL when no code of size <= max_size exists. */
IOC_API ioc_status ioc_solve_with_budget(const ioc_graph* g, size_t max_size, ioc_vertex_set** out);
IOC_API void ioc_solve_result_free(ioc_solve_result* r);
IOC_API size_t ioc_solve_result_gamma(const ioc_solve_result* r);
IOC_API const ioc_vertex_set* ioc_solve_result_code(const ioc_solve_result* r);
IOC_API uint64_t ioc_solve_result_nodes(const ioc_solve_result* r);
IOC_API const char* ioc_solve_result_method(const ioc_solve_result* r);
IOC_API double ioc_solve_result_wall_time_ms(const ioc_solve_result* r);

/* ---- constructive bound ---- */

/* Trees use the tree construction, other graphs the general one. */
IOC_API ioc_status ioc_construct(const ioc_graph* g, size_t delta, ioc_construction** out);
IOC_API void ioc_construction_free(ioc_construction* c);
IOC_API const ioc_vertex_set* ioc_construction_code(const ioc_construction* c);
IOC_API const char* ioc_construction_bound_status(const ioc_construction* c);
IOC_API int ioc_construction_exceptional(const ioc_construction* c);
IOC_API const char* ioc_construction_trace_json(const ioc_construction* c);
IOC_API const char* ioc_check_bound(size_t n, size_t size, size_t delta, int is_subdivided_star);

/* ---- families ---- */

/*
 * family: subdivided-star | reduced-subdivided-star | family-tree |
 *         tight-tree-pair | subcubic-cycle | star-plus-edge
 * params: comma/space separated. One integer for the stars and the pair
 *         (delta) and the cycle family (p); six integers for family-tree;
 *         a variant (G1, G2 or G3) and k for star-plus-edge.
 */
IOC_API ioc_status ioc_family_generate(const char* family, const char* params, ioc_family** out);
IOC_API void ioc_family_free(ioc_family* f);
IOC_API const ioc_graph* ioc_family_graph(const ioc_family* f);
IOC_API const char* ioc_family_name(const ioc_family* f);
/* Labels, parameters and reference code as JSON. */
IOC_API const char* ioc_family_sidecar_json(const ioc_family* f);
/* JSON {"root":..,"vector":[..]} or "null" when the tree is not in the family. */
IOC_API ioc_status ioc_recognize_family(const ioc_graph* g, char** json_out);

/* ---- enumeration and audits ---- */

IOC_API ioc_status ioc_count_trees(size_t n, size_t* out);

typedef struct ioc_audit_options {
    size_t n_min;
    size_t n_max;
    size_t delta;            /* 0: max(3, maximum degree) per instance */
    size_t oracle_max_order; /* 0: no oracle cross-check */
    size_t samples_per_order;
    uint64_t seed;
    unsigned workers;        /* 0: IOC_WORKERS or 1 */
} ioc_audit_options;

IOC_API void ioc_audit_options_init(ioc_audit_options* options);
IOC_API ioc_status ioc_audit_trees(const ioc_audit_options* options, ioc_audit_report** out);
IOC_API ioc_status ioc_audit_graphs(const ioc_audit_options* options, ioc_audit_report** out);
IOC_API void ioc_audit_report_free(ioc_audit_report* r);
IOC_API const char* ioc_audit_report_csv(const ioc_audit_report* r);
IOC_API const char* ioc_audit_report_summary_json(const ioc_audit_report* r, int include_runtime);
IOC_API size_t ioc_audit_report_violations(const ioc_audit_report* r);
IOC_API int ioc_audit_report_ok(const ioc_audit_report* r);

IOC_API ioc_status ioc_verify_tight_families(size_t delta_max, size_t p_max, size_t p_exact_max,
                                             size_t p_decision_max, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* IOC_IOC_H */
