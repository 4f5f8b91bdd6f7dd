/* cubicfolds: classification engine for singularity configurations on cubic
 * threefolds.  C API over opaque handles; every function returns a cf_status
 * and writes results through out parameters.  Strings returned through
 * char** out parameters are heap-allocated and must be released with
 * cf_string_free.  Handles are released with the matching *_free call.
 * The library keeps a thread-local message for the last error. */

#ifndef CUBICFOLDS_H
#define CUBICFOLDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CF_API __declspec(dllexport)
#else
#define CF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
    CF_OK = 0,
    CF_ERROR_PARSE = 1,    /* malformed input text */
    CF_ERROR_DOMAIN = 2,   /* input outside an operation's domain */
    CF_ERROR_LIMIT = 3,    /* documented size bound exceeded */
    CF_ERROR_DATA = 4,     /* embedded table data failed validation */
    CF_ERROR_GATE = 5,     /* versality gate violated (mu > 15) */
    CF_ERROR_INVALID = 6,  /* null handle or bad argument */
    CF_ERROR_INTERNAL = 7
} cf_status;

typedef struct cf_config cf_config;    /* canonical singularity configuration */
typedef struct cf_graph cf_graph;      /* simple graph on <= 64 vertices */
typedef struct cf_lattice cf_lattice;  /* nondegenerate integral lattice */

CF_API const char* cf_version(void);
/* Message for the most recent error on this thread; never NULL. */
CF_API const char* cf_last_error(void);
CF_API void cf_string_free(char* s);

/* ---------------- configurations ---------------- */

/* Parses notation like "2A3+A2+2A1"; aliases P8/X9/J10 and T333/T244/T236
 * are accepted on input, canonical text uses the aliases. */
CF_API cf_status cf_config_parse(const char* text, cf_config** out);
CF_API void cf_config_free(cf_config* c);
CF_API cf_status cf_config_format(const cf_config* c, char** out);
CF_API cf_status cf_config_mu(const cf_config* c, int* out);
CF_API cf_status cf_config_count(const cf_config* c, int* out);
CF_API cf_status cf_config_is_ade(const cf_config* c, int* out);

/* ---------------- graphs ---------------- */

/* name: "gamma", "delta", or "e6tilde". */
CF_API cf_status cf_graph_builtin(const char* name, cf_graph** out);
/* Edge-list text: header "n <count>", one "u v" pair per line, 0-based. */
CF_API cf_status cf_graph_from_edge_list(const char* text, cf_graph** out);
CF_API void cf_graph_free(cf_graph* g);
CF_API cf_status cf_graph_vertex_count(const cf_graph* g, int* out);
CF_API cf_status cf_graph_edge_count(const cf_graph* g, int* out);

/* Keeps the vertices whose labels appear in the comma-separated list. */
CF_API cf_status cf_graph_induced_by_labels(const cf_graph* g, const char* labels,
                                            cf_graph** out);
/* Dynkin diagram union of a pure ADE configuration. */
CF_API cf_status cf_graph_config_diagram(const cf_config* c, cf_graph** out);
/* Canonical configuration text, or "not-ADE". */
CF_API cf_status cf_graph_classify(const cf_graph* g, char** out);
CF_API cf_status cf_graph_is_induced_subgraph(const cf_graph* pattern, const cf_graph* host,
                                              int* out);
/* Newline-separated canonical configurations over all induced subgraphs. */
CF_API cf_status cf_graph_enumerate_ade(const cf_graph* host, char** out);
CF_API cf_status cf_graph_are_isomorphic(const cf_graph* a, const cf_graph* b, int* out);
CF_API cf_status cf_graph_automorphism_count(const cf_graph* g, uint64_t* out);
CF_API cf_status cf_graph_to_dot(const cf_graph* g, char** out);

/* ---------------- deformation order ---------------- */

CF_API cf_status cf_versality_gate(const cf_config* c, int* out);
/* override_gate != 0 evaluates the relation even when mu(big) > 15. */
CF_API cf_status cf_deforms_to(const cf_config* big, const cf_config* small,
                               int override_gate, int* out);
/* seeds: comma-separated configurations.  Newline-separated canonical result,
 * optionally restricted to its maximal elements. */
CF_API cf_status cf_closure(const char* seeds, int maximal_only, char** out);
/* Types reachable in the unimodal adjacency order, comma-separated. */
CF_API cf_status cf_unimodal_reachable(const char* type_token, char** out);
/* Hasse diagram of deforms_to on the listed configurations. */
CF_API cf_status cf_poset_dot(const char* configs, char** out);
CF_API cf_status cf_poset_edges(const char* configs, char** out);

/* ---------------- lattices ---------------- */

/* spec: a pure ADE configuration, "U", or "T" (the rank-16 Milnor lattice
 * 3D4 + 2U of the cone over a cubic surface). */
CF_API cf_status cf_lattice_create(const char* spec, cf_lattice** out);
CF_API cf_status cf_lattice_from_text(const char* text, cf_lattice** out);
CF_API void cf_lattice_free(cf_lattice* l);
CF_API cf_status cf_lattice_rank(const cf_lattice* l, int* out);
CF_API cf_status cf_lattice_to_text(const cf_lattice* l, char** out);
CF_API cf_status cf_lattice_signature(const cf_lattice* l, int* n_plus, int* n_minus);
/* Invariant factors of the discriminant group, "2,2,4" style; "1" if trivial. */
CF_API cf_status cf_lattice_discriminant(const cf_lattice* l, char** out);
/* JSON {schema, results:[{obstruction, fires, witness}...]} for embedding
 * s into host. */
CF_API cf_status cf_lattice_obstruction_json(const cf_lattice* s, const cf_lattice* host,
                                             char** out);

/* ---------------- Picard arithmetic on F2 ---------------- */

CF_API cf_status cf_picard_intersect(long long a1, long long b1, long long a2, long long b2,
                                     long long* out);
/* Exact rational as text ("3", "-1/2"). */
CF_API cf_status cf_picard_genus(long long a, long long b, char** out);
/* Integer roots a of genus(a*s + b*f) = g, comma-separated (may be empty). */
CF_API cf_status cf_picard_solve_genus(long long b, long long g, char** out);
CF_API cf_status cf_picard_splittings_json(long long a, long long b, int parts, char** out);

/* ---------------- verification ---------------- */

/* check_id NULL or empty runs every check plus the coverage assertion.
 * format: 0 text, 1 JSON.  all_passed receives 1 when no check failed. */
CF_API cf_status cf_verify(const char* check_id, int format, char** report, int* all_passed);
/* Comma-separated list of known check ids. */
CF_API cf_status cf_verify_check_ids(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CUBICFOLDS_H */
