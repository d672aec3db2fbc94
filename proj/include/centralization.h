/* C interface to the centralization analytics core.
 *
 * All functions return centra_status (CENTRA_OK on success); on failure
 * centra_last_error() holds a thread-local diagnostic. Graphs are opaque
 * handles owned by the caller and released with centra_graph_free(). Strings
 * returned through out-parameters are heap-allocated and released with
 * centra_string_free().
 */

#ifndef CENTRALIZATION_H
#define CENTRALIZATION_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct centra_graph centra_graph;

typedef enum centra_status {
    CENTRA_OK = 0,
    CENTRA_ERR_INVALID_ARGUMENT = 1, /* precondition or argument rejected */
    CENTRA_ERR_PARSE = 2,            /* malformed edge-list input */
    CENTRA_ERR_IO = 3,               /* file could not be read or written */
    CENTRA_ERR_INTERNAL = 4          /* invariant failure inside the core */
} centra_status;

const char* centra_status_name(centra_status status);

/* Thread-local message describing the most recent failure in this thread. */
const char* centra_last_error(void);

const char* centra_version(void);

/* ---- graphs ------------------------------------------------------- */

/* explicit_n < 0 infers the node count as 1 + max node id (0 if no edges).
 * Edge-list format: "u v" per line, '#' comments, blank lines ignored. */
centra_status centra_graph_from_edge_list_text(const char* text, int64_t explicit_n,
                                               centra_graph** out);
centra_status centra_graph_from_edge_list_file(const char* path, int64_t explicit_n,
                                               centra_graph** out);

/* topology: star | ring | complete | star-perturbed | ring-perturbed |
 * complete-perturbed. Deterministic; seed reserved for future variants. */
centra_status centra_graph_generate(const char* topology, int64_t n, uint64_t seed,
                                    centra_graph** out);

centra_status centra_graph_saturate(const centra_graph* g, int64_t node, centra_graph** out);
centra_status centra_graph_largest_component(const centra_graph* g, centra_graph** out);

void centra_graph_free(centra_graph* g);

int64_t centra_graph_node_count(const centra_graph* g);
int64_t centra_graph_edge_count(const centra_graph* g);
int centra_graph_is_connected(const centra_graph* g);

/* Copies up to capacity edges into u_out/v_out; *written gets the count. */
centra_status centra_graph_edges(const centra_graph* g, int64_t* u_out, int64_t* v_out,
                                 int64_t capacity, int64_t* written);

centra_status centra_graph_to_edge_list_text(const centra_graph* g, char** out_text);
centra_status centra_graph_to_edge_list_file(const centra_graph* g, const char* path);

/* ---- measures ------------------------------------------------------ */

int centra_measure_count(void); /* 11 */
const char* centra_measure_name(int index);
centra_status centra_measure_id(const char* name, int* out_index);

/* value lands in [0,1]; *degenerate is 1 when a small-n/zero-m convention
 * defined the value as 0. */
centra_status centra_evaluate(const centra_graph* g, int measure, double* value, int* degenerate);

/* ---- report artifacts ---------------------------------------------- */
/* format is "csv" or "json". */

centra_status centra_sweep_report(const char* measures_csv, const char* topologies_csv,
                                  int64_t n_start, int64_t n_stop, int64_t n_step, uint64_t seed,
                                  const char* format, char** out);

/* Axiom-compliance matrix, per-cell witness log and counterexample
 * verification; any out pointer may be NULL to skip that artifact. */
centra_status centra_axioms_report(int64_t max_enum_n, int64_t permutations, uint64_t seed,
                                   const char* format, char** out_table, char** out_witnesses,
                                   char** out_counterexamples);

centra_status centra_behavior_report(int64_t n_start, int64_t n_stop, int64_t n_step,
                                     uint64_t seed, const char* format, char** out);

centra_status centra_score_report(double w_axiomatic, double w_numerical, int64_t max_enum_n,
                                  int64_t permutations, int64_t n_start, int64_t n_stop,
                                  int64_t n_step, uint64_t seed, const char* format, char** out);

void centra_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CENTRALIZATION_H */
