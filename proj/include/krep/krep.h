/*
 * krep C API.
 *
 * Opaque handles own C++ objects inside libkrep. Every fallible call returns
 * a krep_status; on failure krep_last_error() describes the problem (per
 * thread, valid until the next failing call). Strings handed out by the
 * library are released with krep_string_free.
 */
#ifndef KREP_KREP_H
#define KREP_KREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(KREP_BUILDING_LIBRARY)
#define KREP_API __attribute__((visibility("default")))
#else
#define KREP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum krep_status {
  KREP_OK = 0,
  KREP_ERR_INVALID_ARGUMENT = 1,
  KREP_ERR_PARSE = 2,
  KREP_ERR_IO = 3,
  KREP_ERR_NOT_LINEAR = 4,
  KREP_ERR_RETRIES_EXHAUSTED = 5,
  KREP_ERR_PARAMETER_UNDERFLOW = 6,
  KREP_ERR_CAP_EXCEEDED = 7,
  KREP_ERR_INTERNAL = 8
} krep_status;

typedef enum krep_mode { KREP_MODE_GENERAL = 0, KREP_MODE_LINEAR = 1 } krep_mode;

typedef struct krep_hypergraph krep_hypergraph;
typedef struct krep_decomposition krep_decomposition;
typedef struct krep_representation krep_representation;
typedef struct krep_report krep_report;
typedef struct krep_oracle_result krep_oracle_result;
typedef struct krep_count_report krep_count_report;

KREP_API const char* krep_last_error(void);
KREP_API const char* krep_status_name(krep_status status);
KREP_API void krep_string_free(char* text);

/* Hypergraphs (.hg) */
KREP_API krep_status krep_hypergraph_parse(const char* text, krep_hypergraph** out);
KREP_API krep_status krep_hypergraph_read(const char* path, krep_hypergraph** out);
KREP_API krep_status krep_hypergraph_write(const krep_hypergraph* graph, const char* path);
KREP_API krep_status krep_hypergraph_to_string(const krep_hypergraph* graph, char** out);
KREP_API void krep_hypergraph_free(krep_hypergraph* graph);
KREP_API uint32_t krep_hypergraph_rank(const krep_hypergraph* graph);
KREP_API uint32_t krep_hypergraph_num_vertices(const krep_hypergraph* graph);
KREP_API size_t krep_hypergraph_num_edges(const krep_hypergraph* graph);
KREP_API uint32_t krep_hypergraph_max_degree(const krep_hypergraph* graph);
KREP_API int krep_hypergraph_is_linear(const krep_hypergraph* graph);

KREP_API krep_status krep_gen_union_of_matchings(uint32_t n, uint32_t r, uint32_t delta,
                                                 uint64_t seed, krep_hypergraph** out);
/* max_rejections = 0 selects the default 50 * n * delta. */
KREP_API krep_status krep_gen_random_linear(uint32_t n, uint32_t r, uint32_t delta,
                                            uint64_t seed, uint64_t max_rejections,
                                            krep_hypergraph** out);

/* Matching decompositions (.dec) */
KREP_API krep_status krep_decompose(const krep_hypergraph* graph, krep_decomposition** out);
KREP_API uint32_t krep_decomposition_size(const krep_decomposition* decomposition);
KREP_API krep_status krep_decomposition_verify(const krep_hypergraph* graph,
                                               const krep_decomposition* decomposition,
                                               int* valid);
KREP_API krep_status krep_decomposition_to_string(const krep_decomposition* decomposition,
                                                  char** out);
KREP_API void krep_decomposition_free(krep_decomposition* decomposition);

/* Representations (.rep) */
typedef struct krep_build_options {
  uint32_t max_family_retries;
  uint32_t max_build_retries;
  double constant_scale;
  int verify;
  unsigned threads;
} krep_build_options;

KREP_API krep_build_options krep_build_options_default(void);
KREP_API krep_status krep_build(const krep_hypergraph* graph, krep_mode mode, uint64_t seed,
                                const krep_build_options* options,
                                krep_representation** out);
KREP_API krep_status krep_representation_read(const char* path, krep_representation** out);
KREP_API krep_status krep_representation_write(const krep_representation* rep,
                                               const char* path);
KREP_API krep_status krep_representation_to_string(const krep_representation* rep,
                                                   char** out);
KREP_API void krep_representation_free(krep_representation* rep);
KREP_API uint64_t krep_representation_k(const krep_representation* rep);
KREP_API uint64_t krep_representation_ground_size(const krep_representation* rep);
KREP_API uint32_t krep_representation_matching_count(const krep_representation* rep);
KREP_API krep_status krep_intersection_count(const krep_representation* rep,
                                             const uint32_t* tuple, size_t size,
                                             uint64_t* out);
KREP_API krep_status krep_check_size_against_bound(const krep_representation* rep,
                                                   const krep_hypergraph* graph,
                                                   int* within);

/* Verification */
KREP_API krep_status krep_verify(const krep_hypergraph* graph, const krep_representation* rep,
                                 unsigned threads, krep_report** out);
KREP_API krep_status krep_sampled_verify(const krep_hypergraph* graph,
                                         const krep_representation* rep,
                                         uint64_t sample_count, uint64_t seed,
                                         krep_report** out);
KREP_API int krep_report_valid(const krep_report* report);
KREP_API int krep_report_exhaustive(const krep_report* report);
KREP_API uint64_t krep_report_checked(const krep_report* report);
KREP_API uint64_t krep_report_violation_count(const krep_report* report);
KREP_API krep_status krep_report_to_string(const krep_report* report, char** out);
KREP_API void krep_report_free(krep_report* report);

/* Exact search. k = 0 asks for the minimum over all thresholds. */
KREP_API krep_status krep_exact(const krep_hypergraph* graph, uint64_t k, uint32_t max_t,
                                uint32_t max_vertices, krep_oracle_result** out);
KREP_API uint32_t krep_oracle_value(const krep_oracle_result* result);
KREP_API uint64_t krep_oracle_witness_k(const krep_oracle_result* result);
KREP_API krep_status krep_oracle_to_string(const krep_oracle_result* result,
                                           uint32_t num_vertices, char** out);
KREP_API void krep_oracle_free(krep_oracle_result* result);

/* Counting lower bound */
KREP_API krep_status krep_count_matchings(uint32_t n, uint32_t r, char** decimal);
KREP_API krep_status krep_bounds(uint64_t n, uint64_t r, uint64_t delta,
                                 krep_count_report** out);
KREP_API int krep_bounds_argument_holds(const krep_count_report* report);
KREP_API double krep_bounds_threshold(const krep_count_report* report);
KREP_API krep_status krep_bounds_to_string(const krep_count_report* report, char** out);
KREP_API krep_status krep_bounds_to_csv(const krep_count_report* report, int header,
                                        char** out);
KREP_API void krep_bounds_free(krep_count_report* report);
/* First n in [max(r, delta), max_n] where the counting argument holds; 0 if
 * none. *regression is the first later n where it fails again, or 0. */
KREP_API krep_status krep_bounds_scan(uint64_t r, uint64_t delta, uint64_t max_n,
                                      uint64_t* first, uint64_t* first_intermediate,
                                      uint64_t* regression);

#ifdef __cplusplus
}
#endif

#endif /* KREP_KREP_H */
