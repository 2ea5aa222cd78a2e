#ifndef GREENBRIDGES_H
#define GREENBRIDGES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum GbpStatus {
  /**
   * Success.
   */
  GbpStatus_Ok = 0,
  /**
   * A null pointer, invalid UTF-8, or an argument violating a precondition.
   */
  GbpStatus_InvalidArgument = 1,
  /**
   * The file could not be read or written.
   */
  GbpStatus_IoError = 2,
  /**
   * The file contents are malformed.
   */
  GbpStatus_ParseError = 3,
  /**
   * Some habitat cannot be connected; no solution exists.
   */
  GbpStatus_Infeasible = 4,
  /**
   * The requested solver does not apply to the instance.
   */
  GbpStatus_Unsupported = 5,
  /**
   * The time limit expired without a feasible incumbent.
   */
  GbpStatus_Timeout = 6,
} GbpStatus;

/**
 * Opaque problem instance handle.
 */
typedef struct GbpInstance GbpInstance;

/**
 * Opaque solution handle.
 */
typedef struct GbpSolution GbpSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *gbp_last_error_message(void);

/**
 * Parses an instance file. On success writes a new handle to `out`.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GbpStatus gbp_instance_parse(const char *path, struct GbpInstance **out);

/**
 * Parses an instance from an in-memory string.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GbpStatus gbp_instance_from_string(const char *text, struct GbpInstance **out);

/**
 * Releases an instance handle. Null is ignored.
 *
 * # Safety
 * `inst` must be null or a handle returned by this library, freed once.
 */
void gbp_instance_free(struct GbpInstance *inst);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
uintptr_t gbp_instance_vertex_count(const struct GbpInstance *inst);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
uintptr_t gbp_instance_edge_count(const struct GbpInstance *inst);

/**
 * Number of habitats; 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
uintptr_t gbp_instance_habitat_count(const struct GbpInstance *inst);

/**
 * Solves an instance. `solver` is one of "mwm", "mwhm", "generic", "apx",
 * "brute", "auto"; `time_limit_ms` of 0 means no limit. On success writes a
 * new solution handle to `out`.
 *
 * # Safety
 * `inst` must be a live handle, `solver` a NUL-terminated string, and `out`
 * a valid pointer.
 */
enum GbpStatus gbp_solve(const struct GbpInstance *inst,
                         const char *solver,
                         uint64_t time_limit_ms,
                         struct GbpSolution **out);

/**
 * Releases a solution handle. Null is ignored.
 *
 * # Safety
 * `sol` must be null or a handle returned by this library, freed once.
 */
void gbp_solution_free(struct GbpSolution *sol);

/**
 * Total cost of a solution; 0 for a null handle.
 *
 * # Safety
 * `sol` must be null or a live handle.
 */
uint64_t gbp_solution_cost(const struct GbpSolution *sol);

/**
 * Number of edges in a solution; 0 for a null handle.
 *
 * # Safety
 * `sol` must be null or a live handle.
 */
uintptr_t gbp_solution_edge_count(const struct GbpSolution *sol);

/**
 * Copies the solution's edge indices (ascending) into `buffer`, up to
 * `capacity` entries; returns the number written.
 *
 * # Safety
 * `sol` must be null or a live handle; `buffer` must point to at least
 * `capacity` writable entries.
 */
uintptr_t gbp_solution_edges(const struct GbpSolution *sol, uintptr_t *buffer, uintptr_t capacity);

/**
 * Checks a solution against an instance; writes 1 to `out_feasible` when
 * every habitat is connected (and the budget, if any, respected), else 0.
 *
 * # Safety
 * `inst` and `sol` must be live handles and `out_feasible` a valid pointer.
 */
enum GbpStatus gbp_verify(const struct GbpInstance *inst,
                          const struct GbpSolution *sol,
                          int32_t *out_feasible);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GREENBRIDGES_H */
