/* C interface for the tripartite-ppt entanglement detector. */

#ifndef TRIPARTITE_PPT_H
#define TRIPARTITE_PPT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Reduction selector, in the same order as the six report slots.
 */
typedef enum TppReductionKind {
  TPP_REDUCTION_KIND_AB = 0,
  TPP_REDUCTION_KIND_AC = 1,
  TPP_REDUCTION_KIND_BC = 2,
  TPP_REDUCTION_KIND_A_BC = 3,
  TPP_REDUCTION_KIND_B_CA = 4,
  TPP_REDUCTION_KIND_C_AB = 5,
} TppReductionKind;

/**
 * Status code returned by every API call.
 */
typedef enum TppStatus {
  TPP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TPP_STATUS_NULL_POINTER = 1,
  /**
   * A scalar argument was out of range (mixing parameter, slot,
   * ensemble size, reduction kind).
   */
  TPP_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The supplied matrix is not a density matrix.
   */
  TPP_STATUS_INVALID_STATE = 3,
  /**
   * Malformed JSON or matrix-file contents.
   */
  TPP_STATUS_PARSE_ERROR = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  TPP_STATUS_UTF8_ERROR = 5,
} TppStatus;

/**
 * Opaque handle to a validated three-qubit density matrix.
 */
typedef struct TppState TppState;

/**
 * Criterion output: per-reduction minimum partial-transpose eigenvalues
 * (slot order ab, ac, bc, a-bc, b-ca, c-ab), the verdict, and a bitmask
 * of the witnessing slots.
 */
typedef struct TppReport {
  double tolerance;
  /**
   * 1 when entangled, 0 when inconclusive.
   */
  int32_t entangled;
  /**
   * Bit `i` set when reduction slot `i` certifies entanglement.
   */
  uint32_t witness_mask;
  double min_pt_eigenvalues[6];
} TppReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static version string of the underlying crate.
 */
const char *tpp_version(void);

/**
 * Releases a state handle. Null is accepted and ignored.
 *
 * # Safety
 * `state` must be a pointer returned by one of the `tpp_state_*`
 * constructors, not yet freed.
 */
void tpp_state_free(struct TppState *state);

/**
 * The GHZ state.
 */
enum TppStatus tpp_state_ghz(struct TppState **out);

/**
 * The Werner-type family with mixing parameter `x` in [0, 1].
 */
enum TppStatus tpp_state_werner(double x, struct TppState **out);

/**
 * The bound-entangled state built on an unextendible product basis.
 */
enum TppStatus tpp_state_upb(struct TppState **out);

/**
 * Mixture of pair-entangled states with the given pair weights
 * (non-negative, summing to 1).
 */
enum TppStatus tpp_state_molecule(double p_ab, double p_bc, double p_ac, struct TppState **out);

/**
 * Seeded random density matrix.
 */
enum TppStatus tpp_state_random(uint64_t seed, struct TppState **out);

/**
 * Seeded random separable mixture of `k` product states, `k` in 1..=64.
 */
enum TppStatus tpp_state_separable(uint64_t seed, uint32_t k, struct TppState **out);

/**
 * Builds a state from 128 row-major `[re, im]` interleaved doubles.
 * The matrix must validate as a density matrix.
 *
 * # Safety
 * `entries` must point to at least 128 readable doubles.
 */
enum TppStatus tpp_state_from_dense(const double *entries, struct TppState **out);

/**
 * Embeds a 4x4 density matrix (32 interleaved doubles) through one of
 * the six slots (1..=6).
 *
 * # Safety
 * `entries` must point to at least 32 readable doubles.
 */
enum TppStatus tpp_state_embed(uint32_t slot, const double *entries, struct TppState **out);

/**
 * Parses a state from the JSON matrix-file format.
 *
 * # Safety
 * `json` must be a valid null-terminated C string.
 */
enum TppStatus tpp_state_from_json(const char *json, struct TppState **out);

/**
 * Serializes a state to the JSON matrix-file format. The returned string
 * must be released with `tpp_string_free`.
 *
 * # Safety
 * `state` must be a live handle; `out_json` must be a valid pointer.
 */
enum TppStatus tpp_state_to_json(const struct TppState *state, char **out_json);

/**
 * Releases a string returned by `tpp_state_to_json`.
 *
 * # Safety
 * `s` must be a pointer returned by this library, not yet freed.
 */
void tpp_string_free(char *s);

/**
 * Copies the 8x8 matrix into 128 `[re, im]` interleaved doubles.
 *
 * # Safety
 * `state` must be a live handle; `out` must point to at least 128
 * writable doubles.
 */
enum TppStatus tpp_state_entries(const struct TppState *state, double *out);

/**
 * Computes one reduction and writes it as 32 `[re, im]` interleaved
 * doubles.
 *
 * # Safety
 * `state` must be a live handle; `out` must point to at least 32
 * writable doubles.
 */
enum TppStatus tpp_reduce(const struct TppState *state, enum TppReductionKind kind, double *out);

/**
 * Runs the entanglement criterion. Pass a negative `tol` to use the
 * default threshold (1e-10).
 *
 * # Safety
 * `state` must be a live handle; `out` must be a valid pointer.
 */
enum TppStatus tpp_check(const struct TppState *state, double tol, struct TppReport *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TRIPARTITE_PPT_H */
