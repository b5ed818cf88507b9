#ifndef REVSYNTH_H
#define REVSYNTH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Gate-to-Toffoli mapping method.
 */
typedef enum RsMethod {
  /**
   * Positive-polarity Reed-Muller; MCT gates only.
   */
  RS_METHOD_PPRM = 0,
  /**
   * Greedy ESOP; mixed-polarity gates.
   */
  RS_METHOD_ESOP = 1,
} RsMethod;

/**
 * Result code of every fallible call.
 */
typedef enum RsStatus {
  RS_STATUS_OK = 0,
  RS_STATUS_NULL_POINTER = 1,
  RS_STATUS_INVALID_UTF8 = 2,
  RS_STATUS_LENGTH_MISMATCH = 3,
  RS_STATUS_OUTPUT_OVERFLOW = 4,
  RS_STATUS_INDEX_OUT_OF_RANGE = 5,
  RS_STATUS_BAD_VARIABLE = 6,
  RS_STATUS_TOO_MANY_VARIABLES = 7,
  RS_STATUS_NOT_REVERSIBLE = 8,
  RS_STATUS_SIZE_MISMATCH = 9,
  RS_STATUS_SYNTAX = 10,
  RS_STATUS_LINE_INDEX_OUT_OF_RANGE = 11,
  RS_STATUS_DUPLICATE_CONTROL = 12,
  RS_STATUS_INVALID_GATE = 13,
  RS_STATUS_UNSUPPORTED_N = 14,
  RS_STATUS_UNSUPPORTED_SIZE = 15,
  RS_STATUS_NOT_REALIZABLE = 16,
  RS_STATUS_ARITY_MISMATCH = 17,
  RS_STATUS_PANIC = 99,
} RsStatus;

/**
 * Opaque circuit.
 */
typedef struct RsCircuit RsCircuit;

/**
 * Opaque half-V circuit.
 */
typedef struct RsHalfV RsHalfV;

/**
 * Opaque reversible function.
 */
typedef struct RsPermutation RsPermutation;

/**
 * Opaque truth table.
 */
typedef struct RsTruthTable RsTruthTable;

/**
 * Lower bound on the Toffoli gate count of the worst `n`-line function.
 */
typedef struct RsBoundReport {
  size_t n;
  uint64_t lower_bound;
  /**
   * The bound was decided with exact integer arithmetic.
   */
  bool exact;
  /**
   * The interval route could not separate two candidates; the smaller one is reported.
   */
  bool widened;
  /**
   * `n == 1`, where the counting argument carries no information.
   */
  bool degenerate;
} RsBoundReport;

/**
 * Location of the first gate a permutation fails to match in half-V recognition.
 */
typedef struct RsWitness {
  size_t gate;
  uint32_t first;
  uint32_t second;
} RsWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or an empty string.
 * The pointer stays valid until the next call on the same thread.
 */
const char *rs_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void rs_string_free(char *s);

/**
 * Parses `.tt` text.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum RsStatus rs_tt_parse(const char *src, struct RsTruthTable **out);

/**
 * Writes `.tt` text for `tt` into `*out`.
 *
 * # Safety
 * `tt` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_tt_serialize(const struct RsTruthTable *tt, char **out);

/**
 * # Safety
 * `tt` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_tt_shape(const struct RsTruthTable *tt, size_t *n_inputs, size_t *n_outputs);

/**
 * Evaluates `tt` on one input word.
 *
 * # Safety
 * `tt` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_tt_evaluate(const struct RsTruthTable *tt, uint32_t input, uint32_t *out);

/**
 * # Safety
 * `tt` must be null or a live handle.
 */
void rs_tt_free(struct RsTruthTable *tt);

/**
 * Builds a permutation of `{0..2^n}` from `len` images.
 *
 * # Safety
 * `map` must point at `len` readable words; `out` must be writable.
 */
enum RsStatus rs_perm_from_map(size_t n,
                               const uint32_t *map,
                               size_t len,
                               struct RsPermutation **out);

/**
 * Converts a reversible truth table.
 *
 * # Safety
 * `tt` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_perm_from_tt(const struct RsTruthTable *tt, struct RsPermutation **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_perm_to_tt(const struct RsPermutation *p, struct RsTruthTable **out);

/**
 * Number of variables of `p`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_perm_n(const struct RsPermutation *p, size_t *out);

/**
 * Copies the `2^n` images of `p` into `buf`, which holds `len` words.
 *
 * # Safety
 * `p` must be a live handle; `buf` must point at `len` writable words.
 */
enum RsStatus rs_perm_get_map(const struct RsPermutation *p, uint32_t *buf, size_t len);

/**
 * # Safety
 * `p` must be null or a live handle.
 */
void rs_perm_free(struct RsPermutation *p);

/**
 * Parses `.rc` text.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum RsStatus rs_circuit_parse(const char *src, struct RsCircuit **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_circuit_serialize(const struct RsCircuit *c, char **out);

/**
 * # Safety
 * `c` must be a live handle; the outputs must be writable.
 */
enum RsStatus rs_circuit_shape(const struct RsCircuit *c, size_t *lines, size_t *gates);

/**
 * Runs `c` on one input state (line 1 is the most significant bit).
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_circuit_simulate(const struct RsCircuit *c, uint32_t input, uint32_t *out);

/**
 * The permutation computed by `c`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_circuit_perm(const struct RsCircuit *c, struct RsPermutation **out);

/**
 * Replaces every single-target gate by a Toffoli cascade.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_circuit_map(const struct RsCircuit *c,
                             enum RsMethod method,
                             struct RsCircuit **out);

/**
 * # Safety
 * `c` must be null or a live handle.
 */
void rs_circuit_free(struct RsCircuit *c);

/**
 * Synthesizes `p` into at most `2n - 1` single-target gates. `order` lists
 * the variables 1..n in processing order; pass `order_len == 0` for 1..n.
 *
 * # Safety
 * `p` must be a live handle; `order` must point at `order_len` words;
 * `out` must be writable.
 */
enum RsStatus rs_synth_young(const struct RsPermutation *p,
                             const size_t *order,
                             size_t order_len,
                             struct RsCircuit **out);

/**
 * As [`rs_synth_young`], followed by Toffoli mapping.
 *
 * # Safety
 * Same as [`rs_synth_young`].
 */
enum RsStatus rs_synth_to_toffoli(const struct RsPermutation *p,
                                  const size_t *order,
                                  size_t order_len,
                                  enum RsMethod method,
                                  struct RsCircuit **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum RsStatus rs_lower_bound_toffoli(size_t n, struct RsBoundReport *out);

/**
 * Whether `log2((2^n)!) >= n * 2^(n-1)` holds.
 *
 * # Safety
 * `out` must be writable.
 */
enum RsStatus rs_check_induction(size_t n, bool *out);

/**
 * Number of distinct functions realized by one MCT gate on `n` lines.
 *
 * # Safety
 * `out` must be writable.
 */
enum RsStatus rs_count_one_gate_functions(size_t n, size_t *out);

/**
 * Distinct functions computed by half-V circuits with `n` gates on `k` lines.
 *
 * # Safety
 * `out` must be writable.
 */
enum RsStatus rs_halfv_enumerate(size_t n, size_t k, uint64_t *out);

/**
 * Recovers the control functions of a half-V circuit with `n` gates that
 * computes `p`. On `NotRealizable` the failing gate and a witness pair are
 * written to `witness` when it is not null.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable; `witness` may be null.
 */
enum RsStatus rs_halfv_recognize(const struct RsPermutation *p,
                                 size_t n,
                                 struct RsHalfV **out,
                                 struct RsWitness *witness);

/**
 * Embeds a function with `k - 1` inputs into a half-V circuit on `k` lines.
 *
 * # Safety
 * `tt` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_halfv_encode(const struct RsTruthTable *tt, size_t k, struct RsHalfV **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_halfv_decode(const struct RsHalfV *h, struct RsTruthTable **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_halfv_to_circuit(const struct RsHalfV *h, struct RsCircuit **out);

/**
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum RsStatus rs_halfv_parse(const char *src, struct RsHalfV **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum RsStatus rs_halfv_serialize(const struct RsHalfV *h, char **out);

/**
 * # Safety
 * `h` must be null or a live handle.
 */
void rs_halfv_free(struct RsHalfV *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REVSYNTH_H */
