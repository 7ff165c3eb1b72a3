#ifndef SYMREG_H
#define SYMREG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SymregStatus {
  SYMREG_STATUS_OK = 0,
  SYMREG_STATUS_NULL_POINTER = 1,
  SYMREG_STATUS_INVALID_ARGUMENT = 2,
  SYMREG_STATUS_PARSE_ERROR = 3,
  SYMREG_STATUS_DEGENERATE_IDEAL = 4,
  SYMREG_STATUS_NOT_SQUAREFREE = 5,
  SYMREG_STATUS_OUT_OF_RANGE = 6,
  SYMREG_STATUS_PANIC = 7,
} SymregStatus;

/*
 Opaque simple graph.
 */
typedef struct SymregGraph SymregGraph;

/*
 Opaque monomial ideal.
 */
typedef struct SymregIdeal SymregIdeal;

/*
 Message for the last failed call on this thread; empty after success.
 The pointer stays valid until the next `symreg_*` call on the thread.
 */
const char *symreg_last_error(void);

/*
 # Safety
 `s` must come from this library and not have been freed.
 */
void symreg_string_free(char *s);

/*
 Parses an `n m` edge list or a graph6 line.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SymregStatus symreg_graph_parse(const char *text, struct SymregGraph **out);

/*
 Builds a graph on `n` vertices from `m` 1-based pairs stored flat in
 `edges` (length `2 * m`).

 # Safety
 `edges` must point to `2 * m` readable values (may be null when `m = 0`).
 */
enum SymregStatus symreg_graph_from_edges(uintptr_t n,
                                          const uint32_t *edges,
                                          uintptr_t m,
                                          struct SymregGraph **out);

/*
 # Safety
 `g` must come from this library and not have been freed.
 */
void symreg_graph_free(struct SymregGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null (returns 0).
 */
uintptr_t symreg_graph_vertex_count(const struct SymregGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null (returns 0).
 */
uintptr_t symreg_graph_edge_count(const struct SymregGraph *g);

/*
 Canonical graph6 string; free with `symreg_string_free`.

 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum SymregStatus symreg_graph_canonical_graph6(const struct SymregGraph *g, char **out);

/*
 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum SymregStatus symreg_edge_ideal(const struct SymregGraph *g, struct SymregIdeal **out);

/*
 Ideal in `n` variables from `count` exponent vectors stored row-major in
 `exps` (length `n * count`).

 # Safety
 `exps` must point to `n * count` readable values; `out` must be writable.
 */
enum SymregStatus symreg_ideal_from_exponents(uintptr_t n,
                                              const uint32_t *exps,
                                              uintptr_t count,
                                              struct SymregIdeal **out);

/*
 # Safety
 `i` must come from this library and not have been freed.
 */
void symreg_ideal_free(struct SymregIdeal *i);

/*
 # Safety
 `i` must be a live ideal handle or null (returns 0).
 */
uintptr_t symreg_ideal_variable_count(const struct SymregIdeal *i);

/*
 # Safety
 `i` must be a live ideal handle or null (returns 0).
 */
uintptr_t symreg_ideal_generator_count(const struct SymregIdeal *i);

/*
 Copies minimal generator `index` into `exps_out`, which holds `len`
 values and must have room for the variable count.

 # Safety
 `i` must be a live ideal handle; `exps_out` must have `len` writable slots.
 */
enum SymregStatus symreg_ideal_generator(const struct SymregIdeal *i,
                                         uintptr_t index,
                                         uint32_t *exps_out,
                                         uintptr_t len);

/*
 # Safety
 `a` and `b` must be live ideal handles; `out` must be writable.
 */
enum SymregStatus symreg_ideal_equal(const struct SymregIdeal *a,
                                     const struct SymregIdeal *b,
                                     bool *out);

/*
 Generators as a JSON array of exponent arrays; free with
 `symreg_string_free`.

 # Safety
 `i` must be a live ideal handle; `out` must be writable.
 */
enum SymregStatus symreg_ideal_to_json(const struct SymregIdeal *i, char **out);

/*
 `I^s`.

 # Safety
 `i` must be a live ideal handle; `out` must be writable.
 */
enum SymregStatus symreg_ideal_power(const struct SymregIdeal *i,
                                     uint32_t s,
                                     struct SymregIdeal **out);

/*
 `I^(s)` for a squarefree ideal.

 # Safety
 `i` must be a live ideal handle; `out` must be writable.
 */
enum SymregStatus symreg_symbolic_power(const struct SymregIdeal *i,
                                        uint32_t s,
                                        struct SymregIdeal **out);

/*
 `reg(S/I)` from degree complexes over GF(`field_char`).

 # Safety
 `i` must be a live ideal handle; `out` must be writable.
 */
enum SymregStatus symreg_reg_takayama(const struct SymregIdeal *i,
                                      uint32_t field_char,
                                      uint32_t *out);

/*
 `reg(S/I)` from the Koszul Betti table over GF(`field_char`).

 # Safety
 `i` must be a live ideal handle; `out` must be writable.
 */
enum SymregStatus symreg_reg_betti(const struct SymregIdeal *i, uint32_t field_char, uint32_t *out);

/*
 Runs comma-separated `checks` (null or empty for all) with powers from
 the comma-separated `s_values` (null for "2,3"). Writes the report as
 JSON and whether every check passed.

 # Safety
 `g` must be a live graph handle; string arguments must be null or
 NUL-terminated; `report_out` and `passed_out` must be writable.
 */
enum SymregStatus symreg_verify_graph(const struct SymregGraph *g,
                                      const char *checks,
                                      const char *s_values,
                                      uint32_t field_char,
                                      char **report_out,
                                      bool *passed_out);

#endif  /* SYMREG_H */
