#ifndef AFFCAT_H
#define AFFCAT_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes returned by every fallible function.
typedef enum {
  AFFCAT_STATUS_OK = 0,
  AFFCAT_STATUS_NULL_POINTER = 1,
  AFFCAT_STATUS_INVALID_UTF8 = 2,
  AFFCAT_STATUS_PARSE = 3,
  AFFCAT_STATUS_INVALID_PARAMS = 4,
  AFFCAT_STATUS_RANK_MISMATCH = 5,
  AFFCAT_STATUS_INDEX_OUT_OF_RANGE = 6,
  AFFCAT_STATUS_BUDGET_EXCEEDED = 7,
  AFFCAT_STATUS_MISMATCH = 8,
  AFFCAT_STATUS_UNKNOWN = 9,
  AFFCAT_STATUS_BUFFER_TOO_SMALL = 10,
  AFFCAT_STATUS_PANIC = 11,
} AffcatStatus;

// An element of the extended affine Hecke algebra.
typedef struct AffcatHecke AffcatHecke;

// An element of the extended affine Weyl group.
typedef struct AffcatPerm AffcatPerm;

// The outcome lines of a verification suite.
typedef struct AffcatReport AffcatReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer stays valid until the
// next failing call on the same thread; do not free it.
const char *affcat_last_error_message(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a pointer returned by an `affcat_*_to_string` function, freed only once.
void affcat_string_free(char *s);

// Parses a word such as `rho s1 t2^-1` at rank `r`.
//
// # Safety
// `word` must be a nul-terminated string and `out` a valid pointer.
AffcatStatus affcat_perm_from_word(uintptr_t r, const char *word, AffcatPerm **out);

// Composition `a b` (apply `b` first).
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
AffcatStatus affcat_perm_compose(const AffcatPerm *a, const AffcatPerm *b, AffcatPerm **out);

// Coxeter length; 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
uintptr_t affcat_perm_length(const AffcatPerm *p);

// The power `k` of `rho` in `rho^k w'`; 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
int64_t affcat_perm_rho_power(const AffcatPerm *p);

// Copies the window `[f(1), ..., f(r)]` into `buf` of capacity `cap`; `len` receives `r`.
//
// # Safety
// `p` must be a live handle, `buf` valid for `cap` writes and `len` a valid pointer.
AffcatStatus affcat_perm_window(const AffcatPerm *p, int64_t *buf, uintptr_t cap, uintptr_t *len);

// # Safety
// `p` must be null or a handle from this library, freed only once.
void affcat_perm_free(AffcatPerm *p);

// Parses an element such as `T[s1 rho] + q^2*T[e]` or `b[1]*C[s2 s1]` at rank `r`.
//
// # Safety
// `s` must be a nul-terminated string and `out` a valid pointer.
AffcatStatus affcat_hecke_parse(uintptr_t r, const char *s, AffcatHecke **out);

// Product `a b`.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
AffcatStatus affcat_hecke_mul(const AffcatHecke *a, const AffcatHecke *b, AffcatHecke **out);

// Bar involution.
//
// # Safety
// `a` must be a live handle and `out` a valid pointer.
AffcatStatus affcat_hecke_bar(const AffcatHecke *a, AffcatHecke **out);

// The KL element `T_rho^k C'_{w'}` of `w = rho^k w'`, for `l(w) <= budget`.
//
// # Safety
// `w` must be a live handle and `out` a valid pointer.
AffcatStatus affcat_hecke_kl(const AffcatPerm *w, uintptr_t budget, AffcatHecke **out);

// Writes whether `a == b` to `out`.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
AffcatStatus affcat_hecke_equal(const AffcatHecke *a, const AffcatHecke *b, bool *out);

// The element in the input syntax; free with [`affcat_string_free`]. Null for a null handle.
//
// # Safety
// `a` must be null or a live handle.
char *affcat_hecke_to_string(const AffcatHecke *a);

// # Safety
// `p` must be null or a handle from this library, freed only once.
void affcat_hecke_free(AffcatHecke *p);

// Runs a verification suite (`weyl`, `hecke`, `schur`, `soergel`, `rouquier`, `singular`, `all`).
//
// # Safety
// `suite` must be a nul-terminated string and `out` a valid pointer.
AffcatStatus affcat_verify(const char *suite, uintptr_t r, uintptr_t n, AffcatReport **out);

// Number of cases; 0 for a null handle.
//
// # Safety
// `rep` must be null or a live handle.
uintptr_t affcat_report_len(const AffcatReport *rep);

// Number of failing cases; 0 for a null handle.
//
// # Safety
// `rep` must be null or a live handle.
uintptr_t affcat_report_failures(const AffcatReport *rep);

// Line `i` as `CASE-ID PASS|FAIL [witness]`; null if out of range. Free with [`affcat_string_free`].
//
// # Safety
// `rep` must be null or a live handle.
char *affcat_report_line(const AffcatReport *rep,
                         uintptr_t i);

// # Safety
// `p` must be null or a handle from this library, freed only once.
void affcat_report_free(AffcatReport *p);

// Writes whether the shifted elementary identity holds for `(n, k, s)`, `s = +-1`.
//
// # Safety
// `out` must be a valid pointer.
AffcatStatus affcat_shifted_elementary(uintptr_t n, uintptr_t k, int64_t s, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFCAT_H */
