/*
 * romanus - exact chord-equation toolkit
 *
 * C interface to the library: exact Chebyshev-style chord polynomials,
 * nested-radical construction and certified evaluation, chord-equation
 * solving through the angle parametrization, historical notation
 * conversion, and the reconstruction audits of the 1593 challenge.
 *
 * Conventions
 * -----------
 *  - Every fallible function returns rmn_status; RMN_OK is 0.
 *  - On failure, rmn_last_error_message() (thread-local) describes the
 *    problem; rmn_last_error_offset() gives a byte offset into the
 *    offending input text (-1 when not applicable) and
 *    rmn_last_error_path() the node path inside an expression tree
 *    ("" when not applicable).
 *  - Objects are opaque handles released with their matching *_free.
 *    Passing NULL to a *_free is a no-op.
 *  - char** results are freshly allocated; release with rmn_string_free.
 *  - const char** results are borrowed: they stay valid until the handle
 *    they came from is freed (or, for static names, forever).  Do not free.
 *  - Decimal outputs carry the certificate |true - printed| <= 10^-digits.
 */

#ifndef ROMANUS_H
#define ROMANUS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rmn_status {
    RMN_OK = 0,
    RMN_ERR_SYNTAX = 1,              /* malformed input text */
    RMN_ERR_DOMAIN = 2,              /* sqrt of a certainly negative quantity */
    RMN_ERR_DIVISION_BY_ZERO = 3,    /* denominator certainly zero */
    RMN_ERR_UNDECIDABLE_SIGN = 4,    /* sign still straddles zero at the precision cap */
    RMN_ERR_RANGE = 5,               /* numeric argument outside the valid domain */
    RMN_ERR_RECOGNITION = 6,         /* value not recognized as a chord of a rational angle */
    RMN_ERR_UNSUPPORTED = 7,         /* angle/polygon outside the 2^a*3^b*5^c family */
    RMN_ERR_UNSUPPORTED_DIALECT = 8, /* polynomial not expressible in the target notation */
    RMN_ERR_INVALID = 9,             /* bad argument or handle */
    RMN_ERR_INTERNAL = 10,           /* certification failed after all refinement rounds */
} rmn_status;

typedef enum rmn_dialect {
    RMN_DIALECT_MODERN = 0, /* 45x - 3795x^3 + 1x^45 (unit coefficients omitted) */
    RMN_DIALECT_STEVIN = 1, /* 45(1) - 3795(3) + 1(45) */
    RMN_DIALECT_VIETE = 2,  /* 45N - 3795QC + 1CCC...; no constant terms */
} rmn_dialect;

typedef enum rmn_trig {
    RMN_TRIG_SIN = 0,
    RMN_TRIG_COS = 1,
} rmn_trig;

typedef struct rmn_poly rmn_poly;           /* exact integer polynomial */
typedef struct rmn_radical rmn_radical;     /* nested square-root expression */
typedef struct rmn_solutions rmn_solutions; /* full root list of p_n(x) = b */
typedef struct rmn_audit rmn_audit;         /* reconstruction report of one 1593 example */
typedef struct rmn_gift rmn_gift;           /* the five-chord New Year system */

/* --------------------------------------------------------------- meta -- */

const char* rmn_version(void);
const char* rmn_status_name(rmn_status s);

const char* rmn_last_error_message(void); /* borrowed, thread-local */
long long rmn_last_error_offset(void);
const char* rmn_last_error_path(void);

void rmn_string_free(char* s);

/* -------------------------------------------------------- polynomials -- */

/*
 * The degree-n chord polynomial.  monic != 0 selects p_n, the monic integer
 * form with p_n(2cos t) = 2cos(nt); monic == 0 selects the classical T_n with
 * T_n(cos t) = cos(nt).  n up to 2048.
 */
rmn_status rmn_poly_chebyshev(unsigned n, int monic, rmn_poly** out);

rmn_status rmn_poly_parse(const char* text, rmn_dialect d, rmn_poly** out);
rmn_status rmn_poly_print(const rmn_poly* p, rmn_dialect d, char** out);
rmn_status rmn_poly_degree(const rmn_poly* p, unsigned long long* out);
/* Coefficient of x^i as a decimal integer string (i may exceed the degree). */
rmn_status rmn_poly_coeff(const rmn_poly* p, unsigned long long i, char** out);
/* p(q(x)) exactly; the result degree is capped at 100000. */
rmn_status rmn_poly_compose(const rmn_poly* p, const rmn_poly* q, rmn_poly** out);
/* Exact value at a rational point ("2", "-7/3"); result is a rational string. */
rmn_status rmn_poly_eval(const rmn_poly* p, const char* rational, char** out);
void rmn_poly_free(rmn_poly* p);

/* --------------------------------------------------- radical towers ----- */

/*
 * Surface syntax: integers and rationals (3, 5/8), sqrt(...), + - * /,
 * parentheses.  U+221A is accepted as an alias for sqrt on input.
 */
rmn_status rmn_radical_parse(const char* text, rmn_radical** out);
rmn_status rmn_radical_print(const rmn_radical* e, char** out);
/* Certified decimal with `digits` fractional digits (1..1000). */
rmn_status rmn_radical_eval(const rmn_radical* e, int digits, char** out);
/* *out = 1 when |a - b| < 10^-digits, decided rigorously. */
rmn_status rmn_radical_equal(const rmn_radical* a, const rmn_radical* b, int digits, int* out);
void rmn_radical_free(rmn_radical* e);

/* --------------------------------------------------------- angles ------- */

/*
 * Constructibility class of the angle (num/den)*pi: one of the static
 * strings "square-roots-only", "needs-cubic", "needs-quintic",
 * "needs-cubic-and-quintic", "out-of-scope".
 */
rmn_status rmn_classify(long long num, long long den, const char** name_out);

/* Exact nested-radical chord 2sin/2cos of (num/den)*pi, angle in (0, 1/2]. */
rmn_status rmn_tower(long long num, long long den, rmn_trig f, rmn_radical** out);

/*
 * Exact sin/cos (not doubled) of (num/den)*pi when the denominator is
 * supported; sets *out = NULL and returns RMN_OK when no exact form exists.
 */
rmn_status rmn_exact_value(long long num, long long den, rmn_trig f, rmn_radical** out);

/* Prime factors of n ascending, comma-separated ("45" -> "3,3,5"; "1" -> ""). */
rmn_status rmn_factor_chain(unsigned long long n, char** out);

/* Perimeter of the regular n-gon inscribed in the unit circle, certified. */
rmn_status rmn_polygon_perimeter(unsigned long long n, int digits, char** out);

/* n*sin(pi/n): the inscribed-polygon lower approximation of pi, certified. */
rmn_status rmn_pi_approx(unsigned long long n, int digits, char** out);

/* --------------------------------------------------------- solving ------ */

/*
 * All n roots of p_n(x) = rhs (1 <= n <= 512), via x = 2cos(phi*pi).  The
 * right-hand side must be recognizable as the chord of a rational angle
 * (RMN_ERR_RECOGNITION otherwise; the numeric solver has no such limit).
 * Roots come back ascending, each with its angle, an exact radical when the
 * angle is square-root constructible, and a certified decimal; every residual
 * is certified below 10^-digits.  max_q caps the recognized angle's
 * denominator; pass 0 for the default (4096).
 */
rmn_status rmn_solve(unsigned n, const rmn_radical* rhs, int digits, long long max_q,
                     rmn_solutions** out);

/* Same roots for an arbitrary decimal right-hand side in [-2, 2]. */
rmn_status rmn_solve_numeric(unsigned n, const char* rhs_decimal, int digits,
                             rmn_solutions** out);

rmn_status rmn_solutions_count(const rmn_solutions* s, unsigned* out);
/* Root counts by sign, with multiplicity; they sum to n. */
rmn_status rmn_solutions_sign_counts(const rmn_solutions* s, unsigned* positive, unsigned* zero,
                                     unsigned* negative);
/* Index of the smallest positive root, -1 when there is none. */
rmn_status rmn_solutions_smallest_positive(const rmn_solutions* s, int* index);
/* The recognized sin-form angle of the right-hand side (has = 0 when numeric). */
rmn_status rmn_solutions_rhs_angle(const rmn_solutions* s, int* has, long long* num,
                                   long long* den);
rmn_status rmn_solution_value(const rmn_solutions* s, unsigned i, const char** out);
/* NULL when the root has no square-root tower. */
rmn_status rmn_solution_radical(const rmn_solutions* s, unsigned i, const char** out);
rmn_status rmn_solution_angle(const rmn_solutions* s, unsigned i, int* has, long long* num,
                              long long* den);
rmn_status rmn_solution_multiplicity(const rmn_solutions* s, unsigned i, int* out);
void rmn_solutions_free(rmn_solutions* s);

/* ----------------------------------------------------------- audit ------ */

/*
 * Reconstruction audit of the 1593 challenge: example is "1", "2", "3", or
 * "main".  pass == 0 only for example "2", whose printed right-hand side is
 * not satisfied by its claimed solution; the mismatch getters then carry the
 * 19-digit diagnostics and the repaired right-hand side.
 */
rmn_status rmn_verify_romanus(const char* example, int digits, rmn_audit** out);

rmn_status rmn_audit_pass(const rmn_audit* a, int* out);
rmn_status rmn_audit_equation(const rmn_audit* a, const char** out);
rmn_status rmn_audit_rhs(const rmn_audit* a, const char** text, const char** value);
/* text is "" when the source states no closed form. */
rmn_status rmn_audit_claimed(const rmn_audit* a, const char** text, const char** value);
/* The smallest positive root: radical is "" when not constructible. */
rmn_status rmn_audit_solution(const rmn_audit* a, const char** radical, const char** value,
                              long long* angle_num, long long* angle_den);
/* polygon_sides = N when the root is the side of the regular N-gon, else 0. */
rmn_status rmn_audit_classification(const rmn_audit* a, const char** name,
                                    unsigned long long* polygon_sides);
/* has = 0 for every example but "2". */
rmn_status rmn_audit_mismatch(const rmn_audit* a, int* has, const char** lhs_at_claimed,
                              const char** alternative_text, const char** alternative_value,
                              int* alternative_matches, const char** corrected_text,
                              long long* corrected_num, long long* corrected_den,
                              int* corrected_confirmed);
rmn_status rmn_audit_notes(const rmn_audit* a, unsigned* count);
rmn_status rmn_audit_note(const rmn_audit* a, unsigned i, const char** out);
void rmn_audit_free(rmn_audit* a);

/* ------------------------------------------------------------ gift ------ */

/*
 * The five-chord system: A, B, C, D as exact radicals with certified
 * decimals, E as a certified decimal only (its angle needs a fifth-root-grade
 * step).  Residuals of the five printed equations, evaluated exactly on the
 * printed decimals, are certified below 10^(2-digits).  digits >= 18.
 */
rmn_status rmn_solve_gift(int digits, rmn_gift** out);

rmn_status rmn_gift_counts(const rmn_gift* g, unsigned* components, unsigned* equations);
/* name receives one character ('A'..'E'); radical is NULL for E. */
rmn_status rmn_gift_component(const rmn_gift* g, unsigned i, char* name, long long* angle_num,
                              long long* angle_den, const char** radical, const char** value);
rmn_status rmn_gift_equation(const rmn_gift* g, unsigned i, const char** equation,
                             const char** residual_bound);
void rmn_gift_free(rmn_gift* g);

/* -------------------------------------------------------- notation ------ */

rmn_status rmn_notation_convert(const char* text, rmn_dialect from, rmn_dialect to, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ROMANUS_H */
