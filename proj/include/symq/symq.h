/* C interface to the symplectic-quandle library.
 *
 * Conventions:
 *   - Every function returning int yields a status code; on failure a
 *     human-readable message is available from symq_last_error() until the
 *     next call on the same thread.
 *   - Strings returned through char** out-parameters are owned by the caller
 *     and released with symq_string_free(). Structured results are JSON.
 *   - Quandle elements are 1-based indices, matching the operation-table
 *     convention (entry (i,j) = index of x_i |> x_j).
 */
#ifndef SYMQ_H
#define SYMQ_H

#ifdef __cplusplus
extern "C" {
#endif

#define SYMQ_OK 0
#define SYMQ_ERR_INVALID 1 /* malformed input or violated precondition */
#define SYMQ_ERR_LIMIT 2   /* a resource cap was exceeded */

typedef struct symq_quandle symq_quandle;
typedef struct symq_link symq_link;

const char* symq_version(void);
const char* symq_last_error(void);
void symq_string_free(char* s);

/* ---- quandles ----------------------------------------------------------
 *
 * Ring specs: "Z<n>" or "GF(<p>^<m>)" with an optional "/<modulus>" in t,
 * e.g. "Z4", "GF(2^2)/t^2+t+1". Gram matrices: rows separated by ';',
 * entries by ',', each entry an element code ("-c" negates c in the ring),
 * e.g. "0,2;2,0".
 */

/* Operation table of the symplectic quandle of the given form, 1-based
 * canonical element indexing. cap <= 0 selects the default (4096). */
int symq_quandle_build(const char* ring_spec, int dim, const char* gram, long long cap,
                       symq_quandle** out);

/* Reads an n x n whitespace-separated table of 1-based entries. Shape and
 * range are enforced; quandle axioms are not (see symq_quandle_validate). */
int symq_quandle_parse(const char* table_text, symq_quandle** out);

void symq_quandle_free(symq_quandle* q);

/* Order n, or 0 for a null handle. */
int symq_quandle_order(const symq_quandle* q);

/* The table in the file format accepted by symq_quandle_parse. */
int symq_quandle_format(const symq_quandle* q, char** out);

/* Checks the three quandle axioms. violation_count receives the number of
 * failures; report (optional, may be NULL) one description per line. */
int symq_quandle_validate(const symq_quandle* q, int* violation_count, char** report);

int symq_quandle_dual(const symq_quandle* q, symq_quandle** out);
int symq_quandle_union(const symq_quandle* a, const symq_quandle* b, symq_quandle** out);

/* JSON [[...],...]: orbits of the right-translation group, each sorted,
 * ordered by least element. */
int symq_quandle_orbits(const symq_quandle* q, char** json);

/* JSON [...]: elements x with x |> y = x and y |> x = y for every y. */
int symq_quandle_trivial_component(const symq_quandle* q, char** json);

int symq_quandle_almost_connected(const symq_quandle* q, int* out);

/* Quandle polynomial in (s, t); text like "s^16t^16 + 15s^8t^8" or JSON
 * {"vars":["s","t"],"terms":[{"exp":[16,16],"coef":1},...]}. */
int symq_quandle_qpoly(const symq_quandle* q, int as_json, char** out);

/* JSON [[...],...]: all subquandles, sorted by size then lexicographically.
 * cap <= 0 selects the default (100000). */
int symq_quandle_subquandles(const symq_quandle* q, long long cap, char** json);

/* JSON {"isomorphic":bool,"map":[...]|null}; map[i-1] is the image of i. */
int symq_quandle_isomorphism(const symq_quandle* a, const symq_quandle* b, char** json);

/* ---- symplectic forms (no table materialization) ----------------------- */

/* JSON {"count":N,"indices":[...],"vectors":[[...],...]}: the vectors x
 * with <x,y> = 0 for all y, in canonical index order. */
int symq_symplectic_radical(const char* ring_spec, int dim, const char* gram, char** json);

/* Field rings only. JSON {"rank":2k,"basis":[[...],...],"standard_form":
 * [[...],...]}: basis rows B with B A B^T the standard form. */
int symq_symplectic_reduce(const char* ring_spec, int dim, const char* gram, char** json);

/* JSON {"isometric":bool,"witness":[[...],...]|null}: witness P satisfies
 * P A P^T = B with unit determinant. */
int symq_symplectic_isometric(const char* ring_spec, int dim, const char* gram_a,
                              const char* gram_b, char** json);

/* For each n in lo..hi partitions the forms [[0,a],[-a,0]] over Z_n by
 * quandle isomorphism and by isometry. JSON {"all_agree":bool,"moduli":
 * [{"modulus":n,"isomorphism_classes":[[...],...],"isometry_classes":
 * [[...],...],"agree":bool,"counterexample":[a,b]|null},...]}. */
int symq_scan_conjecture(int lo, int hi, int dim, char** json);

/* ---- links -------------------------------------------------------------
 *
 * Signed Gauss codes: components separated by ',', tokens O<k><s> or
 * U<k><s> with s one of '+', '-'; whitespace ignored; an empty component
 * is a zero-crossing unknot.
 */

int symq_link_parse(const char* gauss, symq_link** out);
void symq_link_free(symq_link* l);

/* JSON {"components":k,"crossings":n,"generators":g,
 * "relations":[{"a":..,"b":..,"c":..,"sign":1|-1},...]}; a relation means
 * a |> b = c for sign 1 and c |> b = a for sign -1. */
int symq_link_info(const symq_link* l, char** json);

/* ---- invariants -------------------------------------------------------- */

/* Number of colorings of the link by the target quandle. */
int symq_invariant_count(const symq_link* l, const symq_quandle* t, long long* out);

/* Polynomial in q: sum over colorings of q^|Im f|. */
int symq_invariant_phi_e(const symq_link* l, const symq_quandle* t, int as_json, char** out);

/* Polynomial in (q, z): sum of q^|Im f| z^rho(f), rho the size of the
 * submodule spanned by the image. The target must have been built from a
 * form (symq_quandle_build); parsed tables carry no module structure. */
int symq_invariant_phi_sqp(const symq_link* l, const symq_quandle* t, int as_json, char** out);

/* JSON {"count":N,"phi_e":<poly>,"phi_sqp":<poly>|null} in one pass. */
int symq_invariant_all(const symq_link* l, const symq_quandle* t, char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYMQ_H */
