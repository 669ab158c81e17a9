/* C interface to tracecat.
 *
 * Every function returns a tc_status. On failure the message is available
 * from tc_last_error() (per thread) and output parameters are untouched.
 * Strings returned through char** are owned by the caller and released with
 * tc_string_free(); handles are released with the matching *_free().
 * Weights are passed as an int array of length n-1.
 */
#ifndef TRACECAT_H
#define TRACECAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(TRACECAT_BUILDING_LIBRARY)
#define TC_API __attribute__((visibility("default")))
#else
#define TC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_PARSE = 1,    /* malformed text or JSON */
  TC_ERR_DOMAIN = 2,   /* well-formed input outside the domain */
  TC_ERR_ARGUMENT = 4, /* null pointer or bad enum value */
  TC_ERR_INTERNAL = 5
} tc_status;

typedef enum tc_format { TC_TEXT = 0, TC_JSON = 1 } tc_format;

typedef enum tc_power_formula {
  TC_POWER_DEFAULT = 0,
  TC_POWER_WEIGHTED_CW = 1,
  TC_POWER_WEIGHTED_CCW = 2,
  TC_POWER_DERIVATIVE = 3
} tc_power_formula;

typedef struct tc_sym tc_sym;
typedef struct tc_nh tc_nh;
typedef struct tc_cartan tc_cartan;
typedef struct tc_center tc_center;
typedef struct tc_vector tc_vector;
typedef struct tc_grass tc_grass;

TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

/* Symmetric functions. only_basis may be NULL; otherwise every factor must
 * use that basis ("e", "h", "p", "m", "s"). */
TC_API tc_status tc_sym_parse(const char* text, const char* only_basis, tc_sym** out);
TC_API tc_status tc_sym_from_json(const char* json, tc_sym** out);
TC_API tc_status tc_sym_add(const tc_sym* a, const tc_sym* b, tc_sym** out);
TC_API tc_status tc_sym_mul(const tc_sym* a, const tc_sym* b, tc_sym** out);
TC_API tc_status tc_sym_project(const tc_sym* a, int n, tc_sym** out);
TC_API tc_status tc_sym_equal(const tc_sym* a, const tc_sym* b, int* equal);
TC_API tc_status tc_sym_format(const tc_sym* a, const char* basis, tc_format format, char** out);
TC_API void tc_sym_free(tc_sym* a);
TC_API tc_status tc_sym_grassmannian_check(int max_k, int* ok);
TC_API tc_status tc_quantum_factorial(int n, tc_format format, char** out);
TC_API tc_status tc_gaussian_binomial(int n, int k, tc_format format, char** out);

/* NilHecke algebra NH_n. */
TC_API tc_status tc_nh_parse(int n, const char* text, tc_nh** out);
TC_API tc_status tc_nh_from_json(const char* json, tc_nh** out);
TC_API tc_status tc_nh_idempotent(int n, tc_nh** out);
TC_API tc_status tc_nh_compose(const tc_nh* a, const tc_nh* b, tc_nh** out);
TC_API tc_status tc_nh_equal(const tc_nh* a, const tc_nh* b, int* equal);
TC_API tc_status tc_nh_format(const tc_nh* a, tc_format format, char** out);
TC_API tc_status tc_nh_act(const tc_nh* a, const char* polynomial, tc_format format, char** out);
TC_API tc_status tc_nh_trace(const tc_nh* a, tc_format format, char** out);
TC_API tc_status tc_nh_matrix(const tc_nh* a, tc_format format, char** out);
TC_API void tc_nh_free(tc_nh* a);
TC_API tc_status tc_nh_basis_class(int n, const int* parts, size_t len, tc_format format,
                                   char** out);
TC_API tc_status tc_nh_verify(int n, tc_format format, char** out, int* all_passed);

/* Cartan datum for sl_n, all t_ij = 1 initially. */
TC_API tc_status tc_cartan_new(int n, tc_cartan** out);
TC_API tc_status tc_cartan_set_t(tc_cartan* cd, int i, int j, const char* value);
TC_API tc_status tc_cartan_gate_ok(const tc_cartan* cd, int* ok);
TC_API void tc_cartan_free(tc_cartan* cd);

/* Center elements of Z(lambda). */
TC_API tc_status tc_center_parse(const tc_cartan* cd, const int* weight, size_t len,
                                 const char* text, tc_center** out);
TC_API tc_status tc_center_from_json(const tc_cartan* cd, const char* json, tc_center** out);
TC_API tc_status tc_center_equal(const tc_center* a, const tc_center* b, int* equal);
TC_API tc_status tc_center_format(const tc_center* a, tc_format format, char** out);
TC_API tc_status tc_center_to_sym(const tc_center* a, int node, tc_sym** out);
TC_API void tc_center_free(tc_center* a);

TC_API tc_status tc_bubble_cc(const tc_cartan* cd, int node, int alpha, const int* weight,
                              size_t len, tc_center** out);
TC_API tc_status tc_bubble_absolute(const tc_cartan* cd, int node, int counterclockwise,
                                    int dots, const int* weight, size_t len, tc_center** out);
TC_API tc_status tc_bubble_power_sum(const tc_cartan* cd, int node, int r, const int* weight,
                                     size_t len, tc_power_formula formula, tc_center** out);
/* Slides e across a strand of color strand_node; up != 0 for an upward
 * strand, left_to_right != 0 for a bubble moving from the left region. */
TC_API tc_status tc_bubble_slide(const tc_cartan* cd, const tc_center* e, int strand_node,
                                 int up, int left_to_right, tc_format format, char** out);
TC_API tc_status tc_bubble_power_slide_check(const tc_cartan* cd, int i, int j, int r,
                                             const int* weight, size_t len, int* ok);
TC_API tc_status tc_bubble_grassmannian_check(const tc_cartan* cd, int node, int alpha_max,
                                              const int* weight, size_t len, int* ok);

/* The current algebra acting on finitely supported center vectors. */
TC_API tc_status tc_vector_from_center(const tc_center* e, tc_vector** out);
TC_API tc_status tc_vector_from_json(const tc_cartan* cd, const char* json, tc_vector** out);
TC_API tc_status tc_vector_equal(const tc_vector* a, const tc_vector* b, int* equal);
TC_API tc_status tc_vector_format(const tc_vector* v, tc_format format, char** out);
TC_API void tc_vector_free(tc_vector* v);
/* word: e.g. "x+[1,2] x-[1,0]"; the rightmost generator acts first. */
TC_API tc_status tc_current_act(const tc_cartan* cd, const char* word, const tc_vector* v,
                                tc_vector** out);
TC_API tc_status tc_current_verify(const tc_cartan* cd, int wmin, int wmax, int max_degree,
                                   int trials, uint64_t seed, int threads, tc_format format,
                                   char** out, int* all_passed);
TC_API tc_status tc_current_sl2_check(int r, int s, int wmin, int wmax, int trials,
                                      uint64_t seed, int* ok);
TC_API tc_status tc_current_calibration(tc_format format, char** out);

/* Cohomology of the Grassmannian Gr(k,n). */
TC_API tc_status tc_grass_parse(int k, int n, const char* text, tc_grass** out);
TC_API tc_status tc_grass_from_json(const char* json, tc_grass** out);
TC_API tc_status tc_grass_mul(const tc_grass* a, const tc_grass* b, tc_grass** out);
TC_API tc_status tc_grass_equal(const tc_grass* a, const tc_grass* b, int* equal);
TC_API tc_status tc_grass_format(const tc_grass* a, tc_format format, char** out);
TC_API void tc_grass_free(tc_grass* a);
TC_API tc_status tc_grass_dimension(int k, int n, tc_format format, char** out);
TC_API tc_status tc_grass_relations(int k, int n, int alpha_max, int* ok);
TC_API tc_status tc_grass_chern(int k, int n, tc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
