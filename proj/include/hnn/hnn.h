#ifndef HNN_HNN_H
#define HNN_HNN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef HNN_BUILDING_LIBRARY
#    define HNN_API __declspec(dllexport)
#  else
#    define HNN_API __declspec(dllimport)
#  endif
#else
#  define HNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. A word handle is only meaningful with the group that
 * produced it. */
typedef struct hnn_group hnn_group;
typedef struct hnn_word hnn_word;

typedef enum hnn_status {
  HNN_OK = 0,
  HNN_ERR_INVALID_ARGUMENT = 1,
  HNN_ERR_PARSE = 2,
  HNN_ERR_DOMAIN = 3,
  HNN_ERR_HYPOTHESIS = 4,
  HNN_ERR_EXHAUSTED = 5,
  HNN_ERR_NOT_ELLIPTIC = 6,
  HNN_ERR_NOT_HYPERBOLIC = 7,
  HNN_ERR_INTERNAL = 8
} hnn_status;

typedef enum hnn_format { HNN_FORMAT_TEXT = 0, HNN_FORMAT_JSON = 1 } hnn_format;

/* Message of the last failed call on this thread; "" when none. */
HNN_API const char* hnn_last_error_message(void);
HNN_API const char* hnn_status_name(hnn_status status);

/* Strings returned through char** must be released with hnn_string_free. */
HNN_API void hnn_string_free(char* s);

HNN_API hnn_status hnn_group_new_bs(int64_t m, int64_t n, hnn_group** out);
/* Matrix syntax "2,1;1,1". */
HNN_API hnn_status hnn_group_new_zd(const char* matrix, hnn_group** out);
HNN_API void hnn_group_free(hnn_group* group);
HNN_API hnn_status hnn_group_describe(const hnn_group* group, char** out);

HNN_API hnn_status hnn_word_parse(const hnn_group* group, const char* text, hnn_word** out);
HNN_API hnn_status hnn_word_to_string(const hnn_group* group, const hnn_word* word, char** out);
HNN_API void hnn_word_free(hnn_word* word);

HNN_API hnn_status hnn_reduce(const hnn_group* group, const hnn_word* w, hnn_word** out);
HNN_API hnn_status hnn_normalize(const hnn_group* group, const hnn_word* w, hnn_word** out);
HNN_API hnn_status hnn_mul(const hnn_group* group, const hnn_word* u, const hnn_word* v, hnn_word** out);
HNN_API hnn_status hnn_inverse(const hnn_group* group, const hnn_word* u, hnn_word** out);
/* g x g^-1 */
HNN_API hnn_status hnn_conjugate(const hnn_group* group, const hnn_word* g, const hnn_word* x, hnn_word** out);
HNN_API hnn_status hnn_equals(const hnn_group* group, const hnn_word* u, const hnn_word* v, int* out);
HNN_API hnn_status hnn_length(const hnn_group* group, const hnn_word* w, size_t* out);

/* Decimal generator of Dom(phi^j) in BS(m,n). */
HNN_API hnn_status hnn_dom_phi_j(const hnn_group* group, unsigned j, char** out);

/* Rendered results, text or compact JSON. */
HNN_API hnn_status hnn_report_reduce(const hnn_group* group, const hnn_word* w, hnn_format format, char** out);
HNN_API hnn_status hnn_report_normal(const hnn_group* group, const hnn_word* w, hnn_format format, char** out);
HNN_API hnn_status hnn_report_equals(const hnn_group* group, const hnn_word* u, const hnn_word* v,
                                     hnn_format format, char** out);
HNN_API hnn_status hnn_report_length(const hnn_group* group, const hnn_word* w, hnn_format format, char** out);
HNN_API hnn_status hnn_report_icc(const hnn_group* group, hnn_format format, char** out);
HNN_API hnn_status hnn_report_orbit(const hnn_group* group, const hnn_word* x, unsigned radius, hnn_format format,
                                    char** out);
/* gamma may be NULL. */
HNN_API hnn_status hnn_report_folner(const hnn_group* group, unsigned k, const hnn_word* gamma, hnn_format format,
                                     char** out);
HNN_API hnn_status hnn_report_classify(const hnn_group* group, const hnn_word* gamma, hnn_format format,
                                       char** out);
HNN_API hnn_status hnn_report_fixed(const hnn_group* group, const hnn_word* gamma, unsigned radius,
                                    hnn_format format, char** out);
HNN_API hnn_status hnn_report_delta(const hnn_group* group, const hnn_word* gamma, unsigned radius,
                                    hnn_format format, char** out);
HNN_API hnn_status hnn_report_overlap(const hnn_group* group, const hnn_word* gamma1, const hnn_word* gamma2,
                                      unsigned radius, hnn_format format, char** out);
HNN_API hnn_status hnn_report_witness_unbounded(const hnn_group* group, unsigned count, hnn_format format,
                                                char** out);
HNN_API hnn_status hnn_report_escape(const hnn_group* group, const hnn_word* const* words, size_t count,
                                     unsigned n_max, hnn_format format, char** out);
HNN_API hnn_status hnn_report_domj(const hnn_group* group, unsigned j, hnn_format format, char** out);
/* gamma may be NULL. */
HNN_API hnn_status hnn_tree_dot(const hnn_group* group, unsigned radius, const hnn_word* gamma, char** out);

#ifdef __cplusplus
}
#endif

#endif
