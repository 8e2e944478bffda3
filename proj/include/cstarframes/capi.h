/* C API for the cstarframes library: opaque handles, integer status codes,
 * and strings owned by the library (release with csf_string_free). All
 * functions are thread-safe as long as each handle is used from one thread
 * at a time; the error message store is thread-local. */

#ifndef CSTARFRAMES_CAPI_H
#define CSTARFRAMES_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CSF_API __declspec(dllexport)
#else
#define CSF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csf_status {
  CSF_OK = 0,
  CSF_ERROR_INVALID_ARGUMENT = 1,
  CSF_ERROR_SHAPE_MISMATCH = 2,
  CSF_ERROR_SINGULAR = 3,
  CSF_ERROR_NOT_A_FRAME = 4,
  CSF_ERROR_NOT_RIESZ = 5,
  CSF_ERROR_PARSE = 6,
  CSF_ERROR_IO = 7,
  CSF_ERROR_INFEASIBLE = 8,
  CSF_ERROR_INTERNAL = 9
} csf_status;

typedef enum csf_render_format {
  CSF_RENDER_TEXT = 0,
  CSF_RENDER_STRUCTURED = 1
} csf_render_format;

typedef struct csf_spec csf_spec;
typedef struct csf_report csf_report;

CSF_API const char* csf_version(void);

/* Message for the most recent failure on this thread; empty string when the
 * last call succeeded. The pointer stays valid until the next API call on
 * the same thread. */
CSF_API const char* csf_last_error(void);

CSF_API void csf_string_free(char* s);

CSF_API csf_status csf_spec_parse_text(const char* text, csf_spec** out);
CSF_API csf_status csf_spec_parse_file(const char* path, csf_spec** out);
CSF_API csf_status csf_spec_serialize(const csf_spec* spec, char** out);
CSF_API void csf_spec_free(csf_spec* spec);

typedef struct csf_analyze_options {
  double tol;             /* <= 0: spec/tool default */
  long quadrature_nodes;  /* <= 0: spec value; interval measures only */
} csf_analyze_options;

CSF_API void csf_analyze_options_init(csf_analyze_options* options);

CSF_API csf_status csf_analyze(const csf_spec* spec, const csf_analyze_options* options,
                               csf_report** out);
/* 1 when the analyzed map is a frame, 0 otherwise. */
CSF_API int csf_report_is_frame(const csf_report* report);
CSF_API csf_status csf_report_render(const csf_report* report, csf_render_format format,
                                     char** out);
CSF_API void csf_report_free(csf_report* report);

typedef struct csf_generate_options {
  uint64_t seed;
  uint32_t atoms;
  uint32_t rank;
  const uint32_t* blocks;
  size_t block_count;
  int riesz; /* nonzero: rejection-sample instances with Gram spectrum >= 1e-3 */
} csf_generate_options;

CSF_API csf_status csf_generate_spec(const csf_generate_options* options, char** out_text);

typedef struct csf_verify_options {
  uint64_t seed;
  uint32_t cases;
  double tol;           /* <= 0: default */
  const char* dump_dir; /* NULL: do not write violation dumps */
} csf_verify_options;

CSF_API csf_status csf_verify_theorems(const csf_verify_options* options, char** out_summary,
                                       uint32_t* out_violations);

#ifdef __cplusplus
}
#endif

#endif /* CSTARFRAMES_CAPI_H */
