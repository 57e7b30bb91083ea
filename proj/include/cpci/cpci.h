#ifndef CPCI_CPCI_H
#define CPCI_CPCI_H

/*
 * C interface to the critical-point confidence-interval library.
 *
 * Objects are opaque handles created by *_load / *_fit / *_sample / *_estimate
 * calls and released with the matching *_free. Every call returning
 * cpci_status leaves a thread-local message retrievable with
 * cpci_last_error() on failure. Output files are written to a temporary name
 * and renamed into place, so a failed call never leaves a partial file.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CPCI_BUILDING_LIBRARY)
#    define CPCI_API __declspec(dllexport)
#  else
#    define CPCI_API __declspec(dllimport)
#  endif
#else
#  define CPCI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpci_status {
  CPCI_OK = 0,
  CPCI_ERR_INPUT = 1,    /* argument outside the operation's domain */
  CPCI_ERR_PARSE = 2,    /* malformed file; message names the line */
  CPCI_ERR_IO = 3,       /* file could not be opened, written or renamed */
  CPCI_ERR_INTERNAL = 4
} cpci_status;

typedef enum cpci_type {
  CPCI_MINIMUM = 0,
  CPCI_MAXIMUM = 1,
  CPCI_SADDLE = 2,
  CPCI_REGULAR = 3
} cpci_type;

typedef struct cpci_ensemble cpci_ensemble;
typedef struct cpci_summary cpci_summary;
typedef struct cpci_model cpci_model;

typedef struct cpci_interval {
  double p_hat;
  double p_lower;
  double p_upper;
} cpci_interval;

/* The nine values of one vertex, indexed by cpci_type (regular excluded). */
typedef struct cpci_vertex_summary {
  cpci_interval by_type[3];
  size_t m;
  double gamma;
} cpci_vertex_summary;

typedef struct cpci_style {
  double r_max;
  double cell;
  double arc_stroke;
  double margin;
} cpci_style;

typedef struct cpci_coverage_report {
  double p_true;
  size_t m;
  double gamma;
  size_t reps;
  size_t hits;
  double coverage;
  double mean_width;
} cpci_coverage_report;

CPCI_API const char* cpci_last_error(void);
CPCI_API const char* cpci_version(void);

/* Ensembles (EGF1 text files). */
CPCI_API cpci_status cpci_ensemble_load(const char* path, cpci_ensemble** out);
CPCI_API cpci_status cpci_ensemble_from_values(size_t nx, size_t ny, size_t m, const double* values,
                                               cpci_ensemble** out);
CPCI_API cpci_status cpci_ensemble_save(const cpci_ensemble* e, const char* path);
CPCI_API cpci_status cpci_ensemble_dims(const cpci_ensemble* e, size_t* nx, size_t* ny, size_t* m);
/* Copies member `member` (nx*ny values, row-major) into `dst`. */
CPCI_API cpci_status cpci_ensemble_member(const cpci_ensemble* e, size_t member, double* dst,
                                          size_t dst_len);
CPCI_API void cpci_ensemble_free(cpci_ensemble* e);

/* Classification of one member: per-vertex types into `dst` (nx*ny entries). */
CPCI_API cpci_status cpci_classify_member(const cpci_ensemble* e, size_t member, cpci_type* dst,
                                          size_t dst_len);
CPCI_API cpci_status cpci_classify_member_csv(const cpci_ensemble* e, size_t member, const char* path);
CPCI_API cpci_status cpci_counts_csv(const cpci_ensemble* e, const char* path);

/* Jeffreys summaries. */
CPCI_API cpci_status cpci_estimate(const cpci_ensemble* e, double gamma, cpci_summary** out);
CPCI_API cpci_status cpci_summary_load_csv(const char* path, cpci_summary** out);
CPCI_API cpci_status cpci_summary_save_csv(const cpci_summary* s, const char* path);
CPCI_API cpci_status cpci_summary_dims(const cpci_summary* s, size_t* nx, size_t* ny);
CPCI_API cpci_status cpci_summary_vertex(const cpci_summary* s, size_t i, size_t j,
                                         cpci_vertex_summary* out);
/* Human-readable nine values of one vertex. Writes at most `len` bytes
 * including the terminator; `*needed` receives the full length + 1. */
CPCI_API cpci_status cpci_summary_describe(const cpci_summary* s, size_t i, size_t j, char* buf,
                                           size_t len, size_t* needed);
/* Fails with CPCI_ERR_INPUT unless every row has lower = estimate = upper. */
CPCI_API cpci_status cpci_summary_check_degenerate(const cpci_summary* s);
CPCI_API void cpci_summary_free(cpci_summary* s);

/* Rendering. */
CPCI_API cpci_style cpci_default_style(void);
CPCI_API cpci_status cpci_render_svg(const cpci_summary* s, const cpci_style* style, const char* path);

/* Synthetic ensembles (MMF1 model files). */
CPCI_API cpci_status cpci_model_fit(const cpci_ensemble* e, cpci_model** out);
CPCI_API cpci_status cpci_model_load(const char* path, cpci_model** out);
CPCI_API cpci_status cpci_model_save(const cpci_model* model, const char* path);
CPCI_API cpci_status cpci_model_sample(const cpci_model* model, size_t m_out, uint64_t seed,
                                       cpci_ensemble** out);
/* Monte-Carlo ground truth. With `collapse` set, every interval is replaced
 * by its point estimate, ready for degenerate ground-truth glyphs. */
CPCI_API cpci_status cpci_model_truth(const cpci_model* model, size_t n_draws, uint64_t seed,
                                      double gamma, int collapse, cpci_summary** out);
CPCI_API void cpci_model_free(cpci_model* model);

/* Coverage of the Jeffreys interval for Bin(m, p_true). */
CPCI_API cpci_status cpci_coverage(double p_true, size_t m, double gamma, size_t reps, uint64_t seed,
                                   cpci_coverage_report* out);

/* Writes `len` bytes to `path` through a temporary file and rename. */
CPCI_API cpci_status cpci_write_file(const char* path, const char* data, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* CPCI_CPCI_H */
