/* C API for the barron-risk library: two-layer ReLU network training with
 * path-norm regularization, computable risk bounds, Barron-function
 * approximants, and a random-feature kernel ridge baseline.
 *
 * All functions return br_status; on failure br_last_error() gives a
 * thread-local message. Handles are opaque and must be released with the
 * matching *_free function. */

#ifndef BARRON_RISK_H
#define BARRON_RISK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
    BR_OK = 0,
    BR_ERR_INVALID_ARGUMENT = 1,
    BR_ERR_IO = 2,
    BR_ERR_RUNTIME = 3
} br_status;

const char* br_version(void);

/* Message for the last failure on the calling thread; empty string if none. */
const char* br_last_error(void);

typedef struct br_dataset br_dataset;
typedef struct br_model br_model;

/* ---- datasets ---- */

/* target_json: {"d": int, "atoms": [{"p": f, "w": [f...], "a": f}]},
 * optionally wrapped as {"rep": {...}, "noise": {"kind": "none|gaussian|
 * bounded", "sigma": f, "tau0": f}}. Inputs are uniform on [-1,1]^d. */
br_status br_dataset_synth(const char* target_json, uint64_t n, uint64_t seed,
                           br_dataset** out);

br_status br_dataset_load_mnist(const char* image_path, const char* label_path,
                                br_dataset** out);

br_status br_dataset_load_csv(const char* csv_path, br_dataset** out);

size_t br_dataset_rows(const br_dataset* data);
size_t br_dataset_cols(const br_dataset* data);
void br_dataset_free(br_dataset* data);

/* ---- models ---- */

/* Loads the flat binary container written by the train command (u32 m,
 * u32 d, f64 a[m], f64 W[m*d], little-endian) with its JSON sidecar. */
br_status br_model_load(const char* bin_path, br_model** out);
br_status br_model_save(const br_model* model, const char* bin_path);

size_t br_model_width(const br_model* model);
size_t br_model_dim(const br_model* model);
double br_model_path_norm(const br_model* model);

/* Truncated network output Tf(x) in [0,1]. */
br_status br_model_predict(const br_model* model, const double* x, size_t d,
                           double* out);

/* Plug-in classifier 1[Tf(x) >= 1/2]. */
br_status br_model_classify(const br_model* model, const double* x, size_t d,
                            int* out);

void br_model_free(br_model* model);

/* ---- bounds ---- */

/* Evaluates the generalization-gap and population-risk bounds for a model on
 * a dataset; *json_out receives a malloc'd JSON report, released with
 * br_string_free. */
br_status br_bound_report(const br_model* model, const br_dataset* data,
                          double delta, char** json_out);

void br_string_free(char* s);

/* ---- experiment commands ---- */

/* command: train | rate-study | width-sweep | init-sweep | mnist-bench |
 * bound-report. config_text is the JSON config document. out_dir overrides
 * the config's output directory when non-NULL; seed overrides the master
 * seed when has_seed is nonzero; threads > 0 caps the worker pool. */
br_status br_run_command(const char* command, const char* config_text,
                         const char* out_dir, int has_seed, uint64_t seed,
                         int threads);

#ifdef __cplusplus
}
#endif

#endif /* BARRON_RISK_H */
