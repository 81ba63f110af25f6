#ifndef QLIDAR_QLIDAR_H
#define QLIDAR_QLIDAR_H

/* C interface to the quantum LiDAR interferometer simulator.
 *
 * Every call returns a qlidar_status; on failure qlidar_last_error() holds a
 * message for the calling thread. Handles are opaque and must be released
 * with the matching destroy call. Output pointers are untouched on failure.
 */

#include <stddef.h>

#if defined(_WIN32) && defined(QLIDAR_BUILDING)
#define QLIDAR_API __declspec(dllexport)
#elif defined(_WIN32)
#define QLIDAR_API __declspec(dllimport)
#else
#define QLIDAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlidar_status {
  QLIDAR_OK = 0,
  QLIDAR_INVALID_ARGUMENT = 1,
  QLIDAR_DEGENERATE_STATE = 2,
  QLIDAR_NEGATIVE_PROBABILITY = 3,
  QLIDAR_ZERO_ENERGY = 4,
  QLIDAR_NO_PEAK = 5,
  QLIDAR_CUTOFF_TOO_SMALL = 6,
  QLIDAR_NUMERICAL_ERROR = 7,
  QLIDAR_BUFFER_TOO_SMALL = 8,
  QLIDAR_INTERNAL_ERROR = 9
} qlidar_status;

typedef enum qlidar_state_kind {
  QLIDAR_CS = 0,
  QLIDAR_ECSS = 1,
  QLIDAR_MPS0 = 2,
  QLIDAR_MPS1 = 3,
  QLIDAR_MPS2 = 4,
  QLIDAR_MPS3 = 5
} qlidar_state_kind;

typedef enum qlidar_scheme { QLIDAR_PARITY = 0, QLIDAR_Z = 1 } qlidar_scheme;

/* what the shot-noise limit counts as input energy */
typedef enum qlidar_snl_energy {
  QLIDAR_SNL_MEAN_PHOTON = 0,
  QLIDAR_SNL_AMPLITUDE = 1
} qlidar_snl_energy;

typedef enum qlidar_peak_side {
  QLIDAR_PEAKS_UPPER = 0,
  QLIDAR_PEAKS_LOWER = 1,
  QLIDAR_PEAKS_BOTH = 2,
  QLIDAR_PEAKS_PRINCIPAL = 3
} qlidar_peak_side;

typedef enum qlidar_loss_metric {
  QLIDAR_METRIC_RATIO = 0,
  QLIDAR_METRIC_FWHM = 1
} qlidar_loss_metric;

typedef struct qlidar_state_t* qlidar_state;
typedef struct qlidar_wigner_grid_t* qlidar_wigner_grid;
typedef struct qlidar_oracle_report_t* qlidar_oracle_report;

typedef struct qlidar_config {
  double phi;
  double loss_t;
  double loss_r;
} qlidar_config;

typedef struct qlidar_sensitivity {
  double phi;
  double delta_phi; /* +inf at stationary points */
  double snl;
  double ratio;
  int defined;
} qlidar_sensitivity;

QLIDAR_API const char* qlidar_status_string(qlidar_status status);
QLIDAR_API const char* qlidar_last_error(void);
QLIDAR_API const char* qlidar_state_kind_name(qlidar_state_kind kind);
QLIDAR_API qlidar_status qlidar_parse_state_kind(const char* name,
                                                 qlidar_state_kind* out);

/* worker threads for sweeps and grids; 0 uses every core */
QLIDAR_API void qlidar_set_threads(unsigned threads);

/* states */
QLIDAR_API qlidar_status qlidar_state_create(qlidar_state_kind kind,
                                             double alpha_re, double alpha_im,
                                             qlidar_state* out);
QLIDAR_API qlidar_status qlidar_state_create_custom(const double* weight_re,
                                                    const double* weight_im,
                                                    const double* amp_re,
                                                    const double* amp_im,
                                                    size_t n,
                                                    qlidar_state* out);
/* real alpha chosen so that the mean photon number equals mean */
QLIDAR_API qlidar_status qlidar_state_with_mean_photon(qlidar_state_kind kind,
                                                       double mean,
                                                       qlidar_state* out);
QLIDAR_API qlidar_status qlidar_state_vacuum(qlidar_state* out);
QLIDAR_API void qlidar_state_destroy(qlidar_state state);
QLIDAR_API qlidar_status qlidar_state_mean_photon(qlidar_state state,
                                                  double* out);
QLIDAR_API qlidar_status qlidar_state_max_alpha2(qlidar_state state,
                                                 double* out);
QLIDAR_API qlidar_status qlidar_state_terms(qlidar_state state, size_t* out);

QLIDAR_API qlidar_status qlidar_config_make(double phi, double loss_r,
                                            qlidar_config* out);

/* observables at one phase */
QLIDAR_API qlidar_status qlidar_expectation(qlidar_state a, qlidar_state b,
                                            const qlidar_config* config,
                                            qlidar_scheme scheme, double* out);
QLIDAR_API qlidar_status qlidar_expectation_derivative(
    qlidar_state a, qlidar_state b, const qlidar_config* config,
    qlidar_scheme scheme, double* out);
QLIDAR_API qlidar_status qlidar_photon_probability(qlidar_state a,
                                                   qlidar_state b,
                                                   const qlidar_config* config,
                                                   int n, double* out);
QLIDAR_API qlidar_status qlidar_binary_probabilities(
    qlidar_state a, qlidar_state b, const qlidar_config* config,
    double* p_plus, double* p_minus);
QLIDAR_API qlidar_status qlidar_phase_sensitivity(qlidar_state a,
                                                  qlidar_state b,
                                                  const qlidar_config* config,
                                                  qlidar_scheme scheme,
                                                  qlidar_snl_energy energy,
                                                  qlidar_sensitivity* out);
QLIDAR_API qlidar_status qlidar_snl(qlidar_state a, qlidar_state b,
                                    qlidar_snl_energy energy, double* out);

/* sweeps over phi; buffers hold `steps` entries */
QLIDAR_API qlidar_status qlidar_signal_curve(qlidar_state a, qlidar_state b,
                                             double loss_r,
                                             qlidar_scheme scheme,
                                             double phi_min, double phi_max,
                                             size_t steps, double* phis,
                                             double* values);
QLIDAR_API qlidar_status qlidar_sensitivity_curve(
    qlidar_state a, qlidar_state b, double loss_r, qlidar_scheme scheme,
    qlidar_snl_energy energy, double phi_min, double phi_max, size_t steps,
    qlidar_sensitivity* out);
QLIDAR_API qlidar_status qlidar_fwhm(qlidar_state a, qlidar_state b,
                                     double loss_r, qlidar_scheme scheme,
                                     double phi_min, double phi_max,
                                     size_t steps, double* out);
/* extrema with phi in (lo, hi]; samples_per_2pi >= 1000 */
QLIDAR_API qlidar_status qlidar_peak_count(qlidar_state a, qlidar_state b,
                                           double loss_r, qlidar_scheme scheme,
                                           double lo, double hi,
                                           int samples_per_2pi,
                                           qlidar_peak_side side, int* out);

typedef struct qlidar_loss_spec {
  qlidar_scheme scheme;
  qlidar_loss_metric metric;
  double phi;             /* ratio metric */
  double window_lo;       /* fwhm metric */
  double window_hi;
  size_t steps;
  qlidar_snl_energy energy;
} qlidar_loss_spec;

QLIDAR_API qlidar_status qlidar_loss_sweep(qlidar_state a, qlidar_state b,
                                           const qlidar_loss_spec* spec,
                                           const double* r_grid, size_t n,
                                           double* values);

QLIDAR_API qlidar_status qlidar_range_from_phase(double phi, double wavelength,
                                                 double* out);

/* Wigner function */
QLIDAR_API qlidar_status qlidar_wigner_point(qlidar_state state, double y1,
                                             double y2, double* out);
/* port-a marginal after the interferometer */
QLIDAR_API qlidar_status qlidar_wigner_reduced_point(
    qlidar_state a, qlidar_state b, const qlidar_config* config, double y1,
    double y2, double* out);
QLIDAR_API qlidar_status qlidar_wigner_default_range(qlidar_state state,
                                                     double* lo, double* hi);
QLIDAR_API qlidar_status qlidar_wigner_grid_create(qlidar_state state,
                                                   double y1_lo, double y1_hi,
                                                   double y2_lo, double y2_hi,
                                                   int resolution,
                                                   qlidar_wigner_grid* out);
QLIDAR_API void qlidar_wigner_grid_destroy(qlidar_wigner_grid grid);
/* borrowed pointers, valid until the grid is destroyed; values are stored
 * with y1 varying fastest */
QLIDAR_API qlidar_status qlidar_wigner_grid_data(qlidar_wigner_grid grid,
                                                 size_t* n1, size_t* n2,
                                                 const double** y1_axis,
                                                 const double** y2_axis,
                                                 const double** values);

typedef struct qlidar_negativity {
  double integral;
  double min_value;
  double min_y1;
  double min_y2;
  double negative_volume;
} qlidar_negativity;

QLIDAR_API qlidar_status qlidar_wigner_grid_summary(qlidar_wigner_grid grid,
                                                    qlidar_negativity* out);

/* Fock-space oracle. cutoff <= 0 picks one from the input energies.
 * probs receives P(0..cutoff) when capacity allows; *count is always set. */
QLIDAR_API qlidar_status qlidar_oracle_simulate(
    qlidar_state a, qlidar_state b, const qlidar_config* config, int cutoff,
    double* probs, size_t capacity, size_t* count, double* parity, double* z,
    double* tail_bound);

/* Any empty axis falls back to the standard grid. */
typedef struct qlidar_grid_spec {
  const qlidar_state_kind* kinds;
  size_t n_kinds;
  const double* alpha2;
  size_t n_alpha2;
  const double* zeta2; /* 0 means vacuum */
  size_t n_zeta2;
  const double* phi;
  size_t n_phi;
  const double* loss_r;
  size_t n_loss_r;
} qlidar_grid_spec;

typedef struct qlidar_oracle_point {
  qlidar_state_kind kind;
  double alpha2;
  double zeta2;
  double phi;
  double loss_r;
  int cutoff;
  double max_dp;      /* engine vs oracle, P(n <= cutoff) */
  double d_parity;
  double d_z;
  double d_closed_form; /* engine vs corrected closed forms, incl. slopes */
} qlidar_oracle_point;

/* spec may be NULL for the standard grid */
QLIDAR_API qlidar_status qlidar_oracle_check(const qlidar_grid_spec* spec,
                                             qlidar_oracle_report* out);
QLIDAR_API void qlidar_oracle_report_destroy(qlidar_oracle_report report);
QLIDAR_API qlidar_status qlidar_oracle_report_size(qlidar_oracle_report report,
                                                   size_t* out);
QLIDAR_API qlidar_status qlidar_oracle_report_point(qlidar_oracle_report report,
                                                    size_t index,
                                                    qlidar_oracle_point* out);

#ifdef __cplusplus
}
#endif

#endif
