/* C interface to the cable loss-allocation library.
 *
 * Objects are opaque handles created by *_load / *_run functions and released
 * with the matching *_free. Every fallible call returns a cl_status; on
 * failure cl_last_error() describes the problem (thread-local, valid until the
 * next failing call on the same thread). Units follow the cable file: mm for
 * geometry, m for lay lengths, ohm/km for resistances, W/m for losses.
 */
#ifndef CABLELOSS_H
#define CABLELOSS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CABLELOSS_BUILDING)
#    define CL_API __declspec(dllexport)
#  else
#    define CL_API __declspec(dllimport)
#  endif
#else
#  define CL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_INVALID_ARGUMENT = 1,
  CL_ERR_INVALID_SPEC = 2,
  CL_ERR_PARSE = 3,
  CL_ERR_UNIT = 4,
  CL_ERR_CONFIG = 5,
  CL_ERR_METHOD_ASSUMPTION = 6,
  CL_ERR_DEGENERATE_INPUT = 7,
  CL_ERR_MISSING_DATA = 8,
  CL_ERR_IO = 9,
  CL_ERR_INTERNAL = 10
} cl_status;

/* Warning bits reported in the `warnings` fields below. */
enum {
  CL_WARN_NONPHYSICAL_REACTANCE = 1u << 0,
  CL_WARN_NEGATIVE_LAMBDA2 = 1u << 1,
  CL_WARN_FC_BELOW_ONE = 1u << 2,
  CL_WARN_YA_NEGATIVE = 1u << 3,
  CL_WARN_NEGATIVE_ARMOR_LOSS = 1u << 4,
  CL_WARN_ARMORED_POWER_BELOW_UNARMORED = 1u << 5
};

typedef struct cl_cable cl_cable;
typedef struct cl_report cl_report;

typedef enum cl_em_method {
  CL_METHOD_ORIGINAL = 0,
  CL_METHOD_LEGACY = 1,
  CL_METHOD_IMPROVED = 2
} cl_em_method;

typedef struct cl_geometry {
  double conductor_spacing_mm;
  double sheath_mean_diameter_mm;
  double crossing_pitch_m;
  double model_length_m;
  double boundary_rotation_rad;
  double lay_factor;
} cl_geometry;

typedef struct cl_iec_result {
  double p_c, p_s, p_a; /* W/m */
  double lambda1_prime, lambda1_doubleprime, lambda2;
  double reactance_ohm_per_km;
  double r_c_dc, r_c_ac, r_s_dc, r_a_dc; /* ohm/km */
  double y_s, y_p;
  unsigned warnings;
} cl_iec_result;

typedef struct cl_corrections {
  double f_c, y_c, y_a;
  double r_c_ac;            /* standard AC resistance, ohm/km */
  double r_c_corrected;     /* with f_c applied, ohm/km */
  double r_s_dc;            /* ohm/km */
  double r_s_eq_unarmored;  /* ohm/km */
  double r_s_eq_armored;    /* ohm/km */
  unsigned warnings;
} cl_corrections;

typedef struct cl_em_result {
  double p_a, delta_p_m, delta_p_c_j, delta_p_s_j, delta_p_s_ec; /* W/m */
  double f_c, y_c, y_a;     /* improved method only, else 0 */
  double lambda1_doubleprime; /* legacy method only, else 0 */
  unsigned warnings;
} cl_em_result;

typedef struct cl_oracle_point {
  double rs_over_x;
  double lambda_oracle;
  double lambda_standard;
  double ratio;
} cl_oracle_point;

CL_API const char* cl_version(void);
CL_API const char* cl_last_error(void);
CL_API const char* cl_status_name(cl_status status);
/* Message for a single CL_WARN_* bit, or NULL. */
CL_API const char* cl_warning_message(unsigned bit);

CL_API size_t cl_template_count(void);
CL_API const char* cl_template_name(size_t index);

CL_API cl_status cl_cable_load(const char* path, cl_cable** out);
CL_API cl_status cl_cable_from_template(const char* name, cl_cable** out);
CL_API cl_status cl_cable_parse(const char* text, cl_cable** out);
CL_API void cl_cable_free(cl_cable* cable);
CL_API cl_status cl_cable_set_operating(cl_cable* cable, double frequency_hz,
                                        double temperature_c, double current_a);
CL_API int cl_cable_has_measurements(const cl_cable* cable);
/* Cable file text; release with cl_string_free. */
CL_API cl_status cl_cable_render(const cl_cable* cable, char** out_text);

CL_API cl_status cl_cable_geometry(const cl_cable* cable, cl_geometry* out);
/* include_eddy != 0 keeps lambda1'' in the solidly bonded sheath loss. */
CL_API cl_status cl_iec_allocate(const cl_cable* cable, int include_eddy, cl_iec_result* out);
CL_API cl_status cl_cable_corrections(const cl_cable* cable, cl_corrections* out);
CL_API cl_status cl_em_allocate(const cl_cable* cable, cl_em_method method, cl_em_result* out);
CL_API cl_status cl_relative_error(double estimate, double reference, double* out);

/* Three sheath current phasors for balanced conductor currents of magnitude
 * i_c. Resistance in ohm/km, spacing and diameter in mm. */
CL_API cl_status cl_oracle_solve(double r_s_ohm_per_km, double omega, double s_mm, double d_mm,
                                 double i_c, double sheath_re[3], double sheath_im[3]);
/* Sweep R_s/X logarithmically over [lo, hi] at the cable's geometry. */
CL_API cl_status cl_oracle_sweep(const cl_cable* cable, double lo, double hi, size_t points,
                                 cl_oracle_point* out);

/* methods: comma-separated list of iec, iec-sb, original, legacy, improved.
 * Inputs are paths or "template:NAME". */
CL_API cl_status cl_batch_run(const char* const* inputs, size_t count, const char* methods,
                              cl_report** out);
/* parameter: mu_real, L_c, L_a, d_a, N, temperature, frequency. */
CL_API cl_status cl_sweep_run(const char* base, const char* parameter, const double* values,
                              size_t count, const char* method, cl_report** out);
CL_API size_t cl_report_row_count(const cl_report* report);
CL_API size_t cl_report_error_count(const cl_report* report);
/* format: "csv" or "json". */
CL_API cl_status cl_report_render(const cl_report* report, const char* format, char** out_text);
CL_API cl_status cl_report_write(const cl_report* report, const char* format, const char* path);
CL_API void cl_report_free(cl_report* report);

CL_API void cl_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CABLELOSS_H */
