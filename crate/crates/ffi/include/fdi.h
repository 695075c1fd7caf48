#ifndef FDI_H
#define FDI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Monitoring bit: use the recorded seat load factor.
#define FDI_MONITOR_LOAD_FACTOR 1

// Monitoring bit: derive altitude from the recorded distance.
#define FDI_MONITOR_ALTITUDE 2

// Monitoring bit: use the recorded taxi times.
#define FDI_MONITOR_TAXI 4

typedef enum FdiStatus {
  FDI_STATUS_OK = 0,
  FDI_STATUS_NULL_POINTER = 1,
  FDI_STATUS_INVALID_ARGUMENT = 2,
  FDI_STATUS_VALIDATION = 3,
  FDI_STATUS_PARSE = 4,
  FDI_STATUS_IO = 5,
  FDI_STATUS_PANIC = 6,
} FdiStatus;

typedef enum FdiRetirementCause {
  FDI_RETIREMENT_CAUSE_FLIGHT_CYCLES = 0,
  FDI_RETIREMENT_CAUSE_FLIGHT_HOURS = 1,
  FDI_RETIREMENT_CAUSE_WING_FDI = 2,
  FDI_RETIREMENT_CAUSE_FUSELAGE_FDI = 3,
} FdiRetirementCause;

typedef enum FdiCriterion {
  FDI_CRITERION_DSG = 0,
  FDI_CRITERION_ESG = 1,
  FDI_CRITERION_FDI_DSG = 2,
  FDI_CRITERION_FDI_ESG = 3,
} FdiCriterion;

// Opaque model handle.
typedef struct FdiModel FdiModel;

// One recorded flight. A `flight_time_h` below zero means "derive from distance".
typedef struct FdiFlightInput {
  double distance_km;
  double flight_time_h;
  double seat_load_factor;
  double taxi_origin_min;
  double taxi_dest_min;
} FdiFlightInput;

typedef struct FdiFlightResult {
  double takeoff_weight_kg;
  double max_altitude_ft;
  double flight_time_h;
  double wing_damage;
  double fuselage_damage;
  double wing_fdi_increment;
  double fuselage_fdi_increment;
} FdiFlightResult;

typedef struct FdiAircraftOutcome {
  uint64_t flights_flown;
  double flight_hours;
  double wing_fdi;
  double fuselage_fdi;
  enum FdiRetirementCause retired_because;
} FdiAircraftOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a model with the built-in configuration and TWIST table.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle pointer.
enum FdiStatus fdi_model_new_default(struct FdiModel **out);

// Creates a model from a configuration file and a TWIST CSV. Either path may
// be null to use the built-in default.
//
// # Safety
// Paths must be null or NUL-terminated strings; `out` must be writable.
enum FdiStatus fdi_model_from_files(const char *config_path,
                                    const char *twist_path,
                                    struct FdiModel **out);

// Releases a model. Null is ignored.
//
// # Safety
// `model` must be null or a handle from `fdi_model_new_*` not yet freed.
void fdi_model_free(struct FdiModel *model);

// Fatigue drivers and damage of one flight; altitude follows from distance.
//
// # Safety
// `model` must be a live handle; `input` and `out` must be valid pointers.
enum FdiStatus fdi_single_flight(const struct FdiModel *model,
                                 const struct FdiFlightInput *input,
                                 struct FdiFlightResult *out);

// Replays `count` flights cyclically until `criterion` (an [`FdiCriterion`]
// value) retires the aircraft. `monitor` is a combination of the `FDI_MONITOR_*` bits and only matters
// for FDI criteria.
//
// # Safety
// `model` must be a live handle; `flights` must point to `count` inputs; `out` must be writable.
enum FdiStatus fdi_simulate_aircraft(const struct FdiModel *model,
                                     const struct FdiFlightInput *flights,
                                     size_t count,
                                     uint32_t criterion,
                                     uint32_t monitor,
                                     struct FdiAircraftOutcome *out);

// Copy of the calling thread's last error message, or null if the last call
// succeeded. Release it with [`fdi_string_free`].
char *fdi_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer from [`fdi_last_error_message`] not yet freed.
void fdi_string_free(char *s);

// Library version as a static NUL-terminated string.
const char *fdi_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FDI_H */
