//! C ABI over `fdi-core`.
//!
//! Every fallible function returns an [`FdiStatus`]. On failure the message is
//! kept per thread and can be fetched with [`fdi_last_error_message`]. Models
//! are opaque handles created by `fdi_model_new_*` and released with
//! [`fdi_model_free`]; a handle may be shared between threads for reading.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use fdi_core::fleet::{self, CriterionKind, MaskedRecord, MonitoringMask, RetirementCause, ServiceLevel};
use fdi_core::{FdiConfig, FdiError, FlightRecord, TwistTable};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Validation = 3,
    Parse = 4,
    Io = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdiCriterion {
    Dsg = 0,
    Esg = 1,
    FdiDsg = 2,
    FdiEsg = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdiRetirementCause {
    FlightCycles = 0,
    FlightHours = 1,
    WingFdi = 2,
    FuselageFdi = 3,
}

/// Monitoring bit: use the recorded seat load factor.
pub const FDI_MONITOR_LOAD_FACTOR: u32 = 1;
/// Monitoring bit: derive altitude from the recorded distance.
pub const FDI_MONITOR_ALTITUDE: u32 = 2;
/// Monitoring bit: use the recorded taxi times.
pub const FDI_MONITOR_TAXI: u32 = 4;

/// One recorded flight. A `flight_time_h` below zero means "derive from distance".
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdiFlightInput {
    pub distance_km: f64,
    pub flight_time_h: f64,
    pub seat_load_factor: f64,
    pub taxi_origin_min: f64,
    pub taxi_dest_min: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FdiFlightResult {
    pub takeoff_weight_kg: f64,
    pub max_altitude_ft: f64,
    pub flight_time_h: f64,
    pub wing_damage: f64,
    pub fuselage_damage: f64,
    pub wing_fdi_increment: f64,
    pub fuselage_fdi_increment: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdiAircraftOutcome {
    pub flights_flown: u64,
    pub flight_hours: f64,
    pub wing_fdi: f64,
    pub fuselage_fdi: f64,
    pub retired_because: FdiRetirementCause,
}

/// Opaque model handle.
pub struct FdiModel {
    inner: fleet::FdiModel,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).ok());
}

fn status_of(err: &FdiError) -> FdiStatus {
    match err {
        FdiError::Parse { .. } => FdiStatus::Parse,
        FdiError::Validation { .. } => FdiStatus::Validation,
        FdiError::Io { .. } => FdiStatus::Io,
        FdiError::Aircraft { source, .. } => status_of(source),
    }
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), (FdiStatus, String)>) -> FdiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            FdiStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_last_error(message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal error: {message}"));
            FdiStatus::Panic
        }
    }
}

fn core_err(err: FdiError) -> (FdiStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(name: &str) -> (FdiStatus, String) {
    (FdiStatus::NullPointer, format!("{name} is null"))
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn optional_path(ptr: *const c_char, name: &str) -> Result<Option<PathBuf>, (FdiStatus, String)> {
    if ptr.is_null() {
        return Ok(None);
    }
    let text = CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| (FdiStatus::InvalidArgument, format!("{name} is not valid UTF-8")))?;
    Ok(Some(PathBuf::from(text)))
}

fn to_record(input: &FdiFlightInput, model: &fleet::FdiModel) -> Result<FlightRecord, (FdiStatus, String)> {
    let flight_time_h = if input.flight_time_h < 0.0 {
        fdi_core::profile::flight_time_for_distance(input.distance_km, &model.config.profile).map_err(core_err)?
    } else {
        input.flight_time_h
    };
    let record = FlightRecord {
        aircraft_id: "ffi".into(),
        distance_km: input.distance_km,
        flight_time_h,
        seat_load_factor: input.seat_load_factor,
        taxi_origin_min: input.taxi_origin_min,
        taxi_dest_min: input.taxi_dest_min,
    };
    record.validate().map_err(core_err)?;
    Ok(record)
}

fn mask_from_bits(bits: u32) -> Result<MonitoringMask, (FdiStatus, String)> {
    let known = FDI_MONITOR_LOAD_FACTOR | FDI_MONITOR_ALTITUDE | FDI_MONITOR_TAXI;
    if bits & !known != 0 {
        return Err((
            FdiStatus::InvalidArgument,
            format!("unknown monitoring bits {:#x}", bits & !known),
        ));
    }
    Ok(MonitoringMask {
        use_load_factor: bits & FDI_MONITOR_LOAD_FACTOR != 0,
        use_altitude: bits & FDI_MONITOR_ALTITUDE != 0,
        use_taxi: bits & FDI_MONITOR_TAXI != 0,
    })
}

/// Creates a model with the built-in configuration and TWIST table.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn fdi_model_new_default(out: *mut *mut FdiModel) -> FdiStatus {
    fdi_model_from_files(ptr::null(), ptr::null(), out)
}

/// Creates a model from a configuration file and a TWIST CSV. Either path may
/// be null to use the built-in default.
///
/// # Safety
/// Paths must be null or NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fdi_model_from_files(
    config_path: *const c_char,
    twist_path: *const c_char,
    out: *mut *mut FdiModel,
) -> FdiStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let config = match optional_path(config_path, "config_path")? {
            Some(p) => fdi_core::load_config(p).map_err(core_err)?,
            None => FdiConfig::default(),
        };
        let twist = match optional_path(twist_path, "twist_path")? {
            Some(p) => fdi_core::load_twist(p).map_err(core_err)?,
            None => TwistTable::standard(),
        };
        let inner = fleet::FdiModel::new(config, twist).map_err(core_err)?;
        *out = Box::into_raw(Box::new(FdiModel { inner }));
        Ok(())
    })
}

/// Releases a model. Null is ignored.
///
/// # Safety
/// `model` must be null or a handle from `fdi_model_new_*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fdi_model_free(model: *mut FdiModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Fatigue drivers and damage of one flight; altitude follows from distance.
///
/// # Safety
/// `model` must be a live handle; `input` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fdi_single_flight(
    model: *const FdiModel,
    input: *const FdiFlightInput,
    out: *mut FdiFlightResult,
) -> FdiStatus {
    guard(|| {
        let model = &model.as_ref().ok_or_else(|| null("model"))?.inner;
        let input = input.as_ref().ok_or_else(|| null("input"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let record = to_record(input, model)?;
        let loads = MaskedRecord {
            record,
            forced_altitude_ft: None,
        }
        .loads(&model.config)
        .map_err(core_err)?;
        let damage = model.flight_damage(&loads).map_err(core_err)?;
        let fdi = model.normalize(damage);
        *out = FdiFlightResult {
            takeoff_weight_kg: loads.takeoff_weight,
            max_altitude_ft: loads.max_altitude,
            flight_time_h: loads.flight_time,
            wing_damage: damage.wing,
            fuselage_damage: damage.fuselage,
            wing_fdi_increment: fdi.wing,
            fuselage_fdi_increment: fdi.fuselage,
        };
        Ok(())
    })
}

/// Replays `count` flights cyclically until `criterion` (an [`FdiCriterion`]
/// value) retires the aircraft. `monitor` is a combination of the `FDI_MONITOR_*` bits and only matters
/// for FDI criteria.
///
/// # Safety
/// `model` must be a live handle; `flights` must point to `count` inputs; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fdi_simulate_aircraft(
    model: *const FdiModel,
    flights: *const FdiFlightInput,
    count: usize,
    criterion: u32,
    monitor: u32,
    out: *mut FdiAircraftOutcome,
) -> FdiStatus {
    guard(|| {
        let model = &model.as_ref().ok_or_else(|| null("model"))?.inner;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if flights.is_null() {
            return Err(null("flights"));
        }
        if count == 0 {
            return Err((FdiStatus::InvalidArgument, "count must be > 0".into()));
        }
        let history = std::slice::from_raw_parts(flights, count)
            .iter()
            .map(|f| to_record(f, model))
            .collect::<Result<Vec<_>, _>>()?;
        let (level, kind) = match criterion {
            c if c == FdiCriterion::Dsg as u32 => (ServiceLevel::Dsg, CriterionKind::ServiceGoal),
            c if c == FdiCriterion::Esg as u32 => (ServiceLevel::Esg, CriterionKind::ServiceGoal),
            c if c == FdiCriterion::FdiDsg as u32 => (ServiceLevel::Dsg, CriterionKind::FdiThreshold),
            c if c == FdiCriterion::FdiEsg as u32 => (ServiceLevel::Esg, CriterionKind::FdiThreshold),
            other => return Err((FdiStatus::InvalidArgument, format!("unknown criterion {other}"))),
        };
        let mask = mask_from_bits(monitor)?;
        let outcome =
            fleet::simulate_aircraft("ffi", &history, model.criterion(level, kind), mask, model).map_err(core_err)?;
        *out = FdiAircraftOutcome {
            flights_flown: outcome.flights_flown,
            flight_hours: outcome.final_state.flight_hours,
            wing_fdi: outcome.final_state.wing_fdi,
            fuselage_fdi: outcome.final_state.fuselage_fdi,
            retired_because: match outcome.retired_because {
                RetirementCause::FlightCycles => FdiRetirementCause::FlightCycles,
                RetirementCause::FlightHours => FdiRetirementCause::FlightHours,
                RetirementCause::WingFdi => FdiRetirementCause::WingFdi,
                RetirementCause::FuselageFdi => FdiRetirementCause::FuselageFdi,
            },
        };
        Ok(())
    })
}

/// Copy of the calling thread's last error message, or null if the last call
/// succeeded. Release it with [`fdi_string_free`].
#[no_mangle]
pub extern "C" fn fdi_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer from [`fdi_last_error_message`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fdi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fdi_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
