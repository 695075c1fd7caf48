//! Per-flight takeoff weight proxy and the cabin differential-pressure model.

use crate::config::{AircraftParams, AtmosphereParams, FdiConfig};
use crate::error::{ensure, Result};
use crate::profile;

pub const FT_TO_M: f64 = 0.3048;

/// One flight's operational data as recorded.
#[derive(Debug, Clone, PartialEq)]
pub struct FlightRecord {
    pub aircraft_id: String,
    /// Great-circle origin-destination distance, km.
    pub distance_km: f64,
    /// Airborne time, h.
    pub flight_time_h: f64,
    /// Fraction of seats occupied, 0..=1.
    pub seat_load_factor: f64,
    pub taxi_origin_min: f64,
    pub taxi_dest_min: f64,
}

impl FlightRecord {
    pub fn validate(&self) -> Result<()> {
        ensure(!self.aircraft_id.trim().is_empty(), "aircraft_id", || {
            "must not be empty".into()
        })?;
        ensure(
            self.distance_km.is_finite() && self.distance_km >= 0.0,
            "distance_km",
            || format!("must be >= 0, got {}", self.distance_km),
        )?;
        ensure(
            self.flight_time_h.is_finite() && self.flight_time_h >= 0.0,
            "flight_time_h",
            || format!("must be >= 0, got {}", self.flight_time_h),
        )?;
        ensure(
            self.distance_km == 0.0 || self.flight_time_h > 0.0,
            "flight_time_h",
            || "must be > 0 when distance_km > 0".into(),
        )?;
        ensure((0.0..=1.0).contains(&self.seat_load_factor), "seat_load_factor", || {
            format!("must be within [0, 1], got {}", self.seat_load_factor)
        })?;
        ensure(
            self.taxi_origin_min.is_finite() && self.taxi_origin_min >= 0.0,
            "taxi_origin_min",
            || format!("must be >= 0, got {}", self.taxi_origin_min),
        )?;
        ensure(
            self.taxi_dest_min.is_finite() && self.taxi_dest_min >= 0.0,
            "taxi_dest_min",
            || format!("must be >= 0, got {}", self.taxi_dest_min),
        )
    }

    pub fn total_taxi_min(&self) -> f64 {
        self.taxi_origin_min + self.taxi_dest_min
    }
}

/// The four fatigue drivers of one flight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlightLoadsInput {
    /// kg
    pub takeoff_weight: f64,
    /// ft
    pub max_altitude: f64,
    /// h
    pub flight_time: f64,
    /// Origin plus destination taxi time, min.
    pub total_taxi_time: f64,
}

/// Fuel burned taxiing at the destination, kg.
pub fn taxi_fuel(taxi_time_dest_min: f64, params: &AircraftParams) -> Result<f64> {
    ensure(
        taxi_time_dest_min.is_finite() && taxi_time_dest_min >= 0.0,
        "taxi_time_dest",
        || format!("must be >= 0, got {taxi_time_dest_min}"),
    )?;
    Ok(taxi_time_dest_min * 60.0 * params.taxi_fuel_rate)
}

/// Takeoff weight before propulsion fuel: empty weight, crew, passengers and
/// destination taxi fuel. Origin taxi fuel is burned before takeoff and is not included.
pub fn zero_fuel_takeoff_weight(record: &FlightRecord, params: &AircraftParams) -> Result<f64> {
    record.validate()?;
    let passengers = record.seat_load_factor * f64::from(params.seat_count) * params.pax_weight;
    Ok(params.oew + params.misc_payload + passengers + taxi_fuel(record.taxi_dest_min, params)?)
}

/// Propulsion fuel from the Breguet range equation, floored at the airline minimum.
pub fn propulsion_fuel(zero_fuel_tow: f64, distance_km: f64, params: &AircraftParams) -> Result<f64> {
    ensure(distance_km.is_finite() && distance_km >= 0.0, "distance", || {
        format!("must be >= 0, got {distance_km}")
    })?;
    ensure(
        zero_fuel_tow.is_finite() && zero_fuel_tow > 0.0,
        "zero_fuel_tow",
        || format!("must be > 0, got {zero_fuel_tow}"),
    )?;
    let cruise_speed = params.speed_of_sound_cruise * params.cruise_mach;
    let cruise_seconds = distance_km * 1_000.0 / cruise_speed;
    let exponent = cruise_seconds * params.gravity * params.sfc_cruise / params.lift_to_drag;
    let breguet = (zero_fuel_tow + params.fuel_reserve_weight) * exponent.exp_m1() * params.fuel_reserve_factor;
    Ok(breguet.max(params.min_prop_fuel))
}

/// Total takeoff weight, capped at MTOW.
pub fn takeoff_weight(record: &FlightRecord, params: &AircraftParams) -> Result<f64> {
    let zero_fuel = zero_fuel_takeoff_weight(record, params)?;
    let fuel = propulsion_fuel(zero_fuel, record.distance_km, params)?;
    Ok((zero_fuel + fuel).min(params.mtow))
}

/// Cabin differential pressure at `altitude_ft`, hPa.
pub fn differential_pressure(altitude_ft: f64, atmos: &AtmosphereParams) -> Result<f64> {
    ensure(altitude_ft.is_finite() && altitude_ft >= 0.0, "altitude", || {
        format!("must be >= 0, got {altitude_ft}")
    })?;
    Ok(-atmos.p0 * (-altitude_ft * FT_TO_M / atmos.h0).exp_m1())
}

/// Derives all fatigue drivers of a recorded flight, with altitude from the flight profile.
pub fn flight_loads(record: &FlightRecord, cfg: &FdiConfig) -> Result<FlightLoadsInput> {
    Ok(FlightLoadsInput {
        takeoff_weight: takeoff_weight(record, &cfg.aircraft)?,
        max_altitude: profile::max_altitude(record.distance_km, &cfg.profile)?,
        flight_time: record.flight_time_h,
        total_taxi_time: record.total_taxi_min(),
    })
}

impl FlightLoadsInput {
    pub fn validate(&self, params: &AircraftParams) -> Result<()> {
        ensure(
            self.takeoff_weight.is_finite() && self.takeoff_weight > 0.0 && self.takeoff_weight <= params.mtow,
            "takeoff_weight",
            || format!("must be within (0, mtow], got {}", self.takeoff_weight),
        )?;
        ensure(
            self.max_altitude.is_finite() && self.max_altitude >= 0.0,
            "max_altitude",
            || format!("must be >= 0, got {}", self.max_altitude),
        )?;
        ensure(
            self.flight_time.is_finite() && self.flight_time >= 0.0,
            "flight_time",
            || format!("must be >= 0, got {}", self.flight_time),
        )?;
        ensure(
            self.total_taxi_time.is_finite() && self.total_taxi_time >= 0.0,
            "total_taxi_time",
            || format!("must be >= 0, got {}", self.total_taxi_time),
        )
    }
}
