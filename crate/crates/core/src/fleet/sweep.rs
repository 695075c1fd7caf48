//! One-parameter sensitivity studies around the design flight.

use super::{design_record, simulate_increments, CriterionKind, FdiModel, MaskedRecord, ServiceLevel};
use crate::error::{ensure, FdiError, Result};
use crate::performance::FlightRecord;
use crate::profile::flight_time_for_distance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParameter {
    /// Seat load factor, 0..=1.
    LoadFactor,
    /// Total taxi time, min, split evenly between origin and destination.
    Taxi,
    /// Maximum altitude, ft.
    Altitude,
    /// Single-route distance flown for a whole lifetime, km.
    Distance,
}

impl SweepParameter {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepParameter::LoadFactor => "lf",
            SweepParameter::Taxi => "taxi",
            SweepParameter::Altitude => "alt",
            SweepParameter::Distance => "distance",
        }
    }
}

impl std::str::FromStr for SweepParameter {
    type Err = FdiError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lf" => Ok(SweepParameter::LoadFactor),
            "taxi" => Ok(SweepParameter::Taxi),
            "alt" => Ok(SweepParameter::Altitude),
            "distance" => Ok(SweepParameter::Distance),
            other => Err(FdiError::validation(
                "param",
                format!("unknown sweep parameter {other:?} (expected lf, taxi, alt or distance)"),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub wing_fdi: f64,
    pub fuselage_fdi: f64,
    /// Flights until retirement (distance sweeps) or the ESG flight count.
    pub flight_cycles: u64,
}

/// FDIs as one parameter moves over `steps` evenly spaced values in `[from, to]`.
///
/// For load factor, taxi and altitude the other drivers stay at the design
/// flight and the FDI is that of an aircraft flying the ESG flight count.
/// For distance each point is a full lifetime of identical flights retired at
/// the ESG service goal, with altitude following from the distance.
pub fn sweep_fdi(param: SweepParameter, from: f64, to: f64, steps: usize, model: &FdiModel) -> Result<Vec<SweepRow>> {
    ensure(steps >= 1, "steps", || "must be >= 1".into())?;
    ensure(from.is_finite() && to.is_finite() && from <= to, "range", || {
        format!("need finite from <= to, got {from}..{to}")
    })?;
    (0..steps)
        .map(|i| {
            let value = if steps == 1 {
                from
            } else {
                from + (to - from) * i as f64 / (steps - 1) as f64
            };
            sweep_point(param, value, model)
        })
        .collect()
}

fn sweep_point(param: SweepParameter, value: f64, model: &FdiModel) -> Result<SweepRow> {
    let cfg = &model.config;
    let design = &cfg.design;
    let mut record = design_record(design.design_flight_time, cfg)?;
    let mut altitude = Some(design.design_max_altitude);
    match param {
        SweepParameter::LoadFactor => record.seat_load_factor = value,
        SweepParameter::Taxi => {
            record.taxi_origin_min = value / 2.0;
            record.taxi_dest_min = value / 2.0;
        }
        SweepParameter::Altitude => {
            ensure(value >= 0.0, "altitude", || format!("must be >= 0, got {value}"))?;
            altitude = Some(value);
        }
        SweepParameter::Distance => return distance_point(value, record, model),
    }
    record.validate()?;
    let masked = MaskedRecord {
        record,
        forced_altitude_ft: altitude,
    };
    let per_flight = model.normalize(model.flight_damage(&masked.loads(cfg)?)?);
    Ok(SweepRow {
        value,
        wing_fdi: per_flight.wing * design.esg_fc as f64,
        fuselage_fdi: per_flight.fuselage * design.esg_fc as f64,
        flight_cycles: design.esg_fc,
    })
}

fn distance_point(distance_km: f64, mut record: FlightRecord, model: &FdiModel) -> Result<SweepRow> {
    ensure(distance_km > 0.0, "distance", || {
        format!("must be > 0, got {distance_km}")
    })?;
    let cfg = &model.config;
    record.distance_km = distance_km;
    record.flight_time_h = flight_time_for_distance(distance_km, &cfg.profile)?;
    let masked = MaskedRecord {
        record,
        forced_altitude_ft: None,
    };
    let damage = model.flight_damage(&masked.loads(cfg)?)?;
    let criterion = model.criterion(ServiceLevel::Esg, CriterionKind::ServiceGoal);
    let outcome = simulate_increments("sweep", &[(damage, masked.record.flight_time_h)], criterion, model)?;
    Ok(SweepRow {
        value: distance_km,
        wing_fdi: outcome.final_state.wing_fdi,
        fuselage_fdi: outcome.final_state.fuselage_fdi,
        flight_cycles: outcome.flights_flown,
    })
}
