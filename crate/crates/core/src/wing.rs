//! Wing fatigue from the TWIST wing-root spectrum, scaled to each flight's
//! takeoff weight, flight time and taxi time.
//!
//! Scaling rules, all linear:
//! - every bin's mean stress is proportional to takeoff weight (design mean
//!   flight stress at the design weight);
//! - amplitudes stay at their design values;
//! - flight-segment cycle counts are proportional to flight time;
//! - ground-segment cycle counts are proportional to total taxi time;
//! - the ground-air-ground cycle happens once per flight.

use std::path::Path;

use crate::config::FdiConfig;
use crate::config::MaterialParams;
use crate::error::{ensure, FdiError, Result};
use crate::fatigue::{miner_damage, LoadCycleBin, LoadSpectrum, Segment};
use crate::performance::FlightLoadsInput;

/// Flights in one TWIST block.
pub const TWIST_BLOCK_FLIGHTS: f64 = 40_000.0;

const DEFAULT_TWIST_CSV: &str = include_str!("../data/twist.csv");

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistRow {
    pub segment: Segment,
    /// Mean stress as a multiple of the mean flight stress.
    pub relative_mean: f64,
    /// Amplitude as a multiple of the mean flight stress.
    pub relative_amplitude: f64,
    pub cycles_per_block: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwistTable {
    pub rows: Vec<TwistRow>,
    pub block_flights: f64,
}

impl TwistTable {
    /// The shipped table (`data/twist.csv`).
    pub fn standard() -> Self {
        Self::from_csv_str(DEFAULT_TWIST_CSV, "twist.csv", TWIST_BLOCK_FLIGHTS).expect("shipped TWIST table is valid")
    }

    pub fn from_csv_str(text: &str, source_name: &str, block_flights: f64) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());

        let headers = reader
            .headers()
            .map_err(|e| FdiError::parse(source_name, 1, e.to_string()))?
            .clone();
        let expected = ["segment", "relative_mean", "relative_amplitude", "cycles_per_block"];
        if headers.iter().collect::<Vec<_>>() != expected {
            return Err(FdiError::parse(
                source_name,
                0,
                format!("header must be {}", expected.join(",")),
            ));
        }

        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line() as usize);
                FdiError::parse(source_name, line, e.to_string())
            })?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            let err = |m: String| FdiError::parse(source_name, line, m);
            let segment: Segment = record[0].parse().map_err(err)?;
            let num = |i: usize| -> Result<f64> {
                record[i].parse::<f64>().map_err(|_| {
                    FdiError::parse(
                        source_name,
                        line,
                        format!("{}: not a number: {:?}", expected[i], &record[i]),
                    )
                })
            };
            let row = TwistRow {
                segment,
                relative_mean: num(1)?,
                relative_amplitude: num(2)?,
                cycles_per_block: num(3)?,
            };
            row.validate()
                .map_err(|e| FdiError::parse(source_name, line, e.to_string()))?;
            rows.push(row);
        }

        let table = TwistTable { rows, block_flights };
        table.validate()?;
        Ok(table)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(
            self.block_flights.is_finite() && self.block_flights > 0.0,
            "block_flights",
            || format!("must be > 0, got {}", self.block_flights),
        )?;
        ensure(!self.rows.is_empty(), "twist", || "table has no rows".into())?;
        for row in &self.rows {
            row.validate()?;
        }
        let gag: Vec<&TwistRow> = self
            .rows
            .iter()
            .filter(|r| r.segment == Segment::GroundAirGround)
            .collect();
        ensure(gag.len() == 1, "gag", || {
            format!("exactly one ground-air-ground row required, found {}", gag.len())
        })?;
        ensure(gag[0].cycles_per_block == self.block_flights, "gag", || {
            format!(
                "ground-air-ground row must have one cycle per flight ({}), got {}",
                self.block_flights, gag[0].cycles_per_block
            )
        })
    }

    /// Renders the table in its CSV layout.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("segment,relative_mean,relative_amplitude,cycles_per_block\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.segment.as_str(),
                r.relative_mean,
                r.relative_amplitude,
                r.cycles_per_block
            ));
        }
        out
    }
}

impl TwistRow {
    pub fn validate(&self) -> Result<()> {
        ensure(self.relative_mean.is_finite(), "relative_mean", || {
            format!("must be finite, got {}", self.relative_mean)
        })?;
        ensure(
            self.relative_amplitude.is_finite() && self.relative_amplitude > 0.0,
            "relative_amplitude",
            || format!("must be > 0, got {}", self.relative_amplitude),
        )?;
        ensure(
            self.cycles_per_block.is_finite() && self.cycles_per_block > 0.0,
            "cycles_per_block",
            || format!("must be > 0, got {}", self.cycles_per_block),
        )?;
        if self.segment == Segment::Ground {
            ensure(self.relative_mean < 0.0, "relative_mean", || {
                format!("ground rows need a negative mean, got {}", self.relative_mean)
            })?;
        }
        Ok(())
    }
}

/// Reads a TWIST table for the standard 40,000-flight block.
pub fn load_twist(path: impl AsRef<Path>) -> Result<TwistTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| FdiError::io(path, e))?;
    TwistTable::from_csv_str(&text, &path.display().to_string(), TWIST_BLOCK_FLIGHTS)
}

/// Reference point the TWIST cycle counts and stress levels correspond to.
#[derive(Debug, Clone, PartialEq)]
pub struct WingScalingRules {
    /// Mean flight stress at `design_weight`, MPa.
    pub design_mean_stress: f64,
    /// h
    pub design_flight_time: f64,
    /// min
    pub design_taxi_time: f64,
    /// kg
    pub design_weight: f64,
}

impl WingScalingRules {
    pub fn from_config(cfg: &FdiConfig) -> Self {
        WingScalingRules {
            design_mean_stress: cfg.design.design_mean_stress,
            design_flight_time: cfg.design.design_flight_time,
            design_taxi_time: cfg.design.design_taxi_time,
            design_weight: cfg.aircraft.mtow,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (field, v) in [
            ("design_mean_stress", self.design_mean_stress),
            ("design_flight_time", self.design_flight_time),
            ("design_taxi_time", self.design_taxi_time),
            ("design_weight", self.design_weight),
        ] {
            ensure(v.is_finite() && v > 0.0, field, || format!("must be > 0, got {v}"))?;
        }
        Ok(())
    }
}

/// The load spectrum of a single flight.
pub fn scale_spectrum(twist: &TwistTable, loads: &FlightLoadsInput, rules: &WingScalingRules) -> LoadSpectrum {
    let mean_flight_stress = rules.design_mean_stress * loads.takeoff_weight / rules.design_weight;
    let per_flight = 1.0 / twist.block_flights;
    let flight_scale = per_flight * loads.flight_time / rules.design_flight_time;
    let ground_scale = per_flight * loads.total_taxi_time / rules.design_taxi_time;

    let bins = twist
        .rows
        .iter()
        .map(|row| {
            let cycles = match row.segment {
                Segment::Flight => row.cycles_per_block * flight_scale,
                Segment::Ground => row.cycles_per_block * ground_scale,
                Segment::GroundAirGround => row.cycles_per_block * per_flight,
            };
            let bin = LoadCycleBin {
                mean_stress: row.relative_mean * mean_flight_stress,
                amplitude_stress: row.relative_amplitude * rules.design_mean_stress,
                cycle_count: cycles,
            };
            (row.segment, bin)
        })
        .collect();
    LoadSpectrum { bins }
}

/// Miner damage the wing root accumulates in one flight.
pub fn wing_damage_per_flight(
    loads: &FlightLoadsInput,
    twist: &TwistTable,
    rules: &WingScalingRules,
    mat: &MaterialParams,
) -> f64 {
    miner_damage(&scale_spectrum(twist, loads, rules), mat)
}
