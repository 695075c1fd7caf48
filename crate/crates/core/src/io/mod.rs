//! Flight-record files, synthetic fleets and report emission.

mod reports;
mod synthetic;

pub use reports::{
    emit_reports, read_histogram_csv, read_scatter_csv, read_summary_csv, HistogramRow, ScatterRow, SummaryRow,
};
pub use synthetic::{generate_synthetic_fleet, SyntheticFleetSpec};

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use crate::error::{FdiError, Result};
use crate::performance::FlightRecord;

pub const FLEET_CSV_HEADER: [&str; 6] = [
    "aircraft_id",
    "distance_km",
    "flight_time_h",
    "seat_load_factor",
    "taxi_origin_min",
    "taxi_dest_min",
];

/// Flight histories keyed by aircraft, each in flown order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FleetDataset {
    pub aircraft: BTreeMap<String, Vec<FlightRecord>>,
    /// Where the data came from, e.g. a file name or generator settings.
    pub provenance: String,
}

impl FleetDataset {
    pub fn from_records(records: impl IntoIterator<Item = FlightRecord>, provenance: impl Into<String>) -> Self {
        let mut aircraft: BTreeMap<String, Vec<FlightRecord>> = BTreeMap::new();
        for r in records {
            aircraft.entry(r.aircraft_id.clone()).or_default().push(r);
        }
        FleetDataset {
            aircraft,
            provenance: provenance.into(),
        }
    }

    pub fn flight_count(&self) -> usize {
        self.aircraft.values().map(Vec::len).sum()
    }

    pub fn records(&self) -> impl Iterator<Item = &FlightRecord> {
        self.aircraft.values().flatten()
    }

    pub fn validate(&self) -> Result<()> {
        if self.aircraft.is_empty() {
            return Err(FdiError::validation("fleet", "no records"));
        }
        for (id, history) in &self.aircraft {
            if history.is_empty() {
                return Err(FdiError::validation("fleet", format!("aircraft {id} has no flights")));
            }
            for r in history {
                r.validate()?;
                if &r.aircraft_id != id {
                    return Err(FdiError::validation(
                        "aircraft_id",
                        format!("record for {} filed under {id}", r.aircraft_id),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Parses fleet CSV text. Errors name the 1-based line and the offending field.
pub fn parse_fleet_csv_str(text: &str, source_name: &str) -> Result<FleetDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());

    let header = reader
        .headers()
        .map_err(|e| FdiError::parse(source_name, 1, e.to_string()))?
        .clone();
    if header.is_empty() || (header.len() == 1 && header[0].is_empty()) {
        return Err(FdiError::parse(source_name, 0, "no records"));
    }
    let header_line = header.position().map_or(1, |p| p.line() as usize);
    if header.iter().ne(FLEET_CSV_HEADER.iter().copied()) {
        return Err(FdiError::parse(
            source_name,
            header_line,
            format!("expected header {:?}", FLEET_CSV_HEADER.join(",")),
        ));
    }

    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            FdiError::parse(source_name, line, e.to_string())
        })?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        if row.len() != FLEET_CSV_HEADER.len() {
            return Err(FdiError::parse(
                source_name,
                line,
                format!("expected {} columns, found {}", FLEET_CSV_HEADER.len(), row.len()),
            ));
        }
        let number = |i: usize| -> Result<f64> {
            row[i].parse::<f64>().map_err(|_| {
                FdiError::parse(
                    source_name,
                    line,
                    format!("{}: not a number: {:?}", FLEET_CSV_HEADER[i], &row[i]),
                )
            })
        };
        let record = FlightRecord {
            aircraft_id: row[0].to_string(),
            distance_km: number(1)?,
            flight_time_h: number(2)?,
            seat_load_factor: number(3)?,
            taxi_origin_min: number(4)?,
            taxi_dest_min: number(5)?,
        };
        record
            .validate()
            .map_err(|e| FdiError::parse(source_name, line, e.to_string()))?;
        records.push(record);
    }
    if records.is_empty() {
        return Err(FdiError::parse(source_name, 0, "no records"));
    }
    Ok(FleetDataset::from_records(records, source_name))
}

pub fn parse_fleet_csv(path: impl AsRef<Path>) -> Result<FleetDataset> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| FdiError::io(path, e))?;
    parse_fleet_csv_str(&text, &path.display().to_string())
}

pub fn fleet_csv_string(fleet: &FleetDataset) -> String {
    let mut out = FLEET_CSV_HEADER.join(",");
    out.push('\n');
    for r in fleet.records() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.aircraft_id, r.distance_km, r.flight_time_h, r.seat_load_factor, r.taxi_origin_min, r.taxi_dest_min
        ));
    }
    out
}

pub fn write_fleet_csv(fleet: &FleetDataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut file = std::fs::File::create(path).map_err(|e| FdiError::io(path, e))?;
    file.write_all(fleet_csv_string(fleet).as_bytes())
        .map_err(|e| FdiError::io(path, e))
}
