//! Fleet-level aggregation of per-aircraft outcomes.

use super::{CriterionKind, ScenarioOutcomes, ServiceLevel};
use crate::fatigue::pairwise_sum;

pub const HISTOGRAM_BINS: usize = 50;

/// Equal-width bin counts over `[0, upper]`; the upper edge belongs to the last bin.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub upper: f64,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn from_values(values: &[f64], bins: usize) -> Self {
        let max = values.iter().copied().fold(0.0_f64, f64::max);
        let upper = if max > 0.0 { max } else { 1.0 };
        let mut counts = vec![0_u64; bins];
        for &v in values {
            let idx = ((v / upper) * bins as f64).floor() as usize;
            counts[idx.min(bins - 1)] += 1;
        }
        Histogram { upper, counts }
    }

    pub fn bin_width(&self) -> f64 {
        self.upper / self.counts.len() as f64
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// One row of the lifetime comparison table plus plot data for the scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSummary {
    pub label: String,
    pub key: String,
    pub level: ServiceLevel,
    pub kind: CriterionKind,
    pub mean_fc: f64,
    pub mean_fh: f64,
    /// Mean FC relative to the service-goal scenario of the same level, percent.
    pub fc_ratio_pct: Option<f64>,
    pub fh_ratio_pct: Option<f64>,
    /// `(aircraft_id, wing FDI, fuselage FDI)` at retirement.
    pub scatter: Vec<(String, f64, f64)>,
    pub wing_histogram: Histogram,
    pub fuselage_histogram: Histogram,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FleetSummary {
    pub scenarios: Vec<ScenarioSummary>,
}

impl FleetSummary {
    pub fn from_outcomes(results: &[ScenarioOutcomes]) -> Self {
        let mut rows: Vec<ScenarioSummary> = results.iter().map(summarize).collect();
        let baselines: Vec<(ServiceLevel, f64, f64)> = rows
            .iter()
            .filter(|r| r.kind == CriterionKind::ServiceGoal)
            .map(|r| (r.level, r.mean_fc, r.mean_fh))
            .collect();
        for row in &mut rows {
            if let Some(&(_, fc, fh)) = baselines.iter().find(|b| b.0 == row.level) {
                row.fc_ratio_pct = Some(100.0 * row.mean_fc / fc);
                row.fh_ratio_pct = Some(100.0 * row.mean_fh / fh);
            }
        }
        FleetSummary { scenarios: rows }
    }

    pub fn get(&self, key: &str) -> Option<&ScenarioSummary> {
        self.scenarios.iter().find(|s| s.key == key)
    }
}

fn summarize(result: &ScenarioOutcomes) -> ScenarioSummary {
    let n = result.outcomes.len() as f64;
    let fcs: Vec<f64> = result.outcomes.iter().map(|o| o.flights_flown as f64).collect();
    let fhs: Vec<f64> = result.outcomes.iter().map(|o| o.final_state.flight_hours).collect();
    let scatter: Vec<(String, f64, f64)> = result
        .outcomes
        .iter()
        .map(|o| {
            (
                o.aircraft_id.clone(),
                o.final_state.wing_fdi,
                o.final_state.fuselage_fdi,
            )
        })
        .collect();
    let wing: Vec<f64> = scatter.iter().map(|s| s.1).collect();
    let fuselage: Vec<f64> = scatter.iter().map(|s| s.2).collect();
    ScenarioSummary {
        label: result.scenario.label.clone(),
        key: result.scenario.key(),
        level: result.scenario.level,
        kind: result.scenario.kind,
        mean_fc: pairwise_sum(&fcs) / n,
        mean_fh: pairwise_sum(&fhs) / n,
        fc_ratio_pct: None,
        fh_ratio_pct: None,
        wing_histogram: Histogram::from_values(&wing, HISTOGRAM_BINS),
        fuselage_histogram: Histogram::from_values(&fuselage, HISTOGRAM_BINS),
        scatter,
    }
}
