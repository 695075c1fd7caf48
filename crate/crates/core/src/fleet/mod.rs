//! Lifetime simulation: each aircraft repeats its recorded usage until a
//! retirement criterion fires.
//!
//! Damage is normalized so that an aircraft flying design flights reaches a
//! fatigue damage index (FDI) of exactly 1.0 at the extended service goal.

mod summary;
mod sweep;

pub use summary::{FleetSummary, Histogram, ScenarioSummary, HISTOGRAM_BINS};
pub use sweep::{sweep_fdi, SweepParameter, SweepRow};

use rayon::prelude::*;

use crate::config::FdiConfig;
use crate::error::{ensure, FdiError, Result};
use crate::fatigue::CompensatedSum;
use crate::fuselage::fuselage_damage_per_flight;
use crate::io::FleetDataset;
use crate::performance::{takeoff_weight, FlightLoadsInput, FlightRecord};
use crate::profile::{distance_for_flight_time, max_altitude};
use crate::wing::{wing_damage_per_flight, TwistTable, WingScalingRules};

/// Upper bound on simulated flights per aircraft; guards against criteria that are never reached.
pub const MAX_SIMULATED_FLIGHTS: u64 = 100_000_000;

/// Raw (un-normalized) Miner damage of one flight.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FlightDamage {
    pub wing: f64,
    pub fuselage: f64,
}

/// Per-structure reference damages and DSG-level thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct FdiNormalization {
    /// Raw wing damage of a design-loads aircraft at the ESG.
    pub design_wing_damage_esg: f64,
    /// Raw fuselage damage of a design-loads aircraft at the ESG.
    pub design_fuselage_damage_esg: f64,
    /// Normalized wing FDI of a design-loads aircraft at the DSG.
    pub dsg_wing_threshold: f64,
    /// Normalized fuselage FDI of a design-loads aircraft at the DSG.
    pub dsg_fuselage_threshold: f64,
}

impl FdiNormalization {
    pub fn validate(&self) -> Result<()> {
        for (field, v) in [
            ("design_wing_damage_esg", self.design_wing_damage_esg),
            ("design_fuselage_damage_esg", self.design_fuselage_damage_esg),
            ("dsg_wing_threshold", self.dsg_wing_threshold),
            ("dsg_fuselage_threshold", self.dsg_fuselage_threshold),
        ] {
            ensure(v.is_finite() && v > 0.0, field, || {
                format!("must be > 0, got {v}; design flights cause no damage with this configuration")
            })?;
        }
        ensure(self.dsg_wing_threshold < 1.0, "dsg_wing_threshold", || {
            format!("must be < 1, got {}", self.dsg_wing_threshold)
        })?;
        ensure(self.dsg_fuselage_threshold < 1.0, "dsg_fuselage_threshold", || {
            format!("must be < 1, got {}", self.dsg_fuselage_threshold)
        })
    }
}

/// A flight with full payload, design taxi time (split evenly between origin
/// and destination) and the distance a flight of `flight_time_h` covers.
pub fn design_record(flight_time_h: f64, cfg: &FdiConfig) -> Result<FlightRecord> {
    let half_taxi = cfg.design.design_taxi_time / 2.0;
    Ok(FlightRecord {
        aircraft_id: "design".to_string(),
        distance_km: distance_for_flight_time(flight_time_h, &cfg.profile)?,
        flight_time_h,
        seat_load_factor: 1.0,
        taxi_origin_min: half_taxi,
        taxi_dest_min: half_taxi,
    })
}

/// Fatigue drivers of a design flight of the given duration, at the design altitude.
pub fn design_loads(flight_time_h: f64, cfg: &FdiConfig) -> Result<FlightLoadsInput> {
    let record = design_record(flight_time_h, cfg)?;
    Ok(FlightLoadsInput {
        takeoff_weight: takeoff_weight(&record, &cfg.aircraft)?,
        max_altitude: cfg.design.design_max_altitude,
        flight_time: flight_time_h,
        total_taxi_time: record.total_taxi_min(),
    })
}

/// Everything a simulation needs, shared read-only across workers.
#[derive(Debug, Clone)]
pub struct FdiModel {
    pub config: FdiConfig,
    pub twist: TwistTable,
    pub rules: WingScalingRules,
    pub normalization: FdiNormalization,
}

impl FdiModel {
    pub fn new(config: FdiConfig, twist: TwistTable) -> Result<Self> {
        config.validate()?;
        twist.validate()?;
        let rules = WingScalingRules::from_config(&config);
        rules.validate()?;
        let normalization = compute_normalization(&config, &twist)?;
        Ok(FdiModel {
            config,
            twist,
            rules,
            normalization,
        })
    }

    /// Default configuration with the shipped TWIST table.
    pub fn standard() -> Self {
        Self::new(FdiConfig::default(), TwistTable::standard()).expect("default model is valid")
    }

    pub fn flight_damage(&self, loads: &FlightLoadsInput) -> Result<FlightDamage> {
        loads.validate(&self.config.aircraft)?;
        let cfg = &self.config;
        Ok(FlightDamage {
            wing: wing_damage_per_flight(loads, &self.twist, &self.rules, &cfg.material),
            fuselage: fuselage_damage_per_flight(loads.max_altitude, &cfg.fuselage, &cfg.atmosphere, &cfg.material)?,
        })
    }

    /// Per-flight damage expressed as FDI increments.
    pub fn normalize(&self, damage: FlightDamage) -> FlightDamage {
        FlightDamage {
            wing: damage.wing / self.normalization.design_wing_damage_esg,
            fuselage: damage.fuselage / self.normalization.design_fuselage_damage_esg,
        }
    }

    pub fn criterion(&self, level: ServiceLevel, kind: CriterionKind) -> RetirementCriterion {
        let d = &self.config.design;
        match (kind, level) {
            (CriterionKind::ServiceGoal, ServiceLevel::Dsg) => RetirementCriterion::ServiceGoal {
                fc_limit: d.dsg_fc,
                fh_limit: d.dsg_fh,
            },
            (CriterionKind::ServiceGoal, ServiceLevel::Esg) => RetirementCriterion::ServiceGoal {
                fc_limit: d.esg_fc,
                fh_limit: d.esg_fh,
            },
            (CriterionKind::FdiThreshold, ServiceLevel::Dsg) => RetirementCriterion::FdiThreshold {
                wing_limit: self.normalization.dsg_wing_threshold,
                fuselage_limit: self.normalization.dsg_fuselage_threshold,
            },
            (CriterionKind::FdiThreshold, ServiceLevel::Esg) => RetirementCriterion::FdiThreshold {
                wing_limit: 1.0,
                fuselage_limit: 1.0,
            },
        }
    }
}

/// Reference damages from design flights: design flight time, full payload,
/// design taxi time and design altitude.
pub fn compute_normalization(cfg: &FdiConfig, twist: &TwistTable) -> Result<FdiNormalization> {
    cfg.validate()?;
    let rules = WingScalingRules::from_config(cfg);
    let mat = &cfg.material;
    let d = &cfg.design;

    let esg_loads = design_loads(d.design_flight_time, cfg)?;
    let dsg_loads = design_loads(d.dsg_design_flight_time, cfg)?;
    let wing_esg = wing_damage_per_flight(&esg_loads, twist, &rules, mat);
    let wing_dsg = wing_damage_per_flight(&dsg_loads, twist, &rules, mat);
    let fuselage = fuselage_damage_per_flight(d.design_max_altitude, &cfg.fuselage, &cfg.atmosphere, mat)?;

    let fc_ratio = d.dsg_fc as f64 / d.esg_fc as f64;
    let norm = FdiNormalization {
        design_wing_damage_esg: d.esg_fc as f64 * wing_esg,
        design_fuselage_damage_esg: d.esg_fc as f64 * fuselage,
        dsg_wing_threshold: fc_ratio * (wing_dsg / wing_esg),
        // fuselage damage per flight does not depend on flight time
        dsg_fuselage_threshold: fc_ratio,
    };
    norm.validate()?;
    Ok(norm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ServiceLevel {
    Dsg,
    Esg,
}

impl ServiceLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            ServiceLevel::Dsg => "DSG",
            ServiceLevel::Esg => "ESG",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionKind {
    ServiceGoal,
    FdiThreshold,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RetirementCriterion {
    /// Retire at a flight-cycle or flight-hour limit, whichever comes first.
    ServiceGoal { fc_limit: u64, fh_limit: f64 },
    /// Retire when either normalized FDI reaches its limit.
    FdiThreshold { wing_limit: f64, fuselage_limit: f64 },
}

impl RetirementCriterion {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            RetirementCriterion::ServiceGoal { fc_limit, fh_limit } => {
                fc_limit > 0 && fh_limit.is_finite() && fh_limit > 0.0
            }
            RetirementCriterion::FdiThreshold {
                wing_limit,
                fuselage_limit,
            } => wing_limit.is_finite() && wing_limit > 0.0 && fuselage_limit.is_finite() && fuselage_limit > 0.0,
        };
        ensure(ok, "criterion", || format!("limits must be > 0: {self:?}"))
    }
}

/// Which monitored quantities replace design assumptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MonitoringMask {
    pub use_load_factor: bool,
    pub use_altitude: bool,
    pub use_taxi: bool,
}

impl MonitoringMask {
    pub const NONE: MonitoringMask = MonitoringMask {
        use_load_factor: false,
        use_altitude: false,
        use_taxi: false,
    };
    pub const ALL: MonitoringMask = MonitoringMask {
        use_load_factor: true,
        use_altitude: true,
        use_taxi: true,
    };

    /// Short name used on the command line: none, taxi, alt, lf, alt+lf, all,
    /// or any `+`-joined combination of taxi, alt and lf.
    pub fn name(&self) -> String {
        if *self == Self::NONE {
            return "none".into();
        }
        if *self == Self::ALL {
            return "all".into();
        }
        let mut parts = Vec::new();
        if self.use_altitude {
            parts.push("alt");
        }
        if self.use_load_factor {
            parts.push("lf");
        }
        if self.use_taxi {
            parts.push("taxi");
        }
        parts.join("+")
    }

    /// Table-style label, e.g. "FDI + load factor + altitude".
    pub fn label(&self) -> String {
        let mut label = String::from("FDI");
        if self.use_load_factor {
            label.push_str(" + load factor");
        }
        if self.use_altitude {
            label.push_str(" + altitude");
        }
        if self.use_taxi {
            label.push_str(" + taxi");
        }
        label
    }
}

impl std::str::FromStr for MonitoringMask {
    type Err = FdiError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "none" => return Ok(Self::NONE),
            "all" => return Ok(Self::ALL),
            _ => {}
        }
        let mut mask = Self::NONE;
        for part in s.split('+') {
            match part.trim() {
                "lf" => mask.use_load_factor = true,
                "alt" => mask.use_altitude = true,
                "taxi" => mask.use_taxi = true,
                other => {
                    return Err(FdiError::validation(
                        "monitor",
                        format!(
                            "unknown monitored quantity {other:?} (expected none, all, or lf/alt/taxi joined by +)"
                        ),
                    ))
                }
            }
        }
        Ok(mask)
    }
}

/// A record after unmonitored quantities have been replaced by design values.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskedRecord {
    pub record: FlightRecord,
    /// Set when altitude is not monitored; otherwise altitude follows from distance.
    pub forced_altitude_ft: Option<f64>,
}

impl MaskedRecord {
    pub fn loads(&self, cfg: &FdiConfig) -> Result<FlightLoadsInput> {
        let max_altitude = match self.forced_altitude_ft {
            Some(alt) => alt,
            None => max_altitude(self.record.distance_km, &cfg.profile)?,
        };
        Ok(FlightLoadsInput {
            takeoff_weight: takeoff_weight(&self.record, &cfg.aircraft)?,
            max_altitude,
            flight_time: self.record.flight_time_h,
            total_taxi_time: self.record.total_taxi_min(),
        })
    }
}

pub fn apply_monitoring_mask(record: &FlightRecord, mask: MonitoringMask, cfg: &FdiConfig) -> MaskedRecord {
    let mut record = record.clone();
    if !mask.use_load_factor {
        record.seat_load_factor = 1.0;
    }
    if !mask.use_taxi {
        record.taxi_origin_min = cfg.design.design_taxi_time / 2.0;
        record.taxi_dest_min = cfg.design.design_taxi_time / 2.0;
    }
    MaskedRecord {
        record,
        forced_altitude_ft: (!mask.use_altitude).then_some(cfg.design.design_max_altitude),
    }
}

/// Accumulated usage and normalized damage of one airframe.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FdiState {
    pub wing_fdi: f64,
    pub fuselage_fdi: f64,
    pub flight_cycles: u64,
    pub flight_hours: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RetirementCause {
    FlightCycles,
    FlightHours,
    WingFdi,
    FuselageFdi,
}

impl RetirementCause {
    pub fn as_str(self) -> &'static str {
        match self {
            RetirementCause::FlightCycles => "fc",
            RetirementCause::FlightHours => "fh",
            RetirementCause::WingFdi => "wing_fdi",
            RetirementCause::FuselageFdi => "fuselage_fdi",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AircraftOutcome {
    pub aircraft_id: String,
    pub criterion: RetirementCriterion,
    pub final_state: FdiState,
    pub retired_because: RetirementCause,
    pub flights_flown: u64,
}

/// Per-flight FDI and hour increments for a history under a mask.
pub fn history_increments(
    history: &[FlightRecord],
    mask: MonitoringMask,
    model: &FdiModel,
) -> Result<Vec<(FlightDamage, f64)>> {
    history
        .iter()
        .map(|r| {
            r.validate()?;
            let loads = apply_monitoring_mask(r, mask, &model.config).loads(&model.config)?;
            Ok((model.flight_damage(&loads)?, r.flight_time_h))
        })
        .collect()
}

/// Replays `history` cyclically, one flight at a time, until the criterion
/// fires. The flight on which a limit is met or exceeded is the last one flown.
pub fn simulate_aircraft(
    aircraft_id: &str,
    history: &[FlightRecord],
    criterion: RetirementCriterion,
    mask: MonitoringMask,
    model: &FdiModel,
) -> Result<AircraftOutcome> {
    ensure(!history.is_empty(), "history", || {
        format!("aircraft {aircraft_id} has no flights")
    })?;
    criterion.validate()?;
    let increments = history_increments(history, mask, model)?;
    simulate_increments(aircraft_id, &increments, criterion, model)
}

/// Step-by-step simulation over precomputed raw per-flight damages and hours.
pub fn simulate_increments(
    aircraft_id: &str,
    increments: &[(FlightDamage, f64)],
    criterion: RetirementCriterion,
    model: &FdiModel,
) -> Result<AircraftOutcome> {
    ensure(!increments.is_empty(), "history", || {
        format!("aircraft {aircraft_id} has no flights")
    })?;
    let norm = &model.normalization;

    if let RetirementCriterion::FdiThreshold { .. } = criterion {
        let any_damage = increments.iter().any(|(d, _)| d.wing > 0.0 || d.fuselage > 0.0);
        ensure(any_damage, "criterion", || {
            format!("aircraft {aircraft_id}: no flight causes fatigue damage, FDI limit is never reached")
        })?;
    } else {
        // FC always advances, so a service goal always fires.
    }

    let mut wing = CompensatedSum::default();
    let mut fuselage = CompensatedSum::default();
    let mut hours = CompensatedSum::default();
    let mut cycles: u64 = 0;

    loop {
        let (damage, fh) = increments[(cycles % increments.len() as u64) as usize];
        wing.add(damage.wing);
        fuselage.add(damage.fuselage);
        hours.add(fh);
        cycles += 1;

        let state = FdiState {
            wing_fdi: wing.value() / norm.design_wing_damage_esg,
            fuselage_fdi: fuselage.value() / norm.design_fuselage_damage_esg,
            flight_cycles: cycles,
            flight_hours: hours.value(),
        };
        let cause = match criterion {
            RetirementCriterion::ServiceGoal { fc_limit, fh_limit } => {
                if cycles >= fc_limit {
                    Some(RetirementCause::FlightCycles)
                } else if state.flight_hours >= fh_limit {
                    Some(RetirementCause::FlightHours)
                } else {
                    None
                }
            }
            RetirementCriterion::FdiThreshold {
                wing_limit,
                fuselage_limit,
            } => {
                if state.wing_fdi >= wing_limit {
                    Some(RetirementCause::WingFdi)
                } else if state.fuselage_fdi >= fuselage_limit {
                    Some(RetirementCause::FuselageFdi)
                } else {
                    None
                }
            }
        };
        if let Some(cause) = cause {
            return Ok(AircraftOutcome {
                aircraft_id: aircraft_id.to_string(),
                criterion,
                final_state: state,
                retired_because: cause,
                flights_flown: cycles,
            });
        }
        if cycles >= MAX_SIMULATED_FLIGHTS {
            return Err(FdiError::validation(
                "criterion",
                format!("aircraft {aircraft_id}: not retired within {MAX_SIMULATED_FLIGHTS} flights"),
            ));
        }
    }
}

/// One retirement scenario of a fleet study.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub label: String,
    pub level: ServiceLevel,
    pub kind: CriterionKind,
    pub criterion: RetirementCriterion,
    /// Ignored for service-goal scenarios.
    pub mask: MonitoringMask,
}

impl Scenario {
    pub fn new(level: ServiceLevel, kind: CriterionKind, mask: MonitoringMask, model: &FdiModel) -> Self {
        let label = match kind {
            CriterionKind::ServiceGoal => format!("{} service goal", level.as_str()),
            CriterionKind::FdiThreshold => format!("{} {}", level.as_str(), mask.label()),
        };
        Scenario {
            label,
            level,
            kind,
            criterion: model.criterion(level, kind),
            mask: match kind {
                CriterionKind::ServiceGoal => MonitoringMask::NONE,
                CriterionKind::FdiThreshold => mask,
            },
        }
    }

    /// Short file-name-safe identifier, e.g. `fdi-esg_alt+lf`.
    pub fn key(&self) -> String {
        let level = match self.level {
            ServiceLevel::Dsg => "dsg",
            ServiceLevel::Esg => "esg",
        };
        match self.kind {
            CriterionKind::ServiceGoal => level.to_string(),
            CriterionKind::FdiThreshold => format!("fdi-{level}_{}", self.mask.name()),
        }
    }

    /// Parses `dsg`, `esg`, `fdi-dsg[:mask]` or `fdi-esg[:mask]`; the mask defaults to `none`.
    pub fn parse(token: &str, model: &FdiModel) -> Result<Self> {
        let (crit, mask) = match token.split_once(':') {
            Some((c, m)) => (c.trim(), m.parse::<MonitoringMask>()?),
            None => (token.trim(), MonitoringMask::NONE),
        };
        let (level, kind) = parse_criterion_name(crit)?;
        Ok(Scenario::new(level, kind, mask, model))
    }
}

pub fn parse_criterion_name(name: &str) -> Result<(ServiceLevel, CriterionKind)> {
    match name {
        "dsg" => Ok((ServiceLevel::Dsg, CriterionKind::ServiceGoal)),
        "esg" => Ok((ServiceLevel::Esg, CriterionKind::ServiceGoal)),
        "fdi-dsg" => Ok((ServiceLevel::Dsg, CriterionKind::FdiThreshold)),
        "fdi-esg" => Ok((ServiceLevel::Esg, CriterionKind::FdiThreshold)),
        other => Err(FdiError::validation(
            "criterion",
            format!("unknown criterion {other:?} (expected dsg, esg, fdi-dsg or fdi-esg)"),
        )),
    }
}

/// The full comparison table: for each service level, the service goal itself
/// and the FDI criterion under every monitoring combination.
pub fn standard_scenarios(model: &FdiModel) -> Vec<Scenario> {
    let masks = ["none", "taxi", "alt", "lf", "alt+lf", "all"];
    let mut out = Vec::new();
    for level in [ServiceLevel::Dsg, ServiceLevel::Esg] {
        out.push(Scenario::new(
            level,
            CriterionKind::ServiceGoal,
            MonitoringMask::NONE,
            model,
        ));
        for m in masks {
            let mask = m.parse().expect("known mask");
            out.push(Scenario::new(level, CriterionKind::FdiThreshold, mask, model));
        }
    }
    out
}

/// Outcomes of every aircraft under one scenario, in fleet order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutcomes {
    pub scenario: Scenario,
    pub outcomes: Vec<AircraftOutcome>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FleetResult {
    pub scenarios: Vec<ScenarioOutcomes>,
    pub summary: FleetSummary,
}

/// Simulates every aircraft under every scenario. Aircraft run in parallel on
/// the current rayon pool; results do not depend on scheduling.
pub fn simulate_fleet(fleet: &FleetDataset, scenarios: &[Scenario], model: &FdiModel) -> Result<FleetResult> {
    ensure(!fleet.aircraft.is_empty(), "fleet", || "fleet has no aircraft".into())?;
    ensure(!scenarios.is_empty(), "scenarios", || "no scenarios given".into())?;

    let entries: Vec<(&String, &Vec<FlightRecord>)> = fleet.aircraft.iter().collect();
    let per_aircraft: Vec<Vec<AircraftOutcome>> = entries
        .par_iter()
        .map(|(id, history)| simulate_one(id, history, scenarios, model))
        .collect::<Result<_>>()?;

    let scenarios: Vec<ScenarioOutcomes> = scenarios
        .iter()
        .enumerate()
        .map(|(i, s)| ScenarioOutcomes {
            scenario: s.clone(),
            outcomes: per_aircraft.iter().map(|o| o[i].clone()).collect(),
        })
        .collect();
    let summary = FleetSummary::from_outcomes(&scenarios);
    Ok(FleetResult { scenarios, summary })
}

fn simulate_one(
    id: &str,
    history: &[FlightRecord],
    scenarios: &[Scenario],
    model: &FdiModel,
) -> Result<Vec<AircraftOutcome>> {
    let wrap = |e: FdiError| FdiError::Aircraft {
        aircraft_id: id.to_string(),
        source: Box::new(e),
    };
    ensure(!history.is_empty(), "history", || "no flights".into()).map_err(wrap)?;
    // increments depend only on the mask; share them between scenarios
    let mut cache: Vec<(MonitoringMask, Vec<(FlightDamage, f64)>)> = Vec::new();
    let mut out = Vec::with_capacity(scenarios.len());
    for s in scenarios {
        if !cache.iter().any(|(m, _)| *m == s.mask) {
            cache.push((s.mask, history_increments(history, s.mask, model).map_err(wrap)?));
        }
        let increments = &cache.iter().find(|(m, _)| *m == s.mask).expect("cached").1;
        out.push(simulate_increments(id, increments, s.criterion, model).map_err(wrap)?);
    }
    Ok(out)
}

/// Runs `f` on a dedicated pool of `threads` workers (0 = rayon default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
