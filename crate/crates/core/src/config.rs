//! Model constants and the flat `key = value` configuration format.
//!
//! Every constant used by the damage model lives in [`FdiConfig`]. A config
//! file only has to name the values it changes; omitted keys keep the A320
//! reference values returned by [`FdiConfig::default`].
//!
//! ```text
//! # comment
//! mtow = 73500
//! c1 = 63
//! segment = initial_climb, climb, 5000, 2500, ias:175
//! ```
//!
//! `segment` lines are the one repeated key: if any are present they replace
//! the whole default climb/descent profile, in file order.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{ensure, FdiError, Result};

/// Performance and weight constants of the airframe.
#[derive(Debug, Clone, PartialEq)]
pub struct AircraftParams {
    /// Additional fuel reserve for an alternate airport, kg.
    pub fuel_reserve_weight: f64,
    /// Cruise Mach number.
    pub cruise_mach: f64,
    /// Fuel flow while taxiing, kg/s.
    pub taxi_fuel_rate: f64,
    /// Multiplier on propulsion fuel for takeoff and holding.
    pub fuel_reserve_factor: f64,
    /// m/s².
    pub gravity: f64,
    pub lift_to_drag: f64,
    /// kg
    pub max_payload: f64,
    /// kg
    pub mtow: f64,
    /// kg
    pub max_fuel: f64,
    /// Crew and other fixed payload, kg.
    pub misc_payload: f64,
    /// Minimum propulsion fuel on board at takeoff, kg.
    pub min_prop_fuel: f64,
    pub seat_count: u32,
    /// Operating empty weight, kg.
    pub oew: f64,
    /// Cruise specific fuel consumption in kg/(N·s).
    pub sfc_cruise: f64,
    /// Speed of sound at cruise altitude, m/s.
    pub speed_of_sound_cruise: f64,
    /// Mass per passenger including baggage, kg.
    pub pax_weight: f64,
}

impl Default for AircraftParams {
    fn default() -> Self {
        AircraftParams {
            fuel_reserve_weight: 2_500.0,
            cruise_mach: 0.79,
            taxi_fuel_rate: 0.1,
            fuel_reserve_factor: 1.05,
            gravity: 9.81,
            lift_to_drag: 15.0,
            max_payload: 16_600.0,
            mtow: 73_500.0,
            max_fuel: 20_000.0,
            misc_payload: 600.0,
            min_prop_fuel: 5_000.0,
            seat_count: 160,
            oew: 42_200.0,
            sfc_cruise: SFC_G_PER_KN_S_TO_SI * 16.88,
            speed_of_sound_cruise: 295.0,
            pax_weight: 100.0,
        }
    }
}

/// g/(kN·s) to kg/(N·s).
pub const SFC_G_PER_KN_S_TO_SI: f64 = 1e-6;

impl AircraftParams {
    pub fn validate(&self) -> Result<()> {
        let masses = [
            ("fuel_reserve_weight", self.fuel_reserve_weight),
            ("max_payload", self.max_payload),
            ("mtow", self.mtow),
            ("max_fuel", self.max_fuel),
            ("misc_payload", self.misc_payload),
            ("min_prop_fuel", self.min_prop_fuel),
            ("oew", self.oew),
            ("pax_weight", self.pax_weight),
        ];
        for (field, value) in masses {
            ensure(value.is_finite() && value > 0.0, field, || {
                format!("mass must be > 0, got {value}")
            })?;
        }
        ensure(self.seat_count > 0, "seat_count", || "must be > 0".into())?;
        ensure(
            self.oew + self.misc_payload + self.max_payload <= self.mtow,
            "mtow",
            || {
                format!(
                    "oew + misc_payload + max_payload = {} exceeds mtow = {}",
                    self.oew + self.misc_payload + self.max_payload,
                    self.mtow
                )
            },
        )?;
        ensure(self.cruise_mach > 0.0 && self.cruise_mach < 1.0, "cruise_mach", || {
            format!("0 < cruise_mach < 1 required, got {}", self.cruise_mach)
        })?;
        ensure(self.lift_to_drag > 0.0, "lift_to_drag", || {
            format!("must be > 0, got {}", self.lift_to_drag)
        })?;
        ensure(self.min_prop_fuel <= self.max_fuel, "min_prop_fuel", || {
            format!(
                "min_prop_fuel <= max_fuel required, got {} > {}",
                self.min_prop_fuel, self.max_fuel
            )
        })?;
        let positive = [
            ("gravity", self.gravity),
            ("sfc_cruise", self.sfc_cruise),
            ("speed_of_sound_cruise", self.speed_of_sound_cruise),
            ("fuel_reserve_factor", self.fuel_reserve_factor),
        ];
        for (field, value) in positive {
            ensure(value.is_finite() && value > 0.0, field, || {
                format!("must be > 0, got {value}")
            })?;
        }
        ensure(
            self.taxi_fuel_rate.is_finite() && self.taxi_fuel_rate >= 0.0,
            "taxi_fuel_rate",
            || format!("must be >= 0, got {}", self.taxi_fuel_rate),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Climb,
    Cruise,
    Descent,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Climb => "climb",
            Phase::Cruise => "cruise",
            Phase::Descent => "descent",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "climb" => Some(Phase::Climb),
            "cruise" => Some(Phase::Cruise),
            "descent" => Some(Phase::Descent),
            _ => None,
        }
    }
}

/// Commanded speed of a profile segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Speed {
    /// Indicated airspeed in knots (treated as calibrated airspeed).
    Ias(f64),
    Mach(f64),
}

impl std::fmt::Display for Speed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Speed::Ias(kts) => write!(f, "ias:{kts}"),
            Speed::Mach(m) => write!(f, "mach:{m}"),
        }
    }
}

impl std::str::FromStr for Speed {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| format!("speed must look like ias:<kts> or mach:<M>, got {s:?}"))?;
        let value: f64 = value.trim().parse().map_err(|_| format!("bad speed value {value:?}"))?;
        match kind.trim() {
            "ias" => Ok(Speed::Ias(value)),
            "mach" => Ok(Speed::Mach(value)),
            other => Err(format!("unknown speed kind {other:?}")),
        }
    }
}

/// One row of the climb/cruise/descent schedule.
///
/// A climb segment runs from the previous climb ceiling (or the ground) up to
/// `ceiling_ft`. A descent segment runs from `ceiling_ft` down to the next
/// descent segment's ceiling (or the ground).
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSegment {
    pub name: String,
    pub phase: Phase,
    pub ceiling_ft: f64,
    /// Rate of climb or descent in ft/min; zero for cruise.
    pub rate_fpm: f64,
    pub speed: Speed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClimbProfile {
    pub segments: Vec<ProfileSegment>,
}

impl Default for ClimbProfile {
    fn default() -> Self {
        let seg = |name: &str, phase, ceiling_ft, rate_fpm, speed| ProfileSegment {
            name: name.to_string(),
            phase,
            ceiling_ft,
            rate_fpm,
            speed,
        };
        ClimbProfile {
            segments: vec![
                seg("initial_climb", Phase::Climb, 5_000.0, 2_500.0, Speed::Ias(175.0)),
                seg("climb_fl150", Phase::Climb, 15_000.0, 2_000.0, Speed::Ias(290.0)),
                seg("climb_fl240", Phase::Climb, 24_000.0, 1_400.0, Speed::Ias(290.0)),
                seg("mach_climb_fl390", Phase::Climb, 39_000.0, 1_000.0, Speed::Mach(0.78)),
                seg("cruise", Phase::Cruise, 39_000.0, 0.0, Speed::Mach(0.79)),
                seg(
                    "initial_descent_fl240",
                    Phase::Descent,
                    39_000.0,
                    1_000.0,
                    Speed::Mach(0.78),
                ),
                seg("descent_fl100", Phase::Descent, 24_000.0, 3_500.0, Speed::Ias(290.0)),
                seg("approach", Phase::Descent, 10_000.0, 1_500.0, Speed::Ias(250.0)),
            ],
        }
    }
}

impl ClimbProfile {
    pub fn climb(&self) -> impl Iterator<Item = &ProfileSegment> {
        self.segments.iter().filter(|s| s.phase == Phase::Climb)
    }

    pub fn descent(&self) -> impl Iterator<Item = &ProfileSegment> {
        self.segments.iter().filter(|s| s.phase == Phase::Descent)
    }

    pub fn cruise(&self) -> &ProfileSegment {
        self.segments
            .iter()
            .find(|s| s.phase == Phase::Cruise)
            .expect("validated profile has a cruise segment")
    }

    /// Highest altitude the schedule reaches, ft.
    pub fn cruise_ceiling_ft(&self) -> f64 {
        self.cruise().ceiling_ft
    }

    pub fn validate(&self) -> Result<()> {
        let field = "segment";
        let cruise_count = self.segments.iter().filter(|s| s.phase == Phase::Cruise).count();
        ensure(cruise_count == 1, field, || {
            format!("exactly one cruise segment required, found {cruise_count}")
        })?;

        // climbs, then cruise, then descents
        let order = |p: Phase| match p {
            Phase::Climb => 0,
            Phase::Cruise => 1,
            Phase::Descent => 2,
        };
        ensure(
            self.segments.windows(2).all(|w| order(w[0].phase) <= order(w[1].phase)),
            field,
            || "segments must be ordered climb, cruise, descent".into(),
        )?;

        for s in &self.segments {
            ensure(s.ceiling_ft.is_finite() && s.ceiling_ft > 0.0, field, || {
                format!("{}: ceiling must be > 0", s.name)
            })?;
            match s.phase {
                Phase::Cruise => ensure(s.rate_fpm == 0.0, field, || {
                    format!("{}: cruise rate must be 0", s.name)
                })?,
                _ => ensure(s.rate_fpm.is_finite() && s.rate_fpm > 0.0, field, || {
                    format!("{}: rate must be > 0", s.name)
                })?,
            }
            let speed_ok = match s.speed {
                Speed::Ias(v) => v.is_finite() && v > 0.0,
                Speed::Mach(m) => m.is_finite() && m > 0.0 && m < 1.0,
            };
            ensure(speed_ok, field, || format!("{}: invalid speed {}", s.name, s.speed))?;
        }

        let climbs: Vec<f64> = self.climb().map(|s| s.ceiling_ft).collect();
        ensure(!climbs.is_empty(), field, || {
            "at least one climb segment required".into()
        })?;
        ensure(climbs.windows(2).all(|w| w[0] < w[1]), field, || {
            "climb ceilings must be strictly increasing".into()
        })?;
        let top = *climbs.last().unwrap_or(&0.0);
        ensure(self.cruise_ceiling_ft() == top, field, || {
            format!(
                "cruise ceiling {} must equal the last climb ceiling {top}",
                self.cruise_ceiling_ft()
            )
        })?;

        let descents: Vec<f64> = self.descent().map(|s| s.ceiling_ft).collect();
        ensure(!descents.is_empty(), field, || {
            "at least one descent segment required".into()
        })?;
        ensure(descents[0] == top, field, || {
            format!("first descent segment must start at the cruise ceiling {top}")
        })?;
        ensure(descents.windows(2).all(|w| w[0] > w[1]), field, || {
            "descent ceilings must be strictly decreasing".into()
        })
    }
}

/// S-N curve and mean-stress sensitivity of the structural material.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialParams {
    /// Mean-stress sensitivity of the Haigh diagram.
    pub m_sigma: f64,
    /// Fatigue limit, MPa.
    pub c1: f64,
    /// Ultimate strength, MPa.
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    /// Stress concentration factor the S-N constants were fitted for. Not used in computation.
    pub kt: f64,
}

impl Default for MaterialParams {
    /// Al 2024-T3, notched (Kt = 2.5).
    fn default() -> Self {
        MaterialParams {
            m_sigma: 0.4,
            c1: 63.0,
            c2: 470.0,
            c3: 3.50,
            c4: 2.07,
            kt: 2.5,
        }
    }
}

impl MaterialParams {
    pub fn validate(&self) -> Result<()> {
        ensure(self.c1.is_finite() && self.c1 > 0.0, "c1", || {
            format!("must be > 0, got {}", self.c1)
        })?;
        ensure(self.c2.is_finite() && self.c1 < self.c2, "c2", || {
            format!("c1 < c2 required, got c1 = {}, c2 = {}", self.c1, self.c2)
        })?;
        ensure(self.c3.is_finite() && self.c3 > 0.0, "c3", || {
            format!("must be > 0, got {}", self.c3)
        })?;
        ensure(self.c4.is_finite() && self.c4 > 0.0, "c4", || {
            format!("must be > 0, got {}", self.c4)
        })?;
        ensure((0.0..1.0).contains(&self.m_sigma), "m_sigma", || {
            format!("0 <= m_sigma < 1 required, got {}", self.m_sigma)
        })?;
        ensure(self.kt.is_finite() && self.kt > 0.0, "kt", || {
            format!("must be > 0, got {}", self.kt)
        })
    }
}

/// Parameters of the exponential cabin differential-pressure model.
#[derive(Debug, Clone, PartialEq)]
pub struct AtmosphereParams {
    /// Sea-level pressure, hPa.
    pub p0: f64,
    /// Scale height, m.
    pub h0: f64,
}

impl Default for AtmosphereParams {
    fn default() -> Self {
        AtmosphereParams {
            p0: 1013.25,
            h0: 8_435.0,
        }
    }
}

impl AtmosphereParams {
    pub fn validate(&self) -> Result<()> {
        ensure(self.p0.is_finite() && self.p0 > 0.0, "p0", || {
            format!("must be > 0, got {}", self.p0)
        })?;
        ensure(self.h0.is_finite() && self.h0 > 0.0, "h0", || {
            format!("must be > 0, got {}", self.h0)
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuselageGeometry {
    /// Mean fuselage diameter, m.
    pub diameter_mean: f64,
    /// Skin thickness, m.
    pub skin_thickness: f64,
}

impl Default for FuselageGeometry {
    fn default() -> Self {
        FuselageGeometry {
            diameter_mean: 4.14,
            skin_thickness: 0.001,
        }
    }
}

/// Thin-wall limit for the hoop stress formula: t <= d / 20.
const THIN_WALL_RATIO: f64 = 20.0;

impl FuselageGeometry {
    pub fn validate(&self) -> Result<()> {
        ensure(
            self.diameter_mean.is_finite() && self.diameter_mean > 0.0,
            "diameter_mean",
            || format!("must be > 0, got {}", self.diameter_mean),
        )?;
        ensure(
            self.skin_thickness.is_finite() && self.skin_thickness > 0.0,
            "skin_thickness",
            || format!("must be > 0, got {}", self.skin_thickness),
        )?;
        ensure(
            self.skin_thickness * THIN_WALL_RATIO <= self.diameter_mean,
            "skin_thickness",
            || {
                format!(
                    "thin-wall model needs skin_thickness <= diameter_mean / {THIN_WALL_RATIO}, got {}",
                    self.skin_thickness
                )
            },
        )
    }
}

/// Design-load reference point and certification limits.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignReference {
    /// Wing-root mean flight stress at MTOW, MPa.
    pub design_mean_stress: f64,
    /// Flight time the load spectrum's flight cycles correspond to, h.
    pub design_flight_time: f64,
    /// Total taxi time the spectrum's ground cycles correspond to, min.
    pub design_taxi_time: f64,
    /// Maximum altitude of a design flight, ft.
    pub design_max_altitude: f64,
    /// Flights covered by one block of the load spectrum.
    pub twist_block_flights: f64,
    pub dsg_fc: u64,
    /// h
    pub dsg_fh: f64,
    pub esg_fc: u64,
    /// h
    pub esg_fh: f64,
    /// Average flight time at which both DSG limits are reached together, h.
    pub dsg_design_flight_time: f64,
}

impl Default for DesignReference {
    fn default() -> Self {
        DesignReference {
            design_mean_stress: 100.0,
            design_flight_time: 2.0,
            design_taxi_time: 25.0,
            design_max_altitude: 39_100.0,
            twist_block_flights: 40_000.0,
            dsg_fc: 48_000,
            dsg_fh: 60_000.0,
            esg_fc: 60_000,
            esg_fh: 120_000.0,
            dsg_design_flight_time: 1.25,
        }
    }
}

impl DesignReference {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("design_mean_stress", self.design_mean_stress),
            ("design_flight_time", self.design_flight_time),
            ("design_taxi_time", self.design_taxi_time),
            ("design_max_altitude", self.design_max_altitude),
            ("twist_block_flights", self.twist_block_flights),
            ("dsg_fh", self.dsg_fh),
            ("esg_fh", self.esg_fh),
            ("dsg_design_flight_time", self.dsg_design_flight_time),
        ];
        for (field, value) in positive {
            ensure(value.is_finite() && value > 0.0, field, || {
                format!("must be > 0, got {value}")
            })?;
        }
        ensure(self.dsg_fc > 0, "dsg_fc", || "must be > 0".into())?;
        ensure(self.dsg_fc < self.esg_fc, "esg_fc", || {
            format!("dsg_fc < esg_fc required, got {} >= {}", self.dsg_fc, self.esg_fc)
        })?;
        ensure(self.dsg_fh < self.esg_fh, "esg_fh", || {
            format!("dsg_fh < esg_fh required, got {} >= {}", self.dsg_fh, self.esg_fh)
        })
    }
}

/// The complete, validated configuration bundle. Immutable once loaded.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FdiConfig {
    pub aircraft: AircraftParams,
    pub profile: ClimbProfile,
    pub material: MaterialParams,
    pub atmosphere: AtmosphereParams,
    pub fuselage: FuselageGeometry,
    pub design: DesignReference,
}

impl FdiConfig {
    pub fn validate(&self) -> Result<()> {
        self.aircraft.validate()?;
        self.profile.validate()?;
        self.material.validate()?;
        self.atmosphere.validate()?;
        self.fuselage.validate()?;
        self.design.validate()
    }

    /// Parses config text; `source_name` labels parse errors.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut cfg = FdiConfig::default();
        let mut seen: Vec<&'static str> = Vec::new();
        let mut segments: Vec<ProfileSegment> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                FdiError::parse(source_name, line_no, format!("expected `key = value`, got {line:?}"))
            })?;
            let key = key.trim();
            let value = value.trim();

            if key == SEGMENT_KEY {
                let seg = parse_segment(value).map_err(|m| FdiError::parse(source_name, line_no, m))?;
                segments.push(seg);
                continue;
            }

            let field = if key == SFC_FILE_UNIT_KEY {
                FIELDS.iter().find(|f| f.key == "sfc_cruise")
            } else {
                FIELDS.iter().find(|f| f.key == key)
            }
            .ok_or_else(|| FdiError::parse(source_name, line_no, format!("unknown key {key:?}")))?;

            if seen.contains(&field.key) {
                return Err(FdiError::parse(
                    source_name,
                    line_no,
                    format!("{key:?} set more than once"),
                ));
            }
            seen.push(field.key);

            let mut number: f64 = value
                .parse()
                .map_err(|_| FdiError::parse(source_name, line_no, format!("{key}: not a number: {value:?}")))?;
            if key == SFC_FILE_UNIT_KEY {
                number *= SFC_G_PER_KN_S_TO_SI;
            }
            (field.set)(&mut cfg, number).map_err(|m| FdiError::parse(source_name, line_no, format!("{key}: {m}")))?;
        }

        if !segments.is_empty() {
            cfg.profile = ClimbProfile { segments };
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Renders every value, so reparsing gives back an identical bundle.
    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        out.push_str("# fdi configuration\n");
        out.push_str("# one `key = value` per line; `#` starts a comment.\n");
        out.push_str("# segment = name, phase (climb|cruise|descent), ceiling ft, rate ft/min, ias:<kts> | mach:<M>\n");
        out.push_str("# sfc_cruise is in kg/(N s); sfc_cruise_g_per_kn_s may be given instead.\n\n");
        for field in FIELDS {
            let _ = writeln!(out, "{} = {}  # {}", field.key, (field.get)(self), field.unit);
        }
        out.push('\n');
        for s in &self.profile.segments {
            let _ = writeln!(
                out,
                "{SEGMENT_KEY} = {}, {}, {}, {}, {}",
                s.name,
                s.phase.as_str(),
                s.ceiling_ft,
                s.rate_fpm,
                s.speed
            );
        }
        out
    }
}

/// Reads and validates a configuration file.
pub fn load_config(path: impl AsRef<Path>) -> Result<FdiConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| FdiError::io(path, e))?;
    FdiConfig::parse(&text, &path.display().to_string())
}

const SEGMENT_KEY: &str = "segment";
const SFC_FILE_UNIT_KEY: &str = "sfc_cruise_g_per_kn_s";

fn parse_segment(value: &str) -> std::result::Result<ProfileSegment, String> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!("segment needs 5 comma-separated fields, got {}", parts.len()));
    }
    let phase = Phase::parse(parts[1]).ok_or_else(|| format!("unknown phase {:?}", parts[1]))?;
    let num = |s: &str| s.parse::<f64>().map_err(|_| format!("not a number: {s:?}"));
    Ok(ProfileSegment {
        name: parts[0].to_string(),
        phase,
        ceiling_ft: num(parts[2])?,
        rate_fpm: num(parts[3])?,
        speed: parts[4].parse()?,
    })
}

struct Field {
    key: &'static str,
    unit: &'static str,
    get: fn(&FdiConfig) -> f64,
    set: fn(&mut FdiConfig, f64) -> std::result::Result<(), String>,
}

fn as_count(v: f64) -> std::result::Result<u64, String> {
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 * 1e3 {
        Ok(v as u64)
    } else {
        Err(format!("expected a non-negative integer, got {v}"))
    }
}

macro_rules! real {
    ($key:literal, $unit:literal, $($path:ident).+) => {
        Field {
            key: $key,
            unit: $unit,
            get: |c| c.$($path).+,
            set: |c, v| {
                c.$($path).+ = v;
                Ok(())
            },
        }
    };
}

macro_rules! count {
    ($key:literal, $unit:literal, $ty:ty, $($path:ident).+) => {
        Field {
            key: $key,
            unit: $unit,
            get: |c| c.$($path).+ as f64,
            set: |c, v| {
                let n = as_count(v)?;
                c.$($path).+ = <$ty>::try_from(n).map_err(|_| format!("{n} out of range"))?;
                Ok(())
            },
        }
    };
}

static FIELDS: &[Field] = &[
    real!("fuel_reserve_weight", "kg", aircraft.fuel_reserve_weight),
    real!("cruise_mach", "-", aircraft.cruise_mach),
    real!("taxi_fuel_rate", "kg/s", aircraft.taxi_fuel_rate),
    real!("fuel_reserve_factor", "-", aircraft.fuel_reserve_factor),
    real!("gravity", "m/s^2", aircraft.gravity),
    real!("lift_to_drag", "-", aircraft.lift_to_drag),
    real!("max_payload", "kg", aircraft.max_payload),
    real!("mtow", "kg", aircraft.mtow),
    real!("max_fuel", "kg", aircraft.max_fuel),
    real!("misc_payload", "kg", aircraft.misc_payload),
    real!("min_prop_fuel", "kg", aircraft.min_prop_fuel),
    count!("seat_count", "seats", u32, aircraft.seat_count),
    real!("oew", "kg", aircraft.oew),
    real!("sfc_cruise", "kg/(N s)", aircraft.sfc_cruise),
    real!("speed_of_sound_cruise", "m/s", aircraft.speed_of_sound_cruise),
    real!("pax_weight", "kg", aircraft.pax_weight),
    real!("m_sigma", "-", material.m_sigma),
    real!("c1", "MPa, fatigue limit", material.c1),
    real!("c2", "MPa, ultimate strength", material.c2),
    real!("c3", "-", material.c3),
    real!("c4", "-", material.c4),
    real!("kt", "-, informational", material.kt),
    real!("p0", "hPa", atmosphere.p0),
    real!("h0", "m", atmosphere.h0),
    real!("diameter_mean", "m", fuselage.diameter_mean),
    real!("skin_thickness", "m", fuselage.skin_thickness),
    real!("design_mean_stress", "MPa", design.design_mean_stress),
    real!("design_flight_time", "h", design.design_flight_time),
    real!("design_taxi_time", "min", design.design_taxi_time),
    real!("design_max_altitude", "ft", design.design_max_altitude),
    real!("twist_block_flights", "flights", design.twist_block_flights),
    count!("dsg_fc", "flight cycles", u64, design.dsg_fc),
    real!("dsg_fh", "h", design.dsg_fh),
    count!("esg_fc", "flight cycles", u64, design.esg_fc),
    real!("esg_fh", "h", design.esg_fh),
    real!("dsg_design_flight_time", "h", design.dsg_design_flight_time),
];
