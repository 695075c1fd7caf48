//! Seeded synthetic fleets resembling observed narrow-body usage.
//!
//! The pseudo-random source is ChaCha8 seeded from a `u64`, so a given spec
//! produces the same fleet on every platform. Each aircraft draws its own
//! mean flight time, load factor and taxi time; its flights then vary around
//! those means.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, Normal};

use super::FleetDataset;
use crate::config::ClimbProfile;
use crate::error::{ensure, FdiError, Result};
use crate::performance::FlightRecord;
use crate::profile::distance_for_flight_time;

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticFleetSpec {
    pub aircraft_count: usize,
    pub flights_per_aircraft: usize,
    /// Fleet mean and between-aircraft standard deviation of flight time, h.
    pub flight_time_mean_h: f64,
    pub flight_time_sd_h: f64,
    /// Relative standard deviation of flight time within one aircraft.
    pub flight_time_within_rel_sd: f64,
    pub load_factor_mean: f64,
    pub load_factor_sd: f64,
    pub load_factor_within_sd: f64,
    /// Total (origin plus destination) taxi time, min.
    pub taxi_mean_min: f64,
    pub taxi_sd_min: f64,
    pub taxi_within_sd_min: f64,
    /// Half-width of the uniform relative jitter applied to the distance a flight time implies.
    pub distance_jitter: f64,
    pub seed: u64,
}

impl Default for SyntheticFleetSpec {
    fn default() -> Self {
        SyntheticFleetSpec {
            aircraft_count: 1_000,
            flights_per_aircraft: 50,
            flight_time_mean_h: 2.0,
            flight_time_sd_h: 0.7,
            flight_time_within_rel_sd: 0.15,
            load_factor_mean: 0.8,
            load_factor_sd: 0.087,
            load_factor_within_sd: 0.08,
            taxi_mean_min: 25.0,
            taxi_sd_min: 6.0,
            taxi_within_sd_min: 4.0,
            distance_jitter: 0.03,
            seed: 1,
        }
    }
}

impl SyntheticFleetSpec {
    pub fn validate(&self) -> Result<()> {
        ensure(self.aircraft_count > 0, "aircraft_count", || "must be > 0".into())?;
        ensure(self.flights_per_aircraft > 0, "flights_per_aircraft", || {
            "must be > 0".into()
        })?;
        let positive = [
            ("flight_time_mean_h", self.flight_time_mean_h),
            ("taxi_mean_min", self.taxi_mean_min),
        ];
        for (field, v) in positive {
            ensure(v.is_finite() && v > 0.0, field, || format!("must be > 0, got {v}"))?;
        }
        let spreads = [
            ("flight_time_sd_h", self.flight_time_sd_h),
            ("flight_time_within_rel_sd", self.flight_time_within_rel_sd),
            ("load_factor_sd", self.load_factor_sd),
            ("load_factor_within_sd", self.load_factor_within_sd),
            ("taxi_sd_min", self.taxi_sd_min),
            ("taxi_within_sd_min", self.taxi_within_sd_min),
        ];
        for (field, v) in spreads {
            ensure(v.is_finite() && v >= 0.0, field, || format!("must be >= 0, got {v}"))?;
        }
        let m = self.load_factor_mean;
        ensure(m > 0.0 && m < 1.0, "load_factor_mean", || {
            format!("must be within (0, 1), got {m}")
        })?;
        ensure(self.load_factor_sd.powi(2) < m * (1.0 - m), "load_factor_sd", || {
            format!("variance must be below mean * (1 - mean) = {}", m * (1.0 - m))
        })?;
        ensure((0.0..1.0).contains(&self.distance_jitter), "distance_jitter", || {
            format!("must be within [0, 1), got {}", self.distance_jitter)
        })
    }

    /// Reads `key = value` lines (field names as in this struct, `#` comments);
    /// unset fields keep their defaults.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut spec = SyntheticFleetSpec::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                FdiError::parse(source_name, line_no, format!("expected `key = value`, got {line:?}"))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || FdiError::parse(source_name, line_no, format!("{key}: bad value {value:?}"));
            let real = || value.parse::<f64>().map_err(|_| bad());
            match key {
                "aircraft_count" => spec.aircraft_count = value.parse().map_err(|_| bad())?,
                "flights_per_aircraft" => spec.flights_per_aircraft = value.parse().map_err(|_| bad())?,
                "seed" => spec.seed = value.parse().map_err(|_| bad())?,
                "flight_time_mean_h" => spec.flight_time_mean_h = real()?,
                "flight_time_sd_h" => spec.flight_time_sd_h = real()?,
                "flight_time_within_rel_sd" => spec.flight_time_within_rel_sd = real()?,
                "load_factor_mean" => spec.load_factor_mean = real()?,
                "load_factor_sd" => spec.load_factor_sd = real()?,
                "load_factor_within_sd" => spec.load_factor_within_sd = real()?,
                "taxi_mean_min" => spec.taxi_mean_min = real()?,
                "taxi_sd_min" => spec.taxi_sd_min = real()?,
                "taxi_within_sd_min" => spec.taxi_within_sd_min = real()?,
                "distance_jitter" => spec.distance_jitter = real()?,
                _ => return Err(FdiError::parse(source_name, line_no, format!("unknown key {key:?}"))),
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| FdiError::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }
}

/// Normal distribution truncated symmetrically about its mean, so the mean is preserved.
/// The half-width is two standard deviations, narrowed to keep samples above zero.
struct SymmetricTruncatedNormal {
    mean: f64,
    sd: f64,
    half_width: f64,
}

impl SymmetricTruncatedNormal {
    fn positive(mean: f64, sd: f64) -> Self {
        SymmetricTruncatedNormal {
            mean,
            sd,
            half_width: (2.0 * sd).min(0.95 * mean),
        }
    }

    fn non_negative(mean: f64, sd: f64) -> Self {
        SymmetricTruncatedNormal {
            mean,
            sd,
            half_width: (2.0 * sd).min(mean),
        }
    }

    fn sample(&self, rng: &mut impl Rng) -> f64 {
        if self.sd == 0.0 || self.half_width <= 0.0 {
            return self.mean;
        }
        let normal = Normal::new(0.0, self.sd).expect("sd is finite and positive");
        loop {
            let z: f64 = normal.sample(rng);
            if z.abs() <= self.half_width {
                return self.mean + z;
            }
        }
    }
}

/// Beta distribution with the given mean and standard deviation (method of moments).
/// The spread is capped so both shape parameters stay at least 1.
fn beta_sample(mean: f64, sd: f64, rng: &mut impl Rng) -> f64 {
    if sd == 0.0 || mean <= 0.0 || mean >= 1.0 {
        return mean.clamp(0.0, 1.0);
    }
    let max_var = mean * (1.0 - mean) * mean.min(1.0 - mean) / (1.0 + mean.min(1.0 - mean));
    let var = sd.powi(2).min(max_var);
    let common = mean * (1.0 - mean) / var - 1.0;
    Beta::new(mean * common, (1.0 - mean) * common)
        .expect("shape parameters are positive")
        .sample(rng)
}

pub fn generate_synthetic_fleet(spec: &SyntheticFleetSpec, profile: &ClimbProfile) -> Result<FleetDataset> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let width = (spec.aircraft_count - 1).to_string().len();
    let ft_between = SymmetricTruncatedNormal::positive(spec.flight_time_mean_h, spec.flight_time_sd_h);
    let taxi_between = SymmetricTruncatedNormal::non_negative(spec.taxi_mean_min, spec.taxi_sd_min);

    let mut records = Vec::with_capacity(spec.aircraft_count * spec.flights_per_aircraft);
    for a in 0..spec.aircraft_count {
        let id = format!("SYN{a:0width$}");
        let ft_mean = ft_between.sample(&mut rng);
        let lf_mean = beta_sample(spec.load_factor_mean, spec.load_factor_sd, &mut rng);
        let taxi_mean = taxi_between.sample(&mut rng);
        let ft_within = SymmetricTruncatedNormal::positive(ft_mean, ft_mean * spec.flight_time_within_rel_sd);
        let taxi_within = SymmetricTruncatedNormal::non_negative(taxi_mean, spec.taxi_within_sd_min);

        for _ in 0..spec.flights_per_aircraft {
            let flight_time_h = ft_within.sample(&mut rng);
            let seat_load_factor = beta_sample(lf_mean, spec.load_factor_within_sd, &mut rng);
            let taxi = taxi_within.sample(&mut rng);
            let jitter = if spec.distance_jitter > 0.0 {
                rng.random_range(-spec.distance_jitter..=spec.distance_jitter)
            } else {
                0.0
            };
            let distance_km = distance_for_flight_time(flight_time_h, profile)? * (1.0 + jitter);
            records.push(FlightRecord {
                aircraft_id: id.clone(),
                distance_km,
                flight_time_h,
                seat_load_factor,
                taxi_origin_min: taxi / 2.0,
                taxi_dest_min: taxi / 2.0,
            });
        }
    }
    let provenance = format!("synthetic fleet, {spec:?}");
    Ok(FleetDataset::from_records(records, provenance))
}
