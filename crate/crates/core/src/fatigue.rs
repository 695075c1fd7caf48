//! Material-level fatigue: Haigh mean-stress correction, the S-N curve and
//! Miner's linear damage accumulation.

use crate::config::MaterialParams;
use crate::error::{ensure, Result};

/// Which part of a flight a load cycle belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Segment {
    Flight,
    /// Taxi loads.
    Ground,
    /// The once-per-flight ground-air-ground excursion.
    GroundAirGround,
}

impl Segment {
    pub fn as_str(self) -> &'static str {
        match self {
            Segment::Flight => "flight",
            Segment::Ground => "ground",
            Segment::GroundAirGround => "gag",
        }
    }
}

impl std::str::FromStr for Segment {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "flight" => Ok(Segment::Flight),
            "ground" => Ok(Segment::Ground),
            "gag" | "ground-air-ground" => Ok(Segment::GroundAirGround),
            other => Err(format!("unknown segment {other:?} (expected flight, ground or gag)")),
        }
    }
}

/// `cycle_count` cycles at one (mean, amplitude) stress level, MPa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadCycleBin {
    pub mean_stress: f64,
    pub amplitude_stress: f64,
    /// May be fractional.
    pub cycle_count: f64,
}

impl LoadCycleBin {
    pub fn new(mean_stress: f64, amplitude_stress: f64, cycle_count: f64) -> Result<Self> {
        let bin = LoadCycleBin {
            mean_stress,
            amplitude_stress,
            cycle_count,
        };
        bin.validate()?;
        Ok(bin)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.mean_stress.is_finite(), "mean_stress", || {
            format!("must be finite, got {}", self.mean_stress)
        })?;
        ensure(
            self.amplitude_stress.is_finite() && self.amplitude_stress > 0.0,
            "amplitude_stress",
            || format!("must be > 0, got {}", self.amplitude_stress),
        )?;
        ensure(
            self.cycle_count.is_finite() && self.cycle_count >= 0.0,
            "cycle_count",
            || format!("must be >= 0, got {}", self.cycle_count),
        )
    }

    pub fn max_stress(&self) -> f64 {
        self.mean_stress + self.amplitude_stress
    }

    pub fn min_stress(&self) -> f64 {
        self.mean_stress - self.amplitude_stress
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LoadSpectrum {
    pub bins: Vec<(Segment, LoadCycleBin)>,
}

impl LoadSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, segment: Segment, bin: LoadCycleBin) {
        self.bins.push((segment, bin));
    }

    pub fn validate(&self) -> Result<()> {
        self.bins.iter().try_for_each(|(_, b)| b.validate())
    }

    /// Bins of one segment only.
    pub fn segment(&self, segment: Segment) -> LoadSpectrum {
        LoadSpectrum {
            bins: self.bins.iter().filter(|(s, _)| *s == segment).copied().collect(),
        }
    }
}

/// Fully reversed (R = -1) amplitude with the same damaging effect, MPa.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EquivalentAmplitude(pub f64);

/// Stress ratio `S_min / S_max`. Negative infinity when `S_max` is zero;
/// above 1 when the whole cycle is compressive.
pub fn stress_ratio(bin: &LoadCycleBin) -> f64 {
    let max = bin.max_stress();
    if max == 0.0 {
        f64::NEG_INFINITY
    } else {
        bin.min_stress() / max
    }
}

/// Branch of the piecewise Haigh approximation a cycle falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaighRegime {
    /// Maximum stress at or below zero (R > 1, or R = -inf at S_max = 0).
    Compressive,
    /// -inf <= R <= 0.
    Alternating,
    /// 0 < R < 0.5.
    LowTension,
    /// 0.5 <= R < 1.
    HighTension,
}

pub fn haigh_regime(bin: &LoadCycleBin) -> HaighRegime {
    if bin.max_stress() <= 0.0 {
        // At S_max = 0 the compressive and alternating branches coincide.
        return HaighRegime::Compressive;
    }
    let r = stress_ratio(bin);
    if r <= 0.0 {
        HaighRegime::Alternating
    } else if r < 0.5 {
        HaighRegime::LowTension
    } else {
        HaighRegime::HighTension
    }
}

pub fn equivalent_amplitude(bin: &LoadCycleBin, mat: &MaterialParams) -> EquivalentAmplitude {
    let sa = bin.amplitude_stress;
    let sm = bin.mean_stress;
    let m = mat.m_sigma;
    let value = match haigh_regime(bin) {
        HaighRegime::Compressive => sa * (1.0 - m),
        HaighRegime::Alternating => sa + m * sm,
        HaighRegime::LowTension => sa * (1.0 + m) * (3.0 + m * sm / sa) / (3.0 + m),
        HaighRegime::HighTension => sa * 3.0 * (1.0 + m) * (1.0 + m) / (3.0 + m),
    };
    EquivalentAmplitude(value.max(0.0))
}

/// Cycles to failure at a fully reversed amplitude. Infinite at or below the
/// fatigue limit `c1`; one cycle at or above the ultimate strength `c2`.
pub fn cycles_to_failure(amp: EquivalentAmplitude, mat: &MaterialParams) -> f64 {
    let s = amp.0;
    if s <= mat.c1 {
        f64::INFINITY
    } else if s >= mat.c2 {
        1.0
    } else {
        let log_ratio = ((mat.c2 - mat.c1) / (s - mat.c1)).ln();
        10f64.powf(mat.c3 * log_ratio.powf(1.0 / mat.c4))
    }
}

/// Damage of one bin, `n / N`.
pub fn bin_damage(bin: &LoadCycleBin, mat: &MaterialParams) -> f64 {
    let life = cycles_to_failure(equivalent_amplitude(bin, mat), mat);
    if life.is_infinite() {
        0.0
    } else {
        bin.cycle_count / life
    }
}

/// Miner's rule: the sum of `n / N` over all bins.
pub fn miner_damage(spectrum: &LoadSpectrum, mat: &MaterialParams) -> f64 {
    let terms: Vec<f64> = spectrum.bins.iter().map(|(_, b)| bin_damage(b, mat)).collect();
    pairwise_sum(&terms)
}

/// Pairwise (cascade) summation; error grows with log n instead of n.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BLOCK: usize = 8;
    if values.len() <= BLOCK {
        values.iter().sum()
    } else {
        let (a, b) = values.split_at(values.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

/// Running sum with Neumaier compensation, for long accumulations of small
/// increments (tens of thousands of per-flight damages).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn bin(sm: f64, sa: f64) -> LoadCycleBin {
        LoadCycleBin::new(sm, sa, 1.0).unwrap()
    }

    fn mat() -> MaterialParams {
        MaterialParams::default()
    }

    #[test]
    fn stress_ratio_examples() {
        assert_eq!(stress_ratio(&bin(0.0, 50.0)), -1.0);
        assert_eq!(stress_ratio(&bin(50.0, 50.0)), 0.0);
        assert_eq!(stress_ratio(&bin(150.0, 50.0)), 0.5);
        assert_eq!(stress_ratio(&bin(-50.0, 50.0)), f64::NEG_INFINITY);
        assert_eq!(stress_ratio(&bin(-150.0, 50.0)), 2.0);
    }

    #[test]
    fn equivalent_amplitude_examples() {
        assert_relative_eq!(equivalent_amplitude(&bin(0.0, 100.0), &mat()).0, 100.0);
        assert_relative_eq!(
            equivalent_amplitude(&bin(50.0, 50.0), &mat()).0,
            70.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            equivalent_amplitude(&bin(150.0, 50.0), &mat()).0,
            50.0 * 3.0 * 1.4 * 1.4 / 3.4,
            max_relative = 1e-12
        );
        assert!((equivalent_amplitude(&bin(150.0, 50.0), &mat()).0 - 86.47).abs() < 0.01);
        // fully compressive
        assert_relative_eq!(
            equivalent_amplitude(&bin(-150.0, 50.0), &mat()).0,
            30.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn regime_selection() {
        assert_eq!(haigh_regime(&bin(-150.0, 50.0)), HaighRegime::Compressive);
        assert_eq!(haigh_regime(&bin(-50.0, 50.0)), HaighRegime::Compressive);
        assert_eq!(haigh_regime(&bin(0.0, 50.0)), HaighRegime::Alternating);
        assert_eq!(haigh_regime(&bin(50.0, 50.0)), HaighRegime::Alternating);
        assert_eq!(haigh_regime(&bin(100.0, 50.0)), HaighRegime::LowTension);
        assert_eq!(haigh_regime(&bin(150.0, 50.0)), HaighRegime::HighTension);
        assert_eq!(haigh_regime(&bin(1000.0, 50.0)), HaighRegime::HighTension);
    }

    #[test]
    fn compressive_and_alternating_agree_at_zero_max() {
        let b = bin(-40.0, 40.0);
        let alternating = b.amplitude_stress + mat().m_sigma * b.mean_stress;
        assert_relative_eq!(equivalent_amplitude(&b, &mat()).0, alternating, max_relative = 1e-12);
    }

    #[test]
    fn s_n_curve_examples() {
        let m = mat();
        assert!(cycles_to_failure(EquivalentAmplitude(63.0), &m).is_infinite());
        assert!(cycles_to_failure(EquivalentAmplitude(10.0), &m).is_infinite());
        assert_eq!(cycles_to_failure(EquivalentAmplitude(470.0), &m), 1.0);
        assert_eq!(cycles_to_failure(EquivalentAmplitude(600.0), &m), 1.0);
        // 10^(3.5 * ln(407/37)^(1/2.07)), independent script
        assert_relative_eq!(
            cycles_to_failure(EquivalentAmplitude(100.0), &m),
            218_897.868_938_105,
            max_relative = 1e-6
        );
    }

    #[test]
    fn miner_examples() {
        let m = mat();
        assert_eq!(miner_damage(&LoadSpectrum::new(), &m), 0.0);
        let b = bin(0.0, 100.0);
        let life = cycles_to_failure(equivalent_amplitude(&b, &m), &m);
        let mut s = LoadSpectrum::new();
        s.push(Segment::Flight, LoadCycleBin::new(0.0, 100.0, life).unwrap());
        assert_relative_eq!(miner_damage(&s, &m), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn bins_below_fatigue_limit_do_no_damage() {
        let mut s = LoadSpectrum::new();
        s.push(Segment::Ground, LoadCycleBin::new(-50.0, 10.0, 1e9).unwrap());
        assert_eq!(miner_damage(&s, &mat()), 0.0);
    }

    #[test]
    fn bin_validation() {
        assert!(LoadCycleBin::new(0.0, 0.0, 1.0).is_err());
        assert!(LoadCycleBin::new(0.0, 1.0, -1.0).is_err());
        assert!(LoadCycleBin::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn compensated_sum_beats_naive() {
        let mut acc = CompensatedSum::default();
        let mut naive = 0.0;
        for _ in 0..60_000 {
            acc.add(1.0e-5 / 3.0);
            naive += 1.0e-5 / 3.0;
        }
        let exact = 60_000.0 * (1.0e-5 / 3.0);
        assert!((acc.value() - exact).abs() <= (naive - exact).abs());
        assert!((acc.value() - exact).abs() < 1e-16);
    }

    proptest! {
        #[test]
        fn continuity_at_r_zero(sa in 1.0f64..400.0) {
            let m = mat();
            let at = bin(sa, sa);
            let alternating = sa * (1.0 + m.m_sigma * at.mean_stress / sa);
            let low = sa * (1.0 + m.m_sigma) * (3.0 + m.m_sigma * at.mean_stress / sa) / (3.0 + m.m_sigma);
            prop_assert!((alternating - low).abs() <= 1e-12 * alternating);
        }

        #[test]
        fn equivalent_amplitude_non_decreasing_in_mean(sa in 1.0f64..200.0, a in -1.0f64..3.0, b in -1.0f64..3.0) {
            // S_m within the alternating and low-tension regimes: -S_a..3 S_a
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let m = mat();
            let e_lo = equivalent_amplitude(&bin(lo * sa, sa), &m).0;
            let e_hi = equivalent_amplitude(&bin(hi * sa, sa), &m).0;
            prop_assert!(e_hi >= e_lo - 1e-9 * e_lo.abs());
        }

        #[test]
        fn s_n_strictly_decreasing(a in 63.5f64..469.5, b in 63.5f64..469.5) {
            prop_assume!((a - b).abs() > 1e-6);
            let m = mat();
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assert!(cycles_to_failure(EquivalentAmplitude(lo), &m) > cycles_to_failure(EquivalentAmplitude(hi), &m));
        }

        #[test]
        fn miner_homogeneous(scale in 0.0f64..100.0, counts in proptest::collection::vec(0.0f64..1e4, 1..20)) {
            let m = mat();
            let mut s = LoadSpectrum::new();
            let mut scaled = LoadSpectrum::new();
            for (i, n) in counts.iter().enumerate() {
                let sa = 60.0 + 10.0 * i as f64;
                s.push(Segment::Flight, LoadCycleBin::new(20.0, sa, *n).unwrap());
                scaled.push(Segment::Flight, LoadCycleBin::new(20.0, sa, *n * scale).unwrap());
            }
            let d = miner_damage(&s, &m);
            prop_assert!((miner_damage(&scaled, &m) - scale * d).abs() <= 1e-12 * (scale * d).max(1e-300));
        }
    }
}
