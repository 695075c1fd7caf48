//! Fuselage fatigue from one pressurization cycle per flight.
//!
//! The skin is a thin-walled cylinder under the cabin differential pressure at
//! the flight's maximum altitude. Only the hoop stress is used; it is twice
//! the axial stress. Each flight is one zero-to-peak swelling cycle (R = 0).

use crate::config::{AtmosphereParams, FuselageGeometry, MaterialParams};
use crate::error::Result;
use crate::fatigue::{bin_damage, LoadCycleBin};
use crate::performance::differential_pressure;

const HPA_TO_MPA: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuselageStressState {
    /// MPa
    pub tangential_stress: f64,
    /// MPa
    pub axial_stress: f64,
    pub mean: f64,
    pub amplitude: f64,
}

pub fn fuselage_stress(
    altitude_ft: f64,
    geom: &FuselageGeometry,
    atmos: &AtmosphereParams,
) -> Result<FuselageStressState> {
    let p_mpa = differential_pressure(altitude_ft, atmos)? * HPA_TO_MPA;
    let tangential = p_mpa * geom.diameter_mean / (2.0 * geom.skin_thickness);
    let axial = p_mpa * geom.diameter_mean / (4.0 * geom.skin_thickness);
    Ok(FuselageStressState {
        tangential_stress: tangential,
        axial_stress: axial,
        mean: tangential / 2.0,
        amplitude: tangential / 2.0,
    })
}

/// Miner damage of the single pressurization cycle of a flight reaching `altitude_ft`.
pub fn fuselage_damage_per_flight(
    altitude_ft: f64,
    geom: &FuselageGeometry,
    atmos: &AtmosphereParams,
    mat: &MaterialParams,
) -> Result<f64> {
    let stress = fuselage_stress(altitude_ft, geom, atmos)?;
    if stress.amplitude <= 0.0 {
        return Ok(0.0);
    }
    let bin = LoadCycleBin {
        mean_stress: stress.mean,
        amplitude_stress: stress.amplitude,
        cycle_count: 1.0,
    };
    Ok(bin_damage(&bin, mat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatigue::{cycles_to_failure, EquivalentAmplitude};
    use approx::assert_relative_eq;

    fn parts() -> (FuselageGeometry, AtmosphereParams, MaterialParams) {
        Default::default()
    }

    #[test]
    fn ground_level_is_unstressed() {
        let (g, a, m) = parts();
        let s = fuselage_stress(0.0, &g, &a).unwrap();
        assert_eq!(s.tangential_stress, 0.0);
        assert_eq!(s.axial_stress, 0.0);
        assert_eq!(fuselage_damage_per_flight(0.0, &g, &a, &m).unwrap(), 0.0);
    }

    #[test]
    fn design_altitude_stress() {
        let (g, a, _) = parts();
        let s = fuselage_stress(39_100.0, &g, &a).unwrap();
        // 766.58 hPa * 4.14 m / (2 * 1 mm)
        assert!((s.tangential_stress - 158.7).abs() < 0.05, "{}", s.tangential_stress);
        assert!((s.mean - 79.3).abs() < 0.05);
        assert_eq!(s.mean, s.amplitude);
        assert_eq!(s.axial_stress, s.tangential_stress / 2.0);
    }

    #[test]
    fn thicker_skin_halves_stress() {
        let (g, a, _) = parts();
        let thick = FuselageGeometry {
            skin_thickness: 2.0 * g.skin_thickness,
            ..g.clone()
        };
        let s1 = fuselage_stress(30_000.0, &g, &a).unwrap();
        let s2 = fuselage_stress(30_000.0, &thick, &a).unwrap();
        assert_relative_eq!(s2.tangential_stress, s1.tangential_stress / 2.0, max_relative = 1e-15);
        assert_relative_eq!(s2.axial_stress, s1.axial_stress / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn design_damage_matches_hand_chain() {
        let (g, a, m) = parts();
        // 1013.25 (1 - exp(-39100 * 0.3048 / 8435)) hPa -> MPa -> hoop / 2 -> x (1 + 0.4) at R = 0
        let p = 1013.25 * (1.0 - (-39_100.0 * 0.3048 / 8_435.0_f64).exp()) * 1e-4;
        let half_hoop = p * 4.14 / 0.002 / 2.0;
        let expected = 1.0 / cycles_to_failure(EquivalentAmplitude(1.4 * half_hoop), &m);
        assert_relative_eq!(
            fuselage_damage_per_flight(39_100.0, &g, &a, &m).unwrap(),
            expected,
            max_relative = 1e-12
        );
    }

    #[test]
    fn lower_altitude_less_damage() {
        let (g, a, m) = parts();
        let low = fuselage_damage_per_flight(35_000.0, &g, &a, &m).unwrap();
        let high = fuselage_damage_per_flight(39_100.0, &g, &a, &m).unwrap();
        assert!(low < high);
        assert!(fuselage_damage_per_flight(-1.0, &g, &a, &m).is_err());
    }
}
