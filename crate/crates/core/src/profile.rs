//! Flight-profile geometry: how far an aircraft travels climbing to and
//! descending from a given altitude, and from that the highest altitude a
//! flight of a given length can reach.
//!
//! Speeds are converted to true airspeed with the ISA standard atmosphere,
//! evaluated at the mid-altitude of each flown segment portion, so each
//! segment contributes a closed-form distance.

use crate::config::{ClimbProfile, ProfileSegment, Speed};
use crate::error::{ensure, Result};
use crate::performance::FT_TO_M;

pub const KT_TO_MPS: f64 = 1852.0 / 3600.0;

/// ISA standard atmosphere up to 20 km.
pub mod isa {
    pub const T0: f64 = 288.15;
    pub const P0: f64 = 101_325.0;
    pub const LAPSE: f64 = 0.0065;
    pub const TROPOPAUSE_M: f64 = 11_000.0;
    pub const R_AIR: f64 = 287.052_87;
    pub const G0: f64 = 9.806_65;
    pub const GAMMA: f64 = 1.4;

    /// Static temperature, K.
    pub fn temperature(h_m: f64) -> f64 {
        if h_m <= TROPOPAUSE_M {
            T0 - LAPSE * h_m
        } else {
            T0 - LAPSE * TROPOPAUSE_M
        }
    }

    /// Static pressure, Pa.
    pub fn pressure(h_m: f64) -> f64 {
        let exponent = G0 / (LAPSE * R_AIR);
        if h_m <= TROPOPAUSE_M {
            P0 * (temperature(h_m) / T0).powf(exponent)
        } else {
            let t11 = temperature(TROPOPAUSE_M);
            let p11 = P0 * (t11 / T0).powf(exponent);
            p11 * (-G0 * (h_m - TROPOPAUSE_M) / (R_AIR * t11)).exp()
        }
    }

    pub fn speed_of_sound(h_m: f64) -> f64 {
        (GAMMA * R_AIR * temperature(h_m)).sqrt()
    }

    /// True airspeed for a calibrated airspeed at altitude (compressible, subsonic).
    pub fn cas_to_tas(cas_mps: f64, h_m: f64) -> f64 {
        let a0 = speed_of_sound(0.0);
        let impact = P0 * ((1.0 + 0.2 * (cas_mps / a0).powi(2)).powf(3.5) - 1.0);
        let mach = (5.0 * ((impact / pressure(h_m) + 1.0).powf(2.0 / 7.0) - 1.0)).sqrt();
        mach * speed_of_sound(h_m)
    }
}

/// True airspeed of a segment at `altitude_ft`, m/s.
pub fn true_airspeed(speed: Speed, altitude_ft: f64) -> f64 {
    let h_m = altitude_ft * FT_TO_M;
    match speed {
        Speed::Ias(kts) => isa::cas_to_tas(kts * KT_TO_MPS, h_m),
        Speed::Mach(m) => m * isa::speed_of_sound(h_m),
    }
}

/// Ground distance (m) and time (s) spent climbing to `top_ft` and descending from it.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ClimbDescent {
    pub distance_m: f64,
    pub time_s: f64,
}

/// Altitude bands `(floor, ceiling, segment)` of the climb, bottom up.
fn climb_bands(profile: &ClimbProfile) -> Vec<(f64, f64, &ProfileSegment)> {
    let mut floor = 0.0;
    profile
        .climb()
        .map(|s| {
            let band = (floor, s.ceiling_ft, s);
            floor = s.ceiling_ft;
            band
        })
        .collect()
}

/// Altitude bands `(floor, ceiling, segment)` of the descent, top down.
fn descent_bands(profile: &ClimbProfile) -> Vec<(f64, f64, &ProfileSegment)> {
    let segs: Vec<&ProfileSegment> = profile.descent().collect();
    segs.iter()
        .enumerate()
        .map(|(i, s)| {
            let floor = segs.get(i + 1).map_or(0.0, |next| next.ceiling_ft);
            (floor, s.ceiling_ft, *s)
        })
        .collect()
}

/// Distance and time to climb from the ground to `top_ft` and descend back.
pub fn climb_descent(top_ft: f64, profile: &ClimbProfile) -> ClimbDescent {
    let mut out = ClimbDescent::default();
    for (floor, ceiling, seg) in climb_bands(profile).into_iter().chain(descent_bands(profile)) {
        let upper = ceiling.min(top_ft);
        if upper <= floor {
            continue;
        }
        let dt = (upper - floor) / seg.rate_fpm * 60.0;
        out.time_s += dt;
        out.distance_m += dt * true_airspeed(seg.speed, 0.5 * (floor + upper));
    }
    out
}

/// Highest altitude (ft) a flight of `distance_km` can reach, found by
/// bisection to 1 ft. Plateaus at the cruise ceiling.
pub fn max_altitude(distance_km: f64, profile: &ClimbProfile) -> Result<f64> {
    ensure(distance_km.is_finite() && distance_km >= 0.0, "distance", || {
        format!("must be >= 0, got {distance_km}")
    })?;
    let distance_m = distance_km * 1_000.0;
    let ceiling = profile.cruise_ceiling_ft();
    if climb_descent(ceiling, profile).distance_m <= distance_m {
        return Ok(ceiling);
    }
    let (mut lo, mut hi) = (0.0, ceiling);
    while hi - lo > 1.0 {
        let mid = 0.5 * (lo + hi);
        if climb_descent(mid, profile).distance_m <= distance_m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Distance (km) a flight of `flight_time_h` covers when it climbs as high as
/// its duration allows, cruises at the cruise segment's speed, and descends.
pub fn distance_for_flight_time(flight_time_h: f64, profile: &ClimbProfile) -> Result<f64> {
    ensure(flight_time_h.is_finite() && flight_time_h >= 0.0, "flight_time", || {
        format!("must be >= 0, got {flight_time_h}")
    })?;
    let time_s = flight_time_h * 3_600.0;
    let ceiling = profile.cruise_ceiling_ft();
    let full = climb_descent(ceiling, profile);
    if time_s >= full.time_s {
        let cruise_speed = true_airspeed(profile.cruise().speed, ceiling);
        return Ok((full.distance_m + (time_s - full.time_s) * cruise_speed) / 1_000.0);
    }
    // time is strictly increasing in top altitude; bisect to sub-foot precision
    let (mut lo, mut hi) = (0.0, ceiling);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if climb_descent(mid, profile).time_s <= time_s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(climb_descent(lo, profile).distance_m / 1_000.0)
}

/// Airborne time (h) of a flight covering `distance_km`; inverse of
/// [`distance_for_flight_time`].
pub fn flight_time_for_distance(distance_km: f64, profile: &ClimbProfile) -> Result<f64> {
    ensure(distance_km.is_finite() && distance_km >= 0.0, "distance", || {
        format!("must be >= 0, got {distance_km}")
    })?;
    let distance_m = distance_km * 1_000.0;
    let ceiling = profile.cruise_ceiling_ft();
    let full = climb_descent(ceiling, profile);
    if distance_m >= full.distance_m {
        let cruise_speed = true_airspeed(profile.cruise().speed, ceiling);
        return Ok((full.time_s + (distance_m - full.distance_m) / cruise_speed) / 3_600.0);
    }
    let (mut lo, mut hi) = (0.0, ceiling);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if climb_descent(mid, profile).distance_m <= distance_m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(climb_descent(lo, profile).time_s / 3_600.0)
}
