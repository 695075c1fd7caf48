//! Acceptance suite: nine end-to-end criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed:
//! `cargo test -p fdi-core --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fdi_core::config::MaterialParams;
use fdi_core::fatigue::{
    cycles_to_failure, equivalent_amplitude, haigh_regime, miner_damage, EquivalentAmplitude, HaighRegime,
    LoadCycleBin, LoadSpectrum, Segment,
};
use fdi_core::fleet::{
    design_record, history_increments, simulate_aircraft, simulate_fleet, simulate_increments, sweep_fdi, with_threads,
    CriterionKind, FdiModel, FleetResult, MonitoringMask, RetirementCause, RetirementCriterion, Scenario, ServiceLevel,
    SweepParameter,
};
use fdi_core::io::{generate_synthetic_fleet, SyntheticFleetSpec};
use fdi_core::profile::distance_for_flight_time;
use fdi_core::{FleetDataset, FlightRecord};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        // written as a bool binding so NaN comparisons fail the check
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    if elapsed.as_secs_f64() < limit_s {
        Ok(())
    } else {
        Err(format!("{what} took {:.1} s, limit {limit_s} s", elapsed.as_secs_f64()))
    }
}

fn normalization_identity(m: &FdiModel) -> Check {
    let start = Instant::now();
    let rec = design_record(m.config.design.design_flight_time, &m.config).map_err(|e| e.to_string())?;
    let criterion = m.criterion(ServiceLevel::Esg, CriterionKind::FdiThreshold);
    // the unmonitored mask is exactly the design flight: LF 1, 25 min taxi, design altitude
    let o = simulate_aircraft("design", &[rec], criterion, MonitoringMask::NONE, m).map_err(|e| e.to_string())?;
    within(start.elapsed(), 5.0, "simulation")?;
    let inc = history_increments(&[design_record(2.0, &m.config).unwrap()], MonitoringMask::NONE, m).unwrap();
    let per_flight = m.normalize(inc[0].0);
    let s = o.final_state;
    check!(
        o.flights_flown.abs_diff(60_000) <= 1,
        "retired at {} FC",
        o.flights_flown
    );
    check!(
        (s.flight_hours - 120_000.0).abs() <= 2.0,
        "retired at {} FH",
        s.flight_hours
    );
    check!(
        s.wing_fdi >= 1.0 && s.wing_fdi <= 1.0 + per_flight.wing,
        "wing FDI {}",
        s.wing_fdi
    );
    check!(
        s.fuselage_fdi >= 1.0 && s.fuselage_fdi <= 1.0 + per_flight.fuselage,
        "fuselage FDI {}",
        s.fuselage_fdi
    );
    Ok(format!(
        "{} FC, {} FH, wing {:.12}, fuselage {:.12}, {:.2} s",
        o.flights_flown,
        s.flight_hours,
        s.wing_fdi,
        s.fuselage_fdi,
        start.elapsed().as_secs_f64()
    ))
}

fn dsg_flight_hour_binding(m: &FdiModel) -> Check {
    let rec = design_record(2.0, &m.config).map_err(|e| e.to_string())?;
    let criterion = m.criterion(ServiceLevel::Dsg, CriterionKind::ServiceGoal);
    let o = simulate_aircraft("design", &[rec], criterion, MonitoringMask::NONE, m).map_err(|e| e.to_string())?;
    check!(o.flights_flown == 30_000, "retired at {} FC", o.flights_flown);
    check!(
        o.final_state.flight_hours == 60_000.0,
        "retired at {} FH",
        o.final_state.flight_hours
    );
    check!(
        o.retired_because == RetirementCause::FlightHours,
        "cause {:?}",
        o.retired_because
    );
    Ok("30000 FC / 60000 FH, flight-hour limit binds".into())
}

fn taxi_insensitivity(m: &FdiModel) -> Check {
    let start = Instant::now();
    let rows = sweep_fdi(SweepParameter::Taxi, 0.0, 60.0, 61, m).map_err(|e| e.to_string())?;
    within(start.elapsed(), 10.0, "taxi sweep")?;
    let base = rows[25].wing_fdi;
    let fus0 = rows[0].fuselage_fdi;
    check!(
        rows.iter().all(|r| r.fuselage_fdi == fus0),
        "fuselage FDI varies with taxi time"
    );
    let (lo, hi) = rows.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
        (lo.min(r.wing_fdi), hi.max(r.wing_fdi))
    });
    let change = (hi - lo) / base;
    check!(change < 0.01, "wing FDI changes by {:.3}%", 100.0 * change);
    Ok(format!(
        "fuselage constant, wing change {:.3}% over 0-60 min",
        100.0 * change
    ))
}

fn strictly_increasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] > w[0])
}

fn all_equal(values: &[f64]) -> bool {
    values.iter().all(|v| v.to_bits() == values[0].to_bits())
}

fn sensitivity_directions(m: &FdiModel) -> Check {
    let sweep = |p, a, b| sweep_fdi(p, a, b, 20, m).map_err(|e| e.to_string());
    let lf = sweep(SweepParameter::LoadFactor, 0.0, 1.0)?;
    let alt = sweep(SweepParameter::Altitude, 20_000.0, 41_000.0)?;
    let taxi = sweep(SweepParameter::Taxi, 0.0, 60.0)?;
    let wing = |rows: &[fdi_core::fleet::SweepRow]| rows.iter().map(|r| r.wing_fdi).collect::<Vec<_>>();
    let fus = |rows: &[fdi_core::fleet::SweepRow]| rows.iter().map(|r| r.fuselage_fdi).collect::<Vec<_>>();
    check!(
        strictly_increasing(&wing(&lf)),
        "wing FDI not strictly increasing in load factor"
    );
    check!(all_equal(&wing(&alt)), "wing FDI depends on altitude");
    check!(
        strictly_increasing(&fus(&alt)),
        "fuselage FDI not strictly increasing in altitude"
    );
    check!(all_equal(&fus(&lf)), "fuselage FDI depends on load factor");
    check!(all_equal(&fus(&taxi)), "fuselage FDI depends on taxi time");
    Ok(format!(
        "wing {:.3}->{:.3} over LF, fuselage {:.3}->{:.3} over 20-41 kft",
        lf[0].wing_fdi, lf[19].wing_fdi, alt[0].fuselage_fdi, alt[19].fuselage_fdi
    ))
}

fn distance_effect(m: &FdiModel) -> Check {
    let start = Instant::now();
    let design_km = distance_for_flight_time(m.config.design.design_flight_time, &m.config.profile).unwrap();
    let rows = sweep_fdi(SweepParameter::Distance, design_km, 6_000.0, 10, m).map_err(|e| e.to_string())?;
    within(start.elapsed(), 60.0, "distance sweep")?;
    for w in rows.windows(2) {
        check!(
            w[1].wing_fdi <= w[0].wing_fdi && w[1].fuselage_fdi <= w[0].fuselage_fdi,
            "FDI rises from {:.0} km to {:.0} km",
            w[0].value,
            w[1].value
        );
    }
    let last = rows.last().unwrap();
    Ok(format!(
        "{:.0}-{:.0} km: wing {:.3}->{:.3}, fuselage {:.3}->{:.3}",
        rows[0].value, last.value, rows[0].wing_fdi, last.wing_fdi, rows[0].fuselage_fdi, last.fuselage_fdi
    ))
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

fn haigh_and_s_n(m: &FdiModel) -> Check {
    let mat: &MaterialParams = &m.config.material;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let eq = |sm: f64, sa: f64| equivalent_amplitude(&LoadCycleBin::new(sm, sa, 1.0).unwrap(), mat).0;
    let regime = |sm: f64, sa: f64| haigh_regime(&LoadCycleBin::new(sm, sa, 1.0).unwrap());
    // Walks from `start` to the first mean stress at which the regime becomes `upper`;
    // returns the adjacent pair of floats straddling the switch.
    let straddle = |start: f64, sa: f64, upper: HaighRegime| -> Option<(f64, f64)> {
        let mut sm = start;
        for _ in 0..256 {
            if regime(sm, sa) == upper {
                if regime(sm.next_down(), sa) != upper {
                    return Some((sm.next_down(), sm));
                }
                sm = sm.next_down();
            } else {
                sm = sm.next_up();
            }
        }
        None
    };
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let sa = rng.random_range(1.0..300.0);
        // R = 0 at Sm = Sa; R = 0.5 at Sm = 3 Sa
        for (start, lower, upper) in [
            (sa, HaighRegime::Alternating, HaighRegime::LowTension),
            (3.0 * sa, HaighRegime::LowTension, HaighRegime::HighTension),
        ] {
            let (below, above) = straddle(start, sa, upper).ok_or("regime boundary not found")?;
            check!(
                regime(below, sa) == lower,
                "{lower:?} expected just below the boundary at Sa = {sa}"
            );
            worst = worst.max(rel_diff(eq(below, sa), eq(above, sa)));
        }
    }
    check!(worst <= 1e-12, "regime discontinuity {worst:e}");

    check!(cycles_to_failure(EquivalentAmplitude(mat.c2), mat) == 1.0, "N(C2) != 1");
    for _ in 0..10_000 {
        let a = rng.random_range(mat.c1..mat.c2);
        let b = rng.random_range(mat.c1..mat.c2);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo == hi || lo == mat.c1 {
            continue;
        }
        let (n_lo, n_hi) = (
            cycles_to_failure(EquivalentAmplitude(lo), mat),
            cycles_to_failure(EquivalentAmplitude(hi), mat),
        );
        check!(
            n_lo > n_hi,
            "S-N not strictly decreasing at {lo} < {hi}: {n_lo} <= {n_hi}"
        );
    }

    let mut worst_miner: f64 = 0.0;
    for _ in 0..500 {
        let len = rng.random_range(1..40);
        let mut bins: Vec<(Segment, LoadCycleBin)> = (0..len)
            .map(|_| {
                let bin = LoadCycleBin::new(
                    rng.random_range(-100.0..250.0),
                    rng.random_range(1.0..250.0),
                    rng.random_range(0.0..1e4),
                )
                .unwrap();
                (Segment::Flight, bin)
            })
            .collect();
        let split = rng.random_range(0..=len);
        let whole = miner_damage(&LoadSpectrum { bins: bins.clone() }, mat);
        let a = miner_damage(
            &LoadSpectrum {
                bins: bins[..split].to_vec(),
            },
            mat,
        );
        let b = miner_damage(
            &LoadSpectrum {
                bins: bins[split..].to_vec(),
            },
            mat,
        );
        if whole > 0.0 {
            worst_miner = worst_miner.max(rel_diff(whole, a + b));
        }
        // Fisher-Yates with the seeded source
        for i in (1..bins.len()).rev() {
            bins.swap(i, rng.random_range(0..=i));
        }
        let shuffled = miner_damage(&LoadSpectrum { bins }, mat);
        if whole > 0.0 {
            worst_miner = worst_miner.max(rel_diff(whole, shuffled));
        }
    }
    check!(
        worst_miner <= 1e-12,
        "Miner additivity/permutation error {worst_miner:e}"
    );
    Ok(format!(
        "max boundary jump {worst:.1e}, max Miner deviation {worst_miner:.1e}"
    ))
}

fn closed_form_equivalence(m: &FdiModel) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for case in 0..100 {
        let t = rng.random_range(0.4..5.0);
        let rec = FlightRecord {
            aircraft_id: "T".into(),
            distance_km: distance_for_flight_time(t, &m.config.profile).unwrap() * rng.random_range(0.97..1.03),
            flight_time_h: t,
            seat_load_factor: rng.random_range(0.0..=1.0),
            taxi_origin_min: rng.random_range(0.0..30.0),
            taxi_dest_min: rng.random_range(0.0..30.0),
        };
        let mask = MonitoringMask {
            use_load_factor: rng.random(),
            use_altitude: rng.random(),
            use_taxi: rng.random(),
        };
        let inc = history_increments(std::slice::from_ref(&rec), mask, m).map_err(|e| e.to_string())?;
        let (raw, fh) = inc[0];
        let per = m.normalize(raw);
        let (criterion, expected) = if case % 2 == 0 {
            let wing_limit = per.wing * rng.random_range(1.0..1_000.0);
            let fuselage_limit = per.fuselage * rng.random_range(1.0..1_000.0);
            let expected = ((wing_limit / per.wing).ceil() as u64).min((fuselage_limit / per.fuselage).ceil() as u64);
            (
                RetirementCriterion::FdiThreshold {
                    wing_limit,
                    fuselage_limit,
                },
                expected,
            )
        } else {
            let fc_limit = rng.random_range(1..=1_000u64);
            let fh_limit = fh * rng.random_range(1.0..1_000.0);
            let expected = fc_limit.min((fh_limit / fh).ceil() as u64);
            (RetirementCriterion::ServiceGoal { fc_limit, fh_limit }, expected)
        };
        let o = simulate_increments("T", &inc, criterion, m).map_err(|e| e.to_string())?;
        check!(
            o.flights_flown == expected,
            "case {case}: step-by-step {} vs closed form {expected} ({criterion:?})",
            o.flights_flown
        );
        checked += 1;
    }
    Ok(format!("{checked} randomized cases agree exactly"))
}

fn synthetic_fleet(m: &FdiModel) -> FleetDataset {
    let spec = SyntheticFleetSpec {
        aircraft_count: 1_000,
        ..Default::default()
    };
    generate_synthetic_fleet(&spec, &m.config.profile).expect("default spec is valid")
}

fn ratio(result: &FleetResult, key: &str) -> (f64, f64) {
    let s = result.summary.get(key).expect("scenario present");
    (s.fc_ratio_pct.unwrap(), s.fh_ratio_pct.unwrap())
}

fn table_direction(m: &FdiModel, fleet: &FleetDataset) -> Check {
    let start = Instant::now();
    let scenarios: Vec<Scenario> = ["dsg", "esg", "fdi-dsg:alt+lf", "fdi-esg:alt+lf"]
        .iter()
        .map(|s| Scenario::parse(s, m).unwrap())
        .collect();
    let result = with_threads(1, || simulate_fleet(fleet, &scenarios, m)).map_err(|e| e.to_string())?;
    within(start.elapsed(), 600.0, "single-threaded fleet run")?;
    let (dsg_fc, dsg_fh) = ratio(&result, "fdi-dsg_alt+lf");
    let (esg_fc, esg_fh) = ratio(&result, "fdi-esg_alt+lf");
    check!(
        dsg_fc > 100.0 && dsg_fh > 100.0,
        "DSG ratios {dsg_fc:.1}% FC, {dsg_fh:.1}% FH"
    );
    check!(
        esg_fc > 100.0 && esg_fh > 100.0,
        "ESG ratios {esg_fc:.1}% FC, {esg_fh:.1}% FH"
    );
    check!(dsg_fc > esg_fc && dsg_fh > esg_fh, "DSG gain does not exceed ESG gain");
    Ok(format!(
        "FDI+LF+alt vs service goal: DSG {dsg_fc:.0}% FC / {dsg_fh:.0}% FH, ESG {esg_fc:.0}% FC / {esg_fh:.0}% FH, {:.1} s",
        start.elapsed().as_secs_f64()
    ))
}

fn performance_envelope(m: &FdiModel, fleet: &FleetDataset) -> Check {
    let scenarios: Vec<Scenario> = ["esg", "fdi-esg:none", "fdi-esg:alt+lf", "fdi-esg:all"]
        .iter()
        .map(|s| Scenario::parse(s, m).unwrap())
        .collect();
    let timed = |threads| {
        let start = Instant::now();
        let r = with_threads(threads, || simulate_fleet(fleet, &scenarios, m));
        (r, start.elapsed())
    };
    let (serial, t1) = timed(1);
    let serial = serial.map_err(|e| e.to_string())?;
    let (parallel, t4) = timed(4);
    let parallel = parallel.map_err(|e| e.to_string())?;
    within(t1, 600.0, "1-thread run")?;
    within(t4, 600.0, "4-thread run")?;
    check!(serial == parallel, "1-thread and 4-thread outcomes differ");
    let mean_fc = serial.summary.scenarios.iter().map(|s| s.mean_fc).sum::<f64>() / 4.0;
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    let speedup = t1.as_secs_f64() / t4.as_secs_f64();
    let base = format!(
        "1 thread {:.1} s, 4 threads {:.1} s, identical outputs, mean {:.0} flights/aircraft",
        t1.as_secs_f64(),
        t4.as_secs_f64(),
        mean_fc
    );
    if cores >= 4 {
        check!(speedup >= 2.0, "{base}; speedup {speedup:.2}x < 2x on {cores} cores");
        Ok(format!("{base}; speedup {speedup:.2}x"))
    } else {
        Ok(format!(
            "{base}; speedup check not run: only {cores} CPU(s) available, needs 4 (observed {speedup:.2}x)"
        ))
    }
}

fn main() -> ExitCode {
    let model = FdiModel::standard();
    let m = &model;
    let fleet = synthetic_fleet(m);
    let criteria: Vec<Criterion> = vec![
        ("normalization identity", Box::new(|| normalization_identity(m))),
        ("DSG flight-hour binding", Box::new(|| dsg_flight_hour_binding(m))),
        ("taxi insensitivity", Box::new(|| taxi_insensitivity(m))),
        ("sensitivity directions", Box::new(|| sensitivity_directions(m))),
        ("distance effect", Box::new(|| distance_effect(m))),
        ("Haigh / S-N properties", Box::new(|| haigh_and_s_n(m))),
        ("closed-form equivalence", Box::new(|| closed_form_equivalence(m))),
        ("lifetime ratio direction", Box::new(|| table_direction(m, &fleet))),
        ("performance envelope", Box::new(|| performance_envelope(m, &fleet))),
    ];

    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {:<26} {status}  {detail}", i + 1, name);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
