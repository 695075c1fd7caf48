//! `fdi`: per-flight damage, aircraft and fleet lifetimes, and sensitivity sweeps.
//!
//! Exit codes: 0 success, 1 invalid input, 2 I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fdi_core::fleet::{
    simulate_fleet, standard_scenarios, sweep_fdi, with_threads, FdiModel, MaskedRecord, Scenario, SweepParameter,
};
use fdi_core::io::{emit_reports, generate_synthetic_fleet, parse_fleet_csv, write_fleet_csv, SyntheticFleetSpec};
use fdi_core::profile::flight_time_for_distance;
use fdi_core::{load_config, load_twist, FdiConfig, FdiError, FlightRecord, Result, TwistTable};

#[derive(Parser, Debug)]
#[command(
    name = "fdi",
    version,
    about = "Fatigue damage index and fleet retirement simulation"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Configuration file (`key = value` lines); defaults are used when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// TWIST spectrum CSV replacing the built-in table.
    #[arg(long, global = true)]
    twist: Option<PathBuf>,
    /// Seed for synthetic fleet generation (overrides the spec file).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for fleet simulation; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Damage and FDI increments of one flight.
    SingleFlight(SingleFlightArgs),
    /// Retirement of each aircraft in a fleet file under one criterion.
    Aircraft(AircraftArgs),
    /// Fleet lifetime comparison across scenarios, written as CSV reports.
    Fleet(FleetArgs),
    /// FDI as one parameter varies around the design flight.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct SingleFlightArgs {
    /// Great-circle distance, km.
    #[arg(long)]
    distance: f64,
    /// Seat load factor, 0..1.
    #[arg(long)]
    lf: f64,
    /// Taxi time at origin, min.
    #[arg(long, default_value_t = 12.5)]
    taxi_origin: f64,
    /// Taxi time at destination, min.
    #[arg(long, default_value_t = 12.5)]
    taxi_dest: f64,
    /// Airborne time, h; derived from the distance when omitted.
    #[arg(long)]
    flight_time: Option<f64>,
}

#[derive(Args, Debug)]
struct AircraftArgs {
    #[arg(long)]
    fleet_csv: PathBuf,
    /// dsg, esg, fdi-dsg or fdi-esg.
    #[arg(long)]
    criterion: String,
    /// Monitored quantities: none, taxi, alt, lf, alt+lf or all.
    #[arg(long, default_value = "none")]
    monitor: String,
    /// Only simulate this aircraft.
    #[arg(long)]
    aircraft_id: Option<String>,
}

#[derive(Args, Debug)]
struct FleetArgs {
    #[arg(long, conflicts_with = "synthetic_spec", required_unless_present = "synthetic_spec")]
    fleet_csv: Option<PathBuf>,
    /// Spec file for a generated fleet, or `default`.
    #[arg(long)]
    synthetic_spec: Option<String>,
    /// Overrides the aircraft count of the synthetic spec.
    #[arg(long)]
    aircraft_count: Option<usize>,
    /// Comma-separated scenarios such as `esg,fdi-esg:alt+lf`, or `standard` for the full table.
    #[arg(long, default_value = "standard")]
    scenarios: String,
    #[arg(long)]
    out_dir: PathBuf,
    /// Also save the simulated fleet as a fleet CSV.
    #[arg(long)]
    write_fleet: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// lf, taxi, alt or distance.
    #[arg(long)]
    param: String,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long, default_value_t = 20)]
    steps: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let model = build_model(&cli.global)?;
    let threads = cli.global.threads;
    match cli.command {
        Command::SingleFlight(args) => single_flight(&args, &model),
        Command::Aircraft(args) => with_threads(threads, || aircraft(&args, &model)),
        Command::Fleet(args) => with_threads(threads, || fleet(&args, cli.global.seed, &model)),
        Command::Sweep(args) => sweep(&args, &model),
    }
}

fn build_model(global: &GlobalArgs) -> Result<FdiModel> {
    let config = match &global.config {
        Some(path) => load_config(path)?,
        None => FdiConfig::default(),
    };
    let twist = match &global.twist {
        Some(path) => load_twist(path)?,
        None => TwistTable::standard(),
    };
    FdiModel::new(config, twist)
}

fn single_flight(args: &SingleFlightArgs, model: &FdiModel) -> Result<()> {
    let cfg = &model.config;
    let flight_time_h = match args.flight_time {
        Some(t) => t,
        None => flight_time_for_distance(args.distance, &cfg.profile)?,
    };
    let record = FlightRecord {
        aircraft_id: "single".into(),
        distance_km: args.distance,
        flight_time_h,
        seat_load_factor: args.lf,
        taxi_origin_min: args.taxi_origin,
        taxi_dest_min: args.taxi_dest,
    };
    record.validate()?;
    let loads = MaskedRecord {
        record,
        forced_altitude_ft: None,
    }
    .loads(cfg)?;
    let damage = model.flight_damage(&loads)?;
    let fdi = model.normalize(damage);
    println!("takeoff_weight_kg = {}", loads.takeoff_weight);
    println!("max_altitude_ft = {}", loads.max_altitude);
    println!("flight_time_h = {}", loads.flight_time);
    println!("taxi_time_min = {}", loads.total_taxi_time);
    println!("wing_damage = {:e}", damage.wing);
    println!("fuselage_damage = {:e}", damage.fuselage);
    println!("wing_fdi_increment = {:e}", fdi.wing);
    println!("fuselage_fdi_increment = {:e}", fdi.fuselage);
    Ok(())
}

fn aircraft(args: &AircraftArgs, model: &FdiModel) -> Result<()> {
    let mut fleet = parse_fleet_csv(&args.fleet_csv)?;
    if let Some(id) = &args.aircraft_id {
        fleet.aircraft.retain(|k, _| k == id);
        if fleet.aircraft.is_empty() {
            return Err(FdiError::Validation {
                field: "aircraft_id".into(),
                message: format!("{id} not found in {}", args.fleet_csv.display()),
            });
        }
    }
    let scenario = Scenario::parse(&format!("{}:{}", args.criterion, args.monitor), model)?;
    let result = simulate_fleet(&fleet, std::slice::from_ref(&scenario), model)?;
    println!("aircraft_id,scenario,flights_flown,flight_hours,wing_fdi,fuselage_fdi,retired_because");
    for o in &result.scenarios[0].outcomes {
        println!(
            "{},{},{},{},{},{},{}",
            o.aircraft_id,
            scenario.key(),
            o.flights_flown,
            o.final_state.flight_hours,
            o.final_state.wing_fdi,
            o.final_state.fuselage_fdi,
            o.retired_because.as_str()
        );
    }
    Ok(())
}

fn fleet(args: &FleetArgs, seed: Option<u64>, model: &FdiModel) -> Result<()> {
    let fleet = match (&args.fleet_csv, &args.synthetic_spec) {
        (Some(path), _) => parse_fleet_csv(path)?,
        (None, Some(spec_arg)) => {
            let mut spec = if spec_arg == "default" {
                SyntheticFleetSpec::default()
            } else {
                SyntheticFleetSpec::load(spec_arg)?
            };
            if let Some(n) = args.aircraft_count {
                spec.aircraft_count = n;
            }
            if let Some(seed) = seed {
                spec.seed = seed;
            }
            generate_synthetic_fleet(&spec, &model.config.profile)?
        }
        (None, None) => unreachable!("clap requires one fleet source"),
    };
    if let Some(path) = &args.write_fleet {
        write_fleet_csv(&fleet, path)?;
    }
    let scenarios = if args.scenarios.trim() == "standard" {
        standard_scenarios(model)
    } else {
        args.scenarios
            .split(',')
            .map(|tok| Scenario::parse(tok, model))
            .collect::<Result<Vec<_>>>()?
    };
    let result = simulate_fleet(&fleet, &scenarios, model)?;
    let files = emit_reports(&result.summary, &args.out_dir)?;

    println!(
        "{:<40} {:>10} {:>8} {:>12} {:>8}",
        "criterion", "mean FC", "FC %", "mean FH", "FH %"
    );
    let pct = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.0}%"));
    for s in &result.summary.scenarios {
        println!(
            "{:<40} {:>10.0} {:>8} {:>12.0} {:>8}",
            s.label,
            s.mean_fc,
            pct(s.fc_ratio_pct),
            s.mean_fh,
            pct(s.fh_ratio_pct)
        );
    }
    println!(
        "{} aircraft; {} files written to {}",
        fleet.aircraft.len(),
        files.len(),
        args.out_dir.display()
    );
    Ok(())
}

fn sweep(args: &SweepArgs, model: &FdiModel) -> Result<()> {
    let param: SweepParameter = args.param.parse()?;
    let rows = sweep_fdi(param, args.from, args.to, args.steps, model)?;
    println!("{},wing_fdi,fuselage_fdi,flight_cycles", param.as_str());
    for r in rows {
        println!("{},{},{},{}", r.value, r.wing_fdi, r.fuselage_fdi, r.flight_cycles);
    }
    Ok(())
}
