use std::path::Path;
use std::process::{Command, Output};

fn fdi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const FLEET: &str = "aircraft_id,distance_km,flight_time_h,seat_load_factor,taxi_origin_min,taxi_dest_min
A1,1584.6431437343863,2,1,12.5,12.5
A2,800,1.2,0.7,10,8
A2,2400,3.1,0.85,14,9
";

fn write_fleet(dir: &Path) -> String {
    let path = dir.join("fleet.csv");
    std::fs::write(&path, FLEET).unwrap();
    path.display().to_string()
}

#[test]
fn single_flight_prints_damages() {
    let o = fdi(&[
        "single-flight",
        "--distance",
        "1584.6",
        "--lf",
        "1",
        "--flight-time",
        "2",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("max_altitude_ft = 39000"), "{out}");
    assert!(out.contains("wing_fdi_increment"));
}

#[test]
fn aircraft_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let fleet = write_fleet(dir.path());
    let o = fdi(&["aircraft", "--fleet-csv", &fleet, "--criterion", "dsg"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("A1,dsg,30000,60000,"), "{}", lines[1]);
    assert!(lines[1].ends_with(",fh"));

    let o = fdi(&[
        "aircraft",
        "--fleet-csv",
        &fleet,
        "--criterion",
        "fdi-esg",
        "--monitor",
        "alt+lf",
        "--aircraft-id",
        "A2",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn fleet_subcommand_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let saved = dir.path().join("synthetic.csv");
    let o = fdi(&[
        "fleet",
        "--synthetic-spec",
        "default",
        "--aircraft-count",
        "12",
        "--scenarios",
        "esg,fdi-esg:alt+lf",
        "--out-dir",
        out_dir.to_str().unwrap(),
        "--write-fleet",
        saved.to_str().unwrap(),
        "--seed",
        "4",
        "--threads",
        "2",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out_dir.join("summary.csv").exists());
    assert!(out_dir.join("scatter_fdi-esg_alt+lf.csv").exists());
    assert!(out_dir.join("lifetime_bars.csv").exists());

    // the saved fleet reproduces the same summary
    let out2 = dir.path().join("out2");
    let o = fdi(&[
        "fleet",
        "--fleet-csv",
        saved.to_str().unwrap(),
        "--scenarios",
        "esg,fdi-esg:alt+lf",
        "--out-dir",
        out2.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let a = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let b = std::fs::read_to_string(out2.join("summary.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sweep_subcommand() {
    let o = fdi(&["sweep", "--param", "taxi", "--from", "0", "--to", "60", "--steps", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("taxi,wing_fdi,fuselage_fdi,flight_cycles\n"));
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fleet = write_fleet(dir.path());
    // invalid values
    assert_eq!(
        fdi(&["sweep", "--param", "speed", "--from", "0", "--to", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fdi(&["single-flight", "--distance", "500", "--lf", "1.4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fdi(&["aircraft", "--fleet-csv", &fleet, "--criterion", "lol"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(fdi(&["bogus-command"]).status.code(), Some(1));
    let bad_cfg = dir.path().join("bad.cfg");
    std::fs::write(&bad_cfg, "mtow = heavy\n").unwrap();
    let o = fdi(&[
        "--config",
        bad_cfg.to_str().unwrap(),
        "sweep",
        "--param",
        "lf",
        "--from",
        "0",
        "--to",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.cfg:1:"));
    // I/O failures
    assert_eq!(
        fdi(&[
            "aircraft",
            "--fleet-csv",
            "/nonexistent/fleet.csv",
            "--criterion",
            "esg"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        fdi(&[
            "--config",
            "/nonexistent.cfg",
            "sweep",
            "--param",
            "lf",
            "--from",
            "0",
            "--to",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    // help is not an error
    assert_eq!(fdi(&["--help"]).status.code(), Some(0));
}
