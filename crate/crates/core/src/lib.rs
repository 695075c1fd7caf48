//! Fatigue damage indices for transport aircraft wings and fuselages, and a
//! fleet simulator that retires each airframe by service goal or by FDI.
//!
//! A flight record (distance, flight time, seat load factor, taxi times)
//! becomes four fatigue drivers: takeoff weight, maximum altitude, flight
//! time and taxi time. The wing sees a scaled TWIST load spectrum; the
//! fuselage sees one pressurization cycle. Miner damage from both is
//! normalized so a design-loads aircraft reaches FDI 1.0 at the extended
//! service goal.

pub mod config;
pub mod error;
pub mod fatigue;
pub mod fleet;
pub mod fuselage;
pub mod io;
pub mod performance;
pub mod profile;
pub mod wing;

pub use config::{load_config, FdiConfig};
pub use error::{FdiError, Result};
pub use fleet::{
    simulate_aircraft, simulate_fleet, sweep_fdi, FdiModel, MonitoringMask, RetirementCriterion, Scenario,
};
pub use io::{generate_synthetic_fleet, parse_fleet_csv, FleetDataset, SyntheticFleetSpec};
pub use performance::FlightRecord;
pub use wing::{load_twist, TwistTable};
