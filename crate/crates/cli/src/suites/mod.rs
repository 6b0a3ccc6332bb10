mod configs;
mod delpezzo;
mod ecaut;
mod fibers;
mod lattice;
mod tables;

use crate::report::Section;
use crate::{RunConfig, Suite};

pub fn run(suite: Suite, config: &RunConfig) -> Section {
    let name = suite.name();
    let result = match suite {
        Suite::LatticeSelfcheck => lattice::selfcheck(config),
        Suite::FibersEuler => fibers::euler_table(),
        Suite::Fibers2conn => fibers::two_connected(),
        Suite::Lefschetz => fibers::lefschetz(config),
        Suite::ConfigsEnumerate => configs::enumerate(config),
        Suite::ConfigsShared8 => configs::shared8(),
        Suite::EcautTables => ecaut::tables(config),
        Suite::DelpezzoVerify => delpezzo::verify(),
        Suite::TablesConsistency => Ok(tables::consistency()),
        Suite::All => unreachable!("expanded by the driver"),
    };
    result.unwrap_or_else(|e| Section::failed(name, e))
}

type SuiteResult = Result<Section, Box<dyn std::error::Error + Send + Sync>>;
