//! Scenario runner and report rendering on top of `fpp-core`.

pub mod builtin;
pub mod error;
pub mod ops;
pub mod report;
pub mod scenario;

pub use builtin::{builtin_scenario, list_builtin_scenarios, reference_table};
pub use error::{CliError, StepError};
pub use scenario::{run_scenario, Report, Scenario};

/// Load a shipped scenario by name, or a scenario file by path.
pub fn load_scenario(name_or_path: &str) -> Result<Scenario, CliError> {
    if builtin::builtin_source(name_or_path).is_some() {
        return builtin_scenario(name_or_path);
    }
    let path = std::path::Path::new(name_or_path);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: name_or_path.to_string(),
            source,
        })?;
        return Scenario::parse(&text);
    }
    Err(CliError::UnknownScenario(name_or_path.to_string()))
}

/// Run independent scenarios on separate threads; reports come back in input order.
pub fn run_all(scenarios: &[Scenario]) -> Vec<Report> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = scenarios
            .iter()
            .map(|s| scope.spawn(move || run_scenario(s)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    })
}
