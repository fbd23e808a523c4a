//! Shipped scenario reports compared byte for byte against checked-in files.
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p fpp-cli --test golden`.

use std::path::PathBuf;

use fpp_cli::report::{render_structured, render_text};
use fpp_cli::{builtin_scenario, list_builtin_scenarios, run_scenario};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn check(file: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(file);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{file}: {e}"))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{file} differs from the golden copy"))
    }
}

#[test]
fn shipped_reports_match_golden_files() {
    let mut failures = Vec::new();
    for name in list_builtin_scenarios() {
        let report = run_scenario(&builtin_scenario(name).unwrap());
        assert!(report.passed, "{name} failed:\n{}", render_text(&report));
        for (file, text) in [
            (format!("{name}.txt"), render_text(&report)),
            (format!("{name}.json"), render_structured(&report)),
        ] {
            if let Err(e) = check(&file, &text) {
                failures.push(e);
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn reports_are_stable_across_runs() {
    for name in list_builtin_scenarios() {
        let s = builtin_scenario(name).unwrap();
        let a = render_structured(&run_scenario(&s));
        let b = render_structured(&run_scenario(&s));
        assert_eq!(a, b, "{name}");
    }
}
