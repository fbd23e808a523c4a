//! Shipped scenarios and static reference tables.

use crate::error::CliError;
use crate::scenario::{ReferenceTable, Scenario};

const SCENARIOS: &[(&str, &str)] = &[
    (
        "thm-main1-case1",
        include_str!("../scenarios/thm-main1-case1.toml"),
    ),
    (
        "thm-main1-case2",
        include_str!("../scenarios/thm-main1-case2.toml"),
    ),
    (
        "thm-main1-case3",
        include_str!("../scenarios/thm-main1-case3.toml"),
    ),
    (
        "thm-main1-case4",
        include_str!("../scenarios/thm-main1-case4.toml"),
    ),
    ("prop-lf-p7", include_str!("../scenarios/prop-lf-p7.toml")),
    ("prop-lf-p3", include_str!("../scenarios/prop-lf-p3.toml")),
    ("prop-ab", include_str!("../scenarios/prop-ab.toml")),
    (
        "thm-main2-fibers",
        include_str!("../scenarios/thm-main2-fibers.toml"),
    ),
    (
        "thm-main3-scan",
        include_str!("../scenarios/thm-main3-scan.toml"),
    ),
    (
        "p2-quotients",
        include_str!("../scenarios/p2-quotients.toml"),
    ),
    (
        "lemma-4A2-elimination",
        include_str!("../scenarios/lemma-4A2-elimination.toml"),
    ),
];

pub fn list_builtin_scenarios() -> Vec<&'static str> {
    SCENARIOS.iter().map(|(name, _)| *name).collect()
}

pub fn builtin_source(name: &str) -> Option<&'static str> {
    SCENARIOS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

pub fn builtin_scenario(name: &str) -> Result<Scenario, CliError> {
    let text = builtin_source(name).ok_or_else(|| CliError::UnknownScenario(name.to_string()))?;
    Scenario::parse(text)
}

fn table(name: &str, title: &str, entries: &[&str]) -> ReferenceTable {
    ReferenceTable {
        name: name.to_string(),
        title: title.to_string(),
        entries: entries.iter().map(|e| e.to_string()).collect(),
    }
}

/// Recorded classification data. These are displayed, never derived.
pub fn reference_table(name: &str) -> Option<ReferenceTable> {
    Some(match name {
        "automorphism-groups" => table(
            name,
            "Automorphism groups of fake projective planes",
            &["1", "C3", "C3^2", "7:3 (non-abelian, order 21)"],
        ),
        "quotient-fundamental-groups" => table(
            name,
            "Fundamental groups of X/G",
            &[
                "G = C3: 1, C2, C3, C4, C6, C7, C13, C14, C2^2, C2xC4, S3, D8, Q8",
                "G = C3^2, C7 or 7:3: 1, C2",
            ],
        ),
        "quotient-descriptions" => table(
            name,
            "Quotients X/G and their minimal resolutions",
            &[
                "G = C3: 3 x 1/3(1,2); resolution minimal of general type, pg = 0, K^2 = 3",
                "G = C3^2: 4 x 1/3(1,2); resolution minimal of general type, pg = 0, K^2 = 1",
                "G = C7: 3 x 1/7(1,5); resolution a (2,3)-, (2,4)- or (3,3)-elliptic surface",
                "G = 7:3: 3 x 1/3(1,2) + 1/7(1,5); resolution a (2,3)-, (2,4)- or (3,3)-elliptic surface",
            ],
        ),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_names() {
        let names = list_builtin_scenarios();
        assert!(names.len() >= 10);
        assert!(names.contains(&"thm-main3-scan"));
        assert!(names.contains(&"prop-lf-p7"));
    }

    #[test]
    fn every_shipped_scenario_parses() {
        for name in list_builtin_scenarios() {
            builtin_scenario(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(
            builtin_scenario("nope"),
            Err(CliError::UnknownScenario(_))
        ));
        assert!(reference_table("nope").is_none());
    }
}
