//! Scenario files: TOML with one `[[step]]` stanza per operation and
//! `[[expect]]` stanzas asserting exact string equality on step fields.
//!
//! ```toml
//! name = "example"
//!
//! [[step]]
//! id = "z"
//! op = "ledger"
//! K2 = "3"
//! e = 9
//! singularities = ["1/3(1,2)", "1/3(1,2)", "1/3(1,2)"]
//!
//! [[step]]
//! id = "x"
//! op = "cover"
//! base = "@z"
//! degree = 3
//! branch = [0, 1, 2]
//!
//! [[expect]]
//! step = "x"
//! field = "resolution_k2"
//! value = "9"
//! ```
//!
//! A string argument of the form `@id` refers to the output of an earlier
//! step. A step that fails records its error kind in the field `error`; an
//! error that no expectation anticipates fails the scenario.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use toml::{Table, Value};

use crate::error::CliError;
use crate::ops::{execute, StepOutput};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    name: String,
    #[serde(default)]
    description: String,
    #[serde(default)]
    references: Vec<String>,
    #[serde(default)]
    step: Vec<Table>,
    #[serde(default)]
    expect: Vec<Expectation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Step {
    pub id: String,
    pub op: String,
    pub args: Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub step: String,
    pub field: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub description: String,
    /// Names of static reference tables shown with the report.
    pub references: Vec<String>,
    pub steps: Vec<Step>,
    pub expectations: Vec<Expectation>,
}

/// Back-references inside an argument value, e.g. `"@z"`.
fn references(value: &Value, out: &mut Vec<String>) {
    match value {
        Value::String(s) => {
            if let Some(r) = s.strip_prefix('@') {
                out.push(r.to_string());
            }
        }
        Value::Array(items) => items.iter().for_each(|v| references(v, out)),
        Value::Table(t) => t.values().for_each(|v| references(v, out)),
        _ => {}
    }
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawScenario =
            toml::from_str(text).map_err(|e| CliError::Parse(e.message().to_string()))?;
        let mut seen = HashSet::new();
        let mut steps = Vec::with_capacity(raw.step.len());
        for (k, mut table) in raw.step.into_iter().enumerate() {
            let mut take = |key: &str| match table.remove(key) {
                Some(Value::String(s)) => Ok(s),
                Some(_) => Err(CliError::Parse(format!(
                    "step {k}: `{key}` must be a string"
                ))),
                None => Err(CliError::Parse(format!("step {k}: missing `{key}`"))),
            };
            let id = take("id")?;
            let op = take("op")?;
            let mut refs = Vec::new();
            table.values().for_each(|v| references(v, &mut refs));
            if let Some(r) = refs.iter().find(|r| !seen.contains(r.as_str())) {
                return Err(CliError::Reference(format!(
                    "step `{id}` refers to `@{r}`, which is not an earlier step"
                )));
            }
            if !seen.insert(id.clone()) {
                return Err(CliError::Parse(format!("duplicate step id `{id}`")));
            }
            steps.push(Step {
                id,
                op,
                args: table,
            });
        }
        if let Some(e) = raw.expect.iter().find(|e| !seen.contains(&e.step)) {
            return Err(CliError::Reference(format!(
                "expectation on unknown step `{}`",
                e.step
            )));
        }
        Ok(Scenario {
            name: raw.name,
            description: raw.description,
            references: raw.references,
            steps,
            expectations: raw.expect,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub id: String,
    pub op: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationReport {
    pub step: String,
    pub field: String,
    pub expected: String,
    /// `None` when the step has no such field.
    pub actual: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceTable {
    pub name: String,
    pub title: String,
    pub entries: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub description: String,
    pub steps: Vec<StepReport>,
    pub expectations: Vec<ExpectationReport>,
    /// Steps that failed without an expectation on their `error` field.
    pub unexpected_errors: Vec<String>,
    pub references: Vec<ReferenceTable>,
    pub passed: bool,
}

pub(crate) fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Table(t) => {
            let parts: Vec<String> = t
                .iter()
                .map(|(k, v)| format!("{k}={}", render_value(v)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn run_scenario(scenario: &Scenario) -> Report {
    let mut outputs: BTreeMap<String, StepOutput> = BTreeMap::new();
    let mut steps = Vec::with_capacity(scenario.steps.len());
    for step in &scenario.steps {
        let inputs = step
            .args
            .iter()
            .map(|(k, v)| (k.clone(), render_value(v)))
            .collect();
        let (out, error) = match execute(&step.op, &step.args, &outputs) {
            Ok(out) => (out, None),
            Err(err) => {
                let mut out = StepOutput::default();
                out.set("error", err.kind());
                out.set("message", err.to_string());
                (out, Some(err.to_string()))
            }
        };
        steps.push(StepReport {
            id: step.id.clone(),
            op: step.op.clone(),
            inputs,
            outputs: out.fields.clone(),
            error,
        });
        outputs.insert(step.id.clone(), out);
    }

    let expectations: Vec<ExpectationReport> = scenario
        .expectations
        .iter()
        .map(|e| {
            let actual = outputs
                .get(&e.step)
                .and_then(|o| o.fields.get(&e.field))
                .cloned();
            ExpectationReport {
                step: e.step.clone(),
                field: e.field.clone(),
                expected: e.value.clone(),
                passed: actual.as_deref() == Some(e.value.as_str()),
                actual,
            }
        })
        .collect();
    let unexpected_errors: Vec<String> = steps
        .iter()
        .filter(|s| s.error.is_some())
        .filter(|s| {
            !scenario
                .expectations
                .iter()
                .any(|e| e.step == s.id && e.field == "error")
        })
        .map(|s| s.id.clone())
        .collect();
    let references = scenario
        .references
        .iter()
        .filter_map(|name| crate::builtin::reference_table(name))
        .collect();
    let passed = expectations.iter().all(|e| e.passed) && unexpected_errors.is_empty();
    Report {
        scenario: scenario.name.clone(),
        description: scenario.description.clone(),
        steps,
        expectations,
        unexpected_errors,
        references,
        passed,
    }
}
