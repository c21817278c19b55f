use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// One verdict in a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Machine-readable output of a command. Apart from optional timings it is
/// a pure function of the inputs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub ok: bool,
    pub failed_step: Option<String>,
    pub config: Value,
    pub checks: Vec<Check>,
    pub sections: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            ok: true,
            failed_step: None,
            config,
            checks: Vec::new(),
            sections: BTreeMap::new(),
            timings_ms: None,
        }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> bool {
        let detail = detail.into();
        if ok {
            log::info!("{name}: ok ({detail})");
        } else {
            log::warn!("{name}: FAILED ({detail})");
            self.ok = false;
            if self.failed_step.is_none() {
                self.failed_step = Some(name.to_string());
            }
        }
        self.checks.push(Check { name: name.to_string(), ok, detail });
        ok
    }

    pub fn section(&mut self, name: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report data serializes");
        self.sections.insert(name.to_string(), v);
    }

    /// Records a step that could not run to completion.
    pub fn abort(&mut self, step: &str, err: impl std::fmt::Display) {
        self.check(step, false, err.to_string());
    }

    pub fn get_check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}
