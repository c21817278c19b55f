use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use forge_core::polydiff::SolverConfig;
use serde::{Deserialize, Serialize};

/// Settings for `forge demo`. A JSON config file uses the same field names
/// and overrides command-line flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Degree of `t`; must be even and positive.
    pub n: u32,
    /// Highest Stasheff arity to reach; defaults to `2n + 3`.
    pub max_arity: Option<usize>,
    pub order_bound: u32,
    pub t_min: i64,
    pub t_max: i64,
    pub seed: u64,
    /// Pointwise Stasheff samples per arity, on top of the symbolic check.
    pub stasheff_samples: usize,
    pub random_automorphisms: usize,
    /// Extra automorphism specs to certify.
    pub automorphisms: Vec<PathBuf>,
    /// Extra twisted complexes to check.
    pub complexes: Vec<PathBuf>,
    /// Inclusive range of shifts `u` for the endomorphism invariant.
    pub shift_window: [i64; 2],
    pub report: Option<PathBuf>,
    /// Writes every `m_d` of the extended structure here.
    pub structure_dump: Option<PathBuf>,
    /// Adds wall-clock timings, which makes the report nondeterministic.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let solver = SolverConfig::default();
        RunConfig {
            n: 2,
            max_arity: None,
            order_bound: solver.order_bound,
            t_min: solver.t_min,
            t_max: solver.t_max,
            seed: 17,
            stasheff_samples: 2,
            random_automorphisms: 25,
            automorphisms: Vec::new(),
            complexes: Vec::new(),
            shift_window: [-3, 3],
            report: None,
            structure_dump: None,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn max_arity(&self) -> usize {
        self.max_arity.unwrap_or(2 * self.n as usize + 3)
    }

    pub fn solver(&self) -> SolverConfig {
        SolverConfig { order_bound: self.order_bound, t_min: self.t_min, t_max: self.t_max }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n % 2 != 0 {
            bail!("n must be even and positive, got {}", self.n);
        }
        if self.max_arity() < self.n as usize + 2 {
            bail!("max_arity must be at least n + 2 = {}, got {}", self.n + 2, self.max_arity());
        }
        if self.t_min > self.t_max {
            bail!("empty t window {}..{}", self.t_min, self.t_max);
        }
        if self.shift_window[0] > self.shift_window[1] {
            bail!("empty shift window {:?}", self.shift_window);
        }
        Ok(())
    }

    /// Overlays the keys of a JSON object onto this config.
    pub fn overlay_json(&self, src: &str) -> Result<Self> {
        let file: serde_json::Value = serde_json::from_str(src).context("config is not valid JSON")?;
        let serde_json::Value::Object(file) = file else {
            bail!("config must be a JSON object");
        };
        let mut base = serde_json::to_value(self)?;
        let map = base.as_object_mut().expect("config serializes to an object");
        for (k, v) in file {
            map.insert(k, v);
        }
        serde_json::from_value(base).context("invalid config")
    }
}
