//! Scenario files.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use coophunt::dynamics::IntegratorOptions;
use coophunt::ParamSet;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Equilibria,
    Region,
    Bt,
    Hopf,
    Simulate,
    Cycles,
    Table1,
    Variety,
}

impl Task {
    fn needs_points(self) -> bool {
        matches!(self, Task::Equilibria | Task::Region | Task::Simulate | Task::Cycles)
    }
}

/// One parameter: a value, an explicit list, or `count` evenly spaced values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Axis {
    Value(f64),
    List(Vec<f64>),
    Range { min: f64, max: f64, count: usize },
}

impl Axis {
    pub fn values(&self) -> anyhow::Result<Vec<f64>> {
        let v = match self {
            Axis::Value(x) => vec![*x],
            Axis::List(xs) => xs.clone(),
            Axis::Range { min, max, count } => {
                if *count == 0 || !(min <= max) {
                    bail!("range needs count >= 1 and min <= max");
                }
                if *count == 1 {
                    vec![*min]
                } else {
                    (0..*count).map(|i| min + (max - min) * i as f64 / (*count - 1) as f64).collect()
                }
            }
        };
        if v.is_empty() {
            bail!("empty parameter list");
        }
        if v.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            bail!("parameter values must be positive and finite");
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub alpha: Axis,
    pub kappa: Axis,
    pub sigma: Axis,
    pub h: Axis,
}

impl Grid {
    /// Cartesian product, α varying slowest.
    pub fn points(&self) -> anyhow::Result<Vec<ParamSet>> {
        let (a, k, s, h) = (self.alpha.values()?, self.kappa.values()?, self.sigma.values()?, self.h.values()?);
        let mut out = Vec::with_capacity(a.len() * k.len() * s.len() * h.len());
        for &alpha in &a {
            for &kappa in &k {
                for &sigma in &s {
                    for &hh in &h {
                        out.push(ParamSet::new(alpha, kappa, sigma, hh)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Point {
    pub label: String,
    pub alpha: f64,
    pub kappa: f64,
    pub sigma: f64,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IntegratorConfig {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        let o = IntegratorOptions::default();
        IntegratorConfig { rtol: o.rtol, atol: o.atol, max_steps: o.max_steps }
    }
}

impl From<IntegratorConfig> for IntegratorOptions {
    fn from(c: IntegratorConfig) -> Self {
        IntegratorOptions { rtol: c.rtol, atol: c.atol, max_steps: c.max_steps }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimulateConfig {
    pub starts: Vec<[f64; 2]>,
    pub t_end: f64,
}

impl Default for SimulateConfig {
    fn default() -> Self {
        SimulateConfig { starts: Vec::new(), t_end: 200.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BtConfig {
    pub x_star: f64,
    pub h: f64,
    /// Half-width of the σ window around σ_*.
    pub radius: f64,
    pub count: usize,
}

impl Default for BtConfig {
    fn default() -> Self {
        BtConfig { x_star: 1.0, h: 0.5, radius: 0.1, count: 41 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfConfig {
    pub kappa: f64,
    pub h: f64,
    pub x1: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CyclesConfig {
    pub direction: Option<[f64; 2]>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub starts_per_decade: Option<usize>,
    pub max_evals: Option<usize>,
    /// Extra starts whose successive section crossings are reported.
    pub probes: Vec<[f64; 2]>,
    pub probe_returns: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VarietyConfig {
    /// Sample the multiplicity-three locus at the default x₁ values.
    pub sample: bool,
}

impl Default for VarietyConfig {
    fn default() -> Self {
        VarietyConfig { sample: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub name: String,
    #[serde(default)]
    pub points: Vec<Point>,
    #[serde(default)]
    pub grid: Option<Grid>,
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub integrator: IntegratorConfig,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub simulate: SimulateConfig,
    #[serde(default)]
    pub bt: BtConfig,
    #[serde(default)]
    pub hopf: Option<HopfConfig>,
    #[serde(default)]
    pub cycles: CyclesConfig,
    #[serde(default)]
    pub variety: VarietyConfig,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledParams {
    pub label: String,
    pub params: ParamSet,
}

impl Scenario {
    pub fn load(path: &Path) -> anyhow::Result<Scenario> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let s: Scenario = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            bail!("unsupported schema_version {}", self.schema_version);
        }
        if self.name.trim().is_empty() {
            bail!("scenario name is empty");
        }
        if self.tasks.is_empty() {
            bail!("task list is empty");
        }
        let pts = self.parameter_sets()?;
        if pts.is_empty() && self.tasks.iter().any(|t| t.needs_points()) {
            bail!("tasks need parameter points or a grid");
        }
        if self.tasks.contains(&Task::Hopf) && self.hopf.is_none() && pts.is_empty() {
            bail!("hopf needs a hopf block or parameter points");
        }
        if self.tasks.contains(&Task::Simulate) {
            if self.simulate.starts.is_empty() {
                bail!("simulate needs at least one start");
            }
            if !(self.simulate.t_end > 0.0) {
                bail!("simulate.t_end must be positive");
            }
        }
        let i = self.integrator;
        if !(i.rtol > 0.0 && i.atol > 0.0 && i.max_steps > 0) {
            bail!("integrator tolerances and step budget must be positive");
        }
        if !(self.bt.radius > 0.0 && self.bt.count >= 2) {
            bail!("bt.radius must be positive and bt.count at least 2");
        }
        if let Some(h) = self.hopf {
            if !(h.kappa > 0.0 && h.h > 0.0 && h.x1 > 0.0) {
                bail!("hopf kappa, h, x1 must be positive");
            }
        }
        let mut labels: Vec<&str> = self.points.iter().map(|p| p.label.as_str()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            bail!("duplicate point labels");
        }
        if labels.iter().any(|l| l.is_empty() || !l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')) {
            bail!("point labels must be nonempty and use [A-Za-z0-9_-]");
        }
        Ok(())
    }

    /// Labeled points first, then the grid in order as `g0`, `g1`, ...
    pub fn parameter_sets(&self) -> anyhow::Result<Vec<LabeledParams>> {
        let mut out = Vec::new();
        for p in &self.points {
            let params = ParamSet::new(p.alpha, p.kappa, p.sigma, p.h)
                .with_context(|| format!("point {}", p.label))?;
            out.push(LabeledParams { label: p.label.clone(), params });
        }
        if let Some(g) = &self.grid {
            for (i, params) in g.points()?.into_iter().enumerate() {
                out.push(LabeledParams { label: format!("g{i}"), params });
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_forms() {
        let a: Axis = serde_json::from_str("0.5").unwrap();
        assert_eq!(a.values().unwrap(), vec![0.5]);
        let a: Axis = serde_json::from_str("[1, 2]").unwrap();
        assert_eq!(a.values().unwrap(), vec![1.0, 2.0]);
        let a: Axis = serde_json::from_str(r#"{"min": 1, "max": 2, "count": 3}"#).unwrap();
        assert_eq!(a.values().unwrap(), vec![1.0, 1.5, 2.0]);
        let a: Axis = serde_json::from_str("[]").unwrap();
        assert!(a.values().is_err());
    }

    #[test]
    fn empty_tasks_rejected() {
        let s: Scenario = serde_json::from_str(r#"{"name": "x", "tasks": []}"#).unwrap();
        assert!(s.validate().is_err());
    }
}
