//! Each task as plain rows or reports, shared by `run` and the subcommands.

use anyhow::Context;
use coophunt::bifurcation::{bt_curves, exact_fold_alpha, exact_hopf_alpha, BTExpansion};
use coophunt::dynamics::{
    detect_cycles, integrate_with, reproduce_table1, return_map, CycleOptions, CycleReport, IntegratorOptions,
    ReturnOptions, RowVerdict, Termination,
};
use coophunt::equilibria::{classify_region, find_equilibria, positive_equilibria, Classification, Kind, Region};
use coophunt::hopf::variety::{variety_check_desk, variety_check_with, VarietyReport};
use coophunt::hopf::{focal_values, hopf_critical, hopf_critical_near, FocalReport, HopfCritical};
use coophunt::{ParamSet, State};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{BtConfig, CyclesConfig, HopfConfig, LabeledParams};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumRow {
    pub label: String,
    pub alpha: f64,
    pub kappa: f64,
    pub sigma: f64,
    pub h: f64,
    pub kind: Kind,
    pub x: f64,
    pub y: f64,
    pub classification: Classification,
    pub det: f64,
    pub trace: f64,
    pub multiplicity: u32,
}

pub fn equilibria(points: &[LabeledParams]) -> anyhow::Result<Vec<EquilibriumRow>> {
    let per: Vec<Vec<EquilibriumRow>> = points
        .par_iter()
        .map(|lp| {
            let p = lp.params;
            Ok(find_equilibria(&p)?
                .into_iter()
                .map(|e| EquilibriumRow {
                    label: lp.label.clone(),
                    alpha: p.alpha,
                    kappa: p.kappa,
                    sigma: p.sigma,
                    h: p.h,
                    kind: e.kind,
                    x: e.point.x,
                    y: e.point.y,
                    classification: e.classification,
                    det: e.det,
                    trace: e.trace,
                    multiplicity: e.multiplicity,
                })
                .collect())
        })
        .collect::<coophunt::Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionRow {
    pub label: String,
    pub alpha: f64,
    pub kappa: f64,
    pub sigma: f64,
    pub h: f64,
    pub region: Region,
    pub positive_count: usize,
    pub kappa1: Option<f64>,
    pub alpha1: Option<f64>,
    pub alpha2: Option<f64>,
    pub x_star: f64,
    pub f_at_xstar: f64,
    pub f_at_kappa: f64,
}

pub fn region_row(label: &str, p: &ParamSet) -> RegionRow {
    let t = classify_region(p);
    RegionRow {
        label: label.to_string(),
        alpha: p.alpha,
        kappa: p.kappa,
        sigma: p.sigma,
        h: p.h,
        region: t.region,
        positive_count: t.region.positive_count(),
        kappa1: t.thresholds.kappa1,
        alpha1: t.thresholds.alpha1,
        alpha2: t.thresholds.alpha2,
        x_star: t.x_star,
        f_at_xstar: t.f_at_xstar,
        f_at_kappa: t.f_at_kappa,
    }
}

pub fn regions(points: &[LabeledParams]) -> Vec<RegionRow> {
    points.par_iter().map(|lp| region_row(&lp.label, &lp.params)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BtRow {
    pub sigma: f64,
    /// Quadratic expansions about the cusp; Hopf and homoclinic only for σ > σ_*.
    pub alpha_sn: f64,
    pub alpha_h: Option<f64>,
    pub alpha_hl: Option<f64>,
    /// Fold and Hopf curves from the equilibrium conditions.
    pub alpha_sn_exact: Option<f64>,
    pub alpha_h_exact: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BtReport {
    pub expansion: BTExpansion,
    pub curves: Vec<BtRow>,
}

pub fn bt(cfg: &BtConfig) -> anyhow::Result<BtReport> {
    let e = bt_curves(cfg.x_star, cfg.h)?;
    let n = cfg.count;
    let curves = (0..n)
        .map(|i| {
            let sigma = e.sigma_star - cfg.radius + 2.0 * cfg.radius * i as f64 / (n - 1) as f64;
            let above = sigma > e.sigma_star;
            BtRow {
                sigma,
                alpha_sn: e.alpha_sn(sigma),
                alpha_h: above.then(|| e.alpha_h(sigma)),
                alpha_hl: above.then(|| e.alpha_hl(sigma)),
                alpha_sn_exact: (sigma > 0.0).then(|| exact_fold_alpha(e.kappa2, sigma, e.h).ok()).flatten(),
                alpha_h_exact: (above && sigma > 0.0)
                    .then(|| exact_hopf_alpha(e.kappa2, sigma, e.h).ok().map(|(a, _)| a))
                    .flatten(),
            }
        })
        .collect();
    Ok(BtReport { expansion: e, curves })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfEntry {
    pub label: String,
    pub critical: HopfCritical,
    pub focal: FocalReport,
}

pub fn hopf_at(cfg: &HopfConfig) -> anyhow::Result<HopfEntry> {
    let c = hopf_critical(cfg.kappa, cfg.h, cfg.x1)?;
    Ok(HopfEntry { label: "hopf".into(), critical: c, focal: focal_values(&c)? })
}

pub fn hopf_near(points: &[LabeledParams]) -> anyhow::Result<Vec<HopfEntry>> {
    points
        .par_iter()
        .map(|lp| {
            let c = hopf_critical_near(&lp.params).with_context(|| format!("point {}", lp.label))?;
            Ok(HopfEntry { label: lp.label.clone(), critical: c, focal: focal_values(&c)? })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub start: usize,
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

pub fn simulate(p: &ParamSet, starts: &[[f64; 2]], t_end: f64, opts: IntegratorOptions) -> anyhow::Result<Vec<TrajectoryRow>> {
    let per: Vec<Vec<TrajectoryRow>> = starts
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let tr = integrate_with(p, State::new(s[0], s[1]), t_end, opts)?;
            Ok(tr.samples.iter().map(|q| TrajectoryRow { start: i, t: q.t, x: q.x, y: q.y }).collect())
        })
        .collect::<coophunt::Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trend {
    Outward,
    Inward,
    Mixed,
    TooFew,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Probe {
    pub start: [f64; 2],
    /// Ray parameters of successive crossings.
    pub crossings: Vec<f64>,
    pub termination: Termination,
    pub trend: Trend,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleEntry {
    pub label: String,
    pub params: ParamSet,
    pub focus: Option<State>,
    pub report: Option<CycleReport>,
    pub skipped: Option<String>,
    pub probes: Vec<Probe>,
}

fn trend(s: &[f64]) -> Trend {
    if s.len() < 2 {
        return Trend::TooFew;
    }
    if s.windows(2).all(|w| w[1] > w[0]) {
        Trend::Outward
    } else if s.windows(2).all(|w| w[1] < w[0]) {
        Trend::Inward
    } else {
        Trend::Mixed
    }
}

pub fn cycle_options(cfg: &CyclesConfig, opts: IntegratorOptions) -> CycleOptions {
    let d = CycleOptions::default();
    CycleOptions {
        starts_per_decade: cfg.starts_per_decade.unwrap_or(d.starts_per_decade),
        r_min: cfg.r_min,
        r_max: cfg.r_max,
        direction: cfg.direction.map(|v| (v[0], v[1])),
        returns: ReturnOptions { integrator: opts, ..d.returns },
        max_evals: cfg.max_evals.unwrap_or(d.max_evals),
        ..d
    }
}

/// Cycles around the first positive focus of each point.
pub fn cycles(points: &[LabeledParams], cfg: &CyclesConfig, opts: IntegratorOptions) -> anyhow::Result<Vec<CycleEntry>> {
    let co = cycle_options(cfg, opts);
    points
        .iter()
        .map(|lp| {
            let p = lp.params;
            let mut entry =
                CycleEntry { label: lp.label.clone(), params: p, focus: None, report: None, skipped: None, probes: Vec::new() };
            let eqs = positive_equilibria(&p)?;
            let Some(e) = eqs.iter().find(|e| e.classification.is_focus()) else {
                entry.skipped = Some("no positive focus".into());
                return Ok(entry);
            };
            entry.focus = Some(e.point);
            let rep = detect_cycles(&p, e, &co)?;
            let n = cfg.probe_returns.unwrap_or(6);
            entry.probes = cfg
                .probes
                .par_iter()
                .map(|s| {
                    let rm = return_map(&p, &rep.section, State::new(s[0], s[1]), n, &co.returns)?;
                    let crossings: Vec<f64> = rm.crossings.iter().map(|c| c.s).collect();
                    Ok(Probe { start: *s, trend: trend(&crossings), crossings, termination: rm.termination })
                })
                .collect::<coophunt::Result<_>>()?;
            entry.report = Some(rep);
            Ok(entry)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1 {
    pub all_match: bool,
    pub rows: Vec<RowVerdict>,
}

pub fn table1(opts: IntegratorOptions) -> anyhow::Result<Table1> {
    let d = CycleOptions::default();
    let returns = ReturnOptions { integrator: opts, ..d.returns };
    let rows = reproduce_table1(&CycleOptions { returns, ..d }, &returns)?;
    Ok(Table1 { all_match: rows.iter().all(|r| r.matches), rows })
}

pub fn variety(sample: bool) -> anyhow::Result<VarietyReport> {
    Ok(if sample { variety_check_desk()? } else { variety_check_with(&[])? })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub alpha: f64,
    pub kappa: f64,
    pub sigma: f64,
    pub h: f64,
    pub region: Region,
    pub positive_count: usize,
    pub e1: Option<Classification>,
    pub e2: Option<Classification>,
}

pub fn sweep_row(index: usize, p: &ParamSet) -> anyhow::Result<SweepRow> {
    let t = classify_region(p);
    let eqs = positive_equilibria(p)?;
    Ok(SweepRow {
        index,
        alpha: p.alpha,
        kappa: p.kappa,
        sigma: p.sigma,
        h: p.h,
        region: t.region,
        positive_count: eqs.len(),
        e1: eqs.first().map(|e| e.classification),
        e2: eqs.get(1).map(|e| e.classification),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trends() {
        assert_eq!(trend(&[1.0, 2.0, 3.0]), Trend::Outward);
        assert_eq!(trend(&[3.0, 2.0]), Trend::Inward);
        assert_eq!(trend(&[1.0, 2.0, 1.5]), Trend::Mixed);
        assert_eq!(trend(&[1.0]), Trend::TooFew);
    }
}
