//! Limit cycles around a focus from sign changes of the return-map displacement.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::poincare::{return_map, ReturnOptions, Section, Termination};
use crate::equilibria::{positive_equilibria, Equilibrium};
use crate::error::{Error, Result};
use crate::model::{ParamSet, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stability {
    Stable,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cycle {
    /// Crossing of the section.
    pub point: State,
    /// Ray parameter of the crossing.
    pub radius: f64,
    pub period: f64,
    pub stability: Stability,
    /// Slope of the return map at the fixed point.
    pub multiplier: f64,
}

/// Two starts whose displacements have opposite signs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub inner: f64,
    pub outer: f64,
    pub d_inner: f64,
    pub d_outer: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FanPoint {
    pub r: f64,
    /// First-return displacement; `None` when the orbit does not come back.
    pub displacement: Option<f64>,
    pub period: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleReport {
    pub section: Section,
    /// Ordered from the focus outward.
    pub cycles: Vec<Cycle>,
    pub annuli: Vec<Annulus>,
    pub fan: Vec<FanPoint>,
    /// Starts whose displacement is within the noise band.
    pub ambiguous: usize,
    pub evaluations: usize,
    /// The evaluation budget ran out; cycles and annuli are partial.
    pub exhausted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CycleOptions {
    pub starts_per_decade: usize,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    /// Section direction; defaults to pointing away from the other positive equilibrium.
    pub direction: Option<(f64, f64)>,
    pub returns: ReturnOptions,
    pub max_evals: usize,
    pub zoom_levels: usize,
    /// Displacements below noise·(|anchor| + r) are sign-ambiguous.
    pub noise: f64,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions {
            starts_per_decade: 16,
            r_min: None,
            r_max: None,
            direction: None,
            returns: ReturnOptions::default(),
            max_evals: 2000,
            zoom_levels: 2,
            noise: 1e-9,
        }
    }
}

struct Ctx<'a> {
    p: &'a ParamSet,
    section: Section,
    opts: &'a CycleOptions,
    scale: f64,
}

impl Ctx<'_> {
    fn eval(&self, r: f64) -> Result<FanPoint> {
        let rm = return_map(self.p, &self.section, self.section.point(r), 1, &self.opts.returns)?;
        Ok(match (rm.termination, rm.crossings.first()) {
            (Termination::Completed, Some(c)) => FanPoint { r, displacement: Some(c.s - r), period: Some(c.t) },
            _ => FanPoint { r, displacement: None, period: None },
        })
    }

    fn eval_many(&self, rs: &[f64]) -> Result<Vec<FanPoint>> {
        rs.par_iter().map(|&r| self.eval(r)).collect()
    }

    fn ambiguous(&self, f: &FanPoint) -> bool {
        f.displacement.is_some_and(|d| d.abs() <= self.opts.noise * (self.scale + f.r))
    }
}

fn default_direction(p: &ParamSet, focus: State) -> Result<(f64, f64)> {
    let others: Vec<State> = positive_equilibria(p)?
        .into_iter()
        .map(|e| e.point)
        .filter(|s| (s.x - focus.x).hypot(s.y - focus.y) > 1e-9)
        .collect();
    Ok(match others.first() {
        Some(o) => (focus.x - o.x, focus.y - o.y),
        None => (0.0, -1.0),
    })
}

/// Largest ray parameter keeping the section inside the open orthant.
fn orthant_limit(section: &Section) -> f64 {
    let mut lim = f64::INFINITY;
    for (c, d) in [(section.anchor.x, section.dir.0), (section.anchor.y, section.dir.1)] {
        if d < 0.0 {
            lim = lim.min(c / -d);
        }
    }
    if lim.is_finite() {
        0.98 * lim
    } else {
        10.0 * (1.0 + section.anchor.x.hypot(section.anchor.y))
    }
}

pub fn detect_cycles(p: &ParamSet, around: &Equilibrium, opts: &CycleOptions) -> Result<CycleReport> {
    if !around.classification.is_focus() {
        return Err(Error::Precondition(format!("{:?} is not a focus", around.classification)));
    }
    let focus = around.point;
    let dir = match opts.direction {
        Some(d) => d,
        None => default_direction(p, focus)?,
    };
    let section = Section::around_focus(p, focus, dir)?;
    let r_max = opts.r_max.unwrap_or_else(|| orthant_limit(&section));
    let r_min = opts.r_min.unwrap_or(1e-4 * r_max);
    if !(r_min > 0.0 && r_max > r_min) {
        return Err(Error::Precondition(format!("bad radial range [{r_min}, {r_max}]")));
    }
    let ctx = Ctx { p, section, opts, scale: focus.x.hypot(focus.y) };

    let decades = (r_max / r_min).log10();
    let n = ((decades * opts.starts_per_decade as f64).ceil() as usize).max(2);
    let rs: Vec<f64> = (0..=n).map(|i| r_min * (r_max / r_min).powf(i as f64 / n as f64)).collect();
    let mut fan = ctx.eval_many(&rs)?;
    let mut evaluations = fan.len();

    for _ in 0..opts.zoom_levels {
        let mut extra = Vec::new();
        let k = opts.starts_per_decade;
        let mut between = |lo: f64, hi: f64| extra.extend((1..k).map(|j| lo * (hi / lo).powf(j as f64 / k as f64)));
        for i in 0..fan.len() {
            if ctx.ambiguous(&fan[i]) {
                let lo = if i > 0 { fan[i - 1].r } else { fan[i].r };
                let hi = if i + 1 < fan.len() { fan[i + 1].r } else { fan[i].r };
                between(lo, hi);
            }
            // Edge of the set of returning starts: a cycle may hide just inside it.
            if i + 1 < fan.len() && fan[i].displacement.is_some() != fan[i + 1].displacement.is_some() {
                between(fan[i].r, fan[i + 1].r);
            }
        }
        extra.retain(|r| !fan.iter().any(|f| f.r == *r));
        if extra.is_empty() || evaluations + extra.len() > opts.max_evals {
            break;
        }
        evaluations += extra.len();
        fan.extend(ctx.eval_many(&extra)?);
        fan.sort_by(|a, b| a.r.total_cmp(&b.r));
        fan.dedup_by(|a, b| a.r == b.r);
    }

    let signed: Vec<(f64, f64)> = fan
        .iter()
        .filter(|f| !ctx.ambiguous(f))
        .filter_map(|f| f.displacement.map(|d| (f.r, d)))
        .collect();
    let mut annuli = Vec::new();
    for w in signed.windows(2) {
        let ((a, da), (b, db)) = (w[0], w[1]);
        // Only consecutive fan entries: an undefined start between them breaks the bracket.
        let contiguous = fan.iter().filter(|f| f.r > a && f.r < b).all(|f| f.displacement.is_some());
        if contiguous && da.signum() != db.signum() {
            annuli.push(Annulus { inner: a, outer: b, d_inner: da, d_outer: db });
        }
    }

    let mut cycles = Vec::new();
    let mut exhausted = false;
    for an in &annuli {
        if evaluations >= opts.max_evals {
            exhausted = true;
            break;
        }
        let (cycle, used) = refine(&ctx, an, opts.max_evals - evaluations)?;
        evaluations += used;
        match cycle {
            Some(c) => cycles.push(c),
            None => exhausted = true,
        }
    }
    let ambiguous = fan.iter().filter(|f| ctx.ambiguous(f)).count();
    Ok(CycleReport { section, cycles, annuli, fan, ambiguous, evaluations, exhausted })
}

/// Illinois false position on the displacement, then a central-difference multiplier.
fn refine(ctx: &Ctx, an: &Annulus, budget: usize) -> Result<(Option<Cycle>, usize)> {
    let (mut a, mut b, mut fa, mut fb) = (an.inner, an.outer, an.d_inner, an.d_outer);
    let mut used = 0;
    let mut side = 0;
    let mut best = (a, fa);
    while (b - a) > 1e-10 * b && used + 3 < budget {
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c > a && c < b { c } else { 0.5 * (a + b) };
        let fp = ctx.eval(c)?;
        used += 1;
        let Some(fc) = fp.displacement else { return Ok((None, used)) };
        if fc.abs() < best.1.abs() {
            best = (c, fc);
        }
        if fc == 0.0 {
            a = c;
            b = c;
            break;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if fc.abs() <= 1e-3 * ctx.opts.noise * (ctx.scale + c) {
            break;
        }
    }
    if used + 3 >= budget {
        return Ok((None, used));
    }
    let r = if a == b { a } else { best.0 };
    let delta = (1e-4 * r).min(0.25 * (an.outer - an.inner));
    let lo = ctx.eval(r - delta)?;
    let hi = ctx.eval(r + delta)?;
    let mid = ctx.eval(r)?;
    used += 3;
    let (Some(dl), Some(dh), Some(period)) = (lo.displacement, hi.displacement, mid.period) else {
        return Ok((None, used));
    };
    let multiplier = 1.0 + (dh - dl) / (2.0 * delta);
    let stability = if multiplier.abs() < 1.0 { Stability::Stable } else { Stability::Unstable };
    Ok((Some(Cycle { point: ctx.section.point(r), radius: r, period, stability, multiplier }), used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibria::positive_equilibria;

    #[test]
    fn stable_cycle_in_region_three() {
        let p = ParamSet::new(18.0, 1.2, 0.35, 0.5).unwrap();
        let e1 = positive_equilibria(&p).unwrap()[0].clone();
        let rep = detect_cycles(&p, &e1, &CycleOptions::default()).unwrap();
        assert_eq!(rep.cycles.len(), 1, "{:?}", rep.annuli);
        assert_eq!(rep.cycles[0].stability, Stability::Stable);
    }

    #[test]
    fn no_cycle_in_region_two() {
        let p = ParamSet::new(17.5, 1.2, 0.35, 0.5).unwrap();
        let e1 = positive_equilibria(&p).unwrap()[0].clone();
        let rep = detect_cycles(&p, &e1, &CycleOptions::default()).unwrap();
        assert!(rep.cycles.is_empty(), "{:?}", rep.cycles);
    }

    #[test]
    fn small_cycle_after_supercritical_hopf() {
        let p = ParamSet::new(54.902, 0.8, 0.68, 0.5).unwrap();
        let e1 = positive_equilibria(&p).unwrap()[0].clone();
        let rep = detect_cycles(&p, &e1, &CycleOptions::default()).unwrap();
        assert_eq!(rep.cycles.len(), 1);
        assert_eq!(rep.cycles[0].stability, Stability::Stable);
    }
}
