//! Section crossings and the first-return map.

use serde::{Deserialize, Serialize};

use super::{IntegratorOptions, Segment, Stats, Stepper};
use crate::error::{Error, Result};
use crate::model::{field3, jacobian3, ParamSet, State};

/// Minimum |f·n|/|f| accepted at a crossing.
pub const TRANSVERSALITY_TOL: f64 = 1e-6;

/// A ray anchor + s·dir, s > 0, crossed in the direction of rotation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub anchor: State,
    pub dir: (f64, f64),
    /// +1 for counter-clockwise rotation about the anchor, −1 for clockwise.
    pub orientation: f64,
}

impl Section {
    pub fn new(anchor: State, dir: (f64, f64), orientation: f64) -> Result<Self> {
        let n = dir.0.hypot(dir.1);
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::Precondition("section direction must be nonzero".into()));
        }
        Ok(Section { anchor, dir: (dir.0 / n, dir.1 / n), orientation: orientation.signum() })
    }

    /// Ray from a focus with the orientation of the linearized rotation.
    pub fn around_focus(p: &ParamSet, focus: State, dir: (f64, f64)) -> Result<Self> {
        let j = jacobian3(p, focus);
        let jd = (j[0][0] * dir.0 + j[0][1] * dir.1, j[1][0] * dir.0 + j[1][1] * dir.1);
        let c = dir.0 * jd.1 - dir.1 * jd.0;
        if c == 0.0 {
            return Err(Error::NonTransverse(0.0));
        }
        Section::new(focus, dir, c)
    }

    pub fn point(&self, s: f64) -> State {
        State::new(self.anchor.x + s * self.dir.0, self.anchor.y + s * self.dir.1)
    }

    /// Signed distance from the line, positive on the side the flow enters.
    pub fn g(&self, y: State) -> f64 {
        self.orientation * (self.dir.0 * (y.y - self.anchor.y) - self.dir.1 * (y.x - self.anchor.x))
    }

    pub fn s_of(&self, y: State) -> f64 {
        self.dir.0 * (y.x - self.anchor.x) + self.dir.1 * (y.y - self.anchor.y)
    }

    fn normal(&self) -> (f64, f64) {
        (-self.orientation * self.dir.1, self.orientation * self.dir.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub t: f64,
    pub point: State,
    /// Ray parameter of the crossing.
    pub s: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Termination {
    Completed,
    /// Predator density fell below the floor or the state left the bounding box.
    Escaped,
    /// Settled on an equilibrium.
    Converged,
    TimeLimit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReturnMap {
    pub crossings: Vec<Crossing>,
    pub termination: Termination,
    pub stats: Stats,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReturnOptions {
    pub integrator: IntegratorOptions,
    /// Integration time budget.
    pub t_max: f64,
    /// Predator density treated as extinction.
    pub y_floor: f64,
    /// Coordinates beyond this are treated as escape.
    pub bound: f64,
    /// Field norm treated as rest.
    pub rest_tol: f64,
}

impl Default for ReturnOptions {
    fn default() -> Self {
        ReturnOptions {
            integrator: IntegratorOptions { rtol: 1e-10, atol: 1e-13, max_steps: 5_000_000 },
            t_max: 1e4,
            y_floor: 1e-8,
            bound: 1e6,
            rest_tol: 1e-13,
        }
    }
}

/// Time and state where the linear function n·(y − a) vanishes inside a segment:
/// bisection on the Hermite interpolant to 1e-12 in t, then Newton on exact steps.
pub(crate) fn locate<F: Fn(State) -> (f64, f64)>(
    st: &Stepper<F>,
    seg: &Segment,
    n: (f64, f64),
    a: State,
) -> (f64, State) {
    let g = |y: State| n.0 * (y.x - a.x) + n.1 * (y.y - a.y);
    let (mut lo, mut hi) = (seg.t0, seg.t1);
    let glo = g(seg.start());
    while hi - lo > 1e-12 * (1.0 + seg.t1.abs()) {
        let m = 0.5 * (lo + hi);
        let gm = g(seg.eval(m));
        if gm == 0.0 {
            lo = m;
            hi = m;
            break;
        }
        if (gm > 0.0) == (glo > 0.0) {
            lo = m;
        } else {
            hi = m;
        }
    }
    let mut tau = 0.5 * (lo + hi) - seg.t0;
    let mut y = st.polish(seg, tau);
    for _ in 0..4 {
        let (fx, fy) = (st.field())(y);
        let rate = n.0 * fx + n.1 * fy;
        if rate == 0.0 {
            break;
        }
        let step = g(y) / rate;
        let next = (tau - step).clamp(0.0, seg.t1 - seg.t0);
        if (next - tau).abs() <= 1e-15 * (1.0 + seg.t1) {
            break;
        }
        tau = next;
        y = st.polish(seg, tau);
    }
    (seg.t0 + tau, y)
}

pub(crate) fn escaped(y: State, opts: &ReturnOptions) -> bool {
    y.y < opts.y_floor || y.x > opts.bound || y.y > opts.bound || !(y.x.is_finite() && y.y.is_finite())
}

/// Up to `n` successive crossings of the section ray from `s0`.
pub fn return_map(p: &ParamSet, section: &Section, s0: State, n: usize, opts: &ReturnOptions) -> Result<ReturnMap> {
    p.validate()?;
    let f = |s: State| field3(p, s);
    let (fx, fy) = f(s0);
    if fx.hypot(fy) < opts.rest_tol {
        return Ok(ReturnMap { crossings: Vec::new(), termination: Termination::Converged, stats: Stats::default() });
    }
    let mut st = Stepper::new(&f, s0, opts.t_max, opts.integrator);
    let nrm = section.normal();
    let mut crossings = Vec::new();
    let mut prev = section.g(s0);
    // A start on the section counts as already crossed.
    if prev.abs() <= 1e-9 * (1.0 + s0.x.hypot(s0.y)) {
        prev = 0.0;
    }
    while crossings.len() < n {
        let Some(seg) = st.step()? else {
            return Ok(ReturnMap { crossings, termination: Termination::TimeLimit, stats: st.stats });
        };
        let y1 = seg.end();
        let cur = section.g(y1);
        if prev < 0.0 && cur >= 0.0 {
            let (t, y) = locate(&st, &seg, nrm, section.anchor);
            let s = section.s_of(y);
            if s > 0.0 {
                let (fx, fy) = f(y);
                let norm = fx.hypot(fy);
                let tr = (nrm.0 * fx + nrm.1 * fy) / norm;
                if tr.abs() < TRANSVERSALITY_TOL {
                    return Err(Error::NonTransverse(tr));
                }
                crossings.push(Crossing { t, point: y, s });
            }
        }
        prev = cur;
        if escaped(y1, opts) {
            return Ok(ReturnMap { crossings, termination: Termination::Escaped, stats: st.stats });
        }
        let d = st.derivative();
        if d[0].hypot(d[1]) < opts.rest_tol {
            return Ok(ReturnMap { crossings, termination: Termination::Converged, stats: st.stats });
        }
    }
    Ok(ReturnMap { crossings, termination: Termination::Completed, stats: st.stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibria::positive_equilibria;

    #[test]
    fn equilibrium_start_has_no_crossings() {
        let p = ParamSet::new(18.0, 1.2, 0.35, 0.5).unwrap();
        let e1 = positive_equilibria(&p).unwrap()[0].point;
        let sec = Section::around_focus(&p, e1, (-1.0, 0.0)).unwrap();
        let r = return_map(&p, &sec, e1, 3, &ReturnOptions::default()).unwrap();
        assert!(r.crossings.is_empty());
        assert_eq!(r.termination, Termination::Converged);
    }

    #[test]
    fn unstable_focus_spirals_out() {
        let p = ParamSet::new(18.0, 1.2, 0.35, 0.5).unwrap();
        let e1 = positive_equilibria(&p).unwrap()[0].point;
        let sec = Section::around_focus(&p, e1, (-1.0, 0.0)).unwrap();
        let r = return_map(&p, &sec, sec.point(1e-3), 3, &ReturnOptions::default()).unwrap();
        assert_eq!(r.crossings.len(), 3);
        assert!(r.crossings.windows(2).all(|w| w[1].s > w[0].s));
        assert!(r.crossings[0].s > 1e-3);
    }
}
