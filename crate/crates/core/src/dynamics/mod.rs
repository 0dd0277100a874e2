//! Trajectories of the quartic field: an adaptive Dormand–Prince 5(4)
//! integrator with cubic Hermite dense output, Poincaré return maps, limit
//! cycle detection and homoclinic bracketing.

pub mod cycles;
pub mod homoclinic;
pub mod poincare;
pub mod table1;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{field3, ParamSet, State};

pub use cycles::{detect_cycles, Cycle, CycleOptions, CycleReport, Stability};
pub use homoclinic::{homoclinic_bracket, unstable_manifold_fate, HomoclinicBracket, ManifoldFate};
pub use poincare::{return_map, Crossing, ReturnMap, ReturnOptions, Section, Termination};
pub use table1::{reproduce_table1, Row, RowVerdict};

/// Negative overshoot below which a coordinate is clamped to the axis rather than rejected.
pub const CLAMP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegratorOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        IntegratorOptions { rtol: 1e-9, atol: 1e-12, max_steps: 5_000_000 }
    }
}

impl IntegratorOptions {
    pub fn with_tol(tol: f64) -> Self {
        IntegratorOptions { rtol: tol, atol: tol * 1e-3, ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub steps: usize,
    pub rejected: usize,
    /// Largest accepted scaled error estimate.
    pub max_error: f64,
    pub clamp_events: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub params: ParamSet,
    pub stats: Stats,
}

impl Trajectory {
    pub fn last(&self) -> State {
        let s = self.samples.last().expect("nonempty");
        State::new(s.x, s.y)
    }
}

type V2 = [f64; 2];

fn call<F: Fn(State) -> (f64, f64)>(f: &F, y: V2) -> V2 {
    let (a, b) = f(State::new(y[0], y[1]));
    [a, b]
}

/// One accepted step, with endpoint derivatives for Hermite interpolation.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub t0: f64,
    pub y0: V2,
    pub f0: V2,
    pub t1: f64,
    pub y1: V2,
    pub f1: V2,
}

impl Segment {
    pub fn eval(&self, t: f64) -> State {
        let h = self.t1 - self.t0;
        let s = (t - self.t0) / h;
        let (s2, s3) = (s * s, s * s * s);
        let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        let h10 = s3 - 2.0 * s2 + s;
        let h01 = -2.0 * s3 + 3.0 * s2;
        let h11 = s3 - s2;
        let c = |i: usize| h00 * self.y0[i] + h10 * h * self.f0[i] + h01 * self.y1[i] + h11 * h * self.f1[i];
        State::new(c(0), c(1))
    }

    pub fn start(&self) -> State {
        State::new(self.y0[0], self.y0[1])
    }

    pub fn end(&self) -> State {
        State::new(self.y1[0], self.y1[1])
    }
}

/// A single Dormand–Prince step; returns the fifth-order solution and the error vector.
pub fn dopri_step<F: Fn(State) -> (f64, f64)>(f: &F, y: V2, fy: V2, h: f64) -> (V2, V2) {
    let add = |a: &[(f64, &V2)]| -> V2 {
        let mut out = y;
        for (c, k) in a {
            out[0] += h * c * k[0];
            out[1] += h * c * k[1];
        }
        out
    };
    let k1 = fy;
    let k2 = call(f, add(&[(1.0 / 5.0, &k1)]));
    let k3 = call(f, add(&[(3.0 / 40.0, &k1), (9.0 / 40.0, &k2)]));
    let k4 = call(f, add(&[(44.0 / 45.0, &k1), (-56.0 / 15.0, &k2), (32.0 / 9.0, &k3)]));
    let k5 = call(
        f,
        add(&[(19372.0 / 6561.0, &k1), (-25360.0 / 2187.0, &k2), (64448.0 / 6561.0, &k3), (-212.0 / 729.0, &k4)]),
    );
    let k6 = call(
        f,
        add(&[
            (9017.0 / 3168.0, &k1),
            (-355.0 / 33.0, &k2),
            (46732.0 / 5247.0, &k3),
            (49.0 / 176.0, &k4),
            (-5103.0 / 18656.0, &k5),
        ]),
    );
    let y5 = add(&[
        (35.0 / 384.0, &k1),
        (500.0 / 1113.0, &k3),
        (125.0 / 192.0, &k4),
        (-2187.0 / 6784.0, &k5),
        (11.0 / 84.0, &k6),
    ]);
    let k7 = call(f, y5);
    let e = [71.0 / 57600.0, -71.0 / 16695.0, 71.0 / 1920.0, -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0];
    let ks = [&k1, &k3, &k4, &k5, &k6, &k7];
    let mut err = [0.0; 2];
    for (c, k) in e.iter().zip(ks) {
        err[0] += h * c * k[0];
        err[1] += h * c * k[1];
    }
    (y5, err)
}

/// Adaptive stepper over an arbitrary planar field.
pub struct Stepper<'a, F> {
    f: &'a F,
    pub t: f64,
    pub y: V2,
    fy: V2,
    h: f64,
    t_end: f64,
    opts: IntegratorOptions,
    pub stats: Stats,
    last_rejected: bool,
}

impl<'a, F: Fn(State) -> (f64, f64)> Stepper<'a, F> {
    pub fn new(f: &'a F, s0: State, t_end: f64, opts: IntegratorOptions) -> Self {
        let y = [s0.x, s0.y];
        let fy = call(f, y);
        let ny = (y[0].abs() + y[1].abs()).max(1e-5);
        let nf = fy[0].abs() + fy[1].abs();
        let h = if nf > 1e-12 { (1e-3 * ny / nf).min(t_end) } else { 1e-3 * t_end.min(1.0) };
        Stepper { f, t: 0.0, y, fy, h, t_end, opts, stats: Stats::default(), last_rejected: false }
    }

    pub fn state(&self) -> State {
        State::new(self.y[0], self.y[1])
    }

    pub fn derivative(&self) -> V2 {
        self.fy
    }

    /// Advances by one accepted step; `None` once t_end is reached.
    pub fn step(&mut self) -> Result<Option<Segment>> {
        if self.t >= self.t_end {
            return Ok(None);
        }
        let floor = 1e-14 * self.t_end.abs().max(1.0);
        loop {
            if self.stats.steps + self.stats.rejected >= self.opts.max_steps {
                return Err(Error::BudgetExhausted(format!("{} steps at t = {}", self.opts.max_steps, self.t)));
            }
            let mut h = self.h.min(self.t_end - self.t);
            if h < floor && self.t + h < self.t_end {
                return Err(Error::Stalled { t: self.t, h });
            }
            if self.t_end - self.t - h < floor {
                h = self.t_end - self.t;
            }
            let (mut yn, e) = dopri_step(self.f, self.y, self.fy, h);
            let mut err = 0.0;
            for i in 0..2 {
                let sc = self.opts.atol + self.opts.rtol * self.y[i].abs().max(yn[i].abs());
                err += (e[i] / sc).powi(2);
            }
            err = (err / 2.0).sqrt();
            let mut clamps = 0;
            let mut overshoot = !err.is_finite();
            for v in yn.iter_mut() {
                if *v < 0.0 {
                    if *v >= -CLAMP_TOL {
                        *v = 0.0;
                        clamps += 1;
                    } else {
                        overshoot = true;
                    }
                }
            }
            if overshoot {
                self.stats.rejected += 1;
                self.h = h * 0.25;
                self.last_rejected = true;
                continue;
            }
            let mut fac = if err == 0.0 { 10.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 10.0) };
            if err <= 1.0 {
                if self.last_rejected {
                    fac = fac.min(1.0);
                }
                let fn_ = call(self.f, yn);
                let seg = Segment { t0: self.t, y0: self.y, f0: self.fy, t1: self.t + h, y1: yn, f1: fn_ };
                self.t += h;
                self.y = yn;
                self.fy = fn_;
                self.h = h * fac;
                self.stats.steps += 1;
                self.stats.clamp_events += clamps;
                self.stats.max_error = self.stats.max_error.max(err);
                self.last_rejected = false;
                return Ok(Some(seg));
            }
            self.stats.rejected += 1;
            self.h = h * fac.min(1.0);
            self.last_rejected = true;
        }
    }

    /// State at t₀ + τ inside a segment, recomputed with one Dormand–Prince step.
    pub fn polish(&self, seg: &Segment, tau: f64) -> State {
        if tau <= 0.0 {
            return seg.start();
        }
        let (y, _) = dopri_step(self.f, seg.y0, seg.f0, tau);
        State::new(y[0], y[1])
    }

    pub fn field(&self) -> &F {
        self.f
    }
}

/// Integrates an arbitrary planar field, recording every accepted step.
pub fn integrate_field<F: Fn(State) -> (f64, f64)>(f: &F, s0: State, t_end: f64, opts: IntegratorOptions) -> Result<(Vec<Sample>, Stats)> {
    if !(t_end > 0.0 && t_end.is_finite()) || !(opts.rtol > 0.0) {
        return Err(Error::Precondition("need t_end > 0 and tol > 0".into()));
    }
    let mut st = Stepper::new(f, s0, t_end, opts);
    let mut samples = vec![Sample { t: 0.0, x: s0.x, y: s0.y }];
    while let Some(seg) = st.step()? {
        samples.push(Sample { t: seg.t1, x: seg.y1[0], y: seg.y1[1] });
    }
    Ok((samples, st.stats))
}

/// Trajectory of the quartic field with per-step relative tolerance `tol`.
pub fn integrate(p: &ParamSet, s0: State, t_end: f64, tol: f64) -> Result<Trajectory> {
    integrate_with(p, s0, t_end, IntegratorOptions::with_tol(tol))
}

pub fn integrate_with(p: &ParamSet, s0: State, t_end: f64, opts: IntegratorOptions) -> Result<Trajectory> {
    p.validate()?;
    if s0.x < 0.0 || s0.y < 0.0 {
        return Err(Error::Domain(format!("initial state {s0:?} outside the nonnegative orthant")));
    }
    let f = |s: State| field3(p, s);
    let (samples, stats) = integrate_field(&f, s0, t_end, opts)?;
    Ok(Trajectory { samples, params: *p, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator_period() {
        let f = |s: State| (-s.y, s.x);
        let opts = IntegratorOptions { rtol: 1e-11, atol: 1e-13, ..Default::default() };
        // Shifted so the orbit stays in the positive quadrant.
        let g = |s: State| f(State::new(s.x - 2.0, s.y - 2.0));
        let (samples, _) = integrate_field(&g, State::new(3.0, 2.0), 2.0 * std::f64::consts::PI, opts).unwrap();
        let last = samples.last().unwrap();
        assert!((last.x - 3.0).abs() < 1e-9 && (last.y - 2.0).abs() < 1e-9, "{last:?}");
    }

    #[test]
    fn hermite_is_exact_for_cubics() {
        let seg = Segment { t0: 0.0, y0: [0.0, 1.0], f0: [0.0, 0.0], t1: 1.0, y1: [1.0, 1.0], f1: [3.0, 0.0] };
        let s = seg.eval(0.5);
        assert!((s.x - 0.125).abs() < 1e-15);
    }

    #[test]
    fn equilibrium_start_stays_put() {
        let p = ParamSet::new(6.0, 1.2, 1.0, 0.5).unwrap();
        let tr = integrate(&p, State::new(1.2, 0.0), 100.0, 1e-9).unwrap();
        let e = tr.last();
        assert!((e.x - 1.2).abs() < 1e-8 && e.y.abs() < 1e-8);
    }
}
