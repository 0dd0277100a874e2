//! Parameters, vector fields and Jacobians.
//!
//! The rational system in scaled variables reads
//!
//! ```text
//! x' = σx(1 − x/κ) − (1+αy)x²y / (1 + h(1+αy)x²)
//! y' = (1+αy)x²y / (1 + h(1+αy)x²) − y
//! ```
//!
//! Multiplying both components by κ(1 + h(1+αy)x²), which is positive on the
//! closed first quadrant, gives the quartic polynomial field
//!
//! ```text
//! x' = x{σ(κ − x)(1 + h(1+αy)x²) − κ(1+αy)xy}
//! y' = κy{(1 − h)(1+αy)x² − 1}
//! ```
//!
//! with the same phase curves. The predation term carries κ; this follows
//! from the multiplication above.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Mat2 = [[f64; 2]; 2];

pub fn det2(m: &Mat2) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn trace2(m: &Mat2) -> f64 {
    m[0][0] + m[1][1]
}

/// Parameters of the original (dimensional) model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionalParams {
    /// Per-capita growth rate of the prey.
    pub r: f64,
    /// Carrying capacity.
    pub k: f64,
    /// Conversion rate.
    pub c: f64,
    /// Predator mortality.
    pub d: f64,
    /// Encounter rate.
    pub e: f64,
    /// Cooperation intensity.
    pub a: f64,
    /// Handling time.
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamSet {
    pub alpha: f64,
    pub kappa: f64,
    pub sigma: f64,
    pub h: f64,
}

impl ParamSet {
    pub fn new(alpha: f64, kappa: f64, sigma: f64, h: f64) -> Result<Self> {
        let p = ParamSet {
            alpha,
            kappa,
            sigma,
            h,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.alpha.is_finite()
            && self.alpha >= 0.0
            && self.kappa.is_finite()
            && self.kappa > 0.0
            && self.sigma.is_finite()
            && self.sigma > 0.0
            && self.h.is_finite()
            && self.h > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "need alpha >= 0 and kappa, sigma, h > 0, got {self:?}"
            )))
        }
    }

    /// κ₁ = 1/√(1−h), the carrying capacity at which E_κ changes type. `None` when h ≥ 1.
    pub fn kappa1(&self) -> Option<f64> {
        (self.h < 1.0).then(|| 1.0 / (1.0 - self.h).sqrt())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub x: f64,
    pub y: f64,
}

impl State {
    pub const fn new(x: f64, y: f64) -> Self {
        State { x, y }
    }
}

pub fn nondimensionalize(p: &DimensionalParams) -> Result<ParamSet> {
    let all = [p.r, p.k, p.c, p.d, p.e, p.a, p.h];
    // a = 0 is the no-cooperation baseline and maps to alpha = 0.
    let positive = all.iter().all(|v| v.is_finite())
        && [p.r, p.k, p.c, p.d, p.e, p.h].iter().all(|&v| v > 0.0)
        && p.a >= 0.0;
    if !positive {
        return Err(Error::Domain(format!(
            "dimensional parameters must be positive: {p:?}"
        )));
    }
    let alpha = (p.a / p.e) * (p.d * p.c / p.e).sqrt();
    let sigma = p.r / p.d;
    let kappa = (p.c * p.e / p.d).sqrt() * p.k;
    let h = p.h * p.d / p.c;
    ParamSet::new(alpha, kappa, sigma, h)
}

/// Quartic polynomial field.
pub fn field3(p: &ParamSet, s: State) -> (f64, f64) {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let (x, y) = (s.x, s.y);
    let g = 1.0 + alpha * y;
    let dx = x * (sigma * (kappa - x) * (1.0 + h * g * x * x) - kappa * g * x * y);
    let dy = kappa * y * ((1.0 - h) * g * x * x - 1.0);
    (dx, dy)
}

/// Rational field before the time rescaling.
pub fn field2(p: &ParamSet, s: State) -> (f64, f64) {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let (x, y) = (s.x, s.y);
    let g = 1.0 + alpha * y;
    let resp = g * x * x * y / (1.0 + h * g * x * x);
    (sigma * x * (1.0 - x / kappa) - resp, resp - y)
}

/// Positive factor relating the two fields: field3 = factor · field2.
pub fn rescaling_factor(p: &ParamSet, s: State) -> f64 {
    p.kappa * (1.0 + p.h * (1.0 + p.alpha * s.y) * s.x * s.x)
}

pub fn jacobian3(p: &ParamSet, s: State) -> Mat2 {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let (x, y) = (s.x, s.y);
    let g = 1.0 + alpha * y;
    let j11 = sigma * (kappa - 2.0 * x) * (1.0 + h * g * x * x)
        + 2.0 * sigma * h * g * x * x * (kappa - x)
        - 2.0 * kappa * g * x * y;
    let j12 = sigma * h * alpha * x * x * x * (kappa - x) - kappa * x * x * (1.0 + 2.0 * alpha * y);
    let j21 = 2.0 * kappa * (1.0 - h) * g * x * y;
    let j22 = kappa * ((1.0 - h) * g * x * x - 1.0) + kappa * (1.0 - h) * alpha * x * x * y;
    [[j11, j12], [j21, j22]]
}

/// J₁₁ in the form printed for equilibria; only valid where both components of field3 vanish.
pub fn j11_at_equilibrium(p: &ParamSet, s: State) -> f64 {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let (x, y) = (s.x, s.y);
    sigma * (1.0 + h * (alpha * y + 1.0) * x * x) * (kappa - 2.0 * x)
        + 2.0 * x * (h * kappa * sigma * x - h * sigma * x * x - kappa * y) * (alpha * y + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_examples() {
        let d = 1.0f64;
        let (c, e) = (2.0f64, 3.0f64);
        let p = DimensionalParams {
            r: d,
            k: (d / (c * e)).sqrt(),
            c,
            d,
            e,
            a: 0.0,
            h: c / d,
        };
        let q = nondimensionalize(&p).unwrap();
        assert!((q.alpha).abs() < 1e-15);
        assert!((q.sigma - 1.0).abs() < 1e-15);
        assert!((q.kappa - 1.0).abs() < 1e-15);
        assert!((q.h - 1.0).abs() < 1e-15);

        let p = DimensionalParams {
            r: 2.0,
            k: 1.0,
            c: 1.0,
            d: 1.0,
            e: 1.0,
            a: 1.0,
            h: 0.5,
        };
        let q = nondimensionalize(&p).unwrap();
        assert_eq!((q.alpha, q.sigma, q.kappa, q.h), (1.0, 2.0, 1.0, 0.5));

        let bad = DimensionalParams { r: -1.0, ..p };
        assert!(nondimensionalize(&bad).is_err());
    }

    #[test]
    fn fold_point_is_equilibrium() {
        let p = ParamSet::new(6.0, 1.2, 1.0, 0.5).unwrap();
        let s = State::new(1.0, 1.0 / 6.0);
        let (a, b) = field3(&p, s);
        assert!(a.abs() < 1e-14 && b.abs() < 1e-14);
        let (a, b) = field2(&p, s);
        assert!(a.abs() < 1e-14 && b.abs() < 1e-14);
        assert_eq!(field3(&p, State::new(0.0, 0.0)), (0.0, 0.0));
        assert_eq!(field3(&p, State::new(1.2, 0.0)).1, 0.0);
    }

    #[test]
    fn boundary_determinants() {
        let p = ParamSet::new(3.7, 1.2, 0.3, 0.5).unwrap();
        let j = jacobian3(&p, State::new(0.0, 0.0));
        assert!((det2(&j) + 0.3 * 1.44).abs() < 1e-14);
        let j = jacobian3(&p, State::new(1.2, 0.0));
        let want = 0.3 * 1.44 * 1.72 * 0.28;
        assert!((det2(&j) - want).abs() < 1e-12, "{} vs {}", det2(&j), want);
    }

    #[test]
    fn printed_j11_matches_at_equilibrium() {
        let p = ParamSet::new(6.0, 1.2, 1.0, 0.5).unwrap();
        let s = State::new(1.0, 1.0 / 6.0);
        assert!((jacobian3(&p, s)[0][0] - j11_at_equilibrium(&p, s)).abs() < 1e-12);
    }
}
