//! Hopf-critical parameterization by (κ, h, x₁), focal values and weak-focus
//! multiplicity.

pub mod lyapunov;
pub mod variety;

use serde::{Deserialize, Serialize};

use crate::coeffs::{self, Expr};
use crate::equilibria::positive_equilibria;
use crate::error::{Error, Result};
use crate::model::{det2, jacobian3, trace2, ParamSet, State};

pub use lyapunov::{
    first_lyapunov_projection, lyapunov_constants, normalize_direct, NormalizedSystem,
};

/// Relative guard for vanishing focal-value factors: |f| < FOCAL_TOL·(1 + |κ|⁵).
pub const FOCAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HopfCritical {
    pub x1: f64,
    pub kappa: f64,
    pub h: f64,
    pub alpha: f64,
    pub sigma: f64,
    pub y1: f64,
    /// Rotation frequency, √det of the quartic field's Jacobian at E₁.
    pub omega: f64,
    pub det: f64,
    pub trace: f64,
    /// The printed determinant factor D at E₁.
    pub d_printed: f64,
    pub in_p: bool,
}

impl HopfCritical {
    pub fn params(&self) -> ParamSet {
        ParamSet {
            alpha: self.alpha,
            kappa: self.kappa,
            sigma: self.sigma,
            h: self.h,
        }
    }

    pub fn e1(&self) -> State {
        State::new(self.x1, self.y1)
    }
}

/// Abscissa of the cusp for given x and h: 2x(m+2)/(m+3), m = (h−1)x².
pub fn kappa2(x1: f64, h: f64) -> f64 {
    let m = (h - 1.0) * x1 * x1;
    2.0 * x1 * (m + 2.0) / (m + 3.0)
}

/// Membership in the admissible set P of Hopf points.
pub fn in_p(kappa: f64, h: f64, x1: f64) -> bool {
    if !(kappa.is_finite() && h.is_finite() && x1.is_finite())
        || kappa <= 0.0
        || x1 <= 0.0
        || h <= 0.0
        || h >= 1.0
    {
        return false;
    }
    if kappa <= kappa2(x1, h) {
        return false;
    }
    let lower = (x1 * x1 - 1.0) / (x1 * x1);
    let sq2 = std::f64::consts::SQRT_2;
    if h <= 0.5 {
        x1 <= 1.0 || (lower < h && x1 < sq2)
    } else {
        let kcap = kappa < 2.0 * h * x1 / (2.0 * h - 1.0);
        kcap && (x1 <= sq2 || lower < h)
    }
}

/// (α, σ) making E₁ = (x₁, ·) a Hopf point, whether or not (κ, h, x₁) ∈ P.
pub fn hopf_parameters(kappa: f64, h: f64, x1: f64) -> (f64, f64) {
    let hm = h - 1.0;
    let num = (2.0 * h - 1.0) * kappa - 2.0 * h * x1;
    let alpha = num / (x1.powi(3) * hm * hm * (x1 - kappa));
    let sigma = kappa * hm * (hm * x1 * x1 + 1.0) / num;
    (alpha, sigma)
}

fn build(kappa: f64, h: f64, x1: f64) -> HopfCritical {
    let (alpha, sigma) = hopf_parameters(kappa, h, x1);
    let y1 = (1.0 / ((1.0 - h) * x1 * x1) - 1.0) / alpha;
    let p = ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    };
    let j = jacobian3(&p, State::new(x1, y1));
    let det = det2(&j);
    let m = (h - 1.0) * x1 * x1;
    let d_printed =
        ((m + 3.0) * kappa - 2.0 * x1 * (m + 2.0)) / ((kappa - x1) * (1.0 - h) * x1 * x1);
    HopfCritical {
        x1,
        kappa,
        h,
        alpha,
        sigma,
        y1,
        omega: det.max(0.0).sqrt(),
        det,
        trace: trace2(&j),
        d_printed,
        in_p: in_p(kappa, h, x1),
    }
}

pub fn hopf_critical(kappa: f64, h: f64, x1: f64) -> Result<HopfCritical> {
    let c = build(kappa, h, x1);
    if !c.in_p {
        return Err(Error::Domain(format!(
            "(kappa, h, x1) = ({kappa}, {h}, {x1}) is outside P"
        )));
    }
    if !(c.det > 0.0 && c.alpha > 0.0 && c.sigma > 0.0) {
        return Err(Error::Degenerate(format!(
            "no focus at x1 = {x1}: det = {}",
            c.det
        )));
    }
    Ok(c)
}

/// Hopf point sharing κ, h and the abscissa of E₁ with an arbitrary parameter set.
pub fn hopf_critical_near(p: &ParamSet) -> Result<HopfCritical> {
    let eqs = positive_equilibria(p)?;
    let e1 = eqs
        .iter()
        .map(|e| e.point)
        .filter(|s| s.x < p.kappa)
        .min_by(|a, b| a.x.total_cmp(&b.x))
        .ok_or_else(|| Error::Precondition("no interior equilibrium E1".into()))?;
    hopf_critical(p.kappa, p.h, e1.x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HopfRegion {
    H1,
    H2,
    H3,
}

impl HopfRegion {
    pub fn multiplicity(self) -> u8 {
        match self {
            HopfRegion::H1 => 1,
            HopfRegion::H2 => 2,
            HopfRegion::H3 => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FocalReport {
    pub f1: f64,
    pub f2: f64,
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    /// L₁, L₂, L₃ of the printed normalized system.
    pub lyap: [f64; 3],
    pub multiplicity: u8,
    pub region: HopfRegion,
    pub method_l3: String,
}

fn brace(kappa: f64, h: f64, x1: f64) -> f64 {
    let m = (h - 1.0) * x1 * x1;
    (m + 3.0) * kappa - 2.0 * x1 * (m + 2.0)
}

/// Denominators of l₁ and l₂ in the printed closed forms.
pub fn prefactor_denominators(c: &HopfCritical) -> (f64, f64) {
    let HopfCritical {
        kappa,
        h,
        x1,
        omega,
        ..
    } = *c;
    let hm = h - 1.0;
    let b = brace(kappa, h, x1);
    let s = 2.0 * h * kappa - 2.0 * h * x1 - kappa;
    let d1 = 16.0 * hm.powi(2) * (kappa - x1).powi(2) * omega.powi(3) * b * x1;
    let d2 = 3072.0 * hm.powi(4) * (kappa - x1).powi(4) * omega.powi(9) * b * s * s * x1.powi(3);
    (d1, d2)
}

fn vars(c: &HopfCritical) -> [f64; 4] {
    [c.x1, c.h, c.kappa, c.omega]
}

pub fn focal_factors(c: &HopfCritical) -> (f64, f64) {
    let v = vars(c);
    (coeffs::F1.eval_f64(&v), coeffs::F2.eval_f64(&v))
}

/// The normalized system with the printed quadratic-through-quintic coefficients.
pub fn normalized_printed(c: &HopfCritical) -> NormalizedSystem {
    let v = vars(c);
    let a: Vec<(usize, usize, f64)> = A_TABLES
        .iter()
        .map(|&(i, j, e)| (i, j, e.eval_f64(&v)))
        .collect();
    let b: Vec<(usize, usize, f64)> = B_TABLES
        .iter()
        .map(|&(i, j, e)| (i, j, e.eval_f64(&v)))
        .collect();
    NormalizedSystem::from_coefficients(&a, &b)
}

pub static A_TABLES: [(usize, usize, &Expr); 17] = [
    (0, 2, &coeffs::A02),
    (0, 3, &coeffs::A03),
    (0, 4, &coeffs::A04),
    (0, 5, &coeffs::A05),
    (1, 1, &coeffs::A11),
    (1, 2, &coeffs::A12),
    (1, 3, &coeffs::A13),
    (1, 4, &coeffs::A14),
    (2, 0, &coeffs::A20),
    (2, 1, &coeffs::A21),
    (2, 2, &coeffs::A22),
    (2, 3, &coeffs::A23),
    (3, 0, &coeffs::A30),
    (3, 1, &coeffs::A31),
    (3, 2, &coeffs::A32),
    (4, 0, &coeffs::A40),
    (4, 1, &coeffs::A41),
];

pub static B_TABLES: [(usize, usize, &Expr); 9] = [
    (0, 2, &coeffs::B02),
    (0, 3, &coeffs::B03),
    (0, 4, &coeffs::B04),
    (1, 1, &coeffs::B11),
    (1, 2, &coeffs::B12),
    (1, 3, &coeffs::B13),
    (2, 0, &coeffs::B20),
    (2, 1, &coeffs::B21),
    (2, 2, &coeffs::B22),
];

fn focal_threshold(kappa: f64) -> f64 {
    FOCAL_TOL * (1.0 + kappa.abs().powi(5))
}

fn region_from(f1: f64, f2: f64, kappa: f64) -> HopfRegion {
    let t = focal_threshold(kappa);
    if f1.abs() >= t {
        HopfRegion::H1
    } else if f2.abs() >= t {
        HopfRegion::H2
    } else {
        HopfRegion::H3
    }
}

pub fn focal_values(c: &HopfCritical) -> Result<FocalReport> {
    if !c.in_p {
        return Err(Error::Precondition(
            "focal values need (kappa, h, x1) in P".into(),
        ));
    }
    let (f1, f2) = focal_factors(c);
    let (d1, d2) = prefactor_denominators(c);
    let k = c.kappa;
    let l1 = k * f1 / d1;
    let l2 = k.powi(5) * f2 / d2;
    let sys = normalized_printed(c);
    let ls = lyapunov_constants(&sys, 3);
    let lyap = [ls[0], ls[1], ls[2]];
    let region = region_from(f1, f2, k);
    if region == HopfRegion::H3 && !(lyap[2].is_finite() && lyap[2] != 0.0) {
        return Err(Error::Inconclusive(format!(
            "f1, f2 and l3 all vanish at {c:?}"
        )));
    }
    Ok(FocalReport {
        f1,
        f2,
        l1,
        l2,
        l3: lyap[2],
        lyap,
        multiplicity: region.multiplicity(),
        region,
        method_l3: "numerical Lyapunov".into(),
    })
}

pub fn multiplicity_region(kappa: f64, h: f64, x1: f64) -> Result<HopfRegion> {
    let c = hopf_critical(kappa, h, x1)?;
    let (f1, f2) = focal_factors(&c);
    Ok(region_from(f1, f2, kappa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::field3;

    #[test]
    fn fig3b_parameters() {
        let c = hopf_critical(133.7629, 0.45, 1.0).unwrap();
        assert!((c.alpha - 0.3555).abs() < 1e-4, "{}", c.alpha);
        assert!((c.sigma - 2.319).abs() < 1e-3, "{}", c.sigma);
        assert!((c.y1 - 2.3016).abs() < 1e-3, "{}", c.y1);
        // y₁ from the prey nullcline.
        assert!((c.y1 - c.sigma * (1.0 - 1.0 / c.kappa)).abs() < 1e-9);
        let (fx, fy) = field3(&c.params(), c.e1());
        assert!(fx.abs() < 1e-9 && fy.abs() < 1e-9);
        assert!(c.trace.abs() < 1e-8 * c.det.sqrt());
        assert_eq!(
            multiplicity_region(133.7629, 0.45, 1.0).unwrap(),
            HopfRegion::H2
        );
        let r = focal_values(&c).unwrap();
        assert!(r.l2 > 0.0);
    }

    #[test]
    fn fig3a_first_focal_value() {
        let p = ParamSet::new(54.902, 0.8, 0.68, 0.5).unwrap();
        let c = hopf_critical_near(&p).unwrap();
        assert!((c.x1 - 0.5).abs() < 1e-5);
        let r = focal_values(&c).unwrap();
        assert!((r.l1 / -21.2827 - 1.0).abs() < 5e-3, "{}", r.l1);
        assert!(
            (r.lyap[0] / r.l1 - 1.0).abs() < 1e-8,
            "{} vs {}",
            r.lyap[0],
            r.l1
        );
        assert_eq!(r.region, HopfRegion::H1);
    }

    #[test]
    fn printed_tables_match_direct_transform() {
        for &(k, h, x1) in &[
            (0.8, 0.5, 0.5),
            (133.7629, 0.45, 1.0),
            (3.0, 0.3, 0.7),
            (2.0, 0.7, 1.2),
        ] {
            let c = hopf_critical(k, h, x1).unwrap();
            let pr = normalized_printed(&c);
            let dr = normalize_direct(&c.params(), c.x1, c.y1, c.omega);
            assert!(dr.linear_defect() < 1e-8 * (1.0 + k), "{:?}", dr.linear);
            for i in 0..=5 {
                for j in 0..=5 - i {
                    if i + j < 2 {
                        continue;
                    }
                    for (a, b) in [
                        (pr.p.get(i, j), dr.p.get(i, j)),
                        (pr.q.get(i, j), dr.q.get(i, j)),
                    ] {
                        assert!(
                            (a - b).abs() <= 1e-8 * (1.0 + b.abs()),
                            "({i},{j}) at {k},{h},{x1}: {a} vs {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn projection_formula_agrees_in_sign() {
        for &(k, h, x1) in &[
            (0.8, 0.5, 0.5),
            (3.0, 0.3, 0.7),
            (2.0, 0.7, 1.2),
            (5.0, 0.2, 0.9),
        ] {
            let c = hopf_critical(k, h, x1).unwrap();
            let r = focal_values(&c).unwrap();
            let proj = first_lyapunov_projection(&c.params(), c.e1());
            assert_eq!(
                proj.signum(),
                r.l1.signum(),
                "{k},{h},{x1}: {proj} vs {}",
                r.l1
            );
        }
    }

    #[test]
    fn outside_p_is_rejected() {
        assert!(matches!(
            hopf_critical(0.5, 0.5, 0.5),
            Err(Error::Domain(_))
        ));
        assert!(!in_p(1.0, 1.2, 0.5));
    }
}
