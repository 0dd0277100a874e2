//! Codimension-one bifurcations at E_κ and E_*, and the Bogdanov–Takens
//! unfolding at the cusp with its local saddle-node, Hopf and homoclinic curves.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};
use serde::{Deserialize, Serialize};

use crate::coeffs::{self, Expr};
use crate::equilibria::{alpha_thresholds, trace_factor};
use crate::error::{Error, Result};
use crate::model::ParamSet;

/// Default trust radius in σ for the quadratic curve expansions.
pub const DEFAULT_TRUST_RADIUS: f64 = 0.1;
/// Tie tolerance when comparing α against a curve.
pub const CURVE_TIE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryKind {
    Transcritical,
    Pitchfork,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryBifurcation {
    pub kind: BoundaryKind,
    pub critical_kappa: f64,
    pub pitchfork_alpha: f64,
    /// Coefficient of u² on the center manifold.
    pub quadratic_coeff: f64,
    /// Coefficient of u³ on the center manifold.
    pub cubic_coeff: f64,
}

/// Center-manifold reduction at E_κ when κ is near κ₁.
pub fn boundary_bifurcation(p: &ParamSet, tol: f64) -> Result<BoundaryBifurcation> {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let k1 = p
        .kappa1()
        .ok_or_else(|| Error::Precondition("boundary bifurcation needs 0 < h < 1".into()))?;
    if (kappa - k1).abs() > tol {
        return Err(Error::Precondition(format!(
            "|kappa - kappa1| = {} exceeds {tol}",
            (kappa - k1).abs()
        )));
    }
    let hm = h - 1.0;
    let pitchfork_alpha = 2.0 / (sigma * k1);
    let quadratic_coeff = -(alpha * k1 * sigma - 2.0) * hm / (sigma * k1);
    let cubic_coeff = hm
        * (hm * (4.0 * h * sigma - 4.0 * h - 3.0 * sigma + 4.0) * k1
            + 2.0 * alpha * sigma * (h * sigma - h - 2.0 * sigma + 1.0))
        / (sigma * sigma * k1);
    let scale = 2.0 / (sigma * k1);
    let kind = if (alpha - pitchfork_alpha).abs() <= 1e-9 * scale.max(1.0) {
        BoundaryKind::Pitchfork
    } else {
        BoundaryKind::Transcritical
    };
    Ok(BoundaryBifurcation {
        kind,
        critical_kappa: k1,
        pitchfork_alpha,
        quadratic_coeff,
        cubic_coeff,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CuspLocus {
    pub x_star: f64,
    pub h: f64,
    /// σ at which α₃ was evaluated (σ₁ when none was given).
    pub sigma: f64,
    pub alpha3: f64,
    pub kappa2: f64,
    pub sigma1: f64,
    pub admissible: bool,
}

/// Window of (x_*, h) in which the fold and cusp analysis applies.
pub fn admissible(x: f64, h: f64) -> bool {
    if !(h > 0.0 && h < 1.0 && x > 0.0) {
        return false;
    }
    x <= 1.0 || (x * x - 1.0) / (x * x) < h
}

/// (α₃(σ), κ₂, σ₁) in any numeric field.
pub fn cusp_formulas<T: Num + Clone + FromPrimitive>(x: &T, h: &T, sigma: Option<&T>) -> (T, T, T) {
    let c = |v: i64| T::from_i64(v).expect("small integer");
    let hm = h.clone() - c(1);
    let x2 = x.clone() * x.clone();
    let m = hm.clone() * x2.clone();
    let kappa2 = c(2) * x.clone() * (m.clone() + c(2)) / (m.clone() + c(3));
    let sigma1 = hm.clone() * (m.clone() + c(2)) * (m.clone() + c(1))
        / (hm.clone() * hm.clone() * x2.clone() + h.clone() - c(2));
    let s = sigma.cloned().unwrap_or_else(|| sigma1.clone());
    let alpha3 = c(2) * (m + c(2)) / ((c(1) - h.clone()) * s * x2 * x.clone());
    (alpha3, kappa2, sigma1)
}

pub fn cusp_locus(x_star: f64, h: f64, sigma: Option<f64>) -> Result<CuspLocus> {
    if !admissible(x_star, h) {
        return Err(Error::Domain(format!(
            "(x*, h) = ({x_star}, {h}) outside the admissible window"
        )));
    }
    let (alpha3, kappa2, sigma1) = cusp_formulas(&x_star, &h, sigma.as_ref());
    Ok(CuspLocus {
        x_star,
        h,
        sigma: sigma.unwrap_or(sigma1),
        alpha3,
        kappa2,
        sigma1,
        admissible: true,
    })
}

/// Exact rational (α₃, κ₂, σ₁).
pub fn cusp_locus_exact(
    x: &BigRational,
    h: &BigRational,
    sigma: Option<&BigRational>,
) -> Result<(BigRational, BigRational, BigRational)> {
    let xf = coeffs_to_f64(x);
    let hf = coeffs_to_f64(h);
    if !admissible(xf, hf) {
        return Err(Error::Domain("outside the admissible window".into()));
    }
    Ok(cusp_formulas(x, h, sigma))
}

fn coeffs_to_f64(q: &BigRational) -> f64 {
    crate::polyalg::rational_to_f64(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaddleNodeNormalForm {
    pub d0_prime: f64,
    pub d1_prime: f64,
    pub d2: f64,
    pub zeta_prime0: f64,
    /// sign(d₂(0)), equal to sign(σ − σ₁).
    pub d2_sign: i8,
}

/// Restricted dynamics du/dt = d₀(ε) + d₁(ε)u + d₂(ε)u² at the fold, ε = α − α₃.
pub fn saddle_node_normal_form(x: f64, h: f64, sigma: f64) -> Result<SaddleNodeNormalForm> {
    let locus = cusp_locus(x, h, Some(sigma))?;
    if (sigma - locus.sigma1).abs() < 1e-8 {
        return Err(Error::Degenerate(format!(
            "sigma = sigma1 = {}: Bogdanov-Takens point",
            locus.sigma1
        )));
    }
    let hm = h - 1.0;
    let m = hm * x * x;
    let q = (-(hm * hm) * x * x - h + 2.0) * sigma + hm * (m + 2.0) * (m + 1.0);
    let d0_prime = (m + 1.0).powi(2) * hm * sigma * sigma * x.powi(5) / (2.0 * q * (m + 3.0));
    let bracket = (-(hm.powi(4)) * x.powi(6)
        - 8.0 * hm.powi(3) * x.powi(4)
        - hm * (11.0 * h - 13.0) * x * x
        - 4.0 * h
        + 2.0)
        * sigma
        + hm * (m + 2.0) * (m + 1.0) * (hm * hm * x.powi(4) + 7.0 * hm * x * x + 4.0);
    let d1_prime = hm * (m + 1.0) * sigma * sigma * x.powi(4) / (2.0 * q * q * (m + 3.0)) * bracket;
    let d2 = (m + 2.0) * (m + 6.0) * (m + 1.0) * sigma / (q * (m + 3.0));
    let zeta_prime0 = d0_prime / d2;
    Ok(SaddleNodeNormalForm {
        d0_prime,
        d1_prime,
        d2,
        zeta_prime0,
        d2_sign: d2.signum() as i8,
    })
}

/// ζ′(0) in the simplified closed form; independent of σ.
pub fn zeta_prime_closed_form(x: f64, h: f64, sigma: f64) -> f64 {
    let m = (h - 1.0) * x * x;
    (h - 1.0) * (m + 1.0) * sigma * x.powi(5) / (2.0 * (m + 6.0) * (m + 2.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalFormBT {
    pub beta1: f64,
    pub beta2: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BTExpansion {
    pub x_star: f64,
    pub h: f64,
    pub kappa2: f64,
    pub alpha_star: f64,
    pub sigma_star: f64,
    pub f11: f64,
    pub f12: f64,
    pub f22: f64,
    pub f32: f64,
    pub g10: f64,
    pub g01: f64,
    pub h10: f64,
    pub h01: f64,
    pub j0: f64,
    /// A(0,0) and B(0,0) in the printed closed forms.
    pub a0: f64,
    pub b0: f64,
}

fn bt_q(x: f64, h: f64) -> f64 {
    h * h * x * x + (-2.0 * x * x + 1.0) * h + x * x - 2.0
}

fn bt_p(x: f64, h: f64) -> f64 {
    3.0 * h.powi(3) * x.powi(4) - 2.0 * x * x * (4.0 * x * x - 3.0) * h * h
        + (x * x - 1.0) * (7.0 * x * x - 3.0) * h
        - 2.0 * x * x * (x * x - 2.0)
}

impl BTExpansion {
    pub fn alpha_sn(&self, sigma: f64) -> f64 {
        let e = sigma - self.sigma_star;
        self.alpha_star + self.f11 * e + self.f12 * e * e
    }

    pub fn alpha_h(&self, sigma: f64) -> f64 {
        let e = sigma - self.sigma_star;
        self.alpha_star + self.f11 * e + self.f22 * e * e
    }

    pub fn alpha_hl(&self, sigma: f64) -> f64 {
        let e = sigma - self.sigma_star;
        self.alpha_star + self.f11 * e + self.f32 * e * e
    }

    pub fn params(&self, alpha: f64, sigma: f64) -> ParamSet {
        ParamSet {
            alpha,
            kappa: self.kappa2,
            sigma,
            h: self.h,
        }
    }

    /// β₁, β₂ and the intermediate normal-form data at (ε₁, ε₂) = (α − α_*, σ − σ_*).
    pub fn normal_form(&self, e1: f64, e2: f64) -> NormalFormBT {
        let v = [self.x_star, self.h, e1, e2];
        let cd: [&Expr; 12] = [
            &coeffs::C00,
            &coeffs::C01,
            &coeffs::C02,
            &coeffs::C10,
            &coeffs::C11,
            &coeffs::C20,
            &coeffs::D00,
            &coeffs::D01,
            &coeffs::D02,
            &coeffs::D10,
            &coeffs::D11,
            &coeffs::D20,
        ];
        let vals: Vec<f64> = cd.iter().map(|c| c.eval_f64(&v)).collect();
        let e00 = coeffs::E00.eval_f64(&vals);
        let e10 = coeffs::E10.eval_f64(&vals);
        let e01 = coeffs::E01.eval_f64(&vals);
        let e20 = coeffs::E20.eval_f64(&vals);
        let e02 = coeffs::E02.eval_f64(&vals);
        let e11 = coeffs::E11.eval_f64(&vals);
        let f00 = e00 - e10 * e01 / e11 + e20 * e01 * e01 / (e11 * e11);
        let f10 = e10 - 2.0 * e20 * e01 / e11;
        let mu1 = f00;
        let mu2 = f10 - 2.0 * e02 * f00;
        let a = e20 + 2.0 * e02 * (e02 * f00 - f10);
        let b = e11;
        NormalFormBT {
            beta1: b.powi(4) / a.powi(3) * mu1,
            beta2: b * b / (a * a) * mu2,
            mu1,
            mu2,
            a,
            b,
        }
    }

    /// Jacobian determinant of (β₁, β₂) in (ε₁, ε₂) predicted by the printed J₀.
    pub fn predicted_jacobian_det(&self) -> f64 {
        self.b0.powi(6) * self.j0 / self.a0.powi(5)
    }
}

/// Local expansion at the cusp for the given (x_*, h).
pub fn bt_curves(x_star: f64, h: f64) -> Result<BTExpansion> {
    let locus = cusp_locus(x_star, h, None)?;
    let v = [x_star, h];
    let (x, m) = (x_star, (h - 1.0) * x_star * x_star);
    let q = bt_q(x, h);
    let j0 = -x.powi(4) * (m + 6.0) * q * q
        / (4.0 * (h - 1.0).powi(2) * (m + 1.0) * (m + 2.0) * bt_p(x, h));
    let a0 = q * q * (m + 6.0) / (2.0 * x * (h - 1.0).powi(3) * (m + 1.0).powi(3));
    let b0 = bt_p(x, h) * (-h * h * x * x + (2.0 * x * x - 1.0) * h - x * x + 2.0)
        / (x * (m + 1.0).powi(3) * (h - 1.0).powi(2));
    Ok(BTExpansion {
        x_star,
        h,
        kappa2: locus.kappa2,
        alpha_star: locus.alpha3,
        sigma_star: locus.sigma1,
        f11: coeffs::F11.eval_f64(&v),
        f12: coeffs::F12.eval_f64(&v),
        f22: coeffs::F22.eval_f64(&v),
        f32: coeffs::F32.eval_f64(&v),
        g10: coeffs::G10.eval_f64(&v),
        g01: coeffs::G01.eval_f64(&v),
        h10: coeffs::H10.eval_f64(&v),
        h01: coeffs::H01.eval_f64(&v),
        j0,
        a0,
        b0,
    })
}

/// Exact rational (f11, f12, f22, f32).
pub fn bt_coefficients_exact(x: &BigRational, h: &BigRational) -> [BigRational; 4] {
    let v = [x.clone(), h.clone()];
    [
        coeffs::F11.eval_exact(&v),
        coeffs::F12.eval_exact(&v),
        coeffs::F22.eval_exact(&v),
        coeffs::F32.eval_exact(&v),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BtRegion {
    I1,
    SNminus,
    I2,
    H,
    I3,
    HL,
    I4,
    SNplus,
    Cusp,
}

/// Region of (σ, α) in the local unfolding, using the quadratic curves.
pub fn bt_region(p: &ParamSet, bt: &BTExpansion, radius: f64) -> Result<BtRegion> {
    let e = p.sigma - bt.sigma_star;
    if e.abs() > radius {
        return Err(Error::OutsideTrust {
            dist: e.abs(),
            radius,
        });
    }
    let tie = |a: f64, b: f64| (a - b).abs() <= CURVE_TIE_TOL;
    let a = p.alpha;
    if e.abs() <= 1e-12 {
        return Ok(if tie(a, bt.alpha_star) {
            BtRegion::Cusp
        } else if a < bt.alpha_star {
            BtRegion::I1
        } else {
            BtRegion::I4
        });
    }
    let sn = bt.alpha_sn(p.sigma);
    if e < 0.0 {
        return Ok(if tie(a, sn) {
            BtRegion::SNplus
        } else if a < sn {
            BtRegion::I1
        } else {
            BtRegion::I4
        });
    }
    let hopf = bt.alpha_h(p.sigma);
    let hl = bt.alpha_hl(p.sigma);
    Ok(if tie(a, sn) {
        BtRegion::SNminus
    } else if a < sn {
        BtRegion::I1
    } else if tie(a, hopf) {
        BtRegion::H
    } else if a < hopf {
        BtRegion::I2
    } else if tie(a, hl) {
        BtRegion::HL
    } else if a < hl {
        BtRegion::I3
    } else {
        BtRegion::I4
    })
}

/// Fold value of α at (κ, σ, h) from F = F′ = 0, valid at any distance from the cusp.
pub fn exact_fold_alpha(kappa: f64, sigma: f64, h: f64) -> Result<f64> {
    alpha_thresholds(kappa, sigma, h).map(|(_, a2)| a2)
}

/// Hopf value of α at (κ, σ, h) from F(x₁) = 0 and T(x₁) = 0.
pub fn exact_hopf_alpha(kappa: f64, sigma: f64, h: f64) -> Result<(f64, f64)> {
    // T(x) = a x² + b x + c with a < 0; take the positive zero.
    let a = -kappa * (h - 1.0).powi(2);
    let b = -2.0 * h * sigma;
    let c = kappa * (sigma * (2.0 * h - 1.0) - h + 1.0);
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 || a == 0.0 {
        return Err(Error::Domain("no real zero of the trace factor".into()));
    }
    let x = (-b - disc.sqrt()) / (2.0 * a);
    if !(x > 0.0 && x < kappa) {
        return Err(Error::Domain(format!(
            "trace zero x1 = {x} outside (0, kappa)"
        )));
    }
    let alpha = -kappa * (1.0 + (h - 1.0) * x * x) / (sigma * (h - 1.0) * x.powi(3) * (kappa - x));
    debug_assert!(
        trace_factor(
            &ParamSet {
                alpha,
                kappa,
                sigma,
                h
            },
            x
        )
        .abs()
            < 1e-6 * (1.0 + kappa)
    );
    Ok((alpha, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::qr;

    #[test]
    fn boundary_examples() {
        let k1 = 2.0;
        let p = ParamSet::new(1.0, k1, 1.0, 0.75).unwrap();
        let b = boundary_bifurcation(&p, 1e-9).unwrap();
        assert_eq!(b.kind, BoundaryKind::Pitchfork);
        assert!(b.quadratic_coeff.abs() < 1e-15);
        // Printed special value of the cubic coefficient.
        assert!((b.cubic_coeff - 5.0 * 0.25 / 4.0).abs() < 1e-12);
        let p = ParamSet::new(0.5, k1, 1.0, 0.75).unwrap();
        assert_eq!(
            boundary_bifurcation(&p, 1e-9).unwrap().kind,
            BoundaryKind::Transcritical
        );
        let far = ParamSet::new(0.5, 2.5, 1.0, 0.75).unwrap();
        assert!(boundary_bifurcation(&far, 1e-6).is_err());
    }

    #[test]
    fn cusp_exact() {
        let (a, k, s) = cusp_locus_exact(&qr(1, 1), &qr(1, 2), None).unwrap();
        assert_eq!((a, k, s), (qr(20, 1), qr(6, 5), qr(3, 10)));
        let (a, _, _) = cusp_locus_exact(&qr(1, 1), &qr(1, 2), Some(&qr(1, 1))).unwrap();
        assert_eq!(a, qr(6, 1));
        assert!(cusp_locus(1.5, 0.3, None).is_err());
        assert!(cusp_locus(1.5, 0.8, None).is_ok());
    }

    #[test]
    fn saddle_node_example() {
        let sn = saddle_node_normal_form(1.0, 0.5, 1.0).unwrap();
        assert!((sn.zeta_prime0 + 1.0 / 66.0).abs() < 1e-14);
        assert!((sn.zeta_prime0 - zeta_prime_closed_form(1.0, 0.5, 1.0)).abs() < 1e-14);
        assert_eq!(sn.d2_sign, 1);
        assert_eq!(saddle_node_normal_form(1.0, 0.5, 0.2).unwrap().d2_sign, -1);
        assert!(matches!(
            saddle_node_normal_form(1.0, 0.5, 0.3),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn unit_fold_expansion() {
        let bt = bt_curves(1.0, 0.5).unwrap();
        assert!((bt.alpha_star - 20.0).abs() < 1e-12 && (bt.sigma_star - 0.3).abs() < 1e-12);
        assert!((bt.f11 + 200.0 / 3.0).abs() < 1e-9);
        assert!((bt.f12 - 2000.0 / 9.0).abs() < 1e-9);
        assert!((bt.alpha_sn(0.35) - 17.2222).abs() < 1e-3);
        let nf = bt.normal_form(0.0, 0.0);
        assert!(nf.beta1.abs() < 1e-9 && nf.beta2.abs() < 1e-9);
        assert!((nf.a - bt.a0).abs() < 1e-9 * bt.a0.abs());
        assert!((nf.b - bt.b0).abs() < 1e-9 * bt.b0.abs());
        assert!((nf.a + 275.0).abs() < 1e-9 && (nf.b - 75.0).abs() < 1e-9);
    }

    #[test]
    fn sample_regions() {
        let bt = bt_curves(1.0, 0.5).unwrap();
        let r = |s: f64, a: f64| bt_region(&bt.params(a, s), &bt, DEFAULT_TRUST_RADIUS).unwrap();
        assert_eq!(r(0.35, 17.1), BtRegion::I1);
        assert_eq!(r(0.35, 17.5), BtRegion::I2);
        assert_eq!(r(0.35, 18.0), BtRegion::I3);
        assert_eq!(r(0.35, 18.6), BtRegion::I4);
        assert_eq!(r(0.3, 20.0), BtRegion::Cusp);
        assert_eq!(r(0.25, 30.0), BtRegion::I4);
        assert!(bt_region(&bt.params(5.0, 0.5), &bt, DEFAULT_TRUST_RADIUS).is_err());
    }
}
