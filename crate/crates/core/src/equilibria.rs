//! Equilibria, their types, and the partition of parameter space by the
//! number of positive equilibria.
//!
//! Positive equilibria lie on the parabola y = σx(1 − x/κ) with abscissa a
//! zero of the quartic
//!
//! ```text
//! F(x) = −ασ(h−1)x⁴ + κασ(h−1)x³ + κ(h−1)x² + κ
//! ```
//!
//! in (0, κ). For 0 < h < 1 and α > 0, F′ has a single positive zero x_*,
//! F decreases on (0, x_*) and increases after it, so the signs of F(x_*),
//! F(κ) and the order of x_* and κ decide the count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{det2, jacobian3, trace2, Mat2, ParamSet, State};
use crate::polyalg::{real_roots_robust, Poly};

/// Relative tolerance for declaring det or trace zero.
pub const DEGENERACY_TOL: f64 = 1e-8;
/// Dead-band on trace² − 4·det separating nodes from foci.
pub const DISCRIMINANT_BAND: f64 = 1e-10;
/// Relative tolerance for the equality cases of the region predicates.
pub const REGION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Origin,
    BoundaryKappa,
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Saddle,
    StableNode,
    StableFocus,
    UnstableNode,
    UnstableFocus,
    CenterOrWeakFocus,
    DegenerateFoldCandidate,
    DegenerateBoundary,
}

impl Classification {
    pub fn is_focus(self) -> bool {
        matches!(
            self,
            Classification::StableFocus
                | Classification::UnstableFocus
                | Classification::CenterOrWeakFocus
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Equilibrium {
    pub point: State,
    pub kind: Kind,
    pub classification: Classification,
    pub det: f64,
    pub trace: f64,
    pub discriminant: f64,
    /// det or trace within the degeneracy tolerance.
    pub near_degenerate: bool,
    /// trace² − 4·det inside the node/focus dead-band.
    pub borderline: bool,
    /// Multiplicity of x as a zero of F (positive equilibria only).
    pub multiplicity: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    HGe1,
}

impl Region {
    /// Number of positive equilibria in the region.
    pub fn positive_count(self) -> usize {
        match self {
            Region::P1 | Region::P2 | Region::P4 | Region::HGe1 => 0,
            Region::P3 | Region::P5 | Region::P6 => 1,
            Region::P7 => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub kappa1: Option<f64>,
    pub alpha1: Option<f64>,
    pub alpha2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionTag {
    pub region: Region,
    pub thresholds: Thresholds,
    /// F(x_*), F(κ) and x_* (infinite when α = 0).
    pub f_at_xstar: f64,
    pub f_at_kappa: f64,
    pub x_star: f64,
}

pub fn quartic_f(p: &ParamSet) -> Poly<f64> {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let hm = h - 1.0;
    Poly::new(vec![
        kappa,
        0.0,
        kappa * hm,
        kappa * alpha * sigma * hm,
        -alpha * sigma * hm,
    ])
}

/// F′(x) = −2(h−1)x(2ασx² − 3κασx/2 − κ), kept in expanded form.
pub fn quartic_f_prime(p: &ParamSet) -> Poly<f64> {
    quartic_f(p).derivative()
}

/// The positive zero of F′ for α > 0.
pub fn critical_abscissa(p: &ParamSet) -> Result<f64> {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        ..
    } = *p;
    if alpha <= 0.0 {
        return Err(Error::Domain("critical abscissa needs alpha > 0".into()));
    }
    let k = kappa * alpha * sigma;
    Ok((3.0 * k + (k * (9.0 * k + 32.0)).sqrt()) / (8.0 * alpha * sigma))
}

/// Coefficients of the cubic whose larger positive zeros bound the fold region in α.
pub fn threshold_cubic(kappa: f64, sigma: f64, h: f64) -> Poly<f64> {
    let hm = h - 1.0;
    let k2 = kappa * kappa;
    Poly::new(vec![
        -16.0 * k2 * hm * hm,
        -4.0 * sigma * kappa * hm * (h * k2 - k2 + 32.0),
        -16.0 * sigma * sigma * (9.0 * h * k2 - 9.0 * k2 + 16.0),
        -27.0 * k2 * kappa * sigma.powi(3) * hm,
    ])
}

/// (α₁, α₂): the two largest positive zeros of the threshold cubic.
pub fn alpha_thresholds(kappa: f64, sigma: f64, h: f64) -> Result<(f64, f64)> {
    if !(h > 0.0 && h < 1.0 && kappa > 0.0 && sigma > 0.0) {
        return Err(Error::Domain(format!(
            "need 0<h<1, kappa>0, sigma>0; got ({kappa}, {sigma}, {h})"
        )));
    }
    let f = threshold_cubic(kappa, sigma, h);
    let lc = f.lc().abs();
    let bound = 1.0 + f.coeffs().iter().map(|c| c.abs() / lc).fold(0.0, f64::max);
    let roots = real_roots_robust(&f, 0.0, bound)?;
    let pos: Vec<f64> = roots
        .roots
        .iter()
        .filter(|r| r.x > 0.0)
        .flat_map(|r| std::iter::repeat_n(r.x, r.multiplicity as usize))
        .collect();
    if pos.len() < 2 {
        return Err(Error::NoThreshold(format!(
            "{} positive zero(s) of the threshold cubic",
            pos.len()
        )));
    }
    Ok((pos[pos.len() - 2], pos[pos.len() - 1]))
}

fn rel_zero(v: f64, scale: f64, tol: f64) -> bool {
    v.abs() <= tol * scale.max(f64::MIN_POSITIVE)
}

/// Evaluate F and the magnitude of its terms at x.
fn f_with_scale(f: &Poly<f64>, x: f64) -> (f64, f64) {
    let mut s = 0.0;
    let mut xp = 1.0;
    for c in f.coeffs() {
        s += (c * xp).abs();
        xp *= x;
    }
    (f.eval(&x), s)
}

pub fn classify_region(p: &ParamSet) -> RegionTag {
    let kappa1 = p.kappa1();
    let (alpha1, alpha2) = match alpha_thresholds(p.kappa, p.sigma, p.h) {
        Ok((a, b)) => (Some(a), Some(b)),
        Err(_) => (None, None),
    };
    let thresholds = Thresholds {
        kappa1,
        alpha1,
        alpha2,
    };
    let f = quartic_f(p);
    let (fk, fk_scale) = f_with_scale(&f, p.kappa);
    if p.h >= 1.0 {
        return RegionTag {
            region: Region::HGe1,
            thresholds,
            f_at_xstar: f64::NAN,
            f_at_kappa: fk,
            x_star: f64::NAN,
        };
    }
    let x_star = critical_abscissa(p).unwrap_or(f64::INFINITY);
    let (fs, fs_scale) = if x_star.is_finite() {
        f_with_scale(&f, x_star)
    } else {
        (f64::NEG_INFINITY, 1.0)
    };
    let fs_zero = x_star.is_finite() && rel_zero(fs, fs_scale, REGION_TOL);
    let fk_zero = rel_zero(fk, fk_scale, REGION_TOL);
    let below = x_star < p.kappa;
    let region = if fs_zero {
        if below {
            Region::P3
        } else {
            Region::P2
        }
    } else if fs > 0.0 {
        Region::P1
    } else if fk_zero {
        if below {
            Region::P6
        } else {
            Region::P4
        }
    } else if fk < 0.0 {
        Region::P5
    } else if below {
        Region::P7
    } else {
        Region::P4
    };
    RegionTag {
        region,
        thresholds,
        f_at_xstar: fs,
        f_at_kappa: fk,
        x_star,
    }
}

/// T(x₁) = −κ(h−1)²x₁² − 2hσx₁ + κ{σ(2h−1) − h + 1}; its sign is that of the trace at E₁.
pub fn trace_factor(p: &ParamSet, x1: f64) -> f64 {
    let ParamSet {
        kappa, sigma, h, ..
    } = *p;
    -kappa * (h - 1.0).powi(2) * x1 * x1 - 2.0 * h * sigma * x1
        + kappa * (sigma * (2.0 * h - 1.0) - h + 1.0)
}

fn classify_matrix(j: &Mat2, kind: Kind) -> (Classification, f64, f64, f64, bool, bool) {
    let det = det2(j);
    let trace = trace2(j);
    let disc = trace * trace - 4.0 * det;
    let det_scale = (j[0][0] * j[1][1]).abs() + (j[0][1] * j[1][0]).abs();
    let tr_scale = j[0][0].abs() + j[1][1].abs();
    let det_zero = rel_zero(det, det_scale, DEGENERACY_TOL) || det.abs() < 1e-300;
    let tr_zero = rel_zero(trace, tr_scale, DEGENERACY_TOL);
    let disc_scale = trace * trace + 4.0 * det.abs();
    let borderline = rel_zero(disc, disc_scale, DISCRIMINANT_BAND);
    use Classification::*;
    let class = if det_zero {
        match kind {
            Kind::Positive => DegenerateFoldCandidate,
            _ => DegenerateBoundary,
        }
    } else if det < 0.0 {
        Saddle
    } else if tr_zero {
        CenterOrWeakFocus
    } else {
        let focus = disc < 0.0;
        match (trace < 0.0, focus) {
            (true, true) => StableFocus,
            (true, false) => StableNode,
            (false, true) => UnstableFocus,
            (false, false) => UnstableNode,
        }
    };
    (class, det, trace, disc, det_zero || tr_zero, borderline)
}

pub fn equilibrium_at(p: &ParamSet, s: State, kind: Kind, multiplicity: u32) -> Equilibrium {
    let j = jacobian3(p, s);
    let (classification, det, trace, discriminant, near_degenerate, borderline) =
        classify_matrix(&j, kind);
    Equilibrium {
        point: s,
        kind,
        classification,
        det,
        trace,
        discriminant,
        near_degenerate,
        borderline,
        multiplicity,
    }
}

/// Positive equilibria only, ordered by abscissa (E₁ then E₂).
pub fn positive_equilibria(p: &ParamSet) -> Result<Vec<Equilibrium>> {
    p.validate()?;
    if p.h >= 1.0 {
        return Ok(Vec::new());
    }
    let f = quartic_f(p);
    let roots = real_roots_robust(&f, 0.0, p.kappa)?;
    Ok(roots
        .roots
        .iter()
        .filter(|r| r.x > 0.0 && r.x < p.kappa)
        .map(|r| {
            let x = r.x;
            let y = p.sigma * x * (1.0 - x / p.kappa);
            equilibrium_at(p, State::new(x, y), Kind::Positive, r.multiplicity)
        })
        .collect())
}

/// E₀, E_κ and all positive equilibria.
pub fn find_equilibria(p: &ParamSet) -> Result<Vec<Equilibrium>> {
    let mut out = vec![
        equilibrium_at(p, State::new(0.0, 0.0), Kind::Origin, 1),
        equilibrium_at(p, State::new(p.kappa, 0.0), Kind::BoundaryKappa, 1),
    ];
    out.extend(positive_equilibria(p)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_examples() {
        let p = ParamSet::new(6.0, 1.2, 1.0, 0.5).unwrap();
        let f = quartic_f(&p);
        let want = [1.2, 0.0, -0.6, -3.6, 3.0];
        for (a, b) in f.coeffs().iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
        let p1 = ParamSet::new(6.0, 1.2, 1.0, 1.0).unwrap();
        assert_eq!(quartic_f(&p1).coeffs(), &[1.2]);
        let p0 = ParamSet::new(0.0, 3.0, 1.0, 0.75).unwrap();
        let r = real_roots_robust(&quartic_f(&p0), 0.0, 3.0).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.roots[0].x - 2.0).abs() < 1e-12);
    }

    #[test]
    fn critical_abscissa_examples() {
        let p = ParamSet::new(6.0, 1.2, 1.0, 0.5).unwrap();
        assert!((critical_abscissa(&p).unwrap() - 1.0).abs() < 1e-14);
        let q = ParamSet::new(12.0, 1.2, 0.5, 0.5).unwrap();
        assert!((critical_abscissa(&q).unwrap() - 1.0).abs() < 1e-14);
        assert!(critical_abscissa(&ParamSet::new(0.0, 1.2, 0.5, 0.5).unwrap()).is_err());
    }

    #[test]
    fn thresholds_at_fold_points() {
        let (_, a2) = alpha_thresholds(1.2, 0.3, 0.5).unwrap();
        assert!((a2 - 20.0).abs() < 1e-9, "{a2}");
        let (_, a2) = alpha_thresholds(1.2, 1.0, 0.5).unwrap();
        assert!((a2 - 6.0).abs() < 1e-9, "{a2}");
        let p = ParamSet::new(a2, 1.2, 1.0, 0.5).unwrap();
        let xs = critical_abscissa(&p).unwrap();
        assert!(quartic_f(&p).eval(&xs).abs() < 1e-8);
    }

    #[test]
    fn fold_point_inventory() {
        let p = ParamSet::new(6.0, 1.2, 1.0, 0.5).unwrap();
        let eq = find_equilibria(&p).unwrap();
        assert_eq!(eq.len(), 3);
        assert_eq!(eq[0].classification, Classification::Saddle);
        assert_eq!(eq[1].classification, Classification::StableNode);
        assert_eq!(
            eq[2].classification,
            Classification::DegenerateFoldCandidate
        );
        assert!((eq[2].point.x - 1.0).abs() < 1e-9 && (eq[2].point.y - 1.0 / 6.0).abs() < 1e-9);
        assert_eq!(eq[2].multiplicity, 2);
        assert_eq!(classify_region(&p).region, Region::P3);
    }
}
