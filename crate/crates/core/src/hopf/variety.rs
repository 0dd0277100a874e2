//! Desk-scale check that f₁ = f₂ = f₃ = 0 has no solution in P: the x₁ = 1/2
//! resultant, its feasible root, and a sampled sweep of the f₁ = f₂ = 0 locus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{focal_values, hopf_critical, in_p, kappa2, lyapunov_constants, normalize_direct};
use crate::coeffs::{self, q, qr, witness_resultant_factors, Expr};
use crate::error::Result;
use crate::polyalg::{
    gcd_rational, rational_to_f64, real_roots, real_roots_exact, resultant_exact, sign_at, Poly,
    DEFAULT_BIT_CAP,
};

type Q = BigRational;

/// Bits of h for the witness; κ = κn/κd is extremely sensitive to h there.
const WITNESS_BITS: u32 = 220;
type BiPoly = Poly<Poly<Q>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateRoot {
    pub h: f64,
    /// κ on the common zero set, if one exists.
    pub kappa: Option<f64>,
    pub kappa2: f64,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub h: f64,
    pub kappa: f64,
    /// |f̃ᵢ| over the sum of absolute term values, at a 2⁻²²⁰ rational approximation of h.
    pub f1_residual: f64,
    pub f2_residual: f64,
    /// κd³f̃₁(κn/κd) and κd⁷f̃₂(κn/κd) vanish modulo the degree-25 factor.
    pub identity_holds: bool,
    pub tf3: f64,
    pub l3_closed_form: f64,
    pub l3_numeric: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct H3Sample {
    pub x1: f64,
    pub h: f64,
    pub kappa: f64,
    pub f2_residual: f64,
    pub in_p: bool,
    pub l3_printed: f64,
    pub l3_direct: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SliceReport {
    pub h: f64,
    /// Real x₁ roots of res_κ(f₁, f₂) in (0, √2).
    pub x1_roots: Vec<f64>,
    pub feasible: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarietyReport {
    pub resultant_degree: usize,
    /// Computed resultant is a rational multiple of the printed factorization.
    pub matches_printed: bool,
    /// computed / printed.
    pub printed_ratio: f64,
    pub candidates: Vec<CandidateRoot>,
    pub witness: Witness,
    pub half_slice: SliceReport,
    pub samples: Vec<H3Sample>,
    pub violations: Vec<String>,
}

/// Numerator as a polynomial in κ over Q[h] (two-variable [h, κ] tables).
fn in_kappa(e: &Expr) -> BiPoly {
    e.numerator_bivariate(1, 0, &[Q::zero(), Q::zero()])
}

/// Σ cₖ nᵏ d^(deg−k), i.e. d^deg · f(n/d).
fn homogenized(f: &BiPoly, n: &Poly<Q>, d: &Poly<Q>) -> Poly<Q> {
    let deg = f.deg().max(0) as u32;
    let mut acc = Poly::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        acc = &acc + &(&(c * &n.pow(k as u32)) * &d.pow(deg - k as u32));
    }
    acc
}

fn eval_bi(f: &BiPoly, outer: &Q, inner: &Q) -> Q {
    f.coeffs()
        .iter()
        .rev()
        .fold(Q::zero(), |acc, c| acc * outer + c.eval(inner))
}

fn relative_residual(f: &BiPoly, outer: &Q, inner: &Q) -> f64 {
    let abs = f.map(|c| c.map(|v| v.abs()));
    let scale = eval_bi(&abs, &outer.abs(), &inner.abs());
    rational_to_f64(&(eval_bi(f, outer, inner).abs() / scale))
}

/// Bisects an isolating bracket of a simple root to width below 2⁻ᵇⁱᵗˢ.
fn refine(p: &Poly<BigInt>, x: f64, bits: u32) -> Q {
    let mut w = 1e-12;
    let (mut lo, mut hi) = (q(x - w), q(x + w));
    while sign_at(p, &lo) * sign_at(p, &hi) > 0 {
        w *= 10.0;
        lo = q(x - w);
        hi = q(x + w);
    }
    let two = qr(2, 1);
    let slo = sign_at(p, &lo);
    let eps = Q::new(BigInt::one(), BigInt::one() << bits);
    while &hi - &lo > eps {
        let m = (&lo + &hi) / &two;
        let s = sign_at(p, &m);
        if s == 0 {
            return m;
        }
        if s == slo {
            lo = m;
        } else {
            hi = m;
        }
    }
    (lo + hi) / two
}

fn poly_f64(p: &Poly<Q>) -> Poly<f64> {
    p.map(rational_to_f64)
}

/// κ-roots of f at a fixed float value of the inner variable.
fn kappa_roots(f: &BiPoly, inner: f64, lo: f64, hi: f64) -> Vec<f64> {
    let p = Poly::new(
        f.coeffs()
            .iter()
            .map(|c| poly_f64(c).eval(&inner))
            .collect(),
    );
    real_roots(&p, lo, hi)
        .map(|r| r.values())
        .unwrap_or_default()
}

/// |g(κ)| relative to its absolute term sum.
fn float_residual(g: &BiPoly, inner: f64, kappa: f64) -> f64 {
    let (mut v, mut s) = (0.0, 0.0);
    for (k, c) in g.coeffs().iter().enumerate() {
        let t = poly_f64(c).eval(&inner) * kappa.powi(k as i32);
        v += t;
        s += t.abs();
    }
    if s == 0.0 {
        0.0
    } else {
        v.abs() / s
    }
}

/// res_κ(f̃₁, f̃₂) as a polynomial in h.
pub fn witness_resultant() -> Result<Poly<Q>> {
    let (f1, f2) = (in_kappa(&coeffs::TF1), in_kappa(&coeffs::TF2));
    let r = resultant_exact(&f1, &f2, DEFAULT_BIT_CAP)?;
    // The tables store integer numerators over constant denominators d₁, d₂;
    // res(N₁, N₂) = d₁^deg(N₂) d₂^deg(N₁) res(f̃₁, f̃₂).
    let d1 = coeffs::TF1.constant_denominator().expect("constant denominator");
    let d2 = coeffs::TF2.constant_denominator().expect("constant denominator");
    let s = num_traits::pow(d1, f2.deg() as usize) * num_traits::pow(d2, f1.deg() as usize);
    Ok(r.scale(&s.recip()))
}

fn printed_resultant() -> Poly<Q> {
    let (c, fs) = witness_resultant_factors();
    fs.iter().fold(Poly::constant(c), |acc, (m, f)| {
        &acc * &f.map(|v| Q::from_integer(v.clone())).pow(*m)
    })
}

/// (r = c·printed for some rational c, c).
pub fn compare_with_printed(r: &Poly<Q>) -> (bool, Q) {
    let p = printed_resultant();
    if p.is_zero() || r.is_zero() {
        return (false, Q::zero());
    }
    let c = r.lc() / p.lc();
    (*r == p.scale(&c), c)
}

fn kappa_of(h: &Q) -> Q {
    let z = Q::zero();
    coeffs::KAPN.numerator_exact(&[h.clone(), z.clone()])
        / coeffs::KAPD.numerator_exact(&[h.clone(), z])
}

fn l3_closed_form(tf3: f64, kappa: f64, h: f64, x1: f64, omega: f64) -> f64 {
    let m = (h - 1.0) * x1 * x1;
    let brace = (m + 3.0) * kappa - 2.0 * x1 * (m + 2.0);
    let s = 2.0 * h * kappa - 2.0 * h * x1 - kappa;
    // Scale the κ⁹ numerator against ω¹⁵ first; both are large.
    let ratio = (kappa / omega).powi(9) / omega.powi(6);
    ratio * tf3
        / (70778880.0 * (h - 1.0).powi(6) * (kappa - x1).powi(6) * brace * s.powi(4) * x1.powi(5))
}

fn witness(p25: &Poly<BigInt>, h_float: f64, violations: &mut Vec<String>) -> Witness {
    let h = refine(p25, h_float, WITNESS_BITS);
    let kappa = kappa_of(&h);
    let (f1, f2) = (in_kappa(&coeffs::TF1), in_kappa(&coeffs::TF2));
    let kn = coeffs::KAPN.numerator_univariate(0, &[Q::zero(), Q::zero()]);
    let kd = coeffs::KAPD.numerator_univariate(0, &[Q::zero(), Q::zero()]);
    let modulus = p25.map(|v| Q::from_integer(v.clone()));
    let identity_holds = homogenized(&f1, &kn, &kd).div_rem(&modulus).1.is_zero()
        && homogenized(&f2, &kn, &kd).div_rem(&modulus).1.is_zero();
    if !identity_holds {
        violations.push(
            "f1, f2 do not vanish identically at kappa = kn/kd modulo the witness factor".into(),
        );
    }
    let tf3 = rational_to_f64(&coeffs::TF3.eval_exact(&[h.clone(), kappa.clone()]));
    let (hf, kf) = (rational_to_f64(&h), rational_to_f64(&kappa));
    let (l3_closed_form, l3_numeric) = match hopf_critical(kf, hf, 0.5) {
        Ok(c) => {
            let num = focal_values(&c).map(|r| r.l3).unwrap_or(f64::NAN);
            (l3_closed_form(tf3, kf, hf, 0.5, c.omega), num)
        }
        Err(e) => {
            violations.push(format!("witness is not a Hopf point in P: {e}"));
            (f64::NAN, f64::NAN)
        }
    };
    Witness {
        h: hf,
        kappa: kf,
        f1_residual: relative_residual(&f1, &kappa, &h),
        f2_residual: relative_residual(&f2, &kappa, &h),
        identity_holds,
        tf3,
        l3_closed_form,
        l3_numeric,
    }
}

/// Common κ-roots of f₁, f₂ at a rational h, by exact gcd.
fn common_kappas(f1: &BiPoly, f2: &BiPoly, h: &Q) -> Vec<f64> {
    let a = Poly::new(f1.coeffs().iter().map(|c| c.eval(h)).collect());
    let b = Poly::new(f2.coeffs().iter().map(|c| c.eval(h)).collect());
    let g = gcd_rational(&a, &b);
    if g.deg() < 1 {
        return Vec::new();
    }
    real_roots_exact(
        &g,
        &Q::zero(),
        &Q::from_integer(BigInt::from(1u64 << 40)),
        1e-14,
    )
    .values()
}

/// Resultant in κ of the printed f₁, f₂ with one of x₁, h fixed; the other is the
/// polynomial variable. `var` is 0 for x₁ and 1 for h.
fn slice_resultant(var: usize, fixed: &Q) -> Result<(BiPoly, BiPoly, Poly<Q>)> {
    let mut vals = vec![Q::zero(); 4];
    vals[1 - var] = fixed.clone();
    let f1 = coeffs::F1.numerator_bivariate(2, var, &vals);
    let f2 = coeffs::F2.numerator_bivariate(2, var, &vals);
    let r = resultant_exact(&f1, &f2, DEFAULT_BIT_CAP)?;
    Ok((f1, f2, r))
}

/// Candidate (κ, residual) pairs on f₁ = 0 ordered by the f₂ residual.
fn best_kappa(f1: &BiPoly, f2: &BiPoly, inner: f64) -> Option<(f64, f64)> {
    kappa_roots(f1, inner, 1e-9, 1e9)
        .into_iter()
        .map(|k| (k, float_residual(f2, inner, k)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

/// The h = 1/2 slice: no (κ, x₁) in P has f₁ = f₂ = 0.
pub fn half_slice() -> Result<SliceReport> {
    let half = qr(1, 2);
    let (f1, f2, r) = slice_resultant(0, &half)?;
    let sq2 = std::f64::consts::SQRT_2;
    let roots = real_roots_exact(&r, &q(1e-9), &q(sq2), 1e-13).values();
    let mut feasible = 0;
    for &x1 in &roots {
        if let Some((k, res)) = best_kappa(&f1, &f2, x1) {
            if res < 1e-6 && in_p(k, 0.5, x1) {
                feasible += 1;
            }
        }
    }
    Ok(SliceReport {
        h: 0.5,
        x1_roots: roots,
        feasible,
    })
}

/// Points of the f₁ = f₂ = 0 locus at a fixed rational x₁.
pub fn h3_points(x1: &Q) -> Result<Vec<H3Sample>> {
    let (f1, f2, r) = slice_resultant(1, x1)?;
    let xf = rational_to_f64(x1);
    let hs = real_roots_exact(&r, &q(1e-9), &q(1.0 - 1e-9), 1e-14).values();
    let mut out = Vec::new();
    for h in hs {
        let Some((kappa, f2_residual)) = best_kappa(&f1, &f2, h) else {
            continue;
        };
        if f2_residual > 1e-6 {
            continue;
        }
        let member = in_p(kappa, h, xf);
        let (l3_printed, l3_direct) = match hopf_critical(kappa, h, xf) {
            Ok(c) => {
                let lp = focal_values(&c).map(|r| r.l3).unwrap_or(f64::NAN);
                let ld =
                    lyapunov_constants(&normalize_direct(&c.params(), c.x1, c.y1, c.omega), 3)[2];
                (lp, ld)
            }
            Err(_) => (f64::NAN, f64::NAN),
        };
        out.push(H3Sample {
            x1: xf,
            h,
            kappa,
            f2_residual,
            in_p: member,
            l3_printed,
            l3_direct,
        });
    }
    Ok(out)
}

/// Default x₁ values for the H3 sweep.
pub fn default_sample_x1() -> Vec<Q> {
    [
        (3, 10),
        (2, 5),
        (3, 5),
        (7, 10),
        (4, 5),
        (9, 10),
        (11, 10),
        (6, 5),
    ]
    .iter()
    .map(|&(a, b)| qr(a, b))
    .collect()
}

pub fn variety_check_desk() -> Result<VarietyReport> {
    variety_check_with(&default_sample_x1())
}

pub fn variety_check_with(sample_x1: &[Q]) -> Result<VarietyReport> {
    let mut violations = Vec::new();
    let r = witness_resultant()?;
    let (matches_printed, ratio) = compare_with_printed(&r);
    if !matches_printed {
        violations.push("computed resultant differs from the printed factorization".into());
    }
    let (_, factors) = witness_resultant_factors();
    let p25 = factors
        .iter()
        .map(|(_, f)| f)
        .find(|f| f.deg() == 25)
        .cloned()
        .expect("degree-25 factor");
    let (f1, f2) = (in_kappa(&coeffs::TF1), in_kappa(&coeffs::TF2));

    let mut candidates = Vec::new();
    for root in real_roots_exact(&r, &q(1e-12), &q(1.0 - 1e-12), 1e-14).roots {
        let h = root.x;
        let k2 = kappa2(0.5, h);
        let on_p25 =
            sign_at(&p25, &q(root.lo)) != sign_at(&p25, &q(root.hi)) || sign_at(&p25, &q(h)) == 0;
        let kappas: Vec<f64> = if on_p25 {
            vec![rational_to_f64(&kappa_of(&refine(&p25, h, WITNESS_BITS)))]
        } else {
            common_kappas(&f1, &f2, &q(h))
        };
        let feasible_k = kappas.iter().copied().find(|&k| in_p(k, h, 0.5));
        candidates.push(CandidateRoot {
            h,
            kappa: feasible_k.or_else(|| kappas.first().copied()),
            kappa2: k2,
            feasible: feasible_k.is_some(),
        });
    }
    let feasible: Vec<&CandidateRoot> = candidates.iter().filter(|c| c.feasible).collect();
    if feasible.len() != 1 {
        violations.push(format!(
            "expected one feasible root, found {}",
            feasible.len()
        ));
    }
    let wh = feasible.first().map(|c| c.h).unwrap_or(0.4822059683);
    let witness = witness(&p25, wh, &mut violations);
    if !(witness.l3_numeric < 0.0 && witness.tf3 < 0.0) {
        violations.push(format!("witness l3 not negative: {:?}", witness));
    }

    let half_slice = half_slice()?;
    if half_slice.feasible > 0 {
        violations.push(format!(
            "{} feasible common zeros on h = 1/2",
            half_slice.feasible
        ));
    }

    let per_x: Vec<Result<Vec<H3Sample>>> = sample_x1.par_iter().map(h3_points).collect();
    let mut samples = Vec::new();
    for s in per_x {
        samples.extend(s?);
    }
    for s in samples.iter().filter(|s| s.in_p) {
        let agree = s.l3_printed.signum() == s.l3_direct.signum()
            && (s.l3_printed - s.l3_direct).abs() <= 1e-2 * s.l3_direct.abs();
        if !(s.l3_printed.is_finite() && s.l3_printed != 0.0 && agree) {
            violations.push(format!("l3 not bounded away from zero at {s:?}"));
        }
    }
    Ok(VarietyReport {
        resultant_degree: r.deg().max(0) as usize,
        matches_printed,
        printed_ratio: rational_to_f64(&ratio),
        candidates,
        witness,
        half_slice,
        samples,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_resultant_matches_printed() {
        let r = witness_resultant().unwrap();
        let (ok, c) = compare_with_printed(&r);
        assert!(ok);
        assert_eq!(c, Q::one());
        assert!(r.deg() > 25);
    }

    #[test]
    fn only_one_feasible_witness() {
        let r = variety_check_with(&[]).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        let hs: Vec<f64> = r.candidates.iter().map(|c| c.h).collect();
        let want = [0.0658, 0.1123, 0.4822, 0.5, 0.9627];
        assert_eq!(hs.len(), 5);
        for (a, b) in hs.iter().zip(want) {
            assert!((a - b).abs() < 1e-3, "{hs:?}");
        }
        let w = &r.witness;
        assert!((w.kappa - 493.2405).abs() < 1e-3);
        assert!(w.f1_residual < 1e-20 && w.f2_residual < 1e-20);
        assert!((w.tf3 / -1.2279e31 - 1.0).abs() < 1e-4);
        assert!((w.l3_numeric / w.l3_closed_form - 1.0).abs() < 1e-4);
        assert_eq!(r.half_slice.feasible, 0);
    }

    #[test]
    fn h3_locus_sample() {
        let pts = h3_points(&qr(3, 10)).unwrap();
        let inside: Vec<&H3Sample> = pts.iter().filter(|s| s.in_p).collect();
        assert_eq!(inside.len(), 1);
        let s = inside[0];
        assert!(s.l3_printed < 0.0 && (s.l3_printed / s.l3_direct - 1.0).abs() < 1e-4);
    }
}
