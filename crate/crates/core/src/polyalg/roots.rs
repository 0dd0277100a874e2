//! Float path: Sturm isolation with approximate-gcd truncation.

use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{real_roots_exact, to_rational_poly, Poly};
use num_rational::BigRational;

/// Absolute refinement tolerance (relative beyond |x| = 1).
pub const ROOT_TOL: f64 = 1e-12;
/// Remainders below this (on unit-norm operands) end the sequence: roots closer
/// than its square root are reported as one multiple root.
pub const CLUSTER_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub lo: f64,
    pub hi: f64,
    pub x: f64,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.x).collect()
    }
}

fn normalized(p: &Poly<f64>) -> Poly<f64> {
    let n = p.norm_inf();
    if n == 0.0 {
        p.clone()
    } else {
        p.scale(&(1.0 / n))
    }
}

fn finite(p: &Poly<f64>) -> bool {
    p.coeffs().iter().all(|c| c.is_finite())
}

/// Sturm sequence with unit-norm members; the last member approximates gcd(f, f′).
fn sturm_chain(f: &Poly<f64>) -> Result<Vec<Poly<f64>>> {
    let mut chain = vec![normalized(f)];
    let d = f.derivative();
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(normalized(&d));
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if !finite(&r) {
            return Err(Error::IllConditioned("non-finite Sturm remainder".into()));
        }
        let norm = r.norm_inf();
        if norm <= CLUSTER_TOL {
            break;
        }
        if norm < f64::MIN_POSITIVE * 1e4 {
            return Err(Error::IllConditioned("Sturm remainder underflow".into()));
        }
        chain.push(-&normalized(&r));
    }
    Ok(chain)
}

fn variations(chain: &[Poly<f64>], x: f64) -> usize {
    let mut last = 0.0f64;
    let mut v = 0;
    for p in chain {
        let s = p.eval(&x);
        if s != 0.0 {
            if last != 0.0 && (s > 0.0) != (last > 0.0) {
                v += 1;
            }
            last = s;
        }
    }
    v
}

fn refine(q: &Poly<f64>, mut a: f64, mut b: f64) -> (f64, f64, f64) {
    let sb = q.eval(&b);
    if sb == 0.0 {
        return (b, b, b);
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a) <= ROOT_TOL * m.abs().max(1.0) || m <= a || m >= b {
            break;
        }
        let sm = q.eval(&m);
        if sm == 0.0 {
            return (m, m, m);
        }
        if (sm > 0.0) == (sb > 0.0) {
            b = m;
        } else {
            a = m;
        }
    }
    (a, b, 0.5 * (a + b))
}

/// Distinct real roots of f in [lo, hi].
///
/// Roots are isolated on the approximately square-free part f / gcd(f, f′),
/// refined by bisection, and their multiplicity is one plus their multiplicity
/// as roots of the approximate gcd. Numerical trouble is reported as
/// `IllConditioned`; `real_roots_exact` on the rational image of f is the fallback.
pub fn real_roots(f: &Poly<f64>, lo: f64, hi: f64) -> Result<RootSet> {
    if f.is_zero() {
        return Err(Error::Precondition(
            "real_roots of the zero polynomial".into(),
        ));
    }
    if !finite(f) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::IllConditioned("non-finite input".into()));
    }
    let mut out = RootSet::default();
    if f.deg() < 1 || lo > hi {
        return Ok(out);
    }
    let chain = sturm_chain(f)?;
    let g = chain.last().cloned().unwrap_or_else(Poly::one);
    let q = if g.deg() >= 1 {
        normalized(&f.div_rem(&g).0)
    } else {
        normalized(f)
    };
    if !finite(&q) {
        return Err(Error::IllConditioned("non-finite square-free part".into()));
    }
    let qchain = if g.deg() >= 1 {
        sturm_chain(&q)?
    } else {
        chain
    };

    if q.eval(&lo) == 0.0 {
        out.roots.push(Root {
            lo,
            hi: lo,
            x: lo,
            multiplicity: 1,
        });
    }
    let mut stack = vec![(lo, hi, variations(&qchain, lo), variations(&qchain, hi))];
    while let Some((a, b, va, vb)) = stack.pop() {
        let n = va.saturating_sub(vb);
        if n == 0 {
            continue;
        }
        let m = 0.5 * (a + b);
        if n == 1 || m <= a || m >= b {
            let (l, h, x) = refine(&q, a, b);
            out.roots.push(Root {
                lo: l,
                hi: h,
                x,
                multiplicity: 1,
            });
            continue;
        }
        let vm = variations(&qchain, m);
        stack.push((m, b, vm, vb));
        stack.push((a, m, va, vm));
    }

    if g.deg() >= 1 {
        // Clustered roots: locate them on the gcd, whose roots are simpler.
        let groots = real_roots(&g, lo, hi)?;
        for r in &mut out.roots {
            let near = 1e-6 * r.x.abs().max(1.0);
            if let Some(gr) = groots
                .roots
                .iter()
                .filter(|gr| (gr.x - r.x).abs() <= near)
                .min_by(|a, b| (a.x - r.x).abs().total_cmp(&(b.x - r.x).abs()))
            {
                r.multiplicity = 1 + gr.multiplicity;
                r.x = gr.x;
                r.lo = r.lo.min(gr.lo);
                r.hi = r.hi.max(gr.hi);
            }
        }
    }
    out.roots.sort_by(|a, b| a.x.total_cmp(&b.x));
    Ok(out)
}

/// Float-path roots with an automatic retry on the exact path.
pub fn real_roots_robust(f: &Poly<f64>, lo: f64, hi: f64) -> Result<RootSet> {
    match real_roots(f, lo, hi) {
        Err(Error::IllConditioned(_))
            if f.coeffs().iter().all(|c| c.is_finite()) && lo.is_finite() && hi.is_finite() =>
        {
            let p = to_rational_poly(f);
            let l = BigRational::from_float(lo).expect("finite");
            let h = BigRational::from_float(hi).expect("finite");
            Ok(real_roots_exact(&p, &l, &h, ROOT_TOL))
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_examples() {
        let r = real_roots(&Poly::new(vec![-1.0, 0.0, 1.0]), -2.0, 2.0).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0].x + 1.0).abs() < 1e-12 && (r.roots[1].x - 1.0).abs() < 1e-12);
        assert!(r.roots.iter().all(|r| r.multiplicity == 1));
        assert!(real_roots(&Poly::new(vec![1.0, 0.0, 1.0]), -10.0, 10.0)
            .unwrap()
            .is_empty());
        assert!(real_roots(&Poly::zero(), 0.0, 1.0).is_err());
    }

    #[test]
    fn fold_quartic_double_root() {
        let f = Poly::new(vec![1.2, 0.0, -0.6, -3.6, 3.0]);
        let r = real_roots(&f, 0.0, 1.2).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.roots[0].x - 1.0).abs() < 1e-9, "{:?}", r);
        assert_eq!(r.roots[0].multiplicity, 2);
    }

    #[test]
    fn triple_and_separated_roots() {
        // (x − 0.3)³ (x + 2)
        let a = Poly::new(vec![-0.3, 1.0]);
        let f = &a.pow(3) * &Poly::new(vec![2.0, 1.0]);
        let r = real_roots(&f, -5.0, 5.0).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0].x + 2.0).abs() < 1e-10);
        assert!((r.roots[1].x - 0.3).abs() < 1e-6);
        assert_eq!(r.roots[1].multiplicity, 3);
    }
}
