//! Exact path: integer/rational polynomials, primitive remainder sequences,
//! square-free decomposition and Sturm isolation with rational endpoints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::roots::{Root, RootSet};
use super::{rational_to_f64, Poly};

/// gcd of the coefficients, nonnegative.
pub fn content(p: &Poly<BigInt>) -> BigInt {
    p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// p / content(p), with positive leading coefficient.
pub fn primitive_part(p: &Poly<BigInt>) -> Poly<BigInt> {
    if p.is_zero() {
        return p.clone();
    }
    let mut g = content(p);
    if p.lc().is_negative() {
        g = -g;
    }
    p.map(|c| c / &g)
}

/// Clears denominators: returns the primitive integer polynomial with the same roots.
pub fn to_integer_poly(p: &Poly<BigRational>) -> Poly<BigInt> {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    primitive_part(&p.map(|c| (c * BigRational::from_integer(l.clone())).to_integer()))
}

fn gcd_int(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (_, r) = a.pseudo_div(&b);
        a = b;
        b = primitive_part(&r);
    }
    primitive_part(&a)
}

/// Monic gcd over Q.
pub fn gcd_rational(a: &Poly<BigRational>, b: &Poly<BigRational>) -> Poly<BigRational> {
    if a.is_zero() && b.is_zero() {
        return Poly::zero();
    }
    let g = gcd_int(&to_integer_poly(a), &to_integer_poly(b));
    let lc = BigRational::from_integer(g.lc());
    g.map(|c| BigRational::from_integer(c.clone()) / &lc)
}

/// Yun's algorithm. Returns (factor, multiplicity) with primitive integer factors of positive degree.
pub fn square_free_decomposition(p: &Poly<BigRational>) -> Vec<(Poly<BigInt>, u32)> {
    let mut out = Vec::new();
    if p.deg() < 1 {
        return out;
    }
    let df = p.derivative();
    let a0 = gcd_rational(p, &df);
    let mut b = p.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.deg() > 0 {
        let a = gcd_rational(&b, &d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.deg() > 0 {
            out.push((to_integer_poly(&a), i));
        }
        i += 1;
    }
    out
}

/// Sign of an integer polynomial at a rational point.
pub fn sign_at(p: &Poly<BigInt>, x: &BigRational) -> i32 {
    // Homogenized Horner: Σ c_k n^k d^(deg−k), d > 0.
    let (n, d) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.coeffs().iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

fn sturm_chain(p: &Poly<BigInt>) -> Vec<Poly<BigInt>> {
    let mut chain = vec![primitive_part(p)];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(primitive_part(&d));
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let (_, r) = a.pseudo_div(b);
        if r.is_zero() {
            break;
        }
        // prem = lc^(δ+1)·rem; the Sturm remainder is −rem, so correct the sign of lc^(δ+1).
        let delta = (a.deg() - b.deg()) as u32;
        let flip = b.lc().is_negative() && (delta + 1) % 2 == 1;
        let g = content(&r);
        let mut next = r.map(|c| c / &g);
        if !flip {
            next = -next;
        }
        chain.push(next);
    }
    chain
}

fn variations(chain: &[Poly<BigInt>], x: &BigRational) -> usize {
    let mut last = 0;
    let mut v = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Number of distinct real roots in (lo, hi].
pub fn sturm_count_exact(p: &Poly<BigRational>, lo: &BigRational, hi: &BigRational) -> usize {
    let f = to_integer_poly(p);
    let chain = sturm_chain(&f);
    variations(&chain, lo).saturating_sub(variations(&chain, hi))
}

fn width_ok(lo: &BigRational, hi: &BigRational, tol: f64) -> bool {
    let w = rational_to_f64(&(hi - lo));
    let m = rational_to_f64(&((lo + hi) / BigRational::from_integer(2.into()))).abs();
    w <= tol * m.max(1.0)
}

/// All distinct real roots in the closed interval [lo, hi], refined to `tol`
/// (absolute for |x| ≤ 1, relative beyond), with exact multiplicities.
pub fn real_roots_exact(
    p: &Poly<BigRational>,
    lo: &BigRational,
    hi: &BigRational,
    tol: f64,
) -> RootSet {
    let mut out = RootSet::default();
    if p.deg() < 1 || lo > hi {
        return out;
    }
    let factors = square_free_decomposition(p);
    let sqf = factors
        .iter()
        .fold(Poly::<BigInt>::one(), |acc, (f, _)| &acc * f);
    let chain = sturm_chain(&sqf);
    let two = BigRational::from_integer(2.into());
    let mut exact_hits: Vec<BigRational> = Vec::new();
    let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();

    if sign_at(&sqf, lo) == 0 {
        exact_hits.push(lo.clone());
    }
    let mut stack = vec![(
        lo.clone(),
        hi.clone(),
        variations(&chain, lo),
        variations(&chain, hi),
    )];
    while let Some((a, b, va, vb)) = stack.pop() {
        let n = va.saturating_sub(vb);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if sign_at(&sqf, &b) == 0 {
                exact_hits.push(b);
            } else {
                isolated.push((a, b));
            }
            continue;
        }
        let m = (&a + &b) / &two;
        let vm = variations(&chain, &m);
        stack.push((m.clone(), b, vm, vb));
        stack.push((a, m, va, vm));
    }

    let factor_chains: Vec<(Vec<Poly<BigInt>>, u32)> =
        factors.iter().map(|(f, k)| (sturm_chain(f), *k)).collect();
    let mult_in = |a: &BigRational, b: &BigRational| -> u32 {
        factor_chains
            .iter()
            .find(|(ch, _)| variations(ch, a) > variations(ch, b))
            .map(|&(_, k)| k)
            .unwrap_or(1)
    };
    let mult_at = |x: &BigRational| -> u32 {
        factors
            .iter()
            .find(|(f, _)| sign_at(f, x) == 0)
            .map(|&(_, k)| k)
            .unwrap_or(1)
    };
    for x in exact_hits {
        let v = rational_to_f64(&x);
        out.roots.push(Root {
            lo: v,
            hi: v,
            x: v,
            multiplicity: mult_at(&x),
        });
    }
    for (a0, b0) in isolated {
        // One root in (a0, b0] with b0 not a root; a0 may be a root (the domain end).
        let mult = mult_in(&a0, &b0);
        let (mut a, mut b) = (a0, b0);
        let sb = sign_at(&sqf, &b);
        let mut exact = None;
        while !width_ok(&a, &b, tol) {
            let m = (&a + &b) / &two;
            let sm = sign_at(&sqf, &m);
            if sm == 0 {
                exact = Some(m);
                break;
            }
            if sm == sb {
                b = m;
            } else {
                a = m;
            }
        }
        let root = match exact {
            Some(x) => {
                let v = rational_to_f64(&x);
                Root {
                    lo: v,
                    hi: v,
                    x: v,
                    multiplicity: mult,
                }
            }
            None => Root {
                lo: rational_to_f64(&a),
                hi: rational_to_f64(&b),
                x: rational_to_f64(&((&a + &b) / &two)),
                multiplicity: mult,
            },
        };
        out.roots.push(root);
    }
    out.roots.sort_by(|a, b| a.x.total_cmp(&b.x));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Poly<BigRational> {
        Poly::new(
            v.iter()
                .map(|&k| BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sign_at_rational_point() {
        let p = to_integer_poly(&q(&[-1, 0, 4])); // 4x² − 1
        assert_eq!(sign_at(&p, &r(1, 2)), 0);
        assert_eq!(sign_at(&p, &r(1, 3)), -1);
        assert_eq!(sign_at(&p, &r(-2, 3)), 1);
    }

    #[test]
    fn yun_decomposition() {
        // (x−1)²(x+2)³(x²+1)
        let a = q(&[-1, 1]);
        let b = q(&[2, 1]);
        let c = q(&[1, 0, 1]);
        let p = &(&a.pow(2) * &b.pow(3)) * &c;
        let dec = square_free_decomposition(&p);
        let got: Vec<(isize, u32)> = dec.iter().map(|(f, k)| (f.deg(), *k)).collect();
        assert_eq!(got, vec![(2, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn exact_roots_with_rational_and_double_roots() {
        // (2x−1)²(x²−2) on [−2, 2]
        let p = &q(&[-1, 2]).pow(2) * &q(&[-2, 0, 1]);
        let rs = real_roots_exact(&p, &r(-2, 1), &r(2, 1), 1e-14);
        let xs: Vec<f64> = rs.roots.iter().map(|r| r.x).collect();
        assert_eq!(xs.len(), 3);
        assert!((xs[0] + 2f64.sqrt()).abs() < 1e-13);
        assert_eq!(xs[1], 0.5);
        assert_eq!(rs.roots[1].multiplicity, 2);
        assert!((xs[2] - 2f64.sqrt()).abs() < 1e-13);
        assert_eq!(sturm_count_exact(&p, &r(0, 1), &r(1, 1)), 1);
    }

    #[test]
    fn gcd_over_q() {
        let p = &q(&[-1, 1]) * &q(&[3, 0, 1]);
        let g = gcd_rational(&p, &(&q(&[-1, 1]) * &q(&[5, 2])));
        assert_eq!(g, q(&[-1, 1]));
    }
}
