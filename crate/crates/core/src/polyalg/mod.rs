//! Univariate polynomial algebra: arithmetic over generic coefficient rings,
//! pseudo-division, Sylvester resultants and real-root isolation.
//!
//! Two arithmetic paths are provided. The float path works on `Poly<f64>`;
//! the exact path works on `Poly<BigInt>` / `Poly<BigRational>` and nests,
//! so `Poly<Poly<BigInt>>` represents polynomials in two variables.

mod exact;
mod resultant;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use exact::{
    content, gcd_rational, primitive_part, real_roots_exact, sign_at, square_free_decomposition,
    sturm_count_exact, to_integer_poly,
};
pub use resultant::{resultant_exact, resultant_f64, sylvester, DEFAULT_BIT_CAP};
pub use roots::{real_roots, real_roots_robust, Root, RootSet, CLUSTER_TOL, ROOT_TOL};

/// Coefficient ring.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Division that is known to be exact (integral domains) or always defined (fields).
pub trait DivExact: Coeff {
    fn div_exact(&self, d: &Self) -> Self;
    /// Size measure used to cap coefficient growth in exact elimination.
    fn bits(&self) -> u64 {
        0
    }
}

impl DivExact for f64 {
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl DivExact for BigInt {
    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact integer division");
        q
    }
    fn bits(&self) -> u64 {
        BigInt::bits(self)
    }
}

impl DivExact for BigRational {
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn bits(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

/// n · 1 in any ring.
pub fn from_usize<T: Coeff>(mut n: usize) -> T {
    let mut acc = T::zero();
    let mut pow = T::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + pow.clone();
        }
        pow = pow.clone() + pow;
        n >>= 1;
    }
    acc
}

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct Poly<T> {
    c: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant(v: T) -> Self {
        Poly::new(vec![v])
    }

    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    pub fn monomial(v: T, k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = v;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> T {
        self.c.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> T {
        self.c.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for v in self.c.iter().rev() {
            acc = acc * x.clone() + v.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, v)| v.clone() * from_usize::<T>(k))
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::new(self.c.iter().map(|v| v.clone() * s.clone()).collect())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.c.iter().map(f).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Pseudo-division: lc(g)^(deg f − deg g + 1) · f = q·g + r with deg r < deg g.
    pub fn pseudo_div(&self, g: &Self) -> (Self, Self) {
        let dg = g.degree().expect("pseudo_div by zero polynomial");
        let df = match self.degree() {
            Some(d) if d >= dg => d,
            _ => {
                // Exponent deg f − deg g + 1 ≤ 0 is read as 0.
                return (Poly::zero(), self.clone());
            }
        };
        let lc = g.lc();
        let mut r = self.clone();
        let mut q = Poly::zero();
        let steps = df - dg + 1;
        for _ in 0..steps {
            let shift = match r.degree() {
                Some(dr) if dr >= dg => Some(dr - dg),
                _ => None,
            };
            q = q.scale(&lc);
            match shift {
                Some(s) => {
                    let t = Poly::monomial(r.lc(), s);
                    r = &r.scale(&lc) - &(&t * g);
                    q = &q + &t;
                }
                None => r = r.scale(&lc),
            }
        }
        (q, r)
    }
}

impl<T: DivExact> Poly<T> {
    /// Euclidean division; coefficient divisions must be exact (fields, or divisible input).
    pub fn div_rem(&self, g: &Self) -> (Self, Self) {
        let dg = g.degree().expect("division by zero polynomial");
        let lc = g.lc();
        let mut r = self.clone();
        let mut q = vec![T::zero(); self.c.len().saturating_sub(dg).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let k = r.lc().div_exact(&lc);
            let s = dr - dg;
            q[s] = k.clone();
            let mut rc = r.c.clone();
            for (i, gc) in g.c.iter().enumerate() {
                rc[s + i] = rc[s + i].clone() - k.clone() * gc.clone();
            }
            rc.pop();
            r = Poly::new(rc);
        }
        (Poly::new(q), r)
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly { c: vec![T::one()] }
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.c.is_empty() || o.c.is_empty() {
            return Poly::zero();
        }
        let mut c = vec![T::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(c)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            c: self.c.iter().map(|v| -v.clone()).collect(),
        }
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: Poly<T>) -> Poly<T> {
        &self + &o
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: Poly<T>) -> Poly<T> {
        &self - &o
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: Poly<T>) -> Poly<T> {
        &self * &o
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: DivExact> DivExact for Poly<T> {
    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
    fn bits(&self) -> u64 {
        self.c.iter().map(|v| v.bits()).max().unwrap_or(0)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in self.c.iter().enumerate().rev() {
            if v.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{v}")?,
                1 => write!(f, "({v})x")?,
                _ => write!(f, "({v})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.c).finish()
    }
}

impl Poly<f64> {
    /// Max-norm of the coefficients.
    pub fn norm_inf(&self) -> f64 {
        self.c.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Exact rational image of a float polynomial (every finite f64 is a dyadic rational).
pub fn to_rational_poly(p: &Poly<f64>) -> Poly<BigRational> {
    p.map(|&v| BigRational::from_float(v).expect("finite coefficient"))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    // Shift large operands down so the quotient stays representable.
    let n = q.numer();
    let d = q.denom();
    let (nb, db) = (n.bits() as i64, d.bits() as i64);
    let shift_n = (nb - 960).max(0);
    let shift_d = (db - 960).max(0);
    let nf = (n >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
    let df = (d >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
    nf / df * 2f64.powi((shift_n - shift_d) as i32)
}

pub fn bigint_to_f64(n: &BigInt) -> f64 {
    let b = n.bits() as i64;
    let s = (b - 960).max(0);
    (n >> s as usize).to_f64().unwrap_or(f64::NAN) * 2f64.powi(s as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(v: &[i64]) -> Poly<BigInt> {
        Poly::new(v.iter().map(|&k| BigInt::from(k)).collect())
    }

    #[test]
    fn pseudo_division_examples() {
        let (q, r) = zi(&[0, 0, 1]).pseudo_div(&zi(&[1, 1]));
        assert_eq!(q, zi(&[-1, 1]));
        assert_eq!(r, zi(&[1]));
        let (q, r) = zi(&[1, 0, 2]).pseudo_div(&zi(&[0, 3]));
        assert_eq!(q, zi(&[0, 6]));
        assert_eq!(r, zi(&[9]));
        let f = zi(&[3, -1, 4, 1]);
        let (_, r) = f.pseudo_div(&f);
        assert!(r.is_zero());
    }

    #[test]
    fn arithmetic_and_eval() {
        let f = zi(&[1, 2, 3]);
        let g = zi(&[-1, 1]);
        assert_eq!(&f * &g, zi(&[-1, -1, -1, 3]));
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(17));
        assert_eq!(f.derivative(), zi(&[2, 6]));
        assert_eq!(g.pow(3), zi(&[-1, 3, -3, 1]));
        let (q, r) = (&f * &g).div_rem(&g);
        assert_eq!(q, f);
        assert!(r.is_zero());
    }

    #[test]
    fn float_conversion_of_huge_rationals() {
        let big = BigInt::from(3) * BigInt::from(10).pow(400);
        let q = BigRational::new(big.clone(), BigInt::from(10).pow(398));
        assert!((rational_to_f64(&q) - 300.0).abs() < 1e-10);
        let e300 = BigInt::from(10).pow(300);
        assert!((bigint_to_f64(&e300) / 1e300 - 1.0).abs() < 1e-12);
    }
}
