//! Closed-form coefficient polynomials, stored as sparse integer terms.
//!
//! Each expression is a ratio of two integer polynomials in a fixed variable
//! list. Terms are compiled on first use and can be evaluated in f64 or exactly.

mod tables;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::polyalg::Poly;

pub use tables::*;

/// One term: integer coefficient (decimal) and exponent per variable.
pub struct T(pub &'static str, pub &'static [u8]);

struct Term {
    coef: BigInt,
    coef_f: f64,
    exps: &'static [u8],
}

struct Compiled {
    num: Vec<Term>,
    den: Vec<Term>,
    max_exp: Vec<usize>,
}

pub struct Expr {
    name: &'static str,
    nvars: usize,
    num: &'static [T],
    den: &'static [T],
    cache: OnceLock<Compiled>,
}

fn compile_terms(ts: &'static [T]) -> Vec<Term> {
    ts.iter()
        .map(|t| {
            let coef: BigInt = t.0.parse().expect("integer coefficient");
            let coef_f = coef.to_f64().unwrap_or(f64::NAN);
            Term {
                coef,
                coef_f,
                exps: t.1,
            }
        })
        .collect()
}

impl Expr {
    pub const fn new(
        name: &'static str,
        nvars: usize,
        num: &'static [T],
        den: &'static [T],
    ) -> Self {
        Expr {
            name,
            nvars,
            num,
            den,
            cache: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.num.len()
    }

    fn compiled(&self) -> &Compiled {
        self.cache.get_or_init(|| {
            let num = compile_terms(self.num);
            let den = compile_terms(self.den);
            let mut max_exp = vec![0usize; self.nvars];
            for t in num.iter().chain(den.iter()) {
                for (k, &e) in t.exps.iter().enumerate() {
                    max_exp[k] = max_exp[k].max(e as usize);
                }
            }
            Compiled { num, den, max_exp }
        })
    }

    fn powers_f64(&self, v: &[f64]) -> Vec<Vec<f64>> {
        assert_eq!(
            v.len(),
            self.nvars,
            "{}: wrong number of variables",
            self.name
        );
        let c = self.compiled();
        v.iter()
            .zip(&c.max_exp)
            .map(|(&x, &m)| {
                let mut p = Vec::with_capacity(m + 1);
                let mut acc = 1.0;
                for _ in 0..=m {
                    p.push(acc);
                    acc *= x;
                }
                p
            })
            .collect()
    }

    fn sum_f64(terms: &[Term], pw: &[Vec<f64>]) -> f64 {
        terms
            .iter()
            .map(|t| {
                t.exps
                    .iter()
                    .enumerate()
                    .fold(t.coef_f, |a, (k, &e)| a * pw[k][e as usize])
            })
            .sum()
    }

    pub fn numerator_f64(&self, v: &[f64]) -> f64 {
        let pw = self.powers_f64(v);
        Self::sum_f64(&self.compiled().num, &pw)
    }

    pub fn denominator_f64(&self, v: &[f64]) -> f64 {
        let pw = self.powers_f64(v);
        Self::sum_f64(&self.compiled().den, &pw)
    }

    pub fn eval_f64(&self, v: &[f64]) -> f64 {
        let pw = self.powers_f64(v);
        let c = self.compiled();
        Self::sum_f64(&c.num, &pw) / Self::sum_f64(&c.den, &pw)
    }

    fn sum_exact(terms: &[Term], pw: &[Vec<BigRational>]) -> BigRational {
        terms.iter().fold(BigRational::zero(), |acc, t| {
            let mut m = BigRational::from_integer(t.coef.clone());
            for (k, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    m *= &pw[k][e as usize];
                }
            }
            acc + m
        })
    }

    fn powers_exact(&self, v: &[BigRational]) -> Vec<Vec<BigRational>> {
        assert_eq!(
            v.len(),
            self.nvars,
            "{}: wrong number of variables",
            self.name
        );
        let c = self.compiled();
        v.iter()
            .zip(&c.max_exp)
            .map(|(x, &m)| {
                let mut p = Vec::with_capacity(m + 1);
                let mut acc = BigRational::one();
                for _ in 0..=m {
                    p.push(acc.clone());
                    acc *= x;
                }
                p
            })
            .collect()
    }

    pub fn numerator_exact(&self, v: &[BigRational]) -> BigRational {
        Self::sum_exact(&self.compiled().num, &self.powers_exact(v))
    }

    pub fn eval_exact(&self, v: &[BigRational]) -> BigRational {
        let pw = self.powers_exact(v);
        let c = self.compiled();
        Self::sum_exact(&c.num, &pw) / Self::sum_exact(&c.den, &pw)
    }

    /// Numerator as a polynomial in `outer` with coefficients polynomial in `inner`;
    /// every other variable is fixed to the given rational value.
    pub fn numerator_bivariate(
        &self,
        outer: usize,
        inner: usize,
        fixed: &[BigRational],
    ) -> Poly<Poly<BigRational>> {
        assert_eq!(fixed.len(), self.nvars);
        let c = self.compiled();
        let pw = self.powers_exact(fixed);
        let mut grid: Vec<Vec<BigRational>> =
            vec![vec![BigRational::zero(); c.max_exp[inner] + 1]; c.max_exp[outer] + 1];
        for t in &c.num {
            let mut m = BigRational::from_integer(t.coef.clone());
            for (k, &e) in t.exps.iter().enumerate() {
                if k != outer && k != inner && e > 0 {
                    m *= &pw[k][e as usize];
                }
            }
            grid[t.exps[outer] as usize][t.exps[inner] as usize] += m;
        }
        Poly::new(grid.into_iter().map(Poly::new).collect())
    }

    /// Numerator as a univariate polynomial in `var`, other variables fixed.
    pub fn numerator_univariate(&self, var: usize, fixed: &[BigRational]) -> Poly<BigRational> {
        let c = self.compiled();
        let pw = self.powers_exact(fixed);
        let mut coeffs = vec![BigRational::zero(); c.max_exp[var] + 1];
        for t in &c.num {
            let mut m = BigRational::from_integer(t.coef.clone());
            for (k, &e) in t.exps.iter().enumerate() {
                if k != var && e > 0 {
                    m *= &pw[k][e as usize];
                }
            }
            coeffs[t.exps[var] as usize] += m;
        }
        Poly::new(coeffs)
    }

    /// The denominator when it is a constant.
    pub fn constant_denominator(&self) -> Option<BigRational> {
        let c = self.compiled();
        let constant = c.den.iter().all(|t| t.exps.iter().all(|&e| e == 0));
        constant.then(|| c.den.iter().fold(BigRational::zero(), |acc, t| acc + BigRational::from_integer(t.coef.clone())))
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        let c = self.compiled();
        c.den.len() == 1 && c.den[0].coef.is_one() && c.den[0].exps.iter().all(|&e| e == 0)
    }
}

/// Exact rational from an f64 (every finite double is dyadic).
pub fn q(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite value")
}

/// Rational a/b.
pub fn qr(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// The printed witness resultant as (constant, [(multiplicity, factor)]).
pub fn witness_resultant_factors() -> (BigRational, Vec<(u32, Poly<BigInt>)>) {
    let c = BigRational::new(
        R1_CONST.0.parse().expect("int"),
        R1_CONST.1.parse().expect("int"),
    );
    let fs = R1_FACTORS
        .iter()
        .map(|(m, cs)| {
            (
                *m,
                Poly::new(
                    cs.iter()
                        .map(|s| s.parse::<BigInt>().expect("int"))
                        .collect(),
                ),
            )
        })
        .collect();
    (c, fs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bt_curve_coefficients_at_unit_fold() {
        let v = [qr(1, 1), qr(1, 2)];
        assert_eq!(F11.eval_exact(&v), qr(-200, 3));
        assert_eq!(F12.eval_exact(&v), qr(2000, 9));
        assert!((F11.eval_f64(&[1.0, 0.5]) + 200.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn witness_factor_degrees() {
        let (c, fs) = witness_resultant_factors();
        assert!(c < BigRational::zero());
        let degs: Vec<isize> = fs.iter().map(|(_, f)| f.deg()).collect();
        assert!(degs.contains(&25));
        let total: isize = fs.iter().map(|(m, f)| *m as isize * f.deg()).sum();
        assert!(total > 25);
    }
}
