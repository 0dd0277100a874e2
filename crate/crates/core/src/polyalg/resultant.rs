//! Sylvester resultants: fraction-free elimination in the exact path, LU in the float path.

use num_traits::Zero;

use crate::error::{Error, Result};

use super::{DivExact, Poly};

/// Default cap on coefficient bit-length during exact elimination.
pub const DEFAULT_BIT_CAP: u64 = 1 << 20;

/// Sylvester matrix of f (degree m) and g (degree n), size (m+n)².
pub fn sylvester<T: DivExact>(f: &Poly<T>, g: &Poly<T>) -> Vec<Vec<T>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![T::zero(); size];
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![T::zero(); size];
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn check_nonzero<T: DivExact>(f: &Poly<T>, g: &Poly<T>) -> Result<()> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Precondition("resultant of a zero polynomial".into()));
    }
    Ok(())
}

/// Bareiss determinant over an integral domain. Fails when an entry exceeds `bit_cap` bits.
pub fn bareiss_det<T: DivExact>(mut a: Vec<Vec<T>>, bit_cap: u64) -> Result<T> {
    let n = a.len();
    if n == 0 {
        return Ok(T::one());
    }
    let mut sign_neg = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_neg = !sign_neg;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                let v = v.div_exact(&prev);
                let bits = v.bits();
                if bits > bit_cap {
                    return Err(Error::Overflow { bits, cap: bit_cap });
                }
                a[i][j] = v;
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_neg { -d } else { d })
}

/// res(f, g) by fraction-free elimination; works over Z, Q and nested polynomial rings.
pub fn resultant_exact<T: DivExact>(f: &Poly<T>, g: &Poly<T>, bit_cap: u64) -> Result<T> {
    check_nonzero(f, g)?;
    bareiss_det(sylvester(f, g), bit_cap)
}

/// res(f, g) by LU with partial pivoting.
pub fn resultant_f64(f: &Poly<f64>, g: &Poly<f64>) -> Result<f64> {
    check_nonzero(f, g)?;
    let mut a = sylvester(f, g);
    let n = a.len();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .unwrap_or(k);
        if a[p][k] == 0.0 {
            return Ok(0.0);
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k];
        det *= piv;
        for i in k + 1..n {
            let m = a[i][k] / piv;
            if m != 0.0 {
                for j in k..n {
                    a[i][j] -= m * a[k][j];
                }
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn zi(v: &[i64]) -> Poly<BigInt> {
        Poly::new(v.iter().map(|&k| BigInt::from(k)).collect())
    }

    #[test]
    fn small_resultants() {
        assert_eq!(
            resultant_exact(&zi(&[-1, 0, 1]), &zi(&[-1, 1]), DEFAULT_BIT_CAP).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            resultant_exact(&zi(&[1, 0, 1]), &zi(&[-1, 0, 1]), DEFAULT_BIT_CAP).unwrap(),
            BigInt::from(4)
        );
        let f = Poly::new(vec![1.0, 0.0, 1.0]);
        let g = Poly::new(vec![-1.0, 0.0, 1.0]);
        assert!((resultant_f64(&f, &g).unwrap() - 4.0).abs() < 1e-12);
        // res(x − a, x − b) = b − a up to sign convention (−1)^(mn): here a − b with f first.
        let r = resultant_exact(&zi(&[-2, 1]), &zi(&[-5, 1]), DEFAULT_BIT_CAP).unwrap();
        assert_eq!(r, BigInt::from(-3));
    }

    #[test]
    fn bit_cap_reports_overflow() {
        let big = BigInt::from(10).pow(50);
        let f = Poly::new(vec![big.clone(), BigInt::from(3), big.clone()]);
        let g = Poly::new(vec![BigInt::from(7), big.clone(), BigInt::from(1)]);
        assert!(matches!(
            resultant_exact(&f, &g, 64),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn nested_ring_resultant() {
        // f = κ − h, g = κ² − 2 over Z[h]: res = h² − 2.
        let h = Poly::new(vec![BigInt::from(0), BigInt::from(1)]);
        let one = Poly::new(vec![BigInt::from(1)]);
        let f = Poly::new(vec![-h, one.clone()]);
        let g = Poly::new(vec![Poly::new(vec![BigInt::from(-2)]), Poly::zero(), one]);
        let r = resultant_exact(&f, &g, DEFAULT_BIT_CAP).unwrap();
        assert_eq!(r, zi(&[-2, 0, 1]));
    }
}
