//! Focal values of a planar focus.
//!
//! For u' = −v + P(u, v), v' = u + Q(u, v) write z = u + iv, so that
//! z' = iz + R(z, z̄) with R = P + iQ. A formal integral
//! Φ = zz̄ + Σ φ_jl z^j z̄^l is built degree by degree; the non-resonant
//! coefficients are chosen to cancel dΦ/dt, and the resonant remainder at
//! degree 2k+2 is 2·L_k (zz̄)^(k+1). L_1 is the usual first Lyapunov
//! coefficient of the normalized system.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Zero;

use crate::model::{jacobian3, Mat2, ParamSet, State};
use crate::polyalg::Coeff;

/// Dense polynomial in two variables; `c[i][j]` multiplies a^i b^j.
#[derive(Debug, Clone, PartialEq)]
pub struct Bipoly<T> {
    pub c: Vec<Vec<T>>,
}

impl<T: Coeff> Bipoly<T> {
    pub fn zero(deg: usize) -> Self {
        Bipoly {
            c: vec![vec![T::zero(); deg + 1]; deg + 1],
        }
    }

    fn deg_cap(&self) -> usize {
        self.c.len() - 1
    }

    pub fn constant(v: T, deg: usize) -> Self {
        let mut p = Self::zero(deg);
        p.c[0][0] = v;
        p
    }

    /// c0 + ca·a + cb·b.
    pub fn affine(c0: T, ca: T, cb: T, deg: usize) -> Self {
        let mut p = Self::constant(c0, deg);
        p.c[1][0] = ca;
        p.c[0][1] = cb;
        p
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.c
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for i in 0..r.c.len() {
            for j in 0..r.c.len() {
                r.c[i][j] = r.c[i][j].clone() + o.get(i, j);
            }
        }
        r
    }

    pub fn scale(&self, s: &T) -> Self {
        Bipoly {
            c: self
                .c
                .iter()
                .map(|r| r.iter().map(|v| v.clone() * s.clone()).collect())
                .collect(),
        }
    }

    /// Product truncated to total degree `deg_cap`.
    pub fn mul(&self, o: &Self) -> Self {
        let d = self.deg_cap();
        let mut r = Self::zero(d);
        for i1 in 0..=d {
            for j1 in 0..=d - i1 {
                let a = &self.c[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=d - i1 - j1 {
                    for j2 in 0..=d - i1 - j1 - i2 {
                        let b = o.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        r.c[i1 + i2][j1 + j2] = r.c[i1 + i2][j1 + j2].clone() + a.clone() * b;
                    }
                }
            }
        }
        r
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(T::one(), self.deg_cap());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Homogeneous part of degree k as (i, j, coefficient).
    pub fn homogeneous(&self, k: usize) -> Vec<(usize, usize, T)> {
        (0..=k)
            .filter(|&i| i < self.c.len() && k - i < self.c.len())
            .map(|i| (i, k - i, self.c[i][k - i].clone()))
            .collect()
    }
}

/// Monomials (coefficient, x-power, y-power) of the quartic field.
pub fn field3_monomials(p: &ParamSet) -> [Vec<(f64, usize, usize)>; 2] {
    let ParamSet {
        alpha,
        kappa,
        sigma,
        h,
    } = *p;
    let fx = vec![
        (sigma * kappa, 1, 0),
        (-sigma, 2, 0),
        (sigma * kappa * h, 3, 0),
        (-sigma * h, 4, 0),
        (sigma * kappa * h * alpha, 3, 1),
        (-sigma * h * alpha, 4, 1),
        (-kappa, 2, 1),
        (-kappa * alpha, 2, 2),
    ];
    let fy = vec![
        (kappa * (1.0 - h), 2, 1),
        (kappa * (1.0 - h) * alpha, 2, 2),
        (-kappa, 0, 1),
    ];
    [fx, fy]
}

/// Substitute x = X(u, v), y = Y(u, v) into a monomial list.
fn compose(mons: &[(f64, usize, usize)], x: &Bipoly<f64>, y: &Bipoly<f64>) -> Bipoly<f64> {
    let d = x.deg_cap();
    let mut xp = vec![Bipoly::constant(1.0, d)];
    let mut yp = vec![Bipoly::constant(1.0, d)];
    for k in 1..=4 {
        xp.push(xp[k - 1].mul(x));
        yp.push(yp[k - 1].mul(y));
    }
    let mut out = Bipoly::zero(d);
    for &(c, a, b) in mons {
        out = out.add(&xp[a].mul(&yp[b]).scale(&c));
    }
    out
}

/// Nonlinear part of a planar system in the normal linear form u' = −v + P, v' = u + Q.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSystem {
    pub p: Bipoly<f64>,
    pub q: Bipoly<f64>,
    /// Linear part as computed (ideally [[0, −1], [1, 0]]).
    pub linear: Mat2,
}

impl NormalizedSystem {
    pub fn from_coefficients(a: &[(usize, usize, f64)], b: &[(usize, usize, f64)]) -> Self {
        let mut p = Bipoly::zero(5);
        let mut q = Bipoly::zero(5);
        for &(i, j, v) in a {
            p.c[i][j] = v;
        }
        for &(i, j, v) in b {
            q.c[i][j] = v;
        }
        NormalizedSystem {
            p,
            q,
            linear: [[0.0, -1.0], [1.0, 0.0]],
        }
    }

    /// Largest deviation of the linear part from the normal form.
    pub fn linear_defect(&self) -> f64 {
        let l = self.linear;
        [l[0][0], l[0][1] + 1.0, l[1][0] - 1.0, l[1][1]]
            .iter()
            .fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Affine change of the quartic field at E₁ into the normal linear form, with
/// x = x₁ + c₁u − c₂v, y = y₁ + v/ω and time τ = ωt.
pub fn normalize_direct(p: &ParamSet, x1: f64, y1: f64, omega: f64) -> NormalizedSystem {
    let ParamSet { kappa, h, .. } = *p;
    let hm = h - 1.0;
    let num = (2.0 * h - 1.0) * kappa - 2.0 * h * x1;
    let c1 = num / (2.0 * kappa * (kappa - x1) * (hm * x1 * x1 + 1.0) * hm);
    let c2 = num / (2.0 * omega * (kappa - x1) * hm);
    let xs = Bipoly::affine(x1, c1, -c2, 5);
    let ys = Bipoly::affine(y1, 0.0, 1.0 / omega, 5);
    let [mx, my] = field3_monomials(p);
    let fx = compose(&mx, &xs, &ys);
    let fy = compose(&my, &xs, &ys);
    // du/dτ = (fx + c₂ω·fy)/(c₁ω), dv/dτ = fy.
    let u_dot = fx
        .add(&fy.scale(&(c2 * omega)))
        .scale(&(1.0 / (c1 * omega)));
    let v_dot = fy;
    let linear = [
        [u_dot.get(1, 0), u_dot.get(0, 1)],
        [v_dot.get(1, 0), v_dot.get(0, 1)],
    ];
    let mut pp = u_dot;
    let mut qq = v_dot;
    for b in [&mut pp, &mut qq] {
        b.c[0][0] = 0.0;
        b.c[1][0] = 0.0;
        b.c[0][1] = 0.0;
    }
    NormalizedSystem {
        p: pp,
        q: qq,
        linear,
    }
}

fn binomials(n: usize) -> Vec<Vec<f64>> {
    let mut b = vec![vec![0.0; n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = 1.0;
        for j in 1..=i {
            b[i][j] = b[i - 1][j - 1] + if j < i { b[i - 1][j] } else { 0.0 };
        }
    }
    b
}

/// R(z, z̄) = P + iQ with u = (z + z̄)/2, v = (z − z̄)/(2i); map (j, l) → coefficient of z^j z̄^l.
fn complexify(sys: &NormalizedSystem) -> BTreeMap<(usize, usize), Complex64> {
    let d = sys.p.c.len() - 1;
    let bin = binomials(d);
    let i = Complex64::new(0.0, 1.0);
    let mut out: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
    for a in 0..=d {
        for b in 0..=d - a {
            let coef = Complex64::new(sys.p.get(a, b), sys.q.get(a, b));
            if coef.is_zero() || a + b < 2 {
                continue;
            }
            // ((z+z̄)/2)^a · (−i(z−z̄)/2)^b
            let pre = coef * (-i).powu(b as u32) / 2f64.powi((a + b) as i32);
            for s in 0..=a {
                for t in 0..=b {
                    let sign = if (b - t) % 2 == 1 { -1.0 } else { 1.0 };
                    let w = pre * bin[a][s] * bin[b][t] * sign;
                    *out.entry((s + t, a - s + b - t))
                        .or_insert(Complex64::zero()) += w;
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// L_1 … L_k of the normalized system.
pub fn lyapunov_constants(sys: &NormalizedSystem, k: usize) -> Vec<f64> {
    let r = complexify(sys);
    let rbar: BTreeMap<(usize, usize), Complex64> =
        r.iter().map(|(&(j, l), c)| ((l, j), c.conj())).collect();
    let i = Complex64::new(0.0, 1.0);
    let mut phi: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
    phi.insert((1, 1), Complex64::new(1.0, 0.0));
    let mut out = Vec::new();
    for deg in 3..=2 * k + 2 {
        let mut g: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
        for (&(j, l), c) in &phi {
            for (&(p, q), rv) in &r {
                if j > 0 && j + l - 1 + p + q == deg {
                    *g.entry((j - 1 + p, l + q)).or_insert(Complex64::zero()) +=
                        *c * *rv * j as f64;
                }
            }
            for (&(p, q), rv) in &rbar {
                if l > 0 && j + l - 1 + p + q == deg {
                    *g.entry((j + p, l - 1 + q)).or_insert(Complex64::zero()) +=
                        *c * *rv * l as f64;
                }
            }
        }
        let mut resonant = Complex64::zero();
        for (&(j, l), v) in &g {
            if j != l {
                phi.insert((j, l), -*v / (i * (j as f64 - l as f64)));
            } else {
                resonant = *v;
            }
        }
        if deg % 2 == 0 {
            out.push(resonant.re / 2.0);
        }
    }
    out
}

/// First Lyapunov coefficient of the quartic field at a Hopf point, by the
/// projection formula with the field's own multilinear forms.
pub fn first_lyapunov_projection(p: &ParamSet, e: State) -> f64 {
    let a = jacobian3(p, e);
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    let omega = det.sqrt();
    let [mx, my] = field3_monomials(p);
    let xs = Bipoly::affine(e.x, 1.0, 0.0, 3);
    let ys = Bipoly::affine(e.y, 0.0, 1.0, 3);
    let comps = [compose(&mx, &xs, &ys), compose(&my, &xs, &ys)];
    let c = Complex64::new;
    let i = c(0.0, 1.0);
    let bform = |u: [Complex64; 2], w: [Complex64; 2]| -> [Complex64; 2] {
        let mut out = [Complex64::zero(); 2];
        for (k, f) in comps.iter().enumerate() {
            out[k] = u[0] * w[0] * (2.0 * f.get(2, 0))
                + (u[0] * w[1] + u[1] * w[0]) * f.get(1, 1)
                + u[1] * w[1] * (2.0 * f.get(0, 2));
        }
        out
    };
    let cform = |u: [Complex64; 2], w: [Complex64; 2], s: [Complex64; 2]| -> [Complex64; 2] {
        let mut out = [Complex64::zero(); 2];
        for (k, f) in comps.iter().enumerate() {
            let (f30, f21, f12, f03) = (
                6.0 * f.get(3, 0),
                2.0 * f.get(2, 1),
                2.0 * f.get(1, 2),
                6.0 * f.get(0, 3),
            );
            out[k] = u[0] * w[0] * s[0] * f30
                + (u[0] * w[0] * s[1] + u[0] * w[1] * s[0] + u[1] * w[0] * s[0]) * f21
                + (u[0] * w[1] * s[1] + u[1] * w[0] * s[1] + u[1] * w[1] * s[0]) * f12
                + u[1] * w[1] * s[1] * f03;
        }
        out
    };
    let q = [c(a[0][1], 0.0), i * omega - a[0][0]];
    let mut pv = [c(a[1][0], 0.0), -(c(a[0][0], 0.0) + i * omega)];
    let s = pv[0].conj() * q[0] + pv[1].conj() * q[1];
    pv = [pv[0] / s.conj(), pv[1] / s.conj()];
    let dot = |p: [Complex64; 2], v: [Complex64; 2]| p[0].conj() * v[0] + p[1].conj() * v[1];
    let solve = |m: [[Complex64; 2]; 2], r: [Complex64; 2]| -> [Complex64; 2] {
        let d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        [
            (r[0] * m[1][1] - m[0][1] * r[1]) / d,
            (m[0][0] * r[1] - m[1][0] * r[0]) / d,
        ]
    };
    let am = [
        [c(a[0][0], 0.0), c(a[0][1], 0.0)],
        [c(a[1][0], 0.0), c(a[1][1], 0.0)],
    ];
    let qb = [q[0].conj(), q[1].conj()];
    let b_qqb = bform(q, qb);
    let ainv = solve(am, b_qqb);
    let b_qq = bform(q, q);
    let shifted = [
        [i * 2.0 * omega - am[0][0], -am[0][1]],
        [-am[1][0], i * 2.0 * omega - am[1][1]],
    ];
    let r2 = solve(shifted, b_qq);
    let val = dot(pv, cform(q, q, qb)) - dot(pv, bform(q, ainv)) * 2.0 + dot(pv, bform(qb, r2));
    val.re / (2.0 * omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_cubic_focus() {
        // u' = −v − u(u² + v²), v' = u − v(u² + v²): L1 = −1, higher constants vanish.
        let sys = NormalizedSystem::from_coefficients(
            &[(3, 0, -1.0), (1, 2, -1.0)],
            &[(2, 1, -1.0), (0, 3, -1.0)],
        );
        let l = lyapunov_constants(&sys, 3);
        assert!((l[0] + 1.0).abs() < 1e-14, "{l:?}");
        assert!(l[1].abs() < 1e-14 && l[2].abs() < 1e-14);
    }

    #[test]
    fn quadratic_system_first_constant() {
        // Standard formula for u' = −v + f, v' = u + g with quadratic f, g:
        // a = [f_uv(f_uu + f_vv) − g_uv(g_uu + g_vv) − f_uu g_uu + f_vv g_vv]/16.
        let (a20, a11, a02, b20, b11, b02) = (0.3, -0.7, 0.2, 0.5, 0.4, -0.9);
        let sys = NormalizedSystem::from_coefficients(
            &[(2, 0, a20), (1, 1, a11), (0, 2, a02)],
            &[(2, 0, b20), (1, 1, b11), (0, 2, b02)],
        );
        let (fuu, fuv, fvv) = (2.0 * a20, a11, 2.0 * a02);
        let (guu, guv, gvv) = (2.0 * b20, b11, 2.0 * b02);
        let want = (fuv * (fuu + fvv) - guv * (guu + gvv) - fuu * guu + fvv * gvv) / 16.0;
        let got = lyapunov_constants(&sys, 1)[0];
        assert!((got - want).abs() < 1e-14, "{got} vs {want}");
    }
}
