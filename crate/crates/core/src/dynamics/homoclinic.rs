//! Bracketing the homoclinic loop of the saddle E₂ by shooting along its
//! unstable manifold.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::poincare::{escaped, locate, ReturnOptions};
use super::Stepper;
use crate::equilibria::positive_equilibria;
use crate::error::{Error, Result};
use crate::model::{field3, jacobian3, ParamSet, State};

/// Offset from the saddle along the unstable eigenvector.
pub const SHOOTING_OFFSET: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ManifoldFate {
    /// A branch re-crossed the segment E₁E₂ at fraction `s` < 1: it winds inside the loop.
    Trapped { s: f64, t: f64 },
    /// Neither branch returns between E₁ and E₂.
    Escaped,
    /// Fewer than two positive equilibria.
    NoSaddle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomoclinicBracket {
    pub lo: f64,
    pub hi: f64,
    pub fates: Vec<(f64, ManifoldFate)>,
}

fn unstable_direction(p: &ParamSet, s: State) -> Result<(f64, f64)> {
    let j = jacobian3(p, s);
    let tr = j[0][0] + j[1][1];
    let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    if det >= 0.0 {
        return Err(Error::Precondition("E2 is not a saddle".into()));
    }
    let lam = 0.5 * (tr + (tr * tr - 4.0 * det).sqrt());
    let a = (j[0][1], lam - j[0][0]);
    let b = (lam - j[1][1], j[1][0]);
    let v = if a.0.hypot(a.1) >= b.0.hypot(b.1) { a } else { b };
    let n = v.0.hypot(v.1);
    Ok((v.0 / n, v.1 / n))
}

/// Where the saddle's unstable branches first come back to the line E₁E₂ (after t = 1, on E₂'s side of E₁).
pub fn unstable_manifold_fate(p: &ParamSet, opts: &ReturnOptions) -> Result<ManifoldFate> {
    let eqs = positive_equilibria(p)?;
    if eqs.len() < 2 {
        return Ok(ManifoldFate::NoSaddle);
    }
    let (e1, e2) = (eqs[0].point, eqs[1].point);
    let v = unstable_direction(p, e2)?;
    let d = (e2.x - e1.x, e2.y - e1.y);
    let len = d.0.hypot(d.1);
    let u = (d.0 / len, d.1 / len);
    let n = (-u.1, u.0);
    let f = |s: State| field3(p, s);
    let mut best: Option<(f64, f64)> = None;
    for sgn in [1.0, -1.0] {
        let z0 = State::new(e2.x + sgn * SHOOTING_OFFSET * v.0, e2.y + sgn * SHOOTING_OFFSET * v.1);
        let g = |y: State| n.0 * (y.x - e1.x) + n.1 * (y.y - e1.y);
        let mut st = Stepper::new(&f, z0, opts.t_max, opts.integrator);
        let mut prev = g(z0);
        while let Some(seg) = st.step()? {
            let y1 = seg.end();
            let cur = g(y1);
            if seg.t1 > 1.0 && prev != 0.0 && (cur == 0.0 || cur.signum() != prev.signum()) {
                let (t, y) = locate(&st, &seg, n, e1);
                let proj = u.0 * (y.x - e1.x) + u.1 * (y.y - e1.y);
                if t > 1.0 && proj > 0.0 {
                    let s = proj / len;
                    if s < 1.0 && best.is_none_or(|(b, _)| s < b) {
                        best = Some((s, t));
                    }
                    break;
                }
            }
            prev = cur;
            if escaped(y1, opts) {
                break;
            }
        }
    }
    Ok(match best {
        Some((s, t)) => ManifoldFate::Trapped { s, t },
        None => ManifoldFate::Escaped,
    })
}

/// The first adjacent pair of grid values in α (ascending) with a trapped then an escaped manifold.
pub fn homoclinic_bracket(kappa: f64, sigma: f64, h: f64, alphas: &[f64], opts: &ReturnOptions) -> Result<HomoclinicBracket> {
    let mut grid: Vec<f64> = alphas.to_vec();
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let fates: Vec<(f64, ManifoldFate)> = grid
        .par_iter()
        .map(|&a| {
            let p = ParamSet::new(a, kappa, sigma, h)?;
            Ok((a, unstable_manifold_fate(&p, opts)?))
        })
        .collect::<Result<_>>()?;
    for w in fates.windows(2) {
        if matches!(w[0].1, ManifoldFate::Trapped { .. }) && w[1].1 == ManifoldFate::Escaped {
            return Ok(HomoclinicBracket { lo: w[0].0, hi: w[1].0, fates });
        }
    }
    Err(Error::NoTransition)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_three_traps_and_region_four_escapes() {
        let o = ReturnOptions::default();
        let p3 = ParamSet::new(18.0, 1.2, 0.35, 0.5).unwrap();
        assert!(matches!(unstable_manifold_fate(&p3, &o).unwrap(), ManifoldFate::Trapped { .. }));
        let p4 = ParamSet::new(18.6, 1.2, 0.35, 0.5).unwrap();
        assert_eq!(unstable_manifold_fate(&p4, &o).unwrap(), ManifoldFate::Escaped);
    }
}
