//! Verdicts for the local unfolding at the cusp (κ = 1.2, h = 1/2): the
//! positive equilibria with their types and the closed or homoclinic orbits,
//! row by row.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cycles::{detect_cycles, CycleOptions, Stability};
use super::homoclinic::{homoclinic_bracket, unstable_manifold_fate, HomoclinicBracket, ManifoldFate};
use super::poincare::ReturnOptions;
use crate::bifurcation::{bt_curves, bt_region, exact_fold_alpha, exact_hopf_alpha, BtRegion, DEFAULT_TRUST_RADIUS};
use crate::equilibria::{positive_equilibria, Classification, Equilibrium};
use crate::error::{Error, Result};
use crate::hopf::{focal_values, hopf_critical_near};
use crate::model::ParamSet;

pub const KAPPA: f64 = 1.2;
pub const H: f64 = 0.5;
/// Homoclinic value of α at σ = 0.305.
pub const ALPHA_HL: f64 = 19.6855;
/// Grid spacing of the homoclinic shooting.
pub const HL_STEP: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Row {
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

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Inventory {
    NoEquilibria,
    SaddleNode,
    /// E₁ stable focus or node, E₂ saddle.
    StableAndSaddle,
    /// E₁ stable weak focus, E₂ saddle.
    WeakFocusAndSaddle,
    /// E₁ unstable focus, E₂ saddle.
    UnstableFocusAndSaddle,
    /// E₁ unstable node, E₂ saddle.
    UnstableNodeAndSaddle,
    Cusp,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orbits {
    None,
    StableCycle,
    Homoclinic,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowVerdict {
    pub row: Row,
    pub sigma: f64,
    pub alpha: f64,
    /// Region from the quadratic curve expansions.
    pub curve_region: Option<BtRegion>,
    pub equilibria: Vec<Equilibrium>,
    pub inventory: Inventory,
    pub orbits: Orbits,
    pub expected_inventory: Vec<Inventory>,
    pub expected_orbits: Orbits,
    pub cycles: usize,
    pub l1: Option<f64>,
    pub bracket: Option<(f64, f64)>,
    pub matches: bool,
}

impl Row {
    pub const ALL: [Row; 9] =
        [Row::I1, Row::SNminus, Row::I2, Row::H, Row::I3, Row::HL, Row::I4, Row::SNplus, Row::Cusp];

    pub fn expected(self) -> (Vec<Inventory>, Orbits) {
        use Inventory::*;
        match self {
            Row::I1 => (vec![NoEquilibria], Orbits::None),
            Row::SNminus | Row::SNplus => (vec![SaddleNode], Orbits::None),
            Row::I2 => (vec![StableAndSaddle], Orbits::None),
            Row::H => (vec![WeakFocusAndSaddle], Orbits::None),
            Row::I3 => (vec![UnstableFocusAndSaddle], Orbits::StableCycle),
            Row::HL => (vec![UnstableFocusAndSaddle], Orbits::Homoclinic),
            Row::I4 => (vec![UnstableFocusAndSaddle, UnstableNodeAndSaddle], Orbits::None),
            Row::Cusp => (vec![Cusp], Orbits::None),
        }
    }

    /// Sample (σ, α): the named points for I₁–I₄, HL and the cusp, and the
    /// exact fold or Hopf curve for SN± and H.
    pub fn sample(self) -> Result<(f64, f64)> {
        Ok(match self {
            Row::I1 => (0.35, 17.1),
            Row::I2 => (0.35, 17.5),
            Row::I3 => (0.35, 18.0),
            Row::HL => (0.305, ALPHA_HL),
            Row::I4 => (0.35, 18.6),
            Row::Cusp => (0.3, 20.0),
            Row::SNminus => (0.35, exact_fold_alpha(KAPPA, 0.35, H)?),
            Row::SNplus => (0.25, exact_fold_alpha(KAPPA, 0.25, H)?),
            Row::H => (0.35, exact_hopf_alpha(KAPPA, 0.35, H)?.0),
        })
    }
}

fn inventory(eqs: &[Equilibrium], l1: Option<f64>) -> Inventory {
    use Classification::*;
    match eqs {
        [] => Inventory::NoEquilibria,
        [e] if e.classification == DegenerateFoldCandidate => {
            if e.trace.abs() < 1e-6 {
                Inventory::Cusp
            } else {
                Inventory::SaddleNode
            }
        }
        [e1, e2] if e2.classification == Saddle => match e1.classification {
            StableFocus | StableNode => Inventory::StableAndSaddle,
            CenterOrWeakFocus if l1.is_some_and(|l| l < 0.0) => Inventory::WeakFocusAndSaddle,
            UnstableFocus => Inventory::UnstableFocusAndSaddle,
            UnstableNode => Inventory::UnstableNodeAndSaddle,
            _ => Inventory::Other,
        },
        _ => Inventory::Other,
    }
}

/// The α grid used to bracket the homoclinic value at σ = 0.305.
pub fn hl_grid() -> Vec<f64> {
    (0..=20).map(|i| 19.6 + HL_STEP * i as f64).collect()
}

pub fn row_verdict(row: Row, cycle_opts: &CycleOptions, returns: &ReturnOptions) -> Result<RowVerdict> {
    let (sigma, alpha) = row.sample()?;
    let p = ParamSet::new(alpha, KAPPA, sigma, H)?;
    let bt = bt_curves(1.0, H)?;
    let curve_region = bt_region(&p, &bt, DEFAULT_TRUST_RADIUS).ok();
    let eqs = positive_equilibria(&p)?;
    let weak = eqs.first().filter(|e| e.classification == Classification::CenterOrWeakFocus);
    let l1 = match weak {
        Some(_) => Some(focal_values(&hopf_critical_near(&p)?)?.l1),
        None => None,
    };
    let inv = inventory(&eqs, l1);

    let mut cycles = 0;
    let mut bracket: Option<HomoclinicBracket> = None;
    let orbits = if row == Row::HL {
        bracket = homoclinic_bracket(KAPPA, sigma, H, &hl_grid(), returns).ok();
        match &bracket {
            Some(b) if b.lo <= alpha && alpha <= b.hi && b.hi - b.lo <= 0.05 => Orbits::Homoclinic,
            _ => Orbits::Other,
        }
    } else {
        match eqs.first() {
            Some(e1) if e1.classification.is_focus() && eqs.len() == 2 => {
                let rep = detect_cycles(&p, e1, cycle_opts)?;
                cycles = rep.cycles.len();
                let stable_cycle = cycles == 1 && rep.cycles[0].stability == Stability::Stable;
                // With no cycle, the unstable manifold of the saddle either escapes
                // or winds onto an attracting E₁.
                let attracting = e1.trace < 0.0 || l1.is_some_and(|l| l < 0.0);
                let fate = unstable_manifold_fate(&p, returns)?;
                match (cycles, fate) {
                    (0, ManifoldFate::Escaped) => Orbits::None,
                    (0, ManifoldFate::Trapped { .. }) if attracting => Orbits::None,
                    _ if stable_cycle => Orbits::StableCycle,
                    _ => Orbits::Other,
                }
            }
            _ => Orbits::None,
        }
    };
    let (expected_inventory, expected_orbits) = row.expected();
    let matches = expected_inventory.contains(&inv) && orbits == expected_orbits;
    Ok(RowVerdict {
        row,
        sigma,
        alpha,
        curve_region,
        equilibria: eqs,
        inventory: inv,
        orbits,
        expected_inventory,
        expected_orbits,
        cycles,
        l1,
        bracket: bracket.map(|b| (b.lo, b.hi)),
        matches,
    })
}

/// All nine rows, evaluated in parallel.
pub fn reproduce_table1(cycle_opts: &CycleOptions, returns: &ReturnOptions) -> Result<Vec<RowVerdict>> {
    Row::ALL.par_iter().map(|&r| row_verdict(r, cycle_opts, returns)).collect()
}

/// Fails with the first row whose verdict differs from the table.
pub fn check_table1(verdicts: &[RowVerdict]) -> Result<()> {
    match verdicts.iter().find(|v| !v.matches) {
        Some(v) => Err(Error::Inconclusive(format!(
            "row {:?}: observed {:?}/{:?}, expected {:?}/{:?}",
            v.row, v.inventory, v.orbits, v.expected_inventory, v.expected_orbits
        ))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_matches() {
        let v = reproduce_table1(&CycleOptions::default(), &ReturnOptions::default()).unwrap();
        for r in &v {
            assert!(r.matches, "{:?} {:?} {:?} {:?} {:?}", r.row, r.inventory, r.orbits, r.equilibria, r.bracket);
        }
    }
}
