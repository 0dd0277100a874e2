use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("coefficient bit-length {bits} exceeds cap {cap}")]
    Overflow { bits: u64, cap: u64 },
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("no threshold: {0}")]
    NoThreshold(String),
    #[error("outside trust region: |sigma - sigma*| = {dist} > {radius}")]
    OutsideTrust { dist: f64, radius: f64 },
    #[error("stiff/stalled at t = {t}: step {h} below floor")]
    Stalled { t: f64, h: f64 },
    #[error("non-transverse section: |f.n| = {0}")]
    NonTransverse(f64),
    #[error("escaped domain")]
    Escaped,
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("no transition in grid")]
    NoTransition,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
