use thiserror::Error;

/// Errors produced by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("q-number requested for a Q-deformed (QBase) parameter")]
    WrongBracket,

    #[error("spectrum for regime {expected} requested with a different deformation regime")]
    WrongRegime { expected: &'static str },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("truncation order {0} outside 2..=12")]
    TruncationOrder(u32),

    #[error("power x^{0} is not an even power in 2..=12")]
    InvalidPower(u32),

    #[error("level {n} lies outside the first monotone branch (tau*(n+1/2) = {phase} > pi/2)")]
    OutsideMonotoneBranch { n: u32, phase: f64 },

    #[error(
        "N*tau = {n_tau} violates the feasibility conditions sin(N tau) > 0, 23cos^2(N tau) > 6"
    )]
    Infeasible { n_tau: f64 },

    #[error("recurrence matrix has a non-positive off-diagonal product {product} at row {row}")]
    NonRealSpectrum { row: usize, product: f64 },

    #[error("polynomial has a complex root pair with imaginary part {imag}")]
    ComplexRoots { imag: f64 },

    #[error("no sign change of the target function on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error(
        "level {level}: eigenvector tail mass {mass:e} exceeds {limit:e}; \
         domain too small, try half-width {suggested_half_width}"
    )]
    DomainTooSmall {
        level: usize,
        mass: f64,
        limit: f64,
        suggested_half_width: f64,
    },

    #[error("potential is not confining (leading coefficient must be positive)")]
    UnboundedBelow,

    #[error("grid is not symmetric about x = 0")]
    AsymmetricGrid,

    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),

    #[error("tabulated potential: {0}")]
    InvalidTable(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn require(
    cond: bool,
    name: &'static str,
    value: f64,
    reason: &'static str,
) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason,
        })
    }
}
