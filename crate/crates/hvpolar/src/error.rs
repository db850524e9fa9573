use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor was handed a value that violates a type invariant.
    #[error("{name} must be {constraint}, got {value}")]
    InvalidParam {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },

    /// A function argument left its stated domain.
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid integration interval [{lo}, {hi}]")]
    Interval { lo: f64, hi: f64 },

    /// Integrands must be finite everywhere on the interval.
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFiniteIntegrand { x: f64 },

    #[error("grid error: {0}")]
    Grid(String),

    #[error("fit problem error: {0}")]
    Fit(String),

    #[error("kernel sampling table build failed: {0}")]
    KernelTable(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
