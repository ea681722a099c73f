use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes identically under substitution")]
    DenominatorVanishes,
    #[error("limit diverges: positive degree in the limit variable")]
    LimitDiverges,
    #[error("oscillator registries overlap: {0}")]
    RegistryOverlap(String),
    #[error("localization violated: {0}")]
    LocalizationViolated(String),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("regularity violated: entry ({0},{1}) has a pole in z: {2}")]
    RegularityViolated(usize, usize, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
