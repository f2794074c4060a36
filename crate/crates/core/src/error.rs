use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("gamma function pole at z = {re} + {im}i")]
    GammaPole { re: f64, im: f64 },

    #[error("zeta pole at s = 1")]
    ZetaPole,

    #[error("argument outside supported domain: {0}")]
    Domain(String),

    #[error("requested size {requested} exceeds limit {limit}")]
    Capacity { requested: u64, limit: u64 },

    #[error("character mod {modulus} is not primitive")]
    NonPrimitive { modulus: u64 },

    #[error("invalid mirror path: {0}")]
    InvalidPath(String),

    #[error("reflection coupling |varrho|^2 = {modulus_sq} is not below 1")]
    SingularCoupling { modulus_sq: f64 },

    #[error("scalar product needs distinct energies")]
    EqualEnergies,

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("series diverges: {0}")]
    DivergenceRegion(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
