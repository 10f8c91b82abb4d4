use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),

    #[error("invalid scale factor {0}: must be positive")]
    InvalidFactor(u64),

    #[error("input is not {0}-regular")]
    NotRegular(u64),

    #[error("input is not {0}-distinct")]
    NotDistinct(u64),

    #[error("part size {size} is not divisible by {divisor}")]
    SizeNotDivisible { size: u64, divisor: u64 },

    #[error("frequency {frequency} of part {size} is not divisible by {divisor}")]
    FrequencyNotDivisible {
        size: u64,
        frequency: u64,
        divisor: u64,
    },

    #[error("moduli {s} and {t} are not coprime")]
    NotCoprime { s: u64, t: u64 },

    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },

    #[error("malformed partition: {0}")]
    Parse(String),

    #[error("partition weight overflows u64")]
    Overflow,

    #[error("prime order {given:?} is not a permutation of the shared primes {shared:?}")]
    InvalidPrimeOrder { given: Vec<u64>, shared: Vec<u64> },

    #[error("series with constant term {0} has no inverse over the integers")]
    NotInvertible(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_modulus(m: u64) -> Result<()> {
    if m < 2 {
        Err(Error::InvalidModulus(m))
    } else {
        Ok(())
    }
}
