//! Exact arithmetic over Z[u, u^-1] and Q(u).

mod field;
mod laurent;
mod poly;
mod rational;

pub use field::{Field, Fp, Ring, Specialize, PRIME_LARGE, PRIME_SMALL};
pub use laurent::{quantum_int, LaurentPoly};
pub use rational::{RationalFn, VAL_INFINITE};

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("pole at u = {0}")]
    Pole(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Parses `a/b` or `a` as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == num_bigint::BigInt::from(0) {
                return Err(ArithError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
