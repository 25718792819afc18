use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::{One, Zero};

use nstl::nonstandard::default_points;

/// Largest rank accepted without `--allow-large-r`.
pub const R_CAP: usize = 6;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub r_bound: usize,
    pub points: Vec<BigRational>,
    pub out: Option<PathBuf>,
    pub verbosity: u8,
    pub seed: u64,
    pub allow_large_r: bool,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl RunConfig {
    pub fn new(points: &[String], out: Option<PathBuf>, verbosity: u8, seed: u64, allow_large_r: bool) -> Result<Self, UsageError> {
        let points = if points.is_empty() { default_points() } else { points.iter().map(|p| parse_point(p)).collect::<Result<_, _>>()? };
        Ok(Self { r_bound: 5, points, out, verbosity, seed, allow_large_r })
    }

    pub fn check_rank(&self, r: usize) -> Result<(), UsageError> {
        if r == 0 {
            return Err(UsageError("rank must be positive".into()));
        }
        if r > R_CAP && !self.allow_large_r {
            return Err(UsageError(format!("r = {r} exceeds {R_CAP}; pass --allow-large-r to run it anyway")));
        }
        Ok(())
    }

    pub fn u0(&self) -> &BigRational {
        &self.points[0]
    }
}

/// A specialization point: a nonzero rational other than ±1, written `a` or `a/b`.
pub fn parse_point(s: &str) -> Result<BigRational, UsageError> {
    let bad = || UsageError(format!("invalid specialization point {s:?}"));
    let v: BigRational = match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?);
            if b.is_zero() {
                return Err(bad());
            }
            BigRational::new(a, b)
        }
        None => BigRational::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    if v.is_zero() || v.is_one() || (-v.clone()).is_one() {
        return Err(UsageError(format!("specialization point {s} must be nonzero and not ±1")));
    }
    Ok(v)
}
