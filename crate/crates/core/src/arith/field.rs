use std::fmt;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LaurentPoly, RationalFn};

/// Commutative ring interface shared by the matrix code.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self> + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;

    /// Size heuristic for pivot choice; smaller is cheaper.
    fn weight(&self) -> usize {
        0
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out += rhs;
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        LaurentPoly::constant(n)
    }
    fn weight(&self) -> usize {
        self.num_terms()
    }
}

impl Ring for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn one() -> Self {
        RationalFn::one()
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        RationalFn::from_int(n)
    }
    fn weight(&self) -> usize {
        RationalFn::weight(self)
    }
}

impl Field for RationalFn {
    fn inv(&self) -> Option<Self> {
        RationalFn::inv(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!<BigRational as Zero>::is_zero(self)).then(|| self.recip())
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    (a % p != 0).then(|| pow_mod(a, p - 2, p))
}

/// Prime field Z/P. `P` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

/// 2^31 - 1.
pub const PRIME_SMALL: u64 = 2_147_483_647;
/// 2^61 - 1.
pub const PRIME_LARGE: u64 = 2_305_843_009_213_693_951;

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn from_bigint(c: &BigInt) -> Self {
        Fp(super::laurent::reduce_bigint(c, P))
    }

    /// Residue of a rational number; `None` if the denominator vanishes mod P.
    pub fn from_rational(q: &BigRational) -> Option<Self> {
        let d = Self::from_bigint(q.denom());
        d.inv().map(|di| {
            let mut n = Self::from_bigint(q.numer());
            n *= &di;
            n
        })
    }

    pub fn value(&self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'a, const P: u64> AddAssign<&'a Fp<P>> for Fp<P> {
    fn add_assign(&mut self, rhs: &'a Fp<P>) {
        let s = self.0 + rhs.0;
        self.0 = if s >= P { s - P } else { s };
    }
}

impl<'a, const P: u64> SubAssign<&'a Fp<P>> for Fp<P> {
    fn sub_assign(&mut self, rhs: &'a Fp<P>) {
        self.0 = if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 };
    }
}

impl<'a, const P: u64> MulAssign<&'a Fp<P>> for Fp<P> {
    fn mul_assign(&mut self, rhs: &'a Fp<P>) {
        self.0 = mul_mod(self.0, rhs.0, P);
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Fp<P>;
    fn neg(self) -> Fp<P> {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(n: i64) -> Self {
        let m = n.rem_euclid(P as i64) as u64;
        Fp(m)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        inv_mod(self.0, P).map(Fp)
    }
}

/// A field into which rational functions can be specialized at a chosen point.
pub trait Specialize: Field {
    fn specialize(f: &RationalFn, u0: &BigRational) -> Option<Self>;
}

impl Specialize for BigRational {
    fn specialize(f: &RationalFn, u0: &BigRational) -> Option<Self> {
        f.specialize(u0).ok()
    }
}

impl<const P: u64> Specialize for Fp<P> {
    fn specialize(f: &RationalFn, u0: &BigRational) -> Option<Self> {
        let point = Fp::<P>::from_rational(u0)?;
        f.specialize_mod(point.0, P).ok().map(Fp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = Fp<PRIME_SMALL>;

    #[test]
    fn prime_field_inverse() {
        let a = F::new(123_456_789);
        let mut b = a.inv().unwrap();
        b *= &a;
        assert_eq!(b, F::one());
        assert!(F::zero().inv().is_none());
        assert_eq!(F::from_i64(-1), -F::one());
    }

    #[test]
    fn large_prime_multiplication() {
        type G = Fp<PRIME_LARGE>;
        let a = G::new(PRIME_LARGE - 2);
        let mut sq = a;
        sq *= &a;
        assert_eq!(sq, G::new(4));
    }
}
