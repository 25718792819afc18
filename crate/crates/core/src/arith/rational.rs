use std::fmt;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};
use super::{ArithError, LaurentPoly};

/// Element of Q(u) in canonical form: the denominator is a polynomial with
/// nonzero constant term and positive leading coefficient, coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Valuation sentinel for the zero function.
pub const VAL_INFINITE: i64 = i64::MAX;

fn to_dense(p: &LaurentPoly, shift: i32) -> Dense {
    let deg = (p.max_exp().unwrap() - shift) as usize;
    let mut v = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        v[(e - shift) as usize] = c.clone();
    }
    v
}

fn from_dense(p: &Dense, shift: i32) -> LaurentPoly {
    LaurentPoly::from_terms(p.iter().enumerate().map(|(i, c)| (i as i32 + shift, c.clone())))
}

impl RationalFn {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let m = den.min_exp().unwrap();
        let k = num.min_exp().unwrap();
        let mut d = to_dense(&den, m);
        let mut n = to_dense(&num, k);
        if d.len() > 1 {
            let g = poly::gcd(&n, &d);
            if g.len() > 1 {
                n = poly::div_exact(&n, &g);
                d = poly::div_exact(&d, &g);
            }
        }
        let c = poly::content(&n).gcd(&poly::content(&d));
        let c = if d.last().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            for x in n.iter_mut() {
                *x /= &c;
            }
            for x in d.iter_mut() {
                *x /= &c;
            }
        }
        Self { num: from_dense(&n, k - m), den: from_dense(&d, 0) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    /// Order of vanishing at u = 0; [`VAL_INFINITE`] for zero.
    pub fn val0(&self) -> i64 {
        match self.num.min_exp() {
            None => VAL_INFINITE,
            Some(e) => e as i64,
        }
    }

    /// Order of vanishing at u = infinity; [`VAL_INFINITE`] for zero.
    pub fn val_inf(&self) -> i64 {
        match self.num.max_exp() {
            None => VAL_INFINITE,
            Some(e) => self.den.max_exp().unwrap() as i64 - e as i64,
        }
    }

    pub fn in_k0(&self) -> bool {
        self.val0() >= 0
    }

    pub fn in_kinf(&self) -> bool {
        self.val_inf() >= 0
    }

    /// Membership in u K0 and u^-1 K_inf.
    pub fn vanishes_at_both_ends(&self) -> bool {
        self.val0() >= 1 && self.val_inf() >= 1
    }

    pub fn at_zero(&self) -> Result<BigRational, ArithError> {
        match self.val0() {
            v if v < 0 => Err(ArithError::Pole("0".into())),
            0 => Ok(BigRational::new(self.num.coeff(0), self.den.coeff(0))),
            _ => Ok(BigRational::zero()),
        }
    }

    pub fn at_infinity(&self) -> Result<BigRational, ArithError> {
        match self.val_inf() {
            v if v < 0 => Err(ArithError::Pole("infinity".into())),
            0 => Ok(BigRational::new(
                self.num.coeff(self.num.max_exp().unwrap()),
                self.den.coeff(self.den.max_exp().unwrap()),
            )),
            _ => Ok(BigRational::zero()),
        }
    }

    pub fn specialize(&self, u0: &BigRational) -> Result<BigRational, ArithError> {
        let d = self.den.eval(u0)?;
        if d.is_zero() {
            return Err(ArithError::Pole(u0.to_string()));
        }
        Ok(self.num.eval(u0)? / d)
    }

    pub fn specialize_mod(&self, u0: u64, p: u64) -> Result<u64, ArithError> {
        let d = self.den.eval_mod(u0, p)?;
        let dinv = super::field::inv_mod(d, p).ok_or_else(|| ArithError::Pole(format!("{u0} mod {p}")))?;
        Ok(super::field::mul_mod(self.num.eval_mod(u0, p)?, dinv, p))
    }

    /// Rough size used for pivot selection in elimination.
    pub fn weight(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    fn combine(&self, rhs: &Self, sign: i64) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        let rnum = if sign < 0 { -&rhs.num } else { rhs.num.clone() };
        if self.den == rhs.den {
            let n = &self.num + &rnum;
            if self.den.is_one() {
                return Self { num: n, den: self.den.clone() };
            }
            return Self::canonical(n, self.den.clone());
        }
        let n = &(&self.num * &rhs.den) + &(&rnum * &self.den);
        Self::canonical(n, &self.den * &rhs.den)
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> AddAssign<&'a RationalFn> for RationalFn {
    fn add_assign(&mut self, rhs: &'a RationalFn) {
        *self = self.combine(rhs, 1);
    }
}

impl<'a> SubAssign<&'a RationalFn> for RationalFn {
    fn sub_assign(&mut self, rhs: &'a RationalFn) {
        *self = self.combine(rhs, -1);
    }
}

impl<'a> MulAssign<&'a RationalFn> for RationalFn {
    fn mul_assign(&mut self, rhs: &'a RationalFn) {
        if self.is_zero() || rhs.is_zero() {
            *self = Self::zero();
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            self.num = &self.num * &rhs.num;
            return;
        }
        *self = Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den);
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -self.num, den: self.den }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RationalFn {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            None => Ok(Self::from_poly(s.parse()?)),
            Some((n, d)) => Self::new(n.parse()?, d.parse()?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quantum_int;

    fn rf(n: &str, d: &str) -> RationalFn {
        RationalFn::new(n.parse().unwrap(), d.parse().unwrap()).unwrap()
    }

    #[test]
    fn valuations() {
        let f = rf("u", "1 + u^2");
        assert_eq!((f.val0(), f.val_inf()), (1, 1));
        let two = RationalFn::from_poly(quantum_int(2));
        assert_eq!(two.val0(), -1);
        assert_eq!((RationalFn::one().val0(), RationalFn::one().val_inf()), (0, 0));
        assert_eq!(RationalFn::zero().val0(), VAL_INFINITE);
    }

    #[test]
    fn canonical_form_clears_powers_and_content() {
        let f = rf("2*u^-1 + 2*u", "-4*u^-2");
        assert_eq!(f.den().to_string(), "2");
        assert_eq!(f.num().to_string(), "-u^3 - u");
        let g = rf("u^2 - 1", "u + 1");
        assert_eq!(g, RationalFn::from_poly("u - 1".parse().unwrap()));
        let h = rf("1", "-2 - 2*u");
        assert_eq!(h.den().to_string(), "2*u + 2");
        assert_eq!(h.num().to_string(), "-1");
    }

    #[test]
    fn specialization_and_poles() {
        let two = RationalFn::from_poly(quantum_int(2));
        let one = BigRational::one();
        assert_eq!(two.specialize(&one).unwrap(), BigRational::from_integer(2.into()));
        let mut sq = two.clone();
        sq *= &two;
        assert_eq!(sq.specialize(&one).unwrap(), BigRational::from_integer(4.into()));
        assert!(rf("u", "u - 1").specialize(&one).is_err());
    }

    #[test]
    fn round_trip_text() {
        let f = rf("u^2 + 3", "2*u + 1");
        assert_eq!(f.to_string(), "u^2 + 3 / 2*u + 1");
        assert_eq!(f.to_string().parse::<RationalFn>().unwrap(), f);
    }
}
