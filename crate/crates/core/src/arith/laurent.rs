use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Element of Z[u, u^-1], stored as a sparse exponent map with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * u^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn u() -> Self {
        Self::monomial(1, 1)
    }

    pub fn u_inv() -> Self {
        Self::monomial(1, -1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// The involution u -> u^-1.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplication by u^k.
    pub fn shift(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Exact evaluation at a rational point. A negative power at 0 is a pole.
    pub fn eval(&self, u0: &BigRational) -> Result<BigRational, ArithError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if u0.is_zero() {
            if self.min_exp().unwrap() < 0 {
                return Err(ArithError::Pole(u0.to_string()));
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c.clone()) * pow_rational(u0, e);
        }
        Ok(acc)
    }

    /// Evaluation modulo a prime `p` at the residue `u0` (nonzero if negative powers occur).
    pub fn eval_mod(&self, u0: u64, p: u64) -> Result<u64, ArithError> {
        let mut acc = 0u64;
        let inv = if self.min_exp().is_some_and(|e| e < 0) {
            Some(super::field::inv_mod(u0, p).ok_or(ArithError::Pole(format!("{u0} mod {p}")))?)
        } else {
            None
        };
        for (e, c) in self.terms() {
            let base = if e < 0 { inv.unwrap() } else { u0 };
            let term = super::field::mul_mod(reduce_bigint(c, p), super::field::pow_mod(base, e.unsigned_abs() as u64, p), p);
            acc = (acc + term) % p;
        }
        Ok(acc)
    }
}

pub(crate) fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    u64::try_from(r).expect("residue fits in u64")
}

pub(crate) fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = BigRational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    acc
}

/// `[k] = u^{k-1} + u^{k-3} + ... + u^{1-k}`.
pub fn quantum_int(k: u32) -> LaurentPoly {
    let k = k as i32;
    LaurentPoly::from_terms((0..k).map(|j| (k - 1 - 2 * j, 1)))
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, &-c);
        }
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.coeffs.len() == 1 {
            let (e, c) = rhs.coeffs.iter().next().unwrap();
            return if c.is_one() { self.shift(*e) } else { self.scale(c).shift(*e) };
        }
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a> Neg for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.clone().neg()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i32) -> fmt::Result {
    let unit = c.is_one();
    match (e, unit) {
        (0, _) => write!(f, "{c}"),
        (1, true) => write!(f, "u"),
        (1, false) => write!(f, "{c}*u"),
        (_, true) => write!(f, "u^{e}"),
        (_, false) => write!(f, "{c}*u^{e}"),
    }
}

/// Terms in decreasing exponent order, e.g. `u^2 - 3*u + 1 + u^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_monomial(f, &mag, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split into signed terms; a '-' directly after '^' belongs to the exponent.
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut prev = '\0';
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() && prev != '^' {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = ch;
        }
        terms.push(current);

        let mut p = LaurentPoly::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coeff, exp) = if let Some(idx) = body.find('u') {
                let head = &body[..idx];
                let coeff = match head {
                    "" => BigInt::one(),
                    h => h.strip_suffix('*').ok_or_else(bad)?.parse::<BigInt>().map_err(|_| bad())?,
                };
                let tail = &body[idx + 1..];
                let exp = match tail {
                    "" => 1,
                    t => t.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?,
                };
                (coeff, exp)
            } else {
                (body.parse::<BigInt>().map_err(|_| bad())?, 0)
            };
            p.add_term(exp, &if neg { -coeff } else { coeff });
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(2), LaurentPoly::u() + LaurentPoly::u_inv());
        assert_eq!(quantum_int(3).to_string(), "u^2 + 1 + u^-2");
        for k in 0..8 {
            assert!(quantum_int(k).is_bar_invariant());
        }
    }

    #[test]
    fn bar_negates_exponents() {
        let p = LaurentPoly::from_terms([(2, 1), (1, 3)]);
        assert_eq!(p.bar(), LaurentPoly::from_terms([(-2, 1), (-1, 3)]));
        assert!(LaurentPoly::zero().bar().is_zero());
    }

    #[test]
    fn display_and_parse() {
        let p = LaurentPoly::from_terms([(3, -2), (1, 1), (0, 5), (-1, -1), (-4, 7)]);
        let s = p.to_string();
        assert_eq!(s, "-2*u^3 + u + 5 - u^-1 + 7*u^-4");
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert!("u^".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn evaluation() {
        let two = quantum_int(2);
        assert_eq!(two.eval(&BigRational::one()).unwrap(), BigRational::from_integer(2.into()));
        assert!(two.eval(&BigRational::zero()).is_err());
        let p = 2_305_843_009_213_693_951u64;
        assert_eq!(two.eval_mod(1, p).unwrap(), 2);
    }
}
