//! Dense univariate helpers over Z used for rational function normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Coefficients in increasing degree, no trailing zeros.
pub(crate) type Dense = Vec<BigInt>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Dense) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn content(p: &Dense) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(p: &Dense) -> Dense {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().unwrap().is_negative() { -c } else { c };
    p.iter().map(|x| x / &sign).collect()
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    let db = degree(b);
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = degree(&r) - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd with positive leading coefficient.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut x, mut y) = if a.len() >= b.len() { (primitive(a), primitive(b)) } else { (primitive(b), primitive(a)) };
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

/// Exact quotient of `a` by `b`; `b` must divide `a` in Z[u].
pub(crate) fn div_exact(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let db = degree(b);
    if r.len() < b.len() {
        assert!(r.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() >= b.len() {
        let shift = degree(&r) - db;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[i64]) -> Dense {
        let mut p: Dense = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn gcd_of_products() {
        // (1+u)(2-u) and (1+u)(3+u^2)
        let a = d(&[2, 1, -1]);
        let b = d(&[3, 3, 1, 1]);
        assert_eq!(gcd(&a, &b), d(&[1, 1]));
        assert_eq!(div_exact(&a, &d(&[1, 1])), d(&[2, -1]));
        assert_eq!(gcd(&d(&[4, 2]), &d(&[6])), d(&[1]));
    }
}
