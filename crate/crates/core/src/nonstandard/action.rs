use serde::Serialize;

use super::{BasisPair, NsError, TensorModule};
use crate::arith::{quantum_int, LaurentPoly};
use crate::combinatorics::{Convention, Permutation};
use crate::hecke::{kl_table, Basis, HeckeElement, KlTable};
use crate::linalg::Matrix;
use crate::specht::SpechtModule;

/// (index, μ) for the canonical basis elements with descent s appearing in
/// the action of the generator on element `a` of a factor.
fn descent_terms(m: &SpechtModule, side: Convention, a: usize, s: usize) -> Vec<(usize, LaurentPoly)> {
    m.tableaux()
        .iter()
        .enumerate()
        .filter(|(b, q)| q.has_descent(s, side) && m.mu(side, *b, a) != 0)
        .map(|(b, _)| (b, LaurentPoly::constant(m.mu(side, b, a))))
        .collect()
}

impl TensorModule {
    /// Image of one tensor basis element under P_s, read off the case
    /// formulas for the lower⊗lower, upper⊗lower and upper⊗upper bases.
    pub fn p_on_basis(&self, a: usize, b: usize, s: usize, pair: BasisPair) -> Result<Vec<(usize, usize, LaurentPoly)>, NsError> {
        let (left, right) = self.factors();
        let (sl, sr) = pair.sides();
        if pair == BasisPair::LowerUpper {
            return Err(NsError::UnsupportedPair(pair));
        }
        let two = quantum_int(2);
        let two_sq = &two * &two;
        let dt = left.tableaux()[a].has_descent(s, sl);
        let du = right.tableaux()[b].has_descent(s, sr);
        let ts = descent_terms(left, sl, a, s);
        let us = descent_terms(right, sr, b, s);
        let mut out: Vec<(usize, usize, LaurentPoly)> = Vec::new();
        let sum_t = |out: &mut Vec<_>, c: &LaurentPoly| {
            for (t, m) in &ts {
                out.push((*t, b, c * m));
            }
        };
        let sum_u = |out: &mut Vec<_>, c: &LaurentPoly| {
            for (u, m) in &us {
                out.push((a, *u, c * m));
            }
        };
        let double = |out: &mut Vec<_>| {
            for (t, mt) in &ts {
                for (u, mu) in &us {
                    out.push((*t, *u, &(mt * mu) * &LaurentPoly::constant(2)));
                }
            }
        };
        let minus_two = -&two;
        match (pair, dt, du) {
            (BasisPair::LowerLower, true, true) => out.push((a, b, two_sq)),
            (BasisPair::LowerLower, true, false) => sum_u(&mut out, &two),
            (BasisPair::LowerLower, false, true) => sum_t(&mut out, &two),
            (BasisPair::LowerLower, false, false) => {
                out.push((a, b, two_sq));
                sum_t(&mut out, &minus_two);
                sum_u(&mut out, &minus_two);
                double(&mut out);
            }
            (BasisPair::UpperLower, true, true) => {}
            (BasisPair::UpperLower, true, false) => {
                out.push((a, b, two_sq));
                sum_u(&mut out, &minus_two);
            }
            (BasisPair::UpperLower, false, true) => {
                out.push((a, b, two_sq));
                sum_t(&mut out, &two);
            }
            (BasisPair::UpperLower, false, false) => {
                sum_t(&mut out, &minus_two);
                sum_u(&mut out, &two);
                double(&mut out);
            }
            (BasisPair::UpperUpper, true, true) => out.push((a, b, two_sq)),
            (BasisPair::UpperUpper, true, false) => sum_u(&mut out, &minus_two),
            (BasisPair::UpperUpper, false, true) => sum_t(&mut out, &minus_two),
            (BasisPair::UpperUpper, false, false) => {
                out.push((a, b, two_sq));
                sum_t(&mut out, &two);
                sum_u(&mut out, &two);
                double(&mut out);
            }
            (BasisPair::LowerUpper, _, _) => unreachable!(),
        }
        Ok(out)
    }

    /// x·P_s for a coordinate vector x, by the case formulas.
    pub fn p_action(&self, x: &[LaurentPoly], s: usize, pair: BasisPair) -> Result<Vec<LaurentPoly>, NsError> {
        let mut out = vec![LaurentPoly::zero(); self.dim()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = self.split(i);
            for (t, u, v) in self.p_on_basis(a, b, s, pair)? {
                out[self.index(t, u)] += &(c * &v);
            }
        }
        Ok(out)
    }

    /// Matrix of P_s assembled from the case formulas.
    pub fn p_matrix_from_cases(&self, s: usize, pair: BasisPair) -> Result<Matrix<LaurentPoly>, NsError> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![LaurentPoly::zero(); n];
            e[i] = LaurentPoly::one();
            rows.push(self.p_action(&e, s, pair)?);
        }
        Ok(Matrix::from_rows(rows, n))
    }

    /// Σ A(θ(x))⊗A(θ(x)) over x ∈ {C'_s, C_s}, with θ(x) computed in H_r and
    /// rewritten in the lower canonical basis before acting.
    pub fn p_matrix_theta_twisted(&self, s: usize, pair: BasisPair) -> Result<Matrix<LaurentPoly>, NsError> {
        let r = self.rank();
        let table = kl_table(r)?;
        let (left, right) = self.factors();
        let (sl, sr) = pair.sides();
        let lower_generator = |m: &SpechtModule, side: Convention| match side {
            Convention::Lower => m.action(side, s).clone(),
            Convention::Upper => m.lower_generator_on_upper(s),
        };
        let mut total = Matrix::zeros(self.dim(), self.dim());
        for basis in [Basis::Lower, Basis::Upper] {
            let image = table.convert(&table.theta(&table.generator(s, basis)?)?, Basis::Lower)?;
            let gen = Permutation::generator(r, s);
            let id = Permutation::identity(r);
            if image.coords().keys().any(|w| *w != gen && *w != id) {
                return Err(NsError::Check(format!("theta of a generator has support outside {{e, s{s}}}")));
            }
            let (c_s, c_e) = (image.coeff(&gen), image.coeff(&id));
            let act = |m: &SpechtModule, side: Convention| lower_generator(m, side).scale(&c_s).add(&Matrix::scalar(m.dim(), &c_e));
            total = total.add(&act(left, sl).kron(&act(right, sr)));
        }
        Ok(total)
    }
}

/// Outcome of the antipode identities on all generator words up to a length.
#[derive(Clone, Debug, Serialize)]
pub struct AntipodeReport {
    pub rank: usize,
    pub words: usize,
    pub one_op_holds: bool,
    pub theta_op_holds: bool,
}

/// Checks μ∘(1^op⊗1)(h) = ε₊(h)·1 and μ∘(θ^op⊗1)(h) = ε₋(h)·1 in H_r for
/// every product h of P_s generators of length at most `max_len`.
pub fn antipode_check(r: usize, max_len: usize) -> Result<AntipodeReport, NsError> {
    let table = kl_table(r)?;
    let gens: Vec<usize> = (1..r).collect();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                gens.iter().map(move |&s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let mut one_ok = true;
    let mut theta_ok = true;
    for w in &words {
        let (one, theta) = antipode_sums(&table, w)?;
        let two = quantum_int(2);
        let mut eps_plus = LaurentPoly::one();
        for _ in 0..2 * w.len() {
            eps_plus = &eps_plus * &two;
        }
        let eps_minus = if w.is_empty() { LaurentPoly::one() } else { LaurentPoly::zero() };
        one_ok &= is_scalar(&one, &eps_plus, r);
        theta_ok &= is_scalar(&theta, &eps_minus, r);
    }
    Ok(AntipodeReport { rank: r, words: words.len(), one_op_holds: one_ok, theta_op_holds: theta_ok })
}

fn is_scalar(h: &HeckeElement, c: &LaurentPoly, r: usize) -> bool {
    let id = Permutation::identity(r);
    h.coords().iter().all(|(w, x)| if *w == id { x == c } else { x.is_zero() }) && (c.is_zero() || h.coeff(&id) == *c)
}

/// Both antipode contractions of P_{w_1} ... P_{w_k} = Σ a⊗a, a running over
/// the products of one choice of C'_s or C_s per letter.
fn antipode_sums(table: &KlTable, word: &[usize]) -> Result<(HeckeElement, HeckeElement), NsError> {
    let r = table.rank();
    let mut products = vec![HeckeElement::identity(r)];
    for &s in word {
        let mut next = Vec::with_capacity(products.len() * 2);
        for p in &products {
            for basis in [Basis::Lower, Basis::Upper] {
                next.push(table.multiply(p, &table.generator(s, basis)?)?);
            }
        }
        products = next;
    }
    let mut one = HeckeElement::zero(r, Basis::Standard);
    let mut theta = HeckeElement::zero(r, Basis::Standard);
    for a in &products {
        one = one.add(&table.multiply(&table.one_op(a)?, a)?)?;
        theta = theta.add(&table.multiply(&table.theta_op(a)?, a)?)?;
    }
    Ok((one, theta))
}
