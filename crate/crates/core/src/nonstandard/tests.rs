use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::{quantum_int, LaurentPoly, RationalFn, Ring};
use crate::combinatorics::{Convention, Partition};
use crate::linalg::Matrix;

fn shape(s: &str) -> Partition {
    s.parse().unwrap()
}

fn two_sq() -> LaurentPoly {
    let two = quantum_int(2);
    &two * &two
}

fn pairs_up_to(r: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for n in 2..=r {
        let shapes = Partition::two_row_of_size(n);
        for a in &shapes {
            for b in &shapes {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn u0() -> BigRational {
    default_points()[0].clone()
}

#[test]
fn case_formulas_match_the_definition() {
    for (a, b) in pairs_up_to(4) {
        let tm = TensorModule::new(&a, &b).unwrap();
        for s in 1..tm.rank() {
            let def_ll = to_k(&tm.p_matrix(s, BasisPair::LowerLower));
            for pair in [BasisPair::LowerLower, BasisPair::UpperLower, BasisPair::UpperUpper] {
                let cases = tm.p_matrix_from_cases(s, pair).unwrap();
                assert_eq!(cases, tm.p_matrix(s, pair), "{a}⊗{b} s{s} {pair:?}");
                // Same operator moved from lower⊗lower through the transition matrices.
                let conjugated = tm.to_lower_lower(pair).mul(&def_ll).mul(&tm.from_lower_lower(pair));
                assert_eq!(to_k(&cases), conjugated, "{a}⊗{b} s{s} {pair:?} via transitions");
            }
        }
        assert!(matches!(tm.p_matrix_from_cases(1, BasisPair::LowerUpper), Err(NsError::UnsupportedPair(_))));
    }
}

#[test]
fn first_cases_of_each_display() {
    let tm = TensorModule::new(&shape("2,1"), &shape("2,1")).unwrap();
    let (l, r) = tm.factors();
    for a in 0..l.dim() {
        for b in 0..r.dim() {
            let (ta, tb) = (&l.tableaux()[a], &r.tableaux()[b]);
            for s in 1..3 {
                let mut e = vec![LaurentPoly::zero(); tm.dim()];
                e[tm.index(a, b)] = LaurentPoly::one();
                if ta.has_descent(s, Convention::Lower) && tb.has_descent(s, Convention::Lower) {
                    let img = tm.p_action(&e, s, BasisPair::LowerLower).unwrap();
                    let expected: Vec<LaurentPoly> = e.iter().map(|c| c * &two_sq()).collect();
                    assert_eq!(img, expected);
                }
                if ta.has_descent(s, Convention::Upper) && tb.has_descent(s, Convention::Lower) {
                    let img = tm.p_action(&e, s, BasisPair::UpperLower).unwrap();
                    assert!(img.iter().all(LaurentPoly::is_zero));
                }
            }
        }
    }
}

#[test]
fn quadratic_relations_and_q() {
    for (a, b) in pairs_up_to(4) {
        let tm = TensorModule::new(&a, &b).unwrap();
        let n = tm.dim();
        for s in 1..tm.rank() {
            for pair in BasisPair::ALL {
                let p = tm.p_matrix(s, pair);
                let q = tm.q_matrix(s, pair);
                assert_eq!(q, tm.q_matrix_direct(s, pair));
                assert_eq!(p.add(&q), Matrix::scalar(n, &two_sq()));
                assert_eq!(p.mul(&p), p.scale(&two_sq()));
                assert_eq!(q.mul(&q), q.scale(&two_sq()));
            }
        }
    }
}

#[test]
fn flip_commutes_and_theta_twist_is_trivial() {
    for (a, b) in pairs_up_to(4) {
        let tm = TensorModule::new(&a, &b).unwrap();
        for s in 1..tm.rank() {
            for pair in [BasisPair::LowerLower, BasisPair::UpperUpper] {
                let p = tm.p_matrix(s, pair);
                if let Some(t) = tm.flip() {
                    assert_eq!(t.mul(&t), Matrix::identity(tm.dim()));
                    assert_eq!(t.mul(&p), p.mul(&t));
                }
            }
            for pair in BasisPair::ALL {
                assert_eq!(tm.p_matrix_theta_twisted(s, pair).unwrap(), tm.p_matrix(s, pair));
            }
        }
        assert_eq!(tm.flip().is_some(), a == b);
    }
}

#[test]
fn antipodes_on_short_words() {
    for r in 2..=4 {
        let rep = antipode_check(r, 3).unwrap();
        assert!(rep.one_op_holds && rep.theta_op_holds, "{rep:?}");
        assert_eq!(rep.words, (0..=3).map(|k| (r - 1).pow(k)).sum::<usize>());
    }
}

fn p_on(tm: &TensorModule, x: &[RationalFn], s: usize) -> Vec<RationalFn> {
    to_k(&tm.p_matrix(s, BasisPair::LowerLower)).left_apply(x)
}

#[test]
fn eps_plus_is_trivial_and_symmetric() {
    for r in 1..=5 {
        for lambda in Partition::two_row_of_size(r) {
            let tm = TensorModule::new(&lambda, &lambda).unwrap();
            let eps = tm.eps_plus().unwrap();
            assert_eq!(eps, tm.eps_plus_upper_lower().unwrap(), "{lambda}");
            let flip = to_k(&tm.flip().unwrap());
            assert_eq!(flip.left_apply(&eps), eps);
            let c = RationalFn::from_poly(two_sq());
            for s in 1..r {
                let img = p_on(&tm, &eps, s);
                assert_eq!(img, eps.iter().map(|e| e.mul_ref(&c)).collect::<Vec<_>>());
                let q = to_k(&tm.q_matrix(s, BasisPair::LowerLower)).left_apply(&eps);
                assert!(q.iter().all(RationalFn::is_zero));
            }
            assert!(tm.trace(&eps).unwrap().is_one());
        }
    }
    let tm = TensorModule::new(&shape("3"), &shape("3")).unwrap();
    assert_eq!(tm.eps_plus().unwrap(), vec![RationalFn::one()]);
}

#[test]
fn trace_reads_diagonal_and_is_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for lambda in [shape("2,1"), shape("3,1"), shape("2,2"), shape("3,2")] {
        let tm = TensorModule::new(&lambda, &lambda).unwrap();
        let f = tm.factors().0.dim();
        let to_ll = tm.to_lower_lower(BasisPair::LowerUpper);
        for a in 0..f {
            for b in 0..f {
                let mut e = vec![RationalFn::zero(); tm.dim()];
                e[tm.index(a, b)] = RationalFn::one();
                let t = tm.trace(&to_ll.left_apply(&e)).unwrap();
                if a == b {
                    assert_eq!(t, RationalFn::from_int(f as i64).inv().unwrap());
                } else {
                    assert!(t.is_zero());
                }
            }
        }
        let c = RationalFn::from_poly(two_sq());
        for _ in 0..5 {
            let x: Vec<RationalFn> = (0..tm.dim()).map(|_| RationalFn::from_int(rng.gen_range(-5..=5))).collect();
            let mut expected = tm.trace(&x).unwrap();
            expected *= &c;
            for s in 1..tm.rank() {
                assert_eq!(tm.trace(&p_on(&tm, &x, s)).unwrap(), expected);
            }
        }
    }
}

#[test]
fn eps_minus_is_annihilated() {
    for lambda in [shape("2"), shape("1,1"), shape("2,1"), shape("2,2")] {
        let (tm, v) = eps_minus(&lambda).unwrap();
        for s in 1..tm.rank() {
            assert!(p_on(&tm, &v, s).iter().all(RationalFn::is_zero), "{lambda} s{s}");
        }
    }
    let (tm, v) = eps_minus(&shape("2")).unwrap();
    assert_eq!(tm.shapes(), (&shape("1,1"), &shape("2")));
    assert_eq!(v, vec![RationalFn::one()]);
}

#[test]
fn labels_parse_validate_and_count() {
    for s in ["3,2|4,1", "+3,2", "-2,2", "eps+"] {
        let l: NsIrredLabel = s.parse().unwrap();
        let back: NsIrredLabel = l.to_string().parse().unwrap();
        assert_eq!(l, back);
    }
    assert_eq!("3,2|4,1".parse::<NsIrredLabel>().unwrap().to_string(), "4,1|3,2");
    assert!("3,2|3,2".parse::<NsIrredLabel>().is_err());
    assert!(NsIrredLabel::Minus(Partition::row(4)).validate(4).is_err());
    assert!(NsIrredLabel::Plus(shape("2,1,1")).validate(4).is_err());
    assert!(NsIrredLabel::Plus(shape("3,1")).validate(4).is_ok());
    for (r, total, count) in [(2, 2, 2), (3, 10, 4), (4, 89, 8), (5, 855, 8)] {
        let labels = NsIrredLabel::all(r);
        assert_eq!(labels.len(), count);
        assert_eq!(labels.iter().map(|l| l.dim() * l.dim()).sum::<u128>(), total);
        assert!(labels.iter().all(|l| l.validate(r).is_ok()));
    }
    let plus = NsIrredLabel::Plus(shape("2,1"));
    assert_eq!((plus.dim(), NsIrredLabel::Minus(shape("2,1")).dim()), (2, 1));
}

#[test]
fn irreducibles_are_closed_and_absolutely_irreducible() {
    for r in 2..=4 {
        let mods = distinct_irreducibles(r).unwrap();
        for m in &mods {
            assert!(m.is_closed(), "{}", m.label);
            assert_eq!(m.dim() as u128, m.label.dim());
            assert_eq!(m.basis.rank(), m.dim());
            assert_eq!(certify(m, &u0()).unwrap(), 1, "{}", m.label);
        }
        for (i, a) in mods.iter().enumerate() {
            for b in &mods[i + 1..] {
                assert_eq!(a.hom_dim_to(b, &u0()).unwrap(), 0, "{} vs {}", a.label, b.label);
            }
        }
    }
    assert!(build_irreducible(&NsIrredLabel::Minus(Partition::row(3)), 3).is_err());
}

#[test]
fn tensor_square_splits_into_three() {
    for lambda in [shape("2,1"), shape("3,1"), shape("2,2")] {
        let parts = decompose_tensor(&lambda, &lambda).unwrap();
        let f = lambda.num_syt() as usize;
        assert_eq!(parts.iter().map(NsSubmodule::dim).sum::<usize>(), f * f);
        let all = Matrix::stack(&parts.iter().map(|p| &p.basis).collect::<Vec<_>>());
        assert_eq!(all.rank(), f * f);
        let tm = TensorModule::new(&lambda, &lambda).unwrap();
        let whole = NsSubmodule { label: NsIrredLabel::EpsPlus, basis: Matrix::identity(tm.dim()), ambient: tm };
        assert_eq!(certify(&whole, &u0()).unwrap(), 3);
    }
    let row = decompose_tensor(&shape("3"), &shape("3")).unwrap();
    assert_eq!(row.len(), 1);
    assert_eq!(row[0].label, NsIrredLabel::EpsPlus);
}

#[test]
fn restriction_matches_branching_rule() {
    for r in 3..=4 {
        for m in distinct_irreducibles(r).unwrap() {
            let got = restriction_decompose(&m, &u0()).unwrap();
            assert_eq!(got, predict_restriction(&m.label), "{}", m.label);
        }
    }
    let l = |s: &str| s.parse::<NsIrredLabel>().unwrap();
    let plus31 = predict_restriction(&l("+3,1"));
    assert_eq!(plus31.into_iter().collect::<Vec<_>>(), vec![(l("3|2,1"), 1), (l("+2,1"), 1), (l("eps+"), 1)]);
    let minus31 = predict_restriction(&l("-3,1"));
    assert_eq!(minus31.into_iter().collect::<Vec<_>>(), vec![(l("3|2,1"), 1), (l("-2,1"), 1)]);
    assert_eq!(restriction_case(&l("+3,1")), "2'");
    assert_eq!(restriction_case(&l("-3,1")), "3'");
    assert_eq!(restriction_case(&l("4|3,1")), "1b'");
    assert_eq!(restriction_case(&l("3,1|2,2")), "1b");
    assert_eq!(restriction_case(&l("5|3,2")), "1a");
    assert_eq!(restriction_case(&l("+3,2")), "2");
    assert_eq!(restriction_case(&l("eps+")), "4");
}

#[test]
fn dimension_formula_values() {
    let expected = [(2, 2), (3, 10), (4, 89), (5, 855), (6, 8631)];
    for (r, v) in expected {
        let d = dimension_formula(r);
        assert_eq!(d.value, v);
        assert_eq!(d.sum_of_squares, v, "r = {r}");
    }
    let d = dimension_formula(4);
    assert_eq!((d.catalan, d.pair_squares, d.sym_squares), (14, 49, 39));
}

#[test]
fn dimension_oracle_small_ranks() {
    for (r, v) in [(2, 2), (3, 10), (4, 89)] {
        assert_eq!(dimension_oracle::<BigRational>(r, &u0(), 10_000).unwrap(), v);
    }
    assert!(matches!(dimension_oracle::<BigRational>(4, &u0(), 50), Err(NsError::Linalg(_))));
}
