use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::{quantum_int, LaurentPoly, RationalFn};
use crate::combinatorics::{dkt_edges, Convention, Partition, Tableau};

fn shape(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

#[test]
fn one_row_and_one_column() {
    for r in 2..=4 {
        let row = SpechtModule::new(&Partition::row(r)).unwrap();
        let col = SpechtModule::new(&Partition::column(r)).unwrap();
        for s in 1..r {
            assert_eq!(row.action(Convention::Lower, s).get(0, 0), &quantum_int(2));
            assert_eq!(col.action(Convention::Upper, s).get(0, 0), &-quantum_int(2));
        }
    }
}

#[test]
fn shape_32_matches_the_w_graph_figure() {
    let m = SpechtModule::new(&shape("3,2")).unwrap();
    let edges = [("123/45", "124/35"), ("124/35", "134/25"), ("134/25", "135/24"), ("135/24", "125/34"), ("123/45", "135/24"), ("124/35", "125/34")];
    let n = m.dim();
    for side in [Convention::Lower, Convention::Upper] {
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                let mu = m.mu(side, a, b);
                assert!(mu == 0 || mu == 1);
                count += mu;
            }
        }
        assert_eq!(count, 2 * edges.len() as i64);
        for (a, b) in edges {
            let (a, b) = (m.index_of(&tab(a)).unwrap(), m.index_of(&tab(b)).unwrap());
            assert_eq!(m.mu(side, a, b), 1);
        }
    }
    let q = m.index_of(&tab("123/45")).unwrap();
    let mut e = vec![LaurentPoly::zero(); n];
    e[q] = LaurentPoly::one();
    let img = m.act(&e, 1, Convention::Lower);
    assert_eq!(img[q], quantum_int(2));
    assert!(img.iter().enumerate().all(|(i, c)| i == q || c.is_zero()));
    let img = m.act(&e, 3, Convention::Upper);
    assert_eq!(img[q], -quantum_int(2));
}

#[test]
fn cell_and_formula_actions_agree() {
    for r in 1..=5 {
        for lambda in Partition::all_of_size(r) {
            let m = SpechtModule::new(&lambda).unwrap();
            for side in [Convention::Lower, Convention::Upper] {
                for s in 1..r {
                    assert_eq!(m.action(side, s), &m.action_from_formula(side, s), "{lambda} {side:?} s{s}");
                }
                assert!(m.satisfies_hecke_relations(side));
            }
            for a in 0..m.dim() {
                for b in 0..m.dim() {
                    assert_eq!(m.mu(Convention::Lower, a, b), m.mu(Convention::Upper, a, b));
                }
            }
        }
    }
}

#[test]
fn all_cells_of_a_shape_give_the_same_module() {
    let lambda = shape("3,1");
    let base = SpechtModule::new(&lambda).unwrap();
    for p in crate::combinatorics::syt_enumerate(&lambda) {
        let other = SpechtModule::from_cell(&lambda, &p).unwrap();
        for s in 1..4 {
            for side in [Convention::Lower, Convention::Upper] {
                assert_eq!(base.action(side, s), other.action(side, s));
            }
        }
    }
}

#[test]
fn dkt_edges_carry_mu_one() {
    for r in 3..=5 {
        for lambda in Partition::all_of_size(r) {
            let m = SpechtModule::new(&lambda).unwrap();
            let g = dkt_edges(&lambda);
            for e in &g.edges {
                let a = m.index_of(&g.vertices[e.a]).unwrap();
                let b = m.index_of(&g.vertices[e.b]).unwrap();
                assert_eq!((m.mu(Convention::Lower, a, b), m.mu(Convention::Lower, b, a)), (1, 1));
            }
        }
    }
}

#[test]
fn transition_small_cases() {
    let t = Transition::new(&SpechtModule::new(&shape("3")).unwrap()).unwrap();
    assert!(t.x.get(0, 0).is_one());
    let t = Transition::new(&SpechtModule::new(&shape("2,1")).unwrap()).unwrap();
    assert!(t.satisfies_theorem());
    assert!(!t.x.get(0, 1).is_zero() || !t.x.get(1, 0).is_zero());
}

#[test]
fn transition_theorem_through_size_five() {
    for r in 1..=5 {
        for lambda in Partition::all_of_size(r) {
            let m = SpechtModule::new(&lambda).unwrap();
            let t = Transition::new(&m).unwrap();
            assert!(t.satisfies_theorem(), "{lambda}: {:?}", t.x);
            let id = Matrix::<BigRational>::identity(m.dim());
            assert_eq!(t.at_zero().unwrap(), id);
            assert_eq!(t.at_infinity().unwrap(), id);
        }
    }
}

#[test]
fn projector_for_32_onto_22_has_rank_two() {
    let m = SpechtModule::new(&shape("3,2")).unwrap();
    let p = Projectors::new(&m, Convention::Lower).unwrap();
    let proj = p.projector(&shape("2,2"));
    assert_eq!(proj.rank(), 2);
    assert!(p.projector(&shape("4")).is_zero());
    let one = Projectors::new(&SpechtModule::new(&shape("4")).unwrap(), Convention::Lower).unwrap();
    assert_eq!(one.matrices, vec![Matrix::identity(1)]);
}

#[test]
fn projectors_are_orthogonal_idempotents() {
    for r in 2..=5 {
        for lambda in Partition::all_of_size(r) {
            let m = SpechtModule::new(&lambda).unwrap();
            for side in [Convention::Lower, Convention::Upper] {
                let p = Projectors::new(&m, side).unwrap();
                let n = m.dim();
                let mut sum = Matrix::zeros(n, n);
                let rep = restricted_rep(&m, side);
                for (i, a) in p.matrices.iter().enumerate() {
                    sum = sum.add(a);
                    let expected_rank = m.tableaux().iter().filter(|q| q.restrict(r - 1).shape() == p.shapes[i]).count();
                    assert_eq!(a.rank(), expected_rank);
                    for g in rep.gens() {
                        assert_eq!(a.mul(g), g.mul(a));
                    }
                    for (j, b) in p.matrices.iter().enumerate() {
                        let prod = a.mul(b);
                        if i == j {
                            assert_eq!(&prod, a);
                        } else {
                            assert!(prod.is_zero());
                        }
                    }
                }
                assert_eq!(sum, Matrix::identity(n));
                assert_eq!(rep.commutant_dim(), p.matrices.len());
            }
        }
    }
}

#[test]
fn projected_basis_lemma_and_restriction_order() {
    for r in 2..=5 {
        for lambda in Partition::all_of_size(r) {
            let m = SpechtModule::new(&lambda).unwrap();
            for side in [Convention::Lower, Convention::Upper] {
                let p = Projectors::new(&m, side).unwrap();
                check_projected_lemma(&m, &p.projected_basis(&m), side).unwrap();
                check_restriction_order(&m, side).unwrap();
                check_restriction_isomorphism(&m, side).unwrap();
            }
        }
    }
}

fn random_k0(rng: &mut ChaCha8Rng, n: usize) -> Vec<RationalFn> {
    (0..n)
        .map(|_| {
            let num = LaurentPoly::from_terms([(0, rng.gen_range(-3i64..=3)), (1, rng.gen_range(-3i64..=3)), (2, rng.gen_range(-2i64..=2))]);
            let den = LaurentPoly::from_terms([(0, 1i64), (1, rng.gen_range(-2i64..=2))]);
            RationalFn::new(num, den).unwrap()
        })
        .collect()
}

#[test]
fn lattice_reduction_matches_projection_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for lambda in Partition::all_of_size(5) {
        let m = SpechtModule::new(&lambda).unwrap();
        let p = Projectors::new(&m, Convention::Lower).unwrap();
        for _ in 0..20 {
            let x = random_k0(&mut rng, m.dim());
            for mu in &p.shapes {
                for (q, v) in p.lattice_reduce(&m, &x, mu).unwrap() {
                    let i = m.index_of(&q).unwrap();
                    assert_eq!(v, x[i].at_zero().unwrap());
                }
            }
        }
        let u = RationalFn::from_poly(LaurentPoly::u());
        let x: Vec<RationalFn> = random_k0(&mut rng, m.dim()).into_iter().map(|mut c| {
            c *= &u;
            c
        }).collect();
        for mu in &p.shapes {
            assert!(p.lattice_reduce(&m, &x, mu).unwrap().iter().all(|(_, v)| v.is_zero()));
        }
        let mut bad = vec![RationalFn::zero(); m.dim()];
        bad[0] = RationalFn::from_poly(LaurentPoly::u_inv());
        assert!(matches!(p.lattice_reduce(&m, &bad, &p.shapes[0]), Err(SpechtError::Precondition(_))));
    }
}

#[test]
fn lower_and_upper_lattices_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for lambda in Partition::all_of_size(4) {
        let m = SpechtModule::new(&lambda).unwrap();
        let t = Transition::new(&m).unwrap();
        for _ in 0..20 {
            let mut x = random_k0(&mut rng, m.dim());
            if rng.gen_bool(0.5) {
                let i = rng.gen_range(0..x.len());
                x[i] = RationalFn::from_poly(LaurentPoly::u_inv());
            }
            assert!(lattice_membership_agrees(&t, &x));
        }
    }
}
