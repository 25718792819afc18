use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::{quantum_int, LaurentPoly};
use crate::combinatorics::{rsk_perm, Partition, Permutation};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn std_elem(r: usize, terms: &[(&str, &str)]) -> HeckeElement {
    HeckeElement::from_terms(r, Basis::Standard, terms.iter().map(|(w, c)| (p(w), lp(c))))
}

fn random_element(t: &KlTable, rng: &mut ChaCha8Rng) -> HeckeElement {
    let g = t.group();
    let terms = (0..3).map(|_| {
        let w = g.element(rng.gen_range(0..g.order())).clone();
        let c = LaurentPoly::monomial(rng.gen_range(-3i64..=3), rng.gen_range(-2..=2));
        (w, c)
    });
    HeckeElement::from_terms(t.rank(), Basis::Standard, terms.collect::<Vec<_>>())
}

#[test]
fn quadratic_relation() {
    let t = KlTable::new(3);
    let s = std_elem(3, &[("213", "1")]);
    let got = t.multiply(&s, &s).unwrap();
    assert_eq!(got, std_elem(3, &[("213", "u - u^-1"), ("123", "1")]));
}

#[test]
fn reduced_product() {
    let t = KlTable::new(3);
    let got = t.multiply(&std_elem(3, &[("213", "1")]), &std_elem(3, &[("132", "1")])).unwrap();
    let s1s2 = Permutation::generator(3, 1).compose(&Permutation::generator(3, 2)).unwrap();
    assert_eq!(got, HeckeElement::basis_element(s1s2, Basis::Standard));
}

#[test]
fn associativity_h4() {
    let t = KlTable::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (a, b, c) = (random_element(&t, &mut rng), random_element(&t, &mut rng), random_element(&t, &mut rng));
        let left = t.multiply(&t.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = t.multiply(&a, &t.multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn bar_of_generators() {
    let t = KlTable::new(3);
    let s = std_elem(3, &[("213", "1")]);
    assert_eq!(t.bar_element(&s).unwrap(), std_elem(3, &[("213", "1"), ("123", "u^-1 - u")]));
    let cs = std_elem(3, &[("213", "1"), ("123", "u^-1")]);
    assert_eq!(t.bar_element(&cs).unwrap(), cs);
    assert_eq!(t.kl_lower(&p("213")).unwrap(), cs);
    assert_eq!(t.kl_upper(&p("213")).unwrap(), std_elem(3, &[("213", "1"), ("123", "-u")]));
}

#[test]
fn bar_is_involution_h4() {
    let t = KlTable::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let a = random_element(&t, &mut rng);
        assert_eq!(t.bar_element(&t.bar_element(&a).unwrap()).unwrap(), a);
    }
}

#[test]
fn longest_element_of_s3() {
    let t = KlTable::new(3);
    let w0 = Permutation::longest(3);
    let expected = HeckeElement::from_terms(3, Basis::Standard, Permutation::all(3).into_iter().map(|x| {
        let e = x.length() as i32 - 3;
        (x, LaurentPoly::monomial(1, e))
    }));
    assert_eq!(t.kl_lower(&w0).unwrap(), expected);
}

#[test]
fn kl_bases_are_bar_invariant_and_congruent() {
    for r in 1..=5 {
        let t = KlTable::new(r);
        let g = t.group();
        for w in 0..g.order() {
            let wp = g.element(w);
            for (basis, sign) in [(Basis::Lower, -1), (Basis::Upper, 1)] {
                let c = HeckeElement::basis_element(wp.clone(), basis);
                let std = t.convert(&c, Basis::Standard).unwrap();
                assert_eq!(t.bar_element(&std).unwrap(), std, "r={r} w={wp}");
                for (x, coeff) in std.coords() {
                    if x == wp {
                        assert!(coeff.is_one());
                    } else {
                        assert!(crate::combinatorics::bruhat_leq(x, wp).unwrap());
                        let ok = if sign < 0 { coeff.max_exp().unwrap() < 0 } else { coeff.min_exp().unwrap() > 0 };
                        assert!(ok, "r={r} w={wp} x={x} coeff={coeff}");
                    }
                }
            }
        }
    }
}

#[test]
fn unitriangular_through_s6() {
    let t = KlTable::new(6);
    for w in 0..t.group().order() {
        let col = t.lower_column(w);
        assert_eq!(col.last().map(|(x, p)| (*x, p.is_one())), Some((w, true)));
        assert!(col.iter().all(|(x, p)| *x == w || p.max_exp().unwrap() < 0));
    }
}

#[test]
fn mu_values() {
    let t = KlTable::new(4);
    assert_eq!(t.mu(&Permutation::identity(4), &Permutation::generator(4, 2)).unwrap(), 1);
    let g = t.group();
    for x in 0..g.order() {
        for w in 0..g.order() {
            let m = t.mu_index(x, w);
            assert_eq!(m, t.mu_index(w, x));
            assert!(m >= 0);
            let (lx, lw) = (g.length(x), g.length(w));
            if lw > lx && (lw - lx) % 2 == 0 {
                assert_eq!(m, 0);
            }
        }
    }
}

fn is_knuth_move(v: &[u8], i: usize) -> bool {
    let (a, b) = (v[i].min(v[i + 1]), v[i].max(v[i + 1]));
    let between = |c: u8| a < c && c < b;
    (i > 0 && between(v[i - 1])) || (i + 2 < v.len() && between(v[i + 2]))
}

#[test]
fn dual_knuth_neighbors_have_mu_one() {
    for r in 3..=5 {
        let t = KlTable::new(r);
        let g = t.group();
        let mut count = 0;
        for w in 0..g.order() {
            let v = g.element(g.inverse(w)).one_line().to_vec();
            for i in 0..r - 1 {
                if is_knuth_move(&v, i) {
                    let x = g.left_mul(w, i + 1);
                    assert_eq!(t.mu_index(x, w), 1);
                    assert_eq!(rsk_perm(g.element(x)).1, rsk_perm(g.element(w)).1);
                    count += 1;
                }
            }
        }
        assert!(count > 0);
    }
}

#[test]
fn theta_relates_the_two_bases() {
    for r in 1..=4 {
        let t = KlTable::new(r);
        for w in t.group().elements().to_vec() {
            let lower = HeckeElement::basis_element(w.clone(), Basis::Lower);
            let th = t.convert(&t.theta(&lower).unwrap(), Basis::Upper).unwrap();
            let sign = if w.length() % 2 == 0 { 1 } else { -1 };
            assert_eq!(th, HeckeElement::from_terms(r, Basis::Upper, [(w.clone(), LaurentPoly::constant(sign))]));
        }
    }
}

#[test]
fn theta_of_generator() {
    let t = KlTable::new(3);
    let s = std_elem(3, &[("132", "1")]);
    let got = t.multiply(&t.theta(&s).unwrap(), &s).unwrap();
    assert_eq!(got, HeckeElement::identity(3).scale(&LaurentPoly::constant(-1)));
}

#[test]
fn one_op_reverses_products() {
    let t = KlTable::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let (a, b) = (random_element(&t, &mut rng), random_element(&t, &mut rng));
        let lhs = t.one_op(&t.multiply(&a, &b).unwrap()).unwrap();
        let rhs = t.multiply(&t.one_op(&b).unwrap(), &t.one_op(&a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = t.theta_op(&t.multiply(&a, &b).unwrap()).unwrap();
        let rhs = t.multiply(&t.theta_op(&b).unwrap(), &t.theta_op(&a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn canonical_right_action_matches_products() {
    let t = KlTable::new(4);
    let two = quantum_int(2);
    for w in t.group().elements().to_vec() {
        for s in 1..4 {
            for basis in [Basis::Lower, Basis::Upper] {
                let formula = t.right_multiply_canonical(&w, s, basis).unwrap();
                assert_eq!(formula, t.right_multiply_by_product(&w, s, basis).unwrap(), "w={w} s={s}");
                if w.has_right_descent(s) {
                    let c = if basis == Basis::Lower { two.clone() } else { -&two };
                    assert_eq!(formula, HeckeElement::from_terms(4, basis, [(w.clone(), c)]));
                }
            }
        }
    }
}

fn generator_edges(t: &KlTable, basis: Basis) -> Vec<(usize, usize)> {
    let g = t.group();
    let mut edges = Vec::new();
    for w in 0..g.order() {
        for s in 1..t.rank() {
            let img = t.right_multiply_canonical(g.element(w), s, basis).unwrap();
            edges.extend(img.coords().keys().map(|x| (w, g.index_of(x).unwrap())));
        }
    }
    edges
}

#[test]
fn right_cells_are_insertion_classes() {
    for r in 1..=5 {
        let t = KlTable::new(r);
        let g = t.group();
        let expected: usize = Partition::all_of_size(r).iter().map(|l| l.num_syt() as usize).sum();
        for basis in [Basis::Lower, Basis::Upper] {
            let c = cells_from_edges(g.order(), generator_edges(&t, basis));
            assert_eq!(c.num_blocks(), expected);
            for b in &c.blocks {
                let p0 = rsk_perm(g.element(b[0])).0;
                assert!(b.iter().all(|&w| rsk_perm(g.element(w)).0 == p0));
            }
        }
    }
}

#[test]
fn temperley_lieb_dimensions_are_catalan() {
    for (r, cat) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
        let t = KlTable::new(r);
        let tl = TemperleyLieb::new(&t, 2);
        assert_eq!(tl.dim(), cat);
        if r <= 5 {
            assert!(tl.killed_span_is_ideal(), "r={r}");
        }
    }
}

#[test]
fn temperley_lieb_kills_three_row_cells() {
    let t = KlTable::new(3);
    let tl = TemperleyLieb::new(&t, 2);
    let w0 = Permutation::longest(3);
    let x = tl.project(&HeckeElement::basis_element(w0, Basis::Upper)).unwrap();
    assert!(x.coords.is_empty());
}

#[test]
fn temperley_lieb_multiplication_is_associative() {
    let t = KlTable::new(4);
    let tl = TemperleyLieb::new(&t, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let xs: Vec<_> = (0..3).map(|_| tl.project(&random_element(&t, &mut rng)).unwrap()).collect();
        let l = tl.multiply(&tl.multiply(&xs[0], &xs[1]).unwrap(), &xs[2]).unwrap();
        let r = tl.multiply(&xs[0], &tl.multiply(&xs[1], &xs[2]).unwrap()).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn cache_round_trip() {
    let t = KlTable::new(4);
    let json = serde_json::to_string(&t.to_cache()).unwrap();
    let back = KlTable::from_cache(&serde_json::from_str(&json).unwrap()).unwrap();
    for w in 0..24 {
        assert_eq!(back.lower_column(w), t.lower_column(w));
        assert_eq!(back.upper_column(w), t.upper_column(w));
    }
    let mut bad = t.to_cache();
    bad.lower[5][0].1 = "u".into();
    assert!(KlTable::from_cache(&bad).is_err());
}
