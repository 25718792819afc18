use super::*;
use crate::nonstandard::default_points;

fn shape(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn label(s: &str) -> NsIrredLabel {
    s.parse().unwrap()
}

fn u0() -> BigRational {
    default_points()[0].clone()
}

const ORDER: [&str; 5] = ["123/45", "124/35", "134/25", "125/34", "135/24"];

fn check_table(level: usize, rows: [[&str; 5]; 5]) {
    for (i, t) in ORDER.iter().enumerate() {
        for (j, u) in ORDER.iter().enumerate() {
            let chain = alpha(&tab(t), &tab(u)).unwrap();
            assert_eq!(chain.at_level(level), Some(&label(rows[i][j])), "level {level} at ({t}, {u})");
        }
    }
}

#[test]
fn y_tableaux() {
    assert_eq!(y_tableau(&shape("3,2")).unwrap(), tab("135/24"));
    assert_eq!(y_tableau(&shape("2,2")).unwrap(), tab("13/24"));
    assert_eq!(y_tableau(&shape("3,1")).unwrap(), tab("134/2"));
    assert_eq!(y_tableau(&shape("4")).unwrap(), tab("1234"));
    assert!(y_tableau(&shape("2,1,1")).is_err());
}

#[test]
fn top_level_table_for_three_two() {
    let s = "+3,2";
    let w = "-3,2";
    check_table(
        5,
        [
            [s, s, s, s, s],
            [w, s, s, s, s],
            [w, w, s, s, s],
            [w, w, w, s, s],
            [w, w, w, w, "eps+"],
        ],
    );
}

#[test]
fn second_level_table_for_three_two() {
    let (s, w, p) = ("+3,1", "-3,1", "3,1|2,2");
    check_table(
        4,
        [
            [s, s, s, p, p],
            [w, s, s, p, p],
            [w, w, "eps+", p, p],
            [p, p, p, "+2,2", "+2,2"],
            [p, p, p, "-2,2", "eps+"],
        ],
    );
}

#[test]
fn bold_example_chain() {
    let chain = alpha(&tab("124/35"), &tab("134/25")).unwrap();
    let expect: Vec<NsIrredLabel> = ["+3,2", "+3,1", "+2,1", "2|1,1"].iter().map(|s| label(s)).collect();
    assert_eq!(chain.0, expect);
    assert_eq!(chain.to_string(), "+3,2 > +3,1 > +2,1 > 2|1,1");
}

#[test]
fn alpha_images_have_the_right_sizes() {
    for r in 2..=6 {
        for a in Partition::two_row_of_size(r) {
            for b in Partition::two_row_of_size(r) {
                let mut counts: BTreeMap<NsIrredLabel, u128> = BTreeMap::new();
                let mut seen = BTreeSet::new();
                for t in syt_enumerate(&a) {
                    for u in syt_enumerate(&b) {
                        let c = alpha(&t, &u).unwrap();
                        assert_eq!(c.0.len(), r - 1);
                        for k in 2..=r {
                            c.at_level(k).unwrap().validate(k).unwrap();
                        }
                        *counts.entry(c.0[0].clone()).or_insert(0) += 1;
                        assert!(seen.insert(c));
                    }
                }
                for (l, n) in counts {
                    assert_eq!(l.dim(), n, "{l} in {a} x {b}");
                }
            }
        }
    }
}

#[test]
fn basis_of_three_two_square() {
    let b = seminormal_basis(&shape("3,2"), &shape("3,2"), &u0()).unwrap();
    assert_eq!(b.len(), 25);
    let counts = b.counts_by_top();
    assert_eq!(counts[&label("+3,2")], 14);
    assert_eq!(counts[&label("-3,2")], 10);
    assert_eq!(counts[&label("eps+")], 1);
    assert!(b.vectors.iter().all(|v| !is_zero_vector(v)));
    check_alpha_bijection(&b).unwrap();
    check_chain_membership(&b).unwrap();
}

#[test]
fn bijection_and_membership_up_to_five() {
    for r in 2..=5 {
        let shapes = Partition::two_row_of_size(r);
        for (i, a) in shapes.iter().enumerate() {
            for b in &shapes[i..] {
                let sb = seminormal_basis(a, b, &u0()).unwrap();
                assert_eq!(sb.len(), (a.num_syt() * b.num_syt()) as usize);
                check_alpha_bijection(&sb).unwrap();
                if r <= 4 {
                    check_chain_membership(&sb).unwrap();
                }
            }
        }
    }
}

#[test]
fn basis_of_one_irreducible_is_its_share() {
    let m = build_irreducible(&label("+3,1"), 4).unwrap();
    let own = seminormal_basis_of(&m, &u0()).unwrap();
    let all = seminormal_basis(&shape("3,1"), &shape("3,1"), &u0()).unwrap();
    assert_eq!(own.len(), 5);
    for (c, v) in own.chains.iter().zip(&own.vectors) {
        assert_eq!(all.vector_for(c), Some(v.as_slice()));
    }
}

#[test]
fn young_seminormal_chain_is_indexed_by_tableaux() {
    let vs = specht_seminormal(&shape("3,2"), &u0()).unwrap();
    let mut ts: Vec<Tableau> = vs.iter().map(|(t, _)| t.clone()).collect();
    ts.sort_by(crate::combinatorics::canonical_cmp);
    assert_eq!(ts, syt_enumerate(&shape("3,2")));
}

#[test]
fn tensor_chain_differs() {
    let c = compare_with_tensor_chain(&shape("3,2"), &shape("3,2"), &u0()).unwrap();
    assert_eq!(c.total, 25);
    // Snapshot: no product vector of the two Young chains lies on a nonstandard line.
    assert_eq!((c.parallel, c.parallel_any), (0, 0));
    assert_eq!(c.first_difference, Some(("123/45".to_string(), "123/45".to_string())));
}
