use std::collections::BTreeMap;

use num_rational::BigRational;

use super::{build_irreducible, NsError, NsIrredLabel, NsSubmodule};
use crate::combinatorics::Partition;

/// Multiplicities of the rank r-1 irreducibles in the restriction of `m` to
/// the subalgebra generated by P_1..P_{r-2}: each is dim Hom(N, Res m) at u0.
pub fn restriction_decompose(m: &NsSubmodule, u0: &BigRational) -> Result<BTreeMap<NsIrredLabel, usize>, NsError> {
    let r = m.rank();
    if r < 2 {
        return Err(NsError::Check("restriction needs r >= 2".into()));
    }
    let res = m.specialize::<BigRational>(u0)?.truncate_gens(r - 2);
    let mut out = BTreeMap::new();
    let mut total = 0;
    for label in NsIrredLabel::all(r - 1) {
        let n = build_irreducible(&label, r - 1)?.specialize::<BigRational>(u0)?;
        let k = res.hom_from(&n)?.dim();
        if k > 0 {
            total += k * n.dim();
            out.insert(label, k);
        }
    }
    if total != m.dim() {
        return Err(NsError::Check(format!("restriction of {} accounts for {total} of {} dimensions", m.label, m.dim())));
    }
    Ok(out)
}

fn add(out: &mut BTreeMap<NsIrredLabel, usize>, label: NsIrredLabel) {
    *out.entry(label).or_insert(0) += 1;
}

/// M_a ⊗ M_b as a sum of irreducibles, zero summands omitted.
fn tensor_summands(a: &Partition, b: &Partition, out: &mut BTreeMap<NsIrredLabel, usize>) {
    if a != b {
        add(out, NsIrredLabel::pair(a.clone(), b.clone()));
        return;
    }
    if a.num_syt() > 1 {
        add(out, NsIrredLabel::Plus(a.clone()));
        add(out, NsIrredLabel::Minus(a.clone()));
    }
    add(out, NsIrredLabel::EpsPlus);
}

fn removals(p: &Partition) -> Vec<Partition> {
    (0..p.corners().len()).map(|i| p.remove_corner(i)).collect()
}

/// The predicted restriction of a rank-r irreducible, zero modules omitted.
pub fn predict_restriction(label: &NsIrredLabel) -> BTreeMap<NsIrredLabel, usize> {
    let mut out = BTreeMap::new();
    match label {
        NsIrredLabel::Pair(l, m) => {
            for a in removals(l) {
                for b in removals(m) {
                    tensor_summands(&a, &b, &mut out);
                }
            }
        }
        NsIrredLabel::Plus(l) | NsIrredLabel::Minus(l) => {
            let rem = removals(l);
            for (i, a) in rem.iter().enumerate() {
                for b in &rem[i + 1..] {
                    add(&mut out, NsIrredLabel::pair(a.clone(), b.clone()));
                }
                if a.num_syt() > 1 {
                    add(&mut out, if matches!(label, NsIrredLabel::Plus(_)) { NsIrredLabel::Plus(a.clone()) } else { NsIrredLabel::Minus(a.clone()) });
                }
            }
            if matches!(label, NsIrredLabel::Plus(_)) {
                for _ in 1..rem.len() {
                    add(&mut out, NsIrredLabel::EpsPlus);
                }
            }
        }
        NsIrredLabel::EpsPlus => add(&mut out, NsIrredLabel::EpsPlus),
    }
    out
}

/// Which case of the branching rule applies, with the refined names for the
/// labels built from (r) and (r-1,1).
pub fn restriction_case(label: &NsIrredLabel) -> &'static str {
    match label {
        NsIrredLabel::Pair(l, m) => {
            let r = l.size();
            let common: usize = (0..l.len().max(m.len())).map(|i| l.part(i).min(m.part(i))).sum();
            if common + 1 < r {
                "1a"
            } else if l.parts() == [r] && m.parts() == [r - 1, 1] {
                "1b'"
            } else {
                "1b"
            }
        }
        NsIrredLabel::Plus(l) => {
            if l.parts() == [l.size() - 1, 1] {
                "2'"
            } else {
                "2"
            }
        }
        NsIrredLabel::Minus(l) => {
            if l.parts() == [l.size() - 1, 1] {
                "3'"
            } else {
                "3"
            }
        }
        NsIrredLabel::EpsPlus => "4",
    }
}
