use super::{CombError, Permutation, Tableau};

/// Row insertion of a word; returns (insertion tableau P, recording tableau Q).
pub fn rsk(word: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in word.iter().enumerate() {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut p[row][j], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (Tableau::new(p).expect("insertion shape"), Tableau::new(q).expect("recording shape"))
}

pub fn rsk_perm(w: &Permutation) -> (Tableau, Tableau) {
    let word: Vec<usize> = w.one_line().iter().map(|&v| v as usize).collect();
    rsk(&word)
}

/// Inverse of [`rsk_perm`] on pairs of standard tableaux of equal shape.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation, CombError> {
    if p.shape() != q.shape() || !p.is_standard() || !q.is_standard() {
        return Err(CombError::InvalidTableau(format!("{p} / {q}")));
    }
    let mut p: Vec<Vec<usize>> = p.rows().to_vec();
    let mut q: Vec<Vec<usize>> = q.rows().to_vec();
    let n = q.iter().map(Vec::len).sum::<usize>();
    let mut word = vec![0u8; n];
    for step in (1..=n).rev() {
        let row = q.iter().position(|r| r.last() == Some(&step)).expect("recording entry");
        q[row].pop();
        let mut x = p[row].pop().expect("same shape");
        if p[row].is_empty() {
            p.pop();
            q.pop();
        }
        for r in (0..row).rev() {
            let j = p[r].iter().rposition(|&y| y < x).expect("bumping position");
            x = std::mem::replace(&mut p[r][j], x);
        }
        word[step - 1] = x as u8;
    }
    Permutation::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_words() {
        let (p, q) = rsk(&[1, 2, 3]);
        assert_eq!((p.to_string(), q.to_string()), ("123".into(), "123".into()));
        let (p, q) = rsk(&[2, 1]);
        assert_eq!((p.to_string(), q.to_string()), ("1/2".into(), "1/2".into()));
        let (p, q) = rsk(&[]);
        assert_eq!((p.size(), q.size()), (0, 0));
    }

    #[test]
    fn bijective_on_small_groups() {
        for r in 1..=6 {
            let mut seen = std::collections::HashSet::new();
            for w in Permutation::all(r) {
                let (p, q) = rsk_perm(&w);
                assert!(p.is_standard() && q.is_standard());
                assert_eq!(p.shape(), q.shape());
                assert_eq!(rsk_inverse(&p, &q).unwrap(), w);
                assert!(seen.insert((p, q)));
            }
        }
    }

    #[test]
    fn recording_tableau_of_w0_w_is_transposed() {
        for r in 1..=5 {
            let w0 = Permutation::longest(r);
            for w in Permutation::all(r) {
                let q = rsk_perm(&w).1;
                let q0 = rsk_perm(&w0.compose(&w).unwrap()).1;
                assert_eq!(q0, q.transpose());
            }
        }
    }
}
