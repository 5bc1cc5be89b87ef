//! Robinson-Schensted correspondence for signed permutations.
//!
//! The window is scanned left to right. A positive entry `w(i)` is row
//! inserted into the first component of `P` and `i` recorded at the new box
//! of the first component of `Q`; a negative entry contributes `|w(i)|` to
//! the second components in the same way.

use crate::bipartition::Bipartition;
use crate::perm::SignedPerm;
use crate::tableau::Bitableau;

fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// `(P(w), Q(w))`.
pub fn rs(w: &SignedPerm) -> (Bitableau, Bitableau) {
    let mut p: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
    let mut q: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
    for (i, &x) in w.window().iter().enumerate() {
        let k = usize::from(x < 0);
        let r = row_insert(&mut p[k], x.unsigned_abs());
        if r == q[k].len() {
            q[k].push(Vec::new());
        }
        q[k][r].push(i as u32 + 1);
    }
    (
        Bitableau::new(p).expect("insertion yields a bitableau"),
        Bitableau::new(q).expect("recording yields a bitableau"),
    )
}

/// The common shape of `P(w)` and `Q(w)`.
pub fn type_of(w: &SignedPerm) -> Bipartition {
    rs(w).1.shape().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartition::bipartitions;
    use crate::group::enumerate;
    use crate::perm::special_elements;
    use crate::tableau::{canonical, sigma_lambda, standard};
    use std::collections::HashSet;

    #[test]
    fn identity_is_one_row() {
        for n in 2..=4 {
            let (p, q) = rs(&SignedPerm::identity(n));
            let top: Bipartition = format!("{n}|-").parse().unwrap();
            assert_eq!(p, canonical(&top));
            assert_eq!(q, canonical(&top));
        }
    }

    #[test]
    fn s2t_shape() {
        let w = SignedPerm::parse_word("s2 t", 3).unwrap();
        assert_eq!(w.window(), &[-1, 3, 2]);
        let (p, q) = rs(&w);
        assert_eq!(p.shape().to_string(), "1.1|1");
        assert_eq!(q.shape().to_string(), "1.1|1");
        assert_eq!(p.rows(0), &[vec![2], vec![3]]);
    }

    #[test]
    fn bijection_onto_pairs() {
        for n in 2..=4 {
            let mut seen = HashSet::new();
            for w in enumerate(n).unwrap() {
                let (p, q) = rs(&w);
                assert!(p.is_standard() && q.is_standard());
                assert_eq!(p.shape(), q.shape());
                assert!(seen.insert((p, q)));
            }
            let pairs: usize = bipartitions(n)
                .iter()
                .map(|b| standard(b).len().pow(2))
                .sum();
            assert_eq!(seen.len(), pairs);
        }
    }

    #[test]
    fn inverse_swaps_tableaux() {
        for w in enumerate(3).unwrap() {
            let (p, q) = rs(&w);
            let (pi, qi) = rs(&w.inverse());
            assert_eq!((p, q), (qi, pi));
            assert_eq!(type_of(&w), type_of(&w.inverse()));
        }
    }

    #[test]
    fn distinguished_elements_have_swapped_type() {
        for n in 1..=5 {
            for shape in bipartitions(n) {
                let a = special_elements(n, shape.l()).unwrap().a;
                let x = sigma_lambda(&shape).compose(&a);
                assert_eq!(type_of(&x), shape.swap_conjugate_second(), "{shape}");
            }
        }
    }
}
