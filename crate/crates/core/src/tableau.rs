//! Bitableaux: fillings of a bipartition's two diagrams by `1..n`.

use std::fmt;

use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::perm::{self, SignedPerm};

/// `rows[k][r]` is row `r` of component `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitableau {
    shape: Bipartition,
    rows: [Vec<Vec<u32>>; 2],
}

impl Bitableau {
    /// Validates that `rows` fills a bipartition with each of `1..n` once.
    pub fn new(rows: [Vec<Vec<u32>>; 2]) -> Result<Self> {
        let shape = Bipartition::new(
            crate::bipartition::Partition::new(rows[0].iter().map(Vec::len).collect())
                .map_err(|e| Error::MalformedTableau(e.to_string()))?,
            crate::bipartition::Partition::new(rows[1].iter().map(Vec::len).collect())
                .map_err(|e| Error::MalformedTableau(e.to_string()))?,
        );
        if rows.iter().flatten().any(Vec::is_empty) {
            return Err(Error::MalformedTableau("empty row".into()));
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten().flatten() {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::MalformedTableau(format!(
                    "entry {x} repeated or out of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Bitableau { shape, rows })
    }

    pub fn shape(&self) -> &Bipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self, k: usize) -> &[Vec<u32>] {
        &self.rows[k]
    }

    fn boxes(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().flatten().copied()
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard()
            && self.rows.iter().all(|comp| {
                comp.windows(2).all(|pair| {
                    pair[1]
                        .iter()
                        .zip(&pair[0])
                        .all(|(below, above)| above < below)
                })
            })
    }

    /// Row reading word: first component top to bottom, then the second.
    pub fn reading_word(&self) -> Vec<u32> {
        self.boxes().collect()
    }

    /// `w.t`: replaces each entry `i` by `w(i)`. `w` must lie in `S_n`.
    pub fn act(&self, w: &SignedPerm) -> Bitableau {
        let map = |x: &u32| w.apply(*x as i32) as u32;
        Bitableau {
            shape: self.shape.clone(),
            rows: [0, 1].map(|k| {
                self.rows[k]
                    .iter()
                    .map(|r| r.iter().map(map).collect())
                    .collect()
            }),
        }
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = |k: usize| -> String {
            if self.rows[k].is_empty() {
                return "-".to_string();
            }
            self.rows[k]
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect::<Vec<_>>()
                .join("/")
        };
        write!(f, "({} | {})", comp(0), comp(1))
    }
}

/// The canonical tableau: `1..l` fill the first component row by row, then
/// `l+1..n` fill the second.
pub fn canonical(shape: &Bipartition) -> Bitableau {
    let mut next = 1u32;
    let rows = [0, 1].map(|k| {
        shape
            .component(k)
            .parts()
            .iter()
            .map(|&p| {
                let row: Vec<u32> = (next..next + p as u32).collect();
                next += p as u32;
                row
            })
            .collect()
    });
    Bitableau {
        shape: shape.clone(),
        rows,
    }
}

/// `d(t)`: the permutation sending each entry of the canonical tableau to
/// the entry of `t` in the same box.
pub fn d_of(t: &Bitableau) -> Result<SignedPerm> {
    if !t.is_row_standard() {
        return Err(Error::MalformedTableau(format!("{t} is not row-standard")));
    }
    let canon = canonical(&t.shape);
    let mut window = vec![0i32; t.size()];
    for (c, x) in canon.boxes().zip(t.boxes()) {
        window[c as usize - 1] = x as i32;
    }
    SignedPerm::from_window(window)
}

/// `sigma_lambda`: the longest element of the Young subgroup of `shape`,
/// with blocks taken consecutively through both components.
pub fn sigma_lambda(shape: &Bipartition) -> SignedPerm {
    perm::longest_of_blocks(shape.size(), &shape.blocks())
}

fn sort_by_d(mut ts: Vec<Bitableau>) -> Vec<Bitableau> {
    ts.sort_by_cached_key(|t| {
        let d = d_of(t).expect("row-standard");
        (d.length(), d)
    });
    ts
}

/// All row-standard bitableaux of `shape`, sorted by `d(t)` in
/// (length, window) order.
pub fn row_standard(shape: &Bipartition) -> Vec<Bitableau> {
    let lens: Vec<(usize, usize)> = [0, 1]
        .iter()
        .flat_map(|&k| shape.component(k).parts().iter().map(move |&p| (k, p)))
        .collect();
    let n = shape.size() as u32;
    let mut out = Vec::new();
    let mut fill: Vec<Vec<u32>> = vec![Vec::new(); lens.len()];
    fn rec(
        x: u32,
        n: u32,
        lens: &[(usize, usize)],
        fill: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if x > n {
            out.push(fill.clone());
            return;
        }
        for r in 0..lens.len() {
            if fill[r].len() < lens[r].1 {
                fill[r].push(x);
                rec(x + 1, n, lens, fill, out);
                fill[r].pop();
            }
        }
    }
    let mut fills = Vec::new();
    rec(1, n, &lens, &mut fill, &mut fills);
    for f in fills {
        let mut rows: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
        for ((k, _), row) in lens.iter().zip(f) {
            rows[*k].push(row);
        }
        out.push(Bitableau {
            shape: shape.clone(),
            rows,
        });
    }
    sort_by_d(out)
}

/// `T(lambda)`: the standard bitableaux of `shape`, sorted by `d(t)` in
/// (length, window) order.
pub fn standard(shape: &Bipartition) -> Vec<Bitableau> {
    sort_by_d(
        row_standard(shape)
            .into_iter()
            .filter(Bitableau::is_standard)
            .collect(),
    )
}

/// Row-standard bitableaux whose first component holds exactly `1..l`.
pub fn row_standard_l(shape: &Bipartition) -> Vec<Bitableau> {
    let l = shape.l() as u32;
    row_standard(shape)
        .into_iter()
        .filter(|t| t.rows[0].iter().flatten().all(|&x| x <= l))
        .collect()
}

/// Standard bitableaux whose first component holds exactly `1..l`.
pub fn standard_l(shape: &Bipartition) -> Vec<Bitableau> {
    row_standard_l(shape)
        .into_iter()
        .filter(Bitableau::is_standard)
        .collect()
}

/// Splits `d(s) = y d(t)` with `y` in `Y_{l,n-l}` and `t` row-standard with
/// `1..l` in its first component.
pub fn coset_decomposition(s: &Bitableau) -> Result<(SignedPerm, Bitableau)> {
    if !s.is_row_standard() {
        return Err(Error::MalformedTableau(format!("{s} is not row-standard")));
    }
    let mut first: Vec<i32> = s.rows[0].iter().flatten().map(|&x| x as i32).collect();
    first.sort_unstable();
    let y = perm::shuffle_from_subset(s.size(), &first);
    let t = s.act(&y.inverse());
    Ok((y, t))
}

/// `{d(t) sigma_lambda a_l : t in T(lambda)}`, in the order of [`standard`].
pub fn distinguished_cell(shape: &Bipartition) -> Vec<SignedPerm> {
    let n = shape.size();
    let a = perm::special_elements(n, shape.l()).expect("l <= n").a;
    let sa = sigma_lambda(shape).compose(&a);
    standard(shape)
        .iter()
        .map(|t| d_of(t).expect("standard").compose(&sa))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartition::bipartitions;
    use crate::perm::{coset_reps_y, special_elements};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn tab(a: &[&[u32]], b: &[&[u32]]) -> Bitableau {
        Bitableau::new([
            a.iter().map(|r| r.to_vec()).collect(),
            b.iter().map(|r| r.to_vec()).collect(),
        ])
        .unwrap()
    }

    fn win(v: &[i32]) -> SignedPerm {
        SignedPerm::from_window(v.to_vec()).unwrap()
    }

    fn hook_count(shape: &Bipartition) -> usize {
        // |T(lambda)| = C(n, l) f(lambda1) f(lambda2) by the hook length formula
        fn f(p: &crate::bipartition::Partition) -> usize {
            let parts = p.parts();
            let conj = p.conjugate();
            let mut hooks = 1usize;
            for (r, &len) in parts.iter().enumerate() {
                for c in 0..len {
                    hooks *= len - c + conj.parts()[c] - r - 1;
                }
            }
            (1..=p.size()).product::<usize>() / hooks
        }
        let n = shape.size();
        let l = shape.l();
        let binom = (1..=n).product::<usize>()
            / ((1..=l).product::<usize>() * (1..=n - l).product::<usize>());
        binom * f(&shape.first) * f(&shape.second)
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard(&bp("1|2")).len(), 3);
        for n in 1..=5 {
            assert_eq!(standard(&bp(&format!("{n}|-"))).len(), 1);
            let mut total = 0;
            for shape in bipartitions(n) {
                let ts = standard(&shape);
                assert_eq!(ts.len(), hook_count(&shape), "{shape}");
                total += ts.len() * ts.len();
            }
            assert_eq!(total, (1 << n) * (1..=n).product::<usize>());
        }
    }

    #[test]
    fn canonical_and_d() {
        let shape = bp("1|2");
        let t0 = canonical(&shape);
        assert_eq!(t0, tab(&[&[1]], &[&[2, 3]]));
        assert!(d_of(&t0).unwrap().is_identity());
        assert_eq!(d_of(&tab(&[&[2]], &[&[1, 3]])).unwrap(), win(&[2, 1, 3]));
        assert_eq!(d_of(&tab(&[&[3]], &[&[1, 2]])).unwrap(), win(&[3, 1, 2]));
        assert!(d_of(&tab(&[&[1]], &[&[3, 2]])).is_err());
        assert!(Bitableau::new([vec![vec![1]], vec![vec![1, 2]]]).is_err());
        assert_eq!(canonical(&bp("2.1|1")), tab(&[&[1, 2], &[3]], &[&[4]]));
    }

    #[test]
    fn d_moves_canonical_tableau() {
        for shape in bipartitions(4) {
            let canon = canonical(&shape);
            for t in row_standard(&shape) {
                assert_eq!(canon.act(&d_of(&t).unwrap()), t);
            }
        }
    }

    #[test]
    fn row_standard_l_is_a_subset() {
        for shape in bipartitions(4) {
            let all = row_standard(&shape);
            let l = shape.l() as u32;
            for t in row_standard_l(&shape) {
                assert!(all.contains(&t));
                assert!(t.rows(0).iter().flatten().all(|&x| x <= l));
            }
            // |T^r| = |Y_{l,n-l}| |T^r_l|
            let ys = coset_reps_y(shape.size(), shape.l()).unwrap();
            assert_eq!(all.len(), ys.len() * row_standard_l(&shape).len());
        }
    }

    #[test]
    fn coset_decomposition_properties() {
        for n in 1..=4 {
            for shape in bipartitions(n) {
                let canon = canonical(&shape);
                let (y, t) = coset_decomposition(&canon).unwrap();
                assert!(y.is_identity());
                assert_eq!(t, canon);
                let ys = coset_reps_y(n, shape.l()).unwrap();
                let tl = row_standard_l(&shape);
                for s in row_standard(&shape) {
                    let (y, t) = coset_decomposition(&s).unwrap();
                    assert!(ys.contains(&y));
                    assert!(tl.contains(&t));
                    let ds = d_of(&s).unwrap();
                    let dt = d_of(&t).unwrap();
                    assert_eq!(ds, y.compose(&dt));
                    assert_eq!(ds.length(), y.length() + dt.length());
                    assert_eq!(s.is_standard(), t.is_standard(), "{s}");
                }
            }
        }
    }

    #[test]
    fn sigma_lambda_properties() {
        for n in 1..=5 {
            for shape in bipartitions(n) {
                let s = sigma_lambda(&shape);
                assert_eq!(
                    s.length(),
                    shape.first.young_longest_length() + shape.second.young_longest_length()
                );
                // every generator of the Young subgroup is a left descent
                let mut start = 0;
                for b in shape.blocks() {
                    for i in start + 1..start + b {
                        assert!(s.is_left_descent(crate::perm::Gen::S(i)));
                    }
                    start += b;
                }
            }
        }
    }

    #[test]
    fn distinguished_cell_examples() {
        let words: Vec<String> = distinguished_cell(&bp("1|2"))
            .iter()
            .map(|w| w.word_string())
            .collect();
        assert_eq!(words, ["s2 t", "s1 s2 t", "s2 s1 s2 t"]);
        for n in 1..=4 {
            let top = bp(&format!("{n}|-"));
            let sa = sigma_lambda(&top).compose(&special_elements(n, n).unwrap().a);
            assert_eq!(distinguished_cell(&top), vec![sa]);
        }
    }

    #[test]
    fn distinguished_cell_lengths_add() {
        for shape in bipartitions(4) {
            let a = special_elements(4, shape.l()).unwrap().a;
            let sa = sigma_lambda(&shape).compose(&a);
            for (t, x) in standard(&shape).iter().zip(distinguished_cell(&shape)) {
                assert_eq!(x.length(), d_of(t).unwrap().length() + sa.length());
            }
        }
    }
}
