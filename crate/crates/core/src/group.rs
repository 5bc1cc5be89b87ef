//! The enumerated group `W_n` with multiplication tables and Bruhat ideals.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{Gen, Side, SignedPerm};

/// Largest rank the enumeration accepts.
pub const MAX_RANK: usize = 6;

/// Ranks above this never get a precomputed Bruhat table.
const BRUHAT_TABLE_MAX_RANK: usize = 5;

/// Index of an element in [`WeylGroup::elements`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// All of `W_n`, sorted by (length, window).
pub struct WeylGroup {
    n: usize,
    elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, ElemId>,
    lengths: Vec<u32>,
    // left[g][x] = g x, right[g][x] = x g
    left: Vec<Vec<ElemId>>,
    right: Vec<Vec<ElemId>>,
    inverse: Vec<ElemId>,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WeylGroup(B{}, {} elements)",
            self.n,
            self.elements.len()
        )
    }
}

/// All elements of `W_n` in (length, window) order.
pub fn enumerate(n: usize) -> Result<Vec<SignedPerm>> {
    if !(2..=MAX_RANK).contains(&n) {
        return Err(Error::RankOutOfRange {
            n,
            min: 2,
            max: MAX_RANK,
        });
    }
    Ok(WeylGroup::new(n)?.elements)
}

impl WeylGroup {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::RankOutOfRange {
                n,
                min: 1,
                max: MAX_RANK,
            });
        }
        let gens = Gen::all(n);
        let mut elements = vec![SignedPerm::identity(n)];
        let mut stratum = elements.clone();
        let mut len = 0;
        while !stratum.is_empty() {
            len += 1;
            let mut next: Vec<SignedPerm> = stratum
                .iter()
                .flat_map(|x| gens.iter().map(move |&g| x.mul_gen_right(g)))
                .filter(|y| y.length() == len)
                .collect();
            next.sort_unstable();
            next.dedup();
            elements.extend(next.iter().cloned());
            stratum = next;
        }
        let index: HashMap<SignedPerm, ElemId> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), ElemId(k as u32)))
            .collect();
        let id = |w: &SignedPerm| index[w];
        let lengths = elements.iter().map(|w| w.length() as u32).collect();
        let left = gens
            .iter()
            .map(|&g| elements.iter().map(|w| id(&w.mul_gen_left(g))).collect())
            .collect();
        let right = gens
            .iter()
            .map(|&g| elements.iter().map(|w| id(&w.mul_gen_right(g))).collect())
            .collect();
        let inverse = elements.iter().map(|w| id(&w.inverse())).collect();
        Ok(WeylGroup {
            n,
            elements,
            index,
            lengths,
            left,
            right,
            inverse,
            bruhat: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> Vec<Gen> {
        Gen::all(self.n)
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ElemId> + ExactSizeIterator {
        (0..self.elements.len() as u32).map(ElemId)
    }

    pub fn elem(&self, x: ElemId) -> &SignedPerm {
        &self.elements[x.idx()]
    }

    pub fn id_of(&self, w: &SignedPerm) -> Result<ElemId> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch(w.rank(), self.n));
        }
        Ok(self.index[w])
    }

    /// Looks up a word (`s2 t`) or a window (`[-1,3,2]`).
    pub fn parse(&self, text: &str) -> Result<ElemId> {
        self.id_of(&SignedPerm::parse_any(text, self.n)?)
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    pub fn length(&self, x: ElemId) -> usize {
        self.lengths[x.idx()] as usize
    }

    pub fn inverse(&self, x: ElemId) -> ElemId {
        self.inverse[x.idx()]
    }

    pub fn mul_gen(&self, g: Gen, x: ElemId, side: Side) -> ElemId {
        match side {
            Side::Left => self.left[g.index()][x.idx()],
            Side::Right => self.right[g.index()][x.idx()],
        }
    }

    /// `g x`.
    pub fn lmul(&self, g: Gen, x: ElemId) -> ElemId {
        self.left[g.index()][x.idx()]
    }

    /// `x g`.
    pub fn rmul(&self, x: ElemId, g: Gen) -> ElemId {
        self.right[g.index()][x.idx()]
    }

    pub fn is_left_descent(&self, g: Gen, x: ElemId) -> bool {
        self.lmul(g, x) < x
    }

    pub fn is_right_descent(&self, x: ElemId, g: Gen) -> bool {
        self.rmul(x, g) < x
    }

    pub fn left_descents(&self, x: ElemId) -> Vec<Gen> {
        self.gens()
            .into_iter()
            .filter(|&g| self.is_left_descent(g, x))
            .collect()
    }

    pub fn mul(&self, x: ElemId, y: ElemId) -> ElemId {
        self.index[&self.elem(x).compose(self.elem(y))]
    }

    pub fn word(&self, x: ElemId) -> String {
        self.elem(x).word_string()
    }

    /// Bruhat order. Uses the ideal table for small ranks.
    pub fn bruhat_leq(&self, y: ElemId, w: ElemId) -> bool {
        if self.n > BRUHAT_TABLE_MAX_RANK {
            return self.elem(y).bruhat_leq(self.elem(w));
        }
        let t = self.bruhat.get_or_init(|| self.bruhat_table());
        t[w.idx()][y.idx() / 64] >> (y.idx() % 64) & 1 == 1
    }

    // ideal(w) = ideal(u) ∪ s·ideal(u) for u = sw < w
    fn bruhat_table(&self) -> Vec<Vec<u64>> {
        let words = self.order().div_ceil(64);
        let mut table: Vec<Vec<u64>> = Vec::with_capacity(self.order());
        for w in self.ids() {
            let mut bits = vec![0u64; words];
            if let Some(&s) = self.left_descents(w).first() {
                let u = self.lmul(s, w);
                let ideal_u = &table[u.idx()];
                for (k, &word) in ideal_u.iter().enumerate() {
                    bits[k] |= word;
                    let mut rest = word;
                    while rest != 0 {
                        let b = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        let x = self.left[s.index()][k * 64 + b].idx();
                        bits[x / 64] |= 1 << (x % 64);
                    }
                }
            }
            bits[w.idx() / 64] |= 1 << (w.idx() % 64);
            table.push(bits);
        }
        table
    }

    /// The elements of the parabolic subgroup generated by `gens`.
    pub fn parabolic(&self, gens: &[Gen]) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![self.identity()];
        seen[0] = true;
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            out.push(x);
            for &g in gens {
                let y = self.rmul(x, g);
                if !seen[y.idx()] {
                    seen[y.idx()] = true;
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(enumerate(2).unwrap().len(), 8);
        assert_eq!(enumerate(3).unwrap().len(), 48);
        assert_eq!(enumerate(4).unwrap().len(), 384);
        assert!(matches!(enumerate(1), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(
            enumerate(MAX_RANK + 1),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn sorted_by_length_then_window() {
        let els = enumerate(4).unwrap();
        for pair in els.windows(2) {
            assert!((pair[0].length(), &pair[0]) < (pair[1].length(), &pair[1]));
        }
    }

    #[test]
    fn tables_agree_with_perm_arithmetic() {
        let g = WeylGroup::new(3).unwrap();
        for x in g.ids() {
            let w = g.elem(x);
            assert_eq!(g.elem(g.inverse(x)), &w.inverse());
            for s in g.gens() {
                assert_eq!(g.elem(g.lmul(s, x)), &w.mul_gen_left(s));
                assert_eq!(g.elem(g.rmul(x, s)), &w.mul_gen_right(s));
                assert_eq!(g.is_left_descent(s, x), w.is_left_descent(s));
            }
            for y in g.ids() {
                assert_eq!(g.bruhat_leq(y, x), g.elem(y).bruhat_leq(w));
            }
        }
    }

    #[test]
    fn parse_words_and_windows() {
        let g = WeylGroup::new(3).unwrap();
        assert_eq!(g.parse("s2 t").unwrap(), g.parse("[-1,3,2]").unwrap());
        assert_eq!(g.word(g.parse("[-1,3,2]").unwrap()), "s2 t");
        assert!(g.parse("[1,2]").is_err());
    }

    #[test]
    fn parabolic_sizes() {
        let g = WeylGroup::new(4).unwrap();
        assert_eq!(g.parabolic(&[Gen::S(1), Gen::S(3)]).len(), 4);
        assert_eq!(g.parabolic(&[Gen::T, Gen::S(1)]).len(), 8);
        assert_eq!(g.parabolic(&g.gens()).len(), 384);
    }
}
