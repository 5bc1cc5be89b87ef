//! Signed permutations realizing the Coxeter group `W_n` of type `B_n`.
//!
//! Composition is `(xy)(i) = x(y(i))`, every permutation is extended to
//! negative arguments by `w(-i) = -w(i)`, the generator `t` changes the sign
//! at position 1 and `s_i` swaps positions `i` and `i+1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A Coxeter generator of `W_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    T,
    /// `s_i` for `1 <= i < n`.
    S(usize),
}

impl Gen {
    /// `t` has index 0, `s_i` has index `i`.
    pub fn index(self) -> usize {
        match self {
            Gen::T => 0,
            Gen::S(i) => i,
        }
    }

    pub fn from_index(i: usize) -> Gen {
        if i == 0 {
            Gen::T
        } else {
            Gen::S(i)
        }
    }

    /// All generators of `W_n`: `t, s_1, ..., s_{n-1}`.
    pub fn all(n: usize) -> Vec<Gen> {
        (0..n).map(Gen::from_index).collect()
    }

    pub fn is_t(self) -> bool {
        self == Gen::T
    }

    pub fn parse(token: &str, n: usize) -> Result<Gen> {
        let g = match token {
            "t" => Gen::T,
            _ => {
                let i = token
                    .strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::UnknownToken(token.to_string()))?;
                Gen::S(i)
            }
        };
        if g.index() >= n.max(1) {
            return Err(Error::GeneratorOutOfRange {
                token: token.to_string(),
                n,
            });
        }
        Ok(g)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T => write!(f, "t"),
            Gen::S(i) => write!(f, "s{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of `W_n`, stored as its window `(w(1), ..., w(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    pub fn generator(g: Gen, n: usize) -> Result<Self> {
        if g.index() >= n {
            return Err(Error::GeneratorOutOfRange {
                token: g.to_string(),
                n,
            });
        }
        Ok(Self::identity(n).mul_gen_right(g))
    }

    /// Product of the generators as written, left to right.
    pub fn from_word(word: &[Gen], n: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        for &g in word {
            if g.index() >= n {
                return Err(Error::GeneratorOutOfRange {
                    token: g.to_string(),
                    n,
                });
            }
            w = w.mul_gen_right(g);
        }
        Ok(w)
    }

    /// Parses a whitespace-separated word such as `"s2 t"`.
    pub fn parse_word(text: &str, n: usize) -> Result<Self> {
        let word = parse_word(text, n)?;
        Self::from_word(&word, n)
    }

    /// Accepts either a window `[-1,3,2]` or a word `s2 t`.
    pub fn parse_any(text: &str, n: usize) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            let w: SignedPerm = text.parse()?;
            if w.rank() != n {
                return Err(Error::RankMismatch(w.rank(), n));
            }
            Ok(w)
        } else {
            Self::parse_word(text, n)
        }
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// `w(i)` for `i` in `±{1..n}`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in composition");
        SignedPerm {
            window: other.window.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut w = vec![0; self.rank()];
        for (k, &x) in self.window.iter().enumerate() {
            let pos = (x.unsigned_abs() - 1) as usize;
            let i = k as i32 + 1;
            w[pos] = if x < 0 { -i } else { i };
        }
        SignedPerm { window: w }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(k, &x)| x == k as i32 + 1)
    }

    /// `self * g`: acts on positions.
    pub fn mul_gen_right(&self, g: Gen) -> SignedPerm {
        let mut w = self.window.clone();
        match g {
            Gen::T => w[0] = -w[0],
            Gen::S(i) => w.swap(i - 1, i),
        }
        SignedPerm { window: w }
    }

    /// `g * self`: acts on values.
    pub fn mul_gen_left(&self, g: Gen) -> SignedPerm {
        let w = self
            .window
            .iter()
            .map(|&x| {
                let a = x.abs();
                let s = x.signum();
                match g {
                    Gen::T if a == 1 => -x,
                    Gen::S(i) if a == i as i32 => s * (i as i32 + 1),
                    Gen::S(i) if a == i as i32 + 1 => s * i as i32,
                    _ => x,
                }
            })
            .collect();
        SignedPerm { window: w }
    }

    pub fn mul_gen(&self, g: Gen, side: Side) -> SignedPerm {
        match side {
            Side::Left => self.mul_gen_left(g),
            Side::Right => self.mul_gen_right(g),
        }
    }

    /// Coxeter length: inversions of the window plus the absolute values of
    /// its negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        let neg: i32 = w.iter().filter(|&&x| x < 0).map(|x| -x).sum();
        inv + neg as usize
    }

    /// Number of occurrences of `t` in any reduced word.
    pub fn t_length(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    pub fn is_right_descent(&self, g: Gen) -> bool {
        match g {
            Gen::T => self.window[0] < 0,
            Gen::S(i) => self.window[i - 1] > self.window[i],
        }
    }

    pub fn is_left_descent(&self, g: Gen) -> bool {
        self.inverse().is_right_descent(g)
    }

    pub fn descents(&self, side: Side) -> Vec<Gen> {
        let base = match side {
            Side::Right => self.clone(),
            Side::Left => self.inverse(),
        };
        Gen::all(self.rank())
            .into_iter()
            .filter(|&g| base.is_right_descent(g))
            .collect()
    }

    /// A reduced word, obtained by repeatedly stripping the highest-index left
    /// descent. For example `s2 t`, `s1 s2 t`, `s2 s1 s2 t`.
    pub fn reduced_word(&self) -> Vec<Gen> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&g) = w.descents(Side::Left).last() {
            word.push(g);
            w = w.mul_gen_left(g);
        }
        word
    }

    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Bruhat order by the lifting property: with `s` a left descent of `w`,
    /// `y <= w` iff `sy <= sw` (when `sy < y`) or `y <= sw` (otherwise).
    pub fn bruhat_leq(&self, w: &SignedPerm) -> bool {
        assert_eq!(self.rank(), w.rank(), "rank mismatch in Bruhat comparison");
        let mut y = self.clone();
        let mut w = w.clone();
        loop {
            if y.is_identity() {
                return true;
            }
            let (ly, lw) = (y.length(), w.length());
            if ly > lw || (ly == lw && y != w) {
                return false;
            }
            if ly == lw {
                return true;
            }
            let s = w.descents(Side::Left)[0];
            let sw = w.mul_gen_left(s);
            if y.is_left_descent(s) {
                y = y.mul_gen_left(s);
            }
            w = sw;
        }
    }

    /// Whether `self` lies in the Young subgroup `S_{l,n-l}`.
    pub fn in_young_subgroup(&self, l: usize) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(k, &x)| x > 0 && ((k < l) == ((x as usize) <= l)))
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidWindow(s.to_string()))?;
        let window = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidWindow(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::from_window(window)
    }
}

/// Parses whitespace-separated generator tokens. `e` or an empty string is
/// the empty word.
pub fn parse_word(text: &str, n: usize) -> Result<Vec<Gen>> {
    text.split_whitespace()
        .filter(|t| *t != "e")
        .map(|t| Gen::parse(t, n))
        .collect()
}

/// The elements `a_l`, `sigma_l` and `w_l` for `0 <= l <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialElements {
    /// `t (s1 t) (s2 s1 t) ... (s_{l-1} ... s1 t)`.
    pub a: SignedPerm,
    /// Longest element of the symmetric group on `{1..l}`.
    pub sigma: SignedPerm,
    /// Longest element of the type `B_l` parabolic `<t, s1, ..., s_{l-1}>`.
    pub w: SignedPerm,
}

pub fn special_elements(n: usize, l: usize) -> Result<SpecialElements> {
    if l > n {
        return Err(Error::LOutOfRange { l, n });
    }
    let mut word = Vec::new();
    for k in 0..l {
        for i in (1..=k).rev() {
            word.push(Gen::S(i));
        }
        word.push(Gen::T);
    }
    let a = SignedPerm::from_word(&word, n)?;
    let mut sigma = SignedPerm::identity(n);
    let mut w = SignedPerm::identity(n);
    for k in 0..l {
        sigma.window[k] = (l - k) as i32;
        w.window[k] = -(k as i32 + 1);
    }
    Ok(SpecialElements { a, sigma, w })
}

/// Longest element of the Young subgroup whose blocks are the given
/// consecutive lengths, e.g. `[2, 1, 3]` reverses `1..2`, `3`, `4..6`.
pub fn longest_of_blocks(n: usize, blocks: &[usize]) -> SignedPerm {
    let mut window: Vec<i32> = (1..=n as i32).collect();
    let mut start = 0;
    for &b in blocks {
        window[start..start + b].reverse();
        start += b;
    }
    assert!(start <= n, "blocks exceed rank");
    SignedPerm { window }
}

/// `Y_{l,n-l}`: the minimal-length representatives of the left cosets
/// `y S_{l,n-l}` in `S_n`, i.e. permutations increasing on `1..l` and on
/// `l+1..n`. Sorted by (length, window).
pub fn coset_reps_y(n: usize, l: usize) -> Result<Vec<SignedPerm>> {
    if l > n {
        return Err(Error::LOutOfRange { l, n });
    }
    let mut out = Vec::new();
    for_each_subset(n, l, &mut |subset| out.push(shuffle_from_subset(n, subset)));
    out.sort_by_key(|w| (w.length(), w.clone()));
    Ok(out)
}

/// The element of `Y_{l,n-l}` mapping `1..l` increasingly onto `subset`.
pub fn shuffle_from_subset(n: usize, subset: &[i32]) -> SignedPerm {
    let mut window: Vec<i32> = subset.to_vec();
    window.extend((1..=n as i32).filter(|x| !subset.contains(x)));
    SignedPerm { window }
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[i32])) {
    fn rec(start: i32, n: i32, k: usize, cur: &mut Vec<i32>, f: &mut dyn FnMut(&[i32])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(1, n as i32, k, &mut Vec::new(), f);
}

/// The factorization `w = a_w a_l sigma_w b_w^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordForm {
    pub a_w: SignedPerm,
    pub l: usize,
    pub sigma_w: SignedPerm,
    pub b_w: SignedPerm,
}

impl CliffordForm {
    pub fn recompose(&self) -> SignedPerm {
        let n = self.a_w.rank();
        let a_l = special_elements(n, self.l).expect("l <= n").a;
        self.a_w
            .compose(&a_l)
            .compose(&self.sigma_w)
            .compose(&self.b_w.inverse())
    }
}

impl SignedPerm {
    /// Clifford normal form. `b_w` is read off from the positions of the
    /// negative entries, `a_w` from their absolute values, and `sigma_w` is
    /// what remains.
    pub fn clifford_form(&self) -> CliffordForm {
        let n = self.rank();
        let l = self.t_length();
        let neg_positions: Vec<i32> = (1..=n as i32)
            .filter(|&i| self.window[(i - 1) as usize] < 0)
            .collect();
        let mut neg_values: Vec<i32> = self.window.iter().filter(|&&x| x < 0).map(|x| -x).collect();
        neg_values.sort_unstable();
        let b_w = shuffle_from_subset(n, &neg_positions);
        let a_w = shuffle_from_subset(n, &neg_values);
        let a_l = special_elements(n, l).expect("t-length <= n").a;
        let sigma_w = a_l
            .inverse()
            .compose(&a_w.inverse())
            .compose(self)
            .compose(&b_w);
        debug_assert!(sigma_w.in_young_subgroup(l), "{self} -> sigma {sigma_w}");
        CliffordForm {
            a_w,
            l,
            sigma_w,
            b_w,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, HashSet};

    fn w(text: &str, n: usize) -> SignedPerm {
        SignedPerm::parse_word(text, n).unwrap()
    }

    fn win(v: &[i32]) -> SignedPerm {
        SignedPerm::from_window(v.to_vec()).unwrap()
    }

    fn all_elements(n: usize) -> Vec<SignedPerm> {
        // Closure under right multiplication by generators.
        let mut seen: HashSet<SignedPerm> = HashSet::new();
        let mut stack = vec![SignedPerm::identity(n)];
        while let Some(x) = stack.pop() {
            if seen.insert(x.clone()) {
                for g in Gen::all(n) {
                    stack.push(x.mul_gen_right(g));
                }
            }
        }
        seen.into_iter().collect()
    }

    /// All elements reachable by words of length <= `max_len`, keyed by the
    /// shortest word length seen (a brute-force length oracle).
    fn word_lengths(n: usize, max_len: usize) -> std::collections::HashMap<SignedPerm, usize> {
        let mut best = std::collections::HashMap::new();
        let mut frontier = vec![SignedPerm::identity(n)];
        best.insert(SignedPerm::identity(n), 0);
        for len in 1..=max_len {
            let mut next = Vec::new();
            for x in &frontier {
                for g in Gen::all(n) {
                    let y = x.mul_gen_right(g);
                    if !best.contains_key(&y) {
                        best.insert(y.clone(), len);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        best
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(w("t", 3), win(&[-1, 2, 3]));
        assert_eq!(w("s2 t", 3), win(&[-1, 3, 2]));
        assert_eq!(w("", 3), SignedPerm::identity(3));
        assert_eq!(w("s2 t", 3).length(), 2);
        assert!(matches!(
            SignedPerm::parse_word("x1", 3),
            Err(Error::UnknownToken(_))
        ));
        assert!(matches!(
            SignedPerm::parse_word("s3", 3),
            Err(Error::GeneratorOutOfRange { .. })
        ));
        assert!(SignedPerm::parse_word("s0", 3).is_err());
    }

    #[test]
    fn window_parsing() {
        assert_eq!("[-1,3,2]".parse::<SignedPerm>().unwrap(), win(&[-1, 3, 2]));
        assert!("[1,1,2]".parse::<SignedPerm>().is_err());
        assert!("[0,1]".parse::<SignedPerm>().is_err());
        assert!("1,2".parse::<SignedPerm>().is_err());
        assert_eq!(win(&[-1, 3, 2]).to_string(), "[-1,3,2]");
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPerm::identity(3).length(), 0);
        assert_eq!(w("t", 3).length(), 1);
        let a2 = special_elements(2, 2).unwrap().a;
        assert_eq!(a2, w("t s1 t", 2));
        assert_eq!(a2.length(), 3);
        // t s1 t is reduced: no shorter word reaches it
        assert_eq!(word_lengths(2, 4)[&a2], 3);
    }

    #[test]
    fn length_matches_shortest_word() {
        for n in [2, 3] {
            let oracle = word_lengths(n, 9);
            assert_eq!(oracle.len(), (1 << n) * (1..=n).product::<usize>());
            for (x, &len) in &oracle {
                assert_eq!(x.length(), len, "{x}");
            }
        }
    }

    #[test]
    fn length_of_words_up_to_five() {
        // l(word) <= |word| with equality iff reduced
        let n = 3;
        let oracle = word_lengths(n, 9);
        let gens = Gen::all(n);
        let mut words: Vec<Vec<Gen>> = vec![vec![]];
        for _ in 0..5 {
            let mut next = Vec::new();
            for word in &words {
                for &g in &gens {
                    let mut v = word.clone();
                    v.push(g);
                    next.push(v);
                }
            }
            for word in &next {
                let x = SignedPerm::from_word(word, n).unwrap();
                assert!(x.length() <= word.len());
                assert_eq!(x.length() == word.len(), oracle[&x] == word.len());
            }
            words = next;
        }
    }

    #[test]
    fn t_length_matches_reduced_words() {
        // minimum count of t over all reduced words, enumerated by brute force
        let n = 3;
        let mut min_t: std::collections::HashMap<SignedPerm, usize> = Default::default();
        let mut frontier = vec![(SignedPerm::identity(n), 0usize)];
        min_t.insert(SignedPerm::identity(n), 0);
        for len in 1..=9 {
            let mut next = Vec::new();
            for (x, tc) in &frontier {
                for g in Gen::all(n) {
                    let y = x.mul_gen_right(g);
                    if y.length() == len {
                        let c = tc + g.is_t() as usize;
                        let e = min_t.entry(y.clone()).or_insert(usize::MAX);
                        if c < *e {
                            *e = c;
                        }
                        next.push((y, c));
                    }
                }
            }
            next.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
            next.dedup();
            frontier = next;
        }
        assert_eq!(min_t.len(), 48);
        for (x, c) in min_t {
            assert_eq!(x.t_length(), c, "{x}");
        }
        for x in all_elements(4) {
            assert_eq!(x.t_length(), x.window().iter().filter(|&&v| v < 0).count());
        }
        assert_eq!(w("s2 t", 3).t_length(), 1);
        for l in 0..=4 {
            assert_eq!(special_elements(4, l).unwrap().a.t_length(), l);
        }
    }

    #[test]
    fn descent_examples() {
        assert_eq!(w("t", 3).descents(Side::Right), vec![Gen::T]);
        assert_eq!(w("s2 t", 3).descents(Side::Left), vec![Gen::T, Gen::S(2)]);
        assert!(SignedPerm::identity(3).descents(Side::Left).is_empty());
        assert!(SignedPerm::identity(3).descents(Side::Right).is_empty());
    }

    #[test]
    fn descents_agree_with_lengths() {
        for x in all_elements(4) {
            for g in Gen::all(4) {
                assert_eq!(
                    x.is_right_descent(g),
                    x.mul_gen_right(g).length() < x.length()
                );
                assert_eq!(
                    x.is_left_descent(g),
                    x.mul_gen_left(g).length() < x.length()
                );
                assert_eq!(
                    x.mul_gen_left(g),
                    SignedPerm::generator(g, 4).unwrap().compose(&x)
                );
            }
        }
    }

    #[test]
    fn inverse_and_composition() {
        for x in all_elements(3) {
            assert!(x.compose(&x.inverse()).is_identity());
            assert!(x.inverse().compose(&x).is_identity());
            assert_eq!(SignedPerm::from_word(&x.reduced_word(), 3).unwrap(), x);
            assert_eq!(x.reduced_word().len(), x.length());
        }
    }

    #[test]
    fn reduced_word_strings() {
        assert_eq!(w("s2 t", 3).word_string(), "s2 t");
        assert_eq!(w("s1 s2 t", 3).word_string(), "s1 s2 t");
        assert_eq!(w("s2 s1 s2 t", 3).word_string(), "s2 s1 s2 t");
        assert_eq!(SignedPerm::identity(3).word_string(), "e");
    }

    fn subword_ideal(x: &SignedPerm) -> BTreeSet<SignedPerm> {
        let word = x.reduced_word();
        let n = x.rank();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<Gen> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &g)| g)
                .collect();
            out.insert(SignedPerm::from_word(&sub, n).unwrap());
        }
        out
    }

    #[test]
    fn bruhat_examples() {
        let e = SignedPerm::identity(3);
        for x in all_elements(3) {
            assert!(e.bruhat_leq(&x));
        }
        assert!(w("s2 t", 3).bruhat_leq(&w("s1 s2 t", 3)));
        assert!(!w("s1 s2 t", 3).bruhat_leq(&w("s2 t", 3)));
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        let elems = all_elements(3);
        for x in &elems {
            let ideal = subword_ideal(x);
            for y in &elems {
                assert_eq!(y.bruhat_leq(x), ideal.contains(y), "{y} <= {x}");
            }
        }
    }

    #[test]
    fn special_element_examples() {
        let s0 = special_elements(3, 0).unwrap();
        let e = SignedPerm::identity(3);
        assert_eq!(
            (s0.a.clone(), s0.sigma.clone(), s0.w.clone()),
            (e.clone(), e.clone(), e.clone())
        );
        let s1 = special_elements(3, 1).unwrap();
        assert_eq!((s1.a, s1.sigma, s1.w), (w("t", 3), e.clone(), w("t", 3)));
        let s2 = special_elements(3, 2).unwrap();
        assert_eq!(s2.a, w("t s1 t", 3));
        assert_eq!(s2.sigma, w("s1", 3));
        assert_eq!(s2.w.length(), 4);
        for n in 2..=5 {
            for l in 0..=n {
                let s = special_elements(n, l).unwrap();
                assert_eq!(s.a, s.w.compose(&s.sigma));
                assert_eq!(s.a.length(), l * (l + 1) / 2);
                // w_l is the longest element of B_l: every generator of B_l is a descent
                for g in Gen::all(l) {
                    assert!(s.w.is_left_descent(g));
                }
            }
        }
        assert!(special_elements(3, 4).is_err());
    }

    #[test]
    fn coset_reps() {
        assert_eq!(coset_reps_y(3, 0).unwrap(), vec![SignedPerm::identity(3)]);
        assert_eq!(coset_reps_y(3, 1).unwrap().len(), 3);
        assert_eq!(coset_reps_y(5, 2).unwrap().len(), 10);
        assert!(coset_reps_y(3, 4).is_err());
    }

    fn young_subgroup(n: usize, l: usize) -> Vec<SignedPerm> {
        all_elements(n)
            .into_iter()
            .filter(|x| x.in_young_subgroup(l))
            .collect()
    }

    #[test]
    fn coset_reps_are_minimal_with_additive_length() {
        for n in 2..=4 {
            for l in 0..=n {
                let ys = coset_reps_y(n, l).unwrap();
                let sub = young_subgroup(n, l);
                assert_eq!(
                    sub.len(),
                    (1..=l).product::<usize>() * (1..=n - l).product::<usize>()
                );
                let mut all = BTreeSet::new();
                for y in &ys {
                    for s in &sub {
                        let ys_ = y.compose(s);
                        assert_eq!(ys_.length(), y.length() + s.length());
                        all.insert(ys_);
                    }
                }
                // cosets cover S_n exactly once
                assert_eq!(all.len(), (1..=n).product::<usize>());
            }
        }
    }

    #[test]
    fn y_times_a_l_has_t_length_l() {
        for n in 2..=4 {
            for l in 0..=n {
                let a = special_elements(n, l).unwrap().a;
                for y in coset_reps_y(n, l).unwrap() {
                    assert_eq!(y.compose(&a).t_length(), l);
                }
            }
        }
    }

    #[test]
    fn clifford_examples() {
        for l in 0..=3 {
            let a = special_elements(3, l).unwrap().a;
            let cf = a.clifford_form();
            let e = SignedPerm::identity(3);
            assert_eq!(
                cf,
                CliffordForm {
                    a_w: e.clone(),
                    l,
                    sigma_w: e.clone(),
                    b_w: e
                }
            );
        }
        let cf = w("s2 t", 3).clifford_form();
        assert_eq!(cf.l, 1);
        assert_eq!(cf.sigma_w, w("s2", 3));
        assert!(cf.a_w.is_identity() && cf.b_w.is_identity());
    }

    #[test]
    fn clifford_round_trip_and_uniqueness() {
        // search oracle: every (a, sigma, b) triple hits a distinct element
        for n in [3, 4] {
            let mut hits = BTreeSet::new();
            for l in 0..=n {
                let a_l = special_elements(n, l).unwrap().a;
                let ys = coset_reps_y(n, l).unwrap();
                for a in &ys {
                    for s in young_subgroup(n, l) {
                        for b in &ys {
                            let x = a.compose(&a_l).compose(&s).compose(&b.inverse());
                            let cf = x.clifford_form();
                            assert_eq!(
                                cf,
                                CliffordForm {
                                    a_w: a.clone(),
                                    l,
                                    sigma_w: s.clone(),
                                    b_w: b.clone()
                                }
                            );
                            hits.insert(x);
                        }
                    }
                }
            }
            assert_eq!(hits.len(), (1 << n) * (1..=n).product::<usize>());
            for x in all_elements(n) {
                assert_eq!(x.clifford_form().recompose(), x);
            }
        }
    }
}
