//! Partitions, bipartitions and the dominance order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    /// Partial sums padded to `len` entries.
    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.0.get(i).copied().unwrap_or(0);
                acc
            })
            .collect()
    }

    /// `p(p-1)/2` summed over parts: the length of the longest element of
    /// the Young subgroup.
    pub fn young_longest_length(&self) -> usize {
        self.0.iter().map(|p| p * (p - 1) / 2).sum()
    }
}

/// All partitions of `m` in reverse lexicographic order: `(m)` first.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('.')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in `{s}`")));
        }
        Partition::new(parts)
    }
}

/// A pair `(first | second)` of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `|first|`, the number of entries the first component holds.
    pub fn l(&self) -> usize {
        self.first.size()
    }

    pub fn component(&self, k: usize) -> &Partition {
        if k == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    /// `(second* | first)`.
    pub fn swap_conjugate_second(&self) -> Bipartition {
        Bipartition::new(self.second.conjugate(), self.first.clone())
    }

    /// `(second | first*)`.
    pub fn swap_conjugate_first(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.conjugate())
    }

    /// Row lengths of the Young subgroup blocks: first component, then second.
    pub fn blocks(&self) -> Vec<usize> {
        self.first
            .parts()
            .iter()
            .chain(self.second.parts())
            .copied()
            .collect()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` needs a `|`")))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// All bipartitions of `n`: `|first|` from `n` down to 0, each component in
/// reverse lexicographic order.
pub fn bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for l in (0..=n).rev() {
        for p in partitions(l) {
            for q in partitions(n - l) {
                out.push(Bipartition::new(p.clone(), q));
            }
        }
    }
    out
}

/// The dominance order `lambda <= mu`, with the second component offset by
/// the size of the first.
pub fn dominance_leq(lambda: &Bipartition, mu: &Bipartition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let len = lambda.size().max(1);
    let first = lambda
        .first
        .partial_sums(len)
        .iter()
        .zip(mu.first.partial_sums(len))
        .all(|(a, b)| *a <= b);
    let second = lambda
        .second
        .partial_sums(len)
        .iter()
        .zip(mu.second.partial_sums(len))
        .all(|(a, b)| lambda.l() + a <= mu.l() + b);
    Ok(first && second)
}
