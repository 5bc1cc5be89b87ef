//! Total orders on the exponent group `Z^2` compatible with addition.
//!
//! An exponent `(i, j)` stands for the monomial `V^i v^j`. The order picks out
//! which monomials count as "negative", which in turn pins down the
//! Kazhdan-Lusztig basis.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exponent pair `(i, j)` of the monomial `V^i v^j`.
pub type Exp = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with the `V`-exponent dominant (the asymptotic case).
    Asymptotic,
    /// Lexicographic with the `v`-exponent dominant.
    RevLex,
    /// `(i,j) < (i',j')` iff `xi+yj < xi'+yj'`, ties broken by `i < i'`.
    ///
    /// The weights are stored as coprime positive integers; scaling both
    /// weights by a positive rational gives the same order.
    Weighted { x: i64, y: i64 },
}

impl MonomialOrder {
    /// Builds a weighted order from positive rational weights.
    pub fn weighted(x: Ratio<i64>, y: Ratio<i64>) -> Result<Self> {
        if x <= Ratio::from_integer(0) || y <= Ratio::from_integer(0) {
            return Err(Error::Parse(format!(
                "weights must be positive, got {x},{y}"
            )));
        }
        let den = x.denom().lcm(y.denom());
        let xi = x.numer() * (den / x.denom());
        let yi = y.numer() * (den / y.denom());
        let g = xi.gcd(&yi);
        Ok(MonomialOrder::Weighted {
            x: xi / g,
            y: yi / g,
        })
    }

    /// Compares two exponents.
    pub fn cmp_exp(&self, a: Exp, b: Exp) -> Ordering {
        self.sign((a.0 - b.0, a.1 - b.1))
    }

    /// Position of `e` relative to `0`.
    pub fn sign(&self, e: Exp) -> Ordering {
        let (i, j) = (e.0 as i64, e.1 as i64);
        match *self {
            MonomialOrder::Asymptotic => i.cmp(&0).then(j.cmp(&0)),
            MonomialOrder::RevLex => j.cmp(&0).then(i.cmp(&0)),
            MonomialOrder::Weighted { x, y } => {
                let w = x as i128 * i as i128 + y as i128 * j as i128;
                w.cmp(&0).then(i.cmp(&0))
            }
        }
    }

    pub fn is_positive(&self, e: Exp) -> bool {
        self.sign(e) == Ordering::Greater
    }

    pub fn is_asymptotic(&self) -> bool {
        matches!(self, MonomialOrder::Asymptotic)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Asymptotic => write!(f, "asymptotic"),
            MonomialOrder::RevLex => write!(f, "revlex"),
            MonomialOrder::Weighted { x, y } => write!(f, "weighted:{x},{y}"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "asymptotic" | "lex" => return Ok(MonomialOrder::Asymptotic),
            "revlex" => return Ok(MonomialOrder::RevLex),
            _ => {}
        }
        let rest = s
            .strip_prefix("weighted:")
            .ok_or_else(|| Error::Parse(format!("unknown order `{s}`")))?;
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("weighted order needs two weights: `{s}`")))?;
        let parse = |t: &str| -> Result<Ratio<i64>> {
            t.trim()
                .parse::<Ratio<i64>>()
                .map_err(|e| Error::Parse(format!("bad weight `{t}`: {e}")))
        };
        MonomialOrder::weighted(parse(a)?, parse(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Asymptotic,
            MonomialOrder::RevLex,
            "weighted:1,1".parse().unwrap(),
            "weighted:3/2,1".parse().unwrap(),
        ]
    }

    #[test]
    fn asymptotic_is_v_first_lex() {
        let o = MonomialOrder::Asymptotic;
        let table = [
            ((0, 5), (1, -9), Ordering::Less),
            ((1, 0), (1, 1), Ordering::Less),
            ((-1, 3), (-1, 3), Ordering::Equal),
            ((2, -1), (1, 100), Ordering::Greater),
        ];
        for (a, b, want) in table {
            assert_eq!(o.cmp_exp(a, b), want, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn weighted_one_one_matches_total_degree_then_v() {
        let o: MonomialOrder = "weighted:1,1".parse().unwrap();
        // v < V < v^2
        assert_eq!(o.cmp_exp((0, 1), (1, 0)), Ordering::Less);
        assert_eq!(o.cmp_exp((1, 0), (0, 2)), Ordering::Less);
        // V v^-2 has weight -1
        assert_eq!(o.sign((1, -2)), Ordering::Less);
        // V v^-1 has weight 0, tie broken by i = 1 > 0
        assert_eq!(o.sign((1, -1)), Ordering::Greater);
        assert_eq!(MonomialOrder::Asymptotic.sign((1, -1)), Ordering::Greater);
    }

    #[test]
    fn weighted_normalizes() {
        let a: MonomialOrder = "weighted:2,2".parse().unwrap();
        assert_eq!(a, MonomialOrder::Weighted { x: 1, y: 1 });
        let b: MonomialOrder = "weighted:3/2,1/3".parse().unwrap();
        assert_eq!(b, MonomialOrder::Weighted { x: 9, y: 2 });
        assert!("weighted:0,1".parse::<MonomialOrder>().is_err());
        assert!("weighted:-1,1".parse::<MonomialOrder>().is_err());
        assert!("banana".parse::<MonomialOrder>().is_err());
    }

    #[test]
    fn generic_weights_positive_everywhere() {
        for o in orders() {
            assert!(o.is_positive((1, 0)), "{o}");
            assert!(o.is_positive((0, 1)), "{o}");
        }
    }

    #[test]
    fn display_round_trip() {
        for o in orders() {
            assert_eq!(o.to_string().parse::<MonomialOrder>().unwrap(), o);
        }
    }

    proptest! {
        #[test]
        fn compatible_with_addition(
            a in (-50i32..50, -50i32..50),
            b in (-50i32..50, -50i32..50),
            d in (-50i32..50, -50i32..50),
        ) {
            for o in orders() {
                let lhs = o.cmp_exp(a, b);
                let rhs = o.cmp_exp((a.0 + d.0, a.1 + d.1), (b.0 + d.0, b.1 + d.1));
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!(o.cmp_exp(a, b), o.cmp_exp(b, a).reverse());
            }
        }
    }
}
