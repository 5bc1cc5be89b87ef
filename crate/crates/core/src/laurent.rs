//! Laurent polynomials in two commuting variables `V` and `v` with
//! arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::{Exp, MonomialOrder};

/// An element of `Z[V, V^-1, v, v^-1]`.
///
/// Terms are kept sorted by exponent (lexicographic on `(i, j)`) with no zero
/// coefficients, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent2 {
    terms: Vec<(Exp, BigInt)>,
}

/// The three pieces of a Laurent polynomial relative to a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub neg: Laurent2,
    pub zero: Laurent2,
    pub pos: Laurent2,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, (0, 0))
    }

    /// `c * V^i * v^j`.
    pub fn term(c: impl Into<BigInt>, e: Exp) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent2 {
                terms: vec![(e, c)],
            }
        }
    }

    /// The monomial `V^i v^j`.
    pub fn monomial(i: i32, j: i32) -> Self {
        Self::term(1, (i, j))
    }

    /// Normalizing constructor: sorts, merges duplicates and drops zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exp, C)>,
        C: Into<BigInt>,
    {
        let mut v: Vec<(Exp, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        Self::normalize(&mut v);
        Laurent2 { terms: v }
    }

    fn normalize(v: &mut Vec<(Exp, BigInt)>) {
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v.drain(..) {
            if let Some((le, lc)) = out.last_mut() {
                if *le == e {
                    *lc += c;
                    continue;
                }
            }
            out.push((e, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        *v = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        match self.terms.binary_search_by(|t| t.0.cmp(&e)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// The ring involution `V^i v^j -> V^-i v^-j`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(Exp, BigInt)> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| ((-i, -j), c.clone()))
            .collect();
        // Negation reverses lexicographic order exactly.
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        terms.shrink_to_fit();
        Laurent2 { terms }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// Splits into the parts supported strictly below, at, and strictly above
    /// zero in `order`.
    pub fn split(&self, order: &MonomialOrder) -> Split {
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        for (e, c) in &self.terms {
            match order.sign(*e) {
                std::cmp::Ordering::Less => neg.push((*e, c.clone())),
                std::cmp::Ordering::Equal => zero.push((*e, c.clone())),
                std::cmp::Ordering::Greater => pos.push((*e, c.clone())),
            }
        }
        Split {
            neg: Laurent2 { terms: neg },
            zero: Laurent2 { terms: zero },
            pos: Laurent2 { terms: pos },
        }
    }

    /// True if every term lies strictly below zero in `order`.
    pub fn is_negative_part(&self, order: &MonomialOrder) -> bool {
        self.terms
            .iter()
            .all(|(e, _)| order.sign(*e) == std::cmp::Ordering::Less)
    }

    /// True iff `self = ±V^i v^j`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.abs().is_one()
    }

    pub fn mul_monomial(&self, e: Exp) -> Self {
        Laurent2 {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i + e.0, j + e.1), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent2 {
            terms: self.terms.iter().map(|(e, d)| (*e, d * c)).collect(),
        }
    }

    /// Gcd of the integer coefficients (non-negative), zero for the zero polynomial.
    pub fn integer_content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Componentwise minimum exponent, `None` for zero.
    pub fn min_exponent(&self) -> Option<Exp> {
        let mut it = self.terms.iter().map(|t| t.0);
        let first = it.next()?;
        Some(it.fold(first, |(a, b), (i, j)| (a.min(i), b.min(j))))
    }

    fn max_exponent(&self) -> Option<Exp> {
        let mut it = self.terms.iter().map(|t| t.0);
        let first = it.next()?;
        Some(it.fold(first, |(a, b), (i, j)| (a.max(i), b.max(j))))
    }

    /// Exact division. Returns `None` if `divisor` does not divide `self` in
    /// the Laurent ring.
    pub fn try_div(&self, divisor: &Laurent2) -> Option<Laurent2> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for ((i, j), c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push(((i - de.0, j - de.1), q));
            }
            return Some(Laurent2 { terms: out });
        }
        // Any quotient lies in the box [min(f)-min(g), max(f)-max(g)].
        let (fmin, fmax) = (self.min_exponent()?, self.max_exponent()?);
        let (gmin, gmax) = (divisor.min_exponent()?, divisor.max_exponent()?);
        let lo = (fmin.0 - gmin.0, fmin.1 - gmin.1);
        let hi = (fmax.0 - gmax.0, fmax.1 - gmax.1);
        if lo.0 > hi.0 || lo.1 > hi.1 {
            return None;
        }
        let (glead, gc) = divisor.terms.last().cloned()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rlead, rc)) = rem.terms.last().cloned() {
            let e = (rlead.0 - glead.0, rlead.1 - glead.1);
            if e.0 < lo.0 || e.0 > hi.0 || e.1 < lo.1 || e.1 > hi.1 {
                return None;
            }
            let (q, r) = rc.div_rem(&gc);
            if !r.is_zero() {
                return None;
            }
            let t = Laurent2::term(q.clone(), e);
            rem = &rem - &(&t * divisor);
            quot.push((e, q));
        }
        Some(Laurent2::from_terms(quot))
    }

    /// Evaluates at `V = x`, `v = y` over the rationals.
    pub fn eval(
        &self,
        x: &num_rational::BigRational,
        y: &num_rational::BigRational,
    ) -> num_rational::BigRational {
        use num_traits::Pow;
        let mut acc = num_rational::BigRational::zero();
        for ((i, j), c) in &self.terms {
            let xi: num_rational::BigRational = Pow::pow(x, *i);
            let yj: num_rational::BigRational = Pow::pow(y, *j);
            acc += num_rational::BigRational::from_integer(c.clone()) * xi * yj;
        }
        acc
    }
}

fn merge(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)], negate_b: bool) -> Vec<(Exp, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].0.cmp(&b[y].0) {
            std::cmp::Ordering::Less => {
                out.push(a[x].clone());
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { -&b[y].1 } else { b[y].1.clone() };
                out.push((b[y].0, c));
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b {
                    &a[x].1 - &b[y].1
                } else {
                    &a[x].1 + &b[y].1
                };
                if !c.is_zero() {
                    out.push((a[x].0, c));
                }
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&a[x..]);
    for t in &b[y..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl Add<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        Laurent2 {
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        Laurent2 {
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Mul<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        if self.is_zero() || rhs.is_zero() {
            return Laurent2::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return Laurent2 {
                terms: self
                    .terms
                    .iter()
                    .map(|((i, j), d)| ((i + e.0, j + e.1), d * c))
                    .collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let mut v = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &rhs.terms {
                v.push(((i + k, j + l), c * d));
            }
        }
        Laurent2::normalize(&mut v);
        Laurent2 { terms: v }
    }
}

impl Neg for &Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        Laurent2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent2> for Laurent2 {
            type Output = Laurent2;
            fn $m(self, rhs: Laurent2) -> Laurent2 {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Laurent2> for Laurent2 {
            type Output = Laurent2;
            fn $m(self, rhs: &Laurent2) -> Laurent2 {
                (&self).$m(rhs)
            }
        }
        impl $tr<Laurent2> for &Laurent2 {
            type Output = Laurent2;
            fn $m(self, rhs: Laurent2) -> Laurent2 {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(mut self) -> Laurent2 {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&Laurent2> for Laurent2 {
    fn add_assign(&mut self, rhs: &Laurent2) {
        if rhs.is_zero() {
            return;
        }
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl SubAssign<&Laurent2> for Laurent2 {
    fn sub_assign(&mut self, rhs: &Laurent2) {
        if rhs.is_zero() {
            return;
        }
        self.terms = merge(&self.terms, &rhs.terms, true);
    }
}

impl AddAssign<Laurent2> for Laurent2 {
    fn add_assign(&mut self, rhs: Laurent2) {
        *self += &rhs;
    }
}

impl SubAssign<Laurent2> for Laurent2 {
    fn sub_assign(&mut self, rhs: Laurent2) {
        *self -= &rhs;
    }
}

impl From<i64> for Laurent2 {
    fn from(c: i64) -> Self {
        Laurent2::constant(c)
    }
}

/// `3*V^1*v^-2 - V^-1*v^2`: terms in descending `(i, j)` order, both
/// exponents always written.
impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "V^{i}*v^{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent2({self})")
    }
}

impl FromStr for Laurent2 {
    type Err = Error;

    /// Accepts the display form as well as looser input such as `V + v^-1`,
    /// `-2*v`, `3`.
    fn from_str(s: &str) -> Result<Self> {
        let src = s.replace(' ', "");
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = src.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
                pieces.push(&src[start..k]);
                start = k;
            }
        }
        pieces.push(&src[start..]);
        let mut terms = Vec::new();
        for piece in pieces {
            terms.push(
                parse_term(piece)
                    .ok_or_else(|| Error::Parse(format!("bad term `{piece}` in `{s}`")))?,
            );
        }
        Ok(Laurent2::from_terms(terms))
    }
}

fn parse_term(piece: &str) -> Option<(Exp, BigInt)> {
    let (sign, body) = match piece.as_bytes().first()? {
        b'-' => (-1, &piece[1..]),
        b'+' => (1, &piece[1..]),
        _ => (1, piece),
    };
    let mut coeff = BigInt::from(sign);
    let mut exp = (0i32, 0i32);
    if body.is_empty() {
        return None;
    }
    for factor in body.split('*') {
        let (var, pow) = match factor.split_once('^') {
            Some((a, b)) => (a, b.parse::<i32>().ok()?),
            None => (factor, 1),
        };
        match var {
            "V" => exp.0 += pow,
            "v" => exp.1 += pow,
            _ => {
                if factor.contains('^') {
                    return None;
                }
                coeff *= factor.parse::<BigInt>().ok()?;
            }
        }
    }
    Some((exp, coeff))
}
