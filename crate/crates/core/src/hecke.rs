//! The generic Iwahori-Hecke algebra of `W_n` with parameters `v_t = V`,
//! `v_{s_i} = v`, stored in the standard basis `{T_w}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{ElemId, WeylGroup};
use crate::laurent::Laurent2;
use crate::order::{Exp, MonomialOrder};
use crate::perm::Gen;

/// The weight function: `L(t) = b`, `L(s_i) = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightSpec {
    pub b: Exp,
    pub a: Exp,
}

impl Default for WeightSpec {
    fn default() -> Self {
        WeightSpec {
            b: (1, 0),
            a: (0, 1),
        }
    }
}

impl WeightSpec {
    /// Both weights must be strictly positive under `order`.
    pub fn check(&self, order: &MonomialOrder) -> Result<()> {
        for e in [self.b, self.a] {
            if !order.is_positive(e) {
                return Err(Error::WeightNotPositive(e, order.to_string()));
            }
        }
        Ok(())
    }

    pub fn of(&self, g: Gen) -> Exp {
        if g.is_t() {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    T,
    /// Kazhdan-Lusztig basis relative to a monomial order.
    C(MonomialOrder),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::T => write!(f, "T"),
            Basis::C(o) => write!(f, "C[{o}]"),
        }
    }
}

/// A finite `A`-linear combination of basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElt {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<ElemId, Laurent2>,
}

impl HeckeElt {
    pub fn zero(n: usize, basis: Basis) -> Self {
        HeckeElt {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(n: usize, basis: Basis, w: ElemId) -> Self {
        Self::from_terms(n, basis, [(w, Laurent2::one())])
    }

    pub fn from_terms(
        n: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (ElemId, Laurent2)>,
    ) -> Self {
        let mut h = Self::zero(n, basis);
        for (w, c) in terms {
            h.add_term(w, &c);
        }
        h
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: ElemId) -> Laurent2 {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (ElemId, &Laurent2)> + '_ {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, w: ElemId, c: &Laurent2) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub(crate) fn pop_last(&mut self) -> Option<(ElemId, Laurent2)> {
        self.coeffs.pop_last()
    }

    fn compatible(&self, other: &HeckeElt) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.to_string(),
                found: other.basis.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.try_add(&other.scale(&Laurent2::constant(-1)))
    }

    pub fn scale(&self, c: &Laurent2) -> HeckeElt {
        HeckeElt::from_terms(self.n, self.basis, self.terms().map(|(w, a)| (w, a * c)))
    }

    /// Adds `c * other` in place. Panics on incompatible operands.
    pub fn axpy(&mut self, c: &Laurent2, other: &HeckeElt) {
        self.compatible(other)
            .expect("axpy on incompatible elements");
        for (w, a) in other.terms() {
            self.add_term(w, &(a * c));
        }
    }

    /// Applies the ring involution to every coefficient and keeps the basis
    /// labels. This is the bar involution on any bar-invariant basis.
    pub fn bar_coefficients(&self) -> HeckeElt {
        HeckeElt::from_terms(self.n, self.basis, self.terms().map(|(w, a)| (w, a.bar())))
    }

    pub(crate) fn relabel(&self, f: impl Fn(ElemId) -> ElemId) -> HeckeElt {
        HeckeElt::from_terms(
            self.n,
            self.basis,
            self.terms().map(|(w, a)| (f(w), a.clone())),
        )
    }
}

/// `H_n` over `A` together with the group tables it is built on.
pub struct HeckeAlgebra {
    group: Arc<WeylGroup>,
    weights: WeightSpec,
    params: Vec<Laurent2>,
    bar_t: Vec<OnceLock<HeckeElt>>,
}

impl fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeAlgebra({:?}, {:?})", self.group, self.weights)
    }
}

impl HeckeAlgebra {
    pub fn new(group: Arc<WeylGroup>, weights: WeightSpec) -> Self {
        let params = group
            .gens()
            .iter()
            .map(|&g| Laurent2::term(1, weights.of(g)))
            .collect();
        let bar_t = (0..group.order()).map(|_| OnceLock::new()).collect();
        HeckeAlgebra {
            group,
            weights,
            params,
            bar_t,
        }
    }

    pub fn with_rank(n: usize) -> Result<Self> {
        Ok(Self::new(
            Arc::new(WeylGroup::new(n)?),
            WeightSpec::default(),
        ))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<WeylGroup> {
        self.group.clone()
    }

    pub fn weights(&self) -> WeightSpec {
        self.weights
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// `v_g`.
    pub fn param(&self, g: Gen) -> &Laurent2 {
        &self.params[g.index()]
    }

    /// `v_g - v_g^{-1}`.
    pub fn param_diff(&self, g: Gen) -> Laurent2 {
        let p = self.param(g);
        p - &p.bar()
    }

    pub fn t(&self, w: ElemId) -> HeckeElt {
        HeckeElt::basis_element(self.rank(), Basis::T, w)
    }

    pub fn t_word(&self, text: &str) -> Result<HeckeElt> {
        Ok(self.t(self.group.parse(text)?))
    }

    pub fn one(&self) -> HeckeElt {
        self.t(self.group.identity())
    }

    pub fn zero(&self) -> HeckeElt {
        HeckeElt::zero(self.rank(), Basis::T)
    }

    fn check_t(&self, h: &HeckeElt) -> Result<()> {
        if h.n != self.rank() {
            return Err(Error::RankMismatch(h.n, self.rank()));
        }
        if h.basis != Basis::T {
            return Err(Error::BasisMismatch {
                expected: "T".into(),
                found: h.basis.to_string(),
            });
        }
        Ok(())
    }

    fn check_gen(&self, g: Gen) -> Result<()> {
        if g.index() >= self.rank() {
            return Err(Error::GeneratorOutOfRange {
                token: g.to_string(),
                n: self.rank(),
            });
        }
        Ok(())
    }

    /// `T_g h`.
    pub fn mul_gen_left(&self, g: Gen, h: &HeckeElt) -> Result<HeckeElt> {
        self.check_gen(g)?;
        self.check_t(h)?;
        Ok(self.lmul_gen(g, h))
    }

    /// `h T_g`.
    pub fn mul_gen_right(&self, h: &HeckeElt, g: Gen) -> Result<HeckeElt> {
        self.check_gen(g)?;
        self.check_t(h)?;
        Ok(self.rmul_gen(h, g))
    }

    pub(crate) fn lmul_gen(&self, g: Gen, h: &HeckeElt) -> HeckeElt {
        let diff = self.param_diff(g);
        let mut out = self.zero();
        for (w, c) in h.terms() {
            let gw = self.group.lmul(g, w);
            out.add_term(gw, c);
            if gw < w {
                out.add_term(w, &(c * &diff));
            }
        }
        out
    }

    pub(crate) fn rmul_gen(&self, h: &HeckeElt, g: Gen) -> HeckeElt {
        let diff = self.param_diff(g);
        let mut out = self.zero();
        for (w, c) in h.terms() {
            let wg = self.group.rmul(w, g);
            out.add_term(wg, c);
            if wg < w {
                out.add_term(w, &(c * &diff));
            }
        }
        out
    }

    /// `T_w h`, via a reduced word of `w`.
    pub(crate) fn lmul_t(&self, w: ElemId, h: &HeckeElt) -> HeckeElt {
        let mut out = h.clone();
        for &g in self.group.elem(w).reduced_word().iter().rev() {
            out = self.lmul_gen(g, &out);
        }
        out
    }

    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt> {
        self.check_t(a)?;
        self.check_t(b)?;
        let mut out = self.zero();
        for (x, c) in a.terms() {
            out.axpy(c, &self.lmul_t(x, b));
        }
        Ok(out)
    }

    /// The inverse of `T_w`: `T_{g_k}^{-1} ... T_{g_1}^{-1}` for a reduced
    /// word `g_1 ... g_k` of `w`, with `T_g^{-1} = T_g - (v_g - v_g^{-1})`.
    pub fn invert_t(&self, w: ElemId) -> HeckeElt {
        let mut out = self.one();
        for &g in self.group.elem(w).reduced_word().iter() {
            let mut next = self.lmul_gen(g, &out);
            next.axpy(&-self.param_diff(g), &out);
            out = next;
        }
        out
    }

    /// The bar involution `sum a_y T_y -> sum bar(a_y) T_{y^{-1}}^{-1}`.
    pub fn bar_involution(&self, h: &HeckeElt) -> Result<HeckeElt> {
        self.check_t(h)?;
        let mut out = self.zero();
        for (y, c) in h.terms() {
            let bar_ty = self.bar_t[y.idx()].get_or_init(|| self.invert_t(self.group.inverse(y)));
            out.axpy(&c.bar(), bar_ty);
        }
        Ok(out)
    }

    /// The anti-automorphism `T_w -> T_{w^{-1}}`. On a Kazhdan-Lusztig basis
    /// it sends `C_w` to `C_{w^{-1}}`.
    pub fn flat(&self, h: &HeckeElt) -> Result<HeckeElt> {
        if h.n != self.rank() {
            return Err(Error::RankMismatch(h.n, self.rank()));
        }
        Ok(h.relabel(|w| self.group.inverse(w)))
    }

    /// Human-readable form, e.g. `T[s2 t] + (V^-1*v^0)*T[e]`.
    pub fn format(&self, h: &HeckeElt) -> String {
        if h.is_zero() {
            return "0".to_string();
        }
        let sym = match h.basis {
            Basis::T => "T",
            Basis::C(_) => "C",
        };
        h.terms()
            .rev()
            .map(|(w, c)| {
                let b = format!("{sym}[{}]", self.group.word(w));
                if c.is_one() {
                    b
                } else {
                    format!("({c})*{b}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alg(n: usize) -> HeckeAlgebra {
        HeckeAlgebra::with_rank(n).unwrap()
    }

    fn l(s: &str) -> Laurent2 {
        s.parse().unwrap()
    }

    #[test]
    fn generator_products() {
        let h = alg(3);
        let tt = h.t_word("t").unwrap();
        assert_eq!(h.mul_gen_left(Gen::T, &h.one()).unwrap(), tt);
        let expect = h.one().try_add(&tt.scale(&l("V - V^-1"))).unwrap();
        assert_eq!(h.mul_gen_left(Gen::T, &tt).unwrap(), expect);
        let x = h.t_word("s2 t").unwrap();
        assert_eq!(
            h.mul_gen_left(Gen::S(1), &x).unwrap(),
            h.t_word("s1 s2 t").unwrap()
        );
        assert!(h.mul_gen_left(Gen::S(3), &x).is_err());
    }

    #[test]
    fn mul_examples() {
        let h = alg(3);
        let x = h.t_word("s1 s2 t").unwrap();
        assert_eq!(h.mul(&x, &h.one()).unwrap(), x);
        let (t, s1) = (h.t_word("t").unwrap(), h.t_word("s1").unwrap());
        let lhs = h.mul(&h.mul(&t, &s1).unwrap(), &t).unwrap();
        let rhs = h.mul(&t, &h.mul(&s1, &t).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, h.t_word("t s1 t").unwrap());
    }

    #[test]
    fn inverses() {
        let h = alg(3);
        let g = h.group();
        assert_eq!(h.invert_t(g.identity()), h.one());
        let t = g.parse("t").unwrap();
        let expect = h.t(t).try_sub(&h.one().scale(&l("V - V^-1"))).unwrap();
        assert_eq!(h.invert_t(t), expect);
        for w in g.ids() {
            assert_eq!(
                h.mul(&h.invert_t(w), &h.t(w)).unwrap(),
                h.one(),
                "{}",
                g.word(w)
            );
            assert_eq!(h.mul(&h.t(w), &h.invert_t(w)).unwrap(), h.one());
        }
    }

    #[test]
    fn bar_examples() {
        let h = alg(3);
        assert_eq!(h.bar_involution(&h.one()).unwrap(), h.one());
        let t = h.group().parse("t").unwrap();
        assert_eq!(h.bar_involution(&h.t(t)).unwrap(), h.invert_t(t));
        for w in h.group().ids() {
            let x = h.t(w).scale(&l("V^2*v^-1 + 3"));
            assert_eq!(h.bar_involution(&h.bar_involution(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn flat_examples() {
        let h = alg(3);
        assert_eq!(h.flat(&h.one()).unwrap(), h.one());
        assert_eq!(
            h.flat(&h.t_word("s1 s2").unwrap()).unwrap(),
            h.t_word("s2 s1").unwrap()
        );
    }

    #[test]
    fn quadratic_and_braid_relations() {
        let h = alg(3);
        let gen = |g: Gen| {
            h.t(h
                .group()
                .id_of(&crate::SignedPerm::generator(g, 3).unwrap())
                .unwrap())
        };
        for g in h.group().gens() {
            let tg = gen(g);
            let p = h.param(g).clone();
            let a = tg.try_sub(&h.one().scale(&p)).unwrap();
            let b = tg.try_add(&h.one().scale(&p.bar())).unwrap();
            assert!(h.mul(&a, &b).unwrap().is_zero(), "{g}");
        }
        let prod = |gs: &[Gen]| {
            gs.iter()
                .fold(h.one(), |acc, &g| h.mul(&acc, &gen(g)).unwrap())
        };
        let (t, s1, s2) = (Gen::T, Gen::S(1), Gen::S(2));
        assert_eq!(prod(&[t, s1, t, s1]), prod(&[s1, t, s1, t]));
        assert_eq!(prod(&[s1, s2, s1]), prod(&[s2, s1, s2]));
        assert_eq!(prod(&[t, s2]), prod(&[s2, t]));
    }

    #[test]
    fn independent_of_reduced_word() {
        // T_w built from every reduced word equals the basis element
        let h = alg(3);
        let g = h.group();
        fn reduced_words(g: &WeylGroup, w: ElemId) -> Vec<Vec<Gen>> {
            if w == g.identity() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for s in g.left_descents(w) {
                for mut rest in reduced_words(g, g.lmul(s, w)) {
                    rest.insert(0, s);
                    out.push(rest);
                }
            }
            out
        }
        for w in g.ids() {
            for word in reduced_words(g, w) {
                let mut x = h.one();
                for &s in word.iter().rev() {
                    x = h.mul_gen_left(s, &x).unwrap();
                }
                assert_eq!(x, h.t(w));
            }
        }
    }

    #[test]
    fn mixing_bases_is_an_error() {
        let h = alg(2);
        let c =
            HeckeElt::basis_element(2, Basis::C(MonomialOrder::Asymptotic), h.group().identity());
        assert!(h.one().try_add(&c).is_err());
        assert!(h.mul(&c, &h.one()).is_err());
        let other = HeckeElt::basis_element(3, Basis::T, ElemId(0));
        assert!(matches!(
            h.one().try_add(&other),
            Err(Error::RankMismatch(2, 3))
        ));
    }

    fn elt(h: &HeckeAlgebra) -> impl Strategy<Value = HeckeElt> {
        let n = h.rank();
        let order = h.group().order() as u32;
        prop::collection::vec((0..order, -2i32..3, -2i32..3, -3i64..4), 1..3).prop_map(move |ts| {
            HeckeElt::from_terms(
                n,
                Basis::T,
                ts.into_iter()
                    .map(|(w, i, j, c)| (ElemId(w), Laurent2::term(c, (i, j)))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn bar_is_multiplicative(a in elt(&alg(3)), b in elt(&alg(3)), c in elt(&alg(3))) {
            let h = alg(3);
            let abc = h.mul(&h.mul(&a, &b).unwrap(), &c).unwrap();
            let bars = [&a, &b, &c].map(|x| h.bar_involution(x).unwrap());
            let prod = h.mul(&h.mul(&bars[0], &bars[1]).unwrap(), &bars[2]).unwrap();
            prop_assert_eq!(h.bar_involution(&abc).unwrap(), prod);
        }

        #[test]
        fn flat_reverses_products(a in elt(&alg(3)), b in elt(&alg(3))) {
            let h = alg(3);
            let lhs = h.flat(&h.mul(&a, &b).unwrap()).unwrap();
            let rhs = h.mul(&h.flat(&b).unwrap(), &h.flat(&a).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
