//! The Kazhdan-Lusztig basis `{C_w}` relative to a monomial order.
//!
//! `C_w = T_w + sum_{y<w} p*_{y,w} T_y` with `p*_{y,w}` in `A_{<0}`. The table
//! is filled by increasing length; all elements of one length are computed
//! in parallel.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{ElemId, WeylGroup};
use crate::hecke::{Basis, HeckeAlgebra, HeckeElt};
use crate::laurent::Laurent2;
use crate::order::MonomialOrder;
use crate::perm::{Gen, SignedPerm};

/// Sparse row sorted by element id.
pub type Row = Vec<(ElemId, Laurent2)>;

fn lookup(row: &[(ElemId, Laurent2)], y: ElemId) -> Option<&Laurent2> {
    row.binary_search_by_key(&y, |(z, _)| *z)
        .ok()
        .map(|k| &row[k].1)
}

fn into_row(acc: HashMap<ElemId, Laurent2>) -> Row {
    let mut row: Row = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    row.sort_unstable_by_key(|(z, _)| *z);
    row
}

pub struct KlTable {
    alg: Arc<HeckeAlgebra>,
    order: MonomialOrder,
    // c[w] = expansion of C_w in the T-basis, including (w, 1)
    c: Vec<Row>,
    // mu[g][w] = nonzero M^g_{z,w} for g w > w
    mu: Vec<Vec<Row>>,
}

impl std::fmt::Debug for KlTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KlTable(B{}, {})", self.rank(), self.order)
    }
}

impl KlTable {
    pub fn new(alg: Arc<HeckeAlgebra>, order: MonomialOrder) -> Result<Self> {
        alg.weights().check(&order)?;
        let size = alg.group().order();
        let ngens = alg.rank();
        let mut table = KlTable {
            alg,
            order,
            c: vec![Vec::new(); size],
            mu: vec![vec![Vec::new(); size]; ngens],
        };
        for range in table.strata() {
            let rows: Vec<Row> = range
                .clone()
                .into_par_iter()
                .map(|k| table.compute_c(ElemId(k as u32)))
                .collect();
            for (k, row) in range.clone().zip(rows) {
                table.c[k] = row;
            }
            table.fill_mu(range);
        }
        Ok(table)
    }

    /// Builds `W_n`, `H_n` with the default weights, and the table.
    pub fn for_rank(n: usize, order: MonomialOrder) -> Result<Self> {
        Self::new(Arc::new(HeckeAlgebra::with_rank(n)?), order)
    }

    fn strata(&self) -> Vec<std::ops::Range<usize>> {
        let g = self.group();
        let mut out = Vec::new();
        let mut start = 0;
        for k in 1..=g.order() {
            if k == g.order() || g.length(ElemId(k as u32)) != g.length(ElemId(start as u32)) {
                out.push(start..k);
                start = k;
            }
        }
        out
    }

    fn fill_mu(&mut self, range: std::ops::Range<usize>) {
        let g = self.group();
        let mut jobs: Vec<(Gen, ElemId)> = Vec::new();
        for w in range.map(|k| ElemId(k as u32)) {
            jobs.extend(
                g.gens()
                    .into_iter()
                    .filter(|&s| g.lmul(s, w) > w)
                    .map(|s| (s, w)),
            );
        }
        let rows: Vec<Row> = jobs
            .par_iter()
            .map(|&(s, w)| self.compute_mu(s, w))
            .collect();
        for ((s, w), row) in jobs.into_iter().zip(rows) {
            self.mu[s.index()][w.idx()] = row;
        }
    }

    pub fn alg(&self) -> &HeckeAlgebra {
        &self.alg
    }

    pub fn alg_arc(&self) -> Arc<HeckeAlgebra> {
        self.alg.clone()
    }

    pub fn group(&self) -> &WeylGroup {
        self.alg.group()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.alg.rank()
    }

    pub fn basis(&self) -> Basis {
        Basis::C(self.order)
    }

    // C_s C_u - sum_{z<u, sz<z} M^s_{z,u} C_z  for s u > u
    fn combine(&self, s: Gen, u: ElemId) -> Row {
        let g = self.group();
        let vs = self.alg.param(s);
        let vs_inv = vs.bar();
        let mut acc: HashMap<ElemId, Laurent2> = HashMap::with_capacity(2 * self.c[u.idx()].len());
        for (y, p) in &self.c[u.idx()] {
            let sy = g.lmul(s, *y);
            *acc.entry(sy).or_default() += p;
            let factor = if sy > *y { &vs_inv } else { vs };
            *acc.entry(*y).or_default() += p * factor;
        }
        for (z, m) in &self.mu[s.index()][u.idx()] {
            for (y, p) in &self.c[z.idx()] {
                *acc.entry(*y).or_default() -= m * p;
            }
        }
        into_row(acc)
    }

    fn compute_c(&self, w: ElemId) -> Row {
        let g = self.group();
        match g.left_descents(w).first() {
            None => vec![(w, Laurent2::one())],
            Some(&s) => self.combine(s, g.lmul(s, w)),
        }
    }

    // M^s_{y,w} for all y < w with sy < y, by descending y.
    fn compute_mu(&self, s: Gen, w: ElemId) -> Row {
        let g = self.group();
        let vs = self.alg.param(s);
        let cw = &self.c[w.idx()];
        let mut candidates: BTreeSet<ElemId> =
            cw.iter().map(|(y, _)| *y).filter(|&y| y != w).collect();
        let mut found: Row = Vec::new();
        while let Some(y) = candidates.pop_last() {
            if g.lmul(s, y) > y {
                continue;
            }
            let mut acc = lookup(cw, y).map(|p| vs * p).unwrap_or_default();
            for (z, m) in &found {
                if let Some(p) = lookup(&self.c[z.idx()], y) {
                    acc -= p * m;
                }
            }
            let split = acc.split(&self.order);
            let m = &(&split.zero + &split.pos) + &split.pos.bar();
            if !m.is_zero() {
                candidates.extend(self.c[y.idx()].iter().map(|(x, _)| *x).filter(|&x| x < y));
                found.push((y, m));
            }
        }
        found.reverse();
        found
    }

    /// `p*_{y,w}`; zero unless `y <= w`, and `1` for `y = w`.
    pub fn pstar(&self, y: ElemId, w: ElemId) -> Laurent2 {
        lookup(&self.c[w.idx()], y).cloned().unwrap_or_default()
    }

    /// The expansion of `C_w` as a sparse row.
    pub fn c_row(&self, w: ElemId) -> &[(ElemId, Laurent2)] {
        &self.c[w.idx()]
    }

    /// `C_w` expanded in the T-basis.
    pub fn c_basis_element(&self, w: ElemId) -> HeckeElt {
        HeckeElt::from_terms(self.rank(), Basis::T, self.c[w.idx()].iter().cloned())
    }

    /// `C_w` as a basis vector of the C-basis.
    pub fn c(&self, w: ElemId) -> HeckeElt {
        HeckeElt::basis_element(self.rank(), self.basis(), w)
    }

    /// Recomputes `C_w` through the given left descent rather than the
    /// default one.
    pub fn c_via_descent(&self, w: ElemId, s: Gen) -> Result<HeckeElt> {
        if !self.group().is_left_descent(s, w) {
            return Err(Error::Precondition(format!(
                "{s} is not a left descent of {}",
                self.group().word(w)
            )));
        }
        let row = self.combine(s, self.group().lmul(s, w));
        Ok(HeckeElt::from_terms(self.rank(), Basis::T, row))
    }

    /// `M^s_{y,w}`, defined for `y < w`, `sy < y`, `sw > w`.
    pub fn m_polynomial(&self, s: Gen, y: ElemId, w: ElemId) -> Result<Laurent2> {
        let g = self.group();
        if s.index() >= self.rank() {
            return Err(Error::GeneratorOutOfRange {
                token: s.to_string(),
                n: self.rank(),
            });
        }
        if y == w || !g.bruhat_leq(y, w) || g.lmul(s, y) > y || g.lmul(s, w) < w {
            return Err(Error::Precondition(format!(
                "M^{s} needs y < w, sy < y, sw > w; got y = {}, w = {}",
                g.word(y),
                g.word(w)
            )));
        }
        Ok(lookup(&self.mu[s.index()][w.idx()], y)
            .cloned()
            .unwrap_or_default())
    }

    /// Nonzero `M^s_{z,w}` for fixed `s` and `w` (empty when `sw < w`).
    pub fn mu_row(&self, s: Gen, w: ElemId) -> &[(ElemId, Laurent2)] {
        &self.mu[s.index()][w.idx()]
    }

    /// `C_s C_y` in the C-basis.
    pub fn left_gen_action(&self, s: Gen, y: ElemId) -> Row {
        let g = self.group();
        let sy = g.lmul(s, y);
        if sy < y {
            let p = self.alg.param(s);
            return vec![(y, p + &p.bar())];
        }
        let mut row = self.mu_row(s, y).to_vec();
        row.push((sy, Laurent2::one()));
        row.sort_unstable_by_key(|(z, _)| *z);
        row
    }

    fn check_rank(&self, h: &HeckeElt) -> Result<()> {
        if h.rank() != self.rank() {
            return Err(Error::RankMismatch(h.rank(), self.rank()));
        }
        Ok(())
    }

    pub fn to_c_basis(&self, h: &HeckeElt) -> Result<HeckeElt> {
        self.check_rank(h)?;
        if h.basis() != Basis::T {
            return Err(Error::BasisMismatch {
                expected: "T".into(),
                found: h.basis().to_string(),
            });
        }
        let mut rest = h.clone();
        let mut out = HeckeElt::zero(self.rank(), self.basis());
        while let Some((x, a)) = rest.pop_last() {
            for (y, p) in &self.c[x.idx()] {
                if *y != x {
                    rest.add_term(*y, &-(p * &a));
                }
            }
            out.add_term(x, &a);
        }
        Ok(out)
    }

    pub fn to_t_basis(&self, h: &HeckeElt) -> Result<HeckeElt> {
        self.check_rank(h)?;
        if h.basis() != self.basis() {
            return Err(Error::BasisMismatch {
                expected: self.basis().to_string(),
                found: h.basis().to_string(),
            });
        }
        let mut out = HeckeElt::zero(self.rank(), Basis::T);
        for (x, a) in h.terms() {
            for (y, p) in &self.c[x.idx()] {
                out.add_term(*y, &(p * a));
            }
        }
        Ok(out)
    }

    /// `h_{x,y,z}` with `C_x C_y = sum_z h_{x,y,z} C_z`.
    pub fn structure_constants(&self, x: ElemId, y: ElemId) -> BTreeMap<ElemId, Laurent2> {
        let prod = self
            .alg
            .mul(&self.c_basis_element(x), &self.c_basis_element(y))
            .expect("T-basis operands");
        let c = self.to_c_basis(&prod).expect("T-basis product");
        c.terms().map(|(z, a)| (z, a.clone())).collect()
    }

    /// Product of two elements given in any basis, returned in the C-basis.
    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt> {
        let ta = self.to_t(a)?;
        let tb = self.to_t(b)?;
        self.to_c_basis(&self.alg.mul(&ta, &tb)?)
    }

    /// Converts to the T-basis whichever basis `h` is in.
    pub fn to_t(&self, h: &HeckeElt) -> Result<HeckeElt> {
        match h.basis() {
            Basis::T => {
                self.check_rank(h)?;
                Ok(h.clone())
            }
            Basis::C(_) => self.to_t_basis(h),
        }
    }

    /// Iterates over all stored `(y, w, p*_{y,w})` with `y < w`.
    pub fn pstar_entries(&self) -> impl Iterator<Item = (ElemId, ElemId, &Laurent2)> + '_ {
        self.c.iter().enumerate().flat_map(|(k, row)| {
            let w = ElemId(k as u32);
            row.iter()
                .filter(move |(y, _)| *y != w)
                .map(move |(y, p)| (*y, w, p))
        })
    }
}

/// File name used for the cache of a given rank and order.
pub fn cache_file_name(n: usize, order: &MonomialOrder) -> String {
    let key: String = order
        .to_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    format!("kl-b{n}-{key}.txt")
}

impl KlTable {
    /// Writes one line `y_window;w_window;poly` per nonzero `p*_{y,w}`,
    /// `y < w`, after a header naming the rank and order.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = BufWriter::new(fs::File::create(path)?);
        writeln!(out, "# n={} order={}", self.rank(), self.order)?;
        let g = self.group();
        for (y, w, p) in self.pstar_entries() {
            writeln!(out, "{};{};{}", g.elem(y), g.elem(w), p)?;
        }
        out.flush()?;
        Ok(())
    }

    /// Rebuilds a table from a cache file. The `M` polynomials are
    /// recomputed from the loaded `p*`.
    pub fn load(alg: Arc<HeckeAlgebra>, order: MonomialOrder, path: &Path) -> Result<Self> {
        alg.weights().check(&order)?;
        let reader = BufReader::new(fs::File::open(path)?);
        let mut lines = reader.lines();
        let header = lines.next().transpose()?.unwrap_or_default();
        let want = format!("# n={} order={}", alg.rank(), order);
        if header.trim() != want {
            return Err(Error::Parse(format!(
                "cache header `{header}` does not match `{want}`"
            )));
        }
        let size = alg.group().order();
        let mut acc: Vec<HashMap<ElemId, Laurent2>> = vec![HashMap::new(); size];
        {
            let g = alg.group();
            for line in lines {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let mut parts = line.splitn(3, ';');
                let (Some(y), Some(w), Some(p)) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::Parse(format!("bad cache line `{line}`")));
                };
                let y = g.id_of(&y.parse::<SignedPerm>()?)?;
                let w = g.id_of(&w.parse::<SignedPerm>()?)?;
                acc[w.idx()].insert(y, p.parse()?);
            }
        }
        let c = acc
            .into_iter()
            .enumerate()
            .map(|(k, mut m)| {
                m.insert(ElemId(k as u32), Laurent2::one());
                into_row(m)
            })
            .collect();
        let ngens = alg.rank();
        let mut table = KlTable {
            alg,
            order,
            c,
            mu: vec![vec![Vec::new(); size]; ngens],
        };
        table.fill_mu(0..size);
        Ok(table)
    }

    /// Loads `dir/<cache name>` if present, otherwise builds the table and
    /// writes it there.
    pub fn load_or_build(alg: Arc<HeckeAlgebra>, order: MonomialOrder, dir: &Path) -> Result<Self> {
        let path: PathBuf = dir.join(cache_file_name(alg.rank(), &order));
        if path.exists() {
            return Self::load(alg, order, &path);
        }
        let table = Self::new(alg, order)?;
        fs::create_dir_all(dir)?;
        table.save(&path)?;
        Ok(table)
    }
}
