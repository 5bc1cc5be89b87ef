//! Murphy elements, Specht modules and the change of basis `G_lambda` to
//! the distinguished left cell module (asymptotic order only).

use rayon::prelude::*;

use crate::bipartition::{dominance_leq, Bipartition};
use crate::cells::{cell_module_on, CellModule, CellPartition, CellSide};
use crate::error::{Error, Result};
use crate::group::ElemId;
use crate::hecke::HeckeElt;
use crate::kl::KlTable;
use crate::laurent::Laurent2;
use crate::matrix::Matrix;
use crate::perm::{special_elements, SignedPerm};
use crate::rs::type_of;
use crate::tableau::{self, Bitableau};

fn require_asymptotic(table: &KlTable) -> Result<()> {
    if !table.order().is_asymptotic() {
        return Err(Error::NotAsymptotic(table.order().to_string()));
    }
    Ok(())
}

fn check_shape(table: &KlTable, lambda: &Bipartition) -> Result<()> {
    if lambda.size() != table.rank() {
        return Err(Error::SizeMismatch(lambda.size(), table.rank()));
    }
    Ok(())
}

/// The elements attached to a bipartition.
#[derive(Debug, Clone)]
pub struct ShapeData {
    pub l: usize,
    pub sigma_l: ElemId,
    pub a_l: ElemId,
    pub sigma_lambda: ElemId,
    /// `a_l sigma_lambda`
    pub a_sigma: ElemId,
    /// `sigma_lambda a_l`
    pub sigma_a: ElemId,
}

pub fn shape_data(table: &KlTable, lambda: &Bipartition) -> Result<ShapeData> {
    check_shape(table, lambda)?;
    let g = table.group();
    let n = table.rank();
    let l = lambda.l();
    let sp = special_elements(n, l)?;
    let sl = tableau::sigma_lambda(lambda);
    Ok(ShapeData {
        l,
        sigma_l: g.id_of(&sp.sigma)?,
        a_l: g.id_of(&sp.a)?,
        sigma_lambda: g.id_of(&sl)?,
        a_sigma: g.id_of(&sp.a.compose(&sl))?,
        sigma_a: g.id_of(&sl.compose(&sp.a))?,
    })
}

/// `V^{-l} v^{l(sigma_lambda) - l(l-1)}`.
fn x_scalar(table: &KlTable, d: &ShapeData) -> Laurent2 {
    let l = d.l as i32;
    let ls = table.group().length(d.sigma_lambda) as i32;
    Laurent2::monomial(-l, ls - l * (l - 1))
}

/// `x_lambda = V^{-l} v^{l(sigma_lambda)-l(l-1)} T_{sigma_l} C_{a_l sigma_lambda}`,
/// in the T-basis. Fails if this differs from the same scalar times
/// `C_{sigma_lambda a_l} T_{sigma_l}`.
pub fn x_lambda(table: &KlTable, lambda: &Bipartition) -> Result<HeckeElt> {
    require_asymptotic(table)?;
    let d = shape_data(table, lambda)?;
    let h = table.alg();
    let left = h.mul(&h.t(d.sigma_l), &table.c_basis_element(d.a_sigma))?;
    let right = h.mul(&table.c_basis_element(d.sigma_a), &h.t(d.sigma_l))?;
    if left != right {
        return Err(Error::Invariant(format!(
            "T_sigma_l C_(a_l sigma) != C_(sigma a_l) T_sigma_l for {lambda}"
        )));
    }
    Ok(left.scale(&x_scalar(table, &d)))
}

/// `zeta_lambda = V^l v^{l(l-1)-l(sigma_lambda)} T_{sigma_l}^{-1}`, so that
/// `x_lambda zeta_lambda = C_{sigma_lambda a_l}`.
pub fn zeta_lambda(table: &KlTable, lambda: &Bipartition) -> Result<HeckeElt> {
    require_asymptotic(table)?;
    let d = shape_data(table, lambda)?;
    Ok(table
        .alg()
        .invert_t(d.sigma_l)
        .scale(&x_scalar(table, &d).bar()))
}

/// Membership in `N^lambda` (or in the strictly smaller ideal when `hat`):
/// every `C_y` in the support must have `lambda <= (nu2 | nu1*)`, strictly
/// for `hat`, where `(nu1 | nu2)` is the type of `y`.
pub fn n_ideal_membership(
    table: &KlTable,
    h: &HeckeElt,
    lambda: &Bipartition,
    hat: bool,
) -> Result<bool> {
    require_asymptotic(table)?;
    check_shape(table, lambda)?;
    let c = match h.basis() {
        crate::hecke::Basis::T => table.to_c_basis(h)?,
        _ => table.to_c_basis(&table.to_t(h)?)?,
    };
    for y in c.support() {
        let mu = type_of(table.group().elem(y)).swap_conjugate_first();
        if !dominance_leq(lambda, &mu)? || (hat && &mu == lambda) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G_lambda`: rows and columns indexed by `T(lambda)` in (length, window)
/// order of `d(t)`.
#[derive(Debug, Clone)]
pub struct GMatrix {
    pub lambda: Bipartition,
    pub tableaux: Vec<Bitableau>,
    pub d: Vec<SignedPerm>,
    /// `d(t) sigma_lambda a_l`, the basis of the cell module.
    pub cell: Vec<ElemId>,
    pub entries: Matrix,
}

impl GMatrix {
    /// Unit diagonal, Bruhat support, off-diagonal entries in
    /// `v^-1 Z[v^-1]`, determinant 1. Reports the first violation.
    pub fn check(&self) -> Result<()> {
        let k = self.tableaux.len();
        for s in 0..k {
            for t in 0..k {
                let g = &self.entries[(s, t)];
                let at = || {
                    format!(
                        "{} at ({}, {})",
                        self.lambda, self.tableaux[s], self.tableaux[t]
                    )
                };
                if s == t {
                    if !g.is_one() {
                        return Err(Error::Invariant(format!("diagonal entry {g} for {}", at())));
                    }
                    continue;
                }
                if g.is_zero() {
                    continue;
                }
                if !self.d[s].bruhat_leq(&self.d[t]) {
                    return Err(Error::Invariant(format!(
                        "entry {g} outside Bruhat support for {}",
                        at()
                    )));
                }
                if g.terms().any(|((i, j), _)| i != 0 || j > -1) {
                    return Err(Error::Invariant(format!(
                        "entry {g} not in v^-1 Z[v^-1] for {}",
                        at()
                    )));
                }
            }
        }
        if !self.entries.det().is_one() {
            return Err(Error::Invariant(format!(
                "det G is not 1 for {}",
                self.lambda
            )));
        }
        Ok(())
    }
}

/// Coordinates of `h` (C-basis) on the cell elements; every other support
/// element must lie strictly below the cell in the left preorder.
fn project(
    table: &KlTable,
    partition: &CellPartition,
    cell: &[ElemId],
    top: ElemId,
    h: &HeckeElt,
) -> Result<Vec<Laurent2>> {
    let mut coords = vec![Laurent2::zero(); cell.len()];
    for (y, c) in h.terms() {
        match cell.iter().position(|&x| x == y) {
            Some(k) => coords[k] = c.clone(),
            None if partition.same_cell(y, top) => {
                return Err(Error::Invariant(format!(
                    "{} lies in the cell but is not d(s) sigma a_l for a standard s",
                    table.group().word(y)
                )))
            }
            None if !partition.leq(y, top) => {
                return Err(Error::Invariant(format!(
                    "{} is not below the cell",
                    table.group().word(y)
                )))
            }
            None => {}
        }
    }
    Ok(coords)
}

/// `T_{d(t)} C_{sigma_lambda a_l}` in the C-basis.
fn column_source(table: &KlTable, d: &SignedPerm, sigma_a: ElemId) -> Result<HeckeElt> {
    let h = table.alg();
    let x = h.mul(
        &h.t(table.group().id_of(d)?),
        &table.c_basis_element(sigma_a),
    )?;
    table.to_c_basis(&x)
}

pub fn g_matrix(
    table: &KlTable,
    partition: &CellPartition,
    lambda: &Bipartition,
) -> Result<GMatrix> {
    require_asymptotic(table)?;
    if partition.side != CellSide::Left || !partition.order.is_asymptotic() {
        return Err(Error::Precondition(
            "G needs the asymptotic left cells".into(),
        ));
    }
    let data = shape_data(table, lambda)?;
    let g = table.group();
    let tableaux = tableau::standard(lambda);
    let d: Vec<SignedPerm> = tableaux.iter().map(tableau::d_of).collect::<Result<_>>()?;
    let sa = g.elem(data.sigma_a).clone();
    let cell: Vec<ElemId> = d
        .iter()
        .map(|x| g.id_of(&x.compose(&sa)))
        .collect::<Result<_>>()?;
    let columns: Vec<Vec<Laurent2>> = d
        .par_iter()
        .map(|dt| {
            let x = column_source(table, dt, data.sigma_a)?;
            project(table, partition, &cell, data.sigma_a, &x)
        })
        .collect::<Result<_>>()?;
    let k = cell.len();
    let mut entries = Matrix::zeros(k, k);
    for (t, col) in columns.into_iter().enumerate() {
        for (s, x) in col.into_iter().enumerate() {
            entries[(s, t)] = x;
        }
    }
    Ok(GMatrix {
        lambda: lambda.clone(),
        tableaux,
        d,
        cell,
        entries,
    })
}

/// The Specht module in its standard basis together with the data that
/// relates it to the distinguished cell module.
#[derive(Debug, Clone)]
pub struct SpechtModule {
    pub g: GMatrix,
    /// The cell module on `G.cell`, in the same order.
    pub cell_module: CellModule,
    /// Indexed by generator: `t, s1, ..., s_{n-1}`.
    pub gens: Vec<Matrix>,
}

impl SpechtModule {
    pub fn dim(&self) -> usize {
        self.g.tableaux.len()
    }

    /// `phi_lambda` on coordinates: multiplication by `G`.
    pub fn phi(&self, coords: &[Laurent2]) -> Vec<Laurent2> {
        self.g.entries.mul_vec(coords)
    }
}

/// `G^{-1} rho(T_g) G` for each generator.
pub fn specht_module(
    table: &KlTable,
    partition: &CellPartition,
    lambda: &Bipartition,
) -> Result<SpechtModule> {
    let g = g_matrix(table, partition, lambda)?;
    let cell_module = cell_module_on(table, &g.cell);
    let inv = g.entries.inverse_upper_unitriangular()?;
    let gens = cell_module
        .gens
        .iter()
        .map(|m| &(&inv * m) * &g.entries)
        .collect();
    Ok(SpechtModule {
        g,
        cell_module,
        gens,
    })
}

/// Checks that `phi_lambda` intertwines the two actions, computing the
/// image of `T_s x_t` directly in `H_n` rather than through the cell
/// matrices.
pub fn check_intertwining(
    table: &KlTable,
    partition: &CellPartition,
    module: &SpechtModule,
) -> Result<()> {
    let data = shape_data(table, &module.g.lambda)?;
    let h = table.alg();
    for s in table.group().gens() {
        let via_specht = &module.g.entries * &module.gens[s.index()];
        let via_cell = &module.cell_module.gens[s.index()] * &module.g.entries;
        if via_specht != via_cell {
            return Err(Error::Invariant(format!(
                "phi does not intertwine T_{s} for {}",
                module.g.lambda
            )));
        }
        for (t, dt) in module.g.d.iter().enumerate() {
            let x = h.mul(
                &h.t(table.group().id_of(dt)?),
                &table.c_basis_element(data.sigma_a),
            )?;
            let y = table.to_c_basis(&h.mul_gen_left(s, &x)?)?;
            let direct = project(table, partition, &module.g.cell, data.sigma_a, &y)?;
            let expect: Vec<Laurent2> = (0..module.dim())
                .map(|r| via_cell[(r, t)].clone())
                .collect();
            if direct != expect {
                return Err(Error::Invariant(format!(
                    "T_{s} x_t for t = {} disagrees with the cell action ({})",
                    module.g.tableaux[t], module.g.lambda
                )));
            }
        }
    }
    Ok(())
}

/// `phi_lambda` applied to Specht coordinates.
pub fn phi_lambda(
    table: &KlTable,
    partition: &CellPartition,
    lambda: &Bipartition,
    coords: &[Laurent2],
) -> Result<Vec<Laurent2>> {
    let g = g_matrix(table, partition, lambda)?;
    if coords.len() != g.tableaux.len() {
        return Err(Error::Precondition(format!(
            "expected {} coordinates",
            g.tableaux.len()
        )));
    }
    Ok(g.entries.mul_vec(coords))
}
