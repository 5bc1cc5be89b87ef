//! Left, right and two-sided cells, and left cell modules.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::group::ElemId;
use crate::kl::KlTable;
use crate::laurent::Laurent2;
use crate::matrix::Matrix;
use crate::order::MonomialOrder;
use crate::perm::Gen;
use crate::rs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellSide {
    Left,
    Right,
    Two,
}

impl fmt::Display for CellSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellSide::Left => "left",
            CellSide::Right => "right",
            CellSide::Two => "two",
        })
    }
}

impl FromStr for CellSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(CellSide::Left),
            "right" => Ok(CellSide::Right),
            "two" | "two-sided" => Ok(CellSide::Two),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

/// The cells of one side, with the partial order they inherit.
#[derive(Debug, Clone)]
pub struct CellPartition {
    pub n: usize,
    pub order: MonomialOrder,
    pub side: CellSide,
    /// Each cell sorted by id; cells sorted by their smallest id.
    pub cells: Vec<Vec<ElemId>>,
    cell_of: Vec<usize>,
    // below[c] = cells d with d <= c (including c)
    below: Vec<BTreeSet<usize>>,
}

impl CellPartition {
    pub fn cell_index(&self, w: ElemId) -> usize {
        self.cell_of[w.idx()]
    }

    pub fn cell_of(&self, w: ElemId) -> &[ElemId] {
        &self.cells[self.cell_of[w.idx()]]
    }

    pub fn same_cell(&self, x: ElemId, y: ElemId) -> bool {
        self.cell_of[x.idx()] == self.cell_of[y.idx()]
    }

    /// Whether cell `a` lies below cell `b` in the induced order.
    pub fn cell_leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(&a)
    }

    /// The preorder `x <= y` on elements.
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.cell_leq(self.cell_index(x), self.cell_index(y))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

// Edges y -> z whenever C_z occurs in C_s C_y for some s in `gens`,
// restricted to `domain` (elements outside are skipped).
fn left_edges(table: &KlTable, gens: &[Gen], domain: &[bool]) -> Vec<(ElemId, ElemId)> {
    let mut edges = Vec::new();
    for y in table.group().ids().filter(|y| domain[y.idx()]) {
        for &s in gens {
            for (z, _) in table.left_gen_action(s, y) {
                if z != y && domain[z.idx()] {
                    edges.push((y, z));
                }
            }
        }
    }
    edges
}

fn components(
    size: usize,
    domain: &[bool],
    edges: &[(ElemId, ElemId)],
) -> (Vec<Vec<ElemId>>, Vec<usize>) {
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(size, edges.len());
    for _ in 0..size {
        graph.add_node(());
    }
    for &(a, b) in edges {
        graph.add_edge((a.idx() as u32).into(), (b.idx() as u32).into(), ());
    }
    let mut cells: Vec<Vec<ElemId>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut ids: Vec<ElemId> = c.into_iter().map(|v| ElemId(v.index() as u32)).collect();
            ids.sort_unstable();
            ids
        })
        .filter(|c| domain[c[0].idx()])
        .collect();
    cells.sort_unstable_by_key(|c| c[0]);
    let mut cell_of = vec![usize::MAX; size];
    for (k, c) in cells.iter().enumerate() {
        for x in c {
            cell_of[x.idx()] = k;
        }
    }
    (cells, cell_of)
}

pub fn cell_partition(table: &KlTable, side: CellSide) -> CellPartition {
    let g = table.group();
    let size = g.order();
    let all = vec![true; size];
    let left = left_edges(table, &g.gens(), &all);
    let right: Vec<(ElemId, ElemId)> = left
        .iter()
        .map(|&(a, b)| (g.inverse(a), g.inverse(b)))
        .collect();
    let edges = match side {
        CellSide::Left => left,
        CellSide::Right => right,
        CellSide::Two => left.into_iter().chain(right).collect(),
    };
    let (cells, cell_of) = components(size, &all, &edges);
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cells.len()];
    for &(a, b) in &edges {
        let (ca, cb) = (cell_of[a.idx()], cell_of[b.idx()]);
        if ca != cb {
            succ[ca].insert(cb);
        }
    }
    let below = (0..cells.len())
        .map(|c| {
            let mut seen = BTreeSet::from([c]);
            let mut stack = vec![c];
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen
        })
        .collect();
    CellPartition {
        n: g.rank(),
        order: table.order(),
        side,
        cells,
        cell_of,
        below,
    }
}

/// The left cell containing `w`.
pub fn left_cell_of(table: &KlTable, w: ElemId) -> Vec<ElemId> {
    cell_partition(table, CellSide::Left).cell_of(w).to_vec()
}

/// Left cells of the parabolic subgroup generated by `gens`. The
/// Kazhdan-Lusztig data of a parabolic subgroup is the restriction of that
/// of `W_n`.
pub fn parabolic_left_cells(table: &KlTable, gens: &[Gen]) -> Vec<Vec<ElemId>> {
    let g = table.group();
    let mut domain = vec![false; g.order()];
    for x in g.parabolic(gens) {
        domain[x.idx()] = true;
    }
    components(g.order(), &domain, &left_edges(table, gens, &domain)).0
}

/// Matrices of the generators on the basis `{e_w : w in cell}`:
/// `T_s e_x = sum_y (h_{s,x,y} - delta_{xy} v_s^{-1}) e_y`, so column `x`
/// holds the image of `e_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModule {
    pub order: MonomialOrder,
    pub elements: Vec<ElemId>,
    /// Indexed by generator: `t, s1, ..., s_{n-1}`.
    pub gens: Vec<Matrix>,
}

impl CellModule {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn matrix(&self, g: Gen) -> &Matrix {
        &self.gens[g.index()]
    }
}

/// The cell module of the left cell containing `w`. `basis` fixes the
/// order of the basis; by default it is the (length, window) order.
pub fn cell_module(
    table: &KlTable,
    partition: &CellPartition,
    w: ElemId,
    basis: Option<&[ElemId]>,
) -> Result<CellModule> {
    if partition.side != CellSide::Left || partition.order != table.order() {
        return Err(Error::Precondition(
            "cell modules need the left cells of the same order".into(),
        ));
    }
    let cell = partition.cell_of(w);
    let elements: Vec<ElemId> = match basis {
        None => cell.to_vec(),
        Some(b) => {
            let mut sorted = b.to_vec();
            sorted.sort_unstable();
            if sorted != cell {
                return Err(Error::InvalidBasisOrder);
            }
            b.to_vec()
        }
    };
    Ok(cell_module_on(table, &elements))
}

/// Generator matrices on the given elements, assumed to form a left cell.
pub fn cell_module_on(table: &KlTable, elements: &[ElemId]) -> CellModule {
    let g = table.group();
    let pos = |z: ElemId| elements.iter().position(|&e| e == z);
    let d = elements.len();
    let gens = g
        .gens()
        .into_iter()
        .map(|s| {
            let mut m = Matrix::zeros(d, d);
            let inv = table.alg().param(s).bar();
            for (col, &x) in elements.iter().enumerate() {
                for (z, h) in table.left_gen_action(s, x) {
                    if let Some(row) = pos(z) {
                        m[(row, col)] += &h;
                    }
                }
                m[(col, col)] -= &inv;
            }
            m
        })
        .collect();
    CellModule {
        order: table.order(),
        elements: elements.to_vec(),
        gens,
    }
}

/// The common type of the elements of a left cell (asymptotic order).
pub fn cell_type(table: &KlTable, cell: &[ElemId]) -> Bipartition {
    rs::type_of(table.group().elem(cell[0]))
}

/// Orders a cell by the row reading words of the `P` tableaux.
pub fn canonical_basis_order(table: &KlTable, cell: &[ElemId]) -> Vec<ElemId> {
    let g = table.group();
    let mut out = cell.to_vec();
    out.sort_by_cached_key(|&x| rs::rs(g.elem(x)).0.reading_word());
    out
}

/// Whether two left cells of equal type carry identical generator
/// matrices once both are ordered by [`canonical_basis_order`].
pub fn same_type_matrices_agree(
    table: &KlTable,
    cell1: &[ElemId],
    cell2: &[ElemId],
) -> Result<bool> {
    if !table.order().is_asymptotic() {
        return Err(Error::NotAsymptotic(table.order().to_string()));
    }
    let (t1, t2) = (cell_type(table, cell1), cell_type(table, cell2));
    if t1 != t2 {
        return Err(Error::TypeMismatch(t1.to_string(), t2.to_string()));
    }
    let m1 = cell_module_on(table, &canonical_basis_order(table, cell1));
    let m2 = cell_module_on(table, &canonical_basis_order(table, cell2));
    Ok(m1.gens == m2.gens)
}

/// Checks the quadratic relations and the braid relations of type `B_n`.
pub fn satisfies_hecke_relations(table: &KlTable, gens: &[Matrix]) -> bool {
    let n = table.rank();
    let d = gens.first().map_or(0, Matrix::rows);
    let id = Matrix::identity(d);
    let quadratic = table.group().gens().into_iter().all(|s| {
        let p: &Laurent2 = table.alg().param(s);
        let m = &gens[s.index()];
        (&(m - &id.scale(p)) * &(m + &id.scale(&p.bar()))).is_zero()
    });
    let braid = |a: &Matrix, b: &Matrix, k: usize| {
        let mut x = Matrix::identity(d);
        let mut y = Matrix::identity(d);
        for i in 0..k {
            let (p, q) = if i % 2 == 0 { (a, b) } else { (b, a) };
            x = &x * p;
            y = &y * q;
        }
        x == y
    };
    let mut ok = quadratic;
    for i in 0..n {
        for j in i + 1..n {
            let k = match (i, j) {
                (0, 1) => 4,
                _ if j == i + 1 => 3,
                _ => 2,
            };
            ok &= braid(&gens[i], &gens[j], k);
        }
    }
    ok
}
