//! Verification suites. Each check records the first counterexample it
//! meets rather than stopping the whole run.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::bipartition::{bipartitions, Bipartition};
use crate::cells::{
    cell_module, cell_partition, parabolic_left_cells, same_type_matrices_agree,
    satisfies_hecke_relations, CellModule, CellPartition, CellSide,
};
use crate::error::{Error, Result};
use crate::group::ElemId;
use crate::hecke::HeckeElt;
use crate::hom::hom_space;
use crate::kl::KlTable;
use crate::laurent::Laurent2;
use crate::matrix::Matrix;
use crate::perm::{coset_reps_y, special_elements, Gen, SignedPerm};
use crate::rs::{rs, type_of};
use crate::specht::{check_intertwining, shape_data, specht_module, x_lambda, zeta_lambda};
use crate::tableau::{d_of, distinguished_cell, standard};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thm3,
    CellsRs,
    Counterexample,
    Identities,
    Kl,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "thm3" => Suite::Thm3,
            "cells-rs" => Suite::CellsRs,
            "counterexample" => Suite::Counterexample,
            "identities" => Suite::Identities,
            "kl" => Suite::Kl,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Thm3 => "thm3",
            Suite::CellsRs => "cells-rs",
            Suite::Counterexample => "counterexample",
            Suite::Identities => "identities",
            Suite::Kl => "kl",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The first counterexample, or a short summary on success.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: std::result::Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn words(table: &KlTable, xs: &[ElemId]) -> String {
    let w: Vec<String> = xs.iter().map(|&x| table.group().word(x)).collect();
    format!("{{{}}}", w.join(", "))
}

fn as_sets(parts: impl IntoIterator<Item = Vec<ElemId>>) -> BTreeSet<Vec<ElemId>> {
    parts
        .into_iter()
        .map(|mut p| {
            p.sort_unstable();
            p
        })
        .collect()
}

fn fibers<K: Ord>(table: &KlTable, key: impl Fn(ElemId) -> K) -> BTreeSet<Vec<ElemId>> {
    let mut map: BTreeMap<K, Vec<ElemId>> = BTreeMap::new();
    for x in table.group().ids() {
        map.entry(key(x)).or_default().push(x);
    }
    as_sets(map.into_values())
}

fn compare_partitions(
    table: &KlTable,
    cells: &CellPartition,
    expect: &BTreeSet<Vec<ElemId>>,
) -> Outcome {
    let got = as_sets(cells.cells.iter().cloned());
    if let Some(c) = got.difference(expect).next() {
        return Err(format!("cell {} is not a class", words(table, c)));
    }
    if let Some(c) = expect.difference(&got).next() {
        return Err(format!("class {} is not a cell", words(table, c)));
    }
    Ok(format!("{} classes", got.len()))
}

/// Generators of the Young subgroup `S_lambda`.
pub fn young_gens(lambda: &Bipartition) -> Vec<Gen> {
    let mut out = Vec::new();
    let mut start = 0;
    for b in lambda.blocks() {
        out.extend((start + 1..start + b).map(Gen::S));
        start += b;
    }
    out
}

fn require(table: &KlTable, asymptotic: bool) -> Result<()> {
    if asymptotic && !table.order().is_asymptotic() {
        return Err(Error::NotAsymptotic(table.order().to_string()));
    }
    Ok(())
}

/// G_lambda invariants and the intertwining property of `phi_lambda` for
/// every bipartition of `n`.
pub fn thm3(table: &KlTable) -> Result<Vec<Check>> {
    require(table, true)?;
    let partition = cell_partition(table, CellSide::Left);
    let mut checks = Vec::new();
    let mut total = 0;
    for lambda in bipartitions(table.rank()) {
        let outcome = (|| -> Outcome {
            let m = specht_module(table, &partition, &lambda).map_err(|e| e.to_string())?;
            m.g.check().map_err(|e| e.to_string())?;
            check_intertwining(table, &partition, &m).map_err(|e| e.to_string())?;
            ensure(satisfies_hecke_relations(table, &m.gens), || {
                "Specht matrices violate the relations".into()
            })?;
            ensure(m.dim() == standard(&lambda).len(), || {
                "dimension differs from |T(lambda)|".into()
            })?;
            total += m.dim() * m.dim();
            let off = m.g.entries.entries().filter(|x| !x.is_zero()).count() - m.dim();
            Ok(format!(
                "dim {}, {} nonzero off-diagonal entries",
                m.dim(),
                off
            ))
        })();
        checks.push(Check::new(format!("G_{lambda}"), outcome));
    }
    let order = table.group().order();
    checks.push(Check::new(
        "sum of squared Specht dimensions",
        if total == order {
            Ok(format!("{total} = |W_n|"))
        } else {
            Err(format!("{total} != {order}"))
        },
    ));
    Ok(checks)
}

/// Cells against the Robinson-Schensted data, the Clifford-form
/// criterion, the shape of left cells built from parabolic ones, and
/// the distinguished left cells.
pub fn cells_rs(table: &KlTable) -> Result<Vec<Check>> {
    require(table, true)?;
    let g = table.group();
    let n = table.rank();
    let left = cell_partition(table, CellSide::Left);
    let right = cell_partition(table, CellSide::Right);
    let two = cell_partition(table, CellSide::Two);
    let mut checks = vec![
        Check::new(
            "left cells are Q-fibers",
            compare_partitions(table, &left, &fibers(table, |x| rs(g.elem(x)).1)),
        ),
        Check::new(
            "right cells are P-fibers",
            compare_partitions(table, &right, &fibers(table, |x| rs(g.elem(x)).0)),
        ),
        Check::new(
            "two-sided cells are shape classes",
            compare_partitions(table, &two, &fibers(table, |x| type_of(g.elem(x)))),
        ),
    ];

    let parabolic: Vec<Vec<Vec<ElemId>>> = (0..=n)
        .map(|l| parabolic_left_cells(table, &levi_gens(n, l)))
        .collect();
    let parabolic_index: Vec<BTreeMap<ElemId, usize>> = parabolic
        .iter()
        .map(|cells| {
            cells
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.iter().map(move |&x| (x, i)))
                .collect()
        })
        .collect();
    let clifford = fibers(table, |x| {
        let c = g.elem(x).clifford_form();
        let sigma = g.id_of(&c.sigma_w).expect("in group");
        (c.l, c.b_w.window().to_vec(), parabolic_index[c.l][&sigma])
    });
    checks.push(Check::new(
        "Clifford-form criterion",
        compare_partitions(table, &left, &clifford),
    ));

    let shape = (|| -> Outcome {
        let mut count = 0;
        for (l, cells) in parabolic.iter().enumerate() {
            let a = special_elements(n, l).map_err(|e| e.to_string())?.a;
            let ys = coset_reps_y(n, l).map_err(|e| e.to_string())?;
            for c in cells {
                for before in [true, false] {
                    let mut set: Vec<ElemId> = Vec::new();
                    for y in &ys {
                        for &x in c {
                            let s = g.elem(x);
                            let w = if before {
                                y.compose(&a).compose(s)
                            } else {
                                y.compose(s).compose(&a)
                            };
                            set.push(g.id_of(&w).map_err(|e| e.to_string())?);
                        }
                    }
                    set.sort_unstable();
                    set.dedup();
                    ensure(left.cell_of(set[0]) == set.as_slice(), || {
                        format!(
                            "l = {l}, parabolic cell {} does not give a left cell",
                            words(table, c)
                        )
                    })?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} sets checked"))
    })();
    checks.push(Check::new("Y a_l c and Y c a_l are left cells", shape));

    let mut lambdas_total = 0;
    for lambda in bipartitions(n) {
        let outcome = (|| -> Outcome {
            let cell = distinguished_cell(&lambda);
            lambdas_total += cell.len();
            let ids: Vec<ElemId> = cell
                .iter()
                .map(|w| g.id_of(w))
                .collect::<Result<_>>()
                .map_err(|e| e.to_string())?;
            let d = shape_data(table, &lambda).map_err(|e| e.to_string())?;
            let mut sorted = ids.clone();
            sorted.sort_unstable();
            ensure(left.cell_of(d.sigma_a) == sorted.as_slice(), || {
                format!(
                    "distinguished cell {} differs from the left cell {}",
                    words(table, &ids),
                    words(table, left.cell_of(d.sigma_a))
                )
            })?;
            let top = g.length(d.sigma_a);
            ensure(top == g.length(d.sigma_lambda) + g.length(d.a_l), || {
                "l(sigma a_l) is not additive".into()
            })?;
            for t in standard(&lambda) {
                let dt = d_of(&t).map_err(|e| e.to_string())?;
                let x = g
                    .id_of(&dt.compose(g.elem(d.sigma_a)))
                    .map_err(|e| e.to_string())?;
                ensure(g.length(x) == dt.length() + top, || {
                    format!("length not additive for {t}")
                })?;
            }
            let ty = type_of(g.elem(d.sigma_a));
            ensure(ty == lambda.swap_conjugate_second(), || {
                format!("type {ty}")
            })?;
            Ok(format!("{} elements, type {ty}", ids.len()))
        })();
        checks.push(Check::new(
            format!("distinguished cell of {lambda}"),
            outcome,
        ));
    }
    checks.push(Check::new(
        "number of left cells",
        if left.len() == lambdas_total {
            Ok(format!("{} = sum |T(lambda)|", left.len()))
        } else {
            Err(format!("{} != {lambdas_total}", left.len()))
        },
    ));

    let agree = (|| -> Outcome {
        let mut by_type: BTreeMap<Bipartition, Vec<&Vec<ElemId>>> = BTreeMap::new();
        for c in &left.cells {
            by_type.entry(type_of(g.elem(c[0]))).or_default().push(c);
        }
        let mut pairs = 0;
        for cells in by_type.values() {
            for c in cells.iter().skip(1) {
                let ok = same_type_matrices_agree(table, cells[0], c).map_err(|e| e.to_string())?;
                ensure(ok, || {
                    format!("{} and {}", words(table, cells[0]), words(table, c))
                })?;
                pairs += 1;
            }
        }
        Ok(format!("{pairs} pairs"))
    })();
    checks.push(Check::new("same-type cells carry equal matrices", agree));
    Ok(checks)
}

fn levi_gens(n: usize, l: usize) -> Vec<Gen> {
    (1..n).filter(|&i| i != l).map(Gen::S).collect()
}

/// An asymptotic left cell of `W_3`, in a fixed basis order.
pub const ASYMPTOTIC_CELL: [&str; 3] = ["s2 t", "s1 s2 t", "s2 s1 s2 t"];

/// Three left cells of the `weighted:1,1` order, each in a fixed basis order.
pub const WEIGHTED_CELLS: [[&str; 3]; 3] = [
    ["s1 s2 s1", "s1 t s1 s2 s1", "t s1 s2 s1"],
    ["s1 s2 s1 t", "s1 t s1 s2 s1 t", "t s1 s2 s1 t"],
    ["s1 s2 s1 t s1", "s1 t s1 s2 s1 t s1", "t s1 s2 s1 t s1"],
];

/// `rho_lambda` of the asymptotic cell, indexed by generator. The
/// `(0, 1)` entry of `T_t` is the recomputed value.
pub fn rho_lambda() -> Vec<Matrix> {
    vec![
        Matrix::parse_rows(&[
            &["V", "V*v^-1 + V^-1*v", "V*v^-2 + V^-1*v^2"],
            &["0", "-V^-1", "0"],
            &["0", "0", "-V^-1"],
        ]),
        Matrix::parse_rows(&[&["-v^-1", "0", "0"], &["1", "v", "0"], &["0", "0", "v"]]),
        Matrix::parse_rows(&[&["v", "1", "0"], &["0", "-v^-1", "0"], &["0", "1", "v"]]),
    ]
    .into_iter()
    .collect::<Result<_>>()
    .expect("literal matrices")
}

/// The common representation of the weighted cells.
pub fn rho_weighted() -> Vec<Matrix> {
    vec![
        Matrix::parse_rows(&[
            &["-V^-1", "0", "0"],
            &["0", "-V^-1", "0"],
            &["1", "V*v^-1 + V^-1*v", "V"],
        ]),
        Matrix::parse_rows(&[&["v", "0", "0"], &["0", "v", "1"], &["0", "0", "-v^-1"]]),
        Matrix::parse_rows(&[
            &["v", "V*v^-2 + V^-1*v^2", "0"],
            &["0", "-v^-1", "0"],
            &["0", "1", "v"],
        ]),
    ]
    .into_iter()
    .collect::<Result<_>>()
    .expect("literal matrices")
}

/// The intertwiner from `rho_lambda` to the weighted representation.
pub fn intertwiner_p() -> Matrix {
    Matrix::parse_rows(&[
        &["0", "0", "V*v^-2 + V^-1*v^2"],
        &["0", "1", "0"],
        &["1", "0", "0"],
    ])
    .expect("literal matrix")
}

fn module_for(table: &KlTable, ws: &[&str]) -> std::result::Result<CellModule, String> {
    let g = table.group();
    let basis: Vec<ElemId> = ws
        .iter()
        .map(|w| g.parse(w))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let p = cell_partition(table, CellSide::Left);
    cell_module(table, &p, basis[0], Some(&basis)).map_err(|e| match e {
        Error::InvalidBasisOrder => format!("{ws:?} is not a left cell under {}", table.order()),
        e => e.to_string(),
    })
}

/// Whether `x` is a nonzero `K`-multiple of `y` with a unit factor.
fn unit_multiple(x: &Matrix, y: &Matrix) -> bool {
    let Some(k) = (0..y.rows())
        .flat_map(|i| (0..y.cols()).map(move |j| (i, j)))
        .find(|&p| !y[p].is_zero())
    else {
        return false;
    };
    x[k].try_div(&y[k])
        .is_some_and(|c| c.is_unit() && *x == y.scale(&c))
}

/// The `B_3` comparison between the asymptotic cell module and the cells
/// of the weighted order. Takes the rank-3 tables of both orders.
pub fn counterexample(asymptotic: &KlTable, weighted: &KlTable) -> Result<Vec<Check>> {
    require(asymptotic, true)?;
    if asymptotic.rank() != 3 || weighted.rank() != 3 {
        return Err(Error::Precondition(
            "the counterexample lives in rank 3".into(),
        ));
    }
    if weighted.order() != "weighted:1,1".parse()? {
        return Err(Error::Precondition(
            "the counterexample needs the weighted:1,1 order".into(),
        ));
    }
    let mut checks = Vec::new();
    let rho_l = rho_lambda();
    let rho = rho_weighted();

    let asym = module_for(asymptotic, &ASYMPTOTIC_CELL);
    checks.push(Check::new(
        "asymptotic cell",
        asym.as_ref()
            .map(|_| format!("{{{}}}", ASYMPTOTIC_CELL.join(", ")))
            .map_err(Clone::clone),
    ));
    let rho_l_computed = asym.as_ref().map(|m| m.gens.clone()).unwrap_or_default();
    checks.push(Check::new(
        "rho_lambda matrices",
        (|| -> Outcome {
            ensure(!rho_l_computed.is_empty(), || "no module".into())?;
            for (k, (got, want)) in rho_l_computed.iter().zip(&rho_l).enumerate() {
                ensure(got == want, || {
                    format!("T_{} is\n{got}", Gen::from_index(k))
                })?;
            }
            let e = &rho_l_computed[0][(0, 1)];
            ensure(e.is_bar_invariant(), || {
                format!("(1,2) entry {e} is not bar-invariant")
            })?;
            let relation = if e.is_one() { "equals" } else { "differs from" };
            Ok(format!(
                "T_t (1,2) entry = {e}, bar-invariant, {relation} the product V*v^-1*V^-1*v = 1"
            ))
        })(),
    ));

    let mut weighted_mods = Vec::new();
    for (i, ws) in WEIGHTED_CELLS.iter().enumerate() {
        let m = module_for(weighted, ws);
        let outcome = m.as_ref().map_err(Clone::clone).and_then(|m| {
            for (k, (got, want)) in m.gens.iter().zip(&rho).enumerate() {
                ensure(got == want, || {
                    format!("T_{} is\n{got}", Gen::from_index(k))
                })?;
            }
            Ok(format!("{{{}}}", ws.join(", ")))
        });
        checks.push(Check::new(format!("weighted cell C{}", i + 1), outcome));
        if let Ok(m) = m {
            weighted_mods.push(m);
        }
    }
    checks.push(Check::new(
        "weighted cells carry identical matrices",
        if weighted_mods.len() == 3
            && weighted_mods
                .iter()
                .all(|m| m.gens == weighted_mods[0].gens)
        {
            Ok(String::new())
        } else {
            Err("matrices differ".into())
        },
    ));

    let homs = (|| -> Outcome {
        let endo = hom_space(&rho_l, &rho_l).map_err(|e| e.to_string())?;
        ensure(endo.len() == 1, || {
            format!("dim End(rho_lambda) = {}", endo.len())
        })?;
        ensure(unit_multiple(&endo[0].num, &Matrix::identity(3)), || {
            "End(rho_lambda) is not spanned by 1".into()
        })?;
        let hom = hom_space(&rho_l, &rho).map_err(|e| e.to_string())?;
        ensure(hom.len() == 1, || {
            format!("dim Hom(rho_lambda, rho) = {}", hom.len())
        })?;
        let p = &hom[0].num;
        let expected = intertwiner_p();
        ensure(unit_multiple(p, &expected), || {
            format!("intertwiner is not a unit multiple of P:\n{p}")
        })?;
        for k in 0..3 {
            ensure(&expected * &rho_l[k] == &rho[k] * &expected, || {
                format!("P does not intertwine T_{}", Gen::from_index(k))
            })?;
        }
        let det = expected.det();
        let expect: Laurent2 = "-V*v^-2 - V^-1*v^2"
            .parse()
            .map_err(|e: Error| e.to_string())?;
        ensure(det == expect, || format!("det P = {det}"))?;
        ensure(!det.is_unit(), || "det P is a unit".into())?;
        ensure(!p.det().is_unit(), || {
            "det of the computed intertwiner is a unit".into()
        })?;
        Ok(format!("dim Hom = 1, det P = {det}, not a unit of A"))
    })();
    checks.push(Check::new("intertwiner P", homs));
    Ok(checks)
}

/// KL basis: bar invariance of every `C_w` and `p*_{y,w}` in `A_{<0}`.
pub fn kl_well_formed(table: &KlTable) -> Check {
    let outcome = (|| -> Outcome {
        let h = table.alg();
        let g = table.group();
        let order = table.order();
        for (y, w, p) in table.pstar_entries() {
            ensure(y == w || p.is_negative_part(&order), || {
                format!("p*_({}, {}) = {p}", g.word(y), g.word(w))
            })?;
        }
        for w in g.ids() {
            let c = table.c_basis_element(w);
            let bar = h.bar_involution(&c).map_err(|e| e.to_string())?;
            ensure(bar == c, || format!("C_{} is not bar-invariant", g.word(w)))?;
        }
        Ok(format!("{} elements", g.order()))
    })();
    Check::new(format!("KL basis well-formed ({})", table.order()), outcome)
}

/// `C_w` does not depend on the left descent used to build it.
pub fn kl_descent_independence(table: &KlTable) -> Check {
    let outcome = (|| -> Outcome {
        let g = table.group();
        let mut count = 0;
        for w in g.ids() {
            for s in g.left_descents(w) {
                let c = table.c_via_descent(w, s).map_err(|e| e.to_string())?;
                ensure(c == table.c_basis_element(w), || {
                    format!("C_{} via {s}", g.word(w))
                })?;
                count += 1;
            }
        }
        Ok(format!("{count} (w, s) pairs"))
    })();
    Check::new(
        format!("descent-choice independence ({})", table.order()),
        outcome,
    )
}

pub fn kl(table: &KlTable) -> Vec<Check> {
    vec![kl_well_formed(table), kl_descent_independence(table)]
}

fn t_sum(table: &KlTable, gens: &[Gen]) -> HeckeElt {
    let h = table.alg();
    let g = table.group();
    let mut out = h.zero();
    for x in g.parabolic(gens) {
        out.add_term(x, &Laurent2::monomial(0, g.length(x) as i32));
    }
    out
}

/// Product formulas for special elements and the anti-involution.
pub fn identities(table: &KlTable) -> Result<Vec<Check>> {
    require(table, true)?;
    let h = table.alg();
    let g = table.group();
    let mut checks = Vec::new();
    for lambda in bipartitions(table.rank()) {
        let outcome = (|| -> Outcome {
            let d = shape_data(table, &lambda).map_err(|e| e.to_string())?;
            let x = x_lambda(table, &lambda).map_err(|e| e.to_string())?;
            let c = |w| table.c_basis_element(w);
            let mul = |a: &HeckeElt, b: &HeckeElt| h.mul(a, b).map_err(|e| e.to_string());
            ensure(mul(&c(d.a_l), &c(d.sigma_lambda))? == c(d.a_sigma), || {
                "C_a C_sigma != C_(a sigma)".into()
            })?;
            ensure(mul(&c(d.sigma_lambda), &c(d.a_l))? == c(d.sigma_a), || {
                "C_sigma C_a != C_(sigma a)".into()
            })?;
            let ls = g.length(d.sigma_lambda) as i32;
            let sum = t_sum(table, &young_gens(&lambda));
            ensure(
                sum == c(d.sigma_lambda).scale(&Laurent2::monomial(0, ls)),
                || "sum of v^l(sigma) T_sigma != v^l(sigma_lambda) C_sigma_lambda".into(),
            )?;
            ensure(
                mul(&c(d.a_l), &h.t(d.sigma_l))? == mul(&h.t(d.sigma_l), &c(d.a_l))?,
                || "C_a_l does not commute with T_sigma_l".into(),
            )?;
            let z = zeta_lambda(table, &lambda).map_err(|e| e.to_string())?;
            ensure(mul(&x, &z)? == c(d.sigma_a), || {
                "x_lambda zeta_lambda != C_(sigma a_l)".into()
            })?;
            Ok(String::new())
        })();
        checks.push(Check::new(
            format!("special products for {lambda}"),
            outcome,
        ));
    }
    let flat = (|| -> Outcome {
        for w in g.ids() {
            let f = h
                .flat(&table.c_basis_element(w))
                .map_err(|e| e.to_string())?;
            ensure(f == table.c_basis_element(g.inverse(w)), || {
                format!("flat(C_{})", g.word(w))
            })?;
        }
        Ok(format!("{} elements", g.order()))
    })();
    checks.push(Check::new("flat(C_w) = C_(w^-1)", flat));
    Ok(checks)
}

/// Elements of `W_n` given as words or windows, in the group of `table`.
pub fn parse_elements(table: &KlTable, items: &[&str]) -> Result<Vec<ElemId>> {
    items
        .iter()
        .map(|w| {
            table
                .group()
                .id_of(&SignedPerm::parse_any(w, table.rank())?)
        })
        .collect()
}
