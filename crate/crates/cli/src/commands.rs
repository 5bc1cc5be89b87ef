use std::fmt;
use std::sync::Arc;

use bncells::cells::{cell_module, cell_partition, cell_type};
use bncells::rs::rs;
use bncells::specht::specht_module;
use bncells::verify::{self, all_passed, Check, Suite};
use bncells::{
    Bipartition, CellSide, ElemId, Error, Gen, HeckeAlgebra, KlTable, Matrix, MonomialOrder,
    SignedPerm, WeightSpec, WeylGroup, MAX_RANK,
};
use serde::Serialize;

use crate::{Command, Common, Emit, Format};

const DEFAULT_RANK_BOUND: usize = 5;
const VERIFY_RANK_BOUND: usize = 3;
const DEEP_RANK_BOUND: usize = 4;

pub struct Output {
    pub text: String,
    pub passed: bool,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Rank(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Rank(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Rank(m) | Failure::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RankOutOfRange { .. } => Failure::Rank(e.to_string()),
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn check_rank(n: usize, bound: usize, hint: &str) -> Result<()> {
    if !(2..=MAX_RANK).contains(&n) {
        return Err(Failure::Rank(format!(
            "rank {n} outside supported range 2..={MAX_RANK}"
        )));
    }
    if n > bound {
        return Err(Failure::Rank(format!(
            "rank {n} exceeds the bound {bound}; pass {hint} to go further"
        )));
    }
    Ok(())
}

fn build_table(n: usize, order: MonomialOrder, common: &Common) -> Result<KlTable> {
    let alg = Arc::new(HeckeAlgebra::new(
        Arc::new(WeylGroup::new(n)?),
        WeightSpec::default(),
    ));
    Ok(match &common.cache {
        Some(dir) => KlTable::load_or_build(alg, order, dir)?,
        None => KlTable::new(alg, order)?,
    })
}

fn table(common: &Common) -> Result<KlTable> {
    let bound = if common.force {
        MAX_RANK
    } else {
        DEFAULT_RANK_BOUND
    };
    check_rank(common.n, bound, "--force")?;
    build_table(common.n, common.order, common)
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Text => text(),
    }
}

/// Splits on commas outside brackets, so windows may appear in the list.
fn split_list(s: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().expect("nonempty").push(ch);
    }
    out.into_iter()
        .map(|x| x.trim().to_string())
        .filter(|x| !x.is_empty())
        .collect()
}

fn element(table: &KlTable, text: &str) -> Result<ElemId> {
    Ok(table
        .group()
        .id_of(&SignedPerm::parse_any(text, table.rank())?)?)
}

#[derive(Serialize)]
struct CellsJson {
    n: usize,
    order: String,
    side: String,
    cells: Vec<CellJson>,
}

#[derive(Serialize)]
struct CellJson {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    shape: Option<String>,
    elements: Vec<String>,
}

#[derive(Serialize)]
struct GenMatrix {
    generator: String,
    matrix: Vec<Vec<String>>,
}

fn gen_matrices(gens: &[Matrix]) -> Vec<GenMatrix> {
    gens.iter()
        .enumerate()
        .map(|(k, m)| GenMatrix {
            generator: Gen::from_index(k).to_string(),
            matrix: m.to_strings(),
        })
        .collect()
}

fn matrices_text(gens: &[Matrix]) -> String {
    gens.iter()
        .enumerate()
        .map(|(k, m)| format!("T_{} =\n{m}", Gen::from_index(k)))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Serialize)]
struct CellModJson {
    n: usize,
    order: String,
    elements: Vec<String>,
    matrices: Vec<GenMatrix>,
}

#[derive(Serialize)]
struct SpechtJson {
    n: usize,
    lambda: String,
    tableaux: Vec<String>,
    cell: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrices: Option<Vec<GenMatrix>>,
}

#[derive(Serialize)]
struct VerifyJson {
    n: usize,
    suite: String,
    passed: bool,
    checks: Vec<CheckJson>,
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct RsJson {
    n: usize,
    word: String,
    window: String,
    shape: String,
    p: String,
    q: String,
}

pub fn run(command: Command) -> Result<Output> {
    let text = match command {
        Command::Cells { common, side } => cells(&common, side)?,
        Command::Cellmod {
            common,
            cell_of,
            basis,
        } => cellmod(&common, &cell_of, basis.as_deref())?,
        Command::Specht {
            common,
            lambda,
            emit,
        } => specht(&common, &lambda, emit)?,
        Command::Verify {
            common,
            suite,
            deep,
        } => return verify(&common, &suite, deep),
        Command::Rs { n, word, format } => rs_command(n, &word, format)?,
    };
    Ok(Output { text, passed: true })
}

fn cells(common: &Common, side: CellSide) -> Result<String> {
    let table = table(common)?;
    let g = table.group();
    let partition = cell_partition(&table, side);
    let asymptotic = table.order().is_asymptotic();
    let cells: Vec<CellJson> = partition
        .cells
        .iter()
        .map(|c| CellJson {
            shape: asymptotic.then(|| cell_type(&table, c).to_string()),
            elements: c.iter().map(|&x| g.word(x)).collect(),
        })
        .collect();
    let json = CellsJson {
        n: common.n,
        order: table.order().to_string(),
        side: side.to_string(),
        cells,
    };
    Ok(render(common.format, &json, || {
        let mut s = format!(
            "{} {} cells of W_{} ({})\n",
            json.cells.len(),
            json.side,
            json.n,
            json.order
        );
        for c in &json.cells {
            let head = c
                .shape
                .as_deref()
                .map(|t| format!("{t}: "))
                .unwrap_or_default();
            s += &format!("{head}{{{}}}\n", c.elements.join(", "));
        }
        s
    }))
}

fn cellmod(common: &Common, cell_of: &str, basis: Option<&str>) -> Result<String> {
    let table = table(common)?;
    let g = table.group();
    let w = element(&table, cell_of)?;
    let basis: Option<Vec<ElemId>> = basis
        .map(|b| split_list(b).iter().map(|x| element(&table, x)).collect())
        .transpose()?;
    let partition = cell_partition(&table, CellSide::Left);
    let module = cell_module(&table, &partition, w, basis.as_deref())?;
    let json = CellModJson {
        n: common.n,
        order: table.order().to_string(),
        elements: module.elements.iter().map(|&x| g.word(x)).collect(),
        matrices: gen_matrices(&module.gens),
    };
    Ok(render(common.format, &json, || {
        format!(
            "basis: {}\n{}",
            json.elements.join(", "),
            matrices_text(&module.gens)
        )
    }))
}

fn specht(common: &Common, lambda: &str, emit: Emit) -> Result<String> {
    let lambda: Bipartition = lambda.parse()?;
    if lambda.size() != common.n {
        return Err(Failure::Usage(format!(
            "{lambda} is not a bipartition of {}",
            common.n
        )));
    }
    if !common.order.is_asymptotic() {
        return Err(Error::NotAsymptotic(common.order.to_string()).into());
    }
    let table = table(common)?;
    let g = table.group();
    let partition = cell_partition(&table, CellSide::Left);
    let m = specht_module(&table, &partition, &lambda)?;
    let json = SpechtJson {
        n: common.n,
        lambda: lambda.to_string(),
        tableaux: m.g.tableaux.iter().map(ToString::to_string).collect(),
        cell: m.g.cell.iter().map(|&x| g.word(x)).collect(),
        g: (emit == Emit::G).then(|| m.g.entries.to_strings()),
        matrices: (emit == Emit::Matrices).then(|| gen_matrices(&m.gens)),
    };
    Ok(render(common.format, &json, || {
        let mut s = format!("lambda = {lambda}\n");
        for (t, c) in json.tableaux.iter().zip(&json.cell) {
            s += &format!("{t} -> {c}\n");
        }
        match emit {
            Emit::G => s + &format!("G =\n{}", m.g.entries),
            Emit::Matrices => s + &matrices_text(&m.gens),
        }
    }))
}

fn verify(common: &Common, suite: &str, deep: bool) -> Result<Output> {
    let suite: Suite = suite.parse()?;
    if !common.order.is_asymptotic() {
        return Err(Failure::Usage(
            "verification suites run under the asymptotic order".into(),
        ));
    }
    let n = common.n;
    check_rank(
        n,
        if deep {
            DEEP_RANK_BOUND
        } else {
            VERIFY_RANK_BOUND
        },
        "--deep",
    )?;
    if suite == Suite::Counterexample && n != 3 {
        return Err(Failure::Usage(
            "the counterexample suite runs with --n 3".into(),
        ));
    }
    let asym = build_table(n, MonomialOrder::Asymptotic, common)?;
    let weighted = || build_table(n, "weighted:1,1".parse().expect("valid order"), common);
    let mut checks: Vec<Check> = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Kl) {
        checks.extend(verify::kl(&asym));
        checks.extend(verify::kl(&weighted()?));
    }
    if want(Suite::Identities) {
        checks.extend(verify::identities(&asym)?);
    }
    if want(Suite::CellsRs) {
        checks.extend(verify::cells_rs(&asym)?);
    }
    if want(Suite::Thm3) {
        checks.extend(verify::thm3(&asym)?);
    }
    if want(Suite::Counterexample) && n == 3 {
        checks.extend(verify::counterexample(&asym, &weighted()?)?);
    }
    let passed = all_passed(&checks);
    let json = VerifyJson {
        n,
        suite: suite.to_string(),
        passed,
        checks: checks
            .iter()
            .map(|c| CheckJson {
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    };
    let text = render(common.format, &json, || {
        let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
        let failed = checks.iter().filter(|c| !c.passed).count();
        s += &format!(
            "{}: {} checks, {failed} failed\n",
            if passed { "PASS" } else { "FAIL" },
            checks.len()
        );
        s
    });
    Ok(Output { text, passed })
}

fn rs_command(n: usize, word: &str, format: Format) -> Result<String> {
    check_rank(n, MAX_RANK, "")?;
    let w = SignedPerm::parse_any(word, n)?;
    let (p, q) = rs(&w);
    let json = RsJson {
        n,
        word: w.word_string(),
        window: w.to_string(),
        shape: p.shape().to_string(),
        p: p.to_string(),
        q: q.to_string(),
    };
    Ok(render(format, &json, || {
        format!(
            "w = {} = {}\nshape: {}\nP: {}\nQ: {}\n",
            json.word, json.window, json.shape, json.p, json.q
        )
    }))
}
