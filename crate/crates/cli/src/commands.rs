use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use nstl::arith::{Fp, PRIME_SMALL};
use nstl::combinatorics::{dkt_edges, rsk_perm, Convention, Partition, Permutation, Tableau};
use nstl::hecke::{kl_table, right_cells, Basis, HeckeElement};
use nstl::linalg::Matrix;
use nstl::nonstandard::{
    certify, decompose_tensor, dimension_formula, dimension_oracle, predict_restriction, restriction_case, restriction_decompose, build_irreducible,
    NsIrredLabel,
};
use nstl::seminormal::{seminormal_basis, seminormal_table};
use nstl::specht::{SpechtModule, Transition};
use nstl::verify::{run_check, VerifyConfig, CRITERIA};

use crate::config::RunConfig;
use crate::{Command, Failure, Output, Side};

/// Oracle closure bound; the largest value within the default rank cap is 8631.
const ORACLE_BOUND: usize = 20_000;

fn runtime<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("malformed partition {s:?}; expected comma-separated parts like 3,2")))
}

fn two_row(s: &str, cfg: &RunConfig) -> Result<Partition, Failure> {
    let p = partition(s)?;
    if !p.is_two_row() {
        return Err(Failure::Usage(format!("{p} has more than two rows")));
    }
    cfg.check_rank(p.size())?;
    Ok(p)
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(runtime)
}

fn grid<R: nstl::arith::Ring + std::fmt::Display>(m: &Matrix<R>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn basis(side: Side) -> Basis {
    match side {
        Side::Lower => Basis::Lower,
        Side::Upper => Basis::Upper,
    }
}

fn convention(side: Side) -> Convention {
    match side {
        Side::Lower => Convention::Lower,
        Side::Upper => Convention::Upper,
    }
}

fn names(ts: &[Tableau]) -> Vec<String> {
    ts.iter().map(ToString::to_string).collect()
}

/// Rows of strings padded into columns.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(j, s)| format!("{s:<w$}", w = widths[j])).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn dispatch(cmd: &Command, cfg: &RunConfig, text: bool) -> Result<Output, Failure> {
    match cmd {
        Command::KlBasis { r, basis: side, w } => kl_basis(cfg, *r, *side, w.as_deref()),
        Command::Cells { r, basis: side } => cells(cfg, *r, *side),
        Command::Wgraph { shape } => wgraph(cfg, shape, text),
        Command::DeGraph { shape } => de_graph(cfg, shape),
        Command::Specht { shape, basis: side } => specht(cfg, shape, *side),
        Command::Transition { shape } => transition(cfg, shape),
        Command::Decompose { lhs, rhs } => decompose(cfg, lhs, rhs),
        Command::Restrict { label, r } => restrict(cfg, label, *r),
        Command::Seminormal { lhs, rhs, level, vectors } => seminormal(cfg, lhs, rhs, *level, *vectors, text),
        Command::DimCheck { r } => dim_check(cfg, *r),
        Command::VerifyAll { r } => verify_all(cfg, r.unwrap_or(cfg.r_bound), text),
    }
}

#[derive(Serialize)]
struct Term {
    x: String,
    coeff: String,
}

#[derive(Serialize)]
struct KlElement {
    w: String,
    terms: Vec<Term>,
}

#[derive(Serialize)]
struct KlBasisOut {
    r: usize,
    basis: &'static str,
    elements: Vec<KlElement>,
}

fn kl_basis(cfg: &RunConfig, r: usize, side: Side, w: Option<&str>) -> Result<Output, Failure> {
    cfg.check_rank(r)?;
    let t = kl_table(r).map_err(runtime)?;
    let ws: Vec<Permutation> = match w {
        Some(s) => {
            let p: Permutation = s.parse().map_err(|_| Failure::Usage(format!("malformed permutation {s:?}")))?;
            if p.size() != r {
                return Err(Failure::Usage(format!("{p} is not in S_{r}")));
            }
            vec![p]
        }
        None => t.group().elements().to_vec(),
    };
    let mut elements = Vec::new();
    for w in ws {
        let std = t.convert(&HeckeElement::basis_element(w.clone(), basis(side)), Basis::Standard).map_err(runtime)?;
        let terms = std.coords().iter().map(|(x, c)| Term { x: x.to_string(), coeff: c.to_string() }).collect();
        elements.push(KlElement { w: w.to_string(), terms });
    }
    let name = if side == Side::Lower { "lower" } else { "upper" };
    Ok(Output { body: json(&KlBasisOut { r, basis: name, elements })?, ok: true })
}

#[derive(Serialize)]
struct Cell {
    insertion: String,
    elements: Vec<String>,
}

#[derive(Serialize)]
struct CellsOut {
    r: usize,
    basis: &'static str,
    cells: Vec<Cell>,
    /// Every cell is one insertion class.
    matches_rsk: bool,
}

fn cells(cfg: &RunConfig, r: usize, side: Side) -> Result<Output, Failure> {
    cfg.check_rank(r)?;
    let t = kl_table(r).map_err(runtime)?;
    let g = t.group();
    let part = right_cells(&t, basis(side)).map_err(runtime)?;
    let mut matches_rsk = true;
    let mut out = Vec::new();
    for b in &part.blocks {
        let p = rsk_perm(g.element(b[0])).0;
        matches_rsk &= b.iter().all(|&w| rsk_perm(g.element(w)).0 == p);
        out.push(Cell { insertion: p.to_string(), elements: b.iter().map(|&w| g.element(w).to_string()).collect() });
    }
    let classes: usize = Partition::all_of_size(r).iter().map(|l| l.num_syt() as usize).sum();
    matches_rsk &= out.len() == classes;
    let name = if side == Side::Lower { "lower" } else { "upper" };
    Ok(Output { body: json(&CellsOut { r, basis: name, cells: out, matches_rsk })?, ok: matches_rsk })
}

#[derive(Serialize)]
struct Vertex {
    tableau: String,
    lower_descents: Vec<usize>,
    upper_descents: Vec<usize>,
}

#[derive(Serialize)]
struct MuEdge {
    a: String,
    b: String,
    mu: i64,
}

#[derive(Serialize)]
struct WgraphOut {
    shape: String,
    vertices: Vec<Vertex>,
    edges: Vec<MuEdge>,
    /// μ agrees between the lower and upper realizations.
    symmetric: bool,
}

fn wgraph(cfg: &RunConfig, shape: &str, text: bool) -> Result<Output, Failure> {
    let lambda = partition(shape)?;
    cfg.check_rank(lambda.size())?;
    let m = SpechtModule::new(&lambda).map_err(runtime)?;
    let ts = m.tableaux();
    let vertices: Vec<Vertex> = ts
        .iter()
        .map(|t| Vertex { tableau: t.to_string(), lower_descents: t.descent_set(Convention::Lower), upper_descents: t.descent_set(Convention::Upper) })
        .collect();
    let mut edges = Vec::new();
    let mut symmetric = true;
    for a in 0..m.dim() {
        for b in a + 1..m.dim() {
            let mu = m.mu(Convention::Lower, a, b);
            symmetric &= mu == m.mu(Convention::Lower, b, a) && mu == m.mu(Convention::Upper, a, b);
            if mu != 0 {
                edges.push(MuEdge { a: ts[a].to_string(), b: ts[b].to_string(), mu });
            }
        }
    }
    let body = if text {
        let set = |d: &[usize]| format!("{{{}}}", d.iter().map(|s| format!("s{s}")).collect::<Vec<_>>().join(","));
        let rows = vec![
            std::iter::once(String::new()).chain(vertices.iter().map(|v| v.tableau.clone())).collect(),
            std::iter::once("R(C'_Q):".to_string()).chain(vertices.iter().map(|v| set(&v.lower_descents))).collect(),
            std::iter::once("R(C_Q):".to_string()).chain(vertices.iter().map(|v| set(&v.upper_descents))).collect(),
        ];
        let mut s = aligned(&rows);
        for e in &edges {
            s.push_str(&format!("{} -- {}  mu = {}\n", e.a, e.b, e.mu));
        }
        s
    } else {
        json(&WgraphOut { shape: lambda.to_string(), vertices, edges, symmetric })?
    };
    Ok(Output { body, ok: symmetric })
}

#[derive(Serialize)]
struct DeEdgeOut {
    a: String,
    b: String,
    label: usize,
}

#[derive(Serialize)]
struct DeGraphOut {
    shape: String,
    vertices: Vec<String>,
    edges: Vec<DeEdgeOut>,
    distances: Vec<usize>,
}

fn de_graph(cfg: &RunConfig, shape: &str) -> Result<Output, Failure> {
    let lambda = partition(shape)?;
    cfg.check_rank(lambda.size())?;
    let g = dkt_edges(&lambda);
    let edges = g.edges.iter().map(|e| DeEdgeOut { a: g.vertices[e.a].to_string(), b: g.vertices[e.b].to_string(), label: e.label }).collect();
    let out = DeGraphOut { shape: lambda.to_string(), vertices: names(&g.vertices), edges, distances: g.distances_from_superstandard() };
    Ok(Output { body: json(&out)?, ok: true })
}

#[derive(Serialize)]
struct SpechtOut {
    shape: String,
    basis: &'static str,
    tableaux: Vec<String>,
    /// generators[s-1] acts on row vectors: v ↦ v·M.
    generators: Vec<Vec<Vec<String>>>,
    hecke_relations: bool,
}

fn specht(cfg: &RunConfig, shape: &str, side: Side) -> Result<Output, Failure> {
    let lambda = partition(shape)?;
    cfg.check_rank(lambda.size())?;
    let m = SpechtModule::new(&lambda).map_err(runtime)?;
    let conv = convention(side);
    let out = SpechtOut {
        shape: lambda.to_string(),
        basis: if side == Side::Lower { "lower" } else { "upper" },
        tableaux: names(m.tableaux()),
        generators: m.actions(conv).iter().map(grid).collect(),
        hecke_relations: m.satisfies_hecke_relations(conv),
    };
    let ok = out.hecke_relations;
    Ok(Output { body: json(&out)?, ok })
}

#[derive(Serialize)]
struct TransitionOut {
    shape: String,
    tableaux: Vec<String>,
    /// Column Q holds C'_Q in the upper basis.
    matrix: Vec<Vec<String>>,
    theorem_holds: bool,
}

fn transition(cfg: &RunConfig, shape: &str) -> Result<Output, Failure> {
    let lambda = partition(shape)?;
    cfg.check_rank(lambda.size())?;
    let m = SpechtModule::new(&lambda).map_err(runtime)?;
    let t = Transition::new(&m).map_err(runtime)?;
    let out = TransitionOut { shape: lambda.to_string(), tableaux: names(m.tableaux()), matrix: grid(&t.x), theorem_holds: t.satisfies_theorem() };
    let ok = out.theorem_holds;
    Ok(Output { body: json(&out)?, ok })
}

#[derive(Serialize)]
struct Summand {
    label: String,
    dim: usize,
    /// Commutant dimension at each specialization point.
    commutant: Vec<usize>,
}

#[derive(Serialize)]
struct DecomposeOut {
    lhs: String,
    rhs: String,
    dim: usize,
    points: Vec<String>,
    summands: Vec<Summand>,
}

fn decompose(cfg: &RunConfig, lhs: &str, rhs: &str) -> Result<Output, Failure> {
    let (a, b) = (two_row(lhs, cfg)?, two_row(rhs, cfg)?);
    if a.size() != b.size() {
        return Err(Failure::Usage(format!("{a} and {b} have different sizes")));
    }
    let parts = decompose_tensor(&a, &b).map_err(runtime)?;
    let mut ok = true;
    let mut summands = Vec::new();
    for p in &parts {
        let commutant = cfg.points.iter().map(|u0| certify(p, u0)).collect::<Result<Vec<_>, _>>().map_err(runtime)?;
        ok &= commutant.iter().all(|&c| c == 1) && p.is_closed() && p.dim() as u128 == p.label.dim();
        summands.push(Summand { label: p.label.to_string(), dim: p.dim(), commutant });
    }
    let dim = (a.num_syt() * b.num_syt()) as usize;
    ok &= summands.iter().map(|s| s.dim).sum::<usize>() == dim;
    let out = DecomposeOut { lhs: a.to_string(), rhs: b.to_string(), dim, points: cfg.points.iter().map(ToString::to_string).collect(), summands };
    Ok(Output { body: json(&out)?, ok })
}

#[derive(Serialize)]
struct RestrictOut {
    label: String,
    r: usize,
    case: &'static str,
    computed: BTreeMap<String, usize>,
    predicted: BTreeMap<String, usize>,
    agree: bool,
}

fn restrict(cfg: &RunConfig, label: &str, r: Option<usize>) -> Result<Output, Failure> {
    let l: NsIrredLabel = label.parse().map_err(|e: nstl::nonstandard::NsError| Failure::Usage(e.to_string()))?;
    let r = match (l.rank(), r) {
        (Some(k), Some(given)) if k != given => return Err(Failure::Usage(format!("{l} has rank {k}, not {given}"))),
        (Some(k), _) => k,
        (None, Some(given)) => given,
        (None, None) => return Err(Failure::Usage("eps+ needs --r".into())),
    };
    cfg.check_rank(r)?;
    if r < 3 {
        return Err(Failure::Usage("restriction needs r >= 3".into()));
    }
    l.validate(r).map_err(|e| Failure::Usage(e.to_string()))?;
    let m = build_irreducible(&l, r).map_err(runtime)?;
    let computed = restriction_decompose(&m, cfg.u0()).map_err(runtime)?;
    let predicted = predict_restriction(&l);
    let agree = computed == predicted;
    let names = |m: BTreeMap<NsIrredLabel, usize>| m.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    let out = RestrictOut { label: l.to_string(), r, case: restriction_case(&l), computed: names(computed), predicted: names(predicted), agree };
    Ok(Output { body: json(&out)?, ok: agree })
}

#[derive(Serialize)]
struct LeafOut {
    chain: Vec<String>,
    vector: Vec<String>,
}

#[derive(Serialize)]
struct SeminormalOut {
    lhs: String,
    rhs: String,
    level: usize,
    rows: Vec<String>,
    cols: Vec<String>,
    grid: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<LeafOut>>,
}

fn seminormal(cfg: &RunConfig, lhs: &str, rhs: &str, level: Option<usize>, vectors: bool, text: bool) -> Result<Output, Failure> {
    let (a, b) = (two_row(lhs, cfg)?, two_row(rhs, cfg)?);
    let r = a.size();
    if b.size() != r {
        return Err(Failure::Usage(format!("{a} and {b} have different sizes")));
    }
    let level = level.unwrap_or(r);
    if !(2..=r).contains(&level) {
        return Err(Failure::Usage(format!("level must lie in 2..={r}")));
    }
    let table = seminormal_table(&a, &b, level).map_err(runtime)?;
    let rows = names(&nstl::combinatorics::syt_enumerate(&a));
    let cols = names(&nstl::combinatorics::syt_enumerate(&b));
    let grid: Vec<Vec<String>> = table.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    if text {
        let mut lines = vec![std::iter::once(String::new()).chain(cols.iter().cloned()).collect::<Vec<_>>()];
        for (t, row) in rows.iter().zip(&grid) {
            lines.push(std::iter::once(t.clone()).chain(row.iter().cloned()).collect());
        }
        return Ok(Output { body: aligned(&lines), ok: true });
    }
    let (u0, leaves) = if vectors {
        let sb = seminormal_basis(&a, &b, cfg.u0()).map_err(runtime)?;
        let leaves = sb
            .chains
            .iter()
            .zip(&sb.vectors)
            .map(|(c, v)| LeafOut { chain: c.0.iter().map(ToString::to_string).collect(), vector: v.iter().map(BigRational::to_string).collect() })
            .collect();
        (Some(cfg.u0().to_string()), Some(leaves))
    } else {
        (None, None)
    };
    let out = SeminormalOut { lhs: a.to_string(), rhs: b.to_string(), level, rows, cols, grid, u0, vectors: leaves };
    Ok(Output { body: json(&out)?, ok: true })
}

#[derive(Serialize)]
struct DimCheckOut {
    formula: u128,
    oracle: usize,
    agree: bool,
}

fn dim_check(cfg: &RunConfig, r: usize) -> Result<Output, Failure> {
    cfg.check_rank(r)?;
    let formula = dimension_formula(r).value;
    // Over Q through r = 4; beyond that F_p keeps the closure affordable.
    let oracle = if r <= 4 {
        dimension_oracle::<BigRational>(r, cfg.u0(), ORACLE_BOUND)
    } else {
        dimension_oracle::<Fp<PRIME_SMALL>>(r, cfg.u0(), ORACLE_BOUND)
    }
    .map_err(runtime)?;
    let agree = oracle as u128 == formula;
    Ok(Output { body: serde_json::to_string(&DimCheckOut { formula, oracle, agree }).map_err(runtime)?, ok: agree })
}

#[derive(Serialize)]
struct VerifyOut {
    r: usize,
    seed: u64,
    points: Vec<String>,
    checks: Vec<nstl::verify::CheckResult>,
    passed: bool,
}

fn verify_all(cfg: &RunConfig, r: usize, text: bool) -> Result<Output, Failure> {
    cfg.check_rank(r)?;
    let vc = VerifyConfig { max_r: r, points: cfg.points.clone() };
    let mut checks = Vec::new();
    for (id, name) in CRITERIA {
        if cfg.verbosity > 0 {
            eprintln!("[{id}] {name} ...");
        }
        let res = run_check(id, &vc);
        if cfg.verbosity > 0 {
            eprintln!("[{id}] {} in {:.2}s", if res.passed { "pass" } else { "FAIL" }, res.elapsed.as_secs_f64());
        }
        checks.push(res);
    }
    let passed = checks.iter().all(|c| c.passed);
    let body = if text {
        let mut s = String::new();
        for c in &checks {
            s.push_str(&format!("{} {:>2} {:<20} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.id, c.name, c.detail));
        }
        s
    } else {
        json(&VerifyOut { r, seed: cfg.seed, points: cfg.points.iter().map(ToString::to_string).collect(), checks, passed })?
    };
    Ok(Output { body, ok: passed })
}
