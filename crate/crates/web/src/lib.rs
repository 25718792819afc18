//! Browser bindings. Each export takes plain strings and returns JSON, so
//! the page needs no glue beyond `JSON.parse`.

use num_rational::BigRational;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use nstl::combinatorics::{dkt_edges, syt_enumerate, Partition};
use nstl::nonstandard::{dimension_formula, dimension_oracle};
use nstl::seminormal::seminormal_table;

/// Largest rank the page will compute; the oracle above 4 takes tens of seconds.
pub const MAX_R: usize = 6;
pub const MAX_ORACLE_R: usize = 4;

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn respond<T: Serialize>(res: Result<T, String>) -> String {
    match res {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&Failure { error }),
    }
    .expect("serializable")
}

fn shape(s: &str, two_row: bool) -> Result<Partition, String> {
    let p: Partition = s.parse().map_err(|_| format!("cannot read {s:?} as a partition like 3,2"))?;
    if p.size() == 0 || p.size() > MAX_R {
        return Err(format!("size must be between 1 and {MAX_R}"));
    }
    if two_row && !p.is_two_row() {
        return Err(format!("{p} has more than two rows"));
    }
    Ok(p)
}

#[derive(Serialize)]
struct Edge {
    a: usize,
    b: usize,
    label: usize,
}

#[derive(Serialize)]
struct Graph {
    shape: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    distances: Vec<usize>,
}

pub fn de_graph_json(s: &str) -> String {
    respond(shape(s, false).map(|p| {
        let g = dkt_edges(&p);
        Graph {
            shape: p.to_string(),
            vertices: g.vertices.iter().map(ToString::to_string).collect(),
            edges: g.edges.iter().map(|e| Edge { a: e.a, b: e.b, label: e.label }).collect(),
            distances: g.distances_from_superstandard(),
        }
    }))
}

#[derive(Serialize)]
struct Table {
    rows: Vec<String>,
    cols: Vec<String>,
    level: usize,
    grid: Vec<Vec<String>>,
}

pub fn seminormal_json(lhs: &str, rhs: &str, level: usize) -> String {
    let run = || -> Result<Table, String> {
        let (a, b) = (shape(lhs, true)?, shape(rhs, true)?);
        if a.size() != b.size() {
            return Err("shapes must have the same size".into());
        }
        let level = if level == 0 { a.size() } else { level };
        if !(2..=a.size()).contains(&level) {
            return Err(format!("level must lie in 2..={}", a.size()));
        }
        let grid = seminormal_table(&a, &b, level).map_err(|e| e.to_string())?;
        Ok(Table {
            rows: syt_enumerate(&a).iter().map(ToString::to_string).collect(),
            cols: syt_enumerate(&b).iter().map(ToString::to_string).collect(),
            level,
            grid: grid.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        })
    };
    respond(run())
}

#[derive(Serialize)]
struct DimCheck {
    r: usize,
    catalan: u128,
    formula: u128,
    sum_of_squares: u128,
    oracle: Option<usize>,
}

pub fn dim_check_json(r: usize) -> String {
    let run = || -> Result<DimCheck, String> {
        if r == 0 || r > 12 {
            return Err("r must be between 1 and 12".into());
        }
        let d = dimension_formula(r);
        let oracle = if (2..=MAX_ORACLE_R).contains(&r) {
            let u0 = BigRational::new(7.into(), 3.into());
            Some(dimension_oracle::<BigRational>(r, &u0, 10_000).map_err(|e| e.to_string())?)
        } else {
            None
        };
        Ok(DimCheck { r, catalan: d.catalan, formula: d.value, sum_of_squares: d.sum_of_squares, oracle })
    };
    respond(run())
}

#[wasm_bindgen]
pub fn de_graph(shape: &str) -> String {
    de_graph_json(shape)
}

#[wasm_bindgen]
pub fn seminormal(lhs: &str, rhs: &str, level: usize) -> String {
    seminormal_json(lhs, rhs, level)
}

#[wasm_bindgen]
pub fn dim_check(r: usize) -> String {
    dim_check_json(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn de_graph_of_three_two() {
        let v = parse(de_graph_json("3,2"));
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        assert_eq!(v["distances"], serde_json::json!([0, 1, 2, 4, 3]));
        assert!(parse(de_graph_json("x")).get("error").is_some());
    }

    #[test]
    fn seminormal_default_level_is_the_rank() {
        let v = parse(seminormal_json("3,2", "3,2", 0));
        assert_eq!(v["level"], 5);
        assert_eq!(v["grid"][4][4], "eps+");
        assert!(parse(seminormal_json("3,2", "2,2", 0)).get("error").is_some());
        assert!(parse(seminormal_json("2,1,1", "2,1,1", 0)).get("error").is_some());
    }

    #[test]
    fn dimension_values() {
        let v = parse(dim_check_json(4));
        assert_eq!((v["formula"].as_u64(), v["oracle"].as_u64()), (Some(89), Some(89)));
        assert!(parse(dim_check_json(6))["oracle"].is_null());
    }
}
