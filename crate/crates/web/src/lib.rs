//! Browser bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings and returns a JSON string, so the page needs no
//! generated TypeScript types. The `*_json` functions below are the same operations
//! without the wasm wrapper and are what the native tests exercise.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use schubaut::autreport::criterion;
use schubaut::bmod::{line_bundle_cohomology, tangent_cohomology};
use schubaut::charring::SignedCharacter;
use schubaut::report::{parse_word, single_report, ReportOptions};
use schubaut::rootsys::format_lattice;
use schubaut::schubert::is_smooth;
use schubaut::weyl::{bruhat_leq, interval_below};
use schubaut::{RootSystem, TypeLetter, WeylElement};

/// Interval sizes above this are refused; the Hasse diagram stops being readable.
pub const INTERVAL_LIMIT: usize = 400;

fn system(letter: &str, rank: usize) -> Result<RootSystem, String> {
    let mut chars = letter.trim().chars();
    let letter = match (chars.next(), chars.next()) {
        (Some(c), None) => TypeLetter::from_char(c),
        _ => None,
    }
    .ok_or_else(|| format!("unknown type {letter:?}"))?;
    RootSystem::build(letter, rank).map_err(|e| e.to_string())
}

fn element(rs: &RootSystem, word: &str) -> Result<WeylElement, String> {
    parse_word(rs, word).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Full query report for `w`, same schema as the command-line `--json` output.
pub fn report_json(letter: &str, rank: usize, word: &str) -> Result<String, String> {
    let rs = system(letter, rank)?;
    let w = element(&rs, word)?;
    let report = single_report(&rs, &w, &ReportOptions::default()).map_err(|e| e.to_string())?;
    to_json(&report)
}

#[derive(Debug, Serialize)]
pub struct PlotPoint {
    pub x: f64,
    pub y: f64,
    pub coords: Vec<i32>,
    pub label: String,
    pub mult: i64,
}

#[derive(Debug, Serialize)]
pub struct WeightDiagram {
    pub bundle: String,
    pub roots: Vec<PlotPoint>,
    pub h0: Vec<PlotPoint>,
    pub h1: Vec<PlotPoint>,
    pub exact: bool,
}

/// Planar coordinates for the simple roots: a Cholesky factor of the Gram matrix, so
/// Euclidean lengths and angles in the picture are the true ones.
fn simple_root_vectors(rs: &RootSystem) -> [[f64; 2]; 2] {
    let g = rs.gram();
    let a = (g[0][0] as f64).sqrt();
    let b = g[0][1] as f64 / a;
    let c = (g[1][1] as f64 - b * b).sqrt();
    [[a, 0.0], [b, c]]
}

fn plot(basis: &[[f64; 2]; 2], mu: &[i32], mult: i64) -> PlotPoint {
    PlotPoint {
        x: mu[0] as f64 * basis[0][0] + mu[1] as f64 * basis[1][0],
        y: mu[0] as f64 * basis[0][1] + mu[1] as f64 * basis[1][1],
        coords: mu.to_vec(),
        label: format_lattice(mu),
        mult,
    }
}

fn plot_character(basis: &[[f64; 2]; 2], c: &SignedCharacter) -> Vec<PlotPoint> {
    c.iter().map(|(mu, &m)| plot(basis, mu, m)).collect()
}

/// H^0 and H^1 characters of a bundle on X(w) in a rank-2 system, with the roots as
/// a backdrop. `bundle` is `g/b`, `b` or `line:c1,c2`.
pub fn weight_diagram_json(letter: &str, rank: usize, word: &str, bundle: &str) -> Result<String, String> {
    if rank != 2 {
        return Err("weight diagrams are drawn for rank 2 only".into());
    }
    let rs = system(letter, rank)?;
    let w = element(&rs, word)?;
    let basis = simple_root_vectors(&rs);
    let roots = rs.roots().iter().map(|r| plot(&basis, r.coeffs(), 1)).collect();
    let bundle = bundle.trim();
    let (h0, h1, exact) = match bundle {
        "g/b" => {
            let t = tangent_cohomology(&rs, &w).map_err(|e| e.to_string())?;
            (t.h0, t.h1, true)
        }
        "b" => {
            let t = tangent_cohomology(&rs, &w).map_err(|e| e.to_string())?;
            (t.borel.h0.character(&rs), t.borel.h1, true)
        }
        other => {
            let coords = other
                .strip_prefix("line:")
                .ok_or_else(|| format!("unknown bundle {other:?}"))?
                .split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|e| format!("{t:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let lb = line_bundle_cohomology(&rs, &w, &coords).map_err(|e| e.to_string())?;
            (lb.h0, lb.h1_lower, lb.exact)
        }
    };
    to_json(&WeightDiagram {
        bundle: bundle.to_string(),
        roots,
        h0: plot_character(&basis, &h0),
        h1: plot_character(&basis, &h1),
        exact,
    })
}

#[derive(Debug, Serialize)]
pub struct IntervalNode {
    pub word: Vec<usize>,
    pub length: usize,
    pub smooth: bool,
    pub criterion: bool,
}

#[derive(Debug, Serialize)]
pub struct Interval {
    pub nodes: Vec<IntervalNode>,
    /// Covering relations as index pairs `(lower, upper)` into `nodes`.
    pub edges: Vec<(usize, usize)>,
}

/// Hasse diagram of the Bruhat interval `[e, w]`.
pub fn bruhat_interval_json(letter: &str, rank: usize, word: &str) -> Result<String, String> {
    let rs = system(letter, rank)?;
    let w = element(&rs, word)?;
    let mut below = interval_below(&rs, &w, INTERVAL_LIMIT).map_err(|e| e.to_string())?;
    below.sort();
    let mut nodes = Vec::with_capacity(below.len());
    for v in &below {
        nodes.push(IntervalNode {
            word: v.labels(),
            length: v.length(),
            smooth: is_smooth(&rs, v).map_err(|e| e.to_string())?,
            criterion: criterion(&rs, v),
        });
    }
    let mut edges = Vec::new();
    for (i, u) in below.iter().enumerate() {
        for (j, v) in below.iter().enumerate() {
            if v.length() == u.length() + 1 && bruhat_leq(&rs, u, v).map_err(|e| e.to_string())? {
                edges.push((i, j));
            }
        }
    }
    to_json(&Interval { nodes, edges })
}

#[wasm_bindgen]
pub fn report(letter: &str, rank: usize, word: &str) -> Result<String, JsValue> {
    report_json(letter, rank, word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn weight_diagram(letter: &str, rank: usize, word: &str, bundle: &str) -> Result<String, JsValue> {
    weight_diagram_json(letter, rank, word, bundle).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn bruhat_interval(letter: &str, rank: usize, word: &str) -> Result<String, JsValue> {
    bruhat_interval_json(letter, rank, word).map_err(|e| JsValue::from_str(&e))
}
