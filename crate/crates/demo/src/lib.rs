//! Browser bindings for the `crcs` library. Every export takes and returns
//! strings; results are JSON objects with either the payload or an `error`
//! field.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use crcs::format::{parse_crcs, write_crcs};
use crcs::gen::{generate, generate_min_k, GraphKind};
use crcs::oracle::SearchBudget;
use crcs::path::{contractions, invariant, is_swappable, ColoringString};
use crcs::solve::{solve, Solver};

/// Oracle budget in the browser; the page should stay responsive.
const DEMO_BUDGET: usize = 200_000;

#[derive(Serialize)]
#[serde(untagged)]
enum Reply<T> {
    Ok(T),
    Err { error: String },
}

fn reply<T: Serialize>(r: Result<T, String>) -> String {
    let r = match r {
        Ok(v) => Reply::Ok(v),
        Err(error) => Reply::Err { error },
    };
    serde_json::to_string(&r).expect("replies serialize")
}

#[derive(Serialize)]
pub struct PathReport {
    pub string: String,
    pub invariant: String,
    /// 0-based positions `i` where characters `i` and `i + 1` may swap.
    pub swappable: Vec<usize>,
    /// One leftmost contraction sequence, ending at the rigid form.
    pub trace: Vec<String>,
}

pub fn explore_path(text: &str) -> Result<PathReport, String> {
    let s: ColoringString = text.trim().parse().map_err(|e| format!("{e}"))?;
    let swappable = (0..s.len().saturating_sub(1))
        .filter(|&i| is_swappable(&s, i).unwrap_or(false))
        .collect();
    let mut trace = vec![s.to_string()];
    let mut cur = s.clone();
    while let Some(next) = contractions(&cur).into_iter().next() {
        trace.push(next.to_string());
        cur = next;
    }
    Ok(PathReport {
        string: s.to_string(),
        invariant: invariant(&s).to_string(),
        swappable,
        trace,
    })
}

#[derive(Serialize)]
pub struct SolveReport {
    pub answer: Option<bool>,
    pub solver: String,
    pub witness: Option<Vec<[usize; 2]>>,
    pub states_explored: Option<usize>,
}

pub fn solve_text(text: &str, solver: &str) -> Result<SolveReport, String> {
    let inst = parse_crcs(text).map_err(|e| e.to_string())?;
    let solver: Solver = solver.parse().map_err(|e: crcs::Error| e.to_string())?;
    let r = solve(&inst, solver, &SearchBudget::states(DEMO_BUDGET)).map_err(|e| e.to_string())?;
    Ok(SolveReport {
        answer: r.answer,
        solver: r.solver.to_string(),
        witness: r.witness.map(|w| w.moves.iter().map(|m| [m.u, m.v]).collect()),
        states_explored: r.states_explored,
    })
}

#[derive(Serialize)]
pub struct Generated {
    pub text: String,
}

pub fn generate_text(kind: &str, n: usize, k: u32, seed: u64) -> Result<Generated, String> {
    let kind = match kind {
        "path" => GraphKind::Path,
        "cograph" => GraphKind::Cograph,
        "split" => GraphKind::Split,
        "random" => GraphKind::Random,
        other => return Err(format!("unknown graph kind {other:?}")),
    };
    if n > 40 {
        return Err("at most 40 vertices in the demo".into());
    }
    let inst = match k {
        0 => generate_min_k(kind, n, 3, true, seed),
        k => generate(kind, n, k, true, seed),
    }
    .map_err(|e| e.to_string())?;
    Ok(Generated { text: write_crcs(&inst) })
}

/// Invariant, swappable positions and a contraction trace of a string over
/// `1`, `2`, `3`.
#[wasm_bindgen(js_name = explorePath)]
pub fn explore_path_json(text: &str) -> String {
    reply(explore_path(text))
}

/// Solves an instance in the `crcs 1` text format.
#[wasm_bindgen(js_name = solveInstance)]
pub fn solve_json(text: &str, solver: &str) -> String {
    reply(solve_text(text, solver))
}

/// Random instance with matching color counts, as `crcs 1` text. `k = 0`
/// picks the smallest feasible `k >= 3`.
#[wasm_bindgen(js_name = generateInstance)]
pub fn generate_json(kind: &str, n: usize, k: u32, seed: u32) -> String {
    reply(generate_text(kind, n, k, seed.into()))
}
