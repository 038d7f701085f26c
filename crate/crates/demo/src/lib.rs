//! Browser front end: KRS deletion steps, the inverse of an exponent grid,
//! and the facets of `Δ_t`. Every export takes plain values and returns a
//! JSON string; errors come back as strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use krs_core::ideals::facets::{expected_facet_size, facets, is_pure, DEFAULT_BUDGET};
use krs_core::{krs, Bitableau, GridSize, Monomial};

/// Largest grid side accepted by the facet export.
pub const MAX_FACET_SIDE: usize = 5;

fn bitableau_json(b: &Bitableau) -> Value {
    json!({
        "text": b.to_string(),
        "left": b.left_tableau(),
        "right": b.right_tableau(),
        "shape": b.shape().parts(),
    })
}

fn parse_bitableau(input: &str) -> Result<Bitableau, String> {
    let input = input.trim();
    if input.starts_with('{') {
        serde_json::from_str(input).map_err(|e| e.to_string())
    } else {
        input.parse().map_err(|e: krs_core::Error| e.to_string())
    }
}

/// Deletion steps of `krs(Σ)` for a standard bitableau given as text
/// (`[1,3|1,2]·[2|2]`) or JSON.
#[wasm_bindgen]
pub fn krs_steps(input: &str) -> Result<String, String> {
    let sigma = parse_bitableau(input)?;
    let steps = krs::deletion_trace(&sigma).map_err(|e| e.to_string())?;
    let array = krs::forward(&sigma).map_err(|e| e.to_string())?;
    let out = json!({
        "sigma": bitableau_json(&sigma),
        "steps": steps.iter().map(|s| json!({
            "ell": s.ell,
            "r": s.r,
            "pivot_row": s.pivot_row,
            "push_outs": s.push_outs,
            "rest": bitableau_json(&s.rest),
        })).collect::<Vec<_>>(),
        "u": array.upper(),
        "v": array.lower(),
        "monomial": array.to_monomial().to_string(),
    });
    Ok(out.to_string())
}

/// `krs^{-1}` of the monomial whose exponents are given as a JSON matrix,
/// with the shape invariants of the result.
#[wasm_bindgen]
pub fn krs_inverse_grid(exponents: &str) -> Result<String, String> {
    let rows: Vec<Vec<u32>> = serde_json::from_str(exponents).map_err(|e| e.to_string())?;
    let cells = rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, &e)| e > 0).map(move |(j, &e)| (i + 1, j + 1, e)));
    let m = Monomial::from_cells(cells).map_err(|e| e.to_string())?;
    let sigma = krs::inverse_monomial(&m).map_err(|e| e.to_string())?;
    let shape = sigma.shape();
    let top = shape.part(1);
    let out = json!({
        "monomial": m.to_string(),
        "degree": m.degree(),
        "sigma": bitableau_json(&sigma),
        "gamma": (1..=top).map(|t| shape.gamma(t)).collect::<Vec<_>>(),
        "alpha": (1..=shape.len()).map(|k| shape.alpha(k)).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

/// Facets of the complex `Δ_t` on an `m×n` grid.
#[wasm_bindgen]
pub fn delta_t_facets(m: usize, n: usize, t: usize) -> Result<String, String> {
    if m > MAX_FACET_SIDE || n > MAX_FACET_SIDE {
        return Err(format!("grid sides are limited to {MAX_FACET_SIDE}"));
    }
    let grid = GridSize::new(m, n).map_err(|e| e.to_string())?;
    let fs = facets(grid, t, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let out = json!({
        "grid": [m, n],
        "t": t,
        "count": fs.len(),
        "expected_size": expected_facet_size(grid, t),
        "pure": is_pure(&fs),
        "facets": fs.iter().map(|f| &f.cells).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}
