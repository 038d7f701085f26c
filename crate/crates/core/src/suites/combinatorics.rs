//! Suites on the bijection and the invariants.

use serde_json::json;

use crate::error::Result;
use crate::invariants::{
    decomposition_shapes, greene_alpha, greene_alpha_dual, gamma_sequence, w_monomial, w_sequence, GreeneMode,
};
use crate::krs;
use crate::par_map;
use crate::polyring::monomials_of_degree;
use crate::report::{Report, SliceResult};
use crate::tableaux::{enumerate_standard_bitableaux, Bitableau, Constraint};

use super::{tally, Outcome, RunConfig};

/// Length of the longest permutations in the duality check.
pub const PERMUTATION_LENGTH: usize = 7;

fn standard(cfg: &RunConfig, d: usize) -> Vec<Bitableau> {
    enumerate_standard_bitableaux(cfg.grid, &Constraint::TotalDegree(d))
}

pub(super) fn bijection(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let mut report = Report::new("bijection", grid).param("degree_bound", cfg.degree_bound);
    for d in 1..=cfg.degree_bound {
        let sigmas = standard(cfg, d);
        let monomials = monomials_of_degree(grid, d);
        let mut count = SliceResult::for_degree("count", d);
        count.record(sigmas.len() == monomials.len(), || {
            json!({"standard": sigmas.len(), "monomials": monomials.len()})
        });
        let forward = par_map(sigmas, |s| -> Result<Vec<Outcome>> {
            let array = krs::forward(&s)?;
            let back = krs::inverse(&array)?;
            let m = array.to_monomial();
            let transpose = krs::transpose_commutes(&s)?;
            let mut bad_power = None;
            for k in 2..=3 {
                let p = s.pow(k);
                if !p.is_standard() || krs::forward_monomial(&p)? != m.pow(k as u32) {
                    bad_power = Some(k);
                    break;
                }
            }
            Ok(vec![
                Outcome::new("round-trip", back == s, || {
                    json!({"sigma": s.to_string(), "array": array.to_string(), "back": back.to_string()})
                }),
                Outcome::new("multidegree", m.multidegree(grid) == s.multidegree(grid), || {
                    json!({"sigma": s.to_string(), "monomial": m.to_string()})
                }),
                Outcome::new("transpose", transpose.pass, || json!({"sigma": s.to_string(), "check": transpose})),
                Outcome::new("powers", bad_power.is_none(), || json!({"sigma": s.to_string(), "k": bad_power})),
            ])
        });
        report.extend(tally(&["round-trip", "multidegree", "transpose", "powers"], d, forward)?);
        let backward = par_map(monomials, |m| -> Result<Vec<Outcome>> {
            let s = krs::inverse_monomial(&m)?;
            let again = krs::forward_monomial(&s)?;
            Ok(vec![Outcome::new("inverse-round-trip", s.is_standard() && again == m, || {
                json!({"monomial": m.to_string(), "sigma": s.to_string(), "again": again.to_string()})
            })])
        });
        report.extend(tally(&["inverse-round-trip"], d, backward)?);
        report.push(count);
    }
    Ok(report)
}

pub(super) fn schensted(cfg: &RunConfig) -> Result<Report> {
    let mut report = Report::new("schensted", cfg.grid).param("degree_bound", cfg.degree_bound);
    for d in 1..=cfg.degree_bound {
        let out = par_map(standard(cfg, d), |s| -> Result<Vec<Outcome>> {
            let lower = krs::forward(&s)?.lower();
            let l = crate::invariants::lis(&lower);
            let first = s.shape().part(1);
            Ok(vec![Outcome::new("first-row=lis", first == l, || {
                json!({"sigma": s.to_string(), "first_row": first, "lis": l})
            })])
        });
        report.extend(tally(&["first-row=lis"], d, out)?);
    }
    Ok(report)
}

pub(super) fn greene(cfg: &RunConfig) -> Result<Report> {
    let mut report = Report::new("greene", cfg.grid).param("degree_bound", cfg.degree_bound).param("k_max", 3);
    for d in 1..=cfg.degree_bound {
        let out = par_map(standard(cfg, d), |s| -> Result<Vec<Outcome>> {
            let lower = krs::forward(&s)?.lower();
            let shape = s.shape();
            let dual = shape.conjugate();
            let mut brute = None;
            let mut rsk = None;
            let mut cols = None;
            for k in 1..=3 {
                let a = shape.alpha(k);
                if brute.is_none() && greene_alpha(k, &lower, GreeneMode::BruteForce) != a {
                    brute = Some(k);
                }
                if rsk.is_none() && greene_alpha(k, &lower, GreeneMode::ViaRsk) != a {
                    rsk = Some(k);
                }
                if cols.is_none() && greene_alpha_dual(k, &lower) != dual.alpha(k) {
                    cols = Some(k);
                }
            }
            let w = |k: Option<usize>| json!({"sigma": s.to_string(), "lower": lower, "k": k});
            Ok(vec![
                Outcome::new("alpha=brute-force", brute.is_none(), || w(brute)),
                Outcome::new("alpha=rsk", rsk.is_none(), || w(rsk)),
                Outcome::new("alpha-dual=columns", cols.is_none(), || w(cols)),
            ])
        });
        report.extend(tally(&["alpha=brute-force", "alpha=rsk", "alpha-dual=columns"], d, out)?);
    }
    Ok(report)
}

pub(super) fn gamma_invariance(cfg: &RunConfig) -> Result<Report> {
    let mut report = Report::new("gamma-invariance", cfg.grid).param("degree_bound", cfg.degree_bound).param("t_max", 3);
    for d in 1..=cfg.degree_bound {
        let out = par_map(standard(cfg, d), |s| -> Result<Vec<Outcome>> {
            let m = krs::forward_monomial(&s)?;
            let shapes = decomposition_shapes(&m);
            let shape = s.shape();
            let bad: Vec<usize> = (1..=3)
                .filter(|&t| shapes.iter().map(|p| p.gamma(t)).max().unwrap_or(0) != shape.gamma(t))
                .collect();
            Ok(vec![Outcome::new("gamma(sigma)=gamma(krs)", bad.is_empty(), || {
                json!({"sigma": s.to_string(), "monomial": m.to_string(), "t": bad})
            })])
        });
        report.extend(tally(&["gamma(sigma)=gamma(krs)"], d, out)?);
    }
    Ok(report)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, x);
                    q
                })
            })
            .collect();
    }
    out
}

/// `γ_t + w_t = length` on permutations, `w_t = α*_{t−1}`, and
/// `γ_t(M) + w_t(M) = deg M` on monomials of the grid.
pub(super) fn duality(cfg: &RunConfig) -> Result<Report> {
    let mut report = Report::new("duality", cfg.grid)
        .param("degree_bound", cfg.degree_bound)
        .param("permutation_length", PERMUTATION_LENGTH)
        .param("t_max", 4);
    for len in 1..=PERMUTATION_LENGTH {
        let out = par_map(permutations(len), |b| -> Result<Vec<Outcome>> {
            let mut sum = Vec::new();
            let mut dual = Vec::new();
            for t in 1..=4 {
                let w = w_sequence(t, &b);
                if gamma_sequence(t, &b) + w != len {
                    sum.push(t);
                }
                if w != greene_alpha_dual(t - 1, &b) {
                    dual.push(t);
                }
            }
            Ok(vec![
                Outcome::new("permutation:gamma+w=length", sum.is_empty(), || json!({"b": b, "t": sum})),
                Outcome::new("permutation:w=alpha-dual", dual.is_empty(), || json!({"b": b, "t": dual})),
            ])
        });
        report.extend(tally(&["permutation:gamma+w=length", "permutation:w=alpha-dual"], len, out)?);
    }
    let t_max = cfg.grid.min_dim().min(4);
    for d in 1..=cfg.degree_bound {
        let out = par_map(monomials_of_degree(cfg.grid, d), |m| -> Result<Vec<Outcome>> {
            let shapes = decomposition_shapes(&m);
            let bad: Vec<usize> = (1..=t_max)
                .filter(|&t| shapes.iter().map(|p| p.gamma(t)).max().unwrap_or(0) + w_monomial(t, &m) != d)
                .collect();
            Ok(vec![Outcome::new("monomial:gamma+w=degree", bad.is_empty(), || {
                json!({"monomial": m.to_string(), "t": bad})
            })])
        });
        report.extend(tally(&["monomial:gamma+w=degree"], d, out)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(4).len(), 24);
        let mut p = permutations(3);
        p.sort();
        p.dedup();
        assert_eq!(p.len(), 6);
    }
}
