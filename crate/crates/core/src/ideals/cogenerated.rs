//! Ideals cogenerated by a minor: the asserted nonvanishing and G-KRS
//! checks, and an explorer for the open questions about `γ_δ`.

use std::collections::BTreeSet;

use serde_json::json;

use crate::error::Result;
use crate::invariants::{gamma_delta_bitableau, gamma_delta_minor, gamma_delta_monomial};
use crate::krs;
use crate::linalg::Echelon;
use crate::polyring::Monomial;
use crate::report::{Report, SliceResult};
use crate::straighten::Straightener;
use crate::tableaux::{enumerate_bitableaux, enumerate_standard_bitableaux, Bitableau, Constraint, Minor};

use super::facets::{in_symbolic_power, Complex, DEFAULT_BUDGET};
use super::vanishing::{minor_order, symbolic_slice, Sampler};
use super::{check_gkrs, multidegrees_up_to, IdealFamily, MonomialIndex};

/// For every standard `Σ` up to `degree_bound`: `γ_δ(Σ) ≠ 0` exactly when
/// `σ_1 ⋡ δ`, `γ_δ(Σ) ≠ 0 ⟹ γ_δ(KRS(Σ)) ≠ 0` and its converse; then
/// G-KRS of `I(δ,X)`.
pub fn check_cogenerated(st: &Straightener, delta: &Minor, degree_bound: usize, cross_check_limit: usize) -> Result<Report> {
    let grid = st.grid();
    let fam = IdealFamily::cogenerated(grid, delta.clone())?;
    let mut report = Report::new("cogenerated", grid).param("delta", delta.to_string()).param("degree_bound", degree_bound);
    let mut basis = SliceResult::new("basis-description", None);
    let mut forward = SliceResult::new("nonvanishing", None);
    let mut backward = SliceResult::new("nonvanishing-converse", None);
    for d in 1..=degree_bound {
        for s in enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(d)) {
            let g = gamma_delta_bitableau(delta, &s);
            let gm = gamma_delta_monomial(delta, &krs::forward_monomial(&s)?);
            basis.record((g != 0) == fam.predicate(&s)?, || json!({"sigma": s.to_string(), "gamma": g}));
            if g != 0 {
                forward.record(gm != 0, || json!({"sigma": s.to_string(), "gamma": g, "gamma_krs": gm}));
            }
            if gm != 0 {
                backward.record(g != 0, || json!({"sigma": s.to_string(), "gamma": g, "gamma_krs": gm}));
            }
        }
    }
    report.extend([basis, forward, backward]);
    report.absorb("g-krs", check_gkrs(st, &fam, degree_bound, cross_check_limit)?);
    Ok(report)
}

/// Parameters of the explorer.
#[derive(Clone, Debug)]
pub struct ExploreConfig {
    pub k: usize,
    pub degree_bound: usize,
    pub seed: u64,
    /// Consecutive non-improving sample points before a symbolic slice is
    /// accepted.
    pub patience: usize,
    pub budget: u64,
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig { k: 2, degree_bound: 4, seed: 0x5eed, patience: 3, budget: DEFAULT_BUDGET }
    }
}

fn span_rank(st: &Straightener, idx: &MonomialIndex, gens: &[Bitableau]) -> Result<usize> {
    let mut e = Echelon::new();
    for (k, b) in gens.iter().enumerate() {
        e.insert(idx.coords(&st.expand(b))?, k);
    }
    Ok(e.rank())
}

/// Evidence on the four questions about `γ_δ`, `J(δ,k)` and
/// `I(δ,X)^{(k)}`. The report is an explorer report: recorded mismatches
/// are findings, not failures.
pub fn explore_cogenerated(st: &Straightener, delta: &Minor, cfg: &ExploreConfig) -> Result<Report> {
    let grid = st.grid();
    let k = cfg.k;
    let fam = IdealFamily::cogenerated(grid, delta.clone())?;
    let mut report = Report::new("cogenerated-explore", grid)
        .explorer()
        .param("delta", delta.to_string())
        .param("k", k)
        .param("degree_bound", cfg.degree_bound)
        .param("seed", cfg.seed);

    // (a) γ_δ(Σ) against γ_δ(KRS(Σ))
    let mut invariance = SliceResult::new("a:krs-invariance", None);
    let mut nonvanishing = SliceResult::new("a:nonvanishing", None);
    for d in 1..=cfg.degree_bound {
        for s in enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(d)) {
            let g = gamma_delta_bitableau(delta, &s);
            let gm = gamma_delta_monomial(delta, &krs::forward_monomial(&s)?);
            invariance.record(g == gm, || json!({"sigma": s.to_string(), "gamma": g, "gamma_krs": gm}));
            nonvanishing.record(g == 0 || gm != 0, || json!({"sigma": s.to_string()}));
        }
    }

    // (b) straightening keeps γ_δ ≥ k
    let by_degree: Vec<Vec<Bitableau>> = (0..=cfg.degree_bound).map(|d| enumerate_bitableaux(grid, d)).collect();
    let mut monotone = SliceResult::new("b:str-monotone", None);
    for d in 1..=cfg.degree_bound {
        for b in &by_degree[d] {
            if b.is_standard() || gamma_delta_bitableau(delta, b) < k {
                continue;
            }
            let rep = st.straighten_bitableau(b)?;
            let low: Vec<String> =
                rep.bitableaux().filter(|s| gamma_delta_bitableau(delta, s) < k).map(|s| s.to_string()).collect();
            monotone.record(low.is_empty(), || json!({"bitableau": b.to_string(), "low_terms": low}));
        }
    }

    // (c) generators of J(δ,k) vanish to order γ_δ; slices of J(δ,k)
    // against I(δ,X)^{(k)}
    let mut sampler = Sampler::new(grid, cfg.seed);
    let mut minor_orders = SliceResult::new("c:minor-order", None);
    let points: Vec<_> = (0..4).map(|_| sampler.cogenerated_point(delta)).collect();
    for mu in Minor::all(grid) {
        let g = gamma_delta_minor(delta, &mu);
        for p in &points {
            let o = minor_order(p, &mu);
            minor_orders.record(o >= g, || json!({"minor": mu.to_string(), "gamma": g, "order": o}));
        }
    }

    let complex = Complex::cogenerated(grid, delta)?;
    let facets = complex.facets(cfg.budget)?;
    report.finding(json!({"complex_facets": facets.len(), "facet_sizes": facets.iter().map(|f| f.len()).collect::<BTreeSet<_>>()}));

    let mut calibration = SliceResult::new("calibration", None);
    let mut basis_b = SliceResult::new("b:basis", None);
    let mut equal_c = SliceResult::new("c:equality", None);
    let mut equal_d = SliceResult::new("d:initial", None);
    for md in multidegrees_up_to(grid, cfg.degree_bound) {
        let idx = MonomialIndex::new(&md);
        let in_md = |b: &Bitableau| b.multidegree(grid) == md;
        let b_delta = fam.standard_basis(&md).len();
        let prime = symbolic_slice(&md, 1, || sampler.cogenerated_point(delta), cfg.patience);
        calibration.record(prime.dimension == b_delta, || {
            json!({"multidegree": md.to_string(), "sampled": prime.dimension, "basis": b_delta})
        });

        let j_gens: Vec<Bitableau> = by_degree[md.total()]
            .iter()
            .filter(|b| in_md(b) && gamma_delta_bitableau(delta, b) >= k)
            .cloned()
            .collect();
        let b_k = j_gens.iter().filter(|b| b.is_standard()).count();
        let j_dim = span_rank(st, &idx, &j_gens)?;
        basis_b.record(j_dim == b_k, || json!({"multidegree": md.to_string(), "span": j_dim, "standard": b_k}));

        let sym = symbolic_slice(&md, k, || sampler.cogenerated_point(delta), cfg.patience);
        equal_c.record(j_dim == sym.dimension, || {
            json!({"multidegree": md.to_string(), "j_dim": j_dim, "symbolic_dim": sym.dimension})
        });
        let sym_ini: BTreeSet<Monomial> = sym.initial_monomials.iter().cloned().collect();
        let sr: BTreeSet<Monomial> = idx.monomials.iter().filter(|m| in_symbolic_power(&facets, m, k)).cloned().collect();
        equal_d.record(sym_ini == sr, || {
            json!({
                "multidegree": md.to_string(),
                "symbolic_only": sym_ini.difference(&sr).map(|m| m.to_string()).collect::<Vec<_>>(),
                "monomial_only": sr.difference(&sym_ini).map(|m| m.to_string()).collect::<Vec<_>>(),
            })
        });
    }
    let summary = |s: &SliceResult| json!({"question": s.check, "checked": s.checked, "mismatches": s.failures});
    let all = [&invariance, &nonvanishing, &monotone, &minor_orders, &calibration, &basis_b, &equal_c, &equal_d];
    report.finding(json!({"summary": all.iter().map(|s| summary(s)).collect::<Vec<_>>()}));
    report.extend([invariance, nonvanishing, monotone, minor_orders, calibration, basis_b, equal_c, equal_d]);
    Ok(report)
}
