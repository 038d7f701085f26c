//! Suites on straightening, initial ideals and ideal families.

use serde_json::json;

use crate::error::{Error, Result};
use crate::ideals::cogenerated::{check_cogenerated, explore_cogenerated, ExploreConfig};
use crate::ideals::facets::{check_purity, verify_symbolic_initial};
use crate::ideals::generators::GeneratorSpan;
use crate::ideals::{check_in_krs, check_in_krs_slice, in_krs_of_slice, multidegrees_up_to, slice_of, FamilyKind, IdealFamily};
use crate::krs;
use crate::par_map;
use crate::polyring::{Monomial, Polynomial};
use crate::report::{Report, SliceResult};
use crate::straighten::Straightener;
use crate::tableaux::{enumerate_bitableaux, enumerate_standard_bitableaux, Bitableau, Constraint, GridSize, Minor};

use super::{absorb_part, tally, Outcome, RunConfig};

/// Degree bound of the KRS-automorphism rank check.
const AUTOMORPHISM_DEGREE: usize = 3;

pub(super) fn straightening(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("straightening", grid).param("degree_bound", cfg.degree_bound);

    let ranks = par_map(multidegrees_up_to(grid, cfg.degree_bound), |md| -> Result<Vec<SliceResult>> {
        let mut rank = SliceResult::new("full-rank", Some(md.clone()));
        match st.slice(&md) {
            Ok(slice) => rank.record(slice.rank() == slice.monomials.len(), || json!({"rank": slice.rank()})),
            Err(Error::InconsistentBasis(msg)) => rank.record(false, || json!({"error": msg})),
            Err(e) => return Err(e),
        }
        let mut out = vec![rank];
        if md.total() <= AUTOMORPHISM_DEGREE {
            let mut auto = SliceResult::new("krs-automorphism", Some(md.clone()));
            let r = st.krs_slice_rank(&md)?;
            let images = st.krs_matrix(&md)?;
            let preserved = images.iter().all(|p| p.terms().all(|(m, _)| m.multidegree(grid) == md));
            auto.record(preserved && r == st.slice(&md)?.monomials.len(), || json!({"rank": r, "multidegree_preserved": preserved}));
            out.push(auto);
        }
        Ok(out)
    });
    for r in ranks {
        report.extend(r?);
    }

    // every non-standard product of two minors, whatever its degree
    let minors: Vec<Minor> = Minor::all(grid);
    let pairs: Vec<(Minor, Minor)> = minors
        .iter()
        .flat_map(|a| minors.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| a.size() >= b.size() && !a.precedes(b))
        .collect();
    let mut order = SliceResult::new("order", None);
    for r in par_map(pairs, |(a, b)| st.check_order(&a, &b)) {
        let c = r?;
        order.record(c.pass, || json!(c));
    }
    report.push(order);

    for d in 1..=cfg.degree_bound {
        let out = par_map(enumerate_bitableaux(grid, d), |b| -> Result<Vec<Outcome>> {
            let shape = st.check_shape(&b)?;
            let rep = st.straighten_bitableau(&b)?;
            let standard_terms = rep.bitableaux().all(Bitableau::is_standard);
            Ok(vec![
                Outcome::new("shape-term", shape.pass, || json!(shape)),
                Outcome::new("round-trip", standard_terms && rep.evaluate() == st.expand(&b), || {
                    json!({"bitableau": b.to_string(), "representation": rep})
                }),
            ])
        });
        report.extend(tally(&["shape-term", "round-trip"], d, out)?);
    }
    Ok(report)
}

fn diagonals(grid: GridSize, t: usize) -> Vec<Monomial> {
    Minor::all_of_size(grid, t).iter().map(Monomial::diagonal_of).collect()
}

/// `ini(I_t) = KRS(I_t)` and every initial monomial is divisible by a
/// `t`-diagonal, for `t = 2, 3`.
pub(super) fn groebner_it(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("groebner-it", grid).param("degree_bound", cfg.degree_bound);
    for t in 2..=grid.min_dim().min(3) {
        let fam = IdealFamily::it(grid, t)?;
        let diag = diagonals(grid, t);
        let mds = multidegrees_up_to(grid, cfg.degree_bound);
        let per_slice = par_map(mds, |md| -> Result<Vec<SliceResult>> {
            let slice = slice_of(&st, &fam, &md)?;
            let mut out = in_krs_of_slice(&slice)?;
            let mut div = SliceResult::new("diagonal-divisibility", Some(md.clone()));
            for m in &slice.initial_monomials {
                div.record(diag.iter().any(|g| g.divides(m)), || json!({"monomial": m.to_string()}));
            }
            out.push(div);
            for s in &mut out {
                s.check = format!("I_{t}/{}", s.check);
            }
            Ok(out)
        });
        for r in per_slice {
            report.extend(r?);
        }
    }
    Ok(report)
}

/// Building blocks of the closure suite that fit the grid.
fn closure_members(grid: GridSize) -> Vec<FamilyKind> {
    [
        FamilyKind::ItSymbolic { t: 2, k: 2 },
        FamilyKind::ItSymbolic { t: 2, k: 3 },
        FamilyKind::ItSymbolic { t: 3, k: 1 },
        FamilyKind::Jkd { k: 2, d: 3 },
        FamilyKind::Jkd { k: 3, d: 4 },
    ]
    .into_iter()
    .filter(|k| IdealFamily::new(k.clone(), grid).is_ok())
    .collect()
}

/// In-KRS for pairwise sums and intersections.
pub(super) fn gandin_closure(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("gandin-closure", grid).param("degree_bound", cfg.degree_bound);
    let members = closure_members(grid);
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            for kind in [
                FamilyKind::Sum { members: vec![a.clone(), b.clone()] },
                FamilyKind::Intersection { members: vec![a.clone(), b.clone()] },
            ] {
                let name = kind.to_string();
                let fam = IdealFamily::new(kind, grid)?;
                report.absorb(&name, check_in_krs(&st, &fam, cfg.degree_bound)?);
            }
        }
    }
    Ok(report)
}

/// `πρ ∈ I_{u+1} I_{v−1}` for `|ρ| = u < v = |π|`, by straightening
/// against the product's standard basis and by the span of its generators.
pub(super) fn balancing(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("balancing", grid);
    let minors = Minor::all(grid);
    let rhos: Vec<Minor> = std::iter::once(Minor::empty()).chain(minors.iter().cloned()).collect();
    let pairs: Vec<(Minor, Minor)> = minors
        .iter()
        .flat_map(|p| rhos.iter().filter(|r| r.size() < p.size()).map(move |r| (p.clone(), r.clone())))
        .collect();
    let out = par_map(pairs, |(pi, rho)| -> Result<Vec<Outcome>> {
        let (u, v) = (rho.size(), pi.size());
        let ts: Vec<usize> = [u + 1, v - 1].into_iter().filter(|&t| t > 0).collect();
        let f: Polynomial = &*st.expand_minor(&pi) * &*st.expand_minor(&rho);
        let fam = IdealFamily::product(grid, ts.clone())?;
        let by_basis = fam.membership(&st, &f)?;
        let md = Bitableau::new(vec![pi.clone(), rho.clone()]).multidegree(grid);
        let by_generators = GeneratorSpan::build(&st, &ts, &md)?.contains(&f)?;
        let w = || json!({"pi": pi.to_string(), "rho": rho.to_string(), "product": ts});
        Ok(vec![Outcome::new("standard-basis", by_basis, w), Outcome::new("generators", by_generators, w)])
    });
    report.extend(tally(&["standard-basis", "generators"], 0, out)?.into_iter().map(|mut s| {
        s.degree = None;
        s
    }));
    Ok(report)
}

/// Standard bases of `I_t^{(r)}` and `Σ_k J(k, r+k(t−1))` agree, and so do
/// those of `I_t^r` and `J(r, rt)`.
pub(super) fn algam(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let bound = cfg.degree_bound;
    let mut report = Report::new("algam", grid).param("degree_bound", bound).param("t_max", 3).param("r_max", 3);
    let mut pairs: Vec<(String, IdealFamily, IdealFamily)> = Vec::new();
    for t in 1..=grid.min_dim().min(3) {
        for r in 1..=3 {
            let sum = FamilyKind::Sum { members: (1..=bound).map(|k| FamilyKind::Jkd { k, d: r + k * (t - 1) }).collect() };
            pairs.push((format!("I_{t}^({r})"), IdealFamily::symbolic(grid, t, r)?, IdealFamily::new(sum, grid)?));
            pairs.push((format!("I_{t}^{r}"), IdealFamily::product(grid, vec![t; r])?, IdealFamily::jkd(grid, r, r * t)?));
        }
    }
    for d in 1..=bound {
        let sigmas = enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(d));
        for (name, a, b) in &pairs {
            let mut s = SliceResult::for_degree(name.as_str(), d);
            for sigma in &sigmas {
                let (x, y) = (a.predicate(sigma)?, b.predicate(sigma)?);
                s.record(x == y, || {
                    json!({"sigma": sigma.to_string(), "multidegree": sigma.multidegree(grid).to_string(), a.name(): x, b.name(): y})
                });
            }
            report.push(s);
        }
    }
    Ok(report)
}

/// Initial ideals of symbolic powers and powers of `I_2` against the
/// facets of `Δ_t`, plus purity of `Δ_t` on small grids.
pub(super) fn symb_in(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("symb-in", grid).param("degree_bound", cfg.degree_bound).param("t", 2).param("k_max", 3);
    if grid.min_dim() >= 2 {
        for k in 1..=3 {
            absorb_part(&mut report, &format!("k={k}"), verify_symbolic_initial(&st, 2, k, cfg.degree_bound, cfg.budget))?;
        }
    }
    let mut grids: Vec<GridSize> = (1..=4).flat_map(|m| (1..=4).map(move |n| GridSize::new(m, n))).collect::<Result<_>>()?;
    if !grids.contains(&grid) {
        grids.push(grid);
    }
    for g in grids {
        match check_purity(g, cfg.budget) {
            Ok(s) => report.push(s),
            Err(Error::BudgetExceeded(n)) => {
                report.finding(json!({"part": format!("purity {g}"), "budget_exceeded": n}));
                report.mark_budget_exceeded();
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

pub(super) fn cogenerated(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("cogenerated", grid).param("degree_bound", cfg.degree_bound);
    for delta in Minor::all(grid) {
        report.absorb(&delta.to_string(), check_cogenerated(&st, &delta, cfg.degree_bound, cfg.cross_check_limit)?);
    }
    Ok(report)
}

/// Largest degree bound used by the explorer.
const EXPLORE_DEGREE: usize = 4;

pub(super) fn cogenerated_explore(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let ec = ExploreConfig {
        degree_bound: cfg.degree_bound.min(EXPLORE_DEGREE),
        seed: cfg.seed,
        budget: cfg.budget,
        ..ExploreConfig::default()
    };
    let mut report = Report::new("cogenerated-explore", grid)
        .explorer()
        .param("degree_bound", ec.degree_bound)
        .param("k", ec.k)
        .param("seed", ec.seed)
        .param("patience", ec.patience);
    for delta in Minor::all(grid) {
        let part = explore_cogenerated(&st, &delta, &ec);
        absorb_part(&mut report, &delta.to_string(), part)?;
    }
    Ok(report)
}

/// The first standard bitableau whose KRS image differs from its initial
/// monomial, by degree.
pub fn first_non_diagonal(grid: GridSize, max_degree: usize) -> Result<Option<Bitableau>> {
    for d in 1..=max_degree {
        for s in enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(d)) {
            if krs::forward_monomial(&s)? != Monomial::diagonal_of_bitableau(&s) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// `(Σ) + 𝔪^{d+1}` has a standard basis but is not in-KRS.
pub(super) fn negative_control(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    let st = Straightener::new(grid);
    let mut report = Report::new("negative-control", grid);
    let mut found = SliceResult::new("non-diagonal-sigma", None);
    let Some(sigma) = first_non_diagonal(grid, grid.min_dim().max(2) * 2)? else {
        found.record(false, || json!({"reason": "no standard bitableau with KRS ≠ ini on this grid"}));
        report.push(found);
        return Ok(report);
    };
    let krs_m = krs::forward_monomial(&sigma)?;
    let ini = st.expand(&sigma).initial_monomial()?;
    found.record(krs_m != ini, || json!({}));
    found.note(json!({"sigma": sigma.to_string(), "krs": krs_m.to_string(), "initial": ini.to_string()}));
    report.push(found);

    let fam = IdealFamily::new(FamilyKind::PrincipalPlusPower { sigma: sigma.clone(), power: sigma.degree() + 1 }, grid)?;
    let results = check_in_krs_slice(&st, &fam, &sigma.multidegree(grid))?;
    let hilbert = results.iter().find(|s| s.check == "hilbert").expect("hilbert entry");
    let in_krs = results.iter().find(|s| s.check == "in-krs").expect("in-krs entry");
    let mut basis = SliceResult::new("standard-basis", Some(sigma.multidegree(grid)));
    basis.record(hilbert.pass, || json!({"hilbert": hilbert.witnesses}));
    let mut detected = SliceResult::new("in-krs-fails", Some(sigma.multidegree(grid)));
    detected.record(!in_krs.pass, || json!({"family": fam.name()}));
    detected.note(json!({"family": fam.name(), "comparison": in_krs.witnesses}));
    report.extend([basis, detected]);
    report.finding(json!({
        "family": fam.kind,
        "sigma": sigma.to_string(),
        "krs": krs_m.to_string(),
        "initial": ini.to_string(),
    }));
    Ok(report)
}
