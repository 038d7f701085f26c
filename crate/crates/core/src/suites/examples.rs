//! Reproductions of the worked examples and counterexamples on fixed
//! matrices.

use std::collections::BTreeSet;

use serde_json::json;

use crate::error::{Error, Result};
use crate::ideals::{gkrs_search, slice_of, FamilyKind, IdealFamily};
use crate::invariants::bitableaux_with_initial;
use crate::krs;
use crate::polyring::Monomial;
use crate::report::{Report, SliceResult};
use crate::straighten::Straightener;
use crate::tableaux::{enumerate_standard_bitableaux, Bitableau, Constraint, GridSize, Shape};

use super::RunConfig;

/// `X12·X23·X21·X32`.
fn example_4a_monomial() -> Monomial {
    Monomial::from_factors([(1, 2), (2, 3), (2, 1), (3, 2)])
}

/// `I_2^{(2)}` is in-KRS, yet its standard bitableaux are no Gröbner basis:
/// `M = X12X23X21X32` lies in the initial ideal, while no standard
/// bitableau of degree `≤ 4` in the ideal has an initial monomial dividing
/// `M`.
pub(super) fn examples_4a(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.grid;
    if grid.m < 3 || grid.n < 3 {
        return Err(Error::invalid("examples-4a needs a grid of at least 3×3"));
    }
    let st = Straightener::new(grid);
    let fam = IdealFamily::symbolic(grid, 2, 2)?;
    let m = example_4a_monomial();
    let mut report = Report::new("examples-4a", grid).param("family", &fam.kind);

    let mut initial = SliceResult::new("in-initial-ideal", Some(m.multidegree(grid)));
    let slice = slice_of(&st, &fam, &m.multidegree(grid))?;
    initial.record(slice.initial_set().contains(&m), || json!({"initial": slice.initial_monomials.iter().map(|x| x.to_string()).collect::<Vec<_>>()}));

    let mut witness = SliceResult::new("shape-(2,2)-witness", None);
    let delta: Bitableau = "[1,2|2,3]·[2,3|1,2]".parse()?;
    let ini = st.expand(&delta).initial_monomial()?;
    let inside = fam.contains_by_straightening(&st, &delta)?;
    witness.record(ini == m && inside && delta.shape().parts() == [2, 2], || {
        json!({"delta": delta.to_string(), "initial": ini.to_string(), "in_ideal": inside})
    });

    let mut no_divisor = SliceResult::new("no-small-divisor", None);
    let mut shapes = BTreeSet::new();
    for d in 1..=4 {
        for s in enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(d)) {
            if !fam.predicate(&s)? {
                continue;
            }
            shapes.insert(s.shape());
            let ini_s = st.expand(&s).initial_monomial()?;
            no_divisor.record(!ini_s.divides(&m), || json!({"sigma": s.to_string(), "initial": ini_s.to_string()}));
        }
    }
    let mut expected: BTreeSet<Shape> = [vec![3], vec![3, 1], vec![2, 2]].into_iter().map(Shape::new).collect::<Result<_>>()?;
    if grid.min_dim() >= 4 {
        expected.insert(Shape::new(vec![4])?);
    }
    let mut shape_check = SliceResult::new("small-shapes", None);
    shape_check.record(shapes == expected, || {
        json!({"found": shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>()})
    });
    report.extend([initial, witness, no_divisor, shape_check]);
    report.finding(json!({
        "witness": m.to_string(),
        "krs_preimage": krs::inverse_monomial(&m)?.to_string(),
        "shapes_up_to_degree_4": shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    }));
    Ok(report)
}

/// The standard bitableau of the intersection example.
pub const EXAMPLE_4B_SIGMA: &str = "[1,3,4,5|1,2,3,6]·[2,6|4,5]";

fn example_4b_monomial() -> Monomial {
    Monomial::from_factors([(1, 4), (2, 1), (3, 2), (4, 5), (5, 6), (6, 3)])
}

fn intersection_checks(
    st: &Straightener,
    label: &str,
    fam: &IdealFamily,
    sigma: &Bitableau,
    expected_shapes: &BTreeSet<Shape>,
) -> Result<Vec<SliceResult>> {
    let grid = st.grid();
    let md = sigma.multidegree(grid);
    let m = krs::forward_monomial(sigma)?;
    let name = |c: &str| format!("{label}:{c}");

    let mut member = SliceResult::new(name("sigma-in-intersection"), None);
    member.record(fam.predicate(sigma)?, || json!({"sigma": sigma.to_string()}));

    let mut initial = SliceResult::new(name("krs-in-initial-ideal"), Some(md.clone()));
    let slice = slice_of(st, fam, &md)?;
    initial.record(slice.initial_set().contains(&m), || json!({"monomial": m.to_string(), "slice_dimension": slice.rank()}));

    let degree = sigma.degree();
    let shapes: BTreeSet<Shape> = Shape::partitions(degree, grid.min_dim())
        .into_iter()
        .filter(|s| fam.rule(&shape_representative(s)) == Some(true))
        .collect();
    let mut shape_check = SliceResult::new(name("degree-shapes"), None);
    shape_check.record(&shapes == expected_shapes, || {
        json!({"found": shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>()})
    });

    let search = gkrs_search(st, fam, sigma)?;
    let mut none = SliceResult::new(name("no-witness"), None);
    none.record(search.witness.is_none(), || {
        json!({"monomial": m.to_string(), "witness": search.witness.as_ref().map(|w| w.to_string()), "witness_shape": search.witness.as_ref().map(|w| w.shape().to_string())})
    });

    let mut routes = SliceResult::new(name("membership-routes"), None);
    for (d, inside) in &search.candidates {
        let by_straightening = fam.contains_by_straightening(st, d)?;
        routes.record(by_straightening == *inside, || {
            json!({"bitableau": d.to_string(), "rule": inside, "straightening": by_straightening})
        });
    }
    Ok(vec![member, initial, shape_check, none, routes])
}

/// A bitableau of the given shape, used to evaluate shape rules.
fn shape_representative(s: &Shape) -> Bitableau {
    Bitableau::new(s.parts().iter().map(|&p| crate::tableaux::Minor::principal(p)).collect())
}

/// `I_3^{(2)} ∩ I_4` on 6×6 with `Σ = [1,3,4,5|1,2,3,6]·[2,6|4,5]`, as
/// stated, together with `I_2^{(4)} ∩ I_4`, the reading under which the
/// stated shape list and the absence of a witness hold.
pub(super) fn examples_4b(_cfg: &RunConfig) -> Result<Report> {
    let grid = GridSize::square(6)?;
    let st = Straightener::new(grid);
    let sigma: Bitableau = EXAMPLE_4B_SIGMA.parse()?;
    let mut report = Report::new("examples-4b", grid).param("sigma", EXAMPLE_4B_SIGMA);

    let mut krs_check = SliceResult::new("krs-monomial", None);
    let m = krs::forward_monomial(&sigma)?;
    krs_check.record(m == example_4b_monomial(), || json!({"monomial": m.to_string()}));
    report.push(krs_check);

    let expected: BTreeSet<Shape> = [vec![6], vec![5, 1], vec![4, 2]].into_iter().map(Shape::new).collect::<Result<_>>()?;
    let readings = [
        ("literal", FamilyKind::ItSymbolic { t: 3, k: 2 }),
        ("corrected", FamilyKind::ItSymbolic { t: 2, k: 4 }),
    ];
    for (label, i) in readings {
        let fam = IdealFamily::new(FamilyKind::Intersection { members: vec![i, FamilyKind::It { t: 4 }] }, grid)?;
        report.extend(intersection_checks(&st, label, &fam, &sigma, &expected)?);
        let search = gkrs_search(&st, &fam, &sigma)?;
        report.finding(json!({
            "reading": label,
            "family": fam.name(),
            "candidates": search.candidates.len(),
            "candidate_shapes": search.candidate_shapes().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "witness": search.witness.map(|w| w.to_string()),
        }));
    }
    Ok(report)
}

/// `X11 X22 X34 ⋯ X_{p,p+1} · X13 · X_{r3} X_{r+1,4} ⋯ X_{p,q+1}` with
/// `r = p − q + 2`.
pub fn shape_counterexample_monomial(p: usize, q: usize) -> Monomial {
    let r = p + 2 - q;
    let mut f = vec![(1, 1), (2, 2)];
    f.extend((3..=p).map(|i| (i, i + 1)));
    f.push((1, 3));
    f.extend((r..=p).map(|i| (i, i + 3 - r)));
    Monomial::from_factors(f)
}

/// Pairs `(p,q)` with `q ≥ 2` for which the construction applies on `grid`.
fn valid_pairs(grid: GridSize) -> Vec<(usize, usize)> {
    let (lo, hi) = (grid.min_dim(), grid.m.max(grid.n));
    let mut out = Vec::new();
    for p in 3..hi.min(lo + 1) {
        for q in 2..=p - 2 {
            out.push((p, q));
        }
    }
    out
}

/// Every split of the factors of `m` into a `p`-diagonal and a `q`-diagonal,
/// found directly on the cells.
fn diagonal_splits(m: &Monomial, p: usize, q: usize) -> Vec<(Vec<(usize, usize)>, Vec<(usize, usize)>)> {
    let f = m.factors();
    let is_diag = |cells: &[(usize, usize)]| cells.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
    let mut out = Vec::new();
    for mask in 0u32..1 << f.len() {
        if mask.count_ones() as usize != p {
            continue;
        }
        let mut a: Vec<(usize, usize)> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
        let mut b: Vec<(usize, usize)> = (0..f.len()).filter(|i| mask >> i & 1 == 0).map(|i| f[i]).collect();
        a.sort_unstable();
        b.sort_unstable();
        if b.len() == q && is_diag(&a) && is_diag(&b) {
            out.push((a, b));
        }
    }
    out
}

/// The monomial whose KRS preimage has shape `(p,q)` although it is not
/// `ini(δ_1)ini(δ_2)` with `|δ_1| = p`, `|δ_2| = q`; on 6×6 for every
/// admissible `(p,q)`, including `(5,3)`.
pub(super) fn shape_counterexample(_cfg: &RunConfig) -> Result<Report> {
    let grid = GridSize::square(6)?;
    let mut report = Report::new("shape-6-counterexample", grid);
    for (p, q) in valid_pairs(grid) {
        let m = shape_counterexample_monomial(p, q);
        let label = format!("({p},{q})");
        let target = Shape::new(vec![p, q])?;
        let preimage = krs::inverse_monomial(&m)?;
        let mut shape = SliceResult::new(format!("{label}:preimage-shape"), Some(m.multidegree(grid)));
        shape.record(preimage.shape() == target, || json!({"monomial": m.to_string(), "preimage": preimage.to_string()}));
        let same_shape: Vec<Bitableau> = bitableaux_with_initial(&m).into_iter().filter(|d| d.shape() == target).collect();
        let mut none = SliceResult::new(format!("{label}:no-decomposition"), None);
        none.record(same_shape.is_empty(), || json!({"decompositions": same_shape.iter().map(|d| d.to_string()).collect::<Vec<_>>()}));
        let splits = diagonal_splits(&m, p, q);
        let mut direct = SliceResult::new(format!("{label}:no-diagonal-split"), None);
        direct.record(splits.is_empty(), || json!({"splits": splits}));
        report.extend([shape, none, direct]);
        report.finding(json!({"p": p, "q": q, "monomial": m.to_string(), "preimage": preimage.to_string()}));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_monomial_for_5_3() {
        let m = shape_counterexample_monomial(5, 3);
        let want = Monomial::from_factors([(1, 1), (2, 2), (3, 4), (4, 5), (5, 6), (1, 3), (4, 3), (5, 4)]);
        assert_eq!(m, want);
        assert_eq!(m.degree(), 8);
    }

    #[test]
    fn admissible_pairs_on_6x6() {
        let pairs = valid_pairs(GridSize::square(6).unwrap());
        assert!(pairs.contains(&(5, 3)));
        assert_eq!(pairs, vec![(4, 2), (5, 2), (5, 3)]);
    }

    #[test]
    fn splits_of_a_product_of_diagonals() {
        let m = Monomial::from_factors([(1, 1), (2, 2), (1, 2)]);
        assert_eq!(diagonal_splits(&m, 2, 1).len(), 1);
    }
}
