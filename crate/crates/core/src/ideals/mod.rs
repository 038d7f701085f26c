//! Ideal families with standard bases, their multigraded slices and initial
//! monomials, and the in-KRS / G-KRS checkers.

pub mod cogenerated;
pub mod facets;
pub mod generators;
pub mod vanishing;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::invariants::{bitableaux_with_initial, gamma_delta_bitableau};
use crate::krs;
use crate::linalg::Echelon;
use crate::polyring::{enumerate_multidegrees, monomials_of_multidegree, Monomial, Multidegree, Polynomial};
use crate::report::{Report, SliceResult};
use crate::straighten::Straightener;
use crate::tableaux::{enumerate_standard_bitableaux, Bitableau, Constraint, GridSize, Minor, Shape};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `I_t`.
    It { t: usize },
    /// `I_t^{(k)}`.
    ItSymbolic { t: usize, k: usize },
    /// `J(k,d)`.
    Jkd { k: usize, d: usize },
    /// `I^{(σ)}`.
    IShape { shape: Shape },
    /// `I_{t_1} ⋯ I_{t_r}`.
    ProductOfIt { ts: Vec<usize> },
    /// `I(δ,X)`.
    Cogenerated { delta: Minor },
    /// `J(δ,k)`, generated by the bitableaux with `γ_δ ≥ k`.
    JDeltaK { delta: Minor, k: usize },
    Sum { members: Vec<FamilyKind> },
    Intersection { members: Vec<FamilyKind> },
    /// `(σ) + 𝔪^p` with `p > deg σ`.
    PrincipalPlusPower { sigma: Bitableau, power: usize },
}

impl FamilyKind {
    fn validate(&self, grid: GridSize) -> Result<()> {
        let md = grid.min_dim();
        let t_ok = |t: usize, what: &str| {
            if (1..=md).contains(&t) {
                Ok(())
            } else {
                Err(Error::invalid(format!("{what} = {t} is outside 1..={md}")))
            }
        };
        let pos = |x: usize, what: &str| if x >= 1 { Ok(()) } else { Err(Error::invalid(format!("{what} must be ≥ 1"))) };
        let minor_ok = |delta: &Minor| {
            if delta.is_empty() || !delta.fits(grid) {
                Err(Error::invalid(format!("{delta} is not a minor of the {grid} grid")))
            } else {
                Ok(())
            }
        };
        match self {
            FamilyKind::It { t } => t_ok(*t, "t"),
            FamilyKind::ItSymbolic { t, k } => t_ok(*t, "t").and(pos(*k, "k")),
            FamilyKind::Jkd { k, d } => pos(*k, "k").and(pos(*d, "d")),
            FamilyKind::IShape { shape } => {
                if shape.is_empty() || shape.part(1) > md {
                    Err(Error::invalid(format!("shape {shape} does not fit the {grid} grid")))
                } else {
                    Ok(())
                }
            }
            FamilyKind::ProductOfIt { ts } => ts.iter().try_for_each(|&t| t_ok(t, "factor size")),
            FamilyKind::Cogenerated { delta } => minor_ok(delta),
            FamilyKind::JDeltaK { delta, k } => minor_ok(delta).and(pos(*k, "k")),
            FamilyKind::Sum { members } | FamilyKind::Intersection { members } => {
                if members.is_empty() {
                    return Err(Error::invalid("sums and intersections need at least one member"));
                }
                members.iter().try_for_each(|m| m.validate(grid))
            }
            FamilyKind::PrincipalPlusPower { sigma, power } => {
                if sigma.is_empty() || !sigma.is_standard() || !sigma.fits(grid) {
                    return Err(Error::invalid(format!("{sigma} is not a standard bitableau on the {grid} grid")));
                }
                if *power <= sigma.degree() {
                    return Err(Error::invalid("the power must exceed the degree of the generator"));
                }
                Ok(())
            }
        }
    }

    /// Membership depends only on the shape of a bitableau.
    pub fn shape_defined(&self) -> bool {
        match self {
            FamilyKind::It { .. }
            | FamilyKind::ItSymbolic { .. }
            | FamilyKind::Jkd { .. }
            | FamilyKind::IShape { .. }
            | FamilyKind::ProductOfIt { .. } => true,
            FamilyKind::Sum { members } | FamilyKind::Intersection { members } => {
                members.iter().all(FamilyKind::shape_defined)
            }
            _ => false,
        }
    }

    fn shape_rule(&self, s: &Shape) -> bool {
        match self {
            FamilyKind::It { t } => s.part(1) >= *t,
            FamilyKind::ItSymbolic { t, k } => s.gamma(*t) >= *k,
            FamilyKind::Jkd { k, d } => s.alpha(*k) >= *d,
            FamilyKind::IShape { shape } => (1..=shape.part(1)).all(|t| s.gamma(t) >= shape.gamma(t)),
            FamilyKind::ProductOfIt { ts } => {
                let target = Shape::from_unsorted(ts.clone());
                (1..=target.part(1)).all(|j| s.gamma(j) >= target.gamma(j))
            }
            FamilyKind::Sum { members } => members.iter().any(|m| m.shape_rule(s)),
            FamilyKind::Intersection { members } => members.iter().all(|m| m.shape_rule(s)),
            _ => unreachable!("shape rule requested for a family not defined by shape"),
        }
    }

    fn predicate(&self, s: &Bitableau) -> bool {
        match self {
            FamilyKind::Cogenerated { delta } => s.factors().first().is_some_and(|f| !delta.precedes(f)),
            FamilyKind::JDeltaK { delta, k } => gamma_delta_bitableau(delta, s) >= *k,
            FamilyKind::Sum { members } => members.iter().any(|m| m.predicate(s)),
            FamilyKind::Intersection { members } => members.iter().all(|m| m.predicate(s)),
            FamilyKind::PrincipalPlusPower { sigma, power } => s == sigma || s.degree() >= *power,
            other => other.shape_rule(&s.shape()),
        }
    }

    /// Decides membership of an arbitrary product of minors where a direct
    /// rule exists: shape for the determinantal families (characteristic
    /// 0), primality for `I(δ,X)`, and the defining generators of `J(δ,k)`
    /// and of `(σ) + 𝔪^p`.
    fn rule(&self, d: &Bitableau) -> Option<bool> {
        if self.shape_defined() {
            return Some(self.shape_rule(&d.shape()));
        }
        match self {
            FamilyKind::Cogenerated { delta } => Some(d.factors().iter().any(|f| !delta.precedes(f))),
            FamilyKind::JDeltaK { delta, k } => (gamma_delta_bitableau(delta, d) >= *k).then_some(true),
            FamilyKind::PrincipalPlusPower { sigma, power } => {
                if d.degree() >= *power {
                    Some(true)
                } else if d.degree() < sigma.degree() {
                    Some(false)
                } else {
                    None
                }
            }
            FamilyKind::Intersection { members } => {
                let votes: Vec<Option<bool>> = members.iter().map(|m| m.rule(d)).collect();
                if votes.contains(&Some(false)) {
                    Some(false)
                } else if votes.iter().all(|v| *v == Some(true)) {
                    Some(true)
                } else {
                    None
                }
            }
            FamilyKind::Sum { members } => members.iter().any(|m| m.rule(d) == Some(true)).then_some(true),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |members: &[FamilyKind], sep: &str| members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(sep);
        match self {
            FamilyKind::It { t } => write!(f, "I_{t}"),
            FamilyKind::ItSymbolic { t, k } => write!(f, "I_{t}^({k})"),
            FamilyKind::Jkd { k, d } => write!(f, "J({k},{d})"),
            FamilyKind::IShape { shape } => write!(f, "I^{shape}"),
            FamilyKind::ProductOfIt { ts } if ts.is_empty() => write!(f, "R"),
            FamilyKind::ProductOfIt { ts } => {
                write!(f, "{}", ts.iter().map(|t| format!("I_{t}")).collect::<Vec<_>>().join("·"))
            }
            FamilyKind::Cogenerated { delta } => write!(f, "I({delta},X)"),
            FamilyKind::JDeltaK { delta, k } => write!(f, "J({delta},{k})"),
            FamilyKind::Sum { members } => write!(f, "({})", join(members, " + ")),
            FamilyKind::Intersection { members } => write!(f, "({})", join(members, " ∩ ")),
            FamilyKind::PrincipalPlusPower { sigma, power } => write!(f, "({sigma}) + m^{power}"),
        }
    }
}

/// A validated family on a fixed grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFamily {
    pub kind: FamilyKind,
    pub grid: GridSize,
}

impl IdealFamily {
    pub fn new(kind: FamilyKind, grid: GridSize) -> Result<Self> {
        kind.validate(grid)?;
        Ok(IdealFamily { kind, grid })
    }

    pub fn it(grid: GridSize, t: usize) -> Result<Self> {
        Self::new(FamilyKind::It { t }, grid)
    }

    pub fn symbolic(grid: GridSize, t: usize, k: usize) -> Result<Self> {
        Self::new(FamilyKind::ItSymbolic { t, k }, grid)
    }

    pub fn jkd(grid: GridSize, k: usize, d: usize) -> Result<Self> {
        Self::new(FamilyKind::Jkd { k, d }, grid)
    }

    pub fn product(grid: GridSize, ts: Vec<usize>) -> Result<Self> {
        Self::new(FamilyKind::ProductOfIt { ts }, grid)
    }

    pub fn cogenerated(grid: GridSize, delta: Minor) -> Result<Self> {
        Self::new(FamilyKind::Cogenerated { delta }, grid)
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    /// Whether the standard bitableau `s` belongs to the family's standard
    /// basis.
    pub fn predicate(&self, s: &Bitableau) -> Result<bool> {
        if !s.is_standard() {
            return Err(Error::NotStandard);
        }
        Ok(self.kind.predicate(s))
    }

    /// Membership of an arbitrary bitableau by a direct rule, if one
    /// applies.
    pub fn rule(&self, d: &Bitableau) -> Option<bool> {
        self.kind.rule(d)
    }

    /// Membership of an arbitrary bitableau, by rule when possible and by
    /// straightening otherwise.
    pub fn contains_bitableau(&self, st: &Straightener, d: &Bitableau) -> Result<bool> {
        match self.rule(d) {
            Some(v) => Ok(v),
            None => self.contains_by_straightening(st, d),
        }
    }

    /// Membership of a bitableau through its standard representation.
    pub fn contains_by_straightening(&self, st: &Straightener, d: &Bitableau) -> Result<bool> {
        let rep = st.straighten_bitableau(d)?;
        let inside = rep.bitableaux().all(|s| self.kind.predicate(s));
        Ok(inside)
    }

    /// Membership of a polynomial: every standard term passes the
    /// predicate.
    pub fn membership(&self, st: &Straightener, f: &Polynomial) -> Result<bool> {
        let rep = st.standard_representation(f)?;
        let inside = rep.bitableaux().all(|s| self.kind.predicate(s));
        Ok(inside)
    }

    /// Standard basis elements of one multidegree.
    pub fn standard_basis(&self, md: &Multidegree) -> Vec<Bitableau> {
        enumerate_standard_bitableaux(self.grid, &Constraint::Multidegree(md.clone()))
            .into_iter()
            .filter(|s| self.kind.predicate(s))
            .collect()
    }
}

impl fmt::Display for IdealFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.kind, self.grid)
    }
}

/// Monomials of a multidegree in descending diagonal order, with positions.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(md: &Multidegree) -> Self {
        let monomials = monomials_of_multidegree(md);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialIndex { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Integer coordinates of a polynomial with integer coefficients.
    pub fn coords(&self, f: &Polynomial) -> Result<crate::linalg::SparseVec> {
        let mut v = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            let i = self.position(m).ok_or_else(|| Error::invalid(format!("{m} lies outside the slice")))?;
            v.push((i, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Ok(crate::linalg::to_integer_vec(&v))
    }
}

/// The part of a family in one multidegree, in echelon form.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    pub multidegree: Multidegree,
    pub standard_basis: Vec<Bitableau>,
    /// Pivot monomials, in descending diagonal order.
    pub initial_monomials: Vec<Monomial>,
    echelon: Echelon,
}

impl SliceBasis {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn initial_set(&self) -> BTreeSet<Monomial> {
        self.initial_monomials.iter().cloned().collect()
    }
}

/// Echelonizes the expansions of the family's standard basis in one
/// multidegree.
pub fn slice_of(st: &Straightener, fam: &IdealFamily, md: &Multidegree) -> Result<SliceBasis> {
    let basis = fam.standard_basis(md);
    let idx = MonomialIndex::new(md);
    let mut echelon = Echelon::new();
    for (k, s) in basis.iter().enumerate() {
        if !echelon.insert(idx.coords(&st.expand(s))?, k) {
            return Err(Error::InconsistentBasis(format!("{s} is dependent in slice {md}")));
        }
    }
    let initial_monomials = echelon.pivots().into_iter().map(|c| idx.monomials[c].clone()).collect();
    Ok(SliceBasis { multidegree: md.clone(), standard_basis: basis, initial_monomials, echelon })
}

/// All multidegrees of total degree `1..=bound`.
pub fn multidegrees_up_to(grid: GridSize, bound: usize) -> Vec<Multidegree> {
    (1..=bound).flat_map(|d| enumerate_multidegrees(grid, d)).collect()
}

fn monomial_list(ms: impl IntoIterator<Item = Monomial>) -> serde_json::Value {
    json!(ms.into_iter().map(|m| m.to_string()).collect::<Vec<_>>())
}

/// Per multidegree: `{KRS(Σ)}` over the slice's standard basis equals the
/// slice's initial monomials, and `|basis| = rank = |ini|`.
pub fn check_in_krs_slice(st: &Straightener, fam: &IdealFamily, md: &Multidegree) -> Result<Vec<SliceResult>> {
    in_krs_of_slice(&slice_of(st, fam, md)?)
}

/// The in-KRS comparison on an already computed slice.
pub fn in_krs_of_slice(slice: &SliceBasis) -> Result<Vec<SliceResult>> {
    let md = &slice.multidegree;
    let krs_set: BTreeSet<Monomial> =
        slice.standard_basis.iter().map(krs::forward_monomial).collect::<Result<_>>()?;
    let ini = slice.initial_set();
    let mut hilbert = SliceResult::new("hilbert", Some(md.clone()));
    let sizes = (slice.standard_basis.len(), slice.rank(), ini.len(), krs_set.len());
    hilbert.record(sizes.0 == sizes.1 && sizes.1 == sizes.2 && sizes.2 == sizes.3, || {
        json!({"basis": sizes.0, "rank": sizes.1, "initial": sizes.2, "krs": sizes.3})
    });
    let mut eq = SliceResult::new("in-krs", Some(md.clone()));
    eq.record(krs_set == ini, || {
        json!({
            "krs_not_initial": monomial_list(krs_set.difference(&ini).cloned()),
            "initial_not_krs": monomial_list(ini.difference(&krs_set).cloned()),
        })
    });
    Ok(vec![hilbert, eq])
}

/// `ini(I) = KRS(I)` on every slice up to `degree_bound`.
pub fn check_in_krs(st: &Straightener, fam: &IdealFamily, degree_bound: usize) -> Result<Report> {
    let mut report = Report::new("in-krs", fam.grid).param("family", &fam.kind).param("degree_bound", degree_bound);
    let mds = multidegrees_up_to(fam.grid, degree_bound);
    for r in crate::par_map(mds, |md| check_in_krs_slice(st, fam, &md)) {
        report.extend(r?);
    }
    Ok(report)
}

/// Result of the witness search for one standard basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkrsSearch {
    pub sigma: Bitableau,
    pub monomial: Monomial,
    pub witness: Option<Bitableau>,
    /// Every bitableau with initial monomial `KRS(Σ)` and whether it lies in
    /// the family.
    pub candidates: Vec<(Bitableau, bool)>,
}

impl GkrsSearch {
    pub fn candidate_shapes(&self) -> BTreeSet<Shape> {
        self.candidates.iter().map(|(b, _)| b.shape()).collect()
    }
}

/// Searches the inc-decompositions of `KRS(Σ)` for a bitableau inside the
/// family.
pub fn gkrs_search(st: &Straightener, fam: &IdealFamily, sigma: &Bitableau) -> Result<GkrsSearch> {
    let monomial = krs::forward_monomial(sigma)?;
    let mut candidates = Vec::new();
    for d in bitableaux_with_initial(&monomial) {
        let inside = fam.contains_bitableau(st, &d)?;
        candidates.push((d, inside));
    }
    let witness = candidates.iter().find(|(_, inside)| *inside).map(|(d, _)| d.clone());
    Ok(GkrsSearch { sigma: sigma.clone(), monomial, witness, candidates })
}

/// For every standard basis element up to `degree_bound` some bitableau
/// `Δ ∈ I` has `ini(Δ) = KRS(Σ)`. Where the slice has at most
/// `cross_check_limit` monomials, rule-based membership of each candidate
/// is also compared with membership by straightening.
pub fn check_gkrs(st: &Straightener, fam: &IdealFamily, degree_bound: usize, cross_check_limit: usize) -> Result<Report> {
    let mut report = Report::new("g-krs", fam.grid)
        .param("family", &fam.kind)
        .param("degree_bound", degree_bound)
        .param("cross_check_limit", cross_check_limit);
    let mds = multidegrees_up_to(fam.grid, degree_bound);
    let per_slice = crate::par_map(mds, |md| -> Result<Vec<SliceResult>> {
        let mut found = SliceResult::new("g-krs", Some(md.clone()));
        let mut routes = SliceResult::new("membership-routes", Some(md.clone()));
        let basis = fam.standard_basis(&md);
        if basis.is_empty() {
            return Ok(Vec::new());
        }
        let cross = monomials_of_multidegree(&md).len() <= cross_check_limit;
        for s in &basis {
            let search = gkrs_search(st, fam, s)?;
            found.record(search.witness.is_some(), || {
                json!({"sigma": s.to_string(), "monomial": search.monomial.to_string(), "candidates": search.candidates.len()})
            });
            if cross {
                for (d, inside) in &search.candidates {
                    if fam.rule(d).is_some() {
                        let by_straightening = fam.contains_by_straightening(st, d)?;
                        routes.record(by_straightening == *inside, || {
                            json!({"bitableau": d.to_string(), "rule": inside, "straightening": by_straightening})
                        });
                    }
                }
            }
        }
        Ok(vec![found, routes])
    });
    for r in per_slice {
        report.extend(r?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::expand_minor;

    fn g(m: usize, n: usize) -> GridSize {
        GridSize::new(m, n).unwrap()
    }

    fn bt(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    fn mn(s: &str) -> Minor {
        s.parse().unwrap()
    }

    #[test]
    fn predicate_examples() {
        let it2 = IdealFamily::it(g(2, 2), 2).unwrap();
        assert!(it2.predicate(&bt("[1,2|1,2]")).unwrap());
        assert!(!it2.predicate(&bt("[1|1]·[2|2]")).unwrap());
        let sym = IdealFamily::symbolic(g(6, 6), 2, 2).unwrap();
        assert!(sym.predicate(&bt("[1,3,4,5|1,2,3,6]·[2,6|4,5]")).unwrap());
        let cog = IdealFamily::cogenerated(g(2, 2), mn("[1|1]")).unwrap();
        // I([1|1],X) = I_2
        assert!(cog.predicate(&bt("[1,2|1,2]")).unwrap());
        assert!(!cog.predicate(&bt("[1|2]")).unwrap());
        assert_eq!(cog.predicate(&bt("[2|1]·[1|2]")), Err(Error::NotStandard));
    }

    #[test]
    fn cogenerated_by_small_principal_minor_is_it() {
        let grid = g(3, 3);
        let cog = IdealFamily::cogenerated(grid, mn("[1|1]")).unwrap();
        let i2 = IdealFamily::it(grid, 2).unwrap();
        for s in enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(3)) {
            assert_eq!(cog.predicate(&s).unwrap(), i2.predicate(&s).unwrap(), "{s}");
        }
    }

    #[test]
    fn validation() {
        assert!(IdealFamily::it(g(2, 3), 3).is_err());
        assert!(IdealFamily::symbolic(g(2, 3), 2, 0).is_err());
        assert!(IdealFamily::cogenerated(g(2, 2), mn("[1|3]")).is_err());
        assert!(IdealFamily::new(FamilyKind::Sum { members: vec![] }, g(2, 2)).is_err());
        let sigma = bt("[1|1]");
        assert!(IdealFamily::new(FamilyKind::PrincipalPlusPower { sigma, power: 1 }, g(2, 2)).is_err());
    }

    #[test]
    fn slice_examples() {
        let st = Straightener::new(g(2, 2));
        let fam = IdealFamily::it(g(2, 2), 2).unwrap();
        let md = Multidegree::new(vec![1, 1], vec![1, 1]).unwrap();
        let s = slice_of(&st, &fam, &md).unwrap();
        assert_eq!(s.standard_basis, vec![bt("[1,2|1,2]")]);
        assert_eq!(s.initial_monomials, vec![Monomial::from_factors([(1, 1), (2, 2)])]);

        let st1 = Straightener::new(g(1, 1));
        let fam = IdealFamily::it(g(1, 1), 1).unwrap();
        let s = slice_of(&st1, &fam, &Multidegree::new(vec![2], vec![2]).unwrap()).unwrap();
        assert_eq!(s.initial_monomials, vec![Monomial::from_factors([(1, 1), (1, 1)])]);

        let grid = g(3, 3);
        let st3 = Straightener::new(grid);
        let fam = IdealFamily::symbolic(grid, 2, 2).unwrap();
        let m = Monomial::from_factors([(1, 2), (2, 3), (2, 1), (3, 2)]);
        let s = slice_of(&st3, &fam, &m.multidegree(grid)).unwrap();
        assert!(s.initial_monomials.contains(&m));
        assert_eq!(s.rank(), s.standard_basis.len());
    }

    #[test]
    fn membership_examples() {
        let grid = g(2, 2);
        let st = Straightener::new(grid);
        let it2 = IdealFamily::it(grid, 2).unwrap();
        assert!(it2.membership(&st, &expand_minor(&mn("[1,2|1,2]"))).unwrap());
        assert!(!it2.membership(&st, &Polynomial::var(1, 1)).unwrap());

        let grid = g(3, 3);
        let st = Straightener::new(grid);
        let pi = mn("[1,2,3|1,2,3]");
        let rho = mn("[2|3]");
        let f = &expand_minor(&pi) * &expand_minor(&rho);
        let fam = IdealFamily::product(grid, vec![2, 2]).unwrap();
        assert!(fam.membership(&st, &f).unwrap());
    }

    #[test]
    fn in_krs_for_it_and_symbolic() {
        let grid = g(3, 3);
        let st = Straightener::new(grid);
        for t in 1..=3 {
            let r = check_in_krs(&st, &IdealFamily::it(grid, t).unwrap(), 3).unwrap();
            assert!(r.passed(), "I_{t}");
        }
        let r = check_in_krs(&st, &IdealFamily::symbolic(grid, 2, 2).unwrap(), 4).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn in_krs_fails_for_principal_plus_power() {
        // a standard bitableau whose initial monomial differs from its image
        let grid = g(3, 3);
        let st = Straightener::new(grid);
        let sigma = enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(3))
            .into_iter()
            .find(|s| krs::forward_monomial(s).unwrap() != Monomial::diagonal_of_bitableau(s))
            .unwrap();
        let md = sigma.multidegree(grid);
        let fam = IdealFamily::new(FamilyKind::PrincipalPlusPower { sigma: sigma.clone(), power: 4 }, grid).unwrap();
        let results = check_in_krs_slice(&st, &fam, &md).unwrap();
        assert!(results[0].pass);
        assert!(!results[1].pass);
    }

    #[test]
    fn gkrs_small_instances() {
        let grid = g(3, 3);
        let st = Straightener::new(grid);
        for fam in [
            IdealFamily::jkd(grid, 2, 3).unwrap(),
            IdealFamily::symbolic(grid, 2, 2).unwrap(),
            IdealFamily::cogenerated(grid, mn("[1,2|2,3]")).unwrap(),
        ] {
            let r = check_gkrs(&st, &fam, 4, 200).unwrap();
            assert!(r.passed(), "{fam}");
            assert!(r.checked("membership-routes") > 0);
        }
    }

    #[test]
    fn family_json() {
        let k = FamilyKind::Intersection {
            members: vec![FamilyKind::ItSymbolic { t: 3, k: 2 }, FamilyKind::It { t: 4 }],
        };
        let v = serde_json::to_value(&k).unwrap();
        assert_eq!(
            v,
            json!({"kind": "intersection", "members": [{"kind": "it-symbolic", "t": 3, "k": 2}, {"kind": "it", "t": 4}]})
        );
        assert_eq!(serde_json::from_value::<FamilyKind>(v).unwrap(), k);
        assert_eq!(k.to_string(), "(I_3^(2) ∩ I_4)");
    }
}
