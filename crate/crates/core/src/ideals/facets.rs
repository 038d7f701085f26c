//! Stanley–Reisner complexes of initial ideals: facets of `Δ_t`, membership
//! in `ini(I_t)^{(k)} = ∩_F P_F^k` and in the decomposition of
//! `ini(I_t^k)`, and the slice-wise comparison with symbolic powers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::invariants::w_monomial;
use crate::polyring::Monomial;
use crate::report::{Report, SliceResult};
use crate::straighten::Straightener;
use crate::tableaux::{GridSize, Minor};

use super::generators::GeneratorSpan;
use super::{multidegrees_up_to, slice_of, IdealFamily, MonomialIndex};

/// Node cap used when none is given.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// A facet, as a sorted set of cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub cells: Vec<(usize, usize)>,
}

impl Facet {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// Total exponent of `m` on the cells outside the facet, i.e. the
    /// largest `k` with `m ∈ P_F^k`.
    pub fn outside_degree(&self, m: &Monomial) -> usize {
        m.cells().iter().filter(|&&(i, j, _)| !self.contains((i, j))).map(|&(_, _, e)| e as usize).sum()
    }
}

/// A simplicial complex on the cells of a grid given by its minimal
/// non-faces.
#[derive(Clone, Debug)]
pub struct Complex {
    grid: GridSize,
    non_faces: Vec<u64>,
}

fn cell_bit(grid: GridSize, (i, j): (usize, usize)) -> u64 {
    1u64 << ((i - 1) * grid.n + (j - 1))
}

impl Complex {
    /// The complex whose non-faces are the given cell sets.
    pub fn from_non_faces(grid: GridSize, non_faces: impl IntoIterator<Item = Vec<(usize, usize)>>) -> Result<Self> {
        if grid.num_cells() > 64 {
            return Err(Error::invalid(format!("the {grid} grid has more than 64 cells")));
        }
        let mut masks: Vec<u64> =
            non_faces.into_iter().map(|cells| cells.into_iter().fold(0, |acc, c| acc | cell_bit(grid, c))).collect();
        masks.sort_unstable();
        masks.dedup();
        Ok(Complex { grid, non_faces: masks })
    }

    /// `Δ_t`: cell sets without a `t`-diagonal.
    pub fn delta_t(grid: GridSize, t: usize) -> Result<Self> {
        if !(1..=grid.min_dim()).contains(&t) {
            return Err(Error::invalid(format!("t = {t} is outside 1..={}", grid.min_dim())));
        }
        Self::from_non_faces(grid, Minor::all_of_size(grid, t).iter().map(|m| m.diagonal().collect()))
    }

    /// The complex of `ini(I(δ,X))`: no main diagonal of a minor `μ ⋡ δ`.
    pub fn cogenerated(grid: GridSize, delta: &Minor) -> Result<Self> {
        let gens = Minor::all(grid).into_iter().filter(|mu| !mu.is_empty() && !delta.precedes(mu));
        Self::from_non_faces(grid, gens.map(|m| m.diagonal().collect()).collect::<Vec<_>>())
    }

    pub fn grid(&self) -> GridSize {
        self.grid
    }

    pub fn is_face(&self, cells: &[(usize, usize)]) -> bool {
        let mask = cells.iter().fold(0, |acc, &c| acc | cell_bit(self.grid, c));
        self.non_faces.iter().all(|&f| f & !mask != 0)
    }

    /// All facets, by depth-first search over cells in row-major order.
    /// Fails with `BudgetExceeded` after `budget` search nodes.
    pub fn facets(&self, budget: u64) -> Result<Vec<Facet>> {
        let cells: Vec<(usize, usize)> = self.grid.cells().collect();
        let mut search = Search { complex: self, n: cells.len(), nodes: 0, budget, out: Vec::new() };
        search.visit(0, 0, 0)?;
        let mut facets: Vec<Facet> = search
            .out
            .into_iter()
            .map(|mask| Facet { cells: cells.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, c)| *c).collect() })
            .collect();
        facets.sort();
        Ok(facets)
    }
}

struct Search<'a> {
    complex: &'a Complex,
    n: usize,
    nodes: u64,
    budget: u64,
    out: Vec<u64>,
}

impl Search<'_> {
    fn addable(&self, face: u64, bit: u64) -> bool {
        let with = face | bit;
        self.complex.non_faces.iter().all(|&f| f & bit == 0 || f & !with != 0)
    }

    fn visit(&mut self, pos: usize, face: u64, excluded: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if pos == self.n {
            let mut rest = excluded;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if self.addable(face, bit) {
                    return Ok(());
                }
                rest &= rest - 1;
            }
            self.out.push(face);
            return Ok(());
        }
        let bit = 1u64 << pos;
        if self.addable(face, bit) {
            self.visit(pos + 1, face | bit, excluded)?;
        }
        // leaving the cell out only leads to a facet if some later cell can
        // still block it
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let later = all & !(bit << 1).wrapping_sub(1);
        let blockable = self.complex.non_faces.iter().any(|&f| f & bit != 0 && (f & !bit) & !(face | later) == 0);
        if blockable {
            self.visit(pos + 1, face, excluded | bit)?;
        }
        Ok(())
    }
}

/// The facets of `Δ_t`.
pub fn facets(grid: GridSize, t: usize, budget: u64) -> Result<Vec<Facet>> {
    Complex::delta_t(grid, t)?.facets(budget)
}

/// `mn − (m−t+1)(n−t+1)`, the common size of the facets of `Δ_t`.
pub fn expected_facet_size(grid: GridSize, t: usize) -> usize {
    grid.num_cells() - (grid.m + 1 - t) * (grid.n + 1 - t)
}

pub fn is_pure(facets: &[Facet]) -> bool {
    facets.windows(2).all(|w| w[0].len() == w[1].len())
}

/// `M ∈ ∩_F P_F^k`.
pub fn in_symbolic_power(facets: &[Facet], m: &Monomial, k: usize) -> bool {
    facets.iter().all(|f| f.outside_degree(m) >= k)
}

/// `M ∈ ini(I_t)^{(k)}` on `grid`.
pub fn monomial_symbolic_membership(grid: GridSize, m: &Monomial, t: usize, k: usize) -> Result<bool> {
    Ok(in_symbolic_power(&facets(grid, t, DEFAULT_BUDGET)?, m, k))
}

/// Facets of `Δ_1, …, Δ_t` for repeated membership tests.
#[derive(Clone, Debug)]
pub struct FacetTower {
    pub grid: GridSize,
    /// `levels[j-1]` holds the facets of `Δ_j`.
    pub levels: Vec<Vec<Facet>>,
}

impl FacetTower {
    pub fn new(grid: GridSize, t: usize, budget: u64) -> Result<Self> {
        let levels = (1..=t).map(|j| facets(grid, j, budget)).collect::<Result<_>>()?;
        Ok(FacetTower { grid, levels })
    }

    pub fn top(&self) -> usize {
        self.levels.len()
    }

    /// `M ∈ ∩_F∈F_t P_F^k`.
    pub fn symbolic(&self, m: &Monomial, k: usize) -> bool {
        in_symbolic_power(&self.levels[self.top() - 1], m, k)
    }

    /// `M ∈ ∩_{j≤t} ∩_{F∈F_j} P_F^{k(t+1−j)}`.
    pub fn power_decomposition(&self, m: &Monomial, k: usize) -> bool {
        let t = self.top();
        (1..=t).all(|j| in_symbolic_power(&self.levels[j - 1], m, k * (t + 1 - j)))
    }
}

fn set_diff(a: &BTreeSet<Monomial>, b: &BTreeSet<Monomial>) -> serde_json::Value {
    json!(a.difference(b).map(|m| m.to_string()).collect::<Vec<_>>())
}

/// Slice-wise comparison, for all multidegrees up to `degree_bound`, of
///
/// * `ini(I_t^{(k)})` (straightening and echelon),
/// * `∩_{F∈F_t} P_F^k`,
/// * `{M : deg M − w_t(M) ≥ k}`,
///
/// and of
///
/// * `ini(I_t^k)` from the span of generator products,
/// * `ini` of the `ProductOfIt(t,…,t)` standard-basis slice,
/// * `∩_{j≤t} ∩_{F∈F_j} P_F^{k(t+1−j)}`.
pub fn verify_symbolic_initial(
    st: &Straightener,
    t: usize,
    k: usize,
    degree_bound: usize,
    budget: u64,
) -> Result<Report> {
    let grid = st.grid();
    let tower = FacetTower::new(grid, t, budget)?;
    let symbolic = IdealFamily::symbolic(grid, t, k)?;
    let power = IdealFamily::product(grid, vec![t; k])?;
    let mut report = Report::new("symb-in", grid).param("t", t).param("k", k).param("degree_bound", degree_bound);
    let mds = multidegrees_up_to(grid, degree_bound);
    let per_slice = crate::par_map(mds, |md| -> Result<Vec<SliceResult>> {
        let idx = MonomialIndex::new(&md);
        let ini_symbolic = slice_of(st, &symbolic, &md)?.initial_set();
        let facet_side: BTreeSet<Monomial> = idx.monomials.iter().filter(|m| tower.symbolic(m, k)).cloned().collect();
        let w_side: BTreeSet<Monomial> =
            idx.monomials.iter().filter(|m| m.degree() >= k + w_monomial(t, m)).cloned().collect();
        let ini_power_pred = slice_of(st, &power, &md)?.initial_set();
        let ini_power_gen: BTreeSet<Monomial> = if md.total() >= t * k {
            GeneratorSpan::build(st, &vec![t; k], &md)?.initial_monomials().into_iter().collect()
        } else {
            BTreeSet::new()
        };
        let decomposition: BTreeSet<Monomial> =
            idx.monomials.iter().filter(|m| tower.power_decomposition(m, k)).cloned().collect();

        let mut a = SliceResult::new("symbolic=facets", Some(md.clone()));
        a.record(ini_symbolic == facet_side, || {
            json!({"ini_only": set_diff(&ini_symbolic, &facet_side), "facets_only": set_diff(&facet_side, &ini_symbolic)})
        });
        let mut b = SliceResult::new("facets=w", Some(md.clone()));
        b.record(facet_side == w_side, || {
            json!({"facets_only": set_diff(&facet_side, &w_side), "w_only": set_diff(&w_side, &facet_side)})
        });
        let mut c = SliceResult::new("power-generators=predicate", Some(md.clone()));
        c.record(ini_power_gen == ini_power_pred, || {
            json!({"generators_only": set_diff(&ini_power_gen, &ini_power_pred), "predicate_only": set_diff(&ini_power_pred, &ini_power_gen)})
        });
        let mut d = SliceResult::new("power=decomposition", Some(md.clone()));
        d.record(ini_power_gen == decomposition, || {
            json!({"generators_only": set_diff(&ini_power_gen, &decomposition), "decomposition_only": set_diff(&decomposition, &ini_power_gen)})
        });
        Ok(vec![a, b, c, d])
    });
    for r in per_slice {
        report.extend(r?);
    }
    Ok(report)
}

/// Facet purity of `Δ_t` with the expected facet size, for all `t`.
pub fn check_purity(grid: GridSize, budget: u64) -> Result<SliceResult> {
    let mut s = SliceResult::new(format!("purity {grid}"), None);
    for t in 1..=grid.min_dim() {
        let fs = facets(grid, t, budget)?;
        let want = expected_facet_size(grid, t);
        s.record(!fs.is_empty() && fs.iter().all(|f| f.len() == want), || {
            json!({"t": t, "expected": want, "sizes": fs.iter().map(Facet::len).collect::<BTreeSet<_>>()})
        });
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomials_of_degree;

    fn g(m: usize, n: usize) -> GridSize {
        GridSize::new(m, n).unwrap()
    }

    /// Maximal diagonal-free sets by brute force over all subsets.
    fn brute_facets(grid: GridSize, t: usize) -> Vec<Facet> {
        let cells: Vec<(usize, usize)> = grid.cells().collect();
        let chain = |set: &[(usize, usize)]| {
            let mut best = vec![0usize; set.len()];
            for a in 0..set.len() {
                best[a] = 1 + (0..a).filter(|&b| set[b].0 < set[a].0 && set[b].1 < set[a].1).map(|b| best[b]).max().unwrap_or(0);
            }
            best.into_iter().max().unwrap_or(0)
        };
        let faces: Vec<u32> = (0u32..1 << cells.len())
            .filter(|&mask| {
                let set: Vec<_> = (0..cells.len()).filter(|b| mask >> b & 1 == 1).map(|b| cells[b]).collect();
                chain(&set) < t
            })
            .collect();
        let face_set: BTreeSet<u32> = faces.iter().copied().collect();
        let mut out: Vec<Facet> = faces
            .iter()
            .filter(|&&f| (0..cells.len()).all(|b| f >> b & 1 == 1 || !face_set.contains(&(f | 1 << b))))
            .map(|&f| Facet { cells: (0..cells.len()).filter(|b| f >> b & 1 == 1).map(|b| cells[b]).collect() })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn two_by_two() {
        let fs = facets(g(2, 2), 2, 1000).unwrap();
        assert_eq!(
            fs,
            vec![Facet { cells: vec![(1, 1), (1, 2), (2, 1)] }, Facet { cells: vec![(1, 2), (2, 1), (2, 2)] }]
        );
        assert_eq!(facets(g(3, 4), 1, 1000).unwrap(), vec![Facet { cells: vec![] }]);
    }

    #[test]
    fn search_matches_brute_force() {
        for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 3)] {
            let grid = g(m, n);
            for t in 1..=grid.min_dim() {
                assert_eq!(facets(grid, t, DEFAULT_BUDGET).unwrap(), brute_facets(grid, t), "{grid} t={t}");
            }
        }
    }

    #[test]
    fn purity_on_small_grids() {
        for m in 1..=4 {
            for n in 1..=4 {
                assert!(check_purity(g(m, n), DEFAULT_BUDGET).unwrap().pass, "{m}x{n}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(facets(g(3, 3), 2, 1), Err(Error::BudgetExceeded(1)));
    }

    #[test]
    fn membership_examples() {
        let x = |c: &[(usize, usize)]| Monomial::from_factors(c.iter().copied());
        let grid = g(2, 2);
        assert!(monomial_symbolic_membership(grid, &x(&[(1, 1), (1, 1), (2, 2), (2, 2)]), 2, 2).unwrap());
        assert!(!monomial_symbolic_membership(grid, &x(&[(1, 1), (2, 2)]), 2, 2).unwrap());
        let grid = g(3, 3);
        assert!(monomial_symbolic_membership(grid, &x(&[(1, 2), (2, 3), (2, 1), (3, 2)]), 2, 2).unwrap());
    }

    #[test]
    fn facet_membership_agrees_with_w() {
        let grid = g(3, 3);
        let fs = facets(grid, 2, DEFAULT_BUDGET).unwrap();
        for d in 1..=4 {
            for m in monomials_of_degree(grid, d) {
                for k in 1..=3 {
                    assert_eq!(in_symbolic_power(&fs, &m, k), m.degree() >= k + w_monomial(2, &m), "{m} k={k}");
                }
            }
        }
    }

    #[test]
    fn cogenerated_complex_of_principal_minor_is_delta_t() {
        let grid = g(3, 3);
        for t in 2..=3 {
            let delta = Minor::principal(t - 1);
            let a = Complex::cogenerated(grid, &delta).unwrap().facets(DEFAULT_BUDGET).unwrap();
            assert_eq!(a, facets(grid, t, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn symbolic_initial_small() {
        let st = Straightener::new(g(2, 2));
        let r = verify_symbolic_initial(&st, 2, 2, 4, DEFAULT_BUDGET).unwrap();
        assert!(r.passed(), "{:?}", r.slices.iter().filter(|s| !s.pass).collect::<Vec<_>>());
        let st = Straightener::new(g(3, 3));
        let r = verify_symbolic_initial(&st, 2, 1, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.passed());
    }
}
