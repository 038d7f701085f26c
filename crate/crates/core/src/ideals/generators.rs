//! Slices of products of determinantal ideals computed from their
//! generators: products of minors of prescribed sizes times monomials.

use crate::error::Result;
use crate::linalg::Echelon;
use crate::polyring::{monomials_of_multidegree, Monomial, Multidegree, Polynomial};
use crate::straighten::Straightener;
use crate::tableaux::{Bitableau, GridSize, Minor};

use super::MonomialIndex;

/// Products `μ_1⋯μ_r` with `|μ_i| = sizes[i]` (sizes of 0 are dropped)
/// whose multidegree is at most `md`, each paired with the leftover
/// multidegree.
pub fn minor_products(grid: GridSize, sizes: &[usize], md: &Multidegree) -> Vec<(Bitableau, Multidegree)> {
    let mut sizes: Vec<usize> = sizes.iter().copied().filter(|&s| s > 0).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let by_size: Vec<Vec<Minor>> =
        (0..=grid.min_dim()).map(|t| if t == 0 { Vec::new() } else { Minor::all_of_size(grid, t) }).collect();
    if sizes.first().is_some_and(|&s| s > grid.min_dim()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rest = md.clone();
    let mut cur: Vec<Minor> = Vec::new();
    rec(&sizes, &by_size, &mut rest, &mut cur, 0, &mut out);
    out
}

fn rec(
    sizes: &[usize],
    by_size: &[Vec<Minor>],
    rest: &mut Multidegree,
    cur: &mut Vec<Minor>,
    start: usize,
    out: &mut Vec<(Bitableau, Multidegree)>,
) {
    let pos = cur.len();
    let Some(&size) = sizes.get(pos) else {
        out.push((Bitableau::new(cur.clone()), rest.clone()));
        return;
    };
    // equal consecutive sizes are chosen in non-decreasing index order
    let from = if pos > 0 && sizes[pos - 1] == size { start } else { 0 };
    for idx in from..by_size[size].len() {
        let minor = &by_size[size][idx];
        if !rest.try_remove_minor(minor) {
            continue;
        }
        cur.push(minor.clone());
        rec(sizes, by_size, rest, cur, idx, out);
        cur.pop();
        rest.restore_minor(minor);
    }
}

/// The slice of `I_{s_1}⋯I_{s_r}` in one multidegree, spanned by generator
/// products.
#[derive(Debug)]
pub struct GeneratorSpan {
    pub multidegree: Multidegree,
    index: MonomialIndex,
    echelon: Echelon,
}

impl GeneratorSpan {
    pub fn build(st: &Straightener, sizes: &[usize], md: &Multidegree) -> Result<Self> {
        let index = MonomialIndex::new(md);
        let mut echelon = Echelon::new();
        let mut label = 0;
        for (b, leftover) in minor_products(st.grid(), sizes, md) {
            let base = st.expand(&b);
            for m in monomials_of_multidegree(&leftover) {
                let f = &base * &Polynomial::from_monomial(m);
                echelon.insert(index.coords(&f)?, label);
                label += 1;
                if echelon.rank() == index.len() {
                    break;
                }
            }
        }
        Ok(GeneratorSpan { multidegree: md.clone(), index, echelon })
    }

    pub fn dimension(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        let v = self.index.coords(f)?;
        let q: Vec<_> = v.into_iter().map(|(i, c)| (i, num_rational::BigRational::from_integer(c))).collect();
        Ok(self.echelon.contains(&q))
    }

    /// Initial monomials of the span, descending.
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.echelon.pivots().into_iter().map(|c| self.index.monomials[c].clone()).collect()
    }
}
