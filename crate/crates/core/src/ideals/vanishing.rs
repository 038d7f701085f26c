//! Orders of vanishing at points of determinantal varieties.
//!
//! For a prime `P` in characteristic 0, `f ∈ P^{(k)}` iff every partial
//! derivative of order `< k` vanishes on `V(P)`. Points are sampled from
//! seeded parametrizations of `V(I_t)` and `V(I(δ,X))`; a single point
//! with `ord_p(f) < k` certifies `f ∉ P^{(k)}`, while agreement on many
//! points is only evidence.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{kernel, to_integer_vec, Echelon};
use crate::polyring::{monomials_of_multidegree, Monomial, Multidegree};
use crate::tableaux::{Bitableau, GridSize, Minor};

/// A point of the `m×n` affine space, 1-based access through [`Point::at`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    entries: Vec<Vec<BigRational>>,
}

impl Point {
    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Point { entries: rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }
}

/// Rank of a dense rational matrix.
pub fn rank(matrix: &[Vec<BigRational>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    cols - kernel(matrix, cols).len()
}

/// `|μ| − rank p[μ]`, the order of vanishing of the minor `μ` at `p`.
pub fn minor_order(p: &Point, mu: &Minor) -> usize {
    let sub: Vec<Vec<BigRational>> =
        mu.rows().iter().map(|&i| mu.cols().iter().map(|&j| p.at(i, j).clone()).collect()).collect();
    mu.size() - rank(&sub)
}

/// Order of vanishing of a product of minors: the sum over its factors.
pub fn bitableau_order(p: &Point, b: &Bitableau) -> usize {
    b.factors().iter().map(|mu| minor_order(p, mu)).sum()
}

/// Seeded sampler of points on determinantal varieties.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    grid: GridSize,
}

impl Sampler {
    pub fn new(grid: GridSize, seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), grid }
    }

    fn small(&mut self) -> BigRational {
        let mut x = 0i64;
        while x == 0 {
            x = self.rng.gen_range(-5..=5);
        }
        BigRational::from_integer(BigInt::from(x))
    }

    /// `U·V` where row `i` of `U` may use the first `p(i)` coordinates and
    /// column `j` of `V` the first `q(j)`.
    fn factored(&mut self, r: usize, p: impl Fn(usize) -> usize, q: impl Fn(usize) -> usize) -> Point {
        let (m, n) = (self.grid.m, self.grid.n);
        let u: Vec<Vec<BigRational>> =
            (1..=m).map(|i| (0..r).map(|c| if c < p(i) { self.small() } else { BigRational::zero() }).collect()).collect();
        let v: Vec<Vec<BigRational>> =
            (0..r).map(|c| (1..=n).map(|j| if c < q(j) { self.small() } else { BigRational::zero() }).collect()).collect();
        let entries = (0..m)
            .map(|i| (0..n).map(|j| (0..r).fold(BigRational::zero(), |acc, c| acc + &u[i][c] * &v[c][j])).collect())
            .collect();
        Point { entries }
    }

    /// A point of `V(I_t)`: a matrix of rank at most `t−1`.
    pub fn rank_point(&mut self, t: usize) -> Point {
        self.factored(t.saturating_sub(1), |_| usize::MAX, |_| usize::MAX)
    }

    /// A point of `V(I(δ,X))` for `δ = [a_1..a_r | b_1..b_r]`: the first
    /// `a_k − 1` rows and the first `b_k − 1` columns have rank below `k`,
    /// and the whole matrix has rank at most `r`.
    pub fn cogenerated_point(&mut self, delta: &Minor) -> Point {
        let a = delta.rows().to_vec();
        let b = delta.cols().to_vec();
        self.factored(delta.size(), |i| a.iter().filter(|&&x| x <= i).count(), |j| b.iter().filter(|&&x| x <= j).count())
    }
}

/// `∂^β M` evaluated at `p`.
pub fn derivative_at(m: &Monomial, beta: &Monomial, p: &Point) -> BigRational {
    if !beta.divides(m) {
        return BigRational::zero();
    }
    let mut out = BigRational::one();
    for &(i, j, e) in m.cells() {
        let b = beta.exponent(i, j);
        let falling: u64 = ((e - b + 1)..=e).map(u64::from).product();
        out *= BigRational::from_integer(BigInt::from(falling));
        let x = p.at(i, j);
        for _ in 0..(e - b) {
            out *= x;
        }
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Divisors of the given monomials of degree `< k`.
fn small_divisors(ms: &[Monomial], k: usize) -> Vec<Monomial> {
    let mut out = BTreeSet::new();
    for m in ms {
        let cells = m.cells();
        let mut stack = vec![(0usize, Monomial::one())];
        while let Some((pos, cur)) = stack.pop() {
            if pos == cells.len() {
                out.insert(cur);
                continue;
            }
            let (i, j, e) = cells[pos];
            for b in 0..=e {
                if cur.degree() + b as usize >= k {
                    break;
                }
                stack.push((pos + 1, cur.mul(&Monomial::var(i, j).pow(b))));
            }
        }
    }
    out.into_iter().collect()
}

/// The slice of `P^{(k)}` in one multidegree estimated from vanishing
/// conditions at sample points.
#[derive(Clone, Debug)]
pub struct SymbolicSlice {
    pub multidegree: Multidegree,
    pub dimension: usize,
    /// Initial monomials of the slice, descending.
    pub initial_monomials: Vec<Monomial>,
    pub points_used: usize,
}

/// Adds sample points until the solution space has not shrunk for
/// `patience` consecutive points.
pub fn symbolic_slice(
    md: &Multidegree,
    k: usize,
    mut next_point: impl FnMut() -> Point,
    patience: usize,
) -> SymbolicSlice {
    let monomials = monomials_of_multidegree(md);
    let betas = small_divisors(&monomials, k);
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut dim = monomials.len();
    let mut calm = 0;
    let mut points_used = 0;
    let mut basis = kernel(&rows, monomials.len());
    while calm < patience && dim > 0 {
        let p = next_point();
        points_used += 1;
        for beta in &betas {
            rows.push(monomials.iter().map(|m| derivative_at(m, beta, &p)).collect());
        }
        basis = kernel(&rows, monomials.len());
        if basis.len() < dim {
            dim = basis.len();
            calm = 0;
        } else {
            calm += 1;
        }
    }
    let mut e = Echelon::new();
    for (label, v) in basis.iter().enumerate() {
        let sparse: Vec<(usize, BigRational)> =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
        e.insert(to_integer_vec(&sparse), label);
    }
    SymbolicSlice {
        multidegree: md.clone(),
        dimension: dim,
        initial_monomials: e.pivots().into_iter().map(|c| monomials[c].clone()).collect(),
        points_used,
    }
}
