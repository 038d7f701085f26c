//! Sequence and shape statistics and their extension to monomials.
//!
//! A statistic `F` on bitableaux extends to monomials by
//! `F(M) = max { F(Δ) : ini(Δ) = M }`; the bitableaux with a given initial
//! monomial are exactly those read off the inc-decompositions of its
//! two-row array.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::krs::TwoRowArray;
use crate::polyring::Monomial;
use crate::tableaux::{Bitableau, Minor, Shape};

/// Length of the longest strictly increasing subsequence.
pub fn lis(b: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in b {
        let k = tails.partition_point(|&y| y < x);
        if k == tails.len() {
            tails.push(x);
        } else {
            tails[k] = x;
        }
    }
    tails.len()
}

/// Length of the longest non-increasing subsequence.
pub fn longest_non_increasing(b: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in b {
        // tails[k] is the largest possible last entry of such a subsequence
        // of length k + 1; tails is non-increasing
        let k = tails.partition_point(|&y| y >= x);
        if k == tails.len() {
            tails.push(x);
        } else {
            tails[k] = x;
        }
    }
    tails.len()
}

/// Shape of the insertion tableau of `b` (row insertion bumping the
/// leftmost entry `≥ x`, so rows increase strictly).
pub fn rsk_shape(b: &[usize]) -> Shape {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &v in b {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y >= x) {
                Some(k) => {
                    std::mem::swap(&mut rows[r][k], &mut x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    Shape::from_unsorted(rows.iter().map(Vec::len).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GreeneMode {
    BruteForce,
    ViaRsk,
}

fn subsequence(b: &[usize], mask: u64) -> Vec<usize> {
    b.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect()
}

fn max_feasible_subsequence(b: &[usize], feasible: impl Fn(&[usize]) -> bool) -> usize {
    assert!(b.len() < 64, "brute force over subsequences needs length < 64");
    (0u64..1 << b.len())
        .filter(|&mask| feasible(&subsequence(b, mask)))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `α_k(b)`: the longest subsequence that splits into `k` strictly
/// increasing subsequences.
pub fn greene_alpha(k: usize, b: &[usize], mode: GreeneMode) -> usize {
    match mode {
        // a sequence splits into k strictly increasing pieces iff it has no
        // non-increasing subsequence of length k + 1
        GreeneMode::BruteForce => max_feasible_subsequence(b, |s| longest_non_increasing(s) <= k),
        GreeneMode::ViaRsk => rsk_shape(b).alpha(k),
    }
}

/// `α_k*(b)`: the longest subsequence that splits into `k` non-increasing
/// subsequences.
pub fn greene_alpha_dual(k: usize, b: &[usize]) -> usize {
    max_feasible_subsequence(b, |s| lis(s) <= k)
}

/// `α_k*` read off the column lengths of the insertion tableau.
pub fn greene_alpha_dual_via_rsk(k: usize, b: &[usize]) -> usize {
    rsk_shape(b).conjugate().alpha(k)
}

pub fn gamma_shape(t: usize, s: &Shape) -> usize {
    s.gamma(t)
}

pub fn gamma_bitableau(t: usize, b: &Bitableau) -> usize {
    b.shape().gamma(t)
}

/// `γ_t` of the insertion shape of `b`.
pub fn gamma_sequence(t: usize, b: &[usize]) -> usize {
    rsk_shape(b).gamma(t)
}

/// `γ_t(M)`, maximised over all bitableaux with initial monomial `M`.
pub fn gamma_monomial(t: usize, m: &Monomial) -> usize {
    max_over_decompositions(m, |b| gamma_bitableau(t, b))
}

/// `α_k(M)`, maximised over all bitableaux with initial monomial `M`.
pub fn alpha_monomial(k: usize, m: &Monomial) -> usize {
    max_over_decompositions(m, |b| b.shape().alpha(k))
}

/// `w_t(b)`: longest subsequence without a strictly increasing subsequence
/// of length `t`.
pub fn w_sequence(t: usize, b: &[usize]) -> usize {
    max_feasible_subsequence(b, |s| lis(s) < t)
}

/// Longest chain of cells increasing strictly in both coordinates.
fn longest_diagonal(cells: &[(usize, usize)]) -> usize {
    let mut best = vec![1usize; cells.len()];
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| cells[i]);
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if cells[j].0 < cells[i].0 && cells[j].1 < cells[i].1 {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `w_t(M)`: largest sub-multiset of the factors of `M` containing no
/// `t`-diagonal. Works directly on cells, not on the two-row array.
pub fn w_monomial(t: usize, m: &Monomial) -> usize {
    let factors = m.factors();
    assert!(factors.len() < 64, "brute force over factors needs degree < 64");
    (0u64..1 << factors.len())
        .filter(|&mask| {
            let cells: Vec<(usize, usize)> =
                factors.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect();
            longest_diagonal(&cells) < t
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `γ_δ(μ) = max (i − j + 1)_+` over `i ≤ |μ|`, `j ≤ |δ| + 1` with
/// `c_i < a_j` or `d_i < b_j`, where `a_{r+1} = b_{r+1} = ∞`.
pub fn gamma_delta_minor(delta: &Minor, mu: &Minor) -> usize {
    let r = delta.size();
    let mut best = 0;
    for i in 1..=mu.size() {
        for j in 1..=(r + 1).min(i) {
            let below = j == r + 1
                || mu.rows()[i - 1] < delta.rows()[j - 1]
                || mu.cols()[i - 1] < delta.cols()[j - 1];
            if below {
                best = best.max(i - j + 1);
            }
        }
    }
    best
}

pub fn gamma_delta_bitableau(delta: &Minor, b: &Bitableau) -> usize {
    b.factors().iter().map(|mu| gamma_delta_minor(delta, mu)).sum()
}

pub fn gamma_delta_monomial(delta: &Minor, m: &Monomial) -> usize {
    max_over_decompositions(m, |b| gamma_delta_bitableau(delta, b))
}

/// A partition of the positions of a two-row array into blocks whose
/// lower entries increase strictly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncDecomposition {
    pub blocks: Vec<Vec<usize>>,
}

impl IncDecomposition {
    /// The product of the minors spelled by the blocks.
    pub fn bitableau(&self, array: &TwoRowArray) -> Bitableau {
        let pairs = array.pairs();
        Bitableau::new(
            self.blocks
                .iter()
                .map(|block| {
                    let rows = block.iter().map(|&i| pairs[i].0).collect();
                    let cols = block.iter().map(|&i| pairs[i].1).collect();
                    Minor::new(rows, cols).expect("blocks increase strictly in both rows")
                })
                .collect(),
        )
    }
}

/// Calls `visit` on every inc-decomposition of `array`.
pub fn for_each_inc_decomposition(array: &TwoRowArray, mut visit: impl FnMut(&IncDecomposition)) {
    fn rec(pos: usize, v: &[usize], cur: &mut IncDecomposition, visit: &mut dyn FnMut(&IncDecomposition)) {
        if pos == v.len() {
            visit(cur);
            return;
        }
        for b in 0..cur.blocks.len() {
            let last = *cur.blocks[b].last().expect("blocks are non-empty");
            if v[last] < v[pos] {
                cur.blocks[b].push(pos);
                rec(pos + 1, v, cur, visit);
                cur.blocks[b].pop();
            }
        }
        cur.blocks.push(vec![pos]);
        rec(pos + 1, v, cur, visit);
        cur.blocks.pop();
    }
    let v = array.lower();
    rec(0, &v, &mut IncDecomposition { blocks: Vec::new() }, &mut visit);
}

/// All inc-decompositions of `array` with their bitableaux.
pub fn inc_decompositions(array: &TwoRowArray) -> Vec<(IncDecomposition, Bitableau)> {
    let mut out = Vec::new();
    for_each_inc_decomposition(array, |d| out.push((d.clone(), d.bitableau(array))));
    out
}

/// The distinct bitableaux `Δ` with `ini(Δ) = M`, sorted.
pub fn bitableaux_with_initial(m: &Monomial) -> Vec<Bitableau> {
    let array = TwoRowArray::from_monomial(m);
    let mut out = BTreeSet::new();
    for_each_inc_decomposition(&array, |d| {
        out.insert(d.bitableau(&array));
    });
    out.into_iter().collect()
}

/// The shapes of all bitableaux with initial monomial `M`.
pub fn decomposition_shapes(m: &Monomial) -> BTreeSet<Shape> {
    let array = TwoRowArray::from_monomial(m);
    let mut out = BTreeSet::new();
    for_each_inc_decomposition(&array, |d| {
        out.insert(Shape::from_unsorted(d.blocks.iter().map(Vec::len).collect()));
    });
    out
}

fn max_over_decompositions(m: &Monomial, f: impl Fn(&Bitableau) -> usize) -> usize {
    let array = TwoRowArray::from_monomial(m);
    let mut best = 0;
    for_each_inc_decomposition(&array, |d| best = best.max(f(&d.bitableau(&array))));
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{expand_bitableau, monomials_of_degree};
    use crate::tableaux::GridSize;

    const FIG2: [usize; 6] = [4, 1, 2, 5, 6, 3];

    fn fig2_monomial() -> Monomial {
        Monomial::from_factors([(1, 4), (2, 1), (3, 2), (4, 5), (5, 6), (6, 3)])
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn lis_examples() {
        assert_eq!(lis(&FIG2), 4);
        assert_eq!(lis(&[]), 0);
        assert_eq!(lis(&[3, 2, 1]), 1);
        assert_eq!(lis(&[1, 1, 1]), 1);
        assert_eq!(longest_non_increasing(&[1, 1, 1]), 3);
        assert_eq!(longest_non_increasing(&[3, 1, 2, 2]), 3);
    }

    #[test]
    fn greene_examples() {
        for mode in [GreeneMode::BruteForce, GreeneMode::ViaRsk] {
            assert_eq!(greene_alpha(1, &FIG2, mode), 4);
            assert_eq!(greene_alpha(2, &FIG2, mode), 6);
            assert_eq!(greene_alpha(3, &[2, 1], mode), 2);
        }
        assert_eq!(greene_alpha_dual(1, &FIG2), 2);
        assert_eq!(greene_alpha_dual(1, &[3, 2, 1]), 3);
        assert_eq!(greene_alpha_dual(2, &[1, 2, 3]), 2);
    }

    #[test]
    fn greene_modes_agree_with_repeats() {
        let seqs: Vec<Vec<usize>> = (0..4usize.pow(6))
            .map(|code| (0..6).map(|i| code / 4usize.pow(i) % 4 + 1).collect())
            .collect();
        for b in &seqs {
            for k in 1..=3 {
                assert_eq!(greene_alpha(k, b, GreeneMode::BruteForce), greene_alpha(k, b, GreeneMode::ViaRsk), "{b:?}");
            }
        }
    }

    #[test]
    fn dual_greene_matches_columns_on_permutations() {
        for n in 0..=6 {
            for p in permutations(n) {
                for k in 1..=3 {
                    assert_eq!(greene_alpha_dual(k, &p), greene_alpha_dual_via_rsk(k, &p));
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let s = Shape::new(vec![4, 2]).unwrap();
        assert_eq!(gamma_shape(2, &s), 4);
        assert_eq!(gamma_shape(1, &s), 6);
        assert_eq!(gamma_monomial(2, &fig2_monomial()), 4);
        assert_eq!(gamma_sequence(2, &FIG2), 4);
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_sequence(2, &FIG2), 2);
        assert_eq!(w_sequence(2, &[1, 2, 3]), 1);
        // oracle only: the brute-force value for t = 3
        let w3 = w_sequence(3, &FIG2);
        assert_eq!(w3, greene_alpha_dual(2, &FIG2));
        assert_eq!(w3 + gamma_sequence(3, &FIG2), FIG2.len());
    }

    #[test]
    fn w_monomial_agrees_with_lower_row() {
        let g = GridSize::square(3).unwrap();
        for d in 0..=4 {
            for m in monomials_of_degree(g, d) {
                let lower = TwoRowArray::from_monomial(&m).lower();
                for t in 1..=3 {
                    assert_eq!(w_monomial(t, &m), w_sequence(t, &lower), "{m}");
                }
            }
        }
    }

    #[test]
    fn gamma_delta_examples() {
        let d11: Minor = "[1|1]".parse().unwrap();
        let mu: Minor = "[2,3|1,2]".parse().unwrap();
        assert_eq!(gamma_delta_minor(&d11, &mu), 1);
        assert_eq!(gamma_delta_minor(&d11, &mu), Bitableau::single(mu.clone()).shape().gamma(2));
        let d22: Minor = "[2|2]".parse().unwrap();
        assert_eq!(gamma_delta_minor(&d22, &"[1|1]".parse().unwrap()), 1);
        let delta: Minor = "[2,3|2,4]".parse().unwrap();
        for mu in Minor::all(GridSize::square(4).unwrap()) {
            if delta.precedes(&mu) {
                assert_eq!(gamma_delta_minor(&delta, &mu), 0, "{mu}");
            }
        }
    }

    #[test]
    fn gamma_delta_specialises_to_gamma_t() {
        let g = GridSize::square(4).unwrap();
        for t in 1..=4 {
            let delta = Minor::principal(t - 1);
            if delta.is_empty() {
                continue;
            }
            for mu in Minor::all(g) {
                assert_eq!(gamma_delta_minor(&delta, &mu), Bitableau::single(mu.clone()).shape().gamma(t));
            }
        }
    }

    /// Counts partitions of `0..n` into increasing blocks via restricted
    /// growth strings.
    fn count_decompositions(v: &[usize]) -> usize {
        fn rec(pos: usize, v: &[usize], labels: &mut Vec<usize>, blocks: usize) -> usize {
            if pos == v.len() {
                let ok = (0..blocks).all(|b| {
                    let vals: Vec<usize> = (0..v.len()).filter(|&i| labels[i] == b).map(|i| v[i]).collect();
                    vals.windows(2).all(|w| w[0] < w[1])
                });
                return ok as usize;
            }
            (0..=blocks)
                .map(|b| {
                    labels.push(b);
                    let c = rec(pos + 1, v, labels, blocks.max(b + 1));
                    labels.pop();
                    c
                })
                .sum()
        }
        rec(0, v, &mut Vec::new(), 0)
    }

    #[test]
    fn inc_decomposition_examples() {
        let a = TwoRowArray::from_monomial(&Monomial::from_factors([(1, 1), (2, 2)]));
        let mut bts: Vec<String> = inc_decompositions(&a).iter().map(|(_, b)| b.to_string()).collect();
        bts.sort();
        assert_eq!(bts, vec!["[1,2|1,2]", "[1|1]·[2|2]"]);

        let a = TwoRowArray::from_monomial(&Monomial::from_factors([(1, 2), (2, 1)]));
        let decs = inc_decompositions(&a);
        assert_eq!(decs.len(), 1);
        assert_eq!(decs[0].1, "[1|2]·[2|1]".parse().unwrap());

        let m = fig2_monomial();
        let a = TwoRowArray::from_monomial(&m);
        let decs = inc_decompositions(&a);
        assert_eq!(decs.len(), count_decompositions(&a.lower()));
        for (_, b) in &decs {
            assert_eq!(expand_bitableau(b).initial_monomial().unwrap(), m);
        }
    }

    #[test]
    fn decomposition_counts_match_oracle() {
        let g = GridSize::square(3).unwrap();
        for m in monomials_of_degree(g, 4) {
            let a = TwoRowArray::from_monomial(&m);
            assert_eq!(inc_decompositions(&a).len(), count_decompositions(&a.lower()));
        }
    }

    #[test]
    fn duality_on_small_permutations() {
        for n in 0..=5 {
            for p in permutations(n) {
                for t in 1..=4 {
                    assert_eq!(gamma_sequence(t, &p) + w_sequence(t, &p), n);
                    if t >= 2 {
                        assert_eq!(w_sequence(t, &p), greene_alpha_dual(t - 1, &p));
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_shapes_agree_with_monomial_maxima() {
        let grid = GridSize::square(3).unwrap();
        for d in 1..=4 {
            for m in monomials_of_degree(grid, d) {
                let shapes = decomposition_shapes(&m);
                for t in 1..=3 {
                    let best = shapes.iter().map(|s| s.gamma(t)).max().unwrap();
                    assert_eq!(best, gamma_monomial(t, &m), "{m} t={t}");
                }
            }
        }
    }
}
