//! Exact sparse linear algebra over `ℤ`/`ℚ`.
//!
//! Rows are kept in semi-echelon form (distinct leading columns) with
//! fraction-free integer entries; each row remembers which combination of
//! the inserted vectors produced it so that solutions can be read back.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse vector, sorted by column, no zero entries.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Combination of inserted vectors, keyed by insertion label.
pub type Combination = BTreeMap<usize, BigRational>;

#[derive(Clone, Debug)]
struct Row {
    entries: SparseVec,
    combo: Combination,
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_row: HashMap<usize, usize>,
}

/// `a·x − b·y` on sparse vectors.
fn lin_comb(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn combo_lin(a: &BigRational, x: &Combination, b: &BigRational, y: &Combination) -> Combination {
    let mut out: Combination = x.iter().map(|(k, v)| (*k, a * v)).collect();
    for (k, v) in y {
        let e = out.entry(*k).or_insert_with(BigRational::zero);
        *e -= b * v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn content(v: &[(usize, BigInt)]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x))
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading columns of the rows, i.e. the set of leading columns of all
    /// non-zero vectors in the span.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Inserts `v` under `label`. Returns `false` if `v` was already in the
    /// span.
    pub fn insert(&mut self, v: SparseVec, label: usize) -> bool {
        let mut row = v;
        let mut combo: Combination = BTreeMap::from([(label, BigRational::one())]);
        while let Some((lead, val)) = row.first().cloned() {
            let Some(&r) = self.pivot_row.get(&lead) else {
                break;
            };
            let other = &self.rows[r];
            let p = &other.entries[0].1;
            let g = val.gcd(p);
            let (a, b) = (p / &g, &val / &g);
            row = lin_comb(&a, &row, &b, &other.entries);
            combo = combo_lin(&BigRational::from_integer(a), &combo, &BigRational::from_integer(b), &other.combo);
        }
        if row.is_empty() {
            return false;
        }
        let mut c = content(&row);
        if row[0].1.is_negative() {
            c = -c;
        }
        if !c.is_one() {
            for e in &mut row {
                e.1 = &e.1 / &c;
            }
            let inv = BigRational::from_integer(c).recip();
            for v in combo.values_mut() {
                *v *= &inv;
            }
        }
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(Row { entries: row, combo });
        true
    }

    /// Expresses `target` as a combination of the inserted vectors, if it
    /// lies in their span.
    pub fn solve(&self, target: &[(usize, BigRational)]) -> Option<Combination> {
        let mut t: Vec<(usize, BigRational)> = target.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        let mut out = Combination::new();
        while let Some((lead, val)) = t.first().cloned() {
            let r = &self.rows[*self.pivot_row.get(&lead)?];
            let coef = val / BigRational::from_integer(r.entries[0].1.clone());
            t = sub_scaled(&t, &coef, &r.entries);
            for (k, v) in &r.combo {
                let e = out.entry(*k).or_insert_with(BigRational::zero);
                *e += &coef * v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Some(out)
    }

    pub fn contains(&self, target: &[(usize, BigRational)]) -> bool {
        self.solve(target).is_some()
    }
}

/// `x − c·y` with rational `x`, integer `y`.
fn sub_scaled(x: &[(usize, BigRational)], c: &BigRational, y: &[(usize, BigInt)]) -> Vec<(usize, BigRational)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(c * BigRational::from_integer(y[j].1.clone()))));
            j += 1;
        } else {
            let v = &x[i].1 - c * BigRational::from_integer(y[j].1.clone());
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Clears denominators of a rational sparse vector.
pub fn to_integer_vec(v: &[(usize, BigRational)]) -> SparseVec {
    let l = v.iter().fold(BigInt::one(), |l, (_, x)| l.lcm(x.denom()));
    v.iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (*k, (x * BigRational::from_integer(l.clone())).to_integer()))
        .collect()
}

/// Basis of the kernel of a dense rational matrix (`rows × cols`), one
/// vector per free column, via reduced row echelon form.
pub fn kernel(matrix: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (top, rest) = if i < r { a.split_at_mut(r) } else { a.split_at_mut(i) };
                let (pivot_row, target) = if i < r { (&rest[0], &mut top[i]) } else { (&top[r], &mut rest[0]) };
                for (t, p) in target.iter_mut().zip(pivot_row) {
                    *t -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> SparseVec {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, BigInt::from(*x))).collect()
    }

    fn rv(v: &[i64]) -> Vec<(usize, BigRational)> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(i, x)| (i, BigRational::from_integer(BigInt::from(*x))))
            .collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_and_pivots() {
        let mut e = Echelon::new();
        assert!(e.insert(iv(&[2, 4, 0]), 0));
        assert!(e.insert(iv(&[1, 3, 1]), 1));
        assert!(!e.insert(iv(&[3, 7, 1]), 2));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), vec![0, 1]);
        assert!(!e.has_pivot(2));
    }

    #[test]
    fn solve_recovers_combination() {
        let mut e = Echelon::new();
        e.insert(iv(&[2, 4, 0]), 10);
        e.insert(iv(&[1, 3, 1]), 11);
        let sol = e.solve(&rv(&[3, 7, 1])).unwrap();
        assert_eq!(sol.get(&10), Some(&q(1, 1)));
        assert_eq!(sol.get(&11), Some(&q(1, 1)));
        let sol = e.solve(&rv(&[1, 2, 0])).unwrap();
        assert_eq!(sol.get(&10), Some(&q(1, 2)));
        assert!(!sol.contains_key(&11));
        assert!(e.solve(&rv(&[0, 0, 1])).is_none());
        assert_eq!(e.solve(&[]).unwrap().len(), 0);
    }

    #[test]
    fn kernel_of_small_matrix() {
        let m = vec![vec![q(1, 1), q(2, 1), q(3, 1)], vec![q(2, 1), q(4, 1), q(6, 1)]];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let dot: BigRational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(kernel(&[], 2).len(), 2);
    }

    #[test]
    fn clearing_denominators() {
        let v = vec![(0, q(1, 2)), (3, q(-2, 3))];
        assert_eq!(to_integer_vec(&v), vec![(0, BigInt::from(3)), (3, BigInt::from(-4))]);
    }
}
