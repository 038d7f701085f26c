//! Minors, bitableaux and shapes.
//!
//! A minor `[a_1,…,a_t | b_1,…,b_t]` is stored with both index sequences
//! ascending. A bitableau is a product of minors kept in canonical order:
//! sizes descending, ties broken by the `(rows, cols)` order of the factors.
//! Reordering equal-size factors never changes the product, and a product
//! that is standard in some order is standard in this one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::Multidegree;

/// Size of the generic matrix `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct GridSize {
    pub m: usize,
    pub n: usize,
}

impl GridSize {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::invalid(format!("grid {m}x{n} must have positive size")));
        }
        Ok(GridSize { m, n })
    }

    pub fn square(k: usize) -> Result<Self> {
        Self::new(k, k)
    }

    pub fn min_dim(&self) -> usize {
        self.m.min(self.n)
    }

    pub fn transpose(&self) -> GridSize {
        GridSize { m: self.n, n: self.m }
    }

    pub fn num_cells(&self) -> usize {
        self.m * self.n
    }

    /// Cells `(i, j)` in row-major order, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.m).flat_map(move |i| (1..=self.n).map(move |j| (i, j)))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        (1..=self.m).contains(&i) && (1..=self.n).contains(&j)
    }
}

impl TryFrom<[usize; 2]> for GridSize {
    type Error = Error;

    fn try_from(v: [usize; 2]) -> Result<Self> {
        GridSize::new(v[0], v[1])
    }
}

impl From<GridSize> for [usize; 2] {
    fn from(g: GridSize) -> Self {
        [g.m, g.n]
    }
}

impl fmt::Display for GridSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

impl FromStr for GridSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = s
            .split_once(['x', 'X', '×'])
            .ok_or_else(|| Error::invalid(format!("grid `{s}` is not of the form MxN")))?;
        let parse = |p: &str| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("grid `{s}` is not of the form MxN")))
        };
        GridSize::new(parse(m)?, parse(n)?)
    }
}

/// The determinant `[rows | cols]` of a square submatrix of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMinor")]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

#[derive(Deserialize)]
struct RawMinor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl TryFrom<RawMinor> for Minor {
    type Error = Error;

    fn try_from(raw: RawMinor) -> Result<Self> {
        Minor::new(raw.rows, raw.cols)
    }
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl Minor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::invalid(format!(
                "minor has {} row indices but {} column indices",
                rows.len(),
                cols.len()
            )));
        }
        if rows.iter().chain(&cols).any(|&x| x == 0) {
            return Err(Error::invalid("minor indices are 1-based"));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::invalid("minor indices must be strictly increasing"));
        }
        Ok(Minor { rows, cols })
    }

    /// The empty minor `[ | ]`, which stands for `1`.
    pub fn empty() -> Self {
        Minor { rows: Vec::new(), cols: Vec::new() }
    }

    /// `[1,…,t | 1,…,t]`.
    pub fn principal(t: usize) -> Self {
        Minor { rows: (1..=t).collect(), cols: (1..=t).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn fits(&self, grid: GridSize) -> bool {
        self.rows.last().map_or(true, |&r| r <= grid.m)
            && self.cols.last().map_or(true, |&c| c <= grid.n)
    }

    /// `self ≼ other`: `|self| ≥ |other|` and the first `|other|` row and
    /// column indices of `self` are componentwise `≤` those of `other`.
    pub fn precedes(&self, other: &Minor) -> bool {
        self.size() >= other.size()
            && self.rows.iter().zip(&other.rows).all(|(a, c)| a <= c)
            && self.cols.iter().zip(&other.cols).all(|(b, d)| b <= d)
    }

    /// `self ≺ other`.
    pub fn strictly_precedes(&self, other: &Minor) -> bool {
        self != other && self.precedes(other)
    }

    pub fn transpose(&self) -> Minor {
        Minor { rows: self.cols.clone(), cols: self.rows.clone() }
    }

    /// Cells of the main diagonal, whose product is the initial monomial.
    pub fn diagonal(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().copied().zip(self.cols.iter().copied())
    }

    /// All `t`-minors of the grid, sorted.
    pub fn all_of_size(grid: GridSize, t: usize) -> Vec<Minor> {
        let row_sets = subsets(grid.m, t);
        let col_sets = subsets(grid.n, t);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(Minor { rows: r.clone(), cols: c.clone() });
            }
        }
        out
    }

    /// All non-empty minors of the grid, by size then lexicographically.
    pub fn all(grid: GridSize) -> Vec<Minor> {
        (1..=grid.min_dim()).flat_map(|t| Minor::all_of_size(grid, t)).collect()
    }
}

/// Strictly increasing `k`-subsets of `1..=n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for x in start..=n {
            if n - x + 1 < need {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", join(&self.rows), join(&self.cols))
    }
}

impl FromStr for Minor {
    type Err = Error;

    /// Parses `[1,2|1,3]` (commas or spaces between indices).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::invalid(format!("minor `{s}` must be bracketed")))?;
        let (rows, cols) = inner
            .split_once('|')
            .ok_or_else(|| Error::invalid(format!("minor `{s}` lacks a `|`")))?;
        Minor::new(parse_indices(rows)?, parse_indices(cols)?)
    }
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| Error::invalid(format!("bad index `{p}`"))))
        .collect()
}

/// Result of comparing two minors under `≼`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorOrdering {
    Equal,
    LessEq,
    GreaterEq,
    Incomparable,
}

pub fn compare_minors(d: &Minor, e: &Minor) -> MinorOrdering {
    if d == e {
        MinorOrdering::Equal
    } else if d.precedes(e) {
        MinorOrdering::LessEq
    } else if e.precedes(d) {
        MinorOrdering::GreaterEq
    } else {
        MinorOrdering::Incomparable
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Shape::new(v)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

/// `(k)_+ = max(0, k)` applied to `s - t + 1`.
fn gamma_part(s: usize, t: usize) -> usize {
    (s + 1).saturating_sub(t)
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("shape parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("shape parts must be weakly decreasing"));
        }
        Ok(Shape(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Shape(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `k`-th part, 1-based; missing parts are 0.
    pub fn part(&self, k: usize) -> usize {
        k.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    /// `γ_t = Σ (s_i − t + 1)_+`.
    pub fn gamma(&self, t: usize) -> usize {
        self.0.iter().map(|&s| gamma_part(s, t)).sum()
    }

    /// `α_k = s_1 + … + s_k`.
    pub fn alpha(&self, k: usize) -> usize {
        self.0.iter().take(k).sum()
    }

    pub fn conjugate(&self) -> Shape {
        let first = self.0.first().copied().unwrap_or(0);
        Shape((1..=first).map(|j| self.0.iter().filter(|&&s| s >= j).count()).collect())
    }

    /// Partitions of `d` with every part at most `max_part`, ascending.
    pub fn partitions(d: usize, max_part: usize) -> Vec<Shape> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, max_part, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partial orders on shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShapeOrder {
    /// `γ_u(t) ≥ γ_u(s)` for every `u ≥ 1`.
    GammaOrder,
    /// `t_k ≥ s_k` for every `k`.
    Containment,
}

/// Whether `t` dominates `s` in the given order.
pub fn shape_compare(s: &Shape, t: &Shape, mode: ShapeOrder) -> bool {
    match mode {
        ShapeOrder::Containment => (1..=s.len()).all(|k| t.part(k) >= s.part(k)),
        ShapeOrder::GammaOrder => {
            // γ_u vanishes on both once u exceeds the largest part.
            let top = s.part(1).max(t.part(1));
            (1..=top).all(|u| t.gamma(u) >= s.gamma(u))
        }
    }
}

/// A product of minors `δ_1 ⋯ δ_w` with `|δ_1| ≥ … ≥ |δ_w| ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawBitableau")]
pub struct Bitableau {
    factors: Vec<Minor>,
}

#[derive(Deserialize)]
struct RawBitableau {
    factors: Vec<Minor>,
}

impl TryFrom<RawBitableau> for Bitableau {
    type Error = Error;

    fn try_from(raw: RawBitableau) -> Result<Self> {
        Ok(Bitableau::new(raw.factors))
    }
}

impl Bitableau {
    pub fn new(mut factors: Vec<Minor>) -> Self {
        factors.retain(|f| !f.is_empty());
        factors.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| a.cmp(b)));
        Bitableau { factors }
    }

    /// The empty product, `1`.
    pub fn identity() -> Self {
        Bitableau::default()
    }

    pub fn single(minor: Minor) -> Self {
        Bitableau::new(vec![minor])
    }

    pub fn factors(&self) -> &[Minor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(Minor::size).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.factors.iter().map(Minor::size).collect())
    }

    pub fn is_standard(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].precedes(&w[1]))
    }

    pub fn fits(&self, grid: GridSize) -> bool {
        self.factors.iter().all(|f| f.fits(grid))
    }

    pub fn multidegree(&self, grid: GridSize) -> Multidegree {
        let mut md = Multidegree::zero(grid);
        for f in &self.factors {
            for (i, j) in f.diagonal() {
                md.add_cell(i, j);
            }
        }
        md
    }

    pub fn transpose(&self) -> Bitableau {
        Bitableau::new(self.factors.iter().map(Minor::transpose).collect())
    }

    pub fn mul(&self, other: &Bitableau) -> Bitableau {
        Bitableau::new(self.factors.iter().chain(&other.factors).cloned().collect())
    }

    pub fn pow(&self, k: usize) -> Bitableau {
        Bitableau::new(self.factors.iter().cycle().take(self.factors.len() * k).cloned().collect())
    }

    /// Rows of the left tableau (row indices of each factor).
    pub fn left_tableau(&self) -> Vec<Vec<usize>> {
        self.factors.iter().map(|f| f.rows.clone()).collect()
    }

    /// Rows of the right tableau (column indices of each factor).
    pub fn right_tableau(&self) -> Vec<Vec<usize>> {
        self.factors.iter().map(|f| f.cols.clone()).collect()
    }

    /// Builds a bitableau from left/right tableau rows without checking
    /// standardness.
    pub fn from_tableaux(left: &[Vec<usize>], right: &[Vec<usize>]) -> Result<Bitableau> {
        if left.len() != right.len() {
            return Err(Error::invalid("left and right tableaux differ in row count"));
        }
        let factors = left
            .iter()
            .zip(right)
            .map(|(l, r)| Minor::new(l.clone(), r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Bitableau::new(factors))
    }

    /// All cells on the main diagonals of the factors, with repetition.
    pub fn diagonal_cells(&self) -> Vec<(usize, usize)> {
        self.factors.iter().flat_map(|f| f.diagonal()).collect()
    }

    fn flat_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.iter().flat_map(|f| f.rows.iter().copied())
    }

    fn flat_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.iter().flat_map(|f| f.cols.iter().copied())
    }
}

impl Ord for Bitableau {
    /// Lexicographic on `(shape, row indices, column indices)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.flat_rows().cmp(other.flat_rows()))
            .then_with(|| self.flat_cols().cmp(other.flat_cols()))
    }
}

impl PartialOrd for Bitableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl FromStr for Bitableau {
    type Err = Error;

    /// Parses products such as `[1,2|1,2]·[1|3]` or `[1,2|1,2][1|3]`; `1`
    /// is the empty product.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Bitableau::identity());
        }
        let mut factors = Vec::new();
        let mut rest = s;
        while let Some(start) = rest.find('[') {
            let between = &rest[..start];
            if between.chars().any(|c| !(c.is_whitespace() || c == '·' || c == '*')) {
                return Err(Error::invalid(format!("unexpected `{between}` in `{s}`")));
            }
            let end = rest[start..]
                .find(']')
                .ok_or_else(|| Error::invalid(format!("unclosed bracket in `{s}`")))?;
            factors.push(rest[start..start + end + 1].parse::<Minor>()?);
            rest = &rest[start + end + 1..];
        }
        if !rest.trim().is_empty() {
            return Err(Error::invalid(format!("trailing `{rest}` in `{s}`")));
        }
        Ok(Bitableau::new(factors))
    }
}

/// Restriction applied while enumerating standard bitableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    TotalDegree(usize),
    Multidegree(Multidegree),
    Shape(Shape),
}

struct Enumerator<'a> {
    by_size: Vec<Vec<Minor>>,
    standard_only: bool,
    budget: Option<&'a mut Multidegree>,
}

impl Enumerator<'_> {
    fn fill(&mut self, shape: &[usize], cur: &mut Vec<Minor>, out: &mut Vec<Bitableau>) {
        let Some(&size) = shape.get(cur.len()) else {
            if self.budget.as_ref().map_or(true, |b| b.is_zero()) {
                out.push(Bitableau { factors: cur.clone() });
            }
            return;
        };
        for idx in 0..self.by_size[size].len() {
            let cand = &self.by_size[size][idx];
            if let Some(prev) = cur.last() {
                let ok = if self.standard_only {
                    prev.precedes(cand)
                } else {
                    prev.size() > size || prev <= cand
                };
                if !ok {
                    continue;
                }
            }
            if let Some(b) = self.budget.as_deref_mut() {
                if !b.try_remove_minor(cand) {
                    continue;
                }
            }
            let cand = cand.clone();
            cur.push(cand);
            self.fill(shape, cur, out);
            let cand = cur.pop().expect("pushed above");
            if let Some(b) = self.budget.as_deref_mut() {
                b.restore_minor(&cand);
            }
        }
    }
}

fn minors_by_size(grid: GridSize) -> Vec<Vec<Minor>> {
    (0..=grid.min_dim()).map(|t| if t == 0 { Vec::new() } else { Minor::all_of_size(grid, t) }).collect()
}

fn enumerate(grid: GridSize, shapes: Vec<Shape>, standard_only: bool, md: Option<Multidegree>) -> Vec<Bitableau> {
    let mut budget = md;
    let mut en = Enumerator { by_size: minors_by_size(grid), standard_only, budget: budget.as_mut() };
    let mut out = Vec::new();
    for shape in shapes {
        if shape.part(1) > grid.min_dim() {
            continue;
        }
        en.fill(shape.parts(), &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// All standard bitableaux on `grid` satisfying `constraint`, sorted by the
/// `(shape, row indices, column indices)` order.
pub fn enumerate_standard_bitableaux(grid: GridSize, constraint: &Constraint) -> Vec<Bitableau> {
    match constraint {
        Constraint::TotalDegree(d) => enumerate(grid, Shape::partitions(*d, grid.min_dim()), true, None),
        Constraint::Shape(s) => enumerate(grid, vec![s.clone()], true, None),
        Constraint::Multidegree(md) => {
            if md.grid() != grid {
                return Vec::new();
            }
            enumerate(grid, Shape::partitions(md.total(), grid.min_dim()), true, Some(md.clone()))
        }
    }
}

/// All bitableaux (standard or not) of total degree `d` on `grid`.
pub fn enumerate_bitableaux(grid: GridSize, d: usize) -> Vec<Bitableau> {
    enumerate(grid, Shape::partitions(d, grid.min_dim()), false, None)
}

/// Standard bitableaux of total degree `d`, grouped by multidegree.
pub fn standard_by_multidegree(grid: GridSize, d: usize) -> BTreeMap<Multidegree, Vec<Bitableau>> {
    let mut map: BTreeMap<Multidegree, Vec<Bitableau>> = BTreeMap::new();
    for s in enumerate_standard_bitableaux(grid, &Constraint::TotalDegree(d)) {
        map.entry(s.multidegree(grid)).or_default().push(s);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bt(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    fn mn(s: &str) -> Minor {
        s.parse().unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn compare_minor_examples() {
        assert_eq!(compare_minors(&mn("[1|1]"), &mn("[1|1]")), MinorOrdering::Equal);
        assert_eq!(compare_minors(&mn("[1,2|1,2]"), &mn("[2|3]")), MinorOrdering::LessEq);
        assert_eq!(compare_minors(&mn("[2|3]"), &mn("[1,2|1,2]")), MinorOrdering::GreaterEq);
        assert_eq!(compare_minors(&mn("[1|2]"), &mn("[2|1]")), MinorOrdering::Incomparable);
    }

    #[test]
    fn standard_examples() {
        assert!(bt("[1,3,4,5|1,2,3,6][2,6|4,5]").is_standard());
        assert!(bt("[2,3|1,4]").is_standard());
        assert!(!bt("[1,2|2,3][2,3|1,2]").is_standard());
        assert!(bt("1").is_standard());
    }

    #[test]
    fn shape_examples() {
        assert_eq!(bt("[1,3,4,5|1,2,3,6][2,6|4,5]").shape().parts(), &[4, 2]);
        assert!(bt("1").shape().is_empty());
        assert_eq!(bt("[1|1][2|2][3|3]").shape().parts(), &[1, 1, 1]);
    }

    #[test]
    fn shape_compare_examples() {
        let s = Shape::new(vec![2, 2]).unwrap();
        let t = Shape::new(vec![3, 1]).unwrap();
        assert!(shape_compare(&s, &t, ShapeOrder::GammaOrder));
        assert!(!shape_compare(&s, &t, ShapeOrder::Containment));
        for mode in [ShapeOrder::GammaOrder, ShapeOrder::Containment] {
            assert!(shape_compare(&Shape::default(), &t, mode));
            assert!(shape_compare(&Shape::default(), &Shape::default(), mode));
        }
    }

    #[test]
    fn gamma_and_alpha_on_shapes() {
        let s = Shape::new(vec![4, 2]).unwrap();
        assert_eq!(s.gamma(2), 4);
        assert_eq!(s.gamma(1), 6);
        assert_eq!(s.gamma(5), 0);
        assert_eq!(s.alpha(1), 4);
        assert_eq!(s.alpha(5), 6);
        assert_eq!(s.conjugate().parts(), &[2, 2, 1, 1]);
    }

    #[test]
    fn enumeration_examples() {
        let g11 = GridSize::new(1, 1).unwrap();
        assert_eq!(
            enumerate_standard_bitableaux(g11, &Constraint::TotalDegree(2)),
            vec![bt("[1|1][1|1]")]
        );
        let g22 = GridSize::square(2).unwrap();
        assert_eq!(
            enumerate_standard_bitableaux(g22, &Constraint::Shape(Shape::new(vec![2]).unwrap())),
            vec![bt("[1,2|1,2]")]
        );
        assert_eq!(enumerate_standard_bitableaux(g22, &Constraint::TotalDegree(2)).len(), 10);
        // infeasible constraints give nothing
        assert!(enumerate_standard_bitableaux(g22, &Constraint::Shape(Shape::new(vec![3]).unwrap())).is_empty());
    }

    #[test]
    fn standard_count_matches_monomial_count() {
        for m in 1..=3 {
            for n in 1..=3 {
                let g = GridSize::new(m, n).unwrap();
                for d in 0..=5 {
                    let all = enumerate_standard_bitableaux(g, &Constraint::TotalDegree(d));
                    assert_eq!(all.len(), binom(m * n + d - 1, d), "{g} d={d}");
                    assert!(all.windows(2).all(|w| w[0] < w[1]), "sorted without duplicates");
                }
            }
        }
    }

    #[test]
    fn multidegree_enumeration_partitions_total() {
        let g = GridSize::square(3).unwrap();
        let by_md = standard_by_multidegree(g, 4);
        let total: usize = by_md.values().map(Vec::len).sum();
        assert_eq!(total, binom(12, 4));
        for (md, list) in &by_md {
            assert_eq!(&enumerate_standard_bitableaux(g, &Constraint::Multidegree(md.clone())), list);
        }
    }

    #[test]
    fn precedes_is_a_partial_order_on_3x3() {
        let all: Vec<Minor> = std::iter::once(Minor::empty())
            .chain(Minor::all(GridSize::square(3).unwrap()))
            .collect();
        for a in &all {
            assert!(a.precedes(a));
            for b in &all {
                if a.precedes(b) && b.precedes(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.precedes(b) && b.precedes(c) {
                        assert!(a.precedes(c), "{a} {b} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn containment_refines_gamma_order() {
        let shapes: Vec<Shape> = (0..=16)
            .flat_map(|d| Shape::partitions(d, 4))
            .filter(|s| s.len() <= 4)
            .collect();
        for s in &shapes {
            for t in &shapes {
                if shape_compare(s, t, ShapeOrder::Containment) {
                    assert!(shape_compare(s, t, ShapeOrder::GammaOrder), "{s} {t}");
                }
            }
        }
    }

    #[test]
    fn empty_minors_are_dropped() {
        let b = Bitableau::new(vec![mn("[1|1]"), Minor::empty(), mn("[1,2|1,2]")]);
        assert_eq!(b, bt("[1,2|1,2][1|1]"));
        assert!(b.is_standard());
    }

    #[test]
    fn json_shapes() {
        let b = bt("[1,2|1,3][2|2]");
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"factors":[{"rows":[1,2],"cols":[1,3]},{"rows":[2],"cols":[2]}]}"#);
        assert_eq!(serde_json::from_str::<Bitableau>(&json).unwrap(), b);
        assert_eq!(serde_json::to_string(&b.shape()).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Minor>(r#"{"rows":[2,1],"cols":[1,2]}"#).is_err());
        assert!(serde_json::from_str::<Shape>("[1,2]").is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("[1,2|1]".parse::<Minor>().is_err());
        assert!("[1|1] x [2|2]".parse::<Bitableau>().is_err());
        assert_eq!("3x4".parse::<GridSize>().unwrap(), GridSize::new(3, 4).unwrap());
        assert!("3x0".parse::<GridSize>().is_err());
    }
}
