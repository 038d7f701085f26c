//! Sparse polynomials with exact rational coefficients in the entries
//! `X_ij` of a generic `m×n` matrix.
//!
//! [`Monomial`]'s `Ord` *is* the diagonal term order: lexicographic with
//! `X_11 > X_12 > … > X_1n > X_21 > …`. Under it the initial monomial of
//! every minor is the product of its main diagonal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableaux::{Bitableau, GridSize, Minor};

/// Row and column index multiplicities, the `ℤ^m ⊕ ℤ^n` degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multidegree {
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl Multidegree {
    pub fn zero(grid: GridSize) -> Self {
        Multidegree { rows: vec![0; grid.m], cols: vec![0; grid.n] }
    }

    pub fn new(rows: Vec<u32>, cols: Vec<u32>) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::invalid("multidegree needs at least one row and one column"));
        }
        let (r, c): (u32, u32) = (rows.iter().sum(), cols.iter().sum());
        if r != c {
            return Err(Error::invalid(format!("row degree {r} differs from column degree {c}")));
        }
        Ok(Multidegree { rows, cols })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn grid(&self) -> GridSize {
        GridSize { m: self.rows.len(), n: self.cols.len() }
    }

    pub fn total(&self) -> usize {
        self.rows.iter().sum::<u32>() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0) && self.cols.iter().all(|&c| c == 0)
    }

    pub(crate) fn add_cell(&mut self, i: usize, j: usize) {
        self.rows[i - 1] += 1;
        self.cols[j - 1] += 1;
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
            && self.cols.iter().zip(&other.cols).all(|(a, b)| a <= b)
    }

    /// `self − other`, if non-negative.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        if !other.le(self) {
            return None;
        }
        Some(Multidegree {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a - b).collect(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a - b).collect(),
        })
    }

    pub(crate) fn try_remove_minor(&mut self, minor: &Minor) -> bool {
        let fits = minor.rows().iter().all(|&i| self.rows.get(i - 1).is_some_and(|&r| r > 0))
            && minor.cols().iter().all(|&j| self.cols.get(j - 1).is_some_and(|&c| c > 0));
        if fits {
            minor.rows().iter().for_each(|&i| self.rows[i - 1] -= 1);
            minor.cols().iter().for_each(|&j| self.cols[j - 1] -= 1);
        }
        fits
    }

    pub(crate) fn restore_minor(&mut self, minor: &Minor) {
        minor.rows().iter().for_each(|&i| self.rows[i - 1] += 1);
        minor.cols().iter().for_each(|&j| self.cols[j - 1] += 1);
    }

    pub fn transpose(&self) -> Multidegree {
        Multidegree { rows: self.cols.clone(), cols: self.rows.clone() }
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.rows), join(&self.cols))
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=rest).rev() {
            cur.push(x);
            rec(rest - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Every multidegree of total degree `d` on `grid`, sorted.
pub fn enumerate_multidegrees(grid: GridSize, d: usize) -> Vec<Multidegree> {
    let rows = compositions(d as u32, grid.m);
    let cols = compositions(d as u32, grid.n);
    let mut out: Vec<Multidegree> = rows
        .iter()
        .flat_map(|r| cols.iter().map(move |c| Multidegree { rows: r.clone(), cols: c.clone() }))
        .collect();
    out.sort();
    out
}

/// A monomial `∏ X_ij^e`, stored as sorted `(i, j, e)` triples with `e ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    cells: Vec<(usize, usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize, j: usize) -> Self {
        Monomial { cells: vec![(i, j, 1)] }
    }

    /// Product of the given variables, with repetition.
    pub fn from_factors<I: IntoIterator<Item = (usize, usize)>>(factors: I) -> Self {
        let mut map: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for cell in factors {
            *map.entry(cell).or_default() += 1;
        }
        Monomial { cells: map.into_iter().map(|((i, j), e)| (i, j, e)).collect() }
    }

    pub fn from_cells<I: IntoIterator<Item = (usize, usize, u32)>>(cells: I) -> Result<Self> {
        let mut map: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (i, j, e) in cells {
            if i == 0 || j == 0 {
                return Err(Error::invalid("monomial cells are 1-based"));
            }
            *map.entry((i, j)).or_default() += e;
        }
        Ok(Monomial { cells: map.into_iter().filter(|&(_, e)| e > 0).map(|((i, j), e)| (i, j, e)).collect() })
    }

    pub fn cells(&self) -> &[(usize, usize, u32)] {
        &self.cells
    }

    pub fn is_one(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.cells.iter().map(|c| c.2 as usize).sum()
    }

    pub fn exponent(&self, i: usize, j: usize) -> u32 {
        self.cells
            .binary_search_by(|c| (c.0, c.1).cmp(&(i, j)))
            .map_or(0, |k| self.cells[k].2)
    }

    /// The variables of the monomial with multiplicity, in cell order.
    pub fn factors(&self) -> Vec<(usize, usize)> {
        self.cells
            .iter()
            .flat_map(|&(i, j, e)| std::iter::repeat((i, j)).take(e as usize))
            .collect()
    }

    pub fn fits(&self, grid: GridSize) -> bool {
        self.cells.iter().all(|&(i, j, _)| grid.contains_cell(i, j))
    }

    pub fn multidegree(&self, grid: GridSize) -> Multidegree {
        let mut md = Multidegree::zero(grid);
        for &(i, j, e) in &self.cells {
            md.rows[i - 1] += e;
            md.cols[j - 1] += e;
        }
        md
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.cells.len() + other.cells.len());
        let (mut a, mut b) = (self.cells.iter().peekable(), other.cells.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (Some(&&x), Some(&&y)) => match (x.0, x.1).cmp(&(y.0, y.1)) {
                    Ordering::Less => {
                        out.push(x);
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push(y);
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((x.0, x.1, x.2 + y.2));
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Monomial { cells: out }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { cells: self.cells.iter().map(|&(i, j, e)| (i, j, e * k)).filter(|c| c.2 > 0).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.cells.iter().all(|&(i, j, e)| other.exponent(i, j) >= e)
    }

    pub fn transpose(&self) -> Monomial {
        let mut cells: Vec<_> = self.cells.iter().map(|&(i, j, e)| (j, i, e)).collect();
        cells.sort_unstable();
        Monomial { cells }
    }

    /// Product of the diagonal of a minor.
    pub fn diagonal_of(minor: &Minor) -> Monomial {
        Monomial::from_factors(minor.diagonal())
    }

    /// `ini` of a product of minors: the product of its diagonals.
    pub fn diagonal_of_bitableau(b: &Bitableau) -> Monomial {
        Monomial::from_factors(b.diagonal_cells())
    }
}

impl Ord for Monomial {
    /// The diagonal term order.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.cells.iter(), other.cells.iter());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => {
                    let ord = match (x.0, x.1).cmp(&(y.0, y.1)) {
                        // `self` has a positive exponent on an earlier variable
                        Ordering::Less => Ordering::Greater,
                        Ordering::Greater => Ordering::Less,
                        Ordering::Equal => x.2.cmp(&y.2),
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .cells
            .iter()
            .map(|&(i, j, e)| {
                let var = if i > 9 || j > 9 { format!("X{i},{j}") } else { format!("X{i}{j}") };
                if e == 1 {
                    var
                } else {
                    format!("{var}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Parses `1`, `X12·X23^2`, `X12*X23` or `X12 X23`; indices above 9 are
/// written `X10,3`.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("cannot parse monomial {s:?}"));
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut cells = Vec::new();
        for tok in s.split(|c: char| c == '·' || c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let body = tok.strip_prefix(['X', 'x']).ok_or_else(bad)?;
            let body = body.strip_prefix('_').unwrap_or(body);
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let (i, j) = match var.split_once(',') {
                Some((i, j)) => (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?),
                None if var.len() == 2 && var.bytes().all(|b| b.is_ascii_digit()) => {
                    let b = var.as_bytes();
                    (usize::from(b[0] - b'0'), usize::from(b[1] - b'0'))
                }
                None => return Err(bad()),
            };
            cells.push((i, j, exp));
        }
        if cells.is_empty() {
            return Err(bad());
        }
        Monomial::from_cells(cells)
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    cells: Vec<[u64; 3]>,
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialJson { cells: self.cells.iter().map(|&(i, j, e)| [i as u64, j as u64, e as u64]).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MonomialJson::deserialize(d)?;
        Monomial::from_cells(raw.cells.into_iter().map(|[i, j, e]| (i as usize, j as usize, e as u32)))
            .map_err(D::Error::custom)
    }
}

/// Contingency tables with the given margins, i.e. all monomials of the
/// multidegree, sorted descending in the diagonal order.
pub fn monomials_of_multidegree(md: &Multidegree) -> Vec<Monomial> {
    let grid = md.grid();
    let mut rows = md.rows.clone();
    let mut cols = md.cols.clone();
    let mut out = Vec::new();
    let mut cur = Vec::new();

    fn rec(
        cell: usize,
        grid: GridSize,
        rows: &mut [u32],
        cols: &mut [u32],
        cur: &mut Vec<(usize, usize, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if cell == grid.m * grid.n {
            if cols.iter().all(|&c| c == 0) {
                out.push(Monomial { cells: cur.clone() });
            }
            return;
        }
        let (i, j) = (cell / grid.n, cell % grid.n);
        let hi = rows[i].min(cols[j]);
        // the last cell of a row must absorb what is left of the row margin
        let lo = if j + 1 == grid.n { rows[i] } else { 0 };
        if lo > hi {
            return;
        }
        for e in lo..=hi {
            rows[i] -= e;
            cols[j] -= e;
            if e > 0 {
                cur.push((i + 1, j + 1, e));
            }
            rec(cell + 1, grid, rows, cols, cur, out);
            if e > 0 {
                cur.pop();
            }
            rows[i] += e;
            cols[j] += e;
        }
    }

    rec(0, grid, &mut rows, &mut cols, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Every monomial of total degree `d` on `grid`.
pub fn monomials_of_degree(grid: GridSize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    fn rec(cell: usize, rest: u32, cells: &[(usize, usize)], cur: &mut Vec<(usize, usize, u32)>, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(Monomial { cells: cur.clone() });
            return;
        }
        if cell == cells.len() {
            return;
        }
        let (i, j) = cells[cell];
        for e in (0..=rest).rev() {
            if e > 0 {
                cur.push((i, j, e));
            }
            rec(cell + 1, rest - e, cells, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let cells: Vec<_> = grid.cells().collect();
    rec(0, d as u32, &cells, &mut Vec::new(), &mut out);
    out
}

/// A polynomial in `ℚ[X]`. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::term(m, BigRational::one())
    }

    pub fn var(i: usize, j: usize) -> Self {
        Polynomial::from_monomial(Monomial::var(i, j))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending diagonal order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// The leading monomial in the diagonal order.
    pub fn initial_monomial(&self) -> Result<Monomial> {
        self.terms.keys().next_back().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Multihomogeneous components.
    pub fn components(&self, grid: GridSize) -> BTreeMap<Multidegree, Polynomial> {
        let mut out: BTreeMap<Multidegree, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree(grid)).or_default().terms.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn is_multihomogeneous(&self, grid: GridSize) -> bool {
        self.components(grid).len() <= 1
    }

    pub fn fits(&self, grid: GridSize) -> bool {
        self.terms.keys().all(|m| m.fits(grid))
    }

    pub fn transpose(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.transpose(), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}·{m}")?;
            }
        }
        Ok(())
    }
}

/// Formats a rational as `p/q`, always with a denominator.
pub fn format_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::invalid(format!("bad rational `{s}`")))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    mono: Monomial,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            terms: self.terms().map(|(m, c)| TermJson { mono: m.clone(), coef: format_rational(c) }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        let mut p = Polynomial::zero();
        for t in raw.terms {
            p.add_term(t.mono, parse_rational(&t.coef).map_err(D::Error::custom)?);
        }
        Ok(p)
    }
}

pub(crate) fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Full signed expansion of a minor by cofactor expansion along its first
/// row.
pub fn expand_minor(minor: &Minor) -> Polynomial {
    if minor.is_empty() {
        return Polynomial::one();
    }
    let mut memo: HashMap<(usize, u64), Vec<(Monomial, i64)>> = HashMap::new();
    let terms = laplace(minor.rows(), minor.cols(), 0, (1u64 << minor.size()) - 1, &mut memo);
    Polynomial::from_terms(terms.into_iter().map(|(m, c)| (m, rational(c))))
}

/// Determinant of the submatrix on `rows[depth..]` and the columns selected
/// by `mask`, as integer-coefficient terms.
fn laplace(
    rows: &[usize],
    cols: &[usize],
    depth: usize,
    mask: u64,
    memo: &mut HashMap<(usize, u64), Vec<(Monomial, i64)>>,
) -> Vec<(Monomial, i64)> {
    if depth == rows.len() {
        return vec![(Monomial::one(), 1)];
    }
    if let Some(hit) = memo.get(&(depth, mask)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    let mut sign = 1i64;
    for (k, &c) in cols.iter().enumerate() {
        if mask & (1 << k) == 0 {
            continue;
        }
        let var = Monomial::var(rows[depth], c);
        for (m, coef) in laplace(rows, cols, depth + 1, mask & !(1 << k), memo) {
            out.push((m.mul(&var), sign * coef));
        }
        sign = -sign;
    }
    memo.insert((depth, mask), out.clone());
    out
}

/// The product of the expansions of the factors.
pub fn expand_bitableau(b: &Bitableau) -> Polynomial {
    b.factors().iter().fold(Polynomial::one(), |acc, f| &acc * &expand_minor(f))
}
