//! The KRS correspondence between standard bitableaux and monomials.
//!
//! Deletion follows the Herzog–Trung variant: the pivot is the bottom-most
//! occurrence of the largest left entry, and its right entry is pushed up
//! through the right tableau. Insertion replays this backwards.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::tableaux::{Bitableau, GridSize};

/// A monomial written as a biword `(u_1 … u_w / v_1 … v_w)` with `u`
/// non-decreasing and `v` non-increasing on runs of equal `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct TwoRowArray {
    pairs: Vec<(usize, usize)>,
}

impl TwoRowArray {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let canonical = pairs.windows(2).all(|w| w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 >= w[1].1));
        if !canonical || pairs.iter().any(|&(u, v)| u == 0 || v == 0) {
            return Err(Error::NotCanonical);
        }
        Ok(TwoRowArray { pairs })
    }

    pub fn empty() -> Self {
        TwoRowArray::default()
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        let mut pairs = m.factors();
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        TwoRowArray { pairs }
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_factors(self.pairs.iter().copied())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn upper(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn lower(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn fits(&self, grid: GridSize) -> bool {
        self.pairs.iter().all(|&(u, v)| grid.contains_cell(u, v))
    }

    pub fn transpose(&self) -> TwoRowArray {
        TwoRowArray::from_monomial(&self.to_monomial().transpose())
    }
}

impl fmt::Display for TwoRowArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", join(self.upper()), join(self.lower()))
    }
}

#[derive(Serialize, Deserialize)]
struct ArrayJson {
    u: Vec<usize>,
    v: Vec<usize>,
}

impl Serialize for TwoRowArray {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ArrayJson { u: self.upper(), v: self.lower() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoRowArray {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ArrayJson::deserialize(d)?;
        if raw.u.len() != raw.v.len() {
            return Err(D::Error::custom("rows `u` and `v` differ in length"));
        }
        TwoRowArray::new(raw.u.into_iter().zip(raw.v).collect()).map_err(D::Error::custom)
    }
}

/// One deletion: the output pair `(ℓ, r)` and the remaining bitableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionStep {
    pub ell: usize,
    pub r: usize,
    pub rest: Bitableau,
    /// Row (0-based) of the pivot box.
    pub pivot_row: usize,
    /// Rows (0-based, bottom-up) whose right entry was pushed out, with the
    /// value that left each row.
    pub push_outs: Vec<(usize, usize)>,
}

/// Removes the pivot box and pushes its right entry to the top row.
pub fn delete_step(s: &Bitableau) -> Result<DeletionStep> {
    if s.is_empty() {
        return Err(Error::Empty);
    }
    if !s.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut left = s.left_tableau();
    let mut right = s.right_tableau();
    let ell = left.iter().filter_map(|row| row.last().copied()).max().expect("non-empty rows");
    let p = left.iter().rposition(|row| row.last() == Some(&ell)).expect("maximum occurs");

    left[p].pop();
    let mut carried = right[p].pop().expect("rows of equal length");
    let mut push_outs = Vec::new();
    for row in (0..p).rev() {
        let k = right[row]
            .iter()
            .rposition(|&b| b <= carried)
            .expect("column condition of a standard bitableau");
        std::mem::swap(&mut right[row][k], &mut carried);
        push_outs.push((row, carried));
    }
    if left[p].is_empty() {
        left.remove(p);
        right.remove(p);
    }
    let rest = Bitableau::from_tableaux(&left, &right)?;
    debug_assert!(rest.is_standard());
    Ok(DeletionStep { ell, r: carried, rest, pivot_row: p, push_outs })
}

/// The full deletion sequence; the last step leaves the empty bitableau.
pub fn deletion_trace(s: &Bitableau) -> Result<Vec<DeletionStep>> {
    if !s.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut steps = Vec::with_capacity(s.degree());
    let mut cur = s.clone();
    while !cur.is_empty() {
        let step = delete_step(&cur)?;
        cur = step.rest.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// `krs(Σ)` as a two-row array.
pub fn forward(s: &Bitableau) -> Result<TwoRowArray> {
    let mut pairs: Vec<(usize, usize)> = deletion_trace(s)?.into_iter().map(|st| (st.ell, st.r)).collect();
    pairs.reverse();
    let array = TwoRowArray { pairs };
    debug_assert!(TwoRowArray::new(array.pairs.clone()).is_ok());
    Ok(array)
}

/// `KRS(Σ)` as a monomial.
pub fn forward_monomial(s: &Bitableau) -> Result<Monomial> {
    forward(s).map(|a| a.to_monomial())
}

/// The standard bitableau whose deletion sequence produces `array`.
pub fn inverse(array: &TwoRowArray) -> Result<Bitableau> {
    let mut left: Vec<Vec<usize>> = Vec::new();
    let mut right: Vec<Vec<usize>> = Vec::new();
    for &(u, v) in &array.pairs {
        let mut x = v;
        let mut row = 0;
        loop {
            if row == right.len() {
                left.push(vec![u]);
                right.push(vec![x]);
                break;
            }
            match right[row].iter().position(|&y| y >= x) {
                Some(k) => {
                    std::mem::swap(&mut right[row][k], &mut x);
                    row += 1;
                }
                None => {
                    right[row].push(x);
                    left[row].push(u);
                    break;
                }
            }
        }
    }
    let b = Bitableau::from_tableaux(&left, &right)?;
    if !b.is_standard() {
        return Err(Error::InconsistentBasis(format!("insertion of {array} produced non-standard {b}")));
    }
    Ok(b)
}

pub fn inverse_monomial(m: &Monomial) -> Result<Bitableau> {
    inverse(&TwoRowArray::from_monomial(m))
}

/// Outcome of comparing `KRS(τ(Σ))` with `τ(KRS(Σ))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransposeCheck {
    pub pass: bool,
    pub krs_of_transpose: Monomial,
    pub transpose_of_krs: Monomial,
}

pub fn transpose_commutes(s: &Bitableau) -> Result<TransposeCheck> {
    let krs_of_transpose = forward_monomial(&s.transpose())?;
    let transpose_of_krs = forward_monomial(s)?.transpose();
    Ok(TransposeCheck { pass: krs_of_transpose == transpose_of_krs, krs_of_transpose, transpose_of_krs })
}
