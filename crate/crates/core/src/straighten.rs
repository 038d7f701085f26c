//! Standard representations by change of basis.
//!
//! Each multigraded slice of `K[X]` has the standard bitableaux of that
//! multidegree as a basis. A slice is set up once (expansions of its basis
//! in echelon form, keyed by basis position) and then solves any number of
//! polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::krs;
use crate::linalg::{Echelon, SparseVec};
use crate::polyring::{
    expand_bitableau, format_rational, monomials_of_multidegree, parse_rational, Monomial, Multidegree, Polynomial,
};
use crate::tableaux::{enumerate_standard_bitableaux, Bitableau, Constraint, GridSize, Minor, Shape};

/// `Σ a_Σ Σ` over standard bitableaux `Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StandardRep {
    terms: BTreeMap<Bitableau, BigRational>,
}

impl StandardRep {
    pub fn terms(&self) -> &BTreeMap<Bitableau, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, b: &Bitableau) -> BigRational {
        self.terms.get(b).cloned().unwrap_or_else(BigRational::zero)
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

    pub fn bitableaux(&self) -> impl Iterator<Item = &Bitableau> {
        self.terms.keys()
    }

    /// `Σ a_Σ · expand(Σ)`.
    pub fn evaluate(&self) -> Polynomial {
        self.terms.iter().fold(Polynomial::zero(), |acc, (b, c)| &acc + &expand_bitableau(b).scale(c))
    }

    fn add(&mut self, b: Bitableau, c: BigRational) {
        let e = self.terms.entry(b).or_insert_with(BigRational::zero);
        *e += c;
        self.terms.retain(|_, v| !v.is_zero());
    }
}

#[derive(Serialize, Deserialize)]
struct RepTermJson {
    bitableau: Bitableau,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    terms: Vec<RepTermJson>,
}

impl Serialize for StandardRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepJson {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| RepTermJson { bitableau: b.clone(), coef: format_rational(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RepJson::deserialize(d)?;
        let mut rep = StandardRep::default();
        for t in raw.terms {
            if !t.bitableau.is_standard() {
                return Err(D::Error::custom(format!("{} is not standard", t.bitableau)));
            }
            rep.add(t.bitableau, parse_rational(&t.coef).map_err(D::Error::custom)?);
        }
        Ok(rep)
    }
}

/// One multigraded slice with its standard basis in echelon form.
#[derive(Debug)]
pub struct StandardSlice {
    pub multidegree: Multidegree,
    pub basis: Vec<Bitableau>,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
}

impl StandardSlice {
    pub fn build(grid: GridSize, md: &Multidegree) -> Result<Self> {
        Self::build_with(grid, md, &expand_bitableau)
    }

    pub(crate) fn build_with(grid: GridSize, md: &Multidegree, expand: &dyn Fn(&Bitableau) -> Polynomial) -> Result<Self> {
        let monomials = monomials_of_multidegree(md);
        let basis = enumerate_standard_bitableaux(grid, &Constraint::Multidegree(md.clone()));
        if basis.len() != monomials.len() {
            return Err(Error::InconsistentBasis(format!(
                "slice {md}: {} standard bitableaux but {} monomials",
                basis.len(),
                monomials.len()
            )));
        }
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut slice = StandardSlice { multidegree: md.clone(), basis, monomials, index, echelon: Echelon::new() };
        for k in 0..slice.basis.len() {
            let v = slice.integer_coords(&expand(&slice.basis[k]))?;
            if !slice.echelon.insert(v, k) {
                return Err(Error::InconsistentBasis(format!(
                    "slice {md}: expansion of {} is dependent on earlier basis elements",
                    slice.basis[k]
                )));
            }
        }
        Ok(slice)
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Coordinates in the slice's monomial basis.
    pub fn coords(&self, f: &Polynomial) -> Result<Vec<(usize, BigRational)>> {
        let mut v: Vec<(usize, BigRational)> = f
            .terms()
            .map(|(m, c)| {
                self.index
                    .get(m)
                    .map(|&i| (i, c.clone()))
                    .ok_or_else(|| Error::invalid(format!("{m} is not in slice {}", self.multidegree)))
            })
            .collect::<Result<_>>()?;
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    fn integer_coords(&self, f: &Polynomial) -> Result<SparseVec> {
        let v = self.coords(f)?;
        Ok(v.into_iter()
            .map(|(i, c)| {
                debug_assert!(c.is_integer());
                (i, c.to_integer())
            })
            .collect())
    }

    pub fn solve(&self, f: &Polynomial) -> Result<StandardRep> {
        let coords = self.coords(f)?;
        let combo = self
            .echelon
            .solve(&coords)
            .ok_or_else(|| Error::InconsistentBasis(format!("slice {} does not span {f}", self.multidegree)))?;
        let mut rep = StandardRep::default();
        for (k, c) in combo {
            rep.add(self.basis[k].clone(), c);
        }
        Ok(rep)
    }
}

/// Computes standard representations, caching one [`StandardSlice`] per
/// multidegree. Safe to share between threads.
#[derive(Debug)]
pub struct Straightener {
    grid: GridSize,
    slices: Mutex<HashMap<Multidegree, Arc<StandardSlice>>>,
    minors: Mutex<HashMap<Minor, Arc<Polynomial>>>,
}

impl Straightener {
    pub fn new(grid: GridSize) -> Self {
        Straightener { grid, slices: Mutex::new(HashMap::new()), minors: Mutex::new(HashMap::new()) }
    }

    /// Expansion of a minor, cached.
    pub fn expand_minor(&self, minor: &Minor) -> Arc<Polynomial> {
        if let Some(p) = self.minors.lock().expect("minor cache poisoned").get(minor) {
            return p.clone();
        }
        let p = Arc::new(crate::polyring::expand_minor(minor));
        self.minors.lock().expect("minor cache poisoned").entry(minor.clone()).or_insert(p).clone()
    }

    /// Expansion of a bitableau from cached minor expansions.
    pub fn expand(&self, b: &Bitableau) -> Polynomial {
        b.factors().iter().fold(Polynomial::one(), |acc, f| &acc * &self.expand_minor(f))
    }

    pub fn grid(&self) -> GridSize {
        self.grid
    }

    pub fn slice(&self, md: &Multidegree) -> Result<Arc<StandardSlice>> {
        if let Some(s) = self.slices.lock().expect("slice cache poisoned").get(md) {
            return Ok(s.clone());
        }
        let built = Arc::new(StandardSlice::build_with(self.grid, md, &|b| self.expand(b))?);
        let mut cache = self.slices.lock().expect("slice cache poisoned");
        Ok(cache.entry(md.clone()).or_insert(built).clone())
    }

    pub fn standard_representation(&self, f: &Polynomial) -> Result<StandardRep> {
        if !f.fits(self.grid) {
            return Err(Error::invalid(format!("polynomial does not live on the {} grid", self.grid)));
        }
        let mut rep = StandardRep::default();
        for (md, component) in f.components(self.grid) {
            for (b, c) in self.slice(&md)?.solve(&component)?.terms {
                rep.add(b, c);
            }
        }
        Ok(rep)
    }

    pub fn straighten_bitableau(&self, b: &Bitableau) -> Result<StandardRep> {
        if b.is_standard() {
            return Ok(StandardRep { terms: BTreeMap::from([(b.clone(), BigRational::one())]) });
        }
        self.standard_representation(&self.expand(b))
    }

    /// Some standard term of `D`'s representation has the shape of `D`.
    pub fn check_shape(&self, d: &Bitableau) -> Result<ShapeCheck> {
        let rep = self.standard_representation(&self.expand(d))?;
        let witness = rep.bitableaux().find(|s| s.shape() == d.shape()).cloned();
        Ok(ShapeCheck { pass: witness.is_some(), bitableau: d.clone(), shape: d.shape(), witness, terms: rep.len() })
    }

    /// Every standard term `ε·η` of `δ_1·δ_2` has `ε ≺ δ_1` and `δ_2 ≺ η`.
    pub fn check_order(&self, d1: &Minor, d2: &Minor) -> Result<OrderCheck> {
        if d1.size() < d2.size() {
            return Err(Error::invalid("the first factor must be at least as large as the second"));
        }
        if d1.precedes(d2) {
            return Err(Error::AlreadyStandard);
        }
        let product = self.expand(&Bitableau::new(vec![d1.clone(), d2.clone()]));
        let rep = self.standard_representation(&product)?;
        let mut violations = Vec::new();
        for s in rep.bitableaux() {
            let f = s.factors();
            let ok = match f {
                [eps] => eps.strictly_precedes(d1),
                [eps, eta] => eps.strictly_precedes(d1) && d2.strictly_precedes(eta),
                _ => false,
            };
            if !ok {
                violations.push(s.clone());
            }
        }
        Ok(OrderCheck { pass: violations.is_empty(), d1: d1.clone(), d2: d2.clone(), terms: rep.len(), violations })
    }

    /// The linear extension of KRS: `Σ a_Σ Σ ↦ Σ a_Σ KRS(Σ)`.
    pub fn krs_automorphism(&self, f: &Polynomial) -> Result<Polynomial> {
        let rep = self.standard_representation(f)?;
        let mut out = Polynomial::zero();
        for (s, c) in rep.terms() {
            out.add_term(krs::forward_monomial(s)?, c.clone());
        }
        Ok(out)
    }

    /// Images of the slice's monomials under the KRS automorphism, in the
    /// slice's monomial order.
    pub fn krs_matrix(&self, md: &Multidegree) -> Result<Vec<Polynomial>> {
        monomials_of_multidegree(md)
            .into_iter()
            .map(|m| self.krs_automorphism(&Polynomial::from_monomial(m)))
            .collect()
    }

    /// Rank of the KRS automorphism restricted to a slice.
    pub fn krs_slice_rank(&self, md: &Multidegree) -> Result<usize> {
        let slice = self.slice(md)?;
        let mut e = Echelon::new();
        for (k, image) in self.krs_matrix(md)?.iter().enumerate() {
            let v = slice.coords(image)?;
            e.insert(crate::linalg::to_integer_vec(&v), k);
        }
        Ok(e.rank())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCheck {
    pub pass: bool,
    pub bitableau: Bitableau,
    pub shape: Shape,
    pub witness: Option<Bitableau>,
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub pass: bool,
    pub d1: Minor,
    pub d2: Minor,
    pub terms: usize,
    pub violations: Vec<Bitableau>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{enumerate_multidegrees, rational};
    use crate::tableaux::enumerate_bitableaux;

    fn bt(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    fn minor(s: &str) -> Minor {
        s.parse().unwrap()
    }

    fn sq(k: usize) -> Straightener {
        Straightener::new(GridSize::square(k).unwrap())
    }

    #[test]
    fn standard_input_is_fixed() {
        let st = sq(3);
        let s = bt("[1,2|1,3]·[2|2]");
        let rep = st.standard_representation(&expand_bitableau(&s)).unwrap();
        assert_eq!(rep.len(), 1);
        assert_eq!(rep.coefficient(&s), rational(1));
        assert!(st.standard_representation(&Polynomial::zero()).unwrap().is_zero());
    }

    #[test]
    fn two_by_two_relation() {
        let st = sq(2);
        let rep = st.standard_representation(&expand_bitableau(&bt("[1|2]·[2|1]"))).unwrap();
        assert_eq!(rep.len(), 2);
        assert_eq!(rep.coefficient(&bt("[1,2|1,2]")), rational(-1));
        assert_eq!(rep.coefficient(&bt("[1|1]·[2|2]")), rational(1));
    }

    #[test]
    fn shape_and_order_examples() {
        let st = sq(2);
        assert!(st.check_shape(&bt("[1,2|1,2]")).unwrap().pass);
        let c = st.check_shape(&bt("[1|2]·[2|1]")).unwrap();
        assert!(c.pass);
        assert_eq!(c.witness, Some(bt("[1|1]·[2|2]")));
        assert!(st.check_order(&minor("[1|2]"), &minor("[2|1]")).unwrap().pass);
        assert!(st.check_order(&minor("[2|2]"), &minor("[1|1]")).unwrap().pass);
        assert_eq!(st.check_order(&minor("[1|1]"), &minor("[2|2]")), Err(Error::AlreadyStandard));
    }

    #[test]
    fn krs_automorphism_examples() {
        let st = sq(3);
        assert_eq!(st.krs_automorphism(&Polynomial::var(1, 1)).unwrap(), Polynomial::var(1, 1));
        let det = expand_bitableau(&bt("[1,2|1,2]"));
        assert_eq!(
            st.krs_automorphism(&det).unwrap(),
            Polynomial::from_monomial(Monomial::from_factors([(1, 1), (2, 2)]))
        );
        assert!(st.krs_automorphism(&Polynomial::zero()).unwrap().is_zero());
    }

    #[test]
    fn round_trip_on_all_small_bitableaux() {
        let st = sq(3);
        for d in 0..=3 {
            for b in enumerate_bitableaux(st.grid(), d) {
                let f = expand_bitableau(&b);
                let rep = st.standard_representation(&f).unwrap();
                assert!(rep.bitableaux().all(Bitableau::is_standard));
                assert_eq!(rep.evaluate(), f, "{b}");
            }
        }
    }

    #[test]
    fn mixed_degrees_split_into_components() {
        let st = sq(2);
        let f = &expand_bitableau(&bt("[1|2]·[2|1]")) + &Polynomial::var(2, 2);
        let rep = st.standard_representation(&f).unwrap();
        assert_eq!(rep.evaluate(), f);
        assert_eq!(rep.coefficient(&bt("[2|2]")), rational(1));
    }

    #[test]
    fn krs_is_invertible_on_slices() {
        let st = sq(3);
        for d in 1..=2 {
            for md in enumerate_multidegrees(st.grid(), d) {
                assert_eq!(st.krs_slice_rank(&md).unwrap(), monomials_of_multidegree(&md).len());
            }
        }
    }

    #[test]
    fn json_format() {
        let st = sq(2);
        let rep = st.standard_representation(&expand_bitableau(&bt("[1|2]·[2|1]"))).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"bitableau":{"factors":[{"rows":[1],"cols":[1]},{"rows":[2],"cols":[2]}]},"coef":"1/1"},{"bitableau":{"factors":[{"rows":[1,2],"cols":[1,2]}]},"coef":"-1/1"}]}"#
        );
        assert_eq!(serde_json::from_str::<StandardRep>(&json).unwrap(), rep);
    }
}
