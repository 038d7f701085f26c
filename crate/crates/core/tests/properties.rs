use krs_core::invariants::{gamma_monomial, greene_alpha, greene_alpha_dual, lis, GreeneMode};
use krs_core::krs::{self, TwoRowArray};
use krs_core::straighten::Straightener;
use krs_core::{Bitableau, GridSize, Minor, Monomial};
use proptest::prelude::*;

const M: usize = 4;
const N: usize = 4;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=M, 1..=N), 0..=6).prop_map(Monomial::from_factors)
}

fn minor(max: usize) -> impl Strategy<Value = Minor> {
    (1..=max).prop_flat_map(|k| {
        (prop::sample::subsequence((1..=M).collect::<Vec<_>>(), k), prop::sample::subsequence((1..=N).collect::<Vec<_>>(), k))
            .prop_map(|(r, c)| Minor::new(r, c).unwrap())
    })
}

fn bitableau() -> impl Strategy<Value = Bitableau> {
    prop::collection::vec(minor(3), 1..=2).prop_map(Bitableau::new)
}

// Longest strictly increasing subsequence by dynamic programming over all
// prefixes, quadratic and independent of patience sorting.
fn lis_oracle(b: &[usize]) -> usize {
    let mut best = vec![1usize; b.len()];
    for i in 0..b.len() {
        for j in 0..i {
            if b[j] < b[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_then_forward_is_identity(m in monomial()) {
        let s = krs::inverse_monomial(&m).unwrap();
        prop_assert!(s.is_standard());
        prop_assert_eq!(s.degree(), m.degree());
        prop_assert_eq!(krs::forward_monomial(&s).unwrap(), m);
    }

    #[test]
    fn krs_preserves_multidegree(m in monomial()) {
        let grid = GridSize::new(M, N).unwrap();
        let s = krs::inverse_monomial(&m).unwrap();
        prop_assert_eq!(s.multidegree(grid), m.multidegree(grid));
    }

    #[test]
    fn krs_commutes_with_transpose(m in monomial()) {
        let s = krs::inverse_monomial(&m).unwrap();
        prop_assert!(krs::transpose_commutes(&s).unwrap().pass);
    }

    #[test]
    fn gamma_is_shape_invariant(m in monomial(), t in 1usize..=3) {
        let s = krs::inverse_monomial(&m).unwrap();
        prop_assert_eq!(s.shape().gamma(t), gamma_monomial(t, &m));
    }

    #[test]
    fn first_row_is_the_longest_increasing_subsequence(v in prop::collection::vec(1usize..=6, 0..=7)) {
        let array = TwoRowArray::new((1..=v.len()).zip(v.iter().copied()).collect()).unwrap();
        let s = krs::inverse(&array).unwrap();
        prop_assert_eq!(s.shape().part(1), lis_oracle(&v));
        prop_assert_eq!(lis(&v), lis_oracle(&v));
    }

    #[test]
    fn greene_routes_agree(v in prop::collection::vec(1usize..=5, 0..=7), k in 1usize..=3) {
        let brute = greene_alpha(k, &v, GreeneMode::BruteForce);
        prop_assert_eq!(brute, greene_alpha(k, &v, GreeneMode::ViaRsk));
        let array = TwoRowArray::new((1..=v.len()).zip(v.iter().copied()).collect()).unwrap();
        let shape = krs::inverse(&array).unwrap().shape();
        prop_assert_eq!(brute, shape.alpha(k));
        prop_assert_eq!(greene_alpha_dual(k, &v), shape.conjugate().alpha(k));
    }

    #[test]
    fn straightening_preserves_the_polynomial(b in bitableau()) {
        let st = Straightener::new(GridSize::new(M, N).unwrap());
        let rep = st.straighten_bitableau(&b).unwrap();
        prop_assert!(rep.bitableaux().all(Bitableau::is_standard));
        prop_assert_eq!(rep.evaluate(), st.expand(&b));
    }
}
