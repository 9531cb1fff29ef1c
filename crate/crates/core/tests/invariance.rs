use proptest::prelude::*;

use sdepthlab::poset::{build_poset_with, PosetOptions};
use sdepthlab::solver::sdepth_of_poset;
use sdepthlab::{sdepth_of_pair, verify_decomposition, Monomial, MonomialIdeal, QuotientPresentation, SolverOptions};

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u8..=2, n), 1..=3).prop_filter_map("nonzero proper", move |gens| {
            let monos: Vec<Monomial> = gens.into_iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
            let ideal = MonomialIdeal::minimalize(monos, n).ok()?;
            (!ideal.is_unit()).then_some(ideal)
        })
    })
}

fn sdepth_with_bound(pair: &QuotientPresentation, bound: Option<Vec<u8>>) -> usize {
    let opts = PosetOptions { bound, ..Default::default() };
    let poset = build_poset_with(pair, &opts).unwrap();
    let r = sdepth_of_poset(&poset, pair.ambient(), &SolverOptions::default()).unwrap();
    assert!(verify_decomposition(&poset, &r.certificate, r.value).is_valid());
    r.value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_bounds_agree(ideal in ideal_strategy(), bump in prop::collection::vec(0u8..=1, 3)) {
        let pair = QuotientPresentation::quotient_ring(ideal.clone()).unwrap();
        let g: Vec<u8> = ideal.lcm_exponents().iter().zip(&bump).map(|(a, b)| a + b).collect();
        prop_assert_eq!(sdepth_with_bound(&pair, None), sdepth_with_bound(&pair, Some(g)));
    }

    #[test]
    fn relabelling_variables_preserves_sdepth(ideal in ideal_strategy(), rot in 0usize..3, flip in any::<bool>()) {
        let n = ideal.ambient();
        let mut perm: Vec<usize> = (1..=n).map(|i| (i - 1 + rot) % n + 1).collect();
        if flip {
            perm.reverse();
        }
        let map: Vec<Option<usize>> = perm.into_iter().map(Some).collect();
        let moved = ideal.relabel(&map, n).unwrap();
        let opts = SolverOptions::default();
        let a = sdepth_of_pair(&QuotientPresentation::quotient_ring(ideal.clone()).unwrap(), &opts).unwrap().value;
        let b = sdepth_of_pair(&QuotientPresentation::quotient_ring(moved.clone()).unwrap(), &opts).unwrap().value;
        prop_assert_eq!(a, b);
        let a = sdepth_of_pair(&QuotientPresentation::ideal_module(ideal).unwrap(), &opts).unwrap().value;
        let b = sdepth_of_pair(&QuotientPresentation::ideal_module(moved).unwrap(), &opts).unwrap().value;
        prop_assert_eq!(a, b);
    }
}
