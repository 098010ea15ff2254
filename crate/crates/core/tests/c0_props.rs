mod common;

use common::*;
use kakutani::{
    c0_analyze, decide, relation_space, CompactifiedSpace, FiniteSpace, FunctionVec, Mode, Scalar,
    Subspace,
};
use proptest::prelude::*;

fn compact(n: usize) -> CompactifiedSpace {
    CompactifiedSpace::new(&FiniteSpace::numbered(n).unwrap(), "∞").unwrap()
}

fn pair_of_functions() -> impl Strategy<Value = (usize, Vec<Scalar>, Vec<Scalar>)> {
    (1usize..=6).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(small_scalar(), n), prop::collection::vec(small_scalar(), n))
    })
}

proptest! {
    #[test]
    fn embedding_is_an_isometric_lattice_isomorphism((n, f, g) in pair_of_functions()) {
        let cs = compact(n);
        let f = FunctionVec::new(cs.base(), f).unwrap();
        let g = FunctionVec::new(cs.base(), g).unwrap();
        let (ef, eg) = (cs.embed(&f).unwrap(), cs.embed(&g).unwrap());
        prop_assert_eq!(cs.restrict(&ef).unwrap(), f.clone());
        prop_assert_eq!(cs.embed(&cs.restrict(&ef).unwrap()).unwrap(), ef.clone());
        prop_assert_eq!(ef.sup_norm(), f.sup_norm());
        prop_assert_eq!(cs.embed(&f.max(&g).unwrap()).unwrap(), ef.max(&eg).unwrap());
        prop_assert_eq!(cs.embed(&f.min(&g).unwrap()).unwrap(), ef.min(&eg).unwrap());
    }

    #[test]
    fn corollary_matches_compactified_decision(a in subspace_strategy(5, 3), algebra in any::<bool>()) {
        let m = if algebra { Mode::Algebra } else { Mode::Lattice };
        let cs = compact(a.space().len());
        let a = Subspace::new(cs.base(), a.basis().clone()).unwrap();
        let r = c0_analyze(&cs, &a, m).unwrap();
        let lifted = cs.embed_subspace(&a).unwrap();
        prop_assert_eq!(r.holds, decide(&lifted, m));
        // T-only relations cut out exactly the restricted hull
        prop_assert_eq!(relation_space(&r.relations), r.hull.clone());
        for rel in r.relations.relations() {
            prop_assert!(rel.t < cs.base().len() && rel.s < cs.base().len());
        }
    }
}
