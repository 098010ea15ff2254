mod common;

use common::*;
use kakutani::{
    canonicalize, compare, extract_relations, relation_space, satisfies, FiniteSpace, Mode, Relation,
    RelationSystem,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Lattice), Just(Mode::Algebra)]
}

/// Arbitrary (not canonical) relation system, including vacuous and conflicting triples.
fn raw_system() -> impl Strategy<Value = RelationSystem> {
    (1usize..=6).prop_flat_map(|n| {
        let rel = (0..n, 0..n, 0i64..=4, 1i64..=4)
            .prop_map(|(t, s, p, d)| Relation::new(t, s, kakutani::Scalar::ratio(p.min(d), d).unwrap()));
        prop::collection::vec(rel, 0..=2 * n)
            .prop_map(move |rels| RelationSystem::new(&FiniteSpace::numbered(n).unwrap(), rels).unwrap())
    })
}

proptest! {
    #[test]
    fn extracted_relations_hold_on_the_subspace(a in subspace_strategy(6, 4), m in mode()) {
        let system = extract_relations(&a, m);
        for f in a.basis_functions() {
            for r in system.relations() {
                prop_assert!(satisfies(&f, r), "{:?} violates {:?}", f, r);
            }
        }
        for r in system.relations() {
            prop_assert!(r.lambda >= kakutani::Scalar::zero() && r.lambda <= kakutani::Scalar::one());
            if m == Mode::Algebra {
                prop_assert!(r.is_algebraic());
            }
            prop_assert!(!(r.t == r.s && r.lambda.is_one()));
        }
    }

    #[test]
    fn subspace_lies_in_its_relation_space(a in subspace_strategy(6, 4), m in mode()) {
        let a_prime = relation_space(&extract_relations(&a, m));
        prop_assert!(compare(a.basis(), a_prime.basis()).unwrap().is_subset());
    }

    #[test]
    fn canonicalize_preserves_the_subspace(r in raw_system()) {
        let c = canonicalize(&r);
        prop_assert_eq!(relation_space(&c), relation_space(&r));
        prop_assert_eq!(canonicalize(&c), c.clone());
        // at most one relation per unordered pair of distinct points
        let mut seen = std::collections::BTreeSet::new();
        for rel in c.relations().iter().filter(|x| x.t != x.s) {
            prop_assert!(seen.insert((rel.t.min(rel.s), rel.t.max(rel.s))));
            prop_assert!(rel.lambda.is_positive());
        }
        for rel in c.relations().iter().filter(|x| x.t == x.s) {
            prop_assert!(rel.lambda.is_zero());
        }
    }

    #[test]
    fn relation_spaces_roundtrip(seed in any::<u64>(), n in 1usize..=7, algebraic in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_relations(&mut rng, n, algebraic);
        let a = relation_space(&r);
        let m = if algebraic { Mode::Algebra } else { Mode::Lattice };
        prop_assert_eq!(relation_space(&extract_relations(&a, Mode::Lattice)), a.clone());
        prop_assert_eq!(relation_space(&extract_relations(&a, m)), a);
    }
}

#[test]
fn relation_space_of_half_relation() {
    let s = FiniteSpace::new(["x", "y"]).unwrap();
    let r = RelationSystem::new(&s, [Relation::new(0, 1, q("1/2"))]).unwrap();
    let a = relation_space(&r);
    // f(x) = ½ f(y): the line through (1/2, 1), canonically (1, 2)
    assert_eq!(a.basis().vectors(), &[row(&["1", "2"])]);
    assert!(a.basis().contains(&row(&["1/2", "1"])).unwrap());
}
