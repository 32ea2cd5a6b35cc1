//! Randomized properties of words, presentations and unipotent matrices.

use abelslab::presentation::{cyclic_reduce, inverse, reduce, todd_coxeter, Presentation, Word};
use abelslab::relations::random_unitriangular;
use abelslab::Ring;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![1i32..=2, -2i32..=-1], 0..24)
}

proptest! {
    #[test]
    fn reduction_is_idempotent(w in word()) {
        let r = reduce(&w);
        prop_assert_eq!(reduce(&r), r.clone());
        prop_assert!(r.windows(2).all(|p| p[0] != -p[1]));
        let c = cyclic_reduce(&w);
        prop_assert_eq!(cyclic_reduce(&c), c);
    }

    #[test]
    fn inverse_is_involutive(w in word()) {
        prop_assert_eq!(inverse(&inverse(&w)), w.clone());
        let mut both = w.clone();
        both.extend(inverse(&w));
        prop_assert!(reduce(&both).is_empty());
    }

    #[test]
    fn s3_table_respects_words(w in word()) {
        let p = Presentation::from_text("a b\na a\nb b\na b a b a b").unwrap();
        let t = todd_coxeter(&p, &[], 1000);
        // equal words in the free group act equally
        prop_assert_eq!(t.trace(0, &w), t.trace(0, &reduce(&w)));
        let mut back = w.clone();
        back.extend(inverse(&w));
        prop_assert_eq!(t.trace(0, &back), 0);
    }

    #[test]
    fn unitriangular_inverse(seed in any::<u64>()) {
        let r = Ring::zmod(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_unitriangular(&r, 5, &mut rng).unwrap();
        prop_assert!(m.is_upper_triangular());
        prop_assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
    }
}
