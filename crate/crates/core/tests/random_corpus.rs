mod common;

use proptest::prelude::*;

use common::{check_lifting, check_resolution, corpus};

#[test]
fn corpus_lifting_contract() {
    for ideal in corpus(60, 1000) {
        if let Err(e) = check_lifting(&ideal.ring, &ideal.polys) {
            panic!("seed {}: {e}", ideal.seed);
        }
    }
}

#[test]
fn corpus_resolutions() {
    let mut non_minimal = 0;
    for ideal in corpus(60, 1000) {
        match check_resolution(&ideal.ring, &ideal.polys) {
            Ok(c) => non_minimal += usize::from(c.minimal != c.nonminimal),
            Err(e) => panic!("seed {}: {e}", ideal.seed),
        }
    }
    // the corpus must exercise minimization
    assert!(non_minimal > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seeded_ideals_satisfy_all_checks(seed in 0u64..1_000_000) {
        let ideal = corpus(1, seed).pop().unwrap();
        prop_assert_eq!(check_lifting(&ideal.ring, &ideal.polys), Ok(()));
        prop_assert!(check_resolution(&ideal.ring, &ideal.polys).is_ok());
    }
}
