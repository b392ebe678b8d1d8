use crate::lattice::build_lattice;
use crate::ycat::{
    canonical_factorization, compose_word, config_of, hom_degree, is_zero_in_homotopy, word_chain_map, WordValue,
};

/// Every nonzero morphism alpha -> beta[p] factors as an extension followed by
/// degree-zero moves, and its canonical word is a nonzero chain-level morphism.
#[test]
fn factorizations_replay() {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let l = build_lattice(m, n).unwrap();
        let mut nonzero = 0;
        for a in &l.elements {
            for b in &l.elements {
                let Some(h) = hom_degree(a, b).unwrap() else {
                    assert!(canonical_factorization(a, b).is_err());
                    continue;
                };
                nonzero += 1;
                let fz = canonical_factorization(a, b).unwrap();
                assert_eq!(fz.extension, h.j);
                assert_eq!(fz.word.start, config_of(a));
                assert_eq!(fz.word.end().unwrap(), config_of(b));
                assert!(matches!(compose_word(&fz.word).unwrap(), WordValue::Nonzero { sign: 1, .. }));
                let chain = word_chain_map(&fz.word).unwrap();
                assert_eq!(chain.shift, h.degree as i32, "{a} -> {b}");
                assert!(!is_zero_in_homotopy(&chain).unwrap(), "{a} -> {b}");
            }
        }
        assert!(nonzero >= l.len());
    }
}
