use crate::auslander::*;
use crate::ycat::{presentation, Variant};

#[test]
fn tilting_matches_auslander() {
    for (m, n) in [(1usize, 1i32), (2, 2), (2, 3), (3, 3)] {
        assert!(tilting_hom_degrees(m, n).unwrap().iter().all(|x| x.2 == 0), "{m} {n}");
        let y = end_tilting_presentation(m, n).unwrap();
        let a = higher_auslander(m + 1, (n - 1) as usize).unwrap();
        let vm = tilting_bijection(m, n, &y, &a).unwrap();
        let w = find_isomorphism(&y, &a, &vm).unwrap();
        assert!(w.is_some(), "tilting {m} {n}");
        eprintln!("tilting {m} {n}: identity scaling {}", w.unwrap().is_identity_scaling());

        let yw = presentation(m, n, Variant::W).unwrap();
        let d = quadratic_dual(&higher_auslander(n as usize + 1, m - 1).unwrap()).unwrap();
        let vm = dual_bijection(m, n, &yw, &d).unwrap();
        let w = find_isomorphism(&yw, &d, &vm).unwrap();
        assert!(w.is_some(), "dual {m} {n}");
        eprintln!("dual {m} {n}: identity scaling {}", w.unwrap().is_identity_scaling());
    }
}

#[test]
fn koszul_duality_of_auslander() {
    for s in 1..=4 {
        for d in 0..=2 {
            let a = higher_auslander(s, d).unwrap();
            let dual = quadratic_dual(&a).unwrap();
            assert_eq!(a.relation_rank() + dual.relation_rank(), a.two_paths().len());
        }
    }
    for (s, d) in [(3usize, 1usize), (4, 1), (3, 2)] {
        let a = higher_auslander(s, d).unwrap();
        let b = quadratic_dual(&higher_auslander(d + 2, s - 2).unwrap()).unwrap();
        let vm = complement_bijection(s, d, &a, &b).unwrap();
        let w = find_isomorphism(&a, &b, &vm).unwrap();
        assert!(w.is_some(), "{s} {d}");
        eprintln!("A_{s}^{d}: identity scaling {}", w.unwrap().is_identity_scaling());
    }
}

#[test]
fn strict_negative_reading_of_w_needs_rescaling() {
    use crate::combinatorics::{kappa_config, nu};
    use crate::ycat::presentation_scaled;
    let strict = |r: &crate::Configuration, k: i32| {
        if k < 0 && (nu(r, k) + kappa_config(r)).rem_euclid(2) == 1 { -1 } else { 1 }
    };
    let mut failures = 0;
    for (m, n) in [(2usize, 2i32), (2, 3), (3, 3)] {
        let yw = presentation_scaled(m, n, 'w', strict).unwrap();
        let d = quadratic_dual(&higher_auslander(n as usize + 1, m - 1).unwrap()).unwrap();
        let vm = dual_bijection(m, n, &yw, &d).unwrap();
        // Still isomorphic after rescaling arrows, but no longer on the nose.
        let w = find_isomorphism(&yw, &d, &vm).unwrap().unwrap();
        if !w.is_identity_scaling() {
            failures += 1;
        }
    }
    assert!(failures > 0);
}
