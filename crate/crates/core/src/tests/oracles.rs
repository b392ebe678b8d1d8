//! Brute-force cross-checks of the combinatorial layer.

use std::collections::BTreeSet;

use crate::antichain::{antichains_below, build_resolution, classify, module_support};
use crate::combinatorics::{
    associated_interval, f, f_tilde, phi_r, right_enhanced, yildirim_antichain, EnhancedPartition,
};
use crate::homalg::{derived_hom_support, projective_homology};
use crate::lattice::{binomial, build_lattice, interval_support, zeta_matrix, Interval, Partition};
use crate::ycat::{explicit_lift, hom_degree, is_zero_in_homotopy, object};
use proptest::prelude::*;

/// Nondecreasing sequences in [0, n]^m by odometer, lexicographic.
fn brute_elements(m: usize, n: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut v = vec![0; m];
    loop {
        if v.windows(2).all(|w| w[0] <= w[1]) {
            out.push(v.clone());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < n {
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

fn below(x: &Partition, y: &Partition) -> bool {
    Partition::le(x, y)
}

#[test]
fn elements_and_order() {
    for m in 1..=4 {
        for n in 0..=4 {
            let l = build_lattice(m, n).unwrap();
            let got: Vec<Vec<i32>> = l.elements.iter().map(|p| p.values.clone()).collect();
            assert_eq!(got, brute_elements(m, n));
            assert_eq!(got.len() as u128, binomial((m as i32 + n) as u64, m as u64));
        }
    }
}

#[test]
fn meets_and_joins_are_bounds() {
    let l = build_lattice(3, 3).unwrap();
    for a in &l.elements {
        for b in &l.elements {
            let lower: Vec<&Partition> = l.elements.iter().filter(|x| below(x, a) && below(x, b)).collect();
            let glb = lower.iter().find(|x| lower.iter().all(|y| below(y, x))).unwrap();
            assert_eq!(**glb, a.meet(b));
            let upper: Vec<&Partition> = l.elements.iter().filter(|x| below(a, x) && below(b, x)).collect();
            let lub = upper.iter().find(|x| upper.iter().all(|y| below(x, y))).unwrap();
            assert_eq!(**lub, a.join(b));
        }
    }
}

#[test]
fn zeta_rows_count_upsets() {
    let l = build_lattice(2, 3).unwrap();
    let z = zeta_matrix(&l);
    for (i, a) in l.elements.iter().enumerate() {
        let above = l.elements.iter().filter(|x| a.le(x)).count() as i64;
        assert_eq!(z[i].iter().sum::<i64>(), above);
        assert_eq!(z[i][i], 1);
    }
}

#[test]
fn right_abaci_are_a_bijection() {
    for (m, n) in [(1, 2), (2, 2), (3, 2), (2, 4)] {
        let all = right_enhanced(m, n);
        assert_eq!(all.len() as u128, binomial((m as i32 + n + 1) as u64, m as u64));
        let configs: BTreeSet<String> = all.iter().map(|a| phi_r(a).unwrap().to_string()).collect();
        assert_eq!(configs.len(), all.len());
    }
}

/// [f(beta), beta] is the support of the family member C_beta: below beta and below
/// no single decrement q_j(beta).
#[test]
fn interval_is_module_support() {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (1, 4)] {
        let l = build_lattice(m, n).unwrap();
        for b in &l.elements {
            let e = EnhancedPartition::plain(b);
            let support: BTreeSet<Partition> = module_support(&yildirim_antichain(&e)).support;
            let lo = f(&e).unwrap().to_partition();
            let brute: BTreeSet<Partition> = l
                .elements
                .iter()
                .filter(|x| below(x, b) && e.mutable_set().iter().all(|&j| !below(x, &e.q(&[j]).unwrap().to_partition())))
                .cloned()
                .collect();
            assert_eq!(support, brute, "{b}");
            assert_eq!(support.iter().next(), Some(&lo), "{b}");
        }
    }
}

#[test]
fn resolutions_resolve_their_modules() {
    let l = build_lattice(2, 3).unwrap();
    for top in &l.elements {
        for c in antichains_below(top) {
            if !classify(&c).strong {
                continue;
            }
            let h = projective_homology(&build_resolution(&c));
            let support = module_support(&c).support;
            if support.is_empty() {
                assert!(h.is_empty());
                continue;
            }
            assert_eq!(h.len(), 1);
            let deg0 = &h[&0];
            assert!(deg0.values().all(|&d| d == 1));
            assert_eq!(deg0.keys().cloned().collect::<BTreeSet<_>>(), support);
        }
    }
}

/// A nonzero extension P_alpha -> P_{q_J(alpha)}[|J|] exists exactly for allowed J, and
/// its explicit lift is a chain map that is not null-homotopic.
#[test]
fn pure_extensions() {
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let l = build_lattice(m, n).unwrap();
        for a in &l.elements {
            let e = EnhancedPartition::plain(a);
            let s = e.mutable_set();
            for mask in 1u32..1 << s.len() {
                let j: Vec<usize> = (0..s.len()).filter(|t| mask >> t & 1 == 1).map(|t| s[t]).collect();
                let target = e.q(&j).unwrap().to_partition();
                let oracle = derived_hom_support(&object(a), &Interval { lo: f(&e.q(&j).unwrap()).unwrap().to_partition(), hi: target.clone() });
                let nonzero_in_degree = oracle.get(&(j.len() as i32)) == Some(&1);
                assert_eq!(nonzero_in_degree, e.is_allowed(&j), "{a} J={j:?}");
                let hd = hom_degree(a, &target).unwrap();
                assert_eq!(hd.is_some_and(|h| h.j == j), e.is_allowed(&j));
                if e.is_allowed(&j) {
                    let lift = explicit_lift(a, &j).unwrap();
                    assert!(lift.is_chain_map(), "{a} J={j:?}");
                    assert!(!is_zero_in_homotopy(&lift).unwrap());
                }
            }
        }
    }
}

#[test]
fn f_tilde_interval_is_nonempty() {
    let l = build_lattice(3, 2).unwrap();
    for a in &l.elements {
        let t = f_tilde(&EnhancedPartition::plain(a)).unwrap();
        let i = associated_interval(&t).unwrap();
        assert!(!interval_support(&i).is_empty());
    }
}

fn partition_pair(m: usize, n: i32) -> impl Strategy<Value = (Partition, Partition)> {
    let one = move || {
        proptest::collection::vec(0..=n, m).prop_map(move |mut v| {
            v.sort_unstable();
            Partition::new(v, n).unwrap()
        })
    };
    (one(), one())
}

proptest! {
    #[test]
    fn lattice_laws((a, b) in partition_pair(6, 9)) {
        let (mt, jn) = (a.meet(&b), a.join(&b));
        prop_assert!(mt.le(&a) && mt.le(&b) && a.le(&jn) && b.le(&jn));
        prop_assert_eq!(a.meet(&jn), a.clone());
        prop_assert_eq!(a.join(&mt), a);
    }
}
