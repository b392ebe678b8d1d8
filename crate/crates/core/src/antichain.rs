//! Antichains below an element, their subset-meet properties, the antichain
//! module support, and the signed projective resolution.
//!
//! Meets of subsets are taken in [0, top] with the empty meet equal to top.
//! Subsets are bitmasks over the canonically ordered members.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{domain, Result};
use crate::homalg::ProjectiveComplex;
use crate::lattice::{interval_support, Interval, Partition};
use crate::linalg::{q, QMat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Antichain {
    members: Vec<Partition>,
    top: Partition,
}

impl Antichain {
    /// Sorts members canonically and checks pairwise incomparability and `member <= top`.
    pub fn new(mut members: Vec<Partition>, top: Partition) -> Result<Self> {
        members.sort();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return domain(format!("repeated member {}", w[0]));
            }
        }
        for (i, a) in members.iter().enumerate() {
            if !a.same_shape(&top) {
                return domain(format!("{a} and {top} live in different lattices"));
            }
            if !a.le(&top) {
                return domain(format!("{a} is not below {top}"));
            }
            for b in &members[i + 1..] {
                if a.le(b) || b.le(a) {
                    return domain(format!("{a} and {b} are comparable"));
                }
            }
        }
        Ok(Antichain { members, top })
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_singleton_top(&self) -> bool {
        self.members.len() == 1 && self.members[0] == self.top
    }

    /// Meet of the members selected by `mask`; the empty meet is `top`.
    pub fn meet_of(&self, mask: u64) -> Partition {
        let mut acc = self.top.clone();
        for (i, c) in self.members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc = acc.meet(c);
            }
        }
        acc
    }

    fn all_meets(&self) -> Vec<Partition> {
        (0..1u64 << self.len()).map(|s| self.meet_of(s)).collect()
    }

    /// Member indices (0-based) of a mask.
    pub fn indices(&self, mask: u64) -> Vec<usize> {
        (0..self.len()).filter(|i| mask >> i & 1 == 1).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub strong: bool,
    pub inclusive: bool,
    pub intersective: bool,
    pub boolean: bool,
}

/// Exhaustive check over all pairs of subsets.
pub fn classify(c: &Antichain) -> PropertyFlags {
    let meets = c.all_meets();
    let n = meets.len() as u64;
    let (mut strong, mut inclusive, mut intersective) = (true, true, true);
    for s in 0..n {
        for t in 0..n {
            let (ms, mt) = (&meets[s as usize], &meets[t as usize]);
            let below = ms.le(mt);
            // Inclusive: meet S <= meet S' forces S' within S.
            if below && t & !s != 0 {
                inclusive = false;
            }
            // Strong: same cardinality and meet S <= meet S' forces S = S'.
            if below && s.count_ones() == t.count_ones() && s != t {
                strong = false;
            }
            if ms.join(mt) != meets[(s & t) as usize] {
                intersective = false;
            }
        }
    }
    PropertyFlags { strong, inclusive, intersective, boolean: inclusive && intersective }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanWitness {
    /// (subset as member indices, meet), subsets in mask order.
    pub table: Vec<(Vec<usize>, Partition)>,
}

/// Closure of C and top under meet and join.
pub fn generated_sublattice(c: &Antichain) -> BTreeSet<Partition> {
    let mut set: BTreeSet<Partition> = c.members.iter().cloned().collect();
    set.insert(c.top.clone());
    loop {
        let items: Vec<Partition> = set.iter().cloned().collect();
        let before = set.len();
        for a in &items {
            for b in &items {
                set.insert(a.meet(b));
                set.insert(a.join(b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// The table S -> meet S when it is a lattice anti-isomorphism from the subsets of C onto
/// the sublattice generated by C and top; absent otherwise.
pub fn boolean_witness(c: &Antichain) -> Option<BooleanWitness> {
    let meets = c.all_meets();
    let n = meets.len();
    let image: BTreeSet<Partition> = meets.iter().cloned().collect();
    if image.len() != n {
        return None;
    }
    for s in 0..n {
        for t in 0..n {
            if meets[s | t] != meets[s].meet(&meets[t]) || meets[s & t] != meets[s].join(&meets[t]) {
                return None;
            }
        }
    }
    if image != generated_sublattice(c) {
        return None;
    }
    let table = meets.into_iter().enumerate().map(|(s, m)| (c.indices(s as u64), m)).collect();
    Some(BooleanWitness { table })
}

/// Maxima of {x < hi : x not >= lo}: the antichain whose module below hi is the interval.
pub fn interval_antichain(i: &Interval) -> Antichain {
    let below = interval_support(&Interval { lo: Partition::bottom(i.hi.m(), i.hi.n), hi: i.hi.clone() });
    let cands: Vec<&Partition> = below.iter().filter(|x| **x != i.hi && !i.lo.le(x)).collect();
    let maxima: Vec<Partition> =
        cands.iter().filter(|x| !cands.iter().any(|y| y != *x && Partition::le(x, y))).map(|x| (*x).clone()).collect();
    Antichain::new(maxima, i.hi.clone()).expect("maxima of a set form an antichain")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleSupport {
    pub support: BTreeSet<Partition>,
}

/// {x <= top : x not <= c for every member c}.
pub fn module_support(c: &Antichain) -> ModuleSupport {
    let below = interval_support(&Interval { lo: Partition::bottom(c.top.m(), c.top.n), hi: c.top.clone() });
    let support = below.into_iter().filter(|x| !c.members.iter().any(|m| x.le(m))).collect();
    ModuleSupport { support }
}

/// Subsets of size l of {0..r}, as masks, in lexicographic order of their index lists.
pub fn subsets_of_size(r: usize, l: usize) -> Vec<u64> {
    fn rec(start: usize, r: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..r {
            if r - i < left {
                break;
            }
            rec(i + 1, r, left - 1, cur | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    rec(0, r, l, 0, &mut out);
    out
}

/// Degree l: one summand P_{meet S} per |S| = l (subsets in `subsets_of_size` order).
/// The boundary sends P_{meet S} to P_{meet (S - i)} with sign (-1)^{|i|_S}, where
/// |i|_S counts the members of S up to and including i.
pub fn build_resolution(c: &Antichain) -> ProjectiveComplex {
    let r = c.len();
    let mut terms = BTreeMap::new();
    let mut bd = BTreeMap::new();
    let by_degree: Vec<Vec<u64>> = (0..=r).map(|l| subsets_of_size(r, l)).collect();
    for (l, subs) in by_degree.iter().enumerate() {
        let labels: Vec<Partition> = subs.iter().map(|&s| c.meet_of(s)).collect();
        terms.insert(l as i32, labels);
        if l == 0 {
            continue;
        }
        let targets = &by_degree[l - 1];
        let mut m = QMat::zeros(targets.len(), subs.len());
        for (col, &s) in subs.iter().enumerate() {
            for (pos, i) in c.indices(s).into_iter().enumerate() {
                let t = s & !(1 << i);
                let row = targets.iter().position(|&x| x == t).expect("face present");
                m.set(row, col, q(if (pos + 1) % 2 == 0 { 1 } else { -1 }));
            }
        }
        bd.insert(l as i32, m);
    }
    ProjectiveComplex::new(terms, bd).expect("the antichain resolution is a complex")
}

/// Subset masks of size l in the order used by `build_resolution`, paired with their meets.
pub fn resolution_summands(c: &Antichain, l: usize) -> Vec<(u64, Partition)> {
    subsets_of_size(c.len(), l).into_iter().map(|s| (s, c.meet_of(s))).collect()
}

/// Exact-interval test of the subset family E = {S : meet S in I}.
pub fn subset_family(c: &Antichain, i: &Interval) -> Vec<u64> {
    (0..1u64 << c.len()).filter(|&s| i.contains(&c.meet_of(s))).collect()
}

/// Outcome of the subset-family prediction for Hom(P_C, I[p]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    /// E is a single subset S: hom is one-dimensional in degree |S|.
    Concentrated { subset: u64, degree: usize },
    /// E is empty or a non-singleton interval: all homs vanish.
    Acyclic,
}

/// Requires C boolean. Certifies that E is an interval of the subset lattice.
pub fn predicted_hom(c: &Antichain, i: &Interval) -> Result<Prediction> {
    if !classify(c).boolean {
        return Err(crate::Error::Precondition("predicted_hom needs a boolean antichain".into()));
    }
    let e = subset_family(c, i);
    if e.is_empty() {
        return Ok(Prediction::Acyclic);
    }
    let lo = e.iter().fold(u64::MAX, |a, &s| a & s);
    let hi = e.iter().fold(0, |a, &s| a | s);
    let free = hi & !lo;
    let expected = 1usize << free.count_ones();
    if e.len() != expected || e.iter().any(|&s| s & lo != lo || s & !hi != 0) {
        return Err(crate::Error::Invariant("subset family E is not an interval".into()));
    }
    if e.len() == 1 {
        Ok(Prediction::Concentrated { subset: lo, degree: lo.count_ones() as usize })
    } else {
        Ok(Prediction::Acyclic)
    }
}

/// All antichains whose members lie in [0, top], including the empty one and {top}.
pub fn antichains_below(top: &Partition) -> Vec<Antichain> {
    let elems = interval_support(&Interval { lo: Partition::bottom(top.m(), top.n), hi: top.clone() });
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(k: usize, elems: &[Partition], cur: &mut Vec<usize>, top: &Partition, out: &mut Vec<Antichain>) {
        if k == elems.len() {
            let members = cur.iter().map(|&i| elems[i].clone()).collect();
            out.push(Antichain { members, top: top.clone() });
            return;
        }
        rec(k + 1, elems, cur, top, out);
        if cur.iter().all(|&i| !elems[i].le(&elems[k]) && !elems[k].le(&elems[i])) {
            cur.push(k);
            rec(k + 1, elems, cur, top, out);
            cur.pop();
        }
    }
    rec(0, &elems, &mut cur, top, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::projective_homology;

    fn p(v: &[i32], n: i32) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    fn c12() -> Antichain {
        Antichain::new(vec![p(&[1, 1], 2), p(&[0, 2], 2)], p(&[1, 2], 2)).unwrap()
    }

    #[test]
    fn rejects_bad_antichains() {
        assert!(Antichain::new(vec![p(&[0, 1], 2), p(&[1, 1], 2)], p(&[2, 2], 2)).is_err());
        assert!(Antichain::new(vec![p(&[2, 2], 2)], p(&[1, 2], 2)).is_err());
    }

    #[test]
    fn classify_examples() {
        let all = PropertyFlags { strong: true, inclusive: true, intersective: true, boolean: true };
        assert_eq!(classify(&c12()), all);
        assert_eq!(classify(&Antichain::new(vec![], p(&[1, 2], 2)).unwrap()), all);
        // {top}: the empty meet and the meet of {top} coincide.
        let single = Antichain::new(vec![p(&[1, 2], 2)], p(&[1, 2], 2)).unwrap();
        let f = classify(&single);
        assert!(f.intersective && f.strong && !f.inclusive && !f.boolean);
        assert!(boolean_witness(&single).is_none());
    }

    #[test]
    fn witness_table() {
        let w = boolean_witness(&c12()).unwrap();
        assert_eq!(
            w.table,
            vec![
                (vec![], p(&[1, 2], 2)),
                (vec![0], p(&[0, 2], 2)),
                (vec![1], p(&[1, 1], 2)),
                (vec![0, 1], p(&[0, 1], 2)),
            ]
        );
        let empty = Antichain::new(vec![], p(&[1, 2], 2)).unwrap();
        assert_eq!(boolean_witness(&empty).unwrap().table, vec![(vec![], p(&[1, 2], 2))]);
    }

    #[test]
    fn interval_antichains() {
        let i = Interval::new(p(&[1, 1], 2), p(&[2, 2], 2)).unwrap();
        let c = interval_antichain(&i);
        assert_eq!(c.members(), &[p(&[0, 2], 2)]);
        assert_eq!(module_support(&c).support, interval_support(&i).into_iter().collect());
        let whole = Interval::new(p(&[0, 0], 2), p(&[1, 2], 2)).unwrap();
        assert!(interval_antichain(&whole).is_empty());
        let top = Interval::new(p(&[1], 1), p(&[1], 1)).unwrap();
        assert_eq!(interval_antichain(&top).members(), &[p(&[0], 1)]);
    }

    #[test]
    fn support_example() {
        assert_eq!(module_support(&c12()).support, BTreeSet::from([p(&[1, 2], 2)]));
    }

    #[test]
    fn resolution_of_c12() {
        let r = build_resolution(&c12());
        assert_eq!(r.labels(0), &[p(&[1, 2], 2)]);
        assert_eq!(r.labels(1), &[p(&[0, 2], 2), p(&[1, 1], 2)]);
        assert_eq!(r.labels(2), &[p(&[0, 1], 2)]);
        assert_eq!(r.boundary(2), QMat::from_i64(&[vec![1], vec![-1]]));
        assert_eq!(r.boundary(1), QMat::from_i64(&[vec![-1, -1]]));
        let h = projective_homology(&r);
        assert_eq!(h.len(), 1);
        assert_eq!(h[&0], BTreeMap::from([(p(&[1, 2], 2), 1)]));
    }

    #[test]
    fn predictions() {
        let i = Interval::new(p(&[1, 2], 2), p(&[1, 2], 2)).unwrap();
        assert_eq!(predicted_hom(&c12(), &i).unwrap(), Prediction::Concentrated { subset: 0, degree: 0 });
        let c = Antichain::new(vec![p(&[0], 1)], p(&[1], 1)).unwrap();
        let i = Interval::new(p(&[0], 1), p(&[0], 1)).unwrap();
        assert_eq!(predicted_hom(&c, &i).unwrap(), Prediction::Concentrated { subset: 1, degree: 1 });
        let wide = Interval::new(p(&[0, 1], 2), p(&[1, 2], 2)).unwrap();
        assert_eq!(predicted_hom(&c12(), &wide).unwrap(), Prediction::Acyclic);
    }

    #[test]
    fn enumeration_counts() {
        // Antichains of a 3-chain: empty plus three singletons.
        assert_eq!(antichains_below(&p(&[2], 2)).len(), 4);
    }
}
