//! The category Y(m,n) of the objects P_alpha (antichain resolutions of the
//! intervals [f(alpha), alpha]): hom degrees, the degree-zero criteria,
//! factorizations, explicit lifts, formal words in the moves sigma_k^- and
//! the three generator presentations.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::antichain::{build_resolution, subsets_of_size};
use crate::combinatorics::{
    arrow_moves, f, inverse_phi_r, kappa, kappa_config, nu, phi_r, sigma_minus, yildirim_antichain,
    Configuration, EnhancedPartition,
};
use crate::error::{domain, Error, Result};
use crate::homalg::{derived_hom, ChainMap, HomSystem, ProjectiveComplex};
use crate::lattice::{build_lattice, Interval, Partition};
use crate::linalg::{q, QMat};
use crate::quiver::{Arrow, Orientation, QuiverPresentation, Term};

fn plain(alpha: &Partition) -> EnhancedPartition {
    EnhancedPartition::plain(alpha)
}

/// The resolution of [f(alpha), alpha] by the antichain C_alpha.
pub fn object(alpha: &Partition) -> ProjectiveComplex {
    build_resolution(&yildirim_antichain(&plain(alpha)))
}

pub fn interval_of(alpha: &Partition) -> Interval {
    Interval { lo: f(&plain(alpha)).expect("plain partitions are right enhanced").to_partition(), hi: alpha.clone() }
}

pub fn config_of(alpha: &Partition) -> Configuration {
    phi_r(&plain(alpha)).expect("plain partitions are right enhanced")
}

/// The plain partition read by phi_r; configurations holding -m have a bar and are rejected.
pub fn partition_of(r: &Configuration) -> Result<Partition> {
    let e = inverse_phi_r(r);
    if !e.is_plain() {
        return domain(format!("{r} holds the bead -{} and is not a plain configuration", r.m));
    }
    Ok(e.to_partition())
}

/// Right configurations of the plain partitions of J(m,n), in lattice order.
pub fn plain_configurations(m: usize, n: i32) -> Result<Vec<Configuration>> {
    Ok(build_lattice(m, n)?.elements.iter().map(config_of).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDegree {
    /// Block indices, ascending.
    pub j: Vec<usize>,
    pub degree: usize,
}

fn subsets(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..1u64 << s.len()).map(move |mask| (0..s.len()).filter(|t| mask >> t & 1 == 1).map(|t| s[t]).collect())
}

/// The J within S_alpha with q_J(alpha) in [f(beta), beta], when there is exactly one.
pub fn hom_degree(alpha: &Partition, beta: &Partition) -> Result<Option<HomDegree>> {
    if !alpha.same_shape(beta) {
        return domain(format!("{alpha} and {beta} live in different lattices"));
    }
    let a = plain(alpha);
    let i = interval_of(beta);
    let mut hits = Vec::new();
    for j in subsets(&a.mutable_set()) {
        if i.contains(&a.q(&j)?.to_partition()) {
            hits.push(j);
        }
    }
    // Several hits cancel: the complex of homs is acyclic.
    let hit = if hits.len() == 1 { hits.pop() } else { None };
    Ok(hit.map(|j| HomDegree { degree: j.len(), j }))
}

/// The five conditions for a nonzero degree-zero morphism P_alpha -> P_beta, each
/// evaluated on its own: (1) by the hom oracle, (2)-(5) combinatorially.
pub fn hom0_characterizations(alpha: &Partition, beta: &Partition) -> Result<[bool; 5]> {
    if !alpha.same_shape(beta) {
        return domain(format!("{alpha} and {beta} live in different lattices"));
    }
    let (a, b) = (plain(alpha), plain(beta));
    let ib = interval_of(beta);
    let fa = interval_of(alpha).lo;

    let item1 = derived_hom(&object(alpha), &ib, 0..=0)[&0] > 0;
    let item2 = fa.le(&ib.lo) && ib.lo.le(alpha) && alpha.le(beta);

    let in_interval = ib.contains(alpha);
    let mut item3 = in_interval;
    for j in subsets(&a.mutable_set()).skip(1) {
        if ib.contains(&a.q(&j)?.to_partition()) {
            item3 = false;
        }
    }

    let (ab, bb) = (a.blocks(), b.blocks());
    let coeffs_a: BTreeSet<i32> = a.mutable_set().iter().map(|&i| ab[i - 1].0).collect();
    let coeffs_b: BTreeSet<i32> = b.mutable_set().iter().map(|&j| bb[j - 1].0).collect();
    let inclusion = coeffs_a.is_subset(&coeffs_b);
    let item4 = in_interval && inclusion;

    // alpha <= beta plus the interlacing x_{i-1} < y_j <= x_i < y_{j+1}, with
    // y_{s+1} = infinity and the extra index i = r+1 carrying lambda = n and x = m.
    let x = a.ending_indices();
    let y = b.ending_indices();
    let (r, s) = (ab.len(), bb.len());
    let lam = |i: usize| if i == r + 1 { alpha.n } else { ab[i - 1].0 };
    let xi = |i: usize| if i == r + 1 { alpha.m() } else { x[i] };
    let y_next = |j: usize| if j == s { usize::MAX } else { y[j + 1] };
    let mut candidates = a.mutable_set();
    candidates.push(r + 1);
    let item5 = alpha.le(beta)
        && inclusion
        && b.mutable_set().iter().all(|&j| {
            candidates.iter().any(|&i| lam(i) == bb[j - 1].0 && xi(i - 1) < y[j] && y[j] <= xi(i) && xi(i) < y_next(j))
        });

    Ok([item1, item2, item3, item4, item5])
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorphismWord {
    pub start: Configuration,
    pub moves: Vec<i32>,
}

impl MorphismWord {
    pub fn new(start: Configuration, moves: Vec<i32>) -> Self {
        MorphismWord { start, moves }
    }

    /// R_0, R_1, ..., R_t; fails on the first ill-defined move.
    pub fn path(&self) -> Result<Vec<Configuration>> {
        let mut out = vec![self.start.clone()];
        for &k in &self.moves {
            let next = sigma_minus(out.last().unwrap(), k)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<Configuration> {
        Ok(self.path()?.pop().unwrap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordValue {
    Zero,
    Nonzero { sign: i32, word: MorphismWord },
}

/// Position of k in the order k_min < k_min+1 < ... < n < -m < ... < k_min-1, where
/// k_min is the largest element <= 1 of {-m..n} missing from `moves` (1 if none).
pub fn f_order_rank(moves: &[i32], m: usize, n: i32) -> impl Fn(i32) -> i64 {
    let used: BTreeSet<i32> = moves.iter().copied().collect();
    let lo = -(m as i32);
    let k_min = if moves.is_empty() { 1 } else { (lo..=n.min(1)).rev().find(|k| !used.contains(k)).unwrap_or(1) };
    move |k: i32| {
        if k >= k_min {
            i64::from(k - k_min)
        } else {
            i64::from(n - k_min + 1) + i64::from(k - lo)
        }
    }
}

/// Zero iff some move is not a bead of the start; otherwise the <_f sorted word and
/// the sign collected from swapping adjacent positive moves.
pub fn compose_word(w: &MorphismWord) -> Result<WordValue> {
    w.path()?;
    if w.moves.iter().any(|k| !w.start.contains(*k)) {
        return Ok(WordValue::Zero);
    }
    let rank = f_order_rank(&w.moves, w.start.m, w.start.n);
    let mut moves = w.moves.clone();
    let mut sign = 1;
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..moves.len().saturating_sub(1) {
            if rank(moves[i]) > rank(moves[i + 1]) {
                if moves[i] > 0 && moves[i + 1] > 0 {
                    sign = -sign;
                }
                moves.swap(i, i + 1);
                swapped = true;
            }
        }
    }
    let word = MorphismWord { start: w.start.clone(), moves };
    if word.path().is_err() {
        return Err(Error::Invariant(format!("sorting {:?} produced an ill-defined word", w.moves)));
    }
    Ok(WordValue::Nonzero { sign, word })
}

/// Extension part, degree-zero exponents and the canonical word of the morphism alpha -> beta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// J, ascending block indices of alpha.
    pub extension: Vec<usize>,
    /// (d_1, ..., d_r) for the blocks of q_J(alpha): beta = p_1^{d_1} ... p_r^{d_r} q_J(alpha).
    pub degree_zero: Vec<usize>,
    /// The canonical list, sorted for <_f.
    pub word: MorphismWord,
}

pub fn canonical_factorization(alpha: &Partition, beta: &Partition) -> Result<Factorization> {
    let Some(h) = hom_degree(alpha, beta)? else {
        return Err(Error::Precondition(format!("no morphism from P{alpha} to a shift of P{beta}")));
    };
    let gamma = plain(alpha).q(&h.j)?;
    let (gb, bb) = (gamma.blocks(), plain(beta).blocks());
    let (x, y) = (gamma.ending_indices(), plain(beta).ending_indices());
    let mut d = Vec::with_capacity(gb.len());
    for (i, (lam, _)) in gb.iter().enumerate() {
        let yj = bb.iter().position(|(l, _)| l == lam).map_or(0, |j| y[j + 1]);
        if x[i + 1] < yj {
            return Err(Error::Invariant(format!("ending indices of {gamma} and {beta} do not interlace")));
        }
        d.push(x[i + 1] - yj);
    }
    let mut cur = gamma.clone();
    for i in (1..=d.len()).rev() {
        for _ in 0..d[i - 1] {
            cur = cur.p(i)?;
        }
    }
    if cur.to_partition() != *beta {
        return Err(Error::Invariant(format!("replaying {d:?} on {gamma} gives {cur}, not {beta}")));
    }
    let word = canonical_word(&config_of(alpha), &config_of(beta))?;
    Ok(Factorization { extension: h.j, degree_zero: d, word })
}

/// A nonzero word from `from` to `to` in the arrow moves, sorted for <_f.
pub fn canonical_word(from: &Configuration, to: &Configuration) -> Result<MorphismWord> {
    fn search(cur: &Configuration, to: &Configuration, start: &Configuration, acc: &mut Vec<i32>) -> bool {
        if cur == to {
            return true;
        }
        let budget: i32 = cur.beads.iter().sum::<i32>() - to.beads.iter().sum::<i32>();
        if budget <= 0 {
            return false;
        }
        for k in arrow_moves(cur) {
            if !start.contains(k) {
                continue;
            }
            let next = sigma_minus(cur, k).expect("arrow moves are defined");
            acc.push(k);
            if search(&next, to, start, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    if !search(from, to, from, &mut acc) {
        return Err(Error::Precondition(format!("no nonzero word from {from} to {to}")));
    }
    match compose_word(&MorphismWord::new(from.clone(), acc))? {
        WordValue::Nonzero { word, .. } => Ok(word),
        WordValue::Zero => Err(Error::Invariant("a word of start beads composed to zero".into())),
    }
}

fn sign_of(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The lift P_alpha -> P_{q_J(alpha)}[|J|] of the canonical projection: in degree |J|+k the
/// summand P_{q_I(alpha)}, J within I, maps by (-1)^{|I - J|_J + |J| k} times the identity.
pub fn explicit_lift(alpha: &Partition, j: &[usize]) -> Result<ChainMap> {
    let a = plain(alpha);
    let mut j: Vec<usize> = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if !a.is_allowed(&j) {
        return domain(format!("{j:?} is not an allowed subset for {alpha}"));
    }
    let s = a.mutable_set();
    let source = object(alpha);
    let target = object(&a.q(&j)?.to_partition());
    let p = j.len();
    let mut comps = BTreeMap::new();
    for d in p..=s.len() {
        let k = d - p;
        let masks = subsets_of_size(s.len(), d);
        let src = source.labels(d as i32);
        let tgt = target.labels(k as i32);
        let mut m = QMat::zeros(tgt.len(), src.len());
        for (col, &mask) in masks.iter().enumerate() {
            let i: Vec<usize> = (0..s.len()).filter(|t| mask >> t & 1 == 1).map(|t| s[t]).collect();
            if !j.iter().all(|x| i.contains(x)) {
                continue;
            }
            let row = tgt
                .iter()
                .position(|t| *t == src[col])
                .ok_or_else(|| Error::Invariant(format!("summand {} missing from the target", src[col])))?;
            let e: usize = i.iter().filter(|x| !j.contains(x)).map(|x| j.iter().filter(|h| *h <= x).count()).sum();
            m.set(row, col, q(sign_of(e + p * k)));
        }
        comps.insert(d as i32, m);
    }
    ChainMap::new(source, target, p as i32, comps)
        .map_err(|e| Error::Invariant(format!("explicit lift for {alpha}, J = {j:?}: {e}")))
}

/// u_k^R: the canonical morphism P_R -> P_{sigma_k^-(R)}, in degree 1 when k > 0 and 0 otherwise.
pub fn canonical_morphism(r: &Configuration, k: i32) -> Result<ChainMap> {
    let alpha = partition_of(r)?;
    let next = sigma_minus(r, k)?;
    let beta = partition_of(&next)?;
    if k > 0 {
        let a = plain(&alpha);
        let blocks = a.blocks();
        let i = (1..=blocks.len())
            .find(|&i| blocks[i - 1].0 == k)
            .ok_or_else(|| Error::Invariant(format!("no block with value {k} in {alpha}")))?;
        return explicit_lift(&alpha, &[i]);
    }
    let sys = HomSystem::new(&object(&alpha), &object(&beta), 0);
    sys.solve_with(&[((0, 0, 0), q(1))])?
        .ok_or_else(|| Error::Invariant(format!("the inclusion P{alpha} -> P{beta} does not lift")))
}

/// Composite of the canonical morphisms along the word (identity for the empty word).
pub fn word_chain_map(w: &MorphismWord) -> Result<ChainMap> {
    let path = w.path()?;
    let mut acc = object(&partition_of(&w.start)?).identity();
    for (r, &k) in path.iter().zip(&w.moves) {
        acc = acc.then(&canonical_morphism(r, k)?)?;
    }
    Ok(acc)
}

pub fn is_zero_in_homotopy(fm: &ChainMap) -> Result<bool> {
    HomSystem::new(&fm.source, &fm.target, fm.shift).is_null_homotopic(fm)
}

/// -1 when both moves are positive, +1 otherwise.
pub fn epsilon(k: i32, l: i32) -> i32 {
    if k > 0 && l > 0 {
        -1
    } else {
        1
    }
}

/// Unordered pairs k < l of arrow moves of R (the squares rho_{k,l}^R).
pub fn square_relations(r: &Configuration) -> Vec<(i32, i32)> {
    let mv = arrow_moves(r);
    let mut out = Vec::new();
    for (i, &k) in mv.iter().enumerate() {
        for &l in &mv[i + 1..] {
            out.push((k, l));
        }
    }
    out
}

/// Moves k of R with k-1 and k-2 vacant and both steps among the arrow moves (z_k^R).
pub fn zero_relations(r: &Configuration) -> Vec<i32> {
    arrow_moves(r)
        .into_iter()
        .filter(|&k| !r.contains(k - 2) && arrow_moves(&sigma_minus(r, k).expect("arrow move")).contains(&(k - 1)))
        .collect()
}

/// rho_{k,l}^R at chain level with the standard epsilon.
pub fn verify_relation_chainlevel(r: &Configuration, k: i32, l: i32) -> Result<bool> {
    verify_relation_with(r, k, l, epsilon(k, l))
}

/// u_l u_k - eps u_k u_l is null-homotopic while u_l u_k itself is not.
pub fn verify_relation_with(r: &Configuration, k: i32, l: i32, eps: i32) -> Result<bool> {
    let kl = word_chain_map(&MorphismWord::new(r.clone(), vec![k, l]))?;
    let lk = word_chain_map(&MorphismWord::new(r.clone(), vec![l, k]))?;
    if kl.target != lk.target {
        return Err(Error::Invariant("square with different corners".into()));
    }
    let diff = kl.sub(&lk.scale(&q(i64::from(eps))))?;
    Ok(is_zero_in_homotopy(&diff)? && !is_zero_in_homotopy(&kl)?)
}

/// z_k^R: u_{k-1} u_k is null-homotopic.
pub fn verify_zero_relation(r: &Configuration, k: i32) -> Result<bool> {
    is_zero_in_homotopy(&word_chain_map(&MorphismWord::new(r.clone(), vec![k, k - 1]))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    U,
    V,
    W,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(Variant::U),
            "v" => Ok(Variant::V),
            "w" => Ok(Variant::W),
            _ => domain(format!("unknown variant {s:?}; expected u, v or w")),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Variant::U => 'u',
            Variant::V => 'v',
            Variant::W => 'w',
        }
    }

    /// c with generator = c * u_k^R.
    pub fn scale(self, r: &Configuration, k: i32) -> i32 {
        match self {
            Variant::U => 1,
            Variant::V => sign_of(kappa(r, k).unsigned_abs() as usize) as i32,
            Variant::W if k <= 0 => sign_of((nu(r, k) + kappa_config(r)).unsigned_abs() as usize) as i32,
            Variant::W => 1,
        }
    }
}

/// The presentation of Y(m,n) with generators c(R,k) u_k^R; relations are the squares
/// u_l u_k - eps u_k u_l and the zero paths, rewritten in the rescaled generators.
pub fn presentation_scaled(
    m: usize,
    n: i32,
    letter: char,
    scale: impl Fn(&Configuration, i32) -> i32,
) -> Result<QuiverPresentation> {
    let configs = plain_configurations(m, n)?;
    let labels: Vec<String> = configs.iter().map(ToString::to_string).collect();
    let index: BTreeMap<&Configuration, usize> = configs.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut arrows = Vec::new();
    let mut arrow_of: BTreeMap<(usize, i32), usize> = BTreeMap::new();
    for (i, r) in configs.iter().enumerate() {
        for k in arrow_moves(r) {
            let t = index[&sigma_minus(r, k)?];
            arrow_of.insert((i, k), arrows.len());
            arrows.push(Arrow { id: format!("{letter}{k}@{}", labels[i]), src: i, tgt: t });
        }
    }
    let path_scale = |r: &Configuration, a: i32, b: i32| -> Result<i32> {
        let mid = sigma_minus(r, a)?;
        Ok(scale(r, a) * scale(&mid, b))
    };
    let path = |i: usize, a: i32, b: i32| -> Result<[usize; 2]> {
        let mid = index[&sigma_minus(&configs[i], a)?];
        Ok([arrow_of[&(i, a)], arrow_of[&(mid, b)]])
    };
    let mut relations = Vec::new();
    for (i, r) in configs.iter().enumerate() {
        for (k, l) in square_relations(r) {
            // u_l u_k - eps u_k u_l with u = c g, normalised to a leading +1.
            let c1 = path_scale(r, k, l)?;
            let c2 = -epsilon(k, l) * path_scale(r, l, k)?;
            relations.push(vec![
                Term { coeff: q(1), path: path(i, k, l)? },
                Term { coeff: q(i64::from(c2 * c1)), path: path(i, l, k)? },
            ]);
        }
        for k in zero_relations(r) {
            relations.push(vec![Term { coeff: q(1), path: path(i, k, k - 1)? }]);
        }
    }
    QuiverPresentation::new(Orientation::Op, labels, arrows, relations)
}

pub fn presentation(m: usize, n: i32, variant: Variant) -> Result<QuiverPresentation> {
    presentation_scaled(m, n, variant.letter(), |r, k| variant.scale(r, k))
}

/// Square relations of a presentation as (first-term path, second coefficient).
pub fn square_coefficients(p: &QuiverPresentation) -> Vec<i64> {
    p.relations
        .iter()
        .filter(|r| r.len() == 2)
        .map(|r| {
            let c = &r[1].coeff / &r[0].coeff;
            if c.is_one() {
                1
            } else if (-c).is_one() {
                -1
            } else {
                0
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i32], n: i32) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    fn cfg(m: usize, n: i32, b: &[i32]) -> Configuration {
        Configuration::new(m, n, b.iter().copied()).unwrap()
    }

    #[test]
    fn hom_degree_examples() {
        let h = hom_degree(&p(&[0, 0, 1, 1], 1), &p(&[0, 0, 0, 0], 1)).unwrap().unwrap();
        assert_eq!(h, HomDegree { j: vec![2], degree: 1 });
        let a = p(&[0, 2, 3], 3);
        assert_eq!(hom_degree(&a, &a).unwrap().unwrap(), HomDegree { j: vec![], degree: 0 });
        let h = hom_degree(&p(&[1, 2], 2), &p(&[0, 2], 2)).unwrap().unwrap();
        assert_eq!(h, HomDegree { j: vec![1], degree: 1 });
        assert_eq!(hom_degree(&p(&[1, 1], 2), &p(&[2, 2], 2)).unwrap(), None);
    }

    #[test]
    fn hom0_examples() {
        assert_eq!(hom0_characterizations(&p(&[0, 0, 1, 1], 1), &p(&[1, 1, 1, 1], 1)).unwrap(), [true; 5]);
        assert_eq!(hom0_characterizations(&p(&[1, 1], 2), &p(&[2, 2], 2)).unwrap(), [false; 5]);
        let a = p(&[0, 1, 1, 3], 3);
        assert_eq!(hom0_characterizations(&a, &a).unwrap(), [true; 5]);
    }

    #[test]
    fn order_and_words() {
        let start = cfg(1, 2, &[2]);
        assert_eq!(compose_word(&MorphismWord::new(start.clone(), vec![2, 1])).unwrap(), WordValue::Zero);
        let empty = compose_word(&MorphismWord::new(start.clone(), vec![])).unwrap();
        assert_eq!(empty, WordValue::Nonzero { sign: 1, word: MorphismWord::new(start, vec![]) });
        let r = cfg(2, 3, &[1, 3]);
        let v = compose_word(&MorphismWord::new(r.clone(), vec![3, 1])).unwrap();
        assert_eq!(v, WordValue::Nonzero { sign: -1, word: MorphismWord::new(r, vec![1, 3]) });
        assert!(compose_word(&MorphismWord::new(cfg(2, 2, &[0, 1]), vec![1])).is_err());
    }

    #[test]
    fn lift_examples() {
        let a = p(&[1, 2], 2);
        let id = explicit_lift(&a, &[]).unwrap();
        assert_eq!(id, object(&a).identity());
        let l = explicit_lift(&a, &[1]).unwrap();
        assert_eq!(l.shift, 1);
        assert_eq!(l.comp(1), QMat::from_i64(&[vec![1, 0]]));
        assert_eq!(l.comp(2), QMat::from_i64(&[vec![1]]));
        assert!(!is_zero_in_homotopy(&l).unwrap());
        assert!(explicit_lift(&p(&[1, 2], 2), &[2]).is_err());
    }

    #[test]
    fn factorization_examples() {
        let a = p(&[0, 0, 1, 1], 1);
        let fz = canonical_factorization(&a, &p(&[0, 0, 0, 0], 1)).unwrap();
        assert_eq!(fz.extension, vec![2]);
        assert_eq!(fz.word.moves, vec![-1, 0, 1]);
        let fz = canonical_factorization(&a, &a).unwrap();
        assert!(fz.extension.is_empty() && fz.degree_zero.iter().all(|&d| d == 0) && fz.word.moves.is_empty());
        let fz = canonical_factorization(&p(&[1, 2], 2), &p(&[0, 2], 2)).unwrap();
        assert_eq!((fz.extension, fz.degree_zero), (vec![1], vec![0, 0]));
        assert!(canonical_factorization(&p(&[1, 1], 2), &p(&[2, 2], 2)).is_err());
    }

    #[test]
    fn relations_j22() {
        for r in plain_configurations(2, 2).unwrap() {
            for (k, l) in square_relations(&r) {
                assert!(verify_relation_chainlevel(&r, k, l).unwrap(), "{r} {k} {l}");
                assert!(!verify_relation_with(&r, k, l, -epsilon(k, l)).unwrap());
            }
            for k in zero_relations(&r) {
                assert!(verify_zero_relation(&r, k).unwrap(), "{r} {k}");
            }
        }
    }

    #[test]
    fn presentations_small() {
        let u = presentation(1, 1, Variant::U).unwrap();
        assert_eq!(u.vertices, vec!["{0}", "{1}"]);
        assert_eq!(u.arrows.len(), 1);
        assert!(u.relations.is_empty());
        for (m, n) in [(2, 2), (2, 3), (3, 2)] {
            assert!(square_coefficients(&presentation(m, n, Variant::V).unwrap()).iter().all(|&c| c == -1));
            assert!(square_coefficients(&presentation(m, n, Variant::W).unwrap()).iter().all(|&c| c == 1));
        }
    }
}
