//! Partitions as abaci: compact forms, enhancements, the decrements q_J and
//! multiplicity moves p_i, the encodings phi_r / phi_l and the maps f, g, delta
//! and f~ = g o delta.
//!
//! Block indices (i in S_alpha, J, p_i) are 1-based as in the usual notation;
//! positions in the sequence (ending indices x_i) are 1-based too.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::antichain::Antichain;
use crate::error::{domain, Error, Result};
use crate::lattice::{Interval, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    /// `bar` trailing copies of n sit behind the bar.
    Right,
    /// `bar` leading copies of 0 sit before the bar.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnhancedPartition {
    pub values: Vec<i32>,
    pub n: i32,
    pub side: Side,
    pub bar: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Enhancement {
    Plain,
    Right(usize),
    Left(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactPartition {
    pub coeffs: Vec<i32>,
    pub mults: Vec<usize>,
    pub enhancement: Enhancement,
}

impl EnhancedPartition {
    pub fn new(values: Vec<i32>, n: i32, side: Side, bar: usize) -> Result<Self> {
        Partition::new(values.clone(), n)?;
        let m = values.len();
        if bar > m {
            return domain("bar longer than the partition");
        }
        let ok = match side {
            Side::Right => values[m - bar..].iter().all(|&v| v == n),
            Side::Left => values[..bar].iter().all(|&v| v == 0),
        };
        if !ok {
            return domain(format!("values {values:?} do not fit a {side:?} bar of length {bar}"));
        }
        Ok(EnhancedPartition { values, n, side, bar })
    }

    pub fn plain(p: &Partition) -> Self {
        EnhancedPartition { values: p.values.clone(), n: p.n, side: Side::Right, bar: 0 }
    }

    pub fn is_plain(&self) -> bool {
        self.bar == 0
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn to_partition(&self) -> Partition {
        Partition { values: self.values.clone(), n: self.n }
    }

    fn main_range(&self) -> (usize, usize) {
        match self.side {
            Side::Right => (0, self.m() - self.bar),
            Side::Left => (self.bar, self.m()),
        }
    }

    /// Blocks (lambda_i, mu_i) of the part outside the bar.
    pub fn blocks(&self) -> Vec<(i32, usize)> {
        let (a, b) = self.main_range();
        let mut out: Vec<(i32, usize)> = Vec::new();
        for &v in &self.values[a..b] {
            match out.last_mut() {
                Some((l, mu)) if *l == v => *mu += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    pub fn r(&self) -> usize {
        self.blocks().len()
    }

    /// Ending indices x_0 = offset, x_1, ..., x_r as positions in the full sequence.
    pub fn ending_indices(&self) -> Vec<usize> {
        let (a, _) = self.main_range();
        let mut x = vec![a];
        for (_, mu) in self.blocks() {
            x.push(x.last().unwrap() + mu);
        }
        x
    }

    /// Starting indices x_{i-1} + 1, i = 1..r.
    pub fn starting_indices(&self) -> Vec<usize> {
        let x = self.ending_indices();
        x[..x.len() - 1].iter().map(|v| v + 1).collect()
    }

    /// S_alpha: indices of the nonzero coefficients outside the bar.
    pub fn mutable_set(&self) -> Vec<usize> {
        self.blocks().iter().enumerate().filter(|(_, (l, _))| *l != 0).map(|(i, _)| i + 1).collect()
    }

    pub fn compact(&self) -> CompactPartition {
        let (coeffs, mults) = self.blocks().into_iter().unzip();
        let enhancement = match (self.side, self.bar) {
            (_, 0) => Enhancement::Plain,
            (Side::Right, b) => Enhancement::Right(b),
            (Side::Left, b) => Enhancement::Left(b),
        };
        CompactPartition { coeffs, mults, enhancement }
    }

    /// q_J: decrement the coefficients of the blocks in J, multiplicities unchanged.
    pub fn q(&self, j: &[usize]) -> Result<EnhancedPartition> {
        let s = self.mutable_set();
        if let Some(bad) = j.iter().find(|i| !s.contains(i)) {
            return domain(format!("{bad} is not a mutable index of {self}"));
        }
        let x = self.ending_indices();
        let mut values = self.values.clone();
        for &i in j {
            for v in &mut values[x[i - 1]..x[i]] {
                *v -= 1;
            }
        }
        Ok(EnhancedPartition { values, ..self.clone() })
    }

    /// p_i: move one unit of multiplicity from block i to block i+1.
    pub fn p(&self, i: usize) -> Result<EnhancedPartition> {
        let b = self.blocks();
        let r = b.len();
        let ordinary = i >= 1 && i < r && b[i - 1].1 > 1;
        let special = i == 1 && r >= 2 && b[0].1 == 1 && b[0].0 == 0;
        if !ordinary && !special {
            return Err(Error::Partial(format!("p_{i} is not defined on {self}")));
        }
        let x = self.ending_indices();
        let mut values = self.values.clone();
        values[x[i] - 1] = b[i].0;
        Ok(EnhancedPartition { values, ..self.clone() })
    }

    /// kappa_alpha: the sum of the distinct coefficients outside the bar.
    pub fn kappa(&self) -> i32 {
        self.blocks().iter().map(|(l, _)| l).sum()
    }

    /// Partition-side allowedness: J within S, and lambda_{i-1} < lambda_i - 1
    /// whenever i in J and i-1 in S but not in J.
    pub fn is_allowed(&self, j: &[usize]) -> bool {
        let s = self.mutable_set();
        let b = self.blocks();
        j.iter().all(|i| s.contains(i))
            && j.iter().all(|&i| {
                let prev = i - 1;
                !(s.contains(&prev) && !j.contains(&prev)) || b[prev - 1].0 < b[i - 1].0 - 1
            })
    }
}

impl fmt::Display for EnhancedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |l: i32, mu: usize| if mu == 1 { l.to_string() } else { format!("{l}^{mu}") };
        let main: Vec<String> = self.blocks().into_iter().map(|(l, mu)| part(l, mu)).collect();
        let main = main.join(",");
        match (self.side, self.bar) {
            (_, 0) if self.side == Side::Right => write!(f, "({main})"),
            (Side::Right, b) => write!(f, "({main}|{})", part(self.n, b)),
            (Side::Left, 0) => write!(f, "(|{main})"),
            (Side::Left, b) => write!(f, "({}|{main})", part(0, b)),
        }
    }
}

/// An m-element subset of Z = {-m, ..., n}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration {
    pub m: usize,
    pub n: i32,
    pub beads: BTreeSet<i32>,
}

impl Configuration {
    pub fn new(m: usize, n: i32, beads: impl IntoIterator<Item = i32>) -> Result<Self> {
        let beads: BTreeSet<i32> = beads.into_iter().collect();
        if beads.len() != m {
            return domain(format!("a configuration needs {m} distinct beads, got {beads:?}"));
        }
        if beads.iter().any(|&b| b < -(m as i32) || b > n) {
            return domain(format!("beads {beads:?} leave [-{m}, {n}]"));
        }
        Ok(Configuration { m, n, beads })
    }

    pub fn parse(s: &str, m: usize, n: i32) -> Result<Self> {
        let beads = s
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|e| Error::Domain(format!("bad bead {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(m, n, beads)
    }

    pub fn contains(&self, k: i32) -> bool {
        self.beads.contains(&k)
    }

    fn lo(&self) -> i32 {
        -(self.m as i32)
    }

    /// Cyclic shift of every bead one step to the left; -m wraps to n.
    pub fn shift_left(&self) -> Configuration {
        let beads = self.beads.iter().map(|&b| if b == self.lo() { self.n } else { b - 1 }).collect();
        Configuration { beads, ..self.clone() }
    }

    /// Beads >= 1 (the nonzero positive side).
    pub fn positive_count(&self) -> usize {
        self.beads.iter().filter(|&&b| b >= 1).count()
    }

    /// Text abacus: a header row of columns and a row of beads.
    pub fn abacus(&self) -> String {
        let cols: Vec<i32> = (self.lo()..=self.n).collect();
        let w = cols.iter().map(|c| c.to_string().len()).max().unwrap_or(1);
        let head: Vec<String> = cols.iter().map(|c| format!("{c:>w$}")).collect();
        let row: Vec<String> =
            cols.iter().map(|c| format!("{:>w$}", if self.contains(*c) { "o" } else { "." })).collect();
        format!("{}\n{}\n", head.join(" "), row.join(" "))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.beads.iter().map(i32::to_string).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

fn encode(alpha: &EnhancedPartition, marks: &[usize]) -> Configuration {
    let m = alpha.m();
    let mut beads: BTreeSet<i32> = (1..=m as i32).map(|k| -k).collect();
    for &x in marks {
        beads.remove(&-(x as i32));
    }
    beads.extend(alpha.blocks().iter().map(|(l, _)| *l));
    Configuration { m, n: alpha.n, beads }
}

/// Right configuration: coefficients plus the negatives minus the ending indices.
pub fn phi_r(alpha: &EnhancedPartition) -> Result<Configuration> {
    if alpha.side != Side::Right && alpha.bar != 0 {
        return domain("phi_r reads right enhanced partitions");
    }
    let x = alpha.ending_indices();
    Ok(encode(alpha, &x[1..]))
}

/// Left configuration: coefficients plus the negatives minus the starting indices.
pub fn phi_l(alpha: &EnhancedPartition) -> Result<Configuration> {
    if alpha.side != Side::Left && alpha.bar != 0 {
        return domain("phi_l reads left enhanced partitions");
    }
    let a = if alpha.side == Side::Left { alpha.clone() } else { EnhancedPartition { side: Side::Left, ..alpha.clone() } };
    Ok(encode(&a, &a.starting_indices()))
}

fn decode(r: &Configuration) -> (Vec<i32>, Vec<usize>) {
    let coeffs: Vec<i32> = r.beads.iter().copied().filter(|&b| b >= 0).collect();
    let gaps: Vec<usize> = (1..=r.m).filter(|&k| !r.contains(-(k as i32))).collect();
    debug_assert_eq!(coeffs.len(), gaps.len());
    (coeffs, gaps)
}

/// Gaps in the negative side are the ending indices; the rest is the right bar.
pub fn inverse_phi_r(r: &Configuration) -> EnhancedPartition {
    let (coeffs, ends) = decode(r);
    let mut values = Vec::with_capacity(r.m);
    let mut prev = 0;
    for (l, &x) in coeffs.iter().zip(&ends) {
        values.extend(std::iter::repeat_n(*l, x - prev));
        prev = x;
    }
    let bar = r.m - prev;
    values.extend(std::iter::repeat_n(r.n, bar));
    EnhancedPartition { values, n: r.n, side: Side::Right, bar }
}

/// Gaps in the negative side are the starting indices; before the first one is the left bar.
pub fn inverse_phi_l(r: &Configuration) -> EnhancedPartition {
    let (coeffs, starts) = decode(r);
    let bar = starts.first().map_or(r.m, |s| s - 1);
    let mut values = vec![0; bar];
    for (i, l) in coeffs.iter().enumerate() {
        let end = starts.get(i + 1).map_or(r.m + 1, |s| *s);
        values.extend(std::iter::repeat_n(*l, end - starts[i]));
    }
    EnhancedPartition { values, n: r.n, side: Side::Left, bar }
}

fn need_side(alpha: &EnhancedPartition, side: Side) -> Result<()> {
    if alpha.side == side || alpha.bar == 0 {
        Ok(())
    } else {
        domain(format!("{alpha} has the wrong enhancement side"))
    }
}

pub fn f(alpha: &EnhancedPartition) -> Result<EnhancedPartition> {
    need_side(alpha, Side::Right)?;
    Ok(inverse_phi_l(&phi_r(alpha)?))
}

pub fn g(alpha: &EnhancedPartition) -> Result<EnhancedPartition> {
    need_side(alpha, Side::Left)?;
    Ok(inverse_phi_r(&phi_l(alpha)?))
}

/// q_{S_alpha}(alpha) with the enhancement read off the left-shifted right abacus.
pub fn delta(alpha: &EnhancedPartition) -> Result<EnhancedPartition> {
    need_side(alpha, Side::Right)?;
    Ok(inverse_phi_l(&phi_r(alpha)?.shift_left()))
}

pub fn f_tilde(alpha: &EnhancedPartition) -> Result<EnhancedPartition> {
    g(&delta(alpha)?)
}

/// The interval [f(alpha), alpha] of plain partitions.
pub fn associated_interval(alpha: &EnhancedPartition) -> Result<Interval> {
    Interval::new(f(alpha)?.to_partition(), alpha.to_partition())
}

/// C_alpha = {q_i(alpha) : i in S_alpha} as an antichain below alpha.
pub fn yildirim_antichain(alpha: &EnhancedPartition) -> Antichain {
    let members = alpha.mutable_set().iter().map(|&i| alpha.q(&[i]).expect("i is mutable").to_partition()).collect();
    Antichain::new(members, alpha.to_partition()).expect("the decrements form an antichain below alpha")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStep {
    pub configuration: Configuration,
    pub s: usize,
}

/// f~^i(alpha) for i = 1..=m+n+1, each with |S| of the step.
pub fn orbit_trace(alpha: &EnhancedPartition) -> Result<Vec<OrbitStep>> {
    need_side(alpha, Side::Right)?;
    let len = alpha.m() + alpha.n as usize + 1;
    let mut cur = alpha.clone();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        cur = f_tilde(&cur)?;
        out.push(OrbitStep { configuration: phi_r(&cur)?, s: cur.mutable_set().len() });
    }
    Ok(out)
}

/// Moves sigma_k^- available on R: k in R with k-1 vacant and inside Z.
pub fn allowed_moves(r: &Configuration) -> Vec<i32> {
    r.beads.iter().copied().filter(|&k| k > r.lo() && !r.contains(k - 1)).collect()
}

/// Moves that stay among right configurations of plain partitions (k >= -m + 2).
pub fn arrow_moves(r: &Configuration) -> Vec<i32> {
    allowed_moves(r).into_iter().filter(|&k| k >= r.lo() + 2).collect()
}

pub fn sigma_minus(r: &Configuration, k: i32) -> Result<Configuration> {
    if !r.contains(k) || r.contains(k - 1) || k - 1 < r.lo() {
        return Err(Error::Partial(format!("sigma_{k}^- is not defined on {r}")));
    }
    let mut beads = r.beads.clone();
    beads.remove(&k);
    beads.insert(k - 1);
    Ok(Configuration { beads, ..r.clone() })
}

/// Configuration-side allowedness: each j in J has j-1 vacant or in J.
pub fn is_allowed_config(r: &Configuration, j: &[i32]) -> bool {
    j.iter().all(|&k| r.contains(k) && k > r.lo() && (!r.contains(k - 1) || j.contains(&(k - 1))))
}

/// Sum of the non-negative beads <= l.
pub fn kappa(r: &Configuration, l: i32) -> i32 {
    r.beads.iter().filter(|&&b| b >= 0 && b <= l).sum()
}

/// Sum of the beads <= k.
pub fn nu(r: &Configuration, k: i32) -> i32 {
    r.beads.iter().filter(|&&b| b <= k).sum()
}

/// Sum of all non-negative beads; equals kappa of the partition read by phi_r.
pub fn kappa_config(r: &Configuration) -> i32 {
    r.beads.iter().filter(|&&b| b >= 0).sum()
}

pub fn kappa_total(alpha: &Partition) -> i32 {
    EnhancedPartition::plain(alpha).kappa()
}

/// All right enhanced partitions of shape (m, n) (every bar length).
pub fn right_enhanced(m: usize, n: i32) -> Vec<EnhancedPartition> {
    all_configurations(m, n).iter().map(inverse_phi_r).collect()
}

/// All left enhanced partitions of shape (m, n).
pub fn left_enhanced(m: usize, n: i32) -> Vec<EnhancedPartition> {
    all_configurations(m, n).iter().map(inverse_phi_l).collect()
}

/// Every m-subset of {-m, ..., n}.
pub fn all_configurations(m: usize, n: i32) -> Vec<Configuration> {
    let z: Vec<i32> = (-(m as i32)..=n).collect();
    crate::antichain::subsets_of_size(z.len(), m)
        .into_iter()
        .map(|mask| Configuration {
            m,
            n,
            beads: z.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| *v).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(v: &[i32], n: i32, side: Side, bar: usize) -> EnhancedPartition {
        EnhancedPartition::new(v.to_vec(), n, side, bar).unwrap()
    }

    fn plain(v: &[i32], n: i32) -> EnhancedPartition {
        ep(v, n, Side::Right, 0)
    }

    fn cfg(m: usize, n: i32, b: &[i32]) -> Configuration {
        Configuration::new(m, n, b.iter().copied()).unwrap()
    }

    fn beta() -> EnhancedPartition {
        ep(&[0, 1, 3, 3, 4, 5, 5, 5], 5, Side::Right, 2)
    }

    #[test]
    fn mutable_set_and_q() {
        assert_eq!(beta().mutable_set(), vec![2, 3, 4, 5]);
        assert_eq!(beta().q(&[3, 5]).unwrap(), ep(&[0, 1, 2, 2, 4, 4, 5, 5], 5, Side::Right, 2));
        assert_eq!(beta().q(&[3, 5]).unwrap().to_string(), "(0,1,2^2,4^2|5^2)");
        assert_eq!(beta().q(&[]).unwrap(), beta());
        assert!(beta().q(&[1]).is_err());
        assert_eq!(plain(&[0, 0, 1, 1], 1).q(&[2]).unwrap(), plain(&[0, 0, 0, 0], 1));
    }

    #[test]
    fn p_moves() {
        assert_eq!(plain(&[0, 2, 2, 2, 2, 4, 4, 5], 5).p(2).unwrap(), plain(&[0, 2, 2, 2, 4, 4, 4, 5], 5));
        assert_eq!(plain(&[0, 1, 1, 1], 1).p(1).unwrap(), plain(&[1, 1, 1, 1], 1));
        assert_eq!(plain(&[0, 0, 1, 1], 1).p(1).unwrap(), plain(&[0, 1, 1, 1], 1));
        assert!(plain(&[0, 1, 2], 2).p(2).is_err());
        assert!(plain(&[0, 1, 1], 2).p(2).is_err());
    }

    #[test]
    fn encodings() {
        let a = plain(&[0, 2, 3, 7, 7], 7);
        assert_eq!(phi_r(&a).unwrap(), cfg(5, 7, &[-4, 0, 2, 3, 7]));
        assert_eq!(phi_l(&a).unwrap(), cfg(5, 7, &[-5, 0, 2, 3, 7]));
        assert_eq!(phi_r(&ep(&[0, 2, 3, 7, 7], 7, Side::Right, 1)).unwrap(), cfg(5, 7, &[-5, 0, 2, 3, 7]));
        assert_eq!(phi_r(&ep(&[0, 2, 3, 7, 7], 7, Side::Right, 2)).unwrap(), cfg(5, 7, &[-5, -4, 0, 2, 3]));
        assert_eq!(phi_l(&ep(&[0, 2, 3, 7, 7], 7, Side::Left, 1)).unwrap(), cfg(5, 7, &[-5, -1, 2, 3, 7]));
    }

    #[test]
    fn inverses_round_trip() {
        for m in 1..=3 {
            for n in 0..=3 {
                for r in all_configurations(m, n) {
                    assert_eq!(phi_r(&inverse_phi_r(&r)).unwrap(), r);
                    assert_eq!(phi_l(&inverse_phi_l(&r)).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn f_example() {
        let fb = f(&beta()).unwrap();
        assert_eq!(fb, ep(&[0, 1, 1, 3, 4, 5, 5, 5], 5, Side::Left, 0));
        assert_eq!(fb.to_string(), "(|0,1^2,3,4,5^3)");
        assert!(f(&ep(&[0, 1], 1, Side::Left, 1)).is_err());
    }

    #[test]
    fn f_tilde_is_cyclic_shift() {
        let a = plain(&[0, 2, 3, 7, 7], 7);
        let got = phi_r(&f_tilde(&a).unwrap()).unwrap();
        assert_eq!(got, cfg(5, 7, &[-5, -1, 1, 2, 6]));
    }

    #[test]
    fn orbit_small() {
        let t = orbit_trace(&plain(&[0], 1)).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.iter().map(|s| s.s).sum::<usize>(), 1);
        assert_eq!(t.last().unwrap().configuration, phi_r(&plain(&[0], 1)).unwrap());
    }

    #[test]
    fn delta_j11() {
        let d = delta(&plain(&[1], 1)).unwrap();
        assert_eq!(d.to_string(), "(|0)");
        assert_eq!(g(&d).unwrap(), plain(&[0], 1));
    }

    #[test]
    fn allowed_examples() {
        let a = plain(&[0, 1, 1, 3, 4, 4, 5, 5], 5);
        assert!(a.is_allowed(&[2, 3, 4]));
        assert!(a.is_allowed(&[2]));
        assert!(!a.is_allowed(&[4]));
        assert!(!a.is_allowed(&[5]));
        assert!(a.is_allowed(&[]));
        let r = cfg(5, 7, &[-4, 0, 2, 3, 7]);
        assert_eq!(allowed_moves(&r), vec![-4, 0, 2, 7]);
        assert_eq!(arrow_moves(&r), vec![0, 2, 7]);
    }

    #[test]
    fn sigma_examples() {
        let r = sigma_minus(&cfg(5, 7, &[-4, 0, 2, 3, 7]), 0).unwrap();
        assert_eq!(r, cfg(5, 7, &[-4, -1, 2, 3, 7]));
        assert_eq!(inverse_phi_r(&r), plain(&[2, 2, 3, 7, 7], 7));
        assert_eq!(sigma_minus(&cfg(2, 2, &[0, 2]), 2).unwrap(), cfg(2, 2, &[0, 1]));
        assert!(sigma_minus(&cfg(2, 2, &[0, 1]), 1).is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(kappa_total(&Partition::new(vec![0, 2, 3, 7, 7], 7).unwrap()), 12);
        let r = cfg(5, 7, &[-4, 0, 2, 3, 7]);
        assert_eq!(kappa(&r, 3), 5);
        assert_eq!(kappa(&cfg(2, 2, &[-1, 2]), 1), 0);
        assert_eq!(nu(&r, -1), -4);
        // Detection identity for two positive moves l1 < l2.
        let (l1, l2) = (2, 7);
        assert_eq!(kappa(&sigma_minus(&r, l1).unwrap(), l2), kappa(&r, l2) - 1);
        assert_eq!(kappa(&sigma_minus(&r, l2).unwrap(), l1), kappa(&r, l1));
    }

    #[test]
    fn abacus_text() {
        let t = cfg(2, 1, &[-1, 1]).abacus();
        assert_eq!(t, "-2 -1  0  1\n .  o  .  o\n");
    }
}
