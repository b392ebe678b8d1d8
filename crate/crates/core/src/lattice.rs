//! The lattice J(m,n): non-decreasing sequences of length m with values in
//! [0, n], ordered termwise.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{domain, Error, Result};

pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub values: Vec<i32>,
    pub n: i32,
}

impl Partition {
    pub fn new(values: Vec<i32>, n: i32) -> Result<Self> {
        if values.is_empty() {
            return domain("a partition needs m >= 1 values");
        }
        if n < 0 {
            return domain("n must be non-negative");
        }
        if values.iter().any(|&v| v < 0 || v > n) {
            return domain(format!("values {values:?} leave [0, {n}]"));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return domain(format!("values {values:?} are not non-decreasing"));
        }
        Ok(Partition { values, n })
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn bottom(m: usize, n: i32) -> Self {
        Partition { values: vec![0; m], n }
    }

    pub fn top(m: usize, n: i32) -> Self {
        Partition { values: vec![n; m], n }
    }

    /// Termwise comparison. Callers must pass partitions of the same shape.
    pub fn le(&self, other: &Partition) -> bool {
        debug_assert!(self.same_shape(other));
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    pub fn same_shape(&self, other: &Partition) -> bool {
        self.m() == other.m() && self.n == other.n
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a.min(b)).collect();
        Partition { values, n: self.n }
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a.max(b)).collect();
        Partition { values, n: self.n }
    }

    /// Parse "0,2,3,7,7".
    pub fn parse(s: &str, n: i32) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|e| Error::Domain(format!("bad value {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(values, n)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn check_shape(a: &Partition, b: &Partition) -> Result<()> {
    if a.same_shape(b) {
        Ok(())
    } else {
        domain(format!("{a} and {b} live in different lattices"))
    }
}

pub fn meet(a: &Partition, b: &Partition) -> Result<Partition> {
    check_shape(a, b)?;
    Ok(a.meet(b))
}

pub fn join(a: &Partition, b: &Partition) -> Result<Partition> {
    check_shape(a, b)?;
    Ok(a.join(b))
}

pub fn leq(a: &Partition, b: &Partition) -> Result<bool> {
    check_shape(a, b)?;
    Ok(a.le(b))
}

pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[derive(Clone, Debug)]
pub struct GridLattice {
    pub m: usize,
    pub n: i32,
    pub elements: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
}

pub fn build_lattice(m: usize, n: i32) -> Result<GridLattice> {
    build_lattice_capped(m, n, DEFAULT_CAP)
}

pub fn build_lattice_capped(m: usize, n: i32, cap: u128) -> Result<GridLattice> {
    if m == 0 || n < 0 {
        return domain(format!("need m >= 1 and n >= 0, got ({m},{n})"));
    }
    let size = binomial(m as u64 + n as u64, m as u64);
    if size > cap {
        return Err(Error::SizeCap { m, n, size, cap });
    }
    let lo = Partition::bottom(m, n);
    let hi = Partition::top(m, n);
    let elements = between(&lo, &hi);
    let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(GridLattice { m, n, elements, index })
}

impl GridLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn bottom(&self) -> Partition {
        Partition::bottom(self.m, self.n)
    }

    pub fn top(&self) -> Partition {
        Partition::top(self.m, self.n)
    }

    /// Covering pairs (i, j) with elements[i] covered by elements[j]: one entry grows by 1.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, p) in self.elements.iter().enumerate() {
            for k in 0..self.m {
                let mut v = p.values.clone();
                v[k] += 1;
                if v[k] <= self.n && (k + 1 == self.m || v[k] <= v[k + 1]) {
                    let q = Partition { values: v, n: self.n };
                    out.push((i, self.index[&q]));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// All non-decreasing sequences x with lo <= x <= hi, in lexicographic order.
fn between(lo: &Partition, hi: &Partition) -> Vec<Partition> {
    fn rec(k: usize, lo: &[i32], hi: &[i32], cur: &mut Vec<i32>, n: i32, out: &mut Vec<Partition>) {
        if k == lo.len() {
            out.push(Partition { values: cur.clone(), n });
            return;
        }
        let start = lo[k].max(cur.last().copied().unwrap_or(0));
        for v in start..=hi[k] {
            cur.push(v);
            rec(k + 1, lo, hi, cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, &lo.values, &hi.values, &mut Vec::with_capacity(lo.m()), lo.n, &mut out);
    out
}

/// Z[y][x] = 1 iff y <= x; row and column order is the canonical one.
pub fn zeta_matrix(l: &GridLattice) -> Vec<Vec<i64>> {
    let e = &l.elements;
    e.iter().map(|y| e.iter().map(|x| i64::from(y.le(x))).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub lo: Partition,
    pub hi: Partition,
}

impl Interval {
    pub fn new(lo: Partition, hi: Partition) -> Result<Self> {
        check_shape(&lo, &hi)?;
        if !lo.le(&hi) {
            return domain(format!("{lo} is not below {hi}"));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, x: &Partition) -> bool {
        self.lo.le(x) && x.le(&self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub fn interval_support(i: &Interval) -> Vec<Partition> {
    between(&i.lo, &i.hi)
}

/// dim Hom([a,b],[c,d]) for interval modules: 1 iff a <= c <= b <= d.
pub fn interval_hom_dim(i1: &Interval, i2: &Interval) -> u32 {
    let (a, b, c, d) = (&i1.lo, &i1.hi, &i2.lo, &i2.hi);
    u32::from(a.le(c) && c.le(b) && b.le(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i32], n: i32) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn j22_listing() {
        let l = build_lattice(2, 2).unwrap();
        let got: Vec<Vec<i32>> = l.elements.iter().map(|x| x.values.clone()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(build_lattice(3, 2).unwrap().len(), 10);
        assert_eq!(build_lattice(1, 1).unwrap().len(), 2);
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(meet(&p(&[0, 2], 2), &p(&[1, 1], 2)).unwrap(), p(&[0, 1], 2));
        assert_eq!(join(&p(&[0, 2], 2), &p(&[1, 1], 2)).unwrap(), p(&[1, 2], 2));
        assert!(leq(&p(&[0, 1], 2), &p(&[1, 1], 2)).unwrap());
        assert!(meet(&p(&[0, 2], 2), &p(&[1], 2)).is_err());
    }

    #[test]
    fn zeta_small() {
        assert_eq!(zeta_matrix(&build_lattice(1, 1).unwrap()), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(zeta_matrix(&build_lattice(1, 0).unwrap()), vec![vec![1]]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_lattice_capped(3, 3, 19), Err(Error::SizeCap { size: 20, .. })));
    }

    #[test]
    fn intervals() {
        let i = Interval::new(p(&[1, 1], 2), p(&[2, 2], 2)).unwrap();
        assert_eq!(interval_support(&i), vec![p(&[1, 1], 2), p(&[1, 2], 2), p(&[2, 2], 2)]);
        assert!(Interval::new(p(&[2, 2], 2), p(&[1, 1], 2)).is_err());
        let a = Interval::new(p(&[0, 0], 2), p(&[0, 1], 2)).unwrap();
        let b = Interval::new(p(&[0, 1], 2), p(&[0, 2], 2)).unwrap();
        assert_eq!(interval_hom_dim(&a, &b), 1);
        assert_eq!(interval_hom_dim(&a, &a), 1);
        assert_eq!(interval_hom_dim(&i, &a), 0);
    }
}
