//! Bounded complexes of indecomposable projectives over the incidence algebra
//! of J(m,n), and the exact linear algebra that computes homs out of them.
//!
//! Grading is homological: `boundary(d)` maps degree d to degree d-1, and
//! `D[p]` has `D[p]_d = D_{d-p}` with boundary `(-1)^p d_D`. A map of degree p
//! from C to D is a family `f_d : C_d -> D_{d-p}`; it is a chain map iff
//! `(-1)^p d_D f = f d_C`, and it is null-homotopic iff `f = d_D h + (-1)^p h d_C`
//! for some `h_d : C_d -> D_{d-p+1}`. Composition is plain componentwise
//! composition. Matrices act on column vectors: rows index target summands.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::lattice::{interval_support, Interval, Partition};
use crate::linalg::{q, QMat, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveComplex {
    terms: BTreeMap<i32, Vec<Partition>>,
    bd: BTreeMap<i32, QMat>,
}

fn sign(p: i32) -> Q {
    if p.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

impl ProjectiveComplex {
    /// Checks shapes, that entries only sit on pairs `label(s) <= label(t)`,
    /// and that consecutive boundaries compose to zero.
    pub fn new(terms: BTreeMap<i32, Vec<Partition>>, bd: BTreeMap<i32, QMat>) -> Result<Self> {
        let terms: BTreeMap<i32, Vec<Partition>> = terms.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        let c = ProjectiveComplex { terms, bd: BTreeMap::new() };
        let mut kept = BTreeMap::new();
        for (d, m) in bd {
            let (src, tgt) = (c.labels(d), c.labels(d - 1));
            if m.cols != src.len() || m.rows != tgt.len() {
                return domain(format!("boundary out of degree {d} has the wrong shape"));
            }
            for (r, col, _) in m.nonzero_entries() {
                if !src[col].le(&tgt[r]) {
                    return domain(format!("boundary entry {} -> {} is not an order map", src[col], tgt[r]));
                }
            }
            if !m.is_zero() {
                kept.insert(d, m);
            }
        }
        let c = ProjectiveComplex { bd: kept, ..c };
        for &d in c.bd.keys() {
            if !c.boundary(d - 1).mul(&c.boundary(d)).is_zero() {
                return Err(Error::Invariant(format!("d o d is nonzero at degree {d}")));
            }
        }
        Ok(c)
    }

    /// P_x in degree 0.
    pub fn single(x: Partition) -> Self {
        ProjectiveComplex { terms: BTreeMap::from([(0, vec![x])]), bd: BTreeMap::new() }
    }

    pub fn labels(&self, d: i32) -> &[Partition] {
        self.terms.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> &BTreeMap<i32, Vec<Partition>> {
        &self.terms
    }

    pub fn boundary(&self, d: i32) -> QMat {
        self.bd
            .get(&d)
            .cloned()
            .unwrap_or_else(|| QMat::zeros(self.labels(d - 1).len(), self.labels(d).len()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// D[p]: D[p]_d = D_{d-p}, boundary (-1)^p d.
    pub fn shift(&self, p: i32) -> ProjectiveComplex {
        let s = sign(p);
        ProjectiveComplex {
            terms: self.terms.iter().map(|(d, v)| (d + p, v.clone())).collect(),
            bd: self.bd.iter().map(|(d, m)| (d + p, m.scale(&s))).collect(),
        }
    }

    /// Stupid truncation: keep degrees >= i and drop the boundary out of degree i.
    pub fn stupid_truncation(&self, i: i32) -> ProjectiveComplex {
        ProjectiveComplex {
            terms: self.terms.range(i..).map(|(d, v)| (*d, v.clone())).collect(),
            bd: self.bd.range(i + 1..).map(|(d, m)| (*d, m.clone())).collect(),
        }
    }

    /// The degree-d term as a complex concentrated in degree 0.
    pub fn term_complex(&self, d: i32) -> ProjectiveComplex {
        let mut terms = BTreeMap::new();
        if !self.labels(d).is_empty() {
            terms.insert(0, self.labels(d).to_vec());
        }
        ProjectiveComplex { terms, bd: BTreeMap::new() }
    }

    /// Identity chain map.
    pub fn identity(&self) -> ChainMap {
        let comps = self.terms.iter().map(|(d, v)| (*d, QMat::identity(v.len()))).collect();
        ChainMap { source: self.clone(), target: self.clone(), shift: 0, comps }
    }
}

/// Same data as a projective complex, labels read as injectives I_x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveComplex {
    pub inner: ProjectiveComplex,
}

pub fn apply_nakayama(c: &ProjectiveComplex) -> InjectiveComplex {
    InjectiveComplex { inner: c.clone() }
}

/// Pointwise homology of a complex of projectives: at y, P_x contributes iff y <= x.
pub fn projective_homology(c: &ProjectiveComplex) -> BTreeMap<i32, BTreeMap<Partition, usize>> {
    let mut points = BTreeSet::new();
    for v in c.terms.values() {
        for x in v {
            points.extend(interval_support(&Interval { lo: Partition::bottom(x.m(), x.n), hi: x.clone() }));
        }
    }
    pointwise_homology(c, &points, |y, x| y.le(x))
}

/// Pointwise homology of a complex of injectives: at y, I_x contributes iff x <= y.
pub fn injective_homology(ic: &InjectiveComplex) -> BTreeMap<i32, BTreeMap<Partition, usize>> {
    let c = &ic.inner;
    let mut points = BTreeSet::new();
    for v in c.terms.values() {
        for x in v {
            points.extend(interval_support(&Interval { lo: x.clone(), hi: Partition::top(x.m(), x.n) }));
        }
    }
    pointwise_homology(c, &points, |y, x| x.le(y))
}

fn pointwise_homology(
    c: &ProjectiveComplex,
    points: &BTreeSet<Partition>,
    alive: impl Fn(&Partition, &Partition) -> bool,
) -> BTreeMap<i32, BTreeMap<Partition, usize>> {
    let mut out: BTreeMap<i32, BTreeMap<Partition, usize>> = BTreeMap::new();
    for y in points {
        let keep: BTreeMap<i32, Vec<usize>> = c
            .terms
            .iter()
            .map(|(d, v)| (*d, (0..v.len()).filter(|&i| alive(y, &v[i])).collect()))
            .collect();
        let restricted = |d: i32| -> QMat {
            let empty = Vec::new();
            let (src, tgt) = (keep.get(&d).unwrap_or(&empty), keep.get(&(d - 1)).unwrap_or(&empty));
            let full = c.boundary(d);
            let mut m = QMat::zeros(tgt.len(), src.len());
            for (r, &t) in tgt.iter().enumerate() {
                for (col, &s) in src.iter().enumerate() {
                    m.set(r, col, full.get(t, s).clone());
                }
            }
            m
        };
        for (&d, idx) in &keep {
            if idx.is_empty() {
                continue;
            }
            let out_rank = restricted(d).rank();
            let in_rank = restricted(d + 1).rank();
            let h = idx.len() - out_rank - in_rank;
            if h > 0 {
                out.entry(d).or_default().insert(y.clone(), h);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainOfSpaces {
    pub dims: BTreeMap<i32, usize>,
    /// cobd[d] : degree d -> degree d+1.
    pub cobd: BTreeMap<i32, QMat>,
}

impl CochainOfSpaces {
    pub fn dim(&self, d: i32) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn coboundary(&self, d: i32) -> QMat {
        self.cobd.get(&d).cloned().unwrap_or_else(|| QMat::zeros(self.dim(d + 1), self.dim(d)))
    }
}

/// Hom(C, I) for the interval module I: one basis vector per summand P_x with x in I.
pub fn total_hom(c: &ProjectiveComplex, i: &Interval) -> CochainOfSpaces {
    let keep: BTreeMap<i32, Vec<usize>> =
        c.terms.iter().map(|(d, v)| (*d, (0..v.len()).filter(|&k| i.contains(&v[k])).collect())).collect();
    let dims = keep.iter().map(|(d, v)| (*d, v.len())).collect();
    let mut cobd = BTreeMap::new();
    let empty = Vec::new();
    for &d in keep.keys() {
        let (src, tgt) = (keep.get(&d).unwrap_or(&empty), keep.get(&(d + 1)).unwrap_or(&empty));
        if src.is_empty() || tgt.is_empty() {
            continue;
        }
        let full = c.boundary(d + 1);
        let mut m = QMat::zeros(tgt.len(), src.len());
        for (r, &s) in tgt.iter().enumerate() {
            for (col, &t) in src.iter().enumerate() {
                m.set(r, col, full.get(t, s).clone());
            }
        }
        cobd.insert(d, m);
    }
    CochainOfSpaces { dims, cobd }
}

pub fn cohomology_dims(k: &CochainOfSpaces) -> BTreeMap<i32, usize> {
    k.dims
        .keys()
        .map(|&d| {
            let z = k.dim(d) - k.coboundary(d).rank();
            (d, z - k.coboundary(d - 1).rank())
        })
        .collect()
}

/// dim Hom(C, I[p]) for p in `range`; degrees outside the complex report 0.
pub fn derived_hom(c: &ProjectiveComplex, i: &Interval, range: RangeInclusive<i32>) -> BTreeMap<i32, usize> {
    let h = cohomology_dims(&total_hom(c, i));
    range.map(|p| (p, h.get(&p).copied().unwrap_or(0))).collect()
}

/// Degrees with nonzero derived hom, over the full support of the complex.
pub fn derived_hom_support(c: &ProjectiveComplex, i: &Interval) -> BTreeMap<i32, usize> {
    cohomology_dims(&total_hom(c, i)).into_iter().filter(|(_, v)| *v > 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: ProjectiveComplex,
    pub target: ProjectiveComplex,
    pub shift: i32,
    /// comps[d] : source_d -> target_{d - shift}.
    pub comps: BTreeMap<i32, QMat>,
}

impl ChainMap {
    /// Validates supports and the chain condition.
    pub fn new(
        source: ProjectiveComplex,
        target: ProjectiveComplex,
        shift: i32,
        comps: BTreeMap<i32, QMat>,
    ) -> Result<Self> {
        let f = ChainMap { source, target, shift, comps: BTreeMap::new() };
        let mut kept = BTreeMap::new();
        for (d, m) in comps {
            let (src, tgt) = (f.source.labels(d), f.target.labels(d - shift));
            if m.cols != src.len() || m.rows != tgt.len() {
                return domain(format!("component in degree {d} has the wrong shape"));
            }
            for (r, col, _) in m.nonzero_entries() {
                if !src[col].le(&tgt[r]) {
                    return domain(format!("component entry {} -> {} is not an order map", src[col], tgt[r]));
                }
            }
            if !m.is_zero() {
                kept.insert(d, m);
            }
        }
        let f = ChainMap { comps: kept, ..f };
        if !f.is_chain_map() {
            return domain("components do not commute with the boundaries");
        }
        Ok(f)
    }

    pub fn zero(source: &ProjectiveComplex, target: &ProjectiveComplex, shift: i32) -> Self {
        ChainMap { source: source.clone(), target: target.clone(), shift, comps: BTreeMap::new() }
    }

    pub fn comp(&self, d: i32) -> QMat {
        self.comps.get(&d).cloned().unwrap_or_else(|| {
            QMat::zeros(self.target.labels(d - self.shift).len(), self.source.labels(d).len())
        })
    }

    fn relevant_degrees(&self) -> BTreeSet<i32> {
        let mut ds: BTreeSet<i32> = self.source.degrees().collect();
        ds.extend(self.source.degrees().map(|d| d + 1));
        ds
    }

    pub fn is_chain_map(&self) -> bool {
        let s = sign(self.shift);
        self.relevant_degrees().into_iter().all(|d| {
            let lhs = self.target.boundary(d - self.shift).mul(&self.comp(d)).scale(&s);
            let rhs = self.comp(d - 1).mul(&self.source.boundary(d));
            lhs == rhs
        })
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(QMat::is_zero)
    }

    /// self followed by `g`: the composite C -> D[p] -> E[p+q].
    pub fn then(&self, g: &ChainMap) -> Result<ChainMap> {
        if self.target != g.source {
            return domain("composition of chain maps with mismatched middle complex");
        }
        let comps = self
            .source
            .degrees()
            .map(|d| (d, g.comp(d - self.shift).mul(&self.comp(d))))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        Ok(ChainMap { source: self.source.clone(), target: g.target.clone(), shift: self.shift + g.shift, comps })
    }

    pub fn scale(&self, s: &Q) -> ChainMap {
        let comps =
            self.comps.iter().map(|(d, m)| (*d, m.scale(s))).filter(|(_, m)| !m.is_zero()).collect();
        ChainMap { comps, ..self.clone() }
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.source != other.source || self.target != other.target || self.shift != other.shift {
            return domain("difference of chain maps between different complexes");
        }
        let comps = self
            .source
            .degrees()
            .map(|d| (d, self.comp(d).sub(&other.comp(d))))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        Ok(ChainMap { comps, ..self.clone() })
    }
}

/// Coordinates (degree, target row, source column) of the entries a degree-`shift`
/// map may use, i.e. those with label(source) <= label(target).
#[derive(Clone, Debug)]
struct Slots {
    slots: Vec<(i32, usize, usize)>,
    lookup: BTreeMap<(i32, usize, usize), usize>,
}

impl Slots {
    fn new(c: &ProjectiveComplex, d_cx: &ProjectiveComplex, shift: i32) -> Slots {
        let mut slots = Vec::new();
        for (&d, src) in &c.terms {
            let tgt = d_cx.labels(d - shift);
            for (r, t) in tgt.iter().enumerate() {
                for (col, s) in src.iter().enumerate() {
                    if s.le(t) {
                        slots.push((d, r, col));
                    }
                }
            }
        }
        let lookup = slots.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Slots { slots, lookup }
    }

    fn len(&self) -> usize {
        self.slots.len()
    }

    fn to_map(&self, c: &ProjectiveComplex, d_cx: &ProjectiveComplex, shift: i32, x: &[Q]) -> ChainMap {
        let mut comps: BTreeMap<i32, QMat> = BTreeMap::new();
        for (k, &(d, r, col)) in self.slots.iter().enumerate() {
            if x[k].is_zero() {
                continue;
            }
            let m = comps
                .entry(d)
                .or_insert_with(|| QMat::zeros(d_cx.labels(d - shift).len(), c.labels(d).len()));
            m.set(r, col, x[k].clone());
        }
        ChainMap { source: c.clone(), target: d_cx.clone(), shift, comps }
    }

    fn vectorize(&self, f: &ChainMap) -> Result<Vec<Q>> {
        let mut v = vec![Q::zero(); self.len()];
        for (d, m) in &f.comps {
            for (r, col, val) in m.nonzero_entries() {
                let Some(&k) = self.lookup.get(&(*d, r, col)) else {
                    return domain("map has an entry outside the order-compatible slots");
                };
                v[k] = val;
            }
        }
        Ok(v)
    }
}

/// The linear data of Hom(C, D[shift]) in the homotopy category.
pub struct HomSystem {
    source: ProjectiveComplex,
    target: ProjectiveComplex,
    shift: i32,
    f_slots: Slots,
    h_slots: Slots,
    /// Rows: chain-condition equations; columns: f slots.
    constraints: QMat,
    /// Columns: h slots; rows: f slots. h |-> d h + (-1)^shift h d.
    homotopy: QMat,
}

impl HomSystem {
    pub fn new(c: &ProjectiveComplex, d_cx: &ProjectiveComplex, shift: i32) -> HomSystem {
        let f_slots = Slots::new(c, d_cx, shift);
        let h_slots = Slots::new(c, d_cx, shift - 1);
        let s = sign(shift);

        // Chain condition, one equation per (degree d, target row, source col):
        // s * (d_D f_d)[r][col] - (f_{d-1} d_C)[r][col] = 0.
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let mut degrees: BTreeSet<i32> = c.degrees().collect();
        degrees.extend(c.degrees().map(|d| d + 1));
        for d in degrees {
            let src = c.labels(d);
            let tgt = d_cx.labels(d - shift - 1);
            if src.is_empty() || tgt.is_empty() {
                continue;
            }
            let dd = d_cx.boundary(d - shift);
            let dc = c.boundary(d);
            for r in 0..tgt.len() {
                for col in 0..src.len() {
                    let mut row = vec![Q::zero(); f_slots.len()];
                    for mid in 0..d_cx.labels(d - shift).len() {
                        if let Some(&k) = f_slots.lookup.get(&(d, mid, col)) {
                            row[k] += &s * dd.get(r, mid);
                        }
                    }
                    for mid in 0..c.labels(d - 1).len() {
                        if let Some(&k) = f_slots.lookup.get(&(d - 1, r, mid)) {
                            row[k] -= dc.get(mid, col);
                        }
                    }
                    if row.iter().any(|v| !v.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let constraints = if rows.is_empty() { QMat::zeros(0, f_slots.len()) } else { QMat::from_rows(&rows) };

        // f_d = d_D h_d + s h_{d-1} d_C with h_d : C_d -> D_{d-shift+1}.
        let mut homotopy = QMat::zeros(f_slots.len(), h_slots.len());
        for (hk, &(hd, hr, hc)) in h_slots.slots.iter().enumerate() {
            // d_D h_d: contributes to f_{hd}[r][hc] with coefficient d_D(hd - shift + 1)[r][hr].
            let dd = d_cx.boundary(hd - shift + 1);
            for r in 0..dd.rows {
                let v = dd.get(r, hr);
                if !v.is_zero() {
                    let fk = f_slots.lookup[&(hd, r, hc)];
                    let cur = homotopy.get(fk, hk) + v;
                    homotopy.set(fk, hk, cur);
                }
            }
            // s h_{hd} d_C(hd + 1): contributes to f_{hd+1}[hr][col].
            let dc = c.boundary(hd + 1);
            for col in 0..dc.cols {
                let v = dc.get(hc, col);
                if !v.is_zero() {
                    let fk = f_slots.lookup[&(hd + 1, hr, col)];
                    let cur = homotopy.get(fk, hk) + &s * v;
                    homotopy.set(fk, hk, cur);
                }
            }
        }
        HomSystem { source: c.clone(), target: d_cx.clone(), shift, f_slots, h_slots, constraints, homotopy }
    }

    pub fn cycles_dim(&self) -> usize {
        self.f_slots.len() - self.constraints.rank()
    }

    pub fn boundaries_dim(&self) -> usize {
        if self.h_slots.len() == 0 {
            0
        } else {
            self.homotopy.rank()
        }
    }

    pub fn dim(&self) -> usize {
        self.cycles_dim() - self.boundaries_dim()
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> Result<bool> {
        if f.source != self.source || f.target != self.target || f.shift != self.shift {
            return domain("map does not belong to this hom space");
        }
        if !f.is_chain_map() {
            return domain("not a chain map");
        }
        let v = self.f_slots.vectorize(f)?;
        if v.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        if self.h_slots.len() == 0 {
            return Ok(false);
        }
        Ok(self.homotopy.solve(&v).is_some())
    }

    /// Some chain map whose prescribed entries (degree, target row, source col) take the given values.
    pub fn solve_with(&self, fixed: &[((i32, usize, usize), Q)]) -> Result<Option<ChainMap>> {
        let n = self.f_slots.len();
        let mut rows: Vec<Vec<Q>> = (0..self.constraints.rows).map(|r| self.constraints.row(r).to_vec()).collect();
        let mut rhs = vec![Q::zero(); rows.len()];
        for (slot, val) in fixed {
            let Some(&k) = self.f_slots.lookup.get(slot) else {
                return domain(format!("slot {slot:?} is not available for this hom space"));
            };
            let mut row = vec![Q::zero(); n];
            row[k] = Q::one();
            rows.push(row);
            rhs.push(val.clone());
        }
        if rows.is_empty() {
            return Ok(Some(self.f_slots.to_map(&self.source, &self.target, self.shift, &vec![Q::zero(); n])));
        }
        let a = QMat::from_rows(&rows);
        Ok(a.solve(&rhs).map(|x| self.f_slots.to_map(&self.source, &self.target, self.shift, &x)))
    }
}

pub fn homotopy_hom_dim(c: &ProjectiveComplex, d_cx: &ProjectiveComplex, shift: i32) -> usize {
    HomSystem::new(c, d_cx, shift).dim()
}

pub fn is_null_homotopic(f: &ChainMap) -> Result<bool> {
    HomSystem::new(&f.source, &f.target, f.shift).is_null_homotopic(f)
}

/// Cone of f : C -> D[p]: degree d term C_{d-1} (+) D[p]_d, boundary [[-d_C, 0], [f, d_{D[p]}]].
pub fn mapping_cone(f: &ChainMap) -> Result<ProjectiveComplex> {
    if !f.is_chain_map() {
        return domain("cone of a non-chain map");
    }
    let c = &f.source;
    let dp = f.target.shift(f.shift);
    let mut degrees: BTreeSet<i32> = c.degrees().map(|d| d + 1).collect();
    degrees.extend(dp.degrees());
    let mut terms = BTreeMap::new();
    for &d in &degrees {
        let mut v = c.labels(d - 1).to_vec();
        v.extend_from_slice(dp.labels(d));
        terms.insert(d, v);
    }
    let mut bd = BTreeMap::new();
    for &d in &degrees {
        let (cs, ds) = (c.labels(d - 1).len(), dp.labels(d).len());
        let (ct, dt) = (c.labels(d - 2).len(), dp.labels(d - 1).len());
        let mut m = QMat::zeros(ct + dt, cs + ds);
        let dc = c.boundary(d - 1);
        let fm = f.comp(d - 1);
        let dd = dp.boundary(d);
        for r in 0..ct {
            for col in 0..cs {
                m.set(r, col, -dc.get(r, col).clone());
            }
        }
        for r in 0..dt {
            for col in 0..cs {
                m.set(ct + r, col, fm.get(r, col).clone());
            }
            for col in 0..ds {
                m.set(ct + r, cs + col, dd.get(r, col).clone());
            }
        }
        bd.insert(d, m);
    }
    ProjectiveComplex::new(terms, bd)
}

/// Build a complex from per-degree labels and sparse boundary entries
/// (degree d, target index, source index, coefficient).
pub fn complex_from_entries(
    terms: BTreeMap<i32, Vec<Partition>>,
    entries: &[(i32, usize, usize, i64)],
) -> Result<ProjectiveComplex> {
    let mut bd: BTreeMap<i32, QMat> = BTreeMap::new();
    for &(d, r, c, v) in entries {
        let rows = terms.get(&(d - 1)).map_or(0, Vec::len);
        let cols = terms.get(&d).map_or(0, Vec::len);
        if r >= rows || c >= cols {
            return domain("boundary entry out of range");
        }
        let m = bd.entry(d).or_insert_with(|| QMat::zeros(rows, cols));
        m.set(r, c, q(v));
    }
    ProjectiveComplex::new(terms, bd)
}
