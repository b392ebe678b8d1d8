//! Higher Auslander algebras of type A as quivers with relations, quadratic
//! duals, the tilting object T = (+) P_alpha[shift], and comparisons of
//! presentations under explicit vertex bijections.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{kappa_total, Configuration};
use crate::error::{domain, Error, Result};
use crate::lattice::{build_lattice, Partition};
use crate::linalg::{orthogonal_complement, q, same_span, Q};
use crate::quiver::{Arrow, Orientation, QuiverPresentation, Term};
use crate::ycat::{hom_degree, plain_configurations, presentation, Variant};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AuslanderVertex {
    pub seq: Vec<i32>,
}

impl fmt::Display for AuslanderVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.seq.iter().map(i32::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Strictly increasing sequences of length d+1 in [1, d+s], lexicographic.
pub fn auslander_vertices(s: usize, d: usize) -> Vec<AuslanderVertex> {
    let top = (d + s) as i32;
    let len = d + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(next: i32, top: i32, len: usize, cur: &mut Vec<i32>, out: &mut Vec<AuslanderVertex>) {
        if cur.len() == len {
            out.push(AuslanderVertex { seq: cur.clone() });
            return;
        }
        for v in next..=top {
            cur.push(v);
            rec(v + 1, top, len, cur, out);
            cur.pop();
        }
    }
    rec(1, top, len, &mut cur, &mut out);
    out
}

/// Replace k by k+1 when k is present, k+1 is absent and k+1 <= top.
pub fn sigma_plus(x: &AuslanderVertex, k: i32, top: i32) -> Option<AuslanderVertex> {
    if !x.seq.contains(&k) || x.seq.contains(&(k + 1)) || k + 1 > top {
        return None;
    }
    let seq = x.seq.iter().map(|&v| if v == k { k + 1 } else { v }).collect();
    Some(AuslanderVertex { seq })
}

/// A_s^d: arrows x -> sigma_k^+(x), commuting squares, and the zero paths
/// "k+1 up, then k up" when k, k+1 are in x and k+2 is not. Recorded as the
/// opposite of the path algebra quotient.
pub fn higher_auslander(s: usize, d: usize) -> Result<QuiverPresentation> {
    if s == 0 {
        return domain("A_s^d needs s >= 1");
    }
    let top = (d + s) as i32;
    let verts = auslander_vertices(s, d);
    let index: BTreeMap<&AuslanderVertex, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut arrows = Vec::new();
    let mut arrow_of: BTreeMap<(usize, i32), usize> = BTreeMap::new();
    for (i, x) in verts.iter().enumerate() {
        for &k in &x.seq {
            if let Some(y) = sigma_plus(x, k, top) {
                arrow_of.insert((i, k), arrows.len());
                arrows.push(Arrow { id: format!("a{k}@{x}"), src: i, tgt: index[&y] });
            }
        }
    }
    let step = |i: usize, k: i32| index[&sigma_plus(&verts[i], k, top).expect("move defined")];
    let mut relations = Vec::new();
    for (i, x) in verts.iter().enumerate() {
        let movable: Vec<i32> = x.seq.iter().copied().filter(|&k| sigma_plus(x, k, top).is_some()).collect();
        for (t, &k) in movable.iter().enumerate() {
            for &l in &movable[t + 1..] {
                relations.push(vec![
                    Term { coeff: q(1), path: [arrow_of[&(i, l)], arrow_of[&(step(i, l), k)]] },
                    Term { coeff: q(-1), path: [arrow_of[&(i, k)], arrow_of[&(step(i, k), l)]] },
                ]);
            }
        }
        for &k in &x.seq {
            if x.seq.contains(&(k + 1)) && sigma_plus(x, k + 1, top).is_some() {
                let mid = step(i, k + 1);
                relations.push(vec![Term { coeff: q(1), path: [arrow_of[&(i, k + 1)], arrow_of[&(mid, k)]] }]);
            }
        }
    }
    let labels = verts.iter().map(ToString::to_string).collect();
    QuiverPresentation::new(Orientation::Op, labels, arrows, relations)
}

/// Reverse the arrows and take the orthogonal complement of the relation space in
/// the dual of the 2-path space; the path [a, b] pairs with the op path [b*, a*].
pub fn quadratic_dual(p: &QuiverPresentation) -> Result<QuiverPresentation> {
    let paths = p.two_paths();
    let perp = orthogonal_complement(&p.relation_vectors(), paths.len());
    let arrows = p
        .arrows
        .iter()
        .map(|a| Arrow { id: format!("{}*", a.id), src: a.tgt, tgt: a.src })
        .collect();
    let relations = perp
        .into_iter()
        .map(|v| {
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| Term { coeff: c, path: [paths[t][1], paths[t][0]] })
                .collect()
        })
        .collect();
    QuiverPresentation::new(p.orientation, p.vertices.clone(), arrows, relations)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingSummand {
    pub alpha: Partition,
    pub kappa: i32,
    /// The shift that puts every morphism between summands in degree 0: -kappa.
    pub shift: i32,
}

pub fn tilting_summands(m: usize, n: i32) -> Result<Vec<TiltingSummand>> {
    Ok(build_lattice(m, n)?
        .elements
        .into_iter()
        .map(|alpha| {
            let k = kappa_total(&alpha);
            TiltingSummand { alpha, kappa: k, shift: -k }
        })
        .collect())
}

/// (i, j, t): Hom(P_i[shift_i], P_j[shift_j][t]) is nonzero, for every pair of summands.
pub fn tilting_hom_degrees(m: usize, n: i32) -> Result<Vec<(usize, usize, i32)>> {
    let t = tilting_summands(m, n)?;
    let mut out = Vec::new();
    for (i, a) in t.iter().enumerate() {
        for (j, b) in t.iter().enumerate() {
            if let Some(h) = hom_degree(&a.alpha, &b.alpha)? {
                out.push((i, j, h.degree as i32 - b.shift + a.shift));
            }
        }
    }
    Ok(out)
}

/// The variant-v presentation of Y(m,n) read on the summands of T. Fails if some
/// morphism between shifted summands sits outside degree 0.
pub fn end_tilting_presentation(m: usize, n: i32) -> Result<QuiverPresentation> {
    if let Some(bad) = tilting_hom_degrees(m, n)?.into_iter().find(|x| x.2 != 0) {
        return Err(Error::Invariant(format!("T has a self-extension in degree {} ({:?})", bad.2, bad)));
    }
    presentation(m, n, Variant::V)
}

/// Complement of R in {-m+1, ..., n}, shifted by +m: a vertex of A_{m+1}^{n-1}.
pub fn complement_shift(r: &Configuration) -> Result<AuslanderVertex> {
    let lo = -(r.m as i32);
    if r.contains(lo) {
        return domain(format!("{r} holds -{} and is not the configuration of a plain partition", r.m));
    }
    let seq = (lo + 1..=r.n).filter(|k| !r.contains(*k)).map(|k| k + r.m as i32).collect();
    Ok(AuslanderVertex { seq })
}

/// R shifted by +m: a vertex of A_{n+1}^{m-1}.
pub fn plain_shift(r: &Configuration) -> Result<AuslanderVertex> {
    if r.contains(-(r.m as i32)) {
        return domain(format!("{r} is not the configuration of a plain partition"));
    }
    Ok(AuslanderVertex { seq: r.beads.iter().map(|k| k + r.m as i32).collect() })
}

fn bijection_by<F>(from: &[String], to: &QuiverPresentation, map: F) -> Result<Vec<usize>>
where
    F: Fn(usize) -> Result<String>,
{
    (0..from.len())
        .map(|i| {
            let label = map(i)?;
            to.vertex_index(&label).ok_or_else(|| Error::Domain(format!("vertex {label} missing from the target")))
        })
        .collect()
}

/// Vertex map Y(m,n) -> A_{m+1}^{n-1} by complement_shift.
pub fn tilting_bijection(m: usize, n: i32, y: &QuiverPresentation, a: &QuiverPresentation) -> Result<Vec<usize>> {
    let configs = plain_configurations(m, n)?;
    bijection_by(&y.vertices, a, |i| Ok(complement_shift(&configs[i])?.to_string()))
}

/// Vertex map Y(m,n) -> A_{n+1}^{m-1} by the shift R + m.
pub fn dual_bijection(m: usize, n: i32, y: &QuiverPresentation, a: &QuiverPresentation) -> Result<Vec<usize>> {
    let configs = plain_configurations(m, n)?;
    bijection_by(&y.vertices, a, |i| Ok(plain_shift(&configs[i])?.to_string()))
}

/// Vertex map A_s^d -> A_{d+2}^{s-2} by complement in [1, d+s].
pub fn complement_bijection(s: usize, d: usize, a: &QuiverPresentation, b: &QuiverPresentation) -> Result<Vec<usize>> {
    let verts = auslander_vertices(s, d);
    let top = (d + s) as i32;
    bijection_by(&a.vertices, b, |i| {
        let seq = (1..=top).filter(|k| !verts[i].seq.contains(k)).collect();
        Ok(AuslanderVertex { seq }.to_string())
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    /// arrow i of the first presentation goes to arrow arrow_map[i] of the second.
    pub arrow_map: Vec<usize>,
    /// +-1 per arrow of the first presentation.
    pub scaling: Vec<i32>,
}

impl IsoWitness {
    pub fn is_identity_scaling(&self) -> bool {
        self.scaling.iter().all(|&c| c == 1)
    }
}

fn mapped_relations(p1: &QuiverPresentation, p2: &QuiverPresentation, arrow_map: &[usize], scaling: &[i32]) -> Vec<Vec<Q>> {
    let idx = p2.path_index();
    p1.relations
        .iter()
        .map(|rel| {
            let mut v = vec![Q::zero(); idx.len()];
            for t in rel {
                let [a, b] = t.path;
                let c = q(i64::from(scaling[a] * scaling[b]));
                v[idx[&[arrow_map[a], arrow_map[b]]]] += &t.coeff * c;
            }
            v
        })
        .collect()
}

/// Solve a system over GF(2); rows are (variable mask, rhs).
fn solve_gf2(rows: Vec<(Vec<bool>, bool)>, vars: usize) -> Option<Vec<bool>> {
    let mut rows = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[c]) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0[c] {
                for t in 0..vars {
                    row.0[t] ^= pivot.0[t];
                }
                row.1 ^= pivot.1;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row.1) {
        return None;
    }
    let mut x = vec![false; vars];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i].1;
    }
    Some(x)
}

/// Looks for an isomorphism of presentations extending the vertex bijection: arrows
/// go to the unique arrow between the image endpoints, possibly rescaled by signs,
/// and the relation spaces correspond exactly.
pub fn find_isomorphism(p1: &QuiverPresentation, p2: &QuiverPresentation, vmap: &[usize]) -> Result<Option<IsoWitness>> {
    if vmap.len() != p1.vertices.len() {
        return domain("vertex bijection is not total");
    }
    let mut seen = vec![false; p2.vertices.len()];
    for &v in vmap {
        if v >= seen.len() || seen[v] {
            return domain("vertex map is not a bijection");
        }
        seen[v] = true;
    }
    if p1.orientation != p2.orientation || p1.vertices.len() != p2.vertices.len() || p1.arrows.len() != p2.arrows.len() {
        return Ok(None);
    }
    let mut arrow_map = Vec::with_capacity(p1.arrows.len());
    let mut used = vec![false; p2.arrows.len()];
    for a in &p1.arrows {
        let c = p2.arrows_between(vmap[a.src], vmap[a.tgt]);
        if c.len() != 1 || used[c[0]] {
            return Ok(None);
        }
        used[c[0]] = true;
        arrow_map.push(c[0]);
    }
    let dim = p2.two_paths().len();
    let target = p2.relation_vectors();
    let ones = vec![1; p1.arrows.len()];
    if same_span(&mapped_relations(p1, p2, &arrow_map, &ones), &target, dim) {
        return Ok(Some(IsoWitness { arrow_map, scaling: ones }));
    }

    // Sign rescaling: each binomial relation x p + y q of p1 must become proportional
    // to a binomial relation x' p' + y' q' of p2, i.e. c_p c_q = (x' y) / (y' x).
    let mut by_pair: BTreeMap<[[usize; 2]; 2], (Q, Q)> = BTreeMap::new();
    for rel in &p2.relations {
        if let [a, b] = rel.as_slice() {
            by_pair.insert([a.path, b.path], (a.coeff.clone(), b.coeff.clone()));
            by_pair.insert([b.path, a.path], (b.coeff.clone(), a.coeff.clone()));
        }
    }
    let vars = p1.arrows.len();
    let mut rows = Vec::new();
    for rel in &p1.relations {
        let [t1, t2] = rel.as_slice() else { continue };
        let pm = [arrow_map[t1.path[0]], arrow_map[t1.path[1]]];
        let qm = [arrow_map[t2.path[0]], arrow_map[t2.path[1]]];
        let Some((x2, y2)) = by_pair.get(&[pm, qm]) else { return Ok(None) };
        let ratio = (x2 * &t2.coeff) / (y2 * &t1.coeff);
        let rhs = if ratio.is_one() {
            false
        } else if (-ratio).is_one() {
            true
        } else {
            return Ok(None);
        };
        let mut mask = vec![false; vars];
        for a in t1.path.iter().chain(&t2.path) {
            mask[*a] ^= true;
        }
        rows.push((mask, rhs));
    }
    let Some(bits) = solve_gf2(rows, vars) else { return Ok(None) };
    let scaling: Vec<i32> = bits.iter().map(|&b| if b { -1 } else { 1 }).collect();
    if same_span(&mapped_relations(p1, p2, &arrow_map, &scaling), &target, dim) {
        Ok(Some(IsoWitness { arrow_map, scaling }))
    } else {
        Ok(None)
    }
}

pub fn presentations_isomorphic(p1: &QuiverPresentation, p2: &QuiverPresentation, vmap: &[usize]) -> Result<bool> {
    Ok(find_isomorphism(p1, p2, vmap)?.is_some())
}
