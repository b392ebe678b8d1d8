//! Verification checks on a single instance J(m,n), shared by the command line
//! `verify` and the acceptance runner.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::antichain::{antichains_below, boolean_witness, classify, predicted_hom, Prediction};
use crate::auslander::{
    complement_bijection, dual_bijection, end_tilting_presentation, find_isomorphism, higher_auslander,
    quadratic_dual, tilting_bijection, tilting_hom_degrees,
};
use crate::combinatorics::{
    arrow_moves, associated_interval, f_tilde, orbit_trace, sigma_minus, yildirim_antichain, Configuration,
    EnhancedPartition,
};
use crate::error::{domain, Result};
use crate::homalg::{apply_nakayama, derived_hom_support, injective_homology, is_null_homotopic};
use crate::k0::coxeter_order_check;
use crate::lattice::{binomial, build_lattice, interval_support, GridLattice, Partition};
use crate::ycat::{
    compose_word, epsilon, hom0_characterizations, hom_degree, interval_of, object, plain_configurations,
    presentation, square_relations, verify_relation_with, verify_zero_relation, word_chain_map, MorphismWord,
    Variant, WordValue,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Cardinality,
    Antichains,
    Hom,
    Hom0,
    Orbit,
    SerreStep,
    Coxeter,
    Relations,
    Words,
    Tilting,
    Duality,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::Cardinality,
        CheckId::Antichains,
        CheckId::Hom,
        CheckId::Hom0,
        CheckId::Orbit,
        CheckId::SerreStep,
        CheckId::Coxeter,
        CheckId::Relations,
        CheckId::Words,
        CheckId::Tilting,
        CheckId::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Cardinality => "cardinality",
            CheckId::Antichains => "antichains",
            CheckId::Hom => "hom",
            CheckId::Hom0 => "hom0",
            CheckId::Orbit => "orbit",
            CheckId::SerreStep => "serre-step",
            CheckId::Coxeter => "coxeter",
            CheckId::Relations => "relations",
            CheckId::Words => "words",
            CheckId::Tilting => "tilting",
            CheckId::Duality => "duality",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .map_or_else(|| domain(format!("unknown check {s:?}")), Ok)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: CheckId,
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    fn from_failures(check: CheckId, checked: usize, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            CheckOutcome { check, status: Status::Pass, detail: format!("{checked} cases") }
        } else {
            let detail = format!("{} of {checked} cases fail; first: {}", failures.len(), failures[0]);
            CheckOutcome { check, status: Status::Fail, detail }
        }
    }

    fn skip(check: CheckId, why: &str) -> Self {
        CheckOutcome { check, status: Status::Skip, detail: why.into() }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Deliberate corruption, used to show that failures reach the exit status.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Faults {
    /// Flip the square sign in the relation check and the sign in the K0 check.
    pub corrupt_sign: bool,
}

pub fn run_check(check: CheckId, m: usize, n: i32, faults: Faults) -> Result<CheckOutcome> {
    let l = build_lattice(m, n)?;
    match check {
        CheckId::Cardinality => Ok(cardinality(&l)),
        CheckId::Antichains => Ok(antichain_laws(&l, AntichainScope::ExceptTop)),
        CheckId::Hom => hom_oracle(&l),
        CheckId::Hom0 => hom0_equivalence(&l),
        CheckId::Orbit => orbit_certificate(&l),
        CheckId::SerreStep => serre_step(&l),
        CheckId::Coxeter => coxeter(m, n, faults),
        CheckId::Relations => relations(m, n, faults),
        CheckId::Words => words(m, n, 3),
        CheckId::Tilting => tilting(m, n),
        CheckId::Duality => duality(m, n),
    }
}

pub fn cardinality(l: &GridLattice) -> CheckOutcome {
    let want = binomial((l.m as u64) + l.n as u64, l.m as u64);
    let got = l.len() as u128;
    let failures = if got == want { vec![] } else { vec![format!("{got} elements, expected {want}")] };
    CheckOutcome::from_failures(CheckId::Cardinality, 1, failures)
}

/// Which antichains the law inclusive <=> strong is asked of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntichainScope {
    /// Every antichain below every element, {top} included.
    Literal,
    /// The singleton {top} is exempt from inclusive <=> strong: it is strong, and the
    /// empty subset keeps it from being inclusive.
    ExceptTop,
}

/// inclusive <=> strong; intersective and not {top} => strong; boolean <=> a boolean
/// sublattice witness exists.
pub fn antichain_laws(l: &GridLattice, scope: AntichainScope) -> CheckOutcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut only_singletons = true;
    for top in &l.elements {
        for c in antichains_below(top) {
            checked += 1;
            let f = classify(&c);
            let singleton_top = c.members() == std::slice::from_ref(top);
            let witness = boolean_witness(&c).is_some();
            let mut broken = Vec::new();
            let exempt = scope == AntichainScope::ExceptTop && singleton_top;
            if f.inclusive != f.strong && !exempt {
                broken.push("inclusive <=> strong");
            }
            if f.intersective && !singleton_top && !f.strong {
                broken.push("intersective => strong");
            }
            if f.boolean != witness {
                broken.push("boolean <=> witness");
            }
            if !broken.is_empty() {
                only_singletons &= singleton_top;
                let members: Vec<String> = c.members().iter().map(ToString::to_string).collect();
                failures.push(format!("{{{}}} below {top}: {}", members.join(" "), broken.join(", ")));
            }
        }
    }
    let mut out = CheckOutcome::from_failures(CheckId::Antichains, checked, failures);
    if out.status == Status::Fail && only_singletons {
        out.detail.push_str(" (every failure is the singleton {top})");
    }
    out
}

/// The oracle hom is concentrated in at most one degree with dimension at most one,
/// and agrees with predicted_hom and with hom_degree.
pub fn hom_oracle(l: &GridLattice) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for a in &l.elements {
        let c = object(a);
        let chain = yildirim_antichain(&EnhancedPartition::plain(a));
        let s = EnhancedPartition::plain(a).mutable_set();
        for b in &l.elements {
            let i = interval_of(b);
            let oracle = derived_hom_support(&c, &i);
            let pred = match predicted_hom(&chain, &i)? {
                Prediction::Concentrated { subset, degree } => {
                    let j: Vec<usize> = (0..s.len()).filter(|t| subset >> t & 1 == 1).map(|t| s[t]).collect();
                    Some((j, degree))
                }
                Prediction::Acyclic => None,
            };
            let hd = hom_degree(a, b)?.map(|h| (h.j, h.degree));
            let expected: BTreeMap<i32, usize> = pred.iter().map(|(_, d)| (*d as i32, 1)).collect();
            if oracle.len() > 1 || oracle.values().any(|&d| d > 1) || oracle != expected || pred != hd {
                failures.push(format!("{a} -> {b}: oracle {oracle:?}, predicted {pred:?}, hom_degree {hd:?}"));
            }
        }
    }
    Ok(CheckOutcome::from_failures(CheckId::Hom, l.len() * l.len(), failures))
}

pub fn hom0_equivalence(l: &GridLattice) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for a in &l.elements {
        for b in &l.elements {
            let items = hom0_characterizations(a, b)?;
            if items.iter().any(|&x| x != items[0]) {
                failures.push(format!("{a} -> {b}: {items:?}"));
            }
        }
    }
    Ok(CheckOutcome::from_failures(CheckId::Hom0, l.len() * l.len(), failures))
}

/// f~ has order m+n+1 on every element and the |S| along the orbit sum to mn.
pub fn orbit_certificate(l: &GridLattice) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let want = l.m as i64 * i64::from(l.n);
    for a in &l.elements {
        let start = EnhancedPartition::plain(a);
        let trace = orbit_trace(&start)?;
        let total: usize = trace.iter().map(|s| s.s).sum();
        let back = trace.last().map(|s| &s.configuration) == Some(&crate::ycat::config_of(a));
        if !back || total as i64 != want {
            failures.push(format!("{a}: returns {back}, sum |S| = {total}"));
        }
    }
    Ok(CheckOutcome::from_failures(CheckId::Orbit, l.len(), failures))
}

/// Homology of nu(P_alpha) is the interval [f(f~ alpha), f~ alpha] in degree |S_alpha|.
pub fn serre_step(l: &GridLattice) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for a in &l.elements {
        let e = EnhancedPartition::plain(a);
        let deg = e.mutable_set().len() as i32;
        let target = interval_support(&associated_interval(&f_tilde(&e)?)?);
        let h = injective_homology(&apply_nakayama(&object(a)));
        let expected: BTreeMap<i32, BTreeMap<Partition, usize>> =
            BTreeMap::from([(deg, target.into_iter().map(|x| (x, 1)).collect())]);
        if h != expected {
            let got: Vec<(i32, usize)> = h.iter().map(|(d, s)| (*d, s.len())).collect();
            failures.push(format!("{a}: homology (degree, support size) {got:?}, expected degree {deg}"));
        }
    }
    Ok(CheckOutcome::from_failures(CheckId::SerreStep, l.len(), failures))
}

pub fn coxeter(m: usize, n: i32, faults: Faults) -> Result<CheckOutcome> {
    let mut r = coxeter_order_check(m, n)?;
    if faults.corrupt_sign {
        r = crate::k0::coxeter_check_with_sign(m, n, -r.sign)?;
    }
    let failures = if r.holds {
        vec![]
    } else {
        vec![format!("M^{} differs from {} Id at {:?}", r.exponent, r.sign, r.first_failure)]
    };
    let mut out = CheckOutcome::from_failures(CheckId::Coxeter, 1, failures);
    if r.holds {
        out.detail = format!("1 cases, M^{} = {} Id", r.exponent, r.sign);
    }
    Ok(out)
}

/// Every square relation with its sign and every zero relation, at chain level.
pub fn relations(m: usize, n: i32, faults: Faults) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for r in plain_configurations(m, n)? {
        for (k, l) in square_relations(&r) {
            checked += 1;
            let eps = if faults.corrupt_sign { -epsilon(k, l) } else { epsilon(k, l) };
            if !verify_relation_with(&r, k, l, eps)? {
                failures.push(format!("square ({k},{l}) at {r}"));
            }
        }
        for k in crate::ycat::zero_relations(&r) {
            checked += 1;
            if !verify_zero_relation(&r, k)? {
                failures.push(format!("zero path ({k},{}) at {r}", k - 1));
            }
        }
    }
    Ok(CheckOutcome::from_failures(CheckId::Relations, checked, failures))
}

/// All words of arrow moves up to `max_len`.
pub fn all_words(m: usize, n: i32, max_len: usize) -> Result<Vec<MorphismWord>> {
    fn extend(cur: &Configuration, w: &mut Vec<i32>, left: usize, start: &Configuration, out: &mut Vec<MorphismWord>) {
        if !w.is_empty() {
            out.push(MorphismWord::new(start.clone(), w.clone()));
        }
        if left == 0 {
            return;
        }
        for k in arrow_moves(cur) {
            let next = sigma_minus(cur, k).expect("arrow moves are defined");
            w.push(k);
            extend(&next, w, left - 1, start, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    for r in plain_configurations(m, n)? {
        extend(&r, &mut Vec::new(), max_len, &r, &mut out);
    }
    Ok(out)
}

/// compose_word is zero iff a move leaves the start configuration, and agrees with
/// the chain-level composite: zero up to homotopy, or sign times the sorted word.
pub fn words(m: usize, n: i32, max_len: usize) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let ws = all_words(m, n, max_len)?;
    for w in &ws {
        let value = compose_word(w)?;
        let outside = w.moves.iter().any(|k| !w.start.contains(*k));
        let chain = word_chain_map(w)?;
        let ok = match &value {
            WordValue::Zero => outside && is_null_homotopic(&chain)?,
            WordValue::Nonzero { sign, word } => {
                let sorted = word_chain_map(word)?;
                let diff = chain.sub(&sorted.scale(&crate::linalg::q(i64::from(*sign))))?;
                !outside && !is_null_homotopic(&chain)? && is_null_homotopic(&diff)?
            }
        };
        if !ok {
            failures.push(format!("{:?} from {}: {value:?}", w.moves, w.start));
        }
    }
    Ok(CheckOutcome::from_failures(CheckId::Words, ws.len(), failures))
}

/// T has no self-extensions; End(T) is A_{m+1}^{n-1} on the nose, and the w-variant
/// is the quadratic dual of A_{n+1}^{m-1} on the nose.
pub fn tilting(m: usize, n: i32) -> Result<CheckOutcome> {
    if n < 1 {
        return Ok(CheckOutcome::skip(CheckId::Tilting, "needs n >= 1"));
    }
    let mut failures = Vec::new();
    if let Some(bad) = tilting_hom_degrees(m, n)?.into_iter().find(|x| x.2 != 0) {
        failures.push(format!("summands {} -> {} meet in degree {}", bad.0, bad.1, bad.2));
    }
    if failures.is_empty() {
        let y = end_tilting_presentation(m, n)?;
        let a = higher_auslander(m + 1, (n - 1) as usize)?;
        let vm = tilting_bijection(m, n, &y, &a)?;
        match find_isomorphism(&y, &a, &vm)? {
            Some(w) if w.is_identity_scaling() => {}
            Some(_) => failures.push("End(T) matches A_{m+1}^{n-1} only after rescaling".into()),
            None => failures.push("End(T) is not A_{m+1}^{n-1} under the complement bijection".into()),
        }
    }
    let yw = presentation(m, n, Variant::W)?;
    let d = quadratic_dual(&higher_auslander(n as usize + 1, m - 1)?)?;
    let vm = dual_bijection(m, n, &yw, &d)?;
    match find_isomorphism(&yw, &d, &vm)? {
        Some(w) if w.is_identity_scaling() => {}
        Some(_) => failures.push("variant w matches the dual only after rescaling".into()),
        None => failures.push("variant w is not the quadratic dual of A_{n+1}^{m-1}".into()),
    }
    Ok(CheckOutcome::from_failures(CheckId::Tilting, 3, failures))
}

/// dim G + dim G^perp fills the 2-path space, and A_s^d matches (A_{d+2}^{s-2})^!
/// for s = m+1, d = n-1 (up to rescaling arrows by signs).
pub fn duality(m: usize, n: i32) -> Result<CheckOutcome> {
    if n < 1 {
        return Ok(CheckOutcome::skip(CheckId::Duality, "needs n >= 1"));
    }
    let (s, d) = (m + 1, (n - 1) as usize);
    Ok(CheckOutcome::from_failures(CheckId::Duality, 2, duality_failures(s, d)?))
}

pub fn duality_failures(s: usize, d: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let a = higher_auslander(s, d)?;
    let dual = quadratic_dual(&a)?;
    if a.relation_rank() + dual.relation_rank() != a.two_paths().len() {
        failures.push(format!("A_{s}^{d}: dim G + dim G^perp != {}", a.two_paths().len()));
    }
    if s >= 2 {
        let b = quadratic_dual(&higher_auslander(d + 2, s - 2)?)?;
        let vm = complement_bijection(s, d, &a, &b)?;
        if find_isomorphism(&a, &b, &vm)?.is_none() {
            failures.push(format!("A_{s}^{d} is not the dual of A_{}^{}", d + 2, s - 2));
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(CheckId::parse(c.name()).unwrap(), c);
        }
        assert!(CheckId::parse("nope").is_err());
    }

    #[test]
    fn small_instance() {
        for c in CheckId::ALL {
            let out = run_check(c, 1, 1, Faults::default()).unwrap();
            assert!(out.passed(), "{c}: {}", out.detail);
        }
    }

    #[test]
    fn corrupted_sign_fails() {
        let f = Faults { corrupt_sign: true };
        assert_eq!(run_check(CheckId::Coxeter, 1, 1, f).unwrap().status, Status::Fail);
        assert_eq!(run_check(CheckId::Relations, 2, 2, f).unwrap().status, Status::Fail);
    }

    #[test]
    fn singleton_top_breaks_inclusive_strong() {
        let l = build_lattice(1, 1).unwrap();
        let out = antichain_laws(&l, AntichainScope::Literal);
        assert_eq!(out.status, Status::Fail);
        assert!(out.detail.contains("inclusive <=> strong"));
        assert!(out.detail.contains("every failure is the singleton"));
        assert_eq!(antichain_laws(&l, AntichainScope::ExceptTop).status, Status::Pass);
    }
}
