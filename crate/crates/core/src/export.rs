//! Versioned exports (schema "fcy/1"): lattices, resolutions, hom tables, orbits
//! and the K0 check.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::antichain::{boolean_witness, classify, Antichain, PropertyFlags};
use crate::combinatorics::OrbitStep;
use crate::error::Result;
use crate::homalg::{derived_hom_support, ProjectiveComplex};
use crate::k0::CoxeterReport;
use crate::lattice::{GridLattice, Partition};
use crate::linalg::q_string;
use crate::ycat::{hom_degree, interval_of, object};

pub const SCHEMA: &str = "fcy/1";

pub fn lattice_json(l: &GridLattice) -> Value {
    let elements: Vec<&Vec<i32>> = l.elements.iter().map(|p| &p.values).collect();
    json!({"schema": SCHEMA, "m": l.m, "n": l.n, "elements": elements})
}

/// Covering relation, edges pointing up.
pub fn lattice_dot(l: &GridLattice) -> String {
    let mut s = String::from("digraph lattice {\n");
    let _ = writeln!(s, "  // schema {SCHEMA}, J({},{})", l.m, l.n);
    for (i, p) in l.elements.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label=\"{p}\"];");
    }
    for (a, b) in l.covers() {
        let _ = writeln!(s, "  v{a} -> v{b};");
    }
    s.push_str("}\n");
    s
}

pub fn lattice_text(l: &GridLattice) -> String {
    let mut s = format!("J({},{}): {} elements\n", l.m, l.n, l.len());
    for p in &l.elements {
        let _ = writeln!(s, "  {p}");
    }
    s
}

/// degrees[d] lists the summand labels in degree d; boundaries[d-1] holds the
/// nonzero entries [row, col, coeff] of the boundary out of degree d.
pub fn resolution_json(c: &ProjectiveComplex) -> Value {
    let top = c.degrees().max().unwrap_or(0).max(0);
    let degrees: Vec<Vec<String>> = (0..=top).map(|d| c.labels(d).iter().map(ToString::to_string).collect()).collect();
    let boundaries: Vec<Vec<Value>> = (1..=top)
        .map(|d| {
            c.boundary(d)
                .nonzero_entries()
                .into_iter()
                .map(|(r, col, v)| json!([r, col, q_string(&v)]))
                .collect()
        })
        .collect();
    json!({"schema": SCHEMA, "degrees": degrees, "boundaries": boundaries})
}

pub fn resolution_text(c: &ProjectiveComplex) -> String {
    let mut s = String::new();
    for d in c.degrees() {
        let labels: Vec<String> = c.labels(d).iter().map(|p| format!("P{p}")).collect();
        let _ = writeln!(s, "degree {d}: {}", labels.join(" + "));
        if d > 0 {
            for (r, col, v) in c.boundary(d).nonzero_entries() {
                let _ = writeln!(s, "  d[{r},{col}] = {}", q_string(&v));
            }
        }
    }
    s
}

/// One pair (alpha, beta): the combinatorial degree next to the oracle's cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomRow {
    pub alpha: String,
    pub beta: String,
    pub j: Option<Vec<usize>>,
    pub degree: Option<usize>,
    /// Nonzero (degree, dimension) pairs of Hom(P_alpha, [f(beta), beta]).
    pub oracle: Vec<(i32, usize)>,
    pub agrees: bool,
}

pub fn hom_table(l: &GridLattice) -> Result<Vec<HomRow>> {
    let mut rows = Vec::with_capacity(l.len() * l.len());
    for a in &l.elements {
        let c = object(a);
        for b in &l.elements {
            rows.push(hom_row(a, b, &c)?);
        }
    }
    Ok(rows)
}

fn hom_row(a: &Partition, b: &Partition, c: &ProjectiveComplex) -> Result<HomRow> {
    let h = hom_degree(a, b)?;
    let oracle: Vec<(i32, usize)> = derived_hom_support(c, &interval_of(b)).into_iter().collect();
    let agrees = match &h {
        Some(h) => oracle == [(h.degree as i32, 1)],
        None => oracle.is_empty(),
    };
    Ok(HomRow {
        alpha: a.to_string(),
        beta: b.to_string(),
        degree: h.as_ref().map(|h| h.degree),
        j: h.map(|h| h.j),
        oracle,
        agrees,
    })
}

pub fn hom_table_json(rows: &[HomRow]) -> Value {
    json!({"schema": SCHEMA, "rows": rows})
}

pub fn hom_table_csv(rows: &[HomRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::Error::Invariant(format!("csv: {e}"));
    w.write_record(["alpha", "beta", "degree", "j", "oracle", "agrees"]).map_err(io)?;
    for r in rows {
        let j = r.j.as_ref().map(|j| j.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        let oracle: Vec<String> = r.oracle.iter().map(|(d, k)| format!("{d}:{k}")).collect();
        w.write_record([
            r.alpha.clone(),
            r.beta.clone(),
            r.degree.map_or(String::new(), |d| d.to_string()),
            j.unwrap_or_default(),
            oracle.join(" "),
            r.agrees.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::Invariant(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn orbit_json(m: usize, n: i32, start: &str, steps: &[OrbitStep]) -> Value {
    let trace: Vec<Value> = steps.iter().map(|s| json!({"configuration": s.configuration.to_string(), "s": s.s})).collect();
    let total: usize = steps.iter().map(|s| s.s).sum();
    json!({"schema": SCHEMA, "m": m, "n": n, "start": start, "steps": trace, "sum_s": total})
}

pub fn coxeter_json(r: &CoxeterReport) -> Value {
    json!({
        "schema": SCHEMA,
        "m": r.m,
        "n": r.n,
        "exponent": r.exponent,
        "sign": r.sign,
        "holds": r.holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntichainRow {
    pub top: String,
    pub members: Vec<String>,
    pub flags: PropertyFlags,
    pub witness: bool,
}

pub fn antichain_row(c: &Antichain) -> AntichainRow {
    AntichainRow {
        top: c.top().to_string(),
        members: c.members().iter().map(ToString::to_string).collect(),
        flags: classify(c),
        witness: boolean_witness(c).is_some(),
    }
}

pub fn antichains_json(rows: &[AntichainRow]) -> Value {
    json!({"schema": SCHEMA, "antichains": rows})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    #[test]
    fn lattice_exports() {
        let l = build_lattice(1, 1).unwrap();
        let j = lattice_json(&l);
        assert_eq!(j["elements"], json!([[0], [1]]));
        assert_eq!(j["schema"], SCHEMA);
        assert!(lattice_dot(&l).contains("v0 -> v1;"));
    }

    #[test]
    fn resolution_export() {
        let a = Partition::new(vec![1, 2], 2).unwrap();
        let j = resolution_json(&object(&a));
        assert_eq!(j["degrees"][0], json!(["(1,2)"]));
        assert_eq!(j["degrees"][1].as_array().unwrap().len(), 2);
        assert_eq!(j["boundaries"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn hom_table_small() {
        let l = build_lattice(1, 1).unwrap();
        let rows = hom_table(&l).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.agrees));
        let csv = hom_table_csv(&rows).unwrap();
        assert!(csv.starts_with("alpha,beta,degree,j,oracle,agrees\n"));
        assert_eq!(csv.lines().count(), 5);
    }
}
