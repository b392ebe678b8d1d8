//! Quivers with quadratic relations: linear combinations of length-2 paths.
//!
//! A path `[a, b]` means "first a, then b" (tgt a = src b). The orientation
//! flag records whether the presented algebra is the path algebra quotient
//! itself or its opposite.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{domain, Result};
use crate::linalg::{q_string, span_rank, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Alg,
    Op,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Alg => "alg",
            Orientation::Op => "op",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Q,
    pub path: [usize; 2],
}

pub type Relation = Vec<Term>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub orientation: Orientation,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(
        orientation: Orientation,
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        let mut ids = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= vertices.len() || a.tgt >= vertices.len() {
                return domain(format!("arrow {} has an endpoint outside the vertex set", a.id));
            }
            if ids.insert(a.id.clone(), i).is_some() {
                return domain(format!("duplicate arrow id {}", a.id));
            }
        }
        for rel in &relations {
            for t in rel {
                let [a, b] = t.path;
                if a >= arrows.len() || b >= arrows.len() {
                    return domain("relation uses an unknown arrow");
                }
                if arrows[a].tgt != arrows[b].src {
                    return domain(format!("path {} {} does not compose", arrows[a].id, arrows[b].id));
                }
                if t.coeff.is_zero() {
                    return domain("relation with a zero coefficient");
                }
            }
        }
        Ok(QuiverPresentation { orientation, vertices, arrows, relations })
    }

    /// All composable pairs, ordered by (first arrow, second arrow).
    pub fn two_paths(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            for (j, b) in self.arrows.iter().enumerate() {
                if a.tgt == b.src {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    pub fn path_index(&self) -> HashMap<[usize; 2], usize> {
        self.two_paths().into_iter().enumerate().map(|(i, p)| (p, i)).collect()
    }

    /// Relations as coordinate vectors over `two_paths`.
    pub fn relation_vectors(&self) -> Vec<Vec<Q>> {
        let idx = self.path_index();
        self.relations
            .iter()
            .map(|rel| {
                let mut v = vec![Q::zero(); idx.len()];
                for t in rel {
                    v[idx[&t.path]] += &t.coeff;
                }
                v
            })
            .collect()
    }

    pub fn relation_rank(&self) -> usize {
        span_rank(&self.relation_vectors(), self.two_paths().len())
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Arrows from `src` to `tgt`.
    pub fn arrows_between(&self, src: usize, tgt: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].src == src && self.arrows[i].tgt == tgt).collect()
    }

    pub fn to_json(&self) -> Value {
        let arrows: Vec<Value> = self
            .arrows
            .iter()
            .map(|a| json!({"id": a.id, "src": self.vertices[a.src], "tgt": self.vertices[a.tgt]}))
            .collect();
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|rel| {
                Value::Array(
                    rel.iter()
                        .map(|t| {
                            json!({
                                "coeff": q_string(&t.coeff),
                                "path": [self.arrows[t.path[0]].id, self.arrows[t.path[1]].id],
                            })
                        })
                        .collect(),
                )
            })
            .collect();
        json!({
            "schema": "fcy/1",
            "orientation": self.orientation.as_str(),
            "vertices": self.vertices,
            "arrows": arrows,
            "relations": relations,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        let _ = writeln!(s, "  // schema fcy/1, orientation {}", self.orientation.as_str());
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{v}\"];");
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.src, a.tgt, a.id);
        }
        s.push_str("}\n");
        s
    }

    /// Text listing of vertices, arrows and relations.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "orientation {}: {} vertices, {} arrows, {} relations",
            self.orientation.as_str(),
            self.vertices.len(),
            self.arrows.len(),
            self.relations.len()
        );
        for a in &self.arrows {
            let _ = writeln!(s, "  {}: {} -> {}", a.id, self.vertices[a.src], self.vertices[a.tgt]);
        }
        for rel in &self.relations {
            let terms: Vec<String> = rel
                .iter()
                .map(|t| {
                    format!("{}*{}.{}", q_string(&t.coeff), self.arrows[t.path[0]].id, self.arrows[t.path[1]].id)
                })
                .collect();
            let _ = writeln!(s, "  {}", terms.join(" + "));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn square() -> QuiverPresentation {
        let vertices = ["a", "b", "c", "d"].map(String::from).to_vec();
        let arrows = vec![
            Arrow { id: "x".into(), src: 0, tgt: 1 },
            Arrow { id: "y".into(), src: 0, tgt: 2 },
            Arrow { id: "z".into(), src: 1, tgt: 3 },
            Arrow { id: "w".into(), src: 2, tgt: 3 },
        ];
        let rel = vec![Term { coeff: q(1), path: [0, 2] }, Term { coeff: q(-1), path: [1, 3] }];
        QuiverPresentation::new(Orientation::Alg, vertices, arrows, vec![rel]).unwrap()
    }

    #[test]
    fn two_paths_and_vectors() {
        let p = square();
        assert_eq!(p.two_paths(), vec![[0, 2], [1, 3]]);
        assert_eq!(p.relation_vectors(), vec![vec![q(1), q(-1)]]);
        assert_eq!(p.relation_rank(), 1);
    }

    #[test]
    fn rejects_bad_paths() {
        let p = square();
        let bad = vec![vec![Term { coeff: q(1), path: [0, 3] }]];
        assert!(QuiverPresentation::new(Orientation::Alg, p.vertices.clone(), p.arrows.clone(), bad).is_err());
    }

    #[test]
    fn json_shape() {
        let j = square().to_json();
        assert_eq!(j["schema"], "fcy/1");
        assert_eq!(j["relations"][0][1]["coeff"], "-1");
        assert_eq!(j["arrows"][0]["src"], "a");
        assert!(square().to_dot().contains("v0 -> v1"));
    }
}
