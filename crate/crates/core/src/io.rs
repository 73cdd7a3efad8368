//! JSON and DOT encodings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genus_one::AlignedGraph;
use crate::graph::{DecoratedGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub w: u32,
    pub delta: u32,
    pub marks: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub g: u32,
    pub n: u32,
    pub d: u32,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<usize>>,
}

impl From<&DecoratedGraph> for GraphJson {
    fn from(g: &DecoratedGraph) -> Self {
        GraphJson {
            g: g.genus_target(),
            n: g.marking_count(),
            d: g.degree_target(),
            vertices: g
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, v)| VertexJson { id, w: v.weight, delta: v.degree, marks: v.marks.clone() })
                .collect(),
            edges: g.edges().to_vec(),
            levels: None,
        }
    }
}

impl From<&AlignedGraph> for GraphJson {
    fn from(a: &AlignedGraph) -> Self {
        let mut j = GraphJson::from(a.graph());
        j.levels = Some(a.levels().to_vec());
        j
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<DecoratedGraph> {
        let mut vertices = vec![None; self.vertices.len()];
        for v in &self.vertices {
            let slot = vertices
                .get_mut(v.id)
                .ok_or_else(|| Error::InvalidInput(format!("vertex id {} out of range", v.id)))?;
            if slot.is_some() {
                return Err(Error::InvalidInput(format!("vertex id {} repeated", v.id)));
            }
            *slot = Some(Vertex::new(v.w, v.delta, v.marks.iter().copied()));
        }
        let vertices = vertices.into_iter().map(|v| v.expect("ids form a permutation")).collect();
        DecoratedGraph::new(self.g, self.n, self.d, vertices, self.edges.clone())
    }

    pub fn to_aligned(&self) -> Result<AlignedGraph> {
        let levels = self
            .levels
            .clone()
            .ok_or_else(|| Error::InvalidInput("aligned graph needs \"levels\"".into()))?;
        AlignedGraph::new(self.to_graph()?, levels)
    }
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    let r = BigRational::new(p, q);
    debug_assert!(!r.denom().is_negative());
    Ok(r)
}

/// A metric point: graph plus edge lengths keyed by edge index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub graph: GraphJson,
    pub lengths: BTreeMap<String, String>,
}

pub fn lengths_to_json(lengths: &[BigRational]) -> BTreeMap<String, String> {
    // zero-padded keys keep numeric order under string sorting
    let width = lengths.len().saturating_sub(1).to_string().len();
    lengths
        .iter()
        .enumerate()
        .map(|(i, l)| (format!("{i:0width$}"), rational_to_string(l)))
        .collect()
}

pub fn lengths_from_json(map: &BTreeMap<String, String>, count: usize) -> Result<Vec<BigRational>> {
    let mut out: Vec<Option<BigRational>> = vec![None; count];
    for (k, v) in map {
        let i: usize = k.trim().parse().map_err(|_| Error::InvalidInput(format!("bad length key {k:?}")))?;
        let slot = out
            .get_mut(i)
            .ok_or_else(|| Error::InvalidInput(format!("length key {i} out of range")))?;
        *slot = Some(parse_rational(v)?);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| Error::InvalidInput(format!("missing length for key {i}"))))
        .collect()
}

fn vertex_label(v: &Vertex) -> String {
    let mut s = format!("w={} δ={}", v.weight, v.degree);
    if !v.marks.is_empty() {
        let marks: Vec<String> = v.marks.iter().map(u32::to_string).collect();
        let _ = write!(s, " m={{{}}}", marks.join(","));
    }
    s
}

pub fn graph_to_dot(g: &DecoratedGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (i, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\"];", vertex_label(v));
    }
    for &[a, b] in g.edges() {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}

/// Aligned graphs get one cluster per level.
pub fn aligned_to_dot(a: &AlignedGraph) -> String {
    let g = a.graph();
    let mut out = String::from("graph G {\n  rankdir=LR;\n");
    for level in 0..=a.length() {
        let _ = writeln!(out, "  subgraph cluster_level{level} {{\n    label=\"level {level}\";\n    color=blue;");
        for v in (0..g.num_vertices()).filter(|&v| a.level(v) == level) {
            let _ = writeln!(out, "    v{v} [label=\"{}\"];", vertex_label(g.vertex(v)));
        }
        out.push_str("  }\n");
    }
    for &[x, y] in g.edges() {
        let _ = writeln!(out, "  v{x} -- v{y};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_and_key_order() {
        let g = DecoratedGraph::new(0, 2, 1, vec![Vertex::new(0, 1, []), Vertex::new(0, 0, [1, 2])], vec![[0, 1]])
            .unwrap();
        let text = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(
            text,
            r#"{"g":0,"n":2,"d":1,"vertices":[{"id":0,"w":0,"delta":1,"marks":[]},{"id":1,"w":0,"delta":0,"marks":[1,2]}],"edges":[[0,1]]}"#
        );
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn rationals() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(rational_to_string(&q), "-3/2");
        assert_eq!(rational_to_string(&parse_rational("4").unwrap()), "4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn length_keys_sort_numerically() {
        let ls: Vec<BigRational> = (1..=11).map(|i| BigRational::new(1.into(), (i * 66).into())).collect();
        let m = lengths_to_json(&ls);
        assert_eq!(m.keys().next().unwrap(), "00");
        assert_eq!(lengths_from_json(&m, 11).unwrap(), ls);
    }
}
