//! Symmetric Δ-complexes built from graph catalogs.
//!
//! A generator of dimension `p` is a canonical representative together with a
//! reference ordering of its `p + 1` labels. For the virtual complex the labels
//! are the edges in index order. For the genus-one complex they are the core
//! edges in index order followed by the levels `1..=k`. Face `i` removes label
//! `i` (contracting that core edge or merging along that level), and the face
//! record stores where each surviving label lands in the target's reference
//! ordering.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::GraphCatalog;
use crate::error::{Error, Result};
use crate::genus_one::{AlignedGraph, NonemptyCriterion};
use crate::graph::{permutation_sign, DecoratedGraph, EdgeId};
use crate::io::GraphJson;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Edge(EdgeId),
    Level(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Virtual,
    Genus1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Virtual(DecoratedGraph),
    GenusOne(AlignedGraph),
}

impl Cell {
    pub fn graph(&self) -> &DecoratedGraph {
        match self {
            Cell::Virtual(g) => g,
            Cell::GenusOne(a) => a.graph(),
        }
    }

    fn encoding(&self) -> Vec<u8> {
        match self {
            Cell::Virtual(g) => g.canonical_form().encoding,
            Cell::GenusOne(a) => a.canonical_form().form.encoding,
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        match self {
            Cell::Virtual(g) => (0..g.num_edges()).map(Label::Edge).collect(),
            Cell::GenusOne(a) => a
                .core_edges()
                .into_iter()
                .map(Label::Edge)
                .chain((1..=a.length()).map(Label::Level))
                .collect(),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        match self {
            Cell::Virtual(g) => GraphJson::from(g),
            Cell::GenusOne(a) => GraphJson::from(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Index into the next lower dimension; `None` is the augmentation.
    pub target: Option<usize>,
    /// Sign of `relabel` if the target is alive, else 0.
    pub sign: i8,
    /// `relabel[k]` is the target label index of the `k`-th surviving label.
    pub relabel: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub cell: Cell,
    pub labels: Vec<Label>,
    pub alive: bool,
    pub faces: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDeltaComplex {
    pub kind: ComplexKind,
    pub genus: u32,
    pub markings: u32,
    pub degree: u32,
    /// `dims[p]` holds the generators with `p + 1` labels.
    pub dims: Vec<Vec<Generator>>,
}

impl SymmetricDeltaComplex {
    pub fn is_empty(&self) -> bool {
        self.dims.iter().all(Vec::is_empty)
    }

    pub fn generator_count(&self) -> usize {
        self.dims.iter().map(Vec::len).sum()
    }

    pub fn alive_counts(&self) -> Vec<usize> {
        self.dims.iter().map(|gs| gs.iter().filter(|g| g.alive).count()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.alive_counts()
            .iter()
            .enumerate()
            .map(|(p, &c)| if p % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            kind: self.kind,
            g: self.genus,
            n: self.markings,
            d: self.degree,
            dims: self
                .dims
                .iter()
                .enumerate()
                .map(|(p, gens)| DimJson {
                    p,
                    generators: gens
                        .iter()
                        .map(|g| GeneratorJson {
                            graph: g.cell.to_json(),
                            labels: g.labels.clone(),
                            alive: g.alive,
                            faces: g
                                .faces
                                .iter()
                                .enumerate()
                                .map(|(i, f)| FaceJson {
                                    i,
                                    target: f.target.map_or(-1, |t| t as i64),
                                    sign: f.sign,
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub i: usize,
    pub target: i64,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub graph: GraphJson,
    pub labels: Vec<Label>,
    pub alive: bool,
    pub faces: Vec<FaceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimJson {
    pub p: usize,
    pub generators: Vec<GeneratorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub kind: ComplexKind,
    pub g: u32,
    pub n: u32,
    pub d: u32,
    pub dims: Vec<DimJson>,
}

/// Result of removing one label from a cell, before canonicalisation.
struct RawFace {
    /// `None` when no labels remain.
    cell: Option<Cell>,
    /// Label of the face cell (in its own indexing) for each surviving label.
    carried: Vec<Label>,
}

fn virtual_face(g: &DecoratedGraph, i: usize) -> Result<RawFace> {
    let c = g.contract_edge(i)?;
    if c.graph.num_edges() == 0 {
        return Ok(RawFace { cell: None, carried: Vec::new() });
    }
    let carried = (0..g.num_edges())
        .filter(|&e| e != i)
        .map(|e| Label::Edge(c.edge_map[e].expect("surviving edge")))
        .collect();
    Ok(RawFace { cell: Some(Cell::Virtual(c.graph)), carried })
}

fn genus_one_face(a: &AlignedGraph, labels: &[Label], i: usize) -> Result<RawFace> {
    let (c, merged) = match labels[i] {
        Label::Edge(e) => (a.contract_core_edge(e)?, None),
        Label::Level(j) => (a.radial_merge(j)?, Some(j)),
    };
    if c.aligned.label_count() == 0 {
        return Ok(RawFace { cell: None, carried: Vec::new() });
    }
    let carried = labels
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, &l)| match l {
            Label::Edge(e) => Label::Edge(c.edge_map[e].expect("surviving core edge")),
            Label::Level(j) => Label::Level(match merged {
                Some(m) if j > m => j - 1,
                _ => j,
            }),
        })
        .collect();
    Ok(RawFace { cell: Some(Cell::GenusOne(c.aligned)), carried })
}

/// Canonical encoding plus the map from the face cell's labels to the
/// representative's labels.
fn canonicalize_face(cell: &Cell, carried: &[Label]) -> (Vec<u8>, Vec<Label>) {
    let (encoding, edge_map) = match cell {
        Cell::Virtual(g) => {
            let f = g.canonical_form();
            (f.encoding, f.relabeling.edge_map())
        }
        Cell::GenusOne(a) => {
            let f = a.canonical_form();
            (f.form.encoding, f.form.relabeling.edge_map())
        }
    };
    let mapped = carried
        .iter()
        .map(|&l| match l {
            Label::Edge(e) => Label::Edge(edge_map[e]),
            level => level,
        })
        .collect();
    (encoding, mapped)
}

fn is_alive(cell: &Cell) -> bool {
    match cell {
        Cell::Virtual(g) => {
            let all: Vec<EdgeId> = (0..g.num_edges()).collect();
            !g.has_odd_automorphism_on(&all)
        }
        Cell::GenusOne(a) => !a.has_odd_core_automorphism(),
    }
}

fn assemble(
    kind: ComplexKind,
    genus: u32,
    markings: u32,
    degree: u32,
    cells: Vec<Cell>,
) -> Result<SymmetricDeltaComplex> {
    let mut dims: Vec<Vec<Generator>> = Vec::new();
    for cell in cells {
        let labels = cell.labels();
        let p = labels.len().checked_sub(1).ok_or_else(|| Error::Internal("cell without labels".into()))?;
        if dims.len() <= p {
            dims.resize_with(p + 1, Vec::new);
        }
        let alive = is_alive(&cell);
        dims[p].push(Generator { cell, labels, alive, faces: Vec::new() });
    }
    let index: Vec<HashMap<Vec<u8>, usize>> = dims
        .par_iter()
        .map(|gens| gens.iter().enumerate().map(|(i, g)| (g.cell.encoding(), i)).collect())
        .collect();
    for p in 0..dims.len() {
        let (lower, upper) = dims.split_at_mut(p);
        let below = lower.last();
        let faces: Vec<Vec<Face>> = upper[0]
            .par_iter()
            .map(|gen| -> Result<Vec<Face>> {
                (0..gen.labels.len())
                    .map(|i| {
                        let raw = match &gen.cell {
                            Cell::Virtual(g) => virtual_face(g, i)?,
                            Cell::GenusOne(a) => genus_one_face(a, &gen.labels, i)?,
                        };
                        let Some(cell) = raw.cell else {
                            return Ok(Face { target: None, sign: 0, relabel: Vec::new() });
                        };
                        let (enc, mapped) = canonicalize_face(&cell, &raw.carried);
                        let t = *index[p - 1]
                            .get(&enc)
                            .ok_or_else(|| Error::Internal(format!("face {i} of a {p}-cell leaves the complex")))?;
                        let target = &below.expect("p > 0 when a face is nonempty")[t];
                        let relabel: Vec<usize> = mapped
                            .iter()
                            .map(|l| {
                                target.labels.iter().position(|x| x == l).ok_or_else(|| {
                                    Error::Internal(format!("label {l:?} missing from face target"))
                                })
                            })
                            .collect::<Result<_>>()?;
                        let sign = if target.alive { permutation_sign(&relabel) } else { 0 };
                        Ok(Face { target: Some(t), sign, relabel })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        for (gen, f) in upper[0].iter_mut().zip(faces) {
            gen.faces = f;
        }
    }
    Ok(SymmetricDeltaComplex { kind, genus, markings, degree, dims })
}

/// One generator per stable graph with at least one edge.
pub fn build_virtual_complex(catalog: &GraphCatalog) -> Result<SymmetricDeltaComplex> {
    if catalog.degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let cells = catalog.boundary().cloned().map(Cell::Virtual).collect();
    assemble(ComplexKind::Virtual, catalog.genus, catalog.markings, catalog.degree, cells)
}

/// One generator per aligned genus-one class in the nonempty range.
pub fn build_genus1_complex(catalog: &GraphCatalog, criterion: NonemptyCriterion) -> Result<SymmetricDeltaComplex> {
    if catalog.degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let aligned = crate::enumeration::aligned_graphs(catalog, criterion)?;
    let cells = aligned.into_iter().map(Cell::GenusOne).collect();
    assemble(ComplexKind::Genus1, 1, catalog.markings, catalog.degree, cells)
}

/// Applies face `first`, then the face at the image of label `second`.
/// Returns the final generator and, for every other label of the top cell in
/// order, its position in that generator's labels. `None` means the
/// augmentation was reached.
fn two_faces(complex: &SymmetricDeltaComplex, p: usize, g: usize, first: usize, second: usize) -> Option<(usize, Vec<usize>)> {
    let f1 = &complex.dims[p][g].faces[first];
    let t1 = f1.target?;
    let step1 = |l: usize| f1.relabel[if l < first { l } else { l - 1 }];
    let y = step1(second);
    let f2 = &complex.dims[p - 1][t1].faces[y];
    let t2 = f2.target?;
    let map = (0..complex.dims[p][g].labels.len())
        .filter(|&l| l != first && l != second)
        .map(|l| {
            let c = step1(l);
            f2.relabel[if c < y { c } else { c - 1 }]
        })
        .collect();
    Some((t2, map))
}

/// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every generator: both
/// paths must reach the same generator, and when it is alive the two
/// induced label maps must have the same parity. Returns the number of
/// checked pairs.
pub fn check_face_identities(complex: &SymmetricDeltaComplex) -> std::result::Result<usize, String> {
    let mut checked = 0usize;
    for p in 1..complex.dims.len() {
        for (g, gen) in complex.dims[p].iter().enumerate() {
            let n = gen.labels.len();
            for j in 0..n {
                for i in 0..j {
                    match (two_faces(complex, p, g, j, i), two_faces(complex, p, g, i, j)) {
                        (None, None) => {}
                        (Some((ta, ma)), Some((tb, mb))) => {
                            if ta != tb {
                                return Err(format!("dim {p} gen {g}: faces ({i},{j}) reach {ta} and {tb}"));
                            }
                            if complex.dims[p - 2][ta].alive && permutation_sign(&ma) != permutation_sign(&mb) {
                                return Err(format!("dim {p} gen {g}: faces ({i},{j}) disagree in sign"));
                            }
                        }
                        _ => return Err(format!("dim {p} gen {g}: faces ({i},{j}) disagree on the augmentation")),
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{stable_graphs, EnumerationRequest};

    fn virt(g: u32, n: u32, d: u32) -> SymmetricDeltaComplex {
        build_virtual_complex(&stable_graphs(&EnumerationRequest::new(g, n, d)).unwrap()).unwrap()
    }

    #[test]
    fn small_virtual_complexes() {
        let c = virt(0, 2, 1);
        assert_eq!(c.dims.len(), 1);
        assert_eq!(c.dims[0].len(), 1);
        assert!(c.dims[0][0].alive);
        assert_eq!(c.dims[0][0].faces, vec![Face { target: None, sign: 0, relabel: vec![] }]);
        assert!(virt(0, 1, 1).is_empty());
    }

    #[test]
    fn parallel_edges_kill_a_generator() {
        let c = virt(1, 0, 2);
        let two_cycle = c.dims[1]
            .iter()
            .find(|g| {
                let gr = g.cell.graph();
                gr.num_vertices() == 2 && gr.edges().iter().all(|&[a, b]| a != b)
            })
            .unwrap();
        assert!(!two_cycle.alive);
    }

    #[test]
    fn genus_one_small() {
        let cat = stable_graphs(&EnumerationRequest::new(1, 1, 2)).unwrap();
        let c = build_genus1_complex(&cat, NonemptyCriterion::Dmin).unwrap();
        for (p, gens) in c.dims.iter().enumerate() {
            for g in gens {
                assert_eq!(g.faces.len(), p + 1);
                if let Cell::GenusOne(a) = &g.cell {
                    assert_eq!(a.label_count(), p + 1);
                }
            }
        }
        let zero = c.dims[0]
            .iter()
            .find(|g| g.cell.graph().vertices().iter().any(|v| v.weight == 1 && v.marks == vec![1]))
            .unwrap();
        assert_eq!(zero.faces[0].target, None);
    }

    #[test]
    fn face_identities_small() {
        for (g, n, d) in [(0, 3, 1), (0, 4, 1), (0, 2, 2), (1, 1, 1)] {
            let c = virt(g, n, d);
            check_face_identities(&c).unwrap();
        }
        let cat = stable_graphs(&EnumerationRequest::new(1, 1, 2)).unwrap();
        check_face_identities(&build_genus1_complex(&cat, NonemptyCriterion::Dmin).unwrap()).unwrap();
    }
}
