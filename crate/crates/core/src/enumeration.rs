//! Enumeration of stable `(g, n, d)`-graphs and of aligned genus-one graphs.
//!
//! The default strategy grows graphs one edge at a time from the edgeless
//! interior graph by inverting edge contractions: a vertex is split in two
//! along a new edge, or one unit of weight is traded for a loop. Contraction
//! preserves stability, so every stable graph with `E` edges contracts to one
//! with `E - 1` edges and the search reaches it. The second strategy builds
//! all underlying multigraphs up to the vertex bound and decorates them; the
//! two are compared in tests.
//!
//! Edge bound. Summing `2w(v) - 2 + val(v) + |m⁻¹(v)|` over vertices gives
//! `2g - 2 + n`. Degree-0 vertices contribute at least 1 and the at most `d`
//! vertices of positive degree contribute at least -1, so
//! `|V| <= 2d + n + 2g - 2` and `|E| = |V| - 1 + b1 <= 2d + n + 3g - 3`.
//! The default cap `2d + n + 3g - 2` is one above that.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::ColoredView;
use crate::error::{Error, Result};
use crate::genus_one::{enumerate_alignments, AlignedGraph, NonemptyCriterion};
use crate::graph::{DecoratedGraph, LoopValence, Vertex, VertexId};
use crate::io::GraphJson;

pub const CACHE_SCHEMA_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "MDC_CACHE_DIR";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    #[default]
    Uncontraction,
    Multigraph,
}

impl Strategy {
    fn tag(self) -> &'static str {
        match self {
            Strategy::Uncontraction => "uncontraction",
            Strategy::Multigraph => "multigraph",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub genus: u32,
    pub markings: u32,
    pub degree: u32,
    pub max_edges: Option<usize>,
    pub strategy: Strategy,
    pub loop_valence: LoopValence,
    /// Abort once this many classes have been found.
    pub max_classes: Option<usize>,
}

impl EnumerationRequest {
    pub fn new(genus: u32, markings: u32, degree: u32) -> Self {
        EnumerationRequest {
            genus,
            markings,
            degree,
            max_edges: None,
            strategy: Strategy::default(),
            loop_valence: LoopValence::default(),
            max_classes: None,
        }
    }

    pub fn with_max_edges(mut self, e: usize) -> Self {
        self.max_edges = Some(e);
        self
    }

    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    pub fn edge_bound(&self) -> usize {
        self.max_edges.unwrap_or_else(|| default_edge_bound(self.genus, self.markings, self.degree))
    }
}

pub fn default_edge_bound(g: u32, n: u32, d: u32) -> usize {
    (2 * d as i64 + n as i64 + 3 * g as i64 - 2).max(0) as usize
}

pub fn vertex_bound(g: u32, n: u32, d: u32) -> usize {
    (2 * d as i64 + n as i64 + 2 * g as i64 - 2).max(1) as usize
}

/// Isomorphism classes of stable graphs, grouped by edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCatalog {
    pub genus: u32,
    pub markings: u32,
    pub degree: u32,
    pub edge_bound: usize,
    /// Canonical representatives, `by_edges[e]` sorted by encoding.
    by_edges: Vec<Vec<DecoratedGraph>>,
    index: BTreeMap<Vec<u8>, (usize, usize)>,
}

impl GraphCatalog {
    fn from_classes(genus: u32, markings: u32, degree: u32, edge_bound: usize, classes: BTreeMap<Vec<u8>, DecoratedGraph>) -> Self {
        let mut by_edges: Vec<Vec<DecoratedGraph>> = Vec::new();
        let mut index = BTreeMap::new();
        for (enc, g) in classes {
            let e = g.num_edges();
            if by_edges.len() <= e {
                by_edges.resize(e + 1, Vec::new());
            }
            index.insert(enc, (e, by_edges[e].len()));
            by_edges[e].push(g);
        }
        GraphCatalog { genus, markings, degree, edge_bound, by_edges, index }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn with_edges(&self, e: usize) -> &[DecoratedGraph] {
        self.by_edges.get(e).map_or(&[], Vec::as_slice)
    }

    pub fn max_edges(&self) -> usize {
        self.by_edges.len().saturating_sub(1)
    }

    /// All classes, by increasing edge count.
    pub fn graphs(&self) -> impl Iterator<Item = &DecoratedGraph> {
        self.by_edges.iter().flatten()
    }

    /// Classes with at least one edge.
    pub fn boundary(&self) -> impl Iterator<Item = &DecoratedGraph> {
        self.by_edges.iter().skip(1).flatten()
    }

    pub fn interior(&self) -> Option<&DecoratedGraph> {
        self.with_edges(0).first()
    }

    pub fn encodings(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.index.keys()
    }

    /// Position `(edge count, index)` of the class of `g`.
    pub fn lookup(&self, g: &DecoratedGraph) -> Option<(usize, usize)> {
        self.index.get(&g.canonical_form().encoding).copied()
    }

    pub fn contains(&self, g: &DecoratedGraph) -> bool {
        self.lookup(g).is_some()
    }
}

pub fn stable_graphs(req: &EnumerationRequest) -> Result<GraphCatalog> {
    if req.genus > 1 {
        return Err(Error::UnsupportedGenus(req.genus));
    }
    let bound = req.edge_bound();
    let classes = match req.strategy {
        Strategy::Uncontraction => uncontraction_search(req, bound)?,
        Strategy::Multigraph => decorate_multigraphs(req, bound)?,
    };
    Ok(GraphCatalog::from_classes(req.genus, req.markings, req.degree, bound, classes))
}

fn check_budget(req: &EnumerationRequest, found: usize) -> Result<()> {
    match req.max_classes {
        Some(cap) if found > cap => Err(Error::BudgetExceeded(format!("more than {cap} classes"))),
        _ => Ok(()),
    }
}

fn uncontraction_search(req: &EnumerationRequest, bound: usize) -> Result<BTreeMap<Vec<u8>, DecoratedGraph>> {
    let mut classes = BTreeMap::new();
    let start = DecoratedGraph::interior(req.genus, req.markings, req.degree);
    if !start.is_stable_with(req.loop_valence) {
        // every stable graph contracts to the interior one
        return Ok(classes);
    }
    let form = start.canonical_form();
    classes.insert(form.encoding, form.representative.clone());
    let mut layer = vec![form.representative];
    for _ in 0..bound {
        let found: BTreeMap<Vec<u8>, DecoratedGraph> = layer
            .par_iter()
            .flat_map_iter(uncontractions)
            .filter(|g| g.is_stable_with(req.loop_valence))
            .map(|g| {
                let f = g.canonical_form();
                (f.encoding, f.representative)
            })
            .collect();
        if found.is_empty() {
            break;
        }
        layer = found.values().cloned().collect();
        classes.extend(found);
        check_budget(req, classes.len())?;
    }
    Ok(classes)
}

/// Every graph with one more edge that contracts back to `h` along that edge.
pub fn uncontractions(h: &DecoratedGraph) -> Vec<DecoratedGraph> {
    let mut out = Vec::new();
    let (g, n, d) = (h.genus_target(), h.marking_count(), h.degree_target());
    for v in 0..h.num_vertices() {
        let x = h.vertex(v);
        if x.weight > 0 {
            let mut vertices = h.vertices().to_vec();
            vertices[v].weight -= 1;
            let mut edges = h.edges().to_vec();
            edges.push([v, v]);
            out.push(DecoratedGraph::from_parts_unchecked(g, n, d, vertices, edges));
        }
        let halves = h.half_edges_at(v);
        let new = h.num_vertices();
        for side in 0u64..(1 << halves.len()) {
            for mark_side in 0u64..(1 << x.marks.len()) {
                let marks_moved: Vec<u32> =
                    (0..x.marks.len()).filter(|i| mark_side >> i & 1 == 1).map(|i| x.marks[i]).collect();
                let marks_kept: Vec<u32> =
                    (0..x.marks.len()).filter(|i| mark_side >> i & 1 == 0).map(|i| x.marks[i]).collect();
                for w in 0..=x.weight {
                    for dg in 0..=x.degree {
                        let mut vertices = h.vertices().to_vec();
                        vertices[v] = Vertex::new(x.weight - w, x.degree - dg, marks_kept.iter().copied());
                        vertices.push(Vertex::new(w, dg, marks_moved.iter().copied()));
                        let mut edges = h.edges().to_vec();
                        for (i, &half) in halves.iter().enumerate() {
                            if side >> i & 1 == 1 {
                                edges[half / 2][half % 2] = new;
                            }
                        }
                        edges.push([v, new]);
                        out.push(DecoratedGraph::from_parts_unchecked(g, n, d, vertices, edges));
                    }
                }
            }
        }
    }
    out
}

fn skeleton_encoding(vertices: usize, edges: &[[VertexId; 2]]) -> (Vec<u8>, Vec<[VertexId; 2]>) {
    let view = ColoredView { vertex_colors: vec![Vec::new(); vertices], edges, edge_colors: None };
    let lab = view.canonical_labeling();
    let mut canon: Vec<[VertexId; 2]> = edges
        .iter()
        .map(|&[a, b]| {
            let (pa, pb) = (lab.position[a], lab.position[b]);
            [pa.min(pb), pa.max(pb)]
        })
        .collect();
    canon.sort_unstable();
    (lab.encoding, canon)
}

/// Unlabelled connected multigraphs with `V <= max_vertices`, first Betti
/// number at most `max_betti` and at most `max_edges` edges.
pub fn connected_multigraphs(max_vertices: usize, max_betti: u32, max_edges: usize) -> Vec<(usize, Vec<[VertexId; 2]>)> {
    let mut all: BTreeMap<(usize, Vec<u8>), Vec<[VertexId; 2]>> = BTreeMap::new();
    let mut trees: BTreeMap<Vec<u8>, Vec<[VertexId; 2]>> = BTreeMap::new();
    trees.insert(skeleton_encoding(1, &[]).0, Vec::new());
    for v in 1..=max_vertices {
        if v > 1 {
            let mut next = BTreeMap::new();
            for edges in trees.values() {
                for parent in 0..v - 1 {
                    let mut e = edges.clone();
                    e.push([parent, v - 1]);
                    let (enc, canon) = skeleton_encoding(v, &e);
                    next.insert(enc, canon);
                }
            }
            trees = next;
        }
        let mut layer: BTreeMap<Vec<u8>, Vec<[VertexId; 2]>> = trees.clone();
        for b in 0..=max_betti {
            if (v - 1 + b as usize) > max_edges {
                break;
            }
            for (enc, edges) in &layer {
                all.insert((v, enc.clone()), edges.clone());
            }
            if b == max_betti {
                break;
            }
            let mut next = BTreeMap::new();
            for edges in layer.values() {
                for a in 0..v {
                    for c in a..v {
                        let mut e = edges.clone();
                        e.push([a, c]);
                        let (enc, canon) = skeleton_encoding(v, &e);
                        next.insert(enc, canon);
                    }
                }
            }
            layer = next;
        }
    }
    all.into_iter().map(|((v, _), e)| (v, e)).collect()
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn decorate_multigraphs(req: &EnumerationRequest, bound: usize) -> Result<BTreeMap<Vec<u8>, DecoratedGraph>> {
    let (g, n, d) = (req.genus, req.markings, req.degree);
    // raising the edge cap raises the vertex cap by the same amount
    let vcap = vertex_bound(g, n, d) + bound.saturating_sub(default_edge_bound(g, n, d));
    let skeletons = connected_multigraphs(vcap, g, bound);
    let classes: BTreeMap<Vec<u8>, DecoratedGraph> = skeletons
        .par_iter()
        .filter(|(nv, edges)| {
            // a vertex of valence at most 2 needs degree, a marking or weight to be stable
            let mut valence = vec![0u32; *nv];
            for &[a, b] in edges.iter() {
                valence[a] += 1;
                valence[b] += 1;
            }
            valence.iter().filter(|&&v| v <= 2).count() as u32 <= d + n + g
        })
        .flat_map_iter(|(nv, edges)| {
            let nv = *nv;
            let b1 = (edges.len() + 1 - nv) as u32;
            let mut found = BTreeMap::new();
            let mut valence = vec![0u32; nv];
            for &[a, b] in edges {
                valence[a] += 1;
                valence[b] += 1;
            }
            let weights = compositions(g - b1, nv);
            let degrees = compositions(d, nv);
            let mark_maps = nv.pow(n);
            for w in &weights {
                for dg in &degrees {
                    for code in 0..mark_maps {
                        let mut marks = vec![Vec::new(); nv];
                        let mut c = code;
                        for m in 1..=n {
                            marks[c % nv].push(m);
                            c /= nv;
                        }
                        let stable = (0..nv).all(|v| {
                            let val = match req.loop_valence {
                                LoopValence::Two => valence[v],
                                LoopValence::One => {
                                    valence[v] - edges.iter().filter(|&&[a, b]| a == v && b == v).count() as u32
                                }
                            };
                            dg[v] > 0 || 2 * w[v] as i64 - 2 + val as i64 + marks[v].len() as i64 > 0
                        });
                        if !stable {
                            continue;
                        }
                        let vertices =
                            (0..nv).map(|v| Vertex::new(w[v], dg[v], marks[v].iter().copied())).collect();
                        let graph = DecoratedGraph::from_parts_unchecked(g, n, d, vertices, edges.clone());
                        let f = graph.canonical_form();
                        found.insert(f.encoding, f.representative);
                    }
                }
            }
            found
        })
        .collect();
    check_budget(req, classes.len())?;
    Ok(classes)
}

/// Isomorphism classes of aligned genus-one graphs with at least one label
/// that index nonempty strata, sorted by canonical encoding.
pub fn aligned_graphs(catalog: &GraphCatalog, criterion: NonemptyCriterion) -> Result<Vec<AlignedGraph>> {
    if catalog.genus != 1 {
        return Err(Error::NotGenusOne(catalog.genus));
    }
    let graphs: Vec<&DecoratedGraph> = catalog.graphs().collect();
    let found: BTreeMap<Vec<u8>, AlignedGraph> = graphs
        .par_iter()
        .map(|g| -> Result<Vec<(Vec<u8>, AlignedGraph)>> {
            Ok(enumerate_alignments(g)?
                .into_iter()
                .filter(|a| a.label_count() > 0 && a.is_nonempty(criterion))
                .map(|a| {
                    let c = a.canonical_form();
                    (c.form.encoding, c.representative)
                })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(found.into_values().collect())
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    g: u32,
    n: u32,
    d: u32,
    bound: usize,
    strategy: Strategy,
    generated_at: u64,
    graphs: Vec<GraphJson>,
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)
}

fn cache_path(dir: &Path, req: &EnumerationRequest) -> PathBuf {
    let lv = match req.loop_valence {
        LoopValence::Two => "",
        LoopValence::One => "-loop1",
    };
    dir.join(format!(
        "catalog-g{}-n{}-d{}-e{}-{}{}-v{}.json",
        req.genus,
        req.markings,
        req.degree,
        req.edge_bound(),
        req.strategy.tag(),
        lv,
        CACHE_SCHEMA_VERSION
    ))
}

/// `stable_graphs` backed by an on-disk cache. A missing or unreadable cache
/// entry is regenerated; write failures are ignored.
pub fn stable_graphs_cached(req: &EnumerationRequest, dir: Option<&Path>) -> Result<GraphCatalog> {
    let Some(dir) = dir else {
        return stable_graphs(req);
    };
    let path = cache_path(dir, req);
    if let Some(cat) = read_cache(&path, req) {
        return Ok(cat);
    }
    let cat = stable_graphs(req)?;
    let generated_at = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let file = CacheFile {
        schema: CACHE_SCHEMA_VERSION,
        g: req.genus,
        n: req.markings,
        d: req.degree,
        bound: req.edge_bound(),
        strategy: req.strategy,
        generated_at,
        graphs: cat.graphs().map(GraphJson::from).collect(),
    };
    if std::fs::create_dir_all(dir).is_ok() {
        if let Ok(text) = serde_json::to_string(&file) {
            let tmp = path.with_extension("tmp");
            if std::fs::write(&tmp, text).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
    }
    Ok(cat)
}

fn read_cache(path: &Path, req: &EnumerationRequest) -> Option<GraphCatalog> {
    let text = std::fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.schema != CACHE_SCHEMA_VERSION
        || (file.g, file.n, file.d, file.bound) != (req.genus, req.markings, req.degree, req.edge_bound())
    {
        return None;
    }
    let mut classes = BTreeMap::new();
    for j in &file.graphs {
        let g = j.to_graph().ok()?;
        let f = g.canonical_form();
        classes.insert(f.encoding, f.representative);
    }
    Some(GraphCatalog::from_classes(req.genus, req.markings, req.degree, req.edge_bound(), classes))
}

/// Classes found with the edge cap raised by `extra` that are missing at the default cap.
pub fn sharpness_probe(req: &EnumerationRequest, extra: usize) -> Result<usize> {
    let base = stable_graphs(req)?;
    let raised = stable_graphs(&req.clone().with_max_edges(req.edge_bound() + extra))?;
    let base_set: BTreeSet<&Vec<u8>> = base.encodings().collect();
    Ok(raised.encodings().filter(|e| !base_set.contains(e)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalogs() {
        let c = stable_graphs(&EnumerationRequest::new(0, 2, 1)).unwrap();
        let boundary: Vec<_> = c.boundary().collect();
        assert_eq!(boundary.len(), 1);
        let mut vs = boundary[0].vertices().to_vec();
        vs.sort();
        assert_eq!(vs, vec![Vertex::new(0, 0, [1, 2]), Vertex::new(0, 1, [])]);

        let c = stable_graphs(&EnumerationRequest::new(0, 1, 1)).unwrap();
        assert_eq!(c.boundary().count(), 0);
        assert_eq!(c.len(), 1);

        let c = stable_graphs(&EnumerationRequest::new(0, 0, 2)).unwrap();
        let boundary: Vec<_> = c.boundary().collect();
        assert_eq!(boundary.len(), 1);
        assert_eq!(boundary[0].vertices(), &[Vertex::new(0, 1, []), Vertex::new(0, 1, [])]);
    }

    #[test]
    fn genus_two_is_rejected() {
        assert_eq!(stable_graphs(&EnumerationRequest::new(2, 0, 1)).unwrap_err(), Error::UnsupportedGenus(2));
    }

    #[test]
    fn strategies_agree_on_small_cases() {
        for (g, n, d) in [(0, 2, 1), (0, 3, 1), (0, 1, 2), (0, 2, 2), (1, 1, 1), (1, 0, 2), (1, 1, 2)] {
            let a = stable_graphs(&EnumerationRequest::new(g, n, d)).unwrap();
            let b = stable_graphs(&EnumerationRequest::new(g, n, d).with_strategy(Strategy::Multigraph)).unwrap();
            assert_eq!(a, b, "({g},{n},{d})");
        }
    }

    #[test]
    fn multigraph_counts() {
        // trees on up to 4 vertices: 1, 1, 1, 2
        let trees = connected_multigraphs(4, 0, 10);
        assert_eq!(trees.len(), 5);
        // one extra edge on a single vertex or an edge: loop, loop at an end, double edge
        let one = connected_multigraphs(2, 1, 10);
        assert_eq!(one.len(), 2 + 1 + 2);
    }

    #[test]
    fn aligned_example_present() {
        let cat = stable_graphs(&EnumerationRequest::new(1, 1, 2)).unwrap();
        let al = aligned_graphs(&cat, NonemptyCriterion::Dmin).unwrap();
        let target = AlignedGraph::new(
            DecoratedGraph::new(1, 1, 2, vec![Vertex::new(1, 0, [1]), Vertex::new(0, 2, [])], vec![[0, 1]]).unwrap(),
            vec![0, 1],
        )
        .unwrap();
        let enc = target.canonical_form().form.encoding;
        assert!(al.iter().any(|a| a.canonical_form().form.encoding == enc));
        assert!(al.iter().all(|a| a.contraction_radius().unwrap().1 > 1));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let req = EnumerationRequest::new(0, 3, 1);
        let a = stable_graphs_cached(&req, Some(dir.path())).unwrap();
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let b = stable_graphs_cached(&req, Some(dir.path())).unwrap();
        assert_eq!(a, b);
    }
}
