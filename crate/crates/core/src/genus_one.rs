//! Genus-one structure: the core, the partial order on tree vertices, radial
//! alignments, subdivisions, radial merges and the contraction radius.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Contraction, DecoratedGraph, EdgeId, Vertex, VertexId};

/// The minimal genus-one subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Core {
    pub vertices: Vec<bool>,
    pub edges: Vec<bool>,
}

impl Core {
    pub fn vertex_set(&self) -> Vec<VertexId> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v]).collect()
    }

    pub fn edge_set(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| self.edges[e]).collect()
    }

    pub fn tree_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| !self.edges[e]).collect()
    }
}

pub fn core(g: &DecoratedGraph) -> Result<Core> {
    let genus = g.genus();
    if genus != 1 {
        return Err(Error::NotGenusOne(genus));
    }
    let n = g.num_vertices();
    if let Some(v) = (0..n).find(|&v| g.vertex(v).weight == 1) {
        let mut vertices = vec![false; n];
        vertices[v] = true;
        return Ok(Core { vertices, edges: vec![false; g.num_edges()] });
    }
    // strip valence-one vertices until only the cycle remains
    let mut alive = vec![true; n];
    let mut val: Vec<u32> = (0..n).map(|v| g.valence(v)).collect();
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| val[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &[a, b] in g.edges() {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if alive[other] {
                val[other] -= 1;
                if val[other] == 1 {
                    stack.push(other);
                }
            }
        }
    }
    let edges = g.edges().iter().map(|&[a, b]| alive[a] && alive[b]).collect();
    Ok(Core { vertices: alive, edges })
}

/// Rooted structure of the tree part: every edge outside the core points away from it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeOrder {
    /// Parent vertex and connecting edge for each tree vertex; `None` on the core.
    pub parent: Vec<Option<(VertexId, EdgeId)>>,
    pub in_core: Vec<bool>,
}

impl TreeOrder {
    pub fn new(g: &DecoratedGraph, core: &Core) -> Self {
        let n = g.num_vertices();
        let mut parent = vec![None; n];
        let mut seen = core.vertices.clone();
        let mut queue: std::collections::VecDeque<VertexId> = core.vertex_set().into();
        while let Some(v) = queue.pop_front() {
            for (e, &[a, b]) in g.edges().iter().enumerate() {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    parent[other] = Some((v, e));
                    queue.push_back(other);
                }
            }
        }
        TreeOrder { parent, in_core: core.vertices.clone() }
    }

    /// `v < w`: `v` lies on the path from `w` to the core, or `v` is a core
    /// vertex and `w` is not.
    pub fn less(&self, v: VertexId, w: VertexId) -> bool {
        if self.in_core[w] {
            return false;
        }
        if self.in_core[v] {
            return true;
        }
        let mut x = w;
        while let Some((p, _)) = self.parent[x] {
            if p == v {
                return true;
            }
            x = p;
        }
        false
    }

    /// Edge towards the core, oriented parent to child.
    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent[v].map(|(_, e)| e)
    }

    pub fn tree_vertices(&self) -> Vec<VertexId> {
        (0..self.in_core.len()).filter(|&v| !self.in_core[v]).collect()
    }

    /// For a tree edge, its (parent, child) endpoints.
    pub fn orientation(&self, g: &DecoratedGraph, e: EdgeId) -> Option<(VertexId, VertexId)> {
        let [a, b] = g.edges()[e];
        if self.parent[b] == Some((a, e)) {
            Some((a, b))
        } else if self.parent[a] == Some((b, e)) {
            Some((b, a))
        } else {
            None
        }
    }
}

pub fn tree_order(g: &DecoratedGraph) -> Result<TreeOrder> {
    let c = core(g)?;
    Ok(TreeOrder::new(g, &c))
}

/// Which alignments index nonempty strata.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NonemptyCriterion {
    /// `d_min > 1`, read literally.
    #[default]
    Dmin,
    /// `d_min > 1`, or the core itself carries degree (`rad = 0`).
    RadAware,
}

impl std::str::FromStr for NonemptyCriterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dmin" => Ok(NonemptyCriterion::Dmin),
            "rad-aware" => Ok(NonemptyCriterion::RadAware),
            other => Err(Error::InvalidInput(format!("unknown nonempty criterion {other:?}"))),
        }
    }
}

/// A genus-one graph with a radial alignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlignedGraph {
    graph: DecoratedGraph,
    levels: Vec<usize>,
    length: usize,
    core: Core,
    order: TreeOrder,
}

impl AlignedGraph {
    pub fn new(graph: DecoratedGraph, levels: Vec<usize>) -> Result<Self> {
        let core = core(&graph)?;
        let order = TreeOrder::new(&graph, &core);
        if levels.len() != graph.num_vertices() {
            return Err(Error::InvalidAlignment(format!(
                "{} levels for {} vertices",
                levels.len(),
                graph.num_vertices()
            )));
        }
        let length = levels.iter().copied().max().unwrap_or(0);
        let used: BTreeSet<usize> = levels.iter().copied().collect();
        if used.len() != length + 1 {
            return Err(Error::InvalidAlignment("level map is not surjective".into()));
        }
        for v in 0..levels.len() {
            if (levels[v] == 0) != core.vertices[v] {
                return Err(Error::InvalidAlignment(format!("level 0 must be exactly the core (vertex {v})")));
            }
            if let Some((p, _)) = order.parent[v] {
                if levels[p] >= levels[v] {
                    return Err(Error::InvalidAlignment(format!("vertex {v} is not above its parent {p}")));
                }
            }
        }
        Ok(AlignedGraph { graph, levels, length, core, order })
    }

    pub fn graph(&self) -> &DecoratedGraph {
        &self.graph
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn level(&self, v: VertexId) -> usize {
        self.levels[v]
    }

    /// The `k` of `ρ: V → {0..k}`.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn core(&self) -> &Core {
        &self.core
    }

    pub fn tree_order(&self) -> &TreeOrder {
        &self.order
    }

    pub fn core_edges(&self) -> Vec<EdgeId> {
        self.core.edge_set()
    }

    pub fn tree_edges(&self) -> Vec<EdgeId> {
        self.core.tree_edges()
    }

    /// `|C(G)| + k`, one more than the cell dimension.
    pub fn label_count(&self) -> usize {
        self.core.edge_set().len() + self.length
    }

    pub fn level_degree(&self, level: usize) -> u32 {
        (0..self.levels.len())
            .filter(|&v| self.levels[v] == level)
            .map(|v| self.graph.vertex(v).degree)
            .sum()
    }

    /// `(rad, d_min)`: the first level with positive total degree, and that total.
    pub fn contraction_radius(&self) -> Result<(usize, u32)> {
        (0..=self.length)
            .map(|j| (j, self.level_degree(j)))
            .find(|&(_, d)| d > 0)
            .ok_or(Error::ZeroDegree)
    }

    pub fn in_tilde_category(&self) -> bool {
        self.is_nonempty(NonemptyCriterion::Dmin)
    }

    pub fn is_nonempty(&self, criterion: NonemptyCriterion) -> bool {
        match self.contraction_radius() {
            Ok((rad, dmin)) => match criterion {
                NonemptyCriterion::Dmin => dmin > 1,
                NonemptyCriterion::RadAware => dmin > 1 || rad == 0,
            },
            Err(_) => false,
        }
    }

    pub(crate) fn vertex_colors(&self) -> Vec<Vec<u8>> {
        let mut colors = self.graph.vertex_colors();
        for (c, &l) in colors.iter_mut().zip(&self.levels) {
            c.extend_from_slice(&(l as u32).to_be_bytes());
        }
        colors
    }

    /// Canonical form respecting the level map.
    pub fn canonical_form(&self) -> AlignedCanonical {
        let form = self.graph.canonical_form_colored(self.vertex_colors(), None);
        let mut levels = vec![0; self.levels.len()];
        for (v, &l) in self.levels.iter().enumerate() {
            levels[form.relabeling.vertex_map[v]] = l;
        }
        let representative = AlignedGraph::new(form.representative.clone(), levels)
            .expect("relabeling preserves alignments");
        AlignedCanonical { form, representative }
    }

    /// Level-preserving vertex automorphisms.
    pub fn vertex_automorphisms(&self) -> Vec<Vec<VertexId>> {
        crate::canon::ColoredView {
            vertex_colors: self.vertex_colors(),
            edges: self.graph.edges(),
            edge_colors: None,
        }
        .vertex_automorphisms()
    }

    /// Level-preserving automorphisms acting on half-edges.
    pub fn automorphisms(&self) -> Vec<crate::graph::GraphIsomorphism> {
        crate::graph::expand_automorphisms(self.graph.edges(), &self.vertex_automorphisms(), None)
    }

    /// Whether an automorphism permutes the core edges oddly.
    pub fn has_odd_core_automorphism(&self) -> bool {
        crate::graph::has_odd_label_automorphism(
            self.graph.edges(),
            &self.vertex_automorphisms(),
            &self.core_edges(),
        )
    }

    /// Contracts a core edge; levels are unchanged.
    pub fn contract_core_edge(&self, e: EdgeId) -> Result<AlignedContraction> {
        if e >= self.graph.num_edges() {
            return Err(Error::NoSuchEdge(e));
        }
        if !self.core.edges[e] {
            return Err(Error::NotCoreEdge(e));
        }
        let c = self.graph.contract_edge(e)?;
        let mut levels = vec![0; c.graph.num_vertices()];
        for (v, &img) in c.vertex_map.iter().enumerate() {
            levels[img] = self.levels[v];
        }
        let aligned = AlignedGraph::new(c.graph.clone(), levels)
            .map_err(|err| Error::Internal(format!("core contraction broke alignment: {err}")))?;
        Ok(AlignedContraction { aligned, vertex_map: c.vertex_map, edge_map: c.edge_map })
    }

    /// Radial merge along level `i`: contract every edge between levels
    /// `i - 1` and `i`, then close the gap in the level numbering.
    pub fn radial_merge(&self, i: usize) -> Result<AlignedContraction> {
        if i == 0 || i > self.length {
            return Err(Error::LevelOutOfRange { level: i, length: self.length });
        }
        let merged: Vec<EdgeId> = (0..self.graph.num_edges())
            .filter(|&e| {
                let [a, b] = self.graph.edges()[e];
                let (la, lb) = (self.levels[a], self.levels[b]);
                (la.min(lb), la.max(lb)) == (i - 1, i)
            })
            .collect();
        let c: Contraction = self.graph.contract_edges(&merged)?;
        let mut levels = vec![usize::MAX; c.graph.num_vertices()];
        for (v, &img) in c.vertex_map.iter().enumerate() {
            let l = self.levels[v];
            let nl = if l >= i { l - 1 } else { l };
            if levels[img] != usize::MAX && levels[img] != nl {
                return Err(Error::Internal(format!("radial merge along {i} mixes levels")));
            }
            levels[img] = nl;
        }
        let aligned = AlignedGraph::new(c.graph.clone(), levels)
            .map_err(|err| Error::Internal(format!("radial merge along {i}: {err}")))?;
        debug_assert!(!self.graph.is_stable() || aligned.graph.is_stable());
        Ok(AlignedContraction { aligned, vertex_map: c.vertex_map, edge_map: c.edge_map })
    }

    /// The canonical subdivision and its map to the path `P_k`.
    pub fn canonical_subdivision(&self) -> SubdividedGraph {
        self.subdivide(None)
    }

    /// Subdivision at radius `r`, including the relocated markings.
    pub fn subdivision_at_radius(&self, r: usize) -> Result<SubdividedGraph> {
        if r == 0 || r > self.length {
            return Err(Error::LevelOutOfRange { level: r, length: self.length });
        }
        Ok(self.subdivide(Some(r)))
    }

    fn subdivide(&self, radius: Option<usize>) -> SubdividedGraph {
        let g = &self.graph;
        let mut vertices: Vec<Vertex> = g.vertices().to_vec();
        let mut levels = self.levels.clone();
        let mut synthetic = vec![false; vertices.len()];
        let mut marking_leaf = vec![false; vertices.len()];
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        let mut path_edge = Vec::new();
        for (e, &[a, b]) in g.edges().iter().enumerate() {
            let Some((p, c)) = self.order.orientation(g, e) else {
                edges.push([a, b]);
                origin.push(Some(e));
                path_edge.push(None);
                continue;
            };
            let (lp, lc) = (self.levels[p], self.levels[c]);
            let cuts: Vec<usize> = match radius {
                None => (lp + 1..lc).collect(),
                Some(r) if lp < r && r < lc => vec![r],
                Some(_) => Vec::new(),
            };
            let mut prev = p;
            let mut prev_level = lp;
            for cut in cuts {
                vertices.push(Vertex::new(0, 0, []));
                levels.push(cut);
                synthetic.push(true);
                marking_leaf.push(false);
                let w = vertices.len() - 1;
                edges.push([prev, w]);
                origin.push(Some(e));
                path_edge.push(Some(prev_level + 1));
                prev = w;
                prev_level = cut;
            }
            edges.push([prev, c]);
            origin.push(Some(e));
            path_edge.push(Some(prev_level + 1));
        }
        if let Some(r) = radius {
            for v in 0..g.num_vertices() {
                if self.levels[v] >= r {
                    continue;
                }
                let marks = std::mem::take(&mut vertices[v].marks);
                for m in marks {
                    vertices.push(Vertex::new(0, 0, [m]));
                    levels.push(r);
                    synthetic.push(false);
                    marking_leaf.push(true);
                    edges.push([v, vertices.len() - 1]);
                    origin.push(None);
                    path_edge.push(None);
                }
            }
        }
        let mut fiber_sizes = vec![0; self.length + 1];
        if radius.is_none() {
            for m in path_edge.iter().flatten() {
                fiber_sizes[*m] += 1;
            }
        }
        let graph = DecoratedGraph::from_parts_unchecked(
            g.genus_target(),
            g.marking_count(),
            g.degree_target(),
            vertices,
            edges,
        );
        SubdividedGraph { graph, levels, synthetic, marking_leaf, origin, path_edge, fiber_sizes }
    }
}

#[derive(Clone, Debug)]
pub struct AlignedCanonical {
    pub form: CanonicalForm,
    pub representative: AlignedGraph,
}

#[derive(Clone, Debug)]
pub struct AlignedContraction {
    pub aligned: AlignedGraph,
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<Option<EdgeId>>,
}

/// A subdivided aligned graph. Synthetic vertices are bivalent with
/// `w = δ = 0`; in the canonical subdivision every non-core edge lies over a
/// single edge of the path `P_k`.
#[derive(Clone, Debug)]
pub struct SubdividedGraph {
    pub graph: DecoratedGraph,
    pub levels: Vec<usize>,
    pub synthetic: Vec<bool>,
    /// New leaves carrying markings moved off vertices below the radius.
    pub marking_leaf: Vec<bool>,
    /// Original edge each new edge came from (`None` for marking edges).
    pub origin: Vec<Option<EdgeId>>,
    /// Path edge `m ∈ 1..=k` under each non-core edge.
    pub path_edge: Vec<Option<usize>>,
    /// `|ρ̂⁻¹(m)|` at index `m` (canonical subdivision only).
    pub fiber_sizes: Vec<usize>,
}

impl SubdividedGraph {
    /// Removes synthetic vertices, concatenating the edge pairs through them.
    pub fn smooth(&self) -> Result<(DecoratedGraph, Vec<usize>)> {
        let n = self.graph.num_vertices();
        let mut keep: Vec<Option<usize>> = vec![None; n];
        let mut vertices = Vec::new();
        let mut levels = Vec::new();
        for v in 0..n {
            if !self.synthetic[v] {
                keep[v] = Some(vertices.len());
                vertices.push(self.graph.vertex(v).clone());
                levels.push(self.levels[v]);
            }
        }
        // group subdivided edges by origin, keep the two real endpoints
        let mut by_origin: std::collections::BTreeMap<EdgeId, Vec<VertexId>> = Default::default();
        let mut edges = Vec::new();
        for (i, &[a, b]) in self.graph.edges().iter().enumerate() {
            match self.origin[i] {
                Some(e) => {
                    let ends = by_origin.entry(e).or_default();
                    for x in [a, b] {
                        if !self.synthetic[x] {
                            ends.push(x);
                        }
                    }
                }
                None => edges.push((usize::MAX, [a, b])),
            }
        }
        let mut real: Vec<(usize, [VertexId; 2])> = by_origin
            .into_iter()
            .map(|(e, ends)| match ends.as_slice() {
                [x, y] => Ok((e, [*x, *y])),
                _ => Err(Error::Internal(format!("edge {e} does not smooth to two endpoints"))),
            })
            .collect::<Result<_>>()?;
        real.extend(edges);
        let edges = real
            .into_iter()
            .map(|(_, [a, b])| [keep[a].unwrap(), keep[b].unwrap()])
            .collect();
        let g = DecoratedGraph::new(
            self.graph.genus_target(),
            self.graph.marking_count(),
            self.graph.degree_target(),
            vertices,
            edges,
        )?;
        Ok((g, levels))
    }
}

/// All radial alignments of a genus-one graph.
pub fn enumerate_alignments(g: &DecoratedGraph) -> Result<Vec<AlignedGraph>> {
    let c = core(g)?;
    let order = TreeOrder::new(g, &c);
    let tree = order.tree_vertices();
    let mut out = Vec::new();
    let mut levels: Vec<usize> = vec![0; g.num_vertices()];
    let mut placed = c.vertices.clone();
    fn rec(
        g: &DecoratedGraph,
        order: &TreeOrder,
        tree: &[VertexId],
        placed: &mut Vec<bool>,
        levels: &mut Vec<usize>,
        level: usize,
        out: &mut Vec<AlignedGraph>,
    ) {
        let remaining: Vec<VertexId> = tree.iter().copied().filter(|&v| !placed[v]).collect();
        if remaining.is_empty() {
            out.push(AlignedGraph::new(g.clone(), levels.clone()).expect("generated alignment is valid"));
            return;
        }
        let available: Vec<VertexId> = remaining
            .iter()
            .copied()
            .filter(|&v| order.parent[v].is_some_and(|(p, _)| placed[p]))
            .collect();
        // parents must sit strictly below, so choose from vertices whose parent
        // was placed at an earlier level
        for mask in 1u64..(1u64 << available.len()) {
            let block: Vec<VertexId> =
                (0..available.len()).filter(|i| mask >> i & 1 == 1).map(|i| available[i]).collect();
            for &v in &block {
                placed[v] = true;
                levels[v] = level;
            }
            rec(g, order, tree, placed, levels, level + 1, out);
            for &v in &block {
                placed[v] = false;
                levels[v] = 0;
            }
        }
    }
    rec(g, &order, &tree, &mut placed, &mut levels, 1, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(w: u32, d: u32) -> Vertex {
        Vertex::new(w, d, [])
    }

    /// Triangle core with a pendant path.
    fn triangle_with_tail() -> DecoratedGraph {
        DecoratedGraph::new(
            1,
            0,
            2,
            vec![v(0, 0), v(0, 0), v(0, 0), v(0, 1), v(0, 1)],
            vec![[0, 1], [1, 2], [2, 0], [0, 3], [3, 4]],
        )
        .unwrap()
    }

    #[test]
    fn core_examples() {
        let c = core(&triangle_with_tail()).unwrap();
        assert_eq!(c.edge_set(), vec![0, 1, 2]);
        assert_eq!(c.vertex_set(), vec![0, 1, 2]);

        let weighted = DecoratedGraph::new(1, 0, 1, vec![v(1, 0), v(0, 1)], vec![[0, 1]]).unwrap();
        let c = core(&weighted).unwrap();
        assert!(c.edge_set().is_empty());
        assert_eq!(c.vertex_set(), vec![0]);

        let lp = DecoratedGraph::new(1, 0, 1, vec![v(0, 0), v(0, 1)], vec![[0, 0], [0, 1]]).unwrap();
        assert_eq!(core(&lp).unwrap().edge_set(), vec![0]);

        let tree = DecoratedGraph::new(0, 0, 2, vec![v(0, 1), v(0, 1)], vec![[0, 1]]).unwrap();
        assert_eq!(core(&tree).unwrap_err(), Error::NotGenusOne(0));
    }

    #[test]
    fn tree_order_examples() {
        let g = triangle_with_tail();
        let t = tree_order(&g).unwrap();
        assert!(t.less(3, 4));
        assert!(!t.less(4, 3));
        assert!(t.less(0, 3));
        assert!(t.less(1, 4));
        assert!(!t.less(3, 0));

        let siblings = DecoratedGraph::new(1, 0, 2, vec![v(1, 0), v(0, 1), v(0, 1)], vec![[0, 1], [0, 2]]).unwrap();
        let t = tree_order(&siblings).unwrap();
        assert!(!t.less(1, 2) && !t.less(2, 1));
    }

    #[test]
    fn alignment_counts() {
        let single = DecoratedGraph::new(1, 0, 1, vec![v(1, 1)], vec![]).unwrap();
        let al = enumerate_alignments(&single).unwrap();
        assert_eq!(al.len(), 1);
        assert_eq!(al[0].length(), 0);

        let siblings = DecoratedGraph::new(1, 0, 2, vec![v(1, 0), v(0, 1), v(0, 1)], vec![[0, 1], [0, 2]]).unwrap();
        assert_eq!(enumerate_alignments(&siblings).unwrap().len(), 3);

        let chain = DecoratedGraph::new(1, 0, 2, vec![v(1, 0), v(0, 1), v(0, 1)], vec![[0, 1], [1, 2]]).unwrap();
        let al = enumerate_alignments(&chain).unwrap();
        assert_eq!(al.len(), 1);
        assert_eq!(al[0].levels(), &[0, 1, 2]);
    }

    fn path_aligned() -> AlignedGraph {
        // core (w=1) - a - b, with a at level 1 and b at level 2
        let g = DecoratedGraph::new(1, 1, 3, vec![Vertex::new(1, 0, [1]), v(0, 1), v(0, 2)], vec![[0, 1], [1, 2]])
            .unwrap();
        AlignedGraph::new(g, vec![0, 1, 2]).unwrap()
    }

    #[test]
    fn radial_merge_examples() {
        let p = path_aligned();
        let m1 = p.radial_merge(1).unwrap().aligned;
        assert_eq!(m1.graph().num_vertices(), 2);
        assert_eq!(m1.graph().vertex(0), &Vertex::new(1, 1, [1]));
        assert_eq!(m1.levels(), &[0, 1]);
        assert_eq!(m1.length(), 1);

        let m2 = p.radial_merge(2).unwrap().aligned;
        assert_eq!(m2.graph().vertex(1), &v(0, 3));
        assert_eq!(m2.levels(), &[0, 1]);

        assert_eq!(p.radial_merge(0).unwrap_err(), Error::LevelOutOfRange { level: 0, length: 2 });
        assert_eq!(p.radial_merge(3).unwrap_err(), Error::LevelOutOfRange { level: 3, length: 2 });
    }

    #[test]
    fn contraction_radius_examples() {
        let g = DecoratedGraph::new(1, 0, 2, vec![v(1, 2)], vec![]).unwrap();
        let a = AlignedGraph::new(g, vec![0]).unwrap();
        assert_eq!(a.contraction_radius().unwrap(), (0, 2));

        let g = DecoratedGraph::new(1, 1, 2, vec![Vertex::new(1, 0, [1]), v(0, 2)], vec![[0, 1]]).unwrap();
        let a = AlignedGraph::new(g, vec![0, 1]).unwrap();
        assert_eq!(a.contraction_radius().unwrap(), (1, 2));
        assert!(a.in_tilde_category());

        let g = DecoratedGraph::new(1, 1, 3, vec![Vertex::new(1, 0, [1]), Vertex::new(0, 0, []), v(0, 3)], vec![[0, 1], [1, 2]]);
        // middle vertex is unstable but alignments do not care
        let a = AlignedGraph::new(g.unwrap(), vec![0, 1, 2]).unwrap();
        assert_eq!(a.contraction_radius().unwrap(), (2, 3));

        let g = DecoratedGraph::new(1, 1, 0, vec![Vertex::new(1, 0, [1])], vec![]).unwrap();
        let a = AlignedGraph::new(g, vec![0]).unwrap();
        assert_eq!(a.contraction_radius().unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn tilde_predicate_readings() {
        let g = DecoratedGraph::new(1, 1, 2, vec![Vertex::new(1, 0, [1]), v(0, 1), v(0, 1)], vec![[0, 1], [1, 2]]);
        let a = AlignedGraph::new(g.unwrap(), vec![0, 1, 2]).unwrap();
        assert_eq!(a.contraction_radius().unwrap(), (1, 1));
        assert!(!a.in_tilde_category());

        let g = DecoratedGraph::new(1, 1, 2, vec![Vertex::new(1, 1, [1]), v(0, 1)], vec![[0, 1]]).unwrap();
        let a = AlignedGraph::new(g, vec![0, 1]).unwrap();
        assert_eq!(a.contraction_radius().unwrap(), (0, 1));
        assert!(!a.in_tilde_category());
        assert!(a.is_nonempty(NonemptyCriterion::RadAware));
    }

    #[test]
    fn subdivision_examples() {
        // edge from level 0 to level 1 stays, edge from level 0 to level 3 gets two new vertices
        let g = DecoratedGraph::new(
            1,
            0,
            3,
            vec![v(1, 0), v(0, 1), v(0, 1), v(0, 1)],
            vec![[0, 1], [1, 2], [0, 3]],
        )
        .unwrap();
        let a = AlignedGraph::new(g.clone(), vec![0, 1, 2, 3]).unwrap();
        let s = a.canonical_subdivision();
        assert_eq!(s.synthetic.iter().filter(|&&x| x).count(), 2);
        assert_eq!(s.graph.num_edges(), 5);
        assert_eq!(s.fiber_sizes, vec![0, 2, 2, 1]);
        let (back, levels) = s.smooth().unwrap();
        assert_eq!(back.canonical_form().encoding, g.canonical_form().encoding);
        assert_eq!(levels, vec![0, 1, 2, 3]);

        let short = DecoratedGraph::new(1, 0, 1, vec![v(1, 0), v(0, 1)], vec![[0, 1]]).unwrap();
        let a = AlignedGraph::new(short, vec![0, 1]).unwrap();
        assert_eq!(a.canonical_subdivision().graph.num_edges(), 1);
        assert_eq!(a.subdivision_at_radius(1).unwrap().graph.num_edges(), 1);
        assert!(a.subdivision_at_radius(2).is_err());

        let marked = DecoratedGraph::new(1, 1, 1, vec![Vertex::new(1, 0, [1]), v(0, 1)], vec![[0, 1]]).unwrap();
        let a = AlignedGraph::new(marked, vec![0, 1]).unwrap();
        let s = a.subdivision_at_radius(1).unwrap();
        assert_eq!(s.graph.num_vertices(), 3);
        assert!(s.graph.vertex(0).marks.is_empty());
        assert_eq!(s.graph.vertex(2).marks, vec![1]);
        assert_eq!(s.levels[2], 1);
    }
}
