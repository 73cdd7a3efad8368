//! Metric points of the virtual complex, the straight-line retraction onto
//! the sprouted interior graph, canonical radial alignments of genus-one
//! points, the subspace `Z`, and the embedding of the genus-one dual complex.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::genus_one::{core, AlignedGraph, NonemptyCriterion, TreeOrder};
use crate::graph::{DecoratedGraph, EdgeId, VertexId};
use crate::io::rational_to_string;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A graph with strictly positive rational edge lengths summing to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricPoint {
    graph: DecoratedGraph,
    lengths: Vec<BigRational>,
}

impl MetricPoint {
    /// Contracts zero-length edges, then requires positive lengths of total 1.
    pub fn new(graph: DecoratedGraph, lengths: Vec<BigRational>) -> Result<Self> {
        let (graph, lengths, _) = contract_zero_lengths(graph, lengths)?;
        if graph.num_edges() == 0 {
            return Err(Error::InvalidMetric("no edges of positive length".into()));
        }
        let total: BigRational = lengths.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidMetric(format!("total length is {}", rational_to_string(&total))));
        }
        Ok(MetricPoint { graph, lengths })
    }

    /// Like `new`, but rescales to total length 1.
    pub fn normalized(graph: DecoratedGraph, lengths: Vec<BigRational>) -> Result<Self> {
        let (graph, mut lengths, _) = contract_zero_lengths(graph, lengths)?;
        let total: BigRational = lengths.iter().sum();
        if total.is_zero() {
            return Err(Error::InvalidMetric("no edges of positive length".into()));
        }
        for l in &mut lengths {
            *l /= &total;
        }
        Ok(MetricPoint { graph, lengths })
    }

    pub fn graph(&self) -> &DecoratedGraph {
        &self.graph
    }

    pub fn lengths(&self) -> &[BigRational] {
        &self.lengths
    }

    pub fn length(&self, e: EdgeId) -> &BigRational {
        &self.lengths[e]
    }

    /// Isomorphism-invariant key: equal keys mean the same point of the complex.
    pub fn canonical_key(&self) -> Vec<u8> {
        let colors = self.lengths.iter().map(|l| rational_to_string(l).into_bytes()).collect();
        self.graph.canonical_form_colored(self.graph.vertex_colors(), Some(colors)).encoding
    }

    pub fn same_point(&self, other: &MetricPoint) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// Distance of every vertex from the core (genus one only).
    pub fn core_distances(&self) -> Result<Vec<BigRational>> {
        core_distances(&self.graph, &self.lengths)
    }
}

fn contract_zero_lengths(
    graph: DecoratedGraph,
    lengths: Vec<BigRational>,
) -> Result<(DecoratedGraph, Vec<BigRational>, Vec<VertexId>)> {
    if lengths.len() != graph.num_edges() {
        return Err(Error::InvalidMetric(format!("{} lengths for {} edges", lengths.len(), graph.num_edges())));
    }
    if lengths.iter().any(|l| l.is_negative()) {
        return Err(Error::InvalidMetric("negative length".into()));
    }
    let zero: Vec<EdgeId> = (0..lengths.len()).filter(|&e| lengths[e].is_zero()).collect();
    if zero.is_empty() {
        let id = (0..graph.num_vertices()).collect();
        return Ok((graph, lengths, id));
    }
    let c = graph.contract_edges(&zero)?;
    let mut out = vec![BigRational::zero(); c.graph.num_edges()];
    for (e, img) in c.edge_map.iter().enumerate() {
        if let Some(f) = img {
            out[*f] = lengths[e].clone();
        }
    }
    Ok((c.graph, out, c.vertex_map))
}

fn core_distances(graph: &DecoratedGraph, lengths: &[BigRational]) -> Result<Vec<BigRational>> {
    let c = core(graph)?;
    let order = TreeOrder::new(graph, &c);
    let mut dist: Vec<Option<BigRational>> =
        (0..graph.num_vertices()).map(|v| c.vertices[v].then(BigRational::zero)).collect();
    // parents are always reached first in breadth-first order from the core
    let mut queue: std::collections::VecDeque<VertexId> = c.vertex_set().into();
    while let Some(v) = queue.pop_front() {
        for w in 0..graph.num_vertices() {
            if let Some((p, e)) = order.parent[w] {
                if p == v && dist[w].is_none() {
                    dist[w] = Some(dist[v].clone().unwrap() + &lengths[e]);
                    queue.push_back(w);
                }
            }
        }
    }
    dist.into_iter()
        .map(|d| d.ok_or_else(|| Error::Internal("vertex unreachable from the core".into())))
        .collect()
}

/// Checks that the retraction is defined for `(g, n, d)`.
pub fn check_regime(g: u32, n: u32, d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    if g == 0 && n + d < 3 {
        return Err(Error::DegenerateRegime(format!(
            "(0,{n},{d}): the sprouted interior graph is unstable, so the retraction has no target"
        )));
    }
    Ok(())
}

/// Output of one flow step with the bookkeeping needed by the checks.
#[derive(Clone, Debug)]
pub struct FlowTrace {
    pub point: MetricPoint,
    /// The sprouted graph and its lengths at time `t`, before contraction.
    pub sprouted: DecoratedGraph,
    pub sprouted_lengths: Vec<BigRational>,
    /// Vertex of `sprouted` to vertex of `point`.
    pub vertex_map: Vec<VertexId>,
}

/// The retraction on a possibly degenerate metric (zero lengths allowed).
pub fn flow_raw(graph: &DecoratedGraph, lengths: &[BigRational], t: &BigRational) -> Result<FlowTrace> {
    check_regime(graph.genus_target(), graph.marking_count(), graph.degree_target())?;
    if t.is_negative() || t > &BigRational::one() {
        return Err(Error::InvalidInput(format!("time {} outside [0, 1]", rational_to_string(t))));
    }
    if lengths.len() != graph.num_edges() {
        return Err(Error::InvalidMetric(format!("{} lengths for {} edges", lengths.len(), graph.num_edges())));
    }
    let sp = graph.sprout();
    let d = BigRational::from_integer(BigInt::from(graph.degree_target()));
    let keep = BigRational::one() - t;
    let mut ell: Vec<BigRational> = lengths.to_vec();
    ell.resize(sp.graph.num_edges(), BigRational::zero());
    let one_ends = sp.graph.one_ends();
    let mut is_one_end = vec![false; ell.len()];
    for &e in &one_ends {
        is_one_end[e] = true;
    }
    let sprouted_lengths: Vec<BigRational> = ell
        .iter()
        .enumerate()
        .map(|(e, l)| if is_one_end[e] { &keep * l + t / &d } else { &keep * l })
        .collect();
    let (contracted, mut out, vertex_map) = contract_zero_lengths(sp.graph.clone(), sprouted_lengths.clone())?;
    let total: BigRational = out.iter().sum();
    if total.is_zero() {
        return Err(Error::InvalidMetric("flow collapsed every edge".into()));
    }
    for l in &mut out {
        *l /= &total;
    }
    Ok(FlowTrace {
        point: MetricPoint { graph: contracted, lengths: out },
        sprouted: sp.graph,
        sprouted_lengths,
        vertex_map,
    })
}

pub fn flow(p: &MetricPoint, t: &BigRational) -> Result<MetricPoint> {
    Ok(flow_raw(&p.graph, &p.lengths, t)?.point)
}

/// The endpoint of the retraction: the sprouted interior graph with uniform lengths `1/d`.
pub fn retract_target(g: u32, n: u32, d: u32) -> Result<MetricPoint> {
    check_regime(g, n, d)?;
    let sp = DecoratedGraph::interior(g, n, d).sprout().graph;
    let lengths = vec![q(1, d as i64); sp.num_edges()];
    MetricPoint::new(sp, lengths)
}

/// Levels are the ranks of the distinct core distances.
pub fn canonical_alignment(p: &MetricPoint) -> Result<AlignedGraph> {
    let dist = p.core_distances()?;
    let mut distinct: Vec<&BigRational> = dist.iter().collect();
    distinct.sort();
    distinct.dedup();
    let levels = dist.iter().map(|x| distinct.binary_search(&x).unwrap()).collect();
    AlignedGraph::new(p.graph.clone(), levels)
}

pub fn in_z(p: &MetricPoint) -> Result<bool> {
    in_z_with(p, NonemptyCriterion::Dmin)
}

pub fn in_z_with(p: &MetricPoint, criterion: NonemptyCriterion) -> Result<bool> {
    if p.graph.degree_target() == 0 {
        return Err(Error::ZeroDegree);
    }
    Ok(canonical_alignment(p)?.is_nonempty(criterion))
}

/// A point of the genus-one dual complex: lengths on core edges and on the
/// edges `1..=k` of the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPoint {
    aligned: AlignedGraph,
    /// One per entry of `aligned.core_edges()`.
    core_lengths: Vec<BigRational>,
    /// `level_lengths[m - 1]` is the length of path edge `m`.
    level_lengths: Vec<BigRational>,
}

impl DualPoint {
    pub fn new(
        aligned: AlignedGraph,
        core_lengths: Vec<BigRational>,
        level_lengths: Vec<BigRational>,
        criterion: NonemptyCriterion,
    ) -> Result<Self> {
        if core_lengths.len() != aligned.core_edges().len() || level_lengths.len() != aligned.length() {
            return Err(Error::InvalidMetric("length vector does not match the labels".into()));
        }
        if core_lengths.iter().chain(&level_lengths).any(|l| !l.is_positive()) {
            return Err(Error::InvalidMetric("lengths must be positive".into()));
        }
        let total: BigRational = core_lengths.iter().chain(&level_lengths).sum();
        if !total.is_one() {
            return Err(Error::InvalidMetric(format!("total length is {}", rational_to_string(&total))));
        }
        if !aligned.is_nonempty(criterion) {
            return Err(Error::NotInZ("aligned graph outside the nonempty range".into()));
        }
        Ok(DualPoint { aligned, core_lengths, level_lengths })
    }

    pub fn aligned(&self) -> &AlignedGraph {
        &self.aligned
    }

    pub fn core_lengths(&self) -> &[BigRational] {
        &self.core_lengths
    }

    pub fn level_lengths(&self) -> &[BigRational] {
        &self.level_lengths
    }

    pub fn canonical_key(&self) -> Vec<u8> {
        let g = self.aligned.graph();
        let mut colors = vec![Vec::new(); g.num_edges()];
        for (e, l) in self.aligned.core_edges().into_iter().zip(&self.core_lengths) {
            colors[e] = rational_to_string(l).into_bytes();
        }
        let mut vcolors = self.aligned.vertex_colors();
        // level lengths are attached to the level tags, which are fixed by isomorphisms
        for (c, &lv) in vcolors.iter_mut().zip(self.aligned.levels()) {
            if lv > 0 {
                c.extend_from_slice(rational_to_string(&self.level_lengths[lv - 1]).as_bytes());
            }
        }
        g.canonical_form_colored(vcolors, Some(colors)).encoding
    }
}

/// Number of tree edges spanning each path edge `m`, indexed by `m` (entry 0 unused).
fn fiber_sizes(a: &AlignedGraph) -> Vec<usize> {
    let g = a.graph();
    let mut sizes = vec![0; a.length() + 1];
    for e in a.tree_edges() {
        let (p, c) = a.tree_order().orientation(g, e).expect("tree edge");
        for m in a.level(p) + 1..=a.level(c) {
            sizes[m] += 1;
        }
    }
    sizes
}

pub fn embed_dual(qp: &DualPoint) -> MetricPoint {
    let a = &qp.aligned;
    let g = a.graph();
    let fibers = fiber_sizes(a);
    let mut lengths = vec![BigRational::zero(); g.num_edges()];
    for (e, l) in a.core_edges().into_iter().zip(&qp.core_lengths) {
        lengths[e] = l.clone();
    }
    for e in a.tree_edges() {
        let (p, c) = a.tree_order().orientation(g, e).expect("tree edge");
        lengths[e] = (a.level(p) + 1..=a.level(c))
            .map(|m| &qp.level_lengths[m - 1] / BigRational::from_integer(BigInt::from(fibers[m])))
            .sum();
    }
    MetricPoint { graph: g.clone(), lengths }
}

pub fn project_to_dual(p: &MetricPoint) -> Result<DualPoint> {
    project_to_dual_with(p, NonemptyCriterion::Dmin)
}

pub fn project_to_dual_with(p: &MetricPoint, criterion: NonemptyCriterion) -> Result<DualPoint> {
    let a = canonical_alignment(p)?;
    if !a.is_nonempty(criterion) {
        return Err(Error::NotInZ("the canonical alignment has d_min <= 1".into()));
    }
    let dist = p.core_distances()?;
    let mut shell = vec![BigRational::zero(); a.length() + 1];
    for (v, d) in dist.into_iter().enumerate() {
        shell[a.level(v)] = d;
    }
    let fibers = fiber_sizes(&a);
    let level_lengths = (1..=a.length())
        .map(|m| (&shell[m] - &shell[m - 1]) * BigRational::from_integer(BigInt::from(fibers[m])))
        .collect();
    let core_lengths = a.core_edges().into_iter().map(|e| p.lengths[e].clone()).collect();
    DualPoint::new(a, core_lengths, level_lengths, criterion)
}

/// Positive integer weights in `1..=max_weight`, normalised to total 1.
pub fn random_lengths<R: Rng>(rng: &mut R, count: usize, max_weight: u32) -> Vec<BigRational> {
    let w: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=max_weight as i64)).collect();
    let total: i64 = w.iter().sum();
    w.into_iter().map(|x| q(x, total)).collect()
}

pub fn random_metric_point<R: Rng>(rng: &mut R, graphs: &[DecoratedGraph], max_weight: u32) -> Result<MetricPoint> {
    if graphs.is_empty() {
        return Err(Error::InvalidInput("no graphs to sample from".into()));
    }
    let g = &graphs[rng.gen_range(0..graphs.len())];
    let lengths = random_lengths(rng, g.num_edges(), max_weight);
    MetricPoint::new(g.clone(), lengths)
}

pub fn random_dual_point<R: Rng>(
    rng: &mut R,
    aligned: &[AlignedGraph],
    max_weight: u32,
    criterion: NonemptyCriterion,
) -> Result<DualPoint> {
    if aligned.is_empty() {
        return Err(Error::InvalidInput("no aligned graphs to sample from".into()));
    }
    let a = &aligned[rng.gen_range(0..aligned.len())];
    let mut ls = random_lengths(rng, a.label_count(), max_weight);
    let levels = ls.split_off(a.core_edges().len());
    DualPoint::new(a.clone(), ls, levels, criterion)
}
