//! The desk-scale acceptance grid. Each check returns a [`CriterionReport`];
//! the CLI `verify-all` command and the `acceptance` test target both call
//! [`run_desk`].

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{build_genus1_complex, build_virtual_complex, check_face_identities, SymmetricDeltaComplex};
use crate::enumeration::{aligned_graphs, sharpness_probe, stable_graphs, EnumerationRequest, GraphCatalog, Strategy};
use crate::error::Result;
use crate::genus_one::{core, enumerate_alignments, AlignedGraph, NonemptyCriterion};
use crate::graph::{DecoratedGraph, VertexId};
use crate::homology::{chain_complex, euler_from_betti};
use crate::reference::dependency_by_circuits;
use crate::retract::{
    canonical_alignment, embed_dual, flow, flow_raw, in_z_with, project_to_dual_with, random_dual_point, random_lengths,
    random_metric_point, retract_target, MetricPoint,
};
use crate::tangent::{derivative_at_marked_point, fiber_witness, has_basepoint, has_nonvanishing_dependency, TangentClass, TangentVectorList};

/// `(n, d)` pairs for genus zero.
pub const GENUS0_GRID: [(u32, u32); 8] = [(2, 1), (3, 1), (4, 1), (1, 2), (2, 2), (3, 2), (0, 3), (1, 3)];
/// `(n, d)` pairs for genus one.
pub const GENUS1_GRID: [(u32, u32); 3] = [(1, 2), (2, 2), (1, 3)];

const MAX_WEIGHT: u32 = 4;
const FAILURES_SHOWN: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionReport {
    fn new(id: u32, name: &str, failures: &[String], detail: String) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            detail
        } else {
            let shown: Vec<&str> = failures.iter().take(FAILURES_SHOWN).map(String::as_str).collect();
            format!("{} failure(s): {}", failures.len(), shown.join("; "))
        };
        CriterionReport { id, name: name.to_string(), passed, detail }
    }

    pub fn line(&self) -> String {
        format!("{} criterion {}: {} ({})", if self.passed { "PASS" } else { "FAIL" }, self.id, self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct DeskConfig {
    pub seed: u64,
    /// Random points per instance for the retraction and embedding checks.
    pub samples: usize,
    pub tangent_draws: usize,
    pub criterion: NonemptyCriterion,
    /// Times in `(0, 1)` for the flow checks; 0 and 1 are always added.
    pub times: Vec<BigRational>,
}

impl Default for DeskConfig {
    fn default() -> Self {
        DeskConfig {
            seed: 0x5eed,
            samples: 1000,
            tangent_draws: 10_000,
            criterion: NonemptyCriterion::Dmin,
            times: default_times(),
        }
    }
}

/// One `(g, n, d)` instance with its catalog and complexes.
pub struct Instance {
    pub genus: u32,
    pub markings: u32,
    pub degree: u32,
    pub catalog: GraphCatalog,
    /// Δ^vir for every instance.
    pub virtual_complex: SymmetricDeltaComplex,
    /// The genus-one dual complex, genus one only.
    pub genus1_complex: Option<SymmetricDeltaComplex>,
    /// Nonempty aligned graphs, genus one only.
    pub aligned: Vec<AlignedGraph>,
    pub build_time: Duration,
}

impl Instance {
    pub fn build(g: u32, n: u32, d: u32, criterion: NonemptyCriterion) -> Result<Self> {
        let start = Instant::now();
        let catalog = stable_graphs(&EnumerationRequest::new(g, n, d))?;
        let virtual_complex = build_virtual_complex(&catalog)?;
        let (genus1_complex, aligned) = if g == 1 {
            (Some(build_genus1_complex(&catalog, criterion)?), aligned_graphs(&catalog, criterion)?)
        } else {
            (None, Vec::new())
        };
        Ok(Instance {
            genus: g,
            markings: n,
            degree: d,
            catalog,
            virtual_complex,
            genus1_complex,
            aligned,
            build_time: start.elapsed(),
        })
    }

    pub fn name(&self) -> String {
        format!("({},{},{})", self.genus, self.markings, self.degree)
    }

    /// The complex whose contractibility is claimed.
    pub fn main_complex(&self) -> &SymmetricDeltaComplex {
        self.genus1_complex.as_ref().unwrap_or(&self.virtual_complex)
    }

    fn complexes(&self) -> impl Iterator<Item = &SymmetricDeltaComplex> {
        std::iter::once(&self.virtual_complex).chain(self.genus1_complex.as_ref())
    }
}

pub fn build_grid(criterion: NonemptyCriterion) -> Result<Vec<Instance>> {
    let triples = GENUS0_GRID.iter().map(|&(n, d)| (0, n, d)).chain(GENUS1_GRID.iter().map(|&(n, d)| (1, n, d)));
    triples.map(|(g, n, d)| Instance::build(g, n, d, criterion)).collect()
}

fn sample_rng(seed: u64, instance: usize, sample: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((instance as u64) << 32) | sample as u64);
    rng
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The interior times used for the `Z` checks.
pub fn default_times() -> Vec<BigRational> {
    vec![q(1, 7), q(1, 3), q(1, 2), q(5, 7), q(9, 10)]
}

fn zero_betti(b: &[usize]) -> bool {
    b.iter().all(|&x| x == 0)
}

fn homology_report(id: u32, name: &str, grid: &[&Instance], per_instance: Duration) -> CriterionReport {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for inst in grid {
        let start = Instant::now();
        let c = chain_complex(inst.main_complex(), true);
        let b = c.betti();
        let took = start.elapsed() + inst.build_time;
        parts.push(format!("{} {:?} {:.2}s", inst.name(), b, took.as_secs_f64()));
        if !zero_betti(&b) {
            failures.push(format!("{} has reduced Betti numbers {:?}", inst.name(), b));
        }
        if took > per_instance {
            failures.push(format!("{} took {:.1}s", inst.name(), took.as_secs_f64()));
        }
    }
    CriterionReport::new(id, name, &failures, parts.join(", "))
}

pub fn criterion_1(grid: &[Instance]) -> CriterionReport {
    let g0: Vec<&Instance> = grid.iter().filter(|i| i.genus == 0).collect();
    homology_report(1, "genus-0 virtual complexes are acyclic", &g0, Duration::from_secs(120))
}

pub fn criterion_2(grid: &[Instance]) -> CriterionReport {
    let g1: Vec<&Instance> = grid.iter().filter(|i| i.genus == 1).collect();
    homology_report(2, "genus-1 dual complexes are acyclic", &g1, Duration::from_secs(600))
}

pub fn criterion_3(grid: &[Instance]) -> CriterionReport {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in grid {
        let x = inst.main_complex();
        if x.is_empty() {
            continue;
        }
        checked += 1;
        let by_cells = x.euler_characteristic();
        let by_betti = euler_from_betti(&chain_complex(x, false));
        if by_cells != 1 || by_betti != 1 {
            failures.push(format!("{}: cells give {by_cells}, Betti numbers give {by_betti}", inst.name()));
        }
    }
    CriterionReport::new(3, "Euler characteristic is 1 both ways", &failures, format!("{checked} complexes"))
}

pub fn criterion_4(grid: &[Instance]) -> CriterionReport {
    let mut failures = Vec::new();
    let (mut complexes, mut identities) = (0, 0);
    for inst in grid {
        for x in inst.complexes() {
            complexes += 1;
            if !chain_complex(x, true).boundary_squares_vanish() {
                failures.push(format!("{}: boundary does not square to zero", inst.name()));
            }
            match check_face_identities(x) {
                Ok(k) => identities += k,
                Err(e) => failures.push(format!("{}: {e}", inst.name())),
            }
        }
    }
    CriterionReport::new(
        4,
        "boundary squares to zero and faces commute",
        &failures,
        format!("{complexes} complexes, {identities} face identities"),
    )
}

/// Distances from `roots` along edges outside `skip`, which must leave a forest.
fn forest_distances(g: &DecoratedGraph, lengths: &[BigRational], roots: &[VertexId], skip: &[bool]) -> Vec<Option<BigRational>> {
    let mut dist: Vec<Option<BigRational>> = vec![None; g.num_vertices()];
    let mut stack = roots.to_vec();
    for &r in roots {
        dist[r] = Some(BigRational::zero());
    }
    while let Some(v) = stack.pop() {
        for (e, &[a, b]) in g.edges().iter().enumerate() {
            if skip[e] || a == b {
                continue;
            }
            for (x, y) in [(a, b), (b, a)] {
                if x == v && dist[y].is_none() {
                    dist[y] = Some(dist[v].clone().unwrap() + &lengths[e]);
                    stack.push(y);
                }
            }
        }
    }
    dist
}

/// Distance of every vertex from the core in genus one, or from `root` in genus zero.
fn path_lengths(g: &DecoratedGraph, lengths: &[BigRational], root: VertexId) -> Vec<Option<BigRational>> {
    if g.genus_target() == 1 {
        let c = core(g).expect("genus one");
        forest_distances(g, lengths, &c.vertex_set(), &c.edges)
    } else {
        forest_distances(g, lengths, &[root], &vec![false; g.num_edges()])
    }
}

/// The leaf identity on one metric: returns an error message on mismatch.
fn check_leaf_paths(p: &MetricPoint, t: &BigRational) -> std::result::Result<(), String> {
    let start = flow_raw(p.graph(), p.lengths(), &q(0, 1)).map_err(|e| e.to_string())?;
    let now = flow_raw(p.graph(), p.lengths(), t).map_err(|e| e.to_string())?;
    let sp = &now.sprouted;
    let Some(root) = (0..sp.num_vertices()).find(|&v| !sp.is_one_end_vertex(v)) else {
        return Err("sprouted graph has no inner vertex".into());
    };
    let d = BigRational::from_integer(BigInt::from(sp.degree_target()));
    let before = path_lengths(&start.sprouted, &start.sprouted_lengths, root);
    let after = path_lengths(now.point.graph(), now.point.lengths(), now.vertex_map[root]);
    for v in (0..sp.num_vertices()).filter(|&v| sp.is_one_end_vertex(v)) {
        let (Some(p0), Some(pt)) = (&before[v], &after[now.vertex_map[v]]) else {
            return Err(format!("leaf {v} not reached"));
        };
        let expected = t / &d + (BigRational::from_integer(1.into()) - t) * p0;
        if *pt != expected {
            return Err(format!("leaf {v} at distance {pt} instead of {expected}"));
        }
    }
    Ok(())
}

fn d_min(p: &MetricPoint) -> Option<u32> {
    canonical_alignment(p).ok()?.contraction_radius().ok().map(|(_, d)| d)
}

/// Checks `(d)` on one point of `Z`.
fn check_z_point(p: &MetricPoint, times: &[BigRational], criterion: NonemptyCriterion) -> std::result::Result<(), String> {
    let base = d_min(p).ok_or("no contraction radius")?;
    for t in times {
        let f = flow(p, t).map_err(|e| e.to_string())?;
        if !in_z_with(&f, criterion).map_err(|e| e.to_string())? {
            return Err(format!("left Z at t = {t}"));
        }
        let now = d_min(&f).ok_or("no contraction radius")?;
        if now < base {
            return Err(format!("d_min dropped from {base} to {now} at t = {t}"));
        }
    }
    Ok(())
}

/// The five retraction invariants, in report order.
pub const RETRACT_INVARIANTS: [&str; 5] = ["flow at 0", "flow at 1", "gluing", "Z preserved", "leaf paths"];

/// Checks and failures per entry of [`RETRACT_INVARIANTS`].
#[derive(Clone, Debug, Default)]
pub struct RetractSummary {
    pub checked: [usize; 5],
    pub failures: [Vec<String>; 5],
}

impl RetractSummary {
    fn record(&mut self, which: usize, outcome: std::result::Result<(), String>) {
        self.checked[which] += 1;
        if let Err(e) = outcome {
            self.failures[which].push(e);
        }
    }

    fn merge(mut self, other: RetractSummary) -> RetractSummary {
        for i in 0..5 {
            self.checked[i] += other.checked[i];
            self.failures[i].extend(other.failures[i].iter().cloned());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.iter().all(Vec::is_empty)
    }
}

fn same(a: Result<MetricPoint>, b: &MetricPoint, what: &str) -> std::result::Result<(), String> {
    match a {
        Ok(x) if x.same_point(b) => Ok(()),
        Ok(_) => Err(what.to_string()),
        Err(e) => Err(e.to_string()),
    }
}

fn retract_sample(
    inst: &Instance,
    graphs: &[DecoratedGraph],
    multi: &[DecoratedGraph],
    rng: &mut ChaCha8Rng,
    times: &[BigRational],
    criterion: NonemptyCriterion,
) -> RetractSummary {
    let mut out = RetractSummary::default();
    let p = match random_metric_point(rng, graphs, MAX_WEIGHT) {
        Ok(p) => p,
        Err(e) => {
            out.record(0, Err(e.to_string()));
            return out;
        }
    };
    let all_times: Vec<BigRational> = std::iter::once(q(0, 1)).chain(times.iter().cloned()).chain([q(1, 1)]).collect();
    out.record(0, same(flow(&p, &q(0, 1)), &p, "flow at 0 moved the point"));
    match retract_target(inst.genus, inst.markings, inst.degree) {
        Ok(target) => out.record(1, same(flow(&p, &q(1, 1)), &target, "flow at 1 missed the target")),
        Err(e) => out.record(1, Err(e.to_string())),
    }
    if !multi.is_empty() {
        let g = &multi[rng.gen_range(0..multi.len())];
        let e = rng.gen_range(0..g.num_edges());
        let c = g.contract_edge(e).expect("edge exists");
        let small = random_lengths(rng, c.graph.num_edges(), MAX_WEIGHT);
        let big: Vec<BigRational> =
            c.edge_map.iter().map(|img| img.map_or_else(BigRational::zero, |f| small[f].clone())).collect();
        let p_small = MetricPoint::new(c.graph.clone(), small).expect("positive lengths");
        for t in &all_times {
            let outcome = match flow(&p_small, t) {
                Ok(b) => same(flow_raw(g, &big, t).map(|tr| tr.point), &b, "flows differ").map_err(|e| format!("t = {t}: {e}")),
                Err(e) => Err(e.to_string()),
            };
            out.record(2, outcome);
        }
    }
    if inst.genus == 1 {
        let mut z_points = Vec::new();
        if in_z_with(&p, criterion).unwrap_or(false) {
            z_points.push(p.clone());
        }
        if !inst.aligned.is_empty() {
            match random_dual_point(rng, &inst.aligned, MAX_WEIGHT, criterion) {
                Ok(qp) => z_points.push(embed_dual(&qp)),
                Err(e) => out.record(3, Err(e.to_string())),
            }
        }
        for z in &z_points {
            out.record(3, check_z_point(z, times, criterion));
        }
    }
    for t in &all_times {
        out.record(4, check_leaf_paths(&p, t).map_err(|e| format!("t = {t}: {e}")));
    }
    out
}

/// Runs the retraction invariants on `samples` seeded random points of one instance.
pub fn check_retract(inst: &Instance, stream: usize, cfg: &DeskConfig) -> RetractSummary {
    let graphs: Vec<DecoratedGraph> = inst.catalog.boundary().cloned().collect();
    let multi: Vec<DecoratedGraph> = graphs.iter().filter(|g| g.num_edges() >= 2).cloned().collect();
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let mut s = retract_sample(inst, &graphs, &multi, &mut sample_rng(cfg.seed, stream, i), &cfg.times, cfg.criterion);
            for f in s.failures.iter_mut().flatten() {
                *f = format!("sample {i}: {f}");
            }
            s
        })
        .reduce(RetractSummary::default, RetractSummary::merge)
}

pub fn criterion_5(grid: &[Instance], cfg: &DeskConfig) -> CriterionReport {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for (idx, inst) in grid.iter().enumerate() {
        let s = check_retract(inst, idx, cfg);
        for (name, fs) in RETRACT_INVARIANTS.iter().zip(&s.failures) {
            failures.extend(fs.iter().map(|f| format!("{} {name} {f}", inst.name())));
        }
        parts.push(format!("{} {} pts/{} gluing/{} Z", inst.name(), cfg.samples, s.checked[2], s.checked[3]));
    }
    CriterionReport::new(5, "retraction invariants", &failures, parts.join(", "))
}

pub fn criterion_6(grid: &[Instance], cfg: &DeskConfig) -> CriterionReport {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for (idx, inst) in grid.iter().enumerate().filter(|(_, i)| i.genus == 1) {
        if inst.aligned.is_empty() {
            continue;
        }
        let graphs: Vec<DecoratedGraph> = inst.catalog.boundary().cloned().collect();
        let results: Vec<(Vec<String>, usize)> = (0..cfg.samples)
            .into_par_iter()
            .map(|i| {
                let mut errs = Vec::new();
                let rng = &mut sample_rng(cfg.seed ^ 0x6, idx, i);
                match random_dual_point(rng, &inst.aligned, MAX_WEIGHT, cfg.criterion) {
                    Ok(qp) => match project_to_dual_with(&embed_dual(&qp), cfg.criterion) {
                        Ok(back) if back.canonical_key() == qp.canonical_key() => {}
                        Ok(_) => errs.push(format!("sample {i}: project after embed is not the identity")),
                        Err(e) => errs.push(format!("sample {i}: {e}")),
                    },
                    Err(e) => errs.push(format!("sample {i}: {e}")),
                }
                // rejection sampling for a point of Z
                let mut tries = 0;
                let z = loop {
                    tries += 1;
                    if tries > 10_000 {
                        break None;
                    }
                    let p = random_metric_point(rng, &graphs, MAX_WEIGHT).expect("nonempty catalog");
                    if in_z_with(&p, cfg.criterion).unwrap_or(false) {
                        break Some(p);
                    }
                };
                let Some(p) = z else {
                    errs.push(format!("sample {i}: no point of Z found"));
                    return (errs, tries);
                };
                match project_to_dual_with(&p, cfg.criterion) {
                    Ok(qp) if embed_dual(&qp).same_point(&p) => {}
                    Ok(_) => errs.push(format!("sample {i}: embed after project is not the identity")),
                    Err(e) => errs.push(format!("sample {i}: {e}")),
                }
                (errs, tries)
            })
            .collect();
        let tries: usize = results.iter().map(|r| r.1).sum();
        for (errs, _) in results {
            failures.extend(errs.into_iter().map(|e| format!("{} {e}", inst.name())));
        }
        parts.push(format!("{} {} dual + {} Z pts ({} draws)", inst.name(), cfg.samples, cfg.samples, tries));
    }
    CriterionReport::new(6, "embedding round trips", &failures, parts.join(", "))
}

pub fn criterion_7(grid: &[Instance]) -> CriterionReport {
    let mut failures = Vec::new();
    let (mut aligned_count, mut moves) = (0, 0);
    for inst in grid.iter().filter(|i| i.genus == 1) {
        for g in inst.catalog.graphs() {
            let Ok(all) = enumerate_alignments(g) else {
                failures.push(format!("{}: alignment enumeration failed", inst.name()));
                continue;
            };
            for a in all {
                aligned_count += 1;
                let base = a.contraction_radius().map(|r| r.1);
                let mut children: Vec<(String, AlignedGraph)> = Vec::new();
                for e in a.core_edges() {
                    if let Ok(c) = a.contract_core_edge(e) {
                        children.push((format!("core edge {e}"), c.aligned));
                    }
                }
                for i in 1..=a.length() {
                    match a.radial_merge(i) {
                        Ok(c) => children.push((format!("merge {i}"), c.aligned)),
                        Err(e) => failures.push(format!("{}: merge {i} failed: {e}", inst.name())),
                    }
                }
                for (what, child) in children {
                    moves += 1;
                    let now = child.contraction_radius().map(|r| r.1);
                    match (&base, &now) {
                        (Ok(b), Ok(n)) if n >= b => {}
                        _ => failures.push(format!("{}: {what} took d_min from {base:?} to {now:?}", inst.name())),
                    }
                }
            }
        }
    }
    CriterionReport::new(
        7,
        "d_min never decreases",
        &failures,
        format!("{aligned_count} aligned graphs, {moves} contractions and merges"),
    )
}

fn integer_lists(m: usize, dim: usize) -> impl ParallelIterator<Item = Vec<Vec<i64>>> {
    let cells = (m * dim) as u32;
    (0..5u64.pow(cells)).into_par_iter().map(move |mut code| {
        (0..m)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        let x = (code % 5) as i64 - 2;
                        code /= 5;
                        x
                    })
                    .collect()
            })
            .collect()
    })
}

pub fn criterion_8(cfg: &DeskConfig) -> CriterionReport {
    let mut failures = Vec::new();
    let mut instances = 0usize;
    for m in 1..=3 {
        for dim in 1..=3 {
            let bad: Vec<(Vec<Vec<i64>>, bool)> = integer_lists(m, dim)
                .filter_map(|vs| {
                    let list = TangentVectorList::from_integers(dim, &vs).expect("well formed");
                    let got = has_nonvanishing_dependency(&list);
                    (got != dependency_by_circuits(&vs)).then_some((vs, got))
                })
                .collect();
            instances += 5usize.pow((m * dim) as u32);
            failures.extend(bad.into_iter().map(|(vs, got)| format!("{vs:?} gave {got}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x8);
    let (mut nones, mut witnesses) = (0, 0);
    for _ in 0..cfg.tangent_draws {
        let d = rng.gen_range(1..=4usize);
        let r = rng.gen_range(1..=3usize);
        let coords: Vec<BigRational> = (0..=r).map(|_| q(rng.gen_range(-1..=1), rng.gen_range(1..=2))).collect();
        let v = TangentClass::from_vector(coords).expect("nonempty");
        match fiber_witness(&v, d, r) {
            Ok(None) if d == 1 && v.is_zero() => nones += 1,
            Ok(None) => failures.push(format!("no witness for d = {d}, v = {:?}", v.coords())),
            Ok(Some(_)) if d == 1 && v.is_zero() => failures.push("witness for d = 1, v = 0".into()),
            Ok(Some(w)) => {
                witnesses += 1;
                if has_basepoint(&w) || derivative_at_marked_point(&w) != v || w.degree() != d || w.r() != r {
                    failures.push(format!("bad witness for d = {d}, v = {:?}", v.coords()));
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
    }
    CriterionReport::new(
        8,
        "tangent dependency and fiber witnesses",
        &failures,
        format!("{instances} exhaustive instances, {witnesses} witnesses, {nones} empty fibers"),
    )
}

pub fn criterion_9(grid: &[Instance]) -> CriterionReport {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for inst in grid {
        let req = EnumerationRequest::new(inst.genus, inst.markings, inst.degree).with_strategy(Strategy::Multigraph);
        match sharpness_probe(&req, 2) {
            Ok(0) => parts.push(format!("{} +0", inst.name())),
            Ok(k) => failures.push(format!("{} gained {k} classes", inst.name())),
            Err(e) => failures.push(format!("{}: {e}", inst.name())),
        }
    }
    CriterionReport::new(9, "raising the edge bound by 2 adds nothing", &failures, parts.join(", "))
}

/// Runs every criterion in order.
pub fn run_desk(cfg: &DeskConfig) -> Result<Vec<CriterionReport>> {
    let grid = build_grid(cfg.criterion)?;
    Ok(vec![
        criterion_1(&grid),
        criterion_2(&grid),
        criterion_3(&grid),
        criterion_4(&grid),
        criterion_5(&grid, cfg),
        criterion_6(&grid, cfg),
        criterion_7(&grid),
        criterion_8(cfg),
        criterion_9(&grid),
    ])
}
