//! Canonical labeling of vertex- and edge-coloured multigraphs.
//!
//! Colour refinement followed by exhaustive individualization. Every leaf of
//! the search tree is a vertex ordering; the canonical ordering is the one with
//! the lexicographically smallest encoding, ties broken by the ordering
//! itself. There is no automorphism pruning, which is fine for the graph sizes
//! this crate works with (a dozen vertices at most).
//!
//! The tie-break makes canonical representatives fixed points: running the
//! search on a representative returns the identity ordering.

use std::collections::BTreeMap;

/// Borrowed view of a multigraph with opaque byte colours.
pub(crate) struct ColoredView<'a> {
    pub vertex_colors: Vec<Vec<u8>>,
    pub edges: &'a [[usize; 2]],
    /// One colour per edge; empty colours when `None`.
    pub edge_colors: Option<Vec<Vec<u8>>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Labeling {
    pub encoding: Vec<u8>,
    /// `order[pos]` is the original vertex placed at position `pos`.
    pub order: Vec<usize>,
    /// `position[v]` is the position of original vertex `v`.
    pub position: Vec<usize>,
    /// `edge_order[i]` is the original edge placed at canonical index `i`.
    pub edge_order: Vec<usize>,
    /// Whether the half-edges of an original edge swap sides in the canonical form.
    pub flipped: Vec<bool>,
}

impl<'a> ColoredView<'a> {
    fn edge_color(&self, e: usize) -> &[u8] {
        match &self.edge_colors {
            Some(c) => &c[e],
            None => &[],
        }
    }

    fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.vertex_colors.len()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            inc[a].push((b, e));
            inc[b].push((a, e));
        }
        inc
    }

    fn edge_color_ranks(&self) -> Vec<u32> {
        let mut distinct: Vec<&[u8]> = (0..self.edges.len()).map(|e| self.edge_color(e)).collect();
        distinct.sort();
        distinct.dedup();
        (0..self.edges.len())
            .map(|e| distinct.binary_search(&self.edge_color(e)).unwrap() as u32)
            .collect()
    }

    /// Initial ordered partition by vertex colour.
    pub fn initial_cells(&self) -> Vec<u32> {
        rank_by(&self.vertex_colors)
    }

    /// Equitable refinement of an ordered partition.
    pub fn refine(&self, cells: Vec<u32>, inc: &[Vec<(usize, usize)>], ecol: &[u32]) -> Vec<u32> {
        let mut cells = cells;
        let mut count = distinct_count(&cells);
        loop {
            let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..cells.len())
                .map(|v| {
                    let mut nb: Vec<(u32, u32)> =
                        inc[v].iter().map(|&(u, e)| (cells[u], ecol[e])).collect();
                    nb.sort_unstable();
                    (cells[v], nb)
                })
                .collect();
            let next = rank_by(&sigs);
            let next_count = distinct_count(&next);
            cells = next;
            if next_count == count {
                return cells;
            }
            count = next_count;
        }
    }

    /// Stable colouring used to prune automorphism searches.
    pub fn stable_cells(&self) -> Vec<u32> {
        let inc = self.incidence();
        let ecol = self.edge_color_ranks();
        self.refine(self.initial_cells(), &inc, &ecol)
    }

    pub fn canonical_labeling(&self) -> Labeling {
        let inc = self.incidence();
        let ecol = self.edge_color_ranks();
        let start = self.refine(self.initial_cells(), &inc, &ecol);
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        self.search(start, &inc, &ecol, &mut best);
        let (encoding, order) = best.unwrap_or_else(|| (self.encode(&[]), Vec::new()));
        let mut position = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let mut edge_order: Vec<usize> = (0..self.edges.len()).collect();
        edge_order.sort_by(|&x, &y| self.edge_key(x, &position).cmp(&self.edge_key(y, &position)));
        let flipped = self
            .edges
            .iter()
            .map(|&[a, b]| a != b && position[a] > position[b])
            .collect();
        Labeling { encoding, order, position, edge_order, flipped }
    }

    fn edge_key<'b>(&'b self, e: usize, position: &[usize]) -> (usize, usize, &'b [u8]) {
        let [a, b] = self.edges[e];
        let (pa, pb) = (position[a], position[b]);
        (pa.min(pb), pa.max(pb), self.edge_color(e))
    }

    fn search(
        &self,
        cells: Vec<u32>,
        inc: &[Vec<(usize, usize)>],
        ecol: &[u32],
        best: &mut Option<(Vec<u8>, Vec<usize>)>,
    ) {
        let n = cells.len();
        // first non-singleton cell in partition order
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &cells {
            *sizes.entry(c).or_default() += 1;
        }
        let target = sizes.iter().find(|(_, &s)| s > 1).map(|(&c, _)| c);
        match target {
            None => {
                let mut order = vec![0; n];
                for (v, &c) in cells.iter().enumerate() {
                    order[c as usize] = v;
                }
                let enc = self.encode(&order);
                let better = match best {
                    None => true,
                    Some((be, bo)) => (&enc, &order) < (be, bo),
                };
                if better {
                    *best = Some((enc, order));
                }
            }
            Some(c) => {
                for v in (0..n).filter(|&v| cells[v] == c) {
                    let split: Vec<u32> = cells
                        .iter()
                        .enumerate()
                        .map(|(u, &cu)| 2 * cu + u32::from(cu == c && u != v))
                        .collect();
                    let refined = self.refine(rank_by(&split), inc, ecol);
                    self.search(refined, inc, ecol, best);
                }
            }
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut position = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let mut out = Vec::new();
        push_u32(&mut out, order.len() as u32);
        push_u32(&mut out, self.edges.len() as u32);
        for &v in order {
            push_bytes(&mut out, &self.vertex_colors[v]);
        }
        let mut keys: Vec<(usize, usize, &[u8])> =
            (0..self.edges.len()).map(|e| self.edge_key(e, &position)).collect();
        keys.sort();
        for (a, b, c) in keys {
            push_u32(&mut out, a as u32);
            push_u32(&mut out, b as u32);
            push_bytes(&mut out, c);
        }
        out
    }

    /// All vertex permutations preserving colours and coloured edge multiplicities.
    ///
    /// `result[k][v]` is the image of vertex `v` under the `k`-th automorphism.
    pub fn vertex_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_colors.len();
        let cells = self.stable_cells();
        let mut mult: BTreeMap<(usize, usize), Vec<Vec<u8>>> = BTreeMap::new();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            mult.entry((a.min(b), a.max(b))).or_default().push(self.edge_color(e).to_vec());
        }
        for list in mult.values_mut() {
            list.sort();
        }
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        type Mult = BTreeMap<(usize, usize), Vec<Vec<u8>>>;
        fn between(mult: &Mult, a: usize, b: usize) -> Option<&Vec<Vec<u8>>> {
            mult.get(&(a.min(b), a.max(b)))
        }
        fn rec(
            v: usize,
            n: usize,
            cells: &[u32],
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
            mult: &Mult,
            out: &mut Vec<Vec<usize>>,
        ) {
            if v == n {
                out.push(image.clone());
                return;
            }
            for cand in 0..n {
                if used[cand] || cells[cand] != cells[v] {
                    continue;
                }
                let ok = (0..=v).all(|u| {
                    let iu = if u == v { cand } else { image[u] };
                    between(mult, u, v) == between(mult, iu, cand)
                });
                if !ok {
                    continue;
                }
                image[v] = cand;
                used[cand] = true;
                rec(v + 1, n, cells, image, used, mult, out);
                used[cand] = false;
                image[v] = usize::MAX;
            }
        }
        rec(0, n, &cells, &mut image, &mut used, &mult, &mut out);
        out
    }
}

fn rank_by<T: Ord>(keys: &[T]) -> Vec<u32> {
    let mut distinct: Vec<&T> = keys.iter().collect();
    distinct.sort();
    distinct.dedup();
    keys.iter().map(|k| distinct.binary_search(&k).unwrap() as u32).collect()
}

fn distinct_count(cells: &[u32]) -> usize {
    let mut c: Vec<u32> = cells.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn push_u32(out: &mut Vec<u8>, x: u32) {
    out.extend_from_slice(&x.to_be_bytes());
}

fn push_bytes(out: &mut Vec<u8>, bytes: &[u8]) {
    push_u32(out, bytes.len() as u32);
    out.extend_from_slice(bytes);
}
