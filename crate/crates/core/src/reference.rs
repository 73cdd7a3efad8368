//! Slow, independent implementations used to cross-check the main code paths.
//! None of these share logic with the functions they check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::genus_one::core;
use crate::graph::{permutation_sign, permutations, DecoratedGraph, EdgeId, VertexId};

fn edge_multiset(edges: &[[VertexId; 2]], perm: &[VertexId]) -> Vec<[VertexId; 2]> {
    let mut out: Vec<[VertexId; 2]> = edges
        .iter()
        .map(|&[a, b]| {
            let (x, y) = (perm[a], perm[b]);
            [x.min(y), x.max(y)]
        })
        .collect();
    out.sort_unstable();
    out
}

/// Vertex bijections `G → H` preserving decorations and edge multiplicities.
pub fn vertex_isomorphisms(g: &DecoratedGraph, h: &DecoratedGraph) -> Vec<Vec<VertexId>> {
    if g.num_vertices() != h.num_vertices()
        || g.num_edges() != h.num_edges()
        || (g.genus_target(), g.marking_count(), g.degree_target())
            != (h.genus_target(), h.marking_count(), h.degree_target())
    {
        return Vec::new();
    }
    let target = edge_multiset(h.edges(), &(0..h.num_vertices()).collect::<Vec<_>>());
    permutations(g.num_vertices())
        .into_iter()
        .filter(|p| (0..g.num_vertices()).all(|v| g.vertex(v) == h.vertex(p[v])))
        .filter(|p| edge_multiset(g.edges(), p) == target)
        .collect()
}

pub fn isomorphic(g: &DecoratedGraph, h: &DecoratedGraph) -> bool {
    !vertex_isomorphisms(g, h).is_empty()
}

/// Order of the automorphism group acting on vertices and half-edges: each
/// vertex automorphism extends in `Π mult! · 2^loops` ways.
pub fn automorphism_count(g: &DecoratedGraph) -> usize {
    let mut classes: BTreeMap<[VertexId; 2], usize> = BTreeMap::new();
    for &[a, b] in g.edges() {
        *classes.entry([a.min(b), a.max(b)]).or_default() += 1;
    }
    let extensions: usize = classes
        .iter()
        .map(|(&[a, b], &m)| {
            let fact: usize = (1..=m).product();
            if a == b {
                fact << m
            } else {
                fact
            }
        })
        .product();
    vertex_isomorphisms(g, g).len() * extensions
}

/// Brute force over all bijections of vertices and half-edges (tiny graphs only).
pub fn automorphism_count_by_half_edges(g: &DecoratedGraph) -> usize {
    let h = 2 * g.num_edges();
    let vperms = vertex_isomorphisms(g, g);
    let hperms = permutations(h);
    let mut count = 0;
    for sigma in &vperms {
        for tau in &hperms {
            let partners = (0..h).all(|x| tau[x ^ 1] == tau[x] ^ 1);
            let incident = (0..h).all(|x| sigma[g.half_edge_vertex(x)] == g.half_edge_vertex(tau[x]));
            if partners && incident {
                count += 1;
            }
        }
    }
    count
}

/// Whether an automorphism permutes `labels` oddly, by trying every edge
/// bijection compatible with every vertex automorphism.
pub fn has_odd_label_symmetry(g: &DecoratedGraph, labels: &[EdgeId]) -> bool {
    odd_label_symmetry_with(g, labels, &vertex_isomorphisms(g, g))
}

pub fn odd_label_symmetry_with(g: &DecoratedGraph, labels: &[EdgeId], vertex_perms: &[Vec<VertexId>]) -> bool {
    let e = g.num_edges();
    for sigma in vertex_perms {
        for tau in permutations(e) {
            let ok = (0..e).all(|x| {
                let [a, b] = g.edges()[x];
                let [c, d] = g.edges()[tau[x]];
                let (p, q) = (sigma[a], sigma[b]);
                (p.min(q), p.max(q)) == (c.min(d), c.max(d))
            });
            if !ok {
                continue;
            }
            let images: Vec<usize> =
                labels.iter().map(|l| labels.iter().position(|&x| x == tau[*l]).expect("invariant labels")).collect();
            if permutation_sign(&images) < 0 {
                return true;
            }
        }
    }
    false
}

/// Radial alignments by checking every function `V → {0..k}` against the definition.
pub fn alignment_count(g: &DecoratedGraph) -> usize {
    let c = core(g).expect("genus one");
    let n = g.num_vertices();
    let tree: Vec<VertexId> = (0..n).filter(|&v| !c.vertices[v]).collect();
    if tree.is_empty() {
        return 1;
    }
    // parent relation from distances to the core in the tree part
    let mut dist = vec![usize::MAX; n];
    let mut frontier: Vec<VertexId> = (0..n).filter(|&v| c.vertices[v]).collect();
    for &v in &frontier {
        dist[v] = 0;
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &[a, b] in g.edges() {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && dist[y] == usize::MAX {
                        dist[y] = dist[v] + 1;
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    let t = tree.len();
    let mut count = 0;
    for k in 1..=t {
        let total = (k as u64).pow(t as u32);
        for code in 0..total {
            let mut level = vec![0usize; n];
            let mut c2 = code;
            for &v in &tree {
                level[v] = (c2 % k as u64) as usize + 1;
                c2 /= k as u64;
            }
            let surjective = (1..=k).all(|l| tree.iter().any(|&v| level[v] == l));
            let monotone = g.edges().iter().all(|&[a, b]| {
                if dist[a] == dist[b] {
                    return true;
                }
                let (p, ch) = if dist[a] < dist[b] { (a, b) } else { (b, a) };
                level[p] < level[ch]
            });
            if surjective && monotone {
                count += 1;
            }
        }
    }
    count
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Rank as the size of the largest nonvanishing minor.
pub fn rank_by_minors(vectors: &[Vec<i64>]) -> usize {
    let m = vectors.len();
    let dim = vectors.first().map_or(0, Vec::len);
    (1..=m.min(dim))
        .rev()
        .find(|&k| {
            subsets(m, k).iter().any(|cols| {
                subsets(dim, k).iter().any(|rows| {
                    let minor: Vec<Vec<i64>> =
                        rows.iter().map(|&r| cols.iter().map(|&c| vectors[c][r]).collect()).collect();
                    det(&minor) != 0
                })
            })
        })
        .unwrap_or(0)
}

/// A dependency with all coefficients nonzero exists iff every vector lies in
/// a circuit, a minimal dependent subset.
pub fn dependency_by_circuits(vectors: &[Vec<i64>]) -> bool {
    let m = vectors.len();
    let dependent = |s: &[usize]| {
        let sub: Vec<Vec<i64>> = s.iter().map(|&i| vectors[i].clone()).collect();
        rank_by_minors(&sub) < s.len()
    };
    let mut covered = vec![false; m];
    for k in 1..=m {
        for s in subsets(m, k) {
            if !dependent(&s) {
                continue;
            }
            let minimal = s.iter().all(|&drop| {
                let rest: Vec<usize> = s.iter().copied().filter(|&x| x != drop).collect();
                rest.is_empty() || !dependent(&rest)
            });
            if minimal {
                for &i in &s {
                    covered[i] = true;
                }
            }
        }
    }
    covered.iter().all(|&c| c)
}

/// Kernel basis of the matrix with the given columns, by rational row reduction.
pub fn kernel_basis(vectors: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let m = vectors.len();
    let dim = vectors.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| (0..m).map(|c| BigRational::from_integer(BigInt::from(vectors[c][r]))).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..m {
        let Some(p) = (row..dim).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(row, p);
        let inv = BigRational::one() / &a[row][c];
        for x in &mut a[row] {
            *x *= &inv;
        }
        for r in 0..dim {
            if r != row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..m {
                    let sub = &f * &a[row][k];
                    a[r][k] -= sub;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    (0..m)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); m];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// Randomised certificate: a random kernel combination with every coordinate
/// nonzero proves a nonvanishing dependency. `false` is only probabilistic.
pub fn dependency_by_sampling<R: Rng>(rng: &mut R, vectors: &[Vec<i64>], tries: usize) -> bool {
    let basis = kernel_basis(vectors);
    if basis.is_empty() {
        return false;
    }
    (0..tries).any(|_| {
        let coeffs: Vec<BigRational> =
            basis.iter().map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-1000i64..=1000)))).collect();
        (0..vectors.len()).all(|i| {
            let x: BigRational = basis.iter().zip(&coeffs).map(|(b, c)| &b[i] * c).sum();
            !x.is_zero()
        })
    })
}
