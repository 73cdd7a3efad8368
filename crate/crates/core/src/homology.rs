//! Rational chain complexes of symmetric Δ-complexes and their homology.
//!
//! Ranks are computed exactly with fraction-free elimination over `BigInt`.
//! Only alive generators span chain groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::complex::{ComplexJson, SymmetricDeltaComplex};
use crate::error::{Error, Result};

/// Column-major sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    /// `columns[c]` lists `(row, value)` with distinct rows, sorted, nonzero.
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    fn from_triples(rows: usize, cols: usize, triples: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triples {
            *acc[c].entry(r).or_default() += v;
        }
        let columns = acc.into_iter().map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect()).collect();
        SparseMatrix { rows, cols, columns }
    }

    /// From row vectors of equal length.
    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let triples = rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)));
        SparseMatrix::from_triples(rows.len(), cols, triples.collect::<Vec<_>>())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let triples = other.columns.iter().enumerate().flat_map(|(c, col)| {
            col.iter().flat_map(move |&(k, v)| self.columns[k].iter().map(move |&(r, u)| (r, c, u * v)))
        });
        SparseMatrix::from_triples(self.rows, other.cols, triples.collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Exact rank over Q.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    let mut order: Vec<&Vec<(usize, i64)>> = m.columns.iter().collect();
    order.sort_by_key(|c| c.len());
    for col in order {
        let mut v: Vec<(usize, BigInt)> = col.iter().map(|&(r, x)| (r, BigInt::from(x))).collect();
        while let Some((lead, _)) = v.first() {
            let Some(p) = pivots.get(lead) else { break };
            v = eliminate(&v, p);
        }
        if let Some(&(lead, _)) = v.first() {
            pivots.insert(lead, v);
        }
    }
    pivots.len()
}

/// `a_p * v - a_v * p`, which cancels the shared leading entry, divided by the content.
fn eliminate(v: &[(usize, BigInt)], p: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let g = v[0].1.gcd(&p[0].1);
    let a = &p[0].1 / &g;
    let b = &v[0].1 / &g;
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < v.len() || j < p.len() {
        let ri = v.get(i).map_or(usize::MAX, |x| x.0);
        let rj = p.get(j).map_or(usize::MAX, |x| x.0);
        let (r, x) = if ri < rj {
            i += 1;
            (ri, &a * &v[i - 1].1)
        } else if rj < ri {
            j += 1;
            (rj, -(&b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ri, &a * &v[i - 1].1 - &b * &p[j - 1].1)
        };
        if !x.is_zero() {
            out.push((r, x));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for (_, x) in &mut out {
            *x /= &content;
        }
    }
    if out.first().is_some_and(|(_, x)| x.is_negative()) {
        for (_, x) in &mut out {
            *x = -&*x;
        }
    }
    out
}

/// Rank over `Z/p` for a prime `p < 2^31`.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let modp = |x: i64| x.rem_euclid(p as i64) as u64;
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for col in &m.columns {
        let mut v: Vec<(usize, u64)> =
            col.iter().map(|&(r, x)| (r, modp(x))).filter(|&(_, x)| x != 0).collect();
        while let Some(&(lead, lv)) = v.first() {
            let Some(piv) = pivots.get(&lead) else { break };
            // v -= (lv / piv_lead) * piv; pivots are stored monic
            let mut acc: BTreeMap<usize, u64> = v.iter().copied().collect();
            for &(r, x) in piv {
                let e = acc.entry(r).or_insert(0);
                *e = (*e + p - lv * x % p) % p;
            }
            v = acc.into_iter().filter(|&(_, x)| x != 0).collect();
        }
        if let Some(&(lead, lv)) = v.first() {
            let s = inv(lv);
            pivots.insert(lead, v.into_iter().map(|(r, x)| (r, x * s % p)).collect());
        }
    }
    pivots.len()
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub reduced: bool,
    /// Rank of `C_p` for `p = 0, 1, ...`.
    pub dims: Vec<usize>,
    /// `boundaries[p]: C_p → C_{p-1}`; `boundaries[0]` maps onto the
    /// augmentation line (zero rows when unreduced).
    pub boundaries: Vec<SparseMatrix>,
}

/// Per-dimension generator data needed to assemble boundaries.
struct CellData {
    alive: bool,
    faces: Vec<(Option<usize>, i8)>,
}

fn assemble(dims: Vec<Vec<CellData>>, reduced: bool) -> ChainComplex {
    // alive generators are renumbered densely
    let index: Vec<Vec<Option<usize>>> = dims
        .iter()
        .map(|gens| {
            let mut next = 0;
            gens.iter()
                .map(|g| {
                    g.alive.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let counts: Vec<usize> = index.iter().map(|ix| ix.iter().flatten().count()).collect();
    let boundaries = (0..dims.len())
        .map(|p| {
            let rows = if p == 0 { usize::from(reduced) } else { counts[p - 1] };
            let mut triples = Vec::new();
            for (g, gen) in dims[p].iter().enumerate() {
                let Some(col) = index[p][g] else { continue };
                if p == 0 {
                    if reduced {
                        triples.push((0, col, 1));
                    }
                    continue;
                }
                for (i, &(target, sign)) in gen.faces.iter().enumerate() {
                    let Some(t) = target else { continue };
                    let Some(row) = index[p - 1][t] else { continue };
                    let s = if i % 2 == 0 { sign as i64 } else { -(sign as i64) };
                    if s != 0 {
                        triples.push((row, col, s));
                    }
                }
            }
            SparseMatrix::from_triples(rows, counts[p], triples)
        })
        .collect();
    ChainComplex { reduced, dims: counts, boundaries }
}

pub fn chain_complex(x: &SymmetricDeltaComplex, reduced: bool) -> ChainComplex {
    let dims = x
        .dims
        .iter()
        .map(|gens| {
            gens.iter()
                .map(|g| CellData { alive: g.alive, faces: g.faces.iter().map(|f| (f.target, f.sign)).collect() })
                .collect()
        })
        .collect();
    assemble(dims, reduced)
}

/// Chain complex from the JSON form of a symmetric Δ-complex.
pub fn chain_complex_from_json(x: &ComplexJson, reduced: bool) -> Result<ChainComplex> {
    let mut dims = Vec::new();
    for (p, dim) in x.dims.iter().enumerate() {
        if dim.p != p {
            return Err(Error::InvalidInput(format!("dimension {} listed at position {p}", dim.p)));
        }
        let mut gens = Vec::new();
        for g in &dim.generators {
            if g.faces.len() != p + 1 {
                return Err(Error::InvalidInput(format!("a {p}-cell needs {} faces", p + 1)));
            }
            let mut faces = Vec::new();
            for f in &g.faces {
                let lower = if p == 0 { 0 } else { x.dims[p - 1].generators.len() };
                let target = match f.target {
                    -1 => None,
                    t if t >= 0 && (t as usize) < lower => Some(t as usize),
                    t => return Err(Error::InvalidInput(format!("face target {t} out of range in dimension {p}"))),
                };
                if !(-1..=1).contains(&f.sign) {
                    return Err(Error::InvalidInput(format!("face sign {} not in -1..=1", f.sign)));
                }
                faces.push((target, f.sign));
            }
            gens.push(CellData { alive: g.alive, faces });
        }
        dims.push(gens);
    }
    Ok(assemble(dims, reduced))
}

impl ChainComplex {
    /// Lowest dimension with a chain group: -1 when reduced.
    pub fn min_dim(&self) -> i64 {
        if self.reduced {
            -1
        } else {
            0
        }
    }

    /// Checks `∂_{p-1} ∘ ∂_p = 0` for every `p`.
    pub fn boundary_squares_vanish(&self) -> bool {
        (1..self.boundaries.len()).all(|p| self.boundaries[p - 1].mul(&self.boundaries[p]).is_zero())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.boundaries.par_iter().map(rank).collect()
    }

    /// Betti numbers starting at `min_dim()`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks = self.ranks();
        self.betti_from_ranks(&ranks)
    }

    fn betti_from_ranks(&self, ranks: &[usize]) -> Vec<usize> {
        let top = self.dims.len();
        let rank_at = |p: usize| ranks.get(p).copied().unwrap_or(0);
        let mut out = Vec::new();
        if self.reduced {
            out.push(1 - rank_at(0));
        }
        for p in 0..top {
            out.push(self.dims[p] - rank_at(p) - rank_at(p + 1));
        }
        out
    }

    /// Betti numbers from ranks over `Z/p`; equal to the rational ones for all
    /// but finitely many primes.
    pub fn betti_mod_p(&self, prime: u64) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|m| rank_mod_p(m, prime)).collect();
        self.betti_from_ranks(&ranks)
    }
}

pub fn betti(c: &ChainComplex) -> Vec<usize> {
    c.betti()
}

pub fn euler_characteristic(x: &SymmetricDeltaComplex) -> i64 {
    x.euler_characteristic()
}

/// Alternating sum of unreduced Betti numbers.
pub fn euler_from_betti(c: &ChainComplex) -> i64 {
    let b = c.betti();
    let shift = c.min_dim();
    let mut chi: i64 = b
        .iter()
        .enumerate()
        .map(|(i, &x)| if (i as i64 + shift).rem_euclid(2) == 0 { x as i64 } else { -(x as i64) })
        .sum();
    if c.reduced {
        // reduced and unreduced Euler characteristics differ by the augmentation line
        chi += 1;
    }
    chi
}
