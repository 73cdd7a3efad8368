//! Tangent computations at the marked point for tuples of monic polynomials,
//! done over Q.
//!
//! Both predicates here are rank conditions, and ranks do not change under
//! field extension, so answers over Q agree with answers over C.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Root multisets `R_0, ..., R_r`, each of size `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootTuple {
    roots: Vec<Vec<BigRational>>,
}

impl RootTuple {
    pub fn new(roots: Vec<Vec<BigRational>>) -> Result<Self> {
        if roots.len() < 2 {
            return Err(Error::InvalidInput("need at least two root multisets".into()));
        }
        let d = roots[0].len();
        if d == 0 || roots.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidInput("root multisets must share a positive size".into()));
        }
        Ok(RootTuple { roots })
    }

    pub fn degree(&self) -> usize {
        self.roots[0].len()
    }

    /// The `r` of `P^r`.
    pub fn r(&self) -> usize {
        self.roots.len() - 1
    }

    pub fn roots(&self) -> &[Vec<BigRational>] {
        &self.roots
    }
}

/// A vector modulo the diagonal, stored with first coordinate 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangentClass {
    coords: Vec<BigRational>,
}

impl TangentClass {
    pub fn from_vector(v: Vec<BigRational>) -> Result<Self> {
        let Some(first) = v.first().cloned() else {
            return Err(Error::InvalidInput("empty vector".into()));
        };
        Ok(TangentClass { coords: v.into_iter().map(|x| x - &first).collect() })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// The class of `(-Σ R_0, ..., -Σ R_r)`.
pub fn derivative_at_marked_point(r: &RootTuple) -> TangentClass {
    let v = r.roots.iter().map(|ri| -ri.iter().sum::<BigRational>()).collect();
    TangentClass::from_vector(v).expect("at least two coordinates")
}

pub fn has_basepoint(r: &RootTuple) -> bool {
    r.roots[0].iter().any(|x| r.roots[1..].iter().all(|ri| ri.contains(x)))
}

/// A basepoint-free tuple of `r + 1` multisets of size `d` whose derivative
/// is `v`; `None` exactly when `d = 1` and `v = 0`.
pub fn fiber_witness(v: &TangentClass, d: usize, r: usize) -> Result<Option<RootTuple>> {
    if d == 0 || r == 0 {
        return Err(Error::InvalidInput("need d >= 1 and r >= 1".into()));
    }
    if v.coords.len() != r + 1 {
        return Err(Error::InvalidInput(format!("vector has {} coordinates, expected {}", v.coords.len(), r + 1)));
    }
    let sums: Vec<BigRational> = v.coords.iter().map(|x| -x.clone()).collect();
    if d == 1 {
        if v.is_zero() {
            return Ok(None);
        }
        return RootTuple::new(sums.into_iter().map(|s| vec![s]).collect()).map(Some);
    }
    let zero = BigRational::zero();
    let mut roots: Vec<Vec<BigRational>> = sums[1..]
        .iter()
        .map(|s| {
            let mut ri = vec![zero.clone(); d - 1];
            ri.insert(0, s.clone());
            ri
        })
        .collect();
    // R_1 bounds every common root; choose x so that neither root of R_0 lies in it
    let avoid = &roots[0];
    let dm1 = BigRational::from_integer(BigInt::from(d - 1));
    let mut x = BigRational::one();
    loop {
        let y = &sums[0] - &dm1 * &x;
        if !avoid.contains(&x) && !avoid.contains(&y) {
            let mut r0 = vec![x.clone(); d - 1];
            r0.push(y);
            roots.insert(0, r0);
            break;
        }
        x += BigRational::one();
    }
    let out = RootTuple::new(roots)?;
    debug_assert!(!has_basepoint(&out));
    debug_assert_eq!(&derivative_at_marked_point(&out), v);
    Ok(Some(out))
}

/// `m` vectors in a `dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentVectorList {
    dim: usize,
    vectors: Vec<Vec<BigRational>>,
}

impl TangentVectorList {
    pub fn new(dim: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(Error::InvalidInput("need at least one vector".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::InvalidInput(format!("vector of length {} in dimension {dim}", v.len())));
        }
        Ok(TangentVectorList { dim, vectors })
    }

    pub fn from_integers(dim: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        let vectors = vectors
            .iter()
            .map(|v| v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        TangentVectorList::new(dim, vectors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }
}

/// Clears denominators vector by vector; scaling a column keeps every rank.
fn integer_columns(vs: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    vs.iter()
        .map(|v| {
            let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Rank of a set of integer vectors.
pub(crate) fn rank_of_columns(cols: &[Vec<BigInt>]) -> usize {
    let small: Option<Vec<Vec<i128>>> = cols
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| x.to_i64().filter(|v| v.unsigned_abs() < 1 << 20).map(i128::from))
                .collect()
        })
        .collect();
    match small {
        Some(m) if m.first().map_or(0, Vec::len) <= 6 && m.len() <= 6 => bareiss_rank(m),
        _ => {
            let rows = cols.first().map_or(0, Vec::len);
            let m = (0..rows)
                .map(|r| cols.iter().map(|c| BigRational::from_integer(c[r].clone())).collect())
                .collect();
            rational_rank(m)
        }
    }
}

pub(crate) fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let sub = &f * &m[rank][k];
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination on a small integer matrix given by columns.
pub(crate) fn bareiss_rank(mut cols: Vec<Vec<i128>>) -> usize {
    let rows = cols.first().map_or(0, Vec::len);
    let n = cols.len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for r in 0..rows {
        let Some(p) = (rank..n).find(|&c| cols[c][r] != 0) else { continue };
        cols.swap(rank, p);
        let piv = cols[rank][r];
        for c in rank + 1..n {
            let f = cols[c][r];
            for k in 0..rows {
                cols[c][k] = (piv * cols[c][k] - f * cols[rank][k]) / prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Whether some dependency `Σ a_i v_i = 0` has every `a_i` nonzero.
///
/// That happens iff no `a_j` vanishes on the whole kernel, i.e. each `v_j`
/// lies in the span of the others.
pub fn has_nonvanishing_dependency(v: &TangentVectorList) -> bool {
    let cols = integer_columns(&v.vectors);
    let full = rank_of_columns(&cols);
    (0..cols.len()).all(|j| {
        let rest: Vec<Vec<BigInt>> =
            cols.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, c)| c.clone()).collect();
        // with no other columns the span is zero
        let r = if rest.is_empty() { 0 } else { rank_of_columns(&rest) };
        r == full
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn tuple(rs: &[&[i64]]) -> RootTuple {
        RootTuple::new(rs.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let v = derivative_at_marked_point(&tuple(&[&[2], &[3]]));
        assert_eq!(v, TangentClass::from_vector(vec![q(-2), q(-3)]).unwrap());
        assert!(!v.is_zero());
        assert!(derivative_at_marked_point(&tuple(&[&[1, -1], &[0, 0], &[5, -5]])).is_zero());
        assert!(derivative_at_marked_point(&tuple(&[&[4], &[4]])).is_zero());
    }

    #[test]
    fn basepoint_examples() {
        assert!(has_basepoint(&tuple(&[&[1, 2], &[1, 3]])));
        assert!(!has_basepoint(&tuple(&[&[1, 2], &[3, 4]])));
        assert!(has_basepoint(&tuple(&[&[7], &[7]])));
    }

    #[test]
    fn witness_examples() {
        let v = TangentClass::from_vector(vec![q(0), q(1)]).unwrap();
        let w = fiber_witness(&v, 1, 1).unwrap().unwrap();
        assert!(!has_basepoint(&w));
        assert_eq!(derivative_at_marked_point(&w), v);

        let zero = TangentClass::from_vector(vec![q(3), q(3)]).unwrap();
        assert_eq!(fiber_witness(&zero, 1, 1).unwrap(), None);
        let w = fiber_witness(&zero, 2, 1).unwrap().unwrap();
        assert!(!has_basepoint(&w));
        assert!(derivative_at_marked_point(&w).is_zero());
    }

    #[test]
    fn dependency_examples() {
        let t = |vs: &[Vec<i64>]| has_nonvanishing_dependency(&TangentVectorList::from_integers(2, vs).unwrap());
        assert!(!t(&[vec![1, 0], vec![0, 1]]));
        assert!(t(&[vec![1, 0], vec![0, 1], vec![1, 1]]));
        assert!(t(&[vec![2, 3], vec![-2, -3]]));
        // a single nonzero vector has no dependency with a nonzero coefficient
        assert!(!t(&[vec![1, 0]]));
        assert!(t(&[vec![0, 0]]));
    }

    #[test]
    fn large_entries_use_the_exact_path() {
        let big = BigRational::from_integer(BigInt::from(10).pow(30));
        let v = TangentVectorList::new(2, vec![vec![big.clone(), q(1)], vec![-big, q(-1)]]).unwrap();
        assert!(has_nonvanishing_dependency(&v));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let v = TangentVectorList::new(2, vec![vec![half.clone(), q(0)], vec![q(0), half]]).unwrap();
        assert!(!has_nonvanishing_dependency(&v));
    }

    #[test]
    fn bareiss_matches_rational_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let rows = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=5);
            let cols: Vec<Vec<i128>> = (0..n).map(|_| (0..rows).map(|_| rng.gen_range(-3..=3)).collect()).collect();
            let m = (0..rows).map(|r| cols.iter().map(|c| q(c[r] as i64)).collect()).collect();
            assert_eq!(bareiss_rank(cols.clone()), rational_rank(m), "{cols:?}");
        }
    }
}
