//! Exact rational linear algebra: a column-major sparse matrix plus the dense
//! elimination routines it falls back on for small connected blocks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Lowest-terms `p/q` rendering; integers print without a denominator.
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Serde adapter for sparse rational vectors, rendering entries as strings.
pub mod qvec_serde {
    use super::{q_parse, q_to_string, Q};
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[(usize, Q)], s: S) -> Result<S::Ok, S::Error> {
        let out: Vec<(usize, String)> = v.iter().map(|(i, x)| (*i, q_to_string(x))).collect();
        out.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(usize, Q)>, D::Error> {
        let raw: Vec<(usize, String)> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|(i, s)| q_parse(&s).map(|x| (i, x)).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

/// Sparse matrix over Q stored by columns. Each column is sorted by row and
/// holds no explicit zeros, so derived equality is exact structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMat {
    rows: usize,
    cols: Vec<Vec<(u32, Q)>>,
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMat {}x{} [", self.rows, self.cols.len())?;
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                write!(f, " ({r},{c})={}", q_to_string(v))?;
            }
        }
        write!(f, " ]")
    }
}

/// Why a square system could not be inverted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Singular {
    Kernel(Vec<(usize, Q)>),
    Cokernel(Vec<(usize, Q)>),
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        QMat { rows: n, cols: (0..n).map(|i| vec![(i as u32, Q::one())]).collect() }
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, usize, Q)>>(rows: usize, cols: usize, it: I) -> Self {
        let mut acc: Vec<BTreeMap<u32, Q>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in it {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            *acc[c].entry(r as u32).or_insert_with(Q::zero) += v;
        }
        QMat { rows, cols: acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect() }
    }

    pub fn from_dense(d: &[Vec<Q>]) -> Self {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        Self::from_entries(rows, cols, d.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))))
    }

    pub fn from_ints(d: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Q>> = d.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, c: usize) -> &[(u32, Q)] {
        &self.cols[c]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.cols[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(i) => self.cols[c][i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.cols()]; self.rows];
        for (r, c, v) in self.entries() {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.cols(), self.rows, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols(), rhs.rows, "product shape mismatch");
        let cols = rhs
            .cols
            .iter()
            .map(|rc| {
                let mut acc: BTreeMap<u32, Q> = BTreeMap::new();
                for (k, v) in rc {
                    for (r, w) in &self.cols[*k as usize] {
                        *acc.entry(*r).or_insert_with(Q::zero) += v * w;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        QMat { rows: self.rows, cols }
    }

    pub fn add(&self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()));
        Self::from_entries(self.rows, self.cols(), self.entries().chain(rhs.entries()).map(|(r, c, v)| (r, c, v.clone())))
    }

    pub fn scale(&self, k: &Q) -> QMat {
        Self::from_entries(self.rows, self.cols(), self.entries().map(|(r, c, v)| (r, c, v * k)))
    }

    pub fn sub(&self, rhs: &QMat) -> QMat {
        self.add(&rhs.scale(&-Q::one()))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols()
            && self.cols.iter().enumerate().all(|(c, col)| col.len() == 1 && col[0].0 as usize == c && col[0].1.is_one())
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rows];
        for (r, c, x) in self.entries() {
            out[r] += x * &v[c];
        }
        out
    }

    pub fn apply_left(&self, w: &[Q]) -> Vec<Q> {
        (0..self.cols()).map(|c| self.cols[c].iter().map(|(r, x)| x * &w[*r as usize]).sum()).collect()
    }

    pub fn rank(&self) -> usize {
        rref(&mut self.to_dense()).len()
    }

    /// Two-sided inverse. The bipartite graph of nonzero entries is split into
    /// connected blocks and each block is inverted densely.
    pub fn inverse(&self) -> Result<QMat, Singular> {
        let (nr, nc) = (self.rows, self.cols());
        let mut uf = UnionFind::new(nr + nc);
        for (r, c, _) in self.entries() {
            uf.union(r, nr + c);
        }
        let mut blocks: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for r in 0..nr {
            blocks.entry(uf.find(r)).or_default().0.push(r);
        }
        for c in 0..nc {
            blocks.entry(uf.find(nr + c)).or_default().1.push(c);
        }
        let mut out = Vec::new();
        for (rows, cols) in blocks.values() {
            let sub: Vec<Vec<Q>> = rows.iter().map(|&r| cols.iter().map(|&c| self.get(r, c)).collect()).collect();
            if cols.len() > rows.len() {
                let k = nullspace(&sub, cols.len()).into_iter().next().expect("wide block has a kernel");
                return Err(Singular::Kernel(lift(&k, cols)));
            }
            if rows.len() > cols.len() {
                let t = transpose_dense(&sub, cols.len());
                let k = nullspace(&t, rows.len()).into_iter().next().expect("tall block has a cokernel");
                return Err(Singular::Cokernel(lift(&k, rows)));
            }
            match dense_inverse(&sub) {
                Some(inv) => {
                    for (i, &c) in cols.iter().enumerate() {
                        for (j, &r) in rows.iter().enumerate() {
                            if !inv[i][j].is_zero() {
                                out.push((c, r, inv[i][j].clone()));
                            }
                        }
                    }
                }
                None => {
                    let k = nullspace(&sub, cols.len()).into_iter().next().expect("singular block has a kernel");
                    return Err(Singular::Kernel(lift(&k, cols)));
                }
            }
        }
        Ok(Self::from_entries(nc, nr, out))
    }
}

fn lift(v: &[Q], idx: &[usize]) -> Vec<(usize, Q)> {
    v.iter().zip(idx).filter(|(x, _)| !x.is_zero()).map(|(x, &i)| (i, x.clone())).collect()
}

fn transpose_dense(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    (0..ncols).map(|c| a.iter().map(|row| row[c].clone()).collect()).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let nx = self.0[y];
            self.0[y] = r;
            y = nx;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// In-place reduced row echelon form. Returns pivot columns.
pub fn rref(a: &mut [Vec<Q>]) -> Vec<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..nrows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in c..ncols {
                    let d = &a[rank][k] * &f;
                    a[r][k] -= d;
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    pivots
}

/// Basis of the right kernel of `a` (with `ncols` columns), one vector per free column.
pub fn nullspace(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            normalize(v)
        })
        .collect()
}

/// Scale so the first nonzero entry is positive and entries are coprime integers.
fn normalize(v: Vec<Q>) -> Vec<Q> {
    let mut l = BigInt::one();
    for x in &v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    ints.into_iter().map(|x| Q::from_integer(x * &sign / &g)).collect()
}

pub fn dense_inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Outcome of an exact linear solve `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    Inconsistent,
    /// A particular solution and the dimension of the solution space.
    Many(Vec<Q>, usize),
}

pub fn solve(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Solution {
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&ncols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &p) in piv.iter().enumerate() {
        x[p] = aug[row][ncols].clone();
    }
    if piv.len() == ncols {
        Solution::Unique(x)
    } else {
        Solution::Many(x, ncols - piv.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipotent_inverse() {
        let a = QMat::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.inverse().unwrap(), QMat::from_ints(&[&[1, -1], &[0, 1]]));
    }

    #[test]
    fn rank_one_has_kernel() {
        let a = QMat::from_ints(&[&[1, 1], &[1, 1]]);
        match a.inverse() {
            Err(Singular::Kernel(k)) => assert_eq!(k, vec![(0, q(1)), (1, q(-1))]),
            other => panic!("expected kernel, got {other:?}"),
        }
    }

    #[test]
    fn zero_row_gives_cokernel() {
        let a = QMat::from_ints(&[&[1, 0], &[0, 0]]);
        assert!(matches!(a.inverse(), Err(Singular::Kernel(_)) | Err(Singular::Cokernel(_))));
    }

    #[test]
    fn rational_roundtrip() {
        for s in ["3", "-1/2", "4/6"] {
            let x = q_parse(s).unwrap();
            assert_eq!(q_parse(&q_to_string(&x)).unwrap(), x);
        }
        assert_eq!(q_to_string(&qf(4, 6)), "2/3");
    }

    #[test]
    fn solve_cases() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert_eq!(solve(&a, &[q(2), q(0)], 2), Solution::Unique(vec![q(1), q(1)]));
        let b = vec![vec![q(1), q(1)]];
        assert!(matches!(solve(&b, &[q(1)], 2), Solution::Many(_, 1)));
        let c = vec![vec![q(0)], vec![q(0)]];
        assert_eq!(solve(&c, &[q(1), q(0)], 1), Solution::Inconsistent);
    }
}
