//! Sparse column matrices over a [`Ring`] and sparse elimination over a
//! [`Field`].

use std::collections::BTreeMap;

use crate::arith::{Field, Ring};
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs, strictly increasing in index, no
/// stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize<R: Ring>(ring: &R, entries: impl IntoIterator<Item = (usize, R::Elem)>) -> SparseVec<R::Elem> {
    let mut acc: BTreeMap<usize, R::Elem> = BTreeMap::new();
    for (i, v) in entries {
        match acc.get_mut(&i) {
            Some(slot) => ring.add_assign(slot, &v),
            None => {
                acc.insert(i, v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect()
}

fn axpy<R: Ring>(ring: &R, acc: &mut BTreeMap<usize, R::Elem>, scale: &R::Elem, v: &[(usize, R::Elem)]) {
    for (i, x) in v {
        let term = ring.mul(scale, x);
        match acc.get_mut(i) {
            Some(slot) => {
                ring.add_assign(slot, &term);
                if ring.is_zero(slot) {
                    acc.remove(i);
                }
            }
            None => {
                if !ring.is_zero(&term) {
                    acc.insert(*i, term);
                }
            }
        }
    }
}

/// A matrix stored column by column. Column `j` is the image of the `j`-th
/// domain basis vector.
#[derive(Debug, Clone)]
pub struct LinearMap<R: Ring> {
    ring: R,
    rows: usize,
    cols: Vec<SparseVec<R::Elem>>,
}

impl<R: Ring> PartialEq for LinearMap<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }
}

impl<R: Ring> LinearMap<R> {
    pub fn from_columns(ring: R, rows: usize, cols: Vec<SparseVec<R::Elem>>) -> Result<Self> {
        for col in &cols {
            if col.iter().any(|(i, _)| *i >= rows) {
                return Err(Error::Consistency(format!(
                    "column entry outside {rows} rows"
                )));
            }
        }
        let cols = cols.into_iter().map(|c| normalize(&ring, c)).collect();
        Ok(Self { ring, rows, cols })
    }

    pub fn zero(ring: R, rows: usize, cols: usize) -> Self {
        Self {
            ring,
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let cols = (0..n).map(|i| vec![(i, ring.one())]).collect();
        Self { ring, rows: n, cols }
    }

    pub fn from_dense(ring: R, dense: &[Vec<R::Elem>], rows: usize) -> Self {
        let ncols = dense.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| !ring.is_zero(&dense[r][c]))
                    .map(|r| (r, dense[r][c].clone()))
                    .collect()
            })
            .collect();
        Self { ring, rows, cols }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, R::Elem)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<R::Elem>] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> R::Elem {
        match self.cols[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => self.cols[c][pos].1.clone(),
            Err(_) => self.ring.zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// First nonzero entry in column-major order, as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, R::Elem)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.first().map(|(r, v)| (*r, c, v.clone())))
    }

    pub fn apply(&self, v: &[(usize, R::Elem)]) -> SparseVec<R::Elem> {
        let mut acc = BTreeMap::new();
        for (j, x) in v {
            axpy(&self.ring, &mut acc, x, &self.cols[*j]);
        }
        acc.into_iter().collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows {
            return Err(Error::ParameterMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols,
        })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::ParameterMismatch(format!(
                "shape {}x{} vs {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let minus = self.ring.neg(&self.ring.one());
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, R::Elem> = a.iter().cloned().collect();
                axpy(&self.ring, &mut acc, &minus, b);
                acc.into_iter().collect()
            })
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let one = self.ring.one();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, R::Elem> = a.iter().cloned().collect();
                axpy(&self.ring, &mut acc, &one, b);
                acc.into_iter().collect()
            })
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols,
        })
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        let ring = &self.ring;
        let cols = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(i, v)| (*i, ring.mul(s, v)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect()
            })
            .collect();
        Self {
            ring: ring.clone(),
            rows: self.rows,
            cols,
        }
    }

    /// Kronecker product; basis pairs `(a, b)` are indexed `a * dim_b + b`.
    pub fn kron(&self, other: &Self) -> Self {
        let ring = &self.ring;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (ra, va) in a {
                    for (rb, vb) in b {
                        let v = ring.mul(va, vb);
                        if !ring.is_zero(&v) {
                            col.push((ra * other.rows + rb, v));
                        }
                    }
                }
                cols.push(col);
            }
        }
        Self {
            ring: ring.clone(),
            rows: self.rows * other.rows,
            cols,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec<R::Elem>> = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        Self {
            ring: self.ring.clone(),
            rows: self.cols(),
            cols,
        }
    }

    pub fn map_ring<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> LinearMap<S> {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(i, v)| (*i, f(v)))
                    .filter(|(_, v)| !target.is_zero(v))
                    .collect()
            })
            .collect();
        LinearMap {
            ring: target.clone(),
            rows: self.rows,
            cols,
        }
    }

    /// Restriction to the given rows and columns, reindexed in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut row_pos = vec![usize::MAX; self.rows];
        for (new, &old) in rows.iter().enumerate() {
            row_pos[old] = new;
        }
        let cols = cols
            .iter()
            .map(|&c| {
                let mut col: SparseVec<R::Elem> = self.cols[c]
                    .iter()
                    .filter(|(r, _)| row_pos[*r] != usize::MAX)
                    .map(|(r, v)| (row_pos[*r], v.clone()))
                    .collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        Self {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<R::Elem>> {
        let mut dense = vec![vec![self.ring.zero(); self.cols()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                dense[*r][c] = v.clone();
            }
        }
        dense
    }

    /// Lower triangular with every diagonal entry equal to one.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.rows == self.cols()
            && self.cols.iter().enumerate().all(|(c, col)| {
                col.first()
                    .is_some_and(|(r, v)| *r == c && self.ring.is_one(v))
            })
    }

    /// Inverse of a lower unitriangular matrix by forward substitution. Works
    /// over any ring.
    pub fn unitriangular_inverse(&self) -> Result<Self> {
        if !self.is_lower_unitriangular() {
            return Err(Error::Consistency(
                "matrix is not lower unitriangular".into(),
            ));
        }
        let ring = &self.ring;
        let n = self.rows;
        // Solve T x = e_c column by column: x_r = e_c[r] - sum_{t<r} T[r][t] x_t.
        // Column-oriented: walk r upward, subtract x_r * (column r below the diagonal).
        let mut cols = Vec::with_capacity(n);
        for c in 0..n {
            let mut acc: BTreeMap<usize, R::Elem> = BTreeMap::new();
            acc.insert(c, ring.one());
            let mut solved: SparseVec<R::Elem> = Vec::new();
            while let Some((r, x)) = acc.pop_first() {
                let below = &self.cols[r][1..];
                let minus_x = ring.neg(&x);
                axpy(ring, &mut acc, &minus_x, below);
                solved.push((r, x));
            }
            cols.push(solved);
        }
        Ok(Self {
            ring: ring.clone(),
            rows: n,
            cols,
        })
    }
}

/// Incrementally built semi-echelon basis of a subspace of `F^n`, each row
/// tagged with the combination of inserted vectors that produced it.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, (SparseVec<F::Elem>, SparseVec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Self {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(
        &self,
        v: &[(usize, F::Elem)],
        track: &[(usize, F::Elem)],
    ) -> (BTreeMap<usize, F::Elem>, BTreeMap<usize, F::Elem>) {
        let f = &self.field;
        let mut vec: BTreeMap<usize, F::Elem> = v.iter().cloned().collect();
        let mut tr: BTreeMap<usize, F::Elem> = track.iter().cloned().collect();
        let mut cursor = 0;
        loop {
            let next = vec
                .range(cursor..)
                .find(|(i, _)| self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((pivot, coeff)) = next else { break };
            let (row, row_track) = &self.rows[&pivot];
            let minus = f.neg(&coeff);
            axpy(f, &mut vec, &minus, row);
            axpy(f, &mut tr, &minus, row_track);
            cursor = pivot + 1;
        }
        (vec, tr)
    }

    /// Fully reduces `v` against the stored rows.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.reduce_tracked(v, &[]).0.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` tagged by `track`. Returns `None` if `v` was independent,
    /// otherwise the reduced tag: a combination of earlier tags and `track`
    /// whose vector is zero.
    pub fn insert(
        &mut self,
        v: &[(usize, F::Elem)],
        track: &[(usize, F::Elem)],
    ) -> Option<SparseVec<F::Elem>> {
        let (vec, tr) = self.reduce_tracked(v, track);
        let Some((&pivot, lead)) = vec.iter().next() else {
            return Some(tr.into_iter().collect());
        };
        let f = &self.field;
        let inv = f.inv(lead).expect("leading coefficient is nonzero");
        let scale = |m: BTreeMap<usize, F::Elem>| -> SparseVec<F::Elem> {
            m.into_iter().map(|(i, x)| (i, f.mul(&inv, &x))).collect()
        };
        let row = scale(vec);
        let row_track = scale(tr);
        self.rows.insert(pivot, (row, row_track));
        None
    }

    /// Coordinates of `v` with respect to the inserted vectors (through their
    /// tags), if `v` lies in the span.
    pub fn solve(&self, v: &[(usize, F::Elem)]) -> Option<SparseVec<F::Elem>> {
        let (rest, tr) = self.reduce_tracked(v, &[]);
        if !rest.is_empty() {
            return None;
        }
        let minus_one = self.field.neg(&self.field.one());
        Some(
            tr.into_iter()
                .map(|(i, x)| (i, self.field.mul(&minus_one, &x)))
                .collect(),
        )
    }
}

pub fn rank<F: Field>(map: &LinearMap<F>) -> usize {
    let mut ech = Echelon::new(map.ring().clone());
    for col in map.columns() {
        ech.insert(col, &[]);
    }
    ech.rank()
}

/// Rank of a list of vectors.
pub fn span_rank<F: Field>(field: &F, vectors: &[SparseVec<F::Elem>]) -> usize {
    let mut ech = Echelon::new(field.clone());
    for v in vectors {
        ech.insert(v, &[]);
    }
    ech.rank()
}

/// A basis of the kernel, each vector verified to map to zero.
pub fn kernel<F: Field>(map: &LinearMap<F>) -> Result<Vec<SparseVec<F::Elem>>> {
    let field = map.ring();
    let mut ech = Echelon::new(field.clone());
    let mut basis = Vec::new();
    for (j, col) in map.columns().iter().enumerate() {
        if let Some(relation) = ech.insert(col, &[(j, field.one())]) {
            if !map.apply(&relation).is_empty() {
                return Err(Error::Consistency("kernel vector does not map to zero".into()));
            }
            basis.push(relation);
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Integers, PrimeField, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn dense_q(rows: &[&[i64]]) -> LinearMap<Rationals> {
        let d: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        LinearMap::from_dense(Rationals, &d, rows.len())
    }

    #[test]
    fn rank_and_kernel() {
        let m = dense_q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ker = kernel(&m).unwrap();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).is_empty());
    }

    #[test]
    fn identity_is_identity() {
        let id = LinearMap::identity(Integers, 4);
        assert_eq!(id.to_dense()[2][2], BigInt::from(1));
        assert_eq!(id.compose(&id).unwrap(), id);
        assert!(id.is_lower_unitriangular());
    }

    #[test]
    fn unitriangular_inverse_round_trip() {
        let rows: Vec<Vec<BigInt>> = [[1, 0, 0], [2, 1, 0], [-3, 5, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let t = LinearMap::from_dense(Integers, &rows, 3);
        let inv = t.unitriangular_inverse().unwrap();
        assert_eq!(t.compose(&inv).unwrap(), LinearMap::identity(Integers, 3));
        assert_eq!(inv.compose(&t).unwrap(), LinearMap::identity(Integers, 3));
    }

    #[test]
    fn solve_recovers_coordinates() {
        let f = PrimeField::new(7).unwrap();
        let mut ech = Echelon::new(f);
        let a = vec![(0, 1u32), (2, 3)];
        let b = vec![(1, 2u32), (2, 1)];
        assert!(ech.insert(&a, &[(0, 1)]).is_none());
        assert!(ech.insert(&b, &[(1, 1)]).is_none());
        // 2a + 5b
        let v = vec![(0, 2u32), (1, 3), (2, 4)];
        assert_eq!(ech.solve(&v).unwrap(), vec![(0, 2), (1, 5)]);
        assert!(ech.solve(&[(3, 1)]).is_none());
    }

    #[test]
    fn kron_indexing() {
        let a = dense_q(&[&[1, 2], &[0, 1]]);
        let b = dense_q(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.entry(1, 2), q(2)); // (0,1) <- (1,0): a[0][1]*b[1][0]
        assert_eq!(k.entry(0, 0), q(0));
    }

    #[test]
    fn shape_errors() {
        let a = dense_q(&[&[1, 2]]);
        assert!(a.compose(&a).is_err());
        assert!(a.sub(&dense_q(&[&[1], &[2]])).is_err());
    }
}
