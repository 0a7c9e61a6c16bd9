//! Exact dense and sparse linear algebra over a [`Scalar`] field, plus
//! Hermite normal form over ℤ for lattice bases.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::Integer as _;

use crate::scalar::{Rational, Scalar};

pub type Vector<T> = Vec<T>;

pub fn zeros<T: Scalar>(n: usize) -> Vec<T> {
    vec![T::zero(); n]
}

pub fn unit<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = zeros(n);
    v[i] = T::one();
    v
}

pub fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}

pub fn axpy<T: Scalar>(y: &mut [T], a: &T, x: &[T]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.clone() + a.clone() * xi.clone();
        }
    }
}

pub fn scale<T: Scalar>(v: &[T], a: &T) -> Vec<T> {
    v.iter().map(|x| x.clone() * a.clone()).collect()
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_cols(cols: &[Vec<T>], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows);
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = r.get(i, j).clone() + a.clone() * b.clone();
                        r.set(i, j, v);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, o: &Matrix<T>) -> Matrix<T> {
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix<T>) -> Matrix<T> {
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scaled(&self, a: &T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: scale(&self.data, a) }
    }

    pub fn commutator(&self, o: &Matrix<T>) -> Matrix<T> {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = T::one() / self.get(r, c).clone();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let x = self.get(r, j).clone();
                    if !x.is_zero() {
                        let v = self.get(i, j).clone() - f.clone() * x;
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel, one vector per free column, with the free
    /// coordinate equal to 1.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = zeros(self.cols);
            v[free] = T::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves self·x = b; `None` if inconsistent. Free variables are zero.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zeros(self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, T::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn to_sparse(&self) -> SparseMatrix<T> {
        let mut s = SparseMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    s.cols_data[j].push((i, v.clone()));
                }
            }
        }
        s
    }
}

/// Column-compressed sparse matrix; each column holds (row, value) pairs in
/// increasing row order with no explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub cols_data: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, cols_data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols_data[i].push((i, T::one()));
        }
        m
    }

    pub fn diagonal(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            if !x.is_zero() {
                m.cols_data[i].push((i, x.clone()));
            }
        }
        m
    }

    /// Builds from unordered triplets, summing duplicates.
    pub fn from_triplets(rows: usize, cols: usize, entries: Vec<(usize, usize, T)>) -> Self {
        let mut dense_cols: Vec<std::collections::BTreeMap<usize, T>> = vec![Default::default(); cols];
        for (i, j, v) in entries {
            let slot = dense_cols[j].entry(i).or_insert_with(T::zero);
            *slot = slot.clone() + v;
        }
        let cols_data = dense_cols
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, cols_data }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let cols_data = columns
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols: columns.len(), cols_data }
    }

    pub fn nnz(&self) -> usize {
        self.cols_data.iter().map(|c| c.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.cols_data[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map_or_else(T::zero, |(_, v)| v.clone())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        let mut v = zeros(self.rows);
        for (i, x) in &self.cols_data[j] {
            v[*i] = x.clone();
        }
        v
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        let mut out: Vec<T> = zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.cols_data[j] {
                out[*i] = out[*i].clone() + a.clone() * x.clone();
            }
        }
        out
    }

    /// Row vector times matrix: (vᵀ·M)ᵀ.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        self.cols_data
            .iter()
            .map(|col| {
                col.iter()
                    .filter(|(i, _)| !v[*i].is_zero())
                    .fold(T::zero(), |acc, (i, a)| acc + a.clone() * v[*i].clone())
            })
            .collect()
    }

    pub fn mul(&self, o: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!(self.cols, o.rows);
        let cols_data = o
            .cols_data
            .iter()
            .map(|col| {
                let mut acc: std::collections::BTreeMap<usize, T> = Default::default();
                for (k, b) in col {
                    for (i, a) in &self.cols_data[*k] {
                        let slot = acc.entry(*i).or_insert_with(T::zero);
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: o.cols, cols_data }
    }

    pub fn add(&self, o: &SparseMatrix<T>) -> SparseMatrix<T> {
        self.lin_comb(&T::one(), o, &T::one())
    }

    pub fn sub(&self, o: &SparseMatrix<T>) -> SparseMatrix<T> {
        self.lin_comb(&T::one(), o, &-T::one())
    }

    /// a·self + b·o.
    pub fn lin_comb(&self, a: &T, o: &SparseMatrix<T>, b: &T) -> SparseMatrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let cols_data = self
            .cols_data
            .iter()
            .zip(&o.cols_data)
            .map(|(x, y)| {
                let mut acc: std::collections::BTreeMap<usize, T> = Default::default();
                for (i, v) in x {
                    let slot = acc.entry(*i).or_insert_with(T::zero);
                    *slot = slot.clone() + a.clone() * v.clone();
                }
                for (i, v) in y {
                    let slot = acc.entry(*i).or_insert_with(T::zero);
                    *slot = slot.clone() + b.clone() * v.clone();
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, cols_data }
    }

    pub fn scaled(&self, a: &T) -> SparseMatrix<T> {
        if a.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let cols_data = self
            .cols_data
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, v.clone() * a.clone())).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, cols_data }
    }

    pub fn commutator(&self, o: &SparseMatrix<T>) -> SparseMatrix<T> {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.cols_data.iter().all(|c| c.is_empty())
    }

    pub fn transpose(&self) -> SparseMatrix<T> {
        let mut t = Self::zeros(self.cols, self.rows);
        for (j, col) in self.cols_data.iter().enumerate() {
            for (i, v) in col {
                t.cols_data[*i].push((j, v.clone()));
            }
        }
        t
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (j, col) in self.cols_data.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn trace(&self) -> T {
        (0..self.cols.min(self.rows)).fold(T::zero(), |acc, j| acc + self.get(j, j))
    }

    /// tr(self·o) without forming the product.
    pub fn trace_product(&self, o: &SparseMatrix<T>) -> T {
        let t = self.transpose();
        let mut acc = T::zero();
        for (j, col) in o.cols_data.iter().enumerate() {
            // (self·o)_{jj} = Σ_k self_{jk} o_{kj}
            let row = &t.cols_data[j];
            for (k, b) in col {
                if let Some((_, a)) = row.iter().find(|(c, _)| c == k) {
                    acc = acc + a.clone() * b.clone();
                }
            }
        }
        acc
    }
}

impl SparseMatrix<Rational> {
    pub fn is_integral(&self) -> bool {
        self.cols_data.iter().all(|c| c.iter().all(|(_, v)| v.is_integer()))
    }
}

/// Incrementally maintained span of vectors with exact coordinates in terms
/// of the inserted generators.
///
/// Echelon rows are kept together with their expression in the accepted
/// generators, so `coordinates` returns coefficients on `generators`.
#[derive(Clone, Debug)]
pub struct Subspace<T> {
    pub dim: usize,
    pub generators: Vec<Vec<T>>,
    echelon: Vec<(usize, Vec<T>, Vec<T>)>,
}

impl<T: Scalar> Subspace<T> {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, generators: Vec::new(), echelon: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduces v against the echelon rows; returns the remainder and the
    /// combination of generators that was subtracted.
    fn reduce(&self, v: &[T]) -> (Vec<T>, Vec<T>) {
        let mut rem = v.to_vec();
        let mut combo = zeros(self.generators.len());
        for (pivot, row, expr) in &self.echelon {
            let f = rem[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            axpy(&mut rem, &-f.clone(), row);
            axpy(&mut combo, &f, expr);
        }
        (rem, combo)
    }

    /// Adds v if independent; returns whether it was added.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        let (rem, combo) = self.reduce(&v);
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / rem[pivot].clone();
        let row = scale(&rem, &inv);
        // row = (v − Σ combo·gens)·inv
        let k = self.generators.len();
        let mut expr: Vec<T> = combo.iter().map(|c| -c.clone() * inv.clone()).collect();
        expr.push(inv);
        for (_, _, e) in self.echelon.iter_mut() {
            e.push(T::zero());
        }
        // keep echelon rows reduced with respect to the new pivot
        for (_, r, e) in self.echelon.iter_mut() {
            let f = r[pivot].clone();
            if !f.is_zero() {
                axpy(r, &-f.clone(), &row);
                axpy(e, &-f, &expr);
            }
        }
        debug_assert_eq!(expr.len(), k + 1);
        self.echelon.push((pivot, row, expr));
        self.generators.push(v);
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        is_zero_vec(&self.reduce(v).0)
    }

    /// Coefficients c with v = Σ c_i generators_i, if v lies in the span.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        let (rem, combo) = self.reduce(v);
        if is_zero_vec(&rem) {
            Some(combo)
        } else {
            None
        }
    }
}

/// Row-style Hermite normal form of an integer matrix; returns the nonzero
/// rows, which form a ℤ-basis of the row lattice.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for c in 0..ncols {
        // Euclid on column c among remaining rows
        loop {
            let nonzero: Vec<usize> =
                (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero
                .iter()
                .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()))
                .unwrap();
            let p = rows[piv][c].clone();
            for &i in &nonzero {
                if i == piv {
                    continue;
                }
                let q = rows[i][c].div_floor(&p);
                let pr = rows[piv].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let mut r = rows.swap_remove(i);
            if r[c].is_negative() {
                for x in r.iter_mut() {
                    *x = -x.clone();
                }
            }
            out.push(r);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // reduce entries above pivots
    for k in 0..out.len() {
        let c = out[k].iter().position(|x| !x.is_zero()).unwrap();
        let p = out[k][c].clone();
        for i in 0..k {
            let q = out[i][c].div_floor(&p);
            if !q.is_zero() {
                let pr = out[k].clone();
                for (x, y) in out[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
        }
    }
    out
}

/// ℤ-basis of the lattice spanned by rational vectors.
pub fn lattice_basis(gens: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let mut den = BigInt::one();
    for g in gens {
        for x in g {
            den = den.lcm(x.denom());
        }
    }
    let rows: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect())
        .collect();
    hermite_rows(rows)
        .into_iter()
        .map(|r| r.into_iter().map(|x| Rational::new(x, den.clone())).collect())
        .collect()
}
