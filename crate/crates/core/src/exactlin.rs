//! Exact rational linear algebra.
//!
//! Dense matrices over [`Scalar`] (arbitrary-precision rationals), reduced row
//! echelon forms, kernels, images and a canonical [`Subspace`] type. Every
//! solution set computed elsewhere in the crate ends up here.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    Scalar::from_str(text.trim()).map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))
}

pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}

pub fn zero_vec(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

pub fn unit_vec(len: usize, at: usize) -> Vec<Scalar> {
    let mut v = zero_vec(len);
    v[at] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| a * x).collect()
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must share a length. `cols` is
    /// needed to give zero-row matrices a width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| int(x))
            })
            .collect();
        Matrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: scale_vec(a, &self.data) }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Exact inverse, or `None` for singular / non-square input.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let reduced = rref(&aug);
        if reduced.pivots.len() < n || reduced.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = reduced.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: add_vec(&self.data, &rhs.data) }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: sub_vec(&self.data, &rhs.data) }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(format_scalar).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced against one another, so each inserted row costs
/// roughly (number of pivots it touches) x (row length). Constraint systems in
/// this crate are very sparse, which keeps this cheap.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivot_cols: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivot_cols: Vec::new(), row_of_pivot: vec![None; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots in place.
    pub fn reduce(&self, row: &mut [Scalar]) {
        for p in 0..self.cols {
            if row[p].is_zero() {
                continue;
            }
            if let Some(r) = self.row_of_pivot[p] {
                let factor = -row[p].clone();
                axpy(row, &factor, &self.rows[r]);
            }
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<Scalar>) -> bool {
        assert_eq!(row.len(), self.cols, "echelon row length mismatch");
        if self.rows.len() == self.cols {
            return false;
        }
        self.reduce(&mut row);
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pivot].recip();
        if !inv.is_one() {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for other in self.rows.iter_mut() {
            if !other[pivot].is_zero() {
                let factor = -other[pivot].clone();
                axpy(other, &factor, &row);
            }
        }
        self.row_of_pivot[pivot] = Some(self.rows.len());
        self.rows.push(row);
        self.pivot_cols.push(pivot);
        true
    }

    /// Inserts every nonzero row of `m`.
    pub fn insert_rows(&mut self, m: &Matrix) {
        for i in 0..m.rows() {
            let row = m.row(i);
            if !is_zero_vec(row) {
                self.insert(row.to_vec());
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut row = v.to_vec();
        self.reduce(&mut row);
        is_zero_vec(&row)
    }

    /// Pivot-sorted rows and pivot columns: the unique RREF of the row space.
    pub fn into_sorted(self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut pairs: Vec<(usize, Vec<Scalar>)> = self.pivot_cols.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        pairs.into_iter().map(|(p, r)| (r, p)).unzip()
    }

    /// Null space of the accumulated constraint rows.
    pub fn kernel(&self) -> Subspace {
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| self.row_of_pivot[c].is_none()) {
            let mut v = unit_vec(self.cols, free);
            for (row, &p) in self.rows.iter().zip(&self.pivot_cols) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            basis.push(v);
        }
        Subspace::from_rows(self.cols, basis)
    }

    pub fn row_space(self) -> Subspace {
        let cols = self.cols;
        let (rows, pivots) = self.into_sorted();
        Subspace { ambient_dim: cols, basis: rows, pivots }
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Unique reduced row echelon form of `m`.
pub fn rref(m: &Matrix) -> Rref {
    let mut ech = Echelon::new(m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i).to_vec());
    }
    let rank = ech.rank();
    let (rows, pivots) = ech.into_sorted();
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    for r in rows {
        data.extend(r);
    }
    data.resize(m.rows() * m.cols(), Scalar::zero());
    Rref { matrix: Matrix { rows: m.rows(), cols: m.cols(), data }, pivots, rank }
}

/// `{v : m v = 0}`
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let mut ech = Echelon::new(m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i).to_vec());
    }
    ech.kernel()
}

/// Column span of `m`.
pub fn image_basis(m: &Matrix) -> Subspace {
    let columns: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::from_rows(m.rows(), columns)
}

/// Some solution of `m x = rhs`, if one exists.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(rhs.len(), m.rows());
    let n = m.cols();
    let mut aug = Matrix::zeros(m.rows(), n + 1);
    for i in 0..m.rows() {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n)] = rhs[i].clone();
    }
    let reduced = rref(&aug);
    if reduced.pivots.contains(&n) {
        return None;
    }
    let mut x = zero_vec(n);
    for (r, &p) in reduced.pivots.iter().enumerate() {
        x[p] = reduced.matrix[(r, n)].clone();
    }
    Some(x)
}

/// Linear subspace of `F^ambient_dim`, stored as its RREF basis so that equal
/// subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(ambient_dim: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut ech = Echelon::new(ambient_dim);
        for r in rows {
            ech.insert(r);
        }
        ech.row_space()
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_rows(ambient_dim, (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, self.basis.clone()).expect("basis rows have ambient length")
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: len });
        }
        Ok(())
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.coordinates(v).is_some())
    }

    /// `sum_i coords[i] * basis[i]`
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = zero_vec(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        Ok(Subspace::from_rows(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// Linear equations cutting out this subspace (a basis of its annihilator).
    pub fn equations(&self) -> Subspace {
        kernel_basis(&self.basis_matrix())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        let mut ech = Echelon::new(self.ambient_dim);
        for eq in self.equations().basis.into_iter().chain(other.equations().basis) {
            ech.insert(eq);
        }
        Ok(ech.kernel())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        Ok(self.basis.iter().all(|b| other.coordinates(b).is_some()))
    }
}

/// `dim(sup) - dim(sub)` after checking `sub ⊆ sup`.
pub fn quotient_dim(sub: &Subspace, sup: &Subspace) -> Result<usize> {
    if !sub.is_subspace_of(sup)? {
        return Err(Error::Containment);
    }
    Ok(sup.dim() - sub.dim())
}

/// `vec(P X Q)` as a linear function of row-major `vec(X)`: the coefficient of
/// `X[a][b]` in output entry `(r, c)` is `P[r][a] * Q[b][c]`. Adds `sign` times
/// that map into `block` (rows indexed by `r * q.cols + c`) starting at column
/// `offset`.
pub fn add_sandwich(block: &mut Matrix, offset: usize, p: &Matrix, q: &Matrix, sign: &Scalar) {
    let out_cols = q.cols();
    let inner_cols = q.rows();
    for r in 0..p.rows() {
        for a in 0..p.cols() {
            let pa = &p[(r, a)];
            if pa.is_zero() {
                continue;
            }
            let pa = pa * sign;
            for b in 0..inner_cols {
                for c in 0..out_cols {
                    let qb = &q[(b, c)];
                    if !qb.is_zero() {
                        block[(r * out_cols + c, offset + a * inner_cols + b)] += &pa * qb;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let r = rref(&Matrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.matrix, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);

        let z = Matrix::zeros(3, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_leading_entries_are_pivots() {
        // Insertion order that would break a naive incremental scheme.
        let m = Matrix::from_ints(&[&[0, 1, 1], &[1, 0, 0], &[1, 1, 0]]);
        let r = rref(&m);
        assert_eq!(r.matrix, Matrix::identity(3));
        let m = Matrix::from_ints(&[&[0, 0, 1, 2], &[0, 3, 1, 0], &[0, 3, 2, 2]]);
        let r = rref(&m);
        assert_eq!(
            r.matrix,
            Matrix::from_rows(4, vec![vec![int(0), int(1), int(0), frac(-2, 3)], vec![int(0), int(0), int(1), int(2)], zero_vec(4),]).unwrap()
        );
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(2)).dim(), 0);
        let k = kernel_basis(&Matrix::from_ints(&[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![int(1), int(-1)]);
        assert_eq!(kernel_basis(&Matrix::zeros(1, 3)).dim(), 3);
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&Matrix::identity(3)), Subspace::full(3));
        assert_eq!(image_basis(&Matrix::from_ints(&[&[1, 2], &[2, 4]])).dim(), 1);
        assert_eq!(image_basis(&Matrix::zeros(2, 2)).dim(), 0);
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(3);
        assert_eq!(quotient_dim(&full, &full), Ok(0));
        assert_eq!(quotient_dim(&Subspace::zero(3), &full), Ok(3));
        let line = Subspace::from_rows(3, vec![vec![int(1), int(0), int(0)]]);
        let other = Subspace::from_rows(3, vec![vec![int(0), int(1), int(0)]]);
        assert_eq!(quotient_dim(&line, &other), Err(Error::Containment));
    }

    #[test]
    fn lattice_examples() {
        let a = Subspace::from_rows(2, vec![vec![int(1), int(1)]]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        let x = Subspace::from_rows(2, vec![vec![int(1), int(0)]]);
        let y = Subspace::from_rows(2, vec![vec![int(0), int(1)]]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));
        let b = Subspace::from_rows(2, vec![vec![int(1), int(-1)]]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::zero(2));
        assert!(a.contains(&[int(3), int(3)]).unwrap());
        assert!(!a.contains(&[int(3), int(2)]).unwrap());
        assert_eq!(a.sum(&Subspace::zero(3)), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
        assert!(matches!(a.contains(&[int(1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(solve(&m, &[int(3), int(2)]), Some(vec![int(1), int(1)]));
        assert_eq!(solve(&Matrix::from_ints(&[&[1, 1], &[1, 1]]), &[int(1), int(2)]), None);
    }

    #[test]
    fn sandwich_matches_direct_product() {
        let p = Matrix::from_ints(&[&[1, 2], &[0, -1], &[3, 1]]);
        let q = Matrix::from_ints(&[&[2, 0, 1], &[1, 1, 0]]);
        let x = Matrix::from_ints(&[&[1, -2], &[4, 5]]);
        let mut block = Matrix::zeros(9, 4);
        add_sandwich(&mut block, 0, &p, &q, &int(1));
        let direct = &(&p * &x) * &q;
        assert_eq!(block.apply(x.data()), direct.into_data());
    }

    #[test]
    fn scalar_text_format() {
        assert_eq!(format_scalar(&frac(-3, 2)), "-3/2");
        assert_eq!(format_scalar(&frac(4, 2)), "2");
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
