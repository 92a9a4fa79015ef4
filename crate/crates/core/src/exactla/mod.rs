//! Exact linear algebra over Q and GF(p).
//!
//! Dense matrices are the public contract; spans, ranks and reductions run on
//! the sparse [`Echelon`] builder underneath. All bases returned here are
//! canonical: RREF with leftmost pivots, kernel vectors with one free
//! variable set to 1 in increasing column order, solutions with free
//! variables zero.

mod echelon;
mod scalar;

pub use echelon::{Echelon, SparseVec};
pub use scalar::{sign_scalar, Field, FieldError, Scalar};

use std::fmt;

use thiserror::Error;

pub type Vector = Vec<Scalar>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("right-hand side is not in the column space")]
    NoSolution,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, &rows)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| dot(self.field, self.row(i), v))
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(field: Field, rows: usize, cols: usize, data: Vector) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }
}

pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(field: Field, n: usize, v: &[(usize, Scalar)]) -> Vector {
    let mut out = zero_vec(field, n);
    for (i, x) in v {
        out[*i] += x;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form; the returned matrix keeps the input shape with
/// zero rows at the bottom.
pub fn rref(m: &Matrix) -> Rref {
    let (rows, pivots) = m.echelon().rref_rows();
    let rank = rows.len();
    let mut out = Matrix::zeros(m.field, m.rows, m.cols);
    for (i, r) in rows.into_iter().enumerate() {
        for (j, x) in r.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    Rref {
        matrix: out,
        pivots,
        rank,
    }
}

fn kernel_from_rref(field: Field, cols: usize, rows: &[Vector], pivots: &[usize]) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vec(field, cols);
            v[free] = field.one();
            for (r, &p) in rows.iter().zip(pivots) {
                v[p] = -&r[free];
            }
            v
        })
        .collect()
}

/// Basis of the null space `{x : m x = 0}`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let (rows, pivots) = m.echelon().rref_rows();
    kernel_from_rref(m.field, m.cols, &rows, &pivots)
}

/// Canonical solution of `a x = b` with free variables set to zero.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Vector, LinAlgError> {
    if b.len() != a.rows {
        return Err(LinAlgError::DimensionMismatch {
            expected: a.rows,
            got: b.len(),
        });
    }
    let n = a.cols;
    let mut e = Echelon::new(a.field, n + 1);
    for r in 0..a.rows {
        let mut row = a.row(r).to_vec();
        row.push(b[r].clone());
        e.insert(&row);
    }
    let (rows, pivots) = e.rref_rows();
    if pivots.last() == Some(&n) {
        return Err(LinAlgError::NoSolution);
    }
    let mut x = zero_vec(a.field, n);
    for (r, &p) in rows.iter().zip(&pivots) {
        x[p] = r[n].clone();
    }
    Ok(x)
}

/// Solves `a X = B` column by column; returns `X` with `a.cols` rows.
pub fn solve_matrix(a: &Matrix, b: &Matrix) -> Result<Matrix, LinAlgError> {
    let cols: Result<Vec<Vector>, _> = b.col_vectors().iter().map(|c| solve(a, c)).collect();
    Ok(Matrix::from_cols(a.field, a.cols, &cols?))
}

pub fn span_echelon(field: Field, dim: usize, gens: &[Vector]) -> Echelon {
    let mut e = Echelon::new(field, dim);
    for g in gens {
        assert_eq!(g.len(), dim, "generator outside ambient space");
        e.insert(g);
    }
    e
}

pub fn span_rank(field: Field, dim: usize, gens: &[Vector]) -> usize {
    span_echelon(field, dim, gens).rank()
}

/// Whether the spans of `a` and `b` coincide (compared through their RREF).
pub fn subspace_equal(field: Field, a: &[Vector], b: &[Vector], dim: usize) -> bool {
    span_echelon(field, dim, a).rref_rows() == span_echelon(field, dim, b).rref_rows()
}

/// Whether every vector of `b` lies in the span of `a`.
pub fn span_contains(field: Field, a: &[Vector], b: &[Vector], dim: usize) -> bool {
    let e = span_echelon(field, dim, a);
    b.iter().all(|v| e.contains(v))
}

/// Basis of `span(a) ∩ span(b)`.
pub fn intersection(field: Field, a: &[Vector], b: &[Vector], dim: usize) -> Vec<Vector> {
    let (ra, _) = span_echelon(field, dim, a).rref_rows();
    let (rb, _) = span_echelon(field, dim, b).rref_rows();
    // columns: basis of A then basis of B; kernel gives x_A · A = x_B · B
    let mut cols = ra.clone();
    cols.extend(rb.iter().map(|v| v.iter().map(|x| -x).collect()));
    let m = Matrix::from_cols(field, dim, &cols);
    let ker = kernel_basis(&m);
    let vs: Vec<Vector> = ker
        .iter()
        .map(|k| {
            let mut v = zero_vec(field, dim);
            for (c, basis) in k.iter().zip(&ra) {
                axpy(&mut v, c, basis);
            }
            v
        })
        .collect();
    let (rows, _) = span_echelon(field, dim, &vs).rref_rows();
    rows
}

/// `V / span(G)` with coset coordinates indexed by the non-pivot columns of
/// the RREF basis of `span(G)`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: Field,
    ambient_dim: usize,
    basis: Echelon,
    subspace_rows: Vec<Vector>,
    pivot_cols: Vec<usize>,
    free_cols: Vec<usize>,
}

pub fn quotient(field: Field, ambient_dim: usize, generators: &[Vector]) -> QuotientSpace {
    QuotientSpace::new(span_echelon(field, ambient_dim, generators))
}

impl QuotientSpace {
    pub fn new(basis: Echelon) -> Self {
        let (rows, pivots) = basis.rref_rows();
        let ambient_dim = basis.dim();
        let free_cols = (0..ambient_dim).filter(|&c| !basis.is_pivot(c)).collect();
        QuotientSpace {
            field: basis.field(),
            ambient_dim,
            subspace_rows: rows,
            pivot_cols: pivots,
            free_cols,
            basis,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quotient_dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn subspace_dim(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn subspace_basis(&self) -> &[Vector] {
        &self.subspace_rows
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Ambient coordinates used as coset coordinates, in order.
    pub fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.basis.reduce(v);
        self.free_cols.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn project_sparse(&self, v: &[(usize, Scalar)]) -> Vector {
        let r = self.basis.reduce_sparse(v);
        self.free_cols.iter().map(|&c| r[c].clone()).collect()
    }

    /// Canonical representative: coordinates placed on the free columns.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.free_cols.len());
        let mut v = zero_vec(self.field, self.ambient_dim);
        for (&c, x) in self.free_cols.iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.basis.contains(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = Matrix::zeros(q(), 3, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);

        let m = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let r = rref(&m);
        assert_eq!(r.matrix, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(q(), 4)).is_empty());
        let k = kernel_basis(&Matrix::zeros(q(), 1, 3));
        assert_eq!(k, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let k = kernel_basis(&Matrix::from_i64(q(), &[&[1, 2]]));
        assert_eq!(k, vec![v(&[-2, 1])]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(solve(&id, &v(&[1, 2, 3])), Ok(v(&[1, 2, 3])));
        let a = Matrix::from_i64(q(), &[&[1], &[0]]);
        assert_eq!(solve(&a, &v(&[0, 1])), Err(LinAlgError::NoSolution));
        let a = Matrix::from_i64(q(), &[&[1, 1]]);
        assert_eq!(solve(&a, &v(&[3])), Ok(v(&[3, 0])));
        assert!(matches!(
            solve(&a, &v(&[1, 2])),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let qs = quotient(q(), 2, &[]);
        assert_eq!(qs.quotient_dim(), 2);
        assert_eq!(qs.project(&v(&[3, 4])), v(&[3, 4]));

        let qs = quotient(q(), 2, &[v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(qs.quotient_dim(), 0);

        let qs = quotient(q(), 2, &[v(&[1, 1])]);
        assert_eq!(qs.quotient_dim(), 1);
        let p1 = qs.project(&v(&[1, 0]));
        let p2 = qs.project(&v(&[0, 1]));
        assert_eq!(p1, vec_scale(&p2, &q().from_i64(-1)));
        assert!(is_zero_vec(&qs.project(&v(&[1, 1]))));
    }

    #[test]
    fn subspace_equal_examples() {
        assert!(subspace_equal(q(), &[v(&[1, 0])], &[v(&[2, 0])], 2));
        assert!(!subspace_equal(q(), &[v(&[1, 0])], &[v(&[0, 1])], 2));
        assert!(subspace_equal(
            q(),
            &[v(&[1, 1]), v(&[1, -1])],
            &[v(&[1, 0]), v(&[0, 1])],
            2
        ));
    }

    #[test]
    fn intersection_of_planes() {
        let a = [v(&[1, 0, 0]), v(&[0, 1, 0])];
        let b = [v(&[0, 1, 0]), v(&[0, 0, 1])];
        assert_eq!(intersection(q(), &a, &b, 3), vec![v(&[0, 1, 0])]);
        assert!(intersection(q(), &a, &[v(&[0, 0, 1])], 3).is_empty());
    }

    #[test]
    fn gf_p_elimination() {
        let f = Field::prime(5).unwrap();
        // 2x + 4y = 0 => x = -2y = 3y mod 5
        let m = Matrix::from_i64(f, &[&[2, 4]]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![f.from_i64(3), f.one()]]);
        let m = Matrix::from_i64(f, &[&[1, 2], &[3, 1]]); // det = -5 = 0 mod 5
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kron_shape() {
        let a = Matrix::from_i64(q(), &[&[1, 2]]);
        let b = Matrix::identity(q(), 2);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k, Matrix::from_i64(q(), &[&[1, 0, 2, 0], &[0, 1, 0, 2]]));
    }
}
