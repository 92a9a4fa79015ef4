//! Finite free modules with labeled bases, structure-constant tensors for
//! bilinear and trilinear maps, tensor products, and exterior powers with
//! their degree filtration.

use std::collections::HashMap;

use thiserror::Error;

use crate::exactla::{axpy, zero_vec, Field, Matrix, Scalar, SparseVec, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    field: Field,
    labels: Vec<String>,
}

impl FreeModule {
    pub fn new(field: Field, labels: Vec<String>) -> Result<Self, ModuleError> {
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ModuleError::DuplicateLabel(l.clone()));
            }
        }
        Ok(FreeModule { field, labels })
    }

    /// Module with labels `{prefix}0, {prefix}1, ...`.
    pub fn numbered(field: Field, prefix: &str, dim: usize) -> Self {
        FreeModule {
            field,
            labels: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

/// `m1 ⊗ m2` with basis `e_i ⊗ f_j` at position `i * dim(m2) + j`.
pub fn tensor(m1: &FreeModule, m2: &FreeModule) -> Result<FreeModule, ModuleError> {
    if m1.field != m2.field {
        return Err(ModuleError::FieldMismatch(m1.field, m2.field));
    }
    let labels = m1
        .labels
        .iter()
        .flat_map(|a| m2.labels.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    Ok(FreeModule {
        field: m1.field,
        labels,
    })
}

pub fn tensor_index(dim2: usize, i: usize, j: usize) -> usize {
    i * dim2 + j
}

/// Coordinates of `x ⊗ y`.
pub fn tensor_vectors(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub domain: FreeModule,
    pub codomain: FreeModule,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(domain: FreeModule, codomain: FreeModule, matrix: Matrix) -> Result<Self, ModuleError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(ModuleError::DimensionMismatch {
                expected: codomain.dim() * domain.dim(),
                got: matrix.rows() * matrix.cols(),
            });
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }
}

/// Structure constants of a bilinear map: `[e_i, e_j] = Σ_l c[i,j,l] e_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    field: Field,
    dims: [usize; 2],
    out: usize,
    table: Vec<SparseVec>,
}

impl BilinearMap {
    pub fn zero(field: Field, d1: usize, d2: usize, out: usize) -> Self {
        BilinearMap {
            field,
            dims: [d1, d2],
            out,
            table: vec![Vec::new(); d1 * d2],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> [usize; 2] {
        self.dims
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    fn check(&self, idx: [usize; 3]) -> Result<(), ModuleError> {
        let bounds = [self.dims[0], self.dims[1], self.out];
        for (i, d) in idx.into_iter().zip(bounds) {
            if i >= d {
                return Err(ModuleError::IndexOutOfRange { index: i, dim: d });
            }
        }
        Ok(())
    }

    /// Adds `v` to the coefficient `c[i,j,l]`.
    pub fn add_entry(&mut self, i: usize, j: usize, l: usize, v: Scalar) -> Result<(), ModuleError> {
        self.check([i, j, l])?;
        let cell = &mut self.table[i * self.dims[1] + j];
        match cell.binary_search_by_key(&l, |(k, _)| *k) {
            Ok(pos) => {
                cell[pos].1 += &v;
                if cell[pos].1.is_zero() {
                    cell.remove(pos);
                }
            }
            Err(pos) if !v.is_zero() => cell.insert(pos, (l, v)),
            Err(_) => {}
        }
        Ok(())
    }

    pub fn set_column(&mut self, i: usize, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.out);
        self.table[i * self.dims[1] + j] = crate::exactla::to_sparse(v);
    }

    pub fn basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dims[1] + j]
    }

    pub fn basis_dense(&self, i: usize, j: usize) -> Vector {
        crate::exactla::to_dense(self.field, self.out, self.basis(i, j))
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, ModuleError> {
        for (v, d) in [(x, self.dims[0]), (y, self.dims[1])] {
            if v.len() != d {
                return Err(ModuleError::DimensionMismatch {
                    expected: d,
                    got: v.len(),
                });
            }
        }
        let mut acc = zero_vec(self.field, self.out);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (l, c) in self.basis(i, j) {
                    acc[*l] += &(&ab * c);
                }
            }
        }
        Ok(acc)
    }

    /// Sparse entries `(i, j, l, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.table.iter().enumerate().flat_map(move |(ij, col)| {
            let (i, j) = (ij / self.dims[1], ij % self.dims[1]);
            col.iter().map(move |(l, c)| (i, j, *l, c))
        })
    }
}

/// Structure constants of a trilinear map: `{e_i, e_j, e_k} = Σ_l c[i,j,k,l] e_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearMap {
    field: Field,
    dims: [usize; 3],
    out: usize,
    table: Vec<SparseVec>,
}

impl TrilinearMap {
    pub fn zero(field: Field, dims: [usize; 3], out: usize) -> Self {
        TrilinearMap {
            field,
            dims,
            out,
            table: vec![Vec::new(); dims[0] * dims[1] * dims[2]],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn add_entry(&mut self, idx: [usize; 4], v: Scalar) -> Result<(), ModuleError> {
        let bounds = [self.dims[0], self.dims[1], self.dims[2], self.out];
        for (i, d) in idx.into_iter().zip(bounds) {
            if i >= d {
                return Err(ModuleError::IndexOutOfRange { index: i, dim: d });
            }
        }
        let [i, j, k, l] = idx;
        let s = self.slot(i, j, k);
        let cell = &mut self.table[s];
        match cell.binary_search_by_key(&l, |(m, _)| *m) {
            Ok(pos) => {
                cell[pos].1 += &v;
                if cell[pos].1.is_zero() {
                    cell.remove(pos);
                }
            }
            Err(pos) if !v.is_zero() => cell.insert(pos, (l, v)),
            Err(_) => {}
        }
        Ok(())
    }

    pub fn set_column(&mut self, i: usize, j: usize, k: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.out);
        let s = self.slot(i, j, k);
        self.table[s] = crate::exactla::to_sparse(v);
    }

    pub fn basis(&self, i: usize, j: usize, k: usize) -> &SparseVec {
        &self.table[self.slot(i, j, k)]
    }

    pub fn basis_dense(&self, i: usize, j: usize, k: usize) -> Vector {
        crate::exactla::to_dense(self.field, self.out, self.basis(i, j, k))
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector, ModuleError> {
        for (v, d) in [(x, self.dims[0]), (y, self.dims[1]), (z, self.dims[2])] {
            if v.len() != d {
                return Err(ModuleError::DimensionMismatch {
                    expected: d,
                    got: v.len(),
                });
            }
        }
        let mut acc = zero_vec(self.field, self.out);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let abc = &ab * c;
                    for (l, t) in self.basis(i, j, k) {
                        acc[*l] += &(&abc * t);
                    }
                }
            }
        }
        Ok(acc)
    }

    /// Matrix of `z ↦ t(x, y, z)`.
    pub fn partial_matrix(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.out, self.dims[2]);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for k in 0..self.dims[2] {
                    for (l, t) in self.basis(i, j, k) {
                        m.add_at(*l, k, &(&ab * t));
                    }
                }
            }
        }
        m
    }

    pub fn entries(&self) -> impl Iterator<Item = ([usize; 4], &Scalar)> + '_ {
        let [_, d1, d2] = self.dims;
        self.table.iter().enumerate().flat_map(move |(s, col)| {
            let (i, j, k) = (s / (d1 * d2), (s / d2) % d1, s % d2);
            col.iter().map(move |(l, c)| ([i, j, k, *l], c))
        })
    }
}

/// `∧^n` of a graded module: strictly increasing index tuples in
/// lexicographic order, each with the sum of its component degrees.
#[derive(Clone, Debug)]
pub struct WedgeSpace {
    n: usize,
    tuples: Vec<Vec<usize>>,
    degrees: Vec<i64>,
    index: HashMap<Vec<usize>, usize>,
}

pub fn wedge(degrees: &[i32], n: usize) -> WedgeSpace {
    assert!(n >= 1, "wedge power needs n >= 1");
    WedgeSpace::build(degrees, n, None)
}

/// Only the tuples of total degree `d`, still in lexicographic order.
pub fn wedge_of_degree(degrees: &[i32], n: usize, d: i64) -> WedgeSpace {
    assert!(n >= 1, "wedge power needs n >= 1");
    WedgeSpace::build(degrees, n, Some(d))
}

impl WedgeSpace {
    fn build(degrees: &[i32], n: usize, only: Option<i64>) -> WedgeSpace {
        let dim = degrees.len();
        let mut tuples = Vec::new();
        let mut tdeg = Vec::new();
        let mut cur = Vec::with_capacity(n);
        // bounds on the degree reachable by the remaining slots prune the search
        let max_deg = degrees.iter().copied().max().unwrap_or(0) as i64;
        let min_deg = degrees.iter().copied().min().unwrap_or(0) as i64;
        fn rec(
            start: usize,
            acc: i64,
            cur: &mut Vec<usize>,
            n: usize,
            degrees: &[i32],
            bounds: (i64, i64),
            only: Option<i64>,
            out: &mut (Vec<Vec<usize>>, Vec<i64>),
        ) {
            if cur.len() == n {
                if only.is_none_or(|d| d == acc) {
                    out.0.push(cur.clone());
                    out.1.push(acc);
                }
                return;
            }
            let left = (n - cur.len()) as i64;
            if let Some(d) = only {
                if acc + left * bounds.1 < d || acc + left * bounds.0 > d {
                    return;
                }
            }
            for i in start..degrees.len() {
                if degrees.len() - i < (n - cur.len()) {
                    break;
                }
                cur.push(i);
                rec(i + 1, acc + degrees[i] as i64, cur, n, degrees, bounds, only, out);
                cur.pop();
            }
        }
        let mut out = (Vec::new(), Vec::new());
        if n <= dim {
            rec(0, 0, &mut cur, n, degrees, (min_deg, max_deg), only, &mut out);
        }
        std::mem::swap(&mut tuples, &mut out.0);
        std::mem::swap(&mut tdeg, &mut out.1);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        WedgeSpace {
            n,
            tuples,
            degrees: tdeg,
            index,
        }
    }

    pub fn exponent(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// Indices of the basis tuples of total degree `d`.
    pub fn degree_slice(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn position(&self, sorted: &[usize]) -> Option<usize> {
        self.index.get(sorted).copied()
    }

    /// Position and sign of `e_{i_1} ∧ ... ∧ e_{i_n}` for arbitrary indices;
    /// `None` when two indices coincide or the tuple is outside this space.
    pub fn locate(&self, indices: &[usize]) -> Option<(usize, bool)> {
        let (sorted, odd) = sort_with_sign(indices)?;
        self.position(&sorted).map(|p| (p, odd))
    }

    /// Coordinates of `x_1 ∧ ... ∧ x_n` for arbitrary vectors.
    pub fn wedge_vectors(&self, field: Field, xs: &[Vector]) -> Vector {
        assert_eq!(xs.len(), self.n);
        let mut out = zero_vec(field, self.dim());
        for (pos, t) in self.tuples.iter().enumerate() {
            // determinant of the n×n minor on columns t
            let rows: Vec<Vector> = xs.iter().map(|x| t.iter().map(|&c| x[c].clone()).collect()).collect();
            out[pos] = determinant(field, &rows);
        }
        out
    }
}

/// Sorts indices, reporting whether the permutation was odd; `None` on repeats.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = indices.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

fn determinant(field: Field, rows: &[Vector]) -> Scalar {
    let n = rows.len();
    let mut a: Vec<Vector> = rows.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for r in (c + 1)..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            let pivot_row = a[c].clone();
            axpy(&mut a[r], &(-f), &pivot_row);
        }
    }
    det
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
