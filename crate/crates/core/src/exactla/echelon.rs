//! Incremental sparse row echelon basis.
//!
//! Every stored row is zero to the left of its pivot, has a 1 at the pivot,
//! and is zero at every pivot column that existed when it was inserted.
//! Reducing a vector against the rows in insertion order therefore clears
//! every pivot coordinate in one pass.

use super::scalar::{Field, Scalar};

pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    // pivot column -> row index
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: Field, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: vec![None; dim],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col[col].is_some()
    }

    fn reduce_dense(&self, acc: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if acc[p].is_zero() {
                continue;
            }
            let c = acc[p].clone();
            for (j, v) in row {
                acc[*j] -= &(&c * v);
            }
        }
    }

    fn scatter(&self, v: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut acc = vec![self.field.zero(); self.dim];
        for (j, x) in v {
            acc[*j] += x;
        }
        acc
    }

    /// Residual of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut acc = v.to_vec();
        self.reduce_dense(&mut acc);
        acc
    }

    pub fn reduce_sparse(&self, v: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut acc = self.scatter(v);
        self.reduce_dense(&mut acc);
        acc
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_sparse(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce_sparse(v).iter().all(Scalar::is_zero)
    }

    fn insert_residual(&mut self, acc: Vec<Scalar>) -> bool {
        let Some(p) = acc.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = acc[p].inv().expect("nonzero pivot");
        let row: SparseVec = acc
            .into_iter()
            .enumerate()
            .skip(p)
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, &x * &inv))
            .collect();
        self.pivot_of_col[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(row);
        true
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let acc = self.reduce(v);
        self.insert_residual(acc)
    }

    pub fn insert_sparse(&mut self, v: &[(usize, Scalar)]) -> bool {
        let acc = self.reduce_sparse(v);
        self.insert_residual(acc)
    }

    /// The unique reduced row echelon basis of the span, rows sorted by pivot.
    pub fn rref_rows(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut dense: Vec<Vec<Scalar>> = order
            .iter()
            .map(|&i| {
                let mut r = vec![self.field.zero(); self.dim];
                for (j, x) in &self.rows[i] {
                    r[*j] = x.clone();
                }
                r
            })
            .collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for i in (0..dense.len()).rev() {
            for k in (i + 1)..dense.len() {
                let p = pivots[k];
                if dense[i][p].is_zero() {
                    continue;
                }
                let c = dense[i][p].clone();
                let (head, tail) = dense.split_at_mut(k);
                for (x, y) in head[i].iter_mut().zip(&tail[0]).skip(p) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
            }
        }
        (dense, pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_tracks_rank() {
        let q = Field::Rational;
        let mut e = Echelon::new(q, 3);
        let v = |xs: [i64; 3]| xs.map(|x| q.from_i64(x)).to_vec();
        assert!(e.insert(&v([0, 2, 4])));
        assert!(e.insert(&v([1, 1, 1])));
        assert!(!e.insert(&v([1, 2, 3])));
        assert!(e.contains(&v([2, 4, 6])));
        assert!(!e.contains(&v([0, 0, 1])));
        assert_eq!(e.rank(), 2);
        let (rows, piv) = e.rref_rows();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows[0], v([1, 0, -1]));
        assert_eq!(rows[1], v([0, 1, 2]));
    }
}
