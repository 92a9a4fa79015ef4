//! Built-in example structures. Every entry is generated over Q and written
//! with string scalars, so the same file loads over any supported field.

use thiserror::Error;
use tkk_core::exactla::{Field, Matrix, Scalar, Vector};

use crate::format::{AlgebraFile, Component, Entry3, Entry4, FieldSpec, Sl2Coords, Structure};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
}

const Q: Field = Field::Rational;

fn s(x: &Scalar) -> String {
    x.to_string()
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(s).collect()
}

fn entries3(d: usize, f: impl Fn(usize, usize) -> Vector) -> Vec<Entry3> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for (l, x) in f(i, j).iter().enumerate() {
                if !x.is_zero() {
                    out.push((i, j, l, s(x)));
                }
            }
        }
    }
    out
}

fn entries4(dims: [usize; 3], f: impl Fn(usize, usize, usize) -> Vector) -> Vec<Entry4> {
    let mut out = Vec::new();
    for i in 0..dims[0] {
        for j in 0..dims[1] {
            for k in 0..dims[2] {
                for (l, x) in f(i, j, k).iter().enumerate() {
                    if !x.is_zero() {
                        out.push((i, j, k, l, s(x)));
                    }
                }
            }
        }
    }
    out
}

fn named(name: String, structure: Structure) -> AlgebraFile {
    AlgebraFile {
        name,
        field: FieldSpec::Rational,
        structure,
    }
}

fn unit(n: usize, i: usize) -> Vector {
    (0..n).map(|k| if k == i { Q.one() } else { Q.zero() }).collect()
}

/// `Qⁿ` with componentwise product.
fn diag(n: usize) -> Structure {
    Structure::JordanAlgebra {
        labels: (1..=n).map(|i| format!("e{i}")).collect(),
        product: entries3(n, |i, j| if i == j { unit(n, i) } else { vec![Q.zero(); n] }),
        identity: vec!["1".into(); n],
    }
}

/// `2×2` matrices with `a∘b = (ab + ba)/2`, basis `E11, E12, E21, E22`.
fn mat2sym() -> Structure {
    let basis: Vec<Matrix> = (0..4).map(|k| matrix_unit(2, 2, k / 2, k % 2)).collect();
    let half = Q.ratio(1, 2);
    Structure::JordanAlgebra {
        labels: vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
        product: entries3(4, |i, j| {
            let (a, b) = (&basis[i], &basis[j]);
            a.mul(b).add(&b.mul(a)).scale(&half).flatten()
        }),
        identity: strings(&Matrix::identity(Q, 2).flatten()),
    }
}

/// `k·1 ⊕ kⁿ` with `(α + x)(β + y) = (αβ + x·y) + (αy + βx)`.
fn spin(n: usize) -> Structure {
    let d = n + 1;
    let mut labels = vec!["1".to_string()];
    labels.extend((1..=n).map(|i| format!("v{i}")));
    Structure::JordanAlgebra {
        labels,
        product: entries3(d, |i, j| match (i, j) {
            (0, k) | (k, 0) => unit(d, k),
            (a, b) if a == b => unit(d, 0),
            _ => vec![Q.zero(); d],
        }),
        identity: strings(&unit(d, 0)),
    }
}

fn matrix_unit(rows: usize, cols: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(Q, rows, cols);
    m.set(i, j, Q.one());
    m
}

fn matrix_basis(rows: usize, cols: usize) -> Vec<Matrix> {
    (0..rows * cols).map(|k| matrix_unit(rows, cols, k / cols, k % cols)).collect()
}

fn matrix_labels(prefix: &str, rows: usize, cols: usize) -> Vec<String> {
    (0..rows * cols)
        .map(|k| format!("{prefix}{}{}", k / cols + 1, k % cols + 1))
        .collect()
}

/// `xyz + zyx` on matrices.
fn xyz_zyx(x: &Matrix, y: &Matrix, z: &Matrix) -> Vector {
    x.mul(y).mul(z).add(&z.mul(y).mul(x)).flatten()
}

/// `P₋ = M_{p×q}`, `P₊ = M_{q×p}`, both products `xyz + zyx`.
fn rect(p: usize, q: usize) -> Structure {
    let (a, b) = (matrix_basis(p, q), matrix_basis(q, p));
    let (m, n) = (p * q, p * q);
    Structure::JordanPair {
        minus_labels: matrix_labels("a", p, q),
        plus_labels: matrix_labels("b", q, p),
        minus_product: entries4([m, n, m], |i, j, k| xyz_zyx(&a[i], &b[j], &a[k])),
        plus_product: entries4([n, m, n], |i, j, k| xyz_zyx(&b[i], &a[j], &b[k])),
    }
}

/// `M_{p×q}` with `{x,y,z} = xyᵀz + zyᵀx`.
fn rect_triple(p: usize, q: usize) -> Structure {
    let a = matrix_basis(p, q);
    let d = p * q;
    Structure::JordanTriple {
        labels: matrix_labels("m", p, q),
        product: entries4([d; 3], |i, j, k| xyz_zyx(&a[i], &a[j].transpose(), &a[k])),
    }
}

struct LieBuilder {
    /// Basis elements as matrices with their labels and degrees, sorted by degree.
    basis: Vec<(String, i32, Matrix)>,
    coords: Box<dyn Fn(&Matrix) -> Vector>,
}

impl LieBuilder {
    fn index(&self, label: &str) -> usize {
        self.basis.iter().position(|(l, _, _)| l == label).expect("known label")
    }

    fn structure(&self, sl2: Option<[Vector; 3]>, involution: Option<Vec<Vector>>) -> Structure {
        let n = self.basis.len();
        let mut components: Vec<Component> = Vec::new();
        for (label, d, _) in &self.basis {
            match components.last_mut() {
                Some(c) if c.degree == *d => c.labels.push(label.clone()),
                _ => components.push(Component {
                    degree: *d,
                    labels: vec![label.clone()],
                }),
            }
        }
        let bracket = entries3(n, |i, j| {
            if i < j {
                (self.coords)(&self.basis[i].2.commutator(&self.basis[j].2))
            } else {
                vec![Q.zero(); n]
            }
        });
        Structure::LieGraded {
            components,
            bracket,
            sl2: sl2.map(|[h, e, f]| Sl2Coords {
                h: strings(&h),
                e: strings(&e),
                f: strings(&f),
            }),
            involution: involution.map(|cols| cols.iter().map(|c| strings(c)).collect()),
        }
    }
}

/// `sl_n` graded by `deg E_ij = b(i) − b(j)`, basis `E_ij` and
/// `H_k = E_kk − E_{k+1,k+1}`.
fn sl_graded(n: usize, b: &[i32]) -> LieBuilder {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push((format!("E{}{}", i + 1, j + 1), b[i] - b[j], matrix_unit(n, n, i, j)));
            }
        }
    }
    for k in 0..n - 1 {
        let mut h = matrix_unit(n, n, k, k);
        h.set(k + 1, k + 1, -Q.one());
        basis.push((format!("H{}", k + 1), 0, h));
    }
    basis.sort_by_key(|(_, d, _)| *d);
    let positions: Vec<(usize, usize, Option<usize>)> = basis
        .iter()
        .map(|(l, _, _)| {
            let digits: Vec<usize> = l[1..].chars().map(|c| c.to_digit(10).unwrap() as usize - 1).collect();
            if l.starts_with('E') {
                (digits[0], digits[1], None)
            } else {
                (0, 0, Some(digits[0]))
            }
        })
        .collect();
    let coords = move |m: &Matrix| -> Vector {
        positions
            .iter()
            .map(|&(i, j, h)| match h {
                // coefficient of H_k is the partial trace of the first k+1 diagonal entries
                Some(k) => (0..=k).fold(Q.zero(), |acc, t| &acc + m.get(t, t)),
                None => m.get(i, j).clone(),
            })
            .collect()
    };
    LieBuilder {
        basis,
        coords: Box::new(coords),
    }
}

fn sl2() -> Structure {
    let l = sl_graded(2, &[1, 0]);
    let n = 3;
    let (f, h, e) = (l.index("E21"), l.index("H1"), l.index("E12"));
    let mut inv = vec![Vec::new(); n];
    inv[e] = unit(n, f);
    inv[f] = unit(n, e);
    inv[h] = unit(n, h).iter().map(|x| -x).collect();
    l.structure(Some([unit(n, h), unit(n, e), unit(n, f)]), Some(inv))
}

/// `sl₂ ⊕ k·z` with `z` central in degree 0.
fn sl2_central() -> Structure {
    Structure::LieGraded {
        components: vec![
            Component {
                degree: -1,
                labels: vec!["f".into()],
            },
            Component {
                degree: 0,
                labels: vec!["h".into(), "z".into()],
            },
            Component {
                degree: 1,
                labels: vec!["e".into()],
            },
        ],
        bracket: vec![
            (0, 1, 0, "2".into()),
            (0, 3, 1, "-1".into()),
            (1, 3, 3, "2".into()),
        ],
        sl2: None,
        involution: None,
    }
}

/// Abelian `L₋₁ ⊕ L₁` with both components one-dimensional.
fn abelian3() -> Structure {
    Structure::LieGraded {
        components: vec![
            Component {
                degree: -1,
                labels: vec!["x".into()],
            },
            Component {
                degree: 1,
                labels: vec!["y".into()],
            },
        ],
        bracket: Vec::new(),
        sl2: None,
        involution: None,
    }
}

/// `sl₄` graded by the `2+2` block decomposition, with `h = diag(1,1,−1,−1)`.
fn sl4block() -> Structure {
    let l = sl_graded(4, &[1, 1, 0, 0]);
    let n = l.basis.len();
    let mut h = Matrix::zeros(Q, 4, 4);
    for (i, v) in [1, 1, -1, -1].into_iter().enumerate() {
        h.set(i, i, Q.from_i64(v));
    }
    let e = matrix_unit(4, 4, 0, 2).add(&matrix_unit(4, 4, 1, 3));
    let f = e.transpose();
    let triple = [(l.coords)(&h), (l.coords)(&e), (l.coords)(&f)];
    debug_assert_eq!(triple[0].len(), n);
    l.structure(Some(triple), None)
}

/// `sl₃` in degree 0 with the triple `(E11 − E22, E12, E21)`, whose `ad h`
/// has odd weights.
fn sl3() -> Structure {
    let l = sl_graded(3, &[0, 0, 0]);
    let n = l.basis.len();
    let (h, e, f) = (l.index("H1"), l.index("E12"), l.index("E21"));
    l.structure(Some([unit(n, h), unit(n, e), unit(n, f)]), None)
}

fn args(name: &str, head: &str) -> Option<Vec<usize>> {
    let inner = name.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|x| x.trim().parse().ok()).collect()
}

pub fn catalog(name: &str) -> Result<AlgebraFile, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let structure = match name {
        "k1" => diag(1),
        "mat2sym" => mat2sym(),
        "sl2" => sl2(),
        "sl2_central" => sl2_central(),
        "abelian3" => abelian3(),
        "sl4block" => sl4block(),
        "sl3" => sl3(),
        _ => {
            if let Some([n]) = args(name, "diag").as_deref() {
                if !(1..=4).contains(n) {
                    return Err(unknown());
                }
                diag(*n)
            } else if let Some([n]) = args(name, "spin").as_deref() {
                if !(1..=4).contains(n) {
                    return Err(unknown());
                }
                spin(*n)
            } else if let Some([p, q]) = args(name, "rect").as_deref() {
                if *p == 0 || *q == 0 || p * q > 6 {
                    return Err(unknown());
                }
                rect(*p, *q)
            } else if let Some([p, q]) = args(name, "rect_triple").as_deref() {
                if *p == 0 || *q == 0 || p * q > 6 {
                    return Err(unknown());
                }
                rect_triple(*p, *q)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(named(name.to_string(), structure))
}

/// Unital Jordan algebras of the standard list.
pub const ALGEBRAS: &[&str] = &[
    "k1", "diag(2)", "diag(3)", "diag(4)", "mat2sym", "spin(2)", "spin(3)", "spin(4)",
];

/// Triple systems beyond those coming from the algebras.
pub const TRIPLES: &[&str] = &["rect_triple(1,2)", "rect_triple(1,3)", "rect_triple(2,2)", "rect_triple(2,3)"];

pub const PAIRS: &[&str] = &[
    "rect(1,1)", "rect(1,2)", "rect(1,3)", "rect(1,4)", "rect(1,5)", "rect(1,6)", "rect(2,1)", "rect(2,2)",
    "rect(2,3)", "rect(3,1)", "rect(3,2)", "rect(4,1)", "rect(5,1)", "rect(6,1)",
];

pub const LIE: &[&str] = &["sl2", "sl2_central", "abelian3", "sl4block", "sl3"];

pub fn names() -> Vec<&'static str> {
    ALGEBRAS.iter().chain(TRIPLES).chain(PAIRS).chain(LIE).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{emit, parse};

    #[test]
    fn every_name_resolves_and_roundtrips() {
        for name in names() {
            let file = catalog(name).unwrap();
            assert_eq!(file.name, name);
            assert_eq!(parse(emit(&file).as_bytes()).unwrap(), file, "{name}");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        for bad in ["diag(5)", "spin(0)", "rect(3,3)", "rect(0,2)", "nope", "diag(x)"] {
            assert_eq!(catalog(bad), Err(CatalogError::UnknownName(bad.into())));
        }
    }

    #[test]
    fn sl4block_grading() {
        let Structure::LieGraded { components, .. } = catalog("sl4block").unwrap().structure else {
            panic!("kind")
        };
        let dims: Vec<(i32, usize)> = components.iter().map(|c| (c.degree, c.labels.len())).collect();
        assert_eq!(dims, vec![(-1, 4), (0, 7), (1, 4)]);
    }
}
