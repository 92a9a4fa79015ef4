#![allow(dead_code)]

use tkk_core::cert::Certified;
use tkk_core::exactla::{Field, Matrix, Vector};
use tkk_core::freemod::{BilinearMap, FreeModule, TrilinearMap};
use tkk_core::jordan::{certify_algebra, certify_pair, JordanAlgebra, JordanPair, DEFAULT_SEED};
use tkk_core::liegrad::{certify_lie, GradedLieAlgebra, Sl2Triple};

pub const Q: Field = Field::Rational;

pub fn unit(f: Field, n: usize, i: usize) -> Vector {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

pub fn algebra(f: Field, d: usize, one: Vector, mul: impl Fn(usize, usize) -> Vector) -> JordanAlgebra {
    let mut m = BilinearMap::zero(f, d, d, d);
    for i in 0..d {
        for j in 0..d {
            m.set_column(i, j, &mul(i, j));
        }
    }
    JordanAlgebra::new(FreeModule::numbered(f, "e", d), m, one).unwrap()
}

pub fn diag(f: Field, n: usize) -> Certified<JordanAlgebra> {
    let j = algebra(f, n, vec![f.one(); n], |i, k| {
        if i == k {
            unit(f, n, i)
        } else {
            vec![f.zero(); n]
        }
    });
    certify_algebra(j, DEFAULT_SEED).unwrap()
}

pub fn spin(f: Field, n: usize) -> Certified<JordanAlgebra> {
    let d = n + 1;
    let j = algebra(f, d, unit(f, d, 0), |i, k| match (i, k) {
        (0, x) | (x, 0) => unit(f, d, x),
        (a, b) if a == b => unit(f, d, 0),
        _ => vec![f.zero(); d],
    });
    certify_algebra(j, DEFAULT_SEED).unwrap()
}

pub fn matrix_unit(f: Field, r: usize, c: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(f, r, c);
    m.set(i, j, f.one());
    m
}

/// `M₂` with `(ab + ba)/2`.
pub fn mat2sym_raw(f: Field) -> JordanAlgebra {
    let b: Vec<Matrix> = (0..4).map(|k| matrix_unit(f, 2, 2, k / 2, k % 2)).collect();
    let half = f.ratio(1, 2);
    algebra(f, 4, Matrix::identity(f, 2).flatten(), |i, k| {
        b[i].mul(&b[k]).add(&b[k].mul(&b[i])).scale(&half).flatten()
    })
}

pub fn mat2sym(f: Field) -> Certified<JordanAlgebra> {
    certify_algebra(mat2sym_raw(f), DEFAULT_SEED).unwrap()
}

/// `(M_{p×q}, M_{q×p})` with `xyz + zyx`.
pub fn rect(f: Field, p: usize, q: usize) -> Certified<JordanPair> {
    let a: Vec<Matrix> = (0..p * q).map(|k| matrix_unit(f, p, q, k / q, k % q)).collect();
    let b: Vec<Matrix> = (0..p * q).map(|k| matrix_unit(f, q, p, k / p, k % p)).collect();
    let n = p * q;
    let prod = |x: &[Matrix], y: &[Matrix]| {
        let mut t = TrilinearMap::zero(f, [n; 3], n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = x[i].mul(&y[j]).mul(&x[k]).add(&x[k].mul(&y[j]).mul(&x[i])).flatten();
                    t.set_column(i, j, k, &v);
                }
            }
        }
        t
    };
    let pair = JordanPair::new(
        FreeModule::numbered(f, "a", n),
        FreeModule::numbered(f, "b", n),
        prod(&a, &b),
        prod(&b, &a),
    )
    .unwrap();
    certify_pair(pair).unwrap()
}

/// Lie algebra spanned by the given matrices (closed under commutators), with
/// coordinates read off by `coords`.
pub fn matrix_lie(
    f: Field,
    basis: &[(String, i32, Matrix)],
    coords: impl Fn(&Matrix) -> Vector,
) -> Certified<GradedLieAlgebra> {
    let n = basis.len();
    let mut br = BilinearMap::zero(f, n, n, n);
    for i in 0..n {
        for j in 0..n {
            br.set_column(i, j, &coords(&basis[i].2.commutator(&basis[j].2)));
        }
    }
    let labels = basis.iter().map(|b| b.0.clone()).collect();
    let degrees = basis.iter().map(|b| b.1).collect();
    certify_lie(GradedLieAlgebra::new(FreeModule::new(f, labels).unwrap(), degrees, br).unwrap()).unwrap()
}

/// `sl_n` graded by `deg E_ij = b(i) − b(j)`; basis `E_ij` (i ≠ j) then `H_k`.
pub fn sl(f: Field, n: usize, b: &[i32]) -> Certified<GradedLieAlgebra> {
    let mut basis = Vec::new();
    let mut pos = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push((format!("E{i}{j}"), b[i] - b[j], matrix_unit(f, n, n, i, j)));
                pos.push((i, j));
            }
        }
    }
    let off = basis.len();
    for k in 0..n - 1 {
        let mut h = matrix_unit(f, n, n, k, k);
        h.set(k + 1, k + 1, -f.one());
        basis.push((format!("H{k}"), 0, h));
    }
    matrix_lie(f, &basis, |m| {
        let mut v: Vector = pos.iter().map(|&(i, j)| m.get(i, j).clone()).collect();
        let mut acc = f.zero();
        for k in 0..n - 1 {
            acc = &acc + m.get(k, k);
            v.push(acc.clone());
        }
        debug_assert_eq!(v.len(), off + n - 1);
        v
    })
}

/// `sl₂` with basis `E01, E10, H0` and the standard triple.
pub fn sl2(f: Field) -> (Certified<GradedLieAlgebra>, Sl2Triple) {
    let l = sl(f, 2, &[1, 0]);
    let s = Sl2Triple {
        h: unit(f, 3, 2),
        e: unit(f, 3, 0),
        f: unit(f, 3, 1),
    };
    (l, s)
}

pub fn abelian(f: Field, degrees: Vec<i32>) -> Certified<GradedLieAlgebra> {
    let n = degrees.len();
    certify_lie(GradedLieAlgebra::new(FreeModule::numbered(f, "x", n), degrees, BilinearMap::zero(f, n, n, n)).unwrap())
        .unwrap()
}

pub fn fields() -> [Field; 3] {
    [Field::Rational, Field::Prime(5), Field::Prime(101)]
}
