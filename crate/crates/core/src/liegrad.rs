//! Z-graded Lie algebras by structure constants, with graded and involutary
//! morphisms, sl₂-triples, A₁-gradings and the forgetful functors onto the
//! three Jordan structures.

use thiserror::Error;

use crate::cert::{Certificate, CheckResult, Certified, Violation};
use crate::exactla::{
    kernel_basis, solve_matrix, span_rank, unit_vec, vec_scale, Field, Matrix, Scalar, SparseVec, Vector,
};
use crate::freemod::{BilinearMap, FreeModule, ModuleError, TrilinearMap};
use crate::jordan::{
    check_algebra, check_pair, check_triple, JordanAlgebra, JordanPair, JordanTriple, PairInvolution, Sign,
    DEFAULT_SEED,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("basis has {labels} labels but {degrees} degrees")]
    DegreeCount { labels: usize, degrees: usize },
    #[error("algebra is not 3-graded: basis element {0} has degree {1}")]
    NotThreeGraded(usize, i32),
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error("not A1-graded: {0}")]
    NotA1(#[from] NotA1),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotA1 {
    #[error("ad h eigenspaces for -2, 0, 2 have total dimension {found} of {dim}")]
    ResidualEigenspace { found: usize, dim: usize },
    #[error("ad h has odd weights")]
    NonIntegralWeights,
    #[error("degree 0 is not spanned by [L-1, L1]")]
    NotZeroPerfect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    module: FreeModule,
    degrees: Vec<i32>,
    bracket: BilinearMap,
}

impl GradedLieAlgebra {
    pub fn new(module: FreeModule, degrees: Vec<i32>, bracket: BilinearMap) -> Result<Self, LieError> {
        let n = module.dim();
        if degrees.len() != n {
            return Err(LieError::DegreeCount {
                labels: n,
                degrees: degrees.len(),
            });
        }
        if bracket.dims() != [n, n] || bracket.out_dim() != n {
            return Err(ModuleError::DimensionMismatch {
                expected: n * n * n,
                got: bracket.dims()[0] * bracket.dims()[1] * bracket.out_dim(),
            }
            .into());
        }
        if bracket.field() != module.field() {
            return Err(ModuleError::FieldMismatch(module.field(), bracket.field()).into());
        }
        Ok(GradedLieAlgebra {
            module,
            degrees,
            bracket,
        })
    }

    pub fn zero(field: Field) -> Self {
        GradedLieAlgebra {
            module: FreeModule::numbered(field, "x", 0),
            degrees: Vec::new(),
            bracket: BilinearMap::zero(field, 0, 0, 0),
        }
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn labels(&self) -> &[String] {
        self.module.labels()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn structure(&self) -> &BilinearMap {
        &self.bracket
    }

    /// Basis indices of `L_d`, ascending.
    pub fn component(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn component_dim(&self, d: i32) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }

    pub fn is_three_graded(&self) -> bool {
        self.degrees.iter().all(|d| (-1..=1).contains(d))
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(), i)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.apply(x, y).expect("dimensions")
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        self.bracket.basis(i, j)
    }

    /// `[v, e_k]` for sparse `v`.
    fn bracket_sparse_basis(&self, v: &[(usize, Scalar)], k: usize) -> Vector {
        let mut acc = vec![self.field().zero(); self.dim()];
        for (m, c) in v {
            for (l, t) in self.bracket.basis(*m, k) {
                acc[*l] += &(c * t);
            }
        }
        acc
    }

    /// Matrix of `ad x = [x, ·]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.bracket(x, &self.unit(j))).collect();
        Matrix::from_cols(self.field(), self.dim(), &cols)
    }

    /// Coordinates of `v` on the basis of `L_d`.
    pub fn restrict(&self, v: &[Scalar], d: i32) -> Vector {
        self.component(d).into_iter().map(|i| v[i].clone()).collect()
    }

    /// Vector of `L` with coordinates `c` on the basis of `L_d`.
    pub fn embed(&self, c: &[Scalar], d: i32) -> Vector {
        let mut v = vec![self.field().zero(); self.dim()];
        for (i, x) in self.component(d).into_iter().zip(c) {
            v[i] = x.clone();
        }
        v
    }

    pub fn same_structure(&self, other: &GradedLieAlgebra) -> bool {
        self.degrees == other.degrees && self.bracket == other.bracket
    }
}

fn support_degrees_ok(l: &GradedLieAlgebra, v: &[(usize, Scalar)], d: i32) -> bool {
    v.iter().all(|(m, _)| l.degree(*m) == d)
}

pub fn check_graded_lie(l: &GradedLieAlgebra) -> CheckResult {
    let n = l.dim();
    let mut cert = Certificate::new();
    for i in 0..n {
        for j in 0..n {
            if !support_degrees_ok(l, l.basis_bracket(i, j), l.degree(i) + l.degree(j)) {
                return Err(Violation::new("grading", vec![i, j]));
            }
        }
    }
    cert.record("grading", n * n);
    for i in 0..n {
        if !l.basis_bracket(i, i).is_empty() {
            return Err(Violation::new("antisymmetry", vec![i, i]));
        }
        for j in (i + 1)..n {
            let neg: SparseVec = l.basis_bracket(j, i).iter().map(|(m, c)| (*m, -c)).collect();
            if *l.basis_bracket(i, j) != neg {
                return Err(Violation::new("antisymmetry", vec![i, j]));
            }
        }
    }
    cert.record("antisymmetry", n * n);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let a = l.bracket_sparse_basis(l.basis_bracket(i, j), k);
                let b = l.bracket_sparse_basis(l.basis_bracket(j, k), i);
                let c = l.bracket_sparse_basis(l.basis_bracket(k, i), j);
                if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                    return Err(Violation::new("jacobi", vec![i, j, k]));
                }
            }
        }
    }
    cert.record("jacobi", n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
    Ok(cert)
}

pub fn certify_lie(l: GradedLieAlgebra) -> Result<Certified<GradedLieAlgebra>, Violation> {
    let cert = check_graded_lie(&l)?;
    Ok(Certified::assume(l, cert))
}

/// A linear map between graded Lie algebras, `target_dim × source_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHom {
    pub matrix: Matrix,
}

impl GradedHom {
    pub fn identity(l: &GradedLieAlgebra) -> Self {
        GradedHom {
            matrix: Matrix::identity(l.field(), l.dim()),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }
}

/// Degree preservation and `α[x,y] = [αx, αy]` on basis pairs.
pub fn check_graded_hom(a: &GradedHom, l: &GradedLieAlgebra, k: &GradedLieAlgebra) -> CheckResult {
    check_lie_map(&a.matrix, l, k, |d| d, "graded homomorphism")
}

fn check_lie_map(
    m: &Matrix,
    l: &GradedLieAlgebra,
    k: &GradedLieAlgebra,
    shift: impl Fn(i32) -> i32,
    law: &str,
) -> CheckResult {
    if m.rows() != k.dim() || m.cols() != l.dim() {
        return Err(Violation::new(format!("{law} shape"), vec![m.rows(), m.cols()]));
    }
    let img = m.col_vectors();
    for (i, v) in img.iter().enumerate() {
        let want = shift(l.degree(i));
        if v.iter().enumerate().any(|(r, x)| !x.is_zero() && k.degree(r) != want) {
            return Err(Violation::new(format!("{law} degree"), vec![i]));
        }
    }
    let n = l.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = m.mul_vec(&crate::exactla::to_dense(l.field(), n, l.basis_bracket(i, j)));
            if lhs != k.bracket(&img[i], &img[j]) {
                return Err(Violation::new(format!("{law} bracket"), vec![i, j]));
            }
        }
    }
    let mut cert = Certificate::new();
    cert.record(format!("{law} degree"), n);
    cert.record(format!("{law} bracket"), n * n.saturating_sub(1) / 2);
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiGradedInvolution {
    pub matrix: Matrix,
}

/// `ε² = id`, `ε` a Lie homomorphism, `ε(L_i) ⊆ L_{-i}`.
pub fn check_anti_involution(l: &GradedLieAlgebra, e: &AntiGradedInvolution) -> CheckResult {
    let mut cert = check_lie_map(&e.matrix, l, l, |d| -d, "anti-graded involution")?;
    let sq = e.matrix.mul(&e.matrix);
    if sq != Matrix::identity(l.field(), l.dim()) {
        let bad = (0..l.dim()).find(|&c| sq.col(c) != l.unit(c)).unwrap_or(0);
        return Err(Violation::new("period two", vec![bad]));
    }
    cert.record("period two", l.dim());
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub h: Vector,
    pub e: Vector,
    pub f: Vector,
}

/// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn check_sl2(l: &GradedLieAlgebra, s: &Sl2Triple) -> CheckResult {
    let two = l.field().from_i64(2);
    let laws: [(&str, Vector, Vector); 3] = [
        ("[e,f] = h", l.bracket(&s.e, &s.f), s.h.clone()),
        ("[h,e] = 2e", l.bracket(&s.h, &s.e), vec_scale(&s.e, &two)),
        ("[h,f] = -2f", l.bracket(&s.h, &s.f), vec_scale(&s.f, &(-two.clone()))),
    ];
    let mut cert = Certificate::new();
    for (n, (law, lhs, rhs)) in laws.into_iter().enumerate() {
        if lhs != rhs {
            return Err(Violation::new(law, vec![n]));
        }
        cert.record(law, 1);
    }
    Ok(cert)
}

fn require_three_graded(l: &GradedLieAlgebra) -> Result<(), LieError> {
    match (0..l.dim()).find(|&i| !(-1..=1).contains(&l.degree(i))) {
        Some(i) => Err(LieError::NotThreeGraded(i, l.degree(i))),
        None => Ok(()),
    }
}

/// `[[x, y], z]` restricted to `L_d` where `x, y, z` are basis indices.
fn double_bracket(l: &GradedLieAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar], d: i32) -> Vector {
    l.restrict(&l.bracket(&l.bracket(x, y), z), d)
}

fn sub_module(l: &GradedLieAlgebra, d: i32) -> FreeModule {
    let labels = l.component(d).into_iter().map(|i| l.labels()[i].clone()).collect();
    FreeModule::new(l.field(), labels).expect("labels of L are unique")
}

/// `(L₋₁, L₁)` with `{a,b,c}_σ = [[a,b],c]`.
pub fn forget_to_pair(l: &Certified<GradedLieAlgebra>) -> Result<Certified<JordanPair>, LieError> {
    require_three_graded(l)?;
    let f = l.field();
    let mut prods = Vec::new();
    for s in [Sign::Minus, Sign::Plus] {
        let (ds, dt) = (sign_degree(s), -sign_degree(s));
        let (cs, ct) = (l.component(ds), l.component(dt));
        let mut t = TrilinearMap::zero(f, [cs.len(), ct.len(), cs.len()], cs.len());
        for (i, &a) in cs.iter().enumerate() {
            for (j, &b) in ct.iter().enumerate() {
                for (k, &c) in cs.iter().enumerate() {
                    t.set_column(i, j, k, &double_bracket(l, &l.unit(a), &l.unit(b), &l.unit(c), ds));
                }
            }
        }
        prods.push(t);
    }
    let t_plus = prods.pop().expect("two products");
    let t_minus = prods.pop().expect("two products");
    let pair = JordanPair::new(sub_module(l, -1), sub_module(l, 1), t_minus, t_plus)?;
    let cert = check_pair(&pair).map_err(LieError::Violation)?;
    Ok(Certified::assume(pair, cert))
}

pub fn sign_degree(s: Sign) -> i32 {
    match s {
        Sign::Minus => -1,
        Sign::Plus => 1,
    }
}

/// The restriction of `ε` to degrees `∓1`, an involution of `forget_to_pair(l)`.
pub fn pair_involution_of(l: &GradedLieAlgebra, e: &AntiGradedInvolution) -> PairInvolution {
    let block = |from: i32| {
        let (src, dst) = (l.component(from), l.component(-from));
        let mut m = Matrix::zeros(l.field(), dst.len(), src.len());
        for (c, &i) in src.iter().enumerate() {
            for (r, &j) in dst.iter().enumerate() {
                m.set(r, c, e.matrix.get(j, i).clone());
            }
        }
        m
    };
    PairInvolution {
        minus: block(-1),
        plus: block(1),
    }
}

/// Triple system on `L₁` with `{a,b,c} = [[a, ε(b)], c]`.
pub fn forget_to_jts(
    l: &Certified<GradedLieAlgebra>,
    e: &AntiGradedInvolution,
) -> Result<Certified<JordanTriple>, LieError> {
    require_three_graded(l)?;
    check_anti_involution(l, e)?;
    let c1 = l.component(1);
    let d = c1.len();
    let mut t = TrilinearMap::zero(l.field(), [d; 3], d);
    let images: Vec<Vector> = c1.iter().map(|&b| e.matrix.col(b)).collect();
    for (i, &a) in c1.iter().enumerate() {
        for (j, eb) in images.iter().enumerate() {
            for (k, &c) in c1.iter().enumerate() {
                t.set_column(i, j, k, &double_bracket(l, &l.unit(a), eb, &l.unit(c), 1));
            }
        }
    }
    let triple = JordanTriple::new(sub_module(l, 1), t)?;
    let cert = check_triple(&triple)?;
    Ok(Certified::assume(triple, cert))
}

/// Unital algebra on `L₁` with `a∘b = [[a, f], b]` and identity `e/2`.
pub fn forget_to_ja(l: &Certified<GradedLieAlgebra>, s: &Sl2Triple) -> Result<Certified<JordanAlgebra>, LieError> {
    require_three_graded(l)?;
    check_sl2(l, s)?;
    let c1 = l.component(1);
    let d = c1.len();
    let mut m = BilinearMap::zero(l.field(), d, d, d);
    for (i, &a) in c1.iter().enumerate() {
        for (j, &b) in c1.iter().enumerate() {
            m.set_column(i, j, &double_bracket(l, &l.unit(a), &s.f, &l.unit(b), 1));
        }
    }
    let half = l.field().ratio(1, 2);
    let identity = vec_scale(&l.restrict(&s.e, 1), &half);
    let j = JordanAlgebra::new(sub_module(l, 1), m, identity).map_err(|e| match e {
        crate::jordan::JordanError::Module(m) => LieError::Module(m),
        crate::jordan::JordanError::Violation(v) => LieError::Violation(v),
        crate::jordan::JordanError::IdentityLength { expected, got } => {
            LieError::Module(ModuleError::DimensionMismatch { expected, got })
        }
    })?;
    let cert = check_algebra(&j, DEFAULT_SEED)?;
    Ok(Certified::assume(j, cert))
}

/// `L₀ = [L₋₁, L₁]`.
pub fn is_zero_perfect(l: &GradedLieAlgebra) -> bool {
    let gens: Vec<Vector> = l
        .component(-1)
        .into_iter()
        .flat_map(|a| l.component(1).into_iter().map(move |b| (a, b)))
        .map(|(a, b)| l.restrict(&crate::exactla::to_dense(l.field(), l.dim(), l.basis_bracket(a, b)), 0))
        .collect();
    span_rank(l.field(), l.component_dim(0), &gens) == l.component_dim(0)
}

/// Basis of `{x : [x, L] = 0}`.
pub fn center(l: &GradedLieAlgebra) -> Vec<Vector> {
    let n = l.dim();
    let mut m = Matrix::zeros(l.field(), n * n, n);
    for j in 0..n {
        for i in 0..n {
            for (r, c) in l.basis_bracket(i, j) {
                m.set(j * n + r, i, c.clone());
            }
        }
    }
    kernel_basis(&m)
}

/// The 3-grading by `ad h` eigenvalues, in an eigenbasis.
#[derive(Clone, Debug)]
pub struct A1Grading {
    pub algebra: Certified<GradedLieAlgebra>,
    /// Columns are the new basis vectors in the old coordinates.
    pub basis_change: Matrix,
    pub sl2: Sl2Triple,
}

/// `L_i = {x : [h, x] = 2ix}` for `i ∈ {−1, 0, 1}`.
pub fn grading_from_sl2(l: &GradedLieAlgebra, s: &Sl2Triple) -> Result<A1Grading, LieError> {
    check_sl2(l, s)?;
    let f = l.field();
    let n = l.dim();
    let adh = l.ad(&s.h);
    let eigen = |lambda: i64| kernel_basis(&adh.sub(&Matrix::identity(f, n).scale(&f.from_i64(lambda))));
    let spaces: Vec<(i32, Vec<Vector>)> = [-1, 0, 1].into_iter().map(|i| (i, eigen(2 * i as i64))).collect();
    let found: usize = spaces.iter().map(|(_, b)| b.len()).sum();
    if found < n {
        if !eigen(1).is_empty() || !eigen(-1).is_empty() {
            return Err(NotA1::NonIntegralWeights.into());
        }
        return Err(NotA1::ResidualEigenspace { found, dim: n }.into());
    }
    let mut cols = Vec::with_capacity(n);
    let mut degrees = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (d, basis) in &spaces {
        for (k, v) in basis.iter().enumerate() {
            cols.push(v.clone());
            degrees.push(*d);
            labels.push(format!("L{d}.{k}"));
        }
    }
    let b = Matrix::from_cols(f, n, &cols);
    let b_inv = solve_matrix(&b, &Matrix::identity(f, n)).expect("eigenbasis is a basis");
    let mut bracket = BilinearMap::zero(f, n, n, n);
    for i in 0..n {
        for j in 0..n {
            let v = b_inv.mul_vec(&l.bracket(&cols[i], &cols[j]));
            bracket.set_column(i, j, &v);
        }
    }
    let graded = GradedLieAlgebra::new(FreeModule::new(f, labels)?, degrees, bracket)?;
    let cert = check_graded_lie(&graded)?;
    if !is_zero_perfect(&graded) {
        return Err(NotA1::NotZeroPerfect.into());
    }
    let sl2 = Sl2Triple {
        h: b_inv.mul_vec(&s.h),
        e: b_inv.mul_vec(&s.e),
        f: b_inv.mul_vec(&s.f),
    };
    Ok(A1Grading {
        algebra: Certified::assume(graded, cert),
        basis_change: b,
        sl2,
    })
}

/// Whether the map `(a, b) ↦ (ε(a), b)` identifies `forget_to_pair(l)` with
/// the double of `forget_to_jts(l, ε)`.
pub fn check_jts_pair_iso(l: &Certified<GradedLieAlgebra>, e: &AntiGradedInvolution) -> Result<CheckResult, LieError> {
    let p = forget_to_pair(l)?;
    let t = forget_to_jts(l, e)?;
    let (dp, _) = crate::jordan::double_jts(&t);
    let inv = pair_involution_of(l, e);
    let g = crate::jordan::PairHom {
        minus: inv.minus.clone(),
        plus: Matrix::identity(l.field(), l.component_dim(1)),
    };
    Ok(crate::jordan::check_pair_hom(&g, &p, &dp).and_then(|mut c| {
        if g.minus.rank() != g.minus.rows() || g.minus.rows() != g.minus.cols() {
            return Err(Violation::new("pair isomorphism", vec![]));
        }
        c.record("pair isomorphism", 1);
        Ok(c)
    }))
}

/// A graded surjection `φ: K → L` with kernel central and inside `K₀`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub total: Certified<GradedLieAlgebra>,
    pub base: Certified<GradedLieAlgebra>,
    pub map: GradedHom,
    pub kernel: Vec<Vector>,
}

impl CentralExtension {
    /// Checks degree and bracket preservation, surjectivity, and that the
    /// kernel is central and concentrated in degree 0.
    pub fn certify(
        total: Certified<GradedLieAlgebra>,
        base: Certified<GradedLieAlgebra>,
        map: GradedHom,
    ) -> Result<Certified<CentralExtension>, Violation> {
        let mut cert = check_graded_hom(&map, &total, &base)?;
        if map.matrix.rank() != base.dim() {
            return Err(Violation::new("surjective", vec![map.matrix.rank(), base.dim()]));
        }
        cert.record("surjective", 1);
        let kernel = kernel_basis(&map.matrix);
        for (n, z) in kernel.iter().enumerate() {
            if let Some(i) = (0..total.dim()).find(|&i| !z[i].is_zero() && total.degree(i) != 0) {
                return Err(Violation::new("kernel in degree 0", vec![n, i]));
            }
            for j in 0..total.dim() {
                if total.bracket(z, &total.unit(j)).iter().any(|x| !x.is_zero()) {
                    return Err(Violation::new("kernel central", vec![n, j]));
                }
            }
        }
        cert.record("kernel in degree 0", kernel.len());
        cert.record("kernel central", kernel.len() * total.dim());
        Ok(Certified::assume(
            CentralExtension {
                total,
                base,
                map,
                kernel,
            },
            cert,
        ))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn sl2_certified() {
        let l = sl2(q());
        assert!(check_graded_lie(&l).is_ok());
        assert!(check_sl2(&l, &sl2_triple(q())).is_ok());
        assert!(is_zero_perfect(&l));
        assert!(center(&l).is_empty());
    }

    #[test]
    fn bad_grading_detected() {
        let mut l = sl2(q());
        l.degrees[2] = 2;
        let v = check_graded_lie(&l).unwrap_err();
        assert_eq!(v.law, "grading");
    }

    #[test]
    fn abelian_cases() {
        let f = q();
        let ab = GradedLieAlgebra::new(FreeModule::numbered(f, "x", 2), vec![0, 0], BilinearMap::zero(f, 2, 2, 2)).unwrap();
        assert!(check_graded_lie(&ab).is_ok());
        assert!(!is_zero_perfect(&ab));
        assert_eq!(center(&ab).len(), 2);
        let ab3 = GradedLieAlgebra::new(FreeModule::numbered(f, "x", 2), vec![-1, 1], BilinearMap::zero(f, 2, 2, 2)).unwrap();
        assert!(is_zero_perfect(&ab3));
        let p = forget_to_pair(&certify_lie(ab3).unwrap()).unwrap();
        assert!(p.product(Sign::Plus).entries().next().is_none());
    }

    #[test]
    fn sl2_forgetful_functors() {
        let f = q();
        let l = certify_lie(sl2(f)).unwrap();
        let p = forget_to_pair(&l).unwrap();
        let one = vec![f.one()];
        assert_eq!(p.triple(Sign::Plus, &one, &one, &one), vec![f.from_i64(2)]);
        // ε: e ↔ f, h ↦ −h
        let e = AntiGradedInvolution {
            matrix: Matrix::from_i64(f, &[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]),
        };
        assert!(check_anti_involution(&l, &e).is_ok());
        let t = forget_to_jts(&l, &e).unwrap();
        assert_eq!(t.triple(&one, &one, &one), vec![f.from_i64(2)]);
        assert!(check_jts_pair_iso(&l, &e).unwrap().is_ok());
        let j = forget_to_ja(&l, &sl2_triple(f)).unwrap();
        assert_eq!(j.identity(), &[f.ratio(1, 2)]);
        let half = vec![f.ratio(1, 2)];
        assert_eq!(j.mul(&half, &half), half);
    }

    #[test]
    fn grading_recovered_from_triple() {
        let f = q();
        let mut l = sl2(f);
        l.degrees = vec![0, 0, 0];
        let g = grading_from_sl2(&l, &sl2_triple(f)).unwrap();
        assert_eq!(g.algebra.degrees(), &[-1, 0, 1]);
    }

    #[test]
    fn hom_degree_breach() {
        let f = q();
        let l = sl2(f);
        assert!(check_graded_hom(&GradedHom::identity(&l), &l, &l).is_ok());
        let zero = GradedHom {
            matrix: Matrix::zeros(f, 3, 3),
        };
        assert!(check_graded_hom(&zero, &l, &l).is_ok());
        let mut m = Matrix::zeros(f, 3, 3);
        m.set(0, 2, f.one());
        let v = check_graded_hom(&GradedHom { matrix: m }, &l, &l).unwrap_err();
        assert!(v.law.contains("degree"));
    }

    #[test]
    fn center_of_sl2_plus_line() {
        let f = q();
        let base = sl2(f);
        let mut b = BilinearMap::zero(f, 4, 4, 4);
        for (i, j, k, c) in base.structure().entries() {
            b.add_entry(i, j, k, c.clone()).unwrap();
        }
        let l = GradedLieAlgebra::new(FreeModule::numbered(f, "x", 4), vec![-1, 0, 1, 0], b).unwrap();
        assert_eq!(center(&l), vec![unit_vec(f, 4, 3)]);
        assert!(!is_zero_perfect(&l));
    }
}
