//! Linear Jordan pairs, triple systems and unital Jordan algebras given by
//! structure constants, with axiom and homomorphism checkers and the
//! functors between them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cert::{Certificate, CheckResult, Certified, Violation};
use crate::exactla::{unit_vec, vec_add, vec_sub, Field, Matrix, Scalar, Vector};
use crate::freemod::{BilinearMap, FreeModule, ModuleError, TrilinearMap};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

pub const SIGNS: [Sign; 2] = [Sign::Minus, Sign::Plus];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("identity element has {got} coordinates, algebra has dimension {expected}")]
    IdentityLength { expected: usize, got: usize },
    #[error(transparent)]
    Violation(#[from] Violation),
}

/// `P = (P₋, P₊)` with `{a,b,c}_σ` for `a, c ∈ P_σ`, `b ∈ P_{-σ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    minus: FreeModule,
    plus: FreeModule,
    t_minus: TrilinearMap,
    t_plus: TrilinearMap,
}

impl JordanPair {
    pub fn new(
        minus: FreeModule,
        plus: FreeModule,
        t_minus: TrilinearMap,
        t_plus: TrilinearMap,
    ) -> Result<Self, ModuleError> {
        if minus.field() != plus.field() {
            return Err(ModuleError::FieldMismatch(minus.field(), plus.field()));
        }
        let (m, p) = (minus.dim(), plus.dim());
        for (t, want, out) in [(&t_minus, [m, p, m], m), (&t_plus, [p, m, p], p)] {
            if t.dims() != want || t.out_dim() != out {
                return Err(ModuleError::DimensionMismatch {
                    expected: want.iter().product::<usize>() * out,
                    got: t.dims().iter().product::<usize>() * t.out_dim(),
                });
            }
            if t.field() != minus.field() {
                return Err(ModuleError::FieldMismatch(minus.field(), t.field()));
            }
        }
        Ok(JordanPair {
            minus,
            plus,
            t_minus,
            t_plus,
        })
    }

    pub fn zero(field: Field, dm: usize, dp: usize) -> Self {
        JordanPair {
            minus: FreeModule::numbered(field, "a", dm),
            plus: FreeModule::numbered(field, "b", dp),
            t_minus: TrilinearMap::zero(field, [dm, dp, dm], dm),
            t_plus: TrilinearMap::zero(field, [dp, dm, dp], dp),
        }
    }

    pub fn field(&self) -> Field {
        self.minus.field()
    }

    pub fn module(&self, s: Sign) -> &FreeModule {
        match s {
            Sign::Minus => &self.minus,
            Sign::Plus => &self.plus,
        }
    }

    pub fn dim(&self, s: Sign) -> usize {
        self.module(s).dim()
    }

    pub fn product(&self, s: Sign) -> &TrilinearMap {
        match s {
            Sign::Minus => &self.t_minus,
            Sign::Plus => &self.t_plus,
        }
    }

    /// `{a, b, c}_σ`.
    pub fn triple(&self, s: Sign, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vector {
        self.product(s).apply(a, b, c).expect("component dimensions")
    }

    /// Equal structure constants and field, labels ignored.
    pub fn same_structure(&self, other: &JordanPair) -> bool {
        self.field() == other.field() && self.t_minus == other.t_minus && self.t_plus == other.t_plus
    }

    fn unit(&self, s: Sign, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(s), i)
    }

    /// `V_{e_i, f_j}` for all basis pairs of `P_σ × P_{-σ}`, flattened by `(i, j)`.
    fn basis_v(&self, s: Sign) -> Vec<Matrix> {
        let (ds, dt) = (self.dim(s), self.dim(s.flip()));
        let mut out = Vec::with_capacity(ds * dt);
        for i in 0..ds {
            for j in 0..dt {
                out.push(self.product(s).partial_matrix(&self.unit(s, i), &self.unit(s.flip(), j)));
            }
        }
        out
    }
}

/// Matrix of `c ↦ {a, b, c}_σ` on `P_σ`.
pub fn v_operator(p: &JordanPair, s: Sign, a: &[Scalar], b: &[Scalar]) -> Result<Matrix, ModuleError> {
    for (v, d) in [(a, p.dim(s)), (b, p.dim(s.flip()))] {
        if v.len() != d {
            return Err(ModuleError::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
    }
    Ok(p.product(s).partial_matrix(a, b))
}

pub fn opposite(p: &JordanPair) -> JordanPair {
    JordanPair {
        minus: p.plus.clone(),
        plus: p.minus.clone(),
        t_minus: p.t_plus.clone(),
        t_plus: p.t_minus.clone(),
    }
}

fn combine(field: Field, dim: usize, mats: &[Matrix], stride: usize, coeffs: &[Scalar], fixed: usize, over_first: bool) -> Matrix {
    let mut acc = Matrix::zeros(field, dim, dim);
    for (m, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let idx = if over_first { m * stride + fixed } else { fixed * stride + m };
        acc = acc.add(&mats[idx].scale(c));
    }
    acc
}

fn check_pair_laws(p: &JordanPair) -> CheckResult {
    let mut cert = Certificate::new();
    let f = p.field();
    for s in SIGNS {
        let t = p.product(s);
        let (ds, dt) = (p.dim(s), p.dim(s.flip()));
        for i in 0..ds {
            for j in 0..dt {
                for k in 0..ds {
                    if t.basis(i, j, k) != t.basis(k, j, i) {
                        return Err(Violation::new(format!("symmetry{}", s.symbol()), vec![i, j, k]));
                    }
                }
            }
        }
        cert.record(format!("symmetry{}", s.symbol()), ds * dt * ds);
    }
    for s in SIGNS {
        let (ds, dt) = (p.dim(s), p.dim(s.flip()));
        let vs = p.basis_v(s);
        for i in 0..ds {
            for j in 0..dt {
                let a = p.unit(s, i);
                let b = p.unit(s.flip(), j);
                for k in 0..ds {
                    let abc = p.triple(s, &a, &b, &p.unit(s, k));
                    for l in 0..dt {
                        let d = p.unit(s.flip(), l);
                        let lhs = vs[i * dt + j].commutator(&vs[k * dt + l]);
                        // V_{{a,b,c}, d} - V_{c, {b,a,d}}
                        let first = combine(f, ds, &vs, dt, &abc, l, true);
                        let bad = p.triple(s.flip(), &b, &a, &d);
                        let second = combine(f, ds, &vs, dt, &bad, k, false);
                        if lhs != first.sub(&second) {
                            return Err(Violation::new(format!("commutator{}", s.symbol()), vec![i, j, k, l]));
                        }
                    }
                }
            }
        }
        cert.record(format!("commutator{}", s.symbol()), ds * dt * ds * dt);
    }
    Ok(cert)
}

pub fn check_pair(p: &JordanPair) -> CheckResult {
    check_pair_laws(p)
}

pub fn certify_pair(p: JordanPair) -> Result<Certified<JordanPair>, Violation> {
    let cert = check_pair(&p)?;
    Ok(Certified::assume(p, cert))
}

/// One module with one trilinear product satisfying the pair laws with both
/// components equal to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanTriple {
    module: FreeModule,
    product: TrilinearMap,
}

impl JordanTriple {
    pub fn new(module: FreeModule, product: TrilinearMap) -> Result<Self, ModuleError> {
        let d = module.dim();
        if product.dims() != [d, d, d] || product.out_dim() != d {
            return Err(ModuleError::DimensionMismatch {
                expected: d * d * d * d,
                got: product.dims().iter().product::<usize>() * product.out_dim(),
            });
        }
        Ok(JordanTriple { module, product })
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn product(&self) -> &TrilinearMap {
        &self.product
    }

    pub fn triple(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vector {
        self.product.apply(a, b, c).expect("dimensions")
    }
}

pub fn check_triple(t: &JordanTriple) -> CheckResult {
    let (pair, _) = double_jts_unchecked(t);
    check_pair_laws(&pair).map_err(|v| Violation::new(v.law.trim_end_matches(['-', '+']).to_string(), v.witness))
}

pub fn certify_triple(t: JordanTriple) -> Result<Certified<JordanTriple>, Violation> {
    let cert = check_triple(&t)?;
    Ok(Certified::assume(t, cert))
}

/// Commutative product with the Jordan identity and an identity element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanAlgebra {
    module: FreeModule,
    product: BilinearMap,
    identity: Vector,
}

impl JordanAlgebra {
    pub fn new(module: FreeModule, product: BilinearMap, identity: Vector) -> Result<Self, JordanError> {
        let d = module.dim();
        if product.dims() != [d, d] || product.out_dim() != d {
            return Err(ModuleError::DimensionMismatch {
                expected: d * d * d,
                got: product.dims()[0] * product.dims()[1] * product.out_dim(),
            }
            .into());
        }
        if identity.len() != d {
            return Err(JordanError::IdentityLength {
                expected: d,
                got: identity.len(),
            });
        }
        Ok(JordanAlgebra {
            module,
            product,
            identity,
        })
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn product(&self) -> &BilinearMap {
        &self.product
    }

    pub fn identity(&self) -> &[Scalar] {
        &self.identity
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.product.apply(a, b).expect("dimensions")
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(), i)
    }

    /// Matrix of right multiplication `x ↦ x·a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|i| self.mul(&self.unit(i), a)).collect();
        Matrix::from_cols(self.field(), self.dim(), &cols)
    }
}

/// `Σ_{π ∈ S₃} ((x_{π1} x_{π2}) b) x_{π3} − (x_{π1} x_{π2})(b x_{π3})`,
/// the full linearization in `a` of `(a²b)a − a²(ba)`.
fn linearized_jordan(j: &JordanAlgebra, x: [&Vector; 3], b: &[Scalar]) -> Vector {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut acc = vec![j.field().zero(); j.dim()];
    for p in PERMS {
        let sq = j.mul(x[p[0]], x[p[1]]);
        let left = j.mul(&j.mul(&sq, b), x[p[2]]);
        let right = j.mul(&sq, &j.mul(b, x[p[2]]));
        acc = vec_add(&acc, &vec_sub(&left, &right));
    }
    acc
}

pub fn check_algebra(j: &JordanAlgebra, seed: u64) -> CheckResult {
    let d = j.dim();
    let f = j.field();
    let mut cert = Certificate::new();
    let pr = j.product();
    for a in 0..d {
        for b in 0..d {
            if pr.basis(a, b) != pr.basis(b, a) {
                return Err(Violation::new("commutativity", vec![a, b]));
            }
        }
    }
    cert.record("commutativity", d * d);
    for a in 0..d {
        if j.mul(j.identity(), &j.unit(a)) != j.unit(a) {
            return Err(Violation::new("unit", vec![a]));
        }
    }
    cert.record("unit", d);
    let units: Vec<Vector> = (0..d).map(|i| j.unit(i)).collect();
    for a in 0..d {
        for bb in 0..d {
            for c in 0..d {
                for e in 0..d {
                    let v = linearized_jordan(j, [&units[a], &units[bb], &units[c]], &units[e]);
                    if v.iter().any(|x| !x.is_zero()) {
                        return Err(Violation::new("linearized jordan identity", vec![a, bb, c, e]));
                    }
                }
            }
        }
    }
    cert.record("linearized jordan identity", d * d * d * d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const SAMPLES: usize = 8;
    for n in 0..SAMPLES {
        let a: Vector = (0..d).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        let b: Vector = (0..d).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        let sq = j.mul(&a, &a);
        if j.mul(&j.mul(&sq, &b), &a) != j.mul(&sq, &j.mul(&b, &a)) {
            return Err(Violation::new("jordan identity sample", vec![n]));
        }
    }
    cert.record("jordan identity sample", SAMPLES);
    Ok(cert)
}

pub fn certify_algebra(j: JordanAlgebra, seed: u64) -> Result<Certified<JordanAlgebra>, Violation> {
    let cert = check_algebra(&j, seed)?;
    Ok(Certified::assume(j, cert))
}

/// Homomorphism `P → P^op` given as `(ε₋: P₋ → P₊, ε₊: P₊ → P₋)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInvolution {
    pub minus: Matrix,
    pub plus: Matrix,
}

impl PairInvolution {
    pub fn map(&self, s: Sign) -> &Matrix {
        match s {
            Sign::Minus => &self.minus,
            Sign::Plus => &self.plus,
        }
    }
}

/// `(γ₋: P₋ → Q₋, γ₊: P₊ → Q₊)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairHom {
    pub minus: Matrix,
    pub plus: Matrix,
}

impl PairHom {
    pub fn identity(p: &JordanPair) -> Self {
        PairHom {
            minus: Matrix::identity(p.field(), p.dim(Sign::Minus)),
            plus: Matrix::identity(p.field(), p.dim(Sign::Plus)),
        }
    }

    pub fn zero(p: &JordanPair, q: &JordanPair) -> Self {
        PairHom {
            minus: Matrix::zeros(p.field(), q.dim(Sign::Minus), p.dim(Sign::Minus)),
            plus: Matrix::zeros(p.field(), q.dim(Sign::Plus), p.dim(Sign::Plus)),
        }
    }

    pub fn map(&self, s: Sign) -> &Matrix {
        match s {
            Sign::Minus => &self.minus,
            Sign::Plus => &self.plus,
        }
    }
}

/// `γ_σ {a,b,c}_σ = {γ_σ a, γ_{-σ} b, γ_σ c}_σ` on basis triples, where the
/// maps send `P_σ` into `Q_{τ(σ)}` and `τ` is the identity or the flip.
fn check_pair_law(
    p: &JordanPair,
    q: &JordanPair,
    maps: impl Fn(Sign) -> Matrix,
    target: impl Fn(Sign) -> Sign,
    law: &str,
) -> CheckResult {
    let mut count = 0;
    for s in SIGNS {
        let (gs, gt) = (maps(s), maps(s.flip()));
        let qs = target(s);
        if gs.cols() != p.dim(s) || gs.rows() != q.dim(qs) {
            return Err(Violation::new(format!("{law} shape{}", s.symbol()), vec![gs.rows(), gs.cols()]));
        }
        let (ds, dt) = (p.dim(s), p.dim(s.flip()));
        let img_s = gs.col_vectors();
        let img_t = gt.col_vectors();
        for i in 0..ds {
            for j in 0..dt {
                for k in 0..ds {
                    let lhs = gs.mul_vec(&p.triple(s, &p.unit(s, i), &p.unit(s.flip(), j), &p.unit(s, k)));
                    let rhs = q.triple(qs, &img_s[i], &img_t[j], &img_s[k]);
                    if lhs != rhs {
                        return Err(Violation::new(format!("{law}{}", s.symbol()), vec![i, j, k]));
                    }
                }
            }
        }
        count += ds * dt * ds;
    }
    let mut cert = Certificate::new();
    cert.record(law, count);
    Ok(cert)
}

pub fn check_pair_hom(g: &PairHom, p: &JordanPair, q: &JordanPair) -> CheckResult {
    check_pair_law(p, q, |s| g.map(s).clone(), |s| s, "pair homomorphism")
}

/// Hom law into the opposite pair plus `ε_{-σ} ε_σ = id`.
pub fn check_involution(p: &JordanPair, e: &PairInvolution) -> CheckResult {
    let mut cert = check_pair_law(p, p, |s| e.map(s).clone(), Sign::flip, "involution homomorphism")?;
    for s in SIGNS {
        let sq = e.map(s.flip()).mul(e.map(s));
        if sq != Matrix::identity(p.field(), p.dim(s)) {
            let bad = (0..p.dim(s)).find(|&c| sq.col(c) != unit_vec(p.field(), p.dim(s), c)).unwrap_or(0);
            return Err(Violation::new(format!("period two{}", s.symbol()), vec![bad]));
        }
    }
    cert.record("period two", p.dim(Sign::Minus) + p.dim(Sign::Plus));
    Ok(cert)
}

/// Pair hom that also intertwines the involutions: `ε_Q,σ γ_σ = γ_{-σ} ε_P,σ`.
pub fn check_involutary_hom(
    g: &PairHom,
    (p, ep): (&JordanPair, &PairInvolution),
    (q, eq): (&JordanPair, &PairInvolution),
) -> CheckResult {
    let mut cert = check_pair_hom(g, p, q)?;
    for s in SIGNS {
        let lhs = eq.map(s).mul(g.map(s));
        let rhs = g.map(s.flip()).mul(ep.map(s));
        if lhs != rhs {
            let bad = (0..lhs.cols()).find(|&c| lhs.col(c) != rhs.col(c)).unwrap_or(0);
            return Err(Violation::new(format!("involutary{}", s.symbol()), vec![bad]));
        }
    }
    cert.record("involutary", 2);
    Ok(cert)
}

pub fn check_triple_hom(g: &Matrix, t: &JordanTriple, u: &JordanTriple) -> CheckResult {
    if g.cols() != t.dim() || g.rows() != u.dim() {
        return Err(Violation::new("triple homomorphism shape", vec![g.rows(), g.cols()]));
    }
    let img = g.col_vectors();
    let d = t.dim();
    let e = |i| unit_vec(t.field(), d, i);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if g.mul_vec(&t.triple(&e(i), &e(j), &e(k))) != u.triple(&img[i], &img[j], &img[k]) {
                    return Err(Violation::new("triple homomorphism", vec![i, j, k]));
                }
            }
        }
    }
    let mut cert = Certificate::new();
    cert.record("triple homomorphism", d * d * d);
    Ok(cert)
}

/// Multiplicative and unital.
pub fn check_algebra_hom(g: &Matrix, j: &JordanAlgebra, k: &JordanAlgebra) -> CheckResult {
    if g.cols() != j.dim() || g.rows() != k.dim() {
        return Err(Violation::new("algebra homomorphism shape", vec![g.rows(), g.cols()]));
    }
    let img = g.col_vectors();
    for a in 0..j.dim() {
        for b in 0..j.dim() {
            if g.mul_vec(&j.mul(&j.unit(a), &j.unit(b))) != k.mul(&img[a], &img[b]) {
                return Err(Violation::new("algebra homomorphism", vec![a, b]));
            }
        }
    }
    if g.mul_vec(j.identity()) != k.identity() {
        return Err(Violation::new("unital", vec![]));
    }
    let mut cert = Certificate::new();
    cert.record("algebra homomorphism", j.dim() * j.dim());
    cert.record("unital", 1);
    Ok(cert)
}

fn double_jts_unchecked(t: &JordanTriple) -> (JordanPair, PairInvolution) {
    let pair = JordanPair {
        minus: t.module.clone(),
        plus: t.module.clone(),
        t_minus: t.product.clone(),
        t_plus: t.product.clone(),
    };
    let id = Matrix::identity(t.field(), t.dim());
    (
        pair,
        PairInvolution {
            minus: id.clone(),
            plus: id,
        },
    )
}

/// `(T, T)` with the identity as canonical involution.
pub fn double_jts(t: &Certified<JordanTriple>) -> (Certified<JordanPair>, PairInvolution) {
    let (pair, inv) = double_jts_unchecked(t);
    let cert = check_pair(&pair).expect("double of a certified triple is a pair");
    check_involution(&pair, &inv).expect("identity is an involution of a double");
    (Certified::assume(pair, cert), inv)
}

/// `{a,b,c} = (ab)c + a(bc) − b(ca)`.
pub fn algebra_to_triple(j: &Certified<JordanAlgebra>) -> Certified<JordanTriple> {
    let d = j.dim();
    let mut t = TrilinearMap::zero(j.field(), [d, d, d], d);
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let (x, y, z) = (j.unit(a), j.unit(b), j.unit(c));
                let v = vec_sub(
                    &vec_add(&j.mul(&j.mul(&x, &y), &z), &j.mul(&x, &j.mul(&y, &z))),
                    &j.mul(&y, &j.mul(&z, &x)),
                );
                t.set_column(a, b, c, &v);
            }
        }
    }
    let triple = JordanTriple {
        module: j.module.clone(),
        product: t,
    };
    let cert = check_triple(&triple).expect("triple of a Jordan algebra satisfies the axioms");
    Certified::assume(triple, cert)
}

/// The doubled pair of `algebra_to_triple(j)` and the identity, placed in `P₊`.
pub fn algebra_to_pair(j: &Certified<JordanAlgebra>) -> (Certified<JordanPair>, Vector) {
    let (pair, _) = double_jts(&algebra_to_triple(j));
    let one = j.identity().to_vec();
    debug_assert!(is_invertible(&pair, Sign::Plus, &one));
    (pair, one)
}

/// Whether `a ↦ {b, a, b}_σ` from `P_{-σ}` to `P_σ` is bijective.
pub fn is_invertible(p: &JordanPair, s: Sign, b: &[Scalar]) -> bool {
    let (ds, dt) = (p.dim(s), p.dim(s.flip()));
    if ds != dt || b.len() != ds {
        return false;
    }
    let cols: Vec<Vector> = (0..dt).map(|i| p.triple(s, b, &p.unit(s.flip(), i), b)).collect();
    Matrix::from_cols(p.field(), ds, &cols).rank() == ds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn k1() -> JordanAlgebra {
        let f = q();
        let mut m = BilinearMap::zero(f, 1, 1, 1);
        m.add_entry(0, 0, 0, f.one()).unwrap();
        JordanAlgebra::new(FreeModule::numbered(f, "u", 1), m, vec![f.one()]).unwrap()
    }

    fn diag(n: usize) -> JordanAlgebra {
        let f = q();
        let mut m = BilinearMap::zero(f, n, n, n);
        for i in 0..n {
            m.add_entry(i, i, i, f.one()).unwrap();
        }
        JordanAlgebra::new(FreeModule::numbered(f, "d", n), m, vec![f.one(); n]).unwrap()
    }

    fn mat2sym() -> JordanAlgebra {
        // basis E11, E12, E21, E22; product (ab + ba)/2
        let f = q();
        let idx = |r: usize, c: usize| 2 * r + c;
        let mut m = BilinearMap::zero(f, 4, 4, 4);
        for a in 0..4 {
            for b in 0..4 {
                let (ra, ca, rb, cb) = (a / 2, a % 2, b / 2, b % 2);
                if ca == rb {
                    m.add_entry(a, b, idx(ra, cb), f.ratio(1, 2)).unwrap();
                }
                if cb == ra {
                    m.add_entry(a, b, idx(rb, ca), f.ratio(1, 2)).unwrap();
                }
            }
        }
        let one = vec![f.one(), f.zero(), f.zero(), f.one()];
        JordanAlgebra::new(FreeModule::numbered(f, "E", 4), m, one).unwrap()
    }

    #[test]
    fn algebra_certificates() {
        assert!(check_algebra(&k1(), DEFAULT_SEED).is_ok());
        assert!(check_algebra(&mat2sym(), DEFAULT_SEED).is_ok());
        assert!(check_algebra(&diag(3), DEFAULT_SEED).is_ok());
    }

    #[test]
    fn noncommutative_product_rejected() {
        let f = q();
        let mut m = BilinearMap::zero(f, 2, 2, 2);
        m.add_entry(0, 0, 0, f.one()).unwrap();
        m.add_entry(1, 1, 1, f.one()).unwrap();
        m.add_entry(0, 1, 0, f.one()).unwrap();
        let j = JordanAlgebra::new(FreeModule::numbered(f, "e", 2), m, vec![f.one(), f.one()]).unwrap();
        let v = check_algebra(&j, DEFAULT_SEED).unwrap_err();
        assert_eq!(v.law, "commutativity");
        assert_eq!(v.witness, vec![0, 1]);
    }

    #[test]
    fn triple_from_algebra() {
        let f = q();
        let t = algebra_to_triple(&certify_algebra(k1(), DEFAULT_SEED).unwrap());
        let one = vec![f.one()];
        let three = vec![f.from_i64(3)];
        assert_eq!(t.triple(&one, &[f.from_i64(2)], &three), vec![f.from_i64(6)]);
        let d2 = certify_algebra(diag(2), DEFAULT_SEED).unwrap();
        let t2 = algebra_to_triple(&d2);
        let a = vec![f.from_i64(2), f.from_i64(3)];
        let b = vec![f.from_i64(5), f.from_i64(7)];
        let c = vec![f.from_i64(11), f.from_i64(13)];
        assert_eq!(t2.triple(&a, &b, &c), vec![f.from_i64(110), f.from_i64(273)]);
        let j = certify_algebra(mat2sym(), DEFAULT_SEED).unwrap();
        let t = algebra_to_triple(&j);
        for i in 0..4 {
            assert_eq!(t.triple(j.identity(), j.identity(), &j.unit(i)), j.unit(i));
        }
    }

    #[test]
    fn v_operator_of_doubled_k1() {
        let f = q();
        let (p, one) = algebra_to_pair(&certify_algebra(k1(), DEFAULT_SEED).unwrap());
        let v = v_operator(&p, Sign::Plus, &one, &one).unwrap();
        assert_eq!(v, Matrix::identity(f, 1));
        let zero = vec![f.zero()];
        assert!(v_operator(&p, Sign::Plus, &zero, &one).unwrap().is_zero());
        let two = vec![f.from_i64(2)];
        assert_eq!(v_operator(&p, Sign::Plus, &two, &one).unwrap(), v.scale(&f.from_i64(2)));
        assert!(v_operator(&p, Sign::Plus, &[], &one).is_err());
    }

    #[test]
    fn invertibility() {
        let f = q();
        let (p, one) = algebra_to_pair(&certify_algebra(k1(), DEFAULT_SEED).unwrap());
        assert!(is_invertible(&p, Sign::Plus, &one));
        assert!(!is_invertible(&p, Sign::Plus, &[f.zero()]));
        let (p2, one2) = algebra_to_pair(&certify_algebra(diag(2), DEFAULT_SEED).unwrap());
        assert!(is_invertible(&p2, Sign::Plus, &one2));
        assert!(!is_invertible(&p2, Sign::Plus, &[f.one(), f.zero()]));
    }

    #[test]
    fn double_and_opposite() {
        let t = algebra_to_triple(&certify_algebra(mat2sym(), DEFAULT_SEED).unwrap());
        let (p, e) = double_jts(&t);
        assert!(check_involution(&p, &e).is_ok());
        let op = opposite(&p);
        assert_eq!(opposite(&op), *p);
        let swap = PairHom {
            minus: e.minus.clone(),
            plus: e.plus.clone(),
        };
        assert!(check_pair_hom(&swap, &p, &op).is_ok());
        let zero = JordanPair::zero(q(), 0, 0);
        assert!(check_pair(&zero).is_ok());
    }

    #[test]
    fn hom_checks() {
        let f = q();
        let j = certify_algebra(diag(2), DEFAULT_SEED).unwrap();
        let swap = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        assert!(check_algebra_hom(&swap, &j, &j).is_ok());
        let t = algebra_to_triple(&j);
        assert!(check_triple_hom(&swap, &t, &t).is_ok());
        assert!(check_triple_hom(&Matrix::zeros(f, 2, 2), &t, &t).is_ok());
        let bad = Matrix::from_i64(f, &[&[1, 1], &[0, 1]]);
        assert!(check_triple_hom(&bad, &t, &t).is_err());
        let (p, e) = double_jts(&t);
        assert!(check_pair_hom(&PairHom::identity(&p), &p, &p).is_ok());
        assert!(check_pair_hom(&PairHom::zero(&p, &p), &p, &p).is_ok());
        let g = PairHom {
            minus: swap.clone(),
            plus: swap,
        };
        assert!(check_involutary_hom(&g, (&p, &e), (&p, &e)).is_ok());
    }
}
