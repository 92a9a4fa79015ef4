//! The inner structure algebra, the TKK algebra, the relation submodule
//! `A ⊆ P₋ ⊗ P₊` and the universal algebra `uTKK(P)` with its central
//! extension `υ: uTKK(P) → TKK(P)`, plus the decorations coming from triple
//! systems and unital algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cert::{Certified, Violation};
use crate::exactla::{
    intersection, quotient, span_contains, span_echelon, span_rank, subspace_equal, unit_vec, vec_add, vec_scale,
    vec_sub, Echelon, Field, Matrix, QuotientSpace, Scalar, Vector,
};
use crate::freemod::{tensor_index, tensor_vectors, BilinearMap, FreeModule};
use crate::jordan::{algebra_to_pair, algebra_to_triple, double_jts, JordanAlgebra, JordanPair, JordanTriple, Sign};
use crate::liegrad::{
    certify_lie, check_anti_involution, check_sl2, forget_to_pair, is_zero_perfect,
    AntiGradedInvolution, CentralExtension, GradedHom, GradedLieAlgebra, LieError, Sl2Triple,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TkkError {
    #[error("{0}")]
    Assertion(String),
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("relation spans differ: {0}")]
    SpanMismatch(String),
    #[error("neither printed sl2-triple satisfies the relations")]
    NeitherForm,
}

fn assertion(msg: impl Into<String>) -> TkkError {
    TkkError::Assertion(msg.into())
}

/// A pair of operators `(X₋, X₊)` acting on `(P₋, P₊)`.
pub type OpPair = (Matrix, Matrix);

fn pair_commutator(x: &OpPair, y: &OpPair) -> OpPair {
    (x.0.commutator(&y.0), x.1.commutator(&y.1))
}

fn pair_combination(field: Field, dims: (usize, usize), ops: &[&OpPair], coeffs: &[Scalar]) -> OpPair {
    let mut acc = (Matrix::zeros(field, dims.0, dims.0), Matrix::zeros(field, dims.1, dims.1));
    for (op, c) in ops.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()) {
        acc = (acc.0.add(&op.0.scale(c)), acc.1.add(&op.1.scale(c)));
    }
    acc
}

fn flatten_pair(x: &OpPair) -> Vector {
    let mut v = x.0.flatten();
    v.extend(x.1.flatten());
    v
}

/// `ν(a, b) = (V_{a,b}, −V_{b,a})` for `a ∈ P₋`, `b ∈ P₊`.
pub fn nu(p: &JordanPair, a: &[Scalar], b: &[Scalar]) -> Result<OpPair, TkkError> {
    if a.len() != p.dim(Sign::Minus) || b.len() != p.dim(Sign::Plus) {
        return Err(assertion("ν takes a ∈ P₋ and b ∈ P₊"));
    }
    let minus = p.product(Sign::Minus).partial_matrix(a, b);
    let plus = p.product(Sign::Plus).partial_matrix(b, a);
    Ok((minus, plus.scale(&-p.field().one())))
}

/// `X · R = X₋R + R X₊ᵀ` for a tensor with coefficient matrix `R`.
pub fn act_on_tensor(x: &OpPair, r: &[Scalar], dims: (usize, usize)) -> Vector {
    let f = x.0.field();
    let rm = Matrix::from_flat(f, dims.0, dims.1, r.to_vec());
    x.0.mul(&rm).add(&rm.mul(&x.1.transpose())).flatten()
}

#[derive(Clone, Debug)]
pub struct InnerStructureAlgebra {
    field: Field,
    dims: (usize, usize),
    basis: Vec<OpPair>,
    span: Echelon,
    pivots: Vec<usize>,
    generators: Vec<OpPair>,
    bracket: BilinearMap,
}

impl InnerStructureAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[OpPair] {
        &self.basis
    }

    /// `ν(e_i, f_j)` at position `i·dim P₊ + j`.
    pub fn generator(&self, i: usize, j: usize) -> &OpPair {
        &self.generators[tensor_index(self.dims.1, i, j)]
    }

    pub fn generators(&self) -> &[OpPair] {
        &self.generators
    }

    pub fn structure(&self) -> &BilinearMap {
        &self.bracket
    }

    /// Coordinates of an operator pair in the basis, `None` outside the span.
    pub fn coords(&self, x: &OpPair) -> Option<Vector> {
        let flat = flatten_pair(x);
        if !self.span.contains(&flat) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| flat[c].clone()).collect())
    }

    pub fn element(&self, coords: &[Scalar]) -> OpPair {
        let ops: Vec<&OpPair> = self.basis.iter().collect();
        pair_combination(self.field, self.dims, &ops, coords)
    }

    /// Flattened `(X₋ | X₊)` coordinates, the ambient space of the span.
    pub fn flat_dim(&self) -> usize {
        self.dims.0 * self.dims.0 + self.dims.1 * self.dims.1
    }

    pub fn contains_flat(&self, v: &[Scalar]) -> bool {
        self.span.contains(v)
    }
}

/// RREF basis of `span{ν(e_i, f_j)}` in `(X₋ | X₊)` coordinates, with the
/// commutator bracket and the identity
/// `[ν(a,b), ν(c,d)] = ν(ν(a,b)c, d) + ν(c, ν(a,b)d)` checked on basis quadruples.
pub fn inner_structure_algebra(p: &Certified<JordanPair>) -> Result<InnerStructureAlgebra, TkkError> {
    let f = p.field();
    let (dm, dp) = (p.dim(Sign::Minus), p.dim(Sign::Plus));
    let mut generators = Vec::with_capacity(dm * dp);
    for i in 0..dm {
        for j in 0..dp {
            generators.push(nu(p, &unit_vec(f, dm, i), &unit_vec(f, dp, j))?);
        }
    }
    let flat_dim = dm * dm + dp * dp;
    let flats: Vec<Vector> = generators.iter().map(flatten_pair).collect();
    let span = span_echelon(f, flat_dim, &flats);
    let (rows, pivots) = span.rref_rows();
    let basis: Vec<OpPair> = rows
        .into_iter()
        .map(|r| {
            let (a, b) = r.split_at(dm * dm);
            (Matrix::from_flat(f, dm, dm, a.to_vec()), Matrix::from_flat(f, dp, dp, b.to_vec()))
        })
        .collect();
    let m = basis.len();
    let mut ins = InnerStructureAlgebra {
        field: f,
        dims: (dm, dp),
        basis,
        span,
        pivots,
        generators,
        bracket: BilinearMap::zero(f, m, m, m),
    };
    let mut bracket = BilinearMap::zero(f, m, m, m);
    for k in 0..m {
        for l in 0..m {
            let c = pair_commutator(&ins.basis[k], &ins.basis[l]);
            let coords = ins
                .coords(&c)
                .ok_or_else(|| assertion(format!("ins is not closed under the bracket at ({k}, {l})")))?;
            bracket.set_column(k, l, &coords);
        }
    }
    ins.bracket = bracket;
    check_nu_bracket(p, &ins)?;
    Ok(ins)
}

fn check_nu_bracket(p: &JordanPair, ins: &InnerStructureAlgebra) -> Result<(), TkkError> {
    let f = p.field();
    let (dm, dp) = ins.dims;
    let column = |j: usize| -> Vec<&OpPair> { (0..dm).map(|i| ins.generator(i, j)).collect() };
    let row = |i: usize| -> Vec<&OpPair> { (0..dp).map(|j| ins.generator(i, j)).collect() };
    for i in 0..dm {
        for j in 0..dp {
            let x = ins.generator(i, j);
            for k in 0..dm {
                let xc = x.0.col(k);
                let rows_k = row(k);
                for l in 0..dp {
                    let lhs = pair_commutator(x, ins.generator(k, l));
                    let first = pair_combination(f, ins.dims, &column(l), &xc);
                    let second = pair_combination(f, ins.dims, &rows_k, &x.1.col(l));
                    if lhs != (first.0.add(&second.0), first.1.add(&second.1)) {
                        return Err(Violation::new("nu bracket", vec![i, j, k, l]).into());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Action of each degree-0 basis element on `(P₋, P₊)` together with the
/// brackets of the degree-0 part, from which the 3-graded algebra is built.
struct Blocks<'a> {
    field: Field,
    labels: Vec<String>,
    dims: (usize, usize, usize),
    cross: &'a dyn Fn(usize, usize) -> Vector,
    action: &'a [OpPair],
    zero: &'a dyn Fn(usize, usize) -> Vector,
}

/// `[a + X + b, c + Y + d] = (Xc − Ya) + ([X,Y] + ⟨a,d⟩ − ⟨c,b⟩) + (Xd − Yb)`
/// with basis order `P₋, L₀, P₊`.
fn assemble(b: Blocks<'_>) -> Result<GradedLieAlgebra, TkkError> {
    let (dm, d0, dp) = b.dims;
    let n = dm + d0 + dp;
    let (o0, op) = (dm, dm + d0);
    let f = b.field;
    let mut br = BilinearMap::zero(f, n, n, n);
    let put = |br: &mut BilinearMap, x: usize, y: usize, offset: usize, v: &[Scalar]| {
        for (r, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            br.add_entry(x, y, offset + r, c.clone()).expect("in range");
            br.add_entry(y, x, offset + r, -c).expect("in range");
        }
    };
    for i in 0..dm {
        for j in 0..dp {
            put(&mut br, i, op + j, o0, &(b.cross)(i, j));
        }
    }
    for (k, x) in b.action.iter().enumerate() {
        for i in 0..dm {
            put(&mut br, o0 + k, i, 0, &x.0.col(i));
        }
        for j in 0..dp {
            put(&mut br, o0 + k, op + j, op, &x.1.col(j));
        }
    }
    for k in 0..d0 {
        for l in (k + 1)..d0 {
            put(&mut br, o0 + k, o0 + l, o0, &(b.zero)(k, l));
        }
    }
    let degrees = [(-1, dm), (0, d0), (1, dp)]
        .into_iter()
        .flat_map(|(d, c)| std::iter::repeat_n(d, c))
        .collect();
    let module = FreeModule::new(f, b.labels).map_err(|e| assertion(e.to_string()))?;
    Ok(GradedLieAlgebra::new(module, degrees, br)?)
}

fn component_labels(p: &JordanPair, s: Sign) -> Vec<String> {
    p.module(s).labels().iter().map(|l| format!("{l}_{}", s.symbol())).collect()
}

#[derive(Clone, Debug)]
pub struct TkkAlgebra {
    pub pair: Certified<JordanPair>,
    pub ins: InnerStructureAlgebra,
    pub algebra: Certified<GradedLieAlgebra>,
}

impl TkkAlgebra {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.pair.dim(Sign::Minus), self.ins.dim(), self.pair.dim(Sign::Plus))
    }
}

/// `P₋ ⊕ ins(P) ⊕ P₊`.
pub fn tkk(p: &Certified<JordanPair>) -> Result<TkkAlgebra, TkkError> {
    let f = p.field();
    let ins = inner_structure_algebra(p)?;
    let (dm, dp) = (p.dim(Sign::Minus), p.dim(Sign::Plus));
    let cross = |i: usize, j: usize| ins.coords(ins.generator(i, j)).expect("generator lies in its span");
    let zero = |k: usize, l: usize| ins.structure().basis_dense(k, l);
    let mut labels = component_labels(p, Sign::Minus);
    labels.extend((0..ins.dim()).map(|k| format!("X{k}")));
    labels.extend(component_labels(p, Sign::Plus));
    let l = assemble(Blocks {
        field: f,
        labels,
        dims: (dm, ins.dim(), dp),
        cross: &cross,
        action: ins.basis(),
        zero: &zero,
    })?;
    let algebra = certify_lie(l)?;
    if !is_zero_perfect(&algebra) {
        return Err(assertion("TKK(P) is not 0-perfect"));
    }
    if !forget_to_pair(&algebra)?.same_structure(p) {
        return Err(assertion("the pair of TKK(P) differs from P"));
    }
    Ok(TkkAlgebra {
        pair: p.clone(),
        ins,
        algebra,
    })
}

/// `ν(e_i,f_j)(e_k⊗f_l) + ν(e_k,f_l)(e_i⊗f_j)` over all basis quadruples.
pub fn relation_submodule(p: &JordanPair) -> Vec<Vector> {
    let f = p.field();
    let (dm, dp) = (p.dim(Sign::Minus), p.dim(Sign::Plus));
    let ops: Vec<OpPair> = (0..dm)
        .flat_map(|i| (0..dp).map(move |j| (i, j)))
        .map(|(i, j)| nu(p, &unit_vec(f, dm, i), &unit_vec(f, dp, j)).expect("components"))
        .collect();
    let n = dm * dp;
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let a = act_on_tensor(&ops[x], &unit_vec(f, n, y), (dm, dp));
            let b = act_on_tensor(&ops[y], &unit_vec(f, n, x), (dm, dp));
            out.push(vec_add(&a, &b));
        }
    }
    out
}

/// Compares the span of the generators with `span{ν(a,b)(a⊗b)}` over seeded
/// random `(a, b)`. Returns `(sample ⊆ A, A ⊆ sample)`.
pub fn relation_sampling_oracle(p: &JordanPair, seed: u64) -> (bool, bool) {
    let f = p.field();
    let (dm, dp) = (p.dim(Sign::Minus), p.dim(Sign::Plus));
    let n = dm * dp;
    let gens = relation_submodule(p);
    let target = span_rank(f, n, &gens);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample = Echelon::new(f, n);
    let mut vectors = Vec::new();
    let cap = 4 * n + 20;
    for _ in 0..cap {
        if sample.rank() == target && vectors.len() >= n {
            break;
        }
        let a: Vector = (0..dm).map(|_| f.from_i64(rng.gen_range(-5..=5))).collect();
        let b: Vector = (0..dp).map(|_| f.from_i64(rng.gen_range(-5..=5))).collect();
        let op = nu(p, &a, &b).expect("components");
        let v = act_on_tensor(&op, &tensor_vectors(&a, &b), (dm, dp));
        sample.insert(&v);
        vectors.push(v);
    }
    (span_contains(f, &gens, &vectors, n), span_contains(f, &vectors, &gens, n))
}

#[derive(Clone, Debug)]
pub struct UtkkAlgebra {
    pub pair: Certified<JordanPair>,
    pub relations: QuotientSpace,
    pub algebra: Certified<GradedLieAlgebra>,
    pub tkk: TkkAlgebra,
    pub upsilon: Certified<CentralExtension>,
}

impl UtkkAlgebra {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.pair.dim(Sign::Minus), self.relations.quotient_dim(), self.pair.dim(Sign::Plus))
    }

    pub fn kernel_dim(&self) -> usize {
        self.upsilon.kernel.len()
    }

    /// `⟨a, b⟩` as a vector of the whole algebra.
    pub fn bracket_pair(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let coset = self.relations.project(&tensor_vectors(a, b));
        self.algebra.embed(&coset, 0)
    }

    /// Relation submodule `A` as an RREF basis.
    pub fn relation_basis(&self) -> &[Vector] {
        self.relations.subspace_basis()
    }
}

/// `uTKK(P) = P₋ ⊕ (P₋⊗P₊)/A ⊕ P₊` and `υ`.
pub fn utkk(p: &Certified<JordanPair>) -> Result<UtkkAlgebra, TkkError> {
    build_utkk(p, &relation_submodule(p))
}

fn build_utkk(p: &Certified<JordanPair>, relations: &[Vector]) -> Result<UtkkAlgebra, TkkError> {
    let f = p.field();
    let (dm, dp) = (p.dim(Sign::Minus), p.dim(Sign::Plus));
    let tk = tkk(p)?;
    let ins = &tk.ins;
    let q = quotient(f, dm * dp, relations);
    for (n, r) in q.subspace_basis().iter().enumerate() {
        let ops: Vec<&OpPair> = ins.generators().iter().collect();
        let lam = pair_combination(f, (dm, dp), &ops, r);
        if !lam.0.is_zero() || !lam.1.is_zero() {
            return Err(assertion(format!("λ does not vanish on relation {n}")));
        }
        for (g, x) in ins.generators().iter().enumerate() {
            if !q.contains(&act_on_tensor(x, r, (dm, dp))) {
                return Err(assertion(format!("relation {n} is not invariant under generator {g}")));
            }
        }
    }
    // basis coset k is ⟨e_i, f_j⟩ for the k-th free column i·dp + j
    let free: Vec<(usize, usize)> = q.free_cols().iter().map(|&c| (c / dp, c % dp)).collect();
    let action: Vec<OpPair> = free.iter().map(|&(i, j)| ins.generator(i, j).clone()).collect();
    let cross = |i: usize, j: usize| q.project(&unit_vec(f, dm * dp, tensor_index(dp, i, j)));
    let zero = |k: usize, l: usize| {
        let (i, j) = free[l];
        q.project(&act_on_tensor(&action[k], &unit_vec(f, dm * dp, tensor_index(dp, i, j)), (dm, dp)))
    };
    let mut labels = component_labels(p, Sign::Minus);
    labels.extend(
        free.iter()
            .map(|&(i, j)| format!("<{},{}>", p.module(Sign::Minus).label(i), p.module(Sign::Plus).label(j))),
    );
    labels.extend(component_labels(p, Sign::Plus));
    let d0 = free.len();
    let l = assemble(Blocks {
        field: f,
        labels,
        dims: (dm, d0, dp),
        cross: &cross,
        action: &action,
        zero: &zero,
    })?;
    let algebra = certify_lie(l)?;
    if !is_zero_perfect(&algebra) {
        return Err(assertion("uTKK(P) is not 0-perfect"));
    }
    if !forget_to_pair(&algebra)?.same_structure(p) {
        return Err(assertion("the pair of uTKK(P) differs from P"));
    }
    // υ = id ⊕ μ ⊕ id
    let (n, m) = (algebra.dim(), tk.algebra.dim());
    let mut ups = Matrix::zeros(f, m, n);
    for i in 0..dm {
        ups.set(i, i, f.one());
    }
    for j in 0..dp {
        ups.set(m - dp + j, n - dp + j, f.one());
    }
    for (k, &(i, j)) in free.iter().enumerate() {
        let c = ins.coords(ins.generator(i, j)).expect("generator lies in its span");
        for (r, x) in c.into_iter().enumerate() {
            ups.set(dm + r, dm + k, x);
        }
    }
    let upsilon = CentralExtension::certify(algebra.clone(), tk.algebra.clone(), GradedHom { matrix: ups })?;
    Ok(UtkkAlgebra {
        pair: p.clone(),
        relations: q,
        algebra,
        tkk: tk,
        upsilon,
    })
}

/// `κ̂(a₋ + ⟨c,d⟩ + b₊) = b₋ − ⟨d,c⟩ + a₊` on `uTKK` of a doubled triple,
/// and `κ̄(a₋ + ν(c,d) + b₊) = b₋ − ν(d,c) + a₊` on `TKK`.
#[derive(Clone, Debug)]
pub struct UtkkInvolution {
    pub utkk: UtkkAlgebra,
    pub kappa_hat: AntiGradedInvolution,
    pub kappa_bar: AntiGradedInvolution,
}

pub fn utkk_involution(t: &Certified<JordanTriple>) -> Result<UtkkInvolution, TkkError> {
    let f = t.field();
    let d = t.dim();
    let (p, _) = double_jts(t);
    let u = utkk(&p)?;
    let n = u.algebra.dim();
    let mut kh = Matrix::zeros(f, n, n);
    for i in 0..d {
        kh.set(n - d + i, i, f.one());
        kh.set(i, n - d + i, f.one());
    }
    for (k, &c) in u.relations.free_cols().iter().enumerate() {
        let (i, j) = (c / d, c % d);
        let swapped = u.relations.project(&unit_vec(f, d * d, tensor_index(d, j, i)));
        for (r, x) in swapped.into_iter().enumerate() {
            kh.set(d + r, d + k, -x);
        }
    }
    let kappa_hat = AntiGradedInvolution { matrix: kh };
    check_anti_involution(&u.algebra, &kappa_hat)?;

    let tk = &u.tkk;
    let m = tk.algebra.dim();
    let mut kb = Matrix::zeros(f, m, m);
    for i in 0..d {
        kb.set(m - d + i, i, f.one());
        kb.set(i, m - d + i, f.one());
    }
    for (k, x) in tk.ins.basis().iter().enumerate() {
        // −ν(d,c) is ν(c,d) with its two components exchanged
        let swapped = (x.1.clone(), x.0.clone());
        let c = tk
            .ins
            .coords(&swapped)
            .ok_or_else(|| assertion("component swap leaves ins(P)"))?;
        for (r, v) in c.into_iter().enumerate() {
            kb.set(d + r, d + k, v);
        }
    }
    let kappa_bar = AntiGradedInvolution { matrix: kb };
    check_anti_involution(&tk.algebra, &kappa_bar)?;
    let ups = &u.upsilon.map.matrix;
    if ups.mul(&kappa_hat.matrix) != kappa_bar.matrix.mul(ups) {
        return Err(assertion("υ does not intertwine the involutions"));
    }
    Ok(UtkkInvolution {
        utkk: u,
        kappa_hat,
        kappa_bar,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2Form {
    /// `h = −⟨1, 2·1⟩`
    Statement,
    /// `h = ⟨2·1, 1⟩`
    Proof,
}

impl Sl2Form {
    pub fn name(self) -> &'static str {
        match self {
            Sl2Form::Statement => "h = -<1,2>",
            Sl2Form::Proof => "h = <2,1>",
        }
    }
}

#[derive(Clone, Debug)]
pub struct UtkkSl2 {
    pub utkk: UtkkAlgebra,
    pub form: Sl2Form,
    pub statement_holds: bool,
    pub proof_holds: bool,
    pub triple: Sl2Triple,
    /// `s̄ = (−ν(1, 2·1), 2·1₊, 1₋)` on `TKK`.
    pub tkk_triple: Sl2Triple,
}

/// Whether `ad h` acts on every basis vector of degree `i` as `2i`.
pub fn grading_matches(l: &GradedLieAlgebra, h: &[Scalar]) -> bool {
    let f = l.field();
    (0..l.dim()).all(|i| l.bracket(h, &l.unit(i)) == vec_scale(&l.unit(i), &f.from_i64(2 * l.degree(i) as i64)))
}

pub fn utkk_sl2(j: &Certified<JordanAlgebra>) -> Result<UtkkSl2, TkkError> {
    let f = j.field();
    let (p, one) = algebra_to_pair(j);
    let u = utkk(&p)?;
    let two = f.from_i64(2);
    let two_one = vec_scale(&one, &two);
    let e = u.algebra.embed(&two_one, 1);
    let ff = u.algebra.embed(&one, -1);
    let statement = Sl2Triple {
        h: vec_scale(&u.bracket_pair(&one, &two_one), &-f.one()),
        e: e.clone(),
        f: ff.clone(),
    };
    let proof = Sl2Triple {
        h: u.bracket_pair(&two_one, &one),
        e,
        f: ff,
    };
    let statement_holds = check_sl2(&u.algebra, &statement).is_ok();
    let proof_holds = check_sl2(&u.algebra, &proof).is_ok();
    let (form, triple) = match (statement_holds, proof_holds) {
        (true, _) => (Sl2Form::Statement, statement),
        (false, true) => (Sl2Form::Proof, proof),
        _ => return Err(TkkError::NeitherForm),
    };
    if !grading_matches(&u.algebra, &triple.h) {
        return Err(assertion("ad h grading differs from the construction grading"));
    }
    let tk = &u.tkk;
    let nu11 = nu(&p, &one, &two_one)?;
    let hb = tk
        .ins
        .coords(&nu11)
        .ok_or_else(|| assertion("ν(1,2) outside ins"))?;
    let tkk_triple = Sl2Triple {
        h: vec_scale(&tk.algebra.embed(&hb, 0), &-f.one()),
        e: tk.algebra.embed(&two_one, 1),
        f: tk.algebra.embed(&one, -1),
    };
    check_sl2(&tk.algebra, &tkk_triple)?;
    if !grading_matches(&tk.algebra, &tkk_triple.h) {
        return Err(assertion("ad h̄ grading differs from the construction grading"));
    }
    let ups = &u.upsilon.map.matrix;
    for (x, y) in [(&triple.h, &tkk_triple.h), (&triple.e, &tkk_triple.e), (&triple.f, &tkk_triple.f)] {
        if ups.mul_vec(x) != *y {
            return Err(assertion("υ does not carry ŝ to s̄"));
        }
    }
    Ok(UtkkSl2 {
        utkk: u,
        form,
        statement_holds,
        proof_holds,
        triple,
        tkk_triple,
    })
}

/// Full linearization of `a² ⊗ a − 1 ⊗ a³` over basis triples:
/// `(xy)⊗z + (yz)⊗x + (xz)⊗y − 1⊗((xy)z + (yz)x + (zx)y)`.
pub fn shortcut_relations(j: &JordanAlgebra) -> Vec<Vector> {
    let d = j.dim();
    let one = j.identity();
    let mut out = Vec::new();
    for a in 0..d {
        for b in a..d {
            for c in b..d {
                let (x, y, z) = (j.unit(a), j.unit(b), j.unit(c));
                let (xy, yz, xz) = (j.mul(&x, &y), j.mul(&y, &z), j.mul(&x, &z));
                let left = vec_add(
                    &vec_add(&tensor_vectors(&xy, &z), &tensor_vectors(&yz, &x)),
                    &tensor_vectors(&xz, &y),
                );
                let cube = vec_add(&vec_add(&j.mul(&xy, &z), &j.mul(&yz, &x)), &j.mul(&xz, &y));
                out.push(vec_sub(&left, &tensor_vectors(one, &cube)));
            }
        }
    }
    out
}

/// `uTKK(J)` with `⟨J,J⟩ = J⊗J / span{a²⊗a − 1⊗a³}`, after checking that
/// span equals the relation submodule of the doubled pair.
pub fn utkk_algebra_shortcut(j: &Certified<JordanAlgebra>) -> Result<UtkkAlgebra, TkkError> {
    let (p, _) = algebra_to_pair(j);
    let short = shortcut_relations(j);
    let full = relation_submodule(&p);
    let d = j.dim();
    if !subspace_equal(j.field(), &short, &full, d * d) {
        return Err(TkkError::SpanMismatch(format!(
            "shortcut rank {}, generator rank {}",
            span_rank(j.field(), d * d, &short),
            span_rank(j.field(), d * d, &full)
        )));
    }
    build_utkk(&p, &short)
}

fn omega(v: &[Scalar], d: usize) -> Vector {
    (0..d * d).map(|c| v[tensor_index(d, c % d, c / d)].clone()).collect()
}

/// Whether the swap `a⊗b ↦ b⊗a` maps every relation generator of the
/// doubled pair back into their span.
pub fn omega_stable(j: &Certified<JordanAlgebra>) -> bool {
    let (p, _) = algebra_to_pair(j);
    let gens = relation_submodule(&p);
    let d = j.dim();
    let swapped: Vec<Vector> = gens.iter().map(|g| omega(g, d)).collect();
    span_contains(j.field(), &gens, &swapped, d * d)
}

#[derive(Clone, Debug)]
pub struct SymmSkewSplit {
    pub a_dim: usize,
    pub symm: Vec<Vector>,
    pub skew: Vec<Vector>,
    /// Whether the printed `2a⊗a + 1⊗a² + a²⊗1` lies in `A`.
    pub printed_symm_in_a: bool,
}

/// Linearized `2a⊗a − 1⊗a² − a²⊗1`: `x⊗y + y⊗x − 1⊗xy − xy⊗1`.
pub fn symm_generators(j: &JordanAlgebra) -> Vec<Vector> {
    symm_with_sign(j, -j.field().one())
}

/// Linearized `2a⊗a + 1⊗a² + a²⊗1`.
pub fn printed_symm_generators(j: &JordanAlgebra) -> Vec<Vector> {
    symm_with_sign(j, j.field().one())
}

fn symm_with_sign(j: &JordanAlgebra, s: Scalar) -> Vec<Vector> {
    let d = j.dim();
    let one = j.identity();
    let mut out = Vec::new();
    for a in 0..d {
        for b in a..d {
            let (x, y) = (j.unit(a), j.unit(b));
            let xy = j.mul(&x, &y);
            let sym = vec_add(&tensor_vectors(&x, &y), &tensor_vectors(&y, &x));
            let tail = vec_add(&tensor_vectors(one, &xy), &tensor_vectors(&xy, one));
            out.push(vec_add(&sym, &vec_scale(&tail, &s)));
        }
    }
    out
}

/// Linearized `a²⊗a − a⊗a²`: `(xy)⊗z + (yz)⊗x + (xz)⊗y − z⊗xy − x⊗yz − y⊗xz`.
pub fn skew_generators(j: &JordanAlgebra) -> Vec<Vector> {
    let d = j.dim();
    let mut out = Vec::new();
    for a in 0..d {
        for b in a..d {
            for c in b..d {
                let (x, y, z) = (j.unit(a), j.unit(b), j.unit(c));
                let (xy, yz, xz) = (j.mul(&x, &y), j.mul(&y, &z), j.mul(&x, &z));
                let left = vec_add(
                    &vec_add(&tensor_vectors(&xy, &z), &tensor_vectors(&yz, &x)),
                    &tensor_vectors(&xz, &y),
                );
                let right = vec_add(
                    &vec_add(&tensor_vectors(&z, &xy), &tensor_vectors(&x, &yz)),
                    &tensor_vectors(&y, &xz),
                );
                out.push(vec_sub(&left, &right));
            }
        }
    }
    out
}

/// `A = (A ∩ S²J) ⊕ (A ∩ J∧J)` with both intersections compared against the
/// symmetric and skew spanning sets.
pub fn symm_skew_split(j: &Certified<JordanAlgebra>) -> Result<SymmSkewSplit, TkkError> {
    let f = j.field();
    let d = j.dim();
    let n = d * d;
    let (p, _) = algebra_to_pair(j);
    let a = relation_submodule(&p);
    let a_basis = span_echelon(f, n, &a).rref_rows().0;
    let mut s2 = Vec::new();
    let mut wedge = Vec::new();
    for x in 0..d {
        for y in x..d {
            let u = unit_vec(f, n, tensor_index(d, x, y));
            let w = unit_vec(f, n, tensor_index(d, y, x));
            s2.push(vec_add(&u, &w));
            if x != y {
                wedge.push(vec_sub(&u, &w));
            }
        }
    }
    let symm = intersection(f, &a_basis, &s2, n);
    let skew = intersection(f, &a_basis, &wedge, n);
    if !subspace_equal(f, &symm, &symm_generators(j), n) {
        return Err(TkkError::SpanMismatch("A ∩ S²(J) against the symmetric generators".into()));
    }
    if !subspace_equal(f, &skew, &skew_generators(j), n) {
        return Err(TkkError::SpanMismatch("A ∩ (J∧J) against the skew generators".into()));
    }
    let both: Vec<Vector> = symm.iter().chain(&skew).cloned().collect();
    if symm.len() + skew.len() != a_basis.len() || !subspace_equal(f, &both, &a_basis, n) {
        return Err(TkkError::SpanMismatch("the two parts do not sum to A".into()));
    }
    let printed_symm_in_a = span_contains(f, &a_basis, &printed_symm_generators(j), n);
    Ok(SymmSkewSplit {
        a_dim: a_basis.len(),
        symm,
        skew,
        printed_symm_in_a,
    })
}

/// The ±1 eigenspaces of `ν(x,y) ↦ −ν(y,x)` on `ins(T)`, in flattened
/// `(X₋ | X₊)` coordinates.
#[derive(Clone, Debug)]
pub struct InsSplit {
    pub ins_dim: usize,
    /// `span{ν(a,b) + ν(b,a)}`.
    pub minus_one: Vec<Vector>,
    /// `span{ν(a,b) − ν(b,a)}`.
    pub one: Vec<Vector>,
}

pub fn ins_decomposition_jts(t: &Certified<JordanTriple>) -> Result<InsSplit, TkkError> {
    let f = t.field();
    let d = t.dim();
    let (p, _) = double_jts(t);
    let ins = inner_structure_algebra(&p)?;
    let fd = ins.flat_dim();
    let mut plus_gens = Vec::new();
    let mut minus_gens = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let x = flatten_pair(ins.generator(a, b));
            let y = flatten_pair(ins.generator(b, a));
            minus_gens.push(vec_add(&x, &y));
            plus_gens.push(vec_sub(&x, &y));
        }
    }
    let minus_one = span_echelon(f, fd, &minus_gens).rref_rows().0;
    let one = span_echelon(f, fd, &plus_gens).rref_rows().0;
    let swap = |v: &Vector| -> Vector {
        let (a, b) = v.split_at(d * d);
        b.iter().chain(a).cloned().collect()
    };
    for v in &minus_one {
        if swap(v) != vec_scale(v, &-f.one()) {
            return Err(assertion("ins₋₁ is not the −1 eigenspace"));
        }
    }
    for v in &one {
        if swap(v) != *v {
            return Err(assertion("ins₁ is not the +1 eigenspace"));
        }
    }
    let all: Vec<Vector> = minus_one.iter().chain(&one).cloned().collect();
    let ins_flat: Vec<Vector> = ins.basis().iter().map(flatten_pair).collect();
    if minus_one.len() + one.len() != ins.dim() || !subspace_equal(f, &all, &ins_flat, fd) {
        return Err(assertion("ins₋₁ ⊕ ins₁ does not reconstruct ins(T)"));
    }
    Ok(InsSplit {
        ins_dim: ins.dim(),
        minus_one,
        one,
    })
}

/// For unital `J`: `ins₋₁ = span{(R_x, −R_x)}`.
pub fn right_multiplication_matches(j: &Certified<JordanAlgebra>) -> Result<bool, TkkError> {
    let f = j.field();
    let d = j.dim();
    let split = ins_decomposition_jts(&algebra_to_triple(j))?;
    let rs: Vec<Vector> = (0..d)
        .map(|x| {
            let r = j.right_mult(&j.unit(x));
            flatten_pair(&(r.clone(), r.scale(&-f.one())))
        })
        .collect();
    Ok(subspace_equal(f, &split.minus_one, &rs, 2 * d * d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{certify_algebra, DEFAULT_SEED};
    use crate::liegrad::check_graded_lie;

    fn q() -> Field {
        Field::Rational
    }

    fn k1() -> Certified<JordanAlgebra> {
        let f = q();
        let mut m = BilinearMap::zero(f, 1, 1, 1);
        m.add_entry(0, 0, 0, f.one()).unwrap();
        let j = JordanAlgebra::new(FreeModule::numbered(f, "u", 1), m, vec![f.one()]).unwrap();
        certify_algebra(j, DEFAULT_SEED).unwrap()
    }

    fn diag2() -> Certified<JordanAlgebra> {
        let f = q();
        let mut m = BilinearMap::zero(f, 2, 2, 2);
        m.add_entry(0, 0, 0, f.one()).unwrap();
        m.add_entry(1, 1, 1, f.one()).unwrap();
        let j = JordanAlgebra::new(FreeModule::numbered(f, "d", 2), m, vec![f.one(), f.one()]).unwrap();
        certify_algebra(j, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn nu_of_doubled_k1() {
        let f = q();
        let (p, one) = algebra_to_pair(&k1());
        let x = nu(&p, &one, &one).unwrap();
        assert_eq!(x, (Matrix::identity(f, 1), Matrix::identity(f, 1).scale(&-f.one())));
        let z = nu(&p, &[f.zero()], &one).unwrap();
        assert!(z.0.is_zero() && z.1.is_zero());
    }

    #[test]
    fn tkk_of_k1_is_sl2() {
        let (p, _) = algebra_to_pair(&k1());
        let t = tkk(&p).unwrap();
        assert_eq!(t.dims(), (1, 1, 1));
        assert!(relation_submodule(&p).iter().all(|v| v.iter().all(Scalar::is_zero)));
        let u = utkk(&p).unwrap();
        assert_eq!(u.dims(), (1, 1, 1));
        assert_eq!(u.kernel_dim(), 0);
    }

    #[test]
    fn zero_pair() {
        let p = crate::jordan::certify_pair(JordanPair::zero(q(), 0, 0)).unwrap();
        let t = tkk(&p).unwrap();
        assert_eq!(t.algebra.dim(), 0);
        assert_eq!(utkk(&p).unwrap().algebra.dim(), 0);
    }

    #[test]
    fn sl2_statement_form() {
        let s = utkk_sl2(&k1()).unwrap();
        assert_eq!(s.form, Sl2Form::Statement);
        assert!(!s.proof_holds);
    }

    #[test]
    fn diag2_pipelines() {
        let j = diag2();
        let u = utkk_algebra_shortcut(&j).unwrap();
        let (p, _) = algebra_to_pair(&j);
        assert_eq!(u.dims(), utkk(&p).unwrap().dims());
        let split = symm_skew_split(&j).unwrap();
        assert_eq!(split.a_dim, split.symm.len() + split.skew.len());
        assert!(!split.printed_symm_in_a);
        assert!(right_multiplication_matches(&j).unwrap());
        assert!(omega_stable(&j));
        assert_eq!(relation_sampling_oracle(&p, DEFAULT_SEED), (true, true));
    }

    #[test]
    fn one_dim_triple_split() {
        let split = ins_decomposition_jts(&algebra_to_triple(&k1())).unwrap();
        assert_eq!((split.minus_one.len(), split.one.len()), (1, 0));
        let inv = utkk_involution(&algebra_to_triple(&k1())).unwrap();
        let f = q();
        let want = Matrix::from_i64(f, &[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]);
        assert_eq!(inv.kappa_hat.matrix, want);
    }

    #[test]
    fn graded_check_on_assembled() {
        let (p, _) = algebra_to_pair(&diag2());
        let t = tkk(&p).unwrap();
        assert!(check_graded_lie(&t.algebra).is_ok());
    }
}
