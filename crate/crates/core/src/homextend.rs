//! Graded Chevalley–Eilenberg homology in degree 2, splitting of central
//! 0-extensions, extension of Jordan morphisms to `uTKK`, and the
//! recognition of universal central 0-extensions.

use thiserror::Error;

use crate::cert::{Certified, Violation};
use crate::exactla::{
    kernel_basis, quotient, solve, solve_matrix, to_dense, unit_vec, vec_sub, Echelon, Field, Matrix,
    Scalar, SparseVec, Vector,
};
use crate::freemod::{wedge, wedge_of_degree, BilinearMap, FreeModule, WedgeSpace};
use crate::jordan::{check_pair_hom, JordanAlgebra, JordanTriple, PairHom};
use crate::liegrad::{
    center, certify_lie, check_graded_hom, check_sl2, forget_to_ja, forget_to_jts, forget_to_pair, is_zero_perfect,
    AntiGradedInvolution, CentralExtension, GradedHom, GradedLieAlgebra, LieError, Sl2Triple,
};
use crate::tkkcore::{utkk, utkk_involution, utkk_sl2, TkkError, UtkkAlgebra};

/// Total dimension up to which ungraded `H₂` is computed.
pub const UNGRADED_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("algebra is not 0-perfect")]
    NotZeroPerfect,
    #[error("ungraded homology needs dimension at most {cap}, got {dim}")]
    TooLarge { dim: usize, cap: usize },
    #[error("{0}")]
    Assertion(String),
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Tkk(#[from] TkkError),
}

fn assertion(msg: impl Into<String>) -> HomError {
    HomError::Assertion(msg.into())
}

/// Domain and codomain bases of `δₙ: ∧^{n+1}L → ∧ⁿL` with its sparse columns.
pub struct Boundary {
    pub domain: WedgeSpace,
    pub codomain: WedgeSpace,
    pub columns: Vec<SparseVec>,
}

impl Boundary {
    pub fn to_matrix(&self, field: Field) -> Matrix {
        let cols: Vec<Vector> = self
            .columns
            .iter()
            .map(|c| to_dense(field, self.codomain.dim(), c))
            .collect();
        Matrix::from_cols(field, self.codomain.dim(), &cols)
    }

    pub fn rank(&self, field: Field) -> usize {
        sparse_rank(field, self.codomain.dim(), &self.columns)
    }
}

fn sparse_rank(field: Field, dim: usize, vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new(field, dim);
    for v in vectors {
        e.insert_sparse(v);
    }
    e.rank()
}

fn spaces(l: &GradedLieAlgebra, n: usize, graded: bool) -> (WedgeSpace, WedgeSpace) {
    if graded {
        (wedge_of_degree(l.degrees(), n + 1, 0), wedge_of_degree(l.degrees(), n, 0))
    } else {
        let flat = vec![0; l.dim()];
        (wedge(&flat, n + 1), wedge(&flat, n))
    }
}

/// `δₙ(x₁∧…∧x_{n+1}) = Σ_{i<j} (−1)^{i+j} [xᵢ,xⱼ] ∧ x₁∧…x̂ᵢ…x̂ⱼ…∧x_{n+1}`.
pub fn boundary(l: &GradedLieAlgebra, n: usize, graded: bool) -> Boundary {
    assert!(n >= 1, "boundary needs n >= 1");
    let (domain, codomain) = spaces(l, n, graded);
    let f = l.field();
    let mut columns = Vec::with_capacity(domain.dim());
    let mut acc = vec![f.zero(); codomain.dim()];
    let mut touched = Vec::new();
    for t in domain.tuples() {
        for i in 0..t.len() {
            for j in (i + 1)..t.len() {
                // positions are 1-based in the sign
                let odd = (i + j) % 2 == 1;
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x)
                    .collect();
                for (m, c) in l.basis_bracket(t[i], t[j]) {
                    let mut idx = Vec::with_capacity(n);
                    idx.push(*m);
                    idx.extend(&rest);
                    if let Some((pos, flip)) = codomain.locate(&idx) {
                        let neg = odd != flip;
                        if neg {
                            acc[pos] -= c;
                        } else {
                            acc[pos] += c;
                        }
                        touched.push(pos);
                    }
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let col: SparseVec = touched
            .drain(..)
            .filter_map(|p| {
                let v = std::mem::replace(&mut acc[p], f.zero());
                (!v.is_zero()).then_some((p, v))
            })
            .collect();
        columns.push(col);
    }
    Boundary {
        domain,
        codomain,
        columns,
    }
}

pub fn boundary_matrix(l: &GradedLieAlgebra, n: usize, graded: bool) -> Matrix {
    boundary(l, n, graded).to_matrix(l.field())
}

#[derive(Clone, Debug)]
pub struct H2 {
    pub dim: usize,
    pub cycles: usize,
    pub boundaries: usize,
    /// Wedge basis of the 2-chains, as strictly increasing index pairs.
    pub chain_basis: Vec<Vec<usize>>,
    /// Cycles whose classes form a basis of `H₂`, in chain coordinates.
    pub witnesses: Vec<Vector>,
}

fn h2(l: &GradedLieAlgebra, graded: bool) -> H2 {
    let f = l.field();
    let d1 = boundary(l, 1, graded).to_matrix(f);
    let d2 = boundary(l, 2, graded);
    let cycles = kernel_basis(&d1);
    let mut span = Echelon::new(f, d2.codomain.dim());
    // im δ₂ ⊆ ker δ₁, so once the ranks meet the rest is redundant
    for c in &d2.columns {
        if span.rank() == cycles.len() {
            break;
        }
        span.insert_sparse(c);
    }
    let boundaries = span.rank();
    let mut witnesses = Vec::new();
    for z in &cycles {
        if span.insert(z) {
            witnesses.push(z.clone());
        }
    }
    H2 {
        dim: cycles.len() - boundaries,
        cycles: cycles.len(),
        boundaries,
        chain_basis: d2.codomain.tuples().to_vec(),
        witnesses,
    }
}

/// Degree-0 `H₂` with witness cycles.
pub fn h2_graded(l: &GradedLieAlgebra) -> H2 {
    h2(l, true)
}

pub fn h2_ungraded(l: &GradedLieAlgebra) -> Result<H2, HomError> {
    if l.dim() > UNGRADED_CAP {
        return Err(HomError::TooLarge {
            dim: l.dim(),
            cap: UNGRADED_CAP,
        });
    }
    Ok(h2(l, false))
}

/// Degree-0 `H²(L, M)` for the trivial module `M = M₀ = kᵐ`, from the
/// transposed boundaries tensored with the identity.
pub fn h2_cohomology_graded(l: &GradedLieAlgebra, m: usize) -> usize {
    let f = l.field();
    let d1 = boundary(l, 1, true);
    let d2 = boundary(l, 2, true);
    // cochain c_n ↦ c_n ∘ δ_n stored row by row: one row per (chain, coefficient)
    let coboundary = |b: &Boundary| -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); b.codomain.dim() * m];
        for (w, col) in b.columns.iter().enumerate() {
            for (v, c) in col {
                for r in 0..m {
                    rows[v * m + r].push((w * m + r, c.clone()));
                }
            }
        }
        rows
    };
    let r1 = sparse_rank(f, d1.domain.dim() * m, &coboundary(&d1));
    let r2 = sparse_rank(f, d2.domain.dim() * m, &coboundary(&d2));
    let cochains = d2.codomain.dim() * m;
    cochains - r2 - r1
}

#[derive(Clone, Debug)]
pub enum Split {
    Split(GradedHom),
    /// A degree-0 cycle `z` of the base with `σ(z) ≠ 0`, in the chain
    /// coordinates of `(∧²L)₀`.
    Obstruction { chain_basis: Vec<Vec<usize>>, cycle: Vector, value: Vector },
}

/// The canonical graded section `η`: each basis vector of `L_d` goes to the
/// solution of `φx = y` supported on `K_d` with free variables zero.
fn section(ext: &CentralExtension) -> Result<Matrix, HomError> {
    let (k, l) = (&ext.total, &ext.base);
    let f = l.field();
    let mut eta = Matrix::zeros(f, k.dim(), l.dim());
    for i in 0..l.dim() {
        let d = l.degree(i);
        let cols = k.component(d);
        let sub = Matrix::from_cols(f, l.dim(), &cols.iter().map(|&c| ext.map.matrix.col(c)).collect::<Vec<_>>());
        let x = solve(&sub, &l.unit(i)).map_err(|_| assertion("φ is not surjective in each degree"))?;
        for (c, v) in cols.into_iter().zip(x) {
            eta.set(c, i, v);
        }
    }
    Ok(eta)
}

/// `ψ = η + τ` where `τ([x,y]) = σ(x∧y) = [ηx,ηy] − η[x,y]` on degree 0.
pub fn split_central_zero_extension(ext: &Certified<CentralExtension>) -> Result<Split, HomError> {
    let (k, l) = (&ext.total, &ext.base);
    let f = l.field();
    if !is_zero_perfect(l) {
        return Err(HomError::NotZeroPerfect);
    }
    let eta = section(ext)?;
    let chains = wedge_of_degree(l.degrees(), 2, 0);
    let zero = l.component(0);
    let eta_cols = eta.col_vectors();
    // σ and [x,y] on each degree-0 chain
    let mut sigma = Vec::with_capacity(chains.dim());
    let mut brackets = Vec::with_capacity(chains.dim());
    for t in chains.tuples() {
        let (x, y) = (t[0], t[1]);
        let b = to_dense(f, l.dim(), l.basis_bracket(x, y));
        let s = vec_sub(&k.bracket(&eta_cols[x], &eta_cols[y]), &eta.mul_vec(&b));
        if ext.map.matrix.mul_vec(&s).iter().any(|v| !v.is_zero()) {
            return Err(assertion("σ leaves the kernel of φ"));
        }
        sigma.push(s);
        brackets.push(l.restrict(&b, 0));
    }
    // τ is a K×L₀ matrix T with T·B₀ = Σ, i.e. B₀ᵀ Tᵀ = Σᵀ
    let b0 = Matrix::from_cols(f, zero.len(), &brackets);
    let sig = Matrix::from_cols(f, k.dim(), &sigma);
    match solve_matrix(&b0.transpose(), &sig.transpose()) {
        Ok(tt) => {
            let tau = tt.transpose();
            let mut psi = eta.clone();
            for (c, &i) in zero.iter().enumerate() {
                for r in 0..k.dim() {
                    psi.add_at(r, i, tau.get(r, c));
                }
            }
            let psi = GradedHom { matrix: psi };
            check_graded_hom(&psi, l, k)?;
            if ext.map.matrix.mul(&psi.matrix) != Matrix::identity(f, l.dim()) {
                return Err(assertion("φψ is not the identity"));
            }
            Ok(Split::Split(psi))
        }
        Err(_) => {
            let cycle = kernel_basis(&b0)
                .into_iter()
                .find(|z| sig.mul_vec(z).iter().any(|v| !v.is_zero()))
                .ok_or_else(|| assertion("unsolvable τ without an obstructing cycle"))?;
            let value = sig.mul_vec(&cycle);
            Ok(Split::Obstruction {
                chain_basis: chains.tuples().to_vec(),
                cycle,
                value,
            })
        }
    }
}

/// Whether two splittings agree on `L_{±1}` and on `[L₋₁, L₁]`.
pub fn splittings_agree(l: &GradedLieAlgebra, a: &GradedHom, b: &GradedHom) -> bool {
    let f = l.field();
    let diff = a.matrix.sub(&b.matrix);
    let odd = l.component(-1).into_iter().chain(l.component(1));
    let mut cols: Vec<Vector> = odd.map(|i| l.unit(i)).collect();
    for x in l.component(-1) {
        for y in l.component(1) {
            cols.push(to_dense(f, l.dim(), l.basis_bracket(x, y)));
        }
    }
    cols.iter().all(|v| diff.mul_vec(v).iter().all(Scalar::is_zero))
}

/// `K = L ⊕ k·z` with `z` central of degree 0 and `[x,y]_K = [x,y] + c(x∧y)z`,
/// where the cocycle `c` vanishes on degree-0 boundaries and is 1 on `cycle`.
pub fn twisted_extension(l: &Certified<GradedLieAlgebra>, cycle: &[Scalar]) -> Result<Certified<CentralExtension>, HomError> {
    let f = l.field();
    let b2 = boundary(l, 2, true);
    let chains = &b2.codomain;
    let bounds: Vec<Vector> = b2.columns.iter().map(|c| to_dense(f, chains.dim(), c)).collect();
    let q = quotient(f, chains.dim(), &bounds);
    let coset = q.project(cycle);
    let Some(pos) = coset.iter().position(|x| !x.is_zero()) else {
        return Err(assertion("cycle is a boundary"));
    };
    let scale = coset[pos].inv().expect("nonzero");
    let cocycle: Vec<Scalar> = (0..chains.dim())
        .map(|c| &q.project(&unit_vec(f, chains.dim(), c))[pos] * &scale)
        .collect();
    let n = l.dim();
    let mut br = BilinearMap::zero(f, n + 1, n + 1, n + 1);
    for (i, j, m, c) in l.structure().entries() {
        br.add_entry(i, j, m, c.clone()).expect("in range");
    }
    for (pos, t) in chains.tuples().iter().enumerate() {
        let c = &cocycle[pos];
        if !c.is_zero() {
            br.add_entry(t[0], t[1], n, c.clone()).expect("in range");
            br.add_entry(t[1], t[0], n, -c).expect("in range");
        }
    }
    let mut labels = l.labels().to_vec();
    let mut z = String::from("z");
    while labels.contains(&z) {
        z.push('\'');
    }
    labels.push(z);
    let mut degrees = l.degrees().to_vec();
    degrees.push(0);
    let k = certify_lie(GradedLieAlgebra::new(FreeModule::new(f, labels).map_err(LieError::from)?, degrees, br)?)?;
    let mut phi = Matrix::zeros(f, n, n + 1);
    for i in 0..n {
        phi.set(i, i, f.one());
    }
    Ok(CentralExtension::certify(k, l.clone(), GradedHom { matrix: phi })?)
}

/// `H₂^gr(L) = 0`, defined for 0-perfect `L`.
pub fn is_centrally_zero_closed(l: &GradedLieAlgebra) -> Result<bool, HomError> {
    if !is_zero_perfect(l) {
        return Err(HomError::NotZeroPerfect);
    }
    Ok(h2_graded(l).dim == 0)
}

/// The graded hom `uTKK(P) → L` with `a + Σ⟨cᵢ,dᵢ⟩ + b ↦ γ₋a + Σ[γ₋cᵢ, γ₊dᵢ] + γ₊b`.
pub fn extend_pair_hom(u: &UtkkAlgebra, g: &PairHom, l: &Certified<GradedLieAlgebra>) -> Result<GradedHom, HomError> {
    let f = l.field();
    let q = forget_to_pair(l)?;
    check_pair_hom(g, &u.pair, &q)?;
    let (dm, d0, dp) = u.dims();
    let n = u.algebra.dim();
    let gm: Vec<Vector> = g.minus.col_vectors().iter().map(|v| l.embed(v, -1)).collect();
    let gp: Vec<Vector> = g.plus.col_vectors().iter().map(|v| l.embed(v, 1)).collect();
    let image = |r: &[Scalar]| -> Vector {
        let mut acc = vec![f.zero(); l.dim()];
        for (c, x) in r.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let br = l.bracket(&gm[c / dp], &gp[c % dp]);
            crate::exactla::axpy(&mut acc, x, &br);
        }
        acc
    };
    for (n, r) in u.relation_basis().iter().enumerate() {
        if image(r).iter().any(|x| !x.is_zero()) {
            return Err(Violation::new("extension well defined", vec![n]).into());
        }
    }
    let mut cols: Vec<Vector> = Vec::with_capacity(n);
    cols.extend(gm.iter().cloned());
    for k in 0..d0 {
        cols.push(image(&u.relations.lift(&unit_vec(f, d0, k))));
    }
    cols.extend(gp.iter().cloned());
    let hom = GradedHom {
        matrix: Matrix::from_cols(f, l.dim(), &cols),
    };
    check_graded_hom(&hom, &u.algebra, l)?;
    for (i, v) in gm.iter().enumerate().take(dm) {
        if l.restrict(v, -1) != g.minus.col(i) {
            return Err(assertion("extension differs from γ₋"));
        }
    }
    Ok(hom)
}

#[derive(Clone, Debug)]
pub struct JtsExtension {
    pub utkk: UtkkAlgebra,
    pub kappa_hat: AntiGradedInvolution,
    pub hom: GradedHom,
}

/// Lifts a triple hom `γ: T → forget_to_jts(L, ε)` to the pair hom `(εγ, γ)`
/// and extends it; the result intertwines `κ̂` and `ε`.
pub fn extend_jts_hom(
    g: &Matrix,
    t: &Certified<JordanTriple>,
    l: &Certified<GradedLieAlgebra>,
    e: &AntiGradedInvolution,
) -> Result<JtsExtension, HomError> {
    let target = forget_to_jts(l, e)?;
    crate::jordan::check_triple_hom(g, t, &target)?;
    let inv = utkk_involution(t)?;
    let eps = crate::liegrad::pair_involution_of(l, e);
    let lift = PairHom {
        minus: eps.plus.mul(g),
        plus: g.clone(),
    };
    let hom = extend_pair_hom(&inv.utkk, &lift, l)?;
    if hom.matrix.mul(&inv.kappa_hat.matrix) != e.matrix.mul(&hom.matrix) {
        return Err(assertion("extension is not involutary"));
    }
    Ok(JtsExtension {
        utkk: inv.utkk,
        kappa_hat: inv.kappa_hat,
        hom,
    })
}

/// Which scaling of `(ad e)², (ad f)²` made the lifted pair map a homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionScaling {
    /// `(−½(ad e)², −½(ad f)²)`
    Printed,
    /// `(−¼(ad e)², −(ad f)²)`
    Normalized,
}

#[derive(Clone, Debug)]
pub struct JaExtension {
    pub utkk: UtkkAlgebra,
    pub sl2: Sl2Triple,
    pub scaling: InvolutionScaling,
    pub hom: GradedHom,
}

/// Block of `m` from `L_from` to `L_to`.
fn block(l: &GradedLieAlgebra, m: &Matrix, from: i32, to: i32) -> Matrix {
    let (src, dst) = (l.component(from), l.component(to));
    let mut out = Matrix::zeros(l.field(), dst.len(), src.len());
    for (c, &i) in src.iter().enumerate() {
        for (r, &j) in dst.iter().enumerate() {
            out.set(r, c, m.get(j, i).clone());
        }
    }
    out
}

/// Lifts a unital hom `γ: J → forget_to_ja(L, s)` to the pair hom
/// `(ε₊γ, γ)` for an involution built from `(ad e)², (ad f)²`, extends it, and
/// checks that `ŝ` goes to `s`.
pub fn extend_ja_hom(
    g: &Matrix,
    j: &Certified<JordanAlgebra>,
    l: &Certified<GradedLieAlgebra>,
    s: &Sl2Triple,
) -> Result<JaExtension, HomError> {
    let f = l.field();
    let target = forget_to_ja(l, s)?;
    crate::jordan::check_algebra_hom(g, j, &target)?;
    let hat = utkk_sl2(j)?;
    let ad_f = l.ad(&s.f);
    let ff = block(l, &ad_f.mul(&ad_f), 1, -1);
    let target_pair = forget_to_pair(l)?;
    let mut chosen = None;
    for (scaling, c) in [(InvolutionScaling::Printed, f.ratio(-1, 2)), (InvolutionScaling::Normalized, f.from_i64(-1))] {
        let lift = PairHom {
            minus: ff.scale(&c).mul(g),
            plus: g.clone(),
        };
        if check_pair_hom(&lift, &hat.utkk.pair, &target_pair).is_ok() {
            chosen = Some((scaling, lift));
            break;
        }
    }
    let (scaling, lift) = chosen.ok_or_else(|| assertion("no scaling of (ad f)² lifts γ to a pair hom"))?;
    let hom = extend_pair_hom(&hat.utkk, &lift, l)?;
    for (x, y) in [(&hat.triple.h, &s.h), (&hat.triple.e, &s.e), (&hat.triple.f, &s.f)] {
        if hom.apply(x) != *y {
            return Err(assertion("extension does not carry ŝ to s"));
        }
    }
    check_sl2(l, s)?;
    Ok(JaExtension {
        utkk: hat.utkk,
        sl2: hat.triple,
        scaling,
        hom,
    })
}

/// Recognition of a universal central 0-extension through its total algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universality {
    pub total_zero_perfect: bool,
    pub total_h2: usize,
    pub universal: bool,
    pub reason: Option<String>,
}

pub fn verify_universal(ext: &Certified<CentralExtension>) -> Universality {
    let k = &ext.total;
    let total_zero_perfect = is_zero_perfect(k);
    let total_h2 = h2_graded(k).dim;
    let reason = if !total_zero_perfect {
        Some("total not 0-perfect".to_string())
    } else if total_h2 != 0 {
        Some("total not centrally 0-closed".to_string())
    } else {
        None
    };
    Universality {
        total_zero_perfect,
        total_h2,
        universal: reason.is_none(),
        reason,
    }
}

#[derive(Clone, Debug)]
pub enum RoundTrip {
    Iso(GradedHom),
    Failure {
        zero_perfect: bool,
        h2: H2,
    },
}

impl RoundTrip {
    pub fn is_iso(&self) -> bool {
        matches!(self, RoundTrip::Iso(_))
    }
}

/// `υ̂ = extend_pair_hom(id)` from `uTKK(forget_to_pair L)` to `L`; bijective
/// exactly when `L` is 0-perfect with `H₂^gr(L) = 0`.
pub fn roundtrip_iso(l: &Certified<GradedLieAlgebra>) -> Result<RoundTrip, HomError> {
    let p = forget_to_pair(l)?;
    let u = utkk(&p)?;
    let hom = extend_pair_hom(&u, &PairHom::identity(&p), l)?;
    let zero_perfect = is_zero_perfect(l);
    let h2 = h2_graded(l);
    let predicted = zero_perfect && h2.dim == 0;
    if hom.is_bijective() != predicted {
        return Err(assertion(format!(
            "bijective = {}, but 0-perfect = {zero_perfect} and H2 = {}",
            hom.is_bijective(),
            h2.dim
        )));
    }
    Ok(if predicted {
        RoundTrip::Iso(hom)
    } else {
        RoundTrip::Failure { zero_perfect, h2 }
    })
}

/// `L → L / (Z(L) ∩ L₀)` as a central 0-extension.
pub fn quotient_by_central(l: &Certified<GradedLieAlgebra>) -> Result<Certified<CentralExtension>, HomError> {
    let f = l.field();
    let n = l.dim();
    let zero: Vec<Vector> = center(l)
        .into_iter()
        .filter(|z| (0..n).all(|i| z[i].is_zero() || l.degree(i) == 0))
        .collect();
    let q = quotient(f, n, &zero);
    let free = q.free_cols().to_vec();
    let m = free.len();
    let mut br = BilinearMap::zero(f, m, m, m);
    for (a, &x) in free.iter().enumerate() {
        for (b, &y) in free.iter().enumerate() {
            br.set_column(a, b, &q.project(&to_dense(f, n, l.basis_bracket(x, y))));
        }
    }
    let labels = free.iter().map(|&i| l.labels()[i].clone()).collect();
    let degrees = free.iter().map(|&i| l.degree(i)).collect();
    let base = certify_lie(GradedLieAlgebra::new(FreeModule::new(f, labels).map_err(LieError::from)?, degrees, br)?)?;
    let cols: Vec<Vector> = (0..n).map(|i| q.project(&l.unit(i))).collect();
    let phi = GradedHom {
        matrix: Matrix::from_cols(f, m, &cols),
    };
    Ok(CentralExtension::certify(l.clone(), base, phi)?)
}

/// The identity of `L` as a central extension.
pub fn identity_extension(l: &Certified<GradedLieAlgebra>) -> Certified<CentralExtension> {
    CentralExtension::certify(l.clone(), l.clone(), GradedHom::identity(l)).expect("identity is a central extension")
}

/// `υ̂: uTKK(forget_to_pair L) → L` as a central extension, when surjective.
pub fn universal_cover(l: &Certified<GradedLieAlgebra>) -> Result<Certified<CentralExtension>, HomError> {
    let p = forget_to_pair(l)?;
    let u = utkk(&p)?;
    let hom = extend_pair_hom(&u, &PairHom::identity(&p), l)?;
    Ok(CentralExtension::certify(u.algebra.clone(), l.clone(), hom)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liegrad::fixtures::sl2;

    fn q() -> Field {
        Field::Rational
    }

    fn abelian(f: Field, degrees: Vec<i32>) -> Certified<GradedLieAlgebra> {
        let n = degrees.len();
        certify_lie(GradedLieAlgebra::new(FreeModule::numbered(f, "x", n), degrees, BilinearMap::zero(f, n, n, n)).unwrap())
            .unwrap()
    }

    #[test]
    fn first_boundary_sign() {
        let l = sl2(q());
        // δ₁(f ∧ e) = −[f, e] = h
        let d1 = boundary_matrix(&l, 1, false);
        let w = wedge(&[0, 0, 0], 2);
        let pos = w.position(&[0, 2]).unwrap();
        assert_eq!(d1.col(pos), vec![q().zero(), q().one(), q().zero()]);
    }

    #[test]
    fn boundaries_compose_to_zero() {
        let l = sl2(q());
        for graded in [true, false] {
            let d1 = boundary_matrix(&l, 1, graded);
            let d2 = boundary_matrix(&l, 2, graded);
            assert!(d1.mul(&d2).is_zero());
        }
        assert!(boundary_matrix(&abelian(q(), vec![0, 0, 0]), 1, false).is_zero());
    }

    #[test]
    fn h2_values() {
        let f = q();
        assert_eq!(h2_graded(&sl2(f)).dim, 0);
        assert_eq!(h2_ungraded(&sl2(f)).unwrap().dim, 0);
        let ab = abelian(f, vec![-1, 1]);
        let h = h2_graded(&ab);
        assert_eq!(h.dim, 1);
        assert_eq!(h.witnesses.len(), 1);
        assert_eq!(h2_graded(&GradedLieAlgebra::zero(f)).dim, 0);
        assert_eq!(h2_ungraded(&abelian(f, vec![0])).unwrap().dim, 0);
        assert_eq!(h2_ungraded(&abelian(f, vec![0, 0])).unwrap().dim, 1);
        assert_eq!(h2_cohomology_graded(&ab, 2), 2);
        assert_eq!(h2_cohomology_graded(&ab, 0), 0);
        assert_eq!(h2_cohomology_graded(&sl2(f), 1), 0);
    }

    #[test]
    fn closedness() {
        let f = q();
        assert!(is_centrally_zero_closed(&sl2(f)).unwrap());
        assert!(!is_centrally_zero_closed(&abelian(f, vec![-1, 1])).unwrap());
        assert_eq!(is_centrally_zero_closed(&abelian(f, vec![0])), Err(HomError::NotZeroPerfect));
    }

    #[test]
    fn identity_splits_to_identity() {
        let l = certify_lie(sl2(q())).unwrap();
        let ext = identity_extension(&l);
        match split_central_zero_extension(&ext).unwrap() {
            Split::Split(psi) => assert_eq!(psi, GradedHom::identity(&l)),
            Split::Obstruction { .. } => panic!("identity must split"),
        }
        assert!(verify_universal(&ext).universal);
    }

    #[test]
    fn abelian_twist_does_not_split() {
        let l = abelian(q(), vec![-1, 1]);
        let h = h2_graded(&l);
        let ext = twisted_extension(&l, &h.witnesses[0]).unwrap();
        assert!(matches!(split_central_zero_extension(&ext).unwrap(), Split::Obstruction { .. }));
        let rt = roundtrip_iso(&l).unwrap();
        assert!(!rt.is_iso());
    }

    #[test]
    fn sl2_roundtrip() {
        let l = certify_lie(sl2(q())).unwrap();
        assert!(roundtrip_iso(&l).unwrap().is_iso());
        let cover = universal_cover(&l).unwrap();
        assert!(matches!(split_central_zero_extension(&cover).unwrap(), Split::Split(_)));
    }
}
