//! Command definitions and their execution into a [`Report`].

use std::fmt::Display;

use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};
use tkk_core::cert::{Certified, Violation};
use tkk_core::exactla::{subspace_equal, Field, Matrix, Scalar};
use tkk_core::homextend::{
    boundary_matrix, extend_ja_hom, extend_jts_hom, extend_pair_hom, h2_cohomology_graded, h2_graded, h2_ungraded,
    is_centrally_zero_closed, quotient_by_central, roundtrip_iso, split_central_zero_extension, twisted_extension,
    universal_cover, verify_universal, HomError, RoundTrip, Split, H2, UNGRADED_CAP,
};
use tkk_core::jordan::{JordanPair, PairHom, Sign};
use tkk_core::liegrad::{
    forget_to_ja, forget_to_jts, forget_to_pair, grading_from_sl2, is_zero_perfect, CentralExtension, GradedHom,
    GradedLieAlgebra,
};
use tkk_core::tkkcore::{
    ins_decomposition_jts, relation_submodule, right_multiplication_matches, shortcut_relations, symm_skew_split, tkk,
    utkk, utkk_involution, utkk_sl2, UtkkAlgebra,
};

use crate::catalog::{catalog, names};
use crate::format::emit;
use crate::input::{certify, resolve, InputError, Structure};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Build {
    Tkk,
    Utkk,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Homology {
    /// Degree-0 H₂
    H2gr { input: String },
    /// Ungraded H₂
    H2 { input: String },
    /// Degree-0 H² with trivial coefficients k^m
    H2coh { m: usize, input: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    TheoremA,
    TheoremB,
    TheoremC,
    LemmaAspan,
    RemarkSplit,
    Universality,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum CatalogCmd {
    List,
    Emit { name: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the axioms of a structure and its decorations
    Check { input: String },
    /// Build TKK or uTKK of the pair underlying the input
    Build { which: Build, input: String },
    #[command(subcommand)]
    Homology(Homology),
    /// Verify one claim on the input
    Verify { claim: Claim, input: String },
    /// Extend the identity morphism of the input's Jordan data
    ExtendHom { input: String },
    /// Split the central 0-extension attached to the input
    SplitExtension { input: String },
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

pub struct Options {
    pub field: Option<Field>,
    pub seed: u64,
}

pub enum Output {
    Report(Report),
    Text(String),
}

impl Command {
    pub fn echo(&self) -> String {
        match self {
            Command::Check { input } => format!("check {input}"),
            Command::Build { which, input } => format!("build {} {input}", name_of(*which)),
            Command::Homology(Homology::H2gr { input }) => format!("homology h2gr {input}"),
            Command::Homology(Homology::H2 { input }) => format!("homology h2 {input}"),
            Command::Homology(Homology::H2coh { m, input }) => format!("homology h2coh {m} {input}"),
            Command::Verify { claim, input } => format!("verify {} {input}", name_of(*claim)),
            Command::ExtendHom { input } => format!("extend-hom {input}"),
            Command::SplitExtension { input } => format!("split-extension {input}"),
            Command::Catalog(CatalogCmd::List) => "catalog list".into(),
            Command::Catalog(CatalogCmd::Emit { name }) => format!("catalog emit {name}"),
        }
    }

    fn input(&self) -> Option<&str> {
        match self {
            Command::Check { input }
            | Command::Build { input, .. }
            | Command::Homology(Homology::H2gr { input } | Homology::H2 { input } | Homology::H2coh { input, .. })
            | Command::Verify { input, .. }
            | Command::ExtendHom { input }
            | Command::SplitExtension { input } => Some(input),
            Command::Catalog(_) => None,
        }
    }
}

fn name_of(v: impl ValueEnum) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn err_witness(e: impl Display) -> Value {
    Value::String(e.to_string())
}

fn violation_witness(v: &Violation) -> Value {
    json!({ "law": v.law, "indices": v.witness })
}

fn unsupported(what: &str, kind: &str) -> InputError {
    InputError::Unsupported(format!("{what} needs a different input kind, got {kind}"))
}

/// Runs a command; `Err` only for input problems.
pub fn run(cmd: &Command, opts: &Options) -> Result<Output, InputError> {
    let arg = match cmd {
        Command::Catalog(CatalogCmd::List) => return Ok(Output::Text(names().join("\n") + "\n")),
        Command::Catalog(CatalogCmd::Emit { name }) => return Ok(Output::Text(emit(&catalog(name)?))),
        _ => cmd.input().expect("input command"),
    };
    let source = resolve(arg, opts.field)?;
    let mut echo = cmd.echo();
    if let Some(f) = opts.field {
        echo.push_str(&format!(" --field {f}"));
    }
    let mut r = Report::new(echo, source.digest.clone(), opts.seed);
    let loaded = source.file.load(source.field)?;
    let structure = match certify(loaded, opts.seed) {
        Ok(s) => {
            r.pass(format!("{} axioms", source.file.kind()));
            s
        }
        Err(v) => {
            r.fail(format!("{} axioms", source.file.kind()), violation_witness(&v));
            return Ok(Output::Report(r));
        }
    };
    match cmd {
        Command::Check { .. } => check(&mut r, &structure),
        Command::Build { which, .. } => build(&mut r, &structure, *which)?,
        Command::Homology(h) => homology(&mut r, &structure, h)?,
        Command::Verify { claim, .. } => match claim {
            Claim::TheoremA => theorem_a(&mut r, &structure)?,
            Claim::TheoremB => theorem_b(&mut r, &structure)?,
            Claim::TheoremC => theorem_c(&mut r, &structure)?,
            Claim::LemmaAspan => lemma_aspan(&mut r, &structure)?,
            Claim::RemarkSplit => remark_split(&mut r, &structure)?,
            Claim::Universality => universality(&mut r, &structure)?,
        },
        Command::ExtendHom { .. } => extend_hom(&mut r, &structure)?,
        Command::SplitExtension { .. } => split_extension(&mut r, &structure)?,
        Command::Catalog(_) => unreachable!(),
    }
    Ok(Output::Report(r))
}

fn lie_dims(r: &mut Report, prefix: &str, l: &GradedLieAlgebra) {
    for (d, name) in [(-1, "minus"), (0, "zero"), (1, "plus")] {
        r.dim(format!("{prefix}.{name}"), l.component_dim(d));
    }
    r.dim(format!("{prefix}.total"), l.dim());
}

fn check(r: &mut Report, s: &Structure) {
    match s {
        Structure::Algebra(j) => r.dim("dim", j.dim()),
        Structure::Triple(t) => r.dim("dim", t.dim()),
        Structure::Pair(p) => {
            r.dim("minus", p.dim(Sign::Minus));
            r.dim("plus", p.dim(Sign::Plus));
        }
        Structure::Lie {
            algebra,
            sl2,
            involution,
        } => {
            lie_dims(r, "lie", algebra);
            if sl2.is_some() {
                r.pass("sl2 triple");
            }
            if involution.is_some() {
                r.pass("anti-graded involution");
            }
        }
    }
}

fn pair_of(r: &mut Report, s: &Structure) -> Result<Option<Certified<JordanPair>>, InputError> {
    match s.pair() {
        Ok(p) => Ok(Some(p)),
        Err(tkk_core::liegrad::LieError::NotThreeGraded(i, d)) => Err(InputError::Unsupported(format!(
            "not 3-graded: basis element {i} has degree {d}"
        ))),
        Err(e) => {
            r.fail("underlying Jordan pair", err_witness(e));
            Ok(None)
        }
    }
}

fn utkk_of(r: &mut Report, p: &Certified<JordanPair>) -> Option<UtkkAlgebra> {
    match utkk(p) {
        Ok(u) => {
            r.pass("uTKK central 0-extension of TKK");
            let (_, d0, _) = u.dims();
            r.dim("ins", u.tkk.ins.dim());
            r.dim("brackets", d0);
            r.dim("kernel", u.kernel_dim());
            Some(u)
        }
        Err(e) => {
            r.fail("uTKK central 0-extension of TKK", err_witness(e));
            None
        }
    }
}

fn build(r: &mut Report, s: &Structure, which: Build) -> Result<(), InputError> {
    let Some(p) = pair_of(r, s)? else { return Ok(()) };
    match which {
        Build::Tkk => match tkk(&p) {
            Ok(t) => {
                r.pass("TKK graded Lie algebra");
                r.pass("TKK 0-perfect");
                r.pass("forget_to_pair(TKK(P)) = P");
                r.dim("ins", t.ins.dim());
                lie_dims(r, "tkk", &t.algebra);
            }
            Err(e) => r.fail("TKK graded Lie algebra", err_witness(e)),
        },
        Build::Utkk => {
            if let Some(u) = utkk_of(r, &p) {
                r.check("uTKK 0-perfect", is_zero_perfect(&u.algebra), None);
                lie_dims(r, "utkk", &u.algebra);
            }
        }
    }
    Ok(())
}

/// The Lie algebra a homology command works on: the input itself, or `uTKK`
/// of the Jordan pair it describes.
fn homology_target(r: &mut Report, s: &Structure) -> Result<Option<Certified<GradedLieAlgebra>>, InputError> {
    if let Structure::Lie { algebra, .. } = s {
        return Ok(Some(algebra.clone()));
    }
    let Some(p) = pair_of(r, s)? else { return Ok(None) };
    Ok(utkk_of(r, &p).map(|u| u.algebra))
}

fn complex_check(r: &mut Report, l: &GradedLieAlgebra, graded: bool) {
    let d1 = boundary_matrix(l, 1, graded);
    let d2 = boundary_matrix(l, 2, graded);
    let name = if graded { "graded d1 d2 = 0" } else { "d1 d2 = 0" };
    r.check(name, d1.mul(&d2).is_zero(), None);
}

pub fn h2_witness(l: &GradedLieAlgebra, h: &H2) -> Value {
    let labels = l.labels();
    let render = |z: &Vec<Scalar>| -> String {
        let terms: Vec<String> = z
            .iter()
            .zip(&h.chain_basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, t)| format!("{c}*({}^{})", labels[t[0]], labels[t[1]]))
            .collect();
        terms.join(" + ")
    };
    Value::Array(h.witnesses.iter().map(|z| Value::String(render(z))).collect())
}

fn homology(r: &mut Report, s: &Structure, h: &Homology) -> Result<(), InputError> {
    let Some(l) = homology_target(r, s)? else { return Ok(()) };
    lie_dims(r, "lie", &l);
    match h {
        Homology::H2gr { .. } => {
            complex_check(r, &l, true);
            let h = h2_graded(&l);
            r.dim("h2gr", h.dim);
            r.dim("h2gr.cycles", h.cycles);
            r.dim("h2gr.boundaries", h.boundaries);
        }
        Homology::H2 { .. } => {
            let h = h2_ungraded(&l).map_err(|e| InputError::Unsupported(e.to_string()))?;
            complex_check(r, &l, false);
            r.dim("h2", h.dim);
        }
        Homology::H2coh { m, .. } => {
            complex_check(r, &l, true);
            let c = h2_cohomology_graded(&l, *m);
            r.dim("h2coh", c);
            if is_zero_perfect(&l) {
                let h = h2_graded(&l).dim;
                r.check("h2coh = m * h2gr", c == m * h, None);
            }
        }
    }
    Ok(())
}

fn record_roundtrip(r: &mut Report, l: &Certified<GradedLieAlgebra>) {
    match roundtrip_iso(l) {
        Ok(RoundTrip::Iso(_)) => r.pass("roundtrip iso"),
        Ok(RoundTrip::Failure { zero_perfect, h2 }) => {
            let mut w = json!({ "zero_perfect": zero_perfect, "h2gr": h2.dim });
            if h2.dim > 0 {
                w["cycles"] = h2_witness(l, &h2);
            }
            r.fail("roundtrip iso", w);
        }
        Err(e) => r.fail("roundtrip iso", err_witness(e)),
    }
}

fn theorem_a(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    if let Structure::Lie { algebra, .. } = s {
        lie_dims(r, "lie", algebra);
        let zp = is_zero_perfect(algebra);
        r.check("0-perfect", zp, None);
        let h = h2_graded(algebra);
        r.dim("h2gr", h.dim);
        r.check("h2gr = 0", h.dim == 0, (h.dim > 0).then(|| h2_witness(algebra, &h)));
        record_roundtrip(r, algebra);
        return Ok(());
    }
    let Some(p) = pair_of(r, s)? else { return Ok(()) };
    let Some(u) = utkk_of(r, &p) else { return Ok(()) };
    lie_dims(r, "utkk", &u.algebra);
    r.check("uTKK 0-perfect", is_zero_perfect(&u.algebra), None);
    match forget_to_pair(&u.algebra) {
        Ok(q) => r.check("forget_to_pair(uTKK(P)) = P", q.same_structure(&p), None),
        Err(e) => r.fail("forget_to_pair(uTKK(P)) = P", err_witness(e)),
    }
    let h = h2_graded(&u.algebra);
    r.dim("h2gr", h.dim);
    r.check("h2gr(uTKK) = 0", h.dim == 0, (h.dim > 0).then(|| h2_witness(&u.algebra, &h)));
    match is_centrally_zero_closed(&u.algebra) {
        Ok(b) => r.check("uTKK centrally 0-closed", b, None),
        Err(e) => r.fail("uTKK centrally 0-closed", err_witness(e)),
    }
    record_roundtrip(r, &u.algebra);
    Ok(())
}

fn identity_check(r: &mut Report, name: &str, hom: Result<GradedHom, HomError>, dim: usize, field: Field) {
    match hom {
        Ok(h) => r.check(name, h.matrix == Matrix::identity(field, dim), None),
        Err(e) => r.fail(name, err_witness(e)),
    }
}

fn theorem_b(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    let t = match (s.triple(), s) {
        (Some(t), _) => t,
        (None, Structure::Lie { algebra, involution: Some(e), .. }) => match forget_to_jts(algebra, e) {
            Ok(t) => t,
            Err(err) => {
                r.fail("triple of (L, involution)", err_witness(err));
                return Ok(());
            }
        },
        _ => return Err(unsupported("theorem-b", s.kind())),
    };
    let f = t.field();
    let inv = match utkk_involution(&t) {
        Ok(i) => {
            r.pass("kappa-hat anti-graded involution");
            i
        }
        Err(e) => {
            r.fail("kappa-hat anti-graded involution", err_witness(e));
            return Ok(());
        }
    };
    lie_dims(r, "utkk", &inv.utkk.algebra);
    match forget_to_jts(&inv.utkk.algebra, &inv.kappa_hat) {
        Ok(back) => r.check("forget_to_jts(uTKK, kappa-hat) = T", back.product() == t.product(), None),
        Err(e) => r.fail("forget_to_jts(uTKK, kappa-hat) = T", err_witness(e)),
    }
    let n = inv.utkk.algebra.dim();
    let ext = extend_jts_hom(&Matrix::identity(f, t.dim()), &t, &inv.utkk.algebra, &inv.kappa_hat).map(|x| x.hom);
    identity_check(r, "extend_jts_hom(id) = id", ext, n, f);
    match ins_decomposition_jts(&t) {
        Ok(split) => {
            r.pass("ins = ins(-1) + ins(1)");
            r.dim("ins", split.ins_dim);
            r.dim("ins.minus_one", split.minus_one.len());
            r.dim("ins.one", split.one.len());
        }
        Err(e) => r.fail("ins = ins(-1) + ins(1)", err_witness(e)),
    }
    if let Structure::Algebra(j) = s {
        match right_multiplication_matches(j) {
            Ok(b) => r.check("ins(-1) = span of right multiplications", b, None),
            Err(e) => r.fail("ins(-1) = span of right multiplications", err_witness(e)),
        }
    }
    Ok(())
}

fn theorem_c(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    match s {
        Structure::Algebra(j) => {
            let f = j.field();
            let hat = match utkk_sl2(j) {
                Ok(h) => h,
                Err(e) => {
                    r.fail("sl2 triple on uTKK", err_witness(e));
                    return Ok(());
                }
            };
            r.pass(format!("sl2 triple on uTKK ({})", hat.form.name()));
            r.check("statement form holds", hat.statement_holds, None);
            r.dim("proof form holds", hat.proof_holds as usize);
            let l = &hat.utkk.algebra;
            lie_dims(r, "utkk", l);
            match grading_from_sl2(l, &hat.triple) {
                Ok(a1) => r.check(
                    "A1-grading matches",
                    a1.algebra.degrees() == l.degrees() && a1.basis_change == Matrix::identity(f, l.dim()),
                    None,
                ),
                Err(e) => r.fail("A1-grading matches", err_witness(e)),
            }
            ungraded(r, l);
            record_roundtrip(r, l);
            match forget_to_ja(l, &hat.triple) {
                Ok(back) => {
                    r.check("forget_to_ja(uTKK, s) = J", back.product() == j.product(), None);
                    let ext = extend_ja_hom(&Matrix::identity(f, j.dim()), j, l, &hat.triple);
                    if let Ok(x) = &ext {
                        r.dim("ja scaling normalized", (x.scaling == tkk_core::homextend::InvolutionScaling::Normalized) as usize);
                    }
                    identity_check(r, "extend_ja_hom(id) = id", ext.map(|x| x.hom), l.dim(), f);
                }
                Err(e) => r.fail("forget_to_ja(uTKK, s) = J", err_witness(e)),
            }
        }
        Structure::Lie { algebra, sl2: Some(t), .. } => match grading_from_sl2(algebra, t) {
            Ok(a1) => {
                r.pass("A1-grading");
                lie_dims(r, "a1", &a1.algebra);
                ungraded(r, algebra);
                record_roundtrip(r, &a1.algebra);
            }
            Err(e) => r.fail("A1-grading", err_witness(e)),
        },
        _ => return Err(unsupported("theorem-c", s.kind())),
    }
    Ok(())
}

fn ungraded(r: &mut Report, l: &GradedLieAlgebra) {
    match h2_ungraded(l) {
        Ok(h) => {
            r.dim("h2", h.dim);
            r.check("h2 = 0", h.dim == 0, None);
        }
        Err(_) => r.dim("h2 skipped above dimension", UNGRADED_CAP),
    }
}

fn lemma_aspan(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    let Structure::Algebra(j) = s else {
        return Err(unsupported("lemma-aspan", s.kind()));
    };
    let (p, _) = tkk_core::jordan::algebra_to_pair(j);
    let short = shortcut_relations(j);
    let full = relation_submodule(&p);
    let n = j.dim() * j.dim();
    let f = j.field();
    r.dim("A", tkk_core::exactla::span_rank(f, n, &full));
    r.dim("shortcut span", tkk_core::exactla::span_rank(f, n, &short));
    r.check("shortcut span = A", subspace_equal(f, &short, &full, n), None);
    Ok(())
}

fn remark_split(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    let Structure::Algebra(j) = s else {
        return Err(unsupported("remark-split", s.kind()));
    };
    match symm_skew_split(j) {
        Ok(split) => {
            r.pass("A = A_symm + A_skew");
            r.dim("A", split.a_dim);
            r.dim("A_symm", split.symm.len());
            r.dim("A_skew", split.skew.len());
            r.dim("printed symmetric generators in A", split.printed_symm_in_a as usize);
        }
        Err(e) => r.fail("A = A_symm + A_skew", err_witness(e)),
    }
    Ok(())
}

fn record_universal(r: &mut Report, ext: &Certified<CentralExtension>) {
    let u = verify_universal(ext);
    r.check("total 0-perfect", u.total_zero_perfect, None);
    r.dim("total h2gr", u.total_h2);
    r.check("universal", u.universal, u.reason.map(Value::String));
}

fn universality(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    match s {
        Structure::Lie { algebra, .. } => match quotient_by_central(algebra) {
            Ok(ext) => {
                r.dim("kernel", ext.kernel.len());
                record_universal(r, &ext);
            }
            Err(e) => r.fail("quotient by degree-0 center", err_witness(e)),
        },
        _ => {
            let Some(p) = pair_of(r, s)? else { return Ok(()) };
            if let Some(u) = utkk_of(r, &p) {
                record_universal(r, &u.upsilon);
            }
        }
    }
    Ok(())
}

fn extend_hom(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    if let Structure::Lie { algebra, .. } = s {
        let p = match forget_to_pair(algebra) {
            Ok(p) => p,
            Err(e) => return Err(InputError::Unsupported(e.to_string())),
        };
        let u = utkk(&p).map_err(|e| InputError::Unsupported(e.to_string()))?;
        match extend_pair_hom(&u, &PairHom::identity(&p), algebra) {
            Ok(h) => {
                r.pass("extension of id well defined");
                r.dim("rank", h.matrix.rank());
                r.check("extension bijective", h.is_bijective(), None);
            }
            Err(e) => r.fail("extension of id well defined", err_witness(e)),
        }
        return Ok(());
    }
    let Some(p) = pair_of(r, s)? else { return Ok(()) };
    let Some(u) = utkk_of(r, &p) else { return Ok(()) };
    let f = p.field();
    let id = PairHom::identity(&p);
    identity_check(r, "extend_pair_hom(id) into uTKK = id", extend_pair_hom(&u, &id, &u.algebra), u.algebra.dim(), f);
    match extend_pair_hom(&u, &id, &u.tkk.algebra) {
        Ok(h) => r.check("extend_pair_hom(id) into TKK = upsilon", h == u.upsilon.map, None),
        Err(e) => r.fail("extend_pair_hom(id) into TKK = upsilon", err_witness(e)),
    }
    Ok(())
}

fn record_split(r: &mut Report, name: &str, base: &GradedLieAlgebra, ext: &Certified<CentralExtension>) {
    match split_central_zero_extension(ext) {
        Ok(Split::Split(_)) => r.pass(name),
        Ok(Split::Obstruction { chain_basis, cycle, value }) => {
            let labels = base.labels();
            let chain: Vec<String> = cycle
                .iter()
                .zip(&chain_basis)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, t)| format!("{c}*({}^{})", labels[t[0]], labels[t[1]]))
                .collect();
            let value: Vec<String> = value.iter().map(|x| x.to_string()).collect();
            r.fail(name, json!({ "cycle": chain.join(" + "), "sigma": value }));
        }
        Err(e) => r.fail(name, err_witness(e)),
    }
}

fn split_extension(r: &mut Report, s: &Structure) -> Result<(), InputError> {
    if let Structure::Lie { algebra, .. } = s {
        match universal_cover(algebra) {
            Ok(ext) => {
                r.dim("kernel", ext.kernel.len());
                record_split(r, "uTKK(forget_to_pair L) -> L splits", algebra, &ext);
            }
            Err(e) => r.fail("uTKK(forget_to_pair L) -> L surjective", err_witness(e)),
        }
        let h = h2_graded(algebra);
        if let (Some(z), true) = (h.witnesses.first(), is_zero_perfect(algebra)) {
            match twisted_extension(algebra, z) {
                Ok(ext) => record_split(r, "twisted extension splits", algebra, &ext),
                Err(e) => r.fail("twisted extension splits", err_witness(e)),
            }
        }
        return Ok(());
    }
    let Some(p) = pair_of(r, s)? else { return Ok(()) };
    if let Some(u) = utkk_of(r, &p) {
        r.dim("kernel", u.kernel_dim());
        record_split(r, "uTKK -> TKK splits", &u.tkk.algebra, &u.upsilon);
    }
    Ok(())
}
