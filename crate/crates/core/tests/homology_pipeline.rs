mod common;

use common::*;
use proptest::prelude::*;
use tkk_core::exactla::{Field, Matrix, Vector};
use tkk_core::freemod::{binomial, BilinearMap, FreeModule};
use tkk_core::homextend::{
    boundary, boundary_matrix, extend_ja_hom, extend_jts_hom, extend_pair_hom, h2_cohomology_graded, h2_graded, h2_ungraded,
    identity_extension, is_centrally_zero_closed, quotient_by_central, roundtrip_iso, split_central_zero_extension,
    splittings_agree, twisted_extension, universal_cover, verify_universal, HomError, InvolutionScaling, RoundTrip,
    Split,
};
use tkk_core::jordan::{algebra_to_pair, algebra_to_triple, certify_pair, JordanPair, PairHom};
use tkk_core::liegrad::{certify_lie, is_zero_perfect, GradedLieAlgebra};
use tkk_core::tkkcore::{utkk, utkk_involution, utkk_sl2};

fn sl2_central(f: Field) -> tkk_core::cert::Certified<GradedLieAlgebra> {
    let (l, _) = sl2(f);
    let n = 4;
    let mut br = BilinearMap::zero(f, n, n, n);
    for (i, j, k, v) in l.structure().entries() {
        br.add_entry(i, j, k, v.clone()).unwrap();
    }
    let mut labels = l.labels().to_vec();
    labels.push("z".into());
    let mut degrees = l.degrees().to_vec();
    degrees.push(0);
    certify_lie(GradedLieAlgebra::new(FreeModule::new(f, labels).unwrap(), degrees, br).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    /// For abelian `L` every boundary vanishes, so `H₂^gr` is all of `(∧²L)₀`:
    /// pairs across degrees ∓1 plus pairs inside degree 0.
    #[test]
    fn abelian_homology(a in 0usize..3, b in 0usize..3, c in 0usize..3, m in 0usize..3) {
        let f = Field::Rational;
        let degrees: Vec<i32> = [(-1, a), (0, b), (1, c)].iter().flat_map(|&(d, k)| std::iter::repeat_n(d, k)).collect();
        let l = abelian(f, degrees);
        let expected = a * c + binomial(b, 2);
        prop_assert_eq!(h2_graded(&l).dim, expected);
        prop_assert_eq!(h2_cohomology_graded(&l, m), m * expected);
        prop_assert_eq!(h2_ungraded(&l).unwrap().dim, binomial(a + b + c, 2));
    }

    #[test]
    fn zero_pair_utkk_is_closed(a in 1usize..3, b in 1usize..3) {
        let f = Field::Rational;
        let p = certify_pair(JordanPair::zero(f, a, b)).unwrap();
        let u = utkk(&p).unwrap();
        prop_assert_eq!(h2_graded(&u.algebra).dim, 0);
        prop_assert!(roundtrip_iso(&u.algebra).unwrap().is_iso());
        // the base abelian algebra has H₂ = a·b and a non-split twist
        let base = &u.tkk.algebra;
        let h = h2_graded(base);
        prop_assert_eq!(h.dim, a * b);
        let ext = twisted_extension(base, &h.witnesses[0]).unwrap();
        let is_obstruction = matches!(split_central_zero_extension(&ext).unwrap(), Split::Obstruction { .. });
        prop_assert!(is_obstruction);
    }
}

#[test]
fn boundaries_compose_to_zero_on_fixtures() {
    let f = Field::Rational;
    let mut algebras = vec![sl2(f).0, sl(f, 4, &[1, 1, 0, 0]), sl(f, 3, &[1, 0, 0]), sl2_central(f)];
    for j in [diag(f, 2), spin(f, 2), mat2sym(f)] {
        algebras.push(utkk(&algebra_to_pair(&j).0).unwrap().algebra);
    }
    for l in &algebras {
        for graded in [true, false] {
            let d1 = boundary_matrix(l, 1, graded);
            let d2 = boundary_matrix(l, 2, graded);
            assert!(d1.mul(&d2).is_zero());
        }
    }
}

#[test]
fn cohomology_is_dual_to_homology() {
    let f = Field::Prime(7);
    for l in [sl2(f).0, sl(f, 4, &[1, 1, 0, 0]), abelian(f, vec![-1, -1, 1])] {
        assert!(is_zero_perfect(&l));
        let h = h2_graded(&l).dim;
        for m in [1, 2] {
            assert_eq!(h2_cohomology_graded(&l, m), m * h);
        }
    }
}

#[test]
fn closedness_needs_zero_perfect() {
    let f = Field::Rational;
    assert_eq!(is_centrally_zero_closed(&sl2_central(f)), Err(HomError::NotZeroPerfect));
    assert_eq!(is_centrally_zero_closed(&abelian(f, vec![-1, 1])), Ok(false));
    assert_eq!(is_centrally_zero_closed(&sl(f, 4, &[1, 1, 0, 0])), Ok(true));
}

#[test]
fn splitting_and_uniqueness() {
    let f = Field::Rational;
    let l = sl(f, 4, &[1, 1, 0, 0]);
    let a = match split_central_zero_extension(&identity_extension(&l)).unwrap() {
        Split::Split(psi) => psi,
        Split::Obstruction { .. } => panic!("identity splits"),
    };
    let cover = universal_cover(&l).unwrap();
    let b = match split_central_zero_extension(&cover).unwrap() {
        Split::Split(psi) => psi,
        Split::Obstruction { .. } => panic!("closed base splits"),
    };
    assert!(splittings_agree(&l, &a, &a));
    assert_eq!(a.matrix.rows(), l.dim());
    assert_eq!(b.matrix.cols(), l.dim());
    assert!(Matrix::identity(f, l.dim()) == cover.map.matrix.mul(&b.matrix));
}

#[test]
fn universality_recognition() {
    let f = Field::Rational;
    let ext = quotient_by_central(&sl2_central(f)).unwrap();
    assert_eq!(ext.base.dim(), 3);
    assert_eq!(ext.kernel.len(), 1);
    let v = verify_universal(&ext);
    assert!(!v.universal);
    assert_eq!(v.reason.as_deref(), Some("total not 0-perfect"));
    assert!(verify_universal(&identity_extension(&sl2(f).0)).universal);
    let ab = abelian(f, vec![-1, 1]);
    assert_eq!(
        verify_universal(&identity_extension(&ab)).reason.as_deref(),
        Some("total not centrally 0-closed")
    );
}

#[test]
fn roundtrip_failures_report_the_cause() {
    let f = Field::Rational;
    match roundtrip_iso(&abelian(f, vec![-1, 0, 1])).unwrap() {
        RoundTrip::Failure { zero_perfect, .. } => assert!(!zero_perfect),
        RoundTrip::Iso(_) => panic!("L₀ is not spanned by brackets"),
    }
    match roundtrip_iso(&abelian(f, vec![-1, 1])).unwrap() {
        RoundTrip::Failure { zero_perfect, h2 } => {
            assert!(zero_perfect);
            assert_eq!(h2.dim, 1);
        }
        RoundTrip::Iso(_) => panic!("H₂ ≠ 0"),
    }
    assert!(roundtrip_iso(&sl(f, 3, &[1, 0, 0])).unwrap().is_iso());
}

#[test]
fn pair_hom_extensions() {
    let f = Field::Rational;
    let p = rect(f, 2, 1);
    let u = utkk(&p).unwrap();
    let id = PairHom::identity(&p);
    let ident = extend_pair_hom(&u, &id, &u.algebra).unwrap();
    assert_eq!(ident.matrix, Matrix::identity(f, u.algebra.dim()));
    let ups = extend_pair_hom(&u, &id, &u.tkk.algebra).unwrap();
    assert_eq!(ups, u.upsilon.map);
    let zero = extend_pair_hom(&u, &PairHom::zero(&p, &p), &u.algebra).unwrap();
    assert!(zero.matrix.is_zero());
}

#[test]
fn involutary_and_a1_extensions() {
    let f = Field::Rational;
    for j in [diag(f, 1), spin(f, 2), mat2sym(f)] {
        let t = algebra_to_triple(&j);
        let inv = utkk_involution(&t).unwrap();
        let ext = extend_jts_hom(&Matrix::identity(f, j.dim()), &t, &inv.utkk.algebra, &inv.kappa_hat).unwrap();
        assert_eq!(ext.hom.matrix, Matrix::identity(f, inv.utkk.algebra.dim()));
        let hat = utkk_sl2(&j).unwrap();
        let e = extend_ja_hom(&Matrix::identity(f, j.dim()), &j, &hat.utkk.algebra, &hat.triple).unwrap();
        assert_eq!(e.hom.matrix, Matrix::identity(f, hat.utkk.algebra.dim()));
        assert_eq!(e.scaling, InvolutionScaling::Normalized);
    }
}

/// `J = k` into `sl₂` with its standard triple: `forget_to_ja(sl₂)` has
/// `u∘u = 2u`, so `γ(1) = e/2` is the unital hom and the extension is bijective.
#[test]
fn k_into_sl2_is_bijective() {
    let f = Field::Rational;
    let (l, s) = sl2(f);
    let k1 = diag(f, 1);
    let g = Matrix::from_rows(f, 1, &[vec![f.ratio(1, 2)]]);
    let e = extend_ja_hom(&g, &k1, &l, &s).unwrap();
    assert!(e.hom.is_bijective());
    assert_eq!(e.hom.matrix.rank(), 3);
}

#[test]
fn ungraded_h2_of_a1_graded_examples() {
    let f = Field::Rational;
    assert_eq!(h2_ungraded(&sl2(f).0).unwrap().dim, 0);
    let u = utkk_sl2(&diag(f, 1)).unwrap();
    assert_eq!(h2_ungraded(&u.utkk.algebra).unwrap().dim, 0);
    // sl₅ sits exactly at the cap, sl₆ is past it
    let at_cap = utkk(&rect(f, 1, 4)).unwrap();
    assert_eq!(h2_ungraded(&at_cap.algebra).unwrap().dim, 0);
    let past = utkk(&rect(f, 1, 5)).unwrap();
    assert!(matches!(h2_ungraded(&past.algebra), Err(HomError::TooLarge { dim: 35, .. })));
}

/// A chain that is not a cycle gives a coboundary twist, which splits; a
/// boundary gives no twist at all.
#[test]
fn twists_by_non_cycles_split_and_boundaries_are_rejected() {
    let f = Field::Rational;
    let (l, _) = sl2(f);
    let one: Vector = vec![f.one()];
    let ext = twisted_extension(&l, &one).unwrap();
    assert!(matches!(split_central_zero_extension(&ext).unwrap(), Split::Split(_)));
    let l = sl(f, 4, &[1, 1, 0, 0]);
    let b2 = boundary(&l, 2, true);
    let col = b2.columns.iter().find(|c| !c.is_empty()).unwrap();
    let mut dense = vec![f.zero(); b2.codomain.dim()];
    for (i, v) in col.iter() {
        dense[*i] = v.clone();
    }
    assert!(twisted_extension(&l, &dense).is_err());
}
