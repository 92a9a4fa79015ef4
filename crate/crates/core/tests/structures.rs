mod common;

use common::*;
use proptest::prelude::*;
use tkk_core::exactla::{Field, Matrix};
use tkk_core::freemod::BilinearMap;
use tkk_core::jordan::{
    algebra_to_pair, algebra_to_triple, check_algebra, check_algebra_hom, check_pair, check_pair_hom, check_triple,
    double_jts, JordanAlgebra, JordanPair, PairHom, Sign, DEFAULT_SEED,
};
use tkk_core::liegrad::{
    center, check_graded_lie, forget_to_ja, forget_to_pair, grading_from_sl2, is_zero_perfect, GradedLieAlgebra,
    LieError, NotA1, Sl2Triple,
};

fn mutated(f: Field, i: usize, j: usize, l: usize) -> JordanAlgebra {
    let j0 = mat2sym_raw(f);
    let mut m = BilinearMap::zero(f, 4, 4, 4);
    for (a, b, c, v) in j0.product().entries() {
        m.add_entry(a, b, c, v.clone()).unwrap();
    }
    m.add_entry(i, j, l, f.one()).unwrap();
    JordanAlgebra::new(j0.module().clone(), m, j0.identity().to_vec()).unwrap()
}

#[test]
fn fixtures_pass_over_every_field() {
    for f in fields() {
        for n in 1..=4 {
            diag(f, n);
            spin(f, n);
        }
        mat2sym(f);
        rect(f, 2, 3);
        sl2(f);
        sl(f, 4, &[1, 1, 0, 0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn single_mutation_of_mat2sym_is_caught(i in 0usize..4, j in 0usize..4, l in 0usize..4) {
        let v = check_algebra(&mutated(Field::Rational, i, j, l), DEFAULT_SEED).unwrap_err();
        prop_assert!(!v.witness.is_empty());
    }
}

#[test]
fn every_mutation_of_a_rect_pair_fails() {
    let f = Field::Rational;
    let p = rect(f, 2, 2);
    for idx in 0..256 {
        let (i, j, c, k) = (idx % 4, (idx / 4) % 4, (idx / 16) % 4, idx / 64);
        let mut t = p.product(Sign::Minus).clone();
        t.add_entry([i, j, c, k], f.one()).unwrap();
        let q = JordanPair::new(p.module(Sign::Minus).clone(), p.module(Sign::Plus).clone(), t, p.product(Sign::Plus).clone())
            .unwrap();
        assert!(check_pair(&q).is_err(), "{:?}", (i, j, c, k));
    }
}

#[test]
fn commutativity_witness_is_first_pair() {
    let v = check_algebra(&mutated(Field::Rational, 0, 1, 0), DEFAULT_SEED).unwrap_err();
    assert_eq!(v.law, "commutativity");
    assert_eq!(v.witness, vec![0, 1]);
}

#[test]
fn doubling_and_triples() {
    let f = Field::Rational;
    for j in [diag(f, 3), spin(f, 2), mat2sym(f)] {
        let t = algebra_to_triple(&j);
        assert!(check_triple(&t).is_ok());
        let (p, inv) = double_jts(&t);
        assert!(check_pair(&p).is_ok());
        assert_eq!(inv.minus, Matrix::identity(f, j.dim()));
        let (q, one) = algebra_to_pair(&j);
        assert!(q.same_structure(&p));
        assert_eq!(one, j.identity());
    }
}

#[test]
fn pair_homs() {
    let f = Field::Rational;
    let p = rect(f, 1, 2);
    assert!(check_pair_hom(&PairHom::identity(&p), &p, &p).is_ok());
    assert!(check_pair_hom(&PairHom::zero(&p, &p), &p, &p).is_ok());
    let bad = PairHom {
        minus: Matrix::identity(f, 2).scale(&f.from_i64(2)),
        plus: Matrix::identity(f, 2),
    };
    assert!(check_pair_hom(&bad, &p, &p).is_err());
    let j = diag(f, 2);
    let swap = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
    assert!(check_algebra_hom(&swap, &j, &j).is_ok());
    let collapse = Matrix::from_i64(f, &[&[1, 1], &[0, 0]]);
    assert!(check_algebra_hom(&collapse, &j, &j).is_err());
}

#[test]
fn lie_fixtures_are_graded() {
    let f = Field::Prime(7);
    let l = sl(f, 4, &[1, 1, 0, 0]);
    assert!(check_graded_lie(&l).is_ok());
    assert_eq!((l.component_dim(-1), l.component_dim(0), l.component_dim(1)), (4, 7, 4));
    assert!(is_zero_perfect(&l));
    assert!(center(&l).is_empty());
    let p = forget_to_pair(&l).unwrap();
    // [[E_ij, E_kl], E_mn] on a 2×2 block: the pair is again rectangular
    assert!(check_pair(&p).is_ok());
    assert_eq!((p.dim(Sign::Minus), p.dim(Sign::Plus)), (4, 4));
}

#[test]
fn broken_jacobi_is_caught() {
    let f = Field::Rational;
    let (l, _) = sl2(f);
    let mut br = l.structure().clone();
    br.add_entry(0, 1, 0, f.one()).unwrap();
    br.add_entry(1, 0, 0, -f.one()).unwrap();
    let bad = GradedLieAlgebra::new(l.module().clone(), l.degrees().to_vec(), br).unwrap();
    assert!(check_graded_lie(&bad).is_err());
}

#[test]
fn sl3_with_odd_weights_is_not_a1() {
    let f = Field::Rational;
    let l = sl(f, 3, &[0, 0, 0]);
    // basis E01, E02, E10, E12, E20, E21, H0, H1
    let s = Sl2Triple {
        h: unit(f, 8, 6),
        e: unit(f, 8, 0),
        f: unit(f, 8, 2),
    };
    assert!(matches!(
        grading_from_sl2(&l, &s),
        Err(LieError::NotA1(NotA1::NonIntegralWeights))
    ));
}

#[test]
fn sl2_grading_and_forget_to_ja() {
    let f = Field::Rational;
    let (l, s) = sl2(f);
    let a1 = grading_from_sl2(&l, &s).unwrap();
    let dims: Vec<usize> = [-1, 0, 1].iter().map(|&d| a1.algebra.component_dim(d)).collect();
    assert_eq!(dims, vec![1, 1, 1]);
    let j = forget_to_ja(&l, &s).unwrap();
    assert_eq!(j.dim(), 1);
    // e∘e = [[e,f],e] = 2e, identity e/2
    assert_eq!(j.mul(&[f.one()], &[f.one()]), vec![f.from_i64(2)]);
    assert_eq!(j.identity(), &[f.ratio(1, 2)]);
}
