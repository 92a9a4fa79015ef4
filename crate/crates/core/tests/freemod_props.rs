use proptest::prelude::*;
use tkk_core::exactla::{Field, Scalar, Vector};
use tkk_core::freemod::{binomial, sort_with_sign, tensor_index, tensor_vectors, wedge, wedge_of_degree};

fn degrees() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-1i32..=1, 0..8)
}

proptest! {
    #[test]
    fn wedge_dimension_is_binomial(ds in degrees(), n in 1usize..4) {
        prop_assert_eq!(wedge(&ds, n).dim(), binomial(ds.len(), n));
    }

    #[test]
    fn degree_slices_partition(ds in degrees(), n in 1usize..4) {
        let w = wedge(&ds, n);
        let mut seen = vec![false; w.dim()];
        for d in -(n as i64)..=(n as i64) {
            let slice = w.degree_slice(d);
            prop_assert_eq!(slice.len(), wedge_of_degree(&ds, n, d).dim());
            for i in slice {
                prop_assert!(!seen[i]);
                prop_assert_eq!(w.degree(i), d);
                seen[i] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|x| x));
    }

    #[test]
    fn transposition_flips_sign(ds in degrees().prop_filter("need three", |d| d.len() >= 3), a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let n = ds.len();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assume!(a != b && b != c && a != c);
        let w = wedge(&ds, 3);
        let (p, s) = w.locate(&[a, b, c]).unwrap();
        let (q, t) = w.locate(&[b, a, c]).unwrap();
        prop_assert_eq!(p, q);
        prop_assert_ne!(s, t);
        let (r, u) = w.locate(&[b, c, a]).unwrap();
        prop_assert_eq!(p, r);
        prop_assert_eq!(s, u);
        prop_assert!(w.locate(&[a, a, c]).is_none());
    }

    #[test]
    fn sort_sign_is_parity(xs in prop::collection::vec(0usize..20, 0..6)) {
        match sort_with_sign(&xs) {
            None => {
                let mut s = xs.clone();
                s.sort_unstable();
                s.dedup();
                prop_assert!(s.len() < xs.len());
            }
            Some((sorted, odd)) => {
                let inversions = (0..xs.len())
                    .flat_map(|i| (i + 1..xs.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| xs[i] > xs[j])
                    .count();
                prop_assert_eq!(odd, inversions % 2 == 1);
                prop_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn wedge_vectors_is_alternating(xs in prop::collection::vec(-3i64..=3, 8)) {
        let f = Field::Rational;
        let w = wedge(&[0; 4], 2);
        let x: Vector = xs[..4].iter().map(|&v| f.from_i64(v)).collect();
        let y: Vector = xs[4..].iter().map(|&v| f.from_i64(v)).collect();
        let xy = w.wedge_vectors(f, &[x.clone(), y.clone()]);
        let yx = w.wedge_vectors(f, &[y, x.clone()]);
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| (a + b).is_zero()));
        prop_assert!(w.wedge_vectors(f, &[x.clone(), x]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn tensor_of_units(i in 0usize..4, j in 0usize..5) {
        let f = Field::Prime(7);
        let u: Vector = (0..4).map(|k| if k == i { f.one() } else { f.zero() }).collect();
        let v: Vector = (0..5).map(|k| if k == j { f.one() } else { f.zero() }).collect();
        let t = tensor_vectors(&u, &v);
        prop_assert_eq!(t.len(), 20);
        let hits: Vec<usize> = (0..20).filter(|&k| !t[k].is_zero()).collect();
        prop_assert_eq!(hits, vec![tensor_index(5, i, j)]);
    }
}

#[test]
fn wedge_of_sl2_grading() {
    // f, h, e in degrees −1, 0, 1: (∧²)₀ = {f∧e}, (∧³)₀ = {f∧h∧e}
    let ds = [-1, 0, 1];
    assert_eq!(wedge_of_degree(&ds, 2, 0).tuples(), &[vec![0, 2]]);
    assert_eq!(wedge_of_degree(&ds, 3, 0).dim(), 1);
    assert_eq!(wedge_of_degree(&ds, 2, 1).dim(), 1);
}
