use cornerk_core::complex::{build_cube, build_simplex, parse_builtin, product};
use cornerk_core::ktheory::{e1_page, e2_page};
use cornerk_core::{AbelianGroup, CornerComplex};
use proptest::prelude::*;

fn builtins() -> Vec<CornerComplex> {
    let mut out: Vec<CornerComplex> = (0..=4).map(build_cube).chain((0..=4).map(build_simplex)).collect();
    out.push(parse_builtin("product:cube:1,simplex:2").unwrap());
    out.push(parse_builtin("product:simplex:2,simplex:2").unwrap());
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn coboundary_squares_to_zero() {
    for c in builtins() {
        assert!(c.is_valid(), "{}", c.name());
        for l in 1..c.dim() {
            let a = c.incidence_matrix(l).unwrap();
            let b = c.incidence_matrix(l + 1).unwrap();
            assert!(b.mul(&a).unwrap().is_zero(), "{} at {l}", c.name());
        }
    }
}

#[test]
fn simplex_face_counts() {
    for n in 0..=5 {
        let c = build_simplex(n);
        let counts: Vec<usize> = (0..=n).map(|l| binomial(n + 1, l + 1)).collect();
        assert_eq!(c.face_counts(), counts);
    }
}

#[test]
fn json_roundtrip() {
    for c in builtins() {
        let back = CornerComplex::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}

#[test]
fn contractible_pages() {
    for c in builtins() {
        let e2 = e2_page(&c).unwrap();
        let nz = e2.nonzero();
        assert_eq!(nz.len(), 1, "{}", c.name());
        assert_eq!((nz[0].0, nz[0].1), (0, c.dim() % 2));
        assert_eq!(nz[0].2, &AbelianGroup::free(1));
    }
}

fn small_complex() -> impl Strategy<Value = CornerComplex> {
    prop_oneof![
        (0usize..=3).prop_map(build_cube),
        (0usize..=3).prop_map(build_simplex),
        ((1usize..=2), (1usize..=2)).prop_map(|(a, b)| product(&build_cube(a), &build_simplex(b))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orientation_gauge_invariance(c in small_complex(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let mut flipped = c.clone();
        for p in &picks {
            let id = c.faces()[p.index(c.faces().len())].id.clone();
            flipped = flipped.flip_orientation(&id).unwrap();
        }
        prop_assert!(flipped.is_valid());
        prop_assert_eq!(e2_page(&flipped).unwrap().groups, e2_page(&c).unwrap().groups);
        prop_assert_eq!(e1_page(&flipped).unwrap().total_rank(), e1_page(&c).unwrap().total_rank());
    }

    #[test]
    fn product_face_counts(a in small_complex(), b in small_complex()) {
        let p = product(&a, &b);
        let (ca, cb) = (a.face_counts(), b.face_counts());
        let expected: Vec<usize> = (0..=a.dim() + b.dim())
            .map(|l| (0..=l).filter(|i| *i <= a.dim() && l - i <= b.dim()).map(|i| ca[i] * cb[l - i]).sum())
            .collect();
        prop_assert_eq!(p.face_counts(), expected);
        prop_assert!(p.is_valid());
    }

    #[test]
    fn cube_face_counts(n in 0usize..=6) {
        let c = build_cube(n);
        let expected: Vec<usize> = (0..=n).map(|l| binomial(n, l) << (n - l)).collect();
        prop_assert_eq!(c.face_counts(), expected);
    }
}
