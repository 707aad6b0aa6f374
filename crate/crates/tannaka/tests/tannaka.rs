use linear_hopf::fixtures::{corrupted_z2, cyclic, idempotent, s3, sweedler, z2, z3_functions};
use linear_hopf::{check_bialgebra, Bialgebra, Matrix, Scalar};
use proptest::prelude::*;
use tannaka::*;

fn family(h: &Bialgebra, ms: Vec<Comodule>, depth: usize) -> GeneratingFamily {
    GeneratingFamily::new(h.clone(), ms, depth).unwrap()
}

#[test]
fn hom_dimensions() {
    let h = z2();
    let (r, t) = (regular_comodule(&h), trivial_comodule(&h));
    assert_eq!(comodule_hom(&h, &r, &r).unwrap().len(), 2);
    let units = comodule_hom(&h, &t, &r).unwrap();
    assert_eq!(units.len(), 1);
    // the unit map, up to scalar
    assert_eq!(units[0].rank(), 1);
    assert!(units[0].get(1, 0).is_zero());
    let rr = tensor_comodule(&h, &r, &r).unwrap();
    assert_eq!(comodule_hom(&h, &rr, &rr).unwrap().len(), 8);
}

#[test]
fn hom_contains_identity() {
    for h in [z2(), s3(), sweedler(), idempotent()] {
        let r = regular_comodule(&h);
        let homs = comodule_hom(&h, &r, &r).unwrap();
        assert_eq!(homs.len(), h.n);
        // the identity lies in the span
        let mut a = Matrix::zeros(h.n * h.n, homs.len());
        for (c, phi) in homs.iter().enumerate() {
            for k in 0..h.n * h.n {
                a.set(k, c, phi.data[k].clone());
            }
        }
        let id = Matrix::identity(h.n);
        assert!(a.solve(&Matrix::column(id.data.clone())).unwrap().is_some());
    }
}

#[test]
fn trivial_is_a_tensor_unit() {
    for h in [z2(), sweedler()] {
        let (r, t) = (regular_comodule(&h), trivial_comodule(&h));
        assert_eq!(tensor_comodule(&h, &t, &r).unwrap(), r);
        assert_eq!(tensor_comodule(&h, &r, &t).unwrap(), r);
    }
}

#[test]
fn tensor_products_are_comodules() {
    for h in [s3(), sweedler(), idempotent()] {
        let r = regular_comodule(&h);
        check_comodule(&h, &tensor_comodule(&h, &r, &r).unwrap()).unwrap();
    }
}

#[test]
fn duals() {
    let h = s3();
    let d = dual_comodule(&h, &regular_comodule(&h)).unwrap();
    check_comodule(&h, &d).unwrap();
    let h = sweedler();
    let r = regular_comodule(&h);
    let d = dual_comodule(&h, &r).unwrap();
    check_comodule(&h, &d).unwrap();
    // evaluation M ⊗ M* → 1 is a comodule map
    let md = tensor_comodule(&h, &r, &d).unwrap();
    let n = h.n;
    let mut ev = Matrix::zeros(1, n * n);
    for i in 0..n {
        ev.set(0, i * n + i, Scalar::one());
    }
    let t = trivial_comodule(&h);
    assert_eq!(t.rho.mul(&ev).unwrap(), h.id().kron(&ev).mul(&md.rho).unwrap());
    assert!(dual_comodule(&idempotent(), &regular_comodule(&idempotent())).is_err());
}

#[test]
fn not_a_comodule() {
    let h = z2();
    let bad = Comodule::new(2, Matrix::zeros(4, 2));
    assert!(matches!(check_comodule(&h, &bad), Err(TannakaError::NotComodule(_))));
    assert!(GeneratingFamily::new(h, vec![bad], 2).is_err());
}

#[test]
fn z2_from_its_regular_comodule() {
    let h = z2();
    let f = family(&h, vec![regular_comodule(&h)], 2);
    let rec = coend_reconstruct(&f, Some(&h)).unwrap();
    assert_eq!(rec.bialgebra.n, 2);
    assert!(rec.canonical.is_invertible());
    assert!(rec.verdict.unwrap().isomorphism);
}

#[test]
fn one_point_family_gives_the_trivial_bialgebra() {
    let h = s3();
    let f = family(&h, vec![trivial_comodule(&h)], 2);
    assert_eq!(f.members.len(), 1);
    let rec = coend_reconstruct(&f, Some(&h)).unwrap();
    assert_eq!(rec.bialgebra, linear_hopf::fixtures::trivial());
    let v = rec.verdict.unwrap();
    assert!(!v.isomorphism);
    assert!(v.coalgebra_map && v.algebra_map);
    assert_eq!(v.canonical_rank, 1);
}

#[test]
fn sweedler_at_depth_two() {
    let h = sweedler();
    let f = family(&h, vec![regular_comodule(&h)], 2);
    let rec = coend_reconstruct(&f, Some(&h)).unwrap();
    assert!(check_bialgebra(&rec.bialgebra).unwrap().all_pass());
    let v = rec.verdict.unwrap();
    assert!(v.isomorphism, "{v:?}");
}

#[test]
fn round_trips() {
    for (name, h) in [("Q[Z/2]", z2()), ("Q[S3]", s3()), ("sweedler", sweedler()), ("Q[M]", idempotent()), ("Q^Z3", z3_functions())] {
        let r = round_trip(&h, 2).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
    }
    let r = round_trip(&idempotent(), 2).unwrap();
    assert_eq!((r.hopf, r.cohopf), ((false, false), (false, false)));
}

#[test]
fn corrupted_reference_is_not_isomorphic() {
    let h = z2();
    let f = family(&h, vec![regular_comodule(&h)], 2);
    let v = coend_reconstruct(&f, Some(&corrupted_z2())).unwrap().verdict.unwrap();
    assert!(!v.isomorphism);
    assert!(!v.coalgebra_map);
    assert!(v.failure.unwrap().contains("Δ"));
    assert!(round_trip(&corrupted_z2(), 2).is_err());
}

#[test]
fn depth_one_is_not_closed() {
    let h = z2();
    let f = family(&h, vec![regular_comodule(&h)], 1);
    match coend_reconstruct(&f, None) {
        Err(TannakaError::Closure { depth, product }) => {
            assert_eq!(depth, 1);
            assert_eq!(product, "M1 ⊗ M1");
        }
        other => panic!("expected a closure error, got {:?}", other.map(|r| r.bialgebra)),
    }
}

#[test]
fn canonical_map_is_a_coalgebra_map() {
    let h = sweedler();
    let r = regular_comodule(&h);
    let d = dual_comodule(&h, &r).unwrap();
    let f = family(&h, vec![r, d], 2);
    let v = coend_reconstruct(&f, Some(&h)).unwrap().verdict.unwrap();
    assert!(v.coalgebra_map && v.algebra_map);
    assert!(v.isomorphism);
}

#[test]
fn family_json_round_trip() {
    let h = sweedler();
    let file = FamilyFile::from_parts(&h, &[regular_comodule(&h)], 2);
    let text = serde_json::to_string(&file).unwrap();
    let f = FamilyFile::parse(&text).unwrap().into_family(|_| unreachable!()).unwrap();
    let rec = coend_reconstruct(&f, Some(&h)).unwrap();
    assert!(rec.verdict.unwrap().isomorphism);

    let named = r#"{"bialgebra":"sweedler","comodules":["regular","dual-regular"],"depth":2}"#;
    let f = FamilyFile::parse(named)
        .unwrap()
        .into_family(|s| linear_hopf::fixtures::by_name(s).ok_or_else(|| TannakaError::Parse(s.into())))
        .unwrap();
    assert_eq!(f.members.len(), 3);
}

fn conjugate(h: &Bialgebra, m: &Comodule, p: &Matrix) -> Comodule {
    let pi = p.inverse().unwrap();
    Comodule::new(m.d, h.id().kron(&pi).mul(&m.rho).unwrap().mul(p).unwrap())
}

fn unipotent(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..3, n * n).prop_map(move |v| {
        let mut m = Matrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, Scalar::from_int(v[i * n + j]));
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cyclic_groups_round_trip(k in 1usize..5) {
        let r = round_trip(&cyclic(k), 2).unwrap();
        prop_assert!(r.passed());
    }

    #[test]
    fn coend_dimension_is_bounded_and_monotone(pick in 0usize..3, frac in 0usize..=8) {
        let h = [z2(), sweedler(), idempotent()][pick].clone();
        let f = family(&h, vec![regular_comodule(&h)], 2);
        let rel = f.relation_matrix();
        let total: usize = f.members.iter().map(|m| m.d * m.d).sum();
        let k = rel.cols * frac / 8;
        let (a, b) = (coend_dimension(&rel, k), coend_dimension(&rel, rel.cols));
        prop_assert!(a <= total);
        prop_assert!(b <= a);
        prop_assert!(coend_dimension(&rel, k / 2) >= a);
    }

    #[test]
    fn isomorphic_comodules_reconstruct_the_same(p in unipotent(4)) {
        let h = sweedler();
        let r = regular_comodule(&h);
        let c = conjugate(&h, &r, &p);
        check_comodule(&h, &c).unwrap();
        prop_assert_eq!(comodule_hom(&h, &c, &c).unwrap().len(), 4);
        prop_assert_eq!(comodule_hom(&h, &r, &c).unwrap().len(), 4);
        let f = family(&h, vec![c], 2);
        let v = coend_reconstruct(&f, Some(&h)).unwrap().verdict.unwrap();
        prop_assert!(v.isomorphism);
    }
}
