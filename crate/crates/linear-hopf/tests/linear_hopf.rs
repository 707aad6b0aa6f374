use linear_hopf::fixtures::{self, corrupted_z2, idempotent, s3, super_line, sweedler, z2, z3_functions};
use linear_hopf::*;
use polygraph_core::{Builder, CellTerm};
use proptest::prelude::*;

fn hopf_fixtures() -> Vec<(&'static str, Bialgebra)> {
    vec![
        ("Q[Z/2]", z2()),
        ("Q[S3]", s3()),
        ("Q^Z3", z3_functions()),
        ("sweedler", sweedler()),
        ("super line", super_line()),
        ("trivial", fixtures::trivial()),
    ]
}

fn all_valid() -> Vec<(&'static str, Bialgebra)> {
    let mut v = hopf_fixtures();
    v.push(("Q[M]", idempotent()));
    v
}

fn q(a: i64) -> Scalar {
    Scalar::from_int(a)
}

mod oracles {
    use super::*;

    /// Sweedler's algebra rebuilt from normal forms g^a x^b, index a + 2b.
    pub fn sweedler_normal_forms() -> Bialgebra {
        let n = 4;
        let idx = |a: usize, b: usize| a + 2 * b;
        let prod = |i: usize, j: usize| -> Option<(i64, usize)> {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d >= 2 {
                return None;
            }
            let s = if b * c == 1 { -1 } else { 1 };
            Some((s, idx((a + c) % 2, b + d)))
        };
        let mut m = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                if let Some((s, k)) = prod(i, j) {
                    m.set(k, i * n + j, q(s));
                }
            }
        }
        // Δ(g^a x^b) = Δ(g)^a Δ(x)^b in H⊗H with the factorwise product
        let tensor_mul = |u: &[(i64, usize, usize)], v: &[(i64, usize, usize)]| {
            let mut out = Vec::new();
            for &(c1, p1, q1) in u {
                for &(c2, p2, q2) in v {
                    if let (Some((s1, p)), Some((s2, qq))) = (prod(p1, p2), prod(q1, q2)) {
                        out.push((c1 * c2 * s1 * s2, p, qq));
                    }
                }
            }
            out
        };
        let dg = vec![(1, 1, 1)];
        let dx = vec![(1, 2, 0), (1, 1, 2)];
        let mut delta = Matrix::zeros(n * n, n);
        for a in 0..2 {
            for b in 0..2 {
                let mut t = vec![(1i64, 0usize, 0usize)];
                if a == 1 {
                    t = tensor_mul(&t, &dg);
                }
                if b == 1 {
                    t = tensor_mul(&t, &dx);
                }
                for (c, p, qq) in t {
                    let v = delta.get(p * n + qq, idx(a, b)) + &q(c);
                    delta.set(p * n + qq, idx(a, b), v);
                }
            }
        }
        Bialgebra {
            n,
            grading: vec![0; n],
            braiding: Braiding::Flip,
            m,
            u: Matrix::from_ints(4, 1, &[1, 0, 0, 0]),
            delta,
            eps: Matrix::from_ints(1, 4, &[1, 1, 0, 0]),
            field: None,
        }
    }

    /// Permutations of three letters composed as functions.
    pub fn s3_table() -> (Vec<[usize; 3]>, Vec<Vec<usize>>) {
        let el = fixtures::s3_elements();
        let comp = |s: &[usize; 3], t: &[usize; 3]| -> [usize; 3] {
            let mut r = [0; 3];
            for (i, x) in r.iter_mut().enumerate() {
                *x = s[t[i]];
            }
            r
        };
        let table = el.iter().map(|s| el.iter().map(|t| el.iter().position(|r| *r == comp(s, t)).unwrap()).collect()).collect();
        (el, table)
    }
}

#[test]
fn sweedler_matches_normal_form_oracle() {
    assert_eq!(sweedler(), oracles::sweedler_normal_forms());
}

#[test]
fn s3_is_the_permutation_group() {
    let (el, table) = oracles::s3_table();
    let b = s3();
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(b.m.get(table[i][j], i * 6 + j), &Scalar::one());
        }
    }
    let inv = |i: usize| (0..6).find(|&j| table[i][j] == 0).unwrap();
    let s = antipode(&b).unwrap().s;
    for i in 0..6 {
        assert_eq!(s.get(inv(i), i), &Scalar::one(), "S({:?})", el[i]);
    }
    // non-commutative
    assert!((0..6).any(|i| (0..6).any(|j| table[i][j] != table[j][i])));
}

#[test]
fn fixtures_satisfy_the_axioms() {
    for (name, b) in all_valid() {
        let r = check_bialgebra(&b).unwrap();
        assert!(r.all_pass(), "{name}: {r:?}");
        assert_eq!(r.axioms.len(), 7);
    }
}

#[test]
fn corrupted_delta_has_a_witness() {
    let r = check_bialgebra(&corrupted_z2()).unwrap();
    assert!(!r.all_pass());
    let c = r.get("counit").unwrap();
    assert!(!c.pass);
    // (ε⊗id)Δ(g) = 1 instead of g
    assert_eq!(c.witness, Some(Witness { row: 0, col: 1, lhs: q(1), rhs: q(0) }));
    assert!(r.get("assoc").unwrap().pass);
}

#[test]
fn odd_structure_map_fails_grading() {
    let mut b = super_line();
    b.eps.set(0, 1, q(1));
    let r = check_bialgebra(&b).unwrap();
    assert!(!r.get("grading").unwrap().pass);
}

#[test]
fn z2_se_shear_is_the_permutation() {
    // g⊗h ↦ g⊗gh on (1,g)
    let want = Matrix::from_ints(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0]);
    assert_eq!(shear(&z2(), Which::SE).unwrap(), want);
}

#[test]
fn shear_invertibility_pairs() {
    for (name, b) in all_valid() {
        let inv = |w| shear(&b, w).unwrap().is_invertible();
        assert_eq!(inv(Which::NW), inv(Which::SE), "{name}");
        assert_eq!(inv(Which::NE), inv(Which::SW), "{name}");
    }
}

#[test]
fn idempotent_is_not_hopf() {
    let b = idempotent();
    for w in Which::ALL {
        let s = shear(&b, w).unwrap();
        assert!(!s.is_invertible(), "{w}");
        assert_eq!(s.rank(), 3);
    }
    match antipode(&b) {
        Err(HopfError::NoAntipode { kernel }) => {
            assert_eq!(kernel.len(), 1);
            let se = shear(&b, Which::SE).unwrap();
            assert!(se.mul(&kernel[0]).unwrap().is_zero());
        }
        other => panic!("expected NoAntipode, got {other:?}"),
    }
    assert!(convolution_inverse(&b).unwrap().is_none());
}

#[test]
fn antipode_axioms_on_hopf_fixtures() {
    for (name, b) in hopf_fixtures() {
        let h = antipode(&b).unwrap();
        assert!(check_convolution(&b, &h.s).unwrap().holds(), "{name}");
        let inv = inverse_from_antipode(&b, &h.s).unwrap();
        let se = shear(&b, Which::SE).unwrap();
        assert_eq!(inv, h.se_inverse, "{name}");
        assert_eq!(se.mul(&inv).unwrap(), Matrix::identity(b.n * b.n), "{name}");
        assert_eq!(inv.mul(&se).unwrap(), Matrix::identity(b.n * b.n), "{name}");
        assert_eq!(antipode_from_integrals(&b).unwrap(), h.s, "{name}");
        assert_eq!(convolution_inverse(&b).unwrap().as_ref(), Some(&h.s), "{name}");
        assert!(is_hopf(&b).unwrap());
        assert_eq!(is_cohopf(&b).unwrap(), h.s.is_invertible(), "{name}");
        let si = h.s_inv.as_ref().unwrap();
        assert_eq!(si.mul(&h.s).unwrap(), Matrix::identity(b.n), "{name}");
    }
}

#[test]
fn sweedler_antipode_has_order_four() {
    let b = sweedler();
    let s = antipode(&b).unwrap().s;
    // S(g) = g, S(x) = -gx, S(gx) = x
    let want = Matrix::from_ints(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
    assert_eq!(s, want);
    assert_ne!(s.pow(2).unwrap(), Matrix::identity(4));
    assert_eq!(s.pow(4).unwrap(), Matrix::identity(4));
    let solved = convolution_inverse(&oracles::sweedler_normal_forms()).unwrap().unwrap();
    assert_ne!(solved.pow(2).unwrap(), Matrix::identity(4));
    assert_eq!(solved.pow(4).unwrap(), Matrix::identity(4));
}

#[test]
fn super_line_antipode_is_minus_one_on_theta() {
    let s = antipode(&super_line()).unwrap().s;
    assert_eq!(s, Matrix::from_ints(2, 2, &[1, 0, 0, -1]));
}

#[test]
fn integrals_of_group_algebras() {
    for b in [z2(), s3(), fixtures::cyclic(5)] {
        let d = integrals(&b).unwrap();
        assert_eq!(d.integrals.len(), 1);
        assert_eq!(d.cointegrals.len(), 1);
        let mut delta_e = vec![q(0); b.n];
        delta_e[0] = q(1);
        assert_eq!(d.integrals[0].coords, delta_e);
        assert_eq!(d.cointegrals[0].coords, vec![q(1); b.n]);
        assert_eq!(d.pairing, Some(q(1)));
    }
}

#[test]
fn integrals_of_hopf_fixtures_are_lines() {
    for (name, b) in hopf_fixtures() {
        let d = integrals(&b).unwrap();
        assert!(d.is_unimodular_pair(), "{name}: {d:?}");
    }
    let d = integrals(&sweedler()).unwrap();
    assert_eq!(d.integrals[0].coords, vec![q(0), q(0), q(0), q(1)]);
    assert_eq!(d.cointegrals[0].coords, vec![q(0), q(0), q(1), q(1)]);
    let d = integrals(&super_line()).unwrap();
    assert_eq!((d.integrals[0].parity, d.cointegrals[0].parity), (1, 1));
}

#[test]
fn idempotent_integrals_pair_to_zero() {
    let d = integrals(&idempotent()).unwrap();
    assert_eq!((d.integrals.len(), d.cointegrals.len()), (1, 1));
    assert_eq!(d.pairing, Some(q(0)));
    assert!(matches!(antipode_from_integrals(&idempotent()), Err(HopfError::Condition(_))));
}

#[test]
fn dual_is_a_hopf_algebra_with_transposed_antipode() {
    for (name, b) in hopf_fixtures() {
        let d = dual(&b);
        assert!(check_bialgebra(&d).unwrap().all_pass(), "{name}");
        assert_eq!(dual(&d), b);
        let h = antipode(&b).unwrap();
        assert_eq!(antipode(&d).unwrap().s, dual_antipode(&h), "{name}");
    }
    // functions on Z/3 are dual to the group algebra
    let d = dual(&z3_functions());
    assert_eq!(d.m, fixtures::cyclic(3).m);
}

#[test]
fn json_round_trip() {
    for (name, b) in all_valid() {
        let s = b.to_json();
        assert_eq!(Bialgebra::from_json(&s).unwrap(), b, "{name}");
    }
}

#[test]
fn json_over_an_extension() {
    let s = r#"{"field":{"ext":"x^2+x+1"},"dim":2,"braiding":"flip",
        "m":[["1","0","0","1"],["0","1","1","0"]],
        "u":[["1"],["0"]],
        "delta":[["1","0"],["0","0"],["0","0"],["0","1"]],
        "epsilon":[["1","1"]]}"#;
    let b = Bialgebra::from_json(s).unwrap();
    assert!(b.field.is_some());
    assert!(check_bialgebra(&b).unwrap().all_pass());
    // the primitive idempotents of Q[Z/2] need no extension, but the
    // scalars still live in Q(ω)
    let w = Scalar::generator(b.field.as_ref().unwrap());
    assert_eq!(&(&w * &w) + &(&w + &Scalar::one()), Scalar::zero());
}

#[test]
fn json_rejects_bad_shapes() {
    let s = r#"{"field":"Q","dim":2,"m":[["1"]],"u":[["1"],["0"]],"delta":[],"epsilon":[["1","1"]]}"#;
    assert!(Bialgebra::from_json(s).is_err());
    let s = r#"{"field":"R","dim":1,"m":[["1"]],"u":[["1"]],"delta":[["1"]],"epsilon":[["1"]]}"#;
    assert!(matches!(Bialgebra::from_json(s), Err(HopfError::Parse(_))));
}

mod evaluation {
    use super::*;
    use walking::{bimnd_cells, universal_shear};

    #[test]
    fn universal_shear_is_ne() {
        let us = universal_shear().unwrap();
        for (name, b) in all_valid() {
            let e = evaluate(&b, us.presentation(), &us.term).unwrap();
            assert_eq!(e, shear(&b, Which::NE).unwrap(), "{name}");
            let img = evaluate_image(&b, &us.smash, &us.term, &us.image).unwrap();
            assert_eq!(img, e, "{name}");
        }
    }

    #[test]
    fn structure_cells() {
        let us = universal_shear().unwrap();
        let c = bimnd_cells();
        for (name, b) in all_valid() {
            for p in [us.presentation(), &us.smash.presentation] {
                assert_eq!(evaluate(&b, p, &c.mult).unwrap(), b.m, "{name}");
                assert_eq!(evaluate(&b, p, &c.comult).unwrap(), b.delta, "{name}");
                assert_eq!(evaluate(&b, p, &c.unit).unwrap(), b.u, "{name}");
                assert_eq!(evaluate(&b, p, &c.counit).unwrap(), b.eps, "{name}");
            }
        }
    }

    #[test]
    fn identity_is_identity() {
        let us = universal_shear().unwrap();
        let p = us.presentation();
        let src = us.source().unwrap();
        let b = s3();
        assert_eq!(evaluate(&b, p, &CellTerm::id(src)).unwrap(), Matrix::identity(36));
    }

    #[test]
    fn vertical_composition_is_matrix_product() {
        let us = universal_shear().unwrap();
        let p = us.presentation();
        let mut bld = Builder::new(p, walking::shear_source_diagram());
        bld.apply("A*m", false, Some(1), 0).unwrap();
        bld.apply("m*A", false, Some(0), 0).unwrap();
        let parts = bld.parts().to_vec();
        for (_, b) in all_valid() {
            let e0 = evaluate(&b, p, &parts[0]).unwrap();
            let e1 = evaluate(&b, p, &parts[1]).unwrap();
            let whole = evaluate(&b, p, &CellTerm::comp(2, parts[0].clone(), parts[1].clone())).unwrap();
            assert_eq!(whole, e1.mul(&e0).unwrap());
        }
    }

    #[test]
    fn inverse_of_m_is_singular() {
        let us = universal_shear().unwrap();
        let t = CellTerm::inv(CellTerm::gen("m*A"));
        let r = evaluate(&z2(), us.presentation(), &t);
        assert!(matches!(r, Err(HopfError::Eval(_)) | Err(HopfError::Core(_))), "{r:?}");
    }
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..5, n * n).prop_map(move |v| Matrix::from_ints(n, n, &v))
}

/// `P⁻¹ ∘ f ∘ P^{⊗k}` for a structure map with k inputs and l outputs.
fn transport(b: &Bialgebra, p: &Matrix) -> Bialgebra {
    let pi = p.inverse().unwrap();
    let (p2, pi2) = (p.kron(p), pi.kron(&pi));
    Bialgebra {
        m: pi.mul(&b.m).unwrap().mul(&p2).unwrap(),
        u: pi.mul(&b.u).unwrap(),
        delta: pi2.mul(&b.delta).unwrap().mul(p).unwrap(),
        eps: b.eps.mul(p).unwrap(),
        ..b.clone()
    }
}

fn unipotent(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..3, n * n).prop_map(move |v| {
        let mut m = Matrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, q(v[i * n + j]));
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seq_and_par_products_agree(a in small_matrix(7), b in small_matrix(7)) {
        let s = a.mul_seq(&b).unwrap();
        #[cfg(feature = "parallel")]
        prop_assert_eq!(&s, &a.mul_par(&b).unwrap());
        prop_assert_eq!(s, a.mul(&b).unwrap());
    }

    #[test]
    fn inverse_inverts(a in small_matrix(4)) {
        match a.inverse() {
            Ok(ai) => prop_assert_eq!(ai.mul(&a).unwrap(), Matrix::identity(4)),
            Err(_) => prop_assert!(a.rank() < 4),
        }
    }

    #[test]
    fn kron_mixed_product(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2), d in small_matrix(2)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)).unwrap(), a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()));
    }

    #[test]
    fn extension_field_inverses(c in proptest::collection::vec(-5i64..6, 3)) {
        let f = Modulus::parse("x^3-2").unwrap();
        let x = Scalar::generator(&f);
        let a = &(&Scalar::from_int(c[0]) + &(&Scalar::from_int(c[1]) * &x)) + &(&Scalar::from_int(c[2]) * &x.pow(2));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn change_of_basis_preserves_everything(k in 0usize..4, p in unipotent(4)) {
        let b = [z2(), sweedler(), idempotent(), fixtures::cyclic(3)][k].clone();
        let n = b.n;
        let p = if n == 4 { p } else {
            let mut m = Matrix::identity(n);
            for i in 0..n { for j in 0..n { m.set(i, j, p.get(i, j).clone()); } }
            m
        };
        let t = transport(&b, &p);
        prop_assert!(check_bialgebra(&t).unwrap().all_pass());
        for w in Which::ALL {
            prop_assert_eq!(shear(&t, w).unwrap().is_invertible(), shear(&b, w).unwrap().is_invertible());
        }
        let us = walking::universal_shear().unwrap();
        prop_assert_eq!(evaluate(&t, us.presentation(), &us.term).unwrap(), shear(&t, Which::NE).unwrap());
        let (di, dt) = (integrals(&b).unwrap(), integrals(&t).unwrap());
        prop_assert_eq!(di.integrals.len(), dt.integrals.len());
        prop_assert_eq!(di.cointegrals.len(), dt.cointegrals.len());
        if let Ok(h) = antipode(&t) {
            prop_assert!(check_convolution(&t, &h.s).unwrap().holds());
            prop_assert_eq!(antipode_from_integrals(&t).unwrap(), h.s);
        }
    }
}
