use polygraph_core::{eq, validate_presentation, CellTerm, Presentation, Side, Verdict, DEFAULT_BUDGET};
use walking::*;

fn g(n: &str) -> CellTerm {
    CellTerm::gen(n)
}
fn c(k: usize, a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(k, a, b)
}
fn id(t: CellTerm) -> CellTerm {
    CellTerm::id(t)
}

/// Census of a product predicted by convolution of the factor censuses.
fn product_census(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn assert_globular(p: &Presentation, t: &CellTerm) {
    let n = p.dim(t).unwrap();
    for k in 0..n.saturating_sub(1) {
        for side in [Side::Source, Side::Target] {
            let a = p.boundary(&p.boundary(t, Side::Source, n - 1).unwrap(), side, k).unwrap();
            let b = p.boundary(&p.boundary(t, Side::Target, n - 1).unwrap(), side, k).unwrap();
            assert_eq!(eq(&a, &b, p, DEFAULT_BUDGET).unwrap(), Verdict::Equal, "{t} at level {k}");
        }
    }
}

#[test]
fn globes() {
    assert_eq!(globe(0).unwrap().census(), vec![1]);
    assert_eq!(globe(2).unwrap().census(), vec![2, 2, 1]);
    assert_eq!(boundary_globe(3).unwrap().census(), vec![2, 2, 2]);
    assert_eq!(suspend(&Presentation::new()).unwrap().census(), vec![2]);
    assert!(globe(5).is_err());
    let s = suspend(&globe(1).unwrap()).unwrap();
    assert_eq!(s.census(), globe(2).unwrap().census());
    for n in 0..=4 {
        assert!(validate_presentation(&globe(n).unwrap()).is_valid(), "globe {n}");
    }
}

#[test]
fn builtin_shapes() {
    let m = mnd();
    assert_eq!(m.base.census(), vec![1, 1, 2]);
    assert_eq!(m.base.relations().len(), 3);
    assert_eq!(e_oriental2().census(), vec![5, 5, 1]);
    assert_eq!(oriental2().census(), vec![3, 3, 1]);
    for p in [m.base, adj().base, oriental2(), e_oriental2()] {
        assert!(validate_presentation(&p).is_valid());
    }
}

#[test]
fn zigzags_are_identities() {
    let a = adj().base;
    let ir = id(g("r"));
    let z = c(1, c(0, ir.clone(), g("eta")), c(0, g("eps"), ir.clone()));
    assert_eq!(eq(&z, &ir, &a, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
}

#[test]
fn gray_censuses() {
    let g1 = globe(1).unwrap();
    assert_eq!(gray(&g1, &g1).unwrap().presentation.census(), vec![4, 4, 1]);
    let m = mnd().base;
    let mm = gray(&m, &m).unwrap();
    assert_eq!(mm.presentation.census(), vec![1, 2, 5, 4, 4]);
    assert!(validate_presentation(&mm.presentation).is_valid(), "{:?}", validate_presentation(&mm.presentation));
    for gen in mm.presentation.generators() {
        if gen.dim >= 2 {
            assert_globular(&mm.presentation, &g(&gen.name));
        }
    }
    let sm = smash(&mnd(), &mnd()).unwrap();
    assert_eq!(sm.presentation.census(), vec![1, 0, 1, 4, 4]);
}

#[test]
fn gray_globes_multiply() {
    for p in 0..=4usize {
        for q in 0..=(4 - p) {
            let (a, b) = (globe(p).unwrap(), globe(q).unwrap());
            let gp = gray(&a, &b).unwrap();
            assert_eq!(gp.presentation.census(), product_census(&a.census(), &b.census()), "{p} {q}");
            assert!(validate_presentation(&gp.presentation).is_valid(), "{p} {q}");
        }
    }
    assert!(matches!(gray(&globe(3).unwrap(), &globe(2).unwrap()), Err(WalkError::Overflow(_))));
}

#[test]
fn gray_with_point_is_a_copy() {
    let m = mnd().base;
    let gp = gray(&m, &point()).unwrap();
    assert_eq!(gp.presentation.census(), m.census());
    assert_eq!(gp.presentation.relations().len(), m.relations().len());
}

#[test]
fn adj_products() {
    let a = adj();
    let gp = gray(&a.base, &a.base).unwrap();
    assert_eq!(gp.presentation.census(), product_census(&a.base.census(), &a.base.census()));
    assert!(validate_presentation(&gp.presentation).is_valid());
    let sm = smash(&a, &a).unwrap();
    assert_eq!(sm.presentation.census(), vec![2, 4, 8, 8, 4]);
}

fn left_picture() -> CellTerm {
    let (a1, b1, x) = (g("A*•"), g("•*A"), g("A*A"));
    let l1 = c(0, x.clone(), id(c(0, b1.clone(), a1.clone())));
    let l2 = c(0, id(a1.clone()), c(0, g("•*m"), id(a1.clone())));
    let l3 = c(0, id(a1.clone()), x);
    let l4 = c(0, g("m*•"), id(b1));
    c(1, c(1, c(1, l1, l2), l3), l4)
}

fn right_picture() -> CellTerm {
    let (a1, b1, x) = (g("A*•"), g("•*A"), g("A*A"));
    let r1 = c(0, id(c(0, b1.clone(), a1.clone())), x.clone());
    let r2 = c(0, id(b1.clone()), c(0, g("m*•"), id(b1.clone())));
    let r3 = c(0, x, id(b1));
    let r4 = c(0, id(a1), g("•*m"));
    c(1, c(1, c(1, r1, r2), r3), r4)
}

#[test]
fn universal_shear_boundaries() {
    let sh = universal_shear().unwrap();
    let p = sh.presentation();
    assert_eq!(p.dim(&sh.term).unwrap(), 3);
    assert_eq!(eq(&sh.source().unwrap(), &left_picture(), p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
    assert_eq!(eq(&sh.target().unwrap(), &right_picture(), p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
    assert_ne!(eq(&left_picture(), &right_picture(), p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
    assert_globular(p, &sh.term);
    let mut gens = sh.image.generators();
    gens.sort();
    gens.retain(|n| n != "•*•");
    assert_eq!(gens, vec!["A*A", "A*A", "A*m", "m*A"]);
}

#[test]
fn bimonad_cells() {
    let sm = smash(&mnd(), &mnd()).unwrap();
    let p = &sm.presentation;
    let cells = bimnd_cells();
    let pt = g(&sm.basepoint);
    let under_src = p.boundary(&cells.underlying, Side::Source, 1).unwrap();
    assert_eq!(under_src, id(pt.clone()));
    let cs = p.boundary(&cells.counit, Side::Source, 2).unwrap();
    assert_eq!(eq(&cs, &cells.underlying, p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
    let ct = p.boundary(&cells.counit, Side::Target, 2).unwrap();
    assert_eq!(eq(&ct, &id(id(pt)), p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
    let ms = p.boundary(&cells.mult, Side::Source, 2).unwrap();
    let two = c(1, cells.underlying.clone(), cells.underlying.clone());
    assert_eq!(eq(&ms, &two, p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
}

#[test]
fn collapse_commutes_with_boundary() {
    let sh = universal_shear().unwrap();
    let cm = &sh.smash.collapse;
    let dom = &cm.domain;
    for side in [Side::Source, Side::Target] {
        let a = cm.apply(&dom.boundary(&sh.term, side, 2).unwrap()).unwrap();
        let b = cm.codomain.boundary(&sh.image, side, 2).unwrap();
        assert_eq!(eq(&a, &b, &cm.codomain, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
    }
}

mod skeleton_tests {
    use polygraph_core::{Verdict, DEFAULT_BUDGET};
    use walking::skeleton::{skeleton, CellKind, ChainEntry};

    #[test]
    fn chain_composes_and_matches_shear_image() {
        let s = skeleton().unwrap();
        let r = s.check(&s.chain, DEFAULT_BUDGET).unwrap();
        assert!(r.composable, "{:?}", r.first_failure);
        assert_eq!(r.boundary, Some([Verdict::Equal; 2]));
        assert!(r.counts[&CellKind::LType] >= 2);
        assert!(r.counts[&CellKind::RType] >= 2);
        assert!(r.counts[&CellKind::FourCell] >= 1);
        assert!(r.counts[&CellKind::CollapseTrivial] >= 1);
        assert!(r.passed());
    }

    #[test]
    fn mutated_chain_fails_at_mutation() {
        let s = skeleton().unwrap();
        for i in 0..s.chain.len() {
            let mut c = s.chain.clone();
            c[i] = ChainEntry::new(&c[i].gen.clone(), !c[i].inv);
            let r = s.check(&c, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.first_failure, Some(i), "mutation at {i}");
            assert!(!r.passed());
        }
    }

    #[test]
    fn empty_chain_is_vacuously_composable() {
        let s = skeleton().unwrap();
        let r = s.check(&[], DEFAULT_BUDGET).unwrap();
        assert!(r.composable);
        assert_eq!(r.boundary, None);
    }
}
