use mates::fixtures::{composite_square, generic_square};
use mates::square::{identity_square, left_mate_diagram, right_mate_diagram};
use mates::{double_mates, generic_retract, hopf_square_terms, right_mate, AdjunctionRecord, RetractRecord};
use polygraph_core::{eq, CellTerm, Side, Verdict, Word, DEFAULT_BUDGET};

fn adj_record() -> AdjunctionRecord {
    AdjunctionRecord::from_names("l", "r", "eps", "eta")
}

#[test]
fn adj_zigzags_are_identities() {
    let a = walking::builtins::adj();
    assert_eq!(adj_record().check_zigzags(&a.base, DEFAULT_BUDGET).unwrap(), [Verdict::Equal; 2]);
}

#[test]
fn fixture_zigzags_are_identities() {
    let fx = generic_square();
    for r in fx.records() {
        assert_eq!(r.check_zigzags(&fx.presentation, DEFAULT_BUDGET).unwrap(), [Verdict::Equal; 2]);
    }
}

#[test]
fn mate_of_identity_square_is_a_snake() {
    let a = walking::builtins::adj();
    let p = &a.base;
    let sq = identity_square(&CellTerm::gen("l"), p).unwrap();
    let id_a = AdjunctionRecord::identity("a");
    // f = l is not the left adjoint of the identity record
    assert!(right_mate(&sq, &id_a, &adj_record(), p).is_err());
    let m = right_mate(&sq, &adj_record(), &adj_record(), p).unwrap();
    let id_r = CellTerm::id(CellTerm::gen("r"));
    assert_eq!(eq(&m, &id_r, p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
}

#[test]
fn mate_shapes() {
    let fx = generic_square();
    let p = &fx.presentation;
    let r = right_mate_diagram(&fx.square, &fx.adjf, &fx.adjk, p).unwrap();
    assert_eq!(r.src, Word::of("B", &["fR", "h"]));
    assert_eq!(r.tgt(p).unwrap(), Word::of("B", &["g", "kR"]));
    let l = left_mate_diagram(&fx.square, &fx.adjh, &fx.adjg, p).unwrap();
    assert_eq!(l.src, Word::of("C", &["k", "gL"]));
    assert_eq!(l.tgt(p).unwrap(), Word::of("C", &["hL", "f"]));
    // wrong records are shape errors
    assert!(right_mate_diagram(&fx.square, &fx.adjk, &fx.adjf, p).is_err());
    assert!(left_mate_diagram(&fx.square, &fx.adjg, &fx.adjh, p).is_err());
}

#[test]
fn double_mates_return_alpha() {
    for fx in [generic_square(), composite_square()] {
        let v = double_mates(&fx.square, fx.records(), &fx.presentation, DEFAULT_BUDGET).unwrap();
        assert_eq!(v, [Verdict::Equal; 2]);
    }
}

#[test]
fn double_mate_detects_a_different_filler() {
    let mut fx = composite_square();
    let p = &mut fx.presentation;
    p.add_generator(polygraph_core::Generator::cell(
        "alpha2",
        2,
        CellTerm::comp(0, CellTerm::gen("h"), CellTerm::gen("k")),
        CellTerm::comp(0, CellTerm::gen("f"), CellTerm::gen("g")),
    ))
    .unwrap();
    let r = mates::square::right_mate_square(&fx.square, &fx.adjf, &fx.adjk, p).unwrap();
    let rl = mates::left_mate(&r, &fx.adjf, &fx.adjk, p).unwrap();
    assert_ne!(eq(&rl, &CellTerm::gen("alpha2"), p, DEFAULT_BUDGET).unwrap(), Verdict::Equal);
}

#[test]
fn retract_is_valid_and_round_trips() {
    let r = generic_retract();
    r.validate().unwrap();
    let back = RetractRecord::from_json(&r.to_json()).unwrap();
    assert_eq!(back.header, r.header);
    assert_eq!(back.presentation.census(), r.presentation.census());
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["retract"]["gevf_left"], "gevfL");
}

#[test]
fn hopf_square_boundaries() {
    let r = generic_retract();
    let p = &r.presentation;
    let hs = hopf_square_terms(&r, DEFAULT_BUDGET).unwrap();
    let id_pt = CellTerm::id(CellTerm::gen("1"));
    assert_eq!(p.boundary(&hs.h, Side::Source, 1).unwrap(), id_pt);
    assert_eq!(p.boundary(&hs.h, Side::Target, 1).unwrap(), id_pt);
    assert_eq!(p.dim(&hs.mult).unwrap(), 3);
    assert_eq!(p.dim(&hs.comult).unwrap(), 3);
    let v = &hs.verdicts;
    for x in [v.algebra_form, v.coalgebra_form, v.sharp] {
        assert_ne!(x, Verdict::Distinct);
    }
    assert_eq!(v.mult_source, Verdict::Equal);
    assert_eq!(v.unit_source, Verdict::Equal);
    assert_eq!(v.comult_target, Verdict::Equal);
    assert_eq!(v.counit_target, Verdict::Equal);
    let rm = p.boundary(&hs.alpha_rmate, Side::Source, 1).unwrap();
    assert_eq!(rm, CellTerm::gen("fR"));
    assert_eq!(p.boundary(&hs.alpha_rmate, Side::Target, 1).unwrap(), CellTerm::gen("g"));
    assert_eq!(p.boundary(&hs.alpha_lmate, Side::Source, 1).unwrap(), CellTerm::gen("gL"));
    assert_eq!(p.boundary(&hs.alpha_lmate, Side::Target, 1).unwrap(), CellTerm::gen("f"));
}

mod props {
    use super::*;
    use polygraph_core::{Diagram, Layer};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn double_mate_of_snaked_filler(ops in proptest::collection::vec(any::<bool>(), 0..3)) {
            let mut fx = generic_square();
            let mut layers = vec![Layer::new("alpha", 0)];
            for on_f in ops {
                if on_f {
                    layers.push(Layer::new("eta_f", 0));
                    layers.push(Layer::new("eps_f", 1));
                } else {
                    layers.push(Layer::new("eta_gL", 2));
                    layers.push(Layer::new("eps_gL", 1));
                }
            }
            let d = Diagram { src: Word::of("A", &["h", "k"]), layers };
            fx.square.alpha = d.to_term(&fx.presentation).unwrap();
            let v = double_mates(&fx.square, fx.records(), &fx.presentation, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(v, [Verdict::Equal; 2]);
        }
    }
}
