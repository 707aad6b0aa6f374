//! The Hopf square of an adjunctible retract: the object H as a pasting of
//! mates, its two simplified forms, and the (co)algebra structure 3-cells.

use polygraph_core::{eq, flatten2, Builder, CellTerm, Diagram, Layer, Presentation, Side, Verdict, Word};
use serde::{Deserialize, Serialize};

use crate::adjunction::AdjunctionRecord;
use crate::error::{MateError, Result};
use crate::retract::RetractRecord;
use crate::square::{left_mate_diagram, right_mate_diagram, Square};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfVerdicts {
    /// H against `α ; (g·ev_f)^L f ; g·ev_f·f ; α⁻¹`
    pub algebra_form: Verdict,
    /// H against `α ; g·(ev_g·f)^R ; g·ev_g·f ; α⁻¹`
    pub coalgebra_form: Verdict,
    /// the two descriptions of the south corner
    pub sharp: Verdict,
    pub mult_source: Verdict,
    pub unit_source: Verdict,
    pub comult_target: Verdict,
    pub counit_target: Verdict,
}

#[derive(Clone, Debug)]
pub struct HopfSquare {
    pub h: CellTerm,
    pub algebra_form: CellTerm,
    pub coalgebra_form: CellTerm,
    pub alpha_rmate: CellTerm,
    pub alpha_lmate: CellTerm,
    pub alpha_sharp: CellTerm,
    pub mult: CellTerm,
    pub unit: CellTerm,
    pub comult: CellTerm,
    pub counit: CellTerm,
    pub verdicts: HopfVerdicts,
}

fn d(p: &Presentation, obj: &str, word: &[&str], layers: &[(&str, bool, usize)]) -> Diagram {
    let _ = p;
    Diagram {
        src: Word::of(obj, word),
        layers: layers.iter().map(|&(g, inv, pos)| if inv { Layer::inverse(g, pos) } else { Layer::new(g, pos) }).collect(),
    }
}

/// Equal and Unknown are both accepted; Distinct means a construction error.
fn not_distinct(v: Verdict, what: &str) -> Result<Verdict> {
    if v == Verdict::Distinct {
        return Err(MateError::Shape(format!("{what} is provably different")));
    }
    Ok(v)
}

pub fn hopf_square_terms(r: &RetractRecord, budget: usize) -> Result<HopfSquare> {
    r.validate()?;
    let p = &r.presentation;
    let hd = &r.header;
    let pt = hd.basepoint.as_str();
    let (f, g, a) = (hd.f.as_str(), hd.g.as_str(), hd.alpha.as_str());
    let (fr, gl) = (hd.f_right.as_str(), hd.g_left.as_str());
    let ev_f = r.adjf.counit(p)?;
    let ev_g = r.adjg.counit(p)?;
    let gen_of = |x: &Diagram| -> Result<String> {
        match x.layers.as_slice() {
            [l] if !l.inv => Ok(l.gen.clone()),
            _ => Err(MateError::Invalid("counits must be single generators".into())),
        }
    };
    let (evf, evg) = (gen_of(&ev_f)?, gen_of(&ev_g)?);
    let id_pt = AdjunctionRecord::identity(pt);
    let alpha = CellTerm::gen(a);
    let idt = CellTerm::id(CellTerm::gen(pt));

    let square = Square { f: CellTerm::gen(f), g: CellTerm::gen(g), h: idt.clone(), k: idt.clone(), alpha: alpha.clone() };
    let rmate = right_mate_diagram(&square, &r.adjf, &id_pt, p)?;
    let lmate = left_mate_diagram(&square, &id_pt, &r.adjg, p)?;

    // (α^rmate)^L is α⁻¹ f^R after the left adjoint of g·ev_f
    let rmate_l = d(p, "X", &[g], &[(&hd.gevf_left, false, 0), (a, true, 1)]);
    let sq_r = Square {
        h: CellTerm::gen(g),
        k: idt.clone(),
        f: CellTerm::gen(fr),
        g: idt.clone(),
        alpha: rmate_l.to_term(p)?,
    };
    let sharp = left_mate_diagram(&sq_r, &r.adjg, &id_pt, p)?;
    // (α^lmate)^R is g^L α⁻¹ after the right adjoint of ev_g·f
    let lmate_r = d(p, pt, &[f], &[(&hd.evgf_right, false, 0), (a, true, 0)]);
    let sq_l = Square {
        h: idt.clone(),
        k: CellTerm::gen(f),
        f: idt.clone(),
        g: CellTerm::gen(gl),
        alpha: lmate_r.to_term(p)?,
    };
    let sharp2 = right_mate_diagram(&sq_l, &id_pt, &r.adjf, p)?;

    let middle = lmate.beside(&rmate, p)?;
    let alpha_inv = Diagram { src: Word::of(pt, &[f, g]), layers: vec![Layer::inverse(a, 0)] };
    let h = sharp.then(&middle, p)?.then(&alpha_inv, p)?;
    let h_term = h.to_term(p)?;
    for side in [Side::Source, Side::Target] {
        let b = p.boundary(&h_term, side, 1)?;
        if b != CellTerm::id(CellTerm::gen(pt)) {
            return Err(MateError::Shape(format!("H has 1-boundary {b}")));
        }
    }

    let s1 = d(p, pt, &[], &[(a, false, 0), (&hd.gevf_left, false, 1), (&evf, false, 1), (a, true, 0)]);
    let s2 = d(p, pt, &[], &[(a, false, 0), (&hd.evgf_right, false, 0), (&evg, false, 1), (a, true, 0)]);
    let (s1t, s2t) = (s1.to_term(p)?, s2.to_term(p)?);
    let v_alg = not_distinct(eq(&h_term, &s1t, p, budget)?, "H vs the algebra form")?;
    let v_coalg = not_distinct(eq(&h_term, &s2t, p, budget)?, "H vs the coalgebra form")?;
    let v_sharp = not_distinct(eq(&sharp.to_term(p)?, &sharp2.to_term(p)?, p, budget)?, "the two south corners")?;

    let unit_name = format!("{}_unit", hd.gevf_left);
    let counit_name = format!("{}_counit", hd.gevf_left);
    let cunit_name = format!("{}_unit", hd.evgf_right);
    let ccounit_name = format!("{}_counit", hd.evgf_right);

    // multiplication: the counit of (g·ev_f)^L ⊣ g·ev_f between two copies
    let twice = d(
        p,
        pt,
        &[],
        &[
            (a, false, 0),
            (&hd.gevf_left, false, 1),
            (&evf, false, 1),
            (&hd.gevf_left, false, 1),
            (&evf, false, 1),
            (a, true, 0),
        ],
    );
    let mut b = Builder::new(p, twice);
    b.apply(&counit_name, false, Some(1), 0)?;
    let mult = b.finish()?;

    let cancel = d(p, pt, &[], &[(a, false, 0), (a, true, 0)]);
    let mut b = Builder::new(p, cancel.clone());
    b.insert(&unit_name, false, 1, 1)?;
    let unit = b.finish()?;

    let mut b = Builder::new(p, s2.clone());
    b.insert(&cunit_name, false, 2, 0)?;
    let comult = b.finish()?;

    let mut b = Builder::new(p, s2.clone());
    b.apply(&ccounit_name, false, Some(0), 0)?;
    let counit = b.finish()?;

    let hh = CellTerm::comp(1, s1t.clone(), s1t.clone());
    let cc = CellTerm::comp(1, s2t.clone(), s2t.clone());
    let id2 = CellTerm::ids(CellTerm::gen(pt), 2);
    let v = |x: &CellTerm, side: Side, y: &CellTerm| -> Result<Verdict> {
        Ok(eq(&p.boundary(x, side, 2)?, y, p, budget)?)
    };
    let verdicts = HopfVerdicts {
        algebra_form: v_alg,
        coalgebra_form: v_coalg,
        sharp: v_sharp,
        mult_source: not_distinct(v(&mult, Side::Source, &hh)?, "source of the multiplication")?,
        unit_source: not_distinct(v(&unit, Side::Source, &id2)?, "source of the unit")?,
        comult_target: not_distinct(v(&comult, Side::Target, &cc)?, "target of the comultiplication")?,
        counit_target: not_distinct(v(&counit, Side::Target, &id2)?, "target of the counit")?,
    };
    for (t, side, want) in [(&mult, Side::Target, &s1t), (&unit, Side::Target, &s1t), (&comult, Side::Source, &s2t), (&counit, Side::Source, &s2t)] {
        let got = flatten2(&p.simplify(&p.boundary(t, side, 2)?)?, p)?;
        let want = flatten2(want, p)?;
        if eq(&got.to_term(p)?, &want.to_term(p)?, p, budget)? == Verdict::Distinct {
            return Err(MateError::Shape("structure cell does not end on H".into()));
        }
    }
    Ok(HopfSquare {
        h: h_term,
        algebra_form: s1t,
        coalgebra_form: s2t,
        alpha_rmate: rmate.to_term(p)?,
        alpha_lmate: lmate.to_term(p)?,
        alpha_sharp: sharp.to_term(p)?,
        mult,
        unit,
        comult,
        counit,
        verdicts,
    })
}
