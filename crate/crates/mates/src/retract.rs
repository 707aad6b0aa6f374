//! The generic adjunctible retract `1 →f X →g 1`, `α: id ⇒ g∘f`.

use polygraph_core::presentation::PresentationFile;
use polygraph_core::{CellTerm, Generator, Presentation};
use serde::{Deserialize, Serialize};

use crate::adjunction::AdjunctionRecord;
use crate::error::{MateError, Result};
use crate::fixtures::add_adjunction;

pub const BASEPOINT: &str = "1";

/// Distinguished generator names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractHeader {
    pub basepoint: String,
    pub object: String,
    pub f: String,
    pub g: String,
    pub alpha: String,
    pub f_right: String,
    pub g_left: String,
    /// left adjoint of `g·ev_f`
    pub gevf_left: String,
    /// right adjoint of `ev_g·f`
    pub evgf_right: String,
}

#[derive(Clone, Debug)]
pub struct RetractRecord {
    pub presentation: Presentation,
    pub header: RetractHeader,
    pub adjf: AdjunctionRecord,
    pub adjg: AdjunctionRecord,
}

#[derive(Serialize, Deserialize)]
pub struct RetractFile {
    #[serde(flatten)]
    pub presentation: PresentationFile,
    pub retract: RetractHeader,
}

fn g(n: &str) -> CellTerm {
    CellTerm::gen(n)
}

fn c0(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(0, a, b)
}

fn c1(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(1, a, b)
}

/// Adds a 2-cell `lft` left adjoint to `rgt` (a 2-cell term) with unit
/// `id ⇛ lft;rgt` and counit `rgt;lft ⇛ id`, and their triangle relations.
fn add_left_adjoint(p: &mut Presentation, lft: &str, rgt: CellTerm) {
    let s = p.boundary(&rgt, polygraph_core::Side::Source, 1).unwrap();
    let t = p.boundary(&rgt, polygraph_core::Side::Target, 1).unwrap();
    p.add_generator(Generator::cell(lft, 2, t.clone(), s.clone())).unwrap();
    let (unit, counit) = (format!("{lft}_unit"), format!("{lft}_counit"));
    p.add_generator(Generator::cell(&unit, 3, CellTerm::id(t), c1(g(lft), rgt.clone()))).unwrap();
    p.add_generator(Generator::cell(&counit, 3, c1(rgt.clone(), g(lft)), CellTerm::id(s))).unwrap();
    triangles(p, g(lft), rgt, &unit, &counit);
}

/// Same for a 2-cell `rgt` right adjoint to `lft`.
fn add_right_adjoint(p: &mut Presentation, rgt: &str, lft: CellTerm) {
    let s = p.boundary(&lft, polygraph_core::Side::Source, 1).unwrap();
    let t = p.boundary(&lft, polygraph_core::Side::Target, 1).unwrap();
    p.add_generator(Generator::cell(rgt, 2, t.clone(), s.clone())).unwrap();
    let (unit, counit) = (format!("{rgt}_unit"), format!("{rgt}_counit"));
    p.add_generator(Generator::cell(&unit, 3, CellTerm::id(s), c1(lft.clone(), g(rgt)))).unwrap();
    p.add_generator(Generator::cell(&counit, 3, c1(g(rgt), lft.clone()), CellTerm::id(t))).unwrap();
    triangles(p, lft, g(rgt), &unit, &counit);
}

/// `(η L)(L ε) = id_L` and `(R η)(ε R) = id_R` for `L ⊣ R` between 2-cells,
/// composing 2-cells along 1-boundaries.
fn triangles(p: &mut Presentation, l: CellTerm, r: CellTerm, unit: &str, counit: &str) {
    let il = CellTerm::id(l.clone());
    let ir = CellTerm::id(r.clone());
    let on_l = c2(c1(g(unit), il.clone()), c1(il.clone(), g(counit)));
    let on_r = c2(c1(ir.clone(), g(unit)), c1(g(counit), ir.clone()));
    p.add_relation(on_l, il, true).unwrap();
    p.add_relation(on_r, ir, true).unwrap();
}

fn c2(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(2, a, b)
}

/// f ⊣ f^R and g^L ⊣ g, α invertible, with named adjoints for the whiskered
/// counits `g·ev_f` and `ev_g·f`.
pub fn generic_retract() -> RetractRecord {
    let mut p = Presentation::new();
    p.add_generator(Generator::object(BASEPOINT)).unwrap();
    p.add_generator(Generator::object("X")).unwrap();
    let adjf = add_adjunction(&mut p, "f", "fR", BASEPOINT, "X");
    let adjg = add_adjunction(&mut p, "gL", "g", BASEPOINT, "X");
    p.add_generator(Generator::cell("alpha", 2, CellTerm::id(g(BASEPOINT)), c0(g("f"), g("g"))).invertible())
        .unwrap();
    let gevf = c0(g("eps_f"), CellTerm::id(g("g")));
    let evgf = c0(CellTerm::id(g("f")), g("eps_gL"));
    add_left_adjoint(&mut p, "gevfL", gevf);
    add_right_adjoint(&mut p, "evgfR", evgf);
    let header = RetractHeader {
        basepoint: BASEPOINT.into(),
        object: "X".into(),
        f: "f".into(),
        g: "g".into(),
        alpha: "alpha".into(),
        f_right: "fR".into(),
        g_left: "gL".into(),
        gevf_left: "gevfL".into(),
        evgf_right: "evgfR".into(),
    };
    RetractRecord { presentation: p, header, adjf, adjg }
}

impl RetractRecord {
    pub fn validate(&self) -> Result<()> {
        let p = &self.presentation;
        let report = polygraph_core::validate_presentation(p);
        if !report.is_valid() {
            return Err(MateError::Invalid(format!("{:?}", report.entries)));
        }
        let a = p.generator(&self.header.alpha)?;
        if !a.invertible {
            return Err(MateError::Invalid(format!("`{}` is not invertible", self.header.alpha)));
        }
        self.adjf.check_shape(p)?;
        self.adjg.check_shape(p)?;
        for n in [&self.header.gevf_left, &self.header.evgf_right] {
            for suffix in ["_unit", "_counit"] {
                p.generator(&format!("{n}{suffix}"))?;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let f = RetractFile { presentation: PresentationFile::from(&self.presentation), retract: self.header.clone() };
        serde_json::to_string_pretty(&f).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<RetractRecord> {
        let f: RetractFile = serde_json::from_str(s).map_err(|e| MateError::Invalid(e.to_string()))?;
        let presentation = f.presentation.into_presentation()?;
        let h = f.retract;
        let adjf = AdjunctionRecord::from_names(&h.f, &h.f_right, &format!("eps_{}", h.f), &format!("eta_{}", h.f));
        let adjg =
            AdjunctionRecord::from_names(&h.g_left, &h.g, &format!("eps_{}", h.g_left), &format!("eta_{}", h.g_left));
        let r = RetractRecord { presentation, header: h, adjf, adjg };
        r.validate()?;
        Ok(r)
    }
}
