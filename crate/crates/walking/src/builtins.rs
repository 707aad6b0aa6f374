//! The walking monad and adjunction, the second oriental and its whiskered variant.

use polygraph_core::{CellTerm, Generator, Presentation};
use serde::{Deserialize, Serialize};

use crate::error::{Result, WalkError};

#[derive(Clone, Debug, PartialEq)]
pub struct PointedPresentation {
    pub base: Presentation,
    pub basepoint: String,
}

impl PointedPresentation {
    pub fn new(base: Presentation, basepoint: impl Into<String>) -> Result<Self> {
        let basepoint = basepoint.into();
        match base.generator(&basepoint) {
            Ok(g) if g.dim == 0 => Ok(PointedPresentation { base, basepoint }),
            _ => Err(WalkError::Basepoint(basepoint)),
        }
    }
}

/// Header naming the distinguished pieces of a pointed presentation on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointedFile {
    pub basepoint: String,
}

pub const MND_OBJECT: &str = "•";

fn g(n: &str) -> CellTerm {
    CellTerm::gen(n)
}

fn c0(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(0, a, b)
}

fn c1(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(1, a, b)
}

fn id(t: CellTerm) -> CellTerm {
    CellTerm::id(t)
}

pub fn mnd() -> PointedPresentation {
    let mut p = Presentation::new();
    let o = MND_OBJECT;
    p.add_generator(Generator::object(o)).unwrap();
    p.add_generator(Generator::cell("A", 1, g(o), g(o))).unwrap();
    p.add_generator(Generator::cell("m", 2, c0(g("A"), g("A")), g("A"))).unwrap();
    p.add_generator(Generator::cell("u", 2, id(g(o)), g("A"))).unwrap();
    let ia = id(g("A"));
    // (A·m) then m  →  (m·A) then m
    p.add_relation(c1(c0(ia.clone(), g("m")), g("m")), c1(c0(g("m"), ia.clone()), g("m")), true).unwrap();
    p.add_relation(c1(c0(g("u"), ia.clone()), g("m")), ia.clone(), true).unwrap();
    p.add_relation(c1(c0(ia.clone(), g("u")), g("m")), ia, true).unwrap();
    PointedPresentation { base: p, basepoint: o.into() }
}

/// l ⊣ r with ε: l∘r ⇒ id and η: id ⇒ r∘l; pointed at the source of l.
pub fn adj() -> PointedPresentation {
    let mut p = Presentation::new();
    p.add_generator(Generator::object("a")).unwrap();
    p.add_generator(Generator::object("b")).unwrap();
    p.add_generator(Generator::cell("l", 1, g("a"), g("b"))).unwrap();
    p.add_generator(Generator::cell("r", 1, g("b"), g("a"))).unwrap();
    p.add_generator(Generator::cell("eps", 2, c0(g("r"), g("l")), id(g("b")))).unwrap();
    p.add_generator(Generator::cell("eta", 2, id(g("a")), c0(g("l"), g("r")))).unwrap();
    let (ir, il) = (id(g("r")), id(g("l")));
    p.add_relation(c1(c0(ir.clone(), g("eta")), c0(g("eps"), ir.clone())), ir, true).unwrap();
    p.add_relation(c1(c0(g("eta"), il.clone()), c0(il.clone(), g("eps"))), il, true).unwrap();
    PointedPresentation { base: p, basepoint: "a".into() }
}

/// Street's second oriental: μ: x·y ⇒ z.
pub fn oriental2() -> Presentation {
    let mut p = Presentation::new();
    for o in ["vR", "vB", "vL"] {
        p.add_generator(Generator::object(o)).unwrap();
    }
    p.add_generator(Generator::cell("x", 1, g("vR"), g("vB"))).unwrap();
    p.add_generator(Generator::cell("y", 1, g("vB"), g("vL"))).unwrap();
    p.add_generator(Generator::cell("z", 1, g("vR"), g("vL"))).unwrap();
    p.add_generator(Generator::cell("mu", 2, c0(g("x"), g("y")), g("z"))).unwrap();
    p
}

/// The oriental whiskered by one 1-cell into its first vertex and one out of its last.
pub fn e_oriental2() -> Presentation {
    let mut p = Presentation::new();
    for o in ["wR", "vR", "vB", "vL", "wL"] {
        p.add_generator(Generator::object(o)).unwrap();
    }
    p.add_generator(Generator::cell("e5", 1, g("wR"), g("vR"))).unwrap();
    p.add_generator(Generator::cell("x", 1, g("vR"), g("vB"))).unwrap();
    p.add_generator(Generator::cell("y", 1, g("vB"), g("vL"))).unwrap();
    p.add_generator(Generator::cell("z", 1, g("vR"), g("vL"))).unwrap();
    p.add_generator(Generator::cell("e1", 1, g("vL"), g("wL"))).unwrap();
    p.add_generator(Generator::cell("mu", 2, c0(g("x"), g("y")), g("z"))).unwrap();
    p
}
