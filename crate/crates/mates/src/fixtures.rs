//! Presentations carrying squares with enough adjoints for both mates.

use polygraph_core::{CellTerm, Generator, Presentation};

use crate::adjunction::AdjunctionRecord;
use crate::square::Square;

fn g(n: &str) -> CellTerm {
    CellTerm::gen(n)
}

fn c0(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(0, a, b)
}

fn c1(a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(1, a, b)
}

/// Adds `l: a → b`, `r: b → a`, counit, unit and both snake relations.
pub fn add_adjunction(p: &mut Presentation, l: &str, r: &str, a: &str, b: &str) -> AdjunctionRecord {
    let (eps, eta) = (format!("eps_{l}"), format!("eta_{l}"));
    if !p.contains(l) {
        p.add_generator(Generator::cell(l, 1, g(a), g(b))).unwrap();
    }
    if !p.contains(r) {
        p.add_generator(Generator::cell(r, 1, g(b), g(a))).unwrap();
    }
    p.add_generator(Generator::cell(&eps, 2, c0(g(r), g(l)), CellTerm::id(g(b)))).unwrap();
    p.add_generator(Generator::cell(&eta, 2, CellTerm::id(g(a)), c0(g(l), g(r)))).unwrap();
    let (ir, il) = (CellTerm::id(g(r)), CellTerm::id(g(l)));
    p.add_relation(c1(c0(ir.clone(), g(&eta)), c0(g(&eps), ir.clone())), ir, true).unwrap();
    p.add_relation(c1(c0(g(&eta), il.clone()), c0(il.clone(), g(&eps))), il, true).unwrap();
    AdjunctionRecord::from_names(l, r, &eps, &eta)
}

pub struct SquareFixture {
    pub presentation: Presentation,
    pub square: Square,
    /// adjunctions for f, k (as left adjoints) and h, g (as right adjoints)
    pub adjf: AdjunctionRecord,
    pub adjk: AdjunctionRecord,
    pub adjh: AdjunctionRecord,
    pub adjg: AdjunctionRecord,
}

impl SquareFixture {
    pub fn records(&self) -> [&AdjunctionRecord; 4] {
        [&self.adjf, &self.adjk, &self.adjh, &self.adjg]
    }
}

/// A generic square `α: h·k ⇒ f·g` on corners A, B, C, D where f and k are
/// left adjoints and h and g are right adjoints.
pub fn generic_square() -> SquareFixture {
    let mut p = Presentation::new();
    for o in ["A", "B", "C", "D"] {
        p.add_generator(Generator::object(o)).unwrap();
    }
    let adjf = add_adjunction(&mut p, "f", "fR", "A", "B");
    let adjk = add_adjunction(&mut p, "k", "kR", "C", "D");
    let adjh = add_adjunction(&mut p, "hL", "h", "C", "A");
    let adjg = add_adjunction(&mut p, "gL", "g", "D", "B");
    p.add_generator(Generator::cell("alpha", 2, c0(g("h"), g("k")), c0(g("f"), g("g")))).unwrap();
    let square = Square { f: g("f"), g: g("g"), h: g("h"), k: g("k"), alpha: g("alpha") };
    SquareFixture { presentation: p, square, adjf, adjk, adjh, adjg }
}

/// The same corners with a composite filler `α = β ; γ` through a middle edge.
pub fn composite_square() -> SquareFixture {
    let mut fx = generic_square();
    let p = &mut fx.presentation;
    p.add_generator(Generator::cell("m", 1, g("A"), g("D"))).unwrap();
    p.add_generator(Generator::cell("beta", 2, c0(g("h"), g("k")), g("m"))).unwrap();
    p.add_generator(Generator::cell("gamma", 2, g("m"), c0(g("f"), g("g")))).unwrap();
    fx.square.alpha = c1(g("beta"), g("gamma"));
    fx
}
