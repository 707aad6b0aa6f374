//! Walking cells, their boundaries and categorical suspension.

use polygraph_core::{CellTerm, Generator, Presentation, Relation, MAX_DIM};

use crate::error::{Result, WalkError};

/// New objects added by [`suspend`].
pub const SOUTH: &str = "s";
pub const NORTH: &str = "t";

fn lift(name: &str) -> String {
    format!("σ{name}")
}

fn suspend_term(t: &CellTerm) -> CellTerm {
    match t {
        CellTerm::Gen(g) => CellTerm::gen(lift(g)),
        CellTerm::Id(x) => CellTerm::id(suspend_term(x)),
        CellTerm::Inv(x) => CellTerm::inv(suspend_term(x)),
        CellTerm::Comp(k, a, b) => CellTerm::comp(k + 1, suspend_term(a), suspend_term(b)),
    }
}

/// Two new objects; every k-generator becomes a (k+1)-generator between them.
pub fn suspend(p: &Presentation) -> Result<Presentation> {
    if p.max_dim() >= MAX_DIM && !p.generators().is_empty() {
        return Err(WalkError::Overflow(format!("cannot suspend a {}-dimensional presentation", p.max_dim())));
    }
    let mut out = Presentation::new();
    out.add_generator(Generator::object(SOUTH))?;
    out.add_generator(Generator::object(NORTH))?;
    for g in p.generators() {
        let (src, tgt) = match (&g.src, &g.tgt) {
            (Some(s), Some(t)) => (suspend_term(s), suspend_term(t)),
            _ => (CellTerm::gen(SOUTH), CellTerm::gen(NORTH)),
        };
        let mut h = Generator::cell(lift(&g.name), g.dim + 1, src, tgt);
        h.invertible = g.invertible;
        out.add_generator(h)?;
    }
    for r in p.relations() {
        out.push_relation_unchecked(Relation {
            dim: r.dim + 1,
            lhs: suspend_term(&r.lhs),
            rhs: suspend_term(&r.rhs),
            oriented: r.oriented,
        });
    }
    Ok(out)
}

pub fn point() -> Presentation {
    let mut p = Presentation::new();
    p.add_generator(Generator::object("c")).expect("fresh");
    p
}

/// The walking n-cell, as the n-fold suspension of a point.
pub fn globe(n: usize) -> Result<Presentation> {
    if n > MAX_DIM {
        return Err(WalkError::Range(format!("globe({n}): dimension above {MAX_DIM}")));
    }
    let mut p = point();
    for _ in 0..n {
        p = suspend(&p)?;
    }
    Ok(p)
}

/// The walking n-cell without its top generator.
pub fn boundary_globe(n: usize) -> Result<Presentation> {
    if n > MAX_DIM {
        return Err(WalkError::Range(format!("boundary_globe({n}): dimension above {MAX_DIM}")));
    }
    let mut p = Presentation::new();
    for _ in 0..n {
        p = suspend(&p)?;
    }
    Ok(p)
}

/// Name of the top generator of `globe(n)`.
pub fn globe_top(n: usize) -> String {
    format!("{}c", "σ".repeat(n))
}
