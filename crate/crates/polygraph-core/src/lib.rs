//! Finitely presented strict n-categories (n ≤ 4): pasting terms,
//! boundaries, composition and a partial, sound equality check.

pub mod build;
pub mod diagram;
pub mod eq;
pub mod error;
pub mod flat3;
pub mod presentation;
pub mod rewrite;
pub mod sexpr;
pub mod term;
pub mod validate;
pub mod word;

pub use build::{whisker, Builder};
pub use diagram::{flatten2, Diagram, Layer};
pub use eq::{Verdict, DEFAULT_BUDGET};
pub use error::{CoreError, Result};
pub use flat3::{flatten3, Flat3, Step3};
pub use presentation::{Generator, Presentation, Relation, Side, MAX_DIM};
pub use term::CellTerm;
pub use validate::{check_term, validate_presentation, ValidationReport, Violation};
pub use word::{flatten1, Letter, Word};

pub fn boundary(p: &Presentation, t: &CellTerm, side: Side, k: usize) -> Result<CellTerm> {
    p.boundary(t, side, k)
}

pub fn eq(a: &CellTerm, b: &CellTerm, p: &Presentation, budget: usize) -> Result<Verdict> {
    eq::eq(a, b, p, budget)
}

/// `Comp(k, a, b)`, provided the k-target of `a` is provably the k-source of `b`.
pub fn compose(p: &Presentation, k: usize, a: CellTerm, b: CellTerm) -> Result<CellTerm> {
    check_term(&a, p)?;
    check_term(&b, p)?;
    let da = p.dim(&a)?;
    let db = p.dim(&b)?;
    if da != db || k >= da {
        return Err(CoreError::Dimension(format!("comp{k} of cells of dimensions {da} and {db}")));
    }
    let ta = p.boundary(&a, Side::Target, k)?;
    let sb = p.boundary(&b, Side::Source, k)?;
    if eq::eq(&ta, &sb, p, DEFAULT_BUDGET)? != Verdict::Equal {
        return Err(CoreError::Composition { k, left: ta, right: sb });
    }
    Ok(CellTerm::comp(k, a, b))
}
