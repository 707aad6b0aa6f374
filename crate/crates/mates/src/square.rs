//! Squares `α: k∘h ⇒ g∘f` and their mates. As diagrammatic words
//! `α: h·k ⇒ f·g`, with `h, f` leaving the common corner.

use polygraph_core::{eq, flatten1, flatten2, CellTerm, Diagram, Presentation, Side, Verdict, Word};
use serde::{Deserialize, Serialize};

use crate::adjunction::AdjunctionRecord;
use crate::error::{MateError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Square {
    pub f: CellTerm,
    pub g: CellTerm,
    pub h: CellTerm,
    pub k: CellTerm,
    pub alpha: CellTerm,
}

struct Edges {
    f: Word,
    g: Word,
    h: Word,
    k: Word,
    alpha: Diagram,
}

fn word(t: &CellTerm, p: &Presentation) -> Result<Word> {
    Ok(flatten1(&p.simplify(t)?, p)?)
}

fn same(a: &Word, b: &Word, what: &str) -> Result<()> {
    if a != b {
        return Err(MateError::Shape(format!("{what}: {} vs {}", a.to_term(), b.to_term())));
    }
    Ok(())
}

impl Square {
    fn edges(&self, p: &Presentation) -> Result<Edges> {
        let e = Edges {
            f: word(&self.f, p)?,
            g: word(&self.g, p)?,
            h: word(&self.h, p)?,
            k: word(&self.k, p)?,
            alpha: flatten2(&p.simplify(&self.alpha)?, p)?,
        };
        same(&e.alpha.src, &e.h.concat(&e.k), "source of α is not h·k")?;
        same(&e.alpha.tgt(p)?, &e.f.concat(&e.g), "target of α is not f·g")?;
        Ok(e)
    }

    pub fn check(&self, p: &Presentation) -> Result<()> {
        self.edges(p).map(|_| ())
    }
}

fn id(w: &Word) -> Diagram {
    Diagram::identity(w.clone())
}

/// `h∘f^R ⇒ k^R∘g`, i.e. `f^R·h ⇒ g·k^R`: the unit of `k` on the right,
/// then α, then the counit of `f` on the left.
pub fn right_mate(sq: &Square, adjf: &AdjunctionRecord, adjk: &AdjunctionRecord, p: &Presentation) -> Result<CellTerm> {
    Ok(right_mate_diagram(sq, adjf, adjk, p)?.to_term(p)?)
}

pub fn right_mate_diagram(sq: &Square, adjf: &AdjunctionRecord, adjk: &AdjunctionRecord, p: &Presentation) -> Result<Diagram> {
    let e = sq.edges(p)?;
    adjf.check_shape(p)?;
    adjk.check_shape(p)?;
    same(&adjf.left(p)?, &e.f, "f is not the left adjoint of its record")?;
    same(&adjk.left(p)?, &e.k, "k is not the left adjoint of its record")?;
    let fr = adjf.right(p)?;
    let kr = adjk.right(p)?;
    let d1 = id(&fr.concat(&e.h)).beside(&adjk.unit(p)?, p)?;
    let d2 = id(&fr).beside(&e.alpha, p)?.beside(&id(&kr), p)?;
    let d3 = adjf.counit(p)?.beside(&id(&e.g.concat(&kr)), p)?;
    Ok(d1.then(&d2, p)?.then(&d3, p)?)
}

/// `g^L∘k ⇒ f∘h^L`, i.e. `k·g^L ⇒ h^L·f`: the unit of `h` on the left,
/// then α, then the counit of `g` on the right.
pub fn left_mate(sq: &Square, adjh: &AdjunctionRecord, adjg: &AdjunctionRecord, p: &Presentation) -> Result<CellTerm> {
    Ok(left_mate_diagram(sq, adjh, adjg, p)?.to_term(p)?)
}

pub fn left_mate_diagram(sq: &Square, adjh: &AdjunctionRecord, adjg: &AdjunctionRecord, p: &Presentation) -> Result<Diagram> {
    let e = sq.edges(p)?;
    adjh.check_shape(p)?;
    adjg.check_shape(p)?;
    same(&adjh.right(p)?, &e.h, "h is not the right adjoint of its record")?;
    same(&adjg.right(p)?, &e.g, "g is not the right adjoint of its record")?;
    let hl = adjh.left(p)?;
    let gl = adjg.left(p)?;
    let d1 = adjh.unit(p)?.beside(&id(&e.k.concat(&gl)), p)?;
    let d2 = id(&hl).beside(&e.alpha, p)?.beside(&id(&gl), p)?;
    let d3 = id(&hl.concat(&e.f)).beside(&adjg.counit(p)?, p)?;
    Ok(d1.then(&d2, p)?.then(&d3, p)?)
}

/// The square whose filler is the right mate, read as a square for the left mate.
pub fn right_mate_square(sq: &Square, adjf: &AdjunctionRecord, adjk: &AdjunctionRecord, p: &Presentation) -> Result<Square> {
    Ok(Square {
        h: adjf.r.clone(),
        k: sq.h.clone(),
        f: sq.g.clone(),
        g: adjk.r.clone(),
        alpha: right_mate(sq, adjf, adjk, p)?,
    })
}

pub fn left_mate_square(sq: &Square, adjh: &AdjunctionRecord, adjg: &AdjunctionRecord, p: &Presentation) -> Result<Square> {
    Ok(Square {
        h: sq.k.clone(),
        k: adjg.l.clone(),
        f: adjh.l.clone(),
        g: sq.f.clone(),
        alpha: left_mate(sq, adjh, adjg, p)?,
    })
}

/// `(α^rmate)^lmate` against `α` and `(α^lmate)^rmate` against `α`.
/// Needs `f, k` left adjoints and `h, g` right adjoints.
pub fn double_mates(
    sq: &Square,
    adj: [&AdjunctionRecord; 4],
    p: &Presentation,
    budget: usize,
) -> Result<[Verdict; 2]> {
    let [adjf, adjk, adjh, adjg] = adj;
    let r = right_mate_square(sq, adjf, adjk, p)?;
    let rl = left_mate(&r, adjf, adjk, p)?;
    let l = left_mate_square(sq, adjh, adjg, p)?;
    let lr = right_mate(&l, adjh, adjg, p)?;
    Ok([eq(&rl, &sq.alpha, p, budget)?, eq(&lr, &sq.alpha, p, budget)?])
}

/// The trivial square on a 1-cell `f`: `α = id_f` with `h, g` identities and `k = f`.
/// Its right mate is the snake on `f^R`.
pub fn identity_square(f: &CellTerm, p: &Presentation) -> Result<Square> {
    let src = p.boundary(f, Side::Source, 0)?;
    let tgt = p.boundary(f, Side::Target, 0)?;
    Ok(Square {
        f: f.clone(),
        g: CellTerm::id(tgt),
        h: CellTerm::id(src),
        k: f.clone(),
        alpha: CellTerm::id(f.clone()),
    })
}
