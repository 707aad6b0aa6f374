use polygraph_core::{eq, flatten1, flatten2, CellTerm, Diagram, Presentation, Side, Verdict, Word};
use serde::{Deserialize, Serialize};

use crate::error::{MateError, Result};

/// `l ⊣ r` with counit `eps: l∘r ⇒ id` and unit `eta: id ⇒ r∘l`.
/// In diagrammatic words: `eps: r·l ⇒ id`, `eta: id ⇒ l·r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionRecord {
    pub l: CellTerm,
    pub r: CellTerm,
    pub eps: CellTerm,
    pub eta: CellTerm,
}

impl AdjunctionRecord {
    pub fn from_names(l: &str, r: &str, eps: &str, eta: &str) -> Self {
        AdjunctionRecord {
            l: CellTerm::gen(l),
            r: CellTerm::gen(r),
            eps: CellTerm::gen(eps),
            eta: CellTerm::gen(eta),
        }
    }

    /// `id ⊣ id` on an object.
    pub fn identity(obj: &str) -> Self {
        let o = CellTerm::gen(obj);
        AdjunctionRecord {
            l: CellTerm::id(o.clone()),
            r: CellTerm::id(o.clone()),
            eps: CellTerm::ids(o.clone(), 2),
            eta: CellTerm::ids(o, 2),
        }
    }

    pub fn left(&self, p: &Presentation) -> Result<Word> {
        Ok(flatten1(&p.simplify(&self.l)?, p)?)
    }

    pub fn right(&self, p: &Presentation) -> Result<Word> {
        Ok(flatten1(&p.simplify(&self.r)?, p)?)
    }

    pub fn counit(&self, p: &Presentation) -> Result<Diagram> {
        Ok(flatten2(&p.simplify(&self.eps)?, p)?)
    }

    pub fn unit(&self, p: &Presentation) -> Result<Diagram> {
        Ok(flatten2(&p.simplify(&self.eta)?, p)?)
    }

    /// Boundaries of the unit and counit against `l` and `r`.
    pub fn check_shape(&self, p: &Presentation) -> Result<()> {
        let (l, r) = (self.left(p)?, self.right(p)?);
        let (e, h) = (self.counit(p)?, self.unit(p)?);
        let rl = r.concat(&l);
        let lr = l.concat(&r);
        if e.src != rl || !e.tgt(p)?.is_empty() || e.tgt(p)?.src != r.src {
            return Err(MateError::Shape(format!("counit is not r·l ⇒ id on `{}`", r.src)));
        }
        if h.src.src != l.src || !h.src.is_empty() || h.tgt(p)? != lr {
            return Err(MateError::Shape(format!("unit is not id ⇒ l·r on `{}`", l.src)));
        }
        Ok(())
    }

    /// The two snake composites, on `l` and on `r`.
    pub fn zigzags(&self, p: &Presentation) -> Result<[Diagram; 2]> {
        let (l, r) = (self.left(p)?, self.right(p)?);
        let (e, h) = (self.counit(p)?, self.unit(p)?);
        let on_l = h.beside(&Diagram::identity(l.clone()), p)?.then(&Diagram::identity(l.clone()).beside(&e, p)?, p)?;
        let on_r = Diagram::identity(r.clone()).beside(&h, p)?.then(&e.beside(&Diagram::identity(r.clone()), p)?, p)?;
        Ok([on_l, on_r])
    }

    /// eq-verdicts of the zigzags against identities.
    pub fn check_zigzags(&self, p: &Presentation, budget: usize) -> Result<[Verdict; 2]> {
        self.check_shape(p)?;
        let [a, b] = self.zigzags(p)?;
        let mut out = [Verdict::Unknown; 2];
        for (i, d) in [a, b].iter().enumerate() {
            let t = d.to_term(p)?;
            let id = CellTerm::id(p.boundary(&t, Side::Source, 1)?);
            out[i] = eq(&t, &id, p, budget)?;
        }
        Ok(out)
    }
}
