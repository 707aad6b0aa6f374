//! Smash collapse: the Gray product with every cell touching a basepoint
//! sent to an identity.

use std::collections::BTreeMap;

use polygraph_core::{CellTerm, Generator, Presentation, Relation};

use crate::builtins::PointedPresentation;
use crate::error::Result;
use crate::gray::{gray, pair_name, GrayProduct};

/// A generator-level map of presentations, extended to terms by substitution.
#[derive(Clone, Debug)]
pub struct CollapseMap {
    pub domain: Presentation,
    pub codomain: Presentation,
    pub assignment: BTreeMap<String, CellTerm>,
}

impl CollapseMap {
    /// Push a term forward, with identities collapsed in the codomain.
    pub fn apply(&self, t: &CellTerm) -> Result<CellTerm> {
        let s = t.substitute(&|g| self.assignment.get(g).cloned());
        Ok(self.codomain.simplify(&s)?)
    }

    pub fn survivors(&self) -> impl Iterator<Item = &String> {
        self.assignment.iter().filter(|(k, v)| matches!(v, CellTerm::Gen(n) if n == *k)).map(|(k, _)| k)
    }
}

#[derive(Clone, Debug)]
pub struct Smash {
    pub presentation: Presentation,
    pub basepoint: String,
    pub collapse: CollapseMap,
    pub gray: GrayProduct,
}

pub fn smash(p: &PointedPresentation, q: &PointedPresentation) -> Result<Smash> {
    let gp = gray(&p.base, &q.base)?;
    let base = pair_name(&p.basepoint, &q.basepoint);
    let mut assignment = BTreeMap::new();
    for g in gp.presentation.generators() {
        let (a, b) = &gp.pairs[&g.name];
        let img = if g.name == base {
            CellTerm::gen(base.clone())
        } else if *a == p.basepoint || *b == q.basepoint {
            CellTerm::ids(CellTerm::gen(base.clone()), g.dim)
        } else {
            CellTerm::gen(g.name.clone())
        };
        assignment.insert(g.name.clone(), img);
    }
    let sub = |t: &CellTerm| t.substitute(&|n| assignment.get(n).cloned());
    let mut out = Presentation::new();
    for g in gp.presentation.generators() {
        if !matches!(&assignment[&g.name], CellTerm::Gen(n) if *n == g.name) {
            continue;
        }
        let mut h = match (&g.src, &g.tgt) {
            (Some(s), Some(t)) => {
                let (s, t) = (out.simplify(&sub(s))?, out.simplify(&sub(t))?);
                Generator::cell(g.name.clone(), g.dim, s, t)
            }
            _ => Generator::object(g.name.clone()),
        };
        h.invertible = g.invertible;
        out.add_generator(h)?;
    }
    for r in gp.presentation.relations() {
        let (l, rr) = (out.simplify(&sub(&r.lhs))?, out.simplify(&sub(&r.rhs))?);
        if l != rr {
            out.push_relation_unchecked(Relation { dim: r.dim, lhs: l, rhs: rr, oriented: r.oriented });
        }
    }
    let collapse = CollapseMap { domain: gp.presentation.clone(), codomain: out.clone(), assignment };
    Ok(Smash { presentation: out, basepoint: base, collapse, gray: gp })
}
