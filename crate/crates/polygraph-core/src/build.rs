//! Assembling 3-cells by applying whiskered generators to a running 2-cell.

use crate::diagram::{flatten2, Diagram};
use crate::error::{CoreError, Result};
use crate::presentation::{Presentation, Side};
use crate::rewrite::{find_matches, replace, Match};
use crate::term::CellTerm;

/// Whisker a `dim`-cell by 1-cells on either side.
pub fn whisker(left: Option<&CellTerm>, t: CellTerm, right: Option<&CellTerm>, dim: usize) -> CellTerm {
    let lift = |w: &CellTerm| CellTerm::ids(w.clone(), dim - 1);
    let mut t = t;
    if let Some(r) = right {
        t = CellTerm::comp(0, t, lift(r));
    }
    if let Some(l) = left {
        t = CellTerm::comp(0, lift(l), t);
    }
    t
}

pub struct Builder<'a> {
    p: &'a Presentation,
    start: Diagram,
    cur: Diagram,
    parts: Vec<CellTerm>,
}

impl<'a> Builder<'a> {
    pub fn new(p: &'a Presentation, start: Diagram) -> Self {
        Builder { p, cur: start.clone(), start, parts: Vec::new() }
    }

    pub fn current(&self) -> &Diagram {
        &self.cur
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[CellTerm] {
        &self.parts
    }

    /// Apply 3-generator `gen` (or its inverse) at the `skip`-th occurrence of
    /// its source, optionally restricted to a horizontal offset.
    pub fn apply(&mut self, gen: &str, inv: bool, offset: Option<usize>, skip: usize) -> Result<&mut Self> {
        let (block, out) = self.sides(gen, inv)?;
        let found = find_matches(&self.cur, &block, self.p, 64 + skip)?;
        let m = found
            .into_iter()
            .filter(|m| offset.map_or(true, |o| m.offset == o))
            .nth(skip)
            .ok_or_else(|| CoreError::NoMatch(format!("{gen}{}", if inv { "⁻¹" } else { "" })))?;
        self.commit(gen, inv, &m, &block, &out)
    }

    /// Apply a 3-generator whose source is an identity 2-cell, inserting its
    /// target before layer `at`, at horizontal offset `offset`.
    pub fn insert(&mut self, gen: &str, inv: bool, at: usize, offset: usize) -> Result<&mut Self> {
        let (block, out) = self.sides(gen, inv)?;
        if !block.layers.is_empty() {
            return Err(CoreError::Dimension(format!("`{gen}` does not start from an identity")));
        }
        if at > self.cur.layers.len() {
            return Err(CoreError::NoMatch(format!("{gen}: no layer {at}")));
        }
        let words = self.cur.words(self.p)?;
        let w = &words[at];
        let fits = offset + block.src.len() <= w.len()
            && w.letters[offset..offset + block.src.len()] == block.src.letters[..]
            && (!block.src.is_empty() || w.object_at(self.p, offset)? == block.src.src);
        if !fits {
            return Err(CoreError::NoMatch(format!("{gen}: boundary does not fit at layer {at}, offset {offset}")));
        }
        let m = Match { layers: self.cur.layers.clone(), start: at, len: 0, offset };
        self.commit(gen, inv, &m, &block, &out)
    }

    fn sides(&self, gen: &str, inv: bool) -> Result<(Diagram, Diagram)> {
        let g = self.p.generator(gen)?;
        if g.dim != 3 {
            return Err(CoreError::Dimension(format!("`{gen}` is not a 3-generator")));
        }
        let (from, to) = if inv { (Side::Target, Side::Source) } else { (Side::Source, Side::Target) };
        let side = |s: Side| -> Result<Diagram> {
            let t = match s {
                Side::Source => g.src.as_ref(),
                Side::Target => g.tgt.as_ref(),
            }
            .expect("3-generator boundary");
            flatten2(&self.p.simplify(t)?, self.p)
        };
        Ok((side(from)?, side(to)?))
    }

    fn commit(&mut self, gen: &str, inv: bool, m: &Match, block: &Diagram, out: &Diagram) -> Result<&mut Self> {
        let next = replace(&self.cur, m, out);
        let pre = Diagram { src: self.cur.src.clone(), layers: m.layers[..m.start].to_vec() };
        let w = pre.tgt(self.p)?;
        let left = (m.offset > 0).then(|| w.slice(self.p, 0, m.offset)).transpose()?;
        let rend = m.offset + block.src.len();
        let right = (rend < w.len()).then(|| w.slice(self.p, rend, w.len())).transpose()?;
        let core = if inv { CellTerm::inv(CellTerm::gen(gen)) } else { CellTerm::gen(gen) };
        let mut t = whisker(left.map(|x| x.to_term()).as_ref(), core, right.map(|x| x.to_term()).as_ref(), 3);
        if !pre.layers.is_empty() {
            t = CellTerm::comp(1, CellTerm::id(pre.to_term(self.p)?), t);
        }
        let post_layers = m.layers[m.start + m.len..].to_vec();
        if !post_layers.is_empty() {
            let words = next.words(self.p)?;
            let post = Diagram { src: words[m.start + out.layers.len()].clone(), layers: post_layers };
            t = CellTerm::comp(1, t, CellTerm::id(post.to_term(self.p)?));
        }
        self.parts.push(t);
        self.cur = next;
        Ok(self)
    }

    pub fn finish(&self) -> Result<CellTerm> {
        match CellTerm::comp_all(2, self.parts.clone()) {
            Some(t) => Ok(t),
            None => Ok(CellTerm::id(self.start.to_term(self.p)?)),
        }
    }
}
