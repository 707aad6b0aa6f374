//! 2-cells as layered string diagrams: a source word and a list of layers,
//! each layer one generator whiskered at a horizontal position.

use crate::error::{CoreError, Result};
use crate::presentation::Presentation;
use crate::term::CellTerm;
use crate::word::{flatten1, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layer {
    pub gen: String,
    pub inv: bool,
    pub pos: usize,
}

impl Layer {
    pub fn new(gen: impl Into<String>, pos: usize) -> Self {
        Layer { gen: gen.into(), inv: false, pos }
    }

    pub fn inverse(gen: impl Into<String>, pos: usize) -> Self {
        Layer { gen: gen.into(), inv: true, pos }
    }

    pub fn at(&self, pos: usize) -> Self {
        Layer { gen: self.gen.clone(), inv: self.inv, pos }
    }

    pub fn flipped(&self) -> Self {
        Layer { gen: self.gen.clone(), inv: !self.inv, pos: self.pos }
    }

    /// (consumed, produced) words.
    pub fn io<'a>(&self, p: &'a Presentation) -> Result<(&'a Word, &'a Word)> {
        let (s, t) = p.shape2(&self.gen)?;
        Ok(if self.inv { (t, s) } else { (s, t) })
    }

    pub fn arity(&self, p: &Presentation) -> Result<(usize, usize)> {
        let (s, t) = self.io(p)?;
        Ok((s.len(), t.len()))
    }
}

pub fn shift(layers: &[Layer], by: usize) -> Vec<Layer> {
    layers.iter().map(|l| l.at(l.pos + by)).collect()
}

/// Apply one layer to a word, checking the consumed letters.
pub fn apply_layer(w: &Word, l: &Layer, p: &Presentation) -> Result<Word> {
    let (cons, prod) = l.io(p)?;
    let end = l.pos + cons.len();
    if end > w.len() || w.letters[l.pos..end] != cons.letters[..] {
        return Err(CoreError::Invalid(format!(
            "layer {}{}@{} does not fit the word {:?}",
            l.gen,
            if l.inv { "⁻¹" } else { "" },
            l.pos,
            w.letters.iter().map(|x| x.name.as_str()).collect::<Vec<_>>()
        )));
    }
    if cons.is_empty() && w.object_at(p, l.pos)? != cons.src {
        return Err(CoreError::Invalid(format!("layer {}@{} placed at the wrong object", l.gen, l.pos)));
    }
    let mut letters = w.letters[..l.pos].to_vec();
    letters.extend(prod.letters.iter().cloned());
    letters.extend(w.letters[end..].iter().cloned());
    Ok(Word { src: w.src.clone(), letters })
}

/// Try to exchange adjacent layers `i` (first) and `j` (second).
/// Returns the new pair `(j', i')` when they are horizontally disjoint.
pub fn swap(i: &Layer, j: &Layer, p: &Presentation) -> Result<Option<(Layer, Layer)>> {
    let (si, ti) = i.arity(p)?;
    let (sj, tj) = j.arity(p)?;
    if j.pos + sj <= i.pos {
        return Ok(Some((j.clone(), i.at(i.pos - sj + tj))));
    }
    if j.pos >= i.pos + ti {
        return Ok(Some((j.at(j.pos - ti + si), i.clone())));
    }
    Ok(None)
}

/// Move the layer at `from` back to index `to` by interchange, if possible.
pub fn bubble_back(layers: &[Layer], from: usize, to: usize, p: &Presentation) -> Result<Option<Vec<Layer>>> {
    let mut v = layers.to_vec();
    let mut k = from;
    while k > to {
        match swap(&v[k - 1], &v[k], p)? {
            Some((a, b)) => {
                v[k - 1] = a;
                v[k] = b;
            }
            None => return Ok(None),
        }
        k -= 1;
    }
    Ok(Some(v))
}

/// Move the layer at `from` forward to index `to` by interchange, if possible.
pub fn bubble_forward(layers: &[Layer], from: usize, to: usize, p: &Presentation) -> Result<Option<Vec<Layer>>> {
    let mut v = layers.to_vec();
    let mut k = from;
    while k < to {
        match swap(&v[k], &v[k + 1], p)? {
            Some((a, b)) => {
                v[k] = a;
                v[k + 1] = b;
            }
            None => return Ok(None),
        }
        k += 1;
    }
    Ok(Some(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub src: Word,
    pub layers: Vec<Layer>,
}

impl Diagram {
    pub fn identity(w: Word) -> Self {
        Diagram { src: w, layers: Vec::new() }
    }

    pub fn words(&self, p: &Presentation) -> Result<Vec<Word>> {
        let mut out = Vec::with_capacity(self.layers.len() + 1);
        let mut w = self.src.clone();
        out.push(w.clone());
        for l in &self.layers {
            w = apply_layer(&w, l, p)?;
            out.push(w.clone());
        }
        Ok(out)
    }

    pub fn tgt(&self, p: &Presentation) -> Result<Word> {
        let mut w = self.src.clone();
        for l in &self.layers {
            w = apply_layer(&w, l, p)?;
        }
        Ok(w)
    }

    /// Vertical composite: `self` then `other`.
    pub fn then(&self, other: &Diagram, p: &Presentation) -> Result<Diagram> {
        let t = self.tgt(p)?;
        if t != other.src {
            return Err(CoreError::Composition { k: 1, left: t.to_term(), right: other.src.to_term() });
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Ok(Diagram { src: self.src.clone(), layers })
    }

    /// Horizontal composite: `self` on the left, `other` on the right.
    pub fn beside(&self, other: &Diagram, p: &Presentation) -> Result<Diagram> {
        let t = self.tgt(p)?;
        let (ta, sb) = (t.tgt(p)?, other.src.src.clone());
        if ta != sb {
            return Err(CoreError::Composition { k: 0, left: CellTerm::gen(ta), right: CellTerm::gen(sb) });
        }
        let mut layers = self.layers.clone();
        layers.extend(shift(&other.layers, t.len()));
        Ok(Diagram { src: self.src.concat(&other.src), layers })
    }

    pub fn inverse(&self, p: &Presentation) -> Result<Diagram> {
        for l in &self.layers {
            if !p.generator(&l.gen)?.invertible {
                return Err(CoreError::NotInvertible(l.gen.clone()));
            }
        }
        Ok(Diagram { src: self.tgt(p)?, layers: self.layers.iter().rev().map(Layer::flipped).collect() })
    }

    /// Whisker a generator into a term, skipping empty sides.
    fn whisker_term(left: Option<Word>, core: CellTerm, right: Option<Word>) -> CellTerm {
        let mut t = core;
        if let Some(r) = right {
            t = CellTerm::comp(0, t, CellTerm::id(r.to_term()));
        }
        if let Some(l) = left {
            t = CellTerm::comp(0, CellTerm::id(l.to_term()), t);
        }
        t
    }

    pub fn to_term(&self, p: &Presentation) -> Result<CellTerm> {
        if self.layers.is_empty() {
            return Ok(CellTerm::id(self.src.to_term()));
        }
        let words = self.words(p)?;
        let mut parts = Vec::with_capacity(self.layers.len());
        for (l, w) in self.layers.iter().zip(&words) {
            let (cons, _) = l.io(p)?;
            let end = l.pos + cons.len();
            let left = if l.pos > 0 { Some(w.slice(p, 0, l.pos)?) } else { None };
            let right = if end < w.len() { Some(w.slice(p, end, w.len())?) } else { None };
            let g = CellTerm::gen(l.gen.clone());
            let core = if l.inv { CellTerm::inv(g) } else { g };
            parts.push(Self::whisker_term(left, core, right));
        }
        Ok(CellTerm::comp_all(1, parts).expect("nonempty"))
    }

    pub fn canonical(&self, p: &Presentation) -> Result<Diagram> {
        let tags = (0..self.layers.len()).collect();
        let (layers, _) = canonical_tagged(self.layers.clone(), tags, p)?;
        Ok(Diagram { src: self.src.clone(), layers })
    }

    pub fn uses_degenerate(&self, p: &Presentation) -> Result<bool> {
        for l in &self.layers {
            let (s, t) = l.arity(p)?;
            if s == 0 || t == 0 {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Lexicographically least interchange representative; `tags` follow their layers.
pub fn canonical_tagged(mut layers: Vec<Layer>, mut tags: Vec<usize>, p: &Presentation) -> Result<(Vec<Layer>, Vec<usize>)> {
    let mut out = Vec::with_capacity(layers.len());
    let mut out_tags = Vec::with_capacity(layers.len());
    while !layers.is_empty() {
        let mut best: Option<(usize, Vec<Layer>)> = None;
        for k in 0..layers.len() {
            if let Some(b) = bubble_back(&layers, k, 0, p)? {
                let better = match &best {
                    None => true,
                    Some((_, cur)) => key(&b[0]) < key(&cur[0]),
                };
                if better {
                    best = Some((k, b));
                }
            }
        }
        let (k, b) = best.expect("the first layer can always lead");
        layers = b;
        let t = tags.remove(k);
        out.push(layers.remove(0));
        out_tags.push(t);
    }
    Ok((out, out_tags))
}

fn key(l: &Layer) -> (&str, bool, usize) {
    (l.gen.as_str(), l.inv, l.pos)
}

/// Flatten a 2-dimensional term into layers (inverses pushed down first).
pub fn flatten2(t: &CellTerm, p: &Presentation) -> Result<Diagram> {
    match t {
        CellTerm::Gen(g) => {
            let gen = p.generator(g)?;
            if gen.dim != 2 {
                return Err(CoreError::Dimension(format!("`{g}` has dimension {}, expected 2", gen.dim)));
            }
            let (s, _) = p.shape2(g)?;
            Ok(Diagram { src: s.clone(), layers: vec![Layer::new(g.clone(), 0)] })
        }
        CellTerm::Id(x) => Ok(Diagram::identity(flatten1(x, p)?)),
        CellTerm::Comp(1, a, b) => flatten2(a, p)?.then(&flatten2(b, p)?, p),
        CellTerm::Comp(0, a, b) => flatten2(a, p)?.beside(&flatten2(b, p)?, p),
        CellTerm::Comp(k, _, _) => Err(CoreError::Dimension(format!("comp{k} inside a 2-cell"))),
        CellTerm::Inv(x) => flatten2(x, p)?.inverse(p),
    }
}
