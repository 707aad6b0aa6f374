//! 3-cells as sequences of whiskered generator applications.

use crate::diagram::{canonical_tagged, flatten2, shift, Diagram, Layer};
use crate::error::{CoreError, Result};
use crate::presentation::{Presentation, Side};
use crate::term::CellTerm;
use crate::word::Word;

/// One application of a 3-generator: the host 2-cell is
/// `pre ++ block ++ post` on the 1-cell `src`, the block sitting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step3 {
    pub pre: Vec<Layer>,
    pub offset: usize,
    pub gen: String,
    pub inv: bool,
    pub post: Vec<Layer>,
    pub src: Word,
}

impl Step3 {
    /// Source (`Side::Source`) or target block of the generator, as a diagram.
    pub fn block(&self, p: &Presentation, side: Side) -> Result<Diagram> {
        let g = p.generator(&self.gen)?;
        if g.dim != 3 {
            return Err(CoreError::Dimension(format!("`{}` is not a 3-generator", self.gen)));
        }
        let side = if self.inv { side.flip() } else { side };
        let t = match side {
            Side::Source => g.src.as_ref(),
            Side::Target => g.tgt.as_ref(),
        }
        .ok_or_else(|| CoreError::Invalid(format!("`{}` lacks a boundary", self.gen)))?;
        flatten2(&p.simplify(t)?, p)
    }

    fn host(&self, p: &Presentation, side: Side) -> Result<Diagram> {
        let b = self.block(p, side)?;
        let mut layers = self.pre.clone();
        layers.extend(shift(&b.layers, self.offset));
        layers.extend(self.post.iter().cloned());
        Ok(Diagram { src: self.src.clone(), layers })
    }

    pub fn before(&self, p: &Presentation) -> Result<Diagram> {
        self.host(p, Side::Source)
    }

    pub fn after(&self, p: &Presentation) -> Result<Diagram> {
        self.host(p, Side::Target)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat3 {
    pub src: Diagram,
    pub steps: Vec<Step3>,
}

pub fn flatten3(t: &CellTerm, p: &Presentation) -> Result<Flat3> {
    let t = p.simplify(t)?;
    flat(&t, p)
}

fn flat(t: &CellTerm, p: &Presentation) -> Result<Flat3> {
    match t {
        CellTerm::Gen(g) => gen_step(g, false, p),
        CellTerm::Inv(x) if matches!(x.as_ref(), CellTerm::Gen(_)) => match x.as_ref() {
            CellTerm::Gen(g) => gen_step(g, true, p),
            _ => unreachable!(),
        },
        CellTerm::Inv(x) => Err(CoreError::Invalid(format!("unexpected inverse of {x}"))),
        CellTerm::Id(s) => Ok(Flat3 { src: flatten2(s, p)?, steps: vec![] }),
        CellTerm::Comp(2, a, b) => {
            let fa = flat(a, p)?;
            let fb = flat(b, p)?;
            let mut steps = fa.steps;
            steps.extend(fb.steps);
            Ok(Flat3 { src: fa.src, steps })
        }
        CellTerm::Comp(1, a, b) => {
            let fa = flat(a, p)?;
            let fb = flat(b, p)?;
            let ta = flatten2(&p.simplify(&p.face(a, Side::Target)?)?, p)?;
            let src = fa.src.then(&fb.src, p)?;
            let mut steps = Vec::new();
            for mut s in fa.steps {
                s.post.extend(fb.src.layers.iter().cloned());
                steps.push(s);
            }
            for mut s in fb.steps {
                let mut pre = ta.layers.clone();
                pre.extend(s.pre);
                s.pre = pre;
                s.src = fa.src.src.clone();
                steps.push(s);
            }
            Ok(Flat3 { src, steps })
        }
        CellTerm::Comp(0, a, b) => {
            let fa = flat(a, p)?;
            let fb = flat(b, p)?;
            let ta = flatten2(&p.simplify(&p.face(a, Side::Target)?)?, p)?;
            let l = fa.src.tgt(p)?.len();
            let src = fa.src.beside(&fb.src, p)?;
            let mut steps = Vec::new();
            for mut s in fa.steps {
                s.src = s.src.concat(&fb.src.src);
                s.post.extend(shift(&fb.src.layers, l));
                steps.push(s);
            }
            for mut s in fb.steps {
                let mut pre = ta.layers.clone();
                pre.extend(shift(&s.pre, l));
                s.pre = pre;
                s.offset += l;
                s.post = shift(&s.post, l);
                s.src = fa.src.src.concat(&s.src);
                steps.push(s);
            }
            Ok(Flat3 { src, steps })
        }
        CellTerm::Comp(k, _, _) => Err(CoreError::Dimension(format!("comp{k} inside a 3-cell"))),
    }
}

fn gen_step(g: &str, inv: bool, p: &Presentation) -> Result<Flat3> {
    let gen = p.generator(g)?;
    if gen.dim != 3 {
        return Err(CoreError::Dimension(format!("`{g}` has dimension {}, expected 3", gen.dim)));
    }
    let side = if inv { &gen.tgt } else { &gen.src };
    let src = flatten2(&p.simplify(side.as_ref().expect("3-generator boundary"))?, p)?;
    let step = Step3 { pre: vec![], offset: 0, gen: g.to_string(), inv, post: vec![], src: src.src.clone() };
    Ok(Flat3 { src, steps: vec![step] })
}

/// Interchange-invariant description of a step: canonical host before and after.
pub type StepKey = (Vec<Layer>, Vec<Layer>, String, bool);

fn canon_layers(d: &Diagram, p: &Presentation) -> Result<Vec<Layer>> {
    let tags = (0..d.layers.len()).collect();
    Ok(canonical_tagged(d.layers.clone(), tags, p)?.0)
}

impl Flat3 {
    pub fn signature(&self, p: &Presentation) -> Result<(Vec<Layer>, Vec<StepKey>)> {
        let mut keys: Vec<StepKey> = Vec::new();
        for s in &self.steps {
            let k = (canon_layers(&s.before(p)?, p)?, canon_layers(&s.after(p)?, p)?, s.gen.clone(), s.inv);
            if let Some(last) = keys.last() {
                if last.2 == k.2 && last.3 != k.3 && last.0 == k.1 && last.1 == k.0 {
                    keys.pop();
                    continue;
                }
            }
            keys.push(k);
        }
        Ok((canon_layers(&self.src, p)?, keys))
    }
}
