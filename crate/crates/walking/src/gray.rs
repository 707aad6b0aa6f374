//! The strict Gray tensor product of presentations, by an explicit case table
//! on the dimensions of generator pairs.

use std::collections::BTreeMap;

use polygraph_core::diagram::Diagram;
use polygraph_core::{flatten1, flatten2, Builder, CellTerm, CoreError, Generator, Layer, Presentation, Relation, Side, Word, MAX_DIM};

use crate::error::{Result, WalkError};

pub fn pair_name(a: &str, b: &str) -> String {
    format!("{a}*{b}")
}

#[derive(Clone, Debug)]
pub struct GrayProduct {
    pub presentation: Presentation,
    /// generator of the product ↦ (left factor, right factor)
    pub pairs: BTreeMap<String, (String, String)>,
}

/// Words and 2-cells of the two factors, lifted into the product.
struct Ctx<'a> {
    p: &'a Presentation,
    q: &'a Presentation,
}

impl Ctx<'_> {
    fn word(&self, pres: &Presentation, t: &CellTerm) -> Result<Word> {
        let w = flatten1(&pres.simplify(t)?, pres)?;
        if let Some(l) = w.letters.iter().find(|l| l.inv) {
            return Err(CoreError::Invalid(format!("inverse letter `{}` in a Gray factor", l.name)).into());
        }
        Ok(w)
    }

    fn side_word(&self, pres: &Presentation, g: &Generator, side: Side) -> Result<Word> {
        let t = match side {
            Side::Source => g.src.as_ref(),
            Side::Target => g.tgt.as_ref(),
        }
        .expect("positive-dimensional generator");
        self.word(pres, t)
    }

    fn side_diagram(&self, pres: &Presentation, g: &Generator, side: Side) -> Result<Diagram> {
        let t = match side {
            Side::Source => g.src.as_ref(),
            Side::Target => g.tgt.as_ref(),
        }
        .expect("positive-dimensional generator");
        Ok(flatten2(&pres.simplify(t)?, pres)?)
    }

    /// x ⊗ (word in Q)
    fn lift_b(&self, x: &str, wb: &Word) -> Word {
        Word {
            src: pair_name(x, &wb.src),
            letters: wb.letters.iter().map(|l| polygraph_core::Letter::new(pair_name(x, &l.name))).collect(),
        }
    }

    /// (word in P) ⊗ v
    fn lift_a(&self, wa: &Word, v: &str) -> Word {
        Word {
            src: pair_name(&wa.src, v),
            letters: wa.letters.iter().map(|l| polygraph_core::Letter::new(pair_name(&l.name, v))).collect(),
        }
    }

    fn cross(&self, wa: &Word, wb: &Word) -> Vec<Layer> {
        cross(wa, wb)
    }

    fn lift_layers_a(&self, d: &Diagram, v: &str) -> Vec<Layer> {
        d.layers.iter().map(|l| Layer { gen: pair_name(&l.gen, v), inv: l.inv, pos: l.pos }).collect()
    }

    fn lift_layers_b(&self, x: &str, d: &Diagram) -> Vec<Layer> {
        d.layers.iter().map(|l| Layer { gen: pair_name(x, &l.gen), inv: l.inv, pos: l.pos }).collect()
    }

    fn ends(&self, pres: &Presentation, name: &str) -> Result<(String, String)> {
        Ok(pres.ends1(name)?)
    }
}

/// Layers pulling every letter of `wb` leftward across every letter of `wa`:
/// from x⊗wb · wa⊗v to wa⊗u · y⊗wb.
pub fn cross(wa: &Word, wb: &Word) -> Vec<Layer> {
    let (k, l) = (wa.len(), wb.len());
    let mut out = Vec::with_capacity(k * l);
    for j in (1..=l).rev() {
        for i in 1..=k {
            out.push(Layer::new(pair_name(&wa.letters[i - 1].name, &wb.letters[j - 1].name), (j - 1) + (i - 1)));
        }
    }
    out
}

fn diagram(src: Word, layers: Vec<Layer>) -> Diagram {
    Diagram { src, layers }
}

fn concat(mut a: Vec<Layer>, b: Vec<Layer>) -> Vec<Layer> {
    a.extend(b);
    a
}

pub fn gray(p: &Presentation, q: &Presentation) -> Result<GrayProduct> {
    for a in p.generators() {
        for b in q.generators() {
            if a.dim + b.dim > MAX_DIM {
                return Err(WalkError::Overflow(format!(
                    "{} ⊗ {} would have dimension {}",
                    a.name,
                    b.name,
                    a.dim + b.dim
                )));
            }
        }
    }
    let cx = Ctx { p, q };
    let mut out = Presentation::new();
    let mut pairs = BTreeMap::new();
    for d in 0..=MAX_DIM {
        for a in p.generators() {
            for b in q.generators() {
                if a.dim + b.dim != d {
                    continue;
                }
                let name = pair_name(&a.name, &b.name);
                let gen = pair_generator(&cx, &out, a, b, &name)?;
                out.add_generator(gen)?;
                pairs.insert(name, (a.name.clone(), b.name.clone()));
            }
        }
    }
    for r in p.relations() {
        for y in q.gens_of_dim(0) {
            let f = |n: &str| pair_name(n, &y.name);
            out.push_relation_unchecked(Relation { dim: r.dim, lhs: r.lhs.rename(&f), rhs: r.rhs.rename(&f), oriented: r.oriented });
        }
    }
    for r in q.relations() {
        for x in p.gens_of_dim(0) {
            let f = |n: &str| pair_name(&x.name, n);
            out.push_relation_unchecked(Relation { dim: r.dim, lhs: r.lhs.rename(&f), rhs: r.rhs.rename(&f), oriented: r.oriented });
        }
    }
    Ok(GrayProduct { presentation: out, pairs })
}

fn pair_generator(cx: &Ctx, out: &Presentation, a: &Generator, b: &Generator, name: &str) -> Result<Generator> {
    let (p, q) = (cx.p, cx.q);
    let cell = |dim: usize, s: CellTerm, t: CellTerm| Generator::cell(name, dim, s, t);
    match (a.dim, b.dim) {
        (0, 0) => Ok(Generator::object(name)),
        (0, _) => {
            let f = |n: &str| pair_name(&a.name, n);
            let mut g = cell(b.dim, b.src.as_ref().unwrap().rename(&f), b.tgt.as_ref().unwrap().rename(&f));
            g.invertible = b.invertible;
            Ok(g)
        }
        (_, 0) => {
            let f = |n: &str| pair_name(n, &b.name);
            let mut g = cell(a.dim, a.src.as_ref().unwrap().rename(&f), a.tgt.as_ref().unwrap().rename(&f));
            g.invertible = a.invertible;
            Ok(g)
        }
        (1, 1) => {
            let (x, y) = cx.ends(p, &a.name)?;
            let (u, v) = cx.ends(q, &b.name)?;
            let s = CellTerm::comp(0, CellTerm::gen(pair_name(&x, &b.name)), CellTerm::gen(pair_name(&a.name, &v)));
            let t = CellTerm::comp(0, CellTerm::gen(pair_name(&a.name, &u)), CellTerm::gen(pair_name(&y, &b.name)));
            Ok(cell(2, s, t))
        }
        (2, 1) => {
            let wa = cx.side_word(p, a, Side::Source)?;
            let wa2 = cx.side_word(p, a, Side::Target)?;
            let (u, v) = cx.ends(q, &b.name)?;
            let wb = Word::of(u.clone(), &[b.name.as_str()]);
            let w = cx.lift_b(&wa.src, &wb).concat(&cx.lift_a(&wa, &v));
            let s = concat(cx.cross(&wa, &wb), vec![Layer::new(pair_name(&a.name, &u), 0)]);
            let t = concat(vec![Layer::new(pair_name(&a.name, &v), 1)], cx.cross(&wa2, &wb));
            Ok(cell(3, diagram(w.clone(), s).to_term(out)?, diagram(w, t).to_term(out)?))
        }
        (1, 2) => {
            let wb = cx.side_word(q, b, Side::Source)?;
            let wb2 = cx.side_word(q, b, Side::Target)?;
            let (x, y) = cx.ends(p, &a.name)?;
            let wa = Word::of(x.clone(), &[a.name.as_str()]);
            let w = cx.lift_b(&x, &wb).concat(&cx.lift_a(&wa, &wb.tgt(q)?));
            let s = concat(vec![Layer::new(pair_name(&x, &b.name), 0)], cx.cross(&wa, &wb2));
            let t = concat(cx.cross(&wa, &wb), vec![Layer::new(pair_name(&y, &b.name), 1)]);
            Ok(cell(3, diagram(w.clone(), s).to_term(out)?, diagram(w, t).to_term(out)?))
        }
        (2, 2) => {
            let (wa, wa2) = (cx.side_word(p, a, Side::Source)?, cx.side_word(p, a, Side::Target)?);
            let (wb, wb2) = (cx.side_word(q, b, Side::Source)?, cx.side_word(q, b, Side::Target)?);
            let (x, u, v) = (wa.src.clone(), wb.src.clone(), wb.tgt(q)?);
            let w = cx.lift_b(&x, &wb).concat(&cx.lift_a(&wa, &v));
            let start = diagram(
                w,
                concat(
                    concat(vec![Layer::new(pair_name(&x, &b.name), 0)], cx.cross(&wa, &wb2)),
                    vec![Layer::new(pair_name(&a.name, &u), 0)],
                ),
            );
            // with no letters in the source of α, its lifted copy commutes past x⊗β
            // in either order; the source path needs it first
            let start_s = if wa.is_empty() {
                diagram(
                    start.src.clone(),
                    vec![Layer::new(pair_name(&a.name, &u), 0), Layer::new(pair_name(&x, &b.name), wa2.len())],
                )
            } else {
                start.clone()
            };
            let mut s = Builder::new(out, start_s);
            for (i, ai) in wa.letters.iter().enumerate() {
                s.apply(&pair_name(&ai.name, &b.name), false, Some(i), 0)?;
            }
            for (j, bj) in wb.letters.iter().enumerate() {
                s.apply(&pair_name(&a.name, &bj.name), false, Some(j), 0)?;
            }
            // likewise the target path needs it to the right of x⊗β when β has no target letters
            let start_t = if wb2.is_empty() {
                diagram(
                    start.src.clone(),
                    vec![Layer::new(pair_name(&a.name, &u), wb.len()), Layer::new(pair_name(&x, &b.name), 0)],
                )
            } else {
                start
            };
            let mut t = Builder::new(out, start_t);
            for (j, bj) in wb2.letters.iter().enumerate() {
                t.apply(&pair_name(&a.name, &bj.name), false, Some(j), 0)?;
            }
            for (i, ai) in wa2.letters.iter().enumerate() {
                t.apply(&pair_name(&ai.name, &b.name), false, Some(i), 0)?;
            }
            Ok(cell(4, s.finish()?, t.finish()?))
        }
        (3, 1) => {
            let da = cx.side_diagram(p, a, Side::Source)?;
            let da2 = cx.side_diagram(p, a, Side::Target)?;
            let wa = da.src.clone();
            let (u, v) = cx.ends(q, &b.name)?;
            let wb = Word::of(u.clone(), &[b.name.as_str()]);
            let w = cx.lift_b(&wa.src, &wb).concat(&cx.lift_a(&wa, &v));
            let start = diagram(w, concat(cx.cross(&wa, &wb), cx.lift_layers_a(&da, &u)));
            let mut s = Builder::new(out, start.clone());
            for l in &da.layers {
                s.apply(&pair_name(&l.gen, &b.name), l.inv, Some(l.pos), 0)?;
            }
            s.apply(&pair_name(&a.name, &v), false, Some(1), 0)?;
            let mut t = Builder::new(out, start);
            t.apply(&pair_name(&a.name, &u), false, Some(0), 0)?;
            for l in &da2.layers {
                t.apply(&pair_name(&l.gen, &b.name), l.inv, Some(l.pos), 0)?;
            }
            Ok(cell(4, s.finish()?, t.finish()?))
        }
        (1, 3) => {
            let db = cx.side_diagram(q, b, Side::Source)?;
            let db2 = cx.side_diagram(q, b, Side::Target)?;
            let wb = db.src.clone();
            let (x, y) = cx.ends(p, &a.name)?;
            let wa = Word::of(x.clone(), &[a.name.as_str()]);
            let w = cx.lift_b(&x, &wb).concat(&cx.lift_a(&wa, &wb.tgt(q)?));
            let wb2 = db.tgt(q)?;
            let start = diagram(w, concat(cx.lift_layers_b(&x, &db), cx.cross(&wa, &wb2)));
            let mut s = Builder::new(out, start.clone());
            s.apply(&pair_name(&x, &b.name), false, Some(0), 0)?;
            for l in db2.layers.iter().rev() {
                s.apply(&pair_name(&a.name, &l.gen), l.inv, Some(l.pos), 0)?;
            }
            let mut t = Builder::new(out, start);
            for l in db.layers.iter().rev() {
                t.apply(&pair_name(&a.name, &l.gen), l.inv, Some(l.pos), 0)?;
            }
            t.apply(&pair_name(&y, &b.name), false, Some(1), 0)?;
            Ok(cell(4, s.finish()?, t.finish()?))
        }
        (da, db) => Err(WalkError::Overflow(format!("no Gray case for dimensions ({da}, {db})"))),
    }
}
