//! Linear evaluation of 3-cells of the Gray square (and the smash square) of
//! the walking monad in a bialgebra `B`.
//!
//! A 2-cell is sent to `B^{⊗c}` where `c` counts its crossings `A*A`. The
//! generators `m*A`, `A*m`, `u*A`, `A*u` go to `m`, `Δ`, `u`, `ε`. Crossings
//! are ordered by walking the forest of `A*•` strands from the top boundary:
//! roots right to left, at a merge the right input first, and along a single
//! strand segment the latest crossing first.

use std::collections::BTreeMap;

use polygraph_core::{flatten2, flatten3, CellTerm, Diagram, Presentation, Side, Step3};
use walking::{pair_name, MND_OBJECT};

use crate::antipode::sign;
use crate::bialgebra::Bialgebra;
use crate::error::{HopfError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ordering {
    /// crossings ordered along the strand forest (Gray square)
    Strands,
    /// crossings ordered by layer index (smash square, where strands collapse)
    Layers,
}

pub struct EvalContext<'a> {
    pub b: &'a Bialgebra,
    pub presentation: &'a Presentation,
    pub ordering: Ordering,
    gens: BTreeMap<String, Matrix>,
}

struct Names {
    cross: String,
    a1: String,
    m_left: String,
    u_left: String,
}

fn names() -> Names {
    let o = MND_OBJECT;
    Names { cross: pair_name("A", "A"), a1: pair_name("A", o), m_left: pair_name("m", o), u_left: pair_name("u", o) }
}

impl<'a> EvalContext<'a> {
    /// The ordering is chosen from the presentation: strands when `A*•` survives.
    pub fn new(b: &'a Bialgebra, presentation: &'a Presentation) -> Self {
        let ordering = if presentation.contains(&names().a1) { Ordering::Strands } else { Ordering::Layers };
        let mut gens = BTreeMap::new();
        gens.insert(pair_name("m", "A"), b.m.clone());
        gens.insert(pair_name("A", "m"), b.delta.clone());
        gens.insert(pair_name("u", "A"), b.u.clone());
        gens.insert(pair_name("A", "u"), b.eps.clone());
        EvalContext { b, presentation, ordering, gens }
    }

    fn matrix(&self, gen: &str, inv: bool) -> Result<Matrix> {
        let m = self.gens.get(gen).ok_or_else(|| HopfError::Eval(format!("no value for generator `{gen}`")))?;
        if !inv {
            return Ok(m.clone());
        }
        m.inverse().map_err(|_| HopfError::Eval(format!("`{gen}` is not invertible in this bialgebra")))
    }

    /// Layer indices of the crossings of `d`, in tensor-factor order.
    pub fn crossing_order(&self, d: &Diagram) -> Result<Vec<usize>> {
        let nm = names();
        if let Some(l) = d.layers.iter().find(|l| l.inv) {
            return Err(HopfError::Eval(format!("inverse 2-cell `{}` has no value", l.gen)));
        }
        if self.ordering == Ordering::Layers {
            return Ok((0..d.layers.len()).filter(|&i| d.layers[i].gen == nm.cross).collect());
        }
        // strand segments: own crossings and children (right input first)
        let mut own: Vec<Vec<usize>> = Vec::new();
        let mut kids: Vec<Vec<usize>> = Vec::new();
        let fresh = |own: &mut Vec<Vec<usize>>, kids: &mut Vec<Vec<usize>>, c: Vec<usize>| {
            own.push(Vec::new());
            kids.push(c);
            own.len() - 1
        };
        let mut word: Vec<Option<usize>> = Vec::new();
        for l in &d.src.letters {
            word.push((l.name == nm.a1).then(|| fresh(&mut own, &mut kids, vec![])));
        }
        for (idx, l) in d.layers.iter().enumerate() {
            let (cons, prod) = l.io(self.presentation)?;
            let (p, k) = (l.pos, cons.len());
            if p + k > word.len() {
                return Err(HopfError::Eval(format!("layer {}@{p} does not fit", l.gen)));
            }
            let new: Vec<Option<usize>> = if l.gen == nm.cross {
                let s = word[p + 1].ok_or_else(|| HopfError::Eval("crossing without a strand".into()))?;
                own[s].push(idx);
                vec![Some(s), None]
            } else if l.gen == nm.m_left {
                let (x, y) = (word[p], word[p + 1]);
                let c = vec![y.expect("strand"), x.expect("strand")];
                vec![Some(fresh(&mut own, &mut kids, c))]
            } else if l.gen == nm.u_left {
                vec![Some(fresh(&mut own, &mut kids, vec![]))]
            } else {
                prod.letters.iter().map(|x| (x.name == nm.a1).then(|| fresh(&mut own, &mut kids, vec![]))).collect()
            };
            word.splice(p..p + k, new);
        }
        let mut out = Vec::new();
        let mut stack: Vec<usize> = word.iter().flatten().copied().collect();
        // roots right to left: the stack pops the rightmost first
        while let Some(s) = stack.pop() {
            let mut c = own[s].clone();
            c.sort_unstable_by(|a, b| b.cmp(a));
            out.extend(c);
            stack.extend(kids[s].iter().rev());
        }
        Ok(out)
    }

    /// Matrix of a 3-cell, `B^{⊗c_src} → B^{⊗c_tgt}`.
    pub fn evaluate(&self, t: &CellTerm) -> Result<Matrix> {
        let f = flatten3(t, self.presentation)?;
        let p = self.presentation;
        let n = self.b.n;
        let c0 = self.crossing_order(&f.src)?.len();
        let mut cols = Vec::with_capacity(n.pow(c0 as u32));
        let mut c_out = c0;
        for col in 0..n.pow(c0 as u32) {
            let mut state: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            state.insert(decode(col, n, c0), Scalar::one());
            c_out = c0;
            for s in &f.steps {
                let (next, c) = self.step(s, state, p)?;
                state = next;
                c_out = c;
            }
            cols.push(state);
        }
        let mut m = Matrix::zeros(n.pow(c_out as u32), cols.len());
        for (j, st) in cols.into_iter().enumerate() {
            for (k, v) in st {
                m.set(encode(&k, n), j, v);
            }
        }
        Ok(m)
    }

    fn step(&self, s: &Step3, state: BTreeMap<Vec<usize>, Scalar>, p: &Presentation) -> Result<(BTreeMap<Vec<usize>, Scalar>, usize)> {
        let before = s.before(p)?;
        let after = s.after(p)?;
        let bsrc = s.block(p, Side::Source)?;
        let btgt = s.block(p, Side::Target)?;
        let pre = s.pre.len();
        let (ls, lt) = (bsrc.layers.len(), btgt.layers.len());
        let host_after = |i: usize| if i < pre { i } else { i - ls + lt };

        let ord_before = self.crossing_order(&before)?;
        let ord_after = self.crossing_order(&after)?;
        let iso_src: Vec<usize> = self.crossing_order(&bsrc)?.iter().map(|i| i + pre).collect();
        let iso_tgt: Vec<usize> = self.crossing_order(&btgt)?.iter().map(|i| i + pre).collect();
        let in_block = |i: usize| i >= pre && i < pre + ls;
        let rest: Vec<usize> = ord_before.iter().copied().filter(|&i| !in_block(i)).collect();

        // positions in the before tuple of [iso_src ++ rest]
        let pos_before: BTreeMap<usize, usize> = ord_before.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let perm_in: Vec<usize> = iso_src.iter().chain(&rest).map(|i| pos_before[i]).collect();
        // positions in the [iso_tgt ++ rest] tuple of the after order
        let mid: Vec<usize> = iso_tgt.iter().copied().chain(rest.iter().map(|&i| host_after(i))).collect();
        let pos_mid: BTreeMap<usize, usize> = mid.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let perm_out: Vec<usize> = ord_after.iter().map(|i| pos_mid[i]).collect();
        if perm_out.len() != mid.len() {
            return Err(HopfError::Eval(format!("crossings of step `{}` do not line up", s.gen)));
        }

        let g = self.matrix(&s.gen, s.inv)?;
        let n = self.b.n;
        let (ki, ko) = (iso_src.len(), iso_tgt.len());
        if g.cols != n.pow(ki as u32) || g.rows != n.pow(ko as u32) {
            return Err(HopfError::Eval(format!("`{}` changes {ki} crossings into {ko}", s.gen)));
        }
        let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (key, v) in state {
            let (t, s1) = self.permute(&key, &perm_in);
            let col = encode(&t[..ki], n);
            for r in 0..g.rows {
                let x = g.get(r, col);
                if x.is_zero() {
                    continue;
                }
                let mut u = decode(r, n, ko);
                u.extend_from_slice(&t[ki..]);
                let (w, s2) = self.permute(&u, &perm_out);
                let val = &(&(&v * x) * &s1) * &s2;
                let e = out.entry(w).or_insert_with(Scalar::zero);
                *e = &*e + &val;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok((out, ord_after.len()))
    }

    /// Reorder a tuple of basis indices, `out[k] = t[perm[k]]`, with its Koszul sign.
    fn permute(&self, t: &[usize], perm: &[usize]) -> (Vec<usize>, Scalar) {
        let out: Vec<usize> = perm.iter().map(|&k| t[k]).collect();
        let odd = |k: usize| self.b.grading[t[k]] == 1;
        let mut flips = 0usize;
        for a in 0..perm.len() {
            for b in a + 1..perm.len() {
                if perm[a] > perm[b] && odd(perm[a]) && odd(perm[b]) {
                    flips += 1;
                }
            }
        }
        (out, sign(flips % 2 == 1))
    }
}

fn decode(mut k: usize, n: usize, c: usize) -> Vec<usize> {
    let mut v = vec![0; c];
    for i in (0..c).rev() {
        v[i] = k % n;
        k /= n;
    }
    v
}

fn encode(v: &[usize], n: usize) -> usize {
    v.iter().fold(0, |acc, &i| acc * n + i)
}

/// Evaluate a term of the Gray square (strand order) or of the smash square (layer order).
pub fn evaluate(b: &Bialgebra, p: &Presentation, t: &CellTerm) -> Result<Matrix> {
    EvalContext::new(b, p).evaluate(t)
}

/// Evaluate the identity on a 2-cell: the identity of `B^{⊗c}`.
pub fn evaluate_2cell_size(b: &Bialgebra, p: &Presentation, t: &CellTerm) -> Result<usize> {
    let d = flatten2(&p.simplify(t)?, p)?;
    Ok(b.n.pow(EvalContext::new(b, p).crossing_order(&d)?.len() as u32))
}

/// Evaluate a smash-square term through a Gray-square preimage, checking
/// that the preimage collapses onto it. In the smash square the crossings are
/// endomorphisms of an identity and carry no order of their own.
pub fn evaluate_image(b: &Bialgebra, sm: &walking::Smash, preimage: &CellTerm, image: &CellTerm) -> Result<Matrix> {
    let pushed = sm.collapse.apply(preimage).map_err(|e| HopfError::Eval(e.to_string()))?;
    let target = sm.presentation.simplify(image)?;
    if pushed != target {
        return Err(HopfError::Eval("the Gray term does not collapse onto the given smash term".into()));
    }
    evaluate(b, &sm.gray.presentation, preimage)
}
