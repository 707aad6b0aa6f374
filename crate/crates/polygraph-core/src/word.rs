//! 1-cells as words in 1-generators (letters may be formal inverses).

use crate::error::{CoreError, Result};
use crate::presentation::Presentation;
use crate::term::CellTerm;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub name: String,
    pub inv: bool,
}

impl Letter {
    pub fn new(name: impl Into<String>) -> Self {
        Letter { name: name.into(), inv: false }
    }

    pub fn flipped(&self) -> Self {
        Letter { name: self.name.clone(), inv: !self.inv }
    }
}

/// A 1-cell: its source object and a list of letters. Empty means identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub src: String,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn empty(obj: impl Into<String>) -> Self {
        Word { src: obj.into(), letters: Vec::new() }
    }

    pub fn of(obj: impl Into<String>, names: &[&str]) -> Self {
        Word { src: obj.into(), letters: names.iter().map(|n| Letter::new(*n)).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tgt(&self, p: &Presentation) -> Result<String> {
        match self.letters.last() {
            None => Ok(self.src.clone()),
            Some(l) => letter_end(p, l, true),
        }
    }

    /// Object sitting just before letter `i` (or at the end when `i == len`).
    pub fn object_at(&self, p: &Presentation, i: usize) -> Result<String> {
        if i == 0 {
            Ok(self.src.clone())
        } else {
            letter_end(p, &self.letters[i - 1], true)
        }
    }

    pub fn slice(&self, p: &Presentation, from: usize, to: usize) -> Result<Word> {
        Ok(Word { src: self.object_at(p, from)?, letters: self.letters[from..to].to_vec() })
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { src: self.src.clone(), letters }
    }

    pub fn inverse(&self, p: &Presentation) -> Result<Word> {
        Ok(Word {
            src: self.tgt(p)?,
            letters: self.letters.iter().rev().map(Letter::flipped).collect(),
        })
    }

    /// Cancel adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if let Some(last) = out.last() {
                if last.name == l.name && last.inv != l.inv {
                    out.pop();
                    continue;
                }
            }
            out.push(l.clone());
        }
        Word { src: self.src.clone(), letters: out }
    }

    pub fn to_term(&self) -> CellTerm {
        if self.letters.is_empty() {
            return CellTerm::id(CellTerm::gen(self.src.clone()));
        }
        let parts = self
            .letters
            .iter()
            .map(|l| {
                let g = CellTerm::gen(l.name.clone());
                if l.inv {
                    CellTerm::inv(g)
                } else {
                    g
                }
            })
            .collect();
        CellTerm::comp_all(0, parts).expect("nonempty")
    }
}

/// Endpoint of a letter: `target = true` gives where it lands.
pub fn letter_end(p: &Presentation, l: &Letter, target: bool) -> Result<String> {
    let (s, t) = p.ends1(&l.name)?;
    Ok(if target != l.inv { t } else { s })
}

/// Flatten a 1-dimensional term to a word (no free reduction).
pub fn flatten1(t: &CellTerm, p: &Presentation) -> Result<Word> {
    match t {
        CellTerm::Gen(g) => {
            let gen = p.generator(g)?;
            match gen.dim {
                1 => {
                    let (s, _) = p.ends1(g)?;
                    Ok(Word { src: s, letters: vec![Letter::new(g.clone())] })
                }
                d => Err(CoreError::Dimension(format!("`{g}` has dimension {d}, expected 1"))),
            }
        }
        CellTerm::Id(x) => match x.as_ref() {
            CellTerm::Gen(o) if p.generator(o)?.dim == 0 => Ok(Word::empty(o.clone())),
            other => Err(CoreError::Dimension(format!("{other} is not a 0-cell"))),
        },
        CellTerm::Comp(0, a, b) => {
            let wa = flatten1(a, p)?;
            let wb = flatten1(b, p)?;
            let ta = wa.tgt(p)?;
            if ta != wb.src {
                return Err(CoreError::Composition { k: 0, left: CellTerm::gen(ta), right: CellTerm::gen(wb.src) });
            }
            Ok(wa.concat(&wb))
        }
        CellTerm::Comp(k, _, _) => Err(CoreError::Dimension(format!("comp{k} in a 1-cell"))),
        CellTerm::Inv(x) => {
            let w = flatten1(x, p)?;
            for l in &w.letters {
                if !p.generator(&l.name)?.invertible {
                    return Err(CoreError::NotInvertible(l.name.clone()));
                }
            }
            w.inverse(p)
        }
    }
}
