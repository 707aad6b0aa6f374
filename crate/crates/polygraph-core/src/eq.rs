//! Stratified, sound-but-partial equality of cells.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::diagram::flatten2;
use crate::error::Result;
use crate::flat3::{flatten3, StepKey};
use crate::presentation::{Presentation, Side};
use crate::rewrite::{normalize2, rules2, search2};
use crate::term::CellTerm;
use crate::word::{flatten1, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

pub const DEFAULT_BUDGET: usize = 10_000;

pub fn eq(a: &CellTerm, b: &CellTerm, p: &Presentation, budget: usize) -> Result<Verdict> {
    let mut budget = budget;
    eq_with(a, b, p, &mut budget)
}

fn eq_with(a: &CellTerm, b: &CellTerm, p: &Presentation, budget: &mut usize) -> Result<Verdict> {
    let da = p.dim(a)?;
    let db = p.dim(b)?;
    if da != db {
        return Ok(Verdict::Distinct);
    }
    let a = p.simplify(a)?;
    let b = p.simplify(b)?;
    if a == b {
        return Ok(Verdict::Equal);
    }
    match da {
        0 => Ok(Verdict::Distinct),
        1 => eq1(&a, &b, p, budget),
        2 => eq2(&a, &b, p, budget),
        _ => eq_high(&a, &b, da, p, budget),
    }
}

fn rules1(p: &Presentation) -> Vec<(Vec<Letter>, Vec<Letter>, bool)> {
    p.relations()
        .iter()
        .filter(|r| r.dim == 1)
        .filter_map(|r| {
            let l = flatten1(&p.simplify(&r.lhs).ok()?, p).ok()?.free_reduce();
            let rr = flatten1(&p.simplify(&r.rhs).ok()?, p).ok()?.free_reduce();
            Some((l.letters, rr.letters, r.oriented))
        })
        .collect()
}

fn rewrite_word(w: &[Letter], lhs: &[Letter], rhs: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    if lhs.is_empty() || lhs.len() > w.len() {
        return out;
    }
    for i in 0..=(w.len() - lhs.len()) {
        if w[i..i + lhs.len()] == *lhs {
            let mut v = w[..i].to_vec();
            v.extend(rhs.iter().cloned());
            v.extend(w[i + lhs.len()..].iter().cloned());
            out.push(Word { src: String::new(), letters: v }.free_reduce().letters);
        }
    }
    out
}

fn eq1(a: &CellTerm, b: &CellTerm, p: &Presentation, budget: &mut usize) -> Result<Verdict> {
    let wa = flatten1(a, p)?.free_reduce();
    let wb = flatten1(b, p)?.free_reduce();
    if wa.src != wb.src || wa.tgt(p)? != wb.tgt(p)? {
        return Ok(Verdict::Distinct);
    }
    let rules = rules1(p);
    let normal = |w: &Word, budget: &mut usize| {
        let mut cur = w.letters.clone();
        'outer: while *budget > 0 {
            for (l, r, o) in &rules {
                if *o {
                    if let Some(n) = rewrite_word(&cur, l, r).into_iter().next() {
                        cur = n;
                        *budget -= 1;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        cur
    };
    let na = normal(&wa, budget);
    let nb = normal(&wb, budget);
    if na == nb {
        return Ok(Verdict::Equal);
    }
    if rules.is_empty() {
        return Ok(Verdict::Distinct);
    }
    let mut seen = HashSet::from([na.clone()]);
    let mut q = VecDeque::from([na]);
    while let Some(cur) = q.pop_front() {
        if *budget == 0 {
            return Ok(Verdict::Unknown);
        }
        *budget -= 1;
        for (l, r, _) in &rules {
            for n in rewrite_word(&cur, l, r).into_iter().chain(rewrite_word(&cur, r, l)) {
                if n == nb {
                    return Ok(Verdict::Equal);
                }
                if seen.insert(n.clone()) {
                    q.push_back(n);
                }
            }
        }
    }
    Ok(Verdict::Unknown)
}

fn eq2(a: &CellTerm, b: &CellTerm, p: &Presentation, budget: &mut usize) -> Result<Verdict> {
    let da = flatten2(a, p)?;
    let db = flatten2(b, p)?;
    if da.src.free_reduce() != db.src.free_reduce() || da.tgt(p)?.free_reduce() != db.tgt(p)?.free_reduce() {
        return Ok(Verdict::Distinct);
    }
    let oriented = rules2(p, true);
    let na = normalize2(&da, &oriented, p, budget)?;
    let nb = normalize2(&db, &oriented, p, budget)?;
    if na.src == nb.src && na.layers == nb.layers {
        return Ok(Verdict::Equal);
    }
    let has_rel = p.relations().iter().any(|r| r.dim == 2);
    let has_inv = da.layers.iter().chain(&db.layers).any(|l| l.inv);
    let degenerate = da.uses_degenerate(p)? || db.uses_degenerate(p)?;
    if !has_rel && !has_inv && !degenerate {
        return Ok(Verdict::Distinct);
    }
    let all = rules2(p, false);
    match search2(&na, &nb, &all, p, budget)? {
        Some(true) => Ok(Verdict::Equal),
        _ => Ok(Verdict::Unknown),
    }
}

fn eq_high(a: &CellTerm, b: &CellTerm, n: usize, p: &Presentation, budget: &mut usize) -> Result<Verdict> {
    let mut unknown = false;
    for side in [Side::Source, Side::Target] {
        match eq_with(&p.face(a, side)?, &p.face(b, side)?, p, budget)? {
            Verdict::Distinct => return Ok(Verdict::Distinct),
            Verdict::Unknown => unknown = true,
            Verdict::Equal => {}
        }
    }
    if n == 3 {
        let (sa, ka) = flatten3(a, p)?.signature(p)?;
        let (sb, kb) = flatten3(b, p)?.signature(p)?;
        if (sa == sb && ka == kb) || (ka.is_empty() && kb.is_empty() && !unknown) {
            return Ok(Verdict::Equal);
        }
        if search3(ka, kb, p, budget)? {
            return Ok(Verdict::Equal);
        }
    }
    Ok(Verdict::Unknown)
}

/// Replace exact occurrences of 3-dimensional relation sides inside step
/// sequences, breadth first, in both directions.
fn search3(a: Vec<StepKey>, b: Vec<StepKey>, p: &Presentation, budget: &mut usize) -> Result<bool> {
    let mut rules: Vec<(Vec<StepKey>, Vec<StepKey>)> = Vec::new();
    for r in p.relations().iter().filter(|r| r.dim == 3) {
        let (Ok(l), Ok(rr)) = (flatten3(&r.lhs, p), flatten3(&r.rhs, p)) else { continue };
        let l = l.signature(p)?.1;
        let rr = rr.signature(p)?.1;
        rules.push((l.clone(), rr.clone()));
        rules.push((rr, l));
    }
    if rules.is_empty() {
        return Ok(false);
    }
    let mut seen = HashSet::from([a.clone()]);
    let mut q = VecDeque::from([a]);
    while let Some(cur) = q.pop_front() {
        if *budget == 0 {
            return Ok(false);
        }
        *budget -= 1;
        for (l, r) in &rules {
            if l.is_empty() || l.len() > cur.len() {
                continue;
            }
            for i in 0..=(cur.len() - l.len()) {
                if cur[i..i + l.len()] == l[..] {
                    let mut v = cur[..i].to_vec();
                    v.extend(r.iter().cloned());
                    v.extend(cur[i + l.len()..].iter().cloned());
                    if v == b {
                        return Ok(true);
                    }
                    if seen.insert(v.clone()) {
                        q.push_back(v);
                    }
                }
            }
        }
    }
    Ok(false)
}
