//! Pattern matching of layered sub-diagrams up to interchange, and rewriting.

use std::collections::{HashSet, VecDeque};

use crate::diagram::{bubble_back, bubble_forward, canonical_tagged, flatten2, shift, Diagram, Layer};
use crate::error::Result;
use crate::presentation::Presentation;

/// An occurrence of a pattern: `layers` is the host after interchange moves,
/// the pattern occupies `start..start+len` and sits at horizontal `offset`.
#[derive(Clone, Debug)]
pub struct Match {
    pub layers: Vec<Layer>,
    pub start: usize,
    pub len: usize,
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct Rule2 {
    pub lhs: Diagram,
    pub rhs: Diagram,
}

impl Rule2 {
    pub fn reversed(&self) -> Rule2 {
        Rule2 { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }
}

/// Compile the 2-dimensional relations of `p` (only oriented ones if asked).
pub fn rules2(p: &Presentation, oriented_only: bool) -> Vec<Rule2> {
    p.relations()
        .iter()
        .filter(|r| r.dim == 2 && (r.oriented || !oriented_only))
        .filter_map(|r| {
            let lhs = flatten2(&p.simplify(&r.lhs).ok()?, p).ok()?;
            let rhs = flatten2(&p.simplify(&r.rhs).ok()?, p).ok()?;
            (lhs.src == rhs.src).then_some(Rule2 { lhs, rhs })
        })
        .collect()
}

/// Find up to `max` occurrences of `pat` in the diagram `d`.
pub fn find_matches(d: &Diagram, pat: &Diagram, p: &Presentation, max: usize) -> Result<Vec<Match>> {
    let mut out = Vec::new();
    let Some(first) = pat.layers.first() else {
        return Ok(out);
    };
    for i in 0..d.layers.len() {
        let l = &d.layers[i];
        if l.gen != first.gen || l.inv != first.inv || l.pos < first.pos {
            continue;
        }
        let offset = l.pos - first.pos;
        extend(d, &d.layers, pat, p, i, 1, offset, max, &mut out)?;
        if out.len() >= max {
            break;
        }
        // the first layer may also slide later, past layers it commutes with
        let mut cur = d.layers.clone();
        let mut at = i;
        while at + 1 < cur.len() {
            match bubble_forward(&cur, at, at + 1, p)? {
                Some(next) => cur = next,
                None => break,
            }
            at += 1;
            let offset = match cur[at].pos.checked_sub(first.pos) {
                Some(o) => o,
                None => break,
            };
            extend(d, &cur, pat, p, at, 1, offset, max, &mut out)?;
            if out.len() >= max {
                return Ok(out);
            }
        }
        // or earlier
        for t in (0..i).rev() {
            let Some(cur) = bubble_back(&d.layers, i, t, p)? else { break };
            let Some(offset) = cur[t].pos.checked_sub(first.pos) else { break };
            extend(d, &cur, pat, p, t, 1, offset, max, &mut out)?;
            if out.len() >= max {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d: &Diagram,
    cur: &[Layer],
    pat: &Diagram,
    p: &Presentation,
    start: usize,
    m: usize,
    offset: usize,
    max: usize,
    out: &mut Vec<Match>,
) -> Result<()> {
    if out.len() >= max {
        return Ok(());
    }
    if m == pat.layers.len() {
        let host = Diagram { src: d.src.clone(), layers: cur[..start].to_vec() };
        let w = host.tgt(p)?;
        let end = offset + pat.src.len();
        if end <= w.len() && w.letters[offset..end] == pat.src.letters[..] && w.object_at(p, offset)? == pat.src.src {
            let dup = out.iter().any(|o| o.start == start && o.offset == offset && o.layers[..] == cur[..]);
            if !dup {
                out.push(Match { layers: cur.to_vec(), start, len: m, offset });
            }
        }
        return Ok(());
    }
    let want = &pat.layers[m];
    for c in (start + m)..cur.len() {
        let l = &cur[c];
        if l.gen != want.gen || l.inv != want.inv {
            continue;
        }
        if let Some(b) = bubble_back(cur, c, start + m, p)? {
            if b[start + m].pos == want.pos + offset {
                extend(d, &b, pat, p, start, m + 1, offset, max, out)?;
                if out.len() >= max {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Replace the matched block by `rhs` (placed at the match offset).
pub fn replace(d: &Diagram, m: &Match, rhs: &Diagram) -> Diagram {
    let mut layers = m.layers[..m.start].to_vec();
    layers.extend(shift(&rhs.layers, m.offset));
    layers.extend(m.layers[m.start + m.len..].iter().cloned());
    Diagram { src: d.src.clone(), layers }
}

fn cancel_patterns(d: &Diagram, p: &Presentation) -> Result<Vec<Rule2>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for l in &d.layers {
        if !l.inv || !seen.insert(l.gen.clone()) {
            continue;
        }
        let (s, t) = p.shape2(&l.gen)?;
        out.push(Rule2 {
            lhs: Diagram { src: s.clone(), layers: vec![Layer::new(l.gen.clone(), 0), Layer::inverse(l.gen.clone(), 0)] },
            rhs: Diagram::identity(s.clone()),
        });
        out.push(Rule2 {
            lhs: Diagram { src: t.clone(), layers: vec![Layer::inverse(l.gen.clone(), 0), Layer::new(l.gen.clone(), 0)] },
            rhs: Diagram::identity(t.clone()),
        });
    }
    Ok(out)
}

/// Drop vertically adjacent `g`, `g⁻¹` pairs at the same position.
fn cancel_adjacent(layers: &[Layer]) -> Vec<Layer> {
    let mut out: Vec<Layer> = Vec::with_capacity(layers.len());
    for l in layers {
        match out.last() {
            Some(t) if t.gen == l.gen && t.pos == l.pos && t.inv != l.inv => {
                out.pop();
            }
            _ => out.push(l.clone()),
        }
    }
    out
}

fn canon(d: &Diagram, p: &Presentation) -> Result<Diagram> {
    let reduced = cancel_adjacent(&d.layers);
    let tags = (0..reduced.len()).collect();
    let (layers, _) = canonical_tagged(reduced, tags, p)?;
    Ok(Diagram { src: d.src.clone(), layers })
}

/// Interchange-canonical form after exhaustive inverse cancellation and
/// oriented rewriting. Each rewrite spends one unit of `budget`.
pub fn normalize2(d: &Diagram, rules: &[Rule2], p: &Presentation, budget: &mut usize) -> Result<Diagram> {
    let mut cur = canon(d, p)?;
    'outer: while *budget > 0 {
        let mut all = cancel_patterns(&cur, p)?;
        all.extend(rules.iter().cloned());
        for r in &all {
            if let Some(m) = find_matches(&cur, &r.lhs, p, 1)?.into_iter().next() {
                cur = canon(&replace(&cur, &m, &r.rhs), p)?;
                *budget -= 1;
                continue 'outer;
            }
        }
        break;
    }
    Ok(cur)
}

/// Bidirectional breadth-first search between two normal forms using every
/// relation in both directions. Returns `Some(true)` on a meeting point,
/// `None` when the budget runs out.
pub fn search2(a: &Diagram, b: &Diagram, rules: &[Rule2], p: &Presentation, budget: &mut usize) -> Result<Option<bool>> {
    let mut both: Vec<Rule2> = rules.to_vec();
    both.extend(rules.iter().map(Rule2::reversed));
    let mut seen_a: HashSet<Vec<Layer>> = HashSet::new();
    let mut seen_b: HashSet<Vec<Layer>> = HashSet::new();
    let mut qa = VecDeque::from([a.clone()]);
    let mut qb = VecDeque::from([b.clone()]);
    seen_a.insert(a.layers.clone());
    seen_b.insert(b.layers.clone());
    let mut turn = false;
    while *budget > 0 && (!qa.is_empty() || !qb.is_empty()) {
        turn = !turn;
        let (q, seen, other) = if (turn && !qa.is_empty()) || qb.is_empty() {
            (&mut qa, &mut seen_a, &seen_b)
        } else {
            (&mut qb, &mut seen_b, &seen_a)
        };
        let Some(cur) = q.pop_front() else { continue };
        *budget -= 1;
        let mut moves = cancel_patterns(&cur, p)?;
        moves.extend(both.iter().cloned());
        for r in &moves {
            for m in find_matches(&cur, &r.lhs, p, 8)? {
                let next = canon(&replace(&cur, &m, &r.rhs), p)?;
                if other.contains(&next.layers) {
                    return Ok(Some(true));
                }
                if seen.insert(next.layers.clone()) {
                    q.push_back(next);
                }
            }
        }
    }
    Ok(None)
}
