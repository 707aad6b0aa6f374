//! Well-formedness checks for terms and whole presentations.

use serde::{Deserialize, Serialize};

use crate::eq::{eq, Verdict, DEFAULT_BUDGET};
use crate::error::{CoreError, Result};
use crate::presentation::{Presentation, Side};
use crate::term::CellTerm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Generator name, or `relation #i`.
    pub subject: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub entries: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Dimension of `t` after checking that every composite is glued along
/// matching boundaries. Only a `Distinct` verdict is treated as a mismatch.
pub fn check_term(t: &CellTerm, p: &Presentation) -> Result<usize> {
    match t {
        CellTerm::Gen(_) => p.dim(t),
        CellTerm::Id(x) => Ok(check_term(x, p)? + 1),
        CellTerm::Inv(x) => {
            check_term(x, p)?;
            p.push_inv(t)?;
            p.dim(t)
        }
        CellTerm::Comp(k, a, b) => {
            check_term(a, p)?;
            check_term(b, p)?;
            let n = p.dim(t)?;
            let ta = p.boundary(a, Side::Target, *k)?;
            let sb = p.boundary(b, Side::Source, *k)?;
            if eq(&ta, &sb, p, DEFAULT_BUDGET)? == Verdict::Distinct {
                return Err(CoreError::Composition { k: *k, left: ta, right: sb });
            }
            Ok(n)
        }
    }
}

/// Check that `a` and `b` are parallel cells of the same dimension.
pub fn check_parallel(a: &CellTerm, b: &CellTerm, p: &Presentation) -> std::result::Result<(), String> {
    let da = check_term(a, p).map_err(|e| e.to_string())?;
    let db = check_term(b, p).map_err(|e| e.to_string())?;
    if da != db {
        return Err(format!("dimensions {da} and {db} differ"));
    }
    for k in 0..da {
        for side in [Side::Source, Side::Target] {
            let x = p.boundary(a, side, k).map_err(|e| e.to_string())?;
            let y = p.boundary(b, side, k).map_err(|e| e.to_string())?;
            if eq(&x, &y, p, DEFAULT_BUDGET).map_err(|e| e.to_string())? == Verdict::Distinct {
                let s = if side == Side::Source { "source" } else { "target" };
                return Err(format!("{k}-dimensional {s}s differ: {x} vs {y}"));
            }
        }
    }
    Ok(())
}

pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let mut entries = Vec::new();
    let mut push = |subject: String, message: String| entries.push(Violation { subject, message });
    for g in p.generators() {
        if g.dim == 0 {
            if g.src.is_some() || g.tgt.is_some() {
                push(g.name.clone(), "0-generator with a boundary".into());
            }
            continue;
        }
        let (Some(s), Some(t)) = (&g.src, &g.tgt) else {
            push(g.name.clone(), "missing source or target".into());
            continue;
        };
        let mut bad = false;
        for b in [s, t] {
            for name in b.generators() {
                match p.generator(&name) {
                    Ok(h) if h.dim >= g.dim => {
                        push(g.name.clone(), format!("boundary mentions `{name}` of dimension {}", h.dim));
                        bad = true;
                    }
                    Err(e) => {
                        push(g.name.clone(), e.to_string());
                        bad = true;
                    }
                    _ => {}
                }
            }
        }
        if bad {
            continue;
        }
        match (check_term(s, p), check_term(t, p)) {
            (Ok(ds), Ok(dt)) if ds + 1 == g.dim && dt + 1 == g.dim => {
                if let Err(m) = check_parallel(s, t, p) {
                    push(g.name.clone(), m);
                }
            }
            (Ok(ds), Ok(dt)) => push(
                g.name.clone(),
                format!("boundaries have dimensions {ds}/{dt}, expected {}", g.dim - 1),
            ),
            (Err(e), _) | (_, Err(e)) => push(g.name.clone(), e.to_string()),
        }
    }
    for (i, r) in p.relations().iter().enumerate() {
        let subject = format!("relation #{i}");
        match check_parallel(&r.lhs, &r.rhs, p) {
            Err(m) => push(subject, m),
            Ok(()) => {
                if p.dim(&r.lhs).ok() != Some(r.dim) {
                    push(subject, format!("declared dimension {} does not match its sides", r.dim));
                }
            }
        }
    }
    ValidationReport { entries }
}
