//! S-expression syntax for terms: `(gen NAME)`, `(id E)`, `(compK L R)`, `(inv E)`.

use crate::error::{CoreError, Result};
use crate::term::CellTerm;

pub fn print(t: &CellTerm) -> String {
    t.to_string()
}

pub fn parse(s: &str) -> Result<CellTerm> {
    let toks = tokenize(s)?;
    let mut pos = 0;
    let t = parse_expr(&toks, &mut pos)?;
    if pos != toks.len() {
        return Err(CoreError::Parse(format!("trailing input after term in `{s}`")));
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(Tok::Atom(std::mem::take(&mut cur)));
                }
                out.push(if c == '(' { Tok::Open } else { Tok::Close });
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(Tok::Atom(std::mem::take(&mut cur)));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(Tok::Atom(cur));
    }
    Ok(out)
}

fn parse_expr(toks: &[Tok], pos: &mut usize) -> Result<CellTerm> {
    expect(toks, pos, Tok::Open)?;
    let head = match toks.get(*pos) {
        Some(Tok::Atom(a)) => a.clone(),
        other => return Err(CoreError::Parse(format!("expected head symbol, found {other:?}"))),
    };
    *pos += 1;
    let t = match head.as_str() {
        "gen" => match toks.get(*pos) {
            Some(Tok::Atom(a)) => {
                *pos += 1;
                CellTerm::Gen(a.clone())
            }
            other => return Err(CoreError::Parse(format!("expected generator name, found {other:?}"))),
        },
        "id" => CellTerm::id(parse_expr(toks, pos)?),
        "inv" => CellTerm::inv(parse_expr(toks, pos)?),
        h if h.starts_with("comp") => {
            let k: usize = h[4..]
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad composition head `{h}`")))?;
            if k > 3 {
                return Err(CoreError::Parse(format!("composition index {k} out of range")));
            }
            let a = parse_expr(toks, pos)?;
            let b = parse_expr(toks, pos)?;
            CellTerm::comp(k, a, b)
        }
        h => return Err(CoreError::Parse(format!("unknown head `{h}`"))),
    };
    expect(toks, pos, Tok::Close)?;
    Ok(t)
}

fn expect(toks: &[Tok], pos: &mut usize, want: Tok) -> Result<()> {
    match toks.get(*pos) {
        Some(t) if *t == want => {
            *pos += 1;
            Ok(())
        }
        other => Err(CoreError::Parse(format!("expected {want:?}, found {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_nested() {
        let s = "(comp1 (comp0 (id (gen A)) (gen m)) (inv (gen m)))";
        let t = parse(s).unwrap();
        assert_eq!(print(&t), s);
        assert_eq!(parse(&print(&t)).unwrap(), t);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("(gen)").is_err());
        assert!(parse("(comp9 (gen a) (gen b))").is_err());
        assert!(parse("(gen a) x").is_err());
    }
}
