use std::fmt;

/// A formal pasting expression. `Comp(k, a, b)` is diagrammatic: `a` first,
/// glued to `b` along the k-dimensional boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellTerm {
    Id(Box<CellTerm>),
    Gen(String),
    Comp(usize, Box<CellTerm>, Box<CellTerm>),
    Inv(Box<CellTerm>),
}

impl CellTerm {
    pub fn gen(name: impl Into<String>) -> Self {
        CellTerm::Gen(name.into())
    }

    pub fn id(t: CellTerm) -> Self {
        CellTerm::Id(Box::new(t))
    }

    /// `n`-fold identity.
    pub fn ids(mut t: CellTerm, n: usize) -> Self {
        for _ in 0..n {
            t = CellTerm::id(t);
        }
        t
    }

    pub fn comp(k: usize, a: CellTerm, b: CellTerm) -> Self {
        CellTerm::Comp(k, Box::new(a), Box::new(b))
    }

    pub fn inv(t: CellTerm) -> Self {
        CellTerm::Inv(Box::new(t))
    }

    /// Left fold of `comp(k, ..)` over a nonempty list.
    pub fn comp_all(k: usize, parts: Vec<CellTerm>) -> Option<Self> {
        let mut it = parts.into_iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, t| CellTerm::comp(k, acc, t)))
    }

    /// Generator occurrences, left to right, with multiplicity.
    pub fn generators(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_gens(&mut out);
        out
    }

    fn collect_gens(&self, out: &mut Vec<String>) {
        match self {
            CellTerm::Gen(g) => out.push(g.clone()),
            CellTerm::Id(t) | CellTerm::Inv(t) => t.collect_gens(out),
            CellTerm::Comp(_, a, b) => {
                a.collect_gens(out);
                b.collect_gens(out);
            }
        }
    }

    /// Rename every generator through `f`.
    pub fn rename(&self, f: &dyn Fn(&str) -> String) -> CellTerm {
        match self {
            CellTerm::Gen(g) => CellTerm::Gen(f(g)),
            CellTerm::Id(t) => CellTerm::id(t.rename(f)),
            CellTerm::Inv(t) => CellTerm::inv(t.rename(f)),
            CellTerm::Comp(k, a, b) => CellTerm::comp(*k, a.rename(f), b.rename(f)),
        }
    }

    /// Substitute generators by terms; `f` returns `None` to keep a generator.
    pub fn substitute(&self, f: &dyn Fn(&str) -> Option<CellTerm>) -> CellTerm {
        match self {
            CellTerm::Gen(g) => f(g).unwrap_or_else(|| self.clone()),
            CellTerm::Id(t) => CellTerm::id(t.substitute(f)),
            CellTerm::Inv(t) => CellTerm::inv(t.substitute(f)),
            CellTerm::Comp(k, a, b) => CellTerm::comp(*k, a.substitute(f), b.substitute(f)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            CellTerm::Gen(_) => 1,
            CellTerm::Id(t) | CellTerm::Inv(t) => 1 + t.size(),
            CellTerm::Comp(_, a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl fmt::Display for CellTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellTerm::Gen(g) => write!(f, "(gen {g})"),
            CellTerm::Id(t) => write!(f, "(id {t})"),
            CellTerm::Inv(t) => write!(f, "(inv {t})"),
            CellTerm::Comp(k, a, b) => write!(f, "(comp{k} {a} {b})"),
        }
    }
}

impl serde::Serialize for CellTerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::sexpr::print(self))
    }
}

impl<'de> serde::Deserialize<'de> for CellTerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::sexpr::parse(&s).map_err(serde::de::Error::custom)
    }
}
