use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::sexpr;
use crate::term::CellTerm;
use crate::word::{flatten1, Word};

pub const MAX_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub dim: usize,
    pub src: Option<CellTerm>,
    pub tgt: Option<CellTerm>,
    pub invertible: bool,
}

impl Generator {
    pub fn object(name: impl Into<String>) -> Self {
        Generator { name: name.into(), dim: 0, src: None, tgt: None, invertible: false }
    }

    pub fn cell(name: impl Into<String>, dim: usize, src: CellTerm, tgt: CellTerm) -> Self {
        Generator { name: name.into(), dim, src: Some(src), tgt: Some(tgt), invertible: false }
    }

    pub fn invertible(mut self) -> Self {
        self.invertible = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub dim: usize,
    pub lhs: CellTerm,
    pub rhs: CellTerm,
    pub oriented: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Source,
    Target,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Source => Side::Target,
            Side::Target => Side::Source,
        }
    }
}

/// Stratified generators plus relations. Lookup tables are rebuilt on insertion.
#[derive(Clone, Debug, Default)]
pub struct Presentation {
    gens: Vec<Generator>,
    rels: Vec<Relation>,
    index: HashMap<String, usize>,
    ends: HashMap<String, (String, String)>,
    shapes: HashMap<String, (Word, Word)>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.rels == other.rels
    }
}

impl Presentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rels
    }

    pub fn oriented_rules(&self) -> impl Iterator<Item = &Relation> {
        self.rels.iter().filter(|r| r.oriented)
    }

    pub fn max_dim(&self) -> usize {
        self.gens.iter().map(|g| g.dim).max().unwrap_or(0)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn generator(&self, name: &str) -> Result<&Generator> {
        self.index
            .get(name)
            .map(|&i| &self.gens[i])
            .ok_or_else(|| CoreError::UnknownGenerator(name.to_string()))
    }

    pub fn gens_of_dim(&self, d: usize) -> impl Iterator<Item = &Generator> {
        self.gens.iter().filter(move |g| g.dim == d)
    }

    /// Per-dimension generator counts, indexed 0..=max_dim.
    pub fn census(&self) -> Vec<usize> {
        if self.gens.is_empty() {
            return Vec::new();
        }
        let mut c = vec![0; self.max_dim() + 1];
        for g in &self.gens {
            c[g.dim] += 1;
        }
        c
    }

    /// Endpoint objects of a 1-generator.
    pub fn ends1(&self, name: &str) -> Result<(String, String)> {
        self.ends
            .get(name)
            .cloned()
            .ok_or_else(|| CoreError::Dimension(format!("`{name}` is not a well-formed 1-generator")))
    }

    /// Source and target words of a 2-generator.
    pub fn shape2(&self, name: &str) -> Result<&(Word, Word)> {
        self.shapes
            .get(name)
            .ok_or_else(|| CoreError::Dimension(format!("`{name}` is not a well-formed 2-generator")))
    }

    /// Insert a generator, checking only name uniqueness and basic dimensions.
    pub fn add_generator(&mut self, g: Generator) -> Result<()> {
        if g.dim > MAX_DIM {
            return Err(CoreError::Dimension(format!("`{}` has dimension {} > {MAX_DIM}", g.name, g.dim)));
        }
        if g.dim > 0 {
            for t in [&g.src, &g.tgt] {
                let t = t.as_ref().ok_or_else(|| CoreError::Invalid(format!("`{}` lacks a boundary", g.name)))?;
                let d = self.dim(t)?;
                if d + 1 != g.dim {
                    return Err(CoreError::Dimension(format!(
                        "boundary of `{}` has dimension {d}, expected {}",
                        g.name,
                        g.dim - 1
                    )));
                }
            }
        }
        self.push_generator_unchecked(g)
    }

    /// Insert without boundary checks; used to build deliberately broken inputs.
    pub fn push_generator_unchecked(&mut self, g: Generator) -> Result<()> {
        if self.index.contains_key(&g.name) {
            return Err(CoreError::DuplicateGenerator(g.name));
        }
        self.index.insert(g.name.clone(), self.gens.len());
        self.gens.push(g.clone());
        self.cache_shape(&g);
        Ok(())
    }

    fn cache_shape(&mut self, g: &Generator) {
        match g.dim {
            1 => {
                if let (Some(CellTerm::Gen(s)), Some(CellTerm::Gen(t))) = (&g.src, &g.tgt) {
                    self.ends.insert(g.name.clone(), (s.clone(), t.clone()));
                }
            }
            2 => {
                if let (Some(s), Some(t)) = (&g.src, &g.tgt) {
                    if let (Ok(ws), Ok(wt)) = (flatten1(s, self), flatten1(t, self)) {
                        self.shapes.insert(g.name.clone(), (ws, wt));
                    }
                }
            }
            _ => {}
        }
    }

    pub fn add_relation(&mut self, lhs: CellTerm, rhs: CellTerm, oriented: bool) -> Result<()> {
        let d = self.dim(&lhs)?;
        let e = self.dim(&rhs)?;
        if d != e {
            return Err(CoreError::Dimension(format!("relation sides have dimensions {d} and {e}")));
        }
        self.rels.push(Relation { dim: d, lhs, rhs, oriented });
        Ok(())
    }

    pub fn push_relation_unchecked(&mut self, r: Relation) {
        self.rels.push(r);
    }

    pub fn remove_relations(&mut self) {
        self.rels.clear();
    }

    pub fn dim(&self, t: &CellTerm) -> Result<usize> {
        match t {
            CellTerm::Gen(g) => Ok(self.generator(g)?.dim),
            CellTerm::Id(x) => Ok(self.dim(x)? + 1),
            CellTerm::Comp(k, a, b) => {
                let da = self.dim(a)?;
                let db = self.dim(b)?;
                if da != db {
                    return Err(CoreError::Dimension(format!("comp{k} of cells of dimensions {da} and {db}")));
                }
                if *k >= da {
                    return Err(CoreError::Dimension(format!("comp{k} of {da}-cells")));
                }
                Ok(da)
            }
            CellTerm::Inv(x) => {
                let d = self.dim(x)?;
                if d == 0 {
                    return Err(CoreError::Dimension("inverse of a 0-cell".into()));
                }
                Ok(d)
            }
        }
    }

    /// Immediate (dim-1) source or target, without simplification.
    pub fn face(&self, t: &CellTerm, side: Side) -> Result<CellTerm> {
        match t {
            CellTerm::Gen(g) => {
                let gen = self.generator(g)?;
                let b = match side {
                    Side::Source => &gen.src,
                    Side::Target => &gen.tgt,
                };
                b.clone().ok_or_else(|| CoreError::Dimension(format!("0-cell `{g}` has no boundary")))
            }
            CellTerm::Id(x) => Ok((**x).clone()),
            CellTerm::Comp(k, a, b) => {
                let n = self.dim(a)?;
                if *k + 1 == n {
                    match side {
                        Side::Source => self.face(a, side),
                        Side::Target => self.face(b, side),
                    }
                } else {
                    Ok(CellTerm::comp(*k, self.face(a, side)?, self.face(b, side)?))
                }
            }
            CellTerm::Inv(x) => self.face(x, side.flip()),
        }
    }

    /// The k-dimensional source or target of `t`, with identities collapsed.
    pub fn boundary(&self, t: &CellTerm, side: Side, k: usize) -> Result<CellTerm> {
        let n = self.dim(t)?;
        if k >= n {
            return Err(CoreError::Dimension(format!("boundary {k} of a {n}-cell")));
        }
        let mut r = t.clone();
        for _ in k..n {
            r = self.face(&r, side)?;
        }
        self.simplify(&r)
    }

    /// Collapse identity units and push formal inverses down to generators.
    pub fn simplify(&self, t: &CellTerm) -> Result<CellTerm> {
        let t = self.push_inv(t)?;
        self.collapse_ids(&t)
    }

    fn collapse_ids(&self, t: &CellTerm) -> Result<CellTerm> {
        match t {
            CellTerm::Gen(_) => Ok(t.clone()),
            CellTerm::Id(x) => Ok(CellTerm::id(self.collapse_ids(x)?)),
            CellTerm::Inv(x) => Ok(CellTerm::inv(self.collapse_ids(x)?)),
            CellTerm::Comp(k, a, b) => {
                let n = self.dim(a)?;
                let a = self.collapse_ids(a)?;
                let b = self.collapse_ids(b)?;
                // an identity on a cell of dimension ≤ k is a unit for comp_k
                let unit = |t: &CellTerm| n - id_depth(t) <= *k;
                match (&a, &b) {
                    _ if unit(&a) => Ok(b),
                    _ if unit(&b) => Ok(a),
                    (CellTerm::Id(x), CellTerm::Id(y)) => {
                        self.collapse_ids(&CellTerm::id(CellTerm::comp(*k, (**x).clone(), (**y).clone())))
                    }
                    _ => Ok(CellTerm::comp(*k, a, b)),
                }
            }
        }
    }

    /// Push `Inv` to generators; errors on non-invertible generators.
    pub fn push_inv(&self, t: &CellTerm) -> Result<CellTerm> {
        match t {
            CellTerm::Gen(_) => Ok(t.clone()),
            CellTerm::Id(x) => Ok(CellTerm::id(self.push_inv(x)?)),
            CellTerm::Comp(k, a, b) => Ok(CellTerm::comp(*k, self.push_inv(a)?, self.push_inv(b)?)),
            CellTerm::Inv(x) => self.invert(x),
        }
    }

    fn invert(&self, t: &CellTerm) -> Result<CellTerm> {
        match t {
            CellTerm::Gen(g) => {
                if self.generator(g)?.invertible {
                    Ok(CellTerm::inv(t.clone()))
                } else {
                    Err(CoreError::NotInvertible(g.clone()))
                }
            }
            CellTerm::Id(_) => self.push_inv(t),
            CellTerm::Inv(x) => self.push_inv(x),
            CellTerm::Comp(k, a, b) => {
                let n = self.dim(a)?;
                if *k + 1 == n {
                    Ok(CellTerm::comp(*k, self.invert(b)?, self.invert(a)?))
                } else {
                    Ok(CellTerm::comp(*k, self.invert(a)?, self.invert(b)?))
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationFile::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Presentation> {
        let f: PresentationFile = serde_json::from_str(s).map_err(|e| CoreError::Parse(e.to_string()))?;
        f.into_presentation()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PresentationFile {
    #[serde(rename = "maxDim")]
    pub max_dim: usize,
    pub generators: Vec<GeneratorFile>,
    #[serde(default)]
    pub relations: Vec<RelationFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GeneratorFile {
    pub name: String,
    pub dim: usize,
    pub src: Option<String>,
    pub tgt: Option<String>,
    #[serde(default)]
    pub invertible: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RelationFile {
    pub dim: usize,
    pub lhs: String,
    pub rhs: String,
    #[serde(default)]
    pub oriented: bool,
}

impl From<&Presentation> for PresentationFile {
    fn from(p: &Presentation) -> Self {
        PresentationFile {
            max_dim: p.max_dim(),
            generators: p
                .gens
                .iter()
                .map(|g| GeneratorFile {
                    name: g.name.clone(),
                    dim: g.dim,
                    src: g.src.as_ref().map(sexpr::print),
                    tgt: g.tgt.as_ref().map(sexpr::print),
                    invertible: g.invertible,
                })
                .collect(),
            relations: p
                .rels
                .iter()
                .map(|r| RelationFile {
                    dim: r.dim,
                    lhs: sexpr::print(&r.lhs),
                    rhs: sexpr::print(&r.rhs),
                    oriented: r.oriented,
                })
                .collect(),
        }
    }
}

impl PresentationFile {
    /// Loads without semantic checks; run `validate_presentation` afterwards.
    pub fn into_presentation(self) -> Result<Presentation> {
        let mut p = Presentation::new();
        let mut gens = self.generators;
        gens.sort_by_key(|g| g.dim);
        for g in gens {
            let src = g.src.as_deref().map(sexpr::parse).transpose()?;
            let tgt = g.tgt.as_deref().map(sexpr::parse).transpose()?;
            p.push_generator_unchecked(Generator { name: g.name, dim: g.dim, src, tgt, invertible: g.invertible })?;
        }
        for r in self.relations {
            p.push_relation_unchecked(Relation {
                dim: r.dim,
                lhs: sexpr::parse(&r.lhs)?,
                rhs: sexpr::parse(&r.rhs)?,
                oriented: r.oriented,
            });
        }
        if p.max_dim() > self.max_dim && !p.gens.is_empty() {
            return Err(CoreError::Dimension(format!(
                "maxDim {} below generator dimension {}",
                self.max_dim,
                p.max_dim()
            )));
        }
        Ok(p)
    }
}

fn id_depth(t: &CellTerm) -> usize {
    match t {
        CellTerm::Id(x) => 1 + id_depth(x),
        _ => 0,
    }
}
