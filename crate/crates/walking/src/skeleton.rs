//! The chain of 3-cells in the Gray square of the whiskered oriental that
//! factors the image of the universal shear, with a boundary check per step.

use std::collections::BTreeMap;

use polygraph_core::diagram::Diagram;
use polygraph_core::{eq, flatten3, Builder, CellTerm, Layer, Presentation, Side, Verdict, Word, DEFAULT_BUDGET};
use serde::{Deserialize, Serialize};

use crate::builtins::{adj, e_oriental2};
use crate::error::Result;
use crate::gray::{cross, gray, pair_name, GrayProduct};
use crate::smash::CollapseMap;

/// The functor from the whiskered oriental to the walking adjunction:
/// the long edge goes to an identity and the 2-cell to the counit.
pub fn e_oriental_to_adj() -> CollapseMap {
    let g = CellTerm::gen;
    let mut assignment = BTreeMap::new();
    for (k, v) in [("wR", "a"), ("vR", "b"), ("vB", "a"), ("vL", "b"), ("wL", "a")] {
        assignment.insert(k.to_string(), g(v));
    }
    for (k, v) in [("e5", "l"), ("x", "r"), ("y", "l"), ("e1", "r"), ("mu", "eps")] {
        assignment.insert(k.to_string(), g(v));
    }
    assignment.insert("z".into(), CellTerm::id(g("b")));
    CollapseMap { domain: e_oriental2(), codomain: adj().base, assignment }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellKind {
    /// a 2-cell pulled across a 1-cell of the second factor
    #[serde(rename = "L")]
    LType,
    /// a 1-cell of the first factor pulled across a 2-cell
    #[serde(rename = "R")]
    RType,
    #[serde(rename = "four-cell")]
    FourCell,
    /// a factor is sent to an identity in the walking adjunction
    #[serde(rename = "collapse-trivial")]
    CollapseTrivial,
    #[serde(rename = "other")]
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub gen: String,
    pub inv: bool,
}

impl ChainEntry {
    pub fn new(gen: &str, inv: bool) -> Self {
        ChainEntry { gen: gen.into(), inv }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepReport {
    pub index: usize,
    pub gen: String,
    pub inv: bool,
    pub kind: CellKind,
    pub composable: bool,
    pub message: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkeletonReport {
    pub steps: Vec<StepReport>,
    pub four_cells: Vec<StepReport>,
    pub composable: bool,
    /// both 2-boundaries of the chain against those of the shear image
    pub boundary: Option<[Verdict; 2]>,
    pub first_failure: Option<usize>,
    pub counts: BTreeMap<CellKind, usize>,
}

impl SkeletonReport {
    pub fn passed(&self) -> bool {
        self.composable && self.boundary.map_or(true, |b| b == [Verdict::Equal; 2]) && self.four_cells.iter().all(|f| f.composable)
    }
}

pub struct Skeleton {
    pub gray: GrayProduct,
    /// image of the shear's source 2-cell, precomposed with the crossing x⊗y'
    pub start: Diagram,
    /// image of the shear, whiskered the same way
    pub shear_image: CellTerm,
    pub chain: Vec<ChainEntry>,
    pub fillers: Vec<String>,
    map: CollapseMap,
}

fn w(obj: &str, letters: &[(&str, &str)]) -> Word {
    let names: Vec<String> = letters.iter().map(|(a, b)| pair_name(a, b)).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Word::of(obj, &refs)
}

fn shifted(layers: Vec<Layer>, by: usize) -> Vec<Layer> {
    polygraph_core::diagram::shift(&layers, by)
}

/// Image of the shear's source picture under the oriental's whiskering,
/// with the crossing x⊗y' in front.
fn start_diagram() -> Diagram {
    let o = |v: &str| Word::empty(v);
    let src = w(
        &pair_name("wR", "wR"),
        &[("wR", "e5"), ("wR", "x"), ("e5", "vB"), ("vR", "y"), ("x", "vL"), ("vB", "e1"), ("y", "wL"), ("e1", "wL")],
    );
    let ex = Word { letters: vec![polygraph_core::Letter::new("e5"), polygraph_core::Letter::new("x")], ..o("wR") };
    let ye = Word { letters: vec![polygraph_core::Letter::new("y"), polygraph_core::Letter::new("e1")], ..o("vB") };
    let ezx = Word { letters: vec![polygraph_core::Letter::new("e5"), polygraph_core::Letter::new("x")], ..o("wR") };
    let eze = Word {
        letters: ["e5", "z", "e1"].iter().map(|n| polygraph_core::Letter::new(*n)).collect(),
        ..o("wR")
    };
    let mut layers = vec![Layer::new(pair_name("x", "y"), 3)];
    layers.extend(cross(&ex, &ezx));
    layers.push(Layer::new(pair_name("vB", "mu"), 3));
    layers.extend(shifted(cross(&ye, &eze), 2));
    layers.push(Layer::new(pair_name("mu", "wR"), 1));
    Diagram { src, layers }
}

/// The factorization through the interchange 4-cell: the shear's middle pair
/// is traded for its conjugate by μ⊗μ', and the outer cells are moved to the ends.
pub fn skeleton_chain() -> Vec<ChainEntry> {
    vec![
        ChainEntry::new("mu*e5", false),
        ChainEntry::new("x*mu", true),
        ChainEntry::new("mu*z", false),
        ChainEntry::new("z*mu", false),
        ChainEntry::new("mu*y", true),
        ChainEntry::new("e1*mu", false),
    ]
}

pub fn skeleton() -> Result<Skeleton> {
    let e = e_oriental2();
    let gp = gray(&e, &e)?;
    let start = start_diagram();
    let mut img = Builder::new(&gp.presentation, start.clone());
    for g in ["y*mu", "e1*mu", "mu*e5", "mu*x"] {
        img.apply(g, false, None, 0)?;
    }
    let shear_image = img.finish()?;
    Ok(Skeleton {
        gray: gp,
        start,
        shear_image,
        chain: skeleton_chain(),
        fillers: vec![pair_name("mu", "mu")],
        map: e_oriental_to_adj(),
    })
}

impl Skeleton {
    pub fn presentation(&self) -> &Presentation {
        &self.gray.presentation
    }

    pub fn classify(&self, gen: &str) -> CellKind {
        let Some((a, b)) = self.gray.pairs.get(gen) else {
            return CellKind::Other;
        };
        let trivial = |n: &str| matches!(self.map.assignment.get(n), Some(CellTerm::Id(_)));
        if trivial(a) || trivial(b) {
            return CellKind::CollapseTrivial;
        }
        let dim = |n: &str| self.map.domain.generator(n).map(|g| g.dim).unwrap_or(0);
        match (dim(a), dim(b)) {
            (2, 1) => CellKind::LType,
            (1, 2) => CellKind::RType,
            (2, 2) => CellKind::FourCell,
            _ => CellKind::Other,
        }
    }

    /// Apply `chain` to the start diagram one cell at a time, checking that each
    /// cell's source occurs in the previous target and that consecutive whiskered
    /// cells agree on their shared 2-boundary.
    pub fn check(&self, chain: &[ChainEntry], budget: usize) -> Result<SkeletonReport> {
        let p = self.presentation();
        let mut b = Builder::new(p, self.start.clone());
        let mut steps = Vec::new();
        let mut first_failure = None;
        for (i, c) in chain.iter().enumerate() {
            let mut rep = StepReport {
                index: i,
                gen: c.gen.clone(),
                inv: c.inv,
                kind: self.classify(&c.gen),
                composable: true,
                message: None,
            };
            if first_failure.is_none() {
                match b.apply(&c.gen, c.inv, None, 0) {
                    Ok(_) => {
                        if i > 0 {
                            let parts = b.parts();
                            let prev = p.boundary(&parts[i - 1], Side::Target, 2)?;
                            let next = p.boundary(&parts[i], Side::Source, 2)?;
                            let v = eq(&prev, &next, p, budget)?;
                            if v != Verdict::Equal {
                                rep.composable = false;
                                rep.message = Some(format!("boundary comparison with step {} gave {v:?}", i - 1));
                            }
                        }
                    }
                    Err(err) => {
                        rep.composable = false;
                        rep.message = Some(format!("source does not occur in the previous target: {err}"));
                    }
                }
                if !rep.composable {
                    first_failure = Some(i);
                }
            } else {
                rep.composable = false;
                rep.message = Some("not reached".into());
            }
            steps.push(rep);
        }
        let composable = first_failure.is_none();
        let boundary = if composable && !chain.is_empty() {
            let total = b.finish()?;
            let mut vs = [Verdict::Unknown; 2];
            for (k, side) in [Side::Source, Side::Target].into_iter().enumerate() {
                let x = p.boundary(&total, side, 2)?;
                let y = p.boundary(&self.shear_image, side, 2)?;
                vs[k] = eq(&x, &y, p, budget)?;
            }
            Some(vs)
        } else {
            None
        };
        let mut four_cells = Vec::new();
        for f in &self.fillers {
            four_cells.push(self.check_filler(f, chain)?);
        }
        let mut counts = BTreeMap::new();
        for s in steps.iter().chain(&four_cells) {
            *counts.entry(s.kind).or_insert(0) += 1;
        }
        Ok(SkeletonReport { steps, four_cells, composable, boundary, first_failure, counts })
    }

    /// The filler must relate the cells the chain trades: its source runs through
    /// the inverted chain members, its target through the collapse-trivial ones.
    fn check_filler(&self, f: &str, chain: &[ChainEntry]) -> Result<StepReport> {
        let p = self.presentation();
        let g = p.generator(f)?;
        let names = |t: &CellTerm| -> Result<Vec<String>> {
            Ok(flatten3(t, p)?.steps.into_iter().map(|s| s.gen).collect())
        };
        let src = names(g.src.as_ref().expect("4-cell"))?;
        let tgt = names(g.tgt.as_ref().expect("4-cell"))?;
        let inverted: Vec<&String> = chain.iter().filter(|c| c.inv).map(|c| &c.gen).collect();
        let trivial: Vec<&String> =
            chain.iter().filter(|c| self.classify(&c.gen) == CellKind::CollapseTrivial).map(|c| &c.gen).collect();
        let ok = inverted.iter().all(|n| src.contains(n)) && trivial.iter().all(|n| tgt.contains(n));
        Ok(StepReport {
            index: chain.len(),
            gen: f.to_string(),
            inv: false,
            kind: self.classify(f),
            composable: ok,
            message: Some(format!("{} ⇛ {}", src.join(" ; "), tgt.join(" ; "))),
        })
    }
}

pub fn proof_skeleton_check() -> Result<SkeletonReport> {
    let s = skeleton()?;
    s.check(&s.chain, DEFAULT_BUDGET)
}
