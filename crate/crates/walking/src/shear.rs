//! The universal shear 3-cell of the Gray square of the walking monad, and
//! the named structure cells of the smash square.

use polygraph_core::diagram::Diagram;
use polygraph_core::{Builder, CellTerm, Layer, Presentation, Side, Word};

use crate::builtins::{mnd, MND_OBJECT};
use crate::error::Result;
use crate::gray::{gray, pair_name, GrayProduct};
use crate::smash::{smash, Smash};

pub struct ShearNames {
    pub a1: String,
    pub b1: String,
    pub cross: String,
    pub m_left: String,
    pub m_right: String,
}

/// `a1 = A*•`, `b1 = •*A`, `cross = A*A`, `m_left = m*•`, `m_right = •*m`.
pub fn shear_names() -> ShearNames {
    let o = MND_OBJECT;
    ShearNames {
        a1: pair_name("A", o),
        b1: pair_name(o, "A"),
        cross: pair_name("A", "A"),
        m_left: pair_name("m", o),
        m_right: pair_name(o, "m"),
    }
}

/// Source 2-cell of the shear as a layered diagram on b1·a1·b1·a1.
pub fn shear_source_diagram() -> Diagram {
    let n = shear_names();
    let o = pair_name(MND_OBJECT, MND_OBJECT);
    Diagram {
        src: Word::of(o, &[&n.b1, &n.a1, &n.b1, &n.a1]),
        layers: vec![
            Layer::new(&n.cross, 0),
            Layer::new(&n.m_right, 1),
            Layer::new(&n.cross, 1),
            Layer::new(&n.m_left, 0),
        ],
    }
}

pub struct UniversalShear {
    pub gray: GrayProduct,
    pub term: CellTerm,
    pub smash: Smash,
    /// image of `term` in the smash square
    pub image: CellTerm,
}

impl UniversalShear {
    pub fn presentation(&self) -> &Presentation {
        &self.gray.presentation
    }

    pub fn source(&self) -> Result<CellTerm> {
        Ok(self.presentation().boundary(&self.term, Side::Source, 2)?)
    }

    pub fn target(&self) -> Result<CellTerm> {
        Ok(self.presentation().boundary(&self.term, Side::Target, 2)?)
    }
}

/// Pull the comultiplication strand through, then the multiplication strand.
pub fn universal_shear() -> Result<UniversalShear> {
    let m = mnd();
    let gp = gray(&m.base, &m.base)?;
    let p = &gp.presentation;
    let mut b = Builder::new(p, shear_source_diagram());
    b.apply(&pair_name("A", "m"), false, Some(1), 0)?;
    b.apply(&pair_name("m", "A"), false, Some(0), 0)?;
    let term = b.finish()?;
    let sm = smash(&m, &m)?;
    let image = sm.collapse.apply(&term)?;
    Ok(UniversalShear { gray: gp, term, smash: sm, image })
}

/// The named cells of the smash square of the walking monad.
#[derive(Clone, Debug)]
pub struct BimonadCells {
    pub underlying: CellTerm,
    pub mult: CellTerm,
    pub unit: CellTerm,
    pub comult: CellTerm,
    pub counit: CellTerm,
}

pub fn bimnd_cells() -> BimonadCells {
    BimonadCells {
        underlying: CellTerm::gen(pair_name("A", "A")),
        mult: CellTerm::gen(pair_name("m", "A")),
        unit: CellTerm::gen(pair_name("u", "A")),
        comult: CellTerm::gen(pair_name("A", "m")),
        counit: CellTerm::gen(pair_name("A", "u")),
    }
}
