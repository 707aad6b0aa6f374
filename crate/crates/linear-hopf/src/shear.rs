//! The four fusion (shear) maps `B ⊗ B → B ⊗ B`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bialgebra::Bialgebra;
use crate::error::{HopfError, Result};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Which {
    NW,
    NE,
    SW,
    SE,
}

impl Which {
    pub const ALL: [Which; 4] = [Which::NW, Which::NE, Which::SW, Which::SE];
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Which {
    type Err = HopfError;
    fn from_str(s: &str) -> Result<Which> {
        match s.to_ascii_uppercase().as_str() {
            "NW" => Ok(Which::NW),
            "NE" => Ok(Which::NE),
            "SW" => Ok(Which::SW),
            "SE" => Ok(Which::SE),
            _ => Err(HopfError::Parse(format!("unknown shear `{s}`"))),
        }
    }
}

/// * SE = (id⊗m)(Δ⊗id)
/// * NW = (m⊗id)(id⊗Δ)
/// * NE = (m⊗id)(id⊗br)(Δ⊗id)
/// * SW = (id⊗m)(br⊗id)(id⊗Δ)
pub fn shear(b: &Bialgebra, which: Which) -> Result<Matrix> {
    let id = b.id();
    match which {
        Which::SE => id.kron(&b.m).mul(&b.delta.kron(&id)),
        Which::NW => b.m.kron(&id).mul(&id.kron(&b.delta)),
        Which::NE => b.m.kron(&id).mul(&id.kron(&b.br()))?.mul(&b.delta.kron(&id)),
        Which::SW => id.kron(&b.m).mul(&b.br().kron(&id))?.mul(&id.kron(&b.delta)),
    }
}

pub fn is_hopf(b: &Bialgebra) -> Result<bool> {
    Ok(shear(b, Which::SE)?.is_invertible())
}

pub fn is_cohopf(b: &Bialgebra) -> Result<bool> {
    Ok(shear(b, Which::NE)?.is_invertible())
}
