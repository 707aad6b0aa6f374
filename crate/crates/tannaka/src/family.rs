//! The comodule-family file: a bialgebra (inline or by reference), comodules and a depth.

use linear_hopf::{read_matrix, write_matrix, Bialgebra, BialgebraFile};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::comodule::{dual_comodule, regular_comodule, trivial_comodule, Comodule, ComoduleSpec};
use crate::error::{Result, TannakaError};
use crate::reconstruct::GeneratingFamily;

fn two() -> usize {
    2
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FamilyFile {
    /// an inline bialgebra object, or a string resolved by the caller
    pub bialgebra: Value,
    pub comodules: Vec<ComoduleSpec>,
    #[serde(default = "two")]
    pub depth: usize,
}

impl FamilyFile {
    pub fn parse(s: &str) -> Result<FamilyFile> {
        serde_json::from_str(s).map_err(|e| TannakaError::Parse(e.to_string()))
    }

    pub fn bialgebra(&self, resolve: impl Fn(&str) -> Result<Bialgebra>) -> Result<Bialgebra> {
        match &self.bialgebra {
            Value::String(s) => resolve(s),
            v => {
                let f: BialgebraFile = serde_json::from_value(v.clone()).map_err(|e| TannakaError::Parse(e.to_string()))?;
                Ok(f.into_bialgebra()?)
            }
        }
    }

    pub fn into_family(self, resolve: impl Fn(&str) -> Result<Bialgebra>) -> Result<GeneratingFamily> {
        let h = self.bialgebra(resolve)?;
        let mut out = Vec::new();
        for c in &self.comodules {
            out.push(match c {
                ComoduleSpec::Named(s) => match s.as_str() {
                    "regular" => regular_comodule(&h),
                    "trivial" => trivial_comodule(&h),
                    "dual-regular" => dual_comodule(&h, &regular_comodule(&h))?,
                    _ => return Err(TannakaError::Parse(format!("unknown comodule `{s}`"))),
                },
                ComoduleSpec::Explicit { dim, rho } => {
                    Comodule::new(*dim, read_matrix(rho, h.n * dim, *dim, h.field.as_ref(), "rho")?)
                }
            });
        }
        GeneratingFamily::new(h, out, self.depth)
    }

    pub fn from_parts(h: &Bialgebra, comodules: &[Comodule], depth: usize) -> FamilyFile {
        FamilyFile {
            bialgebra: serde_json::to_value(BialgebraFile::from(h)).expect("serializable"),
            comodules: comodules.iter().map(|c| ComoduleSpec::Explicit { dim: c.d, rho: write_matrix(&c.rho) }).collect(),
            depth,
        }
    }
}
