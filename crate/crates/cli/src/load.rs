//! Inputs by built-in name or by file path.

use std::path::Path;

use linear_hopf::Bialgebra;
use polygraph_core::Presentation;
use serde_json::Value;
use walking::PointedPresentation;

use crate::error::{CliError, Result};

pub const PRESENTATIONS: [&str; 8] = ["mnd", "adj", "point", "globe1", "globe2", "o2", "eo2", "globe<N>"];

pub fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn builtin(name: &str) -> Result<Option<(Presentation, Option<String>)>> {
    let pointed = |p: PointedPresentation| Some((p.base, Some(p.basepoint)));
    Ok(match name {
        "mnd" => pointed(walking::mnd()),
        "adj" => pointed(walking::adj()),
        "point" => Some((walking::point(), None)),
        "o2" => Some((walking::oriental2(), None)),
        "eo2" => Some((walking::e_oriental2(), None)),
        _ => match name.strip_prefix("globe").map(str::parse::<usize>) {
            Some(Ok(n)) => Some((walking::globe(n)?, None)),
            _ => None,
        },
    })
}

/// A presentation and the basepoint its file or built-in names, if any.
pub fn presentation(input: &str) -> Result<(Presentation, Option<String>)> {
    if let Some(b) = builtin(input)? {
        return Ok(b);
    }
    if !Path::new(input).exists() {
        return Err(CliError::Usage(format!(
            "`{input}` is neither a file nor a built-in presentation ({})",
            PRESENTATIONS.join(", ")
        )));
    }
    let text = read(input)?;
    let p = Presentation::from_json(&text)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(e.to_string()))?;
    let bp = v.get("basepoint").and_then(Value::as_str).map(String::from);
    Ok((p, bp))
}

/// Basepoint from the flag, then the input, then the only object.
pub fn pointed(input: &str, flag: Option<&str>) -> Result<PointedPresentation> {
    let (p, bp) = presentation(input)?;
    let bp = match flag.map(String::from).or(bp) {
        Some(b) => b,
        None => {
            let objs: Vec<&str> = p.generators().iter().filter(|g| g.dim == 0).map(|g| g.name.as_str()).collect();
            match objs.as_slice() {
                [one] => one.to_string(),
                _ => return Err(CliError::Usage(format!("`{input}` needs a basepoint; objects are {}", objs.join(", ")))),
            }
        }
    };
    Ok(PointedPresentation::new(p, bp)?)
}

pub fn bialgebra(input: &str) -> Result<Bialgebra> {
    if let Some(b) = linear_hopf::fixtures::by_name(input) {
        return Ok(b);
    }
    if !Path::new(input).exists() {
        return Err(CliError::Usage(format!(
            "`{input}` is neither a file nor a fixture ({})",
            linear_hopf::fixtures::NAMES.join(", ")
        )));
    }
    Ok(Bialgebra::from_json(&read(input)?)?)
}

pub enum ReconstructInput {
    Bialgebra(Bialgebra),
    Family(tannaka::FamilyFile),
}

/// A family file has a `comodules` key; anything else is a bialgebra reconstructed from its regular comodule.
pub fn reconstruct_input(input: &str) -> Result<ReconstructInput> {
    if linear_hopf::fixtures::by_name(input).is_some() || !Path::new(input).exists() {
        return bialgebra(input).map(ReconstructInput::Bialgebra);
    }
    let text = read(input)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{input}: {e}")))?;
    if v.get("comodules").is_some() {
        Ok(ReconstructInput::Family(tannaka::FamilyFile::parse(&text)?))
    } else {
        Ok(ReconstructInput::Bialgebra(Bialgebra::from_json(&text)?))
    }
}

pub fn resolve_bialgebra(s: &str) -> tannaka::Result<Bialgebra> {
    if let Some(b) = linear_hopf::fixtures::by_name(s) {
        return Ok(b);
    }
    let text = std::fs::read_to_string(s).map_err(|e| tannaka::TannakaError::Parse(format!("{s}: {e}")))?;
    Ok(Bialgebra::from_json(&text)?)
}
