//! One function per subcommand. Each returns a report; loading and printing live in `run`.

use std::path::Path;

use linear_hopf::{
    antipode, antipode_from_integrals, check_bialgebra, check_convolution, convolution_inverse, evaluate,
    evaluate_image, integrals, inverse_from_antipode, is_cohopf, is_hopf, shear, write_matrix, Bialgebra, HopfError,
    Matrix, Which,
};
use polygraph_core::{validate_presentation, Presentation, Verdict};
use serde_json::{json, Value};
use tannaka::{coend_reconstruct, GeneratingFamily, Reconstruction, TannakaError};
use walking::skeleton::{skeleton, CellKind, ChainEntry};
use walking::PointedPresentation;

use crate::dot::to_dot;
use crate::error::{CliError, Result};
use crate::report::{Check, RunReport, Status};

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn validity(r: &mut RunReport, p: &Presentation) {
    let v = validate_presentation(p);
    let mut c = Check::new("presentation is valid", Status::of(v.is_valid()));
    if let Some(first) = v.entries.first() {
        c = c.detail(format!("{}: {}", first.subject, first.message)).witness(&v.entries);
    }
    r.check(c);
}

fn product_census(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn emit(p: &Presentation, name: &str, out: Option<&Path>, dot: Option<&Path>) -> Result<()> {
    if let Some(o) = out {
        write(o, &p.to_json())?;
    }
    if let Some(d) = dot {
        write(d, &to_dot(p, name))?;
    }
    Ok(())
}

pub fn gray(r: &mut RunReport, a: &Presentation, b: &Presentation, out: Option<&Path>, dot: Option<&Path>) -> Result<()> {
    let gp = walking::gray(a, b)?;
    let p = &gp.presentation;
    r.put("census", p.census());
    r.put("relations", p.relations().len());
    validity(r, p);
    let expected = product_census(&a.census(), &b.census());
    r.check(
        Check::new("census is the product of the factor censuses", Status::of(p.census() == expected))
            .detail(format!("{:?} from {:?} and {:?}", p.census(), a.census(), b.census())),
    );
    emit(p, "gray", out, dot)
}

pub fn smash(
    r: &mut RunReport,
    a: &PointedPresentation,
    b: &PointedPresentation,
    out: Option<&Path>,
    dot: Option<&Path>,
) -> Result<()> {
    let sm = walking::smash(a, b)?;
    let p = &sm.presentation;
    r.put("census", p.census());
    r.put("gray_census", sm.gray.presentation.census());
    r.put("basepoint", &sm.basepoint);
    r.put("survivors", sm.collapse.survivors().collect::<Vec<_>>());
    validity(r, p);
    emit(p, "smash", out, dot)
}

pub fn census(r: &mut RunReport, p: &Presentation) {
    r.put("census", p.census());
    validity(r, p);
}

/// Axiom checks; false when any fails.
fn axioms(r: &mut RunReport, b: &Bialgebra) -> Result<bool> {
    let rep = check_bialgebra(b)?;
    for a in &rep.axioms {
        let mut c = Check::new(format!("axiom {}", a.axiom), Status::of(a.pass));
        if let Some(d) = &a.detail {
            c = c.detail(d.clone());
        }
        if let Some(w) = &a.witness {
            c = c.witness(w);
        }
        r.check(c);
    }
    r.put("dim", b.n);
    Ok(rep.all_pass())
}

fn equal_check(name: &str, lhs: &Matrix, rhs: &Matrix) -> Result<Check> {
    Ok(match lhs.first_difference(rhs)? {
        None => Check::new(name, Status::Pass),
        Some(w) => Check::new(name, Status::Fail).witness(w),
    })
}

fn skipped(r: &mut RunReport, names: &[&str]) {
    for n in names {
        r.check(Check::new(*n, Status::Unknown).detail("skipped: the axioms fail"));
    }
}

pub fn shear_check(r: &mut RunReport, b: &Bialgebra) -> Result<()> {
    let ok = axioms(r, b)?;
    let mut inv = std::collections::BTreeMap::new();
    let mut shears = serde_json::Map::new();
    for w in Which::ALL {
        let s = shear(b, w)?;
        let rank = s.rank();
        inv.insert(w.to_string(), rank == s.rows);
        shears.insert(w.to_string(), json!({ "rank": rank, "invertible": rank == s.rows }));
    }
    r.put("shears", shears);
    r.put("hopf", inv["SE"]);
    r.put("cohopf", inv["NE"]);
    let names = ["NW and SE agree on invertibility", "NE and SW agree on invertibility", "universal shear evaluates to NE"];
    if !ok {
        skipped(r, &names);
        return Ok(());
    }
    r.check(Check::new(names[0], Status::of(inv["NW"] == inv["SE"])));
    r.check(Check::new(names[1], Status::of(inv["NE"] == inv["SW"])));
    let us = walking::universal_shear()?;
    let ne = shear(b, Which::NE)?;
    match evaluate(b, us.presentation(), &us.term) {
        Ok(e) => {
            r.check(equal_check(names[2], &e, &ne)?);
            match evaluate_image(b, &us.smash, &us.term, &us.image) {
                Ok(img) => r.check(equal_check("shear image in the smash square evaluates to NE", &img, &ne)?),
                Err(err) => r.check(Check::new("shear image in the smash square evaluates to NE", Status::Fail).detail(err.to_string())),
            }
        }
        Err(err) => r.check(Check::new(names[2], Status::Fail).detail(err.to_string())),
    }
    Ok(())
}

/// Smallest k ≤ limit with S^k = id.
fn order(s: &Matrix, limit: u32) -> Result<Option<u32>> {
    let id = Matrix::identity(s.rows);
    let mut p = s.clone();
    for k in 1..=limit {
        if p == id {
            return Ok(Some(k));
        }
        p = p.mul(s)?;
    }
    Ok(None)
}

pub fn antipode_cmd(r: &mut RunReport, b: &Bialgebra) -> Result<()> {
    let names = ["convolution axioms", "inverse from antipode inverts SE", "antipode from integrals", "independent convolution-inverse solve"];
    if !axioms(r, b)? {
        skipped(r, &names);
        return Ok(());
    }
    let h = match antipode(b) {
        Ok(h) => h,
        Err(HopfError::NoAntipode { kernel }) => {
            r.put("hopf", false);
            r.put("se_kernel_dim", kernel.len());
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    r.put("hopf", true);
    r.put("antipode", write_matrix(&h.s));
    r.put("antipode_invertible", h.s_inv.is_some());
    r.put("antipode_order", order(&h.s, 64)?);
    let conv = check_convolution(b, &h.s)?;
    let mut c = Check::new(names[0], Status::of(conv.holds()));
    if !conv.holds() {
        c = c.witness(&conv);
    }
    r.check(c);
    let inv = inverse_from_antipode(b, &h.s)?;
    let se = shear(b, Which::SE)?;
    let n2 = Matrix::identity(b.n * b.n);
    let both = inv.mul(&se)? == n2 && se.mul(&inv)? == n2;
    r.check(Check::new(names[1], Status::of(both)));
    match antipode_from_integrals(b) {
        Ok(s) => r.check(equal_check(names[2], &s, &h.s)?),
        Err(e) => r.check(Check::new(names[2], Status::Fail).detail(e.to_string())),
    }
    match convolution_inverse(b)? {
        Some(s) => r.check(equal_check(names[3], &s, &h.s)?),
        None => r.check(Check::new(names[3], Status::Fail).detail("no convolution inverse of the identity")),
    }
    Ok(())
}

pub fn integrals_cmd(r: &mut RunReport, b: &Bialgebra) -> Result<()> {
    let names = ["integral space is a line", "cointegral space is a line", "pairing is nonzero"];
    if !axioms(r, b)? {
        skipped(r, &names);
        return Ok(());
    }
    let data = integrals(b)?;
    let hopf = is_hopf(b)?;
    r.put("hopf", hopf);
    r.put("integrals", &data.integrals);
    r.put("cointegrals", &data.cointegrals);
    r.put("pairing", &data.pairing);
    // for non-Hopf inputs the dimensions are data only
    if hopf {
        r.check(Check::new(names[0], Status::of(data.integrals.len() == 1)).detail(format!("dimension {}", data.integrals.len())));
        r.check(Check::new(names[1], Status::of(data.cointegrals.len() == 1)).detail(format!("dimension {}", data.cointegrals.len())));
        r.check(Check::new(names[2], Status::of(data.is_unimodular_pair())));
    }
    Ok(())
}

fn reconstruction_checks(r: &mut RunReport, rec: &Reconstruction, reference: &Bialgebra) -> Result<()> {
    let v = rec.verdict.as_ref().expect("reference given");
    r.put("coend_dim", v.coend_dim);
    r.put("reference_dim", v.reference_dim);
    r.put("canonical_rank", v.canonical_rank);
    r.put("reconstruction", serde_json::from_str::<Value>(&rec.bialgebra.to_json()).expect("json"));
    r.check(Check::new("reconstruction satisfies the axioms", Status::of(v.axioms_hold)));
    r.check(Check::new("canonical map is a coalgebra map", Status::of(v.coalgebra_map)));
    r.check(Check::new("canonical map is an algebra map", Status::of(v.algebra_map)));
    let mut c = Check::new("canonical map is an isomorphism", Status::of(v.isomorphism));
    if let Some(f) = &v.failure {
        c = c.detail(f.clone());
    }
    r.check(c);
    if v.axioms_hold && check_bialgebra(reference)?.all_pass() {
        let b = &rec.bialgebra;
        let hopf = (is_hopf(reference)?, is_hopf(b)?);
        let cohopf = (is_cohopf(reference)?, is_cohopf(b)?);
        r.put("hopf", [hopf.0, hopf.1]);
        r.put("cohopf", [cohopf.0, cohopf.1]);
        r.check(Check::new("Hopf flags agree", Status::of(hopf.0 == hopf.1 && cohopf.0 == cohopf.1)));
    }
    Ok(())
}

fn closure_or(r: &mut RunReport, e: TannakaError) -> Result<()> {
    match e {
        TannakaError::Closure { .. } | TannakaError::NotComodule(_) => {
            r.check(Check::new("family is usable", Status::Fail).detail(e.to_string()));
            Ok(())
        }
        e => Err(e.into()),
    }
}

pub fn reconstruct_family(r: &mut RunReport, f: &GeneratingFamily) -> Result<()> {
    r.put("depth", f.depth);
    r.put("members", (0..f.members.len()).map(|i| json!({ "label": f.label(i), "dim": f.members[i].d })).collect::<Vec<_>>());
    match coend_reconstruct(f, Some(&f.bialgebra)) {
        Ok(rec) => reconstruction_checks(r, &rec, &f.bialgebra),
        Err(e) => closure_or(r, e),
    }
}

pub fn reconstruct_bialgebra(r: &mut RunReport, b: &Bialgebra, depth: usize) -> Result<()> {
    if !axioms(r, b)? {
        skipped(r, &["reconstruction"]);
        return Ok(());
    }
    match GeneratingFamily::new(b.clone(), vec![tannaka::regular_comodule(b)], depth) {
        Ok(f) => reconstruct_family(r, &f),
        Err(e) => closure_or(r, e),
    }
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::Equal => Status::Pass,
        Verdict::Unknown => Status::Unknown,
        _ => Status::Fail,
    }
}

pub fn proof_skeleton(r: &mut RunReport, chain: Option<Vec<ChainEntry>>, mutate: Option<usize>, budget: usize) -> Result<()> {
    let s = skeleton()?;
    let mut chain = chain.unwrap_or_else(|| s.chain.clone());
    if let Some(i) = mutate {
        let Some(c) = chain.get_mut(i) else {
            return Err(CliError::Usage(format!("--mutate {i}: the chain has {} steps", chain.len())));
        };
        c.inv = !c.inv;
    }
    let rep = s.check(&chain, budget)?;
    let mut c = Check::new("chain is composable", Status::of(rep.composable));
    if let Some(i) = rep.first_failure {
        c = c.detail(format!("step {i}: {}", rep.steps[i].message.clone().unwrap_or_default())).witness(i);
    }
    r.check(c);
    let b = match rep.boundary {
        Some([a, b]) => Check::new("2-boundary matches the shear image", verdict_status(a).max(verdict_status(b))),
        None => Check::new("2-boundary matches the shear image", Status::Unknown).detail("not reached"),
    };
    r.check(b);
    for f in &rep.four_cells {
        r.check(Check::new(format!("four-cell {} relates the traded cells", f.gen), Status::of(f.composable)));
    }
    let count = |k: CellKind| rep.counts.get(&k).copied().unwrap_or(0);
    let (l, rt, four, triv) = (count(CellKind::LType), count(CellKind::RType), count(CellKind::FourCell), count(CellKind::CollapseTrivial));
    r.check(
        Check::new("classification has L, R, four-cell and collapse-trivial entries", Status::of(l >= 2 && rt >= 2 && four >= 1 && triv >= 1))
            .detail(format!("L {l}, R {rt}, four-cell {four}, collapse-trivial {triv}")),
    );
    r.put("steps", &rep.steps);
    r.put("four_cells", &rep.four_cells);
    r.put("counts", &rep.counts);
    let mut table = String::from("  step  cell                 inv  kind              composable\n");
    for st in rep.steps.iter().chain(&rep.four_cells) {
        let kind = serde_json::to_value(st.kind).expect("kind").as_str().unwrap_or("").to_string();
        table.push_str(&format!("  {:<5} {:<20} {:<4} {:<17} {}\n", st.index, st.gen, if st.inv { "yes" } else { "" }, kind, st.composable));
    }
    r.text = Some(table);
    Ok(())
}
