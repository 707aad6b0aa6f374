//! One line per acceptance criterion, each against its time limit.

use std::time::{Duration, Instant};

use linear_hopf::fixtures::{corrupted_z2, idempotent, s3, super_line, sweedler, z2, z3_functions};
use linear_hopf::*;
use mates::fixtures::{composite_square, generic_square};
use mates::AdjunctionRecord;
use polygraph_core::{eq, CellTerm, Presentation, Side, Verdict};
use walking::skeleton::{skeleton, CellKind, ChainEntry};
use walking::{globe, gray, mnd, smash, universal_shear};

type Outcome = std::result::Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn fixtures() -> Vec<(&'static str, Bialgebra)> {
    vec![
        ("Q[Z/2]", z2()),
        ("Q[S3]", s3()),
        ("Q^Z3", z3_functions()),
        ("Q[M]", idempotent()),
        ("sweedler", sweedler()),
        ("Q[θ]/(θ²)", super_line()),
    ]
}

fn hopf_fixtures() -> Vec<(&'static str, Bialgebra)> {
    fixtures().into_iter().filter(|(_, b)| is_hopf(b).unwrap()).collect()
}

fn c1_censuses() -> Outcome {
    let g1 = globe(1).map_err(|e| e.to_string())?;
    let a = gray(&g1, &g1).map_err(|e| e.to_string())?.presentation.census();
    ensure(a == [4, 4, 1], || format!("gray(G1,G1) = {a:?}"))?;
    let m = mnd();
    let b = gray(&m.base, &m.base).map_err(|e| e.to_string())?.presentation.census();
    ensure(b == [1, 2, 5, 4, 4], || format!("gray(Mnd,Mnd) = {b:?}"))?;
    let c = smash(&m, &m).map_err(|e| e.to_string())?.presentation.census();
    ensure(c == [1, 0, 1, 4, 4], || format!("smash(Mnd,Mnd) = {c:?}"))
}

fn g(n: &str) -> CellTerm {
    CellTerm::gen(n)
}
fn c(k: usize, a: CellTerm, b: CellTerm) -> CellTerm {
    CellTerm::comp(k, a, b)
}
fn id(t: CellTerm) -> CellTerm {
    CellTerm::id(t)
}

/// The shear picture, read off by hand: crossing, multiplication on the right strand, crossing, multiplication on the left.
fn left_picture() -> CellTerm {
    let (a1, b1, x) = (g("A*•"), g("•*A"), g("A*A"));
    let l1 = c(0, x.clone(), id(c(0, b1.clone(), a1.clone())));
    let l2 = c(0, id(a1.clone()), c(0, g("•*m"), id(a1.clone())));
    let l3 = c(0, id(a1.clone()), x);
    let l4 = c(0, g("m*•"), id(b1));
    c(1, c(1, c(1, l1, l2), l3), l4)
}

fn right_picture() -> CellTerm {
    let (a1, b1, x) = (g("A*•"), g("•*A"), g("A*A"));
    let r1 = c(0, id(c(0, b1.clone(), a1.clone())), x.clone());
    let r2 = c(0, id(b1.clone()), c(0, g("m*•"), id(b1.clone())));
    let r3 = c(0, x, id(b1));
    let r4 = c(0, id(a1), g("•*m"));
    c(1, c(1, c(1, r1, r2), r3), r4)
}

fn globular(p: &Presentation, t: &CellTerm) -> Outcome {
    let n = p.dim(t).map_err(|e| e.to_string())?;
    for k in 0..n.saturating_sub(1) {
        for side in [Side::Source, Side::Target] {
            let b = p.boundary(t, side, k + 1).map_err(|e| e.to_string())?;
            for inner in [Side::Source, Side::Target] {
                let x = p.boundary(&b, inner, k).map_err(|e| e.to_string())?;
                let y = p.boundary(t, inner, k).map_err(|e| e.to_string())?;
                let v = eq(&x, &y, p, polygraph_core::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                ensure(v == Verdict::Equal, || format!("{k}-boundary of the {}-boundary", k + 1))?;
            }
        }
    }
    Ok(())
}

fn c2_shear_syntax() -> Outcome {
    let sh = universal_shear().map_err(|e| e.to_string())?;
    let p = sh.presentation();
    let budget = polygraph_core::DEFAULT_BUDGET;
    let s = eq(&sh.source().map_err(|e| e.to_string())?, &left_picture(), p, budget).map_err(|e| e.to_string())?;
    let t = eq(&sh.target().map_err(|e| e.to_string())?, &right_picture(), p, budget).map_err(|e| e.to_string())?;
    ensure(s == Verdict::Equal && t == Verdict::Equal, || format!("source {s:?}, target {t:?}"))?;
    globular(p, &sh.term)
}

fn c3_shear_semantics() -> Outcome {
    let us = universal_shear().map_err(|e| e.to_string())?;
    for (name, b) in fixtures() {
        let e = evaluate(&b, us.presentation(), &us.term).map_err(|e| format!("{name}: {e}"))?;
        let ne = shear(&b, Which::NE).map_err(|e| e.to_string())?;
        ensure(e == ne, || format!("{name}: {:?}", e.first_difference(&ne)))?;
    }
    Ok(())
}

fn c4_shear_equivalence() -> Outcome {
    for (name, b) in fixtures() {
        let inv: Vec<bool> = Which::ALL.iter().map(|&w| shear(&b, w).unwrap().is_invertible()).collect();
        let of = |w: Which| inv[Which::ALL.iter().position(|&x| x == w).unwrap()];
        ensure(of(Which::NW) == of(Which::SE) && of(Which::NE) == of(Which::SW), || format!("{name}: {inv:?}"))?;
    }
    let b = idempotent();
    ensure(Which::ALL.iter().all(|&w| !shear(&b, w).unwrap().is_invertible()), || "Q[M] has an invertible shear".into())
}

fn c5_antipode() -> Outcome {
    for (name, b) in hopf_fixtures() {
        let h = antipode(&b).map_err(|e| format!("{name}: {e}"))?;
        ensure(check_convolution(&b, &h.s).unwrap().holds(), || format!("{name}: convolution"))?;
        let inv = inverse_from_antipode(&b, &h.s).unwrap();
        let se = shear(&b, Which::SE).unwrap();
        let id = Matrix::identity(b.n * b.n);
        ensure(inv.mul(&se).unwrap() == id && se.mul(&inv).unwrap() == id, || format!("{name}: SE inverse"))?;
        let si = antipode_from_integrals(&b).map_err(|e| format!("{name}: {e}"))?;
        ensure(si == h.s, || format!("{name}: antipode from integrals differs"))?;
    }
    let b = sweedler();
    let s = antipode(&b).unwrap().s;
    let solved = convolution_inverse(&b).unwrap();
    ensure(solved.as_ref() == Some(&s), || "sweedler: independent solve differs".into())?;
    let id = Matrix::identity(4);
    ensure(s.pow(2).unwrap() != id && s.pow(4).unwrap() == id, || "sweedler: order of S is not 4".into())
}

fn c6_integrals() -> Outcome {
    for (name, b) in hopf_fixtures() {
        let d = integrals(&b).map_err(|e| e.to_string())?;
        ensure(d.integrals.len() == 1 && d.cointegrals.len() == 1 && d.is_unimodular_pair(), || format!("{name}: {d:?}"))?;
    }
    for (name, b) in [("Q[Z/2]", z2()), ("Q[S3]", s3())] {
        let d = integrals(&b).unwrap();
        let n = b.n;
        let delta_e: Vec<Scalar> = (0..n).map(|i| if i == 0 { Scalar::one() } else { Scalar::zero() }).collect();
        let sum: Vec<Scalar> = vec![Scalar::one(); n];
        ensure(d.integrals[0].coords == delta_e && d.cointegrals[0].coords == sum, || format!("{name}: {d:?}"))?;
    }
    Ok(())
}

fn c7_mates() -> Outcome {
    for fx in [generic_square(), composite_square()] {
        let v = mates::double_mates(&fx.square, fx.records(), &fx.presentation, 10_000).map_err(|e| e.to_string())?;
        ensure(v == [Verdict::Equal; 2], || format!("double mates {v:?}"))?;
        for r in fx.records() {
            let z = r.check_zigzags(&fx.presentation, 10_000).map_err(|e| e.to_string())?;
            ensure(z == [Verdict::Equal; 2], || format!("zigzags {z:?}"))?;
        }
    }
    let a = walking::adj();
    let z = AdjunctionRecord::from_names("l", "r", "eps", "eta").check_zigzags(&a.base, 10_000).map_err(|e| e.to_string())?;
    ensure(z == [Verdict::Equal; 2], || format!("Adj zigzags {z:?}"))
}

fn c8_skeleton() -> Outcome {
    let s = skeleton().map_err(|e| e.to_string())?;
    let r = s.check(&s.chain, polygraph_core::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(r.composable, || format!("first failure {:?}", r.first_failure))?;
    ensure(r.boundary == Some([Verdict::Equal; 2]), || format!("boundary {:?}", r.boundary))?;
    let n = |k| r.counts.get(&k).copied().unwrap_or(0);
    ensure(
        n(CellKind::LType) >= 2 && n(CellKind::RType) >= 2 && n(CellKind::FourCell) >= 1 && n(CellKind::CollapseTrivial) >= 1,
        || format!("counts {:?}", r.counts),
    )
}

fn c9_round_trip() -> Outcome {
    for (name, b) in [("Q[Z/2]", z2()), ("Q[S3]", s3()), ("sweedler", sweedler()), ("Q[M]", idempotent())] {
        let r = tannaka::round_trip(&b, 2).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.verdict.isomorphism, || format!("{name}: {:?}", r.verdict.failure))?;
        ensure(r.flags_agree(), || format!("{name}: hopf {:?} cohopf {:?}", r.hopf, r.cohopf))?;
    }
    Ok(())
}

fn cli(args: &[&str]) -> i32 {
    let mut argv = vec!["hopfsmith", "--no-timing"];
    argv.extend_from_slice(args);
    hopfsmith::run(argv, &mut Vec::new(), &mut Vec::new())
}

fn c10_negative_controls() -> Outcome {
    let rep = check_bialgebra(&corrupted_z2()).map_err(|e| e.to_string())?;
    ensure(!rep.all_pass(), || "corrupted Δ passes".into())?;
    ensure(rep.axioms.iter().any(|a| !a.pass && a.witness.is_some()), || "no coordinate witness".into())?;
    let s = skeleton().map_err(|e| e.to_string())?;
    for i in 0..s.chain.len() {
        let mut chain = s.chain.clone();
        chain[i] = ChainEntry::new(&chain[i].gen.clone(), !chain[i].inv);
        let r = s.check(&chain, polygraph_core::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(r.first_failure == Some(i), || format!("mutation at {i} failed at {:?}", r.first_failure))?;
    }
    let codes = [
        cli(&["shear-check", "s3"]),
        cli(&["shear-check", "idempotent"]),
        cli(&["shear-check", "corrupted-z2"]),
        cli(&["proof-skeleton", "--mutate", "1"]),
        cli(&["census", "no-such-input"]),
        cli(&["frobnicate"]),
        hopfsmith::exit_code([hopfsmith::Status::Pass, hopfsmith::Status::Unknown]),
    ];
    ensure(codes == [0, 0, 1, 1, 64, 64, 2], || format!("exit codes {codes:?}"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("Gray and smash censuses", 1, c1_censuses),
        ("universal shear boundaries and globularity", 1, c2_shear_syntax),
        ("universal shear evaluates to NE on six fixtures", 5, c3_shear_semantics),
        ("NW/SE and NE/SW invertibility agree; Q[M] has none", 1, c4_shear_equivalence),
        ("antipode: convolution, SE inverse, integrals, Sweedler order 4", 5, c5_antipode),
        ("integral and cointegral lines with nonzero pairing", 2, c6_integrals),
        ("double mates and zigzags within budget 10^4", 5, c7_mates),
        ("proof skeleton composes with full classification", 10, c8_skeleton),
        ("Tannakian round trip at depth 2, flags agree", 30, c9_round_trip),
        ("negative controls and exit codes", 10, c10_negative_controls),
    ];
    let mut failed = 0;
    for (i, (what, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*limit);
        let ok = outcome.is_ok() && in_time;
        if !ok {
            failed += 1;
        }
        let mut line = format!(
            "criterion {:>2} {} {what} ({:.3} s, limit {limit} s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
        if let Err(e) = &outcome {
            line.push_str(&format!(": {e}"));
        } else if !in_time {
            line.push_str(": over the time limit");
        }
        println!("{line}");
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
