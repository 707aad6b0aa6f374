//! Coend reconstruction over a finite generating family of comodules, and
//! comparison with a reference bialgebra through the canonical map.

use std::collections::BTreeMap;

use linear_hopf::{check_bialgebra, is_cohopf, is_hopf, Bialgebra, Braiding, Matrix, Scalar};
use serde::Serialize;

use crate::comodule::{check_comodule, comodule_hom, tensor_comodule, trivial_comodule, Comodule};
use crate::error::{Result, TannakaError};

/// Members plus the trivial comodule (always index 0), with all hom spaces between them.
pub struct GeneratingFamily {
    pub bialgebra: Bialgebra,
    pub members: Vec<Comodule>,
    pub depth: usize,
    homs: BTreeMap<(usize, usize), Vec<Matrix>>,
}

impl GeneratingFamily {
    pub fn new(bialgebra: Bialgebra, comodules: Vec<Comodule>, depth: usize) -> Result<Self> {
        for m in &comodules {
            check_comodule(&bialgebra, m)?;
        }
        let unit = trivial_comodule(&bialgebra);
        let mut members = vec![unit.clone()];
        members.extend(comodules.into_iter().filter(|m| *m != unit));
        let mut homs = BTreeMap::new();
        for i in 0..members.len() {
            for j in 0..members.len() {
                homs.insert((i, j), comodule_hom(&bialgebra, &members[i], &members[j])?);
            }
        }
        Ok(GeneratingFamily { bialgebra, members, depth, homs })
    }

    pub fn hom(&self, i: usize, j: usize) -> &[Matrix] {
        &self.homs[&(i, j)]
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for m in &self.members {
            off.push(off.last().unwrap() + m.d * m.d);
        }
        off
    }

    pub fn label(&self, i: usize) -> String {
        if i == 0 {
            "1".into()
        } else {
            format!("M{i}")
        }
    }

    /// Columns `(ξ∘φ) ⊗ v − ξ ⊗ φ(v)` spanning the naturality relations in `⊕ M_i* ⊗ M_i`.
    pub fn relation_matrix(&self) -> Matrix {
        let off = self.offsets();
        let dim = *off.last().unwrap();
        let mut cols: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for ((i, j), phis) in &self.homs {
            let (di, dj) = (self.members[*i].d, self.members[*j].d);
            for phi in phis {
                for a in 0..dj {
                    for b in 0..di {
                        let mut col = Vec::new();
                        for c in 0..di {
                            let x = phi.get(a, c);
                            if !x.is_zero() {
                                col.push((off[*i] + c * di + b, x.clone()));
                            }
                        }
                        for c in 0..dj {
                            let x = phi.get(c, b);
                            if !x.is_zero() {
                                col.push((off[*j] + a * dj + c, -x));
                            }
                        }
                        cols.push(col);
                    }
                }
            }
        }
        let mut r = Matrix::zeros(dim, cols.len());
        for (k, col) in cols.into_iter().enumerate() {
            for (row, x) in col {
                let v = r.get(row, k) + &x;
                r.set(row, k, v);
            }
        }
        r
    }
}

/// Dimension of the quotient of `⊕ M_i* ⊗ M_i` by the first `k` relation columns.
pub fn coend_dimension(rel: &Matrix, k: usize) -> usize {
    let mut sub = Matrix::zeros(rel.rows, k.min(rel.cols));
    for i in 0..rel.rows {
        for j in 0..sub.cols {
            sub.set(i, j, rel.get(i, j).clone());
        }
    }
    rel.rows - sub.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub isomorphism: bool,
    pub coend_dim: usize,
    pub reference_dim: usize,
    pub canonical_rank: usize,
    pub coalgebra_map: bool,
    pub algebra_map: bool,
    pub axioms_hold: bool,
    pub failure: Option<String>,
}

pub struct Reconstruction {
    pub bialgebra: Bialgebra,
    /// `C → H`, class of `ξ ⊗ v` ↦ `(id ⊗ ξ)(ρ v)`
    pub canonical: Matrix,
    pub verdict: Option<Verdict>,
}

/// Coordinates of `[ξ ⊗ v]` for `ξ, v` in `M_i ⊗ M_j`, as a vector of `⊕ M_k* ⊗ M_k`,
/// by pulling back along a surjection from family members.
struct Expression {
    /// (member, φ: M_k → P, σ: P → M_k) with `Σ φ σ = id_P`
    parts: Vec<(usize, Matrix, Matrix)>,
}

fn express(f: &GeneratingFamily, i: usize, j: usize) -> Result<Expression> {
    let h = &f.bialgebra;
    let p = tensor_comodule(h, &f.members[i], &f.members[j])?;
    let closure = || TannakaError::Closure { depth: f.depth, product: format!("{} ⊗ {}", f.label(i), f.label(j)) };
    if f.depth < 2 {
        return Err(closure());
    }
    let mut maps = Vec::new();
    for (k, m) in f.members.iter().enumerate() {
        for phi in comodule_hom(h, m, &p)? {
            maps.push((k, phi));
        }
    }
    let width: usize = maps.iter().map(|(k, _)| f.members[*k].d).sum();
    let mut pi = Matrix::zeros(p.d, width);
    let mut at = 0;
    for (k, phi) in &maps {
        for r in 0..p.d {
            for c in 0..f.members[*k].d {
                pi.set(r, at + c, phi.get(r, c).clone());
            }
        }
        at += f.members[*k].d;
    }
    let sigma = pi.solve(&Matrix::identity(p.d))?.ok_or_else(closure)?;
    let mut parts = Vec::new();
    let mut at = 0;
    for (k, phi) in maps {
        let d = f.members[k].d;
        let mut s = Matrix::zeros(d, p.d);
        for r in 0..d {
            for c in 0..p.d {
                s.set(r, c, sigma.get(at + r, c).clone());
            }
        }
        at += d;
        if !s.is_zero() {
            parts.push((k, phi, s));
        }
    }
    Ok(Expression { parts })
}

pub fn coend_reconstruct(f: &GeneratingFamily, reference: Option<&Bialgebra>) -> Result<Reconstruction> {
    let h = &f.bialgebra;
    let off = f.offsets();
    let dim_v = *off.last().unwrap();
    let rel = f.relation_matrix();
    // quotient map: rows annihilating the relations
    let q = {
        let k = rel.transpose().nullspace();
        let mut q = Matrix::zeros(k.len(), dim_v);
        for (r, v) in k.iter().enumerate() {
            for c in 0..dim_v {
                q.set(r, c, v.get(c, 0).clone());
            }
        }
        q
    };
    let n = q.rows;
    // basis of the coend: classes of the earliest independent coordinate vectors
    let (_, chosen) = q.rref();
    let mut qp = Matrix::zeros(n, n);
    for r in 0..n {
        for (c, &col) in chosen.iter().enumerate() {
            qp.set(r, c, q.get(r, col).clone());
        }
    }
    let q = qp.inverse()?.mul(&q)?;
    let locate = |v: usize| -> (usize, usize, usize) {
        let i = (0..f.members.len()).find(|&i| v < off[i + 1]).unwrap();
        let d = f.members[i].d;
        (i, (v - off[i]) / d, (v - off[i]) % d)
    };
    let qcol = |v: usize| -> Vec<Scalar> { (0..n).map(|r| q.get(r, v).clone()).collect() };

    let mut delta = Matrix::zeros(n * n, n);
    let mut eps = Matrix::zeros(1, n);
    let mut can = Matrix::zeros(h.n, n);
    for (k, &v) in chosen.iter().enumerate() {
        let (i, a, b) = locate(v);
        let d = f.members[i].d;
        for c in 0..d {
            // Δ x_{ab} = Σ_c x_{cb} ⊗ x_{ac}
            let l = qcol(off[i] + c * d + b);
            let r = qcol(off[i] + a * d + c);
            for (x, lx) in l.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                for (y, ry) in r.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    let val = delta.get(x * n + y, k) + &(lx * ry);
                    delta.set(x * n + y, k, val);
                }
            }
        }
        if a == b {
            eps.set(0, k, Scalar::one());
        }
        for t in 0..h.n {
            can.set(t, k, f.members[i].rho.get(t * d + a, b).clone());
        }
    }
    let u = Matrix::column(qcol(0));

    let mut exprs: BTreeMap<(usize, usize), Expression> = BTreeMap::new();
    let mut m = Matrix::zeros(n, n * n);
    for (k1, &v1) in chosen.iter().enumerate() {
        let (i, a1, b1) = locate(v1);
        for (k2, &v2) in chosen.iter().enumerate() {
            let (j, a2, b2) = locate(v2);
            let col = k1 * n + k2;
            let target: Vec<(usize, Scalar)> = if i == 0 {
                vec![(v2, Scalar::one())]
            } else if j == 0 {
                vec![(v1, Scalar::one())]
            } else {
                if !exprs.contains_key(&(i, j)) {
                    exprs.insert((i, j), express(f, i, j)?);
                }
                let e = &exprs[&(i, j)];
                let dj = f.members[j].d;
                let (x, y) = (a1 * dj + a2, b1 * dj + b2);
                let mut out = Vec::new();
                for (kk, phi, sigma) in &e.parts {
                    let dk = f.members[*kk].d;
                    for c in 0..dk {
                        let pc = phi.get(x, c);
                        if pc.is_zero() {
                            continue;
                        }
                        for c2 in 0..dk {
                            let sc = sigma.get(c2, y);
                            if !sc.is_zero() {
                                out.push((off[*kk] + c * dk + c2, pc * sc));
                            }
                        }
                    }
                }
                out
            };
            for (v, s) in target {
                for r in 0..n {
                    let qv = q.get(r, v);
                    if !qv.is_zero() {
                        let val = m.get(r, col) + &(qv * &s);
                        m.set(r, col, val);
                    }
                }
            }
        }
    }
    let b = Bialgebra { n, grading: vec![0; n], braiding: Braiding::Flip, m, u, delta, eps, field: h.field.clone() };
    let verdict = reference.map(|r| compare(&b, &can, r)).transpose()?;
    Ok(Reconstruction { bialgebra: b, canonical: can, verdict })
}

/// Is the canonical map a bialgebra isomorphism onto `r`?
fn compare(b: &Bialgebra, can: &Matrix, r: &Bialgebra) -> Result<Verdict> {
    let axioms = check_bialgebra(b)?;
    let mut v = Verdict {
        isomorphism: false,
        coend_dim: b.n,
        reference_dim: r.n,
        canonical_rank: can.rank(),
        coalgebra_map: false,
        algebra_map: false,
        axioms_hold: axioms.all_pass(),
        failure: None,
    };
    if can.rows != r.n {
        v.failure = Some(format!("canonical map lands in dimension {}, reference has {}", can.rows, r.n));
        return Ok(v);
    }
    let cc = can.kron(can);
    let co = [
        ("Δ", cc.mul(&b.delta)?.first_difference(&r.delta.mul(can)?)?),
        ("ε", b.eps.first_difference(&r.eps.mul(can)?)?),
    ];
    let al = [
        ("m", can.mul(&b.m)?.first_difference(&r.m.mul(&cc)?)?),
        ("u", can.mul(&b.u)?.first_difference(&r.u)?),
    ];
    v.coalgebra_map = co.iter().all(|(_, w)| w.is_none());
    v.algebra_map = al.iter().all(|(_, w)| w.is_none());
    let first = co.iter().chain(al.iter()).find_map(|(name, w)| w.as_ref().map(|w| (name, w.clone())));
    v.failure = if let Some(ax) = axioms.axioms.iter().find(|a| !a.pass) {
        Some(format!("reconstruction fails the {} axiom", ax.axiom))
    } else if b.n != r.n || v.canonical_rank != r.n {
        Some(format!("canonical map has rank {} between dimensions {} and {}", v.canonical_rank, b.n, r.n))
    } else if let Some((name, w)) = first {
        Some(format!("canonical map does not preserve {name} at ({}, {}): {} ≠ {}", w.row, w.col, w.lhs, w.rhs))
    } else {
        None
    };
    v.isomorphism = v.failure.is_none();
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub verdict: Verdict,
    /// (input, reconstruction)
    pub hopf: (bool, bool),
    pub cohopf: (bool, bool),
}

impl RoundTrip {
    pub fn flags_agree(&self) -> bool {
        self.hopf.0 == self.hopf.1 && self.cohopf.0 == self.cohopf.1
    }

    pub fn passed(&self) -> bool {
        self.verdict.isomorphism && self.flags_agree()
    }
}

/// Reconstruct `h` from its regular comodule and compare through the canonical map.
pub fn round_trip(h: &Bialgebra, depth: usize) -> Result<RoundTrip> {
    let report = check_bialgebra(h)?;
    if let Some(a) = report.axioms.iter().find(|a| !a.pass) {
        return Err(TannakaError::NotComodule(format!("input fails the {} axiom", a.axiom)));
    }
    let fam = GeneratingFamily::new(h.clone(), vec![crate::comodule::regular_comodule(h)], depth)?;
    let rec = coend_reconstruct(&fam, Some(h))?;
    let b = &rec.bialgebra;
    Ok(RoundTrip {
        verdict: rec.verdict.expect("reference given"),
        hopf: (is_hopf(h)?, is_hopf(b)?),
        cohopf: (is_cohopf(h)?, is_cohopf(b)?),
    })
}
