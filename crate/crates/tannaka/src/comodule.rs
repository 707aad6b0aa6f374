//! Finite-dimensional left comodules, given by coaction matrices.

use linear_hopf::{antipode, Bialgebra, Braiding, Matrix};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TannakaError};

/// `ρ: M → H ⊗ M` as an `(n·d) × d` matrix, row `(h, k) ↦ h·d + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub d: usize,
    pub rho: Matrix,
}

impl Comodule {
    pub fn new(d: usize, rho: Matrix) -> Self {
        Comodule { d, rho }
    }

    /// `ρ(e_j) = Σ_h e_h ⊗ B_h e_j`: the matrix `B_h`.
    pub fn slice(&self, h: usize) -> Matrix {
        let mut b = Matrix::zeros(self.d, self.d);
        for k in 0..self.d {
            for j in 0..self.d {
                b.set(k, j, self.rho.get(h * self.d + k, j).clone());
            }
        }
        b
    }
}

fn even_only(h: &Bialgebra) -> Result<()> {
    if h.braiding == Braiding::Super && h.grading.iter().any(|&d| d == 1) {
        return Err(TannakaError::Unsupported("comodules over super bialgebras are not supported".into()));
    }
    Ok(())
}

/// Coassociativity and counit, exactly; the first failing coordinate is reported.
pub fn check_comodule(h: &Bialgebra, m: &Comodule) -> Result<()> {
    if m.rho.rows != h.n * m.d || m.rho.cols != m.d {
        return Err(TannakaError::NotComodule(format!("coaction is {}×{}, expected {}×{}", m.rho.rows, m.rho.cols, h.n * m.d, m.d)));
    }
    let id = Matrix::identity(m.d);
    let l = h.delta.kron(&id).mul(&m.rho)?;
    let r = h.id().kron(&m.rho).mul(&m.rho)?;
    if let Some(w) = l.first_difference(&r)? {
        return Err(TannakaError::NotComodule(format!("coassociativity fails at ({}, {}): {} ≠ {}", w.row, w.col, w.lhs, w.rhs)));
    }
    let c = h.eps.kron(&id).mul(&m.rho)?;
    if let Some(w) = c.first_difference(&id)? {
        return Err(TannakaError::NotComodule(format!("counit fails at ({}, {}): {} ≠ {}", w.row, w.col, w.lhs, w.rhs)));
    }
    Ok(())
}

pub fn trivial_comodule(h: &Bialgebra) -> Comodule {
    Comodule::new(1, h.u.clone())
}

pub fn regular_comodule(h: &Bialgebra) -> Comodule {
    Comodule::new(h.n, h.delta.clone())
}

/// `m ⊗ n ↦ m₋₁ n₋₁ ⊗ m₀ ⊗ n₀`.
pub fn tensor_comodule(h: &Bialgebra, m: &Comodule, n: &Comodule) -> Result<Comodule> {
    even_only(h)?;
    let (dm, dn, hn) = (m.d, n.d, h.n);
    let d = dm * dn;
    let mut rho = Matrix::zeros(hn * d, d);
    for i in 0..dm {
        for j in 0..dn {
            let col = i * dn + j;
            for g in 0..hn {
                for a in 0..dm {
                    let x = m.rho.get(g * dm + a, i);
                    if x.is_zero() {
                        continue;
                    }
                    for g2 in 0..hn {
                        for b in 0..dn {
                            let y = n.rho.get(g2 * dn + b, j);
                            if y.is_zero() {
                                continue;
                            }
                            let xy = x * y;
                            for t in 0..hn {
                                let c = h.m.get(t, g * hn + g2);
                                if c.is_zero() {
                                    continue;
                                }
                                let row = t * d + a * dn + b;
                                let v = rho.get(row, col) + &(&xy * c);
                                rho.set(row, col, v);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Comodule::new(d, rho))
}

/// Dual on the dual basis, `ρ(e^i) = Σ_k S(x_{ik}) ⊗ e^k` where `ρ(e_j) = Σ_i x_{ij} ⊗ e_i`.
/// Evaluation `M ⊗ M* → 1` is a comodule map; no inverse of `S` is needed.
pub fn dual_comodule(h: &Bialgebra, m: &Comodule) -> Result<Comodule> {
    even_only(h)?;
    let s = antipode(h)?.s;
    let d = m.d;
    let mut rho = Matrix::zeros(h.n * d, d);
    for i in 0..d {
        for k in 0..d {
            // x_{ik} = Σ_g ρ[(g, i), k] e_g
            for g in 0..h.n {
                let c = m.rho.get(g * d + i, k);
                if c.is_zero() {
                    continue;
                }
                for t in 0..h.n {
                    let sv = s.get(t, g);
                    if sv.is_zero() {
                        continue;
                    }
                    let v = rho.get(t * d + k, i) + &(c * sv);
                    rho.set(t * d + k, i, v);
                }
            }
        }
    }
    Ok(Comodule::new(d, rho))
}

/// Basis of comodule maps `M → N`, each a `d_N × d_M` matrix.
pub fn comodule_hom(h: &Bialgebra, m: &Comodule, n: &Comodule) -> Result<Vec<Matrix>> {
    let (dm, dn) = (m.d, n.d);
    let var = |r: usize, c: usize| r * dm + c;
    // one block of equations per basis element of H, refined one block at a time
    let mut basis = Matrix::identity(dm * dn);
    for g in 0..h.n {
        let (a, b) = (n.slice(g), m.slice(g));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let mut e = Matrix::zeros(dn * dm, dn * dm);
        for r in 0..dn {
            for j in 0..dm {
                let row = r * dm + j;
                for k in 0..dn {
                    let x = a.get(r, k);
                    if !x.is_zero() {
                        let v = e.get(row, var(k, j)) + x;
                        e.set(row, var(k, j), v);
                    }
                }
                for k in 0..dm {
                    let x = b.get(k, j);
                    if !x.is_zero() {
                        let v = e.get(row, var(r, k)) - x;
                        e.set(row, var(r, k), v);
                    }
                }
            }
        }
        let restricted = e.mul(&basis)?;
        let kernel = restricted.nullspace();
        if kernel.is_empty() {
            return Ok(Vec::new());
        }
        let mut k = Matrix::zeros(basis.cols, kernel.len());
        for (c, v) in kernel.iter().enumerate() {
            for r in 0..basis.cols {
                k.set(r, c, v.get(r, 0).clone());
            }
        }
        basis = basis.mul(&k)?;
    }
    Ok((0..basis.cols)
        .map(|c| {
            let mut phi = Matrix::zeros(dn, dm);
            for r in 0..dn {
                for j in 0..dm {
                    phi.set(r, j, basis.get(var(r, j), c).clone());
                }
            }
            phi
        })
        .collect())
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum ComoduleSpec {
    Named(String),
    Explicit { dim: usize, rho: serde_json::Value },
}
