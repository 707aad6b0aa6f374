//! Integrals on B (linear forms) and cointegrals in B, solved one parity at a time.

use serde::Serialize;

use crate::antipode::sign;
use crate::bialgebra::Bialgebra;
use crate::error::{HopfError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homogeneous {
    pub parity: u8,
    pub coords: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralData {
    /// forms λ with `(id⊗λ)Δ = u·λ`
    pub integrals: Vec<Homogeneous>,
    /// elements Λ with `hΛ = ε(h)Λ`
    pub cointegrals: Vec<Homogeneous>,
    /// `λ(Λ)` when both spaces are lines
    pub pairing: Option<Scalar>,
}

impl IntegralData {
    pub fn is_unimodular_pair(&self) -> bool {
        self.integrals.len() == 1 && self.cointegrals.len() == 1 && self.pairing.as_ref().is_some_and(|c| !c.is_zero())
    }
}

fn normalize(mut v: Vec<Scalar>) -> Vec<Scalar> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
    v
}

/// Kernel of the system restricted to the coordinates of one parity, lifted
/// back to full coordinate vectors.
fn solve_parity(b: &Bialgebra, parity: u8, eqs: impl Fn(&[usize]) -> Matrix) -> Vec<Homogeneous> {
    let support: Vec<usize> = (0..b.n).filter(|&j| b.grading[j] == parity).collect();
    if support.is_empty() {
        return Vec::new();
    }
    let a = eqs(&support);
    a.nullspace()
        .into_iter()
        .map(|k| {
            let mut v = vec![Scalar::zero(); b.n];
            for (t, &j) in support.iter().enumerate() {
                v[j] = k.get(t, 0).clone();
            }
            Homogeneous { parity, coords: normalize(v) }
        })
        .collect()
}

pub fn integrals(b: &Bialgebra) -> Result<IntegralData> {
    b.check_shapes()?;
    let n = b.n;
    let mut ints = Vec::new();
    let mut coints = Vec::new();
    for p in 0..2u8 {
        ints.extend(solve_parity(b, p, |sup| {
            let mut a = Matrix::zeros(n * n, sup.len());
            for i in 0..n {
                let s = sign(p & b.grading[i] == 1);
                for k in 0..n {
                    for (t, &j) in sup.iter().enumerate() {
                        let mut x = &s * b.delta.get(i * n + j, k);
                        if j == k {
                            x = x - b.u.get(i, 0);
                        }
                        a.set(i * n + k, t, x);
                    }
                }
            }
            a
        }));
        coints.extend(solve_parity(b, p, |sup| {
            let mut a = Matrix::zeros(n * n, sup.len());
            for h in 0..n {
                let s = sign(p & b.grading[h] == 1);
                for i in 0..n {
                    for (t, &j) in sup.iter().enumerate() {
                        let mut x = &s * b.m.get(i, h * n + j);
                        if j == i {
                            x = x - b.eps.get(0, h);
                        }
                        a.set(h * n + i, t, x);
                    }
                }
            }
            a
        }));
    }
    let pairing = (ints.len() == 1 && coints.len() == 1).then(|| {
        ints[0].coords.iter().zip(&coints[0].coords).fold(Scalar::zero(), |acc, (x, y)| acc + &(x * y))
    });
    Ok(IntegralData { integrals: ints, cointegrals: coints, pairing })
}

/// `S(a) = c⁻¹ Σ ± λ(a Λ₂) Λ₁` with `c = λ(Λ)`.
pub fn antipode_from_integrals(b: &Bialgebra) -> Result<Matrix> {
    let data = integrals(b)?;
    if data.integrals.len() != 1 || data.cointegrals.len() != 1 {
        return Err(HopfError::Condition(format!(
            "integral space of dimension {} and cointegral space of dimension {}",
            data.integrals.len(),
            data.cointegrals.len()
        )));
    }
    let c = data.pairing.clone().expect("both lines");
    if c.is_zero() {
        return Err(HopfError::Condition("λ(Λ) = 0".into()));
    }
    let ci = c.inv()?;
    let lam = &data.integrals[0].coords;
    let big = &data.cointegrals[0].coords;
    let n = b.n;
    // λ(e_a e_j)
    let mut pair = Matrix::zeros(n, n);
    for a in 0..n {
        for j in 0..n {
            let v = (0..n).fold(Scalar::zero(), |acc, r| acc + &(&lam[r] * b.m.get(r, a * n + j)));
            pair.set(a, j, v);
        }
    }
    let mut s = Matrix::zeros(n, n);
    for k in (0..n).filter(|&k| !big[k].is_zero()) {
        for i in 0..n {
            for j in 0..n {
                let d = b.delta.get(i * n + j, k);
                if d.is_zero() {
                    continue;
                }
                let w = &(&big[k] * d) * &ci;
                for a in 0..n {
                    let pv = pair.get(a, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let sg = sign(b.grading[a] & b.grading[i] == 1);
                    let v = s.get(i, a) + &(&(&sg * &w) * pv);
                    s.set(i, a, v);
                }
            }
        }
    }
    Ok(s)
}
