//! Antipodes from the inverse of the SE shear, and an independent solve of
//! the convolution-inverse equations.

use serde::Serialize;

use crate::bialgebra::Bialgebra;
use crate::error::{HopfError, Result};
use crate::matrix::{Matrix, Witness};
use crate::scalar::Scalar;
use crate::shear::{shear, Which};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub s: Matrix,
    /// present exactly when the NE shear is invertible
    pub s_inv: Option<Matrix>,
    pub se_inverse: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvolutionCheck {
    pub left: Option<Witness>,
    pub right: Option<Witness>,
}

impl ConvolutionCheck {
    pub fn holds(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }
}

/// `S = (ε⊗id) · SE⁻¹ · (id⊗u)`.
pub fn antipode(b: &Bialgebra) -> Result<HopfData> {
    let se = shear(b, Which::SE)?;
    let se_inverse = match se.inverse() {
        Ok(x) => x,
        Err(HopfError::Singular) => return Err(HopfError::NoAntipode { kernel: se.nullspace() }),
        Err(e) => return Err(e),
    };
    let id = b.id();
    let s = b.eps.kron(&id).mul(&se_inverse)?.mul(&id.kron(&b.u))?;
    let ne = shear(b, Which::NE)?;
    let s_inv = match ne.inverse() {
        // S⁻¹ = (ε⊗id) · NE⁻¹ · (u⊗id)
        Ok(x) => Some(b.eps.kron(&id).mul(&x)?.mul(&b.u.kron(&id))?),
        Err(HopfError::Singular) => None,
        Err(e) => return Err(e),
    };
    Ok(HopfData { s, s_inv, se_inverse })
}

/// `(id⊗m)(id⊗S⊗id)(Δ⊗id)`, which inverts SE when S is an antipode.
pub fn inverse_from_antipode(b: &Bialgebra, s: &Matrix) -> Result<Matrix> {
    let id = b.id();
    id.kron(&b.m).mul(&id.kron(s).kron(&id))?.mul(&b.delta.kron(&id))
}

/// `m(S⊗id)Δ = uε = m(id⊗S)Δ`.
pub fn check_convolution(b: &Bialgebra, s: &Matrix) -> Result<ConvolutionCheck> {
    let id = b.id();
    let ue = b.u.mul(&b.eps)?;
    let l = b.m.mul(&s.kron(&id))?.mul(&b.delta)?;
    let r = b.m.mul(&id.kron(s))?.mul(&b.delta)?;
    Ok(ConvolutionCheck { left: l.first_difference(&ue)?, right: r.first_difference(&ue)? })
}

/// Solve both convolution equations directly for the n² entries of S.
/// `None` when they have no solution.
pub fn convolution_inverse(b: &Bialgebra) -> Result<Option<Matrix>> {
    let n = b.n;
    let var = |l: usize, i: usize| l * n + i;
    let mut a = Matrix::zeros(2 * n * n, n * n);
    let mut rhs = Matrix::zeros(2 * n * n, 1);
    for r in 0..n {
        for i in 0..n {
            let (e1, e2) = (r * n + i, n * n + r * n + i);
            rhs.set(e1, 0, b.u.get(r, 0) * b.eps.get(0, i));
            rhs.set(e2, 0, b.u.get(r, 0) * b.eps.get(0, i));
            for j in 0..n {
                for k in 0..n {
                    let d = b.delta.get(j * n + k, i);
                    if d.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        // S(a₁) a₂
                        let x = b.m.get(r, l * n + k);
                        if !x.is_zero() {
                            let v = a.get(e1, var(l, j)) + &(d * x);
                            a.set(e1, var(l, j), v);
                        }
                        // a₁ S(a₂)
                        let y = b.m.get(r, j * n + l);
                        if !y.is_zero() {
                            let v = a.get(e2, var(l, k)) + &(d * y);
                            a.set(e2, var(l, k), v);
                        }
                    }
                }
            }
        }
    }
    let Some(x) = a.solve(&rhs)? else { return Ok(None) };
    let mut s = Matrix::zeros(n, n);
    for l in 0..n {
        for i in 0..n {
            s.set(l, i, x.get(var(l, i), 0).clone());
        }
    }
    Ok(Some(s))
}

/// Scalar helper for sign factors.
pub(crate) fn sign(odd: bool) -> Scalar {
    if odd {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}
