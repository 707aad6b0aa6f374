//! The linear dual bialgebra.

use crate::antipode::HopfData;
use crate::bialgebra::Bialgebra;
use crate::matrix::Matrix;

/// `m* = Δᵀ`, `Δ* = mᵀ`, `u* = εᵀ`, `ε* = uᵀ` on the dual basis.
pub fn dual(b: &Bialgebra) -> Bialgebra {
    Bialgebra {
        n: b.n,
        grading: b.grading.clone(),
        braiding: b.braiding,
        m: b.delta.transpose(),
        u: b.eps.transpose(),
        delta: b.m.transpose(),
        eps: b.u.transpose(),
        field: b.field.clone(),
    }
}

pub fn dual_antipode(h: &HopfData) -> Matrix {
    h.s.transpose()
}
