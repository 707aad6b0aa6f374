//! Exact linear algebra for finite-dimensional bialgebras: axioms, shears,
//! antipodes, integrals, and evaluation of walking-structure 3-cells.

pub mod antipode;
pub mod bialgebra;
pub mod dual;
pub mod error;
pub mod eval;
pub mod fixtures;
pub mod integrals;
pub mod matrix;
pub mod scalar;
pub mod shear;

pub use antipode::{antipode, check_convolution, convolution_inverse, inverse_from_antipode, ConvolutionCheck, HopfData};
pub use bialgebra::{check_bialgebra, read_matrix, write_matrix, AxiomResult, Bialgebra, BialgebraFile, Braiding, Report, AXIOMS};
pub use dual::{dual, dual_antipode};
pub use error::{HopfError, Result};
pub use eval::{evaluate, evaluate_image, EvalContext, Ordering};
pub use integrals::{antipode_from_integrals, integrals, Homogeneous, IntegralData};
pub use matrix::{Matrix, Witness};
pub use scalar::{Modulus, Scalar};
pub use shear::{is_cohopf, is_hopf, shear, Which};
