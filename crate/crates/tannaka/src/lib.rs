//! Reconstruction of finite-dimensional bialgebras from comodules with the
//! forgetful fiber functor.

pub mod comodule;
pub mod error;
pub mod family;
pub mod reconstruct;

pub use comodule::{check_comodule, comodule_hom, dual_comodule, regular_comodule, tensor_comodule, trivial_comodule, Comodule};
pub use error::{Result, TannakaError};
pub use family::FamilyFile;
pub use reconstruct::{coend_dimension, coend_reconstruct, round_trip, GeneratingFamily, Reconstruction, RoundTrip, Verdict};
