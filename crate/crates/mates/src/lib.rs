//! Adjunctions, mates and the symbolic Hopf square of an adjunctible retract.

pub mod adjunction;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod retract;
pub mod square;

pub use adjunction::AdjunctionRecord;
pub use error::{MateError, Result};
pub use hopf::{hopf_square_terms, HopfSquare, HopfVerdicts};
pub use retract::{generic_retract, RetractHeader, RetractRecord};
pub use square::{double_mates, left_mate, right_mate, Square};
