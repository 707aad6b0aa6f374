//! Walking structures and products of presentations.

pub mod builtins;
pub mod error;
pub mod globe;
pub mod gray;
pub mod shear;
pub mod smash;

pub use builtins::{adj, e_oriental2, mnd, oriental2, PointedPresentation, MND_OBJECT};
pub use error::{Result, WalkError};
pub use globe::{boundary_globe, globe, globe_top, point, suspend};
pub use gray::{gray, pair_name, GrayProduct};
pub use shear::{bimnd_cells, shear_source_diagram, universal_shear, BimonadCells, UniversalShear};
pub use smash::{smash, CollapseMap, Smash};
pub mod skeleton;

pub use skeleton::{proof_skeleton_check, skeleton, CellKind, ChainEntry, SkeletonReport};
