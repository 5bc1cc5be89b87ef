//! Kazhdan-Lusztig cells and Specht modules for the two-parameter Hecke
//! algebra of type `B_n`, in exact arithmetic.

pub mod bipartition;
pub mod cells;
pub mod error;
pub mod group;
pub mod hecke;
pub mod hom;
pub mod kl;
pub mod laurent;
pub mod matrix;
pub mod order;
pub mod perm;
pub mod rs;
pub mod specht;
pub mod tableau;
pub mod verify;

pub use bipartition::{Bipartition, Partition};
pub use cells::{CellModule, CellPartition, CellSide};
pub use error::{Error, Result};
pub use group::{ElemId, WeylGroup, MAX_RANK};
pub use hecke::{Basis, HeckeAlgebra, HeckeElt, WeightSpec};
pub use kl::KlTable;
pub use laurent::{Laurent2, Split};
pub use matrix::Matrix;
pub use order::{Exp, MonomialOrder};
pub use perm::{CliffordForm, Gen, Side, SignedPerm};
pub use tableau::Bitableau;
