//! Constructors for the example families: group algebras and their Drinfeld
//! doubles, the restricted enveloping algebra of sl2 in characteristic p,
//! the small quantum group for sl2 at an odd root of unity, and the
//! 4-dimensional Sweedler/Taft algebra (the non-unimodular control case).
//!
//! Every builder output passes both validators before it is returned.

pub mod double;
pub mod group;
pub mod sweedler;
pub mod uqsl2;
pub mod usl2;

use thiserror::Error;

use crate::field::FieldError;
use crate::hopf::HopfError;
use crate::modcat::ModcatError;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Modcat(#[from] ModcatError),
}

pub use double::build_drinfeld_double_group;
pub use group::{build_group_algebra, s3_natural_module, GroupTable};
pub use sweedler::build_sweedler;
pub use uqsl2::{build_small_quantum_sl2, SmallQuantumSl2};
pub use usl2::{build_restricted_usl2, RestrictedSl2};
