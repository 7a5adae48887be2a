//! Pictures, skew tableaux and the hook rule for Kronecker products of
//! symmetric-group representations.
//!
//! The combinatorial side lives in [`shapes`], [`tableaux`], [`pictures`] and
//! [`hook_rule`]; [`lr`] and [`oracle`] provide two independent ways of
//! computing the same numbers.

pub mod error;
pub mod hook_rule;
pub mod lr;
pub mod oracle;
pub mod pictures;
pub mod render;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use hook_rule::{
    decompose_tensor_hook, hook_hook_multiplicity, multiplicity_exterior, multiplicity_hook, pw_m, pw_set,
    Balance, DecompositionRow, DecompositionTable, TypedPicture, ZetaCount,
};
pub use lr::{lr, lr_coefficient, w_m_via_lr, LrQuery};
pub use oracle::{exterior_multiplicity, kronecker, CharacterTable};
pub use pictures::{count_pictures, enumerate_pictures, Picture};
pub use shapes::{Cell, Partition, SkewShape};
pub use tableaux::{BumpRoute, PartialTableau, Reading};
