//! Exact character tables of finite permutation groups, and the
//! G-character tables of their normal subgroups.

pub mod algebra;
pub mod analysis;
pub mod cache;
pub mod catalog;
pub mod chartab;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod gtable;
pub mod linalg;
pub mod normal;
pub mod par;
pub mod perm;

pub use cyclo::Cyclotomic;
pub use error::{Error, Result};
pub use perm::{ClassData, PermGroup, Permutation};
