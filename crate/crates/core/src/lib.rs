//! Completion theory of finite non-Archimedean spaces.
//!
//! A non-Archimedean space is a set with an up-closed family of partitions.
//! This crate computes zeta-closures, decides completeness, builds the
//! completion from order-preserving choice functions, extends maps into
//! complete spaces, and checks all of it against brute-force oracles on
//! exhaustively enumerated small instances.

pub mod closure;
pub mod completion;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod morphism;
pub mod partition;
pub mod pointset;
pub mod space;
pub mod uniform;
pub mod verify;

pub use closure::{regular_closure_oracle, zeta_closure, ClosureReport};
pub use completion::{complete, extend, is_complete, ChoiceFunction, CompletionResult};
pub use error::{Error, Result};
pub use morphism::UcMap;
pub use partition::{Carrier, Partition};
pub use pointset::PointSet;
pub use space::NaSpace;
