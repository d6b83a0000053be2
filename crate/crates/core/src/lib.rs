//! Attribute reduction for categorical information systems.
//!
//! Objects agreeing on a set of attributes are indiscernible; the blocks of
//! that relation generate a topology whose coarsest base is the
//! indiscernibility partition itself. A reduct is a minimal attribute subset
//! whose base equals the base of all conditional attributes.
//!
//! The pipeline:
//!
//! 1. [`significance::rank_attributes`] scores each attribute by how much the
//!    positive region shrinks without it.
//! 2. [`reduct::eliminate`] walks the ranking from least significant,
//!    dropping every attribute whose removal leaves the full base intact.
//!    Candidate bases are composed from the bases of two disjoint attribute
//!    groups ([`topology::compose_bases`]).
//! 3. [`reduct::exhaustive_reducts`] enumerates all reducts of small tables
//!    as an oracle.
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dataset;
pub mod error;
pub mod objset;
pub mod partition;
pub mod rational;
pub mod reduct;
pub mod significance;
pub mod topology;

pub use dataset::{builtin_seven_segment, Decision, InformationSystem};
pub use error::{Error, Result};
pub use objset::ObjectSet;
pub use partition::Partition;
pub use rational::Rational;
pub use reduct::{ReductResult, Verdict};
pub use significance::{Group, GroupPolicy, SignificanceTable};
pub use topology::SetFamily;
