//! Finite set-theoretic solutions of the Yang-Baxter and Hom-Yang-Baxter
//! equations, left quasigroups, and (Hom-)cycle sets, all stored as tables
//! on `{0, .., n-1}`.

pub mod cli;
pub mod constructions;
pub mod document;
pub mod enumerate;
pub mod error;
pub mod finite;
pub mod functors;
pub mod quadset;
pub mod quasigroup;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use finite::{FiniteMap, PairMap, SquareTable};
pub use quadset::{HomQuadraticSet, QuadraticSet};
pub use quasigroup::{HomQuasigroup, LeftQuasigroup};
pub use report::{CheckReport, Verdict, Witness};
