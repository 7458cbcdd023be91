//! Primeness of nonunital group-graded finite rings.

pub mod elemset;
pub mod error;
pub mod finring;
pub mod group;
mod syntax;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use finring::{build_ring, FiniteRing, Ideal, Limits, RingExpr};
pub use group::{FiniteGroup, GradingGroup, GroupElem, GroupExpr};
pub mod grading;

pub use grading::{GradedRing, GradedSpec, GradingClassification};
pub mod correspondence;
pub use correspondence::{BaseIdeal, CorrespondenceReport};
pub mod leavitt;
pub mod grfilter;
pub mod corpus;
