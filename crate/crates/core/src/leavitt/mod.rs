//! Leavitt path rings of finite graphs over finite unital rings.

mod graph;
mod lpa;

pub use graph::{DirectedGraph, Edge, Mt3};
pub use lpa::{is_leavitt_prime, lpa_degree, CornerWitness, LeavittRing, LeavittVerdict, LpaElement, Path};
