//! Finite semirings with commutative addition, represented by Cayley tables.
//!
//! The crate decides congruence-simplicity, builds the standard families of
//! congruence-simple semirings (order-2 tables, `V(G)`, matrix rings over
//! finite fields, zero-multiplication rings, flat semirings over
//! congruence-free semigroups with zero), tests isomorphism, enumerates all
//! semirings of order at most 4 and classifies the congruence-simple ones.

pub mod catalog;
pub mod classify;
pub mod congruence;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod iso;
pub mod semiring;
pub mod table;

pub use classify::{classify, verify_structure_theorems, Case, ClassificationResult};
pub use congruence::{is_congruence_simple, principal_congruence, Partition, SimplicityReport};
pub use error::{Error, Result};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm};
pub use semiring::{validate, AxiomReport, FiniteSemiring, Properties, SpecialElements};
pub use table::OpTable;
