//! Concrete semirings and the groups and fields they are built from.

mod builtin;
mod families;
mod field;
mod groups;
mod howie;

pub use builtin::{builtin, BUILTIN_NAMES};
pub use families::{matrix_entries, matrix_index, matrix_semiring, v_of_group, zero_ring};
pub use field::{field_modulus, finite_field, is_prime, prime_power, FIELD_MAX_ORDER};
pub use groups::{small_groups, GroupTable, SMALL_GROUPS_MAX_ORDER};
pub use howie::{
    flat_howie, flat_semiring, howie_labels, howie_semigroup, valid_pmatrices, PMatrix, PMatrixFile,
};
