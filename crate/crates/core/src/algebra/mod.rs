//! Finite fields and the hypergraph and graph families built from them.

pub mod catalog;
pub mod families;
pub mod field;
pub mod planes;

pub use catalog::{special, special_by_name, SpecialClass, SpecialKind};
pub use families::{family_f, l_k, random_linear, single_edge};
pub use field::{FieldElement, FiniteField};
pub use planes::{affine_plane, affine_residual, fano_complement, g30, heawood, projective_plane};

/// GF(q) with the lexicographically smallest monic irreducible modulus.
pub fn gf(q: u64) -> crate::Result<FiniteField> {
    FiniteField::new(q)
}
