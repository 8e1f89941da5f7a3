//! Representations of the Kronecker quiver `1 ⇉ 2` over prime fields.

mod classes;
mod counts;
mod iso;
mod rep;

pub use classes::{euler_dims, euler_form, sym_form, DimVec, KClass};
pub use counts::{
    aut_count, aut_count_bounded, aut_count_fast, end_dim, enumerate_iso_classes, ext_census,
    ext_dim, for_each_subrep, hall_number, hall_number_bound, hom_dim, hom_dim_reps,
    regular_classes, ExtCensus, AUT_ENUMERATION_BOUND, EXT_ENUMERATION_BOUND,
};
pub use iso::{Indec, IsoClass};
pub use rep::{canonical_indec, canonical_rep, decompose, Rep};
