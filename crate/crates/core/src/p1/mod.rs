//! Coherent sheaves on the projective line, realized inside the Kronecker
//! double through the tilting equivalence.

mod census;
mod classes;
mod generators;
mod szanto;

pub use census::{lb_coproduct_census, lb_coproduct_check, CensusRow};
pub use classes::{obj_transport, P1Class, Sheaf, Transport};
pub use generators::{
    c_half, k_gen, k_p1, line_bundle, one_tor, sheaf_elem, t_double, t_elem, t_tilde,
    theta_census, theta_double, theta_elem, theta_tilde, torsion_generators, Sign,
    TorsionGenerators,
};
pub use szanto::{szanto_check, szanto_lhs, szanto_rhs, SzantoForm};
