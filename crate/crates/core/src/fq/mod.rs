//! Prime-field linear algebra, subspace enumeration and closed points.

mod matrix;
mod poly;
mod subspace;

pub use matrix::{add_mod, check_prime, inv_mod, mul_mod, neg_mod, FqMatrix, PRIMES};
pub use poly::{irreducibles, point_census, ClosedPoint, FqPoly};
pub use subspace::{enumerate_subspaces, for_each_subspace, for_each_superspace, gaussian_binomial};

#[cfg(test)]
mod tests;
