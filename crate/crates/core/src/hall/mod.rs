//! The extended twisted Hall algebra of the Kronecker quiver, its
//! coproduct and Green pairing, and the reduced Drinfeld double.

mod double;
mod element;
mod expr;
mod structure;

pub use double::{dbracket, dmul, straighten, DoubleElement};
pub use expr::parse_double;
pub use element::{
    coproduct_slice, green_pair, green_pair_tensor, one_alpha, tube_one, HallElement, TensorTerm,
};
pub use structure::{aut, cache_sizes, product, slice, Slice};
