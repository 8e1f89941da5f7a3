//! Exact Hall algebras of the Kronecker quiver over prime fields, their
//! reduced Drinfeld doubles, the transport to coherent sheaves on the
//! projective line, and symbolic presentations of quantum affine sl2.

pub mod error;
pub mod fq;
pub mod hall;
pub mod kronrep;
pub mod p1;
pub mod report;
pub mod uv;
pub mod scalars;
pub mod stability;

pub use error::{Error, Result};
