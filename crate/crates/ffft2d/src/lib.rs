//! Two-dimensional cyclic codes for burst errors, built and decoded in the
//! finite field Fourier transform domain.
//!
//! An n x m binary grid (n, m odd) maps to an n x m spectrum over GF(2^lambda)
//! by evaluating its bivariate polynomial at powers of roots of unity. A code
//! is the set of grids whose spectrum vanishes on a chosen common zero set;
//! messages are packed directly into the free spectrum positions, orbit by
//! conjugacy orbit. Decoding evaluates the received word at the zeros and
//! locates horizontal and vertical bursts from the resulting syndromes.

pub mod code;
pub mod decoder;
pub mod error;
pub mod error_model;
pub mod galois;
pub mod oracle;
pub mod sim;
pub mod transform;

pub use error::{Error, Result};
