//! Fourier transforms on diagram algebra chains (symmetric group, Brauer,
//! Temperley-Lieb) computed naively and by a separation-of-variables
//! schedule over the Bratteli diagram, in exact rational arithmetic.

pub mod combinat;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod pathalg;
pub mod reps;
pub mod scalar;
pub mod transform;

pub use error::{Error, Result};
