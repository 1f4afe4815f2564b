//! Exact computations for category O of the bouquet quiver variety and its
//! hypertoric slice.
//!
//! * [`exact`]: rational linear algebra, lattices, simplex and Fourier–Motzkin.
//! * [`hypertoric`]: polarized arrangements, sign vectors, standards and blocks.
//! * [`quiver`]: dimensions, torus fixed points, leaves and the slice data.
//! * [`paramcat`]: parameter classification, closed-form tables and the auditor.
//! * [`io`]: the arrangement JSON format and TSV helpers.

pub mod exact;
pub mod hypertoric;
pub mod io;
pub mod paramcat;
pub mod par;
pub mod quiver;

mod error;
pub use error::Error;
