//! Multiplicities of Schubert varieties in the flag variety of `GL(n)` at the
//! most singular point `X_{w0}`.
//!
//! For a permutation `w` the computation runs
//! [`schubert_ideal::generate`] (minors of the antidiagonal chart prescribed
//! by the rank matrix of `w`, homogenized with `t`) →
//! [`groebner::buchberger`] under a `t`-elimination order →
//! [`groebner::lead_term_ideal`] → [`groebner::eliminate_t`] →
//! [`hilbert::dim_degree`]. The degree of the resulting monomial quotient is
//! the multiplicity.
//!
//! ```
//! use schubert_mult::{combinatorics::Permutation, pipeline, polyring::TermOrder};
//!
//! let w: Permutation = "2143".parse().unwrap();
//! let record = pipeline::multiplicity(&w, &TermOrder::grevlex()).unwrap();
//! assert_eq!(record.multiplicity, 2);
//! ```

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod pipeline;
pub mod polyring;
pub mod schubert_ideal;

pub use error::{Error, Result};
