//! Exact computation of the classifying element of a cyclic Belyi curve.
//!
//! For an odd n and 1 <= k <= n-2 with gcd(n, k(k+1)) = 1, the smooth
//! projective curve with affine equation v^n = u(1-u)^k carries a cyclic
//! degree-n cover of the line branched over 0, 1 and infinity. This crate
//! computes the classifying element Delta of the second graded quotient of
//! the lower central series of its fundamental group — exactly, over the
//! integers — by three independent routes that are checked against each
//! other:
//!
//! * a closed form in the loop basis `[E_1]`, ..., `[E_{n-1}]` ([`homology`]),
//! * the degree-2 power-series expansion of the boundary word produced by
//!   walking the glued sheets of the slit cover ([`covering`], [`words`]),
//! * a commutator-collection rule driven by the interleaving of inverse
//!   pairs in that word ([`words`]).
//!
//! A modular-symbol model of the homology ([`modsym`]) independently
//! verifies the basis the closed form is written in, and [`verify`] sweeps
//! every property over all valid pairs up to a bound. All arithmetic is
//! exact; there is no floating point in the crate.
//!
//! ```
//! use belyi::covering::lift_boundary_loop;
//! use belyi::homology::{closed_form_delta, pfaffian_check, t_decomposition};
//! use belyi::words::magnus_class;
//! use belyi::CurveParams;
//!
//! let p = CurveParams::new(11, 6)?;
//! let delta = closed_form_delta(&p);
//!
//! // the words route agrees with the closed form
//! let (_, boundary_word) = lift_boundary_loop(&p);
//! assert_eq!(delta, magnus_class(&boundary_word.inverse())?);
//!
//! // Delta is a symplectic form in this basis
//! assert_eq!(pfaffian_check(&p, &delta).to_string(), "1");
//!
//! // and decomposes over the deck-invariant elements
//! assert_eq!(t_decomposition(&p).to_string(), "-T_1 + T_3 - T_4");
//! # Ok::<(), belyi::Error>(())
//! ```

pub mod covering;
pub mod error;
pub mod homology;
pub mod modsym;
pub mod params;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use homology::{H1Class, InertiaType, TDecomposition, WedgeClass};
pub use params::{CurveParams, Residue};
pub use words::{Letter, Sign, Word};
