//! Quasiconformal extension machinery on the unit disk.
//!
//! The crate provides, as a library with a thin `qcg` command-line front end:
//!
//! * explicit extension operators taking a circle homeomorphism
//!   `e^{iθ} ↦ e^{if(θ)}` to a self-map of the disk, with their exact
//!   Beltrami coefficients ([`extend`]),
//! * the Möbius-invariant roundness `ν(γ)` of Jordan curves and of germs of
//!   quasisymmetric maps ([`roundness`]),
//! * a numerical conformal-modulus estimator for doubly connected domains
//!   based on capacity minimization ([`ring_modulus`]),
//! * closed-form evaluators for the quantitative distortion bounds and the
//!   piecewise gluing construction ([`bounds`]),
//! * the Jacobi-elliptic worked example with its sharp roundness and the
//!   half-plane non-quasisymmetric counterexample ([`elliptic`], [`wedge`]),
//! * complete elliptic integrals, Jacobi elliptic functions, Grötzsch and
//!   Teichmüller ring moduli ([`special`]).
//!
//! Moduli of ring domains are always in the natural-log convention: the round
//! annulus `A(r, R)` has modulus `log(R/r)`. Elliptic integrals use the
//! parameter convention `m = k²` throughout; see [`special`].
//!
//! Everything is pure computation over `f64`/[`num_complex::Complex64`];
//! functions either return values or a [`Error`]. Grid sweeps and the linear
//! solver parallelize internally with rayon; the `QCG_THREADS` environment
//! variable caps the thread count when set (see [`cli`]).

pub mod bounds;
pub mod circle_map;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod extend;
pub mod geometry;
pub mod ring_modulus;
pub mod roundness;
pub mod special;
pub mod svg;
pub mod verify;
pub mod wedge;

pub use error::{Error, Result};

pub use num_complex::Complex64;
