//! Symbolic combinatorics of multisegments over abstract cuspidal lines.
//!
//! Irreducible representations of `GL_n(E)`, for `E/F` a quadratic extension
//! of p-adic fields, are parameterized by multisegments: finite multisets of
//! exponent intervals on cuspidal lines. Working purely at that combinatorial
//! level, this crate decides:
//!
//! * the Zelevinsky involution, via the Mœglin–Waldspurger algorithm with a
//!   full round-by-round trace ([`involution`]);
//! * conjugate self-duality `(𝔪^∨)^τ = 𝔪` ([`model`]);
//! * membership in the images of the stable and unstable base change maps
//!   from the quasi-split unitary group, through the combinatorial shadow of
//!   the Weil–Deligne parameter ([`basechange`]);
//! * `GL_n(F)`-distinction for ladder representations and for products of
//!   mutually unlinked proper ladders, including the twisted variant
//!   ([`distinction`]).
//!
//! A small expression language and a universe configuration format make the
//! classifiers scriptable ([`dsl`], [`cli`]), a built-in catalog pins down
//! worked counterexamples ([`catalog`]), and exhaustive enumeration drives
//! the property suites that double as the acceptance tests ([`enumerate`],
//! [`suites`]).
//!
//! ```
//! use multiseg::{LineId, HalfInt, Universe, Sign, make_segment, MultiSegment};
//! use multiseg::involution::zelevinsky_dual;
//!
//! let u = Universe::single_self_line("one", 1, Sign::Plus, 0);
//! let m: MultiSegment = [
//!     make_segment(&u, LineId::new("one"), HalfInt::whole(0), HalfInt::whole(2)).unwrap(),
//! ]
//! .into_iter()
//! .collect();
//!
//! let dual = zelevinsky_dual(&m);
//! assert_eq!(dual.to_string(), "[2]@one+[1]@one+[0]@one");
//! assert_eq!(zelevinsky_dual(&dual), m);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `multiseg` binary exposes the same operations with JSON output.

pub mod basechange;
pub mod catalog;
pub mod cli;
pub mod distinction;
pub mod dsl;
pub mod enumerate;
pub mod involution;
pub mod model;
pub mod suites;

pub use model::{
    chi_twist_line, make_segment, Duality, HalfInt, Lattice, LineId, LineSpec, ModelError,
    MultiSegment, RepSpec, Segment, Sign, Universe, UniverseError,
};
