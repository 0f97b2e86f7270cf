//! Exact computation of local orbit types for isotropy representations of
//! classical semisimple pseudo-Riemannian symmetric spaces.
//!
//! The crate models restricted root systems of types `A`/`B`/`C`/`D`/`BC`
//! with integer coordinates, enumerates explicit coset representatives for
//! `W(Δ)/W(Δᵃ)`, carries a catalog of the classical symmetric pairs with
//! their hyperbolic principal isotropy subalgebras, runs a Satake-diagram
//! recipe that recomputes those subalgebras from compatible diagram triples,
//! and enumerates the hyperbolic (and, via c-duality, elliptic) local orbit
//! types `h_Θ` family by family.
//!
//! Everything is exact: roots are integer vectors, Weyl elements are signed
//! permutations, Lie algebra values are formal sums of classical factors
//! with a canonical form.

pub mod cosets;
pub mod liealg;
pub mod orbits;
pub mod pairs;
pub mod rootsys;
pub mod satake;
pub mod verify;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
