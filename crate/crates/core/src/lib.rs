//! Exact computational checks for Plücker ideals of the Grassmannian of lines,
//! their elimination ideals, and the lattice, graph and arc combinatorics that
//! describe them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, monomials, polynomials and monomial orders.
//! * [`groebner`]: division, S-polynomials, Buchberger, elimination.
//! * [`lattice`]: the lattice `L_n`, the poset `Π_n` and their sublattices.
//! * [`graphs`]: graphs `G_L`, interval systems and the Gorenstein count.
//! * [`plucker`]: Plücker quadrics and cubics, straightening, Stanley–Reisner.
//! * [`arcs`]: nested arc arrangements and their binary trees.
//! * [`verify`]: named, reproducible checks with JSON-serialisable reports.

pub mod arcs;
pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod graphs;
pub mod groebner;
pub mod lattice;
pub mod plucker;
pub mod verify;

pub use error::{Error, Result};
