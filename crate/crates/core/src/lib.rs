//! Exact combinatorial engine for the Ariki-Koike algebra `H(q; u_1, ..., u_m)`
//! of the complex reflection group `G(m, 1, n)`.
//!
//! Parameters are never floating point. A [`params::ParamScheme`] records the
//! multiplicative order of `q` together with which relations `u_i = q^c u_j`
//! hold, which is all the residue combinatorics depends on. On top of that:
//!
//! - [`combinatorics`]: partitions, multipartitions, nodes and `dim` of the
//!   irreducible characters of `G(m, 1, n)`.
//! - [`simples`]: Kleshchev multipartitions, the `q = 1` criterion and
//!   Ariki's semisimplicity criterion.
//! - [`blocks`]: residue contents and the block partition of Specht modules.
//! - [`structure`]: detection of the almost-semisimple regime (exactly one
//!   fewer simple module than irreducible characters) and the block-level
//!   decomposition, Cartan and Hom data of the exceptional block.
//! - [`bn`]: the basic algebra `B_n` of the exceptional block as a quiver
//!   algebra with integer structure constants.
//! - [`oracle`]: brute-force verifiers, independent of the fast paths.
//! - [`cli`]: the `ariki-koike` command-line surface.

pub mod blocks;
pub mod bn;
pub mod cli;
pub mod combinatorics;
mod error;
pub mod oracle;
pub mod params;
pub mod simples;
pub mod structure;

pub use error::{Error, Result};
