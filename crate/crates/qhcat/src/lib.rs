//! qhcat: exact-arithmetic analysis of twisted category algebras.
//!
//! Given a finite split category and a 2-cocycle with nonzero rational
//! values, this crate constructs the twisted category algebra over Q,
//! computes its Jacobson radical two independent ways, builds and
//! machine-verifies a heredity chain (a quasi-heredity certificate), and
//! constructs the standard modules with their decomposition matrix.
//!
//! Entry points:
//! - [`generators`] builds the bundled families (transformation monoids,
//!   Temperley–Lieb, Brauer, partition categories) and reads/writes the
//!   category file format;
//! - [`heredity::certify`] runs the full verification pipeline;
//! - [`modrep::standard_modules`] constructs the standard module family;
//! - [`cli`] exposes the `validate`/`analyze`/`certify`/`standard`
//!   subcommands used by the `qhcat` binary.

pub mod algebra;
pub mod category;
pub mod cli;
pub mod cocycle;
pub mod exactla;
pub mod generators;
pub mod green;
pub mod heredity;
pub mod modrep;
