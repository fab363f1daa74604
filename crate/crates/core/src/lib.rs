//! Exact Fock representations of parastatistics algebras.
//!
//! `m` parafermions and `n` parabosons of order `p` generate either the Lie
//! superalgebra osp(2m+1|2n) (relative parafermion relations) or the
//! Z2xZ2-graded Lie superalgebra pso(2m+1|2n) (relative paraboson relations).
//! Both act on the same Fock space, whose basis is labelled by gl(m|n)
//! Gelfand-Zetlin patterns. This crate builds the generator matrices on
//! level-truncated pieces of that space with exact arithmetic in
//! `Q(sqrt 2, sqrt 3, ...)` and checks the defining relations entry by entry.
//!
//! Layers, bottom up:
//!
//! - [`exactnum`]: rational combinations of square roots.
//! - [`gzbasis`]: patterns, truncated bases and weights.
//! - [`isoscalar`], [`reduced`]: Clebsch-Gordan coefficients and reduced
//!   matrix elements, the two factors of every matrix element.
//! - [`fockmodule`]: sparse generator matrices and relation checks.
//! - [`matrixrep`], [`charcount`]: independent oracles (defining matrices,
//!   tableau counts).
//! - [`cli`]: the `parastat` command.
//!
//! ```
//! use parastat::fockmodule::{matrix, FockBasis, GeneratorLabel, Variant};
//! use parastat::gzbasis::Signature;
//!
//! let basis = FockBasis::new(Signature::new(1, 1, 2, 3).unwrap());
//! let f = matrix(&GeneratorLabel::f(1, 1, Variant::Pso), &basis).unwrap();
//! // f+ |0> = sqrt(p) |1>
//! assert_eq!(f.column(basis.vacuum()).len(), 1);
//! ```

pub mod charcount;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod factors;
pub mod fockmodule;
pub mod gzbasis;
pub mod isoscalar;
pub mod matrixrep;
pub mod reduced;
pub mod report;

pub use error::{Error, Result};
