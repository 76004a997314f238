//! Exact Sylvester rank functions over concrete rings.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * exact coefficient rings (integers, rationals, prime fields, `Z/n`,
//!   finite group algebras and matrix amplifications) with dense matrices,
//! * Smith normal form, row-space membership and left kernels,
//! * matrix / module / map rank functions and the conversions between them,
//! * finitely presented modules and the submodule calculus,
//! * the bivariant dimension `dim(M1|M2)` and the extended map rank,
//! * transport of rank functions along ring homomorphisms and epimorphisms,
//! * the finite-group sofic dimension used as an independent oracle,
//! * seeded randomized verification harnesses producing [`report::VerificationReport`]s.
//!
//! Matrices follow the row-vector convention: a matrix `A` with `n` rows and
//! `m` columns is the map `R^n -> R^m`, `x |-> xA`, and presents the module
//! `R^m / R^n A`.

#![no_std]

extern crate alloc;

pub mod bivariant;
pub mod error;
pub mod module;
pub mod normal_form;
pub mod rank;
pub mod report;
pub mod ring;
pub mod sampler;
pub mod sofic;
pub mod transport;
pub mod value;

pub use error::{Error, Result};
pub use module::{FpMap, FpModule, Submodule};
pub use rank::{MapRankFn, MatrixRankFn, ModuleRankFn};
pub use report::VerificationReport;
pub use ring::{FiniteGroup, Matrix, Ring, RingHom, Scalar};
pub use sampler::{RandomSampler, SamplerConfig};
pub use value::ExtendedValue;
