//! Exact computations for cyclic quotients of fake projective planes.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, integer matrices, Smith normal form, Q(ζ_p).
//! * [`singularity`]: `1/n(1,q)` germs, Hirzebruch–Jung chains, discrepancies.
//! * [`ledger`]: K²/Euler/Betti bookkeeping for a surface and its resolution.
//! * [`cover`]: invariant transport along cyclic covers, discriminant
//!   certificates, monomial quotients of the projective plane.
//! * [`lefschetz`]: holomorphic and topological fixed-point formulas.
//! * [`fibration`]: Kodaira fibres, configuration enumeration, base change.
//!
//! Everything is exact; there is no floating point in the crate.

pub mod cover;
pub mod error;
pub mod exact;
pub mod fibration;
pub mod ledger;
pub mod lefschetz;
mod serde_util;
pub mod singularity;

pub use error::Error;
pub use exact::{CyclotomicElement, IntMatrix, Rational, SmithForm};
pub use ledger::SurfaceLedger;
pub use singularity::{CyclicQuotientSingularity, ExceptionalChain};
