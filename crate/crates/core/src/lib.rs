//! Exact arithmetic toolkit for rational nilpotent Lie algebras: structure
//! constants, isomorphism invariants (type, Pfaffian form, Hessian, abelian
//! factor, Scheuneman dual), explicit Anosov automorphisms, and certificates
//! for hyperbolicity and unimodularity. No floating point is used anywhere in
//! a verdict path; numeric root finding appears only inside test oracles.

pub mod anosov;
pub mod construct;
pub mod doc;
pub mod exact;
pub mod forms;
pub mod lie;

pub use anosov::{AnosovCertificate, Signature, VerifyOutcome};
pub use construct::{catalog, ConstructError};
pub use doc::{AlgebraDocument, DocError, MatrixDocument, ReportBundle, ReportRow};
pub use exact::{Integer, Rational};
pub use forms::HomogeneousForm;
pub use lie::{LieAlgebra, LieError, Subspace, TypeTuple};
