//! Exact homological computations over cyclic Nakayama algebras.
//!
//! An algebra is given by its Kupisch series or by an irredundant system of
//! monomial relations. Indecomposable modules are uniserial and are encoded
//! as `(top, length)`; syzygies, projective dimensions, the Δ-filtration and
//! the Igusa-Todorov φ function are all computed combinatorially on that
//! encoding.
//!
//! ```
//! use nakphi::{Algebra, phi_dim};
//!
//! let a = Algebra::from_kupisch(&[3, 5, 4, 5, 4]).unwrap();
//! assert_eq!(a.r(), 2);
//! assert_eq!(phi_dim(&a), 2);
//! ```

pub mod algebra;
pub mod census;
pub mod cli;
pub mod delta;
pub mod error;
pub mod modcat;
pub mod phi;
pub mod theorems;

pub use algebra::{Algebra, ProjectiveClass, Relation};
pub use census::{run_census, sharpness_family, CensusParams, CensusRecord, Summary};
pub use delta::DeltaSystem;
pub use error::{Error, Result};
pub use modcat::{findim, gldim, pdim, syzygy, Dim, UniserialModule};
pub use phi::{omega_periodic, phi, phi_dim, rho, IsoClassSet, PhiEngine, PhiReport, Rho};
pub use theorems::{verify_all, Analysis, CheckResult, Status};
