//! Exact rational toolkit for six points in the projective plane: general
//! position, nodal-sextic linear systems, the Schlaefli double six and its
//! association involution, the 3-torsion pencil criterion for nodal
//! sextics, and the Coble invariants of six points with their S6 action.
//!
//! Everything is computed over the rationals; no floating point is used.

pub mod coble;
pub mod double_six;
pub mod error;
pub mod form;
pub mod lattice;
pub mod matrix;
pub mod modp;
pub mod perm;
pub mod plane;
pub mod poly;
pub mod random;
pub mod rational;
pub mod resultant;
pub mod torsion;

pub use error::{Error, Result};
pub use double_six::{second_model, DoubleSixRealization};
pub use form::{TernaryForm, Var};
pub use lattice::{DoubleSix, PicClass};
pub use matrix::Matrix;
pub use perm::Perm;
pub use plane::{Config6, CurveSystem, PointP2};
pub use poly::{BinaryForm, UniPoly};
pub use rational::Rational;
pub use torsion::{certify, NodalSextic, Pencil, TorsionCertificate};
