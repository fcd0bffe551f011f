//! Extremal curves of the equi-centro-affine arc length on spheres and
//! isoparametric extremal hypersurfaces of the unit sphere.
//!
//! The curve side is organised around the cubic whose roots bound the
//! curvature variable B = κ_g^{−2/3} ([`cubic`]), the progression angle of one
//! curvature period ([`angle`]), and reconstruction of closed curves on the
//! sphere ([`trace`]). [`stability`] covers the second variation and
//! [`classify`] the isoparametric classification.

pub mod angle;
pub mod classify;
pub mod cubic;
pub mod error;
pub mod io;
pub mod par;
pub mod quad;
pub mod specfun;
pub mod stability;
pub mod trace;

pub use angle::{AngleMethod, AngleResult};
pub use cubic::{CubicRoots, CurveParams};
pub use error::{Error, Result};
