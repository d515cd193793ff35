// SPDX-License-Identifier: Apache-2.0

//! Exact computational geometry of masures.
//!
//! The crate covers Kac-Moody root generating systems and their Weyl groups,
//! the standard apartment with its walls and the finite enclosure map, Tits
//! preorders and λ-paths, finite glued-apartment masure models with
//! retractions and apartment intersections, and the affine order criterion
//! given by the null root.
//!
//! All arithmetic is exact over the rationals.

pub mod affine_order;
pub mod apartment;
pub mod error;
pub mod masure;
pub mod models;
pub mod polyhedron;
pub mod rational;
pub mod root_system;
pub mod serial;
pub mod tits_order;

pub use affine_order::{Certificate, Comparison, DeltaFunctional, Relation};
pub use apartment::{Apartment, HalfSpace, HalfSpaceSet, WallFamily};
pub use error::{Error, Result};
pub use masure::{build_complex, GluedMasure, Gluing, MasurePoint, ModelSpec, SectorGermRef};
pub use rational::{Vector, Q};
pub use root_system::{KacMoodyMatrix, RootGeneratingSystem, WeylElement};
pub use tits_order::{LambdaPath, TitsMembership};
