//! Palindromic discontinuous Galerkin (PDG) solver for systems of
//! conservation laws.
//!
//! The system is rewritten as a kinetic relaxation model: a set of linear
//! transport equations at constant lattice velocities, coupled through a
//! stiff BGK source that drives the distribution toward a local equilibrium.
//! Transport is discretized by an upwind nodal Gauss-Lobatto DG scheme on an
//! affine Cartesian mesh. Because of upwinding, the implicit transport matrix
//! is block-triangular once the cells are visited in topological order of
//! the per-velocity dependency graph, so implicit (CFL-less) stepping costs
//! the same as an explicit sweep. Time integration composes time-symmetric
//! transport/relaxation factors into a palindrome, which stays second order
//! in the stiff limit `tau -> 0` and is raised to orders 4 and 6 by Suzuki
//! and Kahan-Li composition.
//!
//! Crate map:
//! - [`quadrature`]: Gauss-Lobatto nodes, weights and differentiation matrix.
//! - [`mesh`]: affine Cartesian meshes with fictitious boundary cells.
//! - [`graph`]: per-velocity dependency graph, topological ordering, DOT export.
//! - [`transport`]: the DG transport generator, triangular implicit solver and
//!   the Crank-Nicolson transport factors.
//! - [`system`]: macroscopic systems (isothermal Euler, ideal MHD).
//! - [`kinetic`]: kinetic models (vectorial, D1Q3, D2Q9) and the model catalog.
//! - [`diagnostics`]: Chapman-Enskog diffusion tensor, entropy dissipation
//!   tensor and the sub-characteristic test.
//! - [`splitting`]: relaxation/source factors, the symmetric second-order step
//!   and palindromic composition.
//! - [`scenarios`]: initial data, exact references and error norms.
//! - [`convergence`]: refinement studies and slope fits.
//! - [`snapshot`]: state snapshot files.

pub mod convergence;
pub mod diagnostics;
pub mod error;
pub mod graph;
pub mod kinetic;
pub mod mesh;
pub mod parallel;
pub mod quadrature;
pub mod riemann;
pub mod scenarios;
pub mod snapshot;
pub mod splitting;
pub mod state;
pub mod system;
pub mod transport;

pub use error::{Error, Result};
pub use kinetic::KineticModel;
pub use mesh::CartesianMesh;
pub use parallel::Parallelism;
pub use quadrature::GaussLobatto;
pub use splitting::{SchemeKind, SplittingScheme, StepContext};
pub use state::State;
pub use system::System;
