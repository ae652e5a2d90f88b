//! Analysis toolkit for a modified Leslie-Gower predator-prey model with an
//! additive Allee effect on the prey:
//!
//! ```text
//! ẋ = x(1−x) − γxy − βx/(x+α)
//! ẏ = δy(1 − y/(x+η))
//! ```
//!
//! The crate provides exact (rational / quadratic-surd) equilibrium
//! classification, nilpotent-cusp normal forms with codimension detection,
//! Lyapunov focal values at center-type equilibria, and a numerical lane for
//! simulation, boundedness checks and limit-cycle detection.

pub mod algebra;
pub mod equilibria;
pub mod focal;
pub mod model;
pub mod normalform;
pub mod simulate;
pub mod verify;
