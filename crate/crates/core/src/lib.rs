//! Exact analysis of conditional independence among discrete random
//! variables, centered on the Intersection and Composition properties.
//!
//! Masses are exact rationals; CI statements are decided by exact
//! cross-multiplication. Entropies are floating point and used only for
//! reporting and for the entropy-inequality checks.

pub mod criteria;
pub mod dist;
pub mod error;
pub mod families;
pub mod info;
pub mod scalar;
pub mod structures;
pub mod varset;

pub use dist::{JointDistribution, Outcome, Variable, VariableSchema};
pub use error::{Error, Result};
pub use info::{EntropyProfile, Units, TOLERANCE};
pub use scalar::{Exact, Real};
pub use structures::{CIStatement, CIStructure, Polymatroid};
pub use varset::VarSet;

/// Arbitrary-precision rational masses.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals for small tables; may overflow on long products.
pub type SmallRational = num_rational::Ratio<i64>;

pub type Distribution = JointDistribution<Rational>;
pub type SmallDistribution = JointDistribution<SmallRational>;
pub type RankFunction = Polymatroid<Rational>;

pub type Profile = EntropyProfile<f64>;
pub type Profile32 = EntropyProfile<f32>;
