//! Frobenius numbers of numerical semigroups with two and three generators.
//!
//! The closed form for three generators works on the lattice picture of a
//! coprime pair `(a, b)`: red points below the x-axis carry the exceptional
//! third generators, and the Frobenius number of `⟨a, b, c⟩` is the value of
//! a candidate point found from the decomposition `c = l·b − h·a`. An
//! Apéry-table oracle provides independent ground truth, and [`audit`] runs
//! the two against each other.
//!
//! ```
//! use frobenius::engine::closed_form_g3;
//! use frobenius::oracle::{frobenius_oracle, GeneratorSet};
//!
//! assert_eq!(closed_form_g3(13, 51, 152).unwrap(), 444);
//! let gs = GeneratorSet::new([13, 51, 152]).unwrap();
//! assert_eq!(frobenius_oracle(&gs).unwrap(), 444);
//! ```

pub mod arith;
pub mod audit;
pub mod cli;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod region;
pub mod viz;

pub use arith::CoprimePair;
pub use error::{Budget, ErrorClass, FrobError, Result};
