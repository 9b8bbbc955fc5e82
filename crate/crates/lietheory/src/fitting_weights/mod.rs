//! Representations, Fitting decompositions and weight spaces.

mod fitting;
mod rep;
mod weights;

pub use fitting::{fitting_decompose, fitting_trace, mu_component, FittingSplit};
pub use rep::{RepError, Representation};
pub use weights::{
    weight_decomposition, weight_string_identity, WeightError, WeightFunction,
};
