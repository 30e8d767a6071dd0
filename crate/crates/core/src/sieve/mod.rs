//! Symbolic gcd bound, feasible-q scan, exact gcd stage and parameter search.

pub mod bound;
pub mod params;
mod pipeline;

pub use bound::{bound_stage, exact_stage, q_feasible, BoundCertificate, Feasible, PolyBound};
pub use params::{param_search, params_from, DesignParams, ALL_Y};
pub use pipeline::{p_power_divisor, routed_to_special, run_case, run_parabolic};
