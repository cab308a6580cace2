//! Exact-integer polynomial arithmetic, Sturm chains, Sylvester
//! resultants, and radical elimination.
//!
//! Floating point never enters a sign decision here: coefficients are
//! arbitrary-precision integers and interval endpoints are exact
//! rationals, so root counts are proofs rather than estimates.

mod poly;
mod radicals;
mod resultant;
mod sturm;

pub use poly::ExactPolynomial;
pub use radicals::{
    c1_roots, eliminate_radicals_c1, radical_expression, C1RootReport, RadicalElimination,
    FILTER_RESIDUAL_TOL,
};
pub use resultant::{bareiss_determinant, sylvester_resultant, BivariatePoly, Var};
pub use sturm::{
    isolate_and_refine, isolate_roots, rational_to_f64, sturm_count, IsolatingInterval, SturmChain,
};
