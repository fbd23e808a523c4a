//! Fixed-point formulas for automorphisms of prime order on compact complex
//! surfaces.
//!
//! For σ of odd prime order p with isolated fixed points of type `1/p(1,i)`
//! (counted by `r_i`) and fixed curves `R_j`, the Galois-averaged
//! holomorphic formula reads
//!
//! ```text
//! (1/(p−1)) Σ_i Σ_j (−1)^j Tr(σ^i | H^j(O)) = Σ_i a_i r_i + Σ_j {(1 − g_j)/2 + (p+1)R_j²/12}
//! ```
//!
//! with `a_i = (1/(p−1)) Σ_j 1/((1 − ζ^j)(1 − ζ^{ij}))`.

mod coefficients;
mod hodge;
mod solver;

pub use coefficients::{a_coeff, a_coefficients, holomorphic_lhs, power_traces};
pub use hodge::{hodge_trace_enumerate, HodgeTraceCase, HodgeTraceQuery};
pub use solver::{
    solve_fixed_points, topological_euler_fixed, CurveComponent, LefschetzProblem,
    LefschetzSolution,
};
