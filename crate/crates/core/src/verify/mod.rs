//! Machine checks of the trace equality `tr(A*A) = tr(AA*)`, the left and
//! right Cayley-Hamilton identities with matrix coefficients, the sandwich
//! identity `sum A^i lambda_i lambda_j A^j = 0`, conjugation invariance of the
//! `lambda_i`, and the product identity that links them.

pub mod bijection;
mod identities;
mod report;

pub use bijection::{
    check_bijection, delta_literal, delta_map, star_pairs, theta_literal, theta_map, u_term, v_term,
    BijectionError, BijectionSummary, PermutationPair,
};
pub use identities::{
    sandwich_lhs, sandwich_product_identity, sandwich_product_identity_with, verify_invariance,
    verify_prop21, verify_thm22, verify_thm22_with, verify_thm31, verify_thm31_with,
};
pub use report::{Check, Claim, Residual, Stats, Verdict, VerificationReport};
