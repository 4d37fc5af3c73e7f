//! Exact symbolic contact geometry on the Darboux model of `ℝ^{2n+1}`.
//!
//! Every scalar is an exact rational function of the coordinates
//! `x_1..x_n, y_1..y_n, z`, so the identities of contact geometry (the
//! Hamiltonian correspondence, the Lagrange bracket, the splitting of vector
//! fields into contact and tangent parts, the tangent-field pairing and
//! tensor-density actions) can be checked with zero tolerance.

pub mod algebra;
pub mod cli;
pub mod contact;
pub mod exterior;
pub mod verify;
