//! Exact computations with Kazhdan-Lusztig bases of the type A Hecke algebra,
//! Specht modules, and the nonstandard Temperley-Lieb algebra acting on
//! tensor products of two-row Specht modules.

pub mod arith;
pub mod combinatorics;
pub mod linalg;
pub mod hecke;
pub mod specht;
pub mod nonstandard;
pub mod seminormal;
pub mod verify;
