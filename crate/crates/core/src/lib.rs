//! Decomposition of three-fermion wave functions into Pauli shapes and their
//! bosonic coefficients, plus an explicitly correlated Gaussian solver for the
//! lowest lithium quartet state used to exercise it.

pub mod decompose;
pub mod density;
pub mod ecg;
pub mod harmonics;
pub mod ringcore;
pub mod rng;
pub mod shapes;
pub mod symgroup;
pub mod tables;

pub use ringcore::{Axis, Perm3, PermPair, Poly9, Variable, Q};
