//! Exact symbolic engine for quantum Garnier systems in two variables.
//!
//! Hamiltonians are elements of the localized Weyl algebra in two canonical
//! pairs with coefficients in `Q(h, a1..a6, eta, t1, t2)`. They are obtained
//! from a degree-bounded ansatz by demanding that every catalog canonical
//! transformation keeps the Hamiltonian (or the flow it generates) free of
//! poles, and then checked for commuting flows.

pub mod catalog;
pub mod derive;
pub mod field;
pub mod parse;
pub mod verify;
pub mod weyl;
