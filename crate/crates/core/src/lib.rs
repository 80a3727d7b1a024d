//! Exact computations with monomial ideals: colon ideals and saturation
//! numbers, irreducible and primary decompositions, ordinary and symbolic
//! powers, and stable ideals.
//!
//! Every closed form for a saturation number in [`sat`] can be cross-checked
//! against [`sat::saturation_chain`], which computes `I : m^k` directly.

pub mod decomp;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod powers;
pub mod sat;
pub mod stability;

pub use decomp::{
    irreducible_decomposition, is_m_primary, minimal_primes, primary_decomposition,
    two_variable_decomposition, two_variable_form, Decomposition, IrreducibleComponent,
    PrimaryComponent,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::Monomial;
pub use powers::{bracket_symbolic_power, compare_powers, symbolic_power_min, PowerComparison};
pub use sat::{
    colon_stable_fast, membership_in_irreducible_power, sat_irreducible_power, sat_stable,
    sat_two_vars, sat_upper_bound, saturation_chain, SaturationReport,
};
pub use stability::{m_index, stability_class, stable_closure, StabilityClass};
