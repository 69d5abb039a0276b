//! Partitions, q-analogs, symmetric functions and the Macdonald machinery.

mod basis;
mod character;
mod delta;
mod formulas;
mod hall_littlewood;
mod macdonald;
mod partition;
pub mod qpoly;
pub mod staircase;
pub mod tableaux;

pub use basis::{frobenius_from_characters, Basis, SymFunc};
pub use character::{character_table, irreducible_character, multiplicities_from_characters, CharacterTable};
pub use delta::{delta_prime_e, e_at_cells, e_n_in_macdonald_basis};
pub use formulas::{c_nk_via_syt, hl_identity_rhs};
pub use hall_littlewood::{hall_littlewood_qprime, hall_littlewood_qprime_via_macdonald};
pub use macdonald::{b_cells, b_lambda, filling_stats, modified_macdonald};
pub use partition::Partition;
pub use qpoly::{QTFrac, QTPoly};
