//! Integrable structure of the open spin-1 chain: scattering and reflection
//! matrices, transfer matrices, the Hamiltonian, and the identity suite that
//! verifies the construction.

pub mod hamiltonian;
pub mod identities;
pub mod kmatrix;
pub mod params;
pub mod qdet;
pub mod rmatrix;
pub mod spin;
pub mod transfer;

pub use hamiltonian::{hamiltonian, hamiltonian_from_transfer, total_sz};
pub use identities::{IdentityCheck, IdentityReport, run_identity_suite};
pub use kmatrix::{k_half, k_half_minus, k_half_plus, k_minus_1, k_plus_1};
pub use params::ModelParams;
pub use qdet::{a1, d1, delta1};
pub use rmatrix::{flip, permutation33, r11, r_half_one, r_one_half, swap_conjugate};
pub use spin::{SpinOperators, pauli};
pub use transfer::{TransferKind, apply_transfer, transfer, transfer_expectation};
