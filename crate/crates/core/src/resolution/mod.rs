//! Free resolutions, Betti numbers and homological invariants.

pub mod betti;
pub mod complex;
pub mod cone;
pub mod ek;
pub mod invariants;
pub mod koszul;
pub mod linalg;
pub mod lq;
pub mod taylor;
pub mod truncated;
pub mod verify;
pub mod yborel;

pub use betti::{BettiTable, MultiBetti};
pub use complex::{BasisSymbol, Coeff, Entry, FreeComplex, Label};
pub use cone::{cancel_units, mapping_cone};
pub use ek::{beg_end, ek_resolution};
pub use invariants::{codim_principal, is_cohen_macaulay, pdim_principal, CmCase};
pub use koszul::{koszul_betti, lcm_lattice};
pub use lq::{linear_quotients, lq_betti, lq_projective_dimension, lq_resolution, GeneratorOrder};
pub use taylor::taylor_resolution;
pub use truncated::{truncated_resolution, TruncatedOptions};
pub use verify::{verify_complex, Certificate, Failure, VerifyMode};
pub use yborel::{y_resolution, y_resolution_cone, y_resolution_formula, PowerMismatch, YConstruction};
