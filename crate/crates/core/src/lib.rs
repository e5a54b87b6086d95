//! Monomial ideals that are Borel with respect to a partial order on the variables.
//!
//! For a naturally labeled poset `Q` on `x_1, ..., x_n`, an ideal is Q-Borel when
//! it is closed under replacing a factor `x_j` by any `x_i <_Q x_j`. The chain
//! recovers classical Borel-fixed ideals and the antichain recovers all
//! monomial ideals. This crate computes:
//!
//! - closures, membership (by bipartite matching), minimal Q-generators and
//!   maximal stabilizing posets ([`borel`]);
//! - prime factorizations of principal Q-Borel ideals and their primary,
//!   colon and irreducible decompositions ([`decomp`]);
//! - free resolutions (Taylor, Eliahou-Kervaire, Y-Borel, linear quotients,
//!   truncated mapping cones), Betti tables and an exact verifier
//!   ([`resolution`]);
//! - a small batch language driving all of the above ([`session`]).
//!
//! ```
//! use qborel::{Monomial, Poset, QBorelIdeal};
//!
//! // a < b and a < c
//! let vee = Poset::new(3, [(0, 1), (0, 2)]).unwrap();
//! let i = QBorelIdeal::principal(&vee, &Monomial::new(vec![0, 1, 1])).unwrap();
//! assert_eq!(i.expansion().len(), 4); // bc, ab, ac, a^2
//! ```

pub mod borel;
pub mod decomp;
pub mod error;
pub mod ideal;
pub mod matching;
pub mod mobius;
pub mod monomial;
pub mod oracle;
pub mod poset;
pub mod prime;
pub mod random;
pub mod resolution;
pub mod session;

pub use borel::{PrimeFactorization, QBorelIdeal};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use mobius::PrimeFamily;
pub use monomial::{Monomial, Variables};
pub use poset::Poset;
pub use prime::MonomialPrime;
