//! Primary, colon and irreducible decompositions.

pub mod irreducible;
pub mod primary;

pub use irreducible::{
    borel_irreducible_split, irreducible_decomposition, principal_split, principal_split_at,
    q_irreducible_decomposition, q_irreducible_expand, ExtNat, IrreducibleComponent, QIrreducible,
};
pub use primary::{
    associated_primes, colon_representation, primary_to_product, principal_primary_decomposition,
    product_to_primary, ColonRepresentation, PrimePowerIntersection, SignedPrimeExponents,
};
