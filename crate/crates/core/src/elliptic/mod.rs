//! Matching collinear triples from a nodal cubic, and their equivalence with
//! maximally recoverable codes with `r = 3`, `a = 1`, `h = 3`.
//!
//! A progression-free set `B` gives residues mod `N` whose only zero-sum
//! triples are the intended ones. Mapping residues through `k -> g^k` and then
//! onto the smooth points of `(Y - aX)(Y - bX)Z = X^3` turns zero sums into
//! collinear triples.

mod behrend;
mod curve;
mod family;

pub use behrend::{behrend_set, is_ap_free, matching_trisum_set, TriSumSet};
pub use curve::{collinear, curve_phi, det3, phi_inverse, ProjectivePoint, SingularCurve};
pub use family::{
    code_to_triples, matching_collinear_family, smallest_family, triples_to_code, TripleFamily,
    BRUTE_FORCE_LIMIT,
};
