//! Exact computation of flagged and flagged-skew Grothendieck polynomials.
//!
//! Everything lives in the ring `Z[b][x1, x2, ...]` where the formal
//! parameter `b` has graded degree `-1`.  The crate exposes several
//! independent routes to the same polynomials — set-valued tableau
//! enumeration, Jacobi–Trudi-style determinants of one-row series, divided
//! differences applied to dominant monomials, and a Laurent-coefficient
//! expansion — together with a certification driver that cross-checks the
//! routes against each other over configurable ranges.
//!
//! Module map:
//! - [`poly`]: the polynomial ring, truncation policy, divided differences;
//! - [`shape`]: partitions, flagged and skew flagged shapes, degree bounds;
//! - [`onerow`]: the one-row series `G_m` computed by recurrence, with a
//!   generating-function oracle;
//! - [`tableau`]: flagged set-valued tableau enumeration and weights;
//! - [`jacobi_trudi`]: the determinant route and the Laurent expansion;
//! - [`perm`]: permutation combinatorics, vexillarity, Grothendieck
//!   polynomials by divided differences;
//! - [`certify`]: the cross-checking certification driver.

pub mod certify;
pub mod jacobi_trudi;
pub mod onerow;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod shape;
pub mod tableau;

pub use poly::{generalized_binomial, Coeff, Monomial, Polynomial, TruncationPolicy};
pub use shape::{
    sub_partitions, validate_flagged, validate_skew, FlagMonotonicity, FlaggedShape, Partition,
    ShapeError, SkewFlaggedShape,
};

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(ring, "../../../book/src/ring.md");
    chapter!(shapes, "../../../book/src/shapes.md");
    chapter!(one_row, "../../../book/src/one-row.md");
    chapter!(tableaux, "../../../book/src/tableaux.md");
    chapter!(determinant, "../../../book/src/determinant.md");
    chapter!(permutations, "../../../book/src/permutations.md");
    chapter!(certification, "../../../book/src/certification.md");
}
