//! Randomized algebraic invariants of the polynomial ring, the divided
//! difference operators, and the shape machinery.

use flagged_groth::jacobi_trudi::jt_determinant_straight;
use flagged_groth::poly::{Monomial, Polynomial, TruncationPolicy};
use flagged_groth::shape::{FlaggedShape, Partition};
use flagged_groth::tableau::tableau_sum;
use proptest::prelude::*;

fn beta() -> Polynomial {
    Polynomial::beta()
}

/// Random sparse polynomials in up to `vars` variables.
fn poly(vars: usize, terms: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (
            0u32..3,
            proptest::collection::vec(0u16..3, vars),
            (-5i64..=5).prop_filter("nonzero coefficient", |c| *c != 0),
        ),
        0..terms,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(b, xs, c)| (Monomial::new(b, &xs), c)),
        )
    })
}

/// Random polynomials homogeneous of the given graded degree (`b` counts as
/// degree -1), in up to four variables.
fn homogeneous(degree: u32) -> impl Strategy<Value = Polynomial> {
    let term = (0u32..3).prop_flat_map(move |b| {
        (
            Just(b),
            proptest::collection::vec(0usize..4, (degree + b) as usize),
            (-5i64..=5).prop_filter("nonzero coefficient", |c| *c != 0),
        )
    });
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(b, slots, c)| {
            let mut exps = [0u16; 4];
            for slot in slots {
                exps[slot] += 1;
            }
            (Monomial::new(b, &exps), c)
        }))
    })
}

/// Random small straight flagged shapes (partitions in a 2x2 box, flags up
/// to 3), filtered by shape validity.
fn small_shape() -> impl Strategy<Value = FlaggedShape> {
    proptest::collection::vec((0u32..3, 1u32..4), 0..3).prop_filter_map(
        "valid flagged shape",
        |pairs| {
            let mut parts: Vec<u32> = pairs.iter().map(|p| p.0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let mut flag: Vec<u32> = pairs.iter().map(|p| p.1).collect();
            flag.sort_unstable();
            let lambda = Partition::new(parts).ok()?;
            flag.truncate(lambda.len());
            FlaggedShape::new(lambda, flag).ok()
        },
    )
}

proptest! {
    /// pi_i(f*g) = pi_i(f)*g + s_i(f)*pi_i(g) + b*s_i(f)*g.
    #[test]
    fn twisted_leibniz_rule(f in poly(4, 5), g in poly(4, 5), i in 1usize..=3) {
        let lhs = f.mul(&g).divided_difference(i);
        let si_f = f.transpose(i);
        let rhs = f
            .divided_difference(i)
            .mul(&g)
            .add(&si_f.mul(&g.divided_difference(i)))
            .add(&beta().mul(&si_f).mul(&g));
        prop_assert_eq!(lhs, rhs);
    }

    /// pi_i^2 = -b * pi_i.
    #[test]
    fn squares_act_by_minus_beta(f in poly(4, 5), i in 1usize..=3) {
        let once = f.divided_difference(i);
        prop_assert_eq!(once.divided_difference(i), once.mul(&beta()).negate());
    }

    /// pi_i pi_{i+1} pi_i = pi_{i+1} pi_i pi_{i+1}.
    #[test]
    fn braid_relation(f in poly(4, 5), i in 1usize..=2) {
        let lhs = f.divided_difference(i).divided_difference(i + 1).divided_difference(i);
        let rhs = f.divided_difference(i + 1).divided_difference(i).divided_difference(i + 1);
        prop_assert_eq!(lhs, rhs);
    }

    /// pi_i pi_j = pi_j pi_i whenever |i - j| >= 2.
    #[test]
    fn distant_operators_commute(f in poly(4, 5), i in 1usize..=2, gap in 2usize..=3) {
        let j = i + gap;
        let lhs = f.divided_difference(i).divided_difference(j);
        let rhs = f.divided_difference(j).divided_difference(i);
        prop_assert_eq!(lhs, rhs);
    }

    /// The image of pi_i is symmetric in x_i, x_{i+1}.
    #[test]
    fn images_are_symmetric(f in poly(4, 5), i in 1usize..=3) {
        let h = f.divided_difference(i);
        prop_assert_eq!(h.transpose(i), h);
    }

    /// pi_i sends a polynomial homogeneous of degree d to one of degree
    /// d - 1 (or zero).
    #[test]
    fn operators_lower_the_grading(f in homogeneous(3), i in 1usize..=3) {
        prop_assert!(f.is_homogeneous_of_degree(3));
        let h = f.divided_difference(i);
        prop_assert!(h.is_zero() || h.is_homogeneous_of_degree(2));
    }

    /// Serialization round-trips through JSON.
    #[test]
    fn json_round_trip(f in poly(4, 6)) {
        let json = serde_json::to_string(&f).unwrap();
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    /// Truncated multiplication equals full multiplication then truncation.
    #[test]
    fn truncated_products_agree(f in poly(3, 5), g in poly(3, 5), budget in 0u32..4) {
        prop_assert_eq!(f.mul_truncated(&g, Some(budget)), f.mul(&g).truncate_beta(budget));
    }

    /// The band above a cap is the complement of the truncation below it.
    #[test]
    fn bands_complement_truncations(f in poly(3, 6), lo in 0u32..3, extra in 0u32..3) {
        let hi = lo + extra;
        prop_assert_eq!(f.truncate_beta(lo).add(&f.beta_band(lo, hi)), f.truncate_beta(hi));
    }

    /// eq_modulo_beta agrees with comparing truncations.
    #[test]
    fn equality_modulo_beta_matches_truncation(
        f in poly(3, 5),
        g in poly(3, 5),
        cap in 0u32..4,
    ) {
        prop_assert_eq!(f.eq_modulo_beta(&g, cap), f.truncate_beta(cap) == g.truncate_beta(cap));
    }

    /// Conjugation of partitions is an involution.
    #[test]
    fn conjugation_is_an_involution(parts in proptest::collection::vec(0u32..6, 0..6)) {
        let mut sorted = parts;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(sorted).unwrap();
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
    }

    /// Tableau sums are homogeneous of degree |lambda| and agree with the
    /// determinant at the exact degree bound.
    #[test]
    fn tableau_sums_are_homogeneous_and_match_determinants(shape in small_shape()) {
        let skew = shape.to_skew();
        let sum = tableau_sum(&skew);
        prop_assert!(sum.is_homogeneous_of_degree(skew.box_count() as i64));
        let policy = TruncationPolicy::new(skew.beta_degree_bound(), 2);
        let det = jt_determinant_straight(&shape, &policy);
        prop_assert_eq!(det.value, sum);
        prop_assert!(det.guard_band.is_zero());
    }
}
