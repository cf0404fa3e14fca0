//! The determinant route to flagged Grothendieck polynomials.
//!
//! For a flagged skew shape the Jacobi–Trudi style expression is the
//! determinant of the matrix whose `(i, j)` entry is
//!
//! ```text
//! Σ_{s ≥ 0}  C(i−j, s) · β^s · G_{λ_i − μ_j + j − i + s}^{[f_i / g_j]}
//! ```
//!
//! where `C` is the generalized binomial coefficient and `G_m^{[p/q]}` the
//! one-row polynomial in the variable window `x_q..x_p`. The straight case
//! is `μ = 0`, `g = (1,…,1)`. Everything here is computed exactly degree by
//! degree under a [`TruncationPolicy`]: the summation over `s` stops at the
//! β-budget because `β^s` pushes every term at least `s` levels up the
//! β-filtration.
//!
//! [`laurent_expansion_eval`] is an independent evaluator for straight
//! shapes based on a Laurent-series expansion; it shares no code with the
//! determinant beyond the one-row layer and serves as a cross-check oracle.

use std::cell::RefCell;
use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::onerow::one_row_window;
use crate::poly::{generalized_binomial, Coeff, Monomial, Polynomial, TruncationPolicy};
use crate::shape::{FlaggedShape, SkewFlaggedShape};

/// One matrix entry of the determinant expression, truncated at
/// `beta_cap + guard`. Indices `i`, `j` are 1-based and must lie in
/// `1..=shape.rows()`.
///
/// The entry is homogeneous of graded degree `λ_i − μ_j − i + j` on all
/// retained terms.
pub fn jt_entry(i: u32, j: u32, shape: &SkewFlaggedShape, policy: &TruncationPolicy) -> Polynomial {
    let r = shape.rows() as u32;
    assert!(
        (1..=r).contains(&i) && (1..=r).contains(&j),
        "entry index ({i}, {j}) outside 1..={r}"
    );
    let (iu, ju) = (i as usize, j as usize);
    let m0 = i64::from(shape.lambda().part(iu)) - i64::from(shape.mu_part(ju)) + i64::from(j)
        - i64::from(i);
    let diag = i64::from(i) - i64::from(j);
    let p = shape.upper_flag()[iu - 1];
    let q = shape.lower_flag()[ju - 1];
    entry_window(m0, diag, p, q, policy.budget())
}

/// Memoized worker behind [`jt_entry`]. Entries depend on the matrix
/// position only through the leading index `m0`, the diagonal offset
/// `i − j`, and the window `[p/q]`, so distinct shapes (and distinct cells
/// of one matrix) share work across calls on the same thread.
fn entry_window(m0: i64, diag: i64, p: u32, q: u32, budget: u32) -> Polynomial {
    // Cache for one fault epoch (the `u64`) of entry polynomials.
    type EntryMemo = (u64, FxHashMap<(i64, i64, u32, u32, u32), Rc<Polynomial>>);
    thread_local! {
        static MEMO: RefCell<EntryMemo> = RefCell::new((0, FxHashMap::default()));
    }
    MEMO.with(|cell| {
        // Cached entries bake in binomial coefficients, so they are only
        // valid within one fault epoch (see `poly::fault`).
        let memo = &mut *cell.borrow_mut();
        if memo.0 != crate::poly::fault::epoch() {
            memo.0 = crate::poly::fault::epoch();
            memo.1.clear();
        }
        if let Some(hit) = memo.1.get(&(m0, diag, p, q, budget)) {
            return hit.as_ref().clone();
        }
        let mut acc = Polynomial::zero();
        for s in 0..=budget {
            if diag >= 0 && i64::from(s) > diag {
                break;
            }
            let c = generalized_binomial(diag, s);
            if c == 0 {
                continue;
            }
            // β^s · G computed at budget − s is exactly the budget-truncation
            // of the shifted summand.
            let g = one_row_window(m0 + i64::from(s), p, q, budget - s);
            acc = acc.add(&g.mul_monomial(&Monomial::beta_power(s), c));
        }
        memo.1
            .insert((m0, diag, p, q, budget), Rc::new(acc.clone()));
        acc
    })
}

/// The full `r × r` matrix of [`jt_entry`] values for one shape, together
/// with the policy it was truncated under.
#[derive(Clone, Debug)]
pub struct JtMatrix {
    shape: SkewFlaggedShape,
    policy: TruncationPolicy,
    entries: Vec<Polynomial>,
}

impl JtMatrix {
    /// Builds the matrix, checking the row/column homogeneity invariant in
    /// debug builds.
    pub fn new(shape: &SkewFlaggedShape, policy: &TruncationPolicy) -> Self {
        let r = shape.rows();
        let mut entries = Vec::with_capacity(r * r);
        for i in 1..=r as u32 {
            for j in 1..=r as u32 {
                let e = jt_entry(i, j, shape, policy);
                debug_assert!(
                    e.is_homogeneous_of_degree(
                        i64::from(shape.lambda().part(i as usize))
                            - i64::from(shape.mu_part(j as usize))
                            - i64::from(i)
                            + i64::from(j)
                    ),
                    "entry ({i}, {j}) breaks the homogeneity invariant"
                );
                entries.push(e);
            }
        }
        JtMatrix {
            shape: shape.clone(),
            policy: *policy,
            entries,
        }
    }

    /// Number of rows (equivalently columns).
    pub fn size(&self) -> usize {
        self.shape.rows()
    }

    /// The shape the matrix was built from.
    pub fn shape(&self) -> &SkewFlaggedShape {
        &self.shape
    }

    /// The truncation policy the entries were computed under.
    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: u32, j: u32) -> &Polynomial {
        let r = self.size();
        &self.entries[(i as usize - 1) * r + (j as usize - 1)]
    }

    /// Determinant by Laplace expansion along the first column, truncated at
    /// the policy budget. Minors are memoized per call, keyed by the bitmask
    /// of surviving rows (the column block is implied by the popcount); the
    /// empty matrix has determinant one.
    pub fn determinant(&self) -> Polynomial {
        let mut memo: FxHashMap<u32, Polynomial> = FxHashMap::default();
        let full: u32 = if self.size() == 0 {
            0
        } else {
            (1u32 << self.size()) - 1
        };
        self.minor(full, &mut memo)
    }

    fn minor(&self, rows: u32, memo: &mut FxHashMap<u32, Polynomial>) -> Polynomial {
        if rows == 0 {
            return Polynomial::one();
        }
        if let Some(hit) = memo.get(&rows) {
            return hit.clone();
        }
        let r = self.size();
        let col = r - rows.count_ones() as usize;
        let budget = Some(self.policy.budget());
        let mut det = Polynomial::zero();
        let mut pos = 0u32;
        for row in 0..r {
            if rows & (1 << row) == 0 {
                continue;
            }
            let e = &self.entries[row * r + col];
            if !e.is_zero() {
                let sub = self.minor(rows & !(1 << row), memo);
                let term = e.mul_truncated(&sub, budget);
                det = if pos.is_multiple_of(2) {
                    det.add(&term)
                } else {
                    det.sub(&term)
                };
            }
            pos += 1;
        }
        memo.insert(rows, det.clone());
        det
    }
}

/// Result of a determinant evaluation split by the truncation policy:
/// `value` holds the β-degrees up to the cap, `guard_band` the extra
/// β-degrees computed above it (these must vanish whenever the cap is at
/// least the shape's β-degree bound — that is the polynomiality check), and
/// `cap_warning` flags a cap smaller than the bound, in which case `value`
/// is still exact on the retained degrees but not the whole polynomial.
#[derive(Clone, Debug)]
pub struct DeterminantResult {
    pub value: Polynomial,
    pub guard_band: Polynomial,
    pub cap_warning: bool,
}

/// Determinant for a flagged skew shape under the given policy.
pub fn jt_determinant(shape: &SkewFlaggedShape, policy: &TruncationPolicy) -> DeterminantResult {
    let full = JtMatrix::new(shape, policy).determinant();
    DeterminantResult {
        value: full.truncate_beta(policy.beta_cap),
        guard_band: full.beta_band(policy.beta_cap, policy.budget()),
        cap_warning: policy.beta_cap < shape.beta_degree_bound(),
    }
}

/// Determinant for a straight flagged shape (`μ = 0`, `g = (1,…,1)`).
pub fn jt_determinant_straight(
    shape: &FlaggedShape,
    policy: &TruncationPolicy,
) -> DeterminantResult {
    jt_determinant(&shape.to_skew(), policy)
}

/// Independent evaluation of the straight-shape determinant through the
/// Laurent expansion
///
/// ```text
/// Σ_{s ∈ Z^r}  a_s · G_{λ_1+s_1}^{[f_1]} ⋯ G_{λ_r+s_r}^{[f_r]},
/// ```
///
/// where the `a_s` are the coefficients of `∏_{i<j} (1 − t̄_i/t̄_j)` with
/// `t̄ = −t/(1+βt)`, each factor expanded as
/// `1 − Σ_{k≥0} (−β)^k t_i^{k+1} t_j^{−1} − Σ_{k≥0} (−1)^k β^{k+1} t_i^{k+1}`.
///
/// Every monomial of every factor has β-exponent equal to its total
/// t-degree, and that degree never decreases as factors multiply in, so the
/// expansion is truncated at total degree ≤ `beta_cap + guard` exactly. This
/// is a certification oracle, not a performance path: it shares only the
/// one-row layer with [`jt_determinant`] and must agree with it on all
/// retained β-degrees.
pub fn laurent_expansion_eval(shape: &FlaggedShape, policy: &TruncationPolicy) -> Polynomial {
    let r = shape.rows();
    let budget = policy.budget();
    if r == 0 {
        return Polynomial::one();
    }
    // Coefficients of the prefactor product, keyed by the t-exponent vector;
    // the β-exponent is implied (= total t-degree) and therefore not stored.
    let mut coeffs: FxHashMap<Vec<i32>, Coeff> = FxHashMap::default();
    coeffs.insert(vec![0; r], 1);
    for i in 0..r {
        for j in (i + 1)..r {
            let mut next: FxHashMap<Vec<i32>, Coeff> = FxHashMap::default();
            // Zero accumulations are left in place and skipped during the
            // evaluation pass below.
            let mut push = |exps: Vec<i32>, c: Coeff| {
                let slot = next.entry(exps).or_insert(0);
                *slot = slot
                    .checked_add(c)
                    .expect("coefficient overflow in Laurent expansion");
            };
            for (exps, &c) in &coeffs {
                let degree: i32 = exps.iter().sum();
                push(exps.clone(), c);
                let headroom = budget as i32 - degree;
                for k in 0..=headroom {
                    let sign = if k % 2 == 0 { -1 } else { 1 };
                    // −(−β)^k t_i^{k+1} t_j^{−1}: raises total degree by k.
                    let mut e = exps.clone();
                    e[i] += k + 1;
                    e[j] -= 1;
                    push(e, sign * c);
                    // −(−1)^k β^{k+1} t_i^{k+1}: raises total degree by k + 1.
                    if k < headroom {
                        let mut e = exps.clone();
                        e[i] += k + 1;
                        push(e, sign * c);
                    }
                }
            }
            coeffs = next;
        }
    }
    let mut total = Polynomial::zero();
    for (exps, c) in coeffs {
        if c == 0 {
            continue;
        }
        let degree: i32 = exps.iter().sum();
        debug_assert!(degree >= 0, "prefactor monomial with negative β-exponent");
        let inner_budget = budget - degree as u32;
        let mut product = Polynomial::constant(c);
        for (idx, shift) in exps.iter().enumerate() {
            if product.is_zero() {
                break;
            }
            let m = i64::from(shape.lambda().part(idx + 1)) + i64::from(*shift);
            let factor = one_row_window(m, shape.flag()[idx], 1, inner_budget);
            product = product.mul_truncated(&factor, Some(inner_budget));
        }
        total = total.add(&product.mul_monomial(&Monomial::beta_power(degree as u32), 1));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::classical_flagged_determinant;
    use crate::shape::Partition;
    use crate::tableau::tableau_sum;

    fn skew(lambda: &[u32], mu: &[u32], f: &[u32], g: &[u32]) -> SkewFlaggedShape {
        SkewFlaggedShape::new(
            Partition::new(lambda.to_vec()).unwrap(),
            mu.to_vec(),
            f.to_vec(),
            g.to_vec(),
        )
        .unwrap()
    }

    fn straight(lambda: &[u32], f: &[u32]) -> FlaggedShape {
        FlaggedShape::new(Partition::new(lambda.to_vec()).unwrap(), f.to_vec()).unwrap()
    }

    fn policy(cap: u32) -> TruncationPolicy {
        TruncationPolicy::new(cap, 2)
    }

    #[test]
    fn diagonal_entries_are_plain_one_row_polynomials() {
        let shape = skew(&[4, 3, 1], &[2, 1, 0], &[2, 3, 3], &[1, 2, 2]);
        let policy = policy(4);
        for i in 1..=3u32 {
            let expected = one_row_window(
                i64::from(shape.lambda().part(i as usize)) - i64::from(shape.mu_part(i as usize)),
                shape.upper_flag()[i as usize - 1],
                shape.lower_flag()[i as usize - 1],
                policy.budget(),
            );
            assert_eq!(jt_entry(i, i, &shape, &policy), expected);
        }
    }

    #[test]
    fn entries_below_a_split_row_vanish() {
        // mu_k >= lambda_{k+1} forces entry (i, j) = 0 for j <= k < i.
        let shape = skew(&[3, 1], &[2, 0], &[2, 3], &[1, 1]);
        let policy = policy(4);
        assert!(jt_entry(2, 1, &shape, &policy).is_zero());
    }

    #[test]
    fn pinned_first_row_when_flag_is_one() {
        // f_1 = 1 makes row 1 equal to x1^(lambda_1 + j - 1) / (1 + b*x1)^(j-1),
        // i.e. x1^(lambda_1 + j - 1) * sum_s C(1 - j, s) b^s x1^s.
        let shape = straight(&[2, 1], &[1, 3]).to_skew();
        let policy = policy(3);
        for j in 1..=2u32 {
            let mut expected = Polynomial::zero();
            for s in 0..=policy.budget() {
                let c = generalized_binomial(1 - i64::from(j), s);
                let exp = 2 + (j - 1) + s;
                expected = expected.add(&Polynomial::monomial(Monomial::new(s, &[exp as u16]), c));
            }
            assert_eq!(jt_entry(1, j, &shape, &policy), expected, "column {j}");
        }
    }

    #[test]
    fn matrix_entries_are_homogeneous() {
        let shape = skew(&[4, 3, 1, 1], &[2, 2, 1, 0], &[2, 4, 2, 1], &[1, 2, 3, 1]);
        let matrix = JtMatrix::new(&shape, &policy(3));
        for i in 1..=4u32 {
            for j in 1..=4u32 {
                let d = i64::from(shape.lambda().part(i as usize))
                    - i64::from(shape.mu_part(j as usize))
                    - i64::from(i)
                    + i64::from(j);
                assert!(
                    matrix.entry(i, j).is_homogeneous_of_degree(d),
                    "entry ({i}, {j})"
                );
            }
        }
    }

    #[test]
    fn determinant_pins() {
        let one_box = jt_determinant_straight(&straight(&[1], &[1]), &policy(1));
        assert_eq!(one_box.value, Polynomial::var(1));
        assert!(one_box.guard_band.is_zero());
        assert!(!one_box.cap_warning);

        let wide = jt_determinant_straight(&straight(&[1], &[2]), &policy(1));
        let expected = Polynomial::var(1).add(&Polynomial::var(2)).add(
            &Polynomial::beta()
                .mul(&Polynomial::var(1))
                .mul(&Polynomial::var(2)),
        );
        assert_eq!(wide.value, expected);

        let empty = jt_determinant_straight(&straight(&[], &[]), &policy(2));
        assert!(empty.value.is_one());
        assert!(empty.guard_band.is_zero());
    }

    #[test]
    fn straight_determinant_matches_tableau_sum() {
        let shape = straight(&[2, 1], &[2, 4]);
        let bound = shape.to_skew().beta_degree_bound();
        let result = jt_determinant_straight(&shape, &policy(bound));
        assert_eq!(result.value, tableau_sum(&shape.to_skew()));
        assert!(
            result.guard_band.is_zero(),
            "polynomiality: guard band must vanish"
        );
        assert!(!result.cap_warning);
    }

    #[test]
    fn skew_determinant_matches_tableau_sum() {
        for shape in [
            skew(&[4, 3, 1, 1], &[2, 2, 1, 0], &[2, 4, 2, 1], &[1, 2, 3, 1]),
            skew(&[3, 2], &[1, 0], &[3, 3], &[1, 2]),
            skew(&[2, 2, 1], &[1, 1, 0], &[2, 2, 3], &[1, 1, 1]),
        ] {
            let result = jt_determinant(&shape, &policy(shape.beta_degree_bound()));
            assert_eq!(result.value, tableau_sum(&shape), "shape {shape}");
            assert!(result.guard_band.is_zero(), "shape {shape}");
        }
    }

    #[test]
    fn low_cap_is_exact_on_retained_degrees_and_warns() {
        let shape = straight(&[2, 1], &[2, 4]).to_skew();
        let result = jt_determinant(&shape, &policy(2));
        assert!(result.cap_warning);
        assert_eq!(result.value, tableau_sum(&shape).truncate_beta(2));
    }

    #[test]
    fn split_row_factorizes_determinant() {
        let whole = skew(&[3, 1], &[1, 0], &[2, 2], &[1, 1]);
        let top = skew(&[3], &[1], &[2], &[1]);
        let bottom = skew(&[1], &[0], &[2], &[1]);
        let policy = policy(whole.beta_degree_bound());
        let product = jt_determinant(&top, &policy)
            .value
            .mul(&jt_determinant(&bottom, &policy).value)
            .truncate_beta(policy.beta_cap);
        assert_eq!(jt_determinant(&whole, &policy).value, product);
    }

    #[test]
    fn lower_flag_recursion_on_determinants() {
        // Same hypotheses as the tableau-route test: g_k < g_{k+1} (or k = r),
        // mu_k < lambda_k, mu_{k-1} > mu_k (or k = 1), g_k <= f_k.
        let lambda = &[3, 2];
        let (mu, f, g) = (vec![1u32, 0], vec![3u32, 3], vec![1u32, 2]);
        let shape = skew(lambda, &mu, &f, &g);
        let deeper = skew(lambda, &[2, 0], &f, &g);
        let raised = skew(lambda, &mu, &f, &[2, 2]);
        let cap = shape.beta_degree_bound();
        let policy = policy(cap);
        let xg = Polynomial::var(1);
        let lhs = jt_determinant(&shape, &policy).value;
        let rhs = xg
            .mul(&jt_determinant(&deeper, &policy).value)
            .add(
                &Polynomial::one()
                    .add(&Polynomial::beta().mul(&xg))
                    .mul(&jt_determinant(&raised, &policy).value),
            )
            .truncate_beta(cap);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lower_flag_bump_invariance_on_determinants() {
        // g_{k-1} = g_k and mu_{k-1} = mu_k: bumping g_k leaves the
        // determinant unchanged.
        let shape = skew(&[2, 2], &[0, 0], &[2, 3], &[1, 1]);
        let bumped = skew(&[2, 2], &[0, 0], &[2, 3], &[1, 2]);
        let policy = policy(shape.beta_degree_bound());
        assert_eq!(
            jt_determinant(&shape, &policy).value,
            jt_determinant(&bumped, &policy).value
        );
    }

    #[test]
    fn incompatible_flags_give_zero_determinant() {
        // f_k < g_k with mu_k < lambda_k annihilates the polynomial.
        let shape = skew(&[3, 1], &[2, 0], &[5, 1], &[9, 1]);
        let result = jt_determinant(&shape, &policy(3));
        assert!(result.value.is_zero());
        assert!(result.guard_band.is_zero());
        assert!(tableau_sum(&shape).is_zero());
    }

    #[test]
    fn first_row_divided_difference_shifts_the_shape() {
        // lambda_1 > lambda_2 and f_1 < f_2: applying the divided difference
        // at f_1 trades one box of row 1 for one more column of flag. The
        // comparison consumes one guard degree.
        let shape = straight(&[2, 1], &[2, 4]);
        let image = straight(&[1, 1], &[3, 4]);
        let cap = shape.to_skew().beta_degree_bound();
        let policy = policy(cap);
        let lhs = jt_determinant_straight(&shape, &policy)
            .value
            .add(&jt_determinant_straight(&shape, &policy).guard_band)
            .divided_difference(2);
        let rhs = jt_determinant_straight(&image, &policy).value;
        assert!(lhs.eq_modulo_beta(&rhs, cap));
    }

    #[test]
    fn pinned_first_flag_factors_out_of_determinant() {
        // f_1 = 1: the polynomial is x1^(lambda_1) times the rest of the
        // shape evaluated at x1 = 0.
        let shape = straight(&[2, 1], &[1, 3]);
        let tail = straight(&[1], &[3]);
        let policy = policy(2);
        let lhs = jt_determinant_straight(&shape, &policy).value;
        let rhs = jt_determinant_straight(&tail, &policy)
            .value
            .substitute_zero(1)
            .mul_monomial(&Monomial::new(0, &[2]), 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_expansion_is_the_single_one_row_polynomial_for_one_row() {
        let shape = straight(&[3], &[2]);
        let policy = policy(3);
        assert_eq!(
            laurent_expansion_eval(&shape, &policy),
            one_row_window(3, 2, 1, policy.budget())
        );
    }

    #[test]
    fn laurent_expansion_matches_determinant() {
        for (lambda, f) in [
            (vec![2u32, 1], vec![2u32, 4]),
            (vec![2, 2], vec![1, 2]),
            (vec![3, 1, 1], vec![2, 3, 3]),
        ] {
            let shape = straight(&lambda, &f);
            let cap = shape.to_skew().beta_degree_bound();
            let policy = policy(cap);
            let via_laurent = laurent_expansion_eval(&shape, &policy).truncate_beta(cap);
            let via_det = jt_determinant_straight(&shape, &policy).value;
            assert_eq!(via_laurent, via_det, "lambda {lambda:?} f {f:?}");
        }
    }

    #[test]
    fn laurent_expansion_at_beta_zero_matches_classical_determinant() {
        for (lambda, f) in [(vec![2u32, 1], vec![2u32, 3]), (vec![2, 2], vec![2, 2])] {
            let shape = straight(&lambda, &f);
            let policy = policy(shape.to_skew().beta_degree_bound());
            assert_eq!(
                laurent_expansion_eval(&shape, &policy).specialize_beta_zero(),
                classical_flagged_determinant(&shape),
                "lambda {lambda:?} f {f:?}"
            );
        }
    }
}
