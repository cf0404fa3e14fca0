//! The one-row series `G_m` over a variable window.
//!
//! For `1 <= q <= p`, the polynomial `G_m^{[p/q]}` is the coefficient of
//! `u^m` in the series
//!
//! ```text
//! (1 + b*u^-1)^-1 * prod_{q <= i <= p} (1 + b*x_i) / (1 - x_i*u),
//! ```
//!
//! homogeneous of graded degree `m`.  The window `q = 1` gives the plain
//! one-row series `G_m^{[p]}` in `x1..xp`.
//!
//! The production route is the window recurrence
//!
//! ```text
//! G_m^{[p/q]} = x_q * G_{m-1}^{[p/q]} + (1 + b*x_q) * G_m^{[p/q+1]}
//! ```
//!
//! with the behind-the-window base cases (`q > p`): `G_m = 0` for `m > 0`
//! and `G_{-m} = (-b)^m` for `m >= 0`.  Every product is truncated at the
//! policy budget, which is exact degree-by-degree, and results are memoized
//! per thread keyed by `(m, p, q, budget)`.  The direct generating-function
//! expansion is retained as a slow reference route, [`one_row_series`].

use crate::poly::{Monomial, Polynomial, TruncationPolicy};
use rustc_hash::FxHashMap;
use std::cell::RefCell;
use std::rc::Rc;

/// A request for one coefficient of the one-row series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneRowQuery {
    /// Degree `m` of the requested coefficient (may be negative).
    pub m: i64,
    /// Last variable of the window (`x_p`).
    pub p: u32,
    /// First variable of the window (`x_q`); `q = 1` recovers `G_m^{[p]}`.
    pub q: u32,
    pub policy: TruncationPolicy,
}

/// `G_m^{[p/q]}` truncated at `policy.beta_cap + policy.guard`.
pub fn one_row(query: &OneRowQuery) -> Polynomial {
    one_row_window(query.m, query.p, query.q, query.policy.budget())
}

type WindowMemo = FxHashMap<(i64, u32, u32, u32), Rc<Polynomial>>;

thread_local! {
    static MEMO: RefCell<WindowMemo> = RefCell::new(WindowMemo::default());
}

/// `G_m^{[p/q]}` with all terms of `b`-exponent at most `budget`, by the
/// window recurrence.
pub fn one_row_window(m: i64, p: u32, q: u32, budget: u32) -> Polynomial {
    one_row_memo(m, p, q, budget).as_ref().clone()
}

fn one_row_memo(m: i64, p: u32, q: u32, budget: u32) -> Rc<Polynomial> {
    assert!(p >= 1 && q >= 1, "window bounds are 1-indexed");
    // Every term of G_{-k} carries b-exponent at least k, so sufficiently
    // negative degrees truncate to zero outright.
    if m < 0 && m.unsigned_abs() > budget as u64 {
        return Rc::new(Polynomial::zero());
    }
    if q > p {
        return Rc::new(if m > 0 {
            Polynomial::zero()
        } else {
            let k = m.unsigned_abs() as u32;
            Polynomial::monomial(
                Monomial::beta_power(k),
                if k.is_multiple_of(2) { 1 } else { -1 },
            )
        });
    }
    let key = (m, p, q, budget);
    if let Some(hit) = MEMO.with(|memo| memo.borrow().get(&key).cloned()) {
        return hit;
    }
    let shallower = one_row_memo(m - 1, p, q, budget);
    let narrower = one_row_memo(m, p, q + 1, budget);
    let xq = Polynomial::var(q as usize);
    let one_plus_bxq = Polynomial::one().add(&xq.mul_monomial(&Monomial::beta_power(1), 1));
    let value = Rc::new(
        xq.mul_truncated(&shallower, Some(budget))
            .add(&one_plus_bxq.mul_truncated(&narrower, Some(budget))),
    );
    MEMO.with(|memo| memo.borrow_mut().insert(key, Rc::clone(&value)));
    value
}

/// `G_m^{[p/q]}` by direct expansion of the generating function; the slow
/// reference route used to cross-check [`one_row_window`].
pub fn one_row_series(m: i64, p: u32, q: u32, budget: u32) -> Polynomial {
    assert!(p >= 1 && q >= 1, "window bounds are 1-indexed");
    // The product over the window contributes u-degrees 0..; the prefactor
    // (1 + b*u^-1)^-1 = sum_k (-b)^k u^-k contributes -k with k <= budget.
    let jmax = m + budget as i64;
    if jmax < 0 {
        return Polynomial::zero();
    }
    let jmax = jmax as usize;
    // series[j] = coefficient of u^j in prod_{q <= i <= p} (1+b*x_i)/(1-x_i*u).
    let mut series: Vec<Polynomial> = vec![Polynomial::zero(); jmax + 1];
    series[0] = Polynomial::one();
    for i in q..=p {
        let xi = Polynomial::var(i as usize);
        let one_plus_bxi = Polynomial::one().add(&xi.mul_monomial(&Monomial::beta_power(1), 1));
        // Multiply by the geometric series in x_i*u, highest degree first so
        // lower coefficients are still unconsumed.
        for j in (0..=jmax).rev() {
            let mut acc = Polynomial::zero();
            let mut power = Polynomial::one();
            for t in (0..=j).rev() {
                // power = x_i^{j-t}
                acc = acc.add(&series[t].mul_truncated(&power, Some(budget)));
                if t > 0 {
                    power = power.mul(&xi);
                }
            }
            series[j] = one_plus_bxi.mul_truncated(&acc, Some(budget));
        }
    }
    let mut result = Polynomial::zero();
    for k in 0..=budget {
        let j = m + k as i64;
        if (0..=jmax as i64).contains(&j) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            result = result.add(&series[j as usize].mul_monomial(&Monomial::beta_power(k), sign));
        }
    }
    result.truncate_beta(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    fn b() -> Polynomial {
        Polynomial::beta()
    }

    fn window(m: i64, p: u32, q: u32, budget: u32) -> Polynomial {
        one_row_window(m, p, q, budget)
    }

    #[test]
    fn pinned_values() {
        // Negative degrees collapse to powers of -b for every window.
        for (p, q) in [(1, 1), (3, 1), (2, 3), (4, 2)] {
            let got = window(-3, p, q, 5);
            assert_eq!(
                got,
                Polynomial::monomial(Monomial::beta_power(3), -1),
                "p={p} q={q}"
            );
        }
        // Degree zero is the constant 1 for every window.
        for (p, q) in [(1, 1), (3, 1), (2, 5), (4, 2)] {
            assert_eq!(window(0, p, q, 4), Polynomial::one(), "p={p} q={q}");
        }
        // Single variable: G_m^{[1]} = x1^m.
        assert_eq!(window(2, 1, 1, 4), x(1).mul(&x(1)));
        // Two variables, degree one.
        let expected = &(&x(1) + &x(2)) + &b().mul(&x(1)).mul(&x(2));
        assert_eq!(window(1, 2, 1, 4), expected);
        // Empty window kills positive degrees.
        assert_eq!(window(1, 2, 3, 4), Polynomial::zero());
    }

    #[test]
    fn query_api_truncates_at_cap_plus_guard() {
        let policy = TruncationPolicy::new(1, 1);
        let q = OneRowQuery {
            m: 2,
            p: 3,
            q: 1,
            policy,
        };
        let got = one_row(&q);
        assert_eq!(got, window(2, 3, 1, 4).truncate_beta(2));
        assert_eq!(got.max_beta_exp(), Some(2));
    }

    #[test]
    fn recurrence_matches_series_oracle() {
        for budget in [0u32, 1, 3, 5] {
            for p in 1..=3u32 {
                for q in 1..=p + 1 {
                    for m in -4..=5i64 {
                        assert_eq!(
                            window(m, p, q, budget),
                            one_row_series(m, p, q, budget),
                            "m={m} p={p} q={q} budget={budget}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn homogeneous_of_degree_m() {
        for m in -3..=5i64 {
            for q in 1..=3u32 {
                let g = window(m, 3, q, 4);
                assert!(g.is_homogeneous_of_degree(m), "m={m} q={q}: {g}");
            }
        }
    }

    #[test]
    fn symmetric_in_window_variables() {
        let g = window(3, 3, 1, 4);
        assert_eq!(g.transpose(1), g);
        assert_eq!(g.transpose(2), g);
        let g = window(2, 3, 2, 4);
        assert_eq!(g.transpose(2), g);
        // x1 is outside the window [2,3]; the result must not involve it.
        assert_eq!(g.substitute_zero(1), g);
    }

    #[test]
    fn beta_zero_specializes_to_complete_homogeneous() {
        for m in 0..=4i64 {
            for q in 1..=3u32 {
                for p in q..=4u32 {
                    assert_eq!(
                        window(m, p, q, 3).specialize_beta_zero(),
                        oracle::complete_homogeneous(m, q, p),
                        "m={m} p={p} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn window_recurrence_identity_with_beta_shift() {
        // Two equivalent cleared-denominator forms of the window-narrowing
        // identity, exact on b-degrees <= cap when the inputs carry one
        // degree of guard:
        //   (1 + b*x_q) * (G_{m-1}^{[p/q]} + b*G_m^{[p/q+1]})
        //     = G_{m-1}^{[p/q]} + b*G_m^{[p/q]}
        //   (1 + b*x_q) * (G_m^{[p/q]} - G_m^{[p/q+1]})
        //     = x_q * (G_{m-1}^{[p/q]} + b*G_m^{[p/q]}).
        let (cap, budget) = (4u32, 5u32);
        for (m, p, q) in [
            (1i64, 2u32, 1u32),
            (2, 3, 1),
            (3, 3, 2),
            (0, 2, 2),
            (-1, 3, 1),
        ] {
            let xq = x(q as usize);
            let one_plus_bxq = &Polynomial::one() + &b().mul(&xq);
            let common = window(m - 1, p, q, budget).add(&b().mul(&window(m, p, q, budget)));
            let shifted = one_plus_bxq.mul(&window(m - 1, p, q, budget).add(&b().mul(&window(
                m,
                p,
                q + 1,
                budget,
            ))));
            assert!(
                shifted.eq_modulo_beta(&common, cap),
                "shifted form: m={m} p={p} q={q}"
            );
            let narrowed =
                one_plus_bxq.mul(&window(m, p, q, budget).sub(&window(m, p, q + 1, budget)));
            assert!(
                narrowed.eq_modulo_beta(&xq.mul(&common), cap),
                "narrowed form: m={m} p={p} q={q}"
            );
        }
    }

    #[test]
    fn divided_difference_lowers_the_series() {
        // pi_p(G_m^{[p]}) = G_{m-1}^{[p+1]}, and pi_i acts by -b elsewhere.
        let (cap, budget) = (3u32, 4u32);
        for p in 1..=3u32 {
            for m in -1..=4i64 {
                let g = window(m, p, 1, budget);
                let dropped = g.divided_difference(p as usize);
                assert!(
                    dropped.eq_modulo_beta(&window(m - 1, p + 1, 1, budget), cap),
                    "pi_p on m={m} p={p}"
                );
                for i in 1..p as usize {
                    assert!(
                        g.divided_difference(i)
                            .eq_modulo_beta(&g.mul(&b()).negate(), cap),
                        "pi_{i} on m={m} p={p}"
                    );
                }
                // Any operator beyond the variable support also acts by -b.
                let outside = (p + 1) as usize;
                assert!(g
                    .divided_difference(outside)
                    .eq_modulo_beta(&g.mul(&b()).negate(), cap));
            }
        }
    }

    #[test]
    fn divided_difference_with_symmetric_cofactor() {
        // pi_p(G_m^{[p]} * f) = G_{m-1}^{[p+1]} * f for f symmetric in
        // x_p, x_{p+1}.
        let (cap, budget) = (3u32, 4u32);
        for p in 1..=3u32 {
            let pu = p as usize;
            let sym = &(&x(pu) + &x(pu + 1)) + &x(pu).mul(&x(pu + 1)).scale(2);
            for m in 0..=3i64 {
                let lhs = window(m, p, 1, budget).mul(&sym).divided_difference(pu);
                let rhs = window(m - 1, p + 1, 1, budget).mul(&sym);
                assert!(lhs.eq_modulo_beta(&rhs, cap), "m={m} p={p}");
            }
        }
    }

    #[test]
    fn first_variable_extraction_identity() {
        // (1+b*x1)*G_m^{[p]} - x1*G_{m-1}^{[p]} - x1*b*G_m^{[p]}
        //   = (1+b*x1) * (G_m^{[p]}|_{x1=0}).
        let (cap, budget) = (4u32, 5u32);
        for p in 1..=3u32 {
            for m in -1..=4i64 {
                let g = window(m, p, 1, budget);
                let g_prev = window(m - 1, p, 1, budget);
                let one_plus_bx1 = &Polynomial::one() + &b().mul(&x(1));
                let lhs = one_plus_bx1
                    .mul(&g)
                    .sub(&x(1).mul(&g_prev))
                    .sub(&x(1).mul(&b()).mul(&g));
                let rhs = one_plus_bx1.mul(&g.substitute_zero(1));
                assert!(lhs.eq_modulo_beta(&rhs, cap), "m={m} p={p}");
            }
        }
    }
}
