//! Slow, independently coded reference routes used only for cross-checking.
//!
//! Nothing here shares algorithmic machinery with the production modules:
//! complete homogeneous polynomials are enumerated monomial by monomial, and
//! determinants are expanded over all permutations.  Tests and the
//! certification driver compare production output against these.

use crate::poly::{Monomial, Polynomial};
use crate::shape::{FlaggedShape, Partition};

/// `h_m(x_q, ..., x_p)`: the sum of all monomials of total degree `m` in the
/// window, by direct enumeration.  `h_0 = 1`, and `h_m = 0` for `m < 0` or
/// an empty window with `m > 0`.
pub fn complete_homogeneous(m: i64, q: u32, p: u32) -> Polynomial {
    if m < 0 {
        return Polynomial::zero();
    }
    let mut exps = vec![0u16; p as usize];
    let mut terms: Vec<(Monomial, i64)> = Vec::new();
    fn spread(m: u16, var: u32, p: u32, exps: &mut Vec<u16>, terms: &mut Vec<(Monomial, i64)>) {
        if m == 0 {
            terms.push((Monomial::new(0, exps), 1));
            return;
        }
        if var > p {
            return;
        }
        for here in (0..=m).rev() {
            exps[var as usize - 1] = here;
            spread(m - here, var + 1, p, exps, terms);
        }
        exps[var as usize - 1] = 0;
    }
    spread(m as u16, q, p, &mut exps, &mut terms);
    Polynomial::from_terms(terms)
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn place(n: usize, current: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 1..=n as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                current.push(v);
                place(n, current, used, out);
                current.pop();
                used[v as usize] = false;
            }
        }
    }
    place(n, &mut current, &mut used, &mut out);
    out
}

fn permutation_sign(word: &[u32]) -> i64 {
    let mut inversions = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The classical flagged Jacobi–Trudi determinant
/// `det( h_{lambda_i + j - i}(x_1..x_{f_i}) )_{1 <= i,j <= r}`,
/// expanded over all permutations of the columns.
pub fn classical_flagged_determinant(shape: &FlaggedShape) -> Polynomial {
    let r = shape.rows();
    if r == 0 {
        return Polynomial::one();
    }
    let lambda = shape.lambda();
    let mut det = Polynomial::zero();
    for sigma in all_permutations(r) {
        let mut product = Polynomial::constant(permutation_sign(&sigma));
        for i in 1..=r {
            let m = lambda.part(i) as i64 + sigma[i - 1] as i64 - i as i64;
            product = product.mul(&complete_homogeneous(m, 1, shape.flag()[i - 1]));
            if product.is_zero() {
                break;
            }
        }
        det = det.add(&product);
    }
    det
}

/// Decreasing sort of the Lehmer code `c_i = #{j > i : w(j) < w(i)}`;
/// for a vexillary permutation this is its associated partition.
pub fn sorted_lehmer_code(word: &[u32]) -> Partition {
    let n = word.len();
    let mut code: Vec<u32> = (0..n)
        .map(|i| (i + 1..n).filter(|&j| word[j] < word[i]).count() as u32)
        .collect();
    code.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(code).expect("a sorted code is a partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_homogeneous_pins() {
        assert_eq!(complete_homogeneous(0, 1, 3), Polynomial::one());
        assert_eq!(complete_homogeneous(-2, 1, 3), Polynomial::zero());
        assert_eq!(complete_homogeneous(2, 1, 1).to_string(), "x1^2");
        assert_eq!(
            complete_homogeneous(2, 1, 2).to_string(),
            "x1^2 + x1*x2 + x2^2"
        );
        assert_eq!(complete_homogeneous(1, 2, 3).to_string(), "x2 + x3");
        // Empty window.
        assert_eq!(complete_homogeneous(3, 4, 2), Polynomial::zero());
        // Count of monomials: multiset coefficient C(m + k - 1, m).
        assert_eq!(complete_homogeneous(4, 1, 3).num_terms(), 15);
    }

    #[test]
    fn permutation_helpers() {
        let perms = all_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], vec![1, 2, 3]);
        assert_eq!(perms[5], vec![3, 2, 1]);
        assert_eq!(permutation_sign(&[1, 2, 3]), 1);
        assert_eq!(permutation_sign(&[2, 1, 3]), -1);
        assert_eq!(permutation_sign(&[3, 1, 2]), 1);
    }

    #[test]
    fn lehmer_code_pin() {
        assert_eq!(sorted_lehmer_code(&[2, 3, 5, 4, 1]).parts(), &[2, 1, 1, 1]);
        assert_eq!(sorted_lehmer_code(&[1, 2, 3]).parts(), &[] as &[u32]);
    }
}
