//! Permutations and their Grothendieck polynomials.
//!
//! This module computes Grothendieck polynomials by the divided-difference
//! recursion from the longest element, extracts the diagram, essential set,
//! shape and flagging sets of a vexillary (2143-avoiding) permutation, and
//! provides the closed monomial formula for straight flagged shapes. The
//! bridge between the two worlds: for vexillary `w`, the Grothendieck
//! polynomial equals the flagged tableau sum of `(λ(w), f(w))`, for every
//! admissible flagging.

use std::cell::RefCell;
use std::rc::Rc;

use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial};
use crate::shape::{FlaggedShape, Partition};

/// Rejection reasons for malformed one-line notation.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("empty permutation word")]
    Empty,
    #[error("word of length {n} is not a bijection on 1..={n}")]
    NotBijection { n: usize },
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates one-line notation: `word` must be a bijection on `1..=n`
    /// where `n = word.len()`.
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        if word.is_empty() {
            return Err(PermError::Empty);
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(PermError::NotBijection { n });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity element of `S_n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// The longest element `w₀ = (n, n−1, …, 1)` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    /// Ambient symmetric-group rank `n`.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// One-line notation `(w(1), …, w(n))`.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Image `w(i)` of a 1-based position.
    pub fn apply(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u32; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> u32 {
        let mut count = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` with `w(i) > w(i+1)`, 1-based.
    pub fn descents(&self) -> Vec<u32> {
        (1..self.n() as u32)
            .filter(|&i| self.word[i as usize - 1] > self.word[i as usize])
            .collect()
    }

    /// Smallest position `i` with `w(i) < w(i+1)`; `None` exactly for the
    /// longest element.
    pub fn smallest_ascent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.word[i - 1] < self.word[i])
    }

    /// Right multiplication by the adjacent transposition `s_i`: swaps the
    /// entries at positions `i` and `i + 1`.
    pub fn swap_adjacent(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    fn is_longest(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == self.n() - i)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A box `(row, col)` of the `n × n` grid, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GridBox {
    pub row: u32,
    pub col: u32,
}

/// The rank function: the number of `i ≤ p` with `w(i) ≤ q`.
pub fn rank_function(w: &Permutation, p: u32, q: u32) -> u32 {
    (1..=p).filter(|&i| w.apply(i) <= q).count() as u32
}

/// The diagram of `w`: boxes `(p, q)` with `w(p) > q` and `w⁻¹(q) > p`,
/// sorted by row then column. Its size is the Coxeter length.
pub fn diagram(w: &Permutation) -> Vec<GridBox> {
    let inv = w.inverse();
    let n = w.n() as u32;
    let mut boxes = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            if w.apply(p) > q && inv.apply(q) > p {
                boxes.push(GridBox { row: p, col: q });
            }
        }
    }
    boxes
}

/// The essential set: diagram boxes whose south and east neighbors both lie
/// outside the diagram.
pub fn essential_set(w: &Permutation) -> Vec<GridBox> {
    let boxes = diagram(w);
    let set: rustc_hash::FxHashSet<GridBox> = boxes.iter().copied().collect();
    boxes
        .into_iter()
        .filter(|b| {
            !set.contains(&GridBox {
                row: b.row + 1,
                col: b.col,
            }) && !set.contains(&GridBox {
                row: b.row,
                col: b.col + 1,
            })
        })
        .collect()
}

/// Whether `w` avoids the pattern 2143: no `a < b < c < d` with
/// `w(b) < w(a) < w(d) < w(c)`. Brute force; all supported workflows have
/// `n ≤ 8`.
pub fn is_vexillary(w: &Permutation) -> bool {
    let n = w.n();
    let v = w.word();
    for a in 0..n {
        for b in (a + 1)..n {
            if v[b] >= v[a] {
                continue;
            }
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if v[a] < v[d] && v[d] < v[c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The partition whose diagonal counts match those of `diagram(w)`; defined
/// for vexillary `w`.
///
/// The reconstruction goes through Frobenius coordinates: the count on
/// diagonal 0 is the Durfee square side, counts on positive diagonals
/// determine the arm lengths, counts on negative diagonals the leg lengths.
///
/// # Panics
///
/// Panics with an internal-consistency fault if the counts are not
/// realizable by a partition — the signal that a non-vexillary input
/// slipped through the caller's check.
pub fn shape_lambda(w: &Permutation) -> Partition {
    let boxes = diagram(w);
    let mut counts: FxHashMap<i64, u32> = FxHashMap::default();
    for b in &boxes {
        *counts
            .entry(i64::from(b.col) - i64::from(b.row))
            .or_insert(0) += 1;
    }
    let durfee = counts.get(&0).copied().unwrap_or(0);
    if durfee == 0 {
        assert!(
            boxes.is_empty(),
            "internal consistency fault: diagram diagonals of {w} are not realizable by a partition"
        );
        return Partition::empty();
    }
    let level = |k: i64| counts.get(&k).copied().unwrap_or(0);
    let mut parts: Vec<u32> = Vec::new();
    // Rows through the Durfee square: λ_i = i + (largest k ≥ 0 with d_k ≥ i).
    for i in 1..=durfee {
        let arm = (1..).take_while(|&k| level(k) >= i).count() as u32;
        parts.push(i + arm);
    }
    // Column lengths through the Durfee square determine the remaining rows.
    let col_len: Vec<u32> = (1..=durfee)
        .map(|j| {
            let leg = (1..).take_while(|&k| level(-k) >= j).count() as u32;
            j + leg
        })
        .collect();
    for i in (durfee + 1).. {
        let row = col_len.iter().filter(|&&len| len >= i).count() as u32;
        if row == 0 {
            break;
        }
        parts.push(row);
    }
    let lambda = Partition::new(parts).unwrap_or_else(|_| {
        panic!(
            "internal consistency fault: diagram diagonals of {w} are not realizable by a partition"
        )
    });
    // Re-derive every diagonal count from the reconstruction and compare.
    let mut check: FxHashMap<i64, u32> = FxHashMap::default();
    for (i, &part) in lambda.parts().iter().enumerate() {
        for j in 1..=part {
            *check.entry(i64::from(j) - (i as i64 + 1)).or_insert(0) += 1;
        }
    }
    assert!(
        check == counts,
        "internal consistency fault: diagram diagonals of {w} are not realizable by a partition"
    );
    lambda
}

/// A flagging set of a vexillary permutation: boxes `(p_i, q_i)`, one per
/// row of `λ(w)`, with rows weakly increasing, columns weakly decreasing,
/// `p_i − r_w(p_i, q_i) = i`, containing the essential set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlaggingSet {
    boxes: Vec<GridBox>,
}

impl FlaggingSet {
    /// The boxes, indexed `i = 1..=r`.
    pub fn boxes(&self) -> &[GridBox] {
        &self.boxes
    }

    /// The flag vector `f_i = p_i` (row indices).
    pub fn flag(&self) -> Vec<u32> {
        self.boxes.iter().map(|b| b.row).collect()
    }
}

/// All flagging sets of a vexillary `w`, sorted so that the canonical choice
/// — the lexicographically smallest flag vector — comes first.
///
/// The search is an exhaustive depth-first scan of the grid: each essential
/// box is pinned to the index forced by the rank condition, the remaining
/// indices range over all grid boxes satisfying it, and the row/column
/// monotonicity prunes the walk. Every returned set is checked to express
/// the shape via `λ_i = q_i − p_i + i`.
///
/// # Panics
///
/// Panics with an internal-consistency fault if no set exists or a found
/// set fails the shape equation; neither can happen for vexillary input.
pub fn flagging_sets(w: &Permutation) -> Vec<FlaggingSet> {
    let lambda = shape_lambda(w);
    let r = lambda.len();
    let n = w.n() as u32;
    if r == 0 {
        return vec![FlaggingSet { boxes: Vec::new() }];
    }
    // Index forced on each box by the rank condition, and the essential
    // boxes that pin their index outright.
    let mut candidates: Vec<Vec<GridBox>> = vec![Vec::new(); r + 1];
    for p in 1..=n {
        for q in 1..=n {
            let idx = i64::from(p) - i64::from(rank_function(w, p, q));
            if (1..=r as i64).contains(&idx) {
                candidates[idx as usize].push(GridBox { row: p, col: q });
            }
        }
    }
    let mut pinned: Vec<Option<GridBox>> = vec![None; r + 1];
    for b in essential_set(w) {
        let idx = i64::from(b.row) - i64::from(rank_function(w, b.row, b.col));
        assert!(
            (1..=r as i64).contains(&idx) && pinned[idx as usize].replace(b).is_none(),
            "internal consistency fault: essential set of {w} admits no flagging set"
        );
    }
    let mut found: Vec<FlaggingSet> = Vec::new();
    let mut stack: Vec<GridBox> = Vec::new();
    fn descend(
        i: usize,
        r: usize,
        candidates: &[Vec<GridBox>],
        pinned: &[Option<GridBox>],
        stack: &mut Vec<GridBox>,
        found: &mut Vec<FlaggingSet>,
    ) {
        if i > r {
            found.push(FlaggingSet {
                boxes: stack.clone(),
            });
            return;
        }
        let prev = stack.last().copied();
        let fits = |b: GridBox| match prev {
            Some(prev) => b.row >= prev.row && b.col <= prev.col,
            None => true,
        };
        let choices: Vec<GridBox> = match pinned[i] {
            Some(b) => vec![b],
            None => candidates[i].clone(),
        };
        for b in choices {
            if fits(b) {
                stack.push(b);
                descend(i + 1, r, candidates, pinned, stack, found);
                stack.pop();
            }
        }
    }
    descend(1, r, &candidates, &pinned, &mut stack, &mut found);
    assert!(
        !found.is_empty(),
        "internal consistency fault: vexillary {w} has no flagging set"
    );
    for set in &found {
        for (i, b) in set.boxes.iter().enumerate() {
            assert!(
                i64::from(b.col) - i64::from(b.row) + i as i64 + 1 == i64::from(lambda.part(i + 1)),
                "internal consistency fault: flagging set of {w} does not express its shape"
            );
        }
    }
    found.sort_by(|a, b| a.flag().cmp(&b.flag()).then_with(|| a.boxes.cmp(&b.boxes)));
    found
}

/// The flagged shape `(λ(w), f(w))` with the canonical (lexicographically
/// smallest) flag vector.
pub fn canonical_flagged_shape(w: &Permutation) -> FlaggedShape {
    let lambda = shape_lambda(w);
    let flag = flagging_sets(w)[0].flag();
    FlaggedShape::new(lambda, flag)
        .expect("internal consistency fault: canonical flagging is not a valid flagged shape")
}

/// The Grothendieck polynomial of `w ∈ S_n`, an exact polynomial in
/// `x_1..x_{n−1}` of graded degree `ℓ(w)`: the staircase monomial for the
/// longest element, otherwise `π_i` applied along ascents. Memoized per
/// thread; the ascent choice (smallest index) is deterministic, and the
/// result is independent of it.
pub fn grothendieck_polynomial(w: &Permutation) -> Polynomial {
    ddiff_chain(w, false)
}

/// The Schubert polynomial of `w`: the same recursion as
/// [`grothendieck_polynomial`] with the classical divided difference, i.e.
/// the β = 0 operator.
pub fn schubert_polynomial(w: &Permutation) -> Polynomial {
    ddiff_chain(w, true)
}

fn ddiff_chain(w: &Permutation, classical: bool) -> Polynomial {
    type ChainMemo = FxHashMap<(Vec<u32>, bool), Rc<Polynomial>>;
    thread_local! {
        static MEMO: RefCell<ChainMemo> = RefCell::new(ChainMemo::default());
    }
    let key = (w.word().to_vec(), classical);
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit.as_ref().clone();
    }
    let result = if w.is_longest() {
        let n = w.n();
        let exps: Vec<u16> = (1..n).map(|i| (n - i) as u16).collect();
        Polynomial::monomial(Monomial::new(0, &exps), 1)
    } else {
        let i = w
            .smallest_ascent()
            .expect("non-longest permutation has an ascent");
        let longer = ddiff_chain(&w.swap_adjacent(i), classical);
        if classical {
            longer.classical_divided_difference(i)
        } else {
            longer.divided_difference(i)
        }
    };
    MEMO.with(|m| m.borrow_mut().insert(key, Rc::new(result.clone())));
    result
}

/// Applies a divided-difference word to a polynomial, first element first:
/// the word `(i_1, …, i_k)` produces `π_{i_k}(⋯π_{i_1}(p)⋯)`.
///
/// The word need not be reduced for the composition to make sense; when a
/// caller relies on an identity that assumes reducedness, that is the
/// caller's contract.
pub fn pi_word_apply(word: &[usize], p: &Polynomial) -> Polynomial {
    word.iter()
        .fold(p.clone(), |acc, &i| acc.divided_difference(i))
}

/// The closed expression for a straight flagged shape: a starting monomial
/// `x^a` with `a_i = λ_i + f_i − i` and a divided-difference word, the
/// concatenation of the blocks `(i, i+1, …, f_i − 1)` for `i = r down to 1`,
/// applied first element first.
///
/// A straight shape admits a tableau exactly when `f_i ≥ i` for every row
/// (column strictness forces the value `i` into row `i` of the first
/// column). Shapes failing that are recorded as non-viable: their
/// polynomial is zero, the formula does not apply, and the raw exponents
/// may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFormula {
    exponents: Vec<i64>,
    word: Vec<usize>,
    viable: bool,
}

impl MonomialFormula {
    /// Exponents `a_i = λ_i + f_i − i` of the starting monomial.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// The divided-difference word, applied first element first.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Whether the shape admits any tableau (`f_i ≥ i` for all rows).
    pub fn is_viable(&self) -> bool {
        self.viable
    }

    /// Evaluates the formula: zero for non-viable shapes, otherwise the
    /// word applied to the starting monomial.
    pub fn evaluate(&self) -> Polynomial {
        if !self.viable {
            return Polynomial::zero();
        }
        let exps: Vec<u16> = self.exponents.iter().map(|&a| a as u16).collect();
        pi_word_apply(
            &self.word,
            &Polynomial::monomial(Monomial::new(0, &exps), 1),
        )
    }
}

/// Builds the monomial formula data for a straight flagged shape; see
/// [`MonomialFormula`].
pub fn monomial_formula(shape: &FlaggedShape) -> MonomialFormula {
    let r = shape.rows();
    let lambda = shape.lambda();
    let flag = shape.flag();
    let exponents: Vec<i64> = (1..=r)
        .map(|i| i64::from(lambda.part(i)) + i64::from(flag[i - 1]) - i as i64)
        .collect();
    let mut word = Vec::new();
    for i in (1..=r).rev() {
        for j in i..flag[i - 1] as usize {
            word.push(j);
        }
    }
    let viable = (1..=r).all(|i| flag[i - 1] >= i as u32);
    MonomialFormula {
        exponents,
        word,
        viable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{all_permutations, sorted_lehmer_code};
    use crate::tableau::tableau_sum;

    fn perm(word: &[u32]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn basics_pins() {
        let id = Permutation::identity(4);
        assert_eq!(id.length(), 0);
        assert!(id.descents().is_empty());
        assert_eq!(Permutation::longest(4).length(), 6);
        let w = perm(&[2, 3, 5, 4, 1]);
        assert_eq!(w.length(), 5);
        assert_eq!(w.descents(), vec![3, 4]);
        assert_eq!(w.inverse().word(), &[5, 1, 2, 4, 3]);
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn malformed_words_are_rejected() {
        assert_eq!(Permutation::new(vec![]), Err(PermError::Empty));
        assert_eq!(
            Permutation::new(vec![1, 1]),
            Err(PermError::NotBijection { n: 2 })
        );
        assert_eq!(
            Permutation::new(vec![2, 3]),
            Err(PermError::NotBijection { n: 2 })
        );
        assert_eq!(
            Permutation::new(vec![0, 1]),
            Err(PermError::NotBijection { n: 2 })
        );
    }

    #[test]
    fn rank_function_pins() {
        let w = perm(&[2, 3, 5, 4, 1]);
        assert_eq!(rank_function(&w, 3, 4), 2);
        assert_eq!(rank_function(&w, 5, 1), 1);
        assert_eq!(rank_function(&w, 5, 5), 5);
    }

    #[test]
    fn diagram_pins() {
        assert!(diagram(&Permutation::identity(4)).is_empty());
        let w = perm(&[2, 3, 5, 4, 1]);
        let expected: Vec<GridBox> = [(1, 1), (2, 1), (3, 1), (3, 4), (4, 1)]
            .iter()
            .map(|&(row, col)| GridBox { row, col })
            .collect();
        assert_eq!(diagram(&w), expected);
    }

    #[test]
    fn diagram_size_is_coxeter_length() {
        for n in 1..=6 {
            for word in all_permutations(n) {
                let w = perm(&word);
                assert_eq!(diagram(&w).len() as u32, w.length(), "w = {w}");
            }
        }
    }

    #[test]
    fn essential_set_pins() {
        let w = perm(&[2, 3, 5, 4, 1]);
        let expected: Vec<GridBox> = [(3, 4), (4, 1)]
            .iter()
            .map(|&(row, col)| GridBox { row, col })
            .collect();
        assert_eq!(essential_set(&w), expected);
        assert!(essential_set(&Permutation::identity(3)).is_empty());
        for n in 2..=5 {
            let corners: Vec<GridBox> = (1..n as u32)
                .map(|i| GridBox {
                    row: i,
                    col: n as u32 - i,
                })
                .collect();
            assert_eq!(essential_set(&Permutation::longest(n)), corners);
        }
    }

    #[test]
    fn vexillary_detection() {
        assert!(!is_vexillary(&perm(&[2, 1, 4, 3])));
        assert!(is_vexillary(&perm(&[2, 3, 5, 4, 1])));
        assert!(is_vexillary(&Permutation::identity(5)));
        let count = all_permutations(5)
            .into_iter()
            .filter(|word| is_vexillary(&perm(word)))
            .count();
        assert_eq!(count, 103);
    }

    #[test]
    fn shape_pins() {
        assert_eq!(shape_lambda(&perm(&[2, 3, 5, 4, 1])).parts(), &[2, 1, 1, 1]);
        assert!(shape_lambda(&Permutation::identity(4)).is_empty());
        for n in 2..=5 {
            let staircase: Vec<u32> = (1..n as u32).rev().collect();
            assert_eq!(
                shape_lambda(&Permutation::longest(n)).parts(),
                &staircase[..]
            );
        }
    }

    #[test]
    fn shape_matches_sorted_lehmer_code() {
        for n in 2..=5 {
            for word in all_permutations(n) {
                let w = perm(&word);
                if is_vexillary(&w) {
                    assert_eq!(shape_lambda(&w), sorted_lehmer_code(&word), "w = {w}");
                }
            }
        }
    }

    #[test]
    fn flagging_set_pins() {
        let w = perm(&[2, 3, 5, 4, 1]);
        let flags: Vec<Vec<u32>> = flagging_sets(&w).iter().map(|s| s.flag()).collect();
        assert_eq!(
            flags,
            vec![vec![3, 3, 3, 4], vec![3, 3, 4, 4], vec![3, 4, 4, 4]]
        );
        for n in 2..=5 {
            let sets = flagging_sets(&Permutation::longest(n));
            assert_eq!(sets.len(), 1);
            assert_eq!(sets[0].flag(), (1..n as u32).collect::<Vec<_>>());
        }
        let trivial = flagging_sets(&Permutation::identity(3));
        assert_eq!(trivial.len(), 1);
        assert!(trivial[0].boxes().is_empty());
    }

    #[test]
    fn flagging_sets_validate_independently() {
        for word in all_permutations(4) {
            let w = perm(&word);
            if !is_vexillary(&w) {
                continue;
            }
            let ess = essential_set(&w);
            for set in flagging_sets(&w) {
                let boxes = set.boxes();
                for pair in boxes.windows(2) {
                    assert!(pair[0].row <= pair[1].row && pair[0].col >= pair[1].col);
                }
                for (i, b) in boxes.iter().enumerate() {
                    assert_eq!(
                        i64::from(b.row) - i64::from(rank_function(&w, b.row, b.col)),
                        i as i64 + 1
                    );
                }
                for e in &ess {
                    assert!(boxes.contains(e), "w = {w}: essential box missing");
                }
            }
        }
    }

    #[test]
    fn essential_boxes_map_onto_shape_corners() {
        // phi(p, q) = (p − r_w(p,q), q − r_w(p,q)) sends each essential box
        // to a southeast corner of the shape.
        for word in all_permutations(5) {
            let w = perm(&word);
            if !is_vexillary(&w) {
                continue;
            }
            let lambda = shape_lambda(&w);
            for b in essential_set(&w) {
                let r = rank_function(&w, b.row, b.col);
                let (i, c) = (b.row - r, b.col - r);
                assert!(i >= 1 && lambda.part(i as usize) == c, "w = {w}");
                assert!(lambda.part(i as usize + 1) < c, "w = {w}");
            }
        }
    }

    #[test]
    fn grothendieck_pins() {
        let w0 = Permutation::longest(3);
        assert_eq!(
            grothendieck_polynomial(&w0),
            Polynomial::monomial(Monomial::new(0, &[2, 1]), 1)
        );
        assert!(grothendieck_polynomial(&Permutation::identity(3)).is_one());
        assert_eq!(
            grothendieck_polynomial(&perm(&[2, 1, 3])),
            Polynomial::var(1)
        );
        for word in all_permutations(4) {
            let w = perm(&word);
            assert!(
                grothendieck_polynomial(&w).is_homogeneous_of_degree(i64::from(w.length())),
                "w = {w}"
            );
        }
    }

    #[test]
    fn recursion_is_ascent_independent() {
        // Recompute with the largest ascent instead of the smallest.
        fn largest_ascent_chain(w: &Permutation) -> Polynomial {
            match (1..w.n()).rev().find(|&i| w.word()[i - 1] < w.word()[i]) {
                None => grothendieck_polynomial(w),
                Some(i) => largest_ascent_chain(&w.swap_adjacent(i)).divided_difference(i),
            }
        }
        for word in all_permutations(4) {
            let w = perm(&word);
            assert_eq!(
                grothendieck_polynomial(&w),
                largest_ascent_chain(&w),
                "w = {w}"
            );
        }
    }

    #[test]
    fn beta_zero_is_the_schubert_recursion() {
        for word in all_permutations(4) {
            let w = perm(&word);
            assert_eq!(
                grothendieck_polynomial(&w).specialize_beta_zero(),
                schubert_polynomial(&w),
                "w = {w}"
            );
        }
    }

    #[test]
    fn every_flagging_of_a_vexillary_permutation_gives_its_polynomial() {
        let w = perm(&[2, 3, 5, 4, 1]);
        let shape = canonical_flagged_shape(&w);
        assert_eq!(shape.lambda().parts(), &[2, 1, 1, 1]);
        assert_eq!(shape.flag(), &[3, 3, 3, 4]);
        let sum = tableau_sum(&shape.to_skew());
        assert_eq!(grothendieck_polynomial(&w), sum);
        for set in flagging_sets(&w) {
            let alt = FlaggedShape::new(shape.lambda().clone(), set.flag()).unwrap();
            assert_eq!(tableau_sum(&alt.to_skew()), sum, "flag {:?}", set.flag());
        }
    }

    #[test]
    fn pi_word_pins() {
        let p = Polynomial::monomial(Monomial::new(0, &[2]), 1);
        assert_eq!(pi_word_apply(&[], &p), p);
        let expected = Polynomial::var(1).add(&Polynomial::var(2)).add(
            &Polynomial::beta()
                .mul(&Polynomial::var(1))
                .mul(&Polynomial::var(2)),
        );
        assert_eq!(pi_word_apply(&[1], &p), expected);
        let q = Polynomial::monomial(Monomial::new(0, &[3, 1]), 2)
            .add(&Polynomial::monomial(Monomial::new(1, &[0, 2, 1]), 1));
        assert_eq!(pi_word_apply(&[1, 2, 1], &q), pi_word_apply(&[2, 1, 2], &q));
    }

    #[test]
    fn monomial_formula_pins() {
        let shape = FlaggedShape::new(Partition::new(vec![2, 1]).unwrap(), vec![2, 4]).unwrap();
        let formula = monomial_formula(&shape);
        assert_eq!(formula.exponents(), &[3, 3]);
        assert_eq!(formula.word(), &[2, 3, 1]);
        assert!(formula.is_viable());
        assert_eq!(formula.evaluate(), tableau_sum(&shape.to_skew()));

        let one_row = FlaggedShape::new(Partition::new(vec![3]).unwrap(), vec![1]).unwrap();
        let base = monomial_formula(&one_row);
        assert_eq!(base.exponents(), &[3]);
        assert!(base.word().is_empty());
        assert_eq!(
            base.evaluate(),
            Polynomial::monomial(Monomial::new(0, &[3]), 1)
        );

        let starved =
            FlaggedShape::new(Partition::new(vec![1, 1, 1]).unwrap(), vec![1, 2, 2]).unwrap();
        let zero = monomial_formula(&starved);
        assert!(!zero.is_viable());
        assert!(zero.evaluate().is_zero());
        assert!(tableau_sum(&starved.to_skew()).is_zero());
    }
}
