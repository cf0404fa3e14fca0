//! Flagged set-valued tableaux and their weighted generating function.
//!
//! A set-valued tableau assigns to every box of a skew shape a nonempty set
//! of integers such that rows are weakly increasing and columns strictly
//! increasing, where a set `A` left of (above) a set `B` compares by
//! `max(A) <= min(B)` (`max(A) < min(B)`), and row `i` draws its values from
//! the flag window `g_i ..= f_i`.  The weight of a tableau `T` is
//! `b^(|T| - boxes) * prod_{k in T} x_k`, and summing weights over all
//! tableaux of a shape yields its flagged Grothendieck polynomial — the
//! combinatorial route that everything else is checked against.

use crate::poly::{Coeff, Monomial, Polynomial};
use crate::shape::SkewFlaggedShape;
use rustc_hash::FxHashMap;
use serde::ser::SerializeStruct;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Violation report for tableau validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("fill must cover exactly the boxes of the shape")]
    BoxMismatch,
    #[error("box ({row},{col}) must hold a nonempty strictly increasing set")]
    MalformedBox { row: usize, col: usize },
    #[error("box ({row},{col}) holds {value}, outside the row window {lo}..={hi}")]
    RowBound {
        row: usize,
        col: usize,
        value: u32,
        lo: u32,
        hi: u32,
    },
    #[error("row {row}: max of box {col} exceeds min of box {next}")]
    RowNotWeaklyIncreasing { row: usize, col: usize, next: usize },
    #[error("column {col}: box in row {row} must be strictly below the box in row {next}")]
    ColumnNotStrictlyIncreasing { row: usize, next: usize, col: usize },
}

/// A filled tableau on a skew flagged shape.
///
/// `rows[i]` lists the value sets of row `i+1` left to right, each sorted
/// strictly increasing; absolute column indices run `mu_i+1 ..= lambda_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetValuedTableau {
    shape: SkewFlaggedShape,
    rows: Vec<Vec<Vec<u32>>>,
}

impl SetValuedTableau {
    /// Builds and validates a tableau from per-row value sets.
    pub fn new(shape: SkewFlaggedShape, rows: Vec<Vec<Vec<u32>>>) -> Result<Self, TableauError> {
        let t = SetValuedTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> &SkewFlaggedShape {
        &self.shape
    }

    /// Value sets of row `i` (1-indexed), leftmost box first.
    pub fn row(&self, i: usize) -> &[Vec<u32>] {
        &self.rows[i - 1]
    }

    /// Values of the box in row `i`, absolute column `j` (1-indexed).
    pub fn box_values(&self, i: usize, j: usize) -> &[u32] {
        let offset = j as u32 - self.shape.mu_part(i) - 1;
        &self.rows[i - 1][offset as usize]
    }

    /// Total number of entries `|T|`.
    pub fn entry_count(&self) -> u64 {
        self.rows.iter().flatten().map(|set| set.len() as u64).sum()
    }

    /// The weight `b^(|T| - boxes) * prod_{k in T} x_k` as a one-term
    /// polynomial.
    pub fn weight(&self) -> Polynomial {
        let excess = self.entry_count() - self.shape.box_count();
        let mut exps: Vec<u16> = Vec::new();
        for value in self.rows.iter().flatten().flatten() {
            let idx = *value as usize - 1;
            if exps.len() <= idx {
                exps.resize(idx + 1, 0);
            }
            exps[idx] += 1;
        }
        Polynomial::monomial(Monomial::new(excess as u32, &exps), 1)
    }

    /// Checks all tableau clauses from scratch, independently of how the
    /// tableau was produced.
    pub fn validate(&self) -> Result<(), TableauError> {
        let shape = &self.shape;
        let r = shape.rows();
        if self.rows.len() != r {
            return Err(TableauError::BoxMismatch);
        }
        for i in 1..=r {
            let width = (shape.lambda().part(i) - shape.mu_part(i)) as usize;
            if self.rows[i - 1].len() != width {
                return Err(TableauError::BoxMismatch);
            }
            let (lo, hi) = (shape.lower_flag()[i - 1], shape.upper_flag()[i - 1]);
            for (offset, set) in self.rows[i - 1].iter().enumerate() {
                let col = shape.mu_part(i) as usize + offset + 1;
                if set.is_empty() || set.windows(2).any(|w| w[0] >= w[1]) || set.contains(&0) {
                    return Err(TableauError::MalformedBox { row: i, col });
                }
                for &v in set {
                    if v < lo || v > hi {
                        return Err(TableauError::RowBound {
                            row: i,
                            col,
                            value: v,
                            lo,
                            hi,
                        });
                    }
                }
                if offset > 0 {
                    let left = &self.rows[i - 1][offset - 1];
                    if left.last() > set.first() {
                        return Err(TableauError::RowNotWeaklyIncreasing {
                            row: i,
                            col: col - 1,
                            next: col,
                        });
                    }
                }
                if i > 1 {
                    let above_cols =
                        (shape.mu_part(i - 1) as usize + 1)..=(shape.lambda().part(i - 1) as usize);
                    if above_cols.contains(&col) {
                        let above = self.box_values(i - 1, col);
                        if above.last() >= set.first() {
                            return Err(TableauError::ColumnNotStrictlyIncreasing {
                                row: i - 1,
                                next: i,
                                col,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let indent = self.shape.mu_part(i + 1) as usize;
            write!(f, "{}", "     ".repeat(indent))?;
            for set in row {
                let inner = set
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "{{{inner}}}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SetValuedTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut fill: Vec<((usize, usize), &[u32])> = Vec::new();
        for i in 1..=self.shape.rows() {
            for (offset, set) in self.rows[i - 1].iter().enumerate() {
                let col = self.shape.mu_part(i) as usize + offset + 1;
                fill.push(((i, col), set));
            }
        }
        let mut s = serializer.serialize_struct("SetValuedTableau", 2)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("fill", &fill)?;
        s.end()
    }
}

struct BoxSlot {
    row: usize,
    lo_window: u32,
    hi: u32,
    /// Index of the box directly above in the flattened box list, if any.
    above: Option<usize>,
    /// Whether the previous flattened box is the row neighbor to the left.
    has_left: bool,
}

fn box_slots(shape: &SkewFlaggedShape) -> Vec<BoxSlot> {
    let mut slots = Vec::new();
    let mut index_of: FxHashMap<(usize, usize), usize> = FxHashMap::default();
    for i in 1..=shape.rows() {
        let (lo, hi) = (shape.lower_flag()[i - 1], shape.upper_flag()[i - 1]);
        for col in (shape.mu_part(i) as usize + 1)..=(shape.lambda().part(i) as usize) {
            index_of.insert((i, col), slots.len());
            slots.push(BoxSlot {
                row: i,
                lo_window: lo,
                hi,
                above: if i > 1 {
                    index_of.get(&(i - 1, col)).copied()
                } else {
                    None
                },
                has_left: col > shape.mu_part(i) as usize + 1,
            });
        }
    }
    slots
}

/// Visits every flagged set-valued tableau of the shape in the canonical
/// order: boxes row-major, and per box the candidate sets ordered by their
/// sorted sequences lexicographically (minima ascending, then extensions).
fn for_each_filling(shape: &SkewFlaggedShape, visit: &mut impl FnMut(&[Vec<u32>])) {
    let slots = box_slots(shape);
    let mut fill: Vec<Vec<u32>> = vec![Vec::new(); slots.len()];
    descend(&slots, 0, &mut fill, visit);
}

fn descend(
    slots: &[BoxSlot],
    k: usize,
    fill: &mut Vec<Vec<u32>>,
    visit: &mut impl FnMut(&[Vec<u32>]),
) {
    if k == slots.len() {
        visit(fill);
        return;
    }
    let slot = &slots[k];
    // Minimum legal value: the row window bound, the weak bound from the
    // left neighbor, and the strict bound from the box above.
    let mut lo = slot.lo_window;
    if slot.has_left {
        lo = lo.max(*fill[k - 1].last().expect("left box already filled"));
    }
    if let Some(a) = slot.above {
        lo = lo.max(fill[a].last().expect("box above already filled") + 1);
    }
    if lo > slot.hi {
        return; // branch dies: no legal value for this box
    }
    for minimum in lo..=slot.hi {
        fill[k] = vec![minimum];
        extend_and_descend(slots, k, fill, visit, minimum + 1);
    }
    fill[k].clear();
}

/// Recursively extends the set in box `k` by values above `from`, visiting
/// each extension in lexicographic order before growing it further.
fn extend_and_descend(
    slots: &[BoxSlot],
    k: usize,
    fill: &mut Vec<Vec<u32>>,
    visit: &mut impl FnMut(&[Vec<u32>]),
    from: u32,
) {
    descend(slots, k + 1, fill, visit);
    for next in from..=slots[k].hi {
        fill[k].push(next);
        extend_and_descend(slots, k, fill, visit, next + 1);
        fill[k].pop();
    }
}

fn assemble(shape: &SkewFlaggedShape, fill: &[Vec<u32>]) -> SetValuedTableau {
    let mut rows: Vec<Vec<Vec<u32>>> = vec![Vec::new(); shape.rows()];
    let slots = box_slots(shape);
    for (slot, set) in slots.iter().zip(fill) {
        rows[slot.row - 1].push(set.clone());
    }
    SetValuedTableau {
        shape: shape.clone(),
        rows,
    }
}

/// All flagged set-valued tableaux of the shape, in the canonical order.
pub fn enumerate(shape: &SkewFlaggedShape) -> Vec<SetValuedTableau> {
    let mut out = Vec::new();
    for_each_filling(shape, &mut |fill| out.push(assemble(shape, fill)));
    out
}

/// The flagged Grothendieck polynomial of the shape: the sum of tableau
/// weights.  Exact (no truncation); homogeneous of graded degree equal to
/// the box count.
pub fn tableau_sum(shape: &SkewFlaggedShape) -> Polynomial {
    let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
    let boxes = shape.box_count();
    for_each_filling(shape, &mut |fill| {
        let mut exps: Vec<u16> = Vec::new();
        let mut entries = 0u64;
        for set in fill {
            entries += set.len() as u64;
            for &value in set {
                let idx = value as usize - 1;
                if exps.len() <= idx {
                    exps.resize(idx + 1, 0);
                }
                exps[idx] += 1;
            }
        }
        let m = Monomial::new((entries - boxes) as u32, &exps);
        *acc.entry(m).or_insert(0) += 1;
    });
    Polynomial::from_terms(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::onerow::one_row_window;
    use crate::shape::{FlaggedShape, Partition, SkewFlaggedShape};

    fn straight(lambda: &[u32], flag: &[u32]) -> SkewFlaggedShape {
        FlaggedShape::new(Partition::new(lambda.to_vec()).unwrap(), flag.to_vec())
            .unwrap()
            .to_skew()
    }

    fn skew(lambda: &[u32], mu: &[u32], f: &[u32], g: &[u32]) -> SkewFlaggedShape {
        SkewFlaggedShape::new(
            Partition::new(lambda.to_vec()).unwrap(),
            mu.to_vec(),
            f.to_vec(),
            g.to_vec(),
        )
        .unwrap()
    }

    fn rows_of(t: &SetValuedTableau) -> Vec<Vec<Vec<u32>>> {
        (1..=t.shape().rows()).map(|i| t.row(i).to_vec()).collect()
    }

    #[test]
    fn known_family_and_regression_count() {
        let all = enumerate(&straight(&[2, 1], &[2, 4]));
        assert_eq!(all.len(), 27);
        let listed: Vec<Vec<Vec<Vec<u32>>>> = vec![
            vec![vec![vec![1], vec![1]], vec![vec![2, 3]]],
            vec![vec![vec![1, 2], vec![2]], vec![vec![3, 4]]],
            vec![vec![vec![1], vec![1, 2]], vec![vec![2, 3]]],
            vec![vec![vec![2], vec![2]], vec![vec![4]]],
        ];
        for want in &listed {
            assert!(all.iter().any(|t| &rows_of(t) == want), "missing {want:?}");
        }
        // Tightening the second-row flag removes exactly the fillings that
        // reach 4.
        let tighter = enumerate(&straight(&[2, 1], &[2, 3]));
        assert!(tighter.iter().any(|t| rows_of(t) == listed[0]));
        assert!(tighter.iter().any(|t| rows_of(t) == listed[2]));
        assert!(!tighter.iter().any(|t| rows_of(t) == listed[1]));
        assert!(!tighter.iter().any(|t| rows_of(t) == listed[3]));
        // Every emitted tableau passes independent validation and is unique.
        for t in &all {
            t.validate().unwrap();
        }
        let mut seen = all.clone();
        seen.dedup();
        assert_eq!(seen.len(), all.len());
    }

    #[test]
    fn weight_pins() {
        let shape = straight(&[2, 1], &[2, 4]);
        let t = SetValuedTableau::new(
            shape.clone(),
            vec![vec![vec![1], vec![1]], vec![vec![2, 3]]],
        )
        .unwrap();
        assert_eq!(t.entry_count(), 4);
        assert_eq!(t.weight().to_string(), "b*x1^2*x2*x3");
        let t = SetValuedTableau::new(shape.clone(), vec![vec![vec![2], vec![2]], vec![vec![4]]])
            .unwrap();
        assert_eq!(t.weight().to_string(), "x2^2*x4");
        let t = SetValuedTableau::new(shape, vec![vec![vec![1], vec![1, 2]], vec![vec![2, 3]]])
            .unwrap();
        assert_eq!(t.weight().to_string(), "b^2*x1^2*x2^2*x3");
    }

    #[test]
    fn sums_match_one_row_series() {
        assert_eq!(tableau_sum(&straight(&[1], &[1])).to_string(), "x1");
        let sum = tableau_sum(&straight(&[1], &[2]));
        assert_eq!(sum.to_string(), "x1 + x2 + b*x1*x2");
        // A single row of length m with flag p is the one-row series G_m^{[p]}.
        for m in 1..=3u32 {
            for p in 1..=3u32 {
                let shape = straight(&[m], &[p]);
                let bound = shape.beta_degree_bound();
                assert_eq!(
                    tableau_sum(&shape),
                    one_row_window(m as i64, p, 1, bound),
                    "m={m} p={p}"
                );
            }
        }
    }

    #[test]
    fn impossible_shapes_are_empty() {
        // Two rows pinned to a single value cannot be column-strict.
        let pinned = SkewFlaggedShape::new(
            Partition::new(vec![1, 1]).unwrap(),
            vec![0, 0],
            vec![1, 1],
            vec![1, 1],
        )
        .unwrap();
        assert!(enumerate(&pinned).is_empty());
        assert!(tableau_sum(&pinned).is_zero());
        // Upper flag below the lower flag on a nonempty row.
        let inverted = skew(&[2], &[0], &[1], &[2]);
        assert!(tableau_sum(&inverted).is_zero());
    }

    #[test]
    fn empty_shapes_sum_to_one() {
        let empty = straight(&[], &[]);
        assert_eq!(enumerate(&empty).len(), 1);
        assert_eq!(tableau_sum(&empty), Polynomial::one());
        // A fully subtracted shape also has the empty filling only.
        let hollow = skew(&[2, 1], &[2, 1], &[2, 2], &[1, 1]);
        assert_eq!(tableau_sum(&hollow), Polynomial::one());
    }

    #[test]
    fn empty_rows_decouple_columns() {
        // Row 1 holds no boxes, so the single box in row 2 is unconstrained
        // from above and the sum is a one-row series.
        let shape = skew(&[2, 2], &[2, 1], &[2, 2], &[1, 1]);
        assert_eq!(shape.box_count(), 1);
        assert_eq!(tableau_sum(&shape).to_string(), "x1 + x2 + b*x1*x2");
    }

    #[test]
    fn beta_degree_bound_dominates() {
        for (shape, expect_attained) in [
            (straight(&[2, 1], &[2, 4]), false),
            (straight(&[1], &[3]), true),
            (skew(&[3, 2], &[1, 0], &[2, 3], &[1, 2]), false),
        ] {
            let bound = shape.beta_degree_bound();
            let max_seen = tableau_sum(&shape).max_beta_exp().unwrap();
            assert!(max_seen <= bound, "{shape}: {max_seen} > {bound}");
            if expect_attained {
                assert_eq!(max_seen, bound, "{shape}");
            }
        }
    }

    #[test]
    fn enumeration_order_is_canonical() {
        // One box, window {1,2,3}: sets in lexicographic order.
        let fills: Vec<Vec<u32>> = enumerate(&straight(&[1], &[3]))
            .iter()
            .map(|t| t.row(1)[0].clone())
            .collect();
        assert_eq!(
            fills,
            vec![
                vec![1],
                vec![1, 2],
                vec![1, 2, 3],
                vec![1, 3],
                vec![2],
                vec![2, 3],
                vec![3]
            ]
        );
    }

    #[test]
    fn validation_rejects_bad_fills() {
        let shape = straight(&[2, 1], &[2, 4]);
        // Column not strict.
        let t = SetValuedTableau {
            shape: shape.clone(),
            rows: vec![vec![vec![1], vec![1]], vec![vec![1, 3]]],
        };
        assert!(matches!(
            t.validate().unwrap_err(),
            TableauError::ColumnNotStrictlyIncreasing { .. }
        ));
        // Row bound violated.
        let t = SetValuedTableau {
            shape: shape.clone(),
            rows: vec![vec![vec![1], vec![3]], vec![vec![4]]],
        };
        assert!(matches!(
            t.validate().unwrap_err(),
            TableauError::RowBound { .. }
        ));
        // Row order violated.
        let t = SetValuedTableau {
            shape: shape.clone(),
            rows: vec![vec![vec![2], vec![1]], vec![vec![3]]],
        };
        assert!(matches!(
            t.validate().unwrap_err(),
            TableauError::RowNotWeaklyIncreasing { .. }
        ));
        // Malformed set.
        let t = SetValuedTableau {
            shape,
            rows: vec![vec![vec![1], vec![2, 2]], vec![vec![3]]],
        };
        assert!(matches!(
            t.validate().unwrap_err(),
            TableauError::MalformedBox { .. }
        ));
    }

    #[test]
    fn tableau_json_pin() {
        let shape = skew(&[2, 1], &[1, 0], &[2, 2], &[1, 1]);
        let t = SetValuedTableau::new(shape, vec![vec![vec![1, 2]], vec![vec![1]]]).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"shape":{"lambda":[2,1],"mu":[1,0],"f":[2,2],"g":[1,1]},"fill":[[[1,2],[1,2]],[[2,1],[1]]]}"#
        );
    }

    #[test]
    fn split_at_disjoint_rows_factorizes() {
        // mu_k >= lambda_{k+1}: the tableau sum splits as a product.
        let whole = skew(&[3, 1], &[1, 0], &[2, 2], &[1, 1]);
        let top = skew(&[3], &[1], &[2], &[1]);
        let bottom = skew(&[1], &[0], &[2], &[1]);
        assert_eq!(
            tableau_sum(&whole),
            tableau_sum(&top).mul(&tableau_sum(&bottom))
        );
    }

    #[test]
    fn lower_flag_recursion() {
        // With g_k < g_{k+1} (or k = r), mu_k < lambda_k, and mu_{k-1} > mu_k
        // (or k = 1):
        //   G_{lambda/mu, f/g} = x_{g_k} * G_{lambda/mu', f/g}
        //                        + (1 + b*x_{g_k}) * G_{lambda/mu, f/g'}
        // where mu' adds a box to row k and g' bumps g_k.
        let lambda = &[3, 2];
        let k = 0usize; // first row
        let (mu, f, g) = (vec![1, 0], vec![3, 3], vec![1, 2]);
        let shape = skew(lambda, &mu, &f, &g);
        let mut mu_bumped = mu.clone();
        mu_bumped[k] += 1;
        let mut g_bumped = g.clone();
        g_bumped[k] += 1;
        let deeper = skew(lambda, &mu_bumped, &f, &g);
        let raised = skew(lambda, &mu, &f, &g_bumped);
        let xg = Polynomial::var(g[k] as usize);
        let lhs = tableau_sum(&shape);
        let rhs = xg.mul(&tableau_sum(&deeper)).add(
            &Polynomial::one()
                .add(&Polynomial::beta().mul(&xg))
                .mul(&tableau_sum(&raised)),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lower_flag_bump_invariance() {
        // With g_{k-1} = g_k and mu_{k-1} = mu_k, bumping g_k changes nothing.
        let shape = skew(&[2, 2], &[0, 0], &[2, 3], &[1, 1]);
        let bumped = skew(&[2, 2], &[0, 0], &[2, 3], &[1, 2]);
        assert_eq!(tableau_sum(&shape), tableau_sum(&bumped));
    }

    #[test]
    fn divided_difference_widens_first_row_flag() {
        // For lambda_1 > lambda_2 and f_1 < f_2:
        //   pi_{f_1}(G_{lambda,f}) = G_{lambda', f'}
        // with lambda' = (lambda_1 - 1, ...), f' = (f_1 + 1, ...).
        for (lambda, f) in [
            (vec![2u32], vec![1u32]),
            (vec![2], vec![2]),
            (vec![3, 1], vec![1, 2]),
            (vec![3, 1], vec![2, 3]),
            (vec![2, 1], vec![2, 4]),
            (vec![3, 2, 1], vec![1, 2, 3]),
        ] {
            let sum = tableau_sum(&straight(&lambda, &f));
            let mut lambda2 = lambda.clone();
            lambda2[0] -= 1;
            let mut f2 = f.clone();
            f2[0] += 1;
            if lambda2[0] == 0 {
                lambda2.remove(0);
                f2.remove(0);
            }
            let expected = tableau_sum(&straight(&lambda2, &f2));
            assert_eq!(
                sum.divided_difference(f[0] as usize),
                expected,
                "lambda={lambda:?} f={f:?}"
            );
        }
    }

    #[test]
    fn pinned_first_row_factors_out() {
        // For f_1 = 1: G_{lambda,f} = x1^{lambda_1} * (G_{tail}|_{x1=0}).
        for (lambda, f) in [
            (vec![3u32], vec![1u32]),
            (vec![2, 1], vec![1, 2]),
            (vec![3, 2, 1], vec![1, 2, 3]),
            (vec![2, 2], vec![1, 3]),
        ] {
            let sum = tableau_sum(&straight(&lambda, &f));
            let tail = tableau_sum(&straight(&lambda[1..], &f[1..])).substitute_zero(1);
            let lead = Polynomial::monomial(Monomial::new(0, &[lambda[0] as u16]), 1);
            assert_eq!(sum, lead.mul(&tail), "lambda={lambda:?} f={f:?}");
        }
    }
}
