//! Partitions, flagged shapes and skew flagged shapes.
//!
//! A flagged shape pairs a partition with per-row upper bounds (the flag) on
//! tableau entries; the skew variant adds a subtracted inner partition and
//! per-row lower bounds.  Validation enforces the monotonicity rules that
//! make the tableau and determinant routes agree, and `beta_degree_bound`
//! sizes every truncated computation downstream.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Violation report for shape validation; `Display` names the violated
/// clause.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("partition parts must be weakly decreasing: part {idx} is {got}, following {prev}")]
    NotWeaklyDecreasing { idx: usize, prev: u32, got: u32 },
    #[error("{what} must have length {expected} to match the partition, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{what}[{idx}] must be a positive integer")]
    NotPositive { what: &'static str, idx: usize },
    #[error("flag must be weakly increasing: f[{idx}] = {got} < f[{prev_idx}] = {prev}")]
    FlagNotWeaklyIncreasing {
        prev_idx: usize,
        idx: usize,
        prev: u32,
        got: u32,
    },
    #[error("a flag starting with f[1] = 1 on more than one row requires f[2] > 1")]
    FirstRowFlagPinned,
    #[error(
        "inner shape must fit inside the outer shape: mu[{idx}] = {mu} > lambda[{idx}] = {lambda}"
    )]
    InnerNotContained { idx: usize, mu: u32, lambda: u32 },
    #[error("inner shape must be weakly decreasing: mu[{idx}] = {got} > mu[{prev_idx}] = {prev}")]
    InnerNotWeaklyDecreasing {
        prev_idx: usize,
        idx: usize,
        prev: u32,
        got: u32,
    },
    #[error("rows {row} and {next} overlap, so {which}[{row}] = {upper} must be <= {which}[{next}] = {lower}")]
    SkewFlagNotMonotone {
        which: &'static str,
        row: usize,
        next: usize,
        upper: u32,
        lower: u32,
    },
}

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros in the input are trimmed, so the stored length is the
/// number of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ShapeError> {
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] {
                return Err(ShapeError::NotWeaklyDecreasing {
                    idx: i + 1,
                    prev: parts[i - 1],
                    got: parts[i],
                });
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `i`-th part (1-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Every partition whose diagram fits in a `max_rows x max_cols` box,
    /// including the empty partition, in a deterministic order.
    pub fn enumerate_in_box(max_rows: usize, max_cols: u32) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut stack: Vec<Vec<u32>> = (1..=max_cols).rev().map(|c| vec![c]).collect();
        while let Some(parts) = stack.pop() {
            if parts.len() < max_rows {
                let last = *parts.last().expect("stack entries are nonempty");
                for next in (1..=last).rev() {
                    let mut ext = parts.clone();
                    ext.push(next);
                    stack.push(ext);
                }
            }
            out.push(Partition { parts });
        }
        out.sort_unstable_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All weakly decreasing sequences `mu` with `0 <= mu_i <= lambda_i`,
/// zero-padded to the length of `lambda`, in a deterministic order.
pub fn sub_partitions(lambda: &Partition) -> Vec<Vec<u32>> {
    let r = lambda.len();
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(r);
    fn extend(lambda: &Partition, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == lambda.len() {
            out.push(current.clone());
            return;
        }
        let i = current.len();
        let hi = lambda
            .part(i + 1)
            .min(current.last().copied().unwrap_or(u32::MAX));
        for v in 0..=hi {
            current.push(v);
            extend(lambda, current, out);
            current.pop();
        }
    }
    extend(lambda, &mut current, &mut out);
    out
}

/// Controls where the flag monotonicity rules of a skew shape are enforced.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum FlagMonotonicity {
    /// Require `g_i <= g_{i+1}` and `f_i <= f_{i+1}` only when rows `i` and
    /// `i+1` overlap in some column (`mu_i < lambda_{i+1}`).  This is the
    /// default reading.
    #[default]
    WhereRowsOverlap,
    /// Require the monotonicity between every pair of adjacent rows.  The
    /// stricter alternative reading, accepted behind this switch.
    Everywhere,
}

/// A partition with a weakly increasing flag of row bounds.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FlaggedShape {
    lambda: Partition,
    #[serde(rename = "f")]
    flag: Vec<u32>,
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Checks the flagged-shape clauses on raw data without constructing one.
pub fn validate_flagged(lambda: &Partition, flag: &[u32]) -> Result<(), ShapeError> {
    let r = lambda.len();
    if flag.len() != r {
        return Err(ShapeError::LengthMismatch {
            what: "flag f",
            expected: r,
            got: flag.len(),
        });
    }
    for (i, &f) in flag.iter().enumerate() {
        if f == 0 {
            return Err(ShapeError::NotPositive {
                what: "f",
                idx: i + 1,
            });
        }
    }
    for i in 1..r {
        if flag[i] < flag[i - 1] {
            return Err(ShapeError::FlagNotWeaklyIncreasing {
                prev_idx: i,
                idx: i + 1,
                prev: flag[i - 1],
                got: flag[i],
            });
        }
    }
    if r > 1 && flag[0] == 1 && flag[1] == 1 {
        return Err(ShapeError::FirstRowFlagPinned);
    }
    Ok(())
}

impl FlaggedShape {
    pub fn new(lambda: Partition, flag: Vec<u32>) -> Result<Self, ShapeError> {
        validate_flagged(&lambda, &flag)?;
        Ok(FlaggedShape { lambda, flag })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn flag(&self) -> &[u32] {
        &self.flag
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    /// The same shape as a skew shape with empty inner partition and all
    /// lower bounds 1.
    pub fn to_skew(&self) -> SkewFlaggedShape {
        SkewFlaggedShape::new(
            self.lambda.clone(),
            vec![0; self.lambda.len()],
            self.flag.clone(),
            vec![1; self.lambda.len()],
        )
        .expect("a valid flagged shape embeds as a valid skew shape")
    }
}

impl fmt::Display for FlaggedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} f=(", self.lambda)?;
        for (i, v) in self.flag.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Checks the skew-shape clauses on raw data without constructing one.
pub fn validate_skew(
    lambda: &Partition,
    mu: &[u32],
    upper: &[u32],
    lower: &[u32],
    mode: FlagMonotonicity,
) -> Result<(), ShapeError> {
    let r = lambda.len();
    if mu.len() != r {
        return Err(ShapeError::LengthMismatch {
            what: "inner shape mu",
            expected: r,
            got: mu.len(),
        });
    }
    if upper.len() != r {
        return Err(ShapeError::LengthMismatch {
            what: "upper flag f",
            expected: r,
            got: upper.len(),
        });
    }
    if lower.len() != r {
        return Err(ShapeError::LengthMismatch {
            what: "lower flag g",
            expected: r,
            got: lower.len(),
        });
    }
    for i in 0..r {
        if i > 0 && mu[i] > mu[i - 1] {
            return Err(ShapeError::InnerNotWeaklyDecreasing {
                prev_idx: i,
                idx: i + 1,
                prev: mu[i - 1],
                got: mu[i],
            });
        }
        if mu[i] > lambda.part(i + 1) {
            return Err(ShapeError::InnerNotContained {
                idx: i + 1,
                mu: mu[i],
                lambda: lambda.part(i + 1),
            });
        }
        if upper[i] == 0 {
            return Err(ShapeError::NotPositive {
                what: "f",
                idx: i + 1,
            });
        }
        if lower[i] == 0 {
            return Err(ShapeError::NotPositive {
                what: "g",
                idx: i + 1,
            });
        }
    }
    for i in 0..r.saturating_sub(1) {
        let overlap = mu[i] < lambda.part(i + 2);
        if mode == FlagMonotonicity::Everywhere || overlap {
            if lower[i] > lower[i + 1] {
                return Err(ShapeError::SkewFlagNotMonotone {
                    which: "g",
                    row: i + 1,
                    next: i + 2,
                    upper: lower[i],
                    lower: lower[i + 1],
                });
            }
            if upper[i] > upper[i + 1] {
                return Err(ShapeError::SkewFlagNotMonotone {
                    which: "f",
                    row: i + 1,
                    next: i + 2,
                    upper: upper[i],
                    lower: upper[i + 1],
                });
            }
        }
    }
    Ok(())
}

/// A skew shape `lambda/mu` with per-row entry bounds `g_i ..= f_i`.
///
/// `f_i < g_i` is permitted (such a shape with a nonempty row `i` admits no
/// tableaux at all); validity only constrains containment and the flag
/// monotonicity across overlapping rows.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SkewFlaggedShape {
    lambda: Partition,
    mu: Vec<u32>,
    #[serde(rename = "f")]
    upper: Vec<u32>,
    #[serde(rename = "g")]
    lower: Vec<u32>,
}

impl SkewFlaggedShape {
    /// Builds and validates with the default monotonicity mode.
    pub fn new(
        lambda: Partition,
        mu: Vec<u32>,
        upper: Vec<u32>,
        lower: Vec<u32>,
    ) -> Result<Self, ShapeError> {
        Self::with_mode(lambda, mu, upper, lower, FlagMonotonicity::default())
    }

    pub fn with_mode(
        lambda: Partition,
        mu: Vec<u32>,
        upper: Vec<u32>,
        lower: Vec<u32>,
        mode: FlagMonotonicity,
    ) -> Result<Self, ShapeError> {
        validate_skew(&lambda, &mu, &upper, &lower, mode)?;
        Ok(SkewFlaggedShape {
            lambda,
            mu,
            upper,
            lower,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn upper_flag(&self) -> &[u32] {
        &self.upper
    }

    pub fn lower_flag(&self) -> &[u32] {
        &self.lower
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    /// Inner part of row `i` (1-indexed).
    pub fn mu_part(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.mu.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of boxes of `lambda/mu`.
    pub fn box_count(&self) -> u64 {
        (1..=self.rows())
            .map(|i| (self.lambda.part(i) - self.mu_part(i)) as u64)
            .sum()
    }

    /// True when row `i` contains no boxes.
    pub fn row_is_empty(&self, i: usize) -> bool {
        self.lambda.part(i) == self.mu_part(i)
    }

    /// Upper bound on `beta`-exponents of the tableau generating function:
    /// `sum_i max(0, f_i - g_i)`.
    ///
    /// Row `i` has `lambda_i - mu_i` boxes filled with sets drawn from the
    /// window `g_i ..= f_i`, weakly increasing left to right, so the total
    /// number of entries in the row is at most `(lambda_i - mu_i) + (f_i - g_i)`
    /// and the excess over the box count is at most `f_i - g_i`.
    pub fn beta_degree_bound(&self) -> u32 {
        (0..self.rows())
            .map(|i| self.upper[i].saturating_sub(self.lower[i]))
            .sum()
    }
}

impl fmt::Display for SkewFlaggedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "lambda={} mu=({}) f=({}) g=({})",
            self.lambda,
            join(&self.mu),
            join(&self.upper),
            join(&self.lower)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_basics() {
        let p = partition(&[2, 1, 1, 1]);
        assert_eq!(p.len(), 4);
        assert_eq!(p.size(), 5);
        assert_eq!(p.part(1), 2);
        assert_eq!(p.part(9), 0);
        assert_eq!(p.conjugate(), partition(&[4, 1]));
        assert_eq!(
            partition(&[4, 3, 2, 1]).conjugate(),
            partition(&[4, 3, 2, 1])
        );
        assert!(p.contains(&partition(&[1, 1])));
        assert!(!partition(&[1, 1]).contains(&p));
        assert_eq!(partition(&[3, 1, 0]).len(), 2, "trailing zeros trim");
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn partition_box_enumeration() {
        let all = Partition::enumerate_in_box(2, 2);
        let shown: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["()", "(1)", "(1,1)", "(2)", "(2,1)", "(2,2)"]);
        // 4x4 box: binomial(8, 4) = 70 partitions.
        assert_eq!(Partition::enumerate_in_box(4, 4).len(), 70);
    }

    #[test]
    fn flagged_validation() {
        assert!(FlaggedShape::new(partition(&[2, 1]), vec![2, 4]).is_ok());
        let err = FlaggedShape::new(partition(&[2, 1]), vec![4, 2]).unwrap_err();
        assert!(matches!(err, ShapeError::FlagNotWeaklyIncreasing { .. }));
        let err = FlaggedShape::new(partition(&[2, 1]), vec![1, 1]).unwrap_err();
        assert_eq!(err, ShapeError::FirstRowFlagPinned);
        // A single row may use f1 = 1.
        assert!(FlaggedShape::new(partition(&[3]), vec![1]).is_ok());
        assert!(FlaggedShape::new(Partition::empty(), vec![]).is_ok());
        let err = FlaggedShape::new(partition(&[2, 1]), vec![2]).unwrap_err();
        assert!(matches!(err, ShapeError::LengthMismatch { .. }));
    }

    #[test]
    fn skew_validation() {
        // Valid despite non-monotone flags: the overlap conditions do not fire.
        assert!(SkewFlaggedShape::new(
            partition(&[4, 3, 1, 1]),
            vec![2, 2, 1, 0],
            vec![2, 4, 2, 1],
            vec![1, 2, 3, 1],
        )
        .is_ok());
        // Overlapping rows with a decreasing f.
        let err = SkewFlaggedShape::new(partition(&[2, 2]), vec![0, 0], vec![3, 2], vec![1, 1])
            .unwrap_err();
        assert!(matches!(
            err,
            ShapeError::SkewFlagNotMonotone { which: "f", .. }
        ));
        // mu_1 >= lambda_2 lifts the constraint entirely.
        assert!(
            SkewFlaggedShape::new(partition(&[3, 1]), vec![2, 0], vec![5, 1], vec![9, 1]).is_ok()
        );
        // ... but the strict mode enforces it.
        assert!(SkewFlaggedShape::with_mode(
            partition(&[3, 1]),
            vec![2, 0],
            vec![5, 1],
            vec![9, 1],
            FlagMonotonicity::Everywhere,
        )
        .is_err());
        let err = SkewFlaggedShape::new(partition(&[2, 1]), vec![0, 1], vec![2, 2], vec![1, 1])
            .unwrap_err();
        assert!(matches!(err, ShapeError::InnerNotWeaklyDecreasing { .. }));
        let err = SkewFlaggedShape::new(partition(&[2, 1]), vec![2, 2], vec![2, 2], vec![1, 1])
            .unwrap_err();
        assert!(matches!(err, ShapeError::InnerNotContained { .. }));
    }

    #[test]
    fn straight_embeds_as_skew() {
        let straight = FlaggedShape::new(partition(&[2, 1]), vec![2, 4]).unwrap();
        let skew = straight.to_skew();
        assert_eq!(skew.mu(), &[0, 0]);
        assert_eq!(skew.lower_flag(), &[1, 1]);
        assert_eq!(skew.upper_flag(), &[2, 4]);
        assert_eq!(skew.box_count(), 3);
    }

    #[test]
    fn beta_degree_bounds() {
        let shape =
            SkewFlaggedShape::new(partition(&[2, 1]), vec![0, 0], vec![2, 4], vec![1, 1]).unwrap();
        assert_eq!(shape.beta_degree_bound(), 4);
        let single = SkewFlaggedShape::new(partition(&[1]), vec![0], vec![3], vec![1]).unwrap();
        assert_eq!(single.beta_degree_bound(), 2);
        let tight =
            SkewFlaggedShape::new(partition(&[2, 2]), vec![1, 0], vec![2, 2], vec![2, 2]).unwrap();
        assert_eq!(tight.beta_degree_bound(), 0);
    }

    #[test]
    fn sub_partition_enumeration() {
        let lambda = partition(&[2, 1]);
        let subs = sub_partitions(&lambda);
        assert_eq!(
            subs,
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1],]
        );
        assert_eq!(sub_partitions(&Partition::empty()), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn shape_json() {
        let shape =
            SkewFlaggedShape::new(partition(&[2, 1]), vec![0, 0], vec![2, 4], vec![1, 1]).unwrap();
        assert_eq!(
            serde_json::to_string(&shape).unwrap(),
            r#"{"lambda":[2,1],"mu":[0,0],"f":[2,4],"g":[1,1]}"#
        );
    }
}
