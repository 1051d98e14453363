//! Partitions, dominant weights and the Weyl dimension formula.
//!
//! A [`Partition`] is normalized (no trailing zeros), so `(2,1)` and
//! `(2,1,0)` are the same value. A [`DominantWeight`] keeps its length,
//! because it always decorates a bundle of a definite rank and zeros are
//! significant when weights are concatenated.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{input, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return input(format!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// The row `(k)`.
    pub fn row(k: u32) -> Self {
        Self::from_sorted(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, i.e. the number of columns.
    pub fn width(&self) -> u32 {
        self.part(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.width() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Height of column `j`, 1-based as in the Young diagram.
    pub fn column_height(&self, j: usize) -> u32 {
        assert!(j >= 1, "columns are 1-based");
        self.0.iter().take_while(|&&p| p as usize >= j).count() as u32
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_box(&self, max_rows: usize, max_cols: u32) -> bool {
        self.len() <= max_rows && self.width() <= max_cols
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return input(format!(
                "dominance needs equal sizes, got |{self}| = {} and |{other}| = {}",
                self.size(),
                other.size()
            ));
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rows of both partitions merged and sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().chain(&other.0).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Entrywise sum of rows.
    pub fn add(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        Partition((0..rows).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// The weight of length `len` obtained by padding with zeros.
    pub fn to_weight(&self, len: usize) -> Result<DominantWeight> {
        if self.len() > len {
            return input(format!("{self} has more than {len} rows"));
        }
        let mut entries: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        entries.resize(len, 0);
        Ok(DominantWeight(entries))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let parts = split_list(s)
            .map(|t| t.parse::<u32>().map_err(|e| Error::Input(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&join(&self.0))
    }
}

/// A weakly decreasing integer sequence of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return input(format!("weight {entries:?} is not weakly decreasing"));
        }
        Ok(DominantWeight(entries))
    }

    pub(crate) fn from_sorted(entries: Vec<i64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        DominantWeight(entries)
    }

    pub fn zeros(len: usize) -> Self {
        DominantWeight(vec![0; len])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(-w_r, ..., -w_1)`: the weight of the dual representation.
    pub fn negate_reverse(&self) -> DominantWeight {
        DominantWeight(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// Adds `c` to every entry (twist by the `c`-th power of the determinant).
    pub fn shift(&self, c: i64) -> DominantWeight {
        DominantWeight(self.0.iter().map(|&x| x + c).collect())
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// The underlying partition when every entry is nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) {
            return None;
        }
        Some(Partition::from_sorted(self.0.iter().map(|&x| x as u32).collect()))
    }

    /// `(self, other)` as one sequence; not necessarily dominant.
    pub(crate) fn concat(&self, other: &DominantWeight) -> Vec<i64> {
        self.0.iter().chain(&other.0).copied().collect()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = split_list(s)
            .map(|t| t.parse::<i64>().map_err(|e| Error::Input(format!("bad entry {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(entries)
    }
}

impl Serialize for DominantWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&join(&self.0))
    }
}

/// Dimension of `S_w(C^d)`: the product of `(w_i - w_j + j - i) / (j - i)`
/// over `i < j`, accumulated as an exact fraction.
pub fn weyl_dim(w: &DominantWeight, d: usize) -> Result<BigUint> {
    if w.len() != d {
        return input(format!("weight {w} has length {} but the space has dimension {d}", w.len()));
    }
    let e = w.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in i + 1..d {
            let gap = e[i] - e[j] + (j - i) as i64;
            debug_assert!(gap > 0);
            num *= gap as u64;
            den *= (j - i) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension of {w} is not an integer");
    Ok(q)
}

/// Partitions of `size` inside a `max_rows × max_cols` box, in
/// lexicographically decreasing order.
pub fn enumerate_in_box(max_rows: usize, max_cols: u32, size: u32) -> Vec<Partition> {
    fn rec(rows_left: usize, cap: u32, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if rows_left == 0 || (cap as u64) * (rows_left as u64) < remaining as u64 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            cur.push(p);
            rec(rows_left - 1, p, remaining - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_rows, max_cols, size, &mut Vec::new(), &mut out);
    out
}

/// Every partition inside the box, by increasing size.
pub fn enumerate_box(max_rows: usize, max_cols: u32) -> Vec<Partition> {
    let top = max_rows as u32 * max_cols;
    (0..=top).flat_map(|s| enumerate_in_box(max_rows, max_cols, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> DominantWeight {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("8,7,4,3,3,1").transpose(), p("6,5,5,3,2,2,2,1"));
    }

    #[test]
    fn normalization_and_parsing() {
        assert_eq!(p("2,1,0,0"), p("2,1"));
        assert_eq!(p("(3)"), Partition::row(3));
        assert_eq!(p(""), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("0,1".parse::<DominantWeight>().is_err());
        assert_eq!(w("1,0,-1").entries(), &[1, 0, -1]);
    }

    #[test]
    fn dominance_examples() {
        assert!(p("2").dominates(&p("1,1")).unwrap());
        assert!(!p("1,1").dominates(&p("2")).unwrap());
        assert!(p("3,2,1").dominates(&p("2,2,2")).unwrap());
        assert!(matches!(p("2").dominates(&p("1")), Err(Error::Input(_))));
    }

    #[test]
    fn union_examples() {
        assert_eq!(p("2,1").union(&p("1")), p("2,1,1"));
        assert_eq!(p("3").union(&p("3")), p("3,3"));
        assert_eq!(p("3,1").union(&p("2,2")), p("3,2,2,1"));
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&w("1,1"), 2).unwrap(), BigUint::from(1u32));
        assert_eq!(weyl_dim(&w("2,1,0"), 3).unwrap(), BigUint::from(8u32));
        for d in 1..6usize {
            for k in 0..6u32 {
                let sym = Partition::row(k).to_weight(d).unwrap();
                let expect = num_integer::binomial(BigUint::from(d + k as usize - 1), BigUint::from(k));
                assert_eq!(weyl_dim(&sym, d).unwrap(), expect);
            }
        }
        assert!(weyl_dim(&w("1,0"), 3).is_err());
        assert_eq!(weyl_dim(&DominantWeight::zeros(0), 0).unwrap(), BigUint::one());
    }

    #[test]
    fn box_enumeration_examples() {
        assert_eq!(enumerate_in_box(2, 2, 2), vec![p("2"), p("1,1")]);
        assert_eq!(enumerate_in_box(3, 4, 0), vec![Partition::empty()]);
        assert_eq!(enumerate_box(2, 2).len(), 6);
        assert_eq!(enumerate_in_box(0, 3, 1), Vec::<Partition>::new());
    }

    #[test]
    fn column_heights_read_the_transpose() {
        let lam = p("8,7,4,3,3,1");
        let t = lam.transpose();
        for j in 1..=9 {
            assert_eq!(lam.column_height(j), t.part(j - 1));
        }
    }
}
