//! Truncated bivariate power series in `q` and `y`, and genus-0 generating
//! series of Euler characteristics.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Num, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{precondition, Result};
use crate::quot::{quot_cohomology, EmbeddingData, Side, TautologicalSheafSpec};

/// `Σ c_{ij} q^i y^j` truncated to `i ≤ n_max`, `j ≤ k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries<T> {
    n_max: usize,
    k_max: usize,
    coeffs: Vec<Vec<T>>,
}

pub type IntSeries = BivariateSeries<BigInt>;

impl<T: Clone + Num> BivariateSeries<T> {
    pub fn zero(n_max: usize, k_max: usize) -> Self {
        Self { n_max, k_max, coeffs: vec![vec![T::zero(); k_max + 1]; n_max + 1] }
    }

    pub fn one(n_max: usize, k_max: usize) -> Self {
        Self::monomial(n_max, k_max, 0, 0, T::one())
    }

    /// `c · q^i y^j`, or zero if the monomial lies beyond the truncation.
    pub fn monomial(n_max: usize, k_max: usize, i: usize, j: usize, c: T) -> Self {
        let mut s = Self::zero(n_max, k_max);
        if i <= n_max && j <= k_max {
            s.coeffs[i][j] = c;
        }
        s
    }

    pub fn from_fn(n_max: usize, k_max: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let coeffs = (0..=n_max).map(|i| (0..=k_max).map(|j| f(i, j)).collect()).collect();
        Self { n_max, k_max, coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn coeff(&self, i: usize, j: usize) -> &T {
        &self.coeffs[i][j]
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!((self.n_max, self.k_max), (other.n_max, other.k_max), "truncation orders differ");
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n_max, self.k_max);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Inverse of a series whose constant term is `±1`.
    pub fn recip(&self) -> Option<Self> {
        let c = self.coeffs[0][0].clone();
        if c.clone() * c.clone() != T::one() {
            return None;
        }
        // c · Σ_{a,b} inv_{ab} s_{i−a, j−b} = 0 for (i, j) ≠ 0
        let mut inv = Self::zero(self.n_max, self.k_max);
        for i in 0..=self.n_max {
            for j in 0..=self.k_max {
                if (i, j) == (0, 0) {
                    inv.coeffs[0][0] = c.clone();
                    continue;
                }
                let mut acc = T::zero();
                for a in 0..=i {
                    for b in 0..=j {
                        if (a, b) != (i, j) {
                            acc = acc + inv.coeffs[a][b].clone() * self.coeffs[i - a][j - b].clone();
                        }
                    }
                }
                inv.coeffs[i][j] = T::zero() - acc * c.clone();
            }
        }
        Some(inv)
    }

    /// Integer power, negative exponents through [`Self::recip`].
    pub fn powi(&self, e: i64) -> Option<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e >= 0 {
            Some(p)
        } else {
            p.recip()
        }
    }
}

impl<T: Clone + Num> Add for &BivariateSeries<T> {
    type Output = BivariateSeries<T>;

    fn add(self, other: Self) -> BivariateSeries<T> {
        self.check_shape(other);
        BivariateSeries::from_fn(self.n_max, self.k_max, |i, j| self.coeffs[i][j].clone() + other.coeffs[i][j].clone())
    }
}

impl<T: Clone + Num> Sub for &BivariateSeries<T> {
    type Output = BivariateSeries<T>;

    fn sub(self, other: Self) -> BivariateSeries<T> {
        self.check_shape(other);
        BivariateSeries::from_fn(self.n_max, self.k_max, |i, j| self.coeffs[i][j].clone() - other.coeffs[i][j].clone())
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &BivariateSeries<T> {
    type Output = BivariateSeries<T>;

    fn neg(self) -> BivariateSeries<T> {
        BivariateSeries::from_fn(self.n_max, self.k_max, |i, j| -self.coeffs[i][j].clone())
    }
}

impl<T: Clone + Num> Mul for &BivariateSeries<T> {
    type Output = BivariateSeries<T>;

    fn mul(self, other: Self) -> BivariateSeries<T> {
        self.check_shape(other);
        let mut out: BivariateSeries<T> = BivariateSeries::zero(self.n_max, self.k_max);
        for (a, row) in self.coeffs.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for i in a..=self.n_max {
                    for j in b..=self.k_max {
                        let y = &other.coeffs[i - a][j - b];
                        if !y.is_zero() {
                            out.coeffs[i][j] = out.coeffs[i][j].clone() + x.clone() * y.clone();
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Wedge,
    Sym,
    Dual,
}

/// Genus-0 closed forms with `e = χ(E ⊗ L)` (`= N·χ(L)` for trivial `E`):
/// `(1−q)^{−1}(1+qy)^e`, `(1−q)^{−1}(1−qy)^{−e}` and `(1−q)^{−1}`.
pub fn closed_form_exponent(kind: SeriesKind, e: i64, n_max: usize, k_max: usize) -> IntSeries {
    let one = IntSeries::one(n_max, k_max);
    let q = IntSeries::monomial(n_max, k_max, 1, 0, BigInt::one());
    let qy = IntSeries::monomial(n_max, k_max, 1, 1, BigInt::one());
    let pole = (&one - &q).recip().unwrap();
    match kind {
        SeriesKind::Wedge => &pole * &(&one + &qy).powi(e).unwrap(),
        SeriesKind::Sym => &pole * &(&one - &qy).powi(-e).unwrap(),
        SeriesKind::Dual => pole,
    }
}

pub fn closed_form(kind: SeriesKind, big_n: usize, chi_l: i64, n_max: usize, k_max: usize) -> IntSeries {
    closed_form_exponent(kind, big_n as i64 * chi_l, n_max, k_max)
}

fn spec_for(kind: SeriesKind, k: usize) -> TautologicalSheafSpec {
    match kind {
        SeriesKind::Wedge => TautologicalSheafSpec::Wedge { k, side: Side::G2 },
        SeriesKind::Sym => TautologicalSheafSpec::Sym { k, side: Side::G2 },
        SeriesKind::Dual => TautologicalSheafSpec::DualWedgeProduct { factors: vec![(k, Side::G2)] },
    }
}

/// `Σ q^n y^k χ(Quot(E, n), F_k)` from the resolution, with `F_k` one of
/// `∧^k L^{[n]}`, `Sym^k L^{[n]}`, `(∧^k L^{[n]})^∨`, all realized with
/// `m = deg L`.
pub fn resolution_series(kind: SeriesKind, splitting: &[i64], deg_l: i64, n_max: usize, k_max: usize) -> Result<IntSeries> {
    let need = EmbeddingData::minimal_m(splitting, n_max);
    if deg_l < need {
        return precondition(format!("deg L = {deg_l} must be at least {need} to cover n ≤ {n_max}"));
    }
    let cells: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (0..=k_max).map(move |k| (n, k))).collect();
    let values: Result<Vec<BigInt>> = cells
        .par_iter()
        .map(|&(n, k)| {
            let data = EmbeddingData::new(splitting.len(), splitting.to_vec(), n, 0, deg_l)?;
            let spec = spec_for(kind, k);
            if spec.is_zero_sheaf(&data) {
                return Ok(BigInt::zero());
            }
            Ok(quot_cohomology(&data, &spec)?.chi)
        })
        .collect();
    let values = values?;
    Ok(IntSeries::from_fn(n_max, k_max, |n, k| values[n * (k_max + 1) + k].clone()))
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesEntry {
    #[serde(serialize_with = "crate::ser::display")]
    pub n: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub k: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub closed_form: BigInt,
    #[serde(serialize_with = "crate::ser::display")]
    pub resolution: BigInt,
    pub in_window: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    #[serde(rename = "N", serialize_with = "crate::ser::display")]
    pub big_n: usize,
    #[serde(serialize_with = "crate::ser::display_seq")]
    pub splitting: Vec<i64>,
    #[serde(rename = "degL", serialize_with = "crate::ser::display")]
    pub deg_l: i64,
    #[serde(serialize_with = "crate::ser::display")]
    pub n_max: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub k_max: usize,
    pub window: &'static str,
    pub entries: Vec<SeriesEntry>,
    pub discrepancies: Vec<SeriesEntry>,
    pub verdict: bool,
}

/// Coefficientwise comparison on the window where the theorems apply:
/// every `k` for exterior powers and dual products, `k ≤ n` for symmetric
/// powers. Uses `k_max = n_max`.
pub fn compare(kind: SeriesKind, splitting: &[i64], deg_l: i64, n_max: usize) -> Result<SeriesReport> {
    let k_max = n_max;
    let computed = resolution_series(kind, splitting, deg_l, n_max, k_max)?;
    let e: i64 = splitting.iter().map(|a| a + deg_l + 1).sum();
    let closed = closed_form_exponent(kind, e, n_max, k_max);
    let window = match kind {
        SeriesKind::Sym => "k <= n",
        _ => "all k",
    };
    let mut entries = Vec::new();
    for n in 0..=n_max {
        for k in 0..=k_max {
            entries.push(SeriesEntry {
                n,
                k,
                closed_form: closed.coeff(n, k).clone(),
                resolution: computed.coeff(n, k).clone(),
                in_window: kind != SeriesKind::Sym || k <= n,
            });
        }
    }
    let discrepancies: Vec<SeriesEntry> =
        entries.iter().filter(|e| e.in_window && e.closed_form != e.resolution).cloned().collect();
    Ok(SeriesReport {
        kind,
        big_n: splitting.len(),
        splitting: splitting.to_vec(),
        deg_l,
        n_max,
        k_max,
        window,
        entries,
        verdict: discrepancies.is_empty(),
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn arithmetic_round_trip() {
        let one = IntSeries::one(5, 3);
        let q = IntSeries::monomial(5, 3, 1, 0, int(1));
        let a = &one - &q;
        assert_eq!(&a * &a.recip().unwrap(), one);
        let b = &one + &IntSeries::monomial(5, 3, 1, 1, int(3));
        assert_eq!(&b.pow(4) * &b.powi(-4).unwrap(), one);
        assert!(IntSeries::monomial(5, 3, 0, 0, int(2)).recip().is_none());
    }

    #[test]
    fn closed_form_examples() {
        let w = closed_form(SeriesKind::Wedge, 2, 3, 4, 4);
        assert_eq!(*w.coeff(0, 0), int(1));
        for n in 0..=4 {
            for k in 0..=4 {
                let expect = if k <= n { binomial(int(6), int(k as i64)) } else { int(0) };
                assert_eq!(*w.coeff(n, k), expect);
            }
        }
        let d = closed_form(SeriesKind::Dual, 3, 2, 3, 2);
        for n in 0..=3 {
            assert_eq!(*d.coeff(n, 0), int(1));
            assert_eq!(*d.coeff(n, 1), int(0));
        }
        let s = closed_form(SeriesKind::Sym, 2, 3, 3, 3);
        assert_eq!(*s.coeff(2, 2), binomial(int(7), int(2)));
    }

    #[test]
    fn small_comparisons() {
        for kind in [SeriesKind::Wedge, SeriesKind::Sym, SeriesKind::Dual] {
            let r = compare(kind, &[0, 0], 2, 2).unwrap();
            assert!(r.verdict, "{kind:?}: {:?}", r.discrepancies);
        }
        let s = resolution_series(SeriesKind::Wedge, &[0, 0], 3, 2, 2).unwrap();
        assert_eq!(*s.coeff(2, 1), int(8));
        assert_eq!((s.coeff(0, 0).clone(), s.coeff(0, 1).clone()), (int(1), int(0)));
        assert!(resolution_series(SeriesKind::Wedge, &[0, 0], 1, 2, 2).is_err());
    }
}
