//! The `n`-index and `(k, n)`-index of a partition, and exhaustive checks of
//! the Grassmannian vanishing statements that use them.
//!
//! All column heights are read from the transpose: the `j`-th column of `λ`
//! has `λ†_j` boxes.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bwb::{bwb, GrassmannianContext, HomogeneousBundle};
use crate::error::{input, precondition, Result};
use crate::partitions::{enumerate_box, DominantWeight, Partition};
use crate::schur::{
    direct_sum_expand_bounded, double_bundle_expand, lr_expand_tensor_bounded, pieri_sym, pieri_wedge,
    WeightedDecomposition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexShape {
    /// Every column is short (`< j`) or long (`≥ n + j`).
    Plain,
    /// `i` long columns, all others with at most `i − 1` boxes.
    ShapeA,
    /// `i` long columns, column `i + 1` with exactly `k + i` boxes, the rest
    /// with at most `i`.
    ShapeB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub index: Option<usize>,
    pub shape: Option<IndexShape>,
}

impl IndexReport {
    const UNDEFINED: IndexReport = IndexReport { index: None, shape: None };

    pub fn defined(&self) -> bool {
        self.index.is_some()
    }
}

fn heights(lambda: &Partition) -> Vec<usize> {
    lambda.transpose().parts().iter().map(|&h| h as usize).collect()
}

fn largest_long_column(h: &[usize], n: usize) -> Option<usize> {
    h.iter().enumerate().rev().find(|&(j, &c)| c >= n + j + 1).map(|(j, _)| j + 1)
}

pub fn n_index(lambda: &Partition, n: usize) -> Result<IndexReport> {
    if lambda.is_empty() {
        return input("the index of the empty partition is undefined");
    }
    let h = heights(lambda);
    let ok = h.iter().enumerate().all(|(j, &c)| c < j + 1 || c >= n + j + 1);
    if !ok {
        return Ok(IndexReport::UNDEFINED);
    }
    Ok(IndexReport { index: largest_long_column(&h, n), shape: Some(IndexShape::Plain) })
}

pub fn kn_index(lambda: &Partition, k: usize, n: usize) -> Result<IndexReport> {
    if k > n {
        return input(format!("k = {k} exceeds n = {n}"));
    }
    if lambda.is_empty() || *lambda == Partition::column(k) {
        return input(format!("the ({k},{n})-index of {lambda} is undefined"));
    }
    let h = heights(lambda);
    let ok = h.iter().enumerate().all(|(j0, &c)| {
        let j = j0 + 1;
        c + 1 < j || c >= n + j || c == j + k - 1
    });
    if !ok {
        return Ok(IndexReport::UNDEFINED);
    }
    let Some(i) = largest_long_column(&h, n) else {
        return Ok(IndexReport::UNDEFINED);
    };
    let shape = if h.get(i).copied() == Some(k + i) { IndexShape::ShapeB } else { IndexShape::ShapeA };
    Ok(IndexReport { index: Some(i), shape: Some(shape) })
}

/// Smallest `j` with `j ≤ λ†_j ≤ n + j − 1`, the alternative to condition
/// (*) that makes `S_{λ†}(A)` acyclic.
pub fn dagger_condition(lambda: &Partition, n: usize) -> Option<usize> {
    heights(lambda).iter().enumerate().find(|&(j, &c)| j < c && c <= n + j).map(|(j, _)| j + 1)
}

/// What `S_λ(B^∨ ⊕ B^∨)` is tensored with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Twist {
    Wedge {
        #[serde(serialize_with = "crate::ser::display")]
        k: usize,
    },
    Sym {
        #[serde(serialize_with = "crate::ser::display")]
        k: usize,
    },
    DualWedges {
        #[serde(serialize_with = "crate::ser::display_seq")]
        ks: Vec<usize>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandCheck {
    /// Weight of the summand `S_δ(B^∨)`.
    pub delta: DominantWeight,
    #[serde(serialize_with = "crate::ser::display")]
    pub multiplicity: BigUint,
    pub condition_holds: bool,
    pub bwb_vanishes: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VanishingRecord {
    #[serde(serialize_with = "crate::ser::display")]
    pub d: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub n: usize,
    pub lambda: Partition,
    #[serde(serialize_with = "crate::ser::display")]
    pub index: usize,
    pub twist: Twist,
    pub summands: Vec<SummandCheck>,
    pub passed: bool,
}

fn check_box(lambda: &Partition, n: usize, d: usize, r: usize) -> Result<()> {
    if lambda.is_empty() {
        return precondition("λ must be nonzero");
    }
    let cols = d as i64 - n as i64 - r as i64 - 1;
    if cols < 0 || !lambda.fits_in_box(2 * n, cols as u32) {
        return precondition(format!("{lambda} does not fit in the {} × {cols} box", 2 * n));
    }
    Ok(())
}

fn require_index(report: IndexReport, lambda: &Partition) -> Result<usize> {
    match report.index {
        Some(i) => Ok(i),
        None => precondition(format!("the index of {lambda} is undefined")),
    }
}

fn base_decomposition(lambda: &Partition, n: usize) -> Result<WeightedDecomposition> {
    let mut out = WeightedDecomposition::new();
    for (g, m) in double_bundle_expand(lambda, n)?.iter() {
        out.add(g.to_weight(n)?, m.clone());
    }
    Ok(out)
}

fn tensor_each<F>(dec: &WeightedDecomposition, op: F) -> Result<WeightedDecomposition>
where
    F: Fn(&DominantWeight) -> Result<WeightedDecomposition>,
{
    let mut out = WeightedDecomposition::new();
    for (w, m) in dec.iter() {
        out.absorb(&op(w)?, m);
    }
    Ok(out)
}

fn record(d: usize, n: usize, lambda: &Partition, i: usize, twist: Twist, dec: WeightedDecomposition) -> VanishingRecord {
    let ctx = GrassmannianContext { d, n };
    let summands: Vec<SummandCheck> = dec
        .iter()
        .map(|(delta, m)| {
            let di = delta.entries()[i - 1];
            let condition_holds = i as i64 <= di && di <= (d - n + i) as i64 - 1;
            let bundle =
                HomogeneousBundle::new(ctx, delta.negate_reverse(), DominantWeight::zeros(d - n)).unwrap();
            SummandCheck { delta: delta.clone(), multiplicity: m.clone(), condition_holds, bwb_vanishes: bwb(&bundle).vanishes() }
        })
        .collect();
    let passed = summands.iter().all(|s| s.condition_holds && s.bwb_vanishes);
    VanishingRecord { d, n, lambda: lambda.clone(), index: i, twist, summands, passed }
}

/// Every `S_δ(B^∨)` in `S_λ(B^∨ ⊕ B^∨) ⊗ ∧^k B` must satisfy
/// `i ≤ δ_i ≤ d − n + i − 1` at the `n`-index `i`, and be acyclic.
pub fn verify_wedge_vanishing(d: usize, n: usize, lambda: &Partition, k: usize) -> Result<VanishingRecord> {
    check_box(lambda, n, d, 0)?;
    let i = require_index(n_index(lambda, n)?, lambda)?;
    if k > n {
        return precondition(format!("k = {k} exceeds n = {n}"));
    }
    let dec = tensor_each(&base_decomposition(lambda, n)?, |w| pieri_wedge(w, k, true))?;
    Ok(record(d, n, lambda, i, Twist::Wedge { k }, dec))
}

/// Same contract for `Sym^k B`; when the index equals `n`, only `k ≤ n` is claimed.
pub fn verify_sym_vanishing(d: usize, n: usize, lambda: &Partition, k: usize) -> Result<VanishingRecord> {
    check_box(lambda, n, d, 0)?;
    let i = require_index(n_index(lambda, n)?, lambda)?;
    if i == n && k > n {
        return precondition(format!("index {i} = n requires k ≤ n, got k = {k}"));
    }
    let dec = tensor_each(&base_decomposition(lambda, n)?, |w| Ok(pieri_sym(w, k, true)))?;
    Ok(record(d, n, lambda, i, Twist::Sym { k }, dec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualMode {
    /// `n`-index, `r` exterior factors.
    Plain,
    /// `(k, n)`-index, `r − 1` exterior factors.
    Plus {
        #[serde(serialize_with = "crate::ser::display")]
        k: usize,
    },
}

/// Every `S_δ(B^∨)` in `S_λ(B^∨ ⊕ B^∨) ⊗ ∧^{k_1} B^∨ ⊗ ⋯` satisfies the
/// condition at the relevant index, for `λ` in the `(2n) × (d − n − r − 1)` box.
pub fn verify_dual_vanishing(
    d: usize,
    n: usize,
    r: usize,
    lambda: &Partition,
    ks: &[usize],
    mode: DualMode,
) -> Result<VanishingRecord> {
    check_box(lambda, n, d, r)?;
    let i = match mode {
        DualMode::Plain => {
            if ks.len() != r {
                return precondition(format!("expected {r} exterior factors, got {}", ks.len()));
            }
            require_index(n_index(lambda, n)?, lambda)?
        }
        DualMode::Plus { k } => {
            if r == 0 || ks.len() != r - 1 {
                return precondition(format!("expected r − 1 = {} exterior factors", r as i64 - 1));
            }
            if k > n {
                return precondition(format!("k = {k} exceeds n = {n}"));
            }
            if *lambda == Partition::column(k) {
                return precondition(format!("the ({k},{n})-index of {lambda} is undefined"));
            }
            require_index(kn_index(lambda, k, n)?, lambda)?
        }
    };
    if let Some(&bad) = ks.iter().find(|&&k| k > n) {
        return precondition(format!("exterior power {bad} exceeds rank {n}"));
    }
    let mut dec = base_decomposition(lambda, n)?;
    for &k in ks {
        dec = tensor_each(&dec, |w| pieri_wedge(w, k, false))?;
    }
    Ok(record(d, n, lambda, i, Twist::DualWedges { ks: ks.to_vec() }, dec))
}

/// Summary of a run over a box of partitions.
#[derive(Debug, Clone, Serialize)]
pub struct GridReport {
    pub statement: String,
    #[serde(serialize_with = "crate::ser::display")]
    pub d: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub n: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub r: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub partitions_examined: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub partitions_without_index: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub checks: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub summands_checked: usize,
    pub failures: Vec<VanishingRecord>,
    pub passed: bool,
}

fn box_partitions(n: usize, cols: i64, max_size: Option<u32>) -> Vec<Partition> {
    if cols < 0 {
        return Vec::new();
    }
    enumerate_box(2 * n, cols as u32)
        .into_iter()
        .filter(|l| !l.is_empty() && max_size.is_none_or(|s| l.size() <= s))
        .collect()
}

fn tuples(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn summarize(statement: &str, d: usize, n: usize, r: usize, examined: usize, per_lambda: Vec<Option<Vec<VanishingRecord>>>) -> GridReport {
    let without = per_lambda.iter().filter(|x| x.is_none()).count();
    let records: Vec<VanishingRecord> = per_lambda.into_iter().flatten().flatten().collect();
    let summands_checked = records.iter().map(|r| r.summands.len()).sum();
    let checks = records.len();
    let failures: Vec<_> = records.into_iter().filter(|r| !r.passed).collect();
    GridReport {
        statement: statement.to_string(),
        d,
        n,
        r,
        partitions_examined: examined,
        partitions_without_index: without,
        checks,
        summands_checked,
        passed: failures.is_empty(),
        failures,
    }
}

/// Exterior-power vanishing over every `λ ≠ 0` in the `(2n) × (d − n − 1)` box
/// with an `n`-index, and every `0 ≤ k ≤ n`.
pub fn verify_wedge_grid(d: usize, n: usize, max_size: Option<u32>) -> Result<GridReport> {
    GrassmannianContext::new(d, n)?;
    let lams = box_partitions(n, d as i64 - n as i64 - 1, max_size);
    let per: Result<Vec<_>> = lams
        .par_iter()
        .map(|lam| {
            if !n_index(lam, n)?.defined() {
                return Ok(None);
            }
            (0..=n).map(|k| verify_wedge_vanishing(d, n, lam, k)).collect::<Result<Vec<_>>>().map(Some)
        })
        .collect();
    Ok(summarize("wedge", d, n, 0, lams.len(), per?))
}

/// Symmetric-power vanishing. For index `i < n` the statement covers every
/// `k`; the finite window `0 ≤ k ≤ d` is checked. For `i = n`, `0 ≤ k ≤ n`.
pub fn verify_sym_grid(d: usize, n: usize, max_size: Option<u32>) -> Result<GridReport> {
    GrassmannianContext::new(d, n)?;
    let lams = box_partitions(n, d as i64 - n as i64 - 1, max_size);
    let per: Result<Vec<_>> = lams
        .par_iter()
        .map(|lam| {
            let Some(i) = n_index(lam, n)?.index else {
                return Ok(None);
            };
            let top = if i < n { d } else { n };
            (0..=top).map(|k| verify_sym_vanishing(d, n, lam, k)).collect::<Result<Vec<_>>>().map(Some)
        })
        .collect();
    Ok(summarize("sym", d, n, 0, lams.len(), per?))
}

/// Dualized exterior powers for quotient-side factor count `r`: plain mode
/// with all `k_1..k_r ∈ [0, n]`, and for `r ≥ 1` the `(k, n)`-index mode with
/// every `0 ≤ k ≤ n` and all `k_1..k_{r−1} ∈ [0, n]`.
pub fn verify_dual_grid(d: usize, n: usize, r: usize, max_size: Option<u32>) -> Result<GridReport> {
    GrassmannianContext::new(d, n)?;
    let lams = box_partitions(n, d as i64 - n as i64 - r as i64 - 1, max_size);
    let plain = tuples(r, n);
    let plus = if r > 0 { tuples(r - 1, n) } else { Vec::new() };
    let per: Result<Vec<_>> = lams
        .par_iter()
        .map(|lam| {
            let mut out = Vec::new();
            let mut any = false;
            if n_index(lam, n)?.defined() {
                any = true;
                for ks in &plain {
                    out.push(verify_dual_vanishing(d, n, r, lam, ks, DualMode::Plain)?);
                }
            }
            if r > 0 {
                for k in 0..=n {
                    if *lam == Partition::column(k) || !kn_index(lam, k, n)?.defined() {
                        continue;
                    }
                    any = true;
                    for ks in &plus {
                        out.push(verify_dual_vanishing(d, n, r, lam, ks, DualMode::Plus { k })?);
                    }
                }
            }
            Ok(any.then_some(out))
        })
        .collect();
    Ok(summarize("dual", d, n, r, lams.len(), per?))
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaViolation {
    pub lemma: String,
    pub lambda: Partition,
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    #[serde(serialize_with = "crate::ser::display")]
    pub d: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub n: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub partitions: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub triples: usize,
    pub violations: Vec<LemmaViolation>,
    pub passed: bool,
}

/// Triples `(α, β, γ)` with `c^λ_{αβ} c^γ_{αβ} ≠ 0` and `γ` of at most `n` rows.
pub fn lr_triples(lambda: &Partition, n: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for (a, b, _) in direct_sum_expand_bounded(lambda, n) {
        for g in lr_expand_tensor_bounded(&a, &b, n).keys() {
            out.push((a.clone(), b.clone(), g.clone()));
        }
    }
    out
}

fn lemma_violations(d: usize, n: usize, lambda: &Partition, i: usize, gamma_upper_only: bool) -> (usize, Vec<LemmaViolation>) {
    let triples = lr_triples(lambda, n);
    let mut out = Vec::new();
    let top = (d - n + i) as u32 - 1;
    for (a, b, g) in &triples {
        let mut fail = |name: &str| {
            out.push(LemmaViolation {
                lemma: name.to_string(),
                lambda: lambda.clone(),
                alpha: a.clone(),
                beta: b.clone(),
                gamma: g.clone(),
            })
        };
        let gi = g.part(i - 1);
        if gamma_upper_only {
            if gi > top {
                fail("gamma-upper-relaxed");
            }
            continue;
        }
        if a.part(i - 1) < i as u32 {
            fail("alpha-i-at-least-i");
        }
        let prefix: u32 = (0..i).map(|j| a.part(j) + b.part(j)).sum();
        if prefix > i as u32 * top {
            fail("alpha-plus-beta-prefix");
        }
        if gi < i as u32 + 1 || gi > top {
            fail("gamma-i-bounds");
        }
        if i < n && g.part(i) < i as u32 {
            fail("gamma-next-row");
        }
        if i == n && g.part(n - 1) < 2 * n as u32 {
            fail("gamma-n-at-least-2n");
        }
    }
    (triples.len(), out)
}

/// The four supporting lemmas, checked on every LR triple for every `λ ≠ 0`
/// of size at most `max_size` in the `(2n) × (d − n − 1)` box with an `n`-index.
pub fn check_lemmas(d: usize, n: usize, max_size: u32) -> Result<LemmaReport> {
    GrassmannianContext::new(d, n)?;
    let lams: Vec<(Partition, usize)> = box_partitions(n, d as i64 - n as i64 - 1, Some(max_size))
        .into_iter()
        .filter_map(|l| n_index(&l, n).unwrap().index.map(|i| (l, i)))
        .collect();
    let results: Vec<_> = lams.par_iter().map(|(l, i)| lemma_violations(d, n, l, *i, false)).collect();
    let triples = results.iter().map(|r| r.0).sum();
    let violations: Vec<_> = results.into_iter().flat_map(|r| r.1).collect();
    Ok(LemmaReport { d, n, partitions: lams.len(), triples, passed: violations.is_empty(), violations })
}

/// Upper bound `γ_i ≤ d − n + i − 1` under the weaker hypothesis
/// `λ_1 + ⋯ + λ_i ≤ i(d − n − 1) + i − 1` in place of the box, over `λ` with
/// at most `2n` rows and `max_cols` columns. Exploratory: violations are
/// returned, not treated as errors.
pub fn check_relaxed_gamma_bound(d: usize, n: usize, max_cols: u32, max_size: u32) -> Result<LemmaReport> {
    GrassmannianContext::new(d, n)?;
    let lams: Vec<(Partition, usize)> = enumerate_box(2 * n, max_cols)
        .into_iter()
        .filter(|l| !l.is_empty() && l.size() <= max_size)
        .filter_map(|l| {
            let i = n_index(&l, n).unwrap().index?;
            let prefix: i64 = (0..i).map(|j| l.part(j) as i64).sum();
            let bound = i as i64 * (d as i64 - n as i64 - 1) + i as i64 - 1;
            (prefix <= bound).then_some((l, i))
        })
        .collect();
    let results: Vec<_> = lams.par_iter().map(|(l, i)| lemma_violations(d, n, l, *i, true)).collect();
    let triples = results.iter().map(|r| r.0).sum();
    let violations: Vec<_> = results.into_iter().flat_map(|r| r.1).collect();
    Ok(LemmaReport { d, n, partitions: lams.len(), triples, passed: violations.is_empty(), violations })
}
