//! Littlewood–Richardson coefficients, Pieri rules and the Cauchy
//! decomposition of exterior powers of a tensor product.
//!
//! LR coefficients are counted by filling the skew diagram `γ/α` in reading
//! order (rows top to bottom, each row right to left) with labels that are
//! weakly increasing along rows, strictly increasing down columns, and
//! whose reading word is a lattice word. Results are memoized in a
//! process-wide cache that can be persisted with [`save_lr_cache`].

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{input, Result};
use crate::partitions::{enumerate_in_box, weyl_dim, DominantWeight, Partition};

/// A multiset of representations with positive multiplicities, kept in
/// canonical (lexicographic) key order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<K: Ord> {
    terms: BTreeMap<K, BigUint>,
}

pub type WeightedDecomposition = Decomposition<DominantWeight>;
pub type PartitionDecomposition = Decomposition<Partition>;

impl<K: Ord> Default for Decomposition<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Decomposition<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: K) -> Self {
        let mut d = Self::new();
        d.add(key, BigUint::from(1u32));
        d
    }

    /// Adds `mult` copies of `key`; zero multiplicities are ignored.
    pub fn add(&mut self, key: K, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(key).or_default() += mult;
    }

    pub fn multiplicity(&self, key: &K) -> BigUint {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigUint)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_multiplicity(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Adds every term of `other`, scaled by `factor`.
    pub fn absorb(&mut self, other: &Self, factor: &BigUint) {
        for (k, m) in &other.terms {
            self.add(k.clone(), m * factor);
        }
    }
}

impl WeightedDecomposition {
    /// `Σ mult · dim S_w(C^{len w})`.
    pub fn total_dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(w, m)| m * weyl_dim(w, w.len()).expect("length matches by construction"))
            .sum()
    }
}

impl PartitionDecomposition {
    /// `Σ mult · dim S_γ(C^d)`; terms with more than `d` rows contribute zero.
    pub fn total_dimension(&self, d: usize) -> BigUint {
        self.terms
            .iter()
            .filter(|(p, _)| p.len() <= d)
            .map(|(p, m)| m * weyl_dim(&p.to_weight(d).unwrap(), d).unwrap())
            .sum()
    }
}

impl<K: Ord + Serialize> Serialize for Decomposition<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (k, m) in &self.terms {
            map.serialize_entry(k, &m.to_string())?;
        }
        map.end()
    }
}

/// One summand `S_{λ†}(V) ⊗ S_λ(W)` of `∧^ℓ(V ⊗ W)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyTerm {
    pub left: Partition,
    pub right: Partition,
}

type Triple = (Partition, Partition, Partition);

#[derive(Default)]
struct SchurCache {
    lr: RwLock<HashMap<Triple, u64>>,
    tensor: RwLock<HashMap<(Partition, Partition, usize), Arc<PartitionDecomposition>>>,
    double: RwLock<HashMap<(Partition, usize), Arc<PartitionDecomposition>>>,
}

static CACHE: LazyLock<SchurCache> = LazyLock::new(SchurCache::default);

fn cached<K, V, F>(table: &RwLock<HashMap<K, V>>, key: K, compute: F) -> V
where
    K: std::hash::Hash + Eq,
    V: Clone,
    F: FnOnce(&K) -> V,
{
    if let Some(v) = table.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute(&key);
    table.write().unwrap().entry(key).or_insert(v).clone()
}

/// Backtracking filler for LR tableaux of a skew shape.
struct SkewFiller<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: Option<&'a Partition>,
    max_label: usize,
    cells: Vec<(usize, usize)>,
    labels: Vec<Vec<usize>>,
    counts: Vec<u32>,
}

impl<'a> SkewFiller<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, content: Option<&'a Partition>, max_label: usize) -> Self {
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (inner.part(r) as usize..outer.part(r) as usize).rev() {
                cells.push((r, c));
            }
        }
        let labels = outer.parts().iter().map(|&p| vec![0; p as usize]).collect();
        Self { outer, inner, content, max_label, cells, labels, counts: vec![0; max_label + 2] }
    }

    fn run(&mut self, idx: usize, done: &mut dyn FnMut(&[u32])) {
        if idx == self.cells.len() {
            done(&self.counts[1..=self.max_label]);
            return;
        }
        let (r, c) = self.cells[idx];
        let mut hi = self.max_label.min(r + 1);
        if c + 1 < self.outer.part(r) as usize {
            hi = hi.min(self.labels[r][c + 1]);
        }
        let lo = if r > 0 && c >= self.inner.part(r - 1) as usize { self.labels[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi {
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            if let Some(beta) = self.content {
                if self.counts[v] >= beta.part(v - 1) {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.labels[r][c] = v;
            self.run(idx + 1, done);
            self.counts[v] -= 1;
        }
    }
}

fn count_lr_tableaux(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    let mut filler = SkewFiller::new(gamma, alpha, Some(beta), beta.len());
    let mut total = 0u64;
    filler.run(0, &mut |_| total += 1);
    total
}

/// LR tableaux of shape `outer/inner` grouped by content, labels at most `max_label`.
fn lr_fillings_by_content(outer: &Partition, inner: &Partition, max_label: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let mut filler = SkewFiller::new(outer, inner, None, max_label);
    filler.run(0, &mut |counts| {
        *out.entry(Partition::from_sorted(counts.to_vec())).or_insert(0) += 1;
    });
    out
}

/// The Littlewood–Richardson coefficient `c^γ_{α,β}`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigUint {
    BigUint::from(lr_count(alpha, beta, gamma))
}

fn lr_count(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if gamma.size() != alpha.size() + beta.size() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return 0;
    }
    cached(&CACHE.lr, (alpha.clone(), beta.clone(), gamma.clone()), |(a, b, g)| count_lr_tableaux(a, b, g))
}

/// Candidate shapes `γ ⊇ α ∪ β` of the right size with `α + β` dominating `γ`.
fn tensor_candidates(alpha: &Partition, beta: &Partition, max_rows: usize) -> Vec<Partition> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        rows: usize,
        cap: u32,
        remaining: u32,
        prefix: u32,
        alpha: &Partition,
        beta: &Partition,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            if (i..rows).all(|j| alpha.part(j) == 0 && beta.part(j) == 0) {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        if i == rows {
            return;
        }
        let lo = alpha.part(i).max(beta.part(i));
        let bound: u32 = (0..=i).map(|j| alpha.part(j) + beta.part(j)).sum::<u32>() - prefix;
        let hi = cap.min(remaining).min(bound);
        for g in (lo.max(1)..=hi).rev() {
            if (g as u64) * ((rows - i) as u64) < remaining as u64 {
                break;
            }
            cur.push(g);
            rec(i + 1, rows, g, remaining - g, prefix + g, alpha, beta, cur, out);
            cur.pop();
        }
    }
    let rows = max_rows.min(alpha.len() + beta.len());
    if alpha.len() > rows || beta.len() > rows {
        return Vec::new();
    }
    let total = alpha.size() + beta.size();
    let mut out = Vec::new();
    rec(0, rows, total, total, 0, alpha, beta, &mut Vec::new(), &mut out);
    out
}

/// `S_α ⊗ S_β = ⊕ S_γ^{c^γ_{αβ}}`.
pub fn lr_expand_tensor(alpha: &Partition, beta: &Partition) -> PartitionDecomposition {
    lr_expand_tensor_bounded(alpha, beta, usize::MAX)
}

/// As [`lr_expand_tensor`], keeping only `γ` with at most `max_rows` rows
/// (the decomposition over `GL_{max_rows}`).
pub fn lr_expand_tensor_bounded(alpha: &Partition, beta: &Partition, max_rows: usize) -> PartitionDecomposition {
    let key = (alpha.clone(), beta.clone(), max_rows);
    let arc = cached(&CACHE.tensor, key, |(a, b, rows)| {
        let mut dec = PartitionDecomposition::new();
        for g in tensor_candidates(a, b, *rows) {
            dec.add(g.clone(), lr_coefficient(a, b, &g));
        }
        Arc::new(dec)
    });
    (*arc).clone()
}

fn sub_partitions(outer: &Partition, max_rows: usize) -> Vec<Partition> {
    fn rec(i: usize, rows: usize, cap: u32, outer: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_sorted(cur.clone()));
        if i == rows {
            return;
        }
        for a in 1..=cap.min(outer.part(i)) {
            cur.push(a);
            rec(i + 1, rows, a, outer, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max_rows.min(outer.len()), outer.width(), outer, &mut Vec::new(), &mut out);
    out
}

/// `S_λ(V ⊕ W) = ⊕ (S_α V ⊗ S_β W)^{c^λ_{αβ}}`: every `(α, β, c)` with `c ≠ 0`.
pub fn direct_sum_expand(lambda: &Partition) -> Vec<(Partition, Partition, BigUint)> {
    direct_sum_expand_bounded(lambda, usize::MAX)
}

/// As [`direct_sum_expand`] with both `α` and `β` limited to `max_rows` rows.
pub fn direct_sum_expand_bounded(lambda: &Partition, max_rows: usize) -> Vec<(Partition, Partition, BigUint)> {
    let rows = max_rows.min(lambda.len().max(1));
    let mut out = Vec::new();
    for alpha in sub_partitions(lambda, rows) {
        for (beta, c) in lr_fillings_by_content(lambda, &alpha, rows) {
            if beta.len() <= rows {
                out.push((alpha.clone(), beta, BigUint::from(c)));
            }
        }
    }
    out
}

/// `S_λ(B ⊕ B)` for a rank-`n` bundle `B`, as `⊕ S_γ(B)` with multiplicity
/// `Σ_{α,β} c^λ_{αβ} c^γ_{αβ}` over `γ` with at most `n` rows.
pub fn double_bundle_expand(lambda: &Partition, n: usize) -> Result<PartitionDecomposition> {
    if lambda.len() > 2 * n {
        return input(format!("{lambda} has more than 2n = {} rows", 2 * n));
    }
    let arc = cached(&CACHE.double, (lambda.clone(), n), |(lam, n)| {
        let mut dec = PartitionDecomposition::new();
        for (alpha, beta, c) in direct_sum_expand_bounded(lam, *n) {
            dec.absorb(&lr_expand_tensor_bounded(&alpha, &beta, *n), &c);
        }
        Arc::new(dec)
    });
    Ok((*arc).clone())
}

/// Cauchy decomposition of `∧^ℓ(V ⊗ W)` with `rank V = rank_left`,
/// `rank W = rank_right`: all `λ ⊢ ℓ` with at most `rank_right` rows and
/// `rank_left` columns, paired as `(λ†, λ)`.
pub fn cauchy_wedge(ell: u32, rank_left: usize, rank_right: usize) -> Vec<CauchyTerm> {
    enumerate_in_box(rank_right, rank_left as u32, ell)
        .into_iter()
        .map(|lam| CauchyTerm { left: lam.transpose(), right: lam })
        .collect()
}

/// Twists the weight until its smallest entry is nonnegative, applies `op`
/// and untwists the results.
fn with_nonnegative<F>(w: &DominantWeight, op: F) -> WeightedDecomposition
where
    F: FnOnce(&DominantWeight) -> WeightedDecomposition,
{
    let shift = (-w.min_entry().unwrap_or(0)).max(0);
    let shifted = op(&w.shift(shift));
    let mut out = WeightedDecomposition::new();
    for (v, m) in shifted.iter() {
        out.add(v.shift(-shift), m.clone());
    }
    out
}

fn negate_reverse_all(dec: &WeightedDecomposition) -> WeightedDecomposition {
    let mut out = WeightedDecomposition::new();
    for (v, m) in dec.iter() {
        out.add(v.negate_reverse(), m.clone());
    }
    out
}

/// `S_w(V) ⊗ ∧^k V` (or `∧^k V^∨` when `dualized`), with `rank V = len w`.
pub fn pieri_wedge(w: &DominantWeight, k: usize, dualized: bool) -> Result<WeightedDecomposition> {
    if k > w.len() {
        return input(format!("cannot take the {k}-th exterior power of a rank {} bundle", w.len()));
    }
    if dualized {
        return Ok(negate_reverse_all(&pieri_wedge(&w.negate_reverse(), k, false)?));
    }
    fn rec(e: &[i64], i: usize, left: usize, cur: &mut Vec<i64>, out: &mut WeightedDecomposition) {
        if i == e.len() {
            if left == 0 {
                out.add(DominantWeight::from_sorted(cur.clone()), BigUint::from(1u32));
            }
            return;
        }
        if e.len() - i < left {
            return;
        }
        for bump in [1, 0] {
            if bump == 1 && left == 0 {
                continue;
            }
            let v = e[i] + bump;
            if i > 0 && cur[i - 1] < v {
                continue;
            }
            cur.push(v);
            rec(e, i + 1, left - bump as usize, cur, out);
            cur.pop();
        }
    }
    Ok(with_nonnegative(w, |w| {
        let mut out = WeightedDecomposition::new();
        rec(w.entries(), 0, k, &mut Vec::new(), &mut out);
        out
    }))
}

/// `S_w(V) ⊗ Sym^k V` (or `Sym^k V^∨` when `dualized`): the weights `ν` with
/// `|ν| = |w| ± k` interlacing `w`.
pub fn pieri_sym(w: &DominantWeight, k: usize, dualized: bool) -> WeightedDecomposition {
    if dualized {
        return negate_reverse_all(&pieri_sym(&w.negate_reverse(), k, false));
    }
    // ν_1 ≥ w_1 ≥ ν_2 ≥ w_2 ≥ ... ≥ ν_r ≥ w_r
    fn rec(e: &[i64], j: usize, left: i64, tail: &mut Vec<i64>, out: &mut WeightedDecomposition) {
        if j == 0 {
            let mut nu = vec![e[0] + left];
            nu.extend(tail.iter().rev());
            out.add(DominantWeight::from_sorted(nu), BigUint::from(1u32));
            return;
        }
        for v in e[j]..=e[j - 1].min(e[j] + left) {
            tail.push(v);
            rec(e, j - 1, left - (v - e[j]), tail, out);
            tail.pop();
        }
    }
    if w.is_empty() {
        return if k == 0 { WeightedDecomposition::singleton(w.clone()) } else { WeightedDecomposition::new() };
    }
    with_nonnegative(w, |w| {
        let mut out = WeightedDecomposition::new();
        rec(w.entries(), w.len() - 1, k as i64, &mut Vec::new(), &mut out);
        out
    })
}

const CACHE_HEADER: &str = "quotcoh-lr-memo v1";

fn fmt_partition(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Writes the LR memo table as `alpha|beta|gamma|count` lines under a
/// versioned header.
pub fn save_lr_cache(path: &Path) -> io::Result<usize> {
    let table = CACHE.lr.read().unwrap();
    let mut entries: Vec<_> = table.iter().collect();
    entries.sort();
    let tmp = path.with_extension("tmp");
    {
        let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
        writeln!(f, "{CACHE_HEADER}")?;
        for ((a, b, g), c) in &entries {
            writeln!(f, "{}|{}|{}|{}", fmt_partition(a), fmt_partition(b), fmt_partition(g), c)?;
        }
        f.flush()?;
    }
    fs::rename(tmp, path)?;
    Ok(entries.len())
}

/// Loads a table written by [`save_lr_cache`]. A missing file, foreign
/// header or malformed line leaves the cache untouched and returns 0.
pub fn load_lr_cache(path: &Path) -> io::Result<usize> {
    let file = match fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let mut lines = io::BufReader::new(file).lines();
    match lines.next() {
        Some(Ok(h)) if h == CACHE_HEADER => {}
        _ => return Ok(0),
    }
    let mut parsed = Vec::new();
    for line in lines {
        let line = line?;
        let fields: Vec<&str> = line.split('|').collect();
        let entry = (|| {
            if fields.len() != 4 {
                return None;
            }
            let a = fields[0].parse::<Partition>().ok()?;
            let b = fields[1].parse::<Partition>().ok()?;
            let g = fields[2].parse::<Partition>().ok()?;
            let c = fields[3].parse::<u64>().ok()?;
            Some(((a, b, g), c))
        })();
        match entry {
            Some(e) => parsed.push(e),
            None => return Ok(0),
        }
    }
    let n = parsed.len();
    CACHE.lr.write().unwrap().extend(parsed);
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_box;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> DominantWeight {
        s.parse().unwrap()
    }

    fn one() -> BigUint {
        BigUint::from(1u32)
    }

    fn weights(dec: &WeightedDecomposition) -> Vec<(String, u32)> {
        dec.iter().map(|(k, m)| (k.to_string(), u32::try_from(m).unwrap())).collect()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), one());
        assert_eq!(lr_coefficient(&p("1"), &p("1,1"), &p("2,1")), one());
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), BigUint::from(2u32));
        assert!(lr_coefficient(&p("2"), &p("1"), &p("2,2")).is_zero());
        assert!(lr_coefficient(&p("3"), &p("1"), &p("2,2")).is_zero());
    }

    #[test]
    fn tensor_examples() {
        let d = lr_expand_tensor(&p("1"), &p("1"));
        assert_eq!(d.len(), 2);
        assert_eq!(d.multiplicity(&p("2")), one());
        assert_eq!(d.multiplicity(&p("1,1")), one());

        let lam = p("3,2");
        assert_eq!(lr_expand_tensor(&Partition::empty(), &lam), PartitionDecomposition::singleton(lam));

        let d = lr_expand_tensor(&p("2,1"), &p("2,1"));
        assert_eq!(d.len(), 7);
        assert_eq!(d.total_multiplicity(), BigUint::from(8u32));
        assert!(d.keys().all(|g| g.size() == 6));
        for (g, m) in d.iter() {
            assert_eq!(*m, lr_coefficient(&p("2,1"), &p("2,1"), g));
        }
    }

    #[test]
    fn tensor_dimension_identity() {
        let shapes = enumerate_box(3, 3).into_iter().filter(|x| x.size() <= 4).collect::<Vec<_>>();
        for a in &shapes {
            for b in &shapes {
                let dec = lr_expand_tensor(a, b);
                let rows = dec.keys().map(Partition::len).max().unwrap_or(0);
                for d in rows.max(1)..rows + 3 {
                    let lhs = dec.total_dimension(d);
                    let da = weyl_dim(&a.to_weight(d).unwrap(), d).unwrap();
                    let db = weyl_dim(&b.to_weight(d).unwrap(), d).unwrap();
                    assert_eq!(lhs, da * db, "{a} ⊗ {b} at d = {d}");
                }
            }
        }
    }

    #[test]
    fn direct_sum_examples() {
        let set = |lam: &str| {
            let mut v: Vec<_> = direct_sum_expand(&p(lam))
                .into_iter()
                .map(|(a, b, c)| (a.to_string(), b.to_string(), u32::try_from(&c).unwrap()))
                .collect();
            v.sort();
            v
        };
        let s = |a: &str, b: &str, c| (a.to_string(), b.to_string(), c);
        assert_eq!(set("1"), vec![s("()", "(1)", 1), s("(1)", "()", 1)]);
        assert_eq!(set("1,1"), vec![s("()", "(1,1)", 1), s("(1)", "(1)", 1), s("(1,1)", "()", 1)]);
        let v = set("2,1");
        assert!(v.contains(&s("(2)", "(1)", 1)));
        assert!(v.contains(&s("(1,1)", "(1)", 1)));
        assert!(v.contains(&s("(1)", "(2)", 1)));
        assert!(v.contains(&s("(1)", "(1,1)", 1)));
        assert!(v.iter().all(|(a, b, _)| p(a).size() + p(b).size() == 3));
    }

    #[test]
    fn double_bundle_examples() {
        for n in 1..4 {
            let d = double_bundle_expand(&p("1"), n).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d.multiplicity(&p("1")), BigUint::from(2u32));
        }
        let d = double_bundle_expand(&p("1,1"), 1).unwrap();
        assert_eq!(d, PartitionDecomposition::singleton(p("2")));
        // Sym²(B ⊕ B) = Sym²B ⊕ (B ⊗ B) ⊕ Sym²B = 3·Sym²B ⊕ ∧²B
        let d = double_bundle_expand(&p("2"), 2).unwrap();
        assert_eq!(d.multiplicity(&p("2")), BigUint::from(3u32));
        assert_eq!(d.multiplicity(&p("1,1")), one());
        assert_eq!(d.len(), 2);
        assert!(double_bundle_expand(&p("1,1,1"), 1).is_err());
    }

    #[test]
    fn double_bundle_dimension_matches_rank_2n() {
        for n in 1..=3usize {
            for lam in enumerate_box(2 * n, 3).into_iter().filter(|l| l.size() <= 8) {
                let dec = double_bundle_expand(&lam, n).unwrap();
                let expected = weyl_dim(&lam.to_weight(2 * n).unwrap(), 2 * n).unwrap();
                assert_eq!(dec.total_dimension(n), expected, "{lam}, n = {n}");
            }
        }
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_wedge(1, 3, 3), vec![CauchyTerm { left: p("1"), right: p("1") }]);
        let terms = cauchy_wedge(2, 2, 2);
        assert_eq!(terms.len(), 2);
        assert!(terms.contains(&CauchyTerm { left: p("2"), right: p("1,1") }));
        assert!(terms.contains(&CauchyTerm { left: p("1,1"), right: p("2") }));
        for ell in 0..=6u32 {
            let total: BigUint = cauchy_wedge(ell, 3, 2)
                .iter()
                .map(|t| {
                    weyl_dim(&t.left.to_weight(3).unwrap(), 3).unwrap()
                        * weyl_dim(&t.right.to_weight(2).unwrap(), 2).unwrap()
                })
                .sum();
            assert_eq!(total, num_integer::binomial(BigUint::from(6u32), BigUint::from(ell)));
        }
    }

    #[test]
    fn pieri_wedge_examples() {
        assert_eq!(weights(&pieri_wedge(&w("0,0"), 2, false).unwrap()), vec![("(1,1)".into(), 1)]);
        assert_eq!(
            weights(&pieri_wedge(&w("1,0"), 1, false).unwrap()),
            vec![("(1,1)".into(), 1), ("(2,0)".into(), 1)]
        );
        assert_eq!(
            weights(&pieri_wedge(&w("1,0"), 1, true).unwrap()),
            vec![("(0,0)".into(), 1), ("(1,-1)".into(), 1)]
        );
        assert!(pieri_wedge(&w("0,0"), 3, false).is_err());
        let neg = pieri_wedge(&w("-1,-3"), 1, false).unwrap();
        assert_eq!(weights(&neg), vec![("(-1,-2)".into(), 1), ("(0,-3)".into(), 1)]);
    }

    #[test]
    fn pieri_sym_examples() {
        assert_eq!(weights(&pieri_sym(&w("0"), 3, false)), vec![("(3)".into(), 1)]);
        assert_eq!(weights(&pieri_sym(&w("1,0"), 2, false)), vec![("(2,1)".into(), 1), ("(3,0)".into(), 1)]);
        assert_eq!(weights(&pieri_sym(&w("0,0"), 1, true)), vec![("(0,-1)".into(), 1)]);
        assert_eq!(weights(&pieri_sym(&DominantWeight::zeros(0), 0, false)).len(), 1);
        assert!(pieri_sym(&DominantWeight::zeros(0), 2, false).is_empty());
    }

    #[test]
    fn pieri_dimensions() {
        for base in ["2,1,0", "0,0,0", "3,-1,-1", "1,1,-2"] {
            let v = w(base);
            let dv = weyl_dim(&v, 3).unwrap();
            for k in 0..=3usize {
                let wedge = num_integer::binomial(BigUint::from(3u32), BigUint::from(k));
                let sym = num_integer::binomial(BigUint::from(2 + k), BigUint::from(k));
                for dual in [false, true] {
                    assert_eq!(pieri_wedge(&v, k, dual).unwrap().total_dimension(), &dv * &wedge);
                    assert_eq!(pieri_sym(&v, k, dual).total_dimension(), &dv * &sym);
                }
            }
        }
    }

    #[test]
    fn cache_round_trip() {
        let _ = lr_coefficient(&p("2,1"), &p("1"), &p("3,1"));
        let dir = std::env::temp_dir().join(format!("quotcoh-cache-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("memo.txt");
        let written = save_lr_cache(&path).unwrap();
        assert!(written >= 1);
        assert_eq!(load_lr_cache(&path).unwrap(), written);
        fs::write(&path, "other-format v9\n1|1|2|1\n").unwrap();
        assert_eq!(load_lr_cache(&path).unwrap(), 0);
        assert_eq!(load_lr_cache(&dir.join("absent")).unwrap(), 0);
        fs::remove_dir_all(&dir).unwrap();
    }
}
