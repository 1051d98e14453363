//! Borel–Weil–Bott on the Grassmannian `G(d, n)` of `n`-dimensional
//! quotients, with tautological sequence `0 → A → C^d ⊗ O → B → 0`.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::error::{input, Result};
use crate::partitions::{weyl_dim, DominantWeight};

/// `G(d, n)`. Points (`n = 0` or `n = d`) are allowed, since the first
/// Grassmannian of an embedding can collapse to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GrassmannianContext {
    pub d: usize,
    pub n: usize,
}

impl GrassmannianContext {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if n > d {
            return input(format!("quotient rank {n} exceeds ambient dimension {d}"));
        }
        Ok(Self { d, n })
    }

    pub fn sub_rank(&self) -> usize {
        self.d - self.n
    }

    pub fn dim(&self) -> usize {
        self.n * (self.d - self.n)
    }

    pub fn rho(&self) -> Vec<i64> {
        (0..self.d as i64).rev().collect()
    }
}

/// `S_ν(B) ⊗ S_μ(A)` on a Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomogeneousBundle {
    ctx: (usize, usize),
    quot: DominantWeight,
    sub: DominantWeight,
}

impl HomogeneousBundle {
    pub fn new(ctx: GrassmannianContext, quot: DominantWeight, sub: DominantWeight) -> Result<Self> {
        if quot.len() != ctx.n {
            return input(format!("quotient weight {quot} must have length {}", ctx.n));
        }
        if sub.len() != ctx.sub_rank() {
            return input(format!("sub weight {sub} must have length {}", ctx.sub_rank()));
        }
        Ok(Self { ctx: (ctx.d, ctx.n), quot, sub })
    }

    pub fn trivial(ctx: GrassmannianContext) -> Self {
        Self { ctx: (ctx.d, ctx.n), quot: DominantWeight::zeros(ctx.n), sub: DominantWeight::zeros(ctx.sub_rank()) }
    }

    pub fn ctx(&self) -> GrassmannianContext {
        GrassmannianContext { d: self.ctx.0, n: self.ctx.1 }
    }

    pub fn quot_weight(&self) -> &DominantWeight {
        &self.quot
    }

    pub fn sub_weight(&self) -> &DominantWeight {
        &self.sub
    }

    pub fn rank(&self) -> BigUint {
        let c = self.ctx();
        weyl_dim(&self.quot, c.n).unwrap() * weyl_dim(&self.sub, c.sub_rank()).unwrap()
    }
}

impl Serialize for HomogeneousBundle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HomogeneousBundle", 4)?;
        st.serialize_field("d", &self.ctx.0.to_string())?;
        st.serialize_field("n", &self.ctx.1.to_string())?;
        st.serialize_field("quot", &self.quot)?;
        st.serialize_field("sub", &self.sub)?;
        st.end()
    }
}

/// The unique nonzero cohomology group `H^degree = S_weight(C^d)`, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BwbResult {
    Vanishes,
    NonVanishing { degree: usize, weight: DominantWeight },
}

impl BwbResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BwbResult::Vanishes => None,
            BwbResult::NonVanishing { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> BigUint {
        match self {
            BwbResult::Vanishes => BigUint::default(),
            BwbResult::NonVanishing { weight, .. } => weyl_dim(weight, weight.len()).unwrap(),
        }
    }

    pub fn vanishes(&self) -> bool {
        matches!(self, BwbResult::Vanishes)
    }
}

impl Serialize for BwbResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            BwbResult::Vanishes => {
                let mut st = s.serialize_struct("BwbResult", 1)?;
                st.serialize_field("vanishes", &true)?;
                st.end()
            }
            BwbResult::NonVanishing { degree, weight } => {
                let mut st = s.serialize_struct("BwbResult", 4)?;
                st.serialize_field("vanishes", &false)?;
                st.serialize_field("degree", &degree.to_string())?;
                st.serialize_field("weight", weight)?;
                st.serialize_field("dimension", &self.dimension().to_string())?;
                st.end()
            }
        }
    }
}

pub fn bwb(bundle: &HomogeneousBundle) -> BwbResult {
    let ctx = bundle.ctx();
    let mut s: Vec<i64> = bundle.quot.concat(&bundle.sub);
    for (x, r) in s.iter_mut().zip(ctx.rho()) {
        *x += r;
    }
    // insertion sort into strictly decreasing order, counting swaps
    let mut inversions = 0;
    for i in 1..s.len() {
        let mut j = i;
        while j > 0 && s[j - 1] <= s[j] {
            if s[j - 1] == s[j] {
                return BwbResult::Vanishes;
            }
            s.swap(j - 1, j);
            inversions += 1;
            j -= 1;
        }
    }
    let weight = s.iter().zip(ctx.rho()).map(|(x, r)| x - r).collect();
    BwbResult::NonVanishing { degree: inversions, weight: DominantWeight::from_sorted(weight) }
}

pub fn euler_char(bundle: &HomogeneousBundle) -> BigInt {
    match bwb(bundle) {
        BwbResult::Vanishes => BigInt::default(),
        r @ BwbResult::NonVanishing { degree, .. } => {
            let dim = BigInt::from(r.dimension());
            if degree % 2 == 0 {
                dim
            } else {
                -dim
            }
        }
    }
}

fn require_partition(w: &DominantWeight, what: &str) -> Result<()> {
    if w.min_entry().is_some_and(|e| e < 0) {
        return input(format!("{what} {w} must have nonnegative entries"));
    }
    Ok(())
}

/// Smallest `j` (1-based) with `j ≤ μ_j ≤ n + j − 1`; then `S_μ(A)` is acyclic.
pub fn vanishes_sub_condition(mu: &DominantWeight, n: usize) -> Result<Option<usize>> {
    require_partition(mu, "sub weight")?;
    Ok(mu.entries().iter().enumerate().map(|(i, &m)| (i as i64 + 1, m)).find_map(|(j, m)| {
        (j <= m && m <= n as i64 + j - 1).then_some(j as usize)
    }))
}

/// Smallest `j` with `j ≤ ν_j ≤ d − n + j − 1`; then `S_ν(B^∨)` is acyclic.
pub fn vanishes_quot_dual_condition(nu: &DominantWeight, d: usize, n: usize) -> Result<Option<usize>> {
    require_partition(nu, "weight")?;
    if nu.len() > n {
        return input(format!("{nu} has more than {n} rows"));
    }
    if n > d {
        return input(format!("quotient rank {n} exceeds ambient dimension {d}"));
    }
    let top = (d - n) as i64;
    Ok(nu.entries().iter().enumerate().map(|(i, &v)| (i as i64 + 1, v)).find_map(|(j, v)| {
        (j <= v && v <= top + j - 1).then_some(j as usize)
    }))
}

/// Smallest `j` with `j − 1 ≤ μ_j ≤ n + j − 1` and `μ_j ≠ j + k − 1`; then
/// `S_μ(A) ⊗ ∧^k B^∨` is acyclic.
pub fn vanishes_plus_condition(mu: &DominantWeight, n: usize, k: usize) -> Result<Option<usize>> {
    require_partition(mu, "sub weight")?;
    if k > n {
        return input(format!("k = {k} exceeds n = {n}"));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(mu.entries().iter().enumerate().map(|(i, &m)| (i as i64 + 1, m)).find_map(|(j, m)| {
        (j - 1 <= m && m <= n + j - 1 && m != j + k - 1).then_some(j as usize)
    }))
}
