#![allow(dead_code)]

//! Test-side oracles, written without touching the library's combinatorics.

use std::collections::{BTreeMap, HashMap};

pub type Poly = HashMap<Vec<u8>, i64>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add_scaled(acc: &mut Poly, p: &Poly, c: i64) {
    for (e, v) in p {
        *acc.entry(e.clone()).or_insert(0) += c * v;
    }
    acc.retain(|_, c| *c != 0);
}

/// Complete homogeneous symmetric polynomial `h_m` in `nv` variables.
fn complete(m: usize, nv: usize) -> Poly {
    fn go(i: usize, left: usize, cur: &mut Vec<u8>, nv: usize, out: &mut Poly) {
        if i + 1 == nv {
            cur.push(left as u8);
            out.insert(cur.clone(), 1);
            cur.pop();
            return;
        }
        for a in 0..=left {
            cur.push(a as u8);
            go(i + 1, left - a, cur, nv, out);
            cur.pop();
        }
    }
    let mut out = Poly::new();
    go(0, m, &mut Vec::new(), nv, &mut out);
    out
}

/// Schur polynomial via Jacobi–Trudi, `det(h_{λ_i − i + j})`.
pub fn schur_poly(lambda: &[u32], nv: usize) -> Poly {
    let l = lambda.len();
    if l == 0 {
        return Poly::from([(vec![0; nv], 1)]);
    }
    let entry = |i: usize, j: usize| -> Option<Poly> {
        let idx = lambda[i] as i64 - i as i64 + j as i64;
        (idx >= 0).then(|| complete(idx as usize, nv))
    };
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    fn det(row: usize, mask: u32, l: usize, entry: &dyn Fn(usize, usize) -> Option<Poly>, memo: &mut HashMap<u32, Poly>, nv: usize) -> Poly {
        if row == l {
            return Poly::from([(vec![0; nv], 1)]);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Poly::new();
        let mut pos = 0;
        for c in 0..l {
            if mask & (1 << c) != 0 {
                continue;
            }
            if let Some(e) = entry(row, c) {
                let minor = det(row + 1, mask | (1 << c), l, entry, memo, nv);
                if !minor.is_empty() {
                    add_scaled(&mut acc, &mul(&e, &minor), if pos % 2 == 0 { 1 } else { -1 });
                }
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    det(0, 0, l, &entry, &mut memo, nv)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, n, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; n], n, &mut out);
    out
}

/// All partitions of `size` with at most `rows` parts.
pub fn partitions_of(size: u32, rows: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, rows, &mut Vec::new(), &mut out);
    out
}

/// Schur expansion of `s_α s_β` in `nv` variables, read off as the
/// coefficient of `x^{γ+δ}` in `a_δ · s_α s_β`.
pub fn lr_expansion(alpha: &[u32], beta: &[u32], nv: usize) -> BTreeMap<Vec<u32>, i64> {
    let f = mul(&schur_poly(alpha, nv), &schur_poly(beta, nv));
    let size: u32 = alpha.iter().chain(beta).sum();
    let perms = permutations(nv);
    let mut out = BTreeMap::new();
    for gamma in partitions_of(size, nv) {
        let mut c = 0;
        for (sigma, sign) in &perms {
            let mut e = Vec::with_capacity(nv);
            let mut ok = true;
            for (i, &s) in sigma.iter().enumerate() {
                let target = gamma.get(i).copied().unwrap_or(0) as i64 + (nv - 1 - i) as i64;
                let v = target - (nv - 1 - s) as i64;
                if v < 0 {
                    ok = false;
                    break;
                }
                e.push(v as u8);
            }
            if ok {
                c += sign * f.get(&e).copied().unwrap_or(0);
            }
        }
        if c != 0 {
            out.insert(gamma, c);
        }
    }
    out
}

/// Number of semistandard tableaux of shape `shape` with entries in `1..=max`.
pub fn ssyt_count(shape: &[u32], max: u32) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, max: u32) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=max {
            grid[i][j] = v;
            total += go(idx + 1, cells, grid, max);
        }
        total
    }
    go(0, &cells, &mut grid, max)
}

/// `(h^0, h^1)` of `O(t)` on the projective line.
pub fn p1_line(t: i64) -> (u64, u64) {
    ((t + 1).max(0) as u64, (-t - 1).max(0) as u64)
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut out: i64 = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// `χ(∧^k Q(t))` on `P^3` with `0 → O(−1) → O^4 → Q → 0`: in K-theory
/// `∧^k O^4 = ∧^k Q + ∧^{k−1} Q(−1)`.
pub fn p3_wedge_chi(k: usize, t: i64) -> i64 {
    let chi_o = |t: i64| binom(t + 3, 3);
    if k == 0 {
        return chi_o(t);
    }
    binom(4, k as i64) * chi_o(t) - p3_wedge_chi(k - 1, t - 1)
}
