mod common;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use proptest::prelude::*;
use quotcoh::bwb::{
    bwb, euler_char, vanishes_plus_condition, vanishes_quot_dual_condition, vanishes_sub_condition,
    GrassmannianContext, HomogeneousBundle,
};
use quotcoh::index::{dagger_condition, kn_index, n_index};
use quotcoh::partitions::{enumerate_box, enumerate_in_box};
use quotcoh::schur::{cauchy_wedge, double_bundle_expand, lr_expand_tensor};
use quotcoh::series::IntSeries;
use quotcoh::{lr_coefficient, weyl_dim, DominantWeight, Partition};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v.into_iter().filter(|&x| x > 0).collect()).unwrap()
    })
}

fn same_size_pair(max: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|s| {
        let all = common::partitions_of(s, s as usize);
        let n = all.len();
        (0..n, 0..n).prop_map(move |(i, j)| {
            (Partition::new(all[i].clone()).unwrap(), Partition::new(all[j].clone()).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dominance_reverses_under_transpose((a, b) in same_size_pair(9)) {
        prop_assert_eq!(a.dominates(&b).unwrap(), b.transpose().dominates(&a.transpose()).unwrap());
    }

    #[test]
    fn transpose_swaps_box(rows in 0usize..6, cols in 0u32..6, lam in partition(6, 6)) {
        if lam.fits_in_box(rows, cols) {
            prop_assert!(lam.transpose().fits_in_box(cols as usize, rows as u32));
        }
        prop_assert_eq!(lam.transpose().transpose(), lam);
    }

    #[test]
    fn lr_symmetries(a in partition(3, 3), b in partition(3, 3)) {
        let dec = lr_expand_tensor(&a, &b);
        for (g, m) in dec.iter() {
            prop_assert_eq!(m, &lr_coefficient(&b, &a, g));
            prop_assert_eq!(m, &lr_coefficient(&a.transpose(), &b.transpose(), &g.transpose()));
            prop_assert_eq!(g.size(), a.size() + b.size());
            prop_assert!(g.contains(&a) && g.contains(&b));
            prop_assert!(a.add(&b).dominates(g).unwrap());
            prop_assert!(g.dominates(&a.union(&b)).unwrap());
        }
    }

    #[test]
    fn lr_zero_outside_support(a in partition(3, 3), b in partition(3, 3), g in partition(4, 5)) {
        let c = lr_coefficient(&a, &b, &g);
        if c != BigUint::default() {
            prop_assert_eq!(g.size(), a.size() + b.size());
            prop_assert!(g.contains(&a) && g.contains(&b));
        }
    }

    #[test]
    fn bwb_conditions_are_sound(d in 1usize..7, n_frac in 0usize..7, raw_mu in prop::collection::vec(0i64..10, 6),
                                raw_nu in prop::collection::vec(0i64..10, 6), k in 0usize..4) {
        let n = n_frac % (d + 1);
        let ctx = GrassmannianContext::new(d, n).unwrap();
        let mu = sorted_weight(&raw_mu[..d - n]);
        let nu = sorted_weight(&raw_nu[..n]);
        if vanishes_sub_condition(&mu, n).unwrap().is_some() {
            let b = HomogeneousBundle::new(ctx, DominantWeight::zeros(n), mu.clone()).unwrap();
            prop_assert!(bwb(&b).vanishes(), "sub condition on {}", mu);
        }
        if vanishes_quot_dual_condition(&nu, d, n).unwrap().is_some() {
            let b = HomogeneousBundle::new(ctx, nu.negate_reverse(), DominantWeight::zeros(d - n)).unwrap();
            prop_assert!(bwb(&b).vanishes(), "quot dual condition on {}", nu);
        }
        if k <= n && vanishes_plus_condition(&mu, n, k).unwrap().is_some() {
            let quot = Partition::column(k).to_weight(n).unwrap().negate_reverse();
            let b = HomogeneousBundle::new(ctx, quot, mu.clone()).unwrap();
            prop_assert!(bwb(&b).vanishes(), "plus condition on {} with k = {}", mu, k);
        }
    }

    #[test]
    fn bwb_weights_have_positive_dimension(d in 1usize..6, n_frac in 0usize..6, raw in prop::collection::vec(-4i64..=4, 5)) {
        let n = n_frac % (d + 1);
        let ctx = GrassmannianContext::new(d, n).unwrap();
        let b = HomogeneousBundle::new(ctx, sorted_weight(&raw[..n]), sorted_weight(&raw[n..d])).unwrap();
        let r = bwb(&b);
        if let Some(deg) = r.degree() {
            prop_assert!(deg <= ctx.dim());
            prop_assert!(r.dimension() > BigUint::default());
        }
    }

    #[test]
    fn series_round_trip(coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let f = IntSeries::from_fn(3, 2, |i, j| {
            if (i, j) == (0, 0) { BigInt::from(1) } else { BigInt::from(coeffs[i * 3 + j]) }
        });
        let one = IntSeries::one(3, 2);
        prop_assert_eq!(&f * &f.recip().unwrap(), one.clone());
        prop_assert_eq!(&f.powi(3).unwrap() * &f.powi(-3).unwrap(), one);
    }
}

fn sorted_weight(raw: &[i64]) -> DominantWeight {
    let mut v = raw.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::new(v).unwrap()
}

#[test]
fn box_counts_are_binomial() {
    for rows in 0..=5usize {
        for cols in 0..=5u32 {
            let total: usize = (0..=rows as u32 * cols).map(|s| enumerate_in_box(rows, cols, s).len()).sum();
            assert_eq!(total, binomial(rows + cols as usize, rows));
            assert_eq!(enumerate_box(rows, cols).len(), total);
        }
    }
}

#[test]
fn columns_have_binomial_dimension() {
    for d in 0..=8usize {
        for k in 0..=d {
            let w = Partition::column(k).to_weight(d).unwrap();
            assert_eq!(weyl_dim(&w, d).unwrap(), BigUint::from(binomial(d, k)));
        }
    }
}

#[test]
fn cauchy_dimension_identity() {
    for a in 0..=4usize {
        for b in 0..=4usize {
            for ell in 0..=8u32 {
                let total: BigUint = cauchy_wedge(ell, a, b)
                    .iter()
                    .map(|t| {
                        weyl_dim(&t.left.to_weight(a).unwrap(), a).unwrap()
                            * weyl_dim(&t.right.to_weight(b).unwrap(), b).unwrap()
                    })
                    .sum();
                assert_eq!(total, BigUint::from(binomial(a * b, ell as usize)), "a={a} b={b} ell={ell}");
            }
        }
    }
}

#[test]
fn double_bundle_dimension() {
    for n in 1..=3usize {
        for lam in enumerate_box(2 * n, 3).into_iter().filter(|l| l.size() <= 7) {
            let dec = double_bundle_expand(&lam, n).unwrap();
            assert_eq!(dec.total_dimension(n), weyl_dim(&lam.to_weight(2 * n).unwrap(), 2 * n).unwrap(), "{lam}");
        }
    }
}

#[test]
fn structure_sheaf_has_euler_characteristic_one() {
    for d in 0..=6 {
        for n in 0..=d {
            let t = HomogeneousBundle::trivial(GrassmannianContext::new(d, n).unwrap());
            assert_eq!(euler_char(&t), BigInt::from(1));
        }
    }
}

#[test]
fn index_forces_middle_rows() {
    for n in 1..=3usize {
        for lam in enumerate_box(8, 8).into_iter().filter(|l| !l.is_empty()) {
            if let Some(i) = n_index(&lam, n).unwrap().index {
                for j in 1..=n {
                    assert_eq!(lam.part(i + j - 1), i as u32, "{lam} n={n}");
                }
            }
            for k in 0..=n {
                if lam == Partition::column(k) {
                    continue;
                }
                if let Some(i) = kn_index(&lam, k, n).unwrap().index {
                    for j in 1..=n {
                        let p = lam.part(i + j - 1);
                        assert!(i as u32 <= p && p <= i as u32 + 1, "{lam} k={k} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn dagger_and_index_are_exclusive() {
    for (d, n) in [(5, 2), (6, 2), (7, 3), (8, 2), (8, 3)] {
        for lam in enumerate_box(2 * n, (d - n - 1) as u32).into_iter().filter(|l| !l.is_empty()) {
            assert_ne!(dagger_condition(&lam, n).is_some(), n_index(&lam, n).unwrap().defined(), "{lam}");
        }
    }
}
