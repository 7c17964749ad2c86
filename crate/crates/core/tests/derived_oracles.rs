//! Values checked against independent computations written here from scratch.

use ariki_koike::combinatorics::{dim_irrep, enumerate_multipartitions, group_order};
use ariki_koike::params::{derive_r, scheme_from_kappa, KappaInput, Rational};
use ariki_koike::structure::{classify_kappa, determinant, hom_table, RegimeKind};
use num_integer::Integer;

/// Coefficient of `x^n` in `(Π_k 1/(1 − x^k))^m`.
fn multipartition_count(m: usize, n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            p[total] += p[total - part];
        }
    }
    let mut power = vec![0u64; n + 1];
    power[0] = 1;
    for _ in 0..m {
        let mut next = vec![0u64; n + 1];
        for a in 0..=n {
            for b in 0..=n - a {
                next[a + b] += power[a] * p[b];
            }
        }
        power = next;
    }
    power[n]
}

#[test]
fn enumeration_matches_generating_function() {
    for m in 1..=4 {
        for n in 0..=7 {
            assert_eq!(
                enumerate_multipartitions(m, n).len() as u64,
                multipartition_count(m, n),
                "m={m} n={n}"
            );
        }
    }
}

#[test]
fn squared_dimensions_sum_to_group_order() {
    for m in 1..=3 {
        for n in 0..=5 {
            let total: u128 = enumerate_multipartitions(m, n)
                .iter()
                .map(|l| dim_irrep(l).pow(2))
                .sum();
            let expected = (m as u128).pow(n as u32) * (1..=n as u128).product::<u128>();
            assert_eq!(total, expected, "m={m} n={n}");
            assert_eq!(group_order(m, n), expected);
        }
    }
}

#[test]
fn tridiagonal_determinant_recurrence() {
    // d_k = 2 d_{k-1} − d_{k-2}
    let (mut prev, mut cur) = (1i64, 2i64);
    for n in 1..=12 {
        let table: Vec<Vec<i64>> = hom_table(n)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as i64).collect())
            .collect();
        assert_eq!(determinant(&table), cur, "n={n}");
        (prev, cur) = (cur, 2 * cur - prev);
    }
}

/// `q` and `u_i` as residues mod `L`, straight from the exponent formulas.
fn cyclic_by_hand(k: &KappaInput) -> (i64, i64, Vec<i64>) {
    let m = k.m as i64;
    let mut lcm = *k.kappa00.denom();
    for r in &k.kappa {
        lcm = lcm.lcm(r.denom());
    }
    let big_l = lcm * m;
    let at = |t: i64| -> Rational {
        let t = t.rem_euclid(m);
        if t == 0 {
            Rational::from_integer(0)
        } else {
            k.kappa[t as usize - 1]
        }
    };
    let to_int = |r: Rational| (r * Rational::from_integer(big_l)).to_integer();
    let q = to_int(k.kappa00).rem_euclid(big_l);
    let u = (1..=m)
        .map(|i| (-(m - i + 1) * (big_l / m) - to_int(at(m - i + 1))).rem_euclid(big_l))
        .collect();
    (big_l, q, u)
}

/// Exhaustive `(t, a)` search over `|t| ≤ 10`, `a ∈ {0, 1}` for every
/// ordered pair with `u_j = q^{n−1} u_i`; returns the distinct `r` found.
fn brute_force_r(k: &KappaInput) -> Vec<u64> {
    let (big_l, q, u) = cyclic_by_hand(k);
    let m = k.m as i64;
    let n = k.n as i64;
    let at = |t: i64| -> Rational {
        let t = t.rem_euclid(m);
        if t == 0 {
            Rational::from_integer(0)
        } else {
            k.kappa[t as usize - 1]
        }
    };
    let mut found = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i == j
                || (u[i as usize - 1] + (n - 1) * q - u[j as usize - 1]).rem_euclid(big_l) != 0
            {
                continue;
            }
            let (p, s) = ((m - i + 1).rem_euclid(m), (m - j + 1).rem_euclid(m));
            for a in 0..2 {
                let sign = if a == 0 { 1 } else { -1 };
                let lhs = Rational::from_integer(m) * (at(s) - at(p))
                    + Rational::from_integer(sign * m * (n - 1)) * k.kappa00;
                for t in -10..=10 {
                    if lhs == Rational::from_integer((p - s) + m * t) {
                        found.push(((p - s) + m * t).unsigned_abs());
                    }
                }
            }
        }
    }
    found.sort_unstable();
    found.dedup();
    found
}

fn kappa(m: usize, n: usize, k00: (i64, i64), rest: &[(i64, i64)]) -> KappaInput {
    KappaInput::new(
        m,
        n,
        Rational::new(k00.0, k00.1),
        rest.iter().map(|&(p, q)| Rational::new(p, q)).collect(),
    )
    .unwrap()
}

#[test]
fn kappa_example_in_cyclic_arithmetic() {
    let k = kappa(2, 2, (1, 3), &[(1, 6)]);
    let (big_l, q, u) = cyclic_by_hand(&k);
    assert_eq!((big_l, q), (12, 4));
    assert_eq!((u[1] - u[0]).rem_euclid(big_l), q);
    let scheme = scheme_from_kappa(&k);
    assert_eq!(scheme.e(), 3);
    assert!(scheme.relation_holds(2, 1, 1));
    assert_eq!(scheme.to_string(), "e=3;class=0,0;shift=0,1");
}

#[test]
fn r_for_the_m2_example_is_frozen_by_search() {
    let k = kappa(2, 2, (1, 3), &[(1, 6)]);
    assert_eq!(brute_force_r(&k), vec![1]);
    assert_eq!(derive_r(&k, Some((1, 2))).unwrap(), 1);
    let (_, report) = classify_kappa(&k).unwrap();
    assert_eq!(report.kind, RegimeKind::AlmostSemisimple);
    assert_eq!((report.r, report.dim_l_chi), (Some(1), Some(1)));
}

#[test]
fn derive_r_agrees_with_search_on_regime_points() {
    let values: Vec<(i64, i64)> = (1..=6).flat_map(|d| (0..d).map(move |p| (p, d))).collect();
    let mut regime = 0;
    for n in 2..=3 {
        for &k00 in values.iter().filter(|v| v.0 != 0) {
            for &k1 in &values {
                for m in 2..=3 {
                    let rest: Vec<(i64, i64)> = if m == 2 { vec![k1] } else { vec![k1, (1, 5)] };
                    let k = kappa(m, n, k00, &rest);
                    let (_, report) = classify_kappa(&k).unwrap();
                    if report.kind != RegimeKind::AlmostSemisimple {
                        continue;
                    }
                    regime += 1;
                    let searched = brute_force_r(&k);
                    let r = report.r.unwrap();
                    assert!(
                        searched.contains(&r),
                        "{k:?}: derive_r {r}, search {searched:?}"
                    );
                    assert!(r > 0 && r % m as u64 != 0);
                }
            }
        }
    }
    assert!(regime > 20, "only {regime} regime points");
}

#[test]
fn m1_values() {
    for (k00, n, r) in [
        ((1, 2), 2, 1u64),
        ((2, 3), 3, 2),
        ((1, 4), 4, 1),
        ((3, 4), 4, 3),
    ] {
        let k = kappa(1, n, k00, &[]);
        let (scheme, report) = classify_kappa(&k).unwrap();
        assert_eq!(scheme.e() as usize, n);
        assert_eq!(report.r, Some(r));
        assert_eq!(report.dim_l_chi, Some((r as u128).pow(n as u32)));
    }
}
