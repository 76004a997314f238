//! Property tests against small independent oracles written out here.

use num_bigint::BigInt;
use proptest::prelude::*;
use sylrank_core::bivariant::{bidim, enumerate_submodules};
use sylrank_core::normal_form::smith;
use sylrank_core::rank::{rk_field, rk_group_vn, rk_zmod_pk};
use sylrank_core::{ExtendedValue, FiniteGroup, FpModule, Matrix, Ring, Submodule};

fn matrix_strategy(max: usize, bound: i64) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max, 1..=max).prop_flat_map(move |(n, m)| (Just(n), Just(m), prop::collection::vec(-bound..=bound, n * m)))
}

/// Fraction-free elimination over i128.
fn bareiss_rank(n: usize, m: usize, v: &[i64]) -> usize {
    let mut a: Vec<Vec<i128>> = (0..n).map(|i| v[i * m..(i + 1) * m].iter().map(|&x| x as i128).collect()).collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..n {
            for c in col + 1..m {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    rank
}

fn rank_mod_p(n: usize, m: usize, v: &[i64], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = (0..n).map(|i| v[i * m..(i + 1) * m].iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for col in 0..m {
        let Some(piv) = (rank..n).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let f = inv(a[rank][col]);
        for c in 0..m {
            a[rank][c] = a[rank][c] * f % p;
        }
        for r in 0..n {
            if r != rank && a[r][col] != 0 {
                let k = a[r][col];
                for c in 0..m {
                    a[r][c] = (a[r][c] - k * a[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `|{xA : x in (Z/q)^n}|` by listing every combination.
fn row_space_size(n: usize, m: usize, v: &[i64], q: i64) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    let total = (q as usize).pow(n as u32);
    for mut idx in 0..total {
        let mut x = vec![0i64; n];
        for xi in x.iter_mut() {
            *xi = (idx % q as usize) as i64;
            idx /= q as usize;
        }
        let row: Vec<i64> = (0..m).map(|j| (0..n).map(|i| x[i] * v[i * m + j]).sum::<i64>().rem_euclid(q)).collect();
        seen.insert(row);
    }
    seen.len()
}

fn log(p: usize, mut n: usize) -> i64 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_rank_matches_bareiss((n, m, v) in matrix_strategy(5, 9)) {
        let a = Matrix::from_ints(&Ring::Rationals, n, m, &v).unwrap();
        let got = rk_field(&Ring::Rationals).unwrap().evaluate(&a).unwrap();
        prop_assert_eq!(got, ExtendedValue::from_int(bareiss_rank(n, m, &v) as i64));
    }

    #[test]
    fn prime_field_rank_matches_elimination((n, m, v) in matrix_strategy(5, 9), p in prop::sample::select(vec![2i64, 3, 5, 7])) {
        let f = Ring::prime_field(p as u64).unwrap();
        let a = Matrix::from_ints(&f, n, m, &v).unwrap();
        let got = rk_field(&f).unwrap().evaluate(&a).unwrap();
        prop_assert_eq!(got, ExtendedValue::from_int(rank_mod_p(n, m, &v, p) as i64));
    }

    #[test]
    fn prime_power_rank_is_image_length((n, m, v) in matrix_strategy(3, 9), (p, k) in prop::sample::select(vec![(2i64, 2u32), (3, 2), (2, 3)])) {
        let q = p.pow(k);
        let a = Matrix::from_ints(&Ring::integers_mod(q as u64).unwrap(), n, m, &v).unwrap();
        let got = rk_zmod_pk(p as u64, k).unwrap().evaluate(&a).unwrap();
        let length = log(p as usize, row_space_size(n, m, &v, q));
        prop_assert_eq!(got, ExtendedValue::ratio(length, k as i64));
    }

    #[test]
    fn smith_decomposition((n, m, v) in matrix_strategy(4, 9)) {
        let a = Matrix::from_ints(&Ring::Integers, n, m, &v).unwrap();
        let s = smith(&a).unwrap();
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d.clone());
        for w in s.divisors.windows(2) {
            if w[0] == BigInt::from(0) {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            }
        }
        let nonzero = s.divisors.iter().filter(|d| **d != BigInt::from(0)).count();
        prop_assert_eq!(nonzero, bareiss_rank(n, m, &v));
    }

    #[test]
    fn cyclic_subgroup_count_is_divisor_count(n in 1i64..=60) {
        let m = FpModule::new(Matrix::from_ints(&Ring::Integers, 1, 1, &[n]).unwrap());
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        prop_assert_eq!(enumerate_submodules(&m).unwrap().len(), divisors);
    }

    #[test]
    fn bidim_over_z4_is_subgroup_length((r, m, v) in matrix_strategy(3, 9)) {
        let z4 = Ring::integers_mod(4).unwrap();
        let g = Matrix::from_ints(&z4, r, m, &v).unwrap();
        let s = Submodule::new(FpModule::free(&z4, m), g).unwrap();
        let got = bidim(&rk_zmod_pk(2, 2).unwrap(), &s).unwrap().value;
        prop_assert_eq!(got, ExtendedValue::ratio(log(2, row_space_size(r, m, &v, 4)), 2));
    }

    #[test]
    fn von_neumann_rank_on_c2(x in -9i64..=9, y in -9i64..=9) {
        // x + y s acts with eigenvalues x + y and x - y.
        let ring = Ring::group_algebra(Ring::Rationals, FiniteGroup::cyclic(2).unwrap()).unwrap();
        let q = Ring::Rationals;
        let a = Matrix::new(ring.clone(), 1, 1, vec![ring.group_element(vec![q.from_i64(x), q.from_i64(y)]).unwrap()]).unwrap();
        let got = rk_group_vn(&q, &FiniteGroup::cyclic(2).unwrap()).unwrap().evaluate(&a).unwrap();
        let nonzero = [x + y, x - y].iter().filter(|e| **e != 0).count() as i64;
        prop_assert_eq!(got, ExtendedValue::ratio(nonzero, 2));
    }
}
