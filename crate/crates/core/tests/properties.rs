mod common;

use common::{chains, d_spec, determinantal_divisor, naive_count};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use quasiarr_core::counting::{interpolate_quasi_with, sample_points, DivisorTable};
use quasiarr_core::intlinalg::smith_divisors_bigint;
use quasiarr_core::*;

fn matrix_strategy(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(
            proptest::collection::vec(-bound..=bound, r).prop_filter("nonzero column", |v| v.iter().any(|&x| x != 0)),
            c,
        )
        .prop_map(move |cols| {
            IntMatrix::from_columns(r, cols.into_iter().map(|c| c.into_iter().map(BigInt::from).collect()).collect())
                .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_chain_and_determinantal_divisors(m in matrix_strategy(4, 4, 5)) {
        let ed = smith_divisors(&m);
        prop_assert!(ed.rank() <= m.rows().min(m.cols()));
        for w in ed.divisors().windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        let mut prefix = BigInt::from(1);
        for k in 1..=m.rows().min(m.cols()) {
            let dk = determinantal_divisor(&m, k);
            if k <= ed.rank() {
                prefix *= &ed.divisors()[k - 1];
                prop_assert_eq!(&prefix, &dk);
            } else {
                prop_assert_eq!(dk, BigInt::from(0));
            }
        }
        prop_assert_eq!(smith_divisors_bigint(&m), ed);
    }

    #[test]
    fn snf_invariant_under_column_moves(m in matrix_strategy(4, 5, 5), perm_seed in any::<u64>(), flip in any::<u8>()) {
        let n = m.cols();
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let cols = order.iter().enumerate().map(|(pos, &j)| {
            let c = m.column(j).to_vec();
            if flip >> (pos % 8) & 1 == 1 { c.into_iter().map(|v| -v).collect() } else { c }
        }).collect();
        let moved = IntMatrix::from_columns(m.rows(), cols).unwrap();
        prop_assert_eq!(smith_divisors(&moved), smith_divisors(&m));
    }

    #[test]
    fn snf_count_equals_brute_force(m in matrix_strategy(3, 6, 3), q in 1u64..=10) {
        prop_assert_eq!(snf_count(&m, q).unwrap(), brute_force_count(&m, q).unwrap());
    }

    #[test]
    fn brute_force_equals_naive(m in matrix_strategy(3, 4, 4), q in 1u64..=7) {
        prop_assert_eq!(brute_force_count(&m, q).unwrap(), naive_count(&m, q));
    }

    #[test]
    fn every_last_divisor_divides_rho(m in matrix_strategy(3, 5, 4)) {
        let rho = lcm_period(&m, None).unwrap().rho;
        for (chain, _) in DivisorTable::build(&m).unwrap().terms() {
            if let Some(e) = chain.last() {
                prop_assert!(rho.is_multiple_of(e));
            }
        }
        let capped = lcm_period(&m, Some(2)).unwrap().rho;
        prop_assert!(rho.is_multiple_of(&capped));
    }

    #[test]
    fn interpolated_quasi_is_monic_with_gcd_property(m in matrix_strategy(2, 4, 3)) {
        let rho = lcm_period(&m, None).unwrap().to_u64().unwrap();
        prop_assume!(rho <= 12);
        let qp = interpolate_quasi(&m, rho, Counter::Snf).unwrap();
        prop_assert!(qp.is_monic_of_degree(m.rows()));
        prop_assert!(check_gcd_property(&qp));
        prop_assert!(verify_minimum_period(&qp));
    }
}

fn family_matrices() -> Vec<(String, IntMatrix)> {
    let mut out = Vec::new();
    for m in 2..=4 {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            out.push((format!("{f}{m}"), gen_coxeter(f, m).unwrap()));
        }
    }
    for m in 2..=3 {
        for s in chains(6, m) {
            out.push((format!("A{m}{s:?}"), gen_deform_a(&DeformSpec::type_a(m, s.clone()).unwrap()).unwrap()));
            out.push((format!("D{m}{s:?}"), gen_deform_d(&d_spec(m, &s)).unwrap()));
        }
    }
    out
}

#[test]
fn constituents_extrapolate_beyond_fitting_window() {
    for (name, mat) in family_matrices().into_iter().filter(|(_, m)| m.rows() <= 3) {
        let rho = lcm_period(&mat, None).unwrap().to_u64().unwrap();
        let m = mat.rows();
        let qp = interpolate_quasi_with(m, rho, |q| brute_force_count(&mat, q)).unwrap();
        for k in 1..=rho {
            let last = *sample_points(k, rho, m).last().unwrap();
            for extra in [last + rho, last + 2 * rho] {
                assert_eq!(qp.eval(extra), brute_force_count(&mat, extra).unwrap(), "{name} q={extra}");
            }
        }
    }
}

#[test]
fn closed_forms_match_brute_force() {
    for m in 2..=4 {
        let max_len = if m == 4 { 2 } else { m };
        for s in chains(6, max_len) {
            let a = DeformSpec::type_a(m, s.clone()).unwrap();
            let d = d_spec(m, &s);
            let (ma, md) = (gen_deform_a(&a).unwrap(), gen_deform_d(&d).unwrap());
            for q in 2..=14u64 {
                let residue = q % known_period(&a, Deformation::A);
                let k = if residue == 0 { known_period(&a, Deformation::A) } else { residue };
                let want_a = chi_deform_a(&a, k).unwrap().eval_u64(q);
                assert_eq!(want_a, brute_force_count(&ma, q).unwrap(), "A m={m} s={s:?} q={q}");
                // raw q is reduced through gcd(rho, q)
                let want_d = chi_deform_d(&d, q).unwrap().eval_u64(q);
                assert_eq!(want_d, brute_force_count(&md, q).unwrap(), "D m={m} s={s:?} q={q}");
            }
        }
    }
}

#[test]
fn full_length_deformations_in_dimension_four() {
    for s in chains(6, 4).into_iter().filter(|s| s.len() >= 3) {
        let d = d_spec(4, &s);
        let md = gen_deform_d(&d).unwrap();
        let a = DeformSpec::type_a(4, s.clone()).unwrap();
        let ma = gen_deform_a(&a).unwrap();
        for q in [2u64, 3, 5, 6, 12, 14] {
            assert_eq!(chi_deform_d(&d, q).unwrap().eval_u64(q), brute_force_count(&md, q).unwrap(), "D4 {s:?} q={q}");
            assert_eq!(chi_deform_a(&a, q).unwrap().eval_u64(q), brute_force_count(&ma, q).unwrap(), "A4 {s:?} q={q}");
        }
        if s.len() == 4 {
            for k in 1..=known_period(&d, Deformation::D) {
                assert_eq!(chi_deform_d_tm(&d, k).unwrap(), chi_deform_d(&d, k).unwrap(), "{s:?} k={k}");
            }
        }
    }
}

#[test]
fn constituents_depend_on_residue_only_through_gcd() {
    for m in 2..=3 {
        for s in chains(6, m) {
            let a = DeformSpec::type_a(m, s.clone()).unwrap();
            let d = d_spec(m, &s);
            let ra = known_period(&a, Deformation::A);
            let rd = known_period(&d, Deformation::D);
            for k in 1..=2 * rd {
                let g = rd.gcd(&k);
                assert_eq!(chi_deform_d(&d, k).unwrap(), chi_deform_d(&d, g).unwrap());
                let pd = chi_deform_d(&d, k).unwrap();
                assert!(pd.is_monic() && pd.degree() == Some(m));
            }
            for k in 1..=2 * ra {
                assert_eq!(chi_deform_a(&a, k).unwrap(), chi_deform_a(&a, ra.gcd(&k)).unwrap());
            }
        }
    }
}

#[test]
fn t_zero_deformations_are_coxeter() {
    for m in 2..=5 {
        let a = DeformSpec::type_a(m, vec![]).unwrap();
        assert_eq!(gen_deform_a(&a).unwrap(), gen_coxeter(Family::A, m).unwrap());
        let d = DeformSpec::type_d(m, 0, vec![]).unwrap();
        assert_eq!(gen_deform_d(&d).unwrap(), gen_coxeter(Family::D, m).unwrap());
        assert_eq!(gen_deform_d(&d).unwrap().cols(), m * m - m);
    }
}

#[test]
fn brute_and_snf_interpolation_agree() {
    for (name, mat) in family_matrices().into_iter().filter(|(_, m)| m.rows() <= 3) {
        let rho = lcm_period(&mat, None).unwrap().to_u64().unwrap();
        assert_eq!(
            interpolate_quasi(&mat, rho, Counter::Brute).unwrap(),
            interpolate_quasi(&mat, rho, Counter::Snf).unwrap(),
            "{name}"
        );
    }
}
