mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use pathcoalg::balancedforms::{
    balanced_space_bruteforce, compute_f, compute_incidence_params, form_from_f, form_from_params,
    is_balanced, radicals,
};
use pathcoalg::coalgebra::{coassociativity_failure, counit_failure, BasisCoalgebra};
use pathcoalg::exactfield::{q_binomial, q_binomial_row, RootOfUnity, Scalar};
use pathcoalg::frobenius::{
    analyze_incidence, analyze_path, check_condition_d, check_condition_d_incidence, Verdict,
};
use pathcoalg::hopf::{build_hn, compute_antipode, FiniteGroupData};
use pathcoalg::incidencecoalg::{IncidenceSubcoalgebra, Poset};
use pathcoalg::linalg::{SparseEchelon, SparseRow};
use pathcoalg::quivercoalg::{validate, PathSubcoalgebra, WindowedFamily};
use proptest::prelude::*;
use rand::seq::SliceRandom;

const CONDUCTORS: [u32; 7] = [1, 2, 3, 4, 5, 8, 12];

fn scalar() -> impl Strategy<Value = Scalar> {
    (
        proptest::sample::select(CONDUCTORS.to_vec()),
        proptest::collection::vec((-6i64..=6, 1i64..=4), 1..6),
    )
        .prop_map(|(m, cs)| {
            let poly = cs
                .into_iter()
                .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
                .collect();
            Scalar::from_poly(m, poly).unwrap()
        })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn pascal_recurrence(q in scalar(), n in 1u32..=12) {
        let row = q_binomial_row(n, &q);
        let prev = q_binomial_row(n - 1, &q);
        for k in 1..n as usize {
            let qk = q.pow(k as i64).unwrap_or_else(|_| Scalar::zero());
            prop_assert_eq!(&row[k], &(&prev[k - 1] + &(&qk * &prev[k])));
        }
        prop_assert!(row[0].is_one() && row[n as usize].is_one());
    }

    #[test]
    fn q_binomial_at_one(n in 0u32..=12) {
        for k in 0..=n {
            let v = q_binomial(n, k, &Scalar::one()).unwrap();
            prop_assert_eq!(v, Scalar::from_integer(binomial(n as u64, k as u64) as i64));
        }
    }

    #[test]
    fn path_coalgebra_axioms(seed in any::<u64>()) {
        let c = common::random_path_subcoalgebra(&mut common::rng(seed));
        prop_assert_eq!(coassociativity_failure(&c), None);
        prop_assert_eq!(counit_failure(&c), None);
        prop_assert!(validate(c.quiver(), c.paths()).is_empty());
    }

    #[test]
    fn families_validate(n in 1usize..=6, s in 1usize..=4, a in -5i64..=5, len in 1i64..=8) {
        let c = WindowedFamily::cycle(n, s).unwrap().build().unwrap();
        prop_assert!(validate(c.quiver(), c.paths()).is_empty());
        prop_assert_eq!(c.dim(), n * (s + 1));
        let mut r = common::rng((n * 31 + s) as u64 ^ a as u64);
        let window = (a, a + len - 1);
        let line = WindowedFamily::a_inf(window, common::random_r(&mut r, window, 3))
            .unwrap()
            .build()
            .unwrap();
        prop_assert!(validate(line.quiver(), line.paths()).is_empty());
    }

    #[test]
    fn incidence_coalgebra_axioms(seed in any::<u64>()) {
        let c = common::random_incidence_subcoalgebra(&mut common::rng(seed), 12);
        prop_assert_eq!(coassociativity_failure(&c), None);
        prop_assert_eq!(counit_failure(&c), None);
    }

    #[test]
    fn product_poset_is_a_partial_order(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let x = common::random_poset(&mut r, 6);
        let y = common::random_poset(&mut r, 6);
        let p = Poset::product(&x, &y).unwrap();
        let n = p.len();
        for i in 0..n {
            prop_assert!(p.leq(i, i));
            for j in 0..n {
                if i != j {
                    prop_assert!(!(p.leq(i, j) && p.leq(j, i)));
                }
                for k in 0..n {
                    if p.leq(i, j) && p.leq(j, k) {
                        prop_assert!(p.leq(i, k));
                    }
                }
            }
        }
    }

    /// Each closed-form form, read as an integer vector, adds nothing to the
    /// span of the brute-force nullspace, for α with zero entries too.
    #[test]
    fn closed_forms_lie_in_the_nullspace(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let c = common::random_path_subcoalgebra(&mut r);
        let f = compute_f(&c);
        let ns = balanced_space_bruteforce(&c, 64).unwrap();
        prop_assert_eq!(ns.len(), f.len());
        let n = c.dim();
        let alpha: Vec<i64> = (0..f.len()).map(|_| rand::Rng::gen_range(&mut r, -2..=2)).collect();
        let scalars: Vec<Scalar> = alpha.iter().map(|&a| Scalar::from_integer(a)).collect();
        let form = form_from_f(&c, &f, &scalars).unwrap();
        prop_assert!(is_balanced(&form).is_ok());
        let mut ech = SparseEchelon::new(n * n);
        for v in ns {
            ech.insert(v);
        }
        let row: SparseRow = form
            .support()
            .into_iter()
            .map(|(k, v)| (k, v.as_rational().unwrap().to_integer()))
            .collect();
        prop_assert!(!ech.insert(row));
    }

    #[test]
    fn incidence_closed_forms_match(seed in any::<u64>()) {
        let c = common::random_incidence_subcoalgebra(&mut common::rng(seed), 8);
        let p = compute_incidence_params(&c);
        prop_assert_eq!(balanced_space_bruteforce(&c, 64).unwrap().len(), p.marked_count());
        let alpha: Vec<Scalar> = (0..p.marked_count()).map(|k| Scalar::from_integer(k as i64 % 3)).collect();
        prop_assert!(is_balanced(&form_from_params(&c, &p, &alpha).unwrap()).is_ok());
    }

    #[test]
    fn radical_dimensions_ignore_basis_order(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let c = common::random_path_subcoalgebra(&mut r);
        let mut basis = c.paths().to_vec();
        basis.shuffle(&mut r);
        let d = PathSubcoalgebra::new(c.quiver().clone(), basis).unwrap();
        let f = compute_f(&c);
        let alpha: Vec<Scalar> = (0..f.len()).map(|k| Scalar::from_integer(k as i64 % 3)).collect();
        let (fc, fd) = (form_from_f(&c, &f, &alpha).unwrap(), form_from_f(&d, &compute_f(&d), &alpha).unwrap());
        let (rc, rd) = (radicals(&fc), radicals(&fd));
        prop_assert_eq!((rc.left.len(), rc.right.len()), (rd.left.len(), rd.right.len()));
    }

    #[test]
    fn conditions_c_and_d_agree(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let c = common::random_path_subcoalgebra(&mut r);
        prop_assert_eq!(analyze_path(&c).left == Verdict::Yes, check_condition_d(&c, &compute_f(&c)).is_ok());
        let i = common::random_incidence_subcoalgebra(&mut r, 12);
        let p = compute_incidence_params(&i);
        prop_assert_eq!(analyze_incidence(&i).left == Verdict::Yes, check_condition_d_incidence(&i, &p).is_ok());
    }

    #[test]
    fn full_coalgebras_are_cofrobenius_only_without_arrows(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let q = common::random_acyclic_quiver(&mut r, 5, 6);
        let none = q.arrow_count() == 0;
        prop_assert_eq!(analyze_path(&PathSubcoalgebra::full(q).unwrap()).left == Verdict::Yes, none);
        let p = common::random_poset(&mut r, 8);
        let discrete = p.is_discrete();
        prop_assert_eq!(analyze_incidence(&IncidenceSubcoalgebra::full(p)).left == Verdict::Yes, discrete);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn antipode_is_independent_of_basis_order(row in 0usize..4, seed in any::<u64>()) {
        let (n, s, e) = [(2, 1, 1), (4, 1, 1), (3, 2, 2), (4, 3, 3)][row];
        let q = RootOfUnity::new(s as u32 + 1, e).unwrap();
        let g = FiniteGroupData::cyclic(n, q).unwrap();
        let h = build_hn(s, q, &g, Scalar::one()).unwrap();
        let mut perm: Vec<usize> = (0..h.dim()).collect();
        perm.shuffle(&mut common::rng(seed));
        let mut p = h.permuted(&perm).unwrap();
        let expected = p.antipode.take().unwrap();
        prop_assert_eq!(compute_antipode(&p).unwrap(), expected);
    }
}
