use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

use eulerian123::bijection::{kappa, kappa_inverse};
use eulerian123::dyck::{self, enumerate_paths, DyckPath, Step};
use eulerian123::numbers::{catalan_numbers, motzkin_numbers, narayana};
use eulerian123::perm::{self, all_permutations, avoiders_123, min_decompose, Permutation};
use eulerian123::series::{a_from_tables, b_from_tables, closed_form_a_radicand, e_from_rows};
use eulerian123::tables::build_tables;
use eulerian123::{RationalPoly, RationalSeries};

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Valid paths from a coin sequence: each coin picks U or D where both
/// are allowed, and the tail closes the path.
fn dyck_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    (
        0..=max_n,
        prop::collection::vec(any::<bool>(), 0..2 * max_n + 1),
    )
        .prop_map(|(n, coins)| {
            let (mut ups, mut height) = (0, 0);
            let mut steps = Vec::with_capacity(2 * n);
            let mut coins = coins.into_iter();
            while steps.len() < 2 * n {
                let up_ok = ups < n;
                let down_ok = height > 0;
                let up = match (up_ok, down_ok) {
                    (true, true) => coins.next().unwrap_or(false),
                    (ok, _) => ok,
                };
                if up {
                    ups += 1;
                    height += 1;
                    steps.push(Step::Up);
                } else {
                    height -= 1;
                    steps.push(Step::Down);
                }
            }
            DyckPath::from_steps(steps).unwrap()
        })
}

proptest! {
    #[test]
    fn decomposition_flattens_back(p in permutation(12)) {
        prop_assert_eq!(min_decompose(&p).flatten(), p.entries().to_vec());
    }

    #[test]
    fn avoider_words_decrease(p in permutation(12)) {
        let d = min_decompose(&p);
        let minima = d.minima();
        prop_assert!(minima.windows(2).all(|w| w[0] > w[1]));
        if !p.is_empty() {
            prop_assert_eq!(*minima.last().unwrap(), 1);
        }
        if perm::avoids_123(&p) {
            prop_assert!(d.words().windows(2).all(|w| w[0] > w[1]));
        }
        prop_assert_eq!(perm::avoids_123(&p), perm::avoids_123_brute(&p));
    }

    #[test]
    fn path_statistic_bounds(d in dyck_path(16)) {
        let n = d.semilength();
        if n >= 1 {
            prop_assert!(dyck::valleys(&d) < n);
            prop_assert!(dyck::triple_falls(&d) <= n.saturating_sub(2));
        }
    }

    #[test]
    fn last_return_split_concatenates(d in dyck_path(16)) {
        prop_assume!(!d.is_empty());
        let (head, tail) = dyck::last_return_split(&d).unwrap();
        prop_assert_eq!(head.concat(&tail), d.clone());
        prop_assert!(dyck::is_irreducible(&tail));
        prop_assert_eq!(dyck::returns(&head) + 1, dyck::returns(&d));
    }

    #[test]
    fn elevation_statistics(d in dyck_path(16)) {
        let e = dyck::elevate(&d);
        let bump = usize::from(d.ends_with(&[Step::Down, Step::Down]));
        prop_assert_eq!(dyck::triple_falls(&e), dyck::triple_falls(&d) + bump);
        prop_assert_eq!(dyck::valleys(&e), dyck::valleys(&d));
        prop_assert!(dyck::is_irreducible(&e));
        prop_assert_eq!(e.semilength(), d.semilength() + 1);
    }

    #[test]
    fn text_and_run_forms_round_trip(d in dyck_path(16)) {
        prop_assert_eq!(d.to_string().to_lowercase().parse::<DyckPath>().unwrap(), d.clone());
        prop_assert_eq!(d.run_form().to_path().unwrap(), d);
    }

    #[test]
    fn kappa_round_trip_large(d in dyck_path(40)) {
        let p = kappa_inverse(&d);
        prop_assert!(perm::avoids_123(&p));
        prop_assert_eq!(kappa(&p).unwrap(), d.clone());
        let c = eulerian123::check_descent_identity(&p).unwrap();
        prop_assert!(c.holds());
    }

    #[test]
    fn series_sqrt_squares_back(coeffs in prop::collection::vec((-3i64..=3, 1usize..6, 0u32..3, 0u32..3), 0..8)) {
        let mut terms = vec![(1, 0, 0, 0)];
        terms.extend(coeffs);
        let r = RationalSeries::from_terms(&terms, 6);
        let s = r.sqrt().unwrap();
        prop_assert_eq!(&s * &s, r.clone());
        prop_assert_eq!(s, r.sqrt_by_recurrence().unwrap());
        let inv = r.inverse().unwrap();
        prop_assert_eq!(&inv * &r, RationalSeries::one(6));
    }
}

#[test]
fn avoider_counts_are_catalan() {
    let cat = catalan_numbers(10);
    for (n, c) in cat.iter().enumerate().take(9) {
        let filtered = all_permutations(n).filter(perm::avoids_123).count();
        assert_eq!(&BigUint::from(filtered), c, "filter n = {n}");
    }
    for (n, c) in cat.iter().enumerate() {
        assert_eq!(
            &BigUint::from(avoiders_123(n).count()),
            c,
            "generator n = {n}"
        );
    }
}

#[test]
fn kappa_structure_matches_decomposition() {
    for n in 0..=9 {
        for p in avoiders_123(n) {
            let d = kappa(&p).unwrap();
            let blocks = min_decompose(&p);
            assert_eq!(dyck::valleys(&d), blocks.blocks.len().saturating_sub(1));
            let tf: usize = blocks
                .word_lengths()
                .iter()
                .map(|&l| l.saturating_sub(1))
                .sum();
            assert_eq!(dyck::triple_falls(&d), tf);
        }
    }
}

#[test]
fn enumeration_marginals() {
    let motzkin = motzkin_numbers(12);
    for (n, m) in motzkin.iter().enumerate() {
        let mut by_valleys = vec![0u64; n + 1];
        let mut no_triple_fall = 0u64;
        for d in enumerate_paths(n).unwrap() {
            by_valleys[dyck::valleys(&d)] += 1;
            no_triple_fall += u64::from(dyck::triple_falls(&d) == 0);
        }
        assert_eq!(&BigUint::from(no_triple_fall), m, "n = {n}");
        for (p, &c) in by_valleys.iter().enumerate().take(n) {
            assert_eq!(BigUint::from(c), narayana(n as u64, p as u64 + 1));
        }
    }
}

#[test]
fn table_marginals() {
    let t = build_tables::<BigUint>(12).unwrap();
    let motzkin = motzkin_numbers(12);
    for (n, m) in motzkin.iter().enumerate().skip(1) {
        let nar: Vec<BigUint> = (0..n).map(|p| narayana(n as u64, p as u64 + 1)).collect();
        assert_eq!(t.all.valley_marginal(n), nar);
        assert_eq!(&t.all.triple_fall_marginal(n)[0], m);
        assert_eq!(t.irreducible.total(n), catalan_numbers(n - 1)[n - 1]);
        for &(p, q) in t.all.row(n).unwrap().keys() {
            assert!(p < n && q <= n.saturating_sub(2));
        }
    }
}

#[test]
fn narayana_symmetry() {
    let t = build_tables::<BigUint>(12).unwrap();
    let a: RationalSeries = a_from_tables(&t, 12).unwrap();
    let one = BigRational::from_integer(1.into());
    let ay1 = a.subs_z(&one);
    for n in 1..=12usize {
        let c = ay1.coeff(n);
        for p in 0..n as u32 {
            assert_eq!(
                c.coeff(p, 0),
                c.coeff(n as u32 - 1 - p, 0),
                "n = {n}, p = {p}"
            );
        }
    }
}

#[test]
fn table_series_are_nonnegative_integers() {
    let t = build_tables::<BigUint>(16).unwrap();
    let a: RationalSeries = a_from_tables(&t, 16).unwrap();
    let b: RationalSeries = b_from_tables(&t, 16).unwrap();
    let e: RationalSeries = e_from_rows(&t.eulerian_rows().unwrap());
    for s in [a, b, e] {
        for (_, _, _, v) in s.integer_terms().unwrap() {
            assert!(v >= 0.into());
        }
    }
}

#[test]
fn radicand_root_has_integer_coefficients() {
    let root = closed_form_a_radicand::<BigRational>(20).sqrt().unwrap();
    assert!(root.integer_terms().is_ok());
    assert_eq!(
        root.coeff(1),
        &RationalPoly::from_terms(&[(-1, 1, 0), (-1, 0, 1)])
    );
}
