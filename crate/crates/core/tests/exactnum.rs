mod common;

use common::{param_value, small_rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use painleve_core::exactnum::{
    decide_coset, in_half_integers, in_integers, integer_solve, mat_vec, parse_param, rat, transcendence_degree, Atom,
    ParamValue, Rational, TriBool,
};
use proptest::prelude::*;

/// `(q − r)/m ∈ ℤ` by scanning the integers in a range that must contain
/// the quotient.
fn coset_oracle(q: &Rational, r: &Rational, m: &Rational) -> bool {
    let y = (q - r) / m;
    (-2000i64..=2000).any(|k| Rational::from_integer(k.into()) == y)
}

#[test]
fn decide_coset_exhaustive_on_small_rationals() {
    let mut values = Vec::new();
    for d in 1..=4 {
        for n in -8..=8 {
            values.push(rat(n, d));
        }
    }
    values.sort();
    values.dedup();
    let moduli: Vec<Rational> = [(1, 1), (2, 1), (1, 2), (3, 2), (1, 3)].iter().map(|&(n, d)| rat(n, d)).collect();
    let offsets: Vec<Rational> = [(0, 1), (1, 2), (-1, 3), (1, 1)].iter().map(|&(n, d)| rat(n, d)).collect();
    for q in &values {
        for r in &offsets {
            for m in &moduli {
                let got = decide_coset(&ParamValue::rational(q.clone()), r, m);
                assert_eq!(got, TriBool::from(coset_oracle(q, r, m)), "q={q} r={r} m={m}");
            }
        }
    }
}

#[test]
fn coset_examples() {
    assert_eq!(in_integers(&parse_param("7").unwrap()), TriBool::Yes);
    assert_eq!(in_half_integers(&parse_param("-3/2").unwrap()), TriBool::Yes);
    assert_eq!(in_integers(&parse_param("tau1").unwrap()), TriBool::No);
    assert_eq!(in_integers(&parse_param("alg1 + 1").unwrap()), TriBool::No);
    assert_eq!(in_integers(&parse_param("alg1 - alg2").unwrap()), TriBool::Unknown);
}

#[test]
fn td_examples() {
    let v = |s: &str| parse_param(s).unwrap();
    assert_eq!(transcendence_degree(&[v("tau1"), v("tau2")]), 2);
    assert_eq!(transcendence_degree(&[v("tau1"), v("2*tau1 + 1/3")]), 1);
    assert_eq!(transcendence_degree(&[v("alg1"), v("1/2")]), 0);
}

fn brute_force(a: &[Vec<BigInt>], b: &[BigInt], n: usize) -> Option<Vec<i64>> {
    let a: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect();
    let b: Vec<i64> = b.iter().map(|x| x.to_i64().unwrap()).collect();
    let mut x = vec![-20i64; n];
    loop {
        if a.iter().zip(&b).all(|(row, bi)| row.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>() == *bi) {
            return Some(x);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            if x[i] < 20 {
                x[i] += 1;
                break;
            }
            x[i] = -20;
            i += 1;
        }
    }
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    prop::collection::vec(prop::collection::vec((-4i64..=4).prop_map(BigInt::from), cols), rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn add_sub_canonical(a in param_value(), b in param_value()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn coset_yes_implies_atom_free_and_stable(
        x in param_value(),
        r in small_rational(),
        m in (1i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d)),
        c in (-3i64..=3, 1i64..=3).prop_map(|(n, d)| rat(n, d)),
        id in 1u32..=4,
        transcendental in prop::bool::ANY,
    ) {
        let d = decide_coset(&x, &r, &m);
        if d.is_yes() {
            prop_assert!(x.is_rational());
        }
        let a = if transcendental { Atom::tau(id) } else { Atom::alg(id) };
        let term = &ParamValue::atom(a) * &c;
        let round_trip = &(&x + &term) - &term;
        prop_assert_eq!(decide_coset(&round_trip, &r, &m), d);
    }

    #[test]
    fn coset_matches_oracle_on_rationals(q in small_rational(), r in small_rational(), m in (1i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))) {
        let got = decide_coset(&ParamValue::rational(q.clone()), &r, &m);
        prop_assert_eq!(got, TriBool::from(coset_oracle(&q, &r, &m)));
    }

    #[test]
    fn td_permutation_invariant(vs in prop::collection::vec(param_value(), 0..5), seed in any::<u64>()) {
        let mut shuffled = vs.clone();
        let n = shuffled.len();
        if n > 1 {
            for i in (1..n).rev() {
                let j = (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize;
                shuffled.swap(i, j);
            }
        }
        prop_assert_eq!(transcendence_degree(&vs), transcendence_degree(&shuffled));
    }

    #[test]
    fn td_unchanged_by_linear_combinations(
        vs in prop::collection::vec(param_value(), 1..4),
        coeffs in prop::collection::vec(small_rational(), 4),
        shift in small_rational(),
    ) {
        let combo = vs
            .iter()
            .zip(&coeffs)
            .fold(ParamValue::rational(shift), |acc, (v, c)| acc + &(v * c));
        let mut extended = vs.clone();
        extended.push(combo);
        prop_assert_eq!(transcendence_degree(&vs), transcendence_degree(&extended));
    }

    #[test]
    fn td_bounded_by_length(vs in prop::collection::vec(param_value(), 0..5)) {
        prop_assert!(transcendence_degree(&vs) <= vs.len());
    }

    #[test]
    fn integer_solve_two_unknowns(a in int_matrix(2, 2), b in prop::collection::vec((-12i64..=12).prop_map(BigInt::from), 2)) {
        check_solve(&a, &b, 2)?;
    }

    #[test]
    fn integer_solve_planted(a in int_matrix(3, 3), x in prop::collection::vec((-20i64..=20).prop_map(BigInt::from), 3)) {
        let b = mat_vec(&a, &x);
        let got = integer_solve(&a, &b);
        prop_assert!(got.is_some(), "planted solution {:?} missed", x);
        prop_assert_eq!(mat_vec(&a, &got.unwrap()), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integer_solve_three_unknowns(a in int_matrix(2, 3), b in prop::collection::vec((-12i64..=12).prop_map(BigInt::from), 2)) {
        check_solve(&a, &b, 3)?;
    }
}

fn check_solve(a: &[Vec<BigInt>], b: &[BigInt], n: usize) -> Result<(), TestCaseError> {
    match integer_solve(a, b) {
        Some(x) => prop_assert_eq!(mat_vec(a, &x), b.to_vec()),
        None => prop_assert!(brute_force(a, b, n).is_none(), "solver missed a small solution"),
    }
    Ok(())
}

#[test]
fn integer_solve_edge_cases() {
    let z = |k: i64| BigInt::from(k);
    assert_eq!(integer_solve(&[vec![z(2)]], &[z(3)]), None);
    assert_eq!(integer_solve(&[vec![z(2), z(3)]], &[z(1)]).map(|x| z(2) * &x[0] + z(3) * &x[1]), Some(z(1)));
    assert_eq!(integer_solve(&[vec![z(0)]], &[z(0)]).map(|x| x.len()), Some(1));
    assert!(integer_solve(&[vec![z(0), z(0)]], &[z(1)]).is_none());
}
