use std::collections::HashMap;

use proptest::prelude::*;
use svand::modules::{build_w, graded_frobenius, top_x_degree, Grading};
use svand::operators::{apply, OperatorSpec};
use svand::qlinalg::{orthogonal_complement, permutation_matrix, span_closure};
use svand::superspace::{super_vandermonde, vandermonde_determinant, Bidegree, SuperPolynomial};
use svand::symfunc::staircase::{is_substaircase, nonskip};
use svand::symfunc::tableaux::kostka;
use svand::symfunc::{character_table, frobenius_from_characters, Basis, Partition, QTFrac, SymFunc};
use svand::verify::properties;
use svand::{Perm, Q};

fn poly(n: usize, terms: Vec<(i64, Vec<u32>, Vec<bool>)>) -> SuperPolynomial {
    let mut f = SuperPolynomial::zero(n);
    for (c, x, t) in terms {
        let theta: Vec<usize> = (1..=n).filter(|i| t[i - 1]).collect();
        let m = SuperPolynomial::from_exponents(n, Q::from(c), &x[..n], &theta).unwrap();
        f = f.try_add(&m).unwrap();
    }
    f
}

/// Random superpolynomials in `n` variables, x-degree at most 4 per term.
fn superpoly(n: usize) -> impl Strategy<Value = SuperPolynomial> {
    let term = (-4i64..=4, prop::collection::vec(0u32..=3, 5), prop::collection::vec(any::<bool>(), 5)).prop_map(
        move |(c, mut x, t)| {
            let mut budget = 4;
            for e in x.iter_mut().take(n) {
                *e = (*e).min(budget);
                budget -= *e;
            }
            (c, x, t)
        },
    );
    prop::collection::vec(term, 0..4).prop_map(move |ts| poly(n, ts))
}

fn triple() -> impl Strategy<Value = (SuperPolynomial, SuperPolynomial, SuperPolynomial)> {
    (1usize..=5).prop_flat_map(|n| (superpoly(n), superpoly(n), superpoly(n)))
}

fn sequence(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=3, 0..=max_len)
}

/// `(n, a, w)` with `len(a) ≤ n` and `w ∈ S_n`.
fn space_and_perm(max_n: usize) -> impl Strategy<Value = (usize, Vec<u32>, Perm)> {
    (1usize..=max_n).prop_flat_map(|n| {
        (Just(n), sequence(n), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(n, a, w)| (n, a, Perm::from_images(w).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative_and_distributive((f, g, h) in triple()) {
        prop_assert_eq!(f.try_mul(&g).unwrap().try_mul(&h).unwrap(), f.try_mul(&g.try_mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.try_mul(&g.try_add(&h).unwrap()).unwrap(),
            f.try_mul(&g).unwrap().try_add(&f.try_mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn vandermonde_is_alternating((n, a, w) in space_and_perm(5)) {
        let d = super_vandermonde(n, &a).unwrap();
        prop_assert_eq!(d.act(&w).unwrap(), d.scale(&Q::from(w.sign())));
    }

    #[test]
    fn rearranging_a_leaves_vandermonde_unchanged(
        (n, a, b) in (1usize..=5)
            .prop_flat_map(|n| (Just(n), sequence(n)))
            .prop_flat_map(|(n, a)| (Just(n), Just(a.clone()), Just(a).prop_shuffle()))
    ) {
        prop_assert_eq!(super_vandermonde(n, &a).unwrap(), super_vandermonde(n, &b).unwrap());
    }

    #[test]
    fn operator_suites_hold_for_random_seeds(seed in any::<u64>()) {
        for suite in [properties::operator_relations, properties::equivariance, properties::leibniz, properties::bilinear_form] {
            let r = suite(seed, 4).unwrap();
            prop_assert_eq!(r.first_failure, None);
        }
    }

    #[test]
    fn closure_is_idempotent_and_order_independent(
        (n, f, g) in (1usize..=3).prop_flat_map(|n| (Just(n), superpoly(n), superpoly(n)))
    ) {
        let mut ops = OperatorSpec::all_dx(n);
        ops.extend(OperatorSpec::all_dtheta(n));
        let once = span_closure(n, &[f.clone(), g.clone()], &ops, None).unwrap();
        let swapped = span_closure(n, &[g, f], &ops, None).unwrap();
        prop_assert_eq!(once.pieces(), swapped.pieces());
        let twice = span_closure(n, &once.elements(), &ops, None).unwrap();
        prop_assert_eq!(once.pieces(), twice.pieces());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn w_pieces_are_stable_and_symmetric((n, a, w) in space_and_perm(4)) {
        let space = build_w(n, &a).unwrap();
        for piece in space.pieces().values() {
            prop_assert!(permutation_matrix(piece, &w).is_ok());
        }
        // dim W_{i,j} = dim W_{s−i, r−j}
        let (s, r) = (top_x_degree(n, &a), a.len() as u32);
        for (d, piece) in space.pieces() {
            let mirror = Bidegree::new(s - d.x, r - d.theta);
            prop_assert_eq!(piece.dim(), space.piece(&mirror).map_or(0, |p| p.dim()));
        }
        let f = graded_frobenius(&space, Grading::XTheta).unwrap();
        prop_assert_eq!(f.omega().unwrap(), f.reversed(s, r).unwrap());
    }

    #[test]
    fn complement_annihilates_vandermonde((n, a, _w) in space_and_perm(3)) {
        let space = build_w(n, &a).unwrap();
        let delta = super_vandermonde(n, &a).unwrap();
        let top = delta.bidegree().unwrap();
        for x in 0..=top.x + 1 {
            for t in 0..=top.theta {
                for h in orthogonal_complement(&space, Bidegree::new(x, t)).elements() {
                    prop_assert!(apply(&h, &delta).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn characters_recover_multiplicities(n in 1u32..=5, seed in any::<u64>()) {
        let parts = Partition::all(n);
        let mult: Vec<i64> = parts.iter().enumerate().map(|(i, _)| ((seed >> (3 * i)) & 3) as i64).collect();
        let table = character_table(n);
        let mut chars = HashMap::new();
        for mu in &parts {
            let v: i64 = parts.iter().zip(&mult).map(|(l, m)| m * table.value(l, mu)).sum();
            chars.insert(mu.clone(), Q::from(v));
        }
        let f = frobenius_from_characters(n, &chars).unwrap();
        let mut want = SymFunc::zero(Basis::Schur);
        for (l, m) in parts.iter().zip(&mult) {
            if *m != 0 {
                want.add_term(l.clone(), QTFrac::from(Q::from(*m)));
            }
        }
        prop_assert_eq!(f, want);
    }
}

#[test]
fn theta_variables_anticommute() {
    for n in 1..=5 {
        for i in 1..=n {
            let ti = SuperPolynomial::theta(n, i).unwrap();
            assert!(ti.try_mul(&ti).unwrap().is_zero());
            for j in (1..=n).filter(|&j| j != i) {
                let tj = SuperPolynomial::theta(n, j).unwrap();
                assert_eq!(ti.try_mul(&tj).unwrap(), -&tj.try_mul(&ti).unwrap());
            }
        }
    }
}

#[test]
fn determinant_matches_antisymmetrization() {
    for n in 1..=4 {
        let mut layer = vec![Vec::new()];
        for _ in 0..n {
            for a in &layer {
                assert_eq!(vandermonde_determinant(n, a).unwrap(), super_vandermonde(n, a).unwrap(), "n={n} a={a:?}");
            }
            layer = layer.iter().flat_map(|p: &Vec<u32>| (0..=3).map(move |v| [p.as_slice(), &[v]].concat())).collect();
        }
        for a in &layer {
            assert_eq!(vandermonde_determinant(n, a).unwrap(), super_vandermonde(n, a).unwrap(), "n={n} a={a:?}");
        }
    }
}

#[test]
fn schur_monomial_round_trip_and_kostka() {
    for n in 1..=7 {
        for lambda in Partition::all(n) {
            let s = SymFunc::schur(lambda.clone());
            let m = s.to_basis(Basis::Monomial).unwrap();
            assert_eq!(m.to_schur().unwrap(), s, "{lambda}");
            for mu in Partition::all(n) {
                assert_eq!(m.coeff(&mu), QTFrac::from(Q::from(kostka(&lambda, &mu) as i64)), "K_{lambda},{mu}");
            }
        }
    }
}

#[test]
fn nonskip_matches_substaircase() {
    for n in 1..=6u32 {
        for s in 2..=n + 2 {
            for k in 1..s.min(n + 1) {
                let total = (s as u64).pow(n);
                for code in 0..total {
                    let seq: Vec<u32> = (0..n).map(|i| (code / (s as u64).pow(i) % s as u64) as u32).collect();
                    assert_eq!(
                        nonskip(&seq, n, k, s),
                        is_substaircase(&seq, n, k, Some(s)),
                        "{seq:?} n={n} k={k} s={s}"
                    );
                }
            }
        }
    }
}
