use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::{json, Value};

use super::fixtures::{HilbertTable, SchurTable, EXPANSIONS, HILBERT_TABLES, SCHUR_TABLES, TANISAKI_N4};
use super::properties::{self, SuiteResult, DEFAULT_CASES};
use super::{finish, CheckDef, CheckKind, CheckReport, Origin, Outcome, Params, SuiteOptions};
use crate::error::Result;
use crate::modules::{
    build_m, build_v, build_vv, build_w, collapse_q, graded_frobenius, gram_matrix_in, projection_rank,
    supercoinvariant_frobenius, tanisaki_search, top_x_degree, BigradedFrobenius, Grading,
};
use crate::operators::apply;
use crate::qlinalg::{ambient_monomials, orthogonal_complement, ReducedBasis};
use crate::rational::Q;
use crate::superspace::{
    differential, elementary, power_sum, super_vandermonde, vandermonde_determinant, Bidegree, SuperPolynomial,
};
use crate::symfunc::qpoly::{q_factorial, q_stirling};
use crate::symfunc::staircase::{hook_substaircases, nonskip, substaircases};
use crate::symfunc::{
    c_nk_via_syt, delta_prime_e, hall_littlewood_qprime, hl_identity_rhs, Basis, Partition, QTPoly, SymFunc,
};

macro_rules! param {
    ($p:expr, $field:ident) => {
        match $p.$field.clone() {
            Some(v) => v,
            None => return Ok(Outcome::skipped(concat!("missing parameter `", stringify!($field), "`"))),
        }
    };
}

macro_rules! within {
    ($cond:expr, $why:expr) => {
        if !$cond {
            return Ok(Outcome::skipped(format!("outside the supported range: {}", $why)));
        }
    };
}

// ---------- comparison helpers ----------

fn poly_diff(label: &str, expected: &SuperPolynomial, actual: &SuperPolynomial) -> Result<Option<String>> {
    let d = expected.try_add(&actual.scale(&Q::from(-1)))?;
    Ok(d.leading().map(|(m, _)| {
        let mono = SuperPolynomial::monomial(expected.rank(), *m, Q::from(1));
        format!("{label}: coefficient of {mono} expected {}, got {}", expected.coeff(m), actual.coeff(m))
    }))
}

fn symfunc_diff(label: &str, expected: &SymFunc, actual: &SymFunc) -> Option<String> {
    expected
        .first_difference(actual)
        .map(|(lambda, e, a)| format!("{label}: coefficient of s_{lambda} expected {e}, got {a}"))
}

fn bigraded_diff(expected: &BigradedFrobenius, actual: &BigradedFrobenius) -> Option<String> {
    expected.first_difference(actual).map(|((i, j), e, a)| {
        let inner = symfunc_diff("", &e, &a).unwrap_or_default();
        format!("piece (x={i}, second={j}){inner}")
    })
}

fn series_diff(label: &str, expected: &[u64], actual: &[u64]) -> Option<String> {
    let len = expected.len().max(actual.len());
    (0..len).find_map(|i| {
        let (e, a) = (expected.get(i).copied().unwrap_or(0), actual.get(i).copied().unwrap_or(0));
        (e != a).then(|| format!("{label}: coefficient of q^{i} expected {e}, got {a}"))
    })
}

fn matrix_diff(expected: &[Vec<u64>], actual: &[Vec<u64>]) -> Option<String> {
    let rows = expected.len().max(actual.len());
    for j in 0..rows {
        let (e, a) = (expected.get(j).cloned().unwrap_or_default(), actual.get(j).cloned().unwrap_or_default());
        for i in 0..e.len().max(a.len()) {
            let (x, y) = (e.get(i).copied().unwrap_or(0), a.get(i).copied().unwrap_or(0));
            if x != y {
                return Some(format!("entry (row {j}, column {i}) expected {x}, got {y}"));
            }
        }
    }
    None
}

/// Coefficients of a polynomial in `q` alone with nonnegative integer values.
fn q_series(p: &QTPoly) -> Vec<u64> {
    let mut out = vec![0u64; p.q_degree() as usize + 1];
    for (i, _, c) in p.terms() {
        out[i as usize] += c.to_i64().unwrap_or(-1) as u64;
    }
    out
}

fn q_series_of_hilbert(f: &BigradedFrobenius) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (&(i, _), c) in &f.hilbert()? {
        if out.len() <= i as usize {
            out.resize(i as usize + 1, 0);
        }
        out[i as usize] += c;
    }
    Ok(out)
}

fn reverse(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v.reverse();
    v
}

/// Generating function of `seqs` by coordinate sum.
fn sum_series(seqs: &[Vec<u32>]) -> Vec<u64> {
    let mut out = Vec::new();
    for s in seqs {
        let d = s.iter().sum::<u32>() as usize;
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += 1;
    }
    out
}

fn constant_seq(n: usize, k: usize, value: u32) -> Vec<u32> {
    vec![value; n - k]
}

// ---------- parameter grids ----------

/// Weakly decreasing sequences of length at most `n` with entries at most
/// `max`. Rearranging `a` leaves `Δ_n(a)` unchanged.
pub(crate) fn decreasing_sequences(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(r: usize, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() == r {
            return;
        }
        for v in 0..=hi {
            cur.push(v);
            rec(r, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn w_cap(opts: &SuiteOptions) -> usize {
    opts.max_n.min(if opts.large { 6 } else { 5 })
}

fn grid_w_spaces(opts: &SuiteOptions) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=w_cap(opts) {
        for a in decreasing_sequences(n, 3) {
            out.push(Params::n(n).with_a(&a));
        }
    }
    out
}

fn grid_n(lo: usize, hi: usize) -> impl Fn(&SuiteOptions) -> Vec<Params> {
    move |opts| (lo..=hi.min(opts.max_n)).map(Params::n).collect()
}

fn grid_nk(hi: usize, opts: &SuiteOptions) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=hi.min(opts.max_n) {
        for k in 1..=n {
            out.push(Params::n(n).with_k(k));
        }
    }
    out
}

// ---------- checks ----------

fn small_vandermondes(p: &Params) -> Result<Outcome> {
    let n = param!(p, n);
    within!(n == 3, "the worked expansions are for n = 3");
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    let mut diff = None;
    for e in EXPANSIONS {
        let want = SuperPolynomial::parse(e.text, Some(e.n))?;
        let got = super_vandermonde(e.n, e.a)?;
        expected.push(json!({ "a": e.a, "expansion": want.to_string(), "citation": e.citation }));
        actual.push(json!({ "a": e.a, "expansion": got.to_string() }));
        if diff.is_none() {
            diff = poly_diff(&format!("Δ_3{:?}", e.a), &want, &got)?;
        }
    }
    Ok(Outcome::compare(Value::Array(expected), Origin::Published, Value::Array(actual), diff))
}

fn all_sequences(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=max).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn determinant(p: &Params) -> Result<Outcome> {
    let n = param!(p, n);
    within!((1..=5).contains(&n), "1 ≤ n ≤ 5");
    let seqs = all_sequences(n, 2);
    let mut diff = None;
    for a in &seqs {
        let got = vandermonde_determinant(n, a)?;
        let want = super_vandermonde(n, a)?;
        if let Some(d) = poly_diff(&format!("a = {a:?}"), &want, &got)? {
            diff = Some(d);
            break;
        }
    }
    let mut product = SuperPolynomial::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let factor = SuperPolynomial::x(n, i)?.try_add(&SuperPolynomial::x(n, j)?.scale(&Q::from(-1)))?;
            product = product.try_mul(&factor)?;
        }
    }
    if diff.is_none() {
        diff = poly_diff("∏(x_i − x_j)", &product, &vandermonde_determinant(n, &[])?)?;
    }
    Ok(Outcome::compare(
        json!({ "determinant_equals_antisymmetrization": true, "sequences": seqs.len(), "empty_sequence": product.to_string() }),
        Origin::Elementary,
        json!({ "sequences_checked": seqs.len() }),
        diff,
    ))
}

fn dimension_hilbert(p: &Params) -> Result<Outcome> {
    let (n, k) = (param!(p, n), param!(p, k));
    within!(1 <= k && k <= n && n <= 6, "1 ≤ k ≤ n ≤ 6");
    let v = build_v(n, &constant_seq(n, k, k as u32 - 1))?;
    let want = q_series(&(&q_factorial(k as u32) * &q_stirling(n as u32, k as u32)));
    let got = q_series_of_hilbert(&graded_frobenius(&v, Grading::XTheta)?)?;
    let want_dim: u64 = want.iter().sum();
    let mut diff = series_diff("Hilb", &want, &got);
    if v.dim() as u64 != want_dim {
        diff = Some(format!("dimension expected {want_dim}, got {}", v.dim()));
    }
    Ok(Outcome::compare(
        json!({ "dim": want_dim, "hilbert": want }),
        Origin::Independent,
        json!({ "dim": v.dim(), "hilbert": got }),
        diff,
    ))
}

fn frobenius_theorem(p: &Params) -> Result<Outcome> {
    let (n, k) = (param!(p, n), param!(p, k));
    within!(1 <= k && k <= n && n <= 6, "1 ≤ k ≤ n ≤ 6");
    let v = build_v(n, &constant_seq(n, k, k as u32 - 1))?;
    let got = collapse_q(&graded_frobenius(&v, Grading::XTheta)?);
    let syt = c_nk_via_syt(n as u32, k as u32);
    let hl = hl_identity_rhs(n as u32, k as u32)?;
    let mut diff =
        symfunc_diff("tableau formula", &syt, &got).or_else(|| symfunc_diff("Hall–Littlewood formula", &hl, &got));
    let mut expected = json!({ "tableau_formula": syt.to_string(), "hall_littlewood_formula": hl.to_string() });
    let mut notes = Vec::new();
    if n <= 5 {
        let delta = delta_prime_e(k as u32 - 1, n as u32)?.at_t0()?;
        diff = diff.or_else(|| symfunc_diff("Δ'_{e_{k-1}} e_n at t = 0", &delta, &got));
        expected["delta_at_t0"] = json!(delta.to_string());
    } else {
        notes.push("Macdonald route not run above n = 5".to_string());
    }
    let mut out = Outcome::compare(expected, Origin::Independent, json!(got.to_string()), diff);
    for note in notes {
        out = out.note(note);
    }
    Ok(out)
}

fn schur_table_outcome(t: &SchurTable) -> Result<Outcome> {
    let mut want = BigradedFrobenius::new(Grading::XTheta);
    for (j, row) in t.rows.iter().enumerate() {
        for (i, entry) in row.iter().enumerate() {
            want.add(i as u32, j as u32, &SymFunc::parse(entry)?)?;
        }
    }
    let got = graded_frobenius(&build_w(t.n, t.a)?, Grading::XTheta)?;
    let diff = bigraded_diff(&want, &got);
    Ok(Outcome::compare(
        json!({ "citation": t.citation, "rows": t.rows }),
        Origin::Published,
        json!({ "latex": got.latex(), "frobenius": got.to_json() }),
        diff,
    ))
}

fn hilbert_table_outcome(t: &HilbertTable) -> Result<Outcome> {
    let want: Vec<Vec<u64>> = t.rows.iter().map(|r| r.to_vec()).collect();
    let got = graded_frobenius(&build_w(t.n, t.a)?, Grading::XTheta)?.hilbert_matrix()?;
    let diff = matrix_diff(&want, &got);
    Ok(Outcome::compare(
        json!({ "citation": t.citation, "rows": want }),
        Origin::Published,
        json!({ "rows": got }),
        diff,
    ))
}

/// Compares a Schur table against `grFrob(W_n(a))`, as the
/// `frobenius_tables` check does for the shipped fixtures.
pub fn check_schur_table(t: &SchurTable) -> CheckReport {
    let start = Instant::now();
    let params = Params::n(t.n).with_a(t.a);
    finish(table_def(), &params, schur_table_outcome(t), start)
}

pub fn check_hilbert_table(t: &HilbertTable) -> CheckReport {
    let start = Instant::now();
    let params = Params::n(t.n).with_a(t.a);
    finish(table_def(), &params, hilbert_table_outcome(t), start)
}

fn table_def() -> &'static CheckDef {
    REGISTRY.iter().find(|c| c.id == "frobenius_tables").expect("registered")
}

fn frobenius_tables(p: &Params) -> Result<Outcome> {
    let (n, a) = (param!(p, n), param!(p, a));
    if let Some(t) = SCHUR_TABLES.iter().find(|t| t.n == n && t.a == a.as_slice()) {
        return schur_table_outcome(t);
    }
    if let Some(t) = HILBERT_TABLES.iter().find(|t| t.n == n && t.a == a.as_slice()) {
        return hilbert_table_outcome(t);
    }
    Ok(Outcome::skipped(format!("no published table for n = {n}, a = {a:?}")))
}

fn w_params(p: &Params) -> std::result::Result<(usize, Vec<u32>), Outcome> {
    let n = p.n.ok_or_else(|| Outcome::skipped("missing parameter `n`"))?;
    let a = p.a.clone().unwrap_or_default();
    if n == 0 || n > 6 || a.len() > n {
        return Err(Outcome::skipped("outside the supported range: 1 ≤ n ≤ 6, len(a) ≤ n"));
    }
    Ok((n, a))
}

fn duality(p: &Params) -> Result<Outcome> {
    let (n, a) = match w_params(p) {
        Ok(v) => v,
        Err(o) => return Ok(o),
    };
    let f = graded_frobenius(&build_w(n, &a)?, Grading::XTheta)?;
    let (s, r) = (top_x_degree(n, &a), a.len() as u32);
    let lhs = f.omega()?;
    let rhs = f.reversed(s, r)?;
    let diff = bigraded_diff(&rhs, &lhs);
    Ok(Outcome::compare(
        json!({ "rev_q rev_z grFrob": rhs.to_json() }),
        Origin::Independent,
        json!({ "omega grFrob": lhs.to_json() }),
        diff,
    ))
}

fn poincare_pairing(p: &Params) -> Result<Outcome> {
    let (n, a) = match w_params(p) {
        Ok(v) => v,
        Err(o) => return Ok(o),
    };
    let w = build_w(n, &a)?;
    let delta = super_vandermonde(n, &a)?;
    let mut diff = None;
    let mut largest = 0;
    for d in w.pieces().keys() {
        match gram_matrix_in(&w, &delta, *d) {
            Ok(m) => {
                largest = largest.max(m.nrows);
                if !m.is_nonsingular() {
                    diff = Some(format!("Gram matrix at {d} ({}×{}) is singular", m.nrows, m.ncols));
                }
            }
            Err(e) => diff = Some(format!("Gram matrix at {d}: {e}")),
        }
        if diff.is_some() {
            break;
        }
    }
    Ok(Outcome::compare(
        json!({ "every_gram_matrix": "square and nonsingular" }),
        Origin::Elementary,
        json!({ "pieces": w.pieces().len(), "largest_gram_matrix": largest }),
        diff,
    ))
}

fn top_slice(p: &Params) -> Result<Outcome> {
    let (n, a) = match w_params(p) {
        Ok(v) => v,
        Err(o) => return Ok(o),
    };
    let v = build_v(n, &a)?;
    let w = build_w(n, &a)?;
    let r = a.len() as u32;
    let mut diff = None;
    let degrees: BTreeSet<Bidegree> =
        v.pieces().keys().chain(w.pieces().keys().filter(|d| d.theta == r)).copied().collect();
    let empty = ReducedBasis::new(n);
    for d in degrees {
        let (pv, pw) = (v.piece(&d).unwrap_or(&empty), w.piece(&d).unwrap_or(&empty));
        if pv != pw {
            diff = Some(format!("slice at {d}: V has dimension {}, W has dimension {}", pv.dim(), pw.dim()));
            break;
        }
    }
    Ok(Outcome::compare(json!({ "slice_equals_v": true }), Origin::Elementary, json!({ "dim_v": v.dim() }), diff))
}

fn annihilator_perp(p: &Params) -> Result<Outcome> {
    let (n, a) = match w_params(p) {
        Ok(v) => v,
        Err(o) => return Ok(o),
    };
    within!(n <= 4, "n ≤ 4");
    let w = build_w(n, &a)?;
    let delta = super_vandermonde(n, &a)?;
    let top = delta.bidegree().unwrap_or_default();
    let mut diff = None;
    let mut checked = 0;
    'outer: for x in 0..=top.x {
        for t in 0..=top.theta {
            let d = Bidegree::new(x, t);
            let perp = orthogonal_complement(&w, d);
            for f in perp.elements() {
                checked += 1;
                if !apply(&f, &delta)?.is_zero() {
                    diff = Some(format!("complement element at {d} does not annihilate Δ: {f}"));
                    break 'outer;
                }
            }
            // dim R_d = rank of m ↦ m·Δ over the monomials of degree d
            let images = ReducedBasis::from_elements(
                n,
                ambient_monomials(n, d)
                    .into_iter()
                    .map(|m| apply(&SuperPolynomial::monomial(n, m, Q::from(1)), &delta))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            );
            let dim_w = w.piece(&d).map_or(0, ReducedBasis::dim);
            if images.dim() != dim_w {
                diff = Some(format!("at {d}: dim R = {}, dim W = {dim_w}", images.dim()));
                break 'outer;
            }
        }
    }
    Ok(Outcome::compare(
        json!({ "complement_annihilates": true, "dim_quotient_equals_dim_w": true }),
        Origin::Independent,
        json!({ "complement_elements_checked": checked }),
        diff,
    ))
}

fn nks_theorem(p: &Params) -> Result<Outcome> {
    let (n, k, s) = (param!(p, n), param!(p, k), param!(p, s));
    within!(1 <= k && k <= n && n <= 6 && k as u32 <= s && s <= n as u32 + 1, "1 ≤ k ≤ n ≤ 6, k ≤ s ≤ n + 1");
    let v = build_v(n, &constant_seq(n, k, s - 1))?;
    let got = q_series_of_hilbert(&graded_frobenius(&v, Grading::XTheta)?)?;
    let want = reverse(sum_series(&substaircases(n as u32, k as u32, Some(s))));
    let diff = series_diff("Hilb", &want, &got);
    Ok(Outcome::compare(json!({ "hilbert": want }), Origin::Independent, json!({ "hilbert": got }), diff))
}

fn nonskip_equivalence(p: &Params) -> Result<Outcome> {
    let n = param!(p, n);
    within!((1..=6).contains(&n), "1 ≤ n ≤ 6");
    let n = n as u32;
    let mut checked = 0u64;
    let mut diff = None;
    'outer: for k in 1..=n {
        for s in k..=n + 1 {
            let subs: BTreeSet<Vec<u32>> = substaircases(n, k, Some(s)).into_iter().collect();
            let total = (s as u64).pow(n);
            for code in 0..total {
                let seq: Vec<u32> = (0..n).map(|i| (code / (s as u64).pow(i) % s as u64) as u32).collect();
                checked += 1;
                if nonskip(&seq, n, k, s) != subs.contains(&seq) {
                    diff =
                        Some(format!("(n,k,s) = ({n},{k},{s}), sequence {seq:?}: nonskip {}", nonskip(&seq, n, k, s)));
                    break 'outer;
                }
            }
        }
    }
    Ok(Outcome::compare(
        json!({ "equivalent": true }),
        Origin::Independent,
        json!({ "sequences_checked": checked }),
        diff,
    ))
}

fn hook_tanisaki(p: &Params) -> Result<Outcome> {
    let (n, r) = (param!(p, n), param!(p, r));
    within!(r < n && n <= 6, "r < n ≤ 6");
    let k = n - r;
    let v = build_v(n, &vec![0; r])?;
    let frob = graded_frobenius(&v, Grading::XTheta)?;
    let got = collapse_q(&frob);
    let lambda = Partition::hook(r as u32 + 1, k as u32 - 1);
    // grFrob(R_λ) = rev_q Q'_λ, and the claim is grFrob(V) = rev_q ω grFrob(R_λ)
    let r_lambda = hall_littlewood_qprime(&lambda).rev_q()?;
    let want = r_lambda.omega()?.rev_q()?;
    let hilb_want = reverse(sum_series(&hook_substaircases(n as u32, k as u32)));
    let hilb_got = q_series_of_hilbert(&frob)?;
    let diff = symfunc_diff("grFrob", &want, &got)
        .or_else(|| series_diff("Hilb vs hook substaircases", &hilb_want, &hilb_got));
    Ok(Outcome::compare(
        json!({ "lambda": lambda.parts(), "frobenius": want.to_string(), "hilbert": hilb_want }),
        Origin::Independent,
        json!({ "frobenius": got.to_string(), "hilbert": hilb_got }),
        diff,
    ))
}

fn positroid(p: &Params) -> Result<Outcome> {
    let n = param!(p, n);
    within!((1..=5).contains(&n), "1 ≤ n ≤ 5");
    let m = build_m(n)?;
    let want_dim: u64 = (0..=n as u64).map(|r| (r + 1..=n as u64).product::<u64>()).sum();
    let mut diff = (m.dim() as u64 != want_dim).then(|| format!("dimension expected {want_dim}, got {}", m.dim()));
    let got = graded_frobenius(&m, Grading::XTheta)?;
    let mut want = BigradedFrobenius::new(Grading::XTheta);
    for r in 0..=n {
        let er = if r == 0 {
            SymFunc::schur(Partition::empty())
        } else {
            SymFunc::basis_element(Basis::Elementary, Partition::new(vec![r as u32])?)
        };
        let q = if r == n {
            SymFunc::schur(Partition::empty())
        } else {
            hall_littlewood_qprime(&Partition::new(vec![1; n - r])?).rev_q()?
        };
        let term = er.mul(&q)?;
        for (i, _, g) in split_by_q(&term)? {
            want.add(i, r as u32, &g)?;
        }
    }
    if diff.is_none() {
        diff = bigraded_diff(&want, &got);
    }
    Ok(Outcome::compare(
        json!({ "dim": want_dim, "frobenius": want.to_json() }),
        Origin::Independent,
        json!({ "dim": m.dim(), "frobenius": got.to_json() }),
        diff,
    ))
}

/// Splits a Schur expansion with coefficients in `q` into its `q^i` parts.
fn split_by_q(f: &SymFunc) -> Result<Vec<(u32, u32, SymFunc)>> {
    let g = BigradedFrobenius::from_symfunc(f, Grading::XY)?;
    Ok(g.pieces().iter().map(|(&(i, j), h)| (i, j, h.clone())).collect())
}

fn annihilation(p: &Params) -> Result<Outcome> {
    use rand::{Rng, SeedableRng};
    let n = param!(p, n);
    within!((1..=5).contains(&n), "1 ≤ n ≤ 5");
    let seed = p.seed.unwrap_or(properties::DEFAULT_SEED);
    let cases = p.cases.unwrap_or(100);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let mut diff = None;
    let mut applications = 0;
    'outer: for _ in 0..cases {
        let r = rng.gen_range(0..=n);
        let a: Vec<u32> = (0..r).map(|_| rng.gen_range(0..=4)).collect();
        let delta = super_vandermonde(n, &a)?;
        // k = n − r, so d > n − k means d > r
        for d in r + 1..=n {
            applications += 1;
            if !apply(&elementary(n, d)?, &delta)?.is_zero() {
                diff = Some(format!("e_{d} does not annihilate Δ_{n}({a:?})"));
                break 'outer;
            }
        }
    }
    Ok(Outcome::compare(json!({ "all_zero": true }), Origin::Elementary, json!({ "applications": applications }), diff)
        .note(format!("{cases} random sequences, seed {seed}")))
}

fn annihilation_constant(p: &Params) -> Result<Outcome> {
    let (n, k) = (param!(p, n), param!(p, k));
    within!(1 <= k && k <= n && n <= 6, "1 ≤ k ≤ n ≤ 6");
    let delta = super_vandermonde(n, &constant_seq(n, k, k as u32 - 1))?;
    let mut killers: Vec<(String, SuperPolynomial)> = Vec::new();
    for i in 1..=n {
        let mut x = vec![0; n];
        x[i - 1] = k as u32;
        killers.push((format!("x_{i}^{k}"), SuperPolynomial::from_exponents(n, Q::from(1), &x, &[])?));
    }
    for d in n - k + 1..=n {
        killers.push((format!("e_{d}"), elementary(n, d)?));
    }
    for j in 1..=n as u32 {
        killers.push((format!("dp_{j}"), differential(&power_sum(n, j)?)));
    }
    let mut diff = None;
    for (name, f) in &killers {
        if !apply(f, &delta)?.is_zero() {
            diff = Some(format!("{name} does not annihilate Δ_{n}((k−1)^(n−k)) with k = {k}"));
            break;
        }
    }
    let names: Vec<&str> = killers.iter().map(|(s, _)| s.as_str()).collect();
    Ok(Outcome::compare(json!({ "annihilators": names }), Origin::Elementary, json!({ "checked": names.len() }), diff))
}

fn suite_outcome(result: SuiteResult) -> Outcome {
    let mut diff = result.first_failure.clone();
    if diff.is_none() && result.nontrivial == 0 {
        diff = Some("no case exercised the identity with nonzero sides".into());
    }
    Outcome::compare(
        json!({ "failures": 0 }),
        Origin::Elementary,
        json!({ "cases": result.cases, "nontrivial": result.nontrivial }),
        diff,
    )
}

fn property(p: &Params, suite: fn(u64, usize) -> Result<SuiteResult>) -> Result<Outcome> {
    let seed = p.seed.unwrap_or(properties::DEFAULT_SEED);
    let cases = p.cases.unwrap_or(DEFAULT_CASES);
    Ok(suite_outcome(suite(seed, cases)?).note(format!("seed {seed}")))
}

fn is_unimodal(v: &[u64]) -> bool {
    if v.is_empty() {
        return true;
    }
    let peak = v.iter().enumerate().max_by_key(|(i, x)| (**x, std::cmp::Reverse(*i))).map_or(0, |(i, _)| i);
    v[..=peak].windows(2).all(|w| w[0] <= w[1]) && v[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// First row or column of `m` that is not unimodal.
fn unimodality_failure(m: &[Vec<u64>]) -> Option<String> {
    for (j, row) in m.iter().enumerate() {
        if !is_unimodal(row) {
            return Some(format!("row {j} is not unimodal: {row:?}"));
        }
    }
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).find_map(|i| {
        let col: Vec<u64> = m.iter().map(|r| r[i]).collect();
        (!is_unimodal(&col)).then(|| format!("column {i} is not unimodal: {col:?}"))
    })
}

fn unimodality(p: &Params) -> Result<Outcome> {
    let (n, a) = match w_params(p) {
        Ok(v) => v,
        Err(o) => return Ok(o),
    };
    let m = graded_frobenius(&build_w(n, &a)?, Grading::XTheta)?.hilbert_matrix()?;
    let diff = unimodality_failure(&m);
    Ok(Outcome::compare(
        json!({ "unimodal_rows_and_columns": true }),
        Origin::Elementary,
        json!({ "hilbert": m }),
        diff,
    )
    .note("consistent at this size; not a proof"))
}

fn double_frobenius(p: &Params) -> Result<Outcome> {
    let (n, k) = (param!(p, n), param!(p, k));
    within!(1 <= k && k <= n && n <= 4, "1 ≤ k ≤ n ≤ 4");
    let vv = build_vv(n, &constant_seq(n, k, k as u32 - 1))?;
    let got = graded_frobenius(&vv, Grading::XY)?.to_symfunc();
    let want = delta_prime_e(k as u32 - 1, n as u32)?;
    let diff = symfunc_diff("grFrob(q,t)", &want, &got);
    Ok(Outcome::compare(json!(want.to_string()), Origin::Independent, json!(got.to_string()), diff)
        .note("consistent at this size; not a proof"))
}

fn zabrocki_sr(p: &Params) -> Result<Outcome> {
    let n = param!(p, n);
    within!((1..=4).contains(&n), "1 ≤ n ≤ 4");
    let cap = (n * (n - 1) / 2 + 2) as u32;
    let sr = supercoinvariant_frobenius(n, cap)?;
    let mut want = BigradedFrobenius::new(Grading::XTheta);
    for k in 1..=n {
        let v = build_v(n, &constant_seq(n, k, k as u32 - 1))?;
        for (&(i, j), g) in graded_frobenius(&v, Grading::XTheta)?.pieces() {
            want.add(i, j, g)?;
        }
    }
    let mut diff = bigraded_diff(&want, &sr.frobenius);
    if diff.is_none() && !sr.vanishes_near_cap() {
        diff = Some(format!("quotient pieces do not vanish in x-degrees {} and {cap}", cap - 1));
    }
    Ok(Outcome::compare(
        json!({ "frobenius": want.to_json() }),
        Origin::Independent,
        json!({ "frobenius": sr.frobenius.to_json(), "hilbert": sr.frobenius.hilbert_matrix()? }),
        diff,
    )
    .note(format!("quotient computed up to x-degree {cap}; vanishing beyond it is not verified"))
    .note("consistent at this size; not a proof"))
}

fn zabrocki_projection(p: &Params) -> Result<Outcome> {
    let (n, k) = (param!(p, n), param!(p, k));
    within!(1 <= k && k <= n && n <= 4, "1 ≤ k ≤ n ≤ 4");
    let (rank, dim) = projection_rank(n, &constant_seq(n, k, k as u32 - 1))?;
    let mut out = Outcome::compare(
        json!({ "projection_rank": dim }),
        Origin::Elementary,
        json!({ "projection_rank": rank, "dim_v": dim }),
        (rank != dim).then(|| format!("projection has rank {rank} on a space of dimension {dim}")),
    );
    if out.diff.is_none() {
        out.status = super::Status::Assumption;
        out = out.note(
            "injective into the quotient piece by piece; that the quotient is finite-dimensional \
             with no pieces beyond the computed degrees is assumed",
        );
    }
    Ok(out)
}

fn tanisaki(p: &Params) -> Result<Outcome> {
    let (n, a) = (param!(p, n), param!(p, a));
    within!((1..=4).contains(&n) && a.len() < n, "1 ≤ n ≤ 4, len(a) < n");
    let k = n - a.len();
    let m = tanisaki_search(n, &a)?;
    let published = if n == 4 { TANISAKI_N4.iter().find(|(b, _)| *b == a.as_slice()) } else { None };
    let expected = match published {
        Some((_, lambda)) => json!({ "lambda": lambda }),
        None => json!({ "lambda": format!("some partition of {n} with {k} parts") }),
    };
    let (origin, diff) = match (&m.found, published) {
        (Some((lambda, _)), Some((_, want))) => {
            (Origin::Published, (lambda.parts() != *want).then(|| format!("found λ = {lambda}, expected {want:?}")))
        }
        (Some(_), None) => (Origin::Elementary, None),
        (None, _) => {
            // say which Q'_λ fits, if any, regardless of length
            let wf = m.frobenius.omega()?;
            let mut other = None;
            for lambda in Partition::all(n as u32) {
                if crate::modules::q_proportionality(&wf, &hall_littlewood_qprime(&lambda))?.is_some() {
                    other = Some(lambda);
                    break;
                }
            }
            let detail = match other {
                Some(l) => format!("proportional to Q'_{l}, which has {} parts", l.length()),
                None => "proportional to no Q'_λ".to_string(),
            };
            let origin = if published.is_some() { Origin::Published } else { Origin::Elementary };
            (origin, Some(format!("no λ ⊢ {n} with {k} parts fits; ω grFrob(V^=) is {detail}")))
        }
    };
    let actual = match &m.found {
        Some((lambda, s)) => json!({ "lambda": lambda.parts(), "q_shift": s, "frobenius": m.frobenius.to_string() }),
        None => json!({ "lambda": null, "frobenius": m.frobenius.to_string() }),
    };
    Ok(Outcome::compare(expected, origin, actual, diff).note("consistent at this size; not a proof"))
}

fn grid_tanisaki(opts: &SuiteOptions) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=opts.max_n.min(3) {
        for k in 1..n {
            for a in all_sequences(n - k, k as u32 - 1).into_iter().filter(|a| a.len() == n - k) {
                out.push(Params::n(n).with_a(&a));
            }
        }
    }
    if opts.max_n >= 4 {
        out.extend(TANISAKI_N4.iter().map(|(a, _)| Params::n(4).with_a(a)));
    }
    out
}

fn grid_tables(opts: &SuiteOptions) -> Vec<Params> {
    SCHUR_TABLES
        .iter()
        .map(|t| (t.n, t.a))
        .chain(HILBERT_TABLES.iter().map(|t| (t.n, t.a)))
        .filter(|(n, _)| *n <= opts.max_n)
        .map(|(n, a)| Params::n(n).with_a(a))
        .collect()
}

pub(crate) static REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "small_vandermondes",
        kind: CheckKind::Theorem,
        citation: "worked expansions of Δ_3(1,1), Δ_3(2,0) and Δ_3(1)",
        scope: "n = 3",
        run: small_vandermondes,
        grid: |o| if o.max_n >= 3 { vec![Params::n(3)] } else { Vec::new() },
    },
    CheckDef {
        id: "determinant",
        kind: CheckKind::Theorem,
        citation: "Δ_n(a) is the ordered determinant of the superspace Vandermonde matrix",
        scope: "n ≤ 4, all a with entries ≤ 2",
        run: determinant,
        grid: |o| grid_n(1, 4)(o),
    },
    CheckDef {
        id: "dimension_hilbert",
        kind: CheckKind::Theorem,
        citation: "Hilb(V_n((k−1)^{n−k}); q) = [k]!_q Stir_q(n,k)",
        scope: "1 ≤ k ≤ n ≤ 5, plus (6,3) and (6,4)",
        run: dimension_hilbert,
        grid: |o| {
            let mut g = grid_nk(5, o);
            if o.max_n >= 6 {
                g.push(Params::n(6).with_k(3));
                g.push(Params::n(6).with_k(4));
            }
            g
        },
    },
    CheckDef {
        id: "frobenius_theorem",
        kind: CheckKind::Theorem,
        citation: "grFrob(V_n((k−1)^{n−k}); q) = Δ'_{e_{k−1}} e_n at t = 0 = C_{n,k}(x; q)",
        scope: "1 ≤ k ≤ n ≤ 5",
        run: frobenius_theorem,
        grid: |o| grid_nk(5, o),
    },
    CheckDef {
        id: "frobenius_tables",
        kind: CheckKind::Theorem,
        citation: "published matrices of grFrob(W_n(a); q, z) and Hilb(R_5(2,2); q, z)",
        scope: "W_3(1), W_4(1,1), W_4(2,1), W_5(2,2)",
        run: frobenius_tables,
        grid: grid_tables,
    },
    CheckDef {
        id: "duality",
        kind: CheckKind::Theorem,
        citation: "ω grFrob(W_n(a); q, z) = (rev_q ∘ rev_z) grFrob(W_n(a); q, z)",
        scope: "n ≤ 5, weakly decreasing a with entries ≤ 3",
        run: duality,
        grid: grid_w_spaces,
    },
    CheckDef {
        id: "poincare_pairing",
        kind: CheckKind::Theorem,
        citation: "(f, g) ↦ ⟨f, g·Δ_n(a)⟩ pairs W_n(a)_{i,j} perfectly with W_n(a)_{s−i,r−j}",
        scope: "n ≤ 5, weakly decreasing a with entries ≤ 3",
        run: poincare_pairing,
        grid: grid_w_spaces,
    },
    CheckDef {
        id: "top_slice",
        kind: CheckKind::Theorem,
        citation: "the θ-degree r slice of W_n(a) is V_n(a)",
        scope: "n ≤ 5, weakly decreasing a with entries ≤ 2",
        run: top_slice,
        grid: |o| {
            (1..=o.max_n.min(5))
                .flat_map(|n| decreasing_sequences(n, 2).into_iter().map(move |a| Params::n(n).with_a(&a)))
                .collect()
        },
    },
    CheckDef {
        id: "annihilator_perp",
        kind: CheckKind::Theorem,
        citation: "I_n(a) = W_n(a)^⊥ piecewise, so grFrob(R_n(a)) = grFrob(W_n(a))",
        scope: "n ≤ 4, weakly decreasing a with entries ≤ 2",
        run: annihilator_perp,
        grid: |o| {
            (1..=o.max_n.min(4))
                .flat_map(|n| decreasing_sequences(n, 2).into_iter().map(move |a| Params::n(n).with_a(&a)))
                .collect()
        },
    },
    CheckDef {
        id: "nks_theorem",
        kind: CheckKind::Theorem,
        citation: "(rev_q ∘ ω) grFrob(V_n((s−1)^{n−k}); q) = grFrob(R_{n,k,s}; q), graded by (n,k,s)-substaircases",
        scope: "n ≤ 5, k ≤ s ≤ n + 1",
        run: nks_theorem,
        grid: |o| {
            let mut out = Vec::new();
            for p in grid_nk(5, o) {
                let (n, k) = (p.n.unwrap_or(0), p.k.unwrap_or(0));
                for s in k as u32..=n as u32 + 1 {
                    out.push(p.clone().with_s(s));
                }
            }
            out
        },
    },
    CheckDef {
        id: "nonskip",
        kind: CheckKind::Theorem,
        citation: "(n,k,s)-nonskip sequences are exactly the (n,k,s)-substaircase sequences",
        scope: "n ≤ 6 by brute force",
        run: nonskip_equivalence,
        grid: |o| grid_n(1, 6)(o),
    },
    CheckDef {
        id: "hook_tanisaki",
        kind: CheckKind::Theorem,
        citation: "grFrob(V_n(0^r); q) = (rev_q ∘ ω) grFrob(R_{(r+1,1^{k−1})}; q)",
        scope: "n ≤ 5, r < n",
        run: hook_tanisaki,
        grid: |o| (1..=o.max_n.min(5)).flat_map(|n| (0..n).map(move |r| Params::n(n).with_r(r))).collect(),
    },
    CheckDef {
        id: "positroid",
        kind: CheckKind::Theorem,
        citation: "grFrob(M_n; q, z) = Σ_r z^r e_r · rev_q Q'_{(1^{n−r})}, dim M_n = Σ_r n!/r!",
        scope: "n ≤ 5",
        run: positroid,
        grid: |o| grid_n(1, 5)(o),
    },
    CheckDef {
        id: "annihilation",
        kind: CheckKind::Theorem,
        citation: "e_d · Δ_n(a) = 0 for d > n − k",
        scope: "n ≤ 5, 100 random sequences each",
        run: annihilation,
        grid: |o| (1..=o.max_n.min(5)).map(|n| Params::n(n).with_seed(o.seed).with_cases(100)).collect(),
    },
    CheckDef {
        id: "annihilation_constant",
        kind: CheckKind::Theorem,
        citation: "x_i^k, e_{n−k+1}, …, e_n and dp_1, …, dp_n annihilate Δ_n((k−1)^{n−k})",
        scope: "1 ≤ k ≤ n ≤ 5",
        run: annihilation_constant,
        grid: |o| grid_nk(5, o),
    },
    CheckDef {
        id: "operator_relations",
        kind: CheckKind::Theorem,
        citation: "∂_i, ∂^θ_j commute, the ∂^θ_j anticommute and square to zero",
        scope: "500 random cases, n ≤ 5, x-degree ≤ 4",
        run: |p| property(p, properties::operator_relations),
        grid: |o| vec![Params::default().with_seed(o.seed).with_cases(DEFAULT_CASES)],
    },
    CheckDef {
        id: "bilinear_form",
        kind: CheckKind::Theorem,
        citation: "⟨−,−⟩ is symmetric, sign-definite on each θ-degree, and ⟨f, (f'·g')·g⟩ = ±⟨f·g, f'·g'⟩",
        scope: "500 random cases, n ≤ 4",
        run: |p| property(p, properties::bilinear_form),
        grid: |o| vec![Params::default().with_seed(o.seed).with_cases(DEFAULT_CASES)],
    },
    CheckDef {
        id: "leibniz",
        kind: CheckKind::Theorem,
        citation: "∂^θ_i(f g) = ∂^θ_i(f) g + (−1)^r f ∂^θ_i(g)",
        scope: "500 random cases, n ≤ 5",
        run: |p| property(p, properties::leibniz),
        grid: |o| vec![Params::default().with_seed(o.seed).with_cases(DEFAULT_CASES)],
    },
    CheckDef {
        id: "equivariance",
        kind: CheckKind::Theorem,
        citation: "w ∂^θ_i w^{−1} = ∂^θ_{w(i)} and w ∂_i w^{−1} = ∂_{w(i)}",
        scope: "500 random cases, n ≤ 5",
        run: |p| property(p, properties::equivariance),
        grid: |o| vec![Params::default().with_seed(o.seed).with_cases(DEFAULT_CASES)],
    },
    CheckDef {
        id: "unimodality",
        kind: CheckKind::Conjecture,
        citation: "Hilb(R_n(a); q, z) has unimodal rows and columns",
        scope: "n ≤ 5, weakly decreasing a with entries ≤ 3",
        run: unimodality,
        grid: grid_w_spaces,
    },
    CheckDef {
        id: "double_frobenius",
        kind: CheckKind::Conjecture,
        citation: "grFrob(𝒱_n((k−1)^{n−k}); q, t) = Δ'_{e_{k−1}} e_n",
        scope: "1 ≤ k ≤ n ≤ 4",
        run: double_frobenius,
        grid: |o| grid_nk(4, o),
    },
    CheckDef {
        id: "zabrocki_sr",
        kind: CheckKind::Conjecture,
        citation: "grFrob(SR_n; q, z) = Σ_k z^{n−k} Δ'_{e_{k−1}} e_n at t = 0",
        scope: "n ≤ 3 (n = 4 with the large option)",
        run: zabrocki_sr,
        grid: |o| (1..=o.max_n.min(if o.large { 4 } else { 3 })).map(Params::n).collect(),
    },
    CheckDef {
        id: "zabrocki_projection",
        kind: CheckKind::Conjecture,
        citation: "the projection of V_n((k−1)^{n−k}) into SR_n is an isomorphism onto its θ-degree n−k part",
        scope: "1 ≤ k ≤ n ≤ 3",
        run: zabrocki_projection,
        grid: |o| grid_nk(3, o),
    },
    CheckDef {
        id: "tanisaki",
        kind: CheckKind::Conjecture,
        citation: "ω grFrob(V^=_n(a); q) ∝ Q'_λ for some λ ⊢ n with n − len(a) parts",
        scope: "n ≤ 3 with entries ≤ k − 1, and the three listed n = 4 cases",
        run: tanisaki,
        grid: grid_tanisaki,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        assert_eq!(decreasing_sequences(2, 1), vec![vec![], vec![0], vec![0, 0], vec![1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_sequences(2, 1).len(), 1 + 2 + 4);
    }

    #[test]
    fn unimodal_sequences() {
        assert!(is_unimodal(&[1, 3, 3, 2]));
        assert!(is_unimodal(&[]));
        assert!(!is_unimodal(&[2, 1, 2]));
        assert_eq!(
            unimodality_failure(&[vec![1, 2], vec![0, 1], vec![1, 0]]).unwrap(),
            "column 0 is not unimodal: [1, 0, 1]"
        );
    }

    #[test]
    fn reversal_drops_trailing_zeros() {
        assert_eq!(reverse(vec![1, 3, 2, 0]), vec![2, 3, 1]);
    }

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<&str> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
    }
}
