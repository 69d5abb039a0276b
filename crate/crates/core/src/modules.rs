//! The modules `V_n(a)`, `W_n(a)`, `M_n`, the two-set module `𝒱_n(a)` and
//! the supercoinvariant quotient, with their Hilbert series and Frobenius
//! images.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{apply, pairing, OperatorSpec};
use crate::perm::Perm;
use crate::qlinalg::{ambient_monomials, span_closure, sum, GradedSubspace, RationalMatrix, ReducedBasis};
use crate::rational::Q;
use crate::superspace::{differential, elementary, power_sum, rho, super_vandermonde, Bidegree, SuperPolynomial};
use crate::symfunc::{frobenius_from_characters, hall_littlewood_qprime, Basis, Partition, QTFrac, QTPoly, SymFunc};

/// Which module to build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleSpec {
    V { n: usize, a: Vec<u32> },
    W { n: usize, a: Vec<u32> },
    M { n: usize },
    VV { n: usize, a: Vec<u32> },
}

impl ModuleSpec {
    pub fn rank(&self) -> usize {
        match self {
            ModuleSpec::V { n, .. } | ModuleSpec::W { n, .. } | ModuleSpec::M { n } | ModuleSpec::VV { n, .. } => *n,
        }
    }

    pub fn build(&self) -> Result<GradedSubspace> {
        match self {
            ModuleSpec::V { n, a } => build_v(*n, a),
            ModuleSpec::W { n, a } => build_w(*n, a),
            ModuleSpec::M { n } => build_m(*n),
            ModuleSpec::VV { n, a } => build_vv(*n, a),
        }
    }

    /// The grading recorded by the second variable of the Frobenius image.
    pub fn grading(&self) -> Grading {
        match self {
            ModuleSpec::VV { .. } => Grading::XY,
            _ => Grading::XTheta,
        }
    }
}

/// `x`-degree of `Δ_n(a)`: `Σ a_i + C(k,2)` with `k = n − len(a)`.
pub fn top_x_degree(n: usize, a: &[u32]) -> u32 {
    let k = (n - a.len()) as u32;
    a.iter().sum::<u32>() + k * k.saturating_sub(1) / 2
}

fn check_seq(n: usize, a: &[u32]) -> Result<()> {
    if a.len() > n {
        return Err(Error::InvalidSequence(format!("{a:?} is longer than n = {n}")));
    }
    Ok(())
}

/// `V_n(a)`: closure of `Δ_n(a)` under `∂_1, …, ∂_n`.
pub fn build_v(n: usize, a: &[u32]) -> Result<GradedSubspace> {
    check_seq(n, a)?;
    span_closure(n, &[super_vandermonde(n, a)?], &OperatorSpec::all_dx(n), None)
}

/// `W_n(a)`: closure under the `∂_i` and the `∂^θ_i`.
pub fn build_w(n: usize, a: &[u32]) -> Result<GradedSubspace> {
    check_seq(n, a)?;
    let mut ops = OperatorSpec::all_dx(n);
    ops.extend(OperatorSpec::all_dtheta(n));
    span_closure(n, &[super_vandermonde(n, a)?], &ops, None)
}

/// `M_n`: closure of `ρ_{n,0}, …, ρ_{n,n}` under `S_n` and the `∂_i`.
pub fn build_m(n: usize) -> Result<GradedSubspace> {
    let gens: Vec<SuperPolynomial> = (0..=n).map(|k| rho(n, k)).collect::<Result<_>>()?;
    let cap = gens.iter().map(SuperPolynomial::max_total_degree).max().unwrap_or(0);
    let mut ops = OperatorSpec::all_dx(n);
    ops.extend(OperatorSpec::adjacent_transpositions(n));
    span_closure(n, &gens, &ops, Some(cap))
}

/// `𝒱_n(a)`: closure of `Δ_n(a)` under `∂_{x_i}`, `∂_{y_i}` and the
/// polarizations `Σ y_i ∂_{x_i}^j` for `1 ≤ j ≤` the `x`-degree of `Δ_n(a)`;
/// larger `j` kill everything for degree reasons.
pub fn build_vv(n: usize, a: &[u32]) -> Result<GradedSubspace> {
    check_seq(n, a)?;
    let mut ops = OperatorSpec::all_dx(n);
    ops.extend(OperatorSpec::all_dy(n));
    ops.extend((1..=top_x_degree(n, a).max(1)).map(OperatorSpec::PolarizeXToY));
    span_closure(n, &[super_vandermonde(n, a)?], &ops, None)
}

/// True iff `f · Δ_n(a) = 0`.
pub fn annihilates(f: &SuperPolynomial, n: usize, a: &[u32]) -> Result<bool> {
    Ok(apply(f, &super_vandermonde(n, a)?)?.is_zero())
}

/// Second grading variable of a Frobenius image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    /// `q^{x-degree} z^{θ-degree}`
    XTheta,
    /// `q^{x-degree} t^{y-degree}`
    XY,
}

impl Grading {
    fn key(self, d: &Bidegree) -> (u32, u32) {
        match self {
            Grading::XTheta => (d.x, d.theta),
            Grading::XY => (d.x, d.y),
        }
    }

    fn variable(self) -> &'static str {
        match self {
            Grading::XTheta => "z",
            Grading::XY => "t",
        }
    }
}

/// A bigraded Frobenius image: one Schur expansion per `(x, second)` degree.
#[derive(Clone, Debug, PartialEq)]
pub struct BigradedFrobenius {
    pub grading: Grading,
    pieces: BTreeMap<(u32, u32), SymFunc>,
}

impl BigradedFrobenius {
    pub fn new(grading: Grading) -> BigradedFrobenius {
        BigradedFrobenius { grading, pieces: BTreeMap::new() }
    }

    /// Adds `f` to the piece at `(i, j)`; zero pieces are not stored.
    pub fn add(&mut self, i: u32, j: u32, f: &SymFunc) -> Result<()> {
        let cur = match self.pieces.remove(&(i, j)) {
            Some(g) => g.try_add(f)?,
            None => f.to_schur()?,
        };
        if !cur.is_zero() {
            self.pieces.insert((i, j), cur);
        }
        Ok(())
    }

    pub fn pieces(&self) -> &BTreeMap<(u32, u32), SymFunc> {
        &self.pieces
    }

    pub fn get(&self, i: u32, j: u32) -> SymFunc {
        self.pieces.get(&(i, j)).cloned().unwrap_or_else(|| SymFunc::zero(Basis::Schur))
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// `(max x-degree, max second degree)` over nonzero pieces.
    pub fn extent(&self) -> (u32, u32) {
        self.pieces.keys().fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }

    pub fn hilbert(&self) -> Result<BTreeMap<(u32, u32), u64>> {
        let mut out = BTreeMap::new();
        for (&k, f) in &self.pieces {
            let d = f.hilbert()?.to_poly()?;
            let d = d.as_constant().and_then(|c| c.to_i64()).ok_or_else(|| Error::NotPolynomial(d.to_string()))?;
            out.insert(k, d as u64);
        }
        Ok(out)
    }

    /// Rows indexed by the second grading, columns by `x`-degree.
    pub fn hilbert_matrix(&self) -> Result<Vec<Vec<u64>>> {
        let h = self.hilbert()?;
        let (xi, yj) = self.extent();
        Ok((0..=yj).map(|j| (0..=xi).map(|i| h.get(&(i, j)).copied().unwrap_or(0)).collect()).collect())
    }

    pub fn omega(&self) -> Result<BigradedFrobenius> {
        let mut out = BigradedFrobenius::new(self.grading);
        for (&(i, j), f) in &self.pieces {
            out.add(i, j, &f.omega()?)?;
        }
        Ok(out)
    }

    /// Moves the piece at `(i, j)` to `(top_x − i, top_second − j)`.
    pub fn reversed(&self, top_x: u32, top_second: u32) -> Result<BigradedFrobenius> {
        let mut out = BigradedFrobenius::new(self.grading);
        for (&(i, j), f) in &self.pieces {
            if i > top_x || j > top_second {
                return Err(Error::OutOfRange(format!("piece ({i},{j}) beyond ({top_x},{top_second})")));
            }
            out.add(top_x - i, top_second - j, f)?;
        }
        Ok(out)
    }

    /// The image as one symmetric function with `q` for the `x`-degree and
    /// `t` standing for the second grading.
    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero(Basis::Schur);
        for (&(i, j), f) in &self.pieces {
            for (lambda, c) in f.terms() {
                let m = QTFrac::from(QTPoly::monomial(i, j, Q::from(1)));
                out.add_term(lambda.clone(), c * &m);
            }
        }
        out
    }

    /// Inverse of [`BigradedFrobenius::to_symfunc`] for polynomial coefficients.
    pub fn from_symfunc(f: &SymFunc, grading: Grading) -> Result<BigradedFrobenius> {
        let f = f.to_schur()?;
        let mut out = BigradedFrobenius::new(grading);
        for (lambda, c) in f.terms() {
            for (i, j, v) in c.to_poly()?.terms() {
                let mut g = SymFunc::zero(Basis::Schur);
                g.add_term(lambda.clone(), QTFrac::from(v.clone()));
                out.add(i, j, &g)?;
            }
        }
        Ok(out)
    }

    /// First degree whose pieces differ, with both sides.
    pub fn first_difference(&self, other: &BigradedFrobenius) -> Option<((u32, u32), SymFunc, SymFunc)> {
        let mut keys: Vec<(u32, u32)> = self.pieces.keys().chain(other.pieces.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|(i, j)| {
            let (a, b) = (self.get(i, j), other.get(i, j));
            (a != b).then_some(((i, j), a, b))
        })
    }

    /// Matrix display: row `j` and column `i` hold the coefficient of
    /// `t^j q^i` (or `z^j q^i`).
    pub fn latex(&self) -> String {
        let (xi, yj) = self.extent();
        let mut s = String::from("\\begin{pmatrix}\n");
        for j in 0..=yj {
            let row: Vec<String> = (0..=xi).map(|i| latex_schur(&self.get(i, j))).collect();
            let _ = writeln!(s, "{} \\\\", row.join(" & "));
        }
        s.push_str("\\end{pmatrix}");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pieces: Vec<serde_json::Value> = self
            .pieces
            .iter()
            .map(|(&(i, j), f)| serde_json::json!({ "x": i, self.grading.variable(): j, "frobenius": f.to_json() }))
            .collect();
        serde_json::json!({ "grading": self.grading, "pieces": pieces })
    }
}

/// `s_4 + 2 s_{31}` style rendering of a Schur expansion with constant
/// coefficients.
pub fn latex_schur(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (lambda, c) in f.terms().rev() {
        let label = lambda.label();
        let sym = if label.chars().count() == 1 { format!("s_{label}") } else { format!("s_{{{label}}}") };
        match c.to_poly().ok().and_then(|p| p.as_constant()) {
            Some(k) if k.is_one() => parts.push(sym),
            Some(k) => parts.push(format!("{k} {sym}")),
            None => parts.push(format!("({c}) {sym}")),
        }
    }
    parts.join(" + ")
}

fn class_representatives(n: usize) -> Vec<(Partition, Perm)> {
    Partition::all(n as u32)
        .into_iter()
        .map(|mu| {
            let w = Perm::with_cycle_type(mu.parts());
            (mu, w)
        })
        .collect()
}

fn piece_frobenius(n: usize, piece: &ReducedBasis, subtract: Option<&ReducedBasis>) -> Result<SymFunc> {
    let mut chars = HashMap::new();
    for (mu, w) in class_representatives(n) {
        let mut tr = piece.trace(&w);
        if let Some(s) = subtract {
            tr -= &s.trace(&w);
        }
        chars.insert(mu, tr);
    }
    frobenius_from_characters(n as u32, &chars)
}

/// Frobenius image of every piece, from traces of one permutation per cycle
/// type.
pub fn graded_frobenius(space: &GradedSubspace, grading: Grading) -> Result<BigradedFrobenius> {
    let n = space.rank();
    let pieces: Vec<((u32, u32), SymFunc)> = space
        .pieces()
        .par_iter()
        .map(|(d, piece)| Ok((grading.key(d), piece_frobenius(n, piece, None)?)))
        .collect::<Result<_>>()?;
    let mut out = BigradedFrobenius::new(grading);
    for ((i, j), f) in pieces {
        out.add(i, j, &f)?;
    }
    Ok(out)
}

/// Frobenius image of `big / small` (with `small ⊆ big` piecewise).
pub fn quotient_frobenius(big: &GradedSubspace, small: &GradedSubspace, grading: Grading) -> Result<BigradedFrobenius> {
    let q = crate::qlinalg::quotient_hilbert(big, small)?;
    let n = big.rank();
    let mut out = BigradedFrobenius::new(grading);
    for d in q.hilbert.keys() {
        let f = piece_frobenius(n, &big.pieces()[d], small.piece(d))?;
        let (i, j) = grading.key(d);
        out.add(i, j, &f)?;
    }
    Ok(out)
}

/// Span of `m · g` over generators `g` and supermonomials `m` of the
/// complementary degree.
pub fn ideal_graded_piece(n: usize, generators: &[SuperPolynomial], d: Bidegree) -> Result<ReducedBasis> {
    let mut basis = ReducedBasis::new(n);
    for g in generators {
        for (gd, comp) in g.homogeneous_components() {
            if gd.x > d.x || gd.theta > d.theta || gd.y > d.y {
                continue;
            }
            let rest = Bidegree::with_y(d.x - gd.x, d.y - gd.y, d.theta - gd.theta);
            for m in ambient_monomials(n, rest) {
                let prod = SuperPolynomial::monomial(n, m, Q::from(1)).try_mul(&comp)?;
                if !prod.is_zero() {
                    basis.insert_lazy(&prod);
                }
            }
        }
    }
    basis.finalize();
    Ok(basis)
}

/// Generators `e_1, …, e_n, dp_1, …, dp_n` of the superinvariant ideal.
pub fn superinvariant_generators(n: usize) -> Result<Vec<SuperPolynomial>> {
    let mut gens = Vec::new();
    for d in 1..=n {
        gens.push(elementary(n, d)?);
    }
    for j in 1..=n as u32 {
        gens.push(differential(&power_sum(n, j)?));
    }
    Ok(gens)
}

/// Character of `S_n` on all supermonomials of degree `d`.
fn ambient_trace(n: usize, d: Bidegree, w: &Perm) -> Q {
    let mut acc = 0i64;
    for m in ambient_monomials(n, d) {
        let (img, neg) = m.act(w);
        if img == m {
            acc += if neg { -1 } else { 1 };
        }
    }
    Q::from(acc)
}

/// The supercoinvariant quotient computed piece by piece up to an `x`-degree
/// cap.
#[derive(Clone, Debug)]
pub struct SupercoinvariantPieces {
    pub n: usize,
    pub cap: u32,
    pub frobenius: BigradedFrobenius,
}

impl SupercoinvariantPieces {
    /// Whether every piece in the last two computed x-degrees vanishes.
    pub fn vanishes_near_cap(&self) -> bool {
        self.frobenius.pieces().keys().all(|&(i, _)| i + 2 <= self.cap)
    }
}

/// `grFrob(SR_n; q, z)` for `x`-degrees up to `cap`.
pub fn supercoinvariant_frobenius(n: usize, cap: u32) -> Result<SupercoinvariantPieces> {
    let gens = superinvariant_generators(n)?;
    let degrees: Vec<Bidegree> = (0..=n as u32).flat_map(|j| (0..=cap).map(move |i| Bidegree::new(i, j))).collect();
    let pieces: Vec<(Bidegree, SymFunc)> = degrees
        .par_iter()
        .map(|&d| -> Result<(Bidegree, SymFunc)> {
            let ideal = ideal_graded_piece(n, &gens, d)?;
            let mut chars = HashMap::new();
            for (mu, w) in class_representatives(n) {
                chars.insert(mu, &ambient_trace(n, d, &w) - &ideal.trace(&w));
            }
            Ok((d, frobenius_from_characters(n as u32, &chars)?))
        })
        .collect::<Result<_>>()?;
    let mut frobenius = BigradedFrobenius::new(Grading::XTheta);
    for (d, f) in pieces {
        frobenius.add(d.x, d.theta, &f)?;
    }
    Ok(SupercoinvariantPieces { n, cap, frobenius })
}

/// Rank of the projection of `V_n(a)` into the supercoinvariant quotient:
/// the number of independent residues of its basis modulo the ideal.
pub fn projection_rank(n: usize, a: &[u32]) -> Result<(usize, usize)> {
    let v = build_v(n, a)?;
    let gens = superinvariant_generators(n)?;
    let mut rank = 0;
    for (d, piece) in v.pieces() {
        let mut acc = ideal_graded_piece(n, &gens, *d)?;
        for f in piece.elements() {
            if acc.insert_lazy(&f).is_some() {
                rank += 1;
            }
        }
    }
    Ok((rank, v.dim()))
}

/// Gram matrix `a_{p,q} = ⟨f_p, g_q · Δ⟩` between the bases of the pieces of
/// `w` at `(i, j)` and at the complementary degree `(s − i, r − j)`.
pub fn gram_matrix_in(w: &GradedSubspace, delta: &SuperPolynomial, d: Bidegree) -> Result<RationalMatrix> {
    let top = delta.bidegree().ok_or_else(|| Error::InvalidSequence("inhomogeneous generator".into()))?;
    if d.x > top.x || d.theta > top.theta {
        return Err(Error::OutOfRange(format!("{d} outside {top}")));
    }
    let comp = Bidegree::new(top.x - d.x, top.theta - d.theta);
    let rows = w.piece(&d).map(ReducedBasis::elements).unwrap_or_default();
    let cols = w.piece(&comp).map(ReducedBasis::elements).unwrap_or_default();
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch(format!("dim W_{d} = {} but dim W_{comp} = {}", rows.len(), cols.len())));
    }
    let images: Vec<SuperPolynomial> = cols.par_iter().map(|g| apply(g, delta)).collect::<Result<_>>()?;
    let entries: Vec<Vec<Q>> = rows
        .par_iter()
        .map(|f| images.iter().map(|h| pairing(f, h)).collect::<Result<Vec<Q>>>())
        .collect::<Result<_>>()?;
    let mut m = RationalMatrix::zeros(rows.len(), cols.len());
    for (p, row) in entries.into_iter().enumerate() {
        for (q, v) in row.into_iter().enumerate() {
            m.set(p, q, v);
        }
    }
    Ok(m)
}

pub fn gram_matrix(n: usize, a: &[u32], d: Bidegree) -> Result<RationalMatrix> {
    let w = build_w(n, a)?;
    gram_matrix_in(&w, &super_vandermonde(n, a)?, d)
}

/// All `b ≤ a` componentwise (`strict` drops `a` itself).
fn lower_sequences(a: &[u32], strict: bool) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &ai in a {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=ai).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    if strict {
        out.retain(|b| b != a);
    }
    out
}

fn sum_of_v(n: usize, seqs: &[Vec<u32>]) -> Result<GradedSubspace> {
    let spaces: Vec<GradedSubspace> = seqs.par_iter().map(|b| build_v(n, b)).collect::<Result<_>>()?;
    let mut acc = GradedSubspace::new(n);
    for s in &spaces {
        acc = sum(&acc, s)?;
    }
    Ok(acc)
}

/// `V^≤_n(a) = Σ_{b ≤ a} V_n(b)`.
pub fn v_leq(n: usize, a: &[u32]) -> Result<GradedSubspace> {
    sum_of_v(n, &lower_sequences(a, false))
}

/// `V^<_n(a) = Σ_{b < a} V_n(b)`.
pub fn v_lt(n: usize, a: &[u32]) -> Result<GradedSubspace> {
    sum_of_v(n, &lower_sequences(a, true))
}

/// Outcome of scanning for a Hall–Littlewood function proportional to
/// `ω grFrob(V^=_n(a); q)`.
#[derive(Clone, Debug)]
pub struct TanisakiMatch {
    pub frobenius: SymFunc,
    /// `(λ, s)` with `ω grFrob = q^s Q'_λ`, if some `λ ⊢ n` with `n − len(a)`
    /// parts fits.
    pub found: Option<(Partition, i64)>,
}

fn q_valuation(f: &SymFunc) -> Result<u32> {
    let mut v = u32::MAX;
    for (_, c) in f.terms() {
        v = v.min(c.to_poly()?.q_valuation());
    }
    Ok(if v == u32::MAX { 0 } else { v })
}

/// `s` with `f = q^s g`, if one exists.
pub fn q_proportionality(f: &SymFunc, g: &SymFunc) -> Result<Option<i64>> {
    if f.is_zero() || g.is_zero() {
        return Ok(None);
    }
    let (vf, vg) = (q_valuation(f)?, q_valuation(g)?);
    let shift = vf as i64 - vg as i64;
    let (lo, hi, lift) = if shift >= 0 { (f, g, shift as u32) } else { (g, f, (-shift) as u32) };
    let lifted = hi.map_poly_coeffs(|c| c.shift(lift, 0))?;
    Ok((lifted == *lo).then_some(shift))
}

pub fn tanisaki_search(n: usize, a: &[u32]) -> Result<TanisakiMatch> {
    check_seq(n, a)?;
    let le = v_leq(n, a)?;
    let lt = v_lt(n, a)?;
    let frob = quotient_frobenius(&le, &lt, Grading::XTheta)?;
    let f = collapse_q(&frob);
    let wf = f.omega()?;
    let k = n - a.len();
    let mut found = None;
    for lambda in Partition::with_length(n as u32, k) {
        if let Some(s) = q_proportionality(&wf, &hall_littlewood_qprime(&lambda))? {
            found = Some((lambda, s));
            break;
        }
    }
    Ok(TanisakiMatch { frobenius: f, found })
}

/// Single-graded image `Σ_i q^i grFrob_i`, ignoring the second grading.
pub fn collapse_q(f: &BigradedFrobenius) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (&(i, _), g) in f.pieces() {
        for (lambda, c) in g.terms() {
            out.add_term(lambda.clone(), c * &QTFrac::from(QTPoly::monomial(i, 0, Q::from(1))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(space: &GradedSubspace, grading: Grading) -> Vec<Vec<u64>> {
        graded_frobenius(space, grading).unwrap().hilbert_matrix().unwrap()
    }

    #[test]
    fn small_builds() {
        assert_eq!(dims(&build_v(2, &[]).unwrap(), Grading::XTheta), vec![vec![1, 1]]);
        assert_eq!(dims(&build_w(3, &[1]).unwrap(), Grading::XTheta), vec![vec![1, 3, 2], vec![2, 3, 1]]);
        assert_eq!(build_m(3).unwrap().dim(), 16);
    }

    #[test]
    fn w31_frobenius() {
        let f = graded_frobenius(&build_w(3, &[1]).unwrap(), Grading::XTheta).unwrap();
        assert_eq!(latex_schur(&f.get(1, 0)), "s_3 + s_{21}");
        assert_eq!(latex_schur(&f.get(1, 1)), "s_{21} + s_{111}");
    }

    #[test]
    fn vv2_empty() {
        let f = graded_frobenius(&build_vv(2, &[]).unwrap(), Grading::XY).unwrap();
        assert_eq!(f.to_symfunc(), SymFunc::parse("s_2 + (q + t)*s_{11}").unwrap());
    }

    #[test]
    fn sr2() {
        let sr = supercoinvariant_frobenius(2, 3).unwrap();
        assert!(sr.vanishes_near_cap());
        // x_i θ_j all lie in the ideal: x_i dp_1, e_1 θ_j and dp_2 span them
        assert_eq!(sr.frobenius.hilbert_matrix().unwrap(), vec![vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn ideal_piece_degree_one() {
        let gens = superinvariant_generators(2).unwrap();
        let piece = ideal_graded_piece(2, &gens, Bidegree::new(1, 0)).unwrap();
        assert_eq!(piece.dim(), 1);
    }

    #[test]
    fn gram_is_nonsingular_for_w31() {
        let w = build_w(3, &[1]).unwrap();
        let delta = super_vandermonde(3, &[1]).unwrap();
        for d in w.pieces().keys() {
            let m = gram_matrix_in(&w, &delta, *d).unwrap();
            assert!(m.is_square() && m.is_nonsingular(), "{d}");
        }
    }
}
