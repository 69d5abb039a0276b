//! Derivatives, the action `f · g = ∂(f)(g)`, the pairing and polarization.
//!
//! Variable indices are 1-based throughout.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rational::Q;
use crate::superspace::{SuperMonomial, SuperPolynomial};

fn check_index(f: &SuperPolynomial, i: usize) -> Result<usize> {
    if i == 0 || i > f.rank() {
        Err(Error::IndexOutOfRange { index: i, n: f.rank() })
    } else {
        Ok(i - 1)
    }
}

/// `∂f/∂x_i`.
pub fn dx(f: &SuperPolynomial, i: usize) -> Result<SuperPolynomial> {
    let i = check_index(f, i)?;
    let mut terms = BTreeMap::new();
    for (m, c) in f.terms() {
        let e = m.x_exp(i);
        if e > 0 {
            let mut m2 = *m;
            m2.set_x(i, (e - 1) as u8);
            terms.insert(m2, c * &Q::from(e));
        }
    }
    Ok(SuperPolynomial::from_map(f.rank(), terms))
}

/// `∂f/∂y_i`.
pub fn dy(f: &SuperPolynomial, i: usize) -> Result<SuperPolynomial> {
    let i = check_index(f, i)?;
    let mut terms = BTreeMap::new();
    for (m, c) in f.terms() {
        let e = m.y_exp(i);
        if e > 0 {
            let mut m2 = *m;
            m2.set_y(i, (e - 1) as u8);
            terms.insert(m2, c * &Q::from(e));
        }
    }
    Ok(SuperPolynomial::from_map(f.rank(), terms))
}

/// The odd derivative `∂^θ_i`: removes `θ_i` with sign `(-1)^{s-1}` where
/// `θ_i` sits in position `s` of the increasing θ-word.
pub fn dtheta(f: &SuperPolynomial, i: usize) -> Result<SuperPolynomial> {
    let i = check_index(f, i)?;
    let bit = 1u16 << i;
    let mut terms = BTreeMap::new();
    for (m, c) in f.terms() {
        let t = m.theta_bits();
        if t & bit != 0 {
            let mut m2 = *m;
            m2.set_theta_bits(t & !bit);
            let neg = (t & (bit - 1)).count_ones() % 2 == 1;
            terms.insert(m2, if neg { -c } else { c.clone() });
        }
    }
    Ok(SuperPolynomial::from_map(f.rank(), terms))
}

/// `∂(u)` applied to the monomial `v`: the image monomial and its coefficient.
#[inline]
fn apply_monomial(u: &SuperMonomial, v: &SuperMonomial, n: usize) -> Option<(SuperMonomial, Q)> {
    let (s, t) = (u.theta_bits(), v.theta_bits());
    if s & !t != 0 {
        return None;
    }
    let mut out = *v;
    let mut coeff: i64 = 1;
    let mut big = Q::from(1);
    for i in 0..n {
        let (a, b) = (u.x_exp(i), v.x_exp(i));
        if a > b {
            return None;
        }
        for k in (b - a + 1)..=b {
            match coeff.checked_mul(k as i64) {
                Some(c) => coeff = c,
                None => {
                    big = big * Q::from(coeff);
                    coeff = k as i64;
                }
            }
        }
        out.set_x(i, (b - a) as u8);
        let (a, b) = (u.y_exp(i), v.y_exp(i));
        if a > b {
            return None;
        }
        for k in (b - a + 1)..=b {
            match coeff.checked_mul(k as i64) {
                Some(c) => coeff = c,
                None => {
                    big = big * Q::from(coeff);
                    coeff = k as i64;
                }
            }
        }
        out.set_y(i, (b - a) as u8);
    }
    // ∂^θ_{j1} .. ∂^θ_{jr}: the rightmost (largest index) acts first
    let mut cur = t;
    let mut neg = false;
    let mut rest = s;
    while rest != 0 {
        let j = 15 - rest.leading_zeros();
        let bit = 1u16 << j;
        rest &= !bit;
        neg ^= (cur & (bit - 1)).count_ones() % 2 == 1;
        cur &= !bit;
    }
    out.set_theta_bits(cur);
    let mut c = big * Q::from(coeff);
    if neg {
        c = -c;
    }
    Some((out, c))
}

/// The action `f · g = ∂(f)(g)`, replacing `x_i → ∂/∂x_i`, `y_i → ∂/∂y_i`,
/// `θ_i → ∂^θ_i`.
pub fn apply(f: &SuperPolynomial, g: &SuperPolynomial) -> Result<SuperPolynomial> {
    if f.rank() != g.rank() {
        return Err(Error::RankMismatch { left: f.rank(), right: g.rank() });
    }
    let n = f.rank();
    let mut out = SuperPolynomial::zero(n);
    for (u, c) in f.terms() {
        for (v, d) in g.terms() {
            if let Some((m, k)) = apply_monomial(u, v, n) {
                out.add_term(m, &(c * d) * &k);
            }
        }
    }
    Ok(out)
}

/// `⟨m, m⟩` for a single supermonomial: `(-1)^{C(r,2)} ∏ a_i!`.
pub fn monomial_weight(m: &SuperMonomial) -> Q {
    let r = m.theta_degree();
    let w = m.exponent_factorial();
    if (r * r.saturating_sub(1) / 2) % 2 == 1 {
        -w
    } else {
        w
    }
}

/// `⟨f, g⟩`: the constant term of `f · g`.
pub fn pairing(f: &SuperPolynomial, g: &SuperPolynomial) -> Result<Q> {
    if f.rank() != g.rank() {
        return Err(Error::RankMismatch { left: f.rank(), right: g.rank() });
    }
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = Q::from(0);
    for (m, c) in small.terms() {
        let d = large.map().get(m);
        if let Some(d) = d {
            acc += &(&(c * d) * &monomial_weight(m));
        }
    }
    Ok(acc)
}

/// Polarization `Σ_i y_i ∂^j f / ∂x_i^j`.
pub fn polarize(f: &SuperPolynomial, j: u32) -> Result<SuperPolynomial> {
    if j == 0 {
        return Err(Error::InvalidPolarization(j));
    }
    let n = f.rank();
    let mut out = SuperPolynomial::zero(n);
    for i in 0..n {
        for (m, c) in f.terms() {
            let e = m.x_exp(i);
            if e < j || m.y_exp(i) == u8::MAX as u32 {
                continue;
            }
            let mut k = Q::from(1);
            for t in (e - j + 1)..=e {
                k = k * Q::from(t);
            }
            let mut m2 = *m;
            m2.set_x(i, (e - j) as u8);
            m2.set_y(i, (m.y_exp(i) + 1) as u8);
            out.add_term(m2, c * &k);
        }
    }
    Ok(out)
}

/// A linear operator used to close subspaces.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "arg", rename_all = "snake_case")]
pub enum OperatorSpec {
    Dx(usize),
    Dtheta(usize),
    Dy(usize),
    PolarizeXToY(u32),
    Permutation(Perm),
    ApplyPoly(SuperPolynomial),
}

impl OperatorSpec {
    pub fn apply(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        match self {
            OperatorSpec::Dx(i) => dx(f, *i),
            OperatorSpec::Dtheta(i) => dtheta(f, *i),
            OperatorSpec::Dy(i) => dy(f, *i),
            OperatorSpec::PolarizeXToY(j) => polarize(f, *j),
            OperatorSpec::Permutation(w) => f.act(w),
            OperatorSpec::ApplyPoly(g) => apply(g, f),
        }
    }

    /// All `dx(i)` for `i = 1..=n`.
    pub fn all_dx(n: usize) -> Vec<OperatorSpec> {
        (1..=n).map(OperatorSpec::Dx).collect()
    }

    pub fn all_dtheta(n: usize) -> Vec<OperatorSpec> {
        (1..=n).map(OperatorSpec::Dtheta).collect()
    }

    pub fn all_dy(n: usize) -> Vec<OperatorSpec> {
        (1..=n).map(OperatorSpec::Dy).collect()
    }

    /// Adjacent transpositions, which generate `S_n`.
    pub fn adjacent_transpositions(n: usize) -> Vec<OperatorSpec> {
        (0..n.saturating_sub(1)).map(|i| OperatorSpec::Permutation(Perm::adjacent(n, i))).collect()
    }
}

impl fmt::Debug for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::Dx(i) => write!(f, "dx({i})"),
            OperatorSpec::Dtheta(i) => write!(f, "dtheta({i})"),
            OperatorSpec::Dy(i) => write!(f, "dy({i})"),
            OperatorSpec::PolarizeXToY(j) => write!(f, "polarize({j})"),
            OperatorSpec::Permutation(w) => write!(f, "perm({w})"),
            OperatorSpec::ApplyPoly(g) => write!(f, "apply({g})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(s, Some(3)).unwrap()
    }

    #[test]
    fn odd_derivative_signs() {
        let f = p("t{1}*t{2}*t{3}");
        assert_eq!(dtheta(&f, 2).unwrap(), p("-t{1}*t{3}"));
        assert_eq!(dtheta(&f, 1).unwrap(), p("t{2}*t{3}"));
        assert!(dtheta(&p("t{1}"), 2).unwrap().is_zero());
        assert_eq!(apply(&p("t{1}*t{2}"), &p("t{1}*t{2}")).unwrap(), p("-1"));
    }

    #[test]
    fn action_on_monomials() {
        assert_eq!(apply(&p("x1^2*t{1}"), &p("x1^3*t{1}*t{2}")).unwrap(), p("6*x1*t{2}"));
        assert_eq!(pairing(&p("x1^3*x2^2*t{1}*t{2}"), &p("x1^3*x2^2*t{1}*t{2}")).unwrap(), Q::from(-12));
    }

    #[test]
    fn polarization() {
        let f = SuperPolynomial::parse("x1 - x2", Some(2)).unwrap();
        assert_eq!(polarize(&f, 1).unwrap(), SuperPolynomial::parse("y1 - y2", Some(2)).unwrap());
        assert!(matches!(polarize(&f, 0), Err(Error::InvalidPolarization(0))));
        let g = p("x1^3*t{2}");
        assert_eq!(polarize(&g, 2).unwrap(), p("6*x1*y1*t{2}"));
    }
}
