use std::collections::BTreeMap;

use rayon::prelude::*;

use super::basis::{Basis, SymFunc};
use super::macdonald::{b_cells, modified_macdonald};
use super::partition::Partition;
use super::qpoly::{QTFrac, QTPoly};
use crate::error::{Error, Result};
use crate::rational::Q;

/// A product of polynomial factors, each normalized so that its leading
/// term has positive coefficient, with the leftover sign in front.
#[derive(Clone, Debug, Default)]
struct Factored {
    sign: i64,
    factors: BTreeMap<Vec<(u32, u32, Q)>, (QTPoly, u32)>,
}

impl Factored {
    fn new() -> Factored {
        Factored { sign: 1, factors: BTreeMap::new() }
    }

    fn push(&mut self, f: QTPoly) {
        let negative = f.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let f = if negative {
            self.sign = -self.sign;
            -&f
        } else {
            f
        };
        self.factors.entry(f.to_triples()).or_insert((f, 0)).1 += 1;
    }

    /// Least common multiple as a multiset maximum.
    fn lcm(&self, other: &Factored) -> Factored {
        let mut out = self.clone();
        out.sign = 1;
        for (k, (f, m)) in &other.factors {
            let e = out.factors.entry(k.clone()).or_insert((f.clone(), 0));
            e.1 = e.1.max(*m);
        }
        out
    }

    /// `self / other` as a polynomial, assuming `other` divides `self`
    /// factorwise.
    fn cofactor(&self, other: &Factored) -> QTPoly {
        let mut p = QTPoly::constant(Q::from(other.sign));
        for (k, (f, m)) in &self.factors {
            let used = other.factors.get(k).map(|x| x.1).unwrap_or(0);
            for _ in used..*m {
                p = &p * f;
            }
        }
        p
    }

    fn product(&self) -> QTPoly {
        let mut p = QTPoly::constant(Q::from(self.sign));
        for (f, m) in self.factors.values() {
            p = &p * &f.pow(*m);
        }
        p
    }

    fn divide(&self, num: &QTPoly) -> Option<QTPoly> {
        let mut p = num.scale(&Q::from(self.sign));
        for (f, m) in self.factors.values() {
            for _ in 0..*m {
                p = p.div_exact(f)?;
            }
        }
        Some(p)
    }
}

fn monomial(i: u32, j: u32) -> QTPoly {
    QTPoly::monomial(i, j, Q::from(1))
}

/// Arm, leg, coarm and coleg of every cell of `μ`.
fn cell_data(mu: &Partition) -> Vec<(u32, u32, u32, u32)> {
    let conj = mu.conjugate();
    b_cells(mu)
        .into_iter()
        .map(|(i, j)| {
            let arm = mu.part(j as usize) - i - 1;
            let leg = conj.part(i as usize) - j - 1;
            (arm, leg, i, j)
        })
        .collect()
}

/// `w_μ = ∏_c (q^a − t^{l+1})(t^l − q^{a+1})`.
fn w_mu(mu: &Partition) -> Factored {
    let mut f = Factored::new();
    for (a, l, _, _) in cell_data(mu) {
        f.push(&monomial(a, 0) - &monomial(0, l + 1));
        f.push(&monomial(0, l) - &monomial(a + 1, 0));
    }
    f
}

/// `(1−q)(1−t) B_μ Π_μ` where `Π_μ = ∏_{c ≠ (0,0)} (1 − q^{a'} t^{l'})`.
fn e_n_numerator(mu: &Partition) -> QTPoly {
    let one = QTPoly::one();
    let mut p = &(&one - &QTPoly::q()) * &(&one - &QTPoly::t());
    let mut b = QTPoly::zero();
    for (i, j) in b_cells(mu) {
        b.add_term(i, j, Q::from(1));
        if (i, j) != (0, 0) {
            p = &p * &(&one - &monomial(i, j));
        }
    }
    &p * &b
}

/// `e_d[B_μ − 1]`: the elementary symmetric function evaluated at the cell
/// monomials other than `1`.
pub fn e_at_cells(d: u32, mu: &Partition) -> QTPoly {
    let mut e = vec![QTPoly::zero(); d as usize + 1];
    e[0] = QTPoly::one();
    for (i, j) in b_cells(mu) {
        if (i, j) == (0, 0) {
            continue;
        }
        let m = monomial(i, j);
        for k in (1..=d as usize).rev() {
            let add = &e[k - 1] * &m;
            e[k] = &e[k] + &add;
        }
    }
    e.pop().unwrap()
}

/// Coefficients `c_μ` with `e_n = Σ_μ c_μ H̃_μ`.
pub fn e_n_in_macdonald_basis(n: u32) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::MacdonaldH);
    for mu in Partition::all(n) {
        out.add_term(mu.clone(), QTFrac::new(e_n_numerator(&mu), w_mu(&mu).product())?);
    }
    Ok(out)
}

/// `Δ'_{e_{k−1}} e_n` in the Schur basis with polynomial coefficients.
///
/// Each Macdonald component keeps its denominator in factored form; the
/// components are brought over a common multiple and the sum is divided
/// out factor by factor, which must be exact.
pub fn delta_prime_e(k_minus_1: u32, n: u32) -> Result<SymFunc> {
    if n == 0 || k_minus_1 >= n {
        return Err(Error::OutOfRange(format!("Δ'_(e_{k_minus_1}) e_{n} needs k ≤ n")));
    }
    let parts = Partition::all(n);
    let ws: Vec<Factored> = parts.iter().map(w_mu).collect();
    let lcm = ws.iter().fold(Factored::new(), |acc, w| acc.lcm(w));
    let pieces: Vec<BTreeMap<Partition, QTPoly>> = parts
        .par_iter()
        .zip(ws.par_iter())
        .map(|(mu, w)| -> Result<BTreeMap<Partition, QTPoly>> {
            let scalar = &(&e_n_numerator(mu) * &e_at_cells(k_minus_1, mu)) * &lcm.cofactor(w);
            let h = modified_macdonald(mu)?;
            let mut m = BTreeMap::new();
            for (lambda, c) in h.terms() {
                m.insert(lambda.clone(), &scalar * &c.to_poly()?);
            }
            Ok(m)
        })
        .collect::<Result<_>>()?;
    let mut sums: BTreeMap<Partition, QTPoly> = BTreeMap::new();
    for piece in pieces {
        for (lambda, c) in piece {
            let e = sums.entry(lambda).or_default();
            *e = &*e + &c;
        }
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, num) in sums {
        let c = lcm.divide(&num).ok_or_else(|| {
            Error::ResidualDenominator(format!("coefficient of s_{lambda} in Δ'_(e_{k_minus_1}) e_{n}"))
        })?;
        out.add_poly_term(lambda, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_n_expansion_recovers_e_n() {
        for n in 1..=4 {
            let f = e_n_in_macdonald_basis(n).unwrap().to_schur().unwrap();
            let e = SymFunc::basis_element(Basis::Elementary, Partition::new(vec![n]).unwrap()).to_schur().unwrap();
            assert_eq!(f, e, "n={n}");
        }
    }

    #[test]
    fn delta_e0_is_identity_on_e_n() {
        for n in 1..=4 {
            let f = delta_prime_e(0, n).unwrap();
            assert_eq!(f, SymFunc::schur(Partition::new(vec![1; n as usize]).unwrap()));
        }
    }

    #[test]
    fn k_equals_n_two() {
        assert_eq!(delta_prime_e(1, 2).unwrap(), SymFunc::parse("s_2 + (q + t)*s_{11}").unwrap());
    }

    #[test]
    fn symmetric_in_q_and_t() {
        let f = delta_prime_e(2, 4).unwrap();
        assert_eq!(f.swap_qt().unwrap(), f);
    }

    #[test]
    fn e_at_cells_small() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(e_at_cells(1, &mu), &QTPoly::q() + &QTPoly::t());
        assert_eq!(e_at_cells(2, &mu), &QTPoly::q() * &QTPoly::t());
        assert_eq!(e_at_cells(3, &mu), QTPoly::zero());
    }
}
