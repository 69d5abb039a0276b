use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::character::{character_table, multiplicities_from_characters};
use super::macdonald::modified_macdonald;
use super::partition::Partition;
use super::qpoly::{parse_qtpoly, QTFrac, QTPoly};
use super::tableaux::kostka;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Basis in which a symmetric function is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Schur,
    Monomial,
    Elementary,
    Homogeneous,
    PowerSum,
    MacdonaldH,
}

impl Basis {
    fn prefix(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::MacdonaldH => "H",
        }
    }
}

/// A symmetric function: a finite combination of basis elements indexed by
/// partitions, with coefficients in `Q(q,t)`.
#[derive(Clone, PartialEq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QTFrac>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, p: Partition) -> SymFunc {
        let mut f = SymFunc::zero(basis);
        f.add_term(p, QTFrac::one());
        f
    }

    pub fn schur(p: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Schur, p)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Partition, c: QTFrac) {
        if c.is_zero() {
            return;
        }
        match self.terms.get(&p) {
            Some(old) => {
                let s = old + &c;
                if s.is_zero() {
                    self.terms.remove(&p);
                } else {
                    self.terms.insert(p, s);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add_poly_term(&mut self, p: Partition, c: QTPoly) {
        self.add_term(p, QTFrac::from(c));
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &QTFrac)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> QTFrac {
        self.terms.get(p).cloned().unwrap_or_else(QTFrac::zero)
    }

    /// Coefficient as a polynomial; fails on a proper fraction.
    pub fn poly_coeff(&self, p: &Partition) -> Result<QTPoly> {
        self.coeff(p).to_poly()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sizes of the indexing partitions, if they all agree.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Partition::size);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(QTFrac::is_poly)
    }

    fn same_basis(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Unsupported(format!(
                "mixing bases {:?} and {:?}; convert first",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.try_add(&other.scale(&QTFrac::from(Q::from(-1))))
    }

    pub fn scale(&self, c: &QTFrac) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (p, d) in &self.terms {
            out.add_term(p.clone(), d * c);
        }
        out
    }

    pub fn scale_poly(&self, c: &QTPoly) -> SymFunc {
        self.scale(&QTFrac::from(c.clone()))
    }

    /// Applies `f` to every coefficient (numerator and denominator).
    pub fn map_coeffs(&self, f: impl Fn(&QTPoly) -> QTPoly) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.map_polys(&f)?);
        }
        Ok(out)
    }

    /// `t = 0`, exchange of `q` and `t`, and so on, on polynomial coefficients.
    pub fn map_poly_coeffs(&self, f: impl Fn(&QTPoly) -> QTPoly) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_poly_term(p.clone(), f(&c.to_poly()?));
        }
        Ok(out)
    }

    pub fn at_t0(&self) -> Result<SymFunc> {
        self.map_poly_coeffs(QTPoly::at_t0)
    }

    pub fn swap_qt(&self) -> Result<SymFunc> {
        self.map_coeffs(QTPoly::swap_qt)
    }

    pub fn q_degree(&self) -> Result<u32> {
        let mut d = 0;
        for c in self.terms.values() {
            d = d.max(c.to_poly()?.q_degree());
        }
        Ok(d)
    }

    pub fn t_degree(&self) -> Result<u32> {
        let mut d = 0;
        for c in self.terms.values() {
            d = d.max(c.to_poly()?.t_degree());
        }
        Ok(d)
    }

    /// `q^D f(1/q)` with `D` the largest q-degree over all coefficients.
    pub fn rev_q(&self) -> Result<SymFunc> {
        let d = self.q_degree()?;
        self.map_poly_coeffs(|c| c.rev_q(d))
    }

    pub fn rev_t(&self) -> Result<SymFunc> {
        let d = self.t_degree()?;
        self.map_poly_coeffs(|c| c.rev_t(d))
    }

    /// Converts to the Schur basis.
    pub fn to_schur(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::Schur);
        match self.basis {
            Basis::Schur => return Ok(self.clone()),
            Basis::Monomial => {
                // peel off the lexicographically largest monomial each time;
                // s_μ = m_μ + (terms smaller in dominance)
                let mut rest = self.terms.clone();
                while let Some((mu, c)) = rest.pop_last() {
                    for nu in Partition::all(mu.size()) {
                        if nu == mu {
                            continue;
                        }
                        let k = kostka(&mu, &nu);
                        if k != 0 {
                            let delta = c.scale(&Q::from(-(k as i64)));
                            let s = &rest.get(&nu).cloned().unwrap_or_else(QTFrac::zero) + &delta;
                            if s.is_zero() {
                                rest.remove(&nu);
                            } else {
                                rest.insert(nu, s);
                            }
                        }
                    }
                    out.add_term(mu, c);
                }
            }
            Basis::Homogeneous | Basis::Elementary => {
                let conj = self.basis == Basis::Elementary;
                for (mu, c) in &self.terms {
                    for lambda in Partition::all(mu.size()) {
                        let shape = if conj { lambda.conjugate() } else { lambda.clone() };
                        let k = kostka(&shape, mu);
                        if k != 0 {
                            out.add_term(lambda, c.scale(&Q::from(k as i64)));
                        }
                    }
                }
            }
            Basis::PowerSum => {
                for (mu, c) in &self.terms {
                    let table = character_table(mu.size());
                    for lambda in &table.partitions {
                        let v = table.value(lambda, mu);
                        if v != 0 {
                            out.add_term(lambda.clone(), c.scale(&Q::from(v)));
                        }
                    }
                }
            }
            Basis::MacdonaldH => {
                for (mu, c) in &self.terms {
                    let h = modified_macdonald(mu)?;
                    for (lambda, k) in h.terms() {
                        out.add_term(lambda.clone(), c * k);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Converts to any basis; conversion into the Macdonald basis solves a
    /// linear system over `Q(q,t)` and is limited to degree at most 4.
    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        let s = self.to_schur()?;
        let mut out = SymFunc::zero(target);
        match target {
            Basis::Schur => return Ok(s),
            Basis::Monomial => {
                for (lambda, c) in &s.terms {
                    for mu in Partition::all(lambda.size()) {
                        let k = kostka(lambda, &mu);
                        if k != 0 {
                            out.add_term(mu, c.scale(&Q::from(k as i64)));
                        }
                    }
                }
            }
            Basis::Homogeneous => {
                // h_μ = s_μ + (terms larger in dominance): peel the smallest
                let mut rest = s.terms.clone();
                while let Some((mu, c)) = rest.pop_first() {
                    for lambda in Partition::all(mu.size()) {
                        if lambda == mu {
                            continue;
                        }
                        let k = kostka(&lambda, &mu);
                        if k != 0 {
                            let delta = c.scale(&Q::from(-(k as i64)));
                            let v = &rest.get(&lambda).cloned().unwrap_or_else(QTFrac::zero) + &delta;
                            if v.is_zero() {
                                rest.remove(&lambda);
                            } else {
                                rest.insert(lambda, v);
                            }
                        }
                    }
                    out.add_term(mu, c);
                }
            }
            Basis::Elementary => {
                let h = s.omega()?.to_basis(Basis::Homogeneous)?;
                return Ok(SymFunc { basis: Basis::Elementary, terms: h.terms });
            }
            Basis::PowerSum => {
                for (lambda, c) in &s.terms {
                    let table = character_table(lambda.size());
                    for mu in &table.partitions {
                        let v = table.value(lambda, mu);
                        if v != 0 {
                            out.add_term(mu.clone(), c.scale(&(Q::from(v) / mu.z())));
                        }
                    }
                }
            }
            Basis::MacdonaldH => return schur_to_macdonald(&s),
        }
        Ok(out)
    }

    /// The involution `ω`.
    pub fn omega(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.basis);
        match self.basis {
            Basis::Schur => {
                for (p, c) in &self.terms {
                    out.add_term(p.conjugate(), c.clone());
                }
            }
            Basis::Elementary | Basis::Homogeneous => {
                let other = if self.basis == Basis::Elementary { Basis::Homogeneous } else { Basis::Elementary };
                return SymFunc { basis: other, terms: self.terms.clone() }.to_basis(self.basis);
            }
            Basis::PowerSum => {
                for (p, c) in &self.terms {
                    let sign = if (p.size() as usize - p.length()).is_multiple_of(2) { 1 } else { -1 };
                    out.add_term(p.clone(), c.scale(&Q::from(sign)));
                }
            }
            Basis::Monomial | Basis::MacdonaldH => {
                return self.to_schur()?.omega()?.to_basis(self.basis);
            }
        }
        Ok(out)
    }

    /// Product, computed through power sums and returned in the Schur basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.to_basis(Basis::PowerSum)?;
        let b = other.to_basis(Basis::PowerSum)?;
        let mut prod = SymFunc::zero(Basis::PowerSum);
        for (p, c) in &a.terms {
            for (r, d) in &b.terms {
                let mut parts = p.parts().to_vec();
                parts.extend_from_slice(r.parts());
                prod.add_term(Partition::from_unsorted(parts), c * d);
            }
        }
        prod.to_schur()
    }

    /// Sum of `coefficient × f^λ`, the graded dimension of the module.
    pub fn hilbert(&self) -> Result<QTFrac> {
        let s = self.to_schur()?;
        let mut acc = QTFrac::zero();
        for (p, c) in &s.terms {
            acc = &acc + &c.scale(&Q::from(p.num_syt() as i64));
        }
        Ok(acc)
    }

    /// Exact equality after converting both sides to the Schur basis.
    pub fn equals(&self, other: &SymFunc) -> Result<bool> {
        Ok(self.to_schur()? == other.to_schur()?)
    }

    /// First partition (in decreasing order) whose coefficients differ.
    pub fn first_difference(&self, other: &SymFunc) -> Option<(Partition, QTFrac, QTFrac)> {
        let mut keys: Vec<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().rev().find_map(|p| {
            let (a, b) = (self.coeff(p), other.coeff(p));
            (a != b).then(|| (p.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SymFuncJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFunc> {
        let raw: SymFuncJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    /// Parses sums like `s_4 + 3*s_{31} + (q + t)*s_{211}`.
    pub fn parse(text: &str) -> Result<SymFunc> {
        parse_symfunc(text)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<u32>,
    coeff_num: QTPoly,
    coeff_den: QTPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> SymFuncJson {
        SymFuncJson {
            basis: f.basis,
            terms: f
                .terms
                .iter()
                .rev()
                .map(|(p, c)| TermJson {
                    partition: p.parts().to_vec(),
                    coeff_num: c.num().clone(),
                    coeff_den: c.den().clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymFuncJson> for SymFunc {
    type Error = Error;
    fn try_from(raw: SymFuncJson) -> Result<SymFunc> {
        let mut f = SymFunc::zero(raw.basis);
        for t in raw.terms {
            f.add_term(Partition::new(t.partition)?, QTFrac::new(t.coeff_num, t.coeff_den)?);
        }
        Ok(f)
    }
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SymFuncJson::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}

fn basis_label(basis: Basis, p: &Partition) -> String {
    let label = p.label();
    if label.chars().count() == 1 {
        format!("{}_{label}", basis.prefix())
    } else {
        format!("{}_{{{label}}}", basis.prefix())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let label = basis_label(self.basis, p);
            match c.to_poly() {
                Ok(poly) if poly.is_one() => write!(f, "{label}")?,
                Ok(poly) => match poly.as_constant() {
                    Some(k) if !k.is_negative() => write!(f, "{k}{label}")?,
                    _ => write!(f, "({poly}){label}")?,
                },
                Err(_) => write!(f, "({c}){label}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_symfunc(text: &str) -> Result<SymFunc> {
    let err = |m: &str| Error::Parse(format!("{m} in `{text}`"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "0" {
        return Ok(SymFunc::zero(Basis::Schur));
    }
    // split at top-level `+`
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        if ch == '+' && depth == 0 && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    terms.push(cur);
    let mut basis = None;
    let mut out = BTreeMap::new();
    for term in terms {
        // locate the basis symbol `<letter>_`
        let pos = term
            .char_indices()
            .filter(|&(i, c)| "smehpH".contains(c) && term[i + c.len_utf8()..].starts_with('_'))
            .map(|(i, _)| i)
            .next_back()
            .ok_or_else(|| err("missing basis symbol"))?;
        let (coeff, sym) = term.split_at(pos);
        let b = match &sym[..1] {
            "s" => Basis::Schur,
            "m" => Basis::Monomial,
            "e" => Basis::Elementary,
            "h" => Basis::Homogeneous,
            "p" => Basis::PowerSum,
            _ => Basis::MacdonaldH,
        };
        if *basis.get_or_insert(b) != b {
            return Err(err("mixed bases"));
        }
        let label = sym[2..].trim_start_matches('{').trim_end_matches('}');
        let part = Partition::parse(label)?;
        let coeff = coeff.trim_end_matches('*');
        let c = if coeff.is_empty() {
            QTPoly::one()
        } else {
            let inner = coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coeff);
            parse_qtpoly(inner)?
        };
        let e: &mut QTPoly = out.entry(part).or_default();
        *e = &*e + &c;
    }
    let mut f = SymFunc::zero(basis.unwrap_or(Basis::Schur));
    for (p, c) in out {
        f.add_poly_term(p, c);
    }
    Ok(f)
}

/// Frobenius image `Σ m_λ s_λ` of a representation given by its character
/// value on each cycle type.
pub fn frobenius_from_characters(n: u32, chars: &HashMap<Partition, Q>) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, m) in multiplicities_from_characters(n, chars)? {
        out.add_term(lambda, QTFrac::from(Q::from(m as i64)));
    }
    Ok(out)
}

/// Expansion in the modified Macdonald basis by Gaussian elimination over
/// `Q(q,t)`.
fn schur_to_macdonald(s: &SymFunc) -> Result<SymFunc> {
    let mut by_degree: BTreeMap<u32, Vec<(Partition, QTFrac)>> = BTreeMap::new();
    for (p, c) in &s.terms {
        by_degree.entry(p.size()).or_default().push((p.clone(), c.clone()));
    }
    let mut out = SymFunc::zero(Basis::MacdonaldH);
    for (n, terms) in by_degree {
        if n > 4 {
            return Err(Error::Unsupported(format!("Macdonald basis expansion in degree {n} (limit 4)")));
        }
        let parts = Partition::all(n);
        let idx: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let m = parts.len();
        // a[λ][μ] = coefficient of s_λ in H̃_μ; augmented with the target
        let mut a: Vec<Vec<QTFrac>> = vec![vec![QTFrac::zero(); m + 1]; m];
        for (j, mu) in parts.iter().enumerate() {
            let h = modified_macdonald(mu)?;
            for (lambda, c) in h.terms() {
                a[idx[lambda]][j] = c.clone();
            }
        }
        for (p, c) in terms {
            a[idx[&p]][m] = c;
        }
        for col in 0..m {
            let piv = (col..m)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::ResidualDenominator("singular Macdonald transition matrix".into()))?;
            a.swap(piv, col);
            let inv = a[col][col].recip()?;
            for c in col..=m {
                a[col][c] = &a[col][c] * &inv;
            }
            for r in 0..m {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=m {
                        let v = &a[col][c] * &f;
                        a[r][c] = &a[r][c] - &v;
                    }
                }
            }
        }
        for (j, mu) in parts.iter().enumerate() {
            out.add_term(mu.clone(), a[j][m].clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(s: &str) -> SymFunc {
        SymFunc::parse(s).unwrap()
    }

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn omega_conjugates() {
        assert_eq!(sf("s_{21} + 2s_3").omega().unwrap(), sf("s_{21} + 2s_{111}"));
    }

    #[test]
    fn round_trips() {
        for n in 1..=6 {
            for l in Partition::all(n) {
                let s = SymFunc::schur(l.clone());
                for b in [Basis::Monomial, Basis::Homogeneous, Basis::Elementary, Basis::PowerSum] {
                    assert_eq!(s.to_basis(b).unwrap().to_schur().unwrap(), s, "{l} via {b:?}");
                }
            }
        }
    }

    #[test]
    fn pieri_products() {
        // e_1 * s_21 = s_31 + s_22 + s_211
        let e1 = SymFunc::basis_element(Basis::Elementary, p("1"));
        assert_eq!(e1.mul(&sf("s_{21}")).unwrap(), sf("s_{31} + s_{22} + s_{211}"));
        // h_2 h_1 = s_3 + s_21
        let h = SymFunc::basis_element(Basis::Homogeneous, p("21"));
        assert_eq!(h.to_schur().unwrap(), sf("s_3 + s_{21}"));
    }

    #[test]
    fn omega_of_product() {
        let e2 = SymFunc::basis_element(Basis::Elementary, p("2"));
        let h2 = SymFunc::basis_element(Basis::Homogeneous, p("2"));
        let f = sf("s_{21} + (q + t)*s_{111}");
        let lhs = e2.mul(&f).unwrap().omega().unwrap();
        let rhs = h2.mul(&f.omega().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip() {
        let f = sf("s_4 + (2*q + t^2)*s_{31} + 3/2*s_{1111}");
        let back = SymFunc::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_string(), "s_4 + (t^2 + 2*q)s_{31} + 3/2s_{1111}");
    }

    #[test]
    fn hilbert_of_regular_rep() {
        // Frobenius of the regular representation of S_3
        let reg = sf("s_3 + 2s_{21} + s_{111}");
        assert_eq!(reg.hilbert().unwrap(), QTFrac::from(QTPoly::from(6)));
    }
}
