use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// A polynomial in `q` and `t` with rational coefficients, keyed by
/// `(q exponent, t exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), Q>,
}

impl QTPoly {
    pub fn zero() -> QTPoly {
        QTPoly::default()
    }

    pub fn one() -> QTPoly {
        QTPoly::constant(Q::from(1))
    }

    pub fn constant(c: Q) -> QTPoly {
        QTPoly::monomial(0, 0, c)
    }

    pub fn monomial(qe: u32, te: u32, c: Q) -> QTPoly {
        let mut p = QTPoly::zero();
        p.add_term(qe, te, c);
        p
    }

    pub fn q() -> QTPoly {
        QTPoly::monomial(1, 0, Q::from(1))
    }

    pub fn t() -> QTPoly {
        QTPoly::monomial(0, 1, Q::from(1))
    }

    /// `Σ c_i q^i` from a coefficient list.
    pub fn from_q_coeffs(coeffs: &[i64]) -> QTPoly {
        let mut p = QTPoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, 0, Q::from(c));
        }
        p
    }

    pub fn add_term(&mut self, qe: u32, te: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((qe, te)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Q)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, qe: u32, te: u32) -> Q {
        self.terms.get(&(qe, te)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// The constant value if the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::from(0)),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn q_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn t_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> QTPoly {
        if c.is_zero() {
            return QTPoly::zero();
        }
        QTPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> QTPoly {
        let mut out = QTPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Leading term in lexicographic order with `q > t`.
    pub fn leading(&self) -> Option<((u32, u32), &Q)> {
        self.terms.last_key_value().map(|(k, c)| (*k, c))
    }

    /// `self / d` if `d` divides `self` exactly.
    pub fn div_exact(&self, d: &QTPoly) -> Option<QTPoly> {
        let ((a, b), lc) = d.leading()?;
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = QTPoly::zero();
        while let Some(((x, y), c)) = rem.leading() {
            if x < a || y < b {
                return None;
            }
            let qc = c * &lc_inv;
            let (sx, sy) = (x - a, y - b);
            for (&(u, v), dc) in &d.terms {
                rem.add_term(u + sx, v + sy, -(&qc * dc));
            }
            quot.add_term(sx, sy, qc);
        }
        Some(quot)
    }

    /// Substitutes values for `q` and `t`.
    pub fn eval(&self, q: &Q, t: &Q) -> Q {
        self.terms.iter().map(|(&(a, b), c)| c * &(q.pow(a) * t.pow(b))).sum()
    }

    /// `t = 0`.
    pub fn at_t0(&self) -> QTPoly {
        QTPoly { terms: self.terms.iter().filter(|(k, _)| k.1 == 0).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// `q = 0`.
    pub fn at_q0(&self) -> QTPoly {
        QTPoly { terms: self.terms.iter().filter(|(k, _)| k.0 == 0).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// Exchanges `q` and `t`.
    pub fn swap_qt(&self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(&(a, b), v)| ((b, a), v.clone())).collect() }
    }

    /// `q^d f(1/q, t)`; requires `d ≥ q_degree`.
    pub fn rev_q(&self, d: u32) -> QTPoly {
        assert!(d >= self.q_degree(), "reversal degree too small");
        QTPoly { terms: self.terms.iter().map(|(&(a, b), v)| ((d - a, b), v.clone())).collect() }
    }

    /// `t^d f(q, 1/t)`; requires `d ≥ t_degree`.
    pub fn rev_t(&self, d: u32) -> QTPoly {
        assert!(d >= self.t_degree(), "reversal degree too small");
        QTPoly { terms: self.terms.iter().map(|(&(a, b), v)| ((a, d - b), v.clone())).collect() }
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(&(x, y), v)| ((x + a, y + b), v.clone())).collect() }
    }

    /// Smallest q-exponent present.
    pub fn q_valuation(&self) -> u32 {
        self.terms.keys().map(|k| k.0).min().unwrap_or(0)
    }

    /// Coefficients of `q^0, q^1, ..` when `t` does not occur.
    pub fn q_coeffs(&self) -> Option<Vec<Q>> {
        if self.terms.keys().any(|k| k.1 != 0) {
            return None;
        }
        let d = self.q_degree();
        Some((0..=d).map(|i| self.coeff(i, 0)).collect())
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sorted `[q_exp, t_exp, coefficient]` triples.
    pub fn to_triples(&self) -> Vec<(u32, u32, Q)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect()
    }

    pub fn from_triples(triples: impl IntoIterator<Item = (u32, u32, Q)>) -> QTPoly {
        let mut p = QTPoly::zero();
        for (a, b, c) in triples {
            p.add_term(a, b, c);
        }
        p
    }
}

impl Serialize for QTPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(QTPoly::from_triples(Vec::<(u32, u32, Q)>::deserialize(d)?))
    }
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        self.scale(&Q::from(-1))
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut acc: std::collections::HashMap<(u32, u32), Q> = std::collections::HashMap::new();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                *acc.entry((a + x, b + y)).or_default() += c * d;
            }
        }
        QTPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! owned_poly_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly { (&self).$m(&rhs) }
        }
    )*};
}
owned_poly_ops!(Add add, Sub sub, Mul mul);

impl From<Q> for QTPoly {
    fn from(c: Q) -> QTPoly {
        QTPoly::constant(c)
    }
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> QTPoly {
        QTPoly::constant(Q::from(c))
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", a), ("t", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if a == 0 && b == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses polynomials like `1 + 2*q + q^2*t - 3/2*t^3`.
pub fn parse_qtpoly(s: &str) -> Result<QTPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(format!("bad q,t-polynomial `{s}`"));
    if compact.is_empty() {
        return Err(err());
    }
    let mut out = QTPoly::zero();
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
            chunks.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && i == 0 {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    chunks.push((neg, cur));
    for (neg, body) in chunks {
        if body.is_empty() {
            return Err(err());
        }
        let mut c = Q::from(if neg { -1 } else { 1 });
        let (mut a, mut b) = (0u32, 0u32);
        for factor in body.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((x, e)) => (x, e.parse::<u32>().map_err(|_| err())?),
                None => (factor, 1),
            };
            match base {
                "q" => a += exp,
                "t" => b += exp,
                num => c = c * num.parse::<Q>().map_err(|_| err())?,
            }
        }
        out.add_term(a, b, c);
    }
    Ok(out)
}

/// A quotient of q,t-polynomials. Normalization divides out rational content
/// and cancels the denominator whenever it divides the numerator exactly.
#[derive(Clone, Serialize, Deserialize)]
pub struct QTFrac {
    num: QTPoly,
    den: QTPoly,
}

impl QTFrac {
    pub fn new(num: QTPoly, den: QTPoly) -> Result<QTFrac> {
        if den.is_zero() {
            return Err(Error::OutOfRange("zero denominator".into()));
        }
        Ok(QTFrac { num, den }.normalized())
    }

    pub fn zero() -> QTFrac {
        QTFrac { num: QTPoly::zero(), den: QTPoly::one() }
    }

    pub fn one() -> QTFrac {
        QTFrac::from(QTPoly::one())
    }

    pub fn num(&self) -> &QTPoly {
        &self.num
    }

    pub fn den(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_poly(&self) -> Result<QTPoly> {
        if self.is_poly() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    fn normalized(self) -> QTFrac {
        let QTFrac { num, den } = self;
        if num.is_zero() {
            return QTFrac::zero();
        }
        if let Some(c) = den.as_constant() {
            return QTFrac { num: num.scale(&c.recip()), den: QTPoly::one() };
        }
        if let Some(p) = num.div_exact(&den) {
            return QTFrac { num: p, den: QTPoly::one() };
        }
        let lc = den.leading().unwrap().1.recip();
        QTFrac { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn scale(&self, c: &Q) -> QTFrac {
        QTFrac { num: self.num.scale(c), den: self.den.clone() }.normalized()
    }

    pub fn recip(&self) -> Result<QTFrac> {
        QTFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn map_polys(&self, f: impl Fn(&QTPoly) -> QTPoly) -> Result<QTFrac> {
        QTFrac::new(f(&self.num), f(&self.den))
    }
}

impl From<QTPoly> for QTFrac {
    fn from(p: QTPoly) -> QTFrac {
        QTFrac { num: p, den: QTPoly::one() }
    }
}

impl From<Q> for QTFrac {
    fn from(c: Q) -> QTFrac {
        QTFrac::from(QTPoly::constant(c))
    }
}

impl PartialEq for QTFrac {
    fn eq(&self, other: &QTFrac) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &QTFrac {
    type Output = QTFrac;
    fn add(self, rhs: &QTFrac) -> QTFrac {
        if self.den == rhs.den {
            return QTFrac { num: &self.num + &rhs.num, den: self.den.clone() }.normalized();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if let Some(k) = self.den.div_exact(&rhs.den) {
            return QTFrac { num: &self.num + &(&rhs.num * &k), den: self.den.clone() }.normalized();
        }
        if let Some(k) = rhs.den.div_exact(&self.den) {
            return QTFrac { num: &(&self.num * &k) + &rhs.num, den: rhs.den.clone() }.normalized();
        }
        QTFrac { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den }.normalized()
    }
}

impl Neg for &QTFrac {
    type Output = QTFrac;
    fn neg(self) -> QTFrac {
        QTFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &QTFrac {
    type Output = QTFrac;
    fn sub(self, rhs: &QTFrac) -> QTFrac {
        self + &(-rhs)
    }
}

impl Mul for &QTFrac {
    type Output = QTFrac;
    fn mul(self, rhs: &QTFrac) -> QTFrac {
        if self.is_poly() && rhs.is_poly() {
            return QTFrac::from(&self.num * &rhs.num);
        }
        QTFrac { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.normalized()
    }
}

impl fmt::Display for QTFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QTFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[n]_q = 1 + q + .. + q^{n-1}`.
pub fn q_number(n: u32) -> QTPoly {
    let mut p = QTPoly::zero();
    for i in 0..n {
        p.add_term(i, 0, Q::from(1));
    }
    p
}

/// `[n]!_q`.
pub fn q_factorial(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, i| &acc * &q_number(i))
}

/// `[n; k_1, .., k_m]_q = [n]!_q / ∏ [k_i]!_q`.
pub fn q_multinomial(n: u32, parts: &[u32]) -> Result<QTPoly> {
    if parts.iter().sum::<u32>() != n {
        return Err(Error::CompositionMismatch { n, parts: parts.to_vec() });
    }
    let den = parts.iter().fold(QTPoly::one(), |acc, &k| &acc * &q_factorial(k));
    q_factorial(n).div_exact(&den).ok_or_else(|| Error::ResidualDenominator("q-multinomial".into()))
}

/// `[n choose k]_q`, zero when `k > n`.
pub fn q_binomial(n: u32, k: u32) -> QTPoly {
    if k > n {
        return QTPoly::zero();
    }
    q_multinomial(n, &[k, n - k]).expect("parts sum to n")
}

/// q-Stirling numbers of the second kind:
/// `Stir_q(n,k) = Stir_q(n-1,k-1) + [k]_q Stir_q(n-1,k)`, `Stir_q(0,k) = δ_{k,0}`.
pub fn q_stirling(n: u32, k: u32) -> QTPoly {
    let mut row: Vec<QTPoly> = vec![QTPoly::one()];
    for m in 1..=n {
        let mut next = vec![QTPoly::zero(); m as usize + 1];
        for j in 1..=m as usize {
            let left = row.get(j - 1).cloned().unwrap_or_default();
            let right = row.get(j).map(|p| p * &q_number(j as u32)).unwrap_or_default();
            next[j] = &left + &right;
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QTPoly {
        QTPoly::from_q_coeffs(c)
    }

    #[test]
    fn q_analogs() {
        assert_eq!(q_stirling(3, 2), qp(&[2, 1]));
        assert_eq!(q_stirling(4, 2), qp(&[3, 3, 1]));
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert_eq!(q_multinomial(3, &[1, 1, 1]).unwrap(), qp(&[1, 2, 2, 1]));
        assert!(matches!(q_multinomial(3, &[1, 1]), Err(Error::CompositionMismatch { .. })));
        assert_eq!(q_stirling(0, 0), QTPoly::one());
        assert!(q_stirling(3, 0).is_zero());
    }

    #[test]
    fn pascal_oracle() {
        // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
        for n in 1..9 {
            for k in 1..n {
                let rhs = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k, 0);
                assert_eq!(q_binomial(n, k), rhs);
            }
        }
    }

    #[test]
    fn exact_division() {
        let a = &(&QTPoly::q() - &QTPoly::t()) * &(&QTPoly::one() + &QTPoly::q().pow(3));
        let b = &QTPoly::q() - &QTPoly::t();
        assert_eq!(a.div_exact(&b).unwrap(), &QTPoly::one() + &QTPoly::q().pow(3));
        assert!(QTPoly::q().div_exact(&QTPoly::t()).is_none());
    }

    #[test]
    fn fractions() {
        let qm = &QTPoly::q() - &QTPoly::t();
        let a = QTFrac::new(QTPoly::one(), qm.clone()).unwrap();
        let b = QTFrac::new(QTPoly::one(), -&qm).unwrap();
        assert!((&a + &b).is_zero());
        let c = QTFrac::new(&qm * &QTPoly::q(), qm.clone()).unwrap();
        assert_eq!(c.to_poly().unwrap(), QTPoly::q());
    }

    #[test]
    fn parse_and_print() {
        let p = parse_qtpoly("1 + 2*q - q^2*t + 3/2*t^3").unwrap();
        assert_eq!(parse_qtpoly(&p.to_string()).unwrap(), p);
        assert_eq!(p.coeff(2, 1), Q::from(-1));
    }
}
