//! Polynomials in commuting `x_i`, optional commuting `y_i`, and
//! anticommuting `θ_i`, with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rational::Q;

/// Largest supported number of variables in each set.
pub const MAX_RANK: usize = 8;

/// Degree of a homogeneous element: x-degree, θ-degree and y-degree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub x: u32,
    pub theta: u32,
    #[serde(default, skip_serializing_if = "is_zero_u32")]
    pub y: u32,
}

fn is_zero_u32(v: &u32) -> bool {
    *v == 0
}

impl Bidegree {
    pub fn new(x: u32, theta: u32) -> Bidegree {
        Bidegree { x, theta, y: 0 }
    }

    pub fn with_y(x: u32, y: u32, theta: u32) -> Bidegree {
        Bidegree { x, theta, y }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y == 0 {
            write!(f, "({},{})", self.x, self.theta)
        } else {
            write!(f, "({},{},{})", self.x, self.y, self.theta)
        }
    }
}

/// `x^a y^b θ_S` with `S` kept as a bit set, so the θ-factors are always in
/// increasing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    x: [u8; MAX_RANK],
    y: [u8; MAX_RANK],
    theta: u16,
    xd: u16,
    yd: u16,
}

/// Sign of `θ_s θ_t` relative to `θ_{s ∪ t}` for disjoint bit sets.
#[inline]
pub(crate) fn merge_sign(s: u16, t: u16) -> bool {
    // count pairs (i in s, j in t) with i > j
    let mut swaps = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (s >> (j + 1)).count_ones();
    }
    swaps % 2 == 1
}

impl SuperMonomial {
    pub const ONE: SuperMonomial = SuperMonomial { x: [0; MAX_RANK], y: [0; MAX_RANK], theta: 0, xd: 0, yd: 0 };

    /// Builds a monomial from x-exponents and 0-based θ indices. Returns the
    /// sign needed to sort the θ indices, or `None` if an index repeats.
    pub fn from_parts(x: &[u32], y: &[u32], theta: &[usize]) -> Option<(SuperMonomial, bool)> {
        let mut m = SuperMonomial::ONE;
        for (i, &e) in x.iter().enumerate() {
            m.x[i] = u8::try_from(e).ok()?;
            m.xd += e as u16;
        }
        for (i, &e) in y.iter().enumerate() {
            m.y[i] = u8::try_from(e).ok()?;
            m.yd += e as u16;
        }
        let mut neg = false;
        for &i in theta {
            let bit = 1u16 << i;
            if m.theta & bit != 0 {
                return None;
            }
            // θ_i moves left past every factor already placed with larger index
            neg ^= (m.theta >> (i + 1)).count_ones() % 2 == 1;
            m.theta |= bit;
        }
        Some((m, neg))
    }

    #[inline]
    pub fn x_exp(&self, i: usize) -> u32 {
        self.x[i] as u32
    }

    #[inline]
    pub fn y_exp(&self, i: usize) -> u32 {
        self.y[i] as u32
    }

    pub fn x_exps(&self, n: usize) -> Vec<u32> {
        self.x[..n].iter().map(|&e| e as u32).collect()
    }

    pub fn y_exps(&self, n: usize) -> Vec<u32> {
        self.y[..n].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn theta_bits(&self) -> u16 {
        self.theta
    }

    #[inline]
    pub fn has_theta(&self, i: usize) -> bool {
        self.theta & (1 << i) != 0
    }

    /// 0-based θ indices in increasing order.
    pub fn theta_set(&self) -> Vec<usize> {
        (0..16).filter(|&i| self.has_theta(i)).collect()
    }

    pub fn x_degree(&self) -> u32 {
        self.xd as u32
    }

    pub fn y_degree(&self) -> u32 {
        self.yd as u32
    }

    pub fn theta_degree(&self) -> u32 {
        self.theta.count_ones()
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree { x: self.x_degree(), theta: self.theta_degree(), y: self.y_degree() }
    }

    /// Index of the largest variable used, plus one.
    pub fn support_rank(&self) -> usize {
        let mut r = 16 - self.theta.leading_zeros() as usize;
        for i in 0..MAX_RANK {
            if self.x[i] != 0 || self.y[i] != 0 {
                r = r.max(i + 1);
            }
        }
        r
    }

    /// Product `self * other`; `None` if a θ repeats, else the sign flag.
    #[inline]
    pub fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        if self.theta & other.theta != 0 {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_RANK {
            m.x[i] = m.x[i].checked_add(other.x[i])?;
            m.y[i] = m.y[i].checked_add(other.y[i])?;
        }
        m.xd += other.xd;
        m.yd += other.yd;
        m.theta |= other.theta;
        Some((m, merge_sign(self.theta, other.theta)))
    }

    /// `w · m`, returning the image and whether a sign flip occurred.
    pub fn act(&self, w: &Perm) -> (SuperMonomial, bool) {
        let mut m = SuperMonomial { theta: 0, ..*self };
        for i in 0..w.len() {
            let j = w.apply(i);
            m.x[j] = self.x[i];
            m.y[j] = self.y[i];
        }
        let mut neg = false;
        let mut rest = self.theta;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let j = w.apply(i);
            neg ^= (m.theta >> (j + 1)).count_ones() % 2 == 1;
            m.theta |= 1 << j;
        }
        (m, neg)
    }

    pub(crate) fn set_x(&mut self, i: usize, e: u8) {
        self.xd = self.xd - self.x[i] as u16 + e as u16;
        self.x[i] = e;
    }

    pub(crate) fn set_y(&mut self, i: usize, e: u8) {
        self.yd = self.yd - self.y[i] as u16 + e as u16;
        self.y[i] = e;
    }

    pub(crate) fn set_theta_bits(&mut self, bits: u16) {
        self.theta = bits;
    }

    /// `∏ a_i! ∏ b_i!` over the commuting exponents.
    pub fn exponent_factorial(&self) -> Q {
        let mut out = Q::from(1);
        for &e in self.x.iter().chain(self.y.iter()) {
            for k in 2..=e as i64 {
                out = out * Q::from(k);
            }
        }
        out
    }
}

impl Ord for SuperMonomial {
    fn cmp(&self, other: &SuperMonomial) -> Ordering {
        self.xd
            .cmp(&other.xd)
            .then_with(|| self.theta.count_ones().cmp(&other.theta.count_ones()))
            .then_with(|| self.yd.cmp(&other.yd))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| {
                // equal cardinality: the set holding the smallest differing
                // index is the lexicographically smaller one
                let diff = self.theta ^ other.theta;
                if diff == 0 {
                    Ordering::Equal
                } else if self.theta & diff & diff.wrapping_neg() != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &SuperMonomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = monomial_string(self);
        if s.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{s}")
        }
    }
}

fn monomial_string(m: &SuperMonomial) -> String {
    let mut parts = Vec::new();
    for (name, exps) in [("x", &m.x), ("y", &m.y)] {
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{name}{}", i + 1)),
                e => parts.push(format!("{name}{}^{e}", i + 1)),
            }
        }
    }
    for i in m.theta_set() {
        parts.push(format!("t{{{}}}", i + 1));
    }
    parts.join("*")
}

/// A finite linear combination of supermonomials in `n` variables per set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPolynomial {
    n: u8,
    terms: BTreeMap<SuperMonomial, Q>,
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n > MAX_RANK {
        Err(Error::RankTooLarge(n))
    } else {
        Ok(())
    }
}

impl SuperPolynomial {
    pub fn zero(n: usize) -> SuperPolynomial {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        SuperPolynomial { n: n as u8, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Q) -> SuperPolynomial {
        SuperPolynomial::monomial(n, SuperMonomial::ONE, c)
    }

    pub fn one(n: usize) -> SuperPolynomial {
        SuperPolynomial::constant(n, Q::from(1))
    }

    pub fn monomial(n: usize, m: SuperMonomial, c: Q) -> SuperPolynomial {
        let mut p = SuperPolynomial::zero(n);
        p.add_term(m, c);
        p
    }

    fn var(n: usize, i: usize) -> Result<()> {
        check_rank(n)?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(())
    }

    /// The variable `x_i` (1-based).
    pub fn x(n: usize, i: usize) -> Result<SuperPolynomial> {
        SuperPolynomial::var(n, i)?;
        let mut m = SuperMonomial::ONE;
        m.set_x(i - 1, 1);
        Ok(SuperPolynomial::monomial(n, m, Q::from(1)))
    }

    /// The variable `y_i` (1-based).
    pub fn y(n: usize, i: usize) -> Result<SuperPolynomial> {
        SuperPolynomial::var(n, i)?;
        let mut m = SuperMonomial::ONE;
        m.set_y(i - 1, 1);
        Ok(SuperPolynomial::monomial(n, m, Q::from(1)))
    }

    /// The variable `θ_i` (1-based).
    pub fn theta(n: usize, i: usize) -> Result<SuperPolynomial> {
        SuperPolynomial::var(n, i)?;
        let mut m = SuperMonomial::ONE;
        m.set_theta_bits(1 << (i - 1));
        Ok(SuperPolynomial::monomial(n, m, Q::from(1)))
    }

    /// `c · x^a θ_{t_1} .. θ_{t_r}` with 1-based θ indices in the given order.
    pub fn from_exponents(n: usize, c: Q, x: &[u32], theta: &[usize]) -> Result<SuperPolynomial> {
        check_rank(n)?;
        if x.len() > n {
            return Err(Error::RankMismatch { left: n, right: x.len() });
        }
        for &t in theta {
            if t == 0 || t > n {
                return Err(Error::IndexOutOfRange { index: t, n });
            }
        }
        let zero_based: Vec<usize> = theta.iter().map(|t| t - 1).collect();
        Ok(match SuperMonomial::from_parts(x, &[], &zero_based) {
            None => SuperPolynomial::zero(n),
            Some((m, neg)) => SuperPolynomial::monomial(n, m, if neg { -c } else { c }),
        })
    }

    pub(crate) fn from_map(n: usize, terms: BTreeMap<SuperMonomial, Q>) -> SuperPolynomial {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        SuperPolynomial { n: n as u8, terms }
    }

    pub(crate) fn map(&self) -> &BTreeMap<SuperMonomial, Q> {
        &self.terms
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SuperMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest monomial in the canonical order with its coefficient.
    pub fn leading(&self) -> Option<(&SuperMonomial, &Q)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Q, other: &SuperPolynomial) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(*m, c * d);
        }
    }

    pub fn scale(&self, c: &Q) -> SuperPolynomial {
        if c.is_zero() {
            return SuperPolynomial::zero(self.rank());
        }
        SuperPolynomial { n: self.n, terms: self.terms.iter().map(|(m, d)| (*m, c * d)).collect() }
    }

    pub fn try_add(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.same_rank(other)?;
        let mut out = self.clone();
        out.add_scaled(&Q::from(1), other);
        Ok(out)
    }

    fn same_rank(&self, other: &SuperPolynomial) -> Result<()> {
        if self.n != other.n {
            Err(Error::RankMismatch { left: self.rank(), right: other.rank() })
        } else {
            Ok(())
        }
    }

    /// Superspace product. Fails if the ranks differ.
    pub fn try_mul(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.same_rank(other)?;
        let mut out = SuperPolynomial::zero(self.rank());
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                if let Some((m, neg)) = a.mul(b) {
                    let v = c * d;
                    out.add_term(m, if neg { -v } else { v });
                }
            }
        }
        Ok(out)
    }

    /// Degree data if the polynomial is homogeneous and nonzero.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(SuperMonomial::bidegree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    pub fn homogeneous_components(&self) -> BTreeMap<Bidegree, SuperPolynomial> {
        let mut out: BTreeMap<Bidegree, SuperPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree()).or_insert_with(|| SuperPolynomial::zero(self.rank())).terms.insert(*m, c.clone());
        }
        out
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x_degree() + m.y_degree()).max().unwrap_or(0)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Q {
        self.coeff(&SuperMonomial::ONE)
    }

    /// Diagonal action `w · f` with `w · x_i = x_{w(i)}` and the same on θ, y.
    pub fn act(&self, w: &Perm) -> Result<SuperPolynomial> {
        if w.len() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: w.len() });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (img, neg) = m.act(w);
            terms.insert(img, if neg { -c } else { c.clone() });
        }
        Ok(SuperPolynomial { n: self.n, terms })
    }

    /// Text form; see the module docs for the grammar.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text form. With `n = None` the rank is the largest index used.
    pub fn parse(text: &str, n: Option<usize>) -> Result<SuperPolynomial> {
        parse_poly(text, n)
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mon = monomial_string(m);
            if mon.is_empty() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{mon}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}] {}", self.n, self)
    }
}

impl FromStr for SuperPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<SuperPolynomial> {
        parse_poly(s, None)
    }
}

impl Serialize for SuperPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SuperPolynomial", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SuperPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            text: String,
        }
        let raw = Raw::deserialize(d)?;
        parse_poly(&raw.text, Some(raw.n)).map_err(serde::de::Error::custom)
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    /// Panics on rank mismatch; use [`SuperPolynomial::try_add`] otherwise.
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_add(rhs).expect("rank mismatch")
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.same_rank(rhs).expect("rank mismatch");
        let mut out = self.clone();
        out.add_scaled(&Q::from(-1), rhs);
        out
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&Q::from(-1))
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    /// Panics on rank mismatch; use [`SuperPolynomial::try_mul`] otherwise.
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

fn parse_poly(text: &str, n: Option<usize>) -> Result<SuperPolynomial> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| Error::Parse(format!("{msg} in `{text}`"));
    if s.is_empty() {
        return Err(err("empty input"));
    }
    // split into signed terms at top-level + and -
    let bytes = s.as_bytes();
    let mut raw_terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    if bytes[0] == b'+' || bytes[0] == b'-' {
        neg = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && i > start {
            // a sign right after `^` or `*` belongs to the factor
            let prev = bytes[i - 1];
            if prev != b'^' && prev != b'*' && prev != b'/' {
                raw_terms.push((neg, &s[start..i]));
                neg = bytes[i] == b'-';
                start = i + 1;
            }
        }
        i += 1;
    }
    raw_terms.push((neg, &s[start..]));

    let mut parsed = Vec::new();
    let mut max_index = 0usize;
    for (neg, body) in raw_terms {
        if body.is_empty() {
            return Err(err("empty term"));
        }
        let mut c = Q::from(if neg { -1 } else { 1 });
        let mut x = [0u32; MAX_RANK];
        let mut y = [0u32; MAX_RANK];
        let mut theta = Vec::new();
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            let first = factor.chars().next().unwrap();
            if first.is_ascii_digit() || first == '-' || first == '+' {
                let v: Q = factor.parse().map_err(|_| err("bad coefficient"))?;
                c = c * v;
            } else if let Some(rest) = factor.strip_prefix("t{").or_else(|| factor.strip_prefix("θ{")) {
                let idx = rest.strip_suffix('}').ok_or_else(|| err("unterminated θ index"))?;
                let idx: usize = idx.parse().map_err(|_| err("bad θ index"))?;
                if idx == 0 || idx > MAX_RANK {
                    return Err(err("θ index out of range"));
                }
                max_index = max_index.max(idx);
                theta.push(idx - 1);
            } else if first == 'x' || first == 'y' {
                let rest = &factor[1..];
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (rest, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                if idx == 0 || idx > MAX_RANK {
                    return Err(err("variable index out of range"));
                }
                max_index = max_index.max(idx);
                let slot = if first == 'x' { &mut x[idx - 1] } else { &mut y[idx - 1] };
                *slot += exp;
            } else {
                return Err(err("unknown factor"));
            }
        }
        parsed.push((c, x, y, theta));
    }
    let n = match n {
        Some(n) => {
            check_rank(n)?;
            if max_index > n {
                return Err(Error::IndexOutOfRange { index: max_index, n });
            }
            n
        }
        None => max_index,
    };
    let mut out = SuperPolynomial::zero(n);
    for (c, x, y, theta) in parsed {
        if let Some((m, neg)) = SuperMonomial::from_parts(&x, &y, &theta) {
            out.add_term(m, if neg { -c } else { c });
        } else if theta.len() > 16 {
            return Err(err("too many θ factors"));
        }
    }
    Ok(out)
}

/// `Σ_{w ∈ S_k} sign(w) w · f` where `S_k` permutes the first `k` indices.
fn antisymmetrize_first(f: &SuperPolynomial, k: usize) -> SuperPolynomial {
    let n = f.rank();
    let perms = Perm::all(k);
    let extend = |w: &Perm| -> Perm {
        let mut images: Vec<usize> = w.images().iter().map(|&i| i as usize).collect();
        images.extend(k..n);
        Perm::from_images(images).expect("valid extension")
    };
    let accumulate = |chunk: &[Perm]| -> BTreeMap<SuperMonomial, Q> {
        let mut acc = SuperPolynomial::zero(n);
        for w in chunk {
            let ws = extend(w);
            let sign = w.sign() < 0;
            for (m, c) in f.terms() {
                let (img, neg) = m.act(&ws);
                acc.add_term(img, if neg ^ sign { -c } else { c.clone() });
            }
        }
        acc.terms
    };
    let parts: Vec<BTreeMap<SuperMonomial, Q>> = if perms.len() * f.len() > 20_000 {
        perms.par_chunks(720).map(accumulate).collect()
    } else {
        vec![accumulate(&perms)]
    };
    let mut out = SuperPolynomial::zero(n);
    for part in parts {
        for (m, c) in part {
            out.add_term(m, c);
        }
    }
    out
}

/// The antisymmetrizer `ε_n = Σ sign(w) w` applied to `f`.
pub fn antisymmetrize(f: &SuperPolynomial) -> Result<SuperPolynomial> {
    let n = f.rank();
    if n > 8 {
        return Err(Error::AntisymmetrizerTooLarge(n));
    }
    Ok(antisymmetrize_first(f, n))
}

fn check_sequence(n: usize, a: &[u32]) -> Result<()> {
    check_rank(n)?;
    if a.len() > n {
        return Err(Error::InvalidSequence(format!("sequence {a:?} longer than rank {n}")));
    }
    if a.iter().any(|&e| e > 60) {
        return Err(Error::InvalidSequence(format!("exponent too large in {a:?}")));
    }
    Ok(())
}

/// `x_1^{a_1} .. x_r^{a_r} x_{r+1}^{k-1} .. x_n^0 θ_1 .. θ_r` with `k = n - r`.
pub fn vandermonde_seed(n: usize, a: &[u32]) -> Result<SuperPolynomial> {
    check_sequence(n, a)?;
    let r = a.len();
    let k = n - r;
    let mut x: Vec<u32> = a.to_vec();
    x.extend((0..k as u32).rev());
    let theta: Vec<usize> = (1..=r).collect();
    SuperPolynomial::from_exponents(n, Q::from(1), &x, &theta)
}

/// The superspace Vandermonde `Δ_n(a)`.
pub fn super_vandermonde(n: usize, a: &[u32]) -> Result<SuperPolynomial> {
    if n > 8 {
        return Err(Error::AntisymmetrizerTooLarge(n));
    }
    antisymmetrize(&vandermonde_seed(n, a)?)
}

/// Ordered determinant expansion `Σ sign(w) A_{1,w(1)} .. A_{n,w(n)}` of the
/// matrix whose first `r` rows are `x_j^{a_i} θ_j` and whose remaining rows
/// are `x_j^{k-1}, .., x_j^0`.
pub fn vandermonde_determinant(n: usize, a: &[u32]) -> Result<SuperPolynomial> {
    check_sequence(n, a)?;
    if n > 8 {
        return Err(Error::AntisymmetrizerTooLarge(n));
    }
    let r = a.len();
    let k = n - r;
    let entry = |row: usize, col: usize| -> SuperMonomial {
        let mut x = vec![0u32; n];
        if row < r {
            x[col] = a[row];
            SuperMonomial::from_parts(&x, &[], &[col]).unwrap().0
        } else {
            x[col] = (k - 1 - (row - r)) as u32;
            SuperMonomial::from_parts(&x, &[], &[]).unwrap().0
        }
    };
    let mut out = SuperPolynomial::zero(n);
    for w in Perm::all(n) {
        let mut m = SuperMonomial::ONE;
        let mut neg = w.sign() < 0;
        let mut vanished = false;
        for row in 0..n {
            match m.mul(&entry(row, w.apply(row))) {
                Some((p, s)) => {
                    m = p;
                    neg ^= s;
                }
                None => {
                    vanished = true;
                    break;
                }
            }
        }
        if !vanished {
            out.add_term(m, Q::from(if neg { -1 } else { 1 }));
        }
    }
    Ok(out)
}

/// `ρ_{n,k} = ε_k(x_1^{k-1} .. x_k^0) θ_{k+1} .. θ_n`.
pub fn rho(n: usize, k: usize) -> Result<SuperPolynomial> {
    check_rank(n)?;
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let x: Vec<u32> = (0..k as u32).rev().collect();
    let staircase = SuperPolynomial::from_exponents(n, Q::from(1), &x, &[])?;
    let alt = antisymmetrize_first(&staircase, k);
    let theta: Vec<usize> = (k + 1..=n).collect();
    let tail = SuperPolynomial::from_exponents(n, Q::from(1), &[], &theta)?;
    alt.try_mul(&tail)
}

/// Solomon's differential `d f = Σ_i (∂f/∂x_i) θ_i`.
pub fn differential(f: &SuperPolynomial) -> SuperPolynomial {
    let n = f.rank();
    let mut out = SuperPolynomial::zero(n);
    for i in 1..=n {
        let df = crate::operators::dx(f, i).expect("index in range");
        let t = SuperPolynomial::theta(n, i).expect("index in range");
        out.add_scaled(&Q::from(1), &(&df * &t));
    }
    out
}

/// Elementary symmetric polynomial `e_d(x_1, .., x_n)`.
pub fn elementary(n: usize, d: usize) -> Result<SuperPolynomial> {
    check_rank(n)?;
    let mut out = SuperPolynomial::zero(n);
    if d > n {
        return Ok(out);
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == d {
            let x: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
            out.add_scaled(&Q::from(1), &SuperPolynomial::from_exponents(n, Q::from(1), &x, &[])?);
        }
    }
    Ok(out)
}

/// Power sum `p_d(x_1, .., x_n)`.
pub fn power_sum(n: usize, d: u32) -> Result<SuperPolynomial> {
    check_rank(n)?;
    let mut out = SuperPolynomial::zero(n);
    for i in 0..n {
        let mut x = vec![0; n];
        x[i] = d;
        out.add_scaled(&Q::from(1), &SuperPolynomial::from_exponents(n, Q::from(1), &x, &[])?);
    }
    Ok(out)
}

/// The classical Vandermonde `∏_{i<j} (x_i - x_j)`.
pub fn classical_vandermonde(n: usize) -> Result<SuperPolynomial> {
    check_rank(n)?;
    let mut out = SuperPolynomial::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let d = &SuperPolynomial::x(n, i)? - &SuperPolynomial::x(n, j)?;
            out = &out * &d;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(s, Some(3)).unwrap()
    }

    #[test]
    fn theta_anticommute() {
        let t1 = SuperPolynomial::theta(3, 1).unwrap();
        let t2 = SuperPolynomial::theta(3, 2).unwrap();
        assert_eq!(&t1 * &t2, -&(&t2 * &t1));
        assert!((&t1 * &t1).is_zero());
        let x1 = SuperPolynomial::x(3, 1).unwrap();
        assert_eq!(&(&x1 * &t1) * &t2, p("x1*t{1}*t{2}"));
    }

    #[test]
    fn transposition_on_theta() {
        let w = Perm::from_one_line(&[2, 1, 3]).unwrap();
        assert_eq!(p("t{1}*t{2}").act(&w).unwrap(), p("-t{1}*t{2}"));
        let f = p("x1^2*x2*t{1}");
        assert_eq!(f.act(&w).unwrap(), p("x1*x2^2*t{2}"));
    }

    #[test]
    fn small_vandermondes() {
        assert_eq!(super_vandermonde(2, &[]).unwrap(), SuperPolynomial::parse("x1 - x2", Some(2)).unwrap());
        assert_eq!(super_vandermonde(1, &[0]).unwrap(), SuperPolynomial::parse("t{1}", Some(1)).unwrap());
        assert_eq!(super_vandermonde(2, &[0]).unwrap(), SuperPolynomial::parse("t{1} - t{2}", Some(2)).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let f = p("2*x1*x2*t{1}*t{2} - 3/4*x3^2*t{3} + 5 - x2*y1^3");
        assert_eq!(SuperPolynomial::parse(&f.to_string(), Some(3)).unwrap(), f);
        assert_eq!(p("t{2}*t{1}"), p("-t{1}*t{2}"));
        assert!(SuperPolynomial::parse("x4", Some(3)).is_err());
        assert!(SuperPolynomial::parse("x1 + ", Some(3)).is_err());
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(3, 0).unwrap(), p("t{1}*t{2}*t{3}"));
        assert_eq!(rho(3, 2).unwrap(), p("x1*t{3} - x2*t{3}"));
    }

    #[test]
    fn rank_errors() {
        assert!(matches!(super_vandermonde(2, &[1, 1, 1]), Err(Error::InvalidSequence(_))));
        assert!(antisymmetrize(&SuperPolynomial::zero(8)).is_ok());
        let a = SuperPolynomial::one(2);
        let b = SuperPolynomial::one(3);
        assert!(matches!(a.try_mul(&b), Err(Error::RankMismatch { .. })));
    }
}
