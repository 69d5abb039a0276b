//! Exact sparse linear algebra over `Q`: echelon bases, graded subspaces,
//! closures under operators, quotients, orthogonal complements and the
//! matrices of permutations.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::operators::{monomial_weight, OperatorSpec};
use crate::perm::Perm;
use crate::rational::Q;
use crate::superspace::{Bidegree, SuperMonomial, SuperPolynomial};

pub type SparseVec<K> = BTreeMap<K, Q>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Q, row: &SparseVec<K>) {
    use std::collections::btree_map::Entry;
    for (k, d) in row {
        let delta = c * d;
        match v.entry(k.clone()) {
            Entry::Vacant(e) => {
                e.insert(delta);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &delta;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

/// Row-echelon basis of a space of sparse vectors. Each row has a distinct
/// pivot (its largest key) with coefficient one. After [`Echelon::finalize`]
/// no row contains another row's pivot, which makes the basis canonical.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
    reduced: bool,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new(), reduced: true }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn pivot_of(&self, key: &K) -> Option<usize> {
        self.pivots.get(key).copied()
    }

    /// Residue of `v` after eliminating every pivot.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut bound: Option<K> = None;
        loop {
            let found = match &bound {
                None => v.iter().rev().find(|(k, _)| self.pivots.contains_key(*k)),
                Some(b) => v.range(..b.clone()).rev().find(|(k, _)| self.pivots.contains_key(*k)),
            }
            .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = found else { break };
            let row = &self.rows[self.pivots[&k]];
            axpy(&mut v, &-c, row);
            bound = Some(k);
        }
        v
    }

    /// Inserts `v`; returns the normalized residue if the span grew.
    /// Rows are not back-substituted until [`Echelon::finalize`].
    pub fn insert_lazy(&mut self, v: SparseVec<K>) -> Option<&SparseVec<K>> {
        let mut r = self.reduce(v);
        let (p, c) = r.last_key_value().map(|(k, c)| (k.clone(), c.clone()))?;
        if !c.is_one() {
            let inv = c.recip();
            for val in r.values_mut() {
                *val = &*val * &inv;
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(r);
        self.reduced = false;
        self.rows.last()
    }

    /// Inserts `v` keeping the reduced form; returns whether the span grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let grew = self.insert_lazy(v).is_some();
        self.finalize();
        grew
    }

    /// Back-substitutes so that no row contains another row's pivot.
    pub fn finalize(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<(K, usize)> = self.pivots.iter().map(|(k, &i)| (k.clone(), i)).collect();
        // process pivots from smallest to largest; a row only contains keys
        // not larger than its pivot
        order.sort_by(|a, b| a.0.cmp(&b.0));
        for (idx, (_, i)) in order.iter().enumerate() {
            // eliminate smaller pivots from row i
            let mut row = std::mem::take(&mut self.rows[*i]);
            for (k, j) in order[..idx].iter().rev() {
                if let Some(c) = row.get(k).cloned() {
                    axpy(&mut row, &-c, &self.rows[*j]);
                }
            }
            self.rows[*i] = row;
        }
        // canonical order: by pivot
        let mut rows = std::mem::take(&mut self.rows);
        let mut sorted = Vec::with_capacity(rows.len());
        self.pivots.clear();
        for (k, i) in order {
            self.pivots.insert(k, sorted.len());
            sorted.push(std::mem::take(&mut rows[i]));
        }
        self.rows = sorted;
        self.reduced = true;
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
}

/// A finite-dimensional subspace of superspace held in reduced row-echelon
/// form with respect to the canonical monomial order.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    n: usize,
    ech: Echelon<SuperMonomial>,
}

impl ReducedBasis {
    pub fn new(n: usize) -> ReducedBasis {
        ReducedBasis { n, ech: Echelon::new() }
    }

    pub fn from_elements<'a>(n: usize, elems: impl IntoIterator<Item = &'a SuperPolynomial>) -> ReducedBasis {
        let mut b = ReducedBasis::new(n);
        for e in elems {
            b.insert_lazy(e);
        }
        b.finalize();
        b
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    /// Inserts `f`, keeping reduced form. Returns whether the span grew.
    pub fn reduce_insert(&mut self, f: &SuperPolynomial) -> bool {
        self.ech.finalize();
        self.ech.insert(f.map().clone())
    }

    /// Inserts without back-substitution and returns the new residue, if any.
    pub fn insert_lazy(&mut self, f: &SuperPolynomial) -> Option<SuperPolynomial> {
        self.ech.insert_lazy(f.map().clone()).map(|r| SuperPolynomial::from_map(self.n, r.clone()))
    }

    pub fn finalize(&mut self) {
        self.ech.finalize();
    }

    pub fn reduce(&self, f: &SuperPolynomial) -> SuperPolynomial {
        SuperPolynomial::from_map(self.n, self.ech.reduce(f.map().clone()))
    }

    pub fn contains(&self, f: &SuperPolynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Basis elements, ordered by pivot.
    pub fn elements(&self) -> Vec<SuperPolynomial> {
        self.ech.rows().iter().map(|r| SuperPolynomial::from_map(self.n, r.clone())).collect()
    }

    pub fn element(&self, i: usize) -> SuperPolynomial {
        SuperPolynomial::from_map(self.n, self.ech.rows()[i].clone())
    }

    pub fn pivots(&self) -> Vec<SuperMonomial> {
        self.ech.rows().iter().map(|r| *r.last_key_value().unwrap().0).collect()
    }

    pub(crate) fn echelon(&self) -> &Echelon<SuperMonomial> {
        &self.ech
    }

    /// Trace of `w` on a `w`-stable space. In reduced form the coordinate of
    /// basis vector `k` in any element of the span is its coefficient at
    /// pivot `k`, so only one coefficient per basis vector is needed.
    pub fn trace(&self, w: &Perm) -> Q {
        debug_assert!(self.ech.is_reduced());
        let winv = w.inverse();
        let mut acc = Q::from(0);
        for row in self.ech.rows() {
            let p = row.last_key_value().unwrap().0;
            let (m, neg) = p.act(&winv);
            if let Some(c) = row.get(&m) {
                if neg {
                    acc -= c;
                } else {
                    acc += c;
                }
            }
        }
        acc
    }
}

impl PartialEq for ReducedBasis {
    fn eq(&self, other: &ReducedBasis) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        a.finalize();
        b.finalize();
        a.n == b.n && a.ech.rows == b.ech.rows
    }
}

/// A direct sum of finite-dimensional homogeneous pieces.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSubspace {
    n: usize,
    pieces: BTreeMap<Bidegree, ReducedBasis>,
}

impl GradedSubspace {
    pub fn new(n: usize) -> GradedSubspace {
        GradedSubspace { n, pieces: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn pieces(&self) -> &BTreeMap<Bidegree, ReducedBasis> {
        &self.pieces
    }

    pub fn piece(&self, d: &Bidegree) -> Option<&ReducedBasis> {
        self.pieces.get(d)
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(ReducedBasis::dim).sum()
    }

    /// Nonzero piece dimensions.
    pub fn hilbert(&self) -> BTreeMap<Bidegree, usize> {
        self.pieces.iter().filter(|(_, b)| b.dim() > 0).map(|(d, b)| (*d, b.dim())).collect()
    }

    /// Inserts every homogeneous component of `f`; returns the residues that
    /// enlarged the span.
    pub fn insert_lazy(&mut self, f: &SuperPolynomial) -> Vec<SuperPolynomial> {
        let mut out = Vec::new();
        for (d, comp) in f.homogeneous_components() {
            let piece = self.pieces.entry(d).or_insert_with(|| ReducedBasis::new(self.n));
            if let Some(r) = piece.insert_lazy(&comp) {
                out.push(r);
            }
        }
        out
    }

    pub fn finalize(&mut self) {
        self.pieces.par_iter_mut().for_each(|(_, b)| b.finalize());
        self.pieces.retain(|_, b| b.dim() > 0);
    }

    pub fn contains(&self, f: &SuperPolynomial) -> bool {
        f.homogeneous_components().iter().all(|(d, c)| match self.pieces.get(d) {
            Some(b) => b.contains(c),
            None => c.is_zero(),
        })
    }

    pub fn elements(&self) -> Vec<SuperPolynomial> {
        self.pieces.values().flat_map(ReducedBasis::elements).collect()
    }

    /// Largest x-degree (plus y-degree) present.
    pub fn top_degree(&self) -> u32 {
        self.pieces.keys().map(|d| d.x + d.y).max().unwrap_or(0)
    }
}

/// Smallest graded subspace containing `generators` and closed under `ops`.
/// Fails if an element of total x+y degree above `cap` appears.
pub fn span_closure(
    n: usize,
    generators: &[SuperPolynomial],
    ops: &[OperatorSpec],
    cap: Option<u32>,
) -> Result<GradedSubspace> {
    for g in generators {
        if g.rank() != n {
            return Err(Error::RankMismatch { left: n, right: g.rank() });
        }
    }
    let check_cap = |f: &SuperPolynomial| -> Result<()> {
        if let Some(cap) = cap {
            let d = f.max_total_degree();
            if d > cap {
                return Err(Error::CapExceeded { cap, degree: d });
            }
        }
        Ok(())
    };
    let mut space = GradedSubspace::new(n);
    let mut queue: VecDeque<SuperPolynomial> = VecDeque::new();
    for g in generators {
        check_cap(g)?;
        queue.extend(space.insert_lazy(g));
    }
    while !queue.is_empty() {
        let batch: Vec<SuperPolynomial> = queue.drain(..).collect();
        let images: Vec<Result<Vec<SuperPolynomial>>> =
            batch.par_iter().map(|f| ops.iter().map(|op| op.apply(f)).collect()).collect();
        for imgs in images {
            for img in imgs? {
                if img.is_zero() {
                    continue;
                }
                check_cap(&img)?;
                queue.extend(space.insert_lazy(&img));
            }
        }
    }
    space.finalize();
    Ok(space)
}

/// `A + B`.
pub fn sum(a: &GradedSubspace, b: &GradedSubspace) -> Result<GradedSubspace> {
    if a.n != b.n {
        return Err(Error::RankMismatch { left: a.n, right: b.n });
    }
    let mut out = a.clone();
    for f in b.elements() {
        out.insert_lazy(&f);
    }
    out.finalize();
    Ok(out)
}

/// Result of [`quotient_hilbert`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub hilbert: BTreeMap<Bidegree, usize>,
    /// For each piece, elements of the larger space completing a basis of
    /// the smaller one.
    pub complements: BTreeMap<Bidegree, Vec<SuperPolynomial>>,
}

/// Hilbert series of `big / small` after checking `small ⊆ big`.
pub fn quotient_hilbert(big: &GradedSubspace, small: &GradedSubspace) -> Result<Quotient> {
    if big.n != small.n {
        return Err(Error::RankMismatch { left: big.n, right: small.n });
    }
    for (d, piece) in &small.pieces {
        let ok = match big.pieces.get(d) {
            Some(b) => piece.elements().iter().all(|f| b.contains(f)),
            None => piece.dim() == 0,
        };
        if !ok {
            return Err(Error::ContainmentViolation(d.to_string()));
        }
    }
    let mut hilbert = BTreeMap::new();
    let mut complements = BTreeMap::new();
    for (d, piece) in &big.pieces {
        let mut acc = small.pieces.get(d).cloned().unwrap_or_else(|| ReducedBasis::new(big.n));
        let mut comp = Vec::new();
        for f in piece.elements() {
            if acc.insert_lazy(&f).is_some() {
                comp.push(f);
            }
        }
        if !comp.is_empty() {
            hilbert.insert(*d, comp.len());
            complements.insert(*d, comp);
        }
    }
    Ok(Quotient { hilbert, complements })
}

/// All supermonomials of the given degree in `n` variables per set.
pub fn ambient_monomials(n: usize, d: Bidegree) -> Vec<SuperMonomial> {
    fn compositions(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=total).rev() {
            prefix.push(e);
            compositions(n, total - e, prefix, out);
            prefix.pop();
        }
    }
    let comps = |total: u32| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if n == 0 {
            if total == 0 {
                out.push(vec![]);
            }
        } else {
            compositions(n, total, &mut Vec::new(), &mut out);
        }
        out
    };
    let xs = comps(d.x);
    let ys = comps(d.y);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != d.theta {
            continue;
        }
        let theta: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        for x in &xs {
            for y in &ys {
                out.push(SuperMonomial::from_parts(x, y, &theta).unwrap().0);
            }
        }
    }
    out.sort();
    out
}

/// Orthogonal complement of the `d`-piece of `space` inside all of degree
/// `d`, with respect to the pairing `⟨f, g⟩`.
pub fn orthogonal_complement(space: &GradedSubspace, d: Bidegree) -> ReducedBasis {
    let n = space.n;
    let empty = ReducedBasis::new(n);
    let piece = space.pieces.get(&d).unwrap_or(&empty);
    let rows = piece.echelon().rows();
    let pivots: Vec<SuperMonomial> = piece.pivots();
    let mut out = Echelon::new();
    for m in ambient_monomials(n, d) {
        if piece.echelon().pivot_of(&m).is_some() {
            continue;
        }
        let wm = monomial_weight(&m);
        let mut v: SparseVec<SuperMonomial> = BTreeMap::new();
        v.insert(m, Q::from(1));
        for (row, p) in rows.iter().zip(&pivots) {
            if let Some(c) = row.get(&m) {
                let coeff = -(&(&wm * c) / &monomial_weight(p));
                v.insert(*p, coeff);
            }
        }
        out.insert_lazy(v);
    }
    out.finalize();
    ReducedBasis { n, ech: out }
}

/// Matrix of `w` on a piece, columns being images of basis vectors.
pub fn permutation_matrix(piece: &ReducedBasis, w: &Perm) -> Result<Vec<Vec<Q>>> {
    let mut basis = piece.clone();
    basis.finalize();
    let dim = basis.dim();
    let pivots = basis.pivots();
    let mut mat = vec![vec![Q::from(0); dim]; dim];
    for k in 0..dim {
        let img = basis.element(k).act(w)?;
        let mut residue = img.clone();
        for (j, p) in pivots.iter().enumerate() {
            let c = img.coeff(p);
            if !c.is_zero() {
                residue.add_scaled(&-c.clone(), &basis.element(j));
                mat[j][k] = c;
            }
        }
        if !residue.is_zero() {
            return Err(Error::StabilityViolation(w.to_string()));
        }
    }
    Ok(mat)
}

mod modp {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;

    use crate::rational::Q;

    pub const P: u64 = (1 << 61) - 1;

    pub fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    pub fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn big(x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits in u64")
    }

    pub fn reduce(q: &Q) -> Option<u64> {
        let den = big(&q.denom());
        (den != 0).then(|| mul(big(&q.numer()), inv(den)))
    }
}

/// A sparse rational matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<BTreeMap<usize, Q>>,
}

impl RationalMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> RationalMatrix {
        RationalMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn rank(&self) -> usize {
        // sparse elimination, sparsest rows first to limit fill-in
        let mut order: Vec<&BTreeMap<usize, Q>> = self.rows.iter().collect();
        order.sort_by_key(|r| r.len());
        let mut ech = Echelon::new();
        for r in order {
            ech.insert_lazy(r.clone());
        }
        ech.dim()
    }

    /// Full rank modulo a prime certifies a nonzero determinant over `Q`;
    /// the exact elimination only runs when that certificate fails.
    pub fn is_nonsingular(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        if self.rank_mod_p() == Some(self.nrows) {
            return true;
        }
        self.rank() == self.nrows
    }

    /// Rank over `F_p` with `p = 2^61 − 1`, or `None` if some denominator
    /// vanishes mod `p`. Never exceeds the rank over `Q`.
    pub fn rank_mod_p(&self) -> Option<usize> {
        let mut a = vec![vec![0u64; self.ncols]; self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                a[i][j] = modp::reduce(v)?;
            }
        }
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(piv) = (rank..self.nrows).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(piv, rank);
            let inv = modp::inv(a[rank][col]);
            let (top, rest) = a.split_at_mut(rank + 1);
            let prow = &top[rank];
            for r in rest.iter_mut() {
                if r[col] == 0 {
                    continue;
                }
                let f = modp::mul(r[col], inv);
                for c in col..self.ncols {
                    if prow[c] != 0 {
                        r[c] = modp::sub(r[c], modp::mul(f, prow[c]));
                    }
                }
            }
            rank += 1;
        }
        Some(rank)
    }

    /// Determinant by Gaussian elimination; `None` if not square.
    pub fn determinant(&self) -> Option<Q> {
        if !self.is_square() {
            return None;
        }
        let n = self.nrows;
        let mut a: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut det = Q::from(1);
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Some(Q::from(0));
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det = &det * &p;
            let inv = p.recip();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
        Some(det)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        (0..self.nrows).map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::super_vandermonde;

    #[test]
    fn modular_certificate_falls_back() {
        let p = (1i64 << 61) - 1;
        let mut m = RationalMatrix::zeros(2, 2);
        m.set(0, 0, Q::from(p));
        m.set(1, 1, Q::from(1));
        assert_eq!(m.rank_mod_p(), Some(1));
        assert!(m.is_nonsingular());
        m.set(0, 0, Q::new(1, p));
        assert_eq!(m.rank_mod_p(), None);
        assert!(m.is_nonsingular());
        let mut s = RationalMatrix::zeros(2, 2);
        for (i, j, v) in [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)] {
            s.set(i, j, Q::from(v));
        }
        assert_eq!(s.rank_mod_p(), Some(1));
        assert!(!s.is_nonsingular());
    }

    #[test]
    fn echelon_is_canonical() {
        let n = 2;
        let a = SuperPolynomial::parse("x1 + x2", Some(n)).unwrap();
        let b = SuperPolynomial::parse("x1 - x2", Some(n)).unwrap();
        let c = SuperPolynomial::parse("3*x1 + x2", Some(n)).unwrap();
        let one = ReducedBasis::from_elements(n, [&a, &b]);
        let two = ReducedBasis::from_elements(n, [&c, &b, &a]);
        assert_eq!(one, two);
        assert_eq!(one.dim(), 2);
    }

    #[test]
    fn closure_of_small_vandermonde() {
        let d = super_vandermonde(3, &[1]).unwrap();
        let mut ops = OperatorSpec::all_dx(3);
        ops.extend(OperatorSpec::all_dtheta(3));
        let w = span_closure(3, &[d], &ops, None).unwrap();
        assert_eq!(w.dim(), 12);
        let dims = |x, t| w.hilbert().get(&Bidegree::new(x, t)).copied().unwrap_or(0);
        assert_eq!([dims(0, 0), dims(1, 0), dims(2, 0)], [1, 3, 2]);
        assert_eq!([dims(0, 1), dims(1, 1), dims(2, 1)], [2, 3, 1]);
    }

    #[test]
    fn cap_is_enforced() {
        let d = super_vandermonde(3, &[]).unwrap();
        let err = span_closure(3, &[d], &OperatorSpec::all_dx(3), Some(2)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 2, degree: 3 }));
    }

    #[test]
    fn quotient_requires_containment() {
        let n = 2;
        let big = span_closure(n, &[SuperPolynomial::parse("x1", Some(n)).unwrap()], &[], None).unwrap();
        let small = span_closure(n, &[SuperPolynomial::parse("x2", Some(n)).unwrap()], &[], None).unwrap();
        assert!(matches!(quotient_hilbert(&big, &small), Err(Error::ContainmentViolation(_))));
        let q = quotient_hilbert(&sum(&big, &small).unwrap(), &small).unwrap();
        assert_eq!(q.hilbert.values().sum::<usize>(), 1);
    }

    #[test]
    fn complement_of_a_line() {
        let n = 2;
        let s = span_closure(n, &[SuperPolynomial::parse("x1 + x2", Some(n)).unwrap()], &[], None).unwrap();
        let c = orthogonal_complement(&s, Bidegree::new(1, 0));
        assert_eq!(c.elements(), vec![SuperPolynomial::parse("x1 - x2", Some(n)).unwrap()]);
    }

    #[test]
    fn unstable_space_rejected() {
        let n = 2;
        let s = span_closure(n, &[SuperPolynomial::parse("x1", Some(n)).unwrap()], &[], None).unwrap();
        let piece = s.piece(&Bidegree::new(1, 0)).unwrap();
        let err = permutation_matrix(piece, &Perm::adjacent(2, 0)).unwrap_err();
        assert!(matches!(err, Error::StabilityViolation(_)));
    }

    #[test]
    fn determinant_small() {
        let mut m = RationalMatrix::zeros(2, 2);
        m.set(0, 0, Q::from(1));
        m.set(0, 1, Q::from(2));
        m.set(1, 0, Q::from(3));
        m.set(1, 1, Q::from(4));
        assert_eq!(m.determinant(), Some(Q::from(-2)));
        assert!(m.is_nonsingular());
    }
}
