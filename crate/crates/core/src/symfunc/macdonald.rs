use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::basis::{Basis, SymFunc};
use super::partition::Partition;
use super::qpoly::QTPoly;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Cell data of a diagram in French notation: `rows[i]` has `μ_{i+1}` cells,
/// row 0 at the bottom.
struct Diagram {
    /// reading order: rows top to bottom, each left to right
    cells: Vec<(usize, usize)>,
    /// index of the cell directly below, if any
    south: Vec<Option<usize>>,
    arm: Vec<u32>,
    leg: Vec<u32>,
    /// attacking pairs `(u, v)` with `u` read before `v`
    attacking: Vec<(usize, usize)>,
}

impl Diagram {
    fn new(mu: &Partition) -> Diagram {
        let conj = mu.conjugate();
        let mut cells = Vec::new();
        for r in (0..mu.length()).rev() {
            for c in 0..mu.part(r) as usize {
                cells.push((r, c));
            }
        }
        let pos: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let south = cells.iter().map(|&(r, c)| if r == 0 { None } else { Some(pos[&(r - 1, c)]) }).collect();
        let arm = cells.iter().map(|&(r, c)| mu.part(r) - c as u32 - 1).collect();
        let leg = cells.iter().map(|&(r, c)| conj.part(c) - r as u32 - 1).collect();
        let mut attacking = Vec::new();
        for (i, &(r1, c1)) in cells.iter().enumerate() {
            for (j, &(r2, c2)) in cells.iter().enumerate().skip(i + 1) {
                if r1 == r2 || (r2 + 1 == r1 && c2 < c1) {
                    attacking.push((i, j));
                }
            }
        }
        Diagram { cells, south, arm, leg, attacking }
    }

    /// `(inv, maj)` of a filling listed in reading order.
    fn stats(&self, filling: &[u32]) -> (u32, u32) {
        let mut maj = 0;
        let mut arm_sum = 0;
        for (u, s) in self.south.iter().enumerate() {
            if let Some(s) = *s {
                if filling[u] > filling[s] {
                    maj += self.leg[u] + 1;
                    arm_sum += self.arm[u];
                }
            }
        }
        let inversions = self.attacking.iter().filter(|&&(u, v)| filling[u] > filling[v]).count() as u32;
        (inversions - arm_sum, maj)
    }
}

/// `(inv, maj)` of a filling of `μ` given row by row from the bottom row up
/// (each row left to right).
pub fn filling_stats(mu: &Partition, rows: &[Vec<u32>]) -> Result<(u32, u32)> {
    let d = Diagram::new(mu);
    let mut flat = Vec::with_capacity(d.cells.len());
    for &(r, c) in &d.cells {
        let v =
            rows.get(r).and_then(|row| row.get(c)).ok_or(Error::SizeMismatch(format!("filling does not fit {mu}")))?;
        flat.push(*v);
    }
    if rows.len() != mu.length() || rows.iter().enumerate().any(|(r, row)| row.len() != mu.part(r) as usize) {
        return Err(Error::SizeMismatch(format!("filling does not fit {mu}")));
    }
    Ok(d.stats(&flat))
}

/// Coefficient of `x^ν` in `H̃_μ`: the sum of `q^inv t^maj` over fillings
/// with content `ν`.
fn monomial_coefficient(d: &Diagram, content: &[u32]) -> QTPoly {
    fn rec(d: &Diagram, counts: &mut [u32], filling: &mut Vec<u32>, acc: &mut HashMap<(u32, u32), i64>) {
        if filling.len() == d.cells.len() {
            *acc.entry(d.stats(filling)).or_insert(0) += 1;
            return;
        }
        for v in 0..counts.len() {
            if counts[v] > 0 {
                counts[v] -= 1;
                filling.push(v as u32 + 1);
                rec(d, counts, filling, acc);
                filling.pop();
                counts[v] += 1;
            }
        }
    }
    let mut acc = HashMap::new();
    rec(d, &mut content.to_vec(), &mut Vec::new(), &mut acc);
    let mut p = QTPoly::zero();
    for ((a, b), c) in acc {
        p.add_term(a, b, Q::from(c));
    }
    p
}

fn cache() -> &'static RwLock<HashMap<Partition, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Modified Macdonald polynomial `H̃_μ(x;q,t)` in the Schur basis, from the
/// inv/maj filling formula. Memoized per `μ`.
pub fn modified_macdonald(mu: &Partition) -> Result<Arc<SymFunc>> {
    if let Some(h) = cache().read().unwrap().get(mu) {
        return Ok(h.clone());
    }
    let d = Diagram::new(mu);
    let mut m = SymFunc::zero(Basis::Monomial);
    for nu in Partition::all(mu.size()) {
        m.add_poly_term(nu.clone(), monomial_coefficient(&d, nu.parts()));
    }
    let s = m.to_schur()?;
    for (lambda, c) in s.terms() {
        let p = c.to_poly()?;
        if !p.has_nonnegative_integer_coeffs() {
            return Err(Error::NotPolynomial(format!("coefficient of s_{lambda} in H̃_{mu}: {p}")));
        }
    }
    let s = Arc::new(s);
    Ok(cache().write().unwrap().entry(mu.clone()).or_insert(s).clone())
}

/// Cells of `B_μ` as exponent pairs `(i, j)` of `q^i t^j` with `i < μ_{j+1}`.
pub fn b_cells(mu: &Partition) -> Vec<(u32, u32)> {
    mu.parts().iter().enumerate().flat_map(|(j, &p)| (0..p).map(move |i| (i, j as u32))).collect()
}

/// `B_μ(q,t) = Σ q^i t^j`.
pub fn b_lambda(mu: &Partition) -> QTPoly {
    let mut p = QTPoly::zero();
    for (i, j) in b_cells(mu) {
        p.add_term(i, j, Q::from(1));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn sf(s: &str) -> SymFunc {
        SymFunc::parse(s).unwrap()
    }

    #[test]
    fn two_cells() {
        assert_eq!(*modified_macdonald(&p("2")).unwrap(), sf("s_2 + q*s_{11}"));
        assert_eq!(*modified_macdonald(&p("11")).unwrap(), sf("s_2 + t*s_{11}"));
        assert_eq!(*modified_macdonald(&p("1")).unwrap(), sf("s_1"));
    }

    #[test]
    fn three_cells() {
        assert_eq!(*modified_macdonald(&p("21")).unwrap(), sf("s_3 + (q + t)*s_{21} + q*t*s_{111}"));
        assert_eq!(*modified_macdonald(&p("3")).unwrap(), sf("s_3 + (q + q^2)*s_{21} + q^3*s_{111}"));
    }

    #[test]
    fn qt_symmetry() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                let h = modified_macdonald(&mu).unwrap();
                let hc = modified_macdonald(&mu.conjugate()).unwrap();
                assert_eq!(h.swap_qt().unwrap(), *hc, "{mu}");
            }
        }
    }

    #[test]
    fn q_t_one_gives_h1_power() {
        // H̃_μ(x;1,1) = h_1^n = Σ f^λ s_λ
        for mu in Partition::all(4) {
            let h = modified_macdonald(&mu).unwrap();
            for (lambda, c) in h.terms() {
                let v = c.to_poly().unwrap().eval(&Q::from(1), &Q::from(1));
                assert_eq!(v, Q::from(lambda.num_syt() as i64));
            }
        }
    }

    #[test]
    fn b_lambda_size() {
        assert_eq!(b_lambda(&p("21")).to_string(), "1 + t + q");
        assert_eq!(b_cells(&p("322")).len(), 7);
    }
}
