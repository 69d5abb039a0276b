//! Seeded randomized suites for the operator identities and the bilinear
//! form. Each case draws its own inputs; the first failing case is reported
//! with its inputs so it can be replayed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::operators::{apply, dtheta, dx, pairing};
use crate::perm::Perm;
use crate::rational::Q;
use crate::superspace::SuperPolynomial;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_CASES: usize = 500;

fn rng_for(seed: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A random superpolynomial in `n` variables with at most `terms` terms,
/// x-degree at most `max_deg`, and θ-degree `theta` (random if `None`).
pub fn random_poly(
    rng: &mut impl Rng,
    n: usize,
    max_deg: u32,
    theta: Option<usize>,
    terms: usize,
) -> Result<SuperPolynomial> {
    let mut f = SuperPolynomial::zero(n);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let mut x = vec![0u32; n];
        for _ in 0..deg {
            x[rng.gen_range(0..n)] += 1;
        }
        let r = theta.unwrap_or_else(|| rng.gen_range(0..=n.min(3)));
        let mut idx: Vec<usize> = (1..=n).collect();
        idx.shuffle(rng);
        let c = Q::from(rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let m = SuperPolynomial::from_exponents(n, c, &x, &idx[..r.min(n)])?;
        f = f.try_add(&m)?;
    }
    Ok(f)
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Result<Perm> {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::from_images(images)
}

fn binom2(r: usize) -> usize {
    r * r.saturating_sub(1) / 2
}

fn theta_degree(f: &SuperPolynomial) -> usize {
    f.terms().next().map_or(0, |(m, _)| m.theta_degree() as usize)
}

/// Result of a randomized suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub cases: usize,
    /// Cases whose identity was nontrivial (both sides nonzero).
    pub nontrivial: usize,
    pub first_failure: Option<String>,
}

fn run(seed: u64, cases: usize, mut case: impl FnMut(&mut ChaCha8Rng) -> Result<Option<bool>>) -> Result<SuiteResult> {
    let mut nontrivial = 0;
    for c in 0..cases {
        let mut rng = rng_for(seed, c);
        match case(&mut rng) {
            Ok(Some(true)) => nontrivial += 1,
            Ok(Some(false)) => {}
            Ok(None) => {
                return Ok(SuiteResult { cases, nontrivial, first_failure: Some(format!("case {c} (seed {seed})")) });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(SuiteResult { cases, nontrivial, first_failure: None })
}

/// `∂_i∂_j = ∂_j∂_i`, `∂_i∂^θ_j = ∂^θ_j∂_i`, `∂^θ_i∂^θ_j = −∂^θ_j∂^θ_i`,
/// `(∂^θ_i)^2 = 0`.
pub fn operator_relations(seed: u64, cases: usize) -> Result<SuiteResult> {
    run(seed, cases, |rng| {
        let n = rng.gen_range(1..=5);
        let f = random_poly(rng, n, 4, None, 4)?;
        let i = rng.gen_range(1..=n);
        let j = rng.gen_range(1..=n);
        let xx = dx(&dx(&f, j)?, i)? == dx(&dx(&f, i)?, j)?;
        let xt = dx(&dtheta(&f, j)?, i)? == dtheta(&dx(&f, i)?, j)?;
        let a = dtheta(&dtheta(&f, j)?, i)?;
        let b = dtheta(&dtheta(&f, i)?, j)?;
        let tt = a.try_add(&b)?.is_zero();
        let sq = dtheta(&dtheta(&f, i)?, i)?.is_zero();
        Ok((xx && xt && tt && sq).then_some(!a.is_zero()))
    })
}

/// `w ∂^θ_i w^{-1} = ∂^θ_{w(i)}` and `w ∂_i w^{-1} = ∂_{w(i)}`.
pub fn equivariance(seed: u64, cases: usize) -> Result<SuiteResult> {
    run(seed, cases, |rng| {
        let n = rng.gen_range(1..=5);
        let f = random_poly(rng, n, 4, None, 4)?;
        let w = random_perm(rng, n)?;
        let i = rng.gen_range(1..=n);
        let wi = w.apply(i - 1) + 1;
        let lhs_t = dtheta(&f, i)?.act(&w)?;
        let lhs_x = dx(&f, i)?.act(&w)?;
        let fw = f.act(&w)?;
        let ok = lhs_t == dtheta(&fw, wi)? && lhs_x == dx(&fw, wi)?;
        Ok(ok.then_some(!lhs_t.is_zero()))
    })
}

/// `∂^θ_i(f g) = ∂^θ_i(f) g + (−1)^r f ∂^θ_i(g)` for `f` of θ-degree `r`.
pub fn leibniz(seed: u64, cases: usize) -> Result<SuiteResult> {
    run(seed, cases, |rng| {
        let n = rng.gen_range(1..=5);
        let r = rng.gen_range(0..=n.min(3));
        let f = random_poly(rng, n, 3, Some(r), 3)?;
        let g = random_poly(rng, n, 3, None, 3)?;
        let i = rng.gen_range(1..=n);
        let lhs = dtheta(&f.try_mul(&g)?, i)?;
        let mut rhs = dtheta(&f, i)?.try_mul(&g)?;
        let sign = Q::from(if r % 2 == 0 { 1 } else { -1 });
        rhs.add_scaled(&sign, &f.try_mul(&dtheta(&g, i)?)?);
        Ok((lhs == rhs).then_some(!lhs.is_zero()))
    })
}

/// Symmetry, graded definiteness, and the adjoint identity
/// `⟨f, (f'·g')·g⟩ = ε ⟨f·g, f'·g'⟩` with
/// `ε = (−1)^{C(s,2) + C(r,2) + C(s−r,2)}`, where `r` and `s` are the θ-degrees
/// of `f` and `g`.
pub fn bilinear_form(seed: u64, cases: usize) -> Result<SuiteResult> {
    run(seed, cases, |rng| {
        let n = rng.gen_range(1..=4);
        // definiteness
        let r0 = rng.gen_range(0..=n);
        let h = random_poly(rng, n, 3, Some(r0), 3)?;
        let hh = pairing(&h, &h)?;
        let want_neg = binom2(r0) % 2 == 1;
        let definite = if h.is_zero() { hh.is_zero() } else { !hh.is_zero() && hh.is_negative() == want_neg };
        // symmetry
        let u = random_poly(rng, n, 3, None, 4)?;
        let v = random_poly(rng, n, 3, None, 4)?;
        let symmetric = pairing(&u, &v)? == pairing(&v, &u)?;
        // adjoint: build f from (f'·g')·g so that both sides are usually nonzero
        let s = rng.gen_range(0..=n);
        let g = random_poly(rng, n, 4, Some(s), 3)?;
        let sp = rng.gen_range(0..=n);
        let gp = random_poly(rng, n, 4, Some(sp), 3)?;
        let rp = rng.gen_range(0..=sp);
        let fp = random_poly(rng, n, 2, Some(rp), 2)?;
        let inner = apply(&fp, &gp)?;
        let full = apply(&inner, &g)?;
        let f = match full.homogeneous_components().into_iter().next() {
            Some((_, c)) => c.try_add(&random_poly(rng, n, 2, Some(theta_degree(&c)), 1)?)?,
            None => {
                let r = rng.gen_range(0..=s);
                random_poly(rng, n, 2, Some(r), 2)?
            }
        };
        if f.is_zero() {
            return Ok((definite && symmetric).then_some(false));
        }
        let r = theta_degree(&f);
        let lhs = pairing(&f, &full)?;
        let rhs = pairing(&apply(&f, &g)?, &inner)?;
        let adjoint = if r > s {
            lhs.is_zero() && rhs.is_zero()
        } else {
            let odd = (binom2(s) + binom2(r) + binom2(s - r)) % 2 == 1;
            lhs == if odd { -rhs.clone() } else { rhs.clone() }
        };
        Ok((definite && symmetric && adjoint).then_some(!lhs.is_zero()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        for suite in [operator_relations, equivariance, leibniz, bilinear_form] {
            let r = suite(7, 60).unwrap();
            assert_eq!(r.first_failure, None);
            assert!(r.nontrivial > 0);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(bilinear_form(3, 40).unwrap(), bilinear_form(3, 40).unwrap());
    }
}
