use super::basis::{Basis, SymFunc};
use super::hall_littlewood::hall_littlewood_qprime;
use super::partition::Partition;
use super::qpoly::{q_binomial, q_multinomial, QTPoly};
use super::tableaux::{descents, standard_tableaux};
use crate::error::Result;

fn choose2(m: u32) -> u32 {
    m * m.saturating_sub(1) / 2
}

/// `C_{n,k}` as a sum over standard tableaux with `n` boxes of
/// `q^{maj + C(n−k,2) − (n−k) des} [des; n−k]_q s_shape`.
pub fn c_nk_via_syt(n: u32, k: u32) -> SymFunc {
    let r = n - k;
    let mut out = SymFunc::zero(Basis::Schur);
    for shape in Partition::all(n) {
        let mut coeff = QTPoly::zero();
        for t in standard_tableaux(&shape) {
            let des = descents(&t);
            let d = des.len() as u32;
            if d < r {
                continue;
            }
            let maj: u32 = des.iter().sum();
            let shift = maj + choose2(r) - r * d;
            coeff = &coeff + &q_binomial(d, r).shift(shift, 0);
        }
        out.add_poly_term(shape, coeff);
    }
    out
}

/// `Σ_{λ ⊢ n, ℓ(λ) = k} q^{Σ (i−1)(λ_i − 1)} [k; m_1(λ), …, m_n(λ)]_q ω Q'_λ(x;q)`.
pub fn hl_identity_rhs(n: u32, k: u32) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for lambda in Partition::with_length(n, k as usize) {
        let shift: u32 = lambda.parts().iter().enumerate().map(|(i, &p)| i as u32 * (p - 1)).sum();
        let mults: Vec<u32> = lambda.multiplicities().into_iter().skip(1).collect();
        let coeff = q_multinomial(k, &mults)?.shift(shift, 0);
        let term = hall_littlewood_qprime(&lambda).omega()?.scale_poly(&coeff);
        out = out.try_add(&term)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::qpoly::{q_factorial, q_stirling};

    fn sf(s: &str) -> SymFunc {
        SymFunc::parse(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(c_nk_via_syt(2, 2), sf("s_2 + q*s_{11}"));
        assert_eq!(c_nk_via_syt(3, 2), sf("(1 + q)*s_{21} + (q + q^2)*s_{111}"));
        assert_eq!(c_nk_via_syt(4, 1), sf("s_{1111}"));
    }

    #[test]
    fn hilbert_is_qfactorial_times_stirling() {
        for n in 1..=7 {
            for k in 1..=n {
                let h = c_nk_via_syt(n, k).hilbert().unwrap().to_poly().unwrap();
                assert_eq!(h, &q_factorial(k) * &q_stirling(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn agrees_with_hl_identity() {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(c_nk_via_syt(n, k), hl_identity_rhs(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }
}
