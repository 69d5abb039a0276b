use super::basis::{Basis, SymFunc};
use super::macdonald::modified_macdonald;
use super::partition::Partition;
use super::tableaux::kostka_foulkes;
use crate::error::Result;

/// Modified Hall–Littlewood `Q'_μ(x;q) = Σ_λ K_{λμ}(q) s_λ`, from charge.
pub fn hall_littlewood_qprime(mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for lambda in Partition::all(mu.size()) {
        if lambda.dominates(mu) {
            out.add_poly_term(lambda.clone(), kostka_foulkes(&lambda, mu));
        }
    }
    out
}

/// The same function from the Macdonald side: `H̃_μ(x;0,t)` q-reversed after
/// renaming `t` to `q`, with reversal degree `n(μ)`.
pub fn hall_littlewood_qprime_via_macdonald(mu: &Partition) -> Result<SymFunc> {
    let h = modified_macdonald(mu)?;
    let d = mu.n_stat();
    h.map_poly_coeffs(|c| c.at_q0().swap_qt().rev_q(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Q;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(hall_littlewood_qprime(&p("11")), SymFunc::parse("s_{11} + q*s_2").unwrap());
        assert_eq!(hall_littlewood_qprime(&p("3")), SymFunc::parse("s_3").unwrap());
    }

    #[test]
    fn two_routes_agree() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                assert_eq!(hall_littlewood_qprime(&mu), hall_littlewood_qprime_via_macdonald(&mu).unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn column_gives_coinvariants() {
        // rev_q Q'_{1^n} has total dimension n!
        let q = hall_littlewood_qprime(&Partition::new(vec![1; 4]).unwrap()).rev_q().unwrap();
        let h = q.hilbert().unwrap().to_poly().unwrap();
        assert_eq!(h.eval(&Q::from(1), &Q::from(1)), Q::from(24));
    }
}
