use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Character table of `S_n`, rows indexed by irreducibles and columns by
/// cycle types, both in decreasing lexicographic order.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }
}

/// Removes rim hooks of length `r` from `λ` via beta numbers and returns the
/// remaining shapes with their signs.
fn remove_rim_hooks(lambda: &Partition, r: u32) -> Vec<(Partition, i64)> {
    let len = lambda.length();
    let beta: Vec<i64> = (0..len).map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64).collect();
    let mut out = Vec::new();
    for i in 0..len {
        let target = beta[i] - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(j, &b)| (b - (len - 1 - j) as i64) as u32).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

fn mn(lambda: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.size() == 0 { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (rest, sign) in remove_rim_hooks(lambda, mu[0]) {
        total += sign * mn(&rest, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda} vs {mu}")));
    }
    Ok(character_table(lambda.size()).value(lambda, mu))
}

fn tables() -> &'static RwLock<HashMap<u32, Arc<CharacterTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// The (cached) character table of `S_n`.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return t.clone();
    }
    let partitions = Partition::all(n);
    let mut memo = HashMap::new();
    let values = partitions.iter().map(|l| partitions.iter().map(|m| mn(l, m.parts(), &mut memo)).collect()).collect();
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = Arc::new(CharacterTable { partitions, index, values });
    tables().write().unwrap().entry(n).or_insert(table).clone()
}

/// Multiplicity of each irreducible in a representation with the given
/// character values per cycle type: `m_λ = Σ_μ χ^λ(μ) char(μ) / z_μ`.
pub fn multiplicities_from_characters(n: u32, chars: &HashMap<Partition, Q>) -> Result<Vec<(Partition, u64)>> {
    let table = character_table(n);
    let mut out = Vec::new();
    for lambda in &table.partitions {
        let mut m = Q::from(0);
        for mu in &table.partitions {
            let c = chars.get(mu).ok_or_else(|| Error::SizeMismatch(format!("missing class {mu}")))?;
            m += &(&(c * &Q::from(table.value(lambda, mu))) / &mu.z());
        }
        if !m.is_integer() || m.is_negative() {
            return Err(Error::BadMultiplicity { partition: lambda.to_string(), value: m.to_string() });
        }
        let v =
            m.to_i64().ok_or_else(|| Error::BadMultiplicity { partition: lambda.to_string(), value: m.to_string() })?;
        if v != 0 {
            out.push((lambda.clone(), v as u64));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn s3_table() {
        assert_eq!(irreducible_character(&p("21"), &p("111")).unwrap(), 2);
        assert_eq!(irreducible_character(&p("21"), &p("21")).unwrap(), 0);
        assert_eq!(irreducible_character(&p("21"), &p("3")).unwrap(), -1);
        assert_eq!(irreducible_character(&p("111"), &p("21")).unwrap(), -1);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = character_table(n);
            for mu in &t.partitions {
                for nu in &t.partitions {
                    let s: i64 = t.partitions.iter().map(|l| t.value(l, mu) * t.value(l, nu)).sum();
                    let expect = if mu == nu { mu.z().to_i64().unwrap() } else { 0 };
                    assert_eq!(s, expect, "n={n} {mu} {nu}");
                }
            }
            for l in &t.partitions {
                let ones = Partition::new(vec![1; n as usize]).unwrap();
                assert_eq!(t.value(l, &ones) as u64, l.num_syt());
            }
        }
    }

    #[test]
    fn rejects_non_characters() {
        let mut chars = HashMap::new();
        chars.insert(p("2"), Q::from(0));
        chars.insert(p("11"), Q::from(1));
        assert!(matches!(multiplicities_from_characters(2, &chars), Err(Error::BadMultiplicity { .. })));
    }
}
