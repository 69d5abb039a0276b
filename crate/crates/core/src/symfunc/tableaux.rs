use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::partition::Partition;
use super::qpoly::QTPoly;
use crate::rational::Q;

/// A tableau in English notation: rows from top to bottom.
pub type Tableau = Vec<Vec<u32>>;

/// Standard Young tableaux of shape `λ`.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &Partition, cur: &mut Tableau, next: u32, n: u32, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(cur.clone());
            return;
        }
        for r in 0..shape.length() {
            let len = cur[r].len();
            if len < shape.part(r) as usize && (r == 0 || cur[r - 1].len() > len) {
                cur[r].push(next);
                rec(shape, cur, next + 1, n, out);
                cur[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![Vec::new(); shape.length()];
    rec(shape, &mut cur, 1, shape.size(), &mut out);
    out
}

fn row_of(t: &Tableau) -> HashMap<u32, usize> {
    let mut m = HashMap::new();
    for (r, row) in t.iter().enumerate() {
        for &v in row {
            m.insert(v, r);
        }
    }
    m
}

/// Descents of a standard tableau: `i` such that `i + 1` lies in a strictly
/// lower row than `i`.
pub fn descents(t: &Tableau) -> Vec<u32> {
    let rows = row_of(t);
    let n = rows.len() as u32;
    (1..n).filter(|i| rows[&(i + 1)] > rows[i]).collect()
}

pub fn maj(t: &Tableau) -> u32 {
    descents(t).iter().sum()
}

/// Semistandard tableaux of shape `λ` and content `μ` (a composition).
pub fn semistandard_tableaux(shape: &Partition, content: &[u32]) -> Vec<Tableau> {
    fn strips(
        shape: &Partition,
        cur: &[usize],
        size: u32,
        row: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == cur.len() {
            if size == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let upper = if row == 0 { shape.part(0) as usize } else { (shape.part(row) as usize).min(cur[row - 1]) };
        let lo = cur[row];
        for new_len in lo..=upper.max(lo) {
            let add = (new_len - lo) as u32;
            if add > size {
                break;
            }
            acc.push(new_len);
            strips(shape, cur, size - add, row + 1, acc, out);
            acc.pop();
        }
    }
    fn rec(shape: &Partition, content: &[u32], v: usize, t: &mut Tableau, out: &mut Vec<Tableau>) {
        if v == content.len() {
            if t.iter().enumerate().all(|(r, row)| row.len() == shape.part(r) as usize) {
                out.push(t.clone());
            }
            return;
        }
        let cur: Vec<usize> = t.iter().map(Vec::len).collect();
        let mut options = Vec::new();
        strips(shape, &cur, content[v], 0, &mut Vec::new(), &mut options);
        for lens in options {
            let saved = t.clone();
            for (r, &l) in lens.iter().enumerate() {
                while t[r].len() < l {
                    t[r].push(v as u32 + 1);
                }
            }
            rec(shape, content, v + 1, t, out);
            *t = saved;
        }
    }
    if shape.size() != content.iter().sum::<u32>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(shape, content, 0, &mut vec![Vec::new(); shape.length()], &mut out);
    out
}

/// Kostka matrix `K_{λμ}` for partitions of `n`, cached.
pub fn kostka_table(n: u32) -> Arc<HashMap<(Partition, Partition), u64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<HashMap<(Partition, Partition), u64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let parts = Partition::all(n);
    let mut table = HashMap::new();
    for l in &parts {
        for m in &parts {
            let k = if l.dominates(m) { semistandard_tableaux(l, m.parts()).len() as u64 } else { 0 };
            table.insert((l.clone(), m.clone()), k);
        }
    }
    let table = Arc::new(table);
    cache.write().unwrap().entry(n).or_insert(table).clone()
}

pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    kostka_table(lambda.size())[&(lambda.clone(), mu.clone())]
}

/// Reading word: rows from bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<u32> {
    t.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// Lascoux–Schützenberger charge of a word with partition content.
pub fn charge(word: &[u32]) -> u32 {
    let mut live: Vec<Option<u32>> = word.iter().map(|&v| Some(v)).collect();
    let mut total = 0;
    while live.iter().any(Option::is_some) {
        // extract a standard subword by cyclic right-to-left scans
        let max_letter = live.iter().flatten().copied().max().unwrap();
        let mut pos = live.len();
        let mut index = 0;
        for letter in 1..=max_letter {
            let left = (0..pos).rev().find(|&i| live[i] == Some(letter));
            let found = match left {
                Some(i) => i,
                None => {
                    let Some(i) = (pos..live.len()).rev().find(|&i| live[i] == Some(letter)) else {
                        break;
                    };
                    if letter > 1 {
                        index += 1;
                    }
                    i
                }
            };
            total += index;
            live[found] = None;
            pos = found;
        }
    }
    total
}

/// Kostka–Foulkes polynomial `K_{λμ}(q) = Σ_T q^{charge(T)}`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> QTPoly {
    let mut p = QTPoly::zero();
    for t in semistandard_tableaux(lambda, mu.parts()) {
        p.add_term(charge(&reading_word(&t)), 0, Q::from(1));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn tableau_counts_match_hook_formula() {
        for n in 1..=7 {
            for l in Partition::all(n) {
                assert_eq!(standard_tableaux(&l).len() as u64, l.num_syt());
                let ones = vec![1; n as usize];
                assert_eq!(semistandard_tableaux(&l, &ones).len() as u64, l.num_syt());
            }
        }
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&p("21"), &p("111")), 2);
        assert_eq!(kostka(&p("3"), &p("21")), 1);
        assert_eq!(kostka(&p("21"), &p("3")), 0);
        assert_eq!(kostka(&p("32"), &p("221")), 2);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
        assert_eq!(kostka_foulkes(&p("21"), &p("111")), QTPoly::from_q_coeffs(&[0, 1, 1]));
    }

    #[test]
    fn kostka_foulkes_degree_and_value_at_one() {
        for n in 1..=6 {
            for l in Partition::all(n) {
                for m in Partition::all(n) {
                    let k = kostka_foulkes(&l, &m);
                    assert_eq!(k.eval(&Q::from(1), &Q::from(1)), Q::from(kostka(&l, &m) as i64));
                    if !k.is_zero() {
                        assert_eq!(k.q_degree(), m.n_stat() - l.n_stat());
                    }
                }
            }
        }
    }
}
