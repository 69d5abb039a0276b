use std::collections::BTreeSet;

/// Distinct shuffles of two sequences.
fn shuffles(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    fn rec(a: &[u32], b: &[u32], cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if a.is_empty() && b.is_empty() {
            out.insert(cur.clone());
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            cur.push(x);
            rec(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&x, rest)) = b.split_first() {
            cur.push(x);
            rec(a, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(a, b, &mut Vec::new(), &mut out);
    // lexicographically decreasing, the order used when listing them by hand
    out.into_iter().rev().collect()
}

fn countdown(k: u32) -> Vec<u32> {
    (0..k).rev().collect()
}

/// `(n,k,s)`-staircases: shuffles of `(s−1)^{n−k}` with `(k−1, …, 1, 0)`.
/// With `s = None` this is the `(n,k)` family (`s = k`).
pub fn staircases(n: u32, k: u32, s: Option<u32>) -> Vec<Vec<u32>> {
    if k > n || k == 0 && n > 0 {
        return Vec::new();
    }
    let s = s.unwrap_or(k);
    let top = vec![s.saturating_sub(1); (n - k) as usize];
    shuffles(&top, &countdown(k))
}

/// `(n,k)`-hook staircases: shuffles of `(k−1, …, 1, 0)` with `0^{n−k}`.
pub fn hook_staircases(n: u32, k: u32) -> Vec<Vec<u32>> {
    if k > n || k == 0 && n > 0 {
        return Vec::new();
    }
    shuffles(&countdown(k), &vec![0; (n - k) as usize])
}

fn below_some(seq: &[u32], family: &[Vec<u32>]) -> bool {
    family.iter().any(|b| b.len() == seq.len() && seq.iter().zip(b).all(|(c, b)| c <= b))
}

pub fn is_substaircase(seq: &[u32], n: u32, k: u32, s: Option<u32>) -> bool {
    seq.len() == n as usize && below_some(seq, &staircases(n, k, s))
}

pub fn is_hook_substaircase(seq: &[u32], n: u32, k: u32) -> bool {
    seq.len() == n as usize && below_some(seq, &hook_staircases(n, k))
}

/// Every sequence lying componentwise below some member of `family`.
fn downset(family: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for top in family {
        let mut cur = vec![0u32; top.len()];
        loop {
            out.insert(cur.clone());
            // odometer step bounded by `top`
            let mut i = 0;
            while i < cur.len() && cur[i] == top[i] {
                cur[i] = 0;
                i += 1;
            }
            if i == cur.len() {
                break;
            }
            cur[i] += 1;
        }
    }
    out.into_iter().collect()
}

pub fn substaircases(n: u32, k: u32, s: Option<u32>) -> Vec<Vec<u32>> {
    downset(&staircases(n, k, s))
}

pub fn hook_substaircases(n: u32, k: u32) -> Vec<Vec<u32>> {
    downset(&hook_staircases(n, k))
}

/// Skip sequence `γ(S)` of a subset `S ⊆ [n]` (1-based, increasing).
pub fn skip_sequence(set: &[u32], n: u32) -> Vec<u32> {
    let mut g = vec![0; n as usize];
    for (j, &i) in set.iter().enumerate() {
        g[i as usize - 1] = i - j as u32;
    }
    g
}

/// `(n,k,s)`-nonskip: all entries below `s` and no reversed skip sequence
/// `γ(S)*` with `|S| = n − k + 1` lies componentwise below `seq`.
pub fn nonskip(seq: &[u32], n: u32, k: u32, s: u32) -> bool {
    if seq.len() != n as usize || seq.iter().any(|&c| c >= s) {
        return false;
    }
    let size = n + 1 - k;
    if size > n {
        return true;
    }
    fn subsets(n: u32, size: u32, start: u32, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if cur.len() as u32 == size {
            return f(cur);
        }
        for i in start..=n {
            cur.push(i);
            let stop = subsets(n, size, i + 1, cur, f);
            cur.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let found = subsets(n, size, 1, &mut Vec::new(), &mut |set| {
        let g = skip_sequence(set, n);
        g.iter().rev().zip(seq).all(|(g, c)| g <= c)
    });
    !found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Q;
    use crate::symfunc::qpoly::q_stirling;

    #[test]
    fn listed_examples() {
        let s53 = staircases(5, 3, None);
        assert_eq!(
            s53,
            vec![
                vec![2, 2, 2, 1, 0],
                vec![2, 2, 1, 2, 0],
                vec![2, 2, 1, 0, 2],
                vec![2, 1, 2, 2, 0],
                vec![2, 1, 2, 0, 2],
                vec![2, 1, 0, 2, 2],
            ]
        );
        assert!(is_substaircase(&[2, 0, 2, 1, 0], 5, 3, None));
        let s426 = staircases(4, 2, Some(6));
        assert_eq!(s426.len(), 6);
        for want in [[5, 5, 1, 0], [5, 1, 5, 0], [5, 1, 0, 5], [1, 5, 5, 0], [1, 5, 0, 5], [1, 0, 5, 5]] {
            assert!(s426.contains(&want.to_vec()));
        }
        let h53 = hook_staircases(5, 3);
        assert_eq!(h53.len(), 6);
        assert!(h53.contains(&vec![0, 0, 2, 1, 0]));
    }

    #[test]
    fn substaircase_count() {
        for n in 1..=7u32 {
            for k in 1..=n {
                let fact: i64 = (1..=k as i64).product();
                let stir = q_stirling(n, k).eval(&Q::from(1), &Q::from(1));
                assert_eq!(Q::from(substaircases(n, k, None).len() as i64), stir * Q::from(fact));
            }
        }
    }

    #[test]
    fn nonskip_matches_substaircase_small() {
        for n in 1..=4u32 {
            for k in 1..=n {
                for s in k..=n + 1 {
                    let subs: BTreeSet<Vec<u32>> = substaircases(n, k, Some(s)).into_iter().collect();
                    let total = (s as usize).pow(n);
                    for code in 0..total {
                        let seq: Vec<u32> = (0..n).map(|i| (code / (s as usize).pow(i)) as u32 % s).collect();
                        assert_eq!(nonskip(&seq, n, k, s), subs.contains(&seq), "{seq:?} n={n} k={k} s={s}");
                    }
                }
            }
        }
    }
}
