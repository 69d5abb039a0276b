//! One line per acceptance criterion. Every criterion enumerates its own
//! parameters and runs the registered checks on them; a criterion passes only
//! if every report passes (skipped counts as a failure here).

use std::time::Instant;

use svand::modules::build_m;
use svand::superspace::super_vandermonde;
use svand::verify::{run_check, CheckReport, Origin, Params, Status};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn run_all(id: &str, grid: impl IntoIterator<Item = Params>) -> Verdict {
    let mut count = 0;
    for p in grid {
        let r = run_check(id, &p).map_err(|e| format!("{id}: {e}"))?;
        require(&r)?;
        count += 1;
    }
    if count == 0 {
        return Err(format!("{id}: empty grid"));
    }
    Ok(format!("{id} ×{count}"))
}

fn require(r: &CheckReport) -> Result<(), String> {
    if r.status == Status::Pass {
        Ok(())
    } else {
        Err(format!(
            "{} {} is {:?}: {}",
            r.check_id,
            serde_json::to_string(&r.params).unwrap(),
            r.status,
            r.diff.clone().unwrap_or_else(|| r.notes.join("; "))
        ))
    }
}

fn join(parts: Vec<Verdict>) -> Verdict {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join(", "))
}

fn nk(max_n: usize) -> Vec<Params> {
    (1..=max_n).flat_map(|n| (1..=n).map(move |k| Params::n(n).with_k(k))).collect()
}

/// Weakly decreasing sequences of length at most `n` with entries at most 3.
fn decreasing(n: usize) -> Vec<Vec<u32>> {
    all_sequences(n).into_iter().filter(|a| a.windows(2).all(|w| w[0] >= w[1])).collect()
}

fn all_sequences(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|p| {
                (0..=3).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn w_grid() -> Vec<Params> {
    (1..=5).flat_map(|n| decreasing(n).into_iter().map(move |a| Params::n(n).with_a(&a))).collect()
}

/// Every `a` with entries ≤ 3 gives `Δ_n(sorted a)`, so the weakly
/// decreasing sequences already cover every W-space.
fn rearrangements_leave_delta_unchanged() -> Verdict {
    let mut count = 0;
    for n in 1..=5 {
        for a in all_sequences(n) {
            let mut sorted = a.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            let (d, e) = (super_vandermonde(n, &a).unwrap(), super_vandermonde(n, &sorted).unwrap());
            if d != e {
                return Err(format!("Δ_{n}({a:?}) differs from Δ_{n}({sorted:?})"));
            }
            count += 1;
        }
    }
    Ok(format!("rearrangement ×{count}"))
}

fn criterion_1() -> Verdict {
    let r = run_check("small_vandermondes", &Params::n(3)).unwrap();
    require(&r)?;
    if r.expected.origin != Origin::Published || r.actual.as_array().map_or(0, Vec::len) != 3 {
        return Err("expected three published expansions".into());
    }
    Ok("three expansions".into())
}

fn criterion_2() -> Verdict {
    run_all("determinant", (1..=4).map(Params::n))
}

fn criterion_3() -> Verdict {
    let mut grid = nk(5);
    grid.push(Params::n(6).with_k(3));
    grid.push(Params::n(6).with_k(4));
    run_all("dimension_hilbert", grid)
}

fn criterion_4() -> Verdict {
    // the Macdonald route runs for every n ≤ 5, which covers n ≤ 4
    for p in nk(4) {
        let r = run_check("frobenius_theorem", &p).unwrap();
        if r.expected.value.get("delta_at_t0").is_none() {
            return Err(format!("Macdonald route missing for {p:?}"));
        }
    }
    run_all("frobenius_theorem", nk(5))
}

fn criterion_5() -> Verdict {
    let grid = [(3, vec![1]), (4, vec![1, 1]), (4, vec![2, 1]), (5, vec![2, 2])];
    let mut reports = Vec::new();
    for (n, a) in grid {
        let r = run_check("frobenius_tables", &Params::n(n).with_a(&a)).unwrap();
        require(&r)?;
        if r.expected.origin != Origin::Published {
            return Err(format!("{n} {a:?}: not a published fixture"));
        }
        reports.push(r);
    }
    Ok(format!("frobenius_tables ×{}", reports.len()))
}

fn criterion_6() -> Verdict {
    join(vec![rearrangements_leave_delta_unchanged(), run_all("duality", w_grid())])
}

fn criterion_7() -> Verdict {
    run_all("poincare_pairing", w_grid())
}

fn criterion_8() -> Verdict {
    let nks = (1..=5usize).flat_map(|n| {
        (1..=n).flat_map(move |k| (k as u32..=n as u32 + 1).map(move |s| Params::n(n).with_k(k).with_s(s)))
    });
    join(vec![run_all("nks_theorem", nks), run_all("nonskip", (1..=6).map(Params::n))])
}

fn criterion_9() -> Verdict {
    run_all("hook_tanisaki", (1..=5).flat_map(|n| (0..n).map(move |r| Params::n(n).with_r(r))))
}

fn criterion_10() -> Verdict {
    let m3 = build_m(3).unwrap().dim();
    if m3 != 16 {
        return Err(format!("dim M_3 = {m3}, expected 16"));
    }
    run_all("positroid", (1..=5).map(Params::n))
}

fn criterion_11() -> Verdict {
    join(vec![
        run_all("annihilation", (1..=5).map(|n| Params::n(n).with_cases(200))),
        run_all("annihilation_constant", nk(5)),
    ])
}

fn criterion_12() -> Verdict {
    let mut out = Vec::new();
    for id in ["operator_relations", "bilinear_form", "leibniz", "equivariance"] {
        let r = run_check(id, &Params::default().with_cases(500)).unwrap();
        require(&r)?;
        if r.actual["cases"].as_u64() < Some(500) {
            return Err(format!("{id}: fewer than 500 cases"));
        }
        out.push(Ok(format!("{id} ({} nontrivial)", r.actual["nontrivial"])));
    }
    join(out)
}

fn criterion_13() -> Verdict {
    let mut tanisaki = Vec::new();
    for (a, lambda) in [([0, 0], [3, 1]), ([1, 0], [3, 1]), ([1, 1], [2, 2])] {
        let r = run_check("tanisaki", &Params::n(4).with_a(&a)).unwrap();
        require(&r)?;
        if r.actual["lambda"] != serde_json::json!(lambda) || r.expected.origin != Origin::Published {
            return Err(format!("tanisaki {a:?}: {}", r.actual["lambda"]));
        }
        tanisaki.push(());
    }
    join(vec![
        run_all("unimodality", w_grid()),
        run_all("double_frobenius", nk(4)),
        run_all("zabrocki_sr", (1..=3).map(Params::n)),
        Ok(format!("tanisaki ×{}", tanisaki.len())),
    ])
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("worked expansions of Δ_3", criterion_1),
        ("determinant consistency", criterion_2),
        ("dimension and Hilbert series", criterion_3),
        ("Frobenius theorem", criterion_4),
        ("published matrices", criterion_5),
        ("duality", criterion_6),
        ("perfect pairing", criterion_7),
        ("(n,k,s) theorem and nonskip", criterion_8),
        ("hook Tanisaki", criterion_9),
        ("positroid module", criterion_10),
        ("annihilation lemmas", criterion_11),
        ("property suites", criterion_12),
        ("conjecture consistency", criterion_13),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match &verdict {
            Ok(detail) => println!("PASS criterion {}: {name} [{detail}] ({secs:.1} s)", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why} ({secs:.1} s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
