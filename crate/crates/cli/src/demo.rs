//! Bundled runs. Each row carries an `ok` column; any false row makes the
//! command exit with [`crate::EXIT_DEMO_FAILED`].

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};
use sptopo::completion::{coset_n_divisible, psi_inverse};
use sptopo::spdomain::{degree_report, dull_degree, sharp_degree, sp_factor};
use sptopo::{Clopen, CosetDivisibility, DegreeKind, EpSequence, Ordinal, Space, StepFunction};

use crate::{obj, DemoName, Outcome};

pub(crate) fn run(name: DemoName) -> Outcome {
    let (rows, extra) = match name {
        DemoName::SharpDegrees => (sharp_degrees(), vec![]),
        DemoName::DullDegrees => (dull_degrees(), vec![]),
        DemoName::Factorization => (factorization(), vec![]),
        DemoName::Completion => completion(),
    };
    let passed = rows.iter().all(|r| r["ok"] == json!(true)) && extra.iter().all(|(_, ok)| *ok);
    let mut result = obj(vec![("rows", Value::Array(rows))]);
    for (key, ok) in extra {
        result.insert(key, json!(ok));
    }
    result.insert("passed".into(), json!(passed));
    Outcome { inputs: vec![], result, passed }
}

fn o(s: &str) -> Ordinal {
    s.parse().expect("demo ordinal")
}

/// `ord(w^alpha * n)`, realising sharp degree `alpha` with `n` points in
/// the last stage. For `alpha = 0` that space has `n + 1` points, so the
/// finite space `ord(n - 1)` is used instead.
fn sharp_example(alpha: &Ordinal, n: u64) -> Space {
    if alpha.is_zero() {
        Space::ordinal(Ordinal::finite(n - 1))
    } else {
        Space::ordinal(Ordinal::omega_pow(alpha.clone()).mul(&Ordinal::finite(n)))
    }
}

fn sharp_degrees() -> Vec<Value> {
    let mut rows = Vec::new();
    for alpha in ["0", "1", "2", "3", "w", "w+2", "w^2"].map(o) {
        for n in [1u64, 2, 3, 5] {
            let x = sharp_example(&alpha, n);
            let degree = sharp_degree(&x);
            let last = x.derived_space(&alpha).and_then(|d| d.finite_points()).map(|p| p.len() as u64);
            let ok = degree.as_ref() == Some(&alpha) && last == Some(n);
            rows.push(json!({
                "alpha": alpha.to_string(),
                "n": n,
                "space": x.to_string(),
                "rank": x.cb_rank().rank.to_string(),
                "degree": degree.map_or("none".into(), |d| d.to_string()),
                "count": last,
                "ok": ok,
            }));
        }
    }
    rows
}

fn dull_degrees() -> Vec<Value> {
    let mut cases = vec![(Space::cantor(), Ordinal::zero())];
    for alpha in 0..=2u64 {
        for n in [1u64, 2] {
            let top = Ordinal::monomial(Ordinal::finite(alpha), n);
            cases.push((Space::sum(top), Ordinal::finite(alpha + 1)));
        }
    }
    cases
        .into_iter()
        .map(|(x, expected)| {
            let report = degree_report(&x);
            let degree = dull_degree(&x);
            let ok = report.kind == DegreeKind::Dull && degree.as_ref() == Some(&expected);
            json!({
                "space": x.to_string(),
                "expected": expected.to_string(),
                "degree": degree.map_or("none".into(), |d| d.to_string()),
                "rank": report.rank.to_string(),
                "ok": ok,
            })
        })
        .collect()
}

/// All descending chains of nonempty subsets (as bitmasks) whose indicator
/// functions sum to `target`.
fn chains(target: &[u32]) -> Vec<Vec<u32>> {
    fn rec(target: &[u32], parent: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if target.iter().all(|&v| v == 0) {
            out.push(acc.clone());
            return;
        }
        let mut sub = parent;
        while sub != 0 {
            if (0..target.len()).all(|i| sub & (1 << i) == 0 || target[i] > 0) {
                let next: Vec<u32> = (0..target.len()).map(|i| target[i] - (sub >> i & 1)).collect();
                acc.push(sub);
                rec(&next, sub, acc, out);
                acc.pop();
            }
            sub = (sub - 1) & parent;
        }
    }
    let mut out = Vec::new();
    if target.iter().any(|&v| v > 0) {
        rec(target, (1 << target.len()) - 1, &mut Vec::new(), &mut out);
    }
    out
}

fn factorization() -> Vec<Value> {
    (1..=4u32)
        .map(|k| {
            let x = Space::discrete(u64::from(k)).expect("nonempty");
            let points = x.finite_points().expect("finite");
            let singletons: Vec<Clopen> =
                points.iter().map(|p| Clopen::singleton(p, &x).expect("point of x")).collect();
            let (mut functions, mut unique, mut agree) = (0u32, 0u32, 0u32);
            for code in 1..4u32.pow(k) {
                let values: Vec<u32> = (0..k).map(|i| code / 4u32.pow(i) % 4).collect();
                let pieces = singletons.iter().cloned().zip(values.iter().map(|&v| BigInt::from(v))).collect();
                let f = StepFunction::new(&x, pieces).expect("partition");
                let found = chains(&values);
                functions += 1;
                if found.len() != 1 {
                    continue;
                }
                unique += 1;
                let Ok(fac) = sp_factor(&f) else { continue };
                let masks: Vec<u32> = fac
                    .chain()
                    .iter()
                    .map(|a| (0..k).filter(|&i| a.contains(&points[i as usize]) == Ok(true)).fold(0, |m, i| m | 1 << i))
                    .collect();
                if masks == found[0] {
                    agree += 1;
                }
            }
            json!({
                "points": k,
                "functions": functions,
                "unique": unique,
                "agree": agree,
                "ok": unique == functions && agree == functions,
            })
        })
        .collect()
}

fn completion() -> (Vec<Value>, Vec<(String, bool)>) {
    let g = EpSequence::from_i64(&[], &[1, 0]).expect("nonempty period");
    let rows = (2..=10i64)
        .map(|n| {
            let nn = BigInt::from(n);
            match coset_n_divisible(&g, &nn) {
                Ok(CosetDivisibility::No { k1, k2 }) => {
                    let (r1, r2) = (g.eval(k1).mod_floor(&nn), g.eval(k2).mod_floor(&nn));
                    json!({
                        "n": n,
                        "divisible": false,
                        "k1": k1,
                        "k2": k2,
                        "residues": format!("{r1} != {r2}"),
                        "ok": r1 != r2,
                    })
                }
                _ => json!({"n": n, "divisible": true, "k1": null, "k2": null, "residues": "", "ok": false}),
            }
        })
        .collect();
    // torsion-freeness over every small sequence: prefix <= 1, period <= 2,
    // entries in -2..=2, n in 2..=7
    let vals = -2..=2i64;
    let mut shapes: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for a in vals.clone() {
        shapes.push((vec![], vec![a]));
        for b in vals.clone() {
            shapes.push((vec![a], vec![b]));
            shapes.push((vec![], vec![a, b]));
            for c in vals.clone() {
                shapes.push((vec![a], vec![b, c]));
            }
        }
    }
    let torsion_free = shapes.iter().all(|(pre, per)| {
        let f = EpSequence::from_i64(pre, per).expect("nonempty period");
        (2..=7).all(|n| psi_inverse(&f.scale(n)).is_none() || psi_inverse(&f).is_some())
    });
    (rows, vec![("torsion_free".into(), torsion_free)])
}
