//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every criterion reports even when an earlier one fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::lemmas::{check_picture, check_rw_roundtrip, check_route_independence, check_tableau};
use common::*;
use hookkron::hook_rule::{counts, pw_m};
use hookkron::oracle::{character_table, exterior_multiplicity, kronecker};
use hookkron::pictures::{picture_to_rw, rw_to_picture};
use hookkron::tableaux::row_reading;
use hookkron::{
    hook_hook_multiplicity, multiplicity_exterior, multiplicity_hook, w_m_via_lr, Balance, PartialTableau, Partition,
    Picture,
};

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> String,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criterion_1() -> String {
    let (lam, mu) = (p("5,3,1,1"), p("4,3,3"));
    let all = pw_m(&lam, &mu, 6).unwrap();
    assert_eq!(all.len(), 7);
    let balance: Vec<Balance> = all.iter().map(|t| t.balance()).collect();
    let cocorners: Vec<_> = balance.iter().filter_map(|b| if let Balance::Cocorner(z) = b { Some(*z) } else { None }).collect();
    // corners are named by their transposes, the cells the deletion lands on in λ/ζ
    let mut corners: Vec<_> =
        balance.iter().filter_map(|b| if let Balance::Corner(v) = b { Some(v.transpose()) } else { None }).collect();
    corners.sort();
    assert_eq!(cocorners, [c(1, 3), c(1, 3)]);
    assert_eq!(corners, [c(1, 3), c(1, 3), c(1, 3), c(1, 3), c(1, 4)]);
    assert_eq!(multiplicity_hook(&lam, &mu, 6).unwrap(), 2);
    assert_eq!(multiplicity_hook(&lam, &mu, 5).unwrap(), 5);
    "|PW6| = 7, |PH6| = 2, |PHc6| = 5, h6 = 2, h5 = 5".into()
}

fn example_t() -> PartialTableau {
    PartialTableau::from_rows(shape("5,5,4,3", "4,3,2"), vec![vec![6], vec![8, 9], vec![3, 11], vec![1, 5, 10]]).unwrap()
}

fn criterion_2() -> String {
    let t = example_t();
    let route = t.bump_route(7).unwrap();
    assert_eq!(route.cells, [c(4, 2), c(3, 3), c(2, 3)]);
    let e = t.insert(7).unwrap();
    assert_eq!(
        serde_json::to_string(&e).unwrap(),
        r#"{"outer":[5,5,4,3],"inner":[4,2,2],"entries":[[4,1,1],[4,2,7],[4,3,10],[3,3,5],[3,4,11],[2,3,3],[2,4,8],[2,5,9],[1,5,6]]}"#
    );
    let (f, b) = t.delete(c(3, 3)).unwrap();
    assert_eq!(
        serde_json::to_string(&f).unwrap(),
        r#"{"outer":[5,5,4,3],"inner":[4,3,3],"entries":[[4,1,1],[4,2,3],[4,3,10],[3,4,11],[2,4,8],[2,5,9],[1,5,6]]}"#
    );
    assert_eq!(b, 5);
    "route (4,2),(3,3),(2,3); E7 T and F(3,3) T match; output 5".into()
}

type Arrow = ((usize, usize), (usize, usize));

fn picture(source: (&str, &str), target: (&str, &str), pairs: &[Arrow]) -> Picture {
    Picture::new(
        shape(source.0, source.1),
        shape(target.0, target.1),
        pairs.iter().map(|&((a, b), (x, y))| (c(a, b), c(x, y))),
    )
    .unwrap()
}

fn criterion_3() -> String {
    let r = row_reading(&shape("5,5,4,2,1", "3,2,1"));
    let target = shape("5,5,4,2,1", "3,3,2,1");
    let lam = rw_to_picture(&example_t(), &target, &r).unwrap();
    let want = picture(
        ("5,5,4,3", "4,3,2"),
        ("5,5,4,2,1", "3,3,2,1"),
        &[((4, 1), (5, 1)), ((4, 2), (3, 3)), ((4, 3), (1, 4)), ((3, 3), (4, 2)), ((3, 4), (1, 5)), ((2, 4), (2, 4)), ((2, 5), (2, 5)), ((1, 5), (3, 4))],
    );
    assert_eq!(lam, want);
    assert_eq!(lam.bump_destination(c(2, 3)).unwrap(), c(2, 3));
    let e = lam.insert(c(2, 3)).unwrap();
    let want_e = picture(
        ("5,5,4,3", "4,2,2"),
        ("5,5,4,2,1", "3,2,2,1"),
        &[
            ((4, 1), (5, 1)),
            ((4, 2), (2, 3)),
            ((4, 3), (1, 4)),
            ((3, 3), (3, 3)),
            ((3, 4), (1, 5)),
            ((2, 3), (4, 2)),
            ((2, 4), (2, 4)),
            ((2, 5), (2, 5)),
            ((1, 5), (3, 4)),
        ],
    );
    assert_eq!(e, want_e);
    assert_eq!(picture_to_rw(&e, &r).unwrap(), example_t().insert(7).unwrap());
    let (f, w) = lam.delete(c(3, 3)).unwrap();
    assert_eq!(w, c(3, 3));
    let want_f = picture(
        ("5,5,4,3", "4,3,3"),
        ("5,5,4,2,1", "3,3,3,1"),
        &[((4, 1), (5, 1)), ((4, 2), (4, 2)), ((4, 3), (1, 4)), ((3, 4), (1, 5)), ((2, 4), (2, 4)), ((2, 5), (2, 5)), ((1, 5), (3, 4))],
    );
    assert_eq!(f, want_f);
    "Λ recovered from T; E(2,3) Λ and F(3,3) Λ match; (2,3) -> (2,3), (3,3) -> (3,3)".into()
}

fn criterion_4() -> String {
    let mut triples = 0;
    let mut timings = Vec::new();
    for n in 4..=7 {
        let start = Instant::now();
        let all = Partition::all(n);
        for lam in &all {
            for mu in &all {
                for m in 0..n {
                    let row = counts(lam, mu, m).unwrap();
                    let hook = Partition::hook(n, m).unwrap();
                    assert_eq!(row.ph as u64, kronecker(lam, &hook, mu).unwrap(), "PH {lam} {mu} {m}");
                    let ext = exterior_multiplicity(lam, mu, m).unwrap();
                    assert_eq!(row.pw as u64, ext, "PW {lam} {mu} {m}");
                    assert_eq!(w_m_via_lr(lam, mu, m).unwrap(), ext, "LR {lam} {mu} {m}");
                    triples += 1;
                }
            }
        }
        timings.push(format!("n={n} {:.1}s", start.elapsed().as_secs_f64()));
    }
    format!("{triples} triples exact, single thread ({})", timings.join(", "))
}

fn criterion_5() -> String {
    let mut pictures = 0;
    for n in 1..=6 {
        let all = Partition::all(n);
        for lam in &all {
            for mu in &all {
                let mut ph = vec![0usize; n + 1];
                let mut phc = vec![0usize; n + 1];
                for m in 0..=n {
                    for t in pw_m(lam, mu, m).unwrap() {
                        pictures += 1;
                        match t.balance() {
                            Balance::Cocorner(_) => {
                                ph[m] += 1;
                                let s = t.step_e().unwrap();
                                assert_eq!(s.size(), m + 1);
                                assert!(matches!(s.balance(), Balance::Corner(_)));
                                assert_eq!(s.step_f().unwrap(), t);
                            }
                            Balance::Corner(_) => {
                                phc[m] += 1;
                                let s = t.step_f().unwrap();
                                assert!(matches!(s.balance(), Balance::Cocorner(_)));
                                assert_eq!(s.step_e().unwrap(), t);
                            }
                            b => panic!("{b:?} on {lam} {mu} m={m}\n{}", t.picture),
                        }
                    }
                }
                assert_eq!(phc[0], 0);
                assert_eq!(ph[n], 0);
                for m in 0..n {
                    assert_eq!(ph[m], phc[m + 1], "{lam} {mu} {m}");
                }
            }
        }
    }
    format!("{pictures} pictures, each with exactly one balance feature; steps inverse")
}

fn criterion_6() -> String {
    let mut pairs = 0;
    for n in 1..=7 {
        let all = Partition::all(n);
        for lam in &all {
            for mu in &all {
                let w: Vec<usize> = (0..=n).map(|m| multiplicity_exterior(lam, mu, m).unwrap()).collect();
                let h: Vec<usize> = (0..n).map(|m| multiplicity_hook(lam, mu, m).unwrap()).collect();
                assert_eq!(w[0], h[0]);
                for m in 1..n {
                    assert_eq!(w[m], h[m - 1] + h[m], "{lam} {mu} {m}");
                }
                assert_eq!(w[n], h[n - 1]);
                #[allow(clippy::needless_range_loop)]
                for m in 0..n {
                    let alt: i64 = (0..=m).map(|i| if (m - i) % 2 == 0 { w[i] as i64 } else { -(w[i] as i64) }).sum();
                    assert_eq!(alt, h[m] as i64, "{lam} {mu} {m}");
                    let hook = Partition::hook(n, m).unwrap();
                    let alt_oracle: i64 = (0..=m)
                        .map(|i| {
                            let v = exterior_multiplicity(lam, mu, i).unwrap() as i64;
                            if (m - i) % 2 == 0 { v } else { -v }
                        })
                        .sum();
                    assert_eq!(alt_oracle, kronecker(lam, &hook, mu).unwrap() as i64);
                }
                pairs += 1;
            }
        }
    }
    format!("{pairs} pairs (λ, μ) with n <= 7")
}

fn criterion_7() -> String {
    let mut cases = 0;
    let mut nonzero = 0;
    for n in 1..=8 {
        for e in 0..=n / 2 {
            for f in e..=n / 2 {
                let lam = Partition::hook(n, e).unwrap();
                let mu = Partition::hook(n, f).unwrap();
                for m in 0..n {
                    let closed = hook_hook_multiplicity(e, f, m, n).unwrap();
                    assert_eq!(closed, multiplicity_hook(&lam, &mu, m).unwrap(), "e={e} f={f} m={m} n={n}");
                    cases += 1;
                    nonzero += closed;
                }
            }
        }
    }
    assert_eq!(hook_hook_multiplicity(2, 3, 1, 6), Ok(1));
    assert_eq!(hook_hook_multiplicity(2, 3, 0, 6), Ok(0));
    format!("{cases} cases agree ({nonzero} nonzero)")
}

fn criterion_8() -> String {
    let mut rng = rng(0xacce97);
    let mut tableau_checks = 0;
    for _ in 0..10_000 {
        let shape = random_skew(&mut rng, 9);
        let t = random_tableau(&mut rng, &shape);
        let extra: Vec<u32> = (0..6).map(|_| fresh_value(&mut rng, &t)).collect();
        tableau_checks += check_tableau(&t, &extra);
    }
    let mut picture_checks = 0;
    for _ in 0..10_000 {
        let pic = random_picture(&mut rng, 9);
        picture_checks += check_picture(&pic);
        picture_checks += check_route_independence(&mut rng, &pic);
        check_rw_roundtrip(&mut rng, &pic);
    }
    format!("10000 tableaux ({tableau_checks} checks), 10000 pictures ({picture_checks} checks)")
}

fn main() {
    // the oracle tables are shared by several criteria; build them up front
    for n in 1..=8 {
        character_table(n).unwrap();
    }
    let criteria = [
        Criterion { id: 1, name: "worked example PW6((5,3,1,1),(4,3,3))", budget: secs(1), run: criterion_1 },
        Criterion { id: 2, name: "tableau insertion and deletion example", budget: secs(1), run: criterion_2 },
        Criterion { id: 3, name: "picture insertion and deletion example", budget: secs(1), run: criterion_3 },
        Criterion { id: 4, name: "oracle sweep 4 <= n <= 7", budget: secs(300), run: criterion_4 },
        Criterion { id: 5, name: "bijection and exactness n <= 6", budget: secs(300), run: criterion_5 },
        Criterion { id: 6, name: "recurrence and alternating sum n <= 7", budget: secs(300), run: criterion_6 },
        Criterion { id: 7, name: "hook x hook closed form n <= 8", budget: secs(120), run: criterion_7 },
        Criterion { id: 8, name: "bumping lemma suites", budget: secs(600), run: criterion_8 },
    ];
    let quiet_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for cr in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(cr.run));
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if took <= cr.budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over budget {:?}", cr.budget)),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                ("FAIL", msg)
            }
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {} {status} [{:.2}s] {}: {detail}", cr.id, took.as_secs_f64(), cr.name);
    }
    std::panic::set_hook(quiet_hook);
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
