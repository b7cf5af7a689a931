//! One line per acceptance criterion: `criterion N PASS|FAIL cases=.. failures=.. time=..s`, with
//! the first failing cases listed underneath. Exits nonzero if any criterion fails.

use affcat::report::Outcome;
use affcat::singular::{self, fprime_sweep};
use affcat::suites::*;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Vec<Outcome>,
}

fn ok<T>(r: affcat::Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("suite error: {}", e))
}

fn c1() -> Vec<Outcome> {
    let mut v = Vec::new();
    for r in 3..=5 {
        v.extend(weyl_suite(r));
        v.extend(hecke_suite(r));
    }
    v.extend(associativity_suite(3, 200, 6, 11));
    v
}

fn c2() -> Vec<Outcome> {
    kl_suite(3, 4)
}

/// The presentation holds and every case has the same status when the window grows by 2.
fn c3() -> Vec<Outcome> {
    let mut v = Vec::new();
    for (n, r) in [(4, 3), (5, 3), (5, 4)] {
        let res = schur_suite(n, r, 0);
        let mut base: BTreeMap<String, bool> = BTreeMap::new();
        let mut wide: BTreeMap<String, bool> = BTreeMap::new();
        for o in &res {
            match o.id.strip_prefix("wide ") {
                Some(id) => wide.insert(id.to_string(), o.pass),
                None => base.insert(o.id.clone(), o.pass),
            };
        }
        let id = format!("({},{}) window stability", n, r);
        v.push(if base == wide { Outcome::pass(id) } else { Outcome::fail(id, "status changed with a wider window") });
        v.extend(res.into_iter().map(|o| Outcome { id: format!("({},{}) {}", n, r, o.id), ..o }));
    }
    v
}

fn c4() -> Vec<Outcome> {
    ok(sigma_suite(4, 3))
}

fn c5() -> Vec<Outcome> {
    ok(rho_adjoint_suite(4, 3, 50, 5))
}

fn c6() -> Vec<Outcome> {
    let mut v = soergel_suite(3);
    v.extend(soergel_suite(4));
    v
}

fn c7() -> Vec<Outcome> {
    ok(witness_suite(3, 100, 3))
}

fn c8() -> Vec<Outcome> {
    ok(rouquier_suite(3, 4))
}

fn c9() -> Vec<Outcome> {
    let mut v = ok(lemma_suite(6));
    for (n, r) in [(4, 3), (5, 4)] {
        v.extend(fprime_sweep(n, r));
        v.extend(singular::bubble_checks(n, r));
    }
    let rel = ok(singular::end_ring_relation(3, 4));
    v.push(Outcome::from_witness("end-ring relation maps to 0", (!rel.is_zero()).then(|| rel.to_string())));
    for i in 1..=3 {
        v.extend(ok(singular::triangle_check(3, 4, i)));
    }
    v
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, title: "Weyl/Hecke presentation and associativity", limit: Some(Duration::from_secs(60)), run: c1 },
        Criterion { number: 2, title: "KL basis", limit: Some(Duration::from_secs(60)), run: c2 },
        Criterion { number: 3, title: "Schur presentation", limit: Some(Duration::from_secs(300)), run: c3 },
        Criterion { number: 4, title: "sigma embedding", limit: Some(Duration::from_secs(120)), run: c4 },
        Criterion { number: 5, title: "rho adjointness", limit: None, run: c5 },
        Criterion { number: 6, title: "Soergel relations and degree audit", limit: Some(Duration::from_secs(600)), run: c6 },
        Criterion { number: 7, title: "decomposition witnesses and twist weight", limit: None, run: c7 },
        Criterion { number: 8, title: "Rouquier complexes and Euler classes", limit: None, run: c8 },
        Criterion { number: 9, title: "singular formulas, bubbles and triangle", limit: Some(Duration::from_secs(300)), run: c9 },
    ];
    let mut all_pass = true;
    for c in criteria {
        let t = Instant::now();
        let res = (c.run)();
        let dt = t.elapsed();
        let failures: Vec<&Outcome> = res.iter().filter(|o| !o.pass).collect();
        let in_time = c.limit.is_none_or(|l| dt <= l);
        let pass = !res.is_empty() && failures.is_empty() && in_time;
        all_pass &= pass;
        println!(
            "criterion {} {} cases={} failures={} time={:.1}s{} ({})",
            c.number,
            if pass { "PASS" } else { "FAIL" },
            res.len(),
            failures.len(),
            dt.as_secs_f64(),
            if in_time { String::new() } else { format!(" over limit {}s", c.limit.unwrap().as_secs()) },
            c.title
        );
        for f in failures.iter().take(5) {
            println!("    {}", f);
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
