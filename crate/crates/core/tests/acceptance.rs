//! Acceptance suite. Runs every criterion at its stated tolerance and prints
//! one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use orddiv::arith::{divisors, gcd, TotientTable};
use orddiv::conjecture::{explain_pair, CoefficientPair};
use orddiv::existence::{brute_force_exists, exists_bijection, realize_bijection};
use orddiv::maps::{dihedral_paper_map, product_paper_map};
use orddiv::{ComparisonMode, Element, Family, GroupSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orddiv"))
        .args(args)
        .output()
        .expect("orddiv binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn errs<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn expected_table(k: u64, images: [u64; 6], image_orders: [u64; 6]) -> String {
    let elements = ["1", "r", "r^2", "s", "sr", "sr^2"];
    let orders = [1, 3, 3, 2, 2, 2];
    let mut s = format!(
        "map: f(s^a r^b) = {k}a + 2b mod 6 on D6 -> Z6\n\
         | Order of D6 | D6   | Z6 | Order of Z6 |\n\
         |-------------|------|----|-------------|\n"
    );
    for i in 0..6 {
        s.push_str(&format!(
            "| {:<11} | {:<4} | {:<2} | {:<11} |\n",
            orders[i], elements[i], images[i], image_orders[i]
        ));
    }
    s.push_str("mode: divides\nbijective: yes\nverdict: true\n");
    s
}

fn golden_tables() -> Outcome {
    let cases = [
        ("1", expected_table(1, [0, 2, 4, 1, 3, 5], [1, 3, 3, 6, 2, 6])),
        ("5", expected_table(5, [0, 2, 4, 5, 1, 3], [1, 3, 3, 6, 6, 2])),
    ];
    let mut slowest = Duration::ZERO;
    for (k, expected) in cases {
        let start = Instant::now();
        let out = cli(&["map", "dihedral", "--n", "3", "--k", k]);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure!(
            out.status.code() == Some(0),
            "k={k}: exit status {:?}",
            out.status.code()
        );
        ensure!(stdout(&out) == expected, "k={k}: table differs:\n{}", stdout(&out));
        ensure!(elapsed < Duration::from_secs(1), "k={k}: took {elapsed:?}");
    }
    Ok(format!("both tables exact, slowest run {slowest:?}"))
}

fn dihedral_sweep() -> Outcome {
    let mut maps = 0;
    for n in 1..=200u64 {
        for k in (1..2 * n as i64).step_by(2) {
            let report = dihedral_paper_map(n, k)
                .and_then(|f| f.verify(ComparisonMode::Divides))
                .map_err(errs)?;
            ensure!(report.verdict && report.bijective, "n={n} k={k}: {:?}", report.failure);
            maps += 1;
        }
    }
    Ok(format!("{maps} maps verified"))
}

fn product_sweep() -> Outcome {
    let mut maps = 0;
    for p in [3u64, 5, 7, 11, 13] {
        for k in (1..=20u64).filter(|&k| gcd(p, k) == 1) {
            for m in (1..p as i64).filter(|&m| gcd(m as u64, p) == 1) {
                let report = product_paper_map(p, k, m)
                    .and_then(|f| f.verify(ComparisonMode::Divides))
                    .map_err(errs)?;
                ensure!(
                    report.verdict && report.bijective,
                    "p={p} k={k} m={m}: {:?}",
                    report.failure
                );
                maps += 1;
            }
        }
    }
    Ok(format!("{maps} maps verified"))
}

/// Every group of order <= 200, then every fortieth catalog entry up to 2000
/// plus all dihedral and quaternion groups in that range.
fn order_sample() -> Vec<GroupSpec> {
    GroupSpec::catalog(2000)
        .into_iter()
        .enumerate()
        .filter(|(i, g)| {
            g.order() <= 200 || i % 40 == 0 || matches!(g.family(), Family::Dihedral | Family::GeneralizedQuaternion)
        })
        .map(|(_, g)| g)
        .collect()
}

fn fast_orders_and_cyclic_spectra() -> Outcome {
    let sample = order_sample();
    let mut elements = 0u64;
    for g in &sample {
        for x in g.enumerate().map_err(errs)? {
            let fast = g.element_order(&x).map_err(errs)?;
            let slow = g.order_by_iteration(&x).map_err(errs)?;
            ensure!(fast == slow, "{g} {x}: fast {fast}, iteration {slow}");
            elements += 1;
        }
    }
    let phi = TotientTable::new(1000);
    for n in 1..=1000u64 {
        let s = GroupSpec::cyclic(n)
            .and_then(|g| g.order_spectrum_by_enumeration(u64::MAX))
            .map_err(errs)?;
        let expected: Vec<(u64, u64)> = divisors(n).into_iter().map(|d| (d, phi.phi(d as usize))).collect();
        ensure!(s.entries() == expected.as_slice(), "Z{n}: {s}");
    }
    Ok(format!(
        "{} groups, {elements} elements; Z1..Z1000 spectra",
        sample.len()
    ))
}

fn reflections_are_involutions() -> Outcome {
    for n in 1..=500u64 {
        let g = GroupSpec::dihedral(n).map_err(errs)?;
        for b in 0..n {
            let s = Element::Dihedral { a: 1, b };
            let order = g.element_order(&s).map_err(errs)?;
            let square = g.multiply(&s, &s).map_err(errs)?;
            ensure!(order == 2 && square == g.identity(), "n={n} b={b}: order {order}");
        }
    }
    Ok("n = 1..500".into())
}

fn cyclic_products() -> Outcome {
    for n in 1..=50u64 {
        for m in 1..=50u64 {
            let g = GroupSpec::product(vec![n, m]).map_err(errs)?;
            let cyclic = g.is_cyclic();
            ensure!(cyclic.is_some() == (gcd(n, m) == 1), "Z{n}xZ{m}: {cyclic:?}");
            if let Some(w) = cyclic {
                ensure!(w == Element::Product(vec![1 % n, 1 % m]), "Z{n}xZ{m}: witness {w}");
                ensure!(
                    g.order_by_iteration(&w).map_err(errs)? == n * m,
                    "Z{n}xZ{m}: witness order"
                );
            }
        }
    }
    Ok("n, m = 1..50".into())
}

fn flow_matches_backtracking() -> Outcome {
    let catalog = GroupSpec::catalog(24);
    let mut checked = 0;
    for g in &catalog {
        for h in catalog.iter().filter(|h| h.order() == g.order()) {
            let (sg, sh) = (g.order_spectrum().map_err(errs)?, h.order_spectrum().map_err(errs)?);
            for mode in ComparisonMode::ALL {
                let flow = exists_bijection(&sg, &sh, mode).map_err(errs)?.feasible;
                let brute = brute_force_exists(&sg, &sh, mode).map_err(errs)?;
                ensure!(flow == brute, "{g} -> {h} ({mode}): flow {flow}, backtracking {brute}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (pair, mode) cases"))
}

fn noncyclic_to_cyclic() -> Outcome {
    let mut groups = 0;
    for g in GroupSpec::catalog(200).into_iter().filter(|g| g.is_cyclic().is_none()) {
        let z = GroupSpec::cyclic(g.order()).map_err(errs)?;
        let cert = exists_bijection(
            &g.order_spectrum().map_err(errs)?,
            &z.order_spectrum().map_err(errs)?,
            ComparisonMode::Divides,
        )
        .map_err(errs)?;
        ensure!(cert.feasible, "{g} -> {z}: infeasible");
        let table = realize_bijection(&g, &z, &cert).map_err(errs)?;
        ensure!(
            table.verdict && table.recheck().map_err(errs)?,
            "{g} -> {z}: recheck failed"
        );
        // Independent pass with the iteration oracle.
        let images: BTreeSet<&Element> = table.rows.iter().map(|r| &r.image).collect();
        ensure!(images.len() as u64 == g.order(), "{g}: images not distinct");
        for row in &table.rows {
            let d = g.order_by_iteration(&row.element).map_err(errs)?;
            let e = z.order_by_iteration(&row.image).map_err(errs)?;
            ensure!(e % d == 0, "{g}: {} -> {} has orders {d}, {e}", row.element, row.image);
        }
        groups += 1;
    }
    Ok(format!("{groups} non-cyclic groups"))
}

fn conjecture_run() -> Outcome {
    let start = Instant::now();
    let out = cli(&["conjecture", "--n-min", "2", "--n-max", "100", "--format", "json"]);
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    ensure!(out.status.code() == Some(1), "exit status {:?}", out.status.code());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).map_err(errs)?;
    let reports = doc["reports"].as_array().ok_or("missing reports")?;
    ensure!(reports.len() == 99, "{} reports", reports.len());
    let pairs_of = |v: &serde_json::Value, n: u64| -> BTreeSet<CoefficientPair> {
        v.as_array()
            .into_iter()
            .flatten()
            .map(|p| CoefficientPair {
                n,
                x: p["x"].as_u64().unwrap(),
                y: p["y"].as_u64().unwrap(),
            })
            .collect()
    };
    let mut rechecked = 0u64;
    for (r, n) in reports.iter().zip(2u64..) {
        ensure!(r["n"].as_u64() == Some(n), "report order at n={n}");
        let valid = pairs_of(&r["valid_pairs"], n);
        let counter = pairs_of(&r["counterexamples"], n);
        for p in &valid {
            ensure!(
                explain_pair(*p).map_err(errs)?.verdict,
                "n={n}: ({},{}) listed but invalid",
                p.x,
                p.y
            );
            rechecked += 1;
        }
        for p in &counter {
            ensure!(p.x < p.y, "n={n}: unordered counterexample");
            ensure!(
                explain_pair(*p).map_err(errs)?.verdict && explain_pair(p.swapped()).map_err(errs)?.verdict,
                "n={n}: counterexample {{{},{}}} fails recheck",
                p.x,
                p.y
            );
        }
        let expected: BTreeSet<CoefficientPair> = valid
            .iter()
            .filter(|p| p.x < p.y && valid.contains(&p.swapped()))
            .copied()
            .collect();
        ensure!(counter == expected, "n={n}: counterexample list differs from recheck");
        ensure!(
            r["conjecture_holds"].as_bool() == Some(counter.is_empty()),
            "n={n}: verdict"
        );
        if n <= 12 {
            // Completeness: no valid pair is missing from the report.
            for x in 0..2 * n {
                for y in 0..2 * n {
                    let p = CoefficientPair { n, x, y };
                    ensure!(
                        explain_pair(p).map_err(errs)?.verdict == valid.contains(&p),
                        "n={n}: ({x},{y}) misreported"
                    );
                }
            }
        }
    }
    let n2 = pairs_of(&reports[0]["counterexamples"], 2);
    ensure!(n2.contains(&CoefficientPair { n: 2, x: 1, y: 2 }), "n=2 lacks {{1,2}}");
    Ok(format!(
        "{elapsed:?}, {rechecked} pairs re-verified, n=2 counterexamples {}",
        n2.len()
    ))
}

fn determinism() -> Outcome {
    let runs: &[&[&str]] = &[
        &["conjecture", "--n-min", "2", "--n-max", "100", "--format", "json"],
        &["exists", "D24", "Z24", "--realize", "--format", "json"],
        &["map", "product", "--p", "7", "--k", "4", "--m", "3", "--format", "csv"],
    ];
    for args in runs {
        let a = cli(args);
        let b = cli(args);
        ensure!(
            a.stdout == b.stdout && a.status.code() == b.status.code(),
            "{args:?}: repeated runs differ"
        );
    }
    let base = ["conjecture", "--n-min", "2", "--n-max", "100"];
    let reference = cli(&base).stdout;
    for jobs in ["1", "2", "8"] {
        let mut args = base.to_vec();
        args.extend(["--jobs", jobs]);
        ensure!(cli(&args).stdout == reference, "--jobs {jobs} changes output");
    }
    Ok("repeat runs and --jobs 1/2/8 byte-identical".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden dihedral tables for n = 3, k = 1 and 5", golden_tables),
        ("odd-k dihedral maps verify for n <= 200", dihedral_sweep),
        ("product maps verify for p <= 13, k <= 20", product_sweep),
        (
            "fast element orders match iteration; cyclic spectra are totients",
            fast_orders_and_cyclic_spectra,
        ),
        ("reflections have order 2 for n <= 500", reflections_are_involutions),
        ("Z_n x Z_m cyclic iff coprime, witness (1,1)", cyclic_products),
        (
            "flow existence agrees with backtracking, order <= 24",
            flow_matches_backtracking,
        ),
        ("non-cyclic groups of order <= 200 map onto Z_|G|", noncyclic_to_cyclic),
        ("conjecture sweep n = 2..100 rechecks", conjecture_run),
        ("byte-identical output across runs and --jobs", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2}. {name} ({detail}; {elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
