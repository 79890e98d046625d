//! The acceptance criteria, one PASS/FAIL line each. A criterion passes when
//! every comparison is exact and it finishes inside its time budget.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use xtl::contour::{psi_components, sum_components, tsasm_count_integral};
use xtl::qkz::checks::{check_exchange_and_reflection, check_psi_reduction, check_z_properties};
use xtl::sixvertex::checks::{check_dual_route, Words};
use xtl::spinchain::verify_eigenpair;
use xtl::theorems::*;
use xtl::tsasm::{count_tsasm, genfun, GENFUN_VARS};
use xtl::{IntPoly, Integer, Report, Ring};

const SEED: u64 = 42;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[Report]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass || r.trials == 0)
        .map(|r| r.to_json())
        .collect();
    let checks: usize = reports.iter().map(|r| r.trials).sum();
    Outcome {
        ok: failed.is_empty() && !reports.is_empty(),
        detail: if failed.is_empty() {
            format!("{} reports, {checks} comparisons", reports.len())
        } else {
            failed.join("\n    ")
        },
    }
}

fn equal<T: PartialEq + std::fmt::Debug>(items: &[(String, T, T)]) -> Outcome {
    let bad: Vec<String> = items
        .iter()
        .filter(|(_, a, b)| a != b)
        .map(|(k, a, b)| format!("{k}: {a:?} != {b:?}"))
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} exact matches", items.len()) } else { bad.join("; ") },
    }
}

fn x() -> IntPoly {
    IntPoly::var("x")
}
fn tau() -> IntPoly {
    IntPoly::var("tau")
}
fn t() -> IntPoly {
    IntPoly::var("t")
}
fn c(k: i64) -> IntPoly {
    IntPoly::from_i64(k)
}

fn criterion_1() -> Outcome {
    let expect = [
        c(1) + x(),
        (c(1) + x()) * (c(1) + tau()),
        x() + (c(1) + x() + x() * x()) * (c(1) + tau()).pow(2),
        x() * (c(1) + tau()).pow(2) * (c(2) + c(2) * tau() + tau() * tau())
            + (c(1) + x() * x()) * (c(1) + c(4) * tau() + c(4) * tau().pow(2) + c(3) * tau().pow(3) + tau().pow(4)),
    ];
    let items: Vec<_> = expect
        .into_iter()
        .enumerate()
        .map(|(k, e)| (format!("S_{}", k + 2), sum_components(k + 2), e))
        .collect();
    equal(&items)
}

fn criterion_2() -> Outcome {
    let p = psi_components(4);
    let expect = [
        (vec![1, 2], tau()),
        (vec![1, 3], c(1) + x() * tau() + tau() * tau()),
        (vec![1, 4], x() * (c(1) + tau() * tau())),
        (vec![2, 3], x() + tau() + x() * x() * tau()),
        (vec![2, 4], x() * (x() + tau() + x() * tau() * tau())),
        (vec![3, 4], x() * x() * tau()),
    ];
    let mut items: Vec<_> = expect
        .into_iter()
        .map(|(a, e)| (format!("psi_{a:?}"), p.get(&a).cloned(), Some(e)))
        .collect();
    items.push(("component count".into(), Some(c(p.entries.len() as i64)), Some(c(6))));
    equal(&items)
}

fn criterion_3() -> Outcome {
    let expect = [1, 1, 1, 2, 4, 13, 46];
    let one = Integer::from(1);
    let mut items = Vec::new();
    for (big_n, &e) in expect.iter().enumerate() {
        let e = Integer::from(e);
        let by_enum = count_tsasm(big_n).map(Integer::from).unwrap_or_default();
        let by_integral = tsasm_count_integral(big_n);
        let by_partition = genfun_from_partition(big_n)
            .and_then(|p| p.substitute("t", &one)?.substitute("tau", &one))
            .map(|p| p.constant_term())
            .unwrap_or_default();
        let order = 2 * big_n + 1;
        items.push((format!("order {order} enumeration"), by_enum, e.clone()));
        items.push((format!("order {order} integral"), by_integral, e.clone()));
        items.push((format!("order {order} partition function"), by_partition, e));
    }
    equal(&items)
}

fn criterion_4() -> Outcome {
    let gf = |p: IntPoly| p.with_vars(&GENFUN_VARS.map(String::from)).unwrap();
    let expect = [
        t(),
        t() * (c(1) + tau()),
        tau() + t() * t() * (c(1) + tau() + tau() * tau()),
        tau() * (c(1) + tau() * tau())
            + t() * t() * (c(1) + c(3) * tau() + c(4) * tau().pow(2) + c(2) * tau().pow(3) + tau().pow(4)),
    ];
    let items: Vec<_> = expect
        .into_iter()
        .enumerate()
        .map(|(k, e)| (format!("A_TS({})", 2 * k + 5), genfun(k + 2).ok(), Some(gf(e))))
        .collect();
    equal(&items)
}

fn criterion_5() -> Outcome {
    let mut items = Vec::new();
    for (a, b) in [(1, 1), (2, 1), (1, 3), (7, 5)] {
        let x = BigRational::new(a.into(), b.into());
        for big_n in 1..=10 {
            let pass = verify_eigenpair(big_n, &x).map(|r| r.pass()).unwrap_or(false);
            items.push((format!("N={big_n} x={x}"), pass, true));
        }
    }
    equal(&items)
}

fn criterion_6() -> Outcome {
    match run_suite(Suite::Ybe, 6, 100, SEED) {
        Ok(r) => {
            let names: Vec<&str> = r.iter().map(|r| r.property.as_str()).collect();
            let needed = ["sv_ybe", "braid_ybe", "sv_boundary_ybe", "boundary_ybe", "sv_rm_commutation", "chi_exchange", "sv_nu_exchange"];
            let missing: Vec<&&str> = needed.iter().filter(|n| !names.contains(n)).collect();
            let mut o = from_reports(&r);
            if !missing.is_empty() {
                o.ok = false;
                o.detail = format!("missing {missing:?}");
            }
            o
        }
        Err(e) => Outcome { ok: false, detail: e.to_string() },
    }
}

fn criterion_7() -> Outcome {
    let mut reports = Vec::new();
    for big_n in 1..=6 {
        reports.push(check_exchange_and_reflection(big_n, 20, SEED));
        if big_n >= 2 {
            reports.push(check_psi_reduction(big_n, 20, SEED));
        }
    }
    from_reports(&reports)
}

fn criterion_8() -> Outcome {
    let mut reports = Vec::new();
    for big_n in 2..=6 {
        reports.extend(check_z_properties(big_n, 20, SEED));
    }
    from_reports(&reports)
}

fn criterion_9() -> Outcome {
    let reports: Vec<_> = (1..=3).map(|n| check_dual_route(n, Words::All, 20, SEED)).collect();
    from_reports(&reports)
}

fn criterion_10() -> Outcome {
    let reports: Vec<_> = (0..=6).map(|big_n| check_y_equals_yy(big_n, 20, SEED)).collect();
    from_reports(&reports)
}

fn criterion_11() -> Outcome {
    let reports: Result<Vec<_>, _> = (1..=3).map(|n| check_gf_lemma(n, 20, SEED)).collect();
    match reports {
        Ok(r) => from_reports(&r),
        Err(e) => Outcome { ok: false, detail: e.to_string() },
    }
}

fn criterion_12() -> Outcome {
    let mut reports = Vec::new();
    for big_n in 0..=8 {
        match check_main_theorem(big_n) {
            Ok(r) => reports.push(r),
            Err(e) => return Outcome { ok: false, detail: format!("N={big_n}: {e}") },
        }
    }
    for big_n in 0..=6 {
        match check_corollaries(big_n) {
            Ok(r) => reports.push(r),
            Err(e) => return Outcome { ok: false, detail: format!("N={big_n}: {e}") },
        }
    }
    let mut o = from_reports(&reports);
    o.detail = format!("main identity N=0..8, corollaries N=0..6; {}", o.detail);
    o
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("S_N polynomials for N=2..5", 1, criterion_1),
        ("psi_4 component table", 1, criterion_2),
        ("TSASM counts by enumeration, integral and partition function, orders 1..13", 60, criterion_3),
        ("generating functions A_TS(5..11)", 5, criterion_4),
        ("eigenpair N=1..10, x in {1,2,1/3,7/5}", 120, criterion_5),
        ("Yang-Baxter, reflection, commutation and exchange identities, 100 points", 120, criterion_6),
        ("exchange, reflection and reduction of Psi_N, N<=6, 20 points", 300, criterion_7),
        ("Z_N and Y_N properties, N<=6, 20 points", 300, criterion_8),
        ("partition functions by enumeration and by operators, n<=3, 20 points", 120, criterion_9),
        ("Y_N against the six-vertex overlap, N<=6, 20 points", 120, criterion_10),
        ("TSASM generating function from partition functions, n<=3, 20 points", 120, criterion_11),
        ("main identity and corollaries", 300, criterion_12),
    ];
    let mut all = true;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*budget);
        let ok = out.ok && in_time;
        all &= ok;
        println!(
            "criterion {:>2} {}: {} ({:.2?}, budget {}s; {})",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            took,
            budget,
            if in_time { out.detail } else { format!("over time budget; {}", out.detail) }
        );
    }
    if !all {
        std::process::exit(1);
    }
}
