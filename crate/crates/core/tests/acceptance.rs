//! Acceptance run: one line per criterion, exact zero residuals throughout.
//!
//! Runs without the libtest harness so the lines always show up in
//! `cargo test` output. Exits non-zero if the set of failing criteria differs
//! from `EXPECTED_FAILURES`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parastat::charcount::verify_level_dimensions;
use parastat::exactnum::{is_square_free, rat, sqrt_normalize, RadicalSum};
use parastat::fockmodule::{
    check_adjointness, check_cartan_recurrence, check_dual_route, check_vacuum, check_variant_link,
    verify_gl_embedding, verify_relations, verify_section4, FockBasis, Variant,
};
use parastat::gzbasis::Signature;
use parastat::matrixrep::verify_defining_relations;
use parastat::report::Report;

/// The twisted-reduced-element route of criterion 7 does not reproduce the
/// twist and is reported as failing rather than patched.
const EXPECTED_FAILURES: &[usize] = &[7];

const FOCK_SIGNATURES: [(usize, usize, i64); 5] =
    [(1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 2, 2), (2, 2, 1)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn tally(reports: &[Report]) -> (usize, usize) {
    let total = reports.iter().map(|r| r.checks.len()).sum();
    let failed = reports.iter().map(|r| r.failures().count()).sum();
    (total, failed)
}

fn first_failure(reports: &[Report]) -> String {
    reports
        .iter()
        .find_map(|r| {
            r.failures().next().map(|c| {
                let at = c
                    .counterexample
                    .as_ref()
                    .map(|e| format!(" at ({}, {}) residual {}", e.row, e.column, e.residual_text))
                    .unwrap_or_default();
                format!(
                    "; first: {} {} {:?} {:?}{at}",
                    r.suite, c.relation, c.indices, c.signs
                )
            })
        })
        .unwrap_or_default()
}

fn from_reports(reports: &[Report], extra: String) -> Outcome {
    let (total, failed) = tally(reports);
    Outcome {
        pass: failed == 0,
        detail: format!(
            "{total} checks, {failed} failed{extra}{}",
            first_failure(reports)
        ),
    }
}

fn fock(m: usize, n: usize, p: i64) -> std::sync::Arc<FockBasis> {
    FockBasis::new(Signature::new(m, n, p, 5).expect("valid signature"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            reports.push(verify_defining_relations(m, n).expect("defining matrices"));
        }
    }
    let took = start.elapsed();
    let mut out = from_reports(&reports, format!(", 1<=m,n<=3 in {took:.2?}"));
    out.pass &= took < Duration::from_secs(10);
    out
}

/// Relations for one variant on every Fock signature, each under two minutes.
fn relations(variant: Variant) -> Outcome {
    let mut reports = Vec::new();
    let mut slowest = Duration::ZERO;
    for (m, n, p) in FOCK_SIGNATURES {
        let start = Instant::now();
        reports.push(verify_relations(&fock(m, n, p), variant).expect("generator matrices"));
        slowest = slowest.max(start.elapsed());
    }
    let mut out = from_reports(
        &reports,
        format!(", source levels <= 2, slowest signature {slowest:.2?}"),
    );
    out.pass &= slowest < Duration::from_secs(120);
    out
}

fn criterion_4() -> Outcome {
    let reports: Vec<Report> = (1..=3)
        .map(|p| verify_section4(p, 8).expect("closed forms"))
        .collect();
    from_reports(&reports, ", p = 1, 2, 3, level <= 8".into())
}

fn criterion_5() -> Outcome {
    let mut reports = Vec::new();
    for (m, n, p) in FOCK_SIGNATURES {
        let basis = fock(m, n, p);
        for v in [Variant::Osp, Variant::Pso] {
            reports.push(check_vacuum(&basis, v).expect("vacuum"));
            reports.push(check_adjointness(&basis, v).expect("adjointness"));
        }
    }
    from_reports(&reports, String::new())
}

fn criterion_6() -> Outcome {
    let mut reports = Vec::new();
    for (m, n, p) in FOCK_SIGNATURES {
        let basis = fock(m, n, p);
        for v in [Variant::Osp, Variant::Pso] {
            reports.push(check_cartan_recurrence(&basis, v).expect("recurrence"));
            let mut gl = verify_gl_embedding(&basis, v).expect("gl embedding");
            gl.checks.retain(|c| c.relation.starts_with("h_i"));
            reports.push(gl);
        }
    }
    from_reports(&reports, String::new())
}

fn criterion_7() -> Outcome {
    let mut link = Vec::new();
    let mut same = Vec::new();
    let mut tilde_rel = Vec::new();
    for (m, n, p) in FOCK_SIGNATURES {
        let basis = fock(m, n, p);
        link.push(check_variant_link(&basis).expect("variant link"));
        let (a, b) = check_dual_route(&basis).expect("dual route");
        same.push(a);
        tilde_rel.push(b);
    }
    let (lt, lf) = tally(&link);
    let (st, sf) = tally(&same);
    let (rt, rf) = tally(&tilde_rel);
    Outcome {
        pass: lf == 0 && sf == 0,
        detail: format!(
            "sign link {}/{lt} pass; twisted-reduced route equals twist {}/{st}; \
             its own pso relations {}/{rt} pass",
            lt - lf,
            st - sf,
            rt - rf
        ),
    }
}

fn criterion_8() -> Outcome {
    let mut reports = Vec::new();
    for (m, n, p) in FOCK_SIGNATURES {
        let basis = fock(m, n, p);
        for v in [Variant::Osp, Variant::Pso] {
            let mut gl = verify_gl_embedding(&basis, v).expect("gl embedding");
            gl.checks.retain(|c| c.relation.starts_with("[[E"));
            reports.push(gl);
        }
    }
    from_reports(&reports, String::new())
}

fn criterion_9() -> Outcome {
    let mut reports = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        // p = 6 leaves levels <= 6 untruncated; p = 2 exercises lambda_1 <= p
        for p in [6, 2] {
            reports.push(verify_level_dimensions(
                &Signature::new(m, n, p, 6).expect("signature"),
            ));
        }
    }
    from_reports(&reports, ", levels <= 6".into())
}

fn random_sum(rng: &mut ChaCha8Rng) -> RadicalSum {
    let radicands = [1u64, 2, 3, 5, 6, 7, 8, 10, 12, 15, 18, 50];
    let terms = (0..rng.gen_range(0..4)).map(|_| {
        (
            rat(rng.gen_range(-25..=25), rng.gen_range(1..=12)),
            radicands[rng.gen_range(0..radicands.len())],
        )
    });
    RadicalSum::from_terms(terms).expect("positive radicands")
}

fn criterion_10() -> Outcome {
    const CASES: usize = 10_000;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failed = 0;
    for _ in 0..CASES {
        let (a, b, c) = (
            random_sum(&mut rng),
            random_sum(&mut rng),
            random_sum(&mut rng),
        );
        let ring = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a - &a).is_zero();
        let q = rat(rng.gen_range(0..60), rng.gen_range(1..60));
        let x = sqrt_normalize(&q).expect("nonnegative");
        let norm = is_square_free(x.radicand)
            && x.square() == q
            && sqrt_normalize(&x.square()).expect("nonnegative") == x;
        if !(ring && norm) {
            failed += 1;
        }
    }
    let took = start.elapsed();
    Outcome {
        pass: failed == 0 && took < Duration::from_secs(5),
        detail: format!("{CASES} randomized cases, {failed} failed, {took:.2?}"),
    }
}

fn main() {
    // `cargo test` passes harness flags such as --nocapture; ignore them
    let criteria: [(usize, &str, fn() -> Outcome); 10] = [
        (1, "defining realization, all triple relations", criterion_1),
        (2, "Fock relations, pso", || relations(Variant::Pso)),
        (3, "Fock relations, osp", || relations(Variant::Osp)),
        (4, "m = n = 1 closed forms", criterion_4),
        (5, "vacuum and adjointness", criterion_5),
        (6, "Cartan recurrence and weights", criterion_6),
        (
            7,
            "pso/osp phase link and twisted-reduced route",
            criterion_7,
        ),
        (8, "gl(m|n) embedding", criterion_8),
        (9, "level and partition counts", criterion_9),
        (10, "exact arithmetic properties", criterion_10),
    ];
    let mut failing = Vec::new();
    for (id, name, run) in criteria {
        let out = run();
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status}: {name}: {}", out.detail);
        if !out.pass {
            failing.push(id);
        }
    }
    if failing != EXPECTED_FAILURES {
        eprintln!("failing criteria {failing:?}, expected exactly {EXPECTED_FAILURES:?}");
        std::process::exit(1);
    }
    println!("acceptance: failing set {failing:?} matches the documented expectation");
}
