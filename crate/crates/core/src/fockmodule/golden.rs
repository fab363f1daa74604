//! Closed-form action for one parafermion and one paraboson.
//!
//! Written out by hand from the explicit two-label formulas, with no use of
//! the general Clebsch-Gordan or reduced-element code, so that comparing it
//! with the general construction is a genuine cross-check.

use std::collections::BTreeMap;

use super::{matrix, Family, FockBasis, GeneratorLabel, Variant};
use crate::error::Result;
use crate::exactnum::{rat, RadicalSum};
use crate::gzbasis::{GzPattern, Signature};
use crate::report::{Check, Counterexample, Report};

fn root(num: i64, den: i64) -> RadicalSum {
    RadicalSum::sqrt(&rat(num, den)).expect("closed forms are nonnegative")
}

/// `G_1(a, b)`; the vacuum value is the norm `sqrt(p)`.
fn g1(a: i64, b: i64, p: i64) -> RadicalSum {
    if b % 2 == 0 {
        if a + b == 0 {
            root(p, 1)
        } else {
            root(a * (a + b + 1) * (p - a), a + b)
        }
    } else {
        root(a * (p - a), 1)
    }
}

fn g2(a: i64, b: i64, p: i64) -> RadicalSum {
    if b % 2 == 0 {
        root(a + b + 1, 1)
    } else {
        root((b + 1) * (p + b + 1), a + b)
    }
}

/// Membership of `(a, b; c)` in the truncated space.
fn admissible(a: i64, b: i64, c: i64, p: i64, level_cap: i64) -> bool {
    a >= 0
        && b >= 0
        && (c == a || c == a - 1)
        && c >= 0
        && (b == 0 || a > 0)
        && a <= p
        && a + b <= level_cap
}

/// Image of the basis vector `(a, b; c)` under `gen` for m = n = 1.
pub fn section4_action(
    gen: &GeneratorLabel,
    pattern: &GzPattern,
    p: i64,
    level_cap: i64,
) -> Vec<(GzPattern, RadicalSum)> {
    assert_eq!(
        (pattern.m(), pattern.n()),
        (1, 1),
        "closed forms are for m = n = 1"
    );
    let (a, b, c) = (pattern.mu(1, 2), pattern.mu(2, 2), pattern.mu(1, 1));
    let full = c == a;
    // each term: (target labels, lazily evaluated coefficient)
    type Term = ((i64, i64, i64), Box<dyn Fn() -> RadicalSum>);
    let terms: Vec<Term> = match (gen.family, gen.sign > 0, full) {
        (Family::Parafermion, true, true) => {
            vec![((a + 1, b, a + 1), Box::new(move || g1(a, b, p)))]
        }
        (Family::Parafermion, true, false) => vec![
            (
                (a + 1, b, a),
                Box::new(move || &root(a + b, a + b + 1) * &g1(a, b, p)),
            ),
            (
                (a, b + 1, a),
                Box::new(move || -(&root(1, a + b + 1) * &g2(a, b, p))),
            ),
        ],
        (Family::Paraboson, true, true) => vec![
            (
                (a + 1, b, a),
                Box::new(move || &root(1, a + b + 1) * &g1(a, b, p)),
            ),
            (
                (a, b + 1, a),
                Box::new(move || &root(a + b, a + b + 1) * &g2(a, b, p)),
            ),
        ],
        (Family::Paraboson, true, false) => {
            vec![((a, b + 1, a - 1), Box::new(move || -g2(a, b, p)))]
        }
        (Family::Parafermion, false, true) => vec![
            ((a - 1, b, a - 1), Box::new(move || g1(a - 1, b, p))),
            (
                (a, b - 1, a - 1),
                Box::new(move || -(&root(1, a + b) * &g2(a, b - 1, p))),
            ),
        ],
        (Family::Parafermion, false, false) => vec![(
            (a - 1, b, a - 2),
            Box::new(move || &root(a + b - 1, a + b) * &g1(a - 1, b, p)),
        )],
        (Family::Paraboson, false, true) => vec![(
            (a, b - 1, a),
            Box::new(move || &root(a + b - 1, a + b) * &g2(a, b - 1, p)),
        )],
        (Family::Paraboson, false, false) => vec![
            (
                (a - 1, b, a - 1),
                Box::new(move || &root(1, a + b) * &g1(a - 1, b, p)),
            ),
            ((a, b - 1, a - 1), Box::new(move || -g2(a, b - 1, p))),
        ],
    };
    let twist = if gen.variant == Variant::Pso && gen.family == Family::Parafermion {
        gen.sign * if (a + b) % 2 == 0 { 1 } else { -1 }
    } else {
        1
    };
    terms
        .into_iter()
        .filter(|((ta, tb, tc), _)| admissible(*ta, *tb, *tc, p, level_cap))
        .map(|((ta, tb, tc), value)| {
            let target = GzPattern::from_rows_top_down(1, 1, vec![vec![ta, tb], vec![tc]])
                .expect("two-row shape");
            (target, value().scale_int(twist))
        })
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Every matrix entry of the general construction at m = n = 1 against the
/// closed forms, both variants, plus the two worked bracket identities.
pub fn verify_section4(p: i64, level_cap: usize) -> Result<Report> {
    let sig = Signature::new(1, 1, p, level_cap)?;
    let basis = FockBasis::new(sig);
    let mut report = Report::new(format!("closed-forms/p={p}"));
    for variant in [Variant::Osp, Variant::Pso] {
        let mut mats = BTreeMap::new();
        for gen in super::all_generators(&sig, variant) {
            let mat = matrix(&gen, &basis)?;
            let mut hit = None;
            'cols: for (j, src) in basis.patterns.iter().enumerate() {
                let want: BTreeMap<usize, RadicalSum> =
                    section4_action(&gen, src, p, level_cap as i64)
                        .into_iter()
                        .map(|(t, v)| (basis.index_of(&t).expect("admissible target"), v))
                        .collect();
                let got: BTreeMap<usize, RadicalSum> = mat.column(j).iter().cloned().collect();
                for i in want.keys().chain(got.keys()) {
                    let w = want.get(i).cloned().unwrap_or_default();
                    let g = got.get(i).cloned().unwrap_or_default();
                    if w != g {
                        hit = Some(Counterexample::new(&basis.patterns[*i], src, &g - &w));
                        break 'cols;
                    }
                }
            }
            report.push(
                Check::new(format!("{variant} {gen} entries"))
                    .indices(&[gen.index])
                    .signs(&[gen.sign])
                    .outcome(hit),
            );
            mats.insert(gen, mat);
        }
        // [[f+, b±], f-] = -2 b± (osp) and {{f~+, b~±}, f~-} = +2 b~± (pso)
        let expected = match variant {
            Variant::Osp => -2,
            Variant::Pso => 2,
        };
        for s in [1, -1] {
            let fp = &mats[&GeneratorLabel::f(1, 1, variant)];
            let fm = &mats[&GeneratorLabel::f(1, -1, variant)];
            let bs = &mats[&GeneratorLabel::b(1, s, variant)];
            let lhs = fp.bracket(bs)?.bracket(fm)?;
            let res = lhs.add_scaled(bs, &RadicalSum::from_integer(-expected))?;
            let hit = res
                .first_nonzero(res.exact_up_to)
                .map(|(i, j, v)| Counterexample::new(&basis.patterns[i], &basis.patterns[j], v));
            let name = match variant {
                Variant::Osp => "[[f+,b],f-] = -2b",
                Variant::Pso => "{{f+,b},f-} = +2b",
            };
            report.push(
                Check::new(name)
                    .signs(&[1, s, -1])
                    .max_level(res.exact_up_to)
                    .outcome(hit),
            );
        }
    }
    Ok(report)
}
