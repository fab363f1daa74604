//! gl(m|n) Clebsch-Gordan coefficients for `(1,0,...,0) ⊗ [mu]`.
//!
//! A coefficient factorises row by row into isoscalar factors of the chain
//! gl(m|n) ⊃ gl(m|n-1) ⊃ ... ⊃ gl(m) ⊃ gl(m-1) ⊃ ... ⊃ gl(1). Rows above
//! `m` use one of six super factors, rows up to `m` one of two classical
//! factors. All factors are evaluated on the labels `l_{is}` of the source
//! pattern.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Radical, RadicalSum};
use crate::factors::{Evaluation, FactorProduct};
use crate::gzbasis::{is_valid, GzPattern};

/// Which closed form an isoscalar factor uses.
///
/// `Unchanged*` factors have the lower row untouched; `Shifted*` factors
/// move the lower row at position `q`. The suffix names the type of `k`
/// and then `q` (fermionic index `<= m`, bosonic `> m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    SuperUnchangedF,
    SuperUnchangedB,
    SuperShiftedFF,
    SuperShiftedFB,
    SuperShiftedBF,
    SuperShiftedBB,
    ClassicalUnchanged,
    ClassicalShifted,
}

impl Formula {
    pub fn tag(&self) -> &'static str {
        match self {
            Formula::SuperUnchangedF => "super:10/00:k=F",
            Formula::SuperUnchangedB => "super:10/00:k=B",
            Formula::SuperShiftedFF => "super:10/10:k=F,q=F",
            Formula::SuperShiftedFB => "super:10/10:k=F,q=B",
            Formula::SuperShiftedBF => "super:10/10:k=B,q=F",
            Formula::SuperShiftedBB => "super:10/10:k=B,q=B",
            Formula::ClassicalUnchanged => "gl:10/00",
            Formula::ClassicalShifted => "gl:10/10",
        }
    }

    /// Picks the closed form from the index types alone.
    pub fn dispatch(m: usize, t: usize, k: usize, q: Option<usize>) -> Formula {
        if t <= m {
            return match q {
                None => Formula::ClassicalUnchanged,
                Some(_) => Formula::ClassicalShifted,
            };
        }
        match (k <= m, q.map(|q| q <= m)) {
            (true, None) => Formula::SuperUnchangedF,
            (false, None) => Formula::SuperUnchangedB,
            (true, Some(true)) => Formula::SuperShiftedFF,
            (true, Some(false)) => Formula::SuperShiftedFB,
            (false, Some(true)) => Formula::SuperShiftedBF,
            (false, Some(false)) => Formula::SuperShiftedBB,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One evaluated isoscalar factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoFactor {
    pub formula: Formula,
    /// Upper row `t` of the row pair `(t, t-1)`.
    pub row: usize,
    pub k: usize,
    pub q: Option<usize>,
    pub factors: FactorProduct,
    pub value: Radical,
}

fn finish(
    formula: Formula,
    row: usize,
    k: usize,
    q: Option<usize>,
    factors: FactorProduct,
) -> Result<IsoFactor> {
    match factors.evaluate() {
        Evaluation::Value { value, .. } => Ok(IsoFactor {
            formula,
            row,
            k,
            q,
            factors,
            value,
        }),
        Evaluation::Singular { residual } => Err(Error::SingularCoefficient {
            formula: formula.tag(),
            k,
            q,
            row,
            detail: format!("{residual} unpaired zero denominator(s) in {factors}"),
        }),
        Evaluation::NegativeRoot { product } => Err(Error::SingularCoefficient {
            formula: formula.tag(),
            k,
            q,
            row,
            detail: format!("negative product under root: {product}"),
        }),
    }
}

/// gl(m|t-m) ⊃ gl(m|t-m-1) isoscalar factor for row pair `(t, t-1)`, `t > m`.
///
/// `q = None` leaves row `t-1` unchanged.
pub fn iso_super(source: &GzPattern, t: usize, k: usize, q: Option<usize>) -> Result<IsoFactor> {
    let m = source.m();
    assert!(t > m && t <= source.r(), "super factor needs m < t <= r");
    assert!(k >= 1 && k <= t);
    let l = |i: usize, s: usize| source.l(i, s);
    let theta = |i: usize| source.theta(i, t - 1);
    let theta_sum = |lo: usize, hi: usize| (lo..=hi).map(theta).sum::<i64>();
    let formula = Formula::dispatch(m, t, k, q);
    let mut fp = FactorProduct::new();
    let lk = l(k, t);
    match (formula, q) {
        (Formula::SuperUnchangedF, None) => {
            fp.sign_power(k as i64 - 1).sign_power(theta_sum(k, m));
            for i in (1..=m).filter(|&i| i != k) {
                fp.root_num(lk - l(i, t) + 1).root_den(lk - l(i, t - 1));
            }
            for s in (m + 1)..t {
                fp.root_num(lk - l(s, t - 1));
            }
            for s in (m + 1)..=t {
                fp.root_den(lk - l(s, t) + 1);
            }
        }
        (Formula::SuperUnchangedB, None) => {
            for i in 1..=m {
                fp.root_num(l(i, t) - lk).root_den(l(i, t - 1) - lk + 1);
            }
            for s in (m + 1)..t {
                fp.root_num(l(s, t - 1) - lk + 1);
            }
            for s in ((m + 1)..=t).filter(|&s| s != k) {
                fp.root_den(l(s, t) - lk);
            }
        }
        (Formula::SuperShiftedFF, Some(q)) => {
            // No S(k, q) here: with it the coefficients are not orthogonal
            // once m >= 2.
            fp.sign_power((k + q) as i64)
                .sign_power(theta_sum(k.min(q) + 1, k.max(q).saturating_sub(1)));
            let delta = (k == q) as i64;
            if theta(q) == 1 {
                for i in (1..=m).filter(|&i| i != k && i != q) {
                    fp.root_num(l(i, t - 1) - l(k, t - 1) - 1 - delta + 2 * theta(i))
                        .root_num(l(i, t - 1) - l(q, t - 1))
                        .root_den(l(i, t) - lk)
                        .root_den(l(i, t) - l(q, t));
                }
                for s in (m + 1)..=t {
                    fp.root_num(l(q, t) - l(s, t)).root_den(lk - l(s, t) + 1);
                }
                for s in (m + 1)..t {
                    fp.root_num(lk - l(s, t - 1))
                        .root_den(l(q, t - 1) - l(s, t - 1));
                }
            }
            if k != q {
                fp.den(lk - l(q, t));
            }
        }
        (Formula::SuperShiftedFB, Some(q)) => {
            let lq1 = l(q, t - 1);
            fp.sign_power(k as i64).sign_power(theta_sum(1, k - 1));
            fp.root_den(lk - lq1);
            for i in (1..=m).filter(|&i| i != k) {
                fp.root_num(l(i, t - 1) - l(k, t - 1) - 1 + 2 * theta(i))
                    .root_num(l(i, t - 1) - lq1 + 1)
                    .root_den(l(i, t) - lk)
                    .root_den(l(i, t) - lq1);
            }
            for s in (m + 1)..=t {
                fp.root_num((l(s, t) - lq1).abs())
                    .root_den(lk - l(s, t) + 1);
            }
            for s in ((m + 1)..t).filter(|&s| s != q) {
                fp.root_num(lk - l(s, t - 1))
                    .root_den((l(s, t - 1) - lq1 + 1).abs());
            }
        }
        (Formula::SuperShiftedBF, Some(q)) => {
            let lq = l(q, t);
            fp.sign_power(q as i64).sign_power(theta_sum(q + 1, m));
            fp.root_den(lq - lk + 1);
            for i in 1..=m {
                fp.root_num(l(i, t) - lk).root_den(l(i, t - 1) - lk + 1);
            }
            for i in (1..=m).filter(|&i| i != q) {
                fp.root_num((l(q, t - 1) - l(i, t - 1)).abs())
                    .root_den((lq - l(i, t)).abs());
            }
            for s in ((m + 1)..=t).filter(|&s| s != k) {
                fp.root_num((lq - l(s, t)).abs())
                    .root_den((l(s, t) - lk).abs());
            }
            for s in (m + 1)..t {
                fp.root_num((l(s, t - 1) - lk + 1).abs())
                    .root_den((lq - l(s, t - 1) - 1).abs());
            }
        }
        (Formula::SuperShiftedBB, Some(q)) => {
            let lq1 = l(q, t - 1);
            if k > q {
                fp.negate();
            }
            fp.sign_power(theta_sum(1, m));
            for i in 1..=m {
                fp.root_num(l(i, t) - lk)
                    .root_num(l(i, t - 1) - lq1 + 1)
                    .root_den(l(i, t - 1) - lk + 1)
                    .root_den(l(i, t) - lq1);
            }
            for s in ((m + 1)..=t).filter(|&s| s != k) {
                fp.root_num((l(s, t) - lq1).abs())
                    .root_den((l(s, t) - lk).abs());
            }
            for s in ((m + 1)..t).filter(|&s| s != q) {
                fp.root_num((l(s, t - 1) - lk + 1).abs())
                    .root_den((l(s, t - 1) - lq1 + 1).abs());
            }
        }
        _ => unreachable!("dispatch is total for t > m"),
    }
    finish(formula, t, k, q, fp)
}

/// gl(t) ⊃ gl(t-1) isoscalar factor for row pair `(t, t-1)`, `t <= m`.
pub fn iso_classical(
    source: &GzPattern,
    t: usize,
    k: usize,
    q: Option<usize>,
) -> Result<IsoFactor> {
    assert!(t >= 1 && t <= source.m(), "classical factor needs t <= m");
    assert!(k >= 1 && k <= t);
    let l = |i: usize, s: usize| source.l(i, s);
    let lk = l(k, t);
    let mut fp = FactorProduct::new();
    let formula = Formula::dispatch(source.m(), t, k, q);
    match q {
        None => {
            for i in 1..t {
                fp.root_num(l(i, t - 1) - lk - 1);
            }
            for i in (1..=t).filter(|&i| i != k) {
                fp.root_den(l(i, t) - lk);
            }
        }
        Some(q) => {
            if k > q {
                fp.negate();
            }
            let lq1 = l(q, t - 1);
            for i in (1..t).filter(|&i| i != q) {
                fp.root_num(l(i, t - 1) - lk - 1)
                    .root_den(l(i, t - 1) - lq1 - 1);
            }
            for i in (1..=t).filter(|&i| i != k) {
                fp.root_num(l(i, t) - lq1).root_den(l(i, t) - lk);
            }
        }
    }
    finish(formula, t, k, q, fp)
}

fn iso_factor(source: &GzPattern, t: usize, k: usize, q: Option<usize>) -> Result<IsoFactor> {
    if t > source.m() {
        iso_super(source, t, k, q)
    } else {
        iso_classical(source, t, k, q)
    }
}

/// A single-box path `[mu] -> [mu]_{+k}` for the tensor component of
/// generator `j`: rows `r, ..., j` each gain one box, lower rows are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub source: GzPattern,
    pub target: GzPattern,
    pub j: usize,
    /// `(s, k_s)` for `s = r, r-1, ..., j`.
    pub increments: Vec<(usize, usize)>,
}

impl Transition {
    /// Top-row position that gains a box.
    pub fn k(&self) -> usize {
        self.increments[0].1
    }

    /// Recovers the path between two patterns, if they differ by one box in
    /// each of the rows `r..=j` and nowhere else.
    pub fn between(source: &GzPattern, target: &GzPattern, j: usize) -> Option<Transition> {
        let r = source.r();
        if target.m() != source.m() || target.n() != source.n() || j == 0 || j > r {
            return None;
        }
        let mut increments = Vec::new();
        for s in (1..=r).rev() {
            let diffs: Vec<(usize, i64)> = (1..=s)
                .map(|i| (i, target.mu(i, s) - source.mu(i, s)))
                .filter(|&(_, d)| d != 0)
                .collect();
            if s >= j {
                match diffs.as_slice() {
                    [(i, 1)] => increments.push((s, *i)),
                    _ => return None,
                }
            } else if !diffs.is_empty() {
                return None;
            }
        }
        Some(Transition {
            source: source.clone(),
            target: target.clone(),
            j,
            increments,
        })
    }
}

/// All valid single-box paths from `source` for generator index `j`.
pub fn transitions(source: &GzPattern, j: usize) -> Vec<Transition> {
    let r = source.r();
    let mut out = Vec::new();
    let mut incs = Vec::new();
    let mut target = source.clone();
    extend_paths(source, j, r, &mut target, &mut incs, &mut out);
    out
}

fn extend_paths(
    source: &GzPattern,
    j: usize,
    s: usize,
    target: &mut GzPattern,
    incs: &mut Vec<(usize, usize)>,
    out: &mut Vec<Transition>,
) {
    if s < j {
        if is_valid(target) {
            out.push(Transition {
                source: source.clone(),
                target: target.clone(),
                j,
                increments: incs.clone(),
            });
        }
        return;
    }
    for k in 1..=s {
        target.row_mut(s)[k - 1] += 1;
        incs.push((s, k));
        extend_paths(source, j, s - 1, target, incs, out);
        incs.pop();
        target.row_mut(s)[k - 1] -= 1;
    }
}

/// All valid single-box paths ending at `target`, i.e. the patterns one
/// box lower that `c_j^+` can map onto it.
pub fn predecessors(target: &GzPattern, j: usize) -> Vec<Transition> {
    let mut out = Vec::new();
    let mut source = target.clone();
    let mut incs = Vec::new();
    shrink_paths(target, j, target.r(), &mut source, &mut incs, &mut out);
    out
}

fn shrink_paths(
    target: &GzPattern,
    j: usize,
    s: usize,
    source: &mut GzPattern,
    incs: &mut Vec<(usize, usize)>,
    out: &mut Vec<Transition>,
) {
    if s < j {
        if is_valid(source) {
            out.push(Transition {
                source: source.clone(),
                target: target.clone(),
                j,
                increments: incs.clone(),
            });
        }
        return;
    }
    for k in 1..=s {
        if source.row(s)[k - 1] == 0 {
            continue;
        }
        source.row_mut(s)[k - 1] -= 1;
        incs.push((s, k));
        shrink_paths(target, j, s - 1, source, incs, out);
        incs.pop();
        source.row_mut(s)[k - 1] += 1;
    }
}

/// Every factor of one coefficient, for auditing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgcTrace {
    /// Exponent of the global `(-1)` prefactor.
    pub parity_exponent: i64,
    pub factors: Vec<IsoFactor>,
    pub value: RadicalSum,
}

pub fn cgc_trace(tr: &Transition) -> Result<CgcTrace> {
    let src = &tr.source;
    let m = src.m();
    let r = src.r();
    let j = tr.j;
    let parity_exponent: i64 = if j > m {
        (1..=m)
            .map(|i| (m..j).map(|q| src.theta(i, q)).sum::<i64>())
            .sum()
    } else {
        0
    };
    let mut factors = Vec::with_capacity(r - j + 1);
    for (idx, &(t, k)) in tr.increments.iter().enumerate() {
        let q = if t > j {
            Some(tr.increments[idx + 1].1)
        } else {
            None
        };
        factors.push(iso_factor(src, t, k, q)?);
    }
    let mut value = if parity_exponent.rem_euclid(2) == 1 {
        RadicalSum::from_integer(-1)
    } else {
        RadicalSum::one()
    };
    for f in &factors {
        value = &value * &RadicalSum::from_radical(f.value.clone());
    }
    Ok(CgcTrace {
        parity_exponent,
        factors,
        value,
    })
}

pub fn cgc(tr: &Transition) -> Result<RadicalSum> {
    cgc_trace(tr).map(|t| t.value)
}

/// Coefficient for an arbitrary pattern pair; zero unless they are joined by
/// a valid single-box path.
pub fn cgc_between(source: &GzPattern, target: &GzPattern, j: usize) -> Result<RadicalSum> {
    match Transition::between(source, target, j) {
        Some(tr) if is_valid(source) && is_valid(target) => cgc(&tr),
        _ => Ok(RadicalSum::zero()),
    }
}

impl fmt::Display for CgcTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parity prefactor (-1)^{}", self.parity_exponent)?;
        for fac in &self.factors {
            writeln!(
                f,
                "  row {} k={} q={} [{}] {} = {}",
                fac.row,
                fac.k,
                fac.q.map(|q| q.to_string()).unwrap_or_else(|| "-".into()),
                fac.formula,
                fac.factors,
                fac.value
            )?;
        }
        write!(f, "  value = {}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn pat(m: usize, n: usize, rows: &[&[i64]]) -> GzPattern {
        GzPattern::from_rows_top_down(m, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn vacuum_creation_coefficients_are_one() {
        let vac = GzPattern::vacuum(1, 1);
        let f = transitions(&vac, 1);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].target, pat(1, 1, &[&[1, 0], &[1]]));
        assert_eq!(cgc(&f[0]).unwrap(), RadicalSum::one());
        let b = transitions(&vac, 2);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].target, pat(1, 1, &[&[1, 0], &[0]]));
        assert_eq!(cgc(&b[0]).unwrap(), RadicalSum::one());
    }

    #[test]
    fn classical_row_one_is_trivial() {
        let src = pat(1, 1, &[&[1, 0], &[1]]);
        let f = iso_classical(&src, 1, 1, None).unwrap();
        assert_eq!(f.value, Radical::new(int(1), 1));
    }

    #[test]
    fn gl2_unchanged_factor_matches_spin_coupling() {
        // (1,0) ⊗ (a,b): sqrt((a - c + 1)/(a - b + 1)) for lower label c
        let src = pat(2, 1, &[&[2, 1, 0], &[2, 1], &[1]]);
        let f = iso_classical(&src, 2, 1, None).unwrap();
        assert_eq!(f.value.square(), rat(2, 2));
        let src = pat(2, 1, &[&[3, 1, 0], &[3, 1], &[2]]);
        let f = iso_classical(&src, 2, 1, None).unwrap();
        assert_eq!(f.value.square(), rat(2, 3));
    }

    #[test]
    fn sign_of_shifted_classical_factor_flips_for_k_above_q() {
        let src = pat(2, 1, &[&[2, 1, 0], &[2, 1], &[1]]);
        let a = iso_classical(&src, 2, 2, Some(1)).unwrap();
        assert!(a.factors.is_negative());
    }

    #[test]
    fn unchanged_fermion_factor_at_equal_indices_is_one() {
        // theta_q = 0 and k = q: empty root, no rational prefactor
        let src = pat(1, 1, &[&[2, 1], &[2]]);
        let f = iso_super(&src, 2, 1, Some(1)).unwrap();
        assert_eq!(f.value, Radical::new(int(1), 1));
    }

    #[test]
    fn two_boxes_in_one_row_is_not_a_path() {
        let src = GzPattern::vacuum(1, 1);
        let tgt = pat(1, 1, &[&[1, 1], &[1]]);
        assert!(Transition::between(&src, &tgt, 1).is_none());
        assert!(cgc_between(&src, &tgt, 1).unwrap().is_zero());
    }

    #[test]
    fn every_factor_squares_to_a_rational() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let sig = crate::gzbasis::Signature::new(m, n, 6, 3).unwrap();
            for src in crate::gzbasis::basis(&sig) {
                for j in 1..=m + n {
                    for tr in transitions(&src, j) {
                        let trace = cgc_trace(&tr).unwrap();
                        assert!(trace.value.len() <= 1);
                    }
                }
            }
        }
    }

    /// Rows of the coupling matrix `(source, j) -> target` for one source
    /// irrep must be orthonormal.
    fn assert_orthonormal(m: usize, n: usize, max_level: i64) {
        use crate::gzbasis::{enumerate_with_top, TopRow};
        use std::collections::BTreeMap;
        for level in 0..=max_level {
            for top in TopRow::all_at_level(m, n, level, None) {
                let sources = enumerate_with_top(&top, m, n).unwrap();
                let mut rows: BTreeMap<GzPattern, BTreeMap<(usize, usize), RadicalSum>> =
                    BTreeMap::new();
                for (si, src) in sources.iter().enumerate() {
                    for j in 1..=m + n {
                        for tr in transitions(src, j) {
                            let v = cgc(&tr).unwrap();
                            rows.entry(tr.target.clone())
                                .or_default()
                                .insert((si, j), v);
                        }
                    }
                }
                let rows: Vec<_> = rows.into_iter().collect();
                for (a, (ta, ra)) in rows.iter().enumerate() {
                    for (tb, rb) in &rows[a..] {
                        let mut dot = RadicalSum::zero();
                        for (key, v) in ra {
                            if let Some(w) = rb.get(key) {
                                dot += &(v * w);
                            }
                        }
                        let want = if ta == tb {
                            RadicalSum::one()
                        } else {
                            RadicalSum::zero()
                        };
                        assert_eq!(dot, want, "<{ta}|{tb}> from top {:?}", top.labels());
                    }
                }
            }
        }
    }

    #[test]
    fn coupling_is_orthonormal_for_one_fermion_label() {
        assert_orthonormal(1, 1, 4);
        assert_orthonormal(1, 2, 3);
    }

    #[test]
    fn coupling_is_orthonormal_for_several_fermion_labels() {
        assert_orthonormal(2, 1, 3);
        assert_orthonormal(2, 2, 2);
        assert_orthonormal(3, 1, 2);
    }

    #[test]
    fn antisymmetric_pair_gets_opposite_signs() {
        // (1,1,0) from (1,0,0): e2 (x) e3 and e3 (x) e2 must enter with opposite signs
        let tgt = pat(2, 1, &[&[1, 1, 0], &[1, 0], &[0]]);
        let a = cgc_between(&pat(2, 1, &[&[1, 0, 0], &[0, 0], &[0]]), &tgt, 2).unwrap();
        let b = cgc_between(&pat(2, 1, &[&[1, 0, 0], &[1, 0], &[0]]), &tgt, 3).unwrap();
        assert_eq!(a, -b);
        assert!(!a.is_zero());
    }
}
