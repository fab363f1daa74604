//! Reduced matrix elements `G_k([mu]^r) = ([mu]_{+k} || c^+ || [mu])`.
//!
//! These carry all of the dependence on `p`; the pattern dependence of a
//! generator matrix element sits in the Clebsch-Gordan coefficient.

use log::debug;

use crate::error::{Error, Result};
use crate::exactnum::RadicalSum;
use crate::factors::{Evaluation, FactorProduct};
use crate::gzbasis::{Signature, TopRow};

/// The even/odd indicators `E_j` and `O_j`.
#[derive(Clone, Copy, Debug)]
pub struct ParityFn;

impl ParityFn {
    pub fn even(j: i64) -> i64 {
        (j.rem_euclid(2) == 0) as i64
    }

    pub fn odd(j: i64) -> i64 {
        1 - Self::even(j)
    }
}

/// A reduced matrix element together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedElement {
    pub k: usize,
    pub top: TopRow,
    /// `None` when `[mu]_{+k}` is not a highest weight and the value is 0 by rule.
    pub factors: Option<FactorProduct>,
    /// Number of `0/0` factor pairs removed during evaluation.
    pub cancelled: usize,
    pub value: RadicalSum,
}

fn check_args(k: usize, top: &TopRow, sig: &Signature) -> Result<()> {
    let r = sig.r();
    if k == 0 || k > r {
        return Err(Error::IndexOutOfRange {
            what: "reduced element index k",
            index: k,
            max: r,
        });
    }
    if !top.satisfies_condition1(sig.m, sig.n) {
        return Err(Error::TopRow { top: top.0.clone() });
    }
    Ok(())
}

/// Factor lists for `G_k`, before evaluation.
pub fn g_factors(k: usize, top: &TopRow, sig: &Signature) -> FactorProduct {
    let (m, n, p) = (sig.m as i64, sig.n as i64, sig.p);
    let mu = |j: i64| top.0[(j - 1) as usize];
    let (e, o) = (ParityFn::even, ParityFn::odd);
    let mut fp = FactorProduct::new();
    let ki = k as i64;
    if ki <= m {
        let mk = mu(ki);
        // even k needs an overall minus under the root; odd k carries p
        let indicator = if ki % 2 == 0 {
            fp.root_num(-1);
            e
        } else {
            fp.root_num(p - mk + ki - 1);
            o
        };
        fp.root_num(indicator(m) * (mk + m - n - ki) + 1);
        for j in (1..=m).filter(|&j| j != ki) {
            fp.root_num(mk - mu(j) - ki + j);
        }
        // pairs over indices of the same parity as k
        let parity_shift = if ki % 2 == 0 { 0 } else { 1 };
        let count = if ki % 2 == 0 { m / 2 } else { (m + 1) / 2 };
        for j in 1..=count {
            let idx = 2 * j - parity_shift;
            if idx == ki {
                continue;
            }
            fp.root_den(mk - mu(idx) - ki + idx)
                .root_den(mk - mu(idx) - ki + idx + 1);
        }
        for j in 1..=n {
            let a = mk + mu(m + j) + m - j - ki + 2;
            fp.root_num(a).root_den(a - indicator(m + mu(m + j)));
        }
    } else {
        let kb = ki - m;
        let mb = mu(m + kb);
        fp.sign_power(((m + kb + 1)..=(m + n)).map(mu).sum());
        fp.root_num(o(mb) * (mb - kb + n) + 1);
        let ev = e(m + mb);
        let od = o(m + mb);
        fp.root_num(ev * (p + mb + m - kb) + 1);
        for j in 1..=(m / 2) {
            fp.root_num(ev * (mu(2 * j) + mb - 2 * j - kb + m + 1) + 1);
            fp.root_den(od * (mu(2 * j) + mb - 2 * j - kb + m) + 1);
        }
        for j in 1..=((m + 1) / 2) {
            fp.root_den(ev * (mu(2 * j - 1) + mb - 2 * j - kb + m + 1) + 1);
            fp.root_num(od * (mu(2 * j - 1) + mb - 2 * j - kb + m + 2) + 1);
        }
        for j in (1..=n).filter(|&j| j != kb) {
            let a = mu(m + j) - mb - j + kb;
            fp.root_num(a).root_den(a - o(mu(m + j) - mb));
        }
    }
    fp
}

pub fn g_detailed(k: usize, top: &TopRow, sig: &Signature) -> Result<ReducedElement> {
    check_args(k, top, sig)?;
    if !top.shifted(k, 1).satisfies_condition1(sig.m, sig.n) {
        return Ok(ReducedElement {
            k,
            top: top.clone(),
            factors: None,
            cancelled: 0,
            value: RadicalSum::zero(),
        });
    }
    let fp = g_factors(k, top, sig);
    match fp.evaluate() {
        Evaluation::Value { value, cancelled } => {
            if cancelled > 0 {
                debug!(
                    "G_{k}{:?} (p={}): cancelled {cancelled} zero pair(s) in {fp}",
                    top.0, sig.p
                );
            }
            Ok(ReducedElement {
                k,
                top: top.clone(),
                factors: Some(fp),
                cancelled,
                value: value.into(),
            })
        }
        Evaluation::Singular { residual } => Err(Error::SingularReducedElement {
            k,
            top: top.0.clone(),
            detail: format!("{residual} unpaired zero denominator(s) in {fp}"),
        }),
        Evaluation::NegativeRoot { product } => Err(Error::SingularReducedElement {
            k,
            top: top.0.clone(),
            detail: format!("negative product under root: {product}"),
        }),
    }
}

pub fn g(k: usize, top: &TopRow, sig: &Signature) -> Result<RadicalSum> {
    g_detailed(k, top, sig).map(|r| r.value)
}

/// Reduced element with the level-parity twist on the parafermion indices.
pub fn g_tilde(k: usize, top: &TopRow, sig: &Signature) -> Result<RadicalSum> {
    let v = g(k, top, sig)?;
    if k <= sig.m && top.level().rem_euclid(2) == 1 {
        Ok(-v)
    } else {
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn sig(m: usize, n: usize, p: i64) -> Signature {
        Signature::new(m, n, p, 10).unwrap()
    }

    fn sq(v: &RadicalSum) -> Rational {
        v.as_radical().map(|r| r.square()).unwrap_or_else(|| int(0))
    }

    #[test]
    fn parity_indicators_partition_the_integers() {
        for j in -5..6 {
            assert_eq!(ParityFn::even(j) + ParityFn::odd(j), 1);
        }
        assert_eq!(ParityFn::even(-2), 1);
        assert_eq!(ParityFn::odd(-3), 1);
    }

    #[test]
    fn vacuum_creation_gives_sqrt_p() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
            for p in 1..5 {
                let s = sig(m, n, p);
                let vac = TopRow(vec![0; m + n]);
                let d = g_detailed(1, &vac, &s).unwrap();
                assert_eq!(sq(&d.value), int(p), "m={m} n={n} p={p}");
                assert!(d.value.as_radical().unwrap().coefficient > int(0));
            }
        }
    }

    #[test]
    fn first_label_saturates_at_p() {
        let s = sig(1, 1, 3);
        assert!(g(1, &TopRow(vec![3, 0]), &s).unwrap().is_zero());
        assert!(g(1, &TopRow(vec![3, 2]), &s).unwrap().is_zero());
    }

    #[test]
    fn small_boson_value() {
        for p in 1..4 {
            let v = g(2, &TopRow(vec![1, 0]), &sig(1, 1, p)).unwrap();
            assert_eq!(v, RadicalSum::sqrt(&int(2)).unwrap());
        }
    }

    #[test]
    fn forbidden_shift_is_zero_by_rule() {
        // (0,0) -> (0,1) breaks the hook constraint
        let d = g_detailed(2, &TopRow(vec![0, 0]), &sig(1, 1, 2)).unwrap();
        assert!(d.factors.is_none());
        assert!(d.value.is_zero());
        // (1,1,0) -> (1,2,0) breaks ordering
        assert!(g(2, &TopRow(vec![1, 1, 0]), &sig(2, 1, 3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn invalid_input_top_row_is_rejected() {
        assert!(g(1, &TopRow(vec![0, 1]), &sig(1, 1, 2)).is_err());
        assert!(g(3, &TopRow(vec![0, 0]), &sig(1, 1, 2)).is_err());
    }

    #[test]
    fn one_one_closed_forms() {
        // Independent transcription of the m = n = 1 closed forms.
        for p in 1..9i64 {
            let s = sig(1, 1, p);
            for a in 0..=p {
                for b in 0..=(8 - a) {
                    let top = TopRow(vec![a, b]);
                    if !top.satisfies_condition1(1, 1) {
                        continue;
                    }
                    let g1 = if b % 2 == 0 {
                        if a + b == 0 {
                            int(p)
                        } else {
                            rat(a * (a + b + 1) * (p - a), a + b)
                        }
                    } else {
                        int(a * (p - a))
                    };
                    let g2 = if b % 2 == 0 {
                        int(a + b + 1)
                    } else {
                        rat((b + 1) * (p + b + 1), a + b)
                    };
                    let got1 = g(1, &top, &s).unwrap();
                    assert_eq!(sq(&got1), if a < p { g1 } else { int(0) }, "G1 {a},{b}");
                    let got2 = g(2, &top, &s).unwrap();
                    let allowed = a > 0;
                    assert_eq!(sq(&got2), if allowed { g2 } else { int(0) }, "G2 {a},{b}");
                    for v in [&got1, &got2] {
                        if let Some(r) = v.as_radical() {
                            assert!(r.coefficient >= int(0), "{a},{b} p={p} {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twist_only_touches_parafermion_indices() {
        let s = sig(1, 1, 4);
        let top = TopRow(vec![2, 1]);
        assert_eq!(g_tilde(1, &top, &s).unwrap(), -g(1, &top, &s).unwrap());
        assert_eq!(g_tilde(2, &top, &s).unwrap(), g(2, &top, &s).unwrap());
        let vac = TopRow(vec![0, 0]);
        assert_eq!(g_tilde(1, &vac, &s).unwrap(), g(1, &vac, &s).unwrap());
    }
}
