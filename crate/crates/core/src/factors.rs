//! Products of small integer factors, some of them under a square root.
//!
//! The closed-form matrix-element formulas are all of the shape
//! `± (prod a_i / prod b_i) * sqrt(prod c_i / prod d_i)` with integer linear
//! factors. Keeping the factors as lists (rather than multiplying them out)
//! lets indeterminate `0/0` boundary cases be resolved by pairing zero
//! factors, and lets a leftover zero denominator fail loudly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactnum::{Radical, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorProduct {
    negative: bool,
    root_num: Vec<i64>,
    root_den: Vec<i64>,
    num: Vec<i64>,
    den: Vec<i64>,
}

/// Result of evaluating a [`FactorProduct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    /// Exact value; `cancelled` counts zero/zero factor pairs removed.
    Value { value: Radical, cancelled: usize },
    /// A zero factor in a denominator had no numerator zero to pair with.
    Singular { residual: usize },
    /// The product under the square root is negative.
    NegativeRoot { product: String },
}

impl FactorProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn negate(&mut self) -> &mut Self {
        self.negative = !self.negative;
        self
    }

    /// Multiplies by `(-1)^exponent`.
    pub fn sign_power(&mut self, exponent: i64) -> &mut Self {
        if exponent.rem_euclid(2) == 1 {
            self.negate();
        }
        self
    }

    pub fn root_num(&mut self, x: i64) -> &mut Self {
        self.root_num.push(x);
        self
    }

    pub fn root_den(&mut self, x: i64) -> &mut Self {
        self.root_den.push(x);
        self
    }

    pub fn num(&mut self, x: i64) -> &mut Self {
        self.num.push(x);
        self
    }

    pub fn den(&mut self, x: i64) -> &mut Self {
        self.den.push(x);
        self
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn evaluate(&self) -> Evaluation {
        let zeros = |v: &[i64]| v.iter().filter(|&&x| x == 0).count();
        // [root num, root den, plain num, plain den]
        let mut z = [
            zeros(&self.root_num),
            zeros(&self.root_den),
            zeros(&self.num),
            zeros(&self.den),
        ];
        let mut cancelled = 0;
        for (a, b) in [(0, 1), (2, 3), (2, 1), (0, 3)] {
            let c = z[a].min(z[b]);
            z[a] -= c;
            z[b] -= c;
            cancelled += c;
        }
        let [zrn, zrd, zpn, zpd] = z;
        if zrd + zpd > 0 {
            return Evaluation::Singular {
                residual: zrd + zpd,
            };
        }
        if zrn + zpn > 0 {
            return Evaluation::Value {
                value: Radical::new(Rational::from_integer(BigInt::from(0)), 1),
                cancelled,
            };
        }

        let nonzero = |v: &[i64]| v.iter().copied().filter(|&x| x != 0).collect::<Vec<_>>();
        let root_num = nonzero(&self.root_num);
        let root_den = nonzero(&self.root_den);
        let root_negatives = root_num.iter().chain(&root_den).filter(|&&x| x < 0).count();
        if root_negatives % 2 == 1 {
            return Evaluation::NegativeRoot {
                product: self.to_string(),
            };
        }

        let mut exponents: BTreeMap<u64, i64> = BTreeMap::new();
        for &x in &root_num {
            add_prime_exponents(&mut exponents, x.unsigned_abs(), 1);
        }
        for &x in &root_den {
            add_prime_exponents(&mut exponents, x.unsigned_abs(), -1);
        }
        let mut coefficient = Rational::one();
        let mut radicand = 1u64;
        for (&p, &e) in &exponents {
            let half = e.div_euclid(2);
            if e.rem_euclid(2) == 1 {
                radicand = radicand.checked_mul(p).expect("radicand overflow");
            }
            let pp = Rational::from_integer(BigInt::from(p).pow(half.unsigned_abs() as u32));
            if half >= 0 {
                coefficient *= pp;
            } else {
                coefficient /= pp;
            }
        }

        let mut negative = self.negative;
        let num = nonzero(&self.num);
        let den = nonzero(&self.den);
        for &x in num.iter().chain(&den) {
            if x < 0 {
                negative = !negative;
            }
        }
        let plain_num: BigInt = num.iter().map(|x| BigInt::from(x.unsigned_abs())).product();
        let plain_den: BigInt = den.iter().map(|x| BigInt::from(x.unsigned_abs())).product();
        coefficient *= Rational::new(plain_num, plain_den);
        if negative {
            coefficient = -coefficient;
        }
        Evaluation::Value {
            value: Radical::new(coefficient, radicand),
            cancelled,
        }
    }
}

fn add_prime_exponents(acc: &mut BTreeMap<u64, i64>, mut n: u64, sign: i64) {
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *acc.entry(p).or_insert(0) += sign;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        *acc.entry(n).or_insert(0) += sign;
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    if v.is_empty() {
        return write!(f, "1");
    }
    for x in v {
        write!(f, "({})", x)?;
    }
    Ok(())
}

impl fmt::Display for FactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.negative { "-" } else { "+" })?;
        if !self.num.is_empty() || !self.den.is_empty() {
            write_list(f, &self.num)?;
            write!(f, "/")?;
            write_list(f, &self.den)?;
            write!(f, " ")?;
        }
        write!(f, "sqrt[")?;
        write_list(f, &self.root_num)?;
        write!(f, "/")?;
        write_list(f, &self.root_den)?;
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn value(fp: &FactorProduct) -> Radical {
        match fp.evaluate() {
            Evaluation::Value { value, .. } => value,
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn plain_and_root_parts_combine() {
        let mut fp = FactorProduct::new();
        fp.root_num(8)
            .root_num(3)
            .root_den(4)
            .num(1)
            .den(3)
            .negate();
        // -(1/3) sqrt(24/4) = -(1/3) sqrt 6
        assert_eq!(value(&fp), Radical::new(rat(-1, 3), 6));
    }

    #[test]
    fn negative_factors_pair_up() {
        let mut fp = FactorProduct::new();
        fp.root_num(-2).root_den(-8);
        assert_eq!(value(&fp), Radical::new(rat(1, 2), 1));
        let mut fp = FactorProduct::new();
        fp.root_num(-2);
        assert!(matches!(fp.evaluate(), Evaluation::NegativeRoot { .. }));
    }

    #[test]
    fn zero_over_zero_cancels_pairwise() {
        let mut fp = FactorProduct::new();
        fp.root_num(0).root_num(5).root_den(0);
        match fp.evaluate() {
            Evaluation::Value { value, cancelled } => {
                assert_eq!(value, Radical::new(int(1), 5));
                assert_eq!(cancelled, 1);
            }
            other => panic!("{:?}", other),
        }
        let mut fp = FactorProduct::new();
        fp.root_num(0).root_num(0).root_den(0);
        assert!(value(&fp).is_zero());
        let mut fp = FactorProduct::new();
        fp.root_num(0).root_den(0).den(0);
        assert_eq!(fp.evaluate(), Evaluation::Singular { residual: 1 });
    }
}
