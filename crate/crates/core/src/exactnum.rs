//! Exact arithmetic over rational linear combinations of square roots.
//!
//! A [`RadicalSum`] is a finite map from square-free radicand to a nonzero
//! rational coefficient. Distinct square-free radicals are linearly
//! independent over the rationals, so the canonical map is unique and zero
//! testing is a map-emptiness test.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Trial-division bound used when splitting off the square-free part.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `coefficient * sqrt(radicand)` with a square-free radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Radical {
    pub coefficient: Rational,
    pub radicand: u64,
}

impl Radical {
    pub fn new(coefficient: Rational, radicand: u64) -> Self {
        debug_assert!(is_square_free(radicand));
        Radical {
            coefficient,
            radicand,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// `coefficient^2 * radicand`.
    pub fn square(&self) -> Rational {
        &self.coefficient * &self.coefficient * Rational::from_integer(BigInt::from(self.radicand))
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }
}

/// Returns `c * sqrt(d)` with `c >= 0`, `d` square-free and `c^2 d = q`.
pub fn sqrt_normalize(q: &Rational) -> Result<Radical> {
    sqrt_normalize_with_bound(q, DEFAULT_TRIAL_BOUND)
}

pub fn sqrt_normalize_with_bound(q: &Rational, bound: u64) -> Result<Radical> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand(q.to_string()));
    }
    if q.is_zero() {
        return Ok(Radical::new(Rational::zero(), 1));
    }
    let num = q.numer().to_biguint().expect("nonnegative");
    let den = q.denom().to_biguint().expect("positive");
    let (sn, dn) = square_free_split(&num, bound)?;
    let (sd, dd) = square_free_split(&den, bound)?;
    // sqrt(n/d) = sqrt(n d) / d = sn sd sqrt(dn dd) / den
    let g = dn.gcd(&dd);
    let radicand = (dn / g) * (dd / g);
    let coefficient = Rational::new(BigInt::from(sn * sd * BigUint::from(g)), BigInt::from(den));
    Ok(Radical::new(coefficient, radicand))
}

pub fn is_square_free(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Splits `n = s^2 * d` with `d` square-free.
fn square_free_split(n: &BigUint, bound: u64) -> Result<(BigUint, u64)> {
    if let Some(small) = n.to_u64() {
        return square_free_split_u64(small, bound).map(|(s, d)| (BigUint::from(s), d));
    }
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = 2u64;
    loop {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        if p > bound {
            // a leftover perfect square needs no further factoring
            let root = rest.sqrt();
            if &root * &root == rest {
                return Ok((
                    square * root,
                    free.to_u64()
                        .ok_or_else(|| Error::RadicandOverflow(free.to_string()))?,
                ));
            }
            return Err(Error::FactorizationBound {
                value: n.to_string(),
                bound,
            });
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        square *= pb.pow(e / 2);
        if e % 2 == 1 {
            free *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free *= rest;
    let d = free
        .to_u64()
        .ok_or_else(|| Error::RadicandOverflow(free.to_string()))?;
    Ok((square, d))
}

fn square_free_split_u64(n: u64, bound: u64) -> Result<(u64, u64)> {
    let mut rest = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if p > bound {
            let root = rest.isqrt();
            if root * root == rest {
                return Ok((square * root, free));
            }
            return Err(Error::FactorizationBound {
                value: n.to_string(),
                bound,
            });
        }
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok((square, free * rest))
}

/// Finite sum `sum_d c_d sqrt(d)` in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalSum {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        RadicalSum::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_radical(Radical::new(q, 1))
    }

    pub fn from_radical(r: Radical) -> Self {
        let mut terms = BTreeMap::new();
        if !r.coefficient.is_zero() {
            terms.insert(r.radicand, r.coefficient);
        }
        RadicalSum { terms }
    }

    /// `sqrt(q)` for a nonnegative rational.
    pub fn sqrt(q: &Rational) -> Result<Self> {
        sqrt_normalize(q).map(Self::from_radical)
    }

    /// Builds from raw `(coefficient, radicand)` pairs; radicands need not be
    /// square-free.
    pub fn from_terms<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, u64)>,
    {
        let mut out = RadicalSum::zero();
        for (c, d) in pairs {
            let root = sqrt_normalize(&Rational::from_integer(BigInt::from(d)))?;
            out.add_term(c * root.coefficient, root.radicand);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn coefficient(&self, radicand: u64) -> Option<&Rational> {
        self.terms.get(&radicand)
    }

    /// The value as a single radical, if it has at most one term.
    pub fn as_radical(&self) -> Option<Radical> {
        match self.terms.len() {
            0 => Some(Radical::new(Rational::zero(), 1)),
            1 => {
                let (&d, c) = self.terms.iter().next().unwrap();
                Some(Radical::new(c.clone(), d))
            }
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&d, c)| c.to_f64().unwrap_or(f64::NAN) * (d as f64).sqrt())
            .sum()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RadicalSum::zero();
        }
        RadicalSum {
            terms: self.terms.iter().map(|(&d, c)| (d, c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&int(n))
    }

    fn add_term(&mut self, c: Rational, d: u64) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Canonical JSON: `{"terms":[{"num":N,"den":D,"radicand":R},...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("radical sums always serialize")
    }
}

impl From<Radical> for RadicalSum {
    fn from(r: Radical) -> Self {
        RadicalSum::from_radical(r)
    }
}

impl From<i64> for RadicalSum {
    fn from(n: i64) -> Self {
        RadicalSum::from_integer(n)
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(mut self) -> RadicalSum {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -self.clone()
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (&d, c) in &rhs.terms {
            self.add_term(c.clone(), d);
        }
    }
}

impl SubAssign<&RadicalSum> for RadicalSum {
    fn sub_assign(&mut self, rhs: &RadicalSum) {
        for (&d, c) in &rhs.terms {
            self.add_term(-c.clone(), d);
        }
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(mut self, rhs: RadicalSum) -> RadicalSum {
        self -= &rhs;
        self
    }
}

impl Mul<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &rhs.terms {
                // d1, d2 square-free: sqrt(d1 d2) = g sqrt((d1/g)(d2/g))
                let g = d1.gcd(&d2);
                let d = (d1 / g)
                    .checked_mul(d2 / g)
                    .expect("radicand product overflows u64");
                out.add_term(c1 * c2 * int(g as i64), d);
            }
        }
        out
    }
}

impl Mul for RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: RadicalSum) -> RadicalSum {
        &self * &rhs
    }
}

impl fmt::Display for RadicalSum {
    /// Human-readable form, e.g. `3/2√2 - √3`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if d == 1 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "√{}", d)?;
            } else {
                write!(f, "{}√{}", a, d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        RadicalSum::from_radical(self.clone()).fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    num: serde_json::Number,
    den: serde_json::Number,
    radicand: u64,
}

#[derive(Serialize, Deserialize)]
struct SumJson {
    terms: Vec<TermJson>,
}

fn big_to_number(n: &BigInt) -> serde_json::Number {
    n.to_string()
        .parse()
        .expect("integers are valid JSON numbers")
}

fn number_to_big(n: &serde_json::Number) -> Option<BigInt> {
    n.to_string().parse().ok()
}

impl Serialize for RadicalSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SumJson {
            terms: self
                .terms
                .iter()
                .map(|(&d, c)| TermJson {
                    num: big_to_number(c.numer()),
                    den: big_to_number(c.denom()),
                    radicand: d,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadicalSum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SumJson::deserialize(d)?;
        let mut out = RadicalSum::zero();
        for t in raw.terms {
            let num = number_to_big(&t.num).ok_or_else(|| D::Error::custom("bad numerator"))?;
            let den = number_to_big(&t.den).ok_or_else(|| D::Error::custom("bad denominator"))?;
            if den.sign() != Sign::Plus {
                return Err(D::Error::custom("denominator must be positive"));
            }
            if !is_square_free(t.radicand) {
                return Err(D::Error::custom(format!(
                    "radicand {} is not square-free",
                    t.radicand
                )));
            }
            out.add_term(Rational::new(num, den), t.radicand);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(d: u64) -> RadicalSum {
        RadicalSum::from_radical(sqrt_normalize(&int(d as i64)).unwrap())
    }

    #[test]
    fn normalize_examples() {
        let r = sqrt_normalize(&int(8)).unwrap();
        assert_eq!((r.coefficient, r.radicand), (int(2), 2));
        let r = sqrt_normalize(&int(0)).unwrap();
        assert_eq!((r.coefficient, r.radicand), (int(0), 1));
        let r = sqrt_normalize(&rat(9, 2)).unwrap();
        assert_eq!((r.coefficient, r.radicand), (rat(3, 2), 2));
        let r = sqrt_normalize(&rat(1, 12)).unwrap();
        assert_eq!((r.coefficient, r.radicand), (rat(1, 6), 3));
    }

    #[test]
    fn negative_radicand_is_an_error() {
        assert!(matches!(
            sqrt_normalize(&int(-3)),
            Err(Error::NegativeRadicand(_))
        ));
    }

    #[test]
    fn trial_bound_is_enforced() {
        // 1000003 * 1000033 has no factor below a bound of 100
        let q = int(1_000_003 * 1_000_033);
        assert!(matches!(
            sqrt_normalize_with_bound(&q, 100),
            Err(Error::FactorizationBound { .. })
        ));
        // a prime cofactor below bound^2 is accepted
        let r = sqrt_normalize_with_bound(&int(4 * 1009), 100).unwrap();
        assert_eq!((r.coefficient, r.radicand), (int(2), 1009));
    }

    #[test]
    fn big_inputs_use_the_bigint_path() {
        let big = BigInt::from(u64::MAX) * BigInt::from(u64::MAX) * BigInt::from(12);
        let r = sqrt_normalize(&Rational::from_integer(big)).unwrap();
        assert_eq!(r.radicand, 3);
        assert_eq!(
            r.coefficient,
            Rational::from_integer(BigInt::from(u64::MAX) * BigInt::from(2))
        );
    }

    #[test]
    fn addition_examples() {
        let z = &(&s(2) + &s(8)) - &s(2).scale_int(3);
        assert!(z.is_zero());
        let a = s(3).scale(&rat(1, 2)) + s(3).scale(&rat(1, 3));
        assert_eq!(a, s(3).scale(&rat(5, 6)));
        let two = s(2) + s(3);
        assert_eq!(two.len(), 2);
        assert_eq!(two.coefficient(2), Some(&int(1)));
        assert_eq!(two.coefficient(3), Some(&int(1)));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&s(2) * &s(2), RadicalSum::from_integer(2));
        assert_eq!(&s(2) * &s(6), s(3).scale_int(2));
        let a = RadicalSum::one() + s(2);
        let b = RadicalSum::one() - s(2);
        assert_eq!(a * b, RadicalSum::from_integer(-1));
    }

    #[test]
    fn float_examples() {
        assert!((s(2).to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(RadicalSum::zero().to_f64(), 0.0);
        assert_eq!((RadicalSum::from_integer(2) + s(1)).to_f64(), 3.0);
    }

    #[test]
    fn display_and_json() {
        let v = s(8).scale(&rat(-3, 4)) + RadicalSum::from_rational(rat(1, 2));
        assert_eq!(v.to_string(), "1/2 - 3/2√2");
        assert_eq!(
            v.to_json(),
            r#"{"terms":[{"num":1,"den":2,"radicand":1},{"num":-3,"den":2,"radicand":2}]}"#
        );
        let back: RadicalSum = serde_json::from_str(&v.to_json()).unwrap();
        assert_eq!(back, v);
        assert_eq!(RadicalSum::zero().to_json(), r#"{"terms":[]}"#);
        assert!(serde_json::from_str::<RadicalSum>(
            r#"{"terms":[{"num":1,"den":1,"radicand":4}]}"#
        )
        .is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn term() -> impl Strategy<Value = (Rational, u64)> {
            (
                -20i64..=20,
                1i64..=9,
                prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 12, 18, 30]),
            )
                .prop_map(|(n, d, r)| (rat(n, d), r))
        }

        fn radical_sum() -> impl Strategy<Value = RadicalSum> {
            prop::collection::vec(term(), 0..4).prop_map(|t| RadicalSum::from_terms(t).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(2500))]

            #[test]
            fn ring_axioms(a in radical_sum(), b in radical_sum(), c in radical_sum()) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a * &RadicalSum::one(), a.clone());
                prop_assert!((&a - &a).is_zero());
            }

            #[test]
            fn normalization_is_idempotent(n in 0i64..=40, d in 1i64..=40, r in 1u64..=200) {
                let q = rat(n, d) * rat(n, d) * int(r as i64);
                let x = sqrt_normalize(&q).unwrap();
                prop_assert!(is_square_free(x.radicand));
                prop_assert_eq!(x.square(), q.clone());
                let again = sqrt_normalize(&x.square()).unwrap();
                prop_assert_eq!(again, x);
            }

            #[test]
            fn a_radical_squares_to_a_rational(c in -30i64..=30, d in 1i64..=12, r in 1u64..=500) {
                let x = RadicalSum::from_terms([(rat(c, d), r)]).unwrap();
                let sq = &x * &x;
                prop_assert!(sq.is_rational());
                let rad = x.as_radical().unwrap_or_else(|| Radical::new(int(0), 1));
                prop_assert_eq!(sq.as_rational().unwrap_or_else(|| int(0)), rad.square());
            }

            #[test]
            fn zero_iff_equal(a in radical_sum(), b in radical_sum()) {
                prop_assert_eq!((&a - &b).is_zero(), a == b);
                prop_assert!((a.to_f64() - b.to_f64()).abs() < 1e-9 || a != b);
            }
        }
    }
}
