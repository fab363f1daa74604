//! Exact generator matrices on a level-truncated Fock space `V(p)`.
//!
//! Both algebras act on the same basis of Gelfand-Zetlin patterns. The
//! orthosymplectic action is assembled from Clebsch-Gordan coefficients and
//! reduced matrix elements; the `pso` action is obtained from it by a level
//! parity twist on the parafermions.

mod golden;
mod operator;
mod verify;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::RadicalSum;
use crate::gzbasis::{basis, GzPattern, Signature};
use crate::isoscalar::{cgc, predecessors, transitions};
use crate::reduced::{g, g_tilde};

pub use golden::{section4_action, verify_section4};
pub use operator::OperatorMatrix;
pub use verify::{
    bracket_pair, check_adjointness, check_cartan_recurrence, check_dual_route, check_nilpotency,
    check_vacuum, check_variant_link, relation_triples, verify_gl_embedding, verify_relations,
    RelationTriple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Parafermion,
    Paraboson,
}

/// Which relative relations the two families obey.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Relative parafermion relations: the Lie superalgebra osp(2m+1|2n).
    Osp,
    /// Relative paraboson relations: the Z2xZ2-graded pso(2m+1|2n).
    Pso,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "osp" => Ok(Variant::Osp),
            "pso" => Ok(Variant::Pso),
            _ => Err(Error::GeneratorSpec(format!("unknown variant `{s}`"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Osp => "osp",
            Variant::Pso => "pso",
        })
    }
}

/// Element of Z2 x Z2. The orthosymplectic Z2 parity is embedded as
/// `(0, parity)`, so one bracket rule serves both algebras.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Z2Z2Degree(pub u8, pub u8);

impl Z2Z2Degree {
    pub fn add(self, other: Self) -> Self {
        Z2Z2Degree((self.0 + other.0) % 2, (self.1 + other.1) % 2)
    }

    /// `a1 b1 + a2 b2 mod 2`; odd means the bracket is an anticommutator.
    pub fn dot(self, other: Self) -> u8 {
        (self.0 * other.0 + self.1 * other.1) % 2
    }
}

impl fmt::Display for Z2Z2Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// `f_j^±` or `b_j^±` of one variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorLabel {
    pub family: Family,
    /// 1-based index within the family.
    pub index: usize,
    /// `+1` for creation, `-1` for annihilation.
    pub sign: i64,
    pub variant: Variant,
}

impl GeneratorLabel {
    pub fn f(index: usize, sign: i64, variant: Variant) -> Self {
        GeneratorLabel {
            family: Family::Parafermion,
            index,
            sign,
            variant,
        }
    }

    pub fn b(index: usize, sign: i64, variant: Variant) -> Self {
        GeneratorLabel {
            family: Family::Paraboson,
            index,
            sign,
            variant,
        }
    }

    /// Unified index `j` of `c_j` (parabosons follow the parafermions).
    pub fn unified(&self, m: usize) -> usize {
        match self.family {
            Family::Parafermion => self.index,
            Family::Paraboson => m + self.index,
        }
    }

    pub fn from_unified(j: usize, m: usize, sign: i64, variant: Variant) -> Self {
        if j <= m {
            Self::f(j, sign, variant)
        } else {
            Self::b(j - m, sign, variant)
        }
    }

    pub fn degree(&self) -> Z2Z2Degree {
        match (self.variant, self.family) {
            (Variant::Pso, Family::Parafermion) => Z2Z2Degree(1, 1),
            (Variant::Pso, Family::Paraboson) => Z2Z2Degree(1, 0),
            (Variant::Osp, Family::Parafermion) => Z2Z2Degree(0, 0),
            (Variant::Osp, Family::Paraboson) => Z2Z2Degree(0, 1),
        }
    }

    pub fn is_creation(&self) -> bool {
        self.sign > 0
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        GeneratorLabel { variant, ..self }
    }

    pub fn conjugate(self) -> Self {
        GeneratorLabel {
            sign: -self.sign,
            ..self
        }
    }

    /// Parses `f1+`, `b2-` (case-insensitive family letter).
    pub fn parse(spec: &str, variant: Variant) -> Result<Self> {
        let bad = || Error::GeneratorSpec(spec.to_string());
        let s = spec.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_lowercase()) {
            Some('f') => Family::Parafermion,
            Some('b') => Family::Paraboson,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let (digits, sign) = match rest.strip_suffix('+') {
            Some(d) => (d, 1),
            None => (rest.strip_suffix('-').ok_or_else(bad)?, -1),
        };
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(GeneratorLabel {
            family,
            index,
            sign,
            variant,
        })
    }

    pub fn check_range(&self, sig: &Signature) -> Result<()> {
        let max = match self.family {
            Family::Parafermion => sig.m,
            Family::Paraboson => sig.n,
        };
        if self.index == 0 || self.index > max {
            return Err(Error::IndexOutOfRange {
                what: match self.family {
                    Family::Parafermion => "parafermion index",
                    Family::Paraboson => "paraboson index",
                },
                index: self.index,
                max,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::Parafermion => 'f',
            Family::Paraboson => 'b',
        };
        let sign = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{letter}{}{sign}", self.index)
    }
}

/// How the `pso` action is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// osp action times `±(-1)^{level}` on the parafermions.
    Twist,
    /// Twisted reduced elements `G~_k` inserted directly into the
    /// Clebsch-Gordan expansion.
    TildeReduced,
}

/// Finite vector: pattern -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCombination {
    terms: BTreeMap<GzPattern, RadicalSum>,
}

impl LinearCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis_vector(pattern: GzPattern) -> Self {
        let mut v = Self::new();
        v.add(pattern, &RadicalSum::one());
        v
    }

    pub fn add(&mut self, pattern: GzPattern, value: &RadicalSum) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(pattern) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(value.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GzPattern, &RadicalSum)> {
        self.terms.iter()
    }

    pub fn get(&self, pattern: &GzPattern) -> RadicalSum {
        self.terms.get(pattern).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Ordered basis of the truncated module with a reverse index.
#[derive(Debug)]
pub struct FockBasis {
    pub sig: Signature,
    pub patterns: Vec<GzPattern>,
    pub levels: Vec<i64>,
    index: HashMap<GzPattern, usize>,
}

impl FockBasis {
    pub fn new(sig: Signature) -> Arc<Self> {
        let patterns = basis(&sig);
        let levels = patterns.iter().map(GzPattern::level).collect();
        let index = patterns
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Arc::new(FockBasis {
            sig,
            patterns,
            levels,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn index_of(&self, pattern: &GzPattern) -> Option<usize> {
        self.index.get(pattern).copied()
    }

    pub fn vacuum(&self) -> usize {
        0
    }
}

/// Rayon pool sized by `PARASTAT_THREADS` (default: rayon's choice).
pub(crate) fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = std::env::var("PARASTAT_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            builder = builder.num_threads(n);
        }
        builder.build().expect("thread pool")
    })
}

fn keep(target: &GzPattern, sig: &Signature) -> bool {
    target.mu(1, target.r()) <= sig.p && target.level() <= sig.level_cap as i64
}

/// `±(-1)^{level}` factor of the twist, for a parafermion acting on `source`.
fn twist_sign(gen: &GeneratorLabel, source: &GzPattern) -> i64 {
    if gen.variant == Variant::Pso && gen.family == Family::Parafermion {
        let parity = if source.level().rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        gen.sign * parity
    } else {
        1
    }
}

/// Image of one basis vector, deleting targets outside the truncation.
pub fn apply_basis(
    gen: &GeneratorLabel,
    source: &GzPattern,
    sig: &Signature,
    route: Route,
) -> Result<Vec<(GzPattern, RadicalSum)>> {
    gen.check_range(sig)?;
    let j = gen.unified(sig.m);
    let tilde = gen.variant == Variant::Pso && route == Route::TildeReduced;
    let reduced = |k: usize, top: &crate::gzbasis::TopRow| {
        if tilde {
            g_tilde(k, top, sig)
        } else {
            g(k, top, sig)
        }
    };
    let mut out: BTreeMap<GzPattern, RadicalSum> = BTreeMap::new();
    if gen.is_creation() {
        for tr in transitions(source, j) {
            if !keep(&tr.target, sig) {
                continue;
            }
            let gk = reduced(tr.k(), &source.top())?;
            if gk.is_zero() {
                continue;
            }
            let c = &cgc(&tr)? * &gk;
            *out.entry(tr.target).or_default() += &c;
        }
    } else {
        for tr in predecessors(source, j) {
            if !keep(&tr.source, sig) {
                continue;
            }
            let gk = reduced(tr.k(), &tr.source.top())?;
            if gk.is_zero() {
                continue;
            }
            let c = &cgc(&tr)? * &gk;
            *out.entry(tr.source).or_default() += &c;
        }
    }
    let sign = if tilde { 1 } else { twist_sign(gen, source) };
    Ok(out
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(p, v)| (p, if sign < 0 { -v } else { v }))
        .collect())
}

pub fn apply(
    gen: &GeneratorLabel,
    v: &LinearCombination,
    sig: &Signature,
) -> Result<LinearCombination> {
    let mut out = LinearCombination::new();
    for (pattern, coeff) in v.terms() {
        for (target, value) in apply_basis(gen, pattern, sig, Route::Twist)? {
            out.add(target, &(coeff * &value));
        }
    }
    Ok(out)
}

/// Matrix of a generator on `basis`, built column by column in parallel.
pub fn matrix(gen: &GeneratorLabel, basis: &Arc<FockBasis>) -> Result<OperatorMatrix> {
    matrix_with_route(gen, basis, Route::Twist)
}

pub fn matrix_with_route(
    gen: &GeneratorLabel,
    basis: &Arc<FockBasis>,
    route: Route,
) -> Result<OperatorMatrix> {
    gen.check_range(&basis.sig)?;
    let sig = basis.sig;
    let cols: Result<Vec<Vec<(usize, RadicalSum)>>> = pool().install(|| {
        basis
            .patterns
            .par_iter()
            .map(|src| {
                let mut col: Vec<(usize, RadicalSum)> = apply_basis(gen, src, &sig, route)?
                    .into_iter()
                    .map(|(t, v)| {
                        let i = basis.index_of(&t).expect("kept targets lie in the basis");
                        (i, v)
                    })
                    .collect();
                col.sort_by_key(|e| e.0);
                Ok(col)
            })
            .collect()
    });
    // creation from the top level loses its deleted targets
    let cap = sig.level_cap as i64;
    let exact_up_to = if gen.is_creation() { cap - 1 } else { cap };
    Ok(OperatorMatrix::from_columns(
        basis.clone(),
        gen.degree(),
        gen.sign,
        exact_up_to,
        cols?,
    ))
}

/// Every generator of a signature, parafermions first, creation before
/// annihilation within each index.
pub fn all_generators(sig: &Signature, variant: Variant) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    for j in 1..=sig.m {
        for s in [1, -1] {
            out.push(GeneratorLabel::f(j, s, variant));
        }
    }
    for j in 1..=sig.n {
        for s in [1, -1] {
            out.push(GeneratorLabel::b(j, s, variant));
        }
    }
    out
}

/// Matrices of all generators, keyed by label.
pub fn generator_matrices(
    basis: &Arc<FockBasis>,
    variant: Variant,
) -> Result<BTreeMap<GeneratorLabel, OperatorMatrix>> {
    all_generators(&basis.sig, variant)
        .into_iter()
        .map(|gen| matrix(&gen, basis).map(|m| (gen, m)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn sig(m: usize, n: usize, p: i64, cap: usize) -> Signature {
        Signature::new(m, n, p, cap).unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["f1+", "b2-", "F3-", "b10+"] {
            let g = GeneratorLabel::parse(s, Variant::Pso).unwrap();
            assert_eq!(g.to_string(), s.to_lowercase());
        }
        for bad in ["", "x1+", "f+", "f0+", "f1", "f1*", "b-1-"] {
            assert!(GeneratorLabel::parse(bad, Variant::Osp).is_err(), "{bad}");
        }
    }

    #[test]
    fn degrees_pick_the_right_brackets() {
        let f = GeneratorLabel::f(1, 1, Variant::Pso).degree();
        let b = GeneratorLabel::b(1, 1, Variant::Pso).degree();
        assert_eq!(f.dot(f), 0);
        assert_eq!(f.dot(b), 1);
        assert_eq!(b.dot(b), 1);
        assert_eq!(f.add(f), Z2Z2Degree(0, 0));
        assert_eq!(f.add(b), Z2Z2Degree(0, 1));
        let fo = GeneratorLabel::f(1, 1, Variant::Osp).degree();
        let bo = GeneratorLabel::b(1, 1, Variant::Osp).degree();
        assert_eq!((fo.dot(fo), fo.dot(bo), bo.dot(bo)), (0, 0, 1));
    }

    #[test]
    fn vacuum_creation() {
        let s = sig(1, 1, 2, 3);
        let v = LinearCombination::basis_vector(GzPattern::vacuum(1, 1));
        let out = apply(&GeneratorLabel::f(1, 1, Variant::Osp), &v, &s).unwrap();
        assert_eq!(out.len(), 1);
        let (t, c) = out.terms().next().unwrap();
        assert_eq!(t.rows_top_down(), vec![vec![1, 0], vec![1]]);
        assert_eq!(*c, RadicalSum::sqrt(&int(2)).unwrap());
        let pso = apply(&GeneratorLabel::f(1, 1, Variant::Pso), &v, &s).unwrap();
        assert_eq!(pso, out);
    }

    #[test]
    fn annihilators_kill_the_vacuum() {
        let s = sig(2, 1, 2, 2);
        let v = LinearCombination::basis_vector(GzPattern::vacuum(2, 1));
        for gen in all_generators(&s, Variant::Osp) {
            if !gen.is_creation() {
                assert!(apply(&gen, &v, &s).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn out_of_range_generator_is_an_error() {
        let s = sig(1, 1, 2, 2);
        let b = FockBasis::new(s);
        assert!(matrix(&GeneratorLabel::b(2, 1, Variant::Osp), &b).is_err());
    }
}
