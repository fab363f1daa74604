//! The defining `(2m+2n+1)`-dimensional realization of pso(2m+1|2n).
//!
//! This is an oracle that needs no representation theory: generators are
//! sparse `e_ij` combinations, brackets are matrix products, and every triple
//! relation can be checked by brute force.
//!
//! Index layout (1-based): `1..=m` and `m+1..=2m` are the two fermionic
//! halves, `2m+1` is the middle row, then `2m+2..=2m+1+n` and
//! `2m+2+n..=2m+1+2n` are the two bosonic halves.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::{RadicalSum, Rational};
use crate::fockmodule::{relation_triples, Family, GeneratorLabel, Variant, Z2Z2Degree};
use crate::report::{Check, Counterexample, Report};

/// Dense exact square matrix with a Z2 x Z2 degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    dim: usize,
    entries: Vec<RadicalSum>,
    pub degree: Z2Z2Degree,
}

impl GradedMatrix {
    pub fn zero(dim: usize, degree: Z2Z2Degree) -> Self {
        GradedMatrix {
            dim,
            entries: vec![RadicalSum::zero(); dim * dim],
            degree,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &RadicalSum {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    /// Adds `c` at 1-based `(i, j)`.
    pub fn add_at(&mut self, i: usize, j: usize, c: &RadicalSum) {
        self.entries[(i - 1) * self.dim + (j - 1)] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalSum::is_zero)
    }

    /// Nonzero entries `(i, j, value)`, 1-based, row-major.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &RadicalSum)> {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / d + 1, idx % d + 1, v))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut out = GradedMatrix::zero(d, self.degree.add(other.degree));
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if !b.is_zero() {
                        out.entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self + c * other`; keeps the degree of `self`.
    pub fn add_scaled(&self, other: &Self, c: &RadicalSum) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (o, v) in out.entries.iter_mut().zip(&other.entries) {
            if !v.is_zero() {
                *o += &(c * v);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &RadicalSum::from_integer(-1))
    }

    pub fn scale(&self, c: &RadicalSum) -> Self {
        GradedMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|v| c * v).collect(),
            degree: self.degree,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<&RadicalSum>> = self
            .entries
            .chunks(self.dim)
            .map(|r| r.iter().collect())
            .collect();
        json!({
            "dimension": self.dim,
            "degree": [self.degree.0, self.degree.1],
            "entries": rows,
        })
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells.chunks(self.dim) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// `AB - (-1)^{a.b} BA`.
pub fn graded_bracket(a: &GradedMatrix, b: &GradedMatrix) -> Result<GradedMatrix> {
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    let c = if a.degree.dot(b.degree) == 1 { 1 } else { -1 };
    let mut out = ab.add_scaled(&ba, &RadicalSum::from_integer(c))?;
    out.degree = a.degree.add(b.degree);
    Ok(out)
}

pub fn dimension(m: usize, n: usize) -> usize {
    2 * m + 2 * n + 1
}

/// Matrix of a para-operator in the defining realization. The variant of
/// the label is ignored: the realization is the pso one, with `f` of degree
/// (1,1) and `b` of degree (1,0).
pub fn generator(gen: &GeneratorLabel, m: usize, n: usize) -> Result<GradedMatrix> {
    let (limit, what) = match gen.family {
        Family::Parafermion => (m, "parafermion index"),
        Family::Paraboson => (n, "paraboson index"),
    };
    if gen.index == 0 || gen.index > limit {
        return Err(Error::IndexOutOfRange {
            what,
            index: gen.index,
            max: limit,
        });
    }
    let label = gen.with_variant(Variant::Pso);
    let mut out = GradedMatrix::zero(dimension(m, n), label.degree());
    let r2 = RadicalSum::sqrt(&Rational::from_integer(2.into()))?;
    let neg = -&r2;
    let mid = 2 * m + 1;
    let j = gen.index;
    let (a, b) = match (gen.family, gen.sign > 0) {
        (Family::Parafermion, true) => ((j, mid, &r2), (mid, j + m, &neg)),
        (Family::Parafermion, false) => ((mid, j, &r2), (j + m, mid, &neg)),
        (Family::Paraboson, true) => ((mid, mid + n + j, &r2), (mid + j, mid, &r2)),
        (Family::Paraboson, false) => ((mid, mid + j, &r2), (mid + n + j, mid, &neg)),
    };
    out.add_at(a.0, a.1, a.2);
    out.add_at(b.0, b.1, b.2);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    Fermi,
    Middle,
    Bose,
}

fn block(i: usize, m: usize) -> Block {
    match i.cmp(&(2 * m + 1)) {
        std::cmp::Ordering::Less => Block::Fermi,
        std::cmp::Ordering::Equal => Block::Middle,
        std::cmp::Ordering::Greater => Block::Bose,
    }
}

/// Degree carried by the block pair of entry `(i, j)`; `None` for the
/// middle diagonal entry, which is always zero.
pub fn block_degree(i: usize, j: usize, m: usize) -> Option<Z2Z2Degree> {
    use Block::*;
    match (block(i, m), block(j, m)) {
        (Fermi, Fermi) | (Bose, Bose) => Some(Z2Z2Degree(0, 0)),
        (Fermi, Middle) | (Middle, Fermi) => Some(Z2Z2Degree(1, 1)),
        (Middle, Bose) | (Bose, Middle) => Some(Z2Z2Degree(1, 0)),
        (Fermi, Bose) | (Bose, Fermi) => Some(Z2Z2Degree(0, 1)),
        (Middle, Middle) => None,
    }
}

/// First entry outside the blocks allowed for the matrix's degree.
pub fn grading_violation(x: &GradedMatrix, m: usize) -> Option<(usize, usize)> {
    x.nonzeros()
        .find(|(i, j, _)| block_degree(*i, *j, m) != Some(x.degree))
        .map(|(i, j, _)| (i, j))
}

/// First violated linear constraint of the block form, e.g. a non-skew `b`
/// block or `-a^t` not mirrored. Returns a short description.
pub fn shape_violation(x: &GradedMatrix, m: usize, n: usize) -> Option<String> {
    let mid = 2 * m + 1;
    let (b1, b2) = (mid, mid + n);
    let g = |i: usize, j: usize| x.get(i, j).clone();
    let want = |what: &str, lhs: RadicalSum, rhs: RadicalSum| {
        (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
    };
    let mut checks: Vec<Option<String>> =
        vec![want("middle diagonal", g(mid, mid), RadicalSum::zero())];
    for i in 1..=m {
        for j in 1..=m {
            checks.push(want(
                "lower-right a block is -a^t",
                g(m + i, m + j),
                -g(j, i),
            ));
            checks.push(want("b skew", g(i, m + j), -g(j, m + i)));
            checks.push(want("c skew", g(m + i, j), -g(m + j, i)));
        }
        checks.push(want("middle row vs v", g(mid, i), -g(m + i, mid)));
        checks.push(want("middle row vs u", g(mid, m + i), -g(i, mid)));
        for k in 1..=n {
            checks.push(want("-y1^t", g(b1 + k, i), -g(m + i, b2 + k)));
            checks.push(want("-x1^t", g(b1 + k, m + i), -g(i, b2 + k)));
            checks.push(want("y^t", g(b2 + k, i), g(m + i, b1 + k)));
            checks.push(want("x^t", g(b2 + k, m + i), g(i, b1 + k)));
        }
    }
    for k in 1..=n {
        checks.push(want("z1^t", g(b1 + k, mid), g(mid, b2 + k)));
        checks.push(want("-z^t", g(b2 + k, mid), -g(mid, b1 + k)));
        for l in 1..=n {
            checks.push(want(
                "lower-right d block is -d^t",
                g(b2 + k, b2 + l),
                -g(b1 + l, b1 + k),
            ));
            checks.push(want("e symmetric", g(b1 + k, b2 + l), g(b1 + l, b2 + k)));
            checks.push(want("f symmetric", g(b2 + k, b1 + l), g(b2 + l, b1 + k)));
        }
    }
    checks.into_iter().flatten().next()
}

fn first_entry(x: &GradedMatrix) -> Option<Counterexample> {
    x.nonzeros()
        .next()
        .map(|(i, j, v)| Counterexample::new(i, j, v.clone()))
}

/// All `2m + 2n` generator matrices with their pso labels.
fn generators(m: usize, n: usize) -> Result<Vec<(GeneratorLabel, GradedMatrix)>> {
    let mut out = Vec::new();
    for s in [1, -1] {
        for j in 1..=m {
            let g = GeneratorLabel::f(j, s, Variant::Pso);
            out.push((g, generator(&g, m, n)?));
        }
        for j in 1..=n {
            let g = GeneratorLabel::b(j, s, Variant::Pso);
            out.push((g, generator(&g, m, n)?));
        }
    }
    Ok(out)
}

/// Rank of integer vectors by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Flattens a matrix whose entries share one radicand into an integer
/// vector (the radical and common denominator are scaled away). `None` if
/// two radicands are mixed.
fn integer_vector(x: &GradedMatrix) -> Option<Vec<BigInt>> {
    let mut radicand = None;
    let mut coeffs = Vec::with_capacity(x.entries.len());
    for v in &x.entries {
        let mut c = Rational::zero();
        for (d, q) in v.terms() {
            if *radicand.get_or_insert(d) != d {
                return None;
            }
            c = q.clone();
        }
        coeffs.push(c);
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    Some(coeffs.iter().map(|q| (q * &lcm).to_integer()).collect())
}

/// Every triple relation of pso(2m+1|2n) on the defining matrices, plus
/// block closure, the Cartan elements, nilpotency of `{f+, b+}` and the
/// dimensions of the even part and of the whole algebra.
pub fn verify_defining_relations(m: usize, n: usize) -> Result<Report> {
    let mut report = Report::new(format!("defining/m={m},n={n}"));
    let gens = generators(m, n)?;
    let mat = |g: &GeneratorLabel| -> &GradedMatrix {
        &gens
            .iter()
            .find(|(h, _)| h == g)
            .expect("generator listed")
            .1
    };
    let mut inner = std::collections::HashMap::new();
    for t in relation_triples(m, n, Variant::Pso) {
        if let std::collections::hash_map::Entry::Vacant(e) = inner.entry((t.x, t.y)) {
            e.insert(graded_bracket(mat(&t.x), mat(&t.y))?);
        }
        let lhs = graded_bracket(&inner[&(t.x, t.y)], mat(&t.z))?;
        let mut residual = lhs;
        for (c, g) in &t.rhs {
            residual = residual.add_scaled(mat(g), &RadicalSum::from_integer(-c))?;
        }
        report.push(
            Check::new(t.name())
                .indices(&[t.x.index, t.y.index, t.z.index])
                .signs(&[t.x.sign, t.y.sign, t.z.sign])
                .outcome(first_entry(&residual)),
        );
    }

    // every pairwise bracket stays in the algebra with the right grading
    let mut closure = None;
    for (gx, x) in &gens {
        for (gy, y) in &gens {
            let b = graded_bracket(x, y)?;
            let bad = grading_violation(&b, m)
                .map(|(i, j)| format!("[{gx},{gy}] has degree-{} entry at ({i},{j})", b.degree))
                .or_else(|| shape_violation(&b, m, n).map(|s| format!("[{gx},{gy}]: {s}")));
            if let Some(s) = bad {
                closure.get_or_insert(s);
            }
        }
    }
    for (g, x) in &gens {
        if let Some(s) = shape_violation(x, m, n) {
            closure.get_or_insert(format!("{g}: {s}"));
        }
    }
    report.push(
        Check::new("bracket closure in block form")
            .outcome(closure.map(|s| Counterexample::new(s, "", RadicalSum::zero()))),
    );

    // Cartan elements: -1/2 [f_i^-, f_i^+] and 1/2 {b_j^-, b_j^+}
    let half = RadicalSum::from_rational(Rational::new(1.into(), 2.into()));
    let dim = dimension(m, n);
    let mid = 2 * m + 1;
    for i in 1..=m {
        let fm = mat(&GeneratorLabel::f(i, -1, Variant::Pso));
        let fp = mat(&GeneratorLabel::f(i, 1, Variant::Pso));
        let h = graded_bracket(fm, fp)?.scale(&-&half);
        let mut want = GradedMatrix::zero(dim, Z2Z2Degree(0, 0));
        want.add_at(i, i, &RadicalSum::one());
        want.add_at(i + m, i + m, &RadicalSum::from_integer(-1));
        report.push(
            Check::new("h_i = e_ii - e_{i+m,i+m}")
                .indices(&[i])
                .outcome(first_entry(&h.sub(&want)?)),
        );
    }
    for j in 1..=n {
        let bm = mat(&GeneratorLabel::b(j, -1, Variant::Pso));
        let bp = mat(&GeneratorLabel::b(j, 1, Variant::Pso));
        let h = graded_bracket(bm, bp)?.scale(&half);
        let mut want = GradedMatrix::zero(dim, Z2Z2Degree(0, 0));
        want.add_at(mid + j, mid + j, &RadicalSum::one());
        want.add_at(mid + n + j, mid + n + j, &RadicalSum::from_integer(-1));
        report.push(
            Check::new("h_{m+j} = e_{2m+1+j} - e_{2m+1+n+j}")
                .indices(&[j])
                .outcome(first_entry(&h.sub(&want)?)),
        );
    }

    for j in 1..=m {
        for k in 1..=n {
            let fb = graded_bracket(
                mat(&GeneratorLabel::f(j, 1, Variant::Pso)),
                mat(&GeneratorLabel::b(k, 1, Variant::Pso)),
            )?;
            report.push(
                Check::new("{f+,b+}^2 = 0")
                    .indices(&[j, k])
                    .outcome(first_entry(&fb.mul(&fb)?)),
            );
        }
    }

    // so(2m+1) + sp(2n) is spanned by f and the even brackets
    let mut even = Vec::new();
    let mut all = Vec::new();
    for (gx, x) in &gens {
        let v = integer_vector(x).expect("generators carry one radicand");
        all.push(v.clone());
        if gx.family == Family::Parafermion {
            even.push(v);
        }
        for (_, y) in &gens {
            let b = graded_bracket(x, y)?;
            let v = integer_vector(&b).expect("brackets carry one radicand");
            if b.degree == Z2Z2Degree(0, 0) {
                even.push(v.clone());
            }
            all.push(v);
        }
    }
    let check_rank = |name: String, rows: &[Vec<BigInt>], want: usize| {
        let got = integer_rank(rows);
        let hit = (got != want).then(|| {
            Counterexample::new(
                format!("rank {got}"),
                format!("expected {want}"),
                RadicalSum::from_integer(got as i64 - want as i64),
            )
        });
        Check::new(name).outcome(hit)
    };
    report.push(check_rank(
        "dim so(2m+1) + sp(2n)".into(),
        &even,
        m * (2 * m + 1) + n * (2 * n + 1),
    ));
    report.push(check_rank(
        "dim of the generated algebra".into(),
        &all,
        m * (2 * m + 1) + n * (2 * n + 1) + (2 * m + 1) * 2 * n,
    ));
    Ok(report)
}

/// `[[x,[y,z]]] - [[[x,y]],z]] - (-1)^{x.y} [[y,[[x,z]]]]`; zero for
/// homogeneous arguments.
pub fn jacobi_residual(
    x: &GradedMatrix,
    y: &GradedMatrix,
    z: &GradedMatrix,
) -> Result<GradedMatrix> {
    let lhs = graded_bracket(x, &graded_bracket(y, z)?)?;
    let a = graded_bracket(&graded_bracket(x, y)?, z)?;
    let b = graded_bracket(y, &graded_bracket(x, z)?)?;
    let s = if x.degree.dot(y.degree) == 1 { -1 } else { 1 };
    lhs.sub(&a)?.add_scaled(&b, &RadicalSum::from_integer(-s))
}

/// Degree-homogeneous basis of the algebra: generators and their pairwise
/// brackets, grouped by degree. Used to sample elements for property tests.
pub fn homogeneous_spanning_set(m: usize, n: usize) -> Result<Vec<GradedMatrix>> {
    let gens = generators(m, n)?;
    let mut out: Vec<GradedMatrix> = gens.iter().map(|(_, g)| g.clone()).collect();
    for (_, x) in &gens {
        for (_, y) in &gens {
            let b = graded_bracket(x, y)?;
            if !b.is_zero() {
                out.push(b);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pso(family: Family, j: usize, s: i64) -> GeneratorLabel {
        match family {
            Family::Parafermion => GeneratorLabel::f(j, s, Variant::Pso),
            Family::Paraboson => GeneratorLabel::b(j, s, Variant::Pso),
        }
    }

    #[test]
    fn f_plus_in_dimension_five() {
        let x = generator(&pso(Family::Parafermion, 1, 1), 1, 1).unwrap();
        let r2 = RadicalSum::sqrt(&Rational::from_integer(2.into())).unwrap();
        let nz: Vec<_> = x.nonzeros().map(|(i, j, v)| (i, j, v.clone())).collect();
        assert_eq!(nz, vec![(1, 3, r2.clone()), (3, 2, -r2)]);
        assert_eq!(x.degree, Z2Z2Degree(1, 1));
    }

    #[test]
    fn b_minus_in_dimension_five() {
        let x = generator(&pso(Family::Paraboson, 1, -1), 1, 1).unwrap();
        let r2 = RadicalSum::sqrt(&Rational::from_integer(2.into())).unwrap();
        let nz: Vec<_> = x.nonzeros().map(|(i, j, v)| (i, j, v.clone())).collect();
        assert_eq!(nz, vec![(3, 4, r2.clone()), (5, 3, -r2)]);
        assert_eq!(x.degree, Z2Z2Degree(1, 0));
    }

    #[test]
    fn out_of_range_index_is_an_error() {
        assert!(generator(&pso(Family::Paraboson, 3, 1), 1, 2).is_err());
    }

    #[test]
    fn f_with_f_is_a_commutator_of_degree_zero() {
        let a = generator(&pso(Family::Parafermion, 1, 1), 2, 1).unwrap();
        let b = generator(&pso(Family::Parafermion, 2, -1), 2, 1).unwrap();
        let c = graded_bracket(&a, &b).unwrap();
        assert_eq!(c.degree, Z2Z2Degree(0, 0));
        let manual = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap()).unwrap();
        assert_eq!(c.entries, manual.entries);
    }

    #[test]
    fn self_bracket_of_odd_pairing_is_twice_the_square() {
        let x = generator(&pso(Family::Paraboson, 1, 1), 1, 1).unwrap();
        let sq = x.mul(&x).unwrap().scale(&RadicalSum::from_integer(2));
        assert_eq!(graded_bracket(&x, &x).unwrap().entries, sq.entries);
    }

    #[test]
    fn bareiss_rank() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(integer_rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(
            integer_rank(&[v(&[0, 2, 1]), v(&[3, 0, 0]), v(&[3, 2, 1])]),
            2
        );
        assert_eq!(integer_rank(&[]), 0);
    }

    #[test]
    fn every_defining_relation_holds_small() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let rep = verify_defining_relations(m, n).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures().next());
        }
    }

    #[test]
    fn broken_generator_is_caught() {
        let mut x = generator(&pso(Family::Parafermion, 1, 1), 1, 1).unwrap();
        x.add_at(1, 1, &RadicalSum::one());
        assert!(grading_violation(&x, 1).is_some());
        let mut y = GradedMatrix::zero(5, Z2Z2Degree(0, 0));
        y.add_at(1, 2, &RadicalSum::one());
        assert!(shape_violation(&y, 1, 1).is_some());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn jacobi_holds_on_homogeneous_triples(
            mn in prop::sample::select(vec![(1usize, 1usize), (2, 1), (1, 2)]),
            picks in prop::collection::vec(0usize..1000, 3),
            coeffs in prop::collection::vec(-3i64..=3, 3),
        ) {
            let (m, n) = mn;
            let basis = homogeneous_spanning_set(m, n).unwrap();
            let elems: Vec<GradedMatrix> = picks
                .iter()
                .zip(&coeffs)
                .map(|(p, c)| basis[p % basis.len()].scale(&RadicalSum::from_integer(*c)))
                .collect();
            let res = jacobi_residual(&elems[0], &elems[1], &elems[2]).unwrap();
            prop_assert!(res.is_zero());
        }

        #[test]
        fn graded_symmetry(picks in prop::collection::vec(0usize..1000, 2)) {
            let basis = homogeneous_spanning_set(2, 2).unwrap();
            let (x, y) = (&basis[picks[0] % basis.len()], &basis[picks[1] % basis.len()]);
            let s = if x.degree.dot(y.degree) == 1 { 1 } else { -1 };
            let lhs = graded_bracket(x, y).unwrap();
            let rhs = graded_bracket(y, x).unwrap().scale(&RadicalSum::from_integer(s));
            prop_assert_eq!(lhs.entries, rhs.entries);
        }
    }
}
