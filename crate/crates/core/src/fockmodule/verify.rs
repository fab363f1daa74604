use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{
    all_generators, generator_matrices, matrix_with_route, Family, FockBasis, GeneratorLabel,
    OperatorMatrix, Route, Variant, Z2Z2Degree,
};
use crate::error::Result;
use crate::exactnum::{rat, RadicalSum};
use crate::gzbasis::weight;
use crate::report::{Check, Counterexample, Report};

type Matrices = BTreeMap<GeneratorLabel, OperatorMatrix>;

/// One instance `[[x, y], z] = sum_i coeff_i * g_i` of the triple relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTriple {
    pub x: GeneratorLabel,
    pub y: GeneratorLabel,
    pub z: GeneratorLabel,
    pub rhs: Vec<(i64, GeneratorLabel)>,
}

impl RelationTriple {
    /// Name with the bracket type implied by the degrees, e.g. `{{f,b},f}`.
    pub fn name(&self) -> String {
        let (dx, dy, dz) = (self.x.degree(), self.y.degree(), self.z.degree());
        let inner = if dx.dot(dy) == 1 {
            ('{', '}')
        } else {
            ('[', ']')
        };
        let outer = if dx.add(dy).dot(dz) == 1 {
            ('{', '}')
        } else {
            ('[', ']')
        };
        let letter = |g: &GeneratorLabel| match g.family {
            Family::Parafermion => 'f',
            Family::Paraboson => 'b',
        };
        format!(
            "{}{}{},{}{},{}{}",
            outer.0,
            inner.0,
            letter(&self.x),
            letter(&self.y),
            inner.1,
            letter(&self.z),
            outer.1
        )
    }
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// Right-hand side of the triple relation for `(x, y, z)`; `None` if the
/// family combination is not one of the defining relations.
fn relation_rhs(
    x: GeneratorLabel,
    y: GeneratorLabel,
    z: GeneratorLabel,
) -> Option<Vec<(i64, GeneratorLabel)>> {
    use Family::{Paraboson as B, Parafermion as F};
    let (xi, eta, eps) = (x.sign, y.sign, z.sign);
    let (j, k, l) = (x.index, y.index, z.index);
    let terms = match (x.family, y.family, z.family) {
        (F, F, F) => vec![
            ((eps - eta).abs() * delta(k, l), x),
            (-(eps - xi).abs() * delta(j, l), y),
        ],
        (B, B, B) => vec![
            ((eps - xi) * delta(j, l), y),
            ((eps - eta) * delta(k, l), x),
        ],
        (F, F, B) | (B, B, F) => Vec::new(),
        (F, B, F) => {
            let s = match x.variant {
                Variant::Osp => -1,
                Variant::Pso => 1,
            };
            vec![(s * (eps - xi).abs() * delta(j, l), y)]
        }
        (F, B, B) => vec![((eps - eta) * delta(k, l), x)],
        _ => return None,
    };
    Some(terms.into_iter().filter(|(c, _)| *c != 0).collect())
}

/// Every defining triple relation of the variant.
pub fn relation_triples(m: usize, n: usize, variant: Variant) -> Vec<RelationTriple> {
    let mut fs = Vec::new();
    let mut bs = Vec::new();
    for s in [1, -1] {
        for j in 1..=m {
            fs.push(GeneratorLabel::f(j, s, variant));
        }
        for j in 1..=n {
            bs.push(GeneratorLabel::b(j, s, variant));
        }
    }
    let families: [(&[GeneratorLabel], &[GeneratorLabel], &[GeneratorLabel]); 6] = [
        (&fs, &fs, &fs),
        (&bs, &bs, &bs),
        (&fs, &fs, &bs),
        (&bs, &bs, &fs),
        (&fs, &bs, &fs),
        (&fs, &bs, &bs),
    ];
    let mut out = Vec::new();
    for (xs, ys, zs) in families {
        for &x in xs {
            for &y in ys {
                for &z in zs {
                    let rhs = relation_rhs(x, y, z).expect("listed families have a rhs");
                    out.push(RelationTriple { x, y, z, rhs });
                }
            }
        }
    }
    out
}

pub fn bracket_pair(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.bracket(b)
}

fn counterexample(
    basis: &FockBasis,
    hit: Option<(usize, usize, RadicalSum)>,
) -> Option<Counterexample> {
    hit.map(|(i, j, v)| Counterexample::new(&basis.patterns[i], &basis.patterns[j], v))
}

fn linear(
    basis: &Arc<FockBasis>,
    mats: &Matrices,
    terms: &[(i64, GeneratorLabel)],
    degree: Z2Z2Degree,
    shift: i64,
) -> Result<OperatorMatrix> {
    let mut acc = OperatorMatrix::zero(basis, degree, shift);
    for (c, g) in terms {
        acc = acc.add_scaled(&mats[g], &RadicalSum::from_integer(*c))?;
    }
    Ok(acc.with_degree(degree))
}

fn check_triples(
    basis: &Arc<FockBasis>,
    mats: &Matrices,
    variant: Variant,
    suite: &str,
) -> Result<Report> {
    let sig = basis.sig;
    let mut report = Report::new(suite);
    let mut inner: HashMap<(GeneratorLabel, GeneratorLabel), OperatorMatrix> = HashMap::new();
    for t in relation_triples(sig.m, sig.n, variant) {
        if let std::collections::hash_map::Entry::Vacant(e) = inner.entry((t.x, t.y)) {
            let b = mats[&t.x].bracket(&mats[&t.y])?;
            e.insert(b);
        }
        let lhs = inner[&(t.x, t.y)].bracket(&mats[&t.z])?;
        let rhs = linear(basis, mats, &t.rhs, lhs.degree, lhs.level_shift)?;
        let residual = lhs.sub(&rhs)?;
        let max_level = residual.exact_up_to;
        let hit = residual.first_nonzero(max_level);
        report.push(
            Check::new(t.name())
                .indices(&[t.x.index, t.y.index, t.z.index])
                .signs(&[t.x.sign, t.y.sign, t.z.sign])
                .max_level(max_level)
                .outcome(counterexample(basis, hit)),
        );
    }
    Ok(report)
}

/// All defining triple relations of the variant on the truncated module.
pub fn verify_relations(basis: &Arc<FockBasis>, variant: Variant) -> Result<Report> {
    let mats = generator_matrices(basis, variant)?;
    check_triples(basis, &mats, variant, &format!("relations/{variant}"))
}

/// gl(m|n) commutation relations of `E_ab = 1/2 [[c_a^+, c_b^-]]` and the
/// Cartan elements against the pattern weights.
pub fn verify_gl_embedding(basis: &Arc<FockBasis>, variant: Variant) -> Result<Report> {
    let sig = basis.sig;
    let (m, r) = (sig.m, sig.r());
    let mats = generator_matrices(basis, variant)?;
    let c = |a: usize, s: i64| &mats[&GeneratorLabel::from_unified(a, m, s, variant)];
    let half = RadicalSum::from_rational(rat(1, 2));
    let mut e: HashMap<(usize, usize), OperatorMatrix> = HashMap::new();
    for a in 1..=r {
        for b in 1..=r {
            e.insert((a, b), c(a, 1).bracket(c(b, -1))?.scale(&half));
        }
    }
    let mut report = Report::new(format!("gl-embedding/{variant}"));
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=r {
                for l in 1..=r {
                    let (eij, ekl) = (&e[&(i, j)], &e[&(k, l)]);
                    let lhs = eij.bracket(ekl)?;
                    let sign = if eij.degree.dot(ekl.degree) == 1 {
                        -1
                    } else {
                        1
                    };
                    let mut terms: Vec<(i64, (usize, usize))> = Vec::new();
                    if j == k {
                        terms.push((1, (i, l)));
                    }
                    if i == l {
                        terms.push((-sign, (k, j)));
                    }
                    let mut rhs = OperatorMatrix::zero(basis, lhs.degree, 0);
                    for (coef, key) in terms {
                        rhs = rhs.add_scaled(&e[&key], &RadicalSum::from_integer(coef))?;
                    }
                    let residual = lhs.sub(&rhs)?;
                    let hit = residual.first_nonzero(residual.exact_up_to);
                    report.push(
                        Check::new("[[E_ij,E_kl]]")
                            .indices(&[i, j, k, l])
                            .max_level(residual.exact_up_to)
                            .outcome(counterexample(basis, hit)),
                    );
                }
            }
        }
    }
    // h_i from the annihilation-first bracket, and E_ii, against weights
    for i in 1..=r {
        let h = c(i, -1).bracket(c(i, 1))?;
        let h = if i <= m {
            h.scale(&RadicalSum::from_rational(rat(-1, 2)))
        } else {
            h.scale(&half)
        };
        for (name, op) in [("h_i", &h), ("E_ii", &e[&(i, i)])] {
            let mut hit = op.first_off_diagonal(op.exact_up_to);
            if hit.is_none() {
                hit = (0..basis.len())
                    .filter(|&col| basis.levels[col] <= op.exact_up_to)
                    .find_map(|col| {
                        let w = RadicalSum::from_rational(
                            weight(&basis.patterns[col], sig.p).0[i - 1].clone(),
                        );
                        let d = &op.get(col, col) - &w;
                        (!d.is_zero()).then_some((col, col, d))
                    });
            }
            report.push(
                Check::new(format!("{name} = weight"))
                    .indices(&[i])
                    .max_level(op.exact_up_to)
                    .outcome(counterexample(basis, hit)),
            );
        }
    }
    Ok(report)
}

/// Annihilators kill the vacuum and `[[c_j^-, c_k^+]] |0> = p delta_jk |0>`.
pub fn check_vacuum(basis: &Arc<FockBasis>, variant: Variant) -> Result<Report> {
    let sig = basis.sig;
    let mats = generator_matrices(basis, variant)?;
    let vac = basis.vacuum();
    let mut report = Report::new(format!("vacuum/{variant}"));
    for gen in all_generators(&sig, variant)
        .into_iter()
        .filter(|g| !g.is_creation())
    {
        let hit = mats[&gen]
            .column(vac)
            .first()
            .map(|(i, v)| (*i, vac, v.clone()));
        report.push(
            Check::new(format!("{gen}|0> = 0"))
                .indices(&[gen.index])
                .outcome(counterexample(basis, hit)),
        );
    }
    let r = sig.r();
    for j in 1..=r {
        for k in 1..=r {
            let a = &mats[&GeneratorLabel::from_unified(j, sig.m, -1, variant)];
            let b = &mats[&GeneratorLabel::from_unified(k, sig.m, 1, variant)];
            let br = a.bracket(b)?;
            let expected = if j == k { sig.p } else { 0 };
            let mut hit = None;
            for (i, v) in br.column(vac) {
                let want = if *i == vac { expected } else { 0 };
                let d = v - &RadicalSum::from_integer(want);
                if !d.is_zero() {
                    hit = Some((*i, vac, d));
                    break;
                }
            }
            if hit.is_none() && expected != 0 && br.get(vac, vac).is_zero() {
                hit = Some((vac, vac, RadicalSum::from_integer(-expected)));
            }
            // the plain product <0| c_j^- c_k^+ |0> as well
            let prod = a.mul(b)?.get(vac, vac);
            if hit.is_none() && prod != RadicalSum::from_integer(expected) {
                hit = Some((vac, vac, &prod - &RadicalSum::from_integer(expected)));
            }
            report.push(
                Check::new("[[c_j^-,c_k^+]]|0> = p delta_jk |0>")
                    .indices(&[j, k])
                    .outcome(counterexample(basis, hit)),
            );
        }
    }
    Ok(report)
}

/// `matrix(c_j^-)` is the transpose of `matrix(c_j^+)`.
pub fn check_adjointness(basis: &Arc<FockBasis>, variant: Variant) -> Result<Report> {
    let mats = generator_matrices(basis, variant)?;
    let mut report = Report::new(format!("adjointness/{variant}"));
    for gen in all_generators(&basis.sig, variant)
        .into_iter()
        .filter(|g| g.is_creation())
    {
        let up = &mats[&gen];
        let down = &mats[&gen.conjugate()];
        let mut hit = None;
        for (i, j, v) in down.entries() {
            let w = up.get(j, i);
            if &w != v {
                hit = Some((i, j, v - &w));
                break;
            }
        }
        if hit.is_none() {
            for (i, j, v) in up.entries() {
                if down.get(j, i).is_zero() {
                    hit = Some((j, i, -v.clone()));
                    break;
                }
            }
        }
        report.push(
            Check::new(format!("{}^T = {}", gen, gen.conjugate()))
                .indices(&[gen.index])
                .outcome(counterexample(basis, hit)),
        );
    }
    Ok(report)
}

/// `{c_r^-, c_r^+}` is diagonal with eigenvalue `p + 2(|row r| - |row r-1|)`.
pub fn check_cartan_recurrence(basis: &Arc<FockBasis>, variant: Variant) -> Result<Report> {
    let sig = basis.sig;
    let r = sig.r();
    let down =
        crate::fockmodule::matrix(&GeneratorLabel::from_unified(r, sig.m, -1, variant), basis)?;
    let up = crate::fockmodule::matrix(&GeneratorLabel::from_unified(r, sig.m, 1, variant), basis)?;
    let br = down.bracket(&up)?;
    let mut hit = br.first_off_diagonal(br.exact_up_to);
    if hit.is_none() {
        hit = (0..basis.len())
            .filter(|&j| basis.levels[j] <= br.exact_up_to)
            .find_map(|j| {
                let pat = &basis.patterns[j];
                let want = sig.p + 2 * (pat.rowsum(r) - pat.rowsum(r - 1));
                let d = &br.get(j, j) - &RadicalSum::from_integer(want);
                (!d.is_zero()).then_some((j, j, d))
            });
    }
    let mut report = Report::new(format!("cartan-recurrence/{variant}"));
    report.push(
        Check::new("{c_r^-,c_r^+} = p + 2(|row r| - |row r-1|)")
            .indices(&[r])
            .max_level(br.exact_up_to)
            .outcome(counterexample(basis, hit)),
    );
    Ok(report)
}

/// `{f~_j^+, b~_k^+}` squares to zero.
pub fn check_nilpotency(basis: &Arc<FockBasis>) -> Result<Report> {
    let sig = basis.sig;
    let mut report = Report::new("nilpotency/pso");
    for j in 1..=sig.m {
        for k in 1..=sig.n {
            let f = crate::fockmodule::matrix(&GeneratorLabel::f(j, 1, Variant::Pso), basis)?;
            let b = crate::fockmodule::matrix(&GeneratorLabel::b(k, 1, Variant::Pso), basis)?;
            let x = f.bracket(&b)?;
            let sq = x.mul(&x)?;
            let hit = sq.first_nonzero(sq.exact_up_to);
            report.push(
                Check::new("{f~_j^+,b~_k^+}^2 = 0")
                    .indices(&[j, k])
                    .max_level(sq.exact_up_to)
                    .outcome(counterexample(basis, hit)),
            );
        }
    }
    Ok(report)
}

/// pso parafermion entries are the osp ones times `±(-1)^{source level}`;
/// paraboson matrices agree.
pub fn check_variant_link(basis: &Arc<FockBasis>) -> Result<Report> {
    let osp = generator_matrices(basis, Variant::Osp)?;
    let pso = generator_matrices(basis, Variant::Pso)?;
    let mut report = Report::new("variant-link");
    for gen in all_generators(&basis.sig, Variant::Osp) {
        let a = &osp[&gen];
        let b = &pso[&gen.with_variant(Variant::Pso)];
        let factor = |j: usize| -> i64 {
            match gen.family {
                Family::Paraboson => 1,
                Family::Parafermion => gen.sign * if basis.levels[j] % 2 == 0 { 1 } else { -1 },
            }
        };
        let mut hit = None;
        for j in 0..basis.len() {
            let want: Vec<(usize, RadicalSum)> = a
                .column(j)
                .iter()
                .map(|(i, v)| (*i, v.scale_int(factor(j))))
                .collect();
            if want.as_slice() != b.column(j) {
                let i = want
                    .iter()
                    .map(|e| e.0)
                    .chain(b.column(j).iter().map(|e| e.0))
                    .find(|&i| a.get(i, j).scale_int(factor(j)) != b.get(i, j))
                    .unwrap_or(j);
                hit = Some((i, j, &b.get(i, j) - &a.get(i, j).scale_int(factor(j))));
                break;
            }
        }
        report.push(
            Check::new(format!("pso {gen} = twist(osp {gen})"))
                .indices(&[gen.index])
                .outcome(counterexample(basis, hit)),
        );
    }
    Ok(report)
}

/// Compares the twisted matrices with those obtained by putting the twisted
/// reduced elements straight into the Clebsch-Gordan expansion, and runs
/// the pso relations on the latter for diagnosis.
pub fn check_dual_route(basis: &Arc<FockBasis>) -> Result<(Report, Report)> {
    let mut same = Report::new("dual-route/equality");
    let mut tilde: Matrices = BTreeMap::new();
    for gen in all_generators(&basis.sig, Variant::Pso) {
        let a = matrix_with_route(&gen, basis, Route::Twist)?;
        let b = matrix_with_route(&gen, basis, Route::TildeReduced)?;
        let diff = a.sub(&b)?;
        let hit = diff.first_nonzero(diff.exact_up_to);
        same.push(
            Check::new(format!("twist {gen} = tilde-reduced {gen}"))
                .indices(&[gen.index])
                .outcome(counterexample(basis, hit)),
        );
        tilde.insert(gen, b);
    }
    let rel = check_triples(basis, &tilde, Variant::Pso, "dual-route/relations")?;
    Ok((same, rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gzbasis::Signature;

    #[test]
    fn triple_counts_and_names() {
        let t = relation_triples(2, 1, Variant::Pso);
        // ff f, bb b, ff b, bb f, fb f, fb b with 4 f's and 2 b's
        assert_eq!(t.len(), 64 + 8 + 32 + 16 + 32 + 16);
        let fbf = t
            .iter()
            .find(|r| {
                r.x.family == Family::Parafermion
                    && r.y.family == Family::Paraboson
                    && r.z.family == Family::Parafermion
            })
            .unwrap();
        assert_eq!(fbf.name(), "{{f,b},f}");
        let osp = relation_triples(1, 1, Variant::Osp);
        let fbf = osp
            .iter()
            .find(|r| {
                r.x.family == Family::Parafermion
                    && r.y.family == Family::Paraboson
                    && r.z.family == Family::Parafermion
            })
            .unwrap();
        assert_eq!(fbf.name(), "[[f,b],f]");
    }

    #[test]
    fn rhs_of_the_worked_example() {
        let f = |s| GeneratorLabel::f(1, s, Variant::Osp);
        let b = |s| GeneratorLabel::b(1, s, Variant::Osp);
        assert_eq!(relation_rhs(f(1), b(1), f(-1)).unwrap(), vec![(-2, b(1))]);
        let ft = |s| GeneratorLabel::f(1, s, Variant::Pso);
        let bt = |s| GeneratorLabel::b(1, s, Variant::Pso);
        assert_eq!(
            relation_rhs(ft(1), bt(-1), ft(-1)).unwrap(),
            vec![(2, bt(-1))]
        );
        // [[f+, f-], f+] = 2 f+
        assert_eq!(relation_rhs(f(1), f(-1), f(1)).unwrap(), vec![(2, f(1))]);
    }

    #[test]
    fn small_module_satisfies_everything() {
        let basis = FockBasis::new(Signature::new(1, 1, 2, 4).unwrap());
        for v in [Variant::Osp, Variant::Pso] {
            assert!(verify_relations(&basis, v).unwrap().passed());
            assert!(check_vacuum(&basis, v).unwrap().passed());
            assert!(check_adjointness(&basis, v).unwrap().passed());
            assert!(check_cartan_recurrence(&basis, v).unwrap().passed());
            assert!(verify_gl_embedding(&basis, v).unwrap().passed());
        }
        assert!(check_variant_link(&basis).unwrap().passed());
        assert!(check_nilpotency(&basis).unwrap().passed());
    }
}
