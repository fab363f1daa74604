//! Gelfand-Zetlin patterns of gl(m|n) labelling the Fock basis.
//!
//! A pattern has rows `s = r, r-1, ..., 1` (with `r = m + n`), row `s`
//! holding `mu_{1s}, ..., mu_{ss}`. Indices `i <= m` are the parafermion
//! (gl(m)) labels and `i > m` the paraboson labels.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rational};

/// Fixes the algebra (`m` parafermions, `n` parabosons), the order `p` of
/// the statistics and the level truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
    pub p: i64,
    pub level_cap: usize,
}

impl Signature {
    pub fn new(m: usize, n: usize, p: i64, level_cap: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidSignature(format!(
                "m and n must be positive (got m={m}, n={n})"
            )));
        }
        if p < 1 {
            return Err(Error::InvalidSignature(format!(
                "p must be positive (got {p})"
            )));
        }
        Ok(Signature { m, n, p, level_cap })
    }

    pub fn r(&self) -> usize {
        self.m + self.n
    }

    pub fn with_level_cap(self, level_cap: usize) -> Self {
        Signature { level_cap, ..self }
    }
}

/// The top row `[mu]^r` of a pattern, i.e. a gl(m|n) highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TopRow(pub Vec<i64>);

impl TopRow {
    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Ordering within each block plus the hook constraint on `mu_{mr}`.
    pub fn satisfies_condition1(&self, m: usize, n: usize) -> bool {
        let r = m + n;
        let mu = &self.0;
        if mu.len() != r || mu.iter().any(|&x| x < 0) {
            return false;
        }
        for j in 1..r {
            if j != m && mu[j - 1] < mu[j] {
                return false;
            }
        }
        let positive_bosonic = mu[m..].iter().filter(|&&x| x > 0).count() as i64;
        mu[m - 1] >= positive_bosonic
    }

    /// `[mu]^r_{+k}` (or `-k` for `delta = -1`), 1-based `k`.
    pub fn shifted(&self, k: usize, delta: i64) -> TopRow {
        let mut v = self.0.clone();
        v[k - 1] += delta;
        TopRow(v)
    }

    /// All top rows at the given level satisfying condition 1 and `mu_{1r} <= p_max`.
    pub fn all_at_level(m: usize, n: usize, level: i64, p_max: Option<i64>) -> Vec<TopRow> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m + n);
        compositions(m + n, level, &mut cur, &mut out);
        let mut rows: Vec<TopRow> = out
            .into_iter()
            .map(TopRow)
            .filter(|t| t.satisfies_condition1(m, n))
            .filter(|t| p_max.is_none_or(|p| t.0[0] <= p))
            .collect();
        rows.sort();
        rows
    }
}

fn compositions(len: usize, total: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() + 1 == len {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for x in 0..=total {
        cur.push(x);
        compositions(len, total - x, cur, out);
        cur.pop();
    }
}

/// Triangular Gelfand-Zetlin array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GzPattern {
    m: usize,
    n: usize,
    /// `rows[s - 1]` is row `s`, of length `s`.
    rows: Vec<Vec<i64>>,
}

impl GzPattern {
    /// Builds a pattern from rows listed top (row `r`) to bottom (row 1).
    pub fn from_rows_top_down(m: usize, n: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = m + n;
        if rows.len() != r {
            return Err(Error::Shape(format!(
                "expected {r} rows, got {}",
                rows.len()
            )));
        }
        let mut bottom_up = rows;
        bottom_up.reverse();
        for (idx, row) in bottom_up.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    idx + 1
                )));
            }
        }
        Ok(GzPattern {
            m,
            n,
            rows: bottom_up,
        })
    }

    pub fn vacuum(m: usize, n: usize) -> Self {
        GzPattern {
            m,
            n,
            rows: (1..=m + n).map(|s| vec![0; s]).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.m + self.n
    }

    /// `mu_{is}`, both indices 1-based.
    pub fn mu(&self, i: usize, s: usize) -> i64 {
        self.rows[s - 1][i - 1]
    }

    pub fn row(&self, s: usize) -> &[i64] {
        &self.rows[s - 1]
    }

    pub fn row_mut(&mut self, s: usize) -> &mut [i64] {
        &mut self.rows[s - 1]
    }

    pub fn top(&self) -> TopRow {
        TopRow(self.rows[self.r() - 1].clone())
    }

    /// Rows listed top to bottom.
    pub fn rows_top_down(&self) -> Vec<Vec<i64>> {
        self.rows.iter().rev().cloned().collect()
    }

    pub fn rowsum(&self, s: usize) -> i64 {
        if s == 0 {
            0
        } else {
            self.rows[s - 1].iter().sum()
        }
    }

    /// Total number of quanta, the top-row sum.
    pub fn level(&self) -> i64 {
        self.rowsum(self.r())
    }

    /// `theta_{is} = mu_{i,s+1} - mu_{is}` for `i <= m <= s < r`.
    pub fn theta(&self, i: usize, s: usize) -> i64 {
        self.mu(i, s + 1) - self.mu(i, s)
    }

    /// `l_{is}`: shifted labels entering the Clebsch-Gordan formulas.
    pub fn l(&self, i: usize, s: usize) -> i64 {
        let m = self.m as i64;
        let i64i = i as i64;
        if i <= self.m {
            self.mu(i, s) - i64i + m + 1
        } else {
            -self.mu(i, s) + i64i - m
        }
    }
}

impl Ord for GzPattern {
    /// Level first, then rows compared lexicographically from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.n)
            .cmp(&(other.m, other.n))
            .then(self.level().cmp(&other.level()))
            .then_with(|| self.rows.iter().rev().cmp(other.rows.iter().rev()))
    }
}

impl PartialOrd for GzPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GzPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

impl GzPattern {
    /// Inverse of `Display`: rows top-down separated by `|`, labels by
    /// commas; brackets optional, e.g. `1,0,0|1,0|0`.
    pub fn parse(m: usize, n: usize, s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows = body
            .split('|')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Shape(format!("cannot parse pattern `{s}`: {e}")))?;
        GzPattern::from_rows_top_down(m, n, rows)
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    m: usize,
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl Serialize for GzPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson {
            m: self.m,
            n: self.n,
            rows: self.rows_top_down(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GzPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PatternJson::deserialize(d)?;
        GzPattern::from_rows_top_down(raw.m, raw.n, raw.rows).map_err(D::Error::custom)
    }
}

/// Outcome of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// `condition` is the 1-based index of the first violated condition.
    Invalid {
        condition: u8,
        detail: String,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

fn invalid(condition: u8, detail: String) -> Validity {
    Validity::Invalid { condition, detail }
}

/// Checks the six gl(m|n) pattern conditions in order.
pub fn validate(pattern: &GzPattern, m: usize, n: usize) -> Result<Validity> {
    if pattern.m != m || pattern.n != n {
        return Err(Error::Shape(format!(
            "pattern is for ({}, {}), expected ({m}, {n})",
            pattern.m, pattern.n
        )));
    }
    let r = m + n;
    let mu = |i: usize, s: usize| pattern.mu(i, s);

    // 1. top row
    for i in 1..=r {
        if mu(i, r) < 0 {
            return Ok(invalid(1, format!("mu_{{{i},{r}}} < 0")));
        }
    }
    for j in 1..r {
        if j != m && mu(j, r) < mu(j + 1, r) {
            return Ok(invalid(1, format!("mu_{{{j},{r}}} < mu_{{{},{r}}}", j + 1)));
        }
    }
    let hook = |s: usize| ((m + 1)..=s).filter(|&i| mu(i, s) > 0).count() as i64;
    if mu(m, r) < hook(r) {
        return Ok(invalid(1, format!("mu_{{{m},{r}}} below bosonic count")));
    }
    // 2. odd steps
    for s in (m + 1)..=r {
        for i in 1..=m {
            let theta = mu(i, s) - mu(i, s - 1);
            if theta != 0 && theta != 1 {
                return Ok(invalid(2, format!("theta_{{{i},{}}} = {theta}", s - 1)));
            }
        }
    }
    // 3. hook constraint in intermediate rows
    for s in (m + 1)..=r {
        if mu(m, s) < hook(s) {
            return Ok(invalid(3, format!("mu_{{{m},{s}}} below bosonic count")));
        }
    }
    // 4.
    if mu(m, m + 1) == 0 && mu(m, m + 1) - mu(m, m) != 0 {
        return Ok(invalid(4, "mu_{m,m+1} = 0 but theta_{mm} != 0".to_string()));
    }
    // 5. fermionic ordering in intermediate rows
    for s in (m + 1)..r {
        for i in 1..m {
            if mu(i, s) < mu(i + 1, s) {
                return Ok(invalid(5, format!("mu_{{{i},{s}}} < mu_{{{},{s}}}", i + 1)));
            }
        }
    }
    // 6. betweenness inside the gl(m) and bosonic triangles
    let betweenness = |lo: usize, hi: usize| -> Option<Validity> {
        for j in lo..=hi {
            for i in lo..=j {
                if mu(i, j + 1) < mu(i, j) || mu(i, j) < mu(i + 1, j + 1) {
                    return Some(invalid(6, format!("betweenness fails at mu_{{{i},{j}}}")));
                }
            }
        }
        None
    };
    if m >= 2 {
        if let Some(v) = betweenness(1, m - 1) {
            return Ok(v);
        }
    }
    if r >= m + 2 {
        if let Some(v) = betweenness(m + 1, r - 1) {
            return Ok(v);
        }
    }
    debug_assert!(pattern.rows.iter().flatten().all(|&x| x >= 0));
    Ok(Validity::Valid)
}

pub fn is_valid(pattern: &GzPattern) -> bool {
    validate(pattern, pattern.m, pattern.n)
        .map(|v| v.is_valid())
        .unwrap_or(false)
}

/// All valid patterns with the given top row, in lexicographic order.
pub fn enumerate_with_top(top: &TopRow, m: usize, n: usize) -> Result<Vec<GzPattern>> {
    if !top.satisfies_condition1(m, n) {
        return Err(Error::TopRow { top: top.0.clone() });
    }
    let r = m + n;
    let mut rows_bottom_up: Vec<Vec<i64>> = (1..=r).map(|s| vec![0; s]).collect();
    rows_bottom_up[r - 1] = top.0.clone();
    let mut out = Vec::new();
    fill_row(m, n, r - 1, &mut rows_bottom_up, &mut out);
    out.sort();
    Ok(out)
}

/// Fills row `s` (1-based) given rows above it, recursing downwards.
fn fill_row(m: usize, n: usize, s: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GzPattern>) {
    if s == 0 {
        let pattern = GzPattern {
            m,
            n,
            rows: rows.clone(),
        };
        if is_valid(&pattern) {
            out.push(pattern);
        }
        return;
    }
    let above = rows[s].clone();
    let candidates: Vec<Vec<i64>> = (1..=s)
        .map(|i| {
            if i <= m {
                if s + 1 > m {
                    vec![above[i - 1] - 1, above[i - 1]]
                } else {
                    (above[i]..=above[i - 1]).collect()
                }
            } else {
                (above[i]..=above[i - 1]).collect()
            }
        })
        .map(|c: Vec<i64>| c.into_iter().filter(|&x| x >= 0).collect())
        .collect();
    let mut choice = vec![0i64; s];
    cartesian(&candidates, 0, &mut choice, &mut |row| {
        rows[s - 1].copy_from_slice(row);
        fill_row(m, n, s - 1, rows, out);
    });
}

fn cartesian(
    candidates: &[Vec<i64>],
    idx: usize,
    choice: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64]),
) {
    if idx == candidates.len() {
        f(choice);
        return;
    }
    for &c in &candidates[idx] {
        choice[idx] = c;
        cartesian(candidates, idx + 1, choice, f);
    }
}

/// Basis of the level-truncated Fock space: valid patterns with
/// `mu_{1r} <= p` and level at most `level_cap`, in basis order.
pub fn basis(sig: &Signature) -> Vec<GzPattern> {
    let mut out = Vec::new();
    for level in 0..=sig.level_cap as i64 {
        for top in TopRow::all_at_level(sig.m, sig.n, level, Some(sig.p)) {
            out.extend(enumerate_with_top(&top, sig.m, sig.n).expect("top rows are valid"));
        }
    }
    out.sort();
    out
}

/// Eigenvalues of the Cartan elements `h_1, ..., h_r` on a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(pub Vec<Rational>);

pub fn weight(pattern: &GzPattern, p: i64) -> Weight {
    let half_p = rat(p, 2);
    Weight(
        (1..=pattern.r())
            .map(|i| {
                let diff = int(pattern.rowsum(i) - pattern.rowsum(i - 1));
                if i <= pattern.m {
                    diff - &half_p
                } else {
                    diff + &half_p
                }
            })
            .collect(),
    )
}
