//! Counting oracle for the Fock space: hook partitions and supertableaux.
//!
//! The level-`l` part of the Fock space decomposes into covariant gl(m|n)
//! modules labelled by `(m|n)`-hook partitions of `l` (with `lambda_1 <= p`).
//! Module dimensions here come from brute-force tableau enumeration and
//! share no code with the pattern enumeration in [`crate::gzbasis`].

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::exactnum::RadicalSum;
use crate::gzbasis::{basis, GzPattern, Signature, TopRow};
use crate::report::{Check, Counterexample, Report};

/// Weakly decreasing positive parts; the empty partition is `()`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HookPartition(pub Vec<i64>);

impl HookPartition {
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Length of column `j` (1-based).
    pub fn column(&self, j: i64) -> i64 {
        self.0.iter().filter(|&&x| x >= j).count() as i64
    }

    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.0.get(m).is_none_or(|&x| x <= n as i64)
    }

    /// GZ top row: `lambda_i` for `i <= m`, then `max(lambda'_j - m, 0)`.
    pub fn to_top_row(&self, m: usize, n: usize) -> TopRow {
        let mut mu: Vec<i64> = (0..m)
            .map(|i| self.0.get(i).copied().unwrap_or(0))
            .collect();
        mu.extend((1..=n as i64).map(|j| (self.column(j) - m as i64).max(0)));
        TopRow(mu)
    }

    pub fn from_top_row(top: &TopRow, m: usize) -> HookPartition {
        let mu = top.labels();
        let mut parts: Vec<i64> = mu[..m].to_vec();
        let tail: Vec<i64> = mu[m..].to_vec();
        // rows below m: row m + i has as many boxes as columns of length >= m + i
        let deepest = tail.iter().copied().max().unwrap_or(0);
        for i in 1..=deepest {
            parts.push(tail.iter().filter(|&&c| c >= i).count() as i64);
        }
        parts.retain(|&x| x > 0);
        HookPartition(parts)
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `weight` with `lambda_{m+1} <= n`, largest first.
pub fn hook_partitions(m: usize, n: usize, weight: i64) -> Vec<HookPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    partitions(weight, weight, &mut cur, &mut out);
    out.into_iter()
        .map(HookPartition)
        .filter(|l| l.is_hook(m, n))
        .collect()
}

fn partitions(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for x in (1..=max.min(rest)).rev() {
        cur.push(x);
        partitions(rest - x, x, cur, out);
        cur.pop();
    }
}

/// Number of `(m|n)`-semistandard tableaux of shape `lambda` over
/// `1 < ... < m < 1' < ... < n'`: unprimed letters weakly increase along
/// rows and strictly down columns, primed letters the other way round.
pub fn covariant_dimension(lambda: &HookPartition, m: usize, n: usize) -> u64 {
    if !lambda.is_hook(m, n) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = lambda
        .0
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.0.iter().map(|&len| vec![0; len as usize]).collect();
    fill(&cells, 0, &mut grid, m, m + n)
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut [Vec<usize>],
    m: usize,
    letters: usize,
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let mut count = 0;
    for v in 1..=letters {
        let primed = v > m;
        let left_ok = c == 0 || {
            let l = grid[r][c - 1];
            if primed {
                l < v
            } else {
                l <= v
            }
        };
        let up_ok = r == 0 || {
            let u = grid[r - 1][c];
            if primed {
                u <= v
            } else {
                u < v
            }
        };
        if left_ok && up_ok {
            grid[r][c] = v;
            count += fill(cells, idx + 1, grid, m, letters);
        }
    }
    grid[r][c] = 0;
    count
}

/// One row of the per-level comparison table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub level: i64,
    pub partition: HookPartition,
    pub dimension: u64,
    pub pattern_count: u64,
    pub matches: bool,
}

/// Tableau dimension against GZ pattern count for every hook partition
/// with `lambda_1 <= p` up to the level cap.
pub fn level_table(sig: &Signature) -> Vec<LevelRow> {
    let mut counts: BTreeMap<TopRow, u64> = BTreeMap::new();
    for pat in basis(sig) {
        *counts.entry(pat.top()).or_default() += 1;
    }
    let mut rows = Vec::new();
    for level in 0..=sig.level_cap as i64 {
        for lambda in hook_partitions(sig.m, sig.n, level) {
            if lambda.0.first().is_some_and(|&l1| l1 > sig.p) {
                continue;
            }
            let dimension = covariant_dimension(&lambda, sig.m, sig.n);
            let pattern_count = counts
                .get(&lambda.to_top_row(sig.m, sig.n))
                .copied()
                .unwrap_or(0);
            rows.push(LevelRow {
                level,
                matches: dimension == pattern_count,
                partition: lambda,
                dimension,
                pattern_count,
            });
        }
    }
    rows
}

/// Per-partition and per-level agreement between the two counts, plus a
/// check that no basis top row falls outside the hook partitions.
pub fn verify_level_dimensions(sig: &Signature) -> Report {
    let mut report = Report::new(format!("characters/m={},n={},p={}", sig.m, sig.n, sig.p));
    let table = level_table(sig);
    for row in &table {
        report.push(
            Check::new(format!("dim {} = #patterns", row.partition))
                .max_level(row.level)
                .outcome((!row.matches).then(|| mismatch(row.dimension, row.pattern_count))),
        );
    }
    let basis = basis(sig);
    for level in 0..=sig.level_cap as i64 {
        let patterns = basis.iter().filter(|p| p.level() == level).count() as u64;
        let tableaux: u64 = table
            .iter()
            .filter(|r| r.level == level)
            .map(|r| r.dimension)
            .sum();
        report.push(
            Check::new("level dimension")
                .max_level(level)
                .outcome((patterns != tableaux).then(|| mismatch(tableaux, patterns))),
        );
    }
    let stray = basis
        .iter()
        .map(GzPattern::top)
        .find(|t| HookPartition::from_top_row(t, sig.m).to_top_row(sig.m, sig.n) != *t);
    report.push(Check::new("every top row is a hook partition").outcome(
        stray.map(|t| Counterexample::new(format!("{:?}", t.labels()), "", RadicalSum::zero())),
    ));
    report
}

fn mismatch(tableaux: u64, patterns: u64) -> Counterexample {
    Counterexample::new(
        format!("tableaux {tableaux}"),
        format!("patterns {patterns}"),
        RadicalSum::from_integer(tableaux as i64 - patterns as i64),
    )
}
