//! Batch command-line front end.
//!
//! Every command prints to stdout (or `--output`) in json, csv or text.
//! Exit codes: 0 when everything verified, 1 when a check failed, 2 for
//! usage or formula errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::charcount::{level_table, verify_level_dimensions};
use crate::error::{Error, Result};
use crate::fockmodule::{
    check_adjointness, check_cartan_recurrence, check_dual_route, check_nilpotency, check_vacuum,
    check_variant_link, matrix_with_route, verify_gl_embedding, verify_relations, verify_section4,
    FockBasis, GeneratorLabel, Route, Variant,
};
use crate::gzbasis::{basis, weight, GzPattern, Signature, TopRow};
use crate::isoscalar::{cgc_trace, transitions, Transition};
use crate::matrixrep::{generator, verify_defining_relations};
use crate::reduced::{g_detailed, g_tilde};
use crate::report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "parastat",
    version,
    about = "Exact parastatistics Fock representations of osp(2m+1|2n) and pso(2m+1|2n)"
)]
pub struct Cli {
    /// TOML file with defaults (m, n, p, level, variant, format, output); flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantArg {
    Osp,
    Pso,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Osp => Variant::Osp,
            VariantArg::Pso => Variant::Pso,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    /// Level-parity twist of the osp action.
    Twist,
    /// Twisted reduced elements fed through the Clebsch-Gordan sum.
    Tilde,
}

/// Signature flags. Defaults: m = n = 1, p = 1, level 3.
#[derive(Args, Debug, Clone, Default)]
pub struct SigArgs {
    /// Number of parafermions.
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of parabosons.
    #[arg(long)]
    pub n: Option<usize>,
    /// Order of the statistics.
    #[arg(long)]
    pub p: Option<i64>,
    /// Highest level of the truncated basis.
    #[arg(long)]
    pub level: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the truncated basis with levels and weights.
    Basis {
        #[command(flatten)]
        sig: SigArgs,
    },
    /// Dump the matrix of one generator, e.g. `f1+` or `b2-`.
    Matrix {
        generator: String,
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Use the (2m+2n+1)-dimensional defining matrices instead.
        #[arg(long)]
        defining: bool,
        #[arg(long, value_enum, default_value = "twist")]
        route: RouteArg,
    },
    /// Run verification suites; no suite flag means --all.
    Verify {
        #[command(flatten)]
        sig: SigArgs,
        /// Restrict the Fock suites to one variant (default: both).
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Every suite except --dual.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        relations: bool,
        #[arg(long)]
        gl: bool,
        /// m = n = 1 closed forms (ignores --m/--n).
        #[arg(long)]
        section4: bool,
        #[arg(long)]
        defining: bool,
        #[arg(long)]
        characters: bool,
        /// Vacuum, adjointness and Cartan recurrence.
        #[arg(long)]
        fock: bool,
        /// osp/pso sign link and nilpotency.
        #[arg(long)]
        link: bool,
        /// Compare the twist with the twisted-reduced-element route.
        #[arg(long)]
        dual: bool,
    },
    /// Tableau dimensions against pattern counts per level and partition.
    Character {
        #[command(flatten)]
        sig: SigArgs,
    },
    /// Reduced matrix elements G_k for every top row in range.
    Gtable {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Factor-by-factor Clebsch-Gordan trace from one pattern, e.g. `1,0,0|1,0|0`.
    Cgc {
        source: String,
        #[command(flatten)]
        sig: SigArgs,
        /// Only this generator row (default: all).
        #[arg(long)]
        j: Option<usize>,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub p: Option<i64>,
    #[serde(alias = "level_cap")]
    pub level: Option<usize>,
    pub variant: Option<VariantArg>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSignature(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| Error::InvalidSignature(format!("bad config {}: {e}", path.display())))
    }
}

/// Flags merged over the config file over the defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub sig: Signature,
    pub variant: Option<Variant>,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn merge(
        file: &ConfigFile,
        sig: &SigArgs,
        variant: Option<VariantArg>,
        format: Option<Format>,
        output: Option<PathBuf>,
    ) -> Result<Self> {
        let m = sig.m.or(file.m).unwrap_or(1);
        let n = sig.n.or(file.n).unwrap_or(1);
        let p = sig.p.or(file.p).unwrap_or(1);
        let level = sig.level.or(file.level).unwrap_or(3);
        Ok(RunConfig {
            sig: Signature::new(m, n, p, level)?,
            variant: variant.or(file.variant).map(Variant::from),
            format: format.or(file.format).unwrap_or(Format::Json),
            output: output.or_else(|| file.output.clone()),
        })
    }

    fn variants(&self) -> Vec<Variant> {
        match self.variant {
            Some(v) => vec![v],
            None => vec![Variant::Osp, Variant::Pso],
        }
    }
}

/// Rendered output and whether every check in it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub verified: bool,
}

impl Outcome {
    fn listing(body: String) -> Self {
        Outcome {
            body,
            verified: true,
        }
    }
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8 csv")
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn cmd_basis(cfg: &RunConfig) -> Outcome {
    let pats = basis(&cfg.sig);
    let weights: Vec<Vec<String>> = pats
        .iter()
        .map(|p| {
            weight(p, cfg.sig.p)
                .0
                .iter()
                .map(|w| w.to_string())
                .collect()
        })
        .collect();
    let body = match cfg.format {
        Format::Json => pretty(&json!({
            "signature": cfg.sig,
            "dimension": pats.len(),
            "patterns": pats.iter().zip(&weights).enumerate().map(|(i, (p, w))| json!({
                "index": i,
                "pattern": p.to_string(),
                "rows": p.rows_top_down(),
                "level": p.level(),
                "weight": w,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_string(
            &["index", "pattern", "level", "weight"],
            pats.iter().zip(&weights).enumerate().map(|(i, (p, w))| {
                vec![
                    i.to_string(),
                    p.to_string(),
                    p.level().to_string(),
                    w.join(" "),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for (i, (p, w)) in pats.iter().zip(&weights).enumerate() {
                let _ = writeln!(
                    s,
                    "{i:>4}  {p}  level {}  weight ({})",
                    p.level(),
                    w.join(", ")
                );
            }
            s
        }
    };
    Outcome::listing(body)
}

fn cmd_matrix(cfg: &RunConfig, spec: &str, defining: bool, route: RouteArg) -> Result<Outcome> {
    let variant = cfg.variant.unwrap_or(Variant::Osp);
    let gen = GeneratorLabel::parse(spec, variant)?;
    gen.check_range(&cfg.sig)?;
    if defining {
        let x = generator(&gen, cfg.sig.m, cfg.sig.n)?;
        let body = match cfg.format {
            Format::Json => pretty(&json!({"generator": gen.to_string(), "matrix": x.to_json()})),
            Format::Csv => csv_string(
                &["row", "col", "value"],
                x.nonzeros()
                    .map(|(i, j, v)| vec![i.to_string(), j.to_string(), v.to_json()]),
            ),
            Format::Text => x.to_string(),
        };
        return Ok(Outcome::listing(body));
    }
    let fock = FockBasis::new(cfg.sig);
    let route = match route {
        RouteArg::Twist => Route::Twist,
        RouteArg::Tilde => Route::TildeReduced,
    };
    let mat = matrix_with_route(&gen, &fock, route)?;
    let label = |i: usize| fock.patterns[i].to_string();
    let body = match cfg.format {
        Format::Json => {
            let mut v = mat.to_json();
            v["generator"] = json!(gen.to_string());
            pretty(&v)
        }
        Format::Csv => csv_string(
            &["row", "col", "row_pattern", "col_pattern", "value"],
            mat.entries().map(|(i, j, v)| {
                vec![
                    i.to_string(),
                    j.to_string(),
                    label(i),
                    label(j),
                    v.to_json(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!(
                "{gen} on {} basis vectors, exact up to level {}\n",
                mat.dim(),
                mat.exact_up_to
            );
            for (i, j, v) in mat.entries() {
                let _ = writeln!(s, "{} <- {} : {v}", label(i), label(j));
            }
            s
        }
    };
    Ok(Outcome::listing(body))
}

/// Which suites `verify` runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Suites {
    pub relations: bool,
    pub gl: bool,
    pub section4: bool,
    pub defining: bool,
    pub characters: bool,
    pub fock: bool,
    pub link: bool,
    pub dual: bool,
}

impl Suites {
    pub fn all() -> Self {
        Suites {
            relations: true,
            gl: true,
            section4: true,
            defining: true,
            characters: true,
            fock: true,
            link: true,
            dual: false,
        }
    }
}

pub fn run_suites(cfg: &RunConfig, s: Suites) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let needs_fock = s.relations || s.gl || s.fock || s.link || s.dual;
    if needs_fock {
        let fock = FockBasis::new(cfg.sig);
        for v in cfg.variants() {
            if s.relations {
                out.push(verify_relations(&fock, v)?);
            }
            if s.gl {
                out.push(verify_gl_embedding(&fock, v)?);
            }
            if s.fock {
                out.push(check_vacuum(&fock, v)?);
                out.push(check_adjointness(&fock, v)?);
                out.push(check_cartan_recurrence(&fock, v)?);
            }
        }
        if s.link {
            out.push(check_variant_link(&fock)?);
            out.push(check_nilpotency(&fock)?);
        }
        if s.dual {
            let (same, rel) = check_dual_route(&fock)?;
            out.push(same);
            out.push(rel);
        }
    }
    if s.section4 {
        out.push(verify_section4(cfg.sig.p, cfg.sig.level_cap)?);
    }
    if s.defining {
        out.push(verify_defining_relations(cfg.sig.m, cfg.sig.n)?);
    }
    if s.characters {
        out.push(verify_level_dimensions(&cfg.sig));
    }
    Ok(out)
}

fn render_reports(reports: &[Report], format: Format) -> String {
    let passed = reports.iter().all(Report::passed);
    match format {
        Format::Json => pretty(&json!({"passed": passed, "reports": reports})),
        Format::Csv => csv_string(
            &[
                "suite",
                "relation",
                "indices",
                "signs",
                "status",
                "max_level",
                "row",
                "column",
                "residual",
            ],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| {
                    let ce = c.counterexample.as_ref();
                    vec![
                        r.suite.clone(),
                        c.relation.clone(),
                        c.indices
                            .iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        c.signs.join(" "),
                        if c.passed() { "pass" } else { "fail" }.to_string(),
                        c.max_level.map(|l| l.to_string()).unwrap_or_default(),
                        ce.map(|e| e.row.clone()).unwrap_or_default(),
                        ce.map(|e| e.column.clone()).unwrap_or_default(),
                        ce.map(|e| e.residual.to_json()).unwrap_or_default(),
                    ]
                })
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "{}", r.summary());
                for c in r.failures() {
                    let at = c
                        .counterexample
                        .as_ref()
                        .map(|e| format!(" at ({}, {}): {}", e.row, e.column, e.residual_text))
                        .unwrap_or_default();
                    let _ = writeln!(s, "  FAIL {} {:?} {:?}{at}", c.relation, c.indices, c.signs);
                }
            }
            let _ = writeln!(
                s,
                "{}",
                if passed {
                    "all verified"
                } else {
                    "violations found"
                }
            );
            s
        }
    }
}

fn cmd_character(cfg: &RunConfig) -> Outcome {
    let rows = level_table(&cfg.sig);
    let verified = rows.iter().all(|r| r.matches);
    let body = match cfg.format {
        Format::Json => pretty(&rows),
        Format::Csv => csv_string(
            &["level", "partition", "dimension", "pattern_count", "match"],
            rows.iter().map(|r| {
                vec![
                    r.level.to_string(),
                    r.partition.to_string(),
                    r.dimension.to_string(),
                    r.pattern_count.to_string(),
                    r.matches.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!(
                "{:>5}  {:<16} {:>9} {:>9}  match\n",
                "level", "partition", "dim", "patterns"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>5}  {:<16} {:>9} {:>9}  {}",
                    r.level,
                    r.partition.to_string(),
                    r.dimension,
                    r.pattern_count,
                    if r.matches { "yes" } else { "NO" }
                );
            }
            s
        }
    };
    Outcome { body, verified }
}

fn cmd_gtable(cfg: &RunConfig) -> Result<Outcome> {
    let sig = cfg.sig;
    let tilde = cfg.variant == Some(Variant::Pso);
    let mut rows = Vec::new();
    for level in 0..=sig.level_cap as i64 {
        for top in TopRow::all_at_level(sig.m, sig.n, level, Some(sig.p)) {
            for k in 1..=sig.r() {
                let el = g_detailed(k, &top, &sig)?;
                let value = if tilde {
                    g_tilde(k, &top, &sig)?
                } else {
                    el.value
                };
                rows.push((top.clone(), k, value, el.cancelled));
            }
        }
    }
    let label = |t: &TopRow| {
        format!(
            "({})",
            t.labels()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    let body = match cfg.format {
        Format::Json => pretty(
            &rows
                .iter()
                .map(|(t, k, v, c)| json!({"top_row": t.labels(), "k": k, "value": v, "cancelled": c}))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => csv_string(
            &["top_row", "k", "value"],
            rows.iter().map(|(t, k, v, _)| vec![label(t), k.to_string(), v.to_json()]),
        ),
        Format::Text => {
            let mut s = String::new();
            for (t, k, v, _) in &rows {
                let _ = writeln!(s, "{} k={k}: {v}", label(t));
            }
            s
        }
    };
    Ok(Outcome::listing(body))
}

fn cmd_cgc(cfg: &RunConfig, source: &str, j: Option<usize>) -> Result<Outcome> {
    let src = GzPattern::parse(cfg.sig.m, cfg.sig.n, source)?;
    let r = cfg.sig.r();
    let js: Vec<usize> = match j {
        Some(j) if j == 0 || j > r => {
            return Err(Error::IndexOutOfRange {
                what: "generator row j",
                index: j,
                max: r,
            })
        }
        Some(j) => vec![j],
        None => (1..=r).collect(),
    };
    let trs: Vec<Transition> = js.iter().flat_map(|&j| transitions(&src, j)).collect();
    let traces = trs.iter().map(cgc_trace).collect::<Result<Vec<_>>>()?;
    let body = match cfg.format {
        Format::Json => pretty(
            &trs.iter()
                .zip(&traces)
                .map(|(tr, t)| {
                    json!({
                        "j": tr.j,
                        "source": tr.source.to_string(),
                        "target": tr.target.to_string(),
                        "parity_exponent": t.parity_exponent,
                        "factors": t.factors.iter().map(|f| json!({
                            "formula": f.formula.tag(),
                            "row": f.row,
                            "k": f.k,
                            "q": f.q,
                            "factors": f.factors.to_string(),
                            "value": crate::exactnum::RadicalSum::from_radical(f.value.clone()),
                        })).collect::<Vec<_>>(),
                        "value": t.value,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => csv_string(
            &["j", "target", "formulas", "value"],
            trs.iter().zip(&traces).map(|(tr, t)| {
                let tags: Vec<&str> = t.factors.iter().map(|f| f.formula.tag()).collect();
                vec![
                    tr.j.to_string(),
                    tr.target.to_string(),
                    tags.join(";"),
                    t.value.to_json(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for (tr, t) in trs.iter().zip(&traces) {
                let _ = writeln!(s, "j={} {} -> {}\n{t}", tr.j, tr.source, tr.target);
            }
            s
        }
    };
    Ok(Outcome::listing(body))
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<(Outcome, RunConfig)> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let merge = |sig: &SigArgs, variant: Option<VariantArg>| {
        RunConfig::merge(&file, sig, variant, cli.format, cli.output.clone())
    };
    let (outcome, cfg) = match &cli.command {
        Command::Basis { sig } => {
            let cfg = merge(sig, None)?;
            (cmd_basis(&cfg), cfg)
        }
        Command::Matrix {
            generator,
            sig,
            variant,
            defining,
            route,
        } => {
            let cfg = merge(sig, *variant)?;
            (cmd_matrix(&cfg, generator, *defining, *route)?, cfg)
        }
        Command::Verify {
            sig,
            variant,
            all,
            relations,
            gl,
            section4,
            defining,
            characters,
            fock,
            link,
            dual,
        } => {
            let cfg = merge(sig, *variant)?;
            let picked = Suites {
                relations: *relations,
                gl: *gl,
                section4: *section4,
                defining: *defining,
                characters: *characters,
                fock: *fock,
                link: *link,
                dual: *dual,
            };
            let suites = if *all {
                Suites {
                    dual: *dual,
                    ..Suites::all()
                }
            } else if picked == Suites::default() {
                Suites::all()
            } else {
                picked
            };
            let reports = run_suites(&cfg, suites)?;
            let verified = reports.iter().all(Report::passed);
            (
                Outcome {
                    body: render_reports(&reports, cfg.format),
                    verified,
                },
                cfg,
            )
        }
        Command::Character { sig } => {
            let cfg = merge(sig, None)?;
            (cmd_character(&cfg), cfg)
        }
        Command::Gtable { sig, variant } => {
            let cfg = merge(sig, *variant)?;
            (cmd_gtable(&cfg)?, cfg)
        }
        Command::Cgc { source, sig, j } => {
            let cfg = merge(sig, None)?;
            (cmd_cgc(&cfg, source, *j)?, cfg)
        }
    };
    let mut outcome = outcome;
    if !outcome.body.ends_with('\n') {
        outcome.body.push('\n');
    }
    Ok((outcome, cfg))
}

/// Full program: parse, run, write, and map to an exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok((outcome, cfg)) => {
            let written = match &cfg.output {
                Some(path) => std::fs::write(path, &outcome.body),
                None => std::io::stdout().write_all(outcome.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return 2;
            }
            if outcome.verified {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
