//! Command-line front end.
//!
//! Every subcommand evaluates to an [`OutputRecord`] printed as one JSON
//! object (keys sorted) or as CSV. Exit codes: 0 success, 2 usage error,
//! 3 precondition failure, 4 failed integrality or consistency check.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Number, Value};

use crate::arith::BigCount;
use crate::chains::{
    assumption_degree_checks, build_secant_construction, count_chain_series,
    enumerate_chain_series, gamma_dimension_identity, ChainSpec,
};
use crate::counts::{castelnuovo, cayley_r3, consistency_check, SecantCount};
use crate::error::Error;
use crate::ramify::{power_bound, riemann_roch_ceiling, square_bound, square_bound_branches};
use crate::secant::{
    coppens_martens_dim, expected_cycle_dim, family_dim_bound, rho_zero_emptiness, secant_verdict,
    uf_secant_problem, very_ample_guaranteed, CycleDim, SecantProblem,
};
use crate::series::{
    eh_dimension, eh_exists, rho_ramified, EhDimension, SchubertIndex, SeriesParams,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

const DEFAULT_ENUM_LIMIT: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "secant-planes",
    version,
    about = "Exact Brill-Noether and secant-plane numerics"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Suppress warnings on standard error
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Grd {
    #[arg(long, allow_negative_numbers = true)]
    g: i64,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
}

#[derive(Debug, Args)]
struct Secant {
    #[arg(long, allow_negative_numbers = true)]
    g: i64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    #[arg(long, allow_negative_numbers = true)]
    e: i64,
    #[arg(long, allow_negative_numbers = true)]
    f: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Brill-Noether number rho(g, r, d)
    Rho(Grd),
    /// Ramified Brill-Noether number and existence at a general pointed curve
    RhoRam {
        #[command(flatten)]
        grd: Grd,
        /// Schubert index, comma separated (default: all zero)
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Expected dimensions of the secant-plane variety
    SecantDim(Secant),
    /// Emptiness / existence verdict for e-secant (e-f-1)-planes
    Verdict {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "u")]
        r: Option<i64>,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "u")]
        e: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        f: i64,
        /// Use the uf-secant problem: r = (u-1)(f+1), e = uf
        #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["r", "e"])]
        u: Option<i64>,
    },
    /// Castelnuovo count C(d, g, r) of (2r-2)-secant (r-2)-planes
    Castelnuovo {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
    /// Cayley's closed form for quadrisecant lines (r = 3)
    Cayley {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
    },
    /// Compare Castelnuovo's sum with Cayley's formula on a grid
    Consistency {
        #[arg(long)]
        dmax: i64,
        #[arg(long)]
        gmax: i64,
    },
    /// Count limit series on an elliptic chain of length g
    ChainCount {
        #[command(flatten)]
        grd: Grd,
        /// Ramification at the first point (default: all zero)
        #[arg(long)]
        alpha: Option<String>,
        /// Ramification at the last point (default: all zero)
        #[arg(long)]
        end: Option<String>,
    },
    /// List limit series on an elliptic chain of length g
    ChainEnum {
        #[command(flatten)]
        grd: Grd,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        end: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
        limit: usize,
    },
    /// Schubert-index data of the secant degeneration with its checks
    Construct(Secant),
    /// Vanishing threshold for L^n, n >= 3
    PowerBound {
        #[command(flatten)]
        grd: Grd,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Vanishing threshold for L^2
    SquareBound {
        #[command(flatten)]
        grd: Grd,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Sweep a numeric subcommand over a parameter grid
    Table(TableArgs),
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Subcommand to sweep
    #[arg(value_enum)]
    of: TableCommand,
    /// Values: `5`, `lo..hi` (exclusive) or `lo..=hi` (inclusive)
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableCommand {
    Rho,
    RhoRam,
    SecantDim,
    Verdict,
    Castelnuovo,
    Cayley,
    ChainCount,
    Construct,
    PowerBound,
    SquareBound,
}

impl TableCommand {
    fn name(self) -> &'static str {
        match self {
            TableCommand::Rho => "rho",
            TableCommand::RhoRam => "rho-ram",
            TableCommand::SecantDim => "secant-dim",
            TableCommand::Verdict => "verdict",
            TableCommand::Castelnuovo => "castelnuovo",
            TableCommand::Cayley => "cayley",
            TableCommand::ChainCount => "chain-count",
            TableCommand::Construct => "construct",
            TableCommand::PowerBound => "power-bound",
            TableCommand::SquareBound => "square-bound",
        }
    }
}

/// Structured result of one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub validity_flags: Vec<String>,
    pub version: String,
    /// Row view used for CSV output of commands whose result is a list.
    pub rows: Option<Table>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_owned(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            validity_flags: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            rows: None,
        }
    }

    fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_owned(), value.into());
    }

    fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_owned(), value.into());
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::from(self.command.clone()));
        obj.insert(
            "inputs".into(),
            Value::Object(self.inputs.clone().into_iter().collect()),
        );
        obj.insert(
            "outputs".into(),
            Value::Object(self.outputs.clone().into_iter().collect()),
        );
        obj.insert(
            "validity_flags".into(),
            Value::from(self.validity_flags.clone()),
        );
        obj.insert("version".into(), Value::from(self.version.clone()));
        Value::Object(obj)
    }

    /// Header and rows for CSV output.
    pub fn to_table(&self) -> Table {
        if let Some(t) = &self.rows {
            return t.clone();
        }
        let mut header = vec!["command".to_owned()];
        let mut row = vec![self.command.clone()];
        for (k, v) in &self.inputs {
            header.push(k.clone());
            row.push(cell(v));
        }
        let mut flat = Vec::new();
        for (k, v) in &self.outputs {
            flatten(k, v, &mut flat);
        }
        for (k, v) in flat {
            header.push(k);
            row.push(v);
        }
        header.push("validity_flags".into());
        row.push(self.validity_flags.join(";"));
        Table {
            header,
            rows: vec![row],
        }
    }
}

/// Exact integer as a JSON number.
pub fn big_value(n: &BigCount) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("decimal integers are valid JSON numbers"),
    )
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&format!("{prefix}.{k}"), inner, out);
            }
        }
        other => out.push((prefix.to_owned(), cell(other))),
    }
}

/// Failure of a CLI evaluation, mapped onto an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
    Integrity(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(e) if e.is_internal() => EXIT_INTERNAL,
            CliError::Compute(_) => EXIT_PRECONDITION,
            CliError::Integrity(_) => EXIT_INTERNAL,
        }
    }

    fn code_name(&self) -> String {
        match self {
            CliError::Usage(_) => "USAGE".into(),
            CliError::Compute(e) => error_code(e).into(),
            CliError::Integrity(_) => "INTEGRITY".into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Integrity(m) => write!(f, "integrity check failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

/// Stable machine-readable name of an error.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::NegativeArgument { .. } => "NEGATIVE_ARGUMENT",
        Error::InvalidParameters(_) => "INVALID_PARAMETERS",
        Error::InvalidSchubertIndex { .. } => "INVALID_SCHUBERT_INDEX",
        Error::InvalidVanishingSequence { .. } => "INVALID_VANISHING_SEQUENCE",
        Error::ContextMismatch { .. } => "CONTEXT_MISMATCH",
        Error::Collision { .. } => "COLLISION",
        Error::Overflow { .. } => "OVERFLOW",
        Error::StationaryOutOfRange { .. } => "STATIONARY_OUT_OF_RANGE",
        Error::NotRhoZero { .. } => "NOT_RHO_ZERO",
        Error::PreconditionFail(_) => "PRECONDITION_FAIL",
        Error::NonIntegral(_) => "NON_INTEGRAL",
    }
}

/// Parameter bag shared by the direct subcommands and `table`.
#[derive(Debug, Clone, Default)]
struct Params {
    g: Option<i64>,
    r: Option<i64>,
    d: Option<i64>,
    e: Option<i64>,
    f: Option<i64>,
    n: Option<i64>,
    u: Option<i64>,
    alpha: Option<Vec<i64>>,
    end: Option<Vec<i64>>,
}

impl Params {
    fn need(&self, name: &'static str) -> Result<i64, CliError> {
        let v = match name {
            "g" => self.g,
            "r" => self.r,
            "d" => self.d,
            "e" => self.e,
            "f" => self.f,
            "n" => self.n,
            "u" => self.u,
            _ => None,
        };
        v.ok_or_else(|| CliError::Usage(format!("missing --{name}")))
    }

    fn grd(&self) -> Result<(i64, i64, i64), CliError> {
        Ok((self.need("g")?, self.need("r")?, self.need("d")?))
    }

    fn series(&self) -> Result<SeriesParams, CliError> {
        let (g, r, d) = self.grd()?;
        Ok(SeriesParams::new(g, r, d)?)
    }

    fn index(&self, entries: &Option<Vec<i64>>, r: i64, d: i64) -> Result<SchubertIndex, CliError> {
        Ok(match entries {
            Some(e) => SchubertIndex::new(r, d, e.clone())?,
            None => SchubertIndex::zero(r, d)?,
        })
    }

    fn problem(&self) -> Result<SecantProblem, CliError> {
        Ok(SecantProblem::new(
            self.need("g")?,
            self.need("d")?,
            self.need("r")?,
            self.need("e")?,
            self.need("f")?,
        )?)
    }
}

/// Parses `0,0,1,2`.
pub fn parse_index(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid index entry {t:?} in {s:?}"))
        })
        .collect()
}

/// Parses `5`, `lo..hi` or `lo..=hi`.
pub fn parse_range(s: &str) -> Result<Vec<i64>, String> {
    let bad = || format!("invalid range {s:?}");
    if let Some((lo, hi)) = s.split_once("..=") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        return Ok((lo..=hi).collect());
    }
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        return Ok((lo..hi).collect());
    }
    s.trim().parse::<i64>().map(|v| vec![v]).map_err(|_| bad())
}

fn index_value(entries: &[i64]) -> Value {
    Value::from(entries.to_vec())
}

fn add_flags(rec: &mut OutputRecord, count: &SecantCount) {
    rec.validity_flags
        .extend(count.flags.iter().map(|f| f.as_str().to_owned()));
}

fn eval_rho(p: &Params) -> Result<OutputRecord, CliError> {
    let s = p.series()?;
    let mut rec = OutputRecord::new("rho");
    rec.input("g", s.g);
    rec.input("r", s.r);
    rec.input("d", s.d);
    rec.output("rho", s.rho());
    Ok(rec)
}

fn eval_rho_ram(p: &Params) -> Result<OutputRecord, CliError> {
    let s = p.series()?;
    let alpha = p.index(&p.alpha, s.r, s.d)?;
    let mut rec = OutputRecord::new("rho-ram");
    rec.input("g", s.g);
    rec.input("r", s.r);
    rec.input("d", s.d);
    rec.input("alpha", index_value(alpha.entries()));
    rec.output("rho", s.rho());
    rec.output("rho_ramified", rho_ramified(&s, &alpha)?);
    rec.output("weight", alpha.sum());
    rec.output("vanishing", index_value(alpha.to_vanishing().entries()));
    rec.output("eh_exists", eh_exists(&s, &alpha)?);
    rec.output(
        "eh_dimension",
        match eh_dimension(&s, &alpha)? {
            EhDimension::Dimension(n) => Value::from(n),
            EhDimension::Empty => Value::from("empty"),
        },
    );
    Ok(rec)
}

fn secant_inputs(rec: &mut OutputRecord, q: &SecantProblem) {
    rec.input("g", q.g);
    rec.input("d", q.d);
    rec.input("r", q.r);
    rec.input("e", q.e);
    rec.input("f", q.f);
}

fn eval_secant_dim(p: &Params) -> Result<OutputRecord, CliError> {
    let q = p.problem()?;
    let mut rec = OutputRecord::new("secant-dim");
    secant_inputs(&mut rec, &q);
    rec.output("expected_cycle_dim", expected_cycle_dim(&q));
    rec.output("family_dim_bound", family_dim_bound(&q));
    rec.output(
        "coppens_martens_dim",
        match coppens_martens_dim(&q) {
            CycleDim::Dimension(n) => Value::from(n),
            CycleDim::EmptyExpected => Value::from("empty-expected"),
        },
    );
    rec.output("rho_zero_emptiness", rho_zero_emptiness(&q));
    rec.output(
        "very_ample_guaranteed",
        very_ample_guaranteed(q.g, q.r, q.d, q.e)?,
    );
    Ok(rec)
}

fn eval_verdict(p: &Params) -> Result<OutputRecord, CliError> {
    let q = match p.u {
        Some(u) => uf_secant_problem(p.need("g")?, p.need("d")?, u, p.need("f")?)?,
        None => p.problem()?,
    };
    let v = secant_verdict(&q);
    let mut rec = OutputRecord::new("verdict");
    match p.u {
        Some(u) => {
            rec.input("g", q.g);
            rec.input("d", q.d);
            rec.input("u", u);
            rec.input("f", q.f);
            rec.output("r", q.r);
            rec.output("e", q.e);
        }
        None => secant_inputs(&mut rec, &q),
    }
    rec.output("status", v.status.as_str());
    rec.output("expected_dim_cycle", v.expected_dim_cycle);
    rec.output("expected_dim_family", v.expected_dim_family);
    let witnesses: Map<String, Value> = v
        .witnesses
        .iter()
        .map(|(k, b)| ((*k).to_owned(), Value::from(*b)))
        .collect();
    rec.output("witnesses", Value::Object(witnesses));
    Ok(rec)
}

fn count_record(name: &str, c: &SecantCount) -> OutputRecord {
    let mut rec = OutputRecord::new(name);
    rec.input("d", c.d);
    rec.input("g", c.g);
    if name == "castelnuovo" {
        rec.input("r", c.r);
    }
    rec.output("count", big_value(&c.value));
    rec.output("formula", c.formula.as_str());
    add_flags(&mut rec, c);
    rec
}

fn eval_castelnuovo(p: &Params) -> Result<OutputRecord, CliError> {
    let c = castelnuovo(p.need("d")?, p.need("g")?, p.need("r")?)?;
    Ok(count_record("castelnuovo", &c))
}

fn eval_cayley(p: &Params) -> Result<OutputRecord, CliError> {
    let c = cayley_r3(p.need("d")?, p.need("g")?)?;
    Ok(count_record("cayley", &c))
}

fn chain_spec(p: &Params) -> Result<ChainSpec, CliError> {
    let (g, r, d) = p.grd()?;
    if g < 1 {
        return Err(
            Error::InvalidParameters(format!("chain length g must be >= 1, got {g}")).into(),
        );
    }
    let start = p.index(&p.alpha, r, d)?;
    let end = p.index(&p.end, r, d)?;
    Ok(ChainSpec::new(g as usize, start, end)?)
}

fn chain_inputs(rec: &mut OutputRecord, spec: &ChainSpec) {
    let s = spec.series();
    rec.input("g", s.g);
    rec.input("r", s.r);
    rec.input("d", s.d);
    rec.input("alpha", index_value(spec.start().entries()));
    rec.input("end", index_value(spec.end().entries()));
}

fn eval_chain_count(p: &Params) -> Result<OutputRecord, CliError> {
    let spec = chain_spec(p)?;
    let count = count_chain_series(&spec)?;
    let mut rec = OutputRecord::new("chain-count");
    chain_inputs(&mut rec, &spec);
    rec.output("count", big_value(&count));
    rec.output("adjusted_rho", spec.adjusted_rho());
    Ok(rec)
}

fn eval_chain_enum(p: &Params, limit: usize) -> Result<OutputRecord, CliError> {
    let spec = chain_spec(p)?;
    let listing = enumerate_chain_series(&spec, limit)?;
    let mut rec = OutputRecord::new("chain-enum");
    chain_inputs(&mut rec, &spec);
    rec.input("limit", limit as u64);

    let mut table = Table {
        header: vec![
            "path".into(),
            "stationary_indices".into(),
            "sequences".into(),
        ],
        rows: Vec::new(),
    };
    let mut paths = Vec::new();
    for (i, path) in listing.paths.iter().enumerate() {
        let seqs: Vec<Value> = path
            .sequences
            .iter()
            .map(|s| index_value(s.entries()))
            .collect();
        let mut obj = Map::new();
        obj.insert(
            "stationary_indices".into(),
            Value::from(
                path.stationary_indices
                    .iter()
                    .map(|&s| s as u64)
                    .collect::<Vec<_>>(),
            ),
        );
        obj.insert("sequences".into(), Value::from(seqs));
        paths.push(Value::Object(obj));

        let words: Vec<String> = path
            .stationary_indices
            .iter()
            .map(|s| s.to_string())
            .collect();
        let seq_cells: Vec<String> = path.sequences.iter().map(|s| s.to_string()).collect();
        table
            .rows
            .push(vec![i.to_string(), words.join(","), seq_cells.join(" ")]);
    }
    rec.output("paths", Value::from(paths));
    rec.output("listed", listing.paths.len() as u64);
    rec.output("total", big_value(&listing.total));
    rec.output("truncated", listing.truncated);
    if listing.truncated {
        rec.validity_flags.push("TRUNCATED".into());
    }
    rec.rows = Some(table);
    Ok(rec)
}

fn eval_construct(p: &Params) -> Result<OutputRecord, CliError> {
    let q = p.problem()?;
    let c = build_secant_construction(&q)?;
    let checks = assumption_degree_checks(&q);
    if checks.assumption2_degree != checks.genus_y_minus_one {
        return Err(CliError::Integrity(format!(
            "degree {} != g(Y) - 1 = {}",
            checks.assumption2_degree, checks.genus_y_minus_one
        )));
    }
    let identity = gamma_dimension_identity(&q)?;
    if !identity {
        return Err(CliError::Integrity("gamma dimension identity fails".into()));
    }
    let mut rec = OutputRecord::new("construct");
    secant_inputs(&mut rec, &q);
    rec.output("alpha", index_value(c.alpha.entries()));
    rec.output("beta", index_value(c.beta.entries()));
    rec.output("merged", index_value(c.merged.entries()));
    rec.output("gamma", index_value(c.gamma.entries()));
    rec.output("alpha_sum", c.alpha.sum());
    rec.output("beta_sum", c.beta.sum());
    rec.output("gamma_identity", identity);
    rec.output(
        "rho_gamma",
        crate::series::rho(q.g - q.e, q.r, q.d) - c.gamma.sum(),
    );
    let z_genus = q.g - q.e;
    let eh = if z_genus >= 0 {
        Value::from(eh_exists(&SeriesParams::new(z_genus, q.r, q.d)?, &c.gamma)?)
    } else {
        Value::Null
    };
    rec.output("eh_exists_gamma", eh);
    rec.output("assumption2_degree", checks.assumption2_degree);
    rec.output("ass4_holds", checks.ass4_holds);
    rec.output("gdr_ge_e", checks.gdr_ge_e);
    Ok(rec)
}

fn bound_inputs(rec: &mut OutputRecord, s: &SeriesParams, alpha: &SchubertIndex) {
    rec.input("g", s.g);
    rec.input("r", s.r);
    rec.input("d", s.d);
    rec.input("alpha", index_value(alpha.entries()));
}

fn eval_power_bound(p: &Params) -> Result<OutputRecord, CliError> {
    let s = p.series()?;
    let alpha = p.index(&p.alpha, s.r, s.d)?;
    let n = p.need("n")?;
    let b = power_bound(&s, &alpha, n)?;
    let mut rec = OutputRecord::new("power-bound");
    bound_inputs(&mut rec, &s, &alpha);
    rec.input("n", n);
    rec.output("threshold", b.threshold);
    rec.output("m", b.m);
    rec.output("rho_adj", b.rho_adj);
    rec.output("claim", b.claim);
    rec.output("riemann_roch_ceiling", riemann_roch_ceiling(n, s.d, s.g));
    Ok(rec)
}

fn eval_square_bound(p: &Params) -> Result<OutputRecord, CliError> {
    let s = p.series()?;
    let alpha = p.index(&p.alpha, s.r, s.d)?;
    let b = square_bound(&s, &alpha)?;
    let (first, second) = square_bound_branches(&s, &alpha)?;
    let mut rec = OutputRecord::new("square-bound");
    bound_inputs(&mut rec, &s, &alpha);
    rec.output("threshold", b.threshold);
    rec.output("first_branch", first);
    rec.output("second_branch", second);
    rec.output("m", b.m);
    rec.output("rho_adj", b.rho_adj);
    rec.output("claim", b.claim);
    rec.output("riemann_roch_ceiling", riemann_roch_ceiling(2, s.d, s.g));
    Ok(rec)
}

fn eval_consistency(dmax: i64, gmax: i64) -> Result<OutputRecord, CliError> {
    let report = consistency_check(dmax, gmax)?;
    let mut rec = OutputRecord::new("consistency");
    rec.input("dmax", dmax);
    rec.input("gmax", gmax);
    rec.output("checked", report.values.len() as u64);
    rec.output("mismatches", report.mismatches.len() as u64);
    let list: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| {
            let mut obj = Map::new();
            obj.insert("d".into(), Value::from(m.d));
            obj.insert("g".into(), Value::from(m.g));
            obj.insert("general".into(), big_value(&m.general));
            obj.insert("cayley".into(), big_value(&m.cayley));
            Value::Object(obj)
        })
        .collect();
    rec.output("mismatch_list", Value::from(list));

    let mut table = Table {
        header: vec!["d".into(), "g".into(), "count".into(), "match".into()],
        rows: Vec::new(),
    };
    for ((d, g), v) in &report.values {
        let ok = !report.mismatches.iter().any(|m| m.d == *d && m.g == *g);
        table.rows.push(vec![
            d.to_string(),
            g.to_string(),
            v.to_string(),
            ok.to_string(),
        ]);
    }
    rec.rows = Some(table);
    if !report.is_consistent() {
        rec.validity_flags.push("MISMATCH".into());
    }
    Ok(rec)
}

fn evaluate(cmd: TableCommand, p: &Params) -> Result<OutputRecord, CliError> {
    match cmd {
        TableCommand::Rho => eval_rho(p),
        TableCommand::RhoRam => eval_rho_ram(p),
        TableCommand::SecantDim => eval_secant_dim(p),
        TableCommand::Verdict => eval_verdict(p),
        TableCommand::Castelnuovo => eval_castelnuovo(p),
        TableCommand::Cayley => eval_cayley(p),
        TableCommand::ChainCount => eval_chain_count(p),
        TableCommand::Construct => eval_construct(p),
        TableCommand::PowerBound => eval_power_bound(p),
        TableCommand::SquareBound => eval_square_bound(p),
    }
}

const TABLE_PARAMS: [&str; 7] = ["d", "e", "f", "g", "n", "r", "u"];

fn eval_table(args: &TableArgs) -> Result<OutputRecord, CliError> {
    let raw = [
        ("d", &args.d),
        ("e", &args.e),
        ("f", &args.f),
        ("g", &args.g),
        ("n", &args.n),
        ("r", &args.r),
        ("u", &args.u),
    ];
    let mut axes: Vec<(&'static str, Vec<i64>)> = Vec::new();
    for (name, value) in raw {
        if let Some(v) = value {
            axes.push((name, parse_range(v).map_err(CliError::Usage)?));
        }
    }
    debug_assert!(axes.iter().all(|(n, _)| TABLE_PARAMS.contains(n)));
    let alpha = match &args.alpha {
        Some(s) => Some(parse_index(s).map_err(CliError::Usage)?),
        None => None,
    };

    let mut rec = OutputRecord::new("table");
    rec.input("of", args.of.name());
    for (name, value) in raw {
        if let Some(v) = value {
            rec.input(name, v.clone());
        }
    }
    if let Some(a) = &alpha {
        rec.input("alpha", index_value(a));
    }

    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for (_, values) in &axes {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }

    let mut output_keys: Option<Vec<String>> = None;
    let mut raw_rows = Vec::new();
    let mut json_rows = Vec::new();
    for point in &points {
        let mut params = Params {
            alpha: alpha.clone(),
            ..Params::default()
        };
        for ((name, _), &v) in axes.iter().zip(point) {
            match *name {
                "d" => params.d = Some(v),
                "e" => params.e = Some(v),
                "f" => params.f = Some(v),
                "g" => params.g = Some(v),
                "n" => params.n = Some(v),
                "r" => params.r = Some(v),
                "u" => params.u = Some(v),
                _ => unreachable!(),
            }
        }
        let mut row_obj = Map::new();
        for ((name, _), &v) in axes.iter().zip(point) {
            row_obj.insert((*name).to_owned(), Value::from(v));
        }
        match evaluate(args.of, &params) {
            Ok(r) => {
                let mut flat = Vec::new();
                for (k, v) in &r.outputs {
                    flatten(k, v, &mut flat);
                }
                if output_keys.is_none() {
                    output_keys = Some(flat.iter().map(|(k, _)| k.clone()).collect());
                }
                row_obj.insert("row_status".into(), Value::from("OK"));
                row_obj.insert(
                    "outputs".into(),
                    Value::Object(r.outputs.clone().into_iter().collect()),
                );
                row_obj.insert(
                    "validity_flags".into(),
                    Value::from(r.validity_flags.clone()),
                );
                raw_rows.push((
                    point.clone(),
                    "OK".to_owned(),
                    flat,
                    r.validity_flags.join(";"),
                ));
            }
            Err(CliError::Usage(m)) => return Err(CliError::Usage(m)),
            Err(e) => {
                let code = e.code_name();
                row_obj.insert("row_status".into(), Value::from(code.clone()));
                raw_rows.push((point.clone(), code, Vec::new(), String::new()));
            }
        }
        json_rows.push(Value::Object(row_obj));
    }

    let output_keys = output_keys.unwrap_or_default();
    let mut header: Vec<String> = axes.iter().map(|(n, _)| (*n).to_owned()).collect();
    header.push("row_status".into());
    header.extend(output_keys.iter().cloned());
    header.push("validity_flags".into());
    let mut rows = Vec::new();
    for (point, status, flat, flags) in raw_rows {
        let mut row: Vec<String> = point.iter().map(|v| v.to_string()).collect();
        row.push(status);
        let lookup: BTreeMap<_, _> = flat.into_iter().collect();
        for k in &output_keys {
            row.push(lookup.get(k).cloned().unwrap_or_default());
        }
        row.push(flags);
        rows.push(row);
    }

    rec.output("row_count", points.len() as u64);
    rec.output("rows", Value::from(json_rows));
    rec.rows = Some(Table { header, rows });
    Ok(rec)
}

fn index_arg(s: &Option<String>) -> Result<Option<Vec<i64>>, CliError> {
    match s {
        Some(s) => parse_index(s).map(Some).map_err(CliError::Usage),
        None => Ok(None),
    }
}

fn grd_params(grd: &Grd) -> Params {
    Params {
        g: Some(grd.g),
        r: Some(grd.r),
        d: Some(grd.d),
        ..Params::default()
    }
}

fn secant_params(s: &Secant) -> Params {
    Params {
        g: Some(s.g),
        d: Some(s.d),
        r: Some(s.r),
        e: Some(s.e),
        f: Some(s.f),
        ..Params::default()
    }
}

fn dispatch(cmd: &Command) -> Result<(OutputRecord, Format), CliError> {
    // Format is decided by the caller; `table` defaults to CSV.
    let rec = match cmd {
        Command::Rho(grd) => eval_rho(&grd_params(grd))?,
        Command::RhoRam { grd, alpha } => {
            let mut p = grd_params(grd);
            p.alpha = index_arg(alpha)?;
            eval_rho_ram(&p)?
        }
        Command::SecantDim(s) => eval_secant_dim(&secant_params(s))?,
        Command::Verdict { g, d, r, e, f, u } => eval_verdict(&Params {
            g: Some(*g),
            d: Some(*d),
            r: *r,
            e: *e,
            f: Some(*f),
            u: *u,
            ..Params::default()
        })?,
        Command::Castelnuovo { d, g, r } => eval_castelnuovo(&Params {
            d: Some(*d),
            g: Some(*g),
            r: Some(*r),
            ..Params::default()
        })?,
        Command::Cayley { d, g } => eval_cayley(&Params {
            d: Some(*d),
            g: Some(*g),
            ..Params::default()
        })?,
        Command::Consistency { dmax, gmax } => eval_consistency(*dmax, *gmax)?,
        Command::ChainCount { grd, alpha, end } => {
            let mut p = grd_params(grd);
            p.alpha = index_arg(alpha)?;
            p.end = index_arg(end)?;
            eval_chain_count(&p)?
        }
        Command::ChainEnum {
            grd,
            alpha,
            end,
            limit,
        } => {
            let mut p = grd_params(grd);
            p.alpha = index_arg(alpha)?;
            p.end = index_arg(end)?;
            eval_chain_enum(&p, *limit)?
        }
        Command::Construct(s) => eval_construct(&secant_params(s))?,
        Command::PowerBound { grd, alpha, n } => {
            let mut p = grd_params(grd);
            p.alpha = index_arg(alpha)?;
            p.n = Some(*n);
            eval_power_bound(&p)?
        }
        Command::SquareBound { grd, alpha } => {
            let mut p = grd_params(grd);
            p.alpha = index_arg(alpha)?;
            eval_square_bound(&p)?
        }
        Command::Table(args) => return Ok((eval_table(args)?, Format::Csv)),
    };
    Ok((rec, Format::Json))
}

fn write_csv(table: &Table, out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()
}

/// Renders a record in the requested format.
pub fn render(rec: &OutputRecord, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string(&rec.to_json()).expect("JSON values serialize");
            writeln!(out, "{text}")
        }
        Format::Csv => write_csv(&rec.to_table(), out),
    }
}

/// Parses `args`, runs the subcommand and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let format_given = args.iter().any(|a| {
        let s = a.to_string_lossy();
        s == "--format" || s.starts_with("--format=")
    });
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };

    match dispatch(&cli.command) {
        Ok((rec, default_format)) => {
            let format = if format_given {
                cli.format
            } else {
                default_format
            };
            if !cli.quiet {
                for flag in &rec.validity_flags {
                    let _ = writeln!(stderr, "warning: {flag}");
                }
            }
            if let Err(e) = render(&rec, format, stdout) {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_INTERNAL;
            }
            if rec.command == "consistency" && rec.validity_flags.iter().any(|f| f == "MISMATCH") {
                return EXIT_INTERNAL;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error [{}]: {e}", e.code_name());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["secant-planes"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_helpers() {
        assert_eq!(parse_index("0,0,1,2").unwrap(), vec![0, 0, 1, 2]);
        assert!(parse_index("0,x").is_err());
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("1..4").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_range("1..=4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_range("-2..=0").unwrap(), vec![-2, -1, 0]);
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn rho_json() {
        let (code, out, _) = run_str(&["rho", "--g", "4", "--r", "1", "--d", "3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["outputs"]["rho"], Value::from(0));
        assert_eq!(v["command"], Value::from("rho"));
    }

    #[test]
    fn big_values_are_numbers() {
        let v = big_value(&BigCount::from(10).pow(40u32));
        assert_eq!(v.to_string(), format!("1{}", "0".repeat(40)));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["rho", "--g", "4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["rho-ram", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,a"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn table_names() {
        assert_eq!(TableCommand::SquareBound.name(), "square-bound");
        assert_eq!(TableCommand::Rho.name(), "rho");
    }
}
