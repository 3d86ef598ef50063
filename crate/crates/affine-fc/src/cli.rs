//! Command-line front end: every verification emits a machine-readable
//! report in table, CSV, or JSON form. Exit status is 0 exactly when the
//! report status is ok, 1 on mismatch or resource trouble, 2 on usage
//! errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coxeter::{fc_census, AffineType, CoxeterError, Family};
use crate::formulas::{closed_tail, minimal_period, Method, PeriodValue, Variant};
use crate::numtheory::qbi_at_root;
use crate::partitions::{durfee_decompose, durfee_recompose, for_each_box_partition, Partition};
use crate::paths::csp_verify;
use crate::qseries::{
    eval_at_root, gauss_binomial_table,neg_q_pochhammer, tail_min_period, Polynomial,
};

/// Report status: `ok` exactly when every checked equality held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
    Inconclusive,
}

/// One named command parameter, echoed back into the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: String,
}

/// A machine-readable command report. All row values are decimal integers
/// or plain identifiers rendered as strings, so CSV needs no quoting and
/// JSON round-trips byte-identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: Vec<Param>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub status: Status,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            parameters: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            status: Status::Ok,
        }
    }

    fn param(&mut self, name: &str, value: impl ToString) {
        self.parameters.push(Param { name: name.to_string(), value: value.to_string() });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &self.rows {
            for (i, v) in row.iter().enumerate() {
                widths[i] = widths[i].max(v.len());
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        for p in &self.parameters {
            let _ = writeln!(out, "# {} = {}", p.name, p.value);
        }
        let header: Vec<String> =
            self.columns.iter().enumerate().map(|(i, c)| format!("{c:>w$}", w = widths[i])).collect();
        let _ = writeln!(out, "{}", header.join("  "));
        for row in &self.rows {
            let line: Vec<String> =
                row.iter().enumerate().map(|(i, v)| format!("{v:>w$}", w = widths[i])).collect();
            let _ = writeln!(out, "{}", line.join("  "));
        }
        let _ = writeln!(out, "# status: {}", match self.status {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Inconclusive => "inconclusive",
        });
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum FamilyArg {
    A,
    B,
    C,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum VariantArg {
    Fc,
    Fci,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Fc => Variant::Fc,
            VariantArg::Fci => Variant::Fci,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Qbinomial,
    Paths,
    HanusaJones,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Qbinomial => Method::QBinomial,
            MethodArg::Paths => Method::Paths,
            MethodArg::HanusaJones => Method::HanusaJones,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    Oracle,
    Csp,
    All,
}

#[derive(Parser, Debug)]
#[command(
    name = "affine-fc",
    version,
    about = "Exact counts of fully commutative elements in affine Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Brute-force census of fully commutative elements by length.
    Census {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long = "max-len")]
        max_len: usize,
        /// Count only involutions.
        #[arg(long)]
        involutions: bool,
    },
    /// Coefficients of a closed-form growth series tail.
    Series {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Fc)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Qbinomial)]
        method: MethodArg,
        #[arg(long)]
        order: usize,
    },
    /// Minimal ultimate period, by formula and by tail detection.
    Period {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Fc)]
        variant: VariantArg,
        /// Also report the empirically certified period and start.
        #[arg(long)]
        cross_check: bool,
    },
    /// Cyclic sieving check for rotations of closed lattice paths.
    Csp {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Size cap for the swept parameters.
        #[arg(long = "max-n")]
        max_n: Option<u32>,
    },
}

/// Failures outside clap's own parsing.
#[derive(Debug)]
enum CliError {
    /// Parameter combination the library rejects: usage error, exit 2.
    Usage(String),
    /// Resource guard tripped: exit 1.
    Resource(String),
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::LayerLimit { .. } => CliError::Resource(e.to_string()),
            CoxeterError::ParameterOutOfRange { .. } => CliError::Usage(e.to_string()),
        }
    }
}

/// Parse arguments, run, print the report, and map status to exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits with 2 on usage errors and 0 for help/version
            e.exit();
        }
    };
    let report = match execute(&cli.command) {
        Ok(report) => report,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Resource(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match cli.format {
        FormatArg::Table => print!("{}", report.to_table()),
        FormatArg::Csv => print!("{}", report.to_csv()),
        FormatArg::Json => println!("{}", report.to_json()),
    }
    match report.status {
        Status::Ok => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    }
}

fn affine(family: FamilyArg, n: u32) -> Result<AffineType, CliError> {
    AffineType::new(family.into(), n).map_err(|e| CliError::Usage(e.to_string()))
}

fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Census { family, n, max_len, involutions } => {
            cmd_census(*family, *n, *max_len, *involutions)
        }
        Command::Series { family, n, variant, method, order } => {
            cmd_series(*family, *n, (*variant).into(), (*method).into(), *order)
        }
        Command::Period { family, n, variant, cross_check } => {
            cmd_period(*family, *n, (*variant).into(), *cross_check)
        }
        Command::Csp { n } => cmd_csp(*n),
        Command::Verify { suite, max_n } => cmd_verify(*suite, *max_n),
    }
}

fn cmd_census(
    family: FamilyArg,
    n: u32,
    max_len: usize,
    involutions: bool,
) -> Result<Report, CliError> {
    let t = affine(family, n)?;
    t.graph().map_err(|e| CliError::Usage(e.to_string()))?;
    let census = fc_census(&t, max_len, involutions)?;
    let mut report = Report::new("census");
    report.param("type", t.family());
    report.param("n", n);
    report.param("max_len", max_len);
    report.param("involutions", involutions);
    report.columns = vec!["length".into(), "count".into()];
    report.rows = census
        .counts
        .iter()
        .enumerate()
        .map(|(l, c)| vec![l.to_string(), c.to_string()])
        .collect();
    Ok(report)
}

fn cmd_series(
    family: FamilyArg,
    n: u32,
    variant: Variant,
    method: Method,
    order: usize,
) -> Result<Report, CliError> {
    let t = affine(family, n)?;
    let qr = closed_tail(&t, variant, method).map_err(|e| CliError::Usage(e.to_string()))?;
    let coeffs = qr.expand(order);
    let mut report = Report::new("series");
    report.param("type", t.family());
    report.param("n", n);
    report.param("variant", variant);
    report.param("method", method);
    report.param("order", order);
    report.columns = vec!["length".into(), "coefficient".into()];
    report.rows = coeffs
        .iter()
        .enumerate()
        .map(|(l, c)| vec![l.to_string(), c.to_string()])
        .collect();
    Ok(report)
}

fn cmd_period(
    family: FamilyArg,
    n: u32,
    variant: Variant,
    cross_check: bool,
) -> Result<Report, CliError> {
    let t = affine(family, n)?;
    let formula =
        minimal_period(&t, variant).map_err(|e| CliError::Usage(e.to_string()))?;
    let qr = closed_tail(&t, variant, Method::QBinomial)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut report = Report::new("period");
    report.param("type", t.family());
    report.param("n", n);
    report.param("variant", variant);
    report.columns = vec!["quantity".into(), "value".into()];
    report.rows.push(vec!["formula_period".into(), formula.to_string()]);

    let hint = qr.lcm_moduli();
    let coeffs = qr.expand(qr.stabilization_bound() + 4 * hint as usize);
    let finite_support = coeffs[coeffs.len() / 2..].iter().all(Zero::is_zero);
    let empirical = if finite_support {
        report.rows.push(vec!["empirical_period".into(), "finite".into()]);
        PeriodValue::FiniteSupport
    } else {
        let tail = tail_min_period(&coeffs, hint)
            .map_err(|e| CliError::Resource(e.to_string()))?;
        report.rows.push(vec!["empirical_period".into(), tail.period.to_string()]);
        if cross_check {
            report.rows.push(vec!["tail_start".into(), tail.start.to_string()]);
        }
        let pattern: Vec<String> = tail.pattern.iter().map(BigInt::to_string).collect();
        report.rows.push(vec!["pattern".into(), pattern.join(" ")]);
        PeriodValue::Periodic(tail.period as u64)
    };
    report.status = if empirical == formula { Status::Ok } else { Status::Mismatch };
    Ok(report)
}

fn cmd_csp(n: usize) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::Usage("csp needs n >= 1".into()));
    }
    let rows = csp_verify(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut report = Report::new("csp");
    report.param("n", n);
    report.columns =
        vec!["j".into(), "fixed_points".into(), "evaluation".into(), "binomial".into(), "equal".into()];
    let mut all_ok = true;
    for row in &rows {
        let ok = row.coincide();
        all_ok &= ok;
        report.rows.push(vec![
            row.j.to_string(),
            row.fixed_points.to_string(),
            row.evaluation.to_string(),
            row.binomial.to_string(),
            ok.to_string(),
        ]);
    }
    report.status = if all_ok { Status::Ok } else { Status::Mismatch };
    Ok(report)
}

fn cmd_verify(suite: SuiteArg, max_n: Option<u32>) -> Result<Report, CliError> {
    let mut report = Report::new("verify");
    report.param("suite", format!("{suite:?}").to_lowercase());
    if let Some(m) = max_n {
        report.param("max_n", m);
    }
    report.columns = vec!["check".into(), "cases".into(), "result".into()];
    let mut all_ok = true;
    let push = |report: &mut Report, check: &str, cases: usize, ok: bool| {
        report.rows.push(vec![
            check.to_string(),
            cases.to_string(),
            if ok { "ok".to_string() } else { "mismatch".to_string() },
        ]);
        ok
    };
    if matches!(suite, SuiteArg::Identities | SuiteArg::All) {
        let cap = max_n.unwrap_or(10) as usize;
        let (cases, ok) = verify_identities(cap);
        all_ok &= push(&mut report, "identities", cases, ok);
    }
    if matches!(suite, SuiteArg::Oracle | SuiteArg::All) {
        let cap = max_n.unwrap_or(4);
        let (cases, ok) = verify_oracle(cap)?;
        all_ok &= push(&mut report, "oracle", cases, ok);
    }
    if matches!(suite, SuiteArg::Csp | SuiteArg::All) {
        let cap = max_n.unwrap_or(6) as usize;
        let mut cases = 0;
        let mut ok = true;
        for n in 1..=cap.min(10) {
            for row in csp_verify(n).map_err(|e| CliError::Usage(e.to_string()))? {
                cases += 1;
                ok &= row.coincide();
            }
        }
        all_ok &= push(&mut report, "csp", cases, ok);
    }
    report.status = if all_ok { Status::Ok } else { Status::Mismatch };
    Ok(report)
}

/// Durfee and staircase identities plus the root-of-unity closed form, at
/// CLI scale.
fn verify_identities(cap: usize) -> (usize, bool) {
    let mut cases = 0;
    let mut ok = true;
    let cap = cap.min(16);
    let table = gauss_binomial_table(2 * cap);
    // squared-binomial Durfee identity as exact polynomials
    for a in 0..=cap {
        for b in 0..=cap {
            let mut sum = Polynomial::zero();
            for k in 0..=a.min(b) {
                sum = &sum + &(&table[a][k] * &table[b][k]).shifted(k * k);
            }
            cases += 1;
            ok &= sum == table[a + b][a];
        }
    }
    // staircase identity
    for n in 0..=cap {
        let mut sum = Polynomial::zero();
        for k in 0..=n {
            sum = &sum + &table[n][k].shifted(k * (k + 1) / 2);
        }
        cases += 1;
        ok &= sum == neg_q_pochhammer(n, 1);
    }
    // bijection round trip on a small box
    let boxes = cap.min(6);
    for_each_box_partition(boxes, boxes, |parts| {
        let p = Partition::new(parts.to_vec());
        if let Ok((k, left, right)) = durfee_decompose(&p, boxes, boxes) {
            cases += 1;
            ok &= durfee_recompose(k, &left, &right) == p;
        }
    });
    // closed form against numeric evaluation at roots of unity
    for n in 1..=cap as u64 {
        for k in 0..=n {
            for j in 0..n as i64 {
                let numeric = eval_at_root(&table[n as usize][k as usize], n, j);
                let exact = qbi_at_root(n, k, j);
                cases += 1;
                let e = exact.to_string().parse::<f64>().unwrap_or(f64::NAN);
                ok &= (numeric.re - e).abs() < 1e-6 && numeric.im.abs() < 1e-6;
            }
        }
    }
    (cases, ok)
}

/// Census against closed-form expansion on a shared window.
fn verify_oracle(cap: u32) -> Result<(usize, bool), CliError> {
    let mut cases = 0;
    let mut ok = true;
    let mut targets: Vec<(Family, u32)> = Vec::new();
    for n in 3..=cap.max(3).min(6) {
        targets.push((Family::A, n));
    }
    for n in 2..=cap.min(4) {
        targets.push((Family::C, n));
    }
    targets.push((Family::B, 2));
    targets.push((Family::D, 2));
    for (family, n) in targets {
        let t = AffineType::new(family, n).map_err(|e| CliError::Usage(e.to_string()))?;
        let period = match minimal_period(&t, Variant::Fc)
            .map_err(|e| CliError::Usage(e.to_string()))?
        {
            PeriodValue::Periodic(p) => p as usize,
            PeriodValue::FiniteSupport => 1,
        };
        let max_len = (n as usize) * (n as usize) + 4 * period;
        let census = fc_census(&t, max_len, false)?;
        let qr = closed_tail(&t, Variant::Fc, Method::QBinomial)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let coeffs = qr.expand(max_len);
        let mut suffix = 0;
        for l in (0..=max_len).rev() {
            if BigInt::from(census.counts[l]) == coeffs[l] {
                suffix += 1;
            } else {
                break;
            }
        }
        cases += 1;
        ok &= suffix >= 2 * period;
    }
    Ok((cases, ok))
}
