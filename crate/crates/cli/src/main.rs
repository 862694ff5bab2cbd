use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hopfcyc::category::check_separated;
use hopfcyc::cyclic::{check_cyclic, check_paracyclic, PowerPolicy, QuotientVariant};
use hopfcyc::format::{parse_instance, LoadedInstance};
use hopfcyc::instances::{builtin, BUILTIN_NAMES};
use hopfcyc::report::Report;
use hopfcyc::suite::{self, Table};
use hopfcyc::Error;

#[derive(Parser, Debug)]
#[command(name = "hopfcyc", version, about = "Equivariant and Hopf-cyclic cohomology over ℚ")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Instance file (JSON).
    #[arg(long, global = true, conflicts_with = "builtin")]
    instance: Option<PathBuf>,

    /// Name of a built-in instance.
    #[arg(long, global = true)]
    builtin: Option<String>,

    /// Truncation degree (default 4; 3 for `morita`).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: Option<u64>,

    /// Largest order of τ searched for before falling back to growth detection.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    tau_order_bound: u64,

    #[arg(long, global = true, value_enum, default_value_t = Variant::Sum)]
    quotient_variant: Variant,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Run every validator on the instance.
    Validate,
    /// HH and HC tables of C(A,M), Q(A,M) and Q(*^A,M).
    Cohomology,
    /// Compare Q(C,M) with Q(ξ,M) through a separation retraction.
    Morita,
    /// Dimensions and structure checks of T, Q^H, Q and C.
    Nerve,
    /// Every builtin through every suite.
    Selftest,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Variant {
    Sum,
    Intersection,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Input(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Scalar(_) | Error::Unsupported(_) | Error::DimensionMismatch { .. } => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Math(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report serializes")
}

impl Cli {
    fn policy(&self) -> PowerPolicy {
        PowerPolicy {
            order_bound: self.tau_order_bound as usize,
            variant: match self.quotient_variant {
                Variant::Sum => QuotientVariant::Sum,
                Variant::Intersection => QuotientVariant::Intersection,
            },
        }
    }

    fn n_max(&self) -> usize {
        let default = if self.command == Command::Morita { 3 } else { 4 };
        self.max_degree.map_or(default, |d| d as usize)
    }

    fn load(&self) -> Result<LoadedInstance, Failure> {
        if let Some(path) = &self.instance {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            return parse_instance(&text).map_err(|e| match e {
                Error::InvalidInstance(m) => Failure::Input(format!("invalid instance: {m}")),
                e => Failure::Input(e.to_string()),
            });
        }
        let name = self.builtin.as_deref().unwrap_or("group2");
        let bundle = builtin(name).ok_or_else(|| {
            Failure::Input(format!("unknown builtin {name:?}; known: {}", BUILTIN_NAMES.join(", ")))
        })?;
        Ok(LoadedInstance {
            bundle,
            category: None,
            witness: None,
        })
    }
}

fn render_tables(tables: &[Table]) -> String {
    let mut s = String::new();
    for t in tables {
        let _ = writeln!(s, "{}  dims {:?}", t.label, t.dims);
        let _ = writeln!(s, "  HH\n{}", indent(&t.hh.to_string()));
        let _ = writeln!(s, "  HC\n{}", indent(&t.hc.to_string()));
    }
    s
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}

fn reports_output(reports: Vec<Report>) -> Output {
    let passed = reports.iter().all(Report::passed);
    let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    Output {
        json: serde_json::json!({ "passed": passed, "reports": json(&reports) }),
        text,
        passed,
    }
}

fn validate(cli: &Cli) -> Result<Output, Failure> {
    let inst = cli.load()?;
    let mut reports = vec![inst.bundle.validate()];
    if let Some(c) = &inst.category {
        reports.push(hopfcyc::category::check_hcategory(&inst.bundle.hopf, c));
        if let Some((xi, w)) = &inst.witness {
            reports.push(check_separated(&inst.bundle.hopf, c, xi, w));
        }
    }
    Ok(reports_output(reports))
}

fn cohomology(cli: &Cli) -> Result<Output, Failure> {
    let inst = cli.load()?;
    let tables = suite::cohomology_tables(&inst.bundle, cli.n_max(), cli.policy())?;
    Ok(Output {
        text: render_tables(&tables),
        json: json(&tables),
        passed: true,
    })
}

fn morita(cli: &Cli) -> Result<Output, Failure> {
    let inst = cli.load()?;
    let b = &inst.bundle;
    let outcome = match (&inst.category, &inst.witness) {
        (Some(c), Some((xi, w))) => {
            let m = b
                .left_coeffs
                .as_ref()
                .ok_or_else(|| Failure::Input("morita needs left-left coefficients".into()))?;
            suite::morita(&b.hopf, c, m, xi, w, cli.n_max(), cli.policy())?
        }
        (Some(_), None) => return Err(Failure::Input("the instance has a category but no witness".into())),
        _ => suite::morita_free(b, cli.n_max(), cli.policy())?,
    };
    let text = format!(
        "{}\n{}",
        render_tables(&[outcome.category.clone(), outcome.subcategory.clone()]),
        outcome.report
    );
    Ok(Output {
        passed: outcome.passed(),
        json: json(&outcome),
        text,
    })
}

#[derive(Serialize)]
struct NerveRow {
    degree: usize,
    t: usize,
    tau_order: Option<usize>,
    killed: usize,
    q: usize,
    c: usize,
}

fn nerve(cli: &Cli) -> Result<Output, Failure> {
    let inst = cli.load()?;
    let mods = suite::algebra_modules(&inst.bundle, cli.n_max(), cli.policy())?;
    let rows: Vec<NerveRow> = (0..=cli.n_max())
        .map(|n| NerveRow {
            degree: n,
            t: mods.t.module.dims[n],
            tau_order: mods.powers[n].tau_order,
            killed: mods.powers[n].killed_dim,
            q: mods.q.dims[n],
            c: mods.c.dims[n],
        })
        .collect();
    let mut checks = vec![check_paracyclic(&mods.t.module), check_cyclic(&mods.q), check_cyclic(&mods.c)];
    checks[0].subject = "T(A,M) para-cyclic".into();
    checks[1].subject = "Q(A,M) cyclic".into();
    checks[2].subject = "C(A,M) cyclic".into();
    let mut text = format!("{:>6} {:>8} {:>10} {:>8} {:>8} {:>8}\n", "degree", "T", "ord(τ)", "killed", "Q", "C");
    for r in &rows {
        let ord = r.tau_order.map_or("-".to_string(), |o| o.to_string());
        let _ = writeln!(text, "{:>6} {:>8} {:>10} {:>8} {:>8} {:>8}", r.degree, r.t, ord, r.killed, r.q, r.c);
    }
    let passed = checks.iter().all(Report::passed);
    for c in &checks {
        let _ = write!(text, "\n{c}");
    }
    Ok(Output {
        json: serde_json::json!({ "degrees": json(&rows), "checks": json(&checks), "passed": passed }),
        text,
        passed,
    })
}

fn selftest(cli: &Cli) -> Result<Output, Failure> {
    Ok(reports_output(suite::selftest(cli.n_max(), cli.policy())?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate => validate(&cli),
        Command::Cohomology => cohomology(&cli),
        Command::Morita => morita(&cli),
        Command::Nerve => nerve(&cli),
        Command::Selftest => selftest(&cli),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("input error: {m}");
            ExitCode::from(2)
        }
    }
}
