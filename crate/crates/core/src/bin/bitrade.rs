use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bitrade::error::Error;
use bitrade::families::Family;
use bitrade::group::{Group, DEFAULT_ENUM_CAP};
use bitrade::latin::{from_group, read_bitrade, render_text, to_json, Bitrade, GroupTripleInput};
use bitrade::properties::{group_input_of, report, Check, Finding, ReportOptions, Verdict, DEFAULT_MINIMAL_CAP};
use bitrade::search::{search, to_json_lines, SearchFilter, DEFAULT_SEARCH_CAP};
use bitrade::table::{predicted_table, recompute_table, render_table};

const ENV_CAP: &str = "BITRADE_MAX_ELEMENTS";

#[derive(Parser)]
#[command(name = "bitrade", version, about = "Construct latin bitrades from groups and check their properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a bitrade from a family or from group elements a, b, c.
    Construct(ConstructArgs),
    /// Check properties of a bitrade file.
    Verify(VerifyArgs),
    /// List all triples (a, b, (ab)^-1) of a small group giving bitrades.
    Search(SearchArgs),
    /// Print the table of smallest known k-homogeneous bitrade sizes.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Largest group that may be enumerated. Defaults to $BITRADE_MAX_ELEMENTS or 5000000.
    #[arg(long)]
    enum_cap: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    /// zp2:p=3, p3:p=5, pq:p=11,q=5,r=3 or alt:m=2
    #[arg(long, conflicts_with = "group")]
    family: Option<String>,
    /// sym:n, alt:n, cyc:n, prod:.., p3:p, pq:p,q,r or gens:n:(..);(..)
    #[arg(long, requires_all = ["a", "b", "c"])]
    group: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bitrade JSON file.
    input: PathBuf,
    /// Comma-separated: bitrade, separated, primary, thin, orthogonal, homogeneous, minimal, all.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Largest bitrade the minimality search will take on.
    #[arg(long, default_value_t = DEFAULT_MINIMAL_CAP)]
    oracle_cap: usize,
    /// Report elapsed time per property.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    group: String,
    /// Only triples whose elements all have order k.
    #[arg(long)]
    k: Option<u64>,
    /// Only triples generating the whole group.
    #[arg(long)]
    generating: bool,
    /// Largest group order searched.
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
    max_order: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TableArgs {
    /// Odd values of k.
    #[arg(long, value_delimiter = ',', default_value = "3,5,7,9,11")]
    k: Vec<u64>,
    /// Rebuild and verify every cell with at most --build-cap elements.
    #[arg(long)]
    recompute: bool,
    #[arg(long, default_value_t = 100_000)]
    build_cap: usize,
    #[arg(long, default_value_t = DEFAULT_MINIMAL_CAP)]
    oracle_cap: usize,
    #[command(flatten)]
    common: Common,
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Resource { .. } => 3,
            Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn enum_cap(common: &Common) -> Result<usize, Failure> {
    if let Some(c) = common.enum_cap {
        return Ok(c);
    }
    match std::env::var(ENV_CAP) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure { code: 2, message: format!("{ENV_CAP} must be a number, found '{v}'") }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::from(Error::from(e))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary(b: &Bitrade) -> String {
    let alph = b.alphabets();
    let k = match bitrade::properties::homogeneity(b) {
        bitrade::properties::Homogeneity::Homogeneous(k) => k.to_string(),
        _ => "-".into(),
    };
    format!("size={} k={k} rows={} cols={} syms={}", b.size(), alph.rows.len(), alph.cols.len(), alph.syms.len())
}

fn construct(args: &ConstructArgs) -> Result<u8, Failure> {
    let cap = enum_cap(&args.common)?;
    let input = match (&args.family, &args.group) {
        (Some(f), None) => f.parse::<Family>()?.input(cap)?,
        (None, Some(g)) => {
            let group = g.parse::<Group>()?.with_cap(cap);
            let (a, b, c) = (args.a.as_deref().unwrap(), args.b.as_deref().unwrap(), args.c.as_deref().unwrap());
            GroupTripleInput::parse(group, a, b, c)?
        }
        _ => return Err(Failure { code: 2, message: "give either --family or --group with --a, --b, --c".into() }),
    };
    let b = from_group(&input)?;
    let text = match args.common.format {
        Format::Json => to_json(&b) + "\n",
        Format::Text => render_text(&b)?,
    };
    if args.common.output.is_some() {
        emit(&args.common, &text)?;
        println!("{}", summary(&b));
    } else {
        print!("{text}");
        eprintln!("{}", summary(&b));
    }
    Ok(0)
}

fn verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let checks = Check::parse_list(&args.checks)?;
    let b = match read_bitrade(&args.input) {
        Ok(b) => b,
        Err(Error::Violations(v)) => {
            let mut rep = bitrade::properties::PropertyReport::default();
            let mut f = Finding::new(false, bitrade::properties::Method::DirectScan);
            f.witness = Some(v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "));
            rep.bitrade = Some(f);
            let text = match args.common.format {
                Format::Json => rep.to_json() + "\n",
                Format::Text => rep.to_text(),
            };
            emit(&args.common, &text)?;
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let cap = enum_cap(&args.common)?;
    let group = match group_input_of(&b)? {
        Some(mut g) => {
            g.group = g.group.with_cap(cap);
            Some(g)
        }
        None => None,
    };
    let opts = ReportOptions {
        checks: checks.clone(),
        minimal_cap: args.oracle_cap,
        primary_cap: args.oracle_cap.min(bitrade::properties::DEFAULT_PRIMARY_CAP),
        timings: args.timings,
        ..ReportOptions::default()
    };
    let rep = report(&b, group.as_ref(), &opts)?;
    let text = match args.common.format {
        Format::Json => rep.to_json() + "\n",
        Format::Text => rep.to_text(),
    };
    emit(&args.common, &text)?;
    let mut code = 0;
    for c in checks {
        match rep.get(c).map(|f| f.value) {
            Some(Verdict::No) => code = 1,
            Some(Verdict::Unknown) => eprintln!("warning: {} undecided within the caps", c.name()),
            _ => {}
        }
    }
    Ok(code)
}

fn run_search(args: &SearchArgs) -> Result<u8, Failure> {
    let group = args.group.parse::<Group>()?.with_cap(enum_cap(&args.common)?);
    let filter = SearchFilter { k: args.k, generating: args.generating };
    let records = search(&group, &filter, args.max_order)?;
    let text = match args.common.format {
        Format::Json => to_json_lines(&records),
        Format::Text => records
            .iter()
            .map(|r| {
                format!(
                    "a={} b={} c={} orders={:?} generates={} thin={} orthogonal={}\n",
                    r.a, r.b, r.c, r.orders, r.generates, r.thin, r.orthogonal
                )
            })
            .collect(),
    };
    emit(&args.common, &text)?;
    eprintln!("{} triples", records.len());
    Ok(0)
}

fn table(args: &TableArgs) -> Result<u8, Failure> {
    let rows = if args.recompute {
        recompute_table(&args.k, args.build_cap.min(enum_cap(&args.common)?), args.oracle_cap)?
    } else {
        predicted_table(&args.k)?
    };
    let text = match args.common.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Text => render_table(&rows),
    };
    emit(&args.common, &text)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => run_search(a),
        Command::Table(a) => table(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
