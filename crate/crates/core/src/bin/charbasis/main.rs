//! Command-line front end: exact character tables, basic-set construction,
//! block structure, 2-quotients, and the verification suites with JSON
//! certificates.
//!
//! Exit codes: 0 success, 1 internal error, 2 resource-bound (or usage)
//! violation, 3 verification failure.

mod cache;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use charbasis::alternating::alt_table_json;
use charbasis::engine::{
    build_b_lambda, lambda_membership, restrict_basic_set_to_alt, verify_basic_set_alt,
    verify_basic_set_sym, verify_block_isometries, verify_c_empty_basic_set,
    verify_char_ring_basis, verify_theorem_main, Bounds, CEmptyVariant, LambdaBranch,
};
use charbasis::report::{sort_reports, VerificationReport};
use charbasis::symmetric::{character_table_bounded, two_blocks, CharacterTable};
use charbasis::{two_core_and_quotient, Error, Partition};

const EXIT_OK: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "charbasis",
    version,
    about = "Exact 2-basic sets of symmetric and alternating groups, with machine verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for the persistent character-table cache.
    #[arg(long, global = true, env = "CHARBASIS_CACHE")]
    cache: Option<PathBuf>,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Bound for symmetric-group table sizes and checks (default 14);
    /// setting it also moves the alternating-group bound (default 12).
    #[arg(long, global = true)]
    n_max: Option<usize>,

    /// Bound for the mixed wreath-product check (default 5).
    #[arg(long, global = true)]
    w_max: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Sn,
    An,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    Sn,
    An,
    Base,
    Isometry,
    Wreath,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact character table of the group on n letters.
    Table { group: Group, n: usize },
    /// Construct the basic set, with each member's 2-quotient and branch.
    Basicset { group: Group, n: usize },
    /// Print the 2-block structure of the symmetric group on n letters.
    Blocks { n: usize },
    /// 2-core, 2-quotient, weight and membership data of one partition.
    Quotient { partition: String },
    /// Run verification suites and emit certificates.
    Verify {
        claim: Claim,
        /// Range of n, inclusive: "6" or "1..8".
        #[arg(long)]
        n: Option<String>,
        /// Range of w, inclusive: "3" or "1..4".
        #[arg(long)]
        w: Option<String>,
        /// Shorthand setting both ranges at once.
        #[arg(long)]
        range: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool may already exist in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err @ Error::ResourceBound { .. }) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_RESOURCE)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn bounds_from(cli: &Cli) -> Bounds {
    let mut bounds = Bounds::default();
    if let Some(n_max) = cli.n_max {
        bounds.n_max = n_max;
        bounds.alt_n_max = n_max;
    }
    if let Some(w_max) = cli.w_max {
        bounds.mixed_w_max = w_max;
    }
    bounds
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let bounds = bounds_from(cli);
    match &cli.command {
        Command::Table { group, n } => cmd_table(cli, *group, *n, &bounds),
        Command::Basicset { group, n } => cmd_basicset(cli, *group, *n),
        Command::Blocks { n } => cmd_blocks(cli, *n),
        Command::Quotient { partition } => cmd_quotient(cli, partition),
        Command::Verify { claim, n, w, range } => {
            cmd_verify(cli, *claim, n.as_deref(), w.as_deref(), range.as_deref(), &bounds)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| Error::Io(format!("write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| {
                    if text.ends_with('\n') {
                        Ok(())
                    } else {
                        stdout.write_all(b"\n")
                    }
                })
                .map_err(|e| Error::Io(format!("stdout: {e}")))
        }
    }
}

fn build_table(cli: &Cli, n: usize, bounds: &Bounds) -> Result<CharacterTable, Error> {
    if let Some(dir) = &cli.cache {
        if n <= bounds.n_max {
            if let Some(table) = cache::load_table(dir, n) {
                return Ok(table);
            }
        }
        let table = character_table_bounded(n, bounds.n_max)?;
        cache::store_table(dir, &table);
        return Ok(table);
    }
    character_table_bounded(n, bounds.n_max)
}

fn pretty_table(table: &CharacterTable) -> String {
    let headers: Vec<String> = table
        .classes()
        .iter()
        .map(|c| c.cycle_type.text())
        .collect();
    let rows: Vec<(String, Vec<String>)> = table
        .partitions()
        .iter()
        .enumerate()
        .map(|(r, lam)| {
            let values = (0..headers.len())
                .map(|c| table.value_at(r, c).to_string())
                .collect();
            (lam.text(), values)
        })
        .collect();
    render_grid("lambda", &headers, &rows)
}

fn render_grid(corner: &str, headers: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
    let mut label_width = corner.len();
    for (label, values) in rows {
        label_width = label_width.max(label.chars().count());
        for (i, v) in values.iter().enumerate() {
            widths[i] = widths[i].max(v.len());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("{corner:<label_width$}"));
    for (h, w) in headers.iter().zip(&widths) {
        out.push_str(&format!("  {h:>w$}"));
    }
    out.push('\n');
    for (label, values) in rows {
        let pad = label_width - label.chars().count();
        out.push_str(label);
        out.push_str(&" ".repeat(pad));
        for (v, w) in values.iter().zip(&widths) {
            out.push_str(&format!("  {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

fn cmd_table(cli: &Cli, group: Group, n: usize, bounds: &Bounds) -> Result<u8, Error> {
    if group == Group::An && n < 2 {
        return Err(Error::InvalidPartition(
            "alternating tables need n >= 2".into(),
        ));
    }
    let table = build_table(cli, n, bounds)?;
    let text = match (group, cli.format) {
        (Group::Sn, Format::Csv) => table.to_csv(),
        (Group::Sn, Format::Json) => {
            serde_json::to_string_pretty(&table.to_json()).expect("table serializes")
        }
        (Group::Sn, Format::Pretty) => pretty_table(&table),
        (Group::An, Format::Json) => {
            serde_json::to_string_pretty(&alt_table_json(&table)?).expect("table serializes")
        }
        (Group::An, Format::Csv) | (Group::An, Format::Pretty) => {
            let classes = charbasis::alternating::alt_classes(n);
            let chars = charbasis::alternating::alt_character_table(&table)?;
            let headers: Vec<String> = classes.iter().map(|c| c.label().text()).collect();
            let rows: Vec<(String, Vec<String>)> = chars
                .iter()
                .map(|ch| {
                    let values = classes
                        .iter()
                        .map(|c| ch.value(&c.label()).expect("complete row").to_string())
                        .collect();
                    (ch.label.text(), values)
                })
                .collect();
            if cli.format == Format::Csv {
                let mut out = String::from("rho");
                for h in &headers {
                    out.push(',');
                    out.push_str(h);
                }
                out.push('\n');
                for (label, values) in &rows {
                    out.push_str(label);
                    for v in values {
                        out.push(',');
                        out.push_str(v);
                    }
                    out.push('\n');
                }
                out
            } else {
                render_grid("rho", &headers, &rows)
            }
        }
    };
    emit(cli, &text)?;
    Ok(EXIT_OK)
}

fn branch_name(branch: LambdaBranch) -> &'static str {
    match branch {
        LambdaBranch::FirstKind => "first-kind",
        LambdaBranch::SecondKind => "second-kind",
        LambdaBranch::None => "none",
    }
}

fn cmd_basicset(cli: &Cli, group: Group, n: usize) -> Result<u8, Error> {
    if group == Group::An && n < 2 {
        return Err(Error::InvalidPartition(
            "alternating basic sets need n >= 2".into(),
        ));
    }
    let b_lambda = build_b_lambda(n);
    let member_info: Vec<(Partition, (Partition, Partition), LambdaBranch)> = b_lambda
        .iter()
        .map(|lam| {
            let m = lambda_membership(&two_core_and_quotient(lam).quotient);
            (lam.clone(), m.quotient, m.branch)
        })
        .collect();

    let text = match group {
        Group::Sn => match cli.format {
            Format::Json => {
                let members: Vec<serde_json::Value> = member_info
                    .iter()
                    .map(|(lam, q, branch)| {
                        serde_json::json!({
                            "lambda": lam.text(),
                            "parts": lam,
                            "quotient": [q.0, q.1],
                            "branch": branch_name(*branch),
                        })
                    })
                    .collect();
                serde_json::to_string_pretty(&serde_json::json!({
                    "schema": charbasis::SCHEMA_VERSION,
                    "group": "sn",
                    "n": n,
                    "count": members.len(),
                    "members": members,
                }))
                .expect("serializes")
            }
            _ => {
                let mut out = format!("basic set of the symmetric group, n={n}: {} members\n", member_info.len());
                for (lam, q, branch) in &member_info {
                    out.push_str(&format!(
                        "  {}  quotient=({}, {})  branch={}\n",
                        lam.text(),
                        q.0.text(),
                        q.1.text(),
                        branch_name(*branch)
                    ));
                }
                out
            }
        },
        Group::An => {
            let labels = restrict_basic_set_to_alt(&b_lambda);
            match cli.format {
                Format::Json => {
                    let members: Vec<String> =
                        labels.iter().map(|l| l.text()).collect();
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": charbasis::SCHEMA_VERSION,
                        "group": "an",
                        "n": n,
                        "count": members.len(),
                        "members": members,
                    }))
                    .expect("serializes")
                }
                _ => {
                    let mut out = format!(
                        "basic set of the alternating group, n={n}: {} members\n",
                        labels.len()
                    );
                    for l in &labels {
                        out.push_str(&format!("  {}\n", l.text()));
                    }
                    out
                }
            }
        }
    };
    emit(cli, &text)?;
    Ok(EXIT_OK)
}

fn cmd_blocks(cli: &Cli, n: usize) -> Result<u8, Error> {
    let blocks = two_blocks(n);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "schema": charbasis::SCHEMA_VERSION,
            "n": n,
            "blocks": blocks,
        }))
        .expect("serializes"),
        _ => {
            let mut out = format!("2-blocks of the symmetric group, n={n}: {}\n", blocks.len());
            for b in &blocks {
                out.push_str(&format!(
                    "  core={} weight={} members=[{}]\n",
                    b.core.text(),
                    b.weight,
                    b.members
                        .iter()
                        .map(Partition::text)
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
            out
        }
    };
    emit(cli, &text)?;
    Ok(EXIT_OK)
}

fn cmd_quotient(cli: &Cli, partition: &str) -> Result<u8, Error> {
    let lam: Partition = partition.parse()?;
    let data = two_core_and_quotient(&lam);
    let membership = lambda_membership(&data.quotient);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "schema": charbasis::SCHEMA_VERSION,
            "partition": lam,
            "core": data.core,
            "quotient": [data.quotient.0, data.quotient.1],
            "weight": data.weight,
            "member": membership.member,
            "branch": branch_name(membership.branch),
        }))
        .expect("serializes"),
        _ => format!(
            "partition {}: core={} quotient=({}, {}) weight={} member={} branch={}\n",
            lam.text(),
            data.core.text(),
            data.quotient.0.text(),
            data.quotient.1.text(),
            data.weight,
            membership.member,
            branch_name(membership.branch)
        ),
    };
    emit(cli, &text)?;
    Ok(EXIT_OK)
}

/// Inclusive range syntax: "6" or "1..8".
fn parse_range(text: &str, what: &'static str) -> Result<(usize, usize), Error> {
    let bad = |t: &str| Error::InvalidPartition(format!("bad {what} range: {t}"));
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| bad(text))?;
        let hi: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad(text))?;
        if lo > hi {
            return Err(bad(text));
        }
        Ok((lo, hi))
    } else {
        let v: usize = text.trim().parse().map_err(|_| bad(text))?;
        Ok((v, v))
    }
}

enum Job {
    Sym(usize),
    Alt(usize),
    Base(usize),
    Isometry(usize),
    Wreath(usize),
    Main(usize),
}

fn run_job(job: &Job, bounds: &Bounds) -> Result<Vec<VerificationReport>, Error> {
    match job {
        Job::Sym(n) => Ok(vec![verify_basic_set_sym(*n, bounds)?]),
        Job::Alt(n) => Ok(vec![verify_basic_set_alt(*n, bounds)?]),
        Job::Base(w) => Ok(vec![verify_char_ring_basis(*w, bounds)?]),
        Job::Isometry(n) => verify_block_isometries(*n, bounds),
        Job::Wreath(w) => Ok(vec![
            verify_c_empty_basic_set(*w, CEmptyVariant::BEmpty, bounds)?,
            verify_c_empty_basic_set(*w, CEmptyVariant::Mixed, bounds)?,
        ]),
        Job::Main(n) => verify_theorem_main(*n, bounds),
    }
}

fn cmd_verify(
    cli: &Cli,
    claim: Claim,
    n: Option<&str>,
    w: Option<&str>,
    range: Option<&str>,
    bounds: &Bounds,
) -> Result<u8, Error> {
    let n_range = match (n, range) {
        (Some(text), _) => parse_range(text, "n")?,
        (None, Some(text)) => parse_range(text, "n")?,
        (None, None) => (1, 8),
    };
    let w_range = match (w, range) {
        (Some(text), _) => parse_range(text, "w")?,
        (None, Some(text)) => parse_range(text, "w")?,
        (None, None) => (1, 4),
    };
    let ns = n_range.0..=n_range.1;
    let ws = w_range.0..=w_range.1;

    let mut jobs = Vec::new();
    match claim {
        Claim::Sn => jobs.extend(ns.map(Job::Sym)),
        Claim::An => jobs.extend(ns.filter(|&n| n >= 3).map(Job::Alt)),
        Claim::Base => jobs.extend(ws.map(Job::Base)),
        Claim::Isometry => jobs.extend(ns.map(Job::Isometry)),
        Claim::Wreath => jobs.extend(ws.map(Job::Wreath)),
        Claim::All => {
            for n in ns {
                jobs.push(Job::Sym(n));
                if n >= 3 && n <= bounds.alt_n_max {
                    jobs.push(Job::Alt(n));
                }
                jobs.push(Job::Isometry(n));
                jobs.push(Job::Main(n));
            }
            for w in ws {
                jobs.push(Job::Base(w));
                jobs.push(Job::Wreath(w));
            }
        }
    }

    let results: Vec<Result<Vec<VerificationReport>, Error>> =
        jobs.par_iter().map(|job| run_job(job, bounds)).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    sort_reports(&mut reports);

    let all_passed = reports.iter().all(|r| r.passed);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "schema": charbasis::SCHEMA_VERSION,
            "reports": reports,
        }))
        .expect("serializes"),
        Format::Csv => {
            let mut out = String::from("claim,params,passed\n");
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{}\n",
                    r.claim,
                    r.params.text().replace(' ', ";"),
                    r.passed
                ));
            }
            out
        }
        Format::Pretty => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.summary_line());
                out.push('\n');
            }
            out.push_str(&format!(
                "{}: {} of {} checks passed\n",
                if all_passed { "OK" } else { "FAILED" },
                reports.iter().filter(|r| r.passed).count(),
                reports.len()
            ));
            out
        }
    };
    emit(cli, &text)?;
    Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
