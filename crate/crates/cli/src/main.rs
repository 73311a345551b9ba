use std::fs;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealzeta::graphio::{to_dot, GraphDocument, JsonInt};
use idealzeta::holomorphy::{check, fuzz_corpus, CheckReport, Verdict};
use idealzeta::monodromy::eigenvalue_orders;
use idealzeta::{parse_ideal, principalise, topological_zeta, ComponentKind, Error, ResolutionGraph};

/// Log-principalisations, topological zeta functions and monodromy of
/// monomial ideals in two variables.
#[derive(Parser)]
#[command(name = "idealzeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the resolution graph.
    Principalize(Common),
    /// Print Z_top^(d) in canonical form.
    Zeta {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        d: u64,
    },
    /// Print the orders of the monodromy eigenvalues.
    Eigenvalues(Common),
    /// Check the holomorphy conjecture for one d or for d = 1..dmax.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "dmax", required_unless_present = "dmax")]
        d: Option<u64>,
        #[arg(long)]
        dmax: Option<u64>,
    },
    /// Check random monomial ideals.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 20)]
        max_exp: u64,
        #[arg(long, default_value_t = 30)]
        dmax: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the summary as JSON to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the resolution graph as JSON (or DOT).
    Export {
        #[command(flatten)]
        common: Common,
        /// Output file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Comma-separated monomial generators, e.g. "x^2*y^4, x^34, y^6".
    #[arg(long, required_unless_present = "graph", conflicts_with = "graph")]
    ideal: Option<String>,
    /// A graph document in JSON.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

enum Failure {
    Input(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Self {
            color: std::env::var_os("IDEALZETA_NO_COLOR").is_none() && std::io::stdout().is_terminal(),
        }
    }

    fn verdict(&self, report: &CheckReport) -> String {
        let line = report.to_string();
        if !self.color {
            return line;
        }
        let code = match report.verdict {
            Verdict::ZeroConfirmed => "32",
            Verdict::NotApplicable => "33",
            Verdict::Violation => "31;1",
        };
        let word = report.verdict.to_string();
        line.replacen(&word, &format!("\x1b[{code}m{word}\x1b[0m"), 1)
    }
}

fn load(common: &Common) -> Result<ResolutionGraph, Failure> {
    if let Some(text) = &common.ideal {
        let ideal = parse_ideal(text).map_err(|e| match e {
            Error::Parse { position, .. } => {
                Failure::Input(format!("{e}\n  {text}\n  {}^", " ".repeat(position.saturating_sub(1))))
            }
            e => e.into(),
        })?;
        if ideal.coefficients_ignored() {
            eprintln!("note: coefficients do not change a monomial ideal and were ignored");
        }
        return Ok(principalise(&ideal)?);
    }
    let path = common.graph.as_ref().expect("clap requires --ideal or --graph");
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(idealzeta::graphio::import_graph(&text)?)
}

fn describe(g: &ResolutionGraph) -> String {
    let mut out = String::new();
    for c in g.components() {
        let ray = match &c.kind {
            ComponentKind::Exceptional { ray: Some(r) } => format!("({},{})", r.p(), r.q()),
            _ => "-".into(),
        };
        let mut flags = Vec::new();
        if c.is_rees() {
            flags.push("rees".to_string());
        }
        if c.in_fiber {
            flags.push("fiber".to_string());
        }
        let line = format!(
            "{:<8} ray {:<10} N={:<6} nu={:<6} att={:<3} {}",
            c.label(),
            ray,
            c.n,
            c.nu,
            c.att,
            flags.join(" ")
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| if e.mult == 1 { format!("{}-{}", e.a, e.b) } else { format!("{}-{} x{}", e.a, e.b, e.mult) })
        .collect();
    out.push_str(&format!("edges: {}\n", if edges.is_empty() { "none".into() } else { edges.join(", ") }));
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    let style = Style::detect();
    match cli.command {
        Command::Principalize(common) => {
            let g = load(&common)?;
            match common.format.unwrap_or(Format::Text) {
                Format::Text => print!("{}", describe(&g)),
                Format::Dot => print!("{}", to_dot(&g)),
                Format::Json => println!("{}", GraphDocument::from_graph(&g).to_json()),
            }
        }
        Command::Zeta { common, d } => {
            let g = load(&common)?;
            let z = topological_zeta(&g, d)?;
            match common.format.unwrap_or(Format::Text) {
                Format::Text => println!("{z}"),
                Format::Dot => print!("{}", to_dot(&g)),
                Format::Json => {
                    let mut doc = GraphDocument::from_graph(&g);
                    doc.d = Some(d);
                    doc.zeta = Some(z.to_string());
                    println!("{}", doc.to_json());
                }
            }
        }
        Command::Eigenvalues(common) => {
            let g = load(&common)?;
            let orders = eigenvalue_orders(&g);
            match common.format.unwrap_or(Format::Text) {
                Format::Text => println!("orders: {orders}"),
                Format::Dot => print!("{}", to_dot(&g)),
                Format::Json => {
                    let mut doc = GraphDocument::from_graph(&g);
                    doc.orders = Some(orders.orders().iter().map(JsonInt::from).collect());
                    println!("{}", doc.to_json());
                }
            }
        }
        Command::Check { common, d, dmax } => {
            let g = load(&common)?;
            let range = match (d, dmax) {
                (Some(d), _) => d..=d,
                (None, Some(m)) => 1..=m,
                (None, None) => unreachable!("clap requires --d or --dmax"),
            };
            let mut violated = false;
            let mut docs = Vec::new();
            for d in range {
                let report = check(&g, d)?;
                violated |= report.verdict == Verdict::Violation;
                match common.format.unwrap_or(Format::Text) {
                    Format::Text => println!("{}", style.verdict(&report)),
                    Format::Dot => {}
                    Format::Json => {
                        let mut doc = GraphDocument::from_graph(&g);
                        doc.d = Some(d);
                        doc.zeta = Some(report.zeta.to_string());
                        doc.verdict = Some(report.verdict.to_string());
                        docs.push(doc);
                    }
                }
            }
            match common.format {
                Some(Format::Dot) => print!("{}", to_dot(&g)),
                Some(Format::Json) if docs.len() == 1 => println!("{}", docs[0].to_json()),
                Some(Format::Json) => {
                    println!("{}", serde_json::to_string_pretty(&docs).expect("documents serialise"))
                }
                _ => {}
            }
            if violated {
                return Err(Failure::Violation);
            }
        }
        Command::Fuzz { count, max_exp, dmax, seed, format, report } => {
            let summary = fuzz_corpus(count, max_exp, dmax, seed)?;
            let json = serde_json::to_string_pretty(&summary).expect("summaries serialise");
            if let Some(path) = report {
                fs::write(&path, format!("{json}\n"))
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            match format {
                Format::Json => println!("{json}"),
                _ => println!("{summary}"),
            }
            if !summary.is_clean() {
                return Err(Failure::Violation);
            }
        }
        Command::Export { common, output } => {
            let g = load(&common)?;
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Dot => to_dot(&g),
                Format::Text | Format::Json => format!("{}\n", GraphDocument::from_graph(&g).to_json()),
            };
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Violation) => ExitCode::from(3),
    }
}
