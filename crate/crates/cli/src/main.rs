mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::Report;

#[derive(Parser)]
#[command(name = "cb", version, about = "Reduced-word bialgebras, their modules and quasisymmetric images")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Also report the image under Ψ for this functional.
    #[arg(long, global = true, value_parser = ["le", "ge", "lt", "gt", "gtle", "ltge", "gelt", "legt", "B", "C", "D"])]
    pub zeta: Option<String>,

    /// What to do when the chosen functional fails its self-test.
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Fail)]
    pub zeta_policy: PolicyArg,

    /// Ignore the size caps.
    #[arg(long, global = true)]
    pub force: bool,

    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Largest length accepted for operands and results.
    #[arg(long, global = true, env = "CB_MAX_DEGREE", default_value_t = 21)]
    pub max_degree: usize,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum PolicyArg {
    Fail,
    Warn,
    Skip,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum Group {
    A,
    B,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Pi,
    Word,
    #[value(name = "qsymM")]
    QsymM,
    #[value(name = "Bmod", alias = "B")]
    Bmod,
    #[value(name = "Dmod", alias = "D")]
    Dmod,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum StanleyType {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum OutBasis {
    M,
    L,
    K,
    #[value(name = "schur")]
    Schur,
    P,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dataset {
    BmodTable,
    DmodTable,
    SshuffleTable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum Family {
    A,
    B,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// List the reduced words of a (signed) permutation.
    ReducedWords {
        #[arg(value_enum, ignore_case = true)]
        group: Group,
        /// One-line notation, e.g. 231645 or -1,2.
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// Multiply two basis elements.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
        /// Recompute by an independent route and check agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Coproduct of a basis element.
    Coproduct {
        #[arg(value_enum)]
        kind: ProductKind,
        #[arg(allow_hyphen_values = true)]
        arg: String,
    },
    /// Stanley symmetric function of a (signed) permutation.
    Stanley {
        #[arg(value_enum, ignore_case = true)]
        ty: StanleyType,
        #[arg(allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, ignore_case = true, default_value_t = OutBasis::M)]
        basis: OutBasis,
    },
    /// Run a verification suite, or all of them.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Export a product table as JSON.
    Export {
        #[arg(value_enum)]
        dataset: Dataset,
        /// Left sizes, `n` or `a..b` (inclusive).
        #[arg(long)]
        left: Option<String>,
        /// Right sizes, `n` or `a..b` (inclusive).
        #[arg(long)]
        right: Option<String>,
        /// Write the JSON report here instead of stdout.
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
    /// List 𝒜(n) or ℬ(m,n) with reduced-word counts.
    Families {
        #[arg(value_enum, ignore_case = true)]
        family: Family,
        n: usize,
        /// The parameter m of ℬ(m,n).
        #[arg(long)]
        m: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = std::time::Instant::now();
    match commands::run(&cli, Report::new(argv)) {
        Ok((mut report, output)) => {
            if cli.timing {
                report.elapsed = Some(start.elapsed());
            }
            let rendered = if cli.json { report.render_json() } else { report.render_text() };
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, report.render_json()) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    print!("{rendered}");
                }
                None => print!("{rendered}"),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "schema": 1, "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
