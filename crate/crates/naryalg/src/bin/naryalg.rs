//! Command-line front end: parse algebra files, run identity checks and
//! structural analyses, emit catalog algebras, all with deterministic
//! output. Exit codes: 0 = pass, 1 = witness found, 2 = usage/input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use naryalg::catalog::{self, DimNKind};
use naryalg::exterior::{maurer_cartan_check, McOutcome};
use naryalg::fileformat;
use naryalg::groupalg::{colored_reduction, verify_wv_identity};
use naryalg::identities::{
    check_3lie_admissible, check_commutative, check_filippov, check_n_leibniz,
    check_partial_assoc, check_sh_jacobi, check_sigma_partial_assoc, check_sigma_total_assoc,
    check_total_assoc, Verdict,
};
use naryalg::perm::Permutation;
use naryalg::product::NAryProduct;
use naryalg::rational::parse_rational;
use naryalg::report::analyze;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "naryalg", version, about = "exact workbench for n-ary algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Flat,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Seed for randomized candidate sampling (falls back to NARYALG_SEED,
    /// then 0)
    #[arg(long)]
    seed: Option<u64>,
}

impl CommonOpts {
    fn seed(&self) -> u64 {
        self.seed
            .or_else(|| {
                std::env::var("NARYALG_SEED")
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or(0)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check one identity on an algebra file
    Check {
        /// Identity name: filippov, sh-jacobi, n-leibniz, commutative,
        /// partial-assoc, total-assoc, sigma-partial, sigma-total,
        /// 3lie-admissible
        #[arg(long)]
        identity: String,
        /// Permutation for the sigma-twisted identities, e.g. 3,2,1
        #[arg(long)]
        sigma: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
        file: String,
    },
    /// Full structural report for a skew algebra file
    Analyze {
        #[command(flatten)]
        opts: CommonOpts,
        file: String,
    },
    /// Print a catalog algebra as an algebra file
    Catalog {
        /// Entry name: simple, dimn, abelian, filiform, filiform5,
        /// counterexample, jr, matrix3, matrix3-plain, cyclic-tensor
        name: String,
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
        /// Kind for `dimn`: abelian or e1
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
    },
    /// Run the Maurer-Cartan check d(d w_l) = 0 on an algebra file
    Mc {
        #[command(flatten)]
        opts: CommonOpts,
        file: String,
    },
    /// Group-algebra identities
    Groupalg {
        #[command(subcommand)]
        what: GroupalgCommand,
    },
}

#[derive(Subcommand)]
enum GroupalgCommand {
    /// Verify w o v = alpha(n) w in Q[Sigma_{2n-1}] and print the scalar
    Wv {
        #[arg(long)]
        arity: usize,
    },
    /// Compose w with alpha*Id + beta*c + gamma*c^2 in Q[Sigma_3]
    Colored {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
}

fn fail_usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(file: &str) -> Result<NAryProduct, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("cannot read {file}: {e}"))?;
    fileformat::parse(&text).map_err(|e| format!("{file}: {e}"))
}

fn parse_sigma(spec: &str, arity: usize) -> Result<Permutation, String> {
    let images: Result<Vec<usize>, _> = spec.split(',').map(|t| t.trim().parse()).collect();
    let images = images.map_err(|_| format!("bad permutation `{spec}`"))?;
    if images.len() != arity {
        return Err(format!(
            "permutation has {} points, arity is {arity}",
            images.len()
        ));
    }
    Permutation::new(images).map_err(|e| e.to_string())
}

fn print_verdict(v: &Verdict, format: Format) {
    match format {
        Format::Human => println!("{v}"),
        Format::Flat => match v {
            Verdict::Pass => println!("result = pass"),
            Verdict::PassVacuous => {
                println!("result = pass");
                println!("vacuous = yes");
            }
            Verdict::Fail(w) => {
                println!("result = witness");
                println!("identity = {}", w.identity);
                println!(
                    "witness_tuple = {}",
                    w.tuple
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                println!(
                    "witness_defect = {}",
                    naryalg::rational::format_vector(&w.defect)
                );
            }
        },
    }
}

fn run_check(identity: &str, sigma: Option<&str>, file: &str, format: Format) -> ExitCode {
    let prod = match load(file) {
        Ok(p) => p,
        Err(e) => return fail_usage(&e),
    };
    let verdict = match identity {
        "filippov" => check_filippov(&prod),
        "sh-jacobi" => check_sh_jacobi(&prod),
        "n-leibniz" => Ok(check_n_leibniz(&prod)),
        "commutative" => Ok(check_commutative(&prod)),
        "partial-assoc" => Ok(check_partial_assoc(&prod)),
        "total-assoc" => Ok(check_total_assoc(&prod)),
        "3lie-admissible" => check_3lie_admissible(&prod),
        "sigma-partial" | "sigma-total" => {
            let Some(spec) = sigma else {
                return fail_usage("--sigma is required for the twisted identities");
            };
            match parse_sigma(spec, prod.arity()) {
                Err(e) => return fail_usage(&e),
                Ok(s) => {
                    if identity == "sigma-partial" {
                        check_sigma_partial_assoc(&prod, &s)
                    } else {
                        check_sigma_total_assoc(&prod, &s)
                    }
                }
            }
        }
        other => return fail_usage(&format!("unknown identity `{other}`")),
    };
    match verdict {
        Err(e) => fail_usage(&e.to_string()),
        Ok(v) => {
            print_verdict(&v, format);
            if v.is_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run_catalog(cmd: &Command) -> ExitCode {
    let Command::Catalog {
        name,
        arity,
        dim,
        kind,
        a,
        b,
        vars,
        r,
        rows,
        cols,
    } = cmd
    else {
        unreachable!()
    };
    let need =
        |opt: &Option<usize>, what: &str| opt.ok_or(format!("`{name}` needs --{what}"));
    let rational = |opt: &Option<String>, what: &str| -> Result<naryalg::Rational, String> {
        let s = opt.as_ref().ok_or(format!("`{name}` needs --{what}"))?;
        parse_rational(s).ok_or(format!("bad rational `{s}`"))
    };
    let built: Result<NAryProduct, String> = (|| match name.as_str() {
        "simple" => {
            let n = need(arity, "arity")?;
            if n < 2 {
                return Err("arity must be at least 2".into());
            }
            Ok(catalog::simple_algebra(n))
        }
        "dimn" => {
            let n = need(arity, "arity")?;
            let kind = match kind.as_deref() {
                Some("abelian") => DimNKind::Abelian,
                Some("e1") => DimNKind::E1,
                _ => return Err("`dimn` needs --kind abelian|e1".into()),
            };
            Ok(catalog::dim_n_algebra(n, kind))
        }
        "abelian" => {
            let n = need(arity, "arity")?;
            let p = need(dim, "dim")?;
            Ok(catalog::abelian(n, p))
        }
        "filiform" => {
            let n = need(arity, "arity")?;
            let p = need(dim, "dim")?;
            if p < n + 1 {
                return Err("filiform model needs dim >= arity + 1".into());
            }
            Ok(catalog::filiform_model(n, p))
        }
        "filiform5" => {
            let a = rational(a, "a")?;
            let b = rational(b, "b")?;
            Ok(catalog::filiform5(&a, &b))
        }
        "counterexample" => {
            let n = need(arity, "arity")?;
            catalog::counterexample_algebra(n).map_err(|e| e.to_string())
        }
        "jr" => {
            let v = need(vars, "vars")?;
            let r = r.ok_or("`jr` needs --r")?;
            catalog::truncated_jacobian_algebra(v, r).map_err(|e| e.to_string())
        }
        "matrix3" => {
            let rows = need(rows, "rows")?;
            let cols = need(cols, "cols")?;
            Ok(catalog::ternary_matrix_product(rows, cols))
        }
        "matrix3-plain" => {
            let d = need(dim, "dim")?;
            Ok(catalog::ternary_matrix_product_plain(d))
        }
        "cyclic-tensor" => {
            let d = need(dim, "dim")?;
            Ok(catalog::cyclic_tensor_product(d))
        }
        other => Err(format!("unknown catalog entry `{other}`")),
    })();
    match built {
        Err(e) => fail_usage(&e),
        Ok(prod) => {
            print!("{}", fileformat::serialize(&prod));
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check {
            identity,
            sigma,
            opts,
            file,
        } => run_check(identity, sigma.as_deref(), file, opts.format),
        Command::Analyze { opts, file } => match load(file) {
            Err(e) => fail_usage(&e),
            Ok(prod) => {
                if !prod.is_skew() {
                    return fail_usage("analyze expects a skew algebra");
                }
                let report = analyze(&prod, opts.seed());
                match opts.format {
                    Format::Human => print!("{}", report.to_human()),
                    Format::Flat => print!("{}", report.to_flat()),
                }
                ExitCode::SUCCESS
            }
        },
        cmd @ Command::Catalog { .. } => run_catalog(cmd),
        Command::Mc { opts, file } => match load(file) {
            Err(e) => fail_usage(&e),
            Ok(prod) => match maurer_cartan_check(&prod) {
                Err(e) => fail_usage(&e.to_string()),
                Ok(McOutcome::Pass) => {
                    match opts.format {
                        Format::Human => println!("maurer-cartan: PASS (d(d w_l) = 0 for all l)"),
                        Format::Flat => println!("result = pass"),
                    }
                    ExitCode::SUCCESS
                }
                Ok(McOutcome::Fail { index, defect }) => {
                    match opts.format {
                        Format::Human => {
                            println!("maurer-cartan: FAIL at l = {index}: d(d w_{index}) = {defect}")
                        }
                        Format::Flat => {
                            println!("result = witness");
                            println!("index = {index}");
                            println!("defect = {defect}");
                        }
                    }
                    ExitCode::from(1)
                }
            },
        },
        Command::Groupalg { what } => match what {
            GroupalgCommand::Wv { arity } => match verify_wv_identity(*arity) {
                Err(e) => fail_usage(&e.to_string()),
                Ok(scalar) => {
                    println!("alpha = {scalar}");
                    ExitCode::SUCCESS
                }
            },
            GroupalgCommand::Colored { alpha, beta, gamma } => {
                let parse = |s: &str| parse_rational(s).ok_or(format!("bad rational `{s}`"));
                match (parse(alpha), parse(beta), parse(gamma)) {
                    (Ok(a), Ok(b), Ok(c)) => match colored_reduction(&a, &b, &c) {
                        Err(e) => fail_usage(&e.to_string()),
                        Ok(scalar) => {
                            println!("scalar = {scalar}");
                            ExitCode::SUCCESS
                        }
                    },
                    (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => fail_usage(&e),
                }
            }
        },
    }
}
