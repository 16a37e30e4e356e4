use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use signed_separable::bijection::{phi, psi};
use signed_separable::patterns::{is_separable_perm, separability_witnesses};
use signed_separable::qpoly::{IntPoly, Var};
use signed_separable::septree::{
    build_tree, rank_gf_lower_b, rank_gf_lower_b_via_reduction, rank_gf_lower_s,
    rank_gf_s_recursive, rank_gf_upper_b, rank_gf_upper_b_via_reduction, rank_gf_upper_s,
    tree_to_dot, Side,
};
use signed_separable::stats::{
    descent_polynomial_b, descent_polynomial_s, gamma_counts_b, gamma_counts_s, gamma_expansion,
};
use signed_separable::sums::{canonical_blocks, enumerate_separable_b, enumerate_separable_s};
use signed_separable::verify::run_all;
use signed_separable::weak_order::{
    order_sets, rank_gf_lower_brute, rank_gf_lower_brute_s, rank_gf_upper_brute,
    rank_gf_upper_brute_s, violated_inclusions, OrderSet,
};
use signed_separable::{Error, SignedPerm};

/// Separable signed permutations: patterns, bijections, descents and weak-order intervals.
#[derive(Parser)]
#[command(name = "signed-separable", version)]
struct Cli {
    /// Emit JSON instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Ordinary permutations.
    #[value(name = "S", alias = "s")]
    S,
    /// Signed permutations.
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Lower,
    Upper,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Tree,
    Reduction,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Test separability and list forbidden-pattern occurrences.
    Check {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// List the separable permutations of rank N in lexicographic order.
    Enumerate {
        kind: Kind,
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Map a separable permutation of length n+1 to a separable signed permutation of length n.
    Phi {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Inverse of phi.
    Psi {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Boundaries and blocks of the canonical direct-sum decomposition.
    Blocks {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Descent polynomial of the separable class of rank N.
    Descpoly {
        kind: Kind,
        n: usize,
        #[arg(long)]
        gamma: bool,
    },
    /// Compare the gamma expansion of the descent polynomial with direct counts.
    #[command(alias = "gamma")]
    GammaCheck { kind: Kind, n: usize },
    /// Coxeter length with its Neg, Inv and Nsp sets.
    Length {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Decide U <= W in the left weak order.
    Compare {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Rank generating function of a lower or upper weak-order interval.
    Rankgf {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value = "tree")]
        method: Method,
        /// Group the interval lives in.
        #[arg(long = "group", value_enum, default_value = "B")]
        kind: Kind,
    },
    /// Separating tree as an S-expression, or DOT with --dot.
    Tree {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        dot: bool,
    },
    /// Run every consistency criterion up to rank N.
    Verify { n: usize },
}

enum Failure {
    Input(Error),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Property) => ExitCode::from(2),
    }
}

fn parse(s: &str) -> Result<SignedPerm, Error> {
    s.parse()
}

fn entries(w: &SignedPerm) -> Value {
    json!(w.entries())
}

fn emit(out: &mut impl Write, v: Value) {
    let _ = writeln!(out, "{v}");
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Check { w } => {
            let w = parse(w)?;
            let wit = separability_witnesses(&w);
            if json {
                let wit: Vec<Value> = wit
                    .iter()
                    .map(|(p, idx)| json!({ "pattern": entries(p), "positions": idx }))
                    .collect();
                emit(
                    out,
                    json!({ "perm": entries(&w), "separable": wit.is_empty(), "witnesses": wit }),
                );
            } else if wit.is_empty() {
                let _ = writeln!(out, "separable");
            } else {
                let _ = writeln!(out, "not separable");
                for (p, idx) in wit {
                    let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                    let _ = writeln!(out, "pattern {p} at positions {}", idx.join(" "));
                }
            }
        }
        Command::Enumerate {
            kind,
            n,
            count_only,
        } => {
            let all = match kind {
                Kind::S => enumerate_separable_s(*n),
                Kind::B => enumerate_separable_b(*n),
            };
            if json {
                let mut v = json!({ "n": n, "count": all.len() });
                if !count_only {
                    v["perms"] = all.iter().map(entries).collect();
                }
                emit(out, v);
            } else if *count_only {
                let _ = writeln!(out, "{}", all.len());
            } else {
                for w in &all {
                    let _ = writeln!(out, "{w}");
                }
            }
        }
        Command::Phi { w } | Command::Psi { w } => {
            let w = parse(w)?;
            let v = match cli.command {
                Command::Phi { .. } => phi(&w)?,
                _ => psi(&w)?,
            };
            if json {
                emit(out, json!({ "input": entries(&w), "output": entries(&v) }));
            } else {
                let _ = writeln!(out, "{v}");
            }
        }
        Command::Blocks { w } => {
            let d = canonical_blocks(&parse(w)?)?;
            if json {
                let blocks: Vec<Value> = d.blocks.iter().map(entries).collect();
                emit(out, json!({ "boundaries": d.boundaries, "blocks": blocks }));
            } else {
                let b: Vec<String> = d.boundaries.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(out, "boundaries: {}", b.join(" "));
                let blocks: Vec<String> = d.blocks.iter().map(|b| format!("({b})")).collect();
                let _ = writeln!(out, "blocks: {}", blocks.join(" "));
            }
        }
        Command::Descpoly { kind, n, gamma } => {
            let (p, center) = descent_data(*kind, *n);
            let g = if *gamma {
                Some(gamma_expansion(&p, center)?)
            } else {
                None
            };
            if json {
                let mut v = json!({ "poly": p.to_json(Var::T) });
                if let Some(g) = &g {
                    v["gamma"] = g.iter().map(|x| x.to_string()).collect();
                }
                emit(out, v);
            } else {
                let _ = writeln!(out, "{}", p.display(Var::T));
                if let Some(g) = g {
                    let _ = writeln!(out, "gamma: {}", join(&g));
                }
            }
        }
        Command::GammaCheck { kind, n } => {
            let (p, center) = descent_data(*kind, *n);
            let expansion = gamma_expansion(&p, center)?;
            let direct = match kind {
                Kind::S => gamma_counts_s(*n),
                Kind::B => gamma_counts_b(*n),
            };
            let ok = expansion == direct;
            if json {
                let s =
                    |v: &[num_bigint::BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
                emit(
                    out,
                    json!({ "expansion": s(&expansion), "direct": s(&direct), "match": ok }),
                );
            } else {
                let _ = writeln!(out, "expansion: {}", join(&expansion));
                let _ = writeln!(out, "direct: {}", join(&direct));
                let _ = writeln!(out, "{}", if ok { "match" } else { "mismatch" });
            }
            if !ok {
                return Err(Failure::Property);
            }
        }
        Command::Length { w } => {
            let w = parse(w)?;
            let s = order_sets(&w);
            if json {
                emit(
                    out,
                    json!({ "length": s.length(), "neg": s.neg, "inv": s.inv, "nsp": s.nsp }),
                );
            } else {
                let pairs = |v: &[(usize, usize)]| {
                    v.iter()
                        .map(|(i, j)| format!("({i},{j})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(out, "{}", s.length());
                let _ = writeln!(out, "Neg: {}", join(&s.neg));
                let _ = writeln!(out, "Inv: {}", pairs(&s.inv));
                let _ = writeln!(out, "Nsp: {}", pairs(&s.nsp));
            }
        }
        Command::Compare { u, w } => {
            let (u, w) = (parse(u)?, parse(w)?);
            let violated = violated_inclusions(&u, &w)?;
            let names: Vec<&str> = violated.iter().map(|s: &OrderSet| s.name()).collect();
            if json {
                emit(
                    out,
                    json!({ "leq": violated.is_empty(), "violated": names }),
                );
            } else if violated.is_empty() {
                let _ = writeln!(out, "true");
            } else {
                let _ = writeln!(out, "false (not contained: {})", names.join(", "));
            }
        }
        Command::Rankgf {
            w,
            side,
            method,
            kind,
        } => {
            let w = parse(w)?;
            let p = rank_gf(&w, *side, *method, *kind)?;
            if json {
                emit(out, p.to_json(Var::Q));
            } else {
                let _ = writeln!(out, "{}", p.display(Var::Q));
            }
        }
        Command::Tree { w, dot } => {
            let t = build_tree(&parse(w)?)?;
            if *dot {
                let _ = write!(out, "{}", tree_to_dot(&t));
            } else if json {
                emit(out, t.to_json());
            } else {
                let _ = writeln!(out, "{t}");
            }
        }
        Command::Verify { n } => {
            let reports = run_all(*n);
            if json {
                let v: Vec<Value> = reports
                    .iter()
                    .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
                    .collect();
                emit(out, Value::Array(v));
            } else {
                for r in &reports {
                    let _ = writeln!(out, "{r}");
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Property);
            }
        }
    }
    Ok(())
}

fn descent_data(kind: Kind, n: usize) -> (IntPoly, usize) {
    match kind {
        Kind::S => (descent_polynomial_s(n), n.saturating_sub(1)),
        Kind::B => (descent_polynomial_b(n), n),
    }
}

fn rank_gf(w: &SignedPerm, side: SideArg, method: Method, kind: Kind) -> Result<IntPoly, Error> {
    if kind == Kind::S && !is_separable_perm(w)? {
        return Err(Error::NotSeparable {
            perm: w.to_string(),
        });
    }
    match (kind, side, method) {
        (Kind::B, SideArg::Lower, Method::Tree) => rank_gf_lower_b(w),
        (Kind::B, SideArg::Upper, Method::Tree) => rank_gf_upper_b(w),
        (Kind::B, SideArg::Lower, Method::Reduction) => rank_gf_lower_b_via_reduction(w),
        (Kind::B, SideArg::Upper, Method::Reduction) => rank_gf_upper_b_via_reduction(w),
        (Kind::B, SideArg::Lower, Method::Brute) => rank_gf_lower_brute(w),
        (Kind::B, SideArg::Upper, Method::Brute) => rank_gf_upper_brute(w),
        (Kind::S, SideArg::Lower, Method::Tree) => rank_gf_lower_s(w),
        (Kind::S, SideArg::Upper, Method::Tree) => rank_gf_upper_s(w),
        (Kind::S, SideArg::Lower, Method::Reduction) => rank_gf_s_recursive(w, Side::Lower),
        (Kind::S, SideArg::Upper, Method::Reduction) => rank_gf_s_recursive(w, Side::Upper),
        (Kind::S, SideArg::Lower, Method::Brute) => rank_gf_lower_brute_s(w),
        (Kind::S, SideArg::Upper, Method::Brute) => rank_gf_upper_brute_s(w),
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
