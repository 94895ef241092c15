//! `hopf`: command-line front end for hopf-core.
//!
//! Exit codes: 0 on success, 1 when a check suite fails, 2 on usage or
//! parse errors.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopf_core::algebra::{Bialgebra, HopfAlgebra, LinComb};
use hopf_core::lyndon::{hall_trees, lyndon_generate};
use hopf_core::morphisms::{pi, zhao_eps, zhao_k, zhao_zstar, Composition, Qsym};
use hopf_core::parse::{parse_forest, parse_ordered_forest, parse_planar, parse_tree, parse_word};
use hopf_core::suites::{run_suite, Suite};
use hopf_core::tree_hopf::{CkHopf, FoissyHopf, GlHopf, PlanarDiamond};
use hopf_core::words::WordHopf;
use hopf_core::{frame, Error, Orientation};

#[derive(Parser)]
#[command(
    name = "hopf",
    version,
    about = "Exact computations in Hopf algebras of rooted trees and words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coproduct of a basis element.
    Coproduct(Unary),
    /// Antipode of a basis element.
    Antipode(Unary),
    /// Product of two basis elements.
    Product(Binary),
    /// π(u): sum over linear extensions of a labeled forest.
    Pi {
        #[arg(long)]
        input: String,
    },
    /// Lyndon words by weight.
    Lyndon {
        #[arg(long)]
        max_weight: u32,
    },
    /// Hall trees with standard decompositions and Hall polynomials.
    Hall {
        #[arg(long)]
        max_weight: u32,
        #[arg(long, value_enum, default_value_t = OrientationArg::Frame)]
        orientation: OrientationArg,
    },
    /// k_n and ε_n up to n, or Z*(u) for a forest.
    Zhao {
        #[arg(long, required_unless_present = "input")]
        max_weight: Option<u32>,
        #[arg(long, conflicts_with = "max_weight")]
        input: Option<String>,
    },
    /// Terms of the frame series up to a weight.
    Frame {
        #[arg(long)]
        max_weight: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Ck,
    Gl,
    Foissy,
    Planar,
    Shuffle,
    Qshuffle,
    Qsym,
}

#[derive(Clone, Copy, ValueEnum)]
enum CkMode {
    Cuts,
    Poset,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Frame,
    Classical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    HopfAxioms,
    Duality,
    PiKernel,
    Diagrams,
    /// The Hall exponential identity for the frame.
    #[value(name = "prop53")]
    HallIdentity,
    All,
}

#[derive(Args)]
struct Unary {
    #[arg(long, value_enum)]
    algebra: AlgebraArg,
    #[arg(long)]
    input: String,
    /// Coproduct formula for ck.
    #[arg(long, value_enum, default_value_t = CkMode::Cuts)]
    mode: CkMode,
}

#[derive(Args)]
struct Binary {
    #[arg(long, value_enum)]
    algebra: AlgebraArg,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

enum Failure {
    Usage(String),
    Parse { input: String, err: Error },
    Suite(String),
}

type Outcome = std::result::Result<String, Failure>;

fn parsed<T>(input: &str, r: hopf_core::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|err| match err {
        Error::Parse { .. } => Failure::Parse {
            input: input.to_string(),
            err,
        },
        other => Failure::Usage(other.to_string()),
    })
}

fn parse_composition(text: &str) -> hopf_core::Result<Composition> {
    let body = text
        .strip_prefix("M(")
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(text);
    if body.is_empty() {
        return Ok(Composition::default());
    }
    let mut parts = Vec::new();
    let mut offset = if body.len() == text.len() { 0 } else { 2 };
    for p in body.split(',') {
        match p.parse::<u32>() {
            Ok(k) if k > 0 => parts.push(k),
            _ => {
                return Err(Error::Parse {
                    offset,
                    message: format!("invalid part {p:?}"),
                })
            }
        }
        offset += p.len() + 1;
    }
    Ok(Composition(parts))
}

fn line<T: Display>(x: T) -> String {
    format!("{x}\n")
}

fn coproduct_of<H: Bialgebra>(h: &H, b: H::Basis) -> String
where
    H::Basis: Display,
{
    line(h.coproduct_basis(&b))
}

fn antipode_of<H: HopfAlgebra>(h: &H, b: H::Basis) -> String
where
    H::Basis: Display,
{
    line(h.antipode_basis(&b))
}

fn product_of<H: Bialgebra>(h: &H, a: H::Basis, b: H::Basis) -> String
where
    H::Basis: Display,
{
    line(h.mul_basis(&a, &b))
}

fn coproduct(u: &Unary) -> Outcome {
    let i = u.input.as_str();
    Ok(match u.algebra {
        AlgebraArg::Ck => {
            let h = match u.mode {
                CkMode::Cuts => CkHopf::cuts(),
                CkMode::Poset => CkHopf::poset(),
            };
            coproduct_of(&h, parsed(i, parse_forest(i))?)
        }
        AlgebraArg::Gl => coproduct_of(&GlHopf, parsed(i, parse_tree(i))?),
        AlgebraArg::Foissy => coproduct_of(&FoissyHopf, parsed(i, parse_ordered_forest(i))?),
        AlgebraArg::Planar => coproduct_of(&PlanarDiamond, parsed(i, parse_planar(i))?),
        AlgebraArg::Shuffle => coproduct_of(&WordHopf::shuffle(), parsed(i, parse_word(i))?),
        AlgebraArg::Qshuffle => coproduct_of(&WordHopf::quasi_shuffle(), parsed(i, parse_word(i))?),
        AlgebraArg::Qsym => coproduct_of(&Qsym, parsed(i, parse_composition(i))?),
    })
}

fn antipode(u: &Unary) -> Outcome {
    let i = u.input.as_str();
    Ok(match u.algebra {
        AlgebraArg::Ck => antipode_of(&CkHopf::cuts(), parsed(i, parse_forest(i))?),
        AlgebraArg::Foissy => antipode_of(&FoissyHopf, parsed(i, parse_ordered_forest(i))?),
        AlgebraArg::Shuffle => antipode_of(&WordHopf::shuffle(), parsed(i, parse_word(i))?),
        AlgebraArg::Qshuffle => antipode_of(&WordHopf::quasi_shuffle(), parsed(i, parse_word(i))?),
        AlgebraArg::Gl | AlgebraArg::Planar | AlgebraArg::Qsym => {
            return Err(Failure::Usage(
                "antipode is available for ck, foissy, shuffle and qshuffle".into(),
            ))
        }
    })
}

fn product(b: &Binary) -> Outcome {
    let (l, r) = (b.left.as_str(), b.right.as_str());
    Ok(match b.algebra {
        AlgebraArg::Ck => product_of(
            &CkHopf::cuts(),
            parsed(l, parse_forest(l))?,
            parsed(r, parse_forest(r))?,
        ),
        AlgebraArg::Gl => product_of(&GlHopf, parsed(l, parse_tree(l))?, parsed(r, parse_tree(r))?),
        AlgebraArg::Foissy => product_of(
            &FoissyHopf,
            parsed(l, parse_ordered_forest(l))?,
            parsed(r, parse_ordered_forest(r))?,
        ),
        AlgebraArg::Planar => product_of(&PlanarDiamond, parsed(l, parse_planar(l))?, parsed(r, parse_planar(r))?),
        AlgebraArg::Shuffle => product_of(
            &WordHopf::shuffle(),
            parsed(l, parse_word(l))?,
            parsed(r, parse_word(r))?,
        ),
        AlgebraArg::Qshuffle => product_of(
            &WordHopf::quasi_shuffle(),
            parsed(l, parse_word(l))?,
            parsed(r, parse_word(r))?,
        ),
        AlgebraArg::Qsym => product_of(
            &Qsym,
            parsed(l, parse_composition(l))?,
            parsed(r, parse_composition(r))?,
        ),
    })
}

fn lyndon(max_weight: u32) -> String {
    let words = lyndon_generate(max_weight);
    let mut out = String::new();
    for n in 1..=max_weight {
        let at: Vec<String> = words
            .iter()
            .filter(|w| w.weight() == n)
            .map(|w| w.to_string())
            .collect();
        out.push_str(&format!("weight {n} ({}): {}\n", at.len(), at.join(", ")));
    }
    out
}

fn hall(max_weight: u32, orientation: Orientation) -> String {
    let trees = hall_trees(max_weight);
    let mut out = String::new();
    for n in 1..=max_weight {
        out.push_str(&format!("weight {n}\n"));
        for t in trees.iter().filter(|t| t.weight() == n) {
            let decomposition = match &t.decomposition {
                None => "-".to_string(),
                Some(d) => format!("({}, {})", d.0, d.1),
            };
            out.push_str(&format!(
                "  {}  tree {}  decomposition {}  E = {}\n",
                t.foliage,
                t,
                decomposition,
                t.polynomial(orientation)
            ));
        }
    }
    out
}

fn zhao(max_weight: Option<u32>, input: Option<&str>) -> Outcome {
    if let Some(i) = input {
        let u = parsed(i, parse_forest(i))?;
        return Ok(line(zhao_zstar(&LinComb::basis(u))));
    }
    let n = max_weight.unwrap_or(0) as usize;
    let mut out = String::new();
    for k in 1..=n {
        out.push_str(&format!("k{k} = {}\n", zhao_k(k)));
    }
    for k in 0..=n {
        out.push_str(&format!("eps{k} = {}\n", zhao_eps(k)));
    }
    Ok(out)
}

fn frame_cmd(max_weight: u32, format: Format) -> String {
    let series = frame::frame_series(max_weight);
    match format {
        Format::Json => line(series.to_json()),
        Format::Text => series.to_text(),
    }
}

fn check(suite: SuiteArg, max_weight: u32) -> Outcome {
    let suite = match suite {
        SuiteArg::HopfAxioms => Suite::HopfAxioms,
        SuiteArg::Duality => Suite::Duality,
        SuiteArg::PiKernel => Suite::PiKernel,
        SuiteArg::Diagrams => Suite::Diagrams,
        SuiteArg::HallIdentity => Suite::HallIdentity,
        SuiteArg::All => Suite::All,
    };
    let report = run_suite(suite, max_weight).map_err(|e| Failure::Usage(e.to_string()))?;
    if report.pass() {
        Ok(report.to_string())
    } else {
        Err(Failure::Suite(report.to_string()))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Coproduct(u) => coproduct(&u),
        Command::Antipode(u) => antipode(&u),
        Command::Product(b) => product(&b),
        Command::Pi { input } => {
            let u = parsed(&input, parse_forest(&input))?;
            Ok(line(parsed(&input, pi(&u))?))
        }
        Command::Lyndon { max_weight } => Ok(lyndon(max_weight)),
        Command::Hall {
            max_weight,
            orientation,
        } => {
            let o = match orientation {
                OrientationArg::Frame => Orientation::Frame,
                OrientationArg::Classical => Orientation::Classical,
            };
            Ok(hall(max_weight, o))
        }
        Command::Zhao { max_weight, input } => zhao(max_weight, input.as_deref()),
        Command::Frame { max_weight, format } => Ok(frame_cmd(max_weight, format)),
        Command::Check { suite, max_weight } => check(suite, max_weight),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Suite(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Parse { input, err }) => {
            eprintln!("error: {err}");
            if let Error::Parse { offset, .. } = err {
                eprintln!("  {input}");
                eprintln!("  {}^", " ".repeat(offset));
            }
            ExitCode::from(2)
        }
    }
}
