//! Thin text front end over the `pfsym` library: every subcommand parses
//! its arguments, calls one library entry point, and renders the result.
//! No algebra happens here.
//!
//! Exit codes: 0 on success (and all-pass verification), 1 when a
//! verification report fails, 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use pfsym::algebra::{self, Basis, Element};
use pfsym::bases::{element_to_basis, slash_factorization, split_factorization, PosetStore};
use pfsym::families::{enumerate_family, Family};
use pfsym::order::Poset;
use pfsym::verify::{all_pass, render_reports, run_instance, structured_reports, Axiom, Instance};
use pfsym::{Error, Exec, ParkingFunction};

/// Exact arithmetic in the Hopf algebra of parking functions.
#[derive(Parser)]
#[command(name = "pfsym", version, about)]
struct Cli {
    /// Largest degree the order cache may build (cap for conversions,
    /// Möbius values, enumeration, and poset output).
    #[arg(long, global = true, default_value_t = 6, value_parser = parse_cap)]
    max_degree: usize,

    /// Output format; `dot` applies to the poset subcommand only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable rendering.
    Text,
    /// JSON records.
    Structured,
    /// Graphviz digraph (poset only).
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two basis labels.
    Product {
        /// Basis of both operands: M, Q, or R.
        #[arg(short, long, default_value = "M", value_parser = parse_basis)]
        basis: Basis,
        /// First label, e.g. `2,1,1` (or `-` for the empty word).
        a: String,
        /// Second label.
        b: String,
    },
    /// Split a basis label into its tensor of subword pairs.
    Coproduct {
        /// Basis of the operand: M or Q.
        #[arg(short, long, default_value = "M", value_parser = parse_basis)]
        basis: Basis,
        /// The label, e.g. `4,4,5,1,3,2`.
        a: String,
    },
    /// Rewrite an element in another basis.
    Convert {
        /// Basis the input is written in.
        #[arg(short, long, value_parser = parse_basis)]
        from: Basis,
        /// Basis to rewrite into.
        #[arg(short, long, value_parser = parse_basis)]
        to: Basis,
        /// The element, e.g. `2,1` or `M[2,1] - 3·M[1,1,2]`.
        element: String,
    },
    /// Factor a parking function into irreducibles.
    Factor(FactorArgs),
    /// List a family of parking functions at one degree.
    Enumerate {
        /// Family tag: P, UP, AP, N, D, S, C, AC, AN, UN, AD, UD, AS, US, Pi.
        #[arg(value_parser = parse_family)]
        family: Family,
        /// Degree (word length).
        degree: usize,
    },
    /// Print the partial order on degree-n parking functions.
    Poset {
        /// Degree (word length).
        degree: usize,
    },
    /// Check Hopf-algebra axioms exhaustively up to a degree bound.
    Verify {
        /// Which algebra to check.
        #[arg(long, default_value = "pfsym-m", value_parser = parse_instance)]
        instance: Instance,
        /// Comma-separated axiom list (assoc, coassoc, unit, counit,
        /// compat, cocommut, antipode, grading), or `all`.
        #[arg(long, default_value = "all")]
        axioms: String,
        /// Largest total degree to sweep.
        #[arg(long, default_value_t = 4)]
        bound: usize,
        /// Flip one structure constant first, to demonstrate a failure.
        #[arg(long)]
        corrupt: bool,
    },
    /// Apply the antipode to an element of the M basis.
    Antipode {
        /// Basis of the element (must be M).
        #[arg(short, long, default_value = "M", value_parser = parse_basis)]
        basis: Basis,
        /// The element, e.g. `2,1`.
        element: String,
    },
    /// Möbius function of the partial order between two comparable
    /// parking functions of the same degree.
    Moebius {
        /// Lower element.
        a: String,
        /// Upper element.
        b: String,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["split", "slash"])))]
struct FactorArgs {
    /// Factor over the part-interleaving product `∘`.
    #[arg(long)]
    split: bool,
    /// Factor over the shifted-concatenation product `|`.
    #[arg(long)]
    slash: bool,
    /// The parking function to factor.
    word: String,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if cap == 0 {
        return Err("the degree cap must be at least 1".into());
    }
    Ok(cap)
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_instance(s: &str) -> Result<Instance, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Poset { .. }) {
        eprintln!("error: dot output is only available for the poset subcommand");
        return Ok(ExitCode::from(2));
    }
    let exec = Exec::default();
    match cli.command {
        Command::Product { basis, a, b } => {
            let x = Element::from_label(basis, a.parse()?);
            let y = Element::from_label(basis, b.parse()?);
            emit_element(&algebra::product(&x, &y)?, cli.format);
        }
        Command::Coproduct { basis, a } => {
            let x = Element::from_label(basis, a.parse()?);
            let split = algebra::coproduct(&x)?;
            match cli.format {
                Format::Structured => println!("{}", split.structured()),
                _ => println!("{split}"),
            }
        }
        Command::Convert { from, to, element } => {
            let x = Element::parse(&element, from)?;
            let store = PosetStore::with_cap(cli.max_degree, exec);
            emit_element(&element_to_basis(&x, to, &store)?, cli.format);
        }
        Command::Factor(args) => {
            let a: ParkingFunction = args.word.parse()?;
            let factorization = if args.split {
                split_factorization(&a)?
            } else {
                slash_factorization(&a)?
            };
            match cli.format {
                Format::Structured => {
                    let kind = if args.split { "split" } else { "slash" };
                    let factors: Vec<String> =
                        factorization.factors().iter().map(letters_json).collect();
                    println!(
                        "{{\"kind\":\"{kind}\",\"factors\":[{}]}}",
                        factors.join(",")
                    );
                }
                _ => println!("{factorization}"),
            }
        }
        Command::Enumerate { family, degree } => {
            let members = enumerate_family(family, degree, cli.max_degree)?;
            match cli.format {
                Format::Structured => {
                    let elements: Vec<String> = members.iter().map(|a| letters_json(a)).collect();
                    println!(
                        "{{\"family\":\"{}\",\"degree\":{degree},\"count\":{},\"elements\":[{}]}}",
                        family.tag(),
                        members.len(),
                        elements.join(",")
                    );
                }
                _ => {
                    for a in &members {
                        println!("{a}");
                    }
                    println!("count: {}", members.len());
                }
            }
        }
        Command::Poset { degree } => {
            let poset = Poset::build_with(degree, cli.max_degree, exec)?;
            match cli.format {
                Format::Structured => {
                    let elements: Vec<String> =
                        poset.elements().iter().map(|a| letters_json(a)).collect();
                    let covers: Vec<String> = poset
                        .cover_pairs()
                        .into_iter()
                        .map(|(lo, hi)| format!("[{lo},{hi}]"))
                        .collect();
                    println!(
                        "{{\"degree\":{degree},\"elements\":[{}],\"covers\":[{}]}}",
                        elements.join(","),
                        covers.join(",")
                    );
                }
                _ => print!("{}", poset.to_dot()),
            }
        }
        Command::Verify {
            instance,
            axioms,
            bound,
            corrupt,
        } => {
            let axioms = parse_axioms(&axioms)?;
            let reports = run_instance(instance, &axioms, bound, corrupt, exec)?;
            match cli.format {
                Format::Structured => print!("{}", structured_reports(&reports)),
                _ => print!("{}", render_reports(&reports)),
            }
            if !all_pass(&reports) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Antipode { basis, element } => {
            let x = Element::parse(&element, basis)?;
            emit_element(&algebra::antipode(&x)?, cli.format);
        }
        Command::Moebius { a, b } => {
            let a: ParkingFunction = a.parse()?;
            let b: ParkingFunction = b.parse()?;
            let store = PosetStore::with_cap(cli.max_degree, exec);
            let value = store.poset(a.len())?.moebius(&a, &b)?;
            match cli.format {
                Format::Structured => println!(
                    "{{\"a\":{},\"b\":{},\"moebius\":{value}}}",
                    letters_json(&a),
                    letters_json(&b)
                ),
                _ => println!("{value}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_element(x: &Element, format: Format) {
    match format {
        Format::Structured => println!("{}", x.structured()),
        _ => println!("{x}"),
    }
}

fn parse_axioms(text: &str) -> Result<Vec<Axiom>, Error> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(Axiom::ALL.to_vec());
    }
    text.split(',').map(|part| part.parse()).collect()
}

/// `[2,1,1]` — a label's letters as a JSON array.
fn letters_json(a: &ParkingFunction) -> String {
    let inner: Vec<String> = a.letters().iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}
