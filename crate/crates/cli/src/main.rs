//! Command-line front end: compute in the symmetric-function ring, check
//! the Hopf-algebra axioms, act with and verify the Heisenberg double,
//! verify the categorified structure at a truncation bound, and run the
//! wreath decomposition checks.
//!
//! Exit codes: 0 on success, 1 when a requested verification fails (the
//! witness is printed), 2 on usage or input errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pshcat_core::heisenberg::{
    commutator_table, fock_apply, verify_injectivity, verify_phi_algebra, HeisElement,
};
use pshcat_core::hopfcat::{verify_all, verify_deltam, verify_hopf_square, verify_mackey_isos, SshModel};
use pshcat_core::partitions::Partition;
use pshcat_core::psh::{check_psh_axioms, PshAlgebra};
use pshcat_core::report::Report;
use pshcat_core::symfunc::{
    basis_element, coproduct, inner, multiply, BasisKind, SymTensor,
};
use pshcat_core::twovect::{
    check_bc, left_mate, right_mate, sampling, triangle_identities_hold, MateSide,
};
use pshcat_core::wreath::{bundled_names, bundled_table, load_character_table, verify_decomposition};
use pshcat_core::{mutants, CoreError};

#[derive(Parser)]
#[command(
    name = "pshcat",
    version,
    about = "Exact verification of self-adjoint Hopf structures, their Heisenberg doubles, and the categorified model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized property checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Verbosity; repeat for more detail
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute in the ring of symmetric functions (Schur basis)
    Symfunc {
        #[command(subcommand)]
        op: SymfuncOp,
    },
    /// Axiom checks for based graded rings
    Psh {
        #[command(subcommand)]
        op: PshOp,
    },
    /// The Heisenberg double and its Fock-space action
    Heis {
        #[command(subcommand)]
        op: HeisOp,
    },
    /// The categorified structure at a truncation bound
    Ssh {
        #[command(subcommand)]
        op: SshOp,
    },
    /// Wreath-product instances over finite-group character tables
    Wreath {
        #[command(subcommand)]
        op: WreathOp,
    },
    /// Run the full property suite and exit nonzero on any failure
    Selftest {
        /// Truncation bound
        #[arg(short = 'D', long = "max-degree", default_value_t = 5)]
        max_degree: u32,
    },
}

#[derive(Subcommand)]
enum SymfuncOp {
    /// Multiply two elements
    Mult {
        /// First factor: a partition like "3,1" or a JSON tensor
        #[arg(long)]
        a: String,
        /// Second factor
        #[arg(long)]
        b: String,
    },
    /// Coproduct of an element
    Coprod {
        #[arg(long)]
        f: String,
    },
    /// Hall inner product of two elements of equal arity
    Inner {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// A distinguished basis element
    Basis {
        #[arg(long, value_enum)]
        kind: BasisKindArg,
        #[arg(short, long)]
        n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisKindArg {
    Elementary,
    Homogeneous,
    Powersum,
}

#[derive(Subcommand)]
enum PshOp {
    /// Check positivity, self-adjointness, Hopf compatibility and
    /// connectedness on a tensor power of the symmetric-function ring
    Check {
        #[arg(short = 'D', long = "max-degree", default_value_t = 6)]
        max_degree: u32,
        /// Number of tensor factors
        #[arg(long, default_value_t = 1)]
        tensor_power: usize,
        /// Inject a seeded fault (for exercising the exit-code contract)
        #[arg(long, value_parser = ["negate-constant"])]
        inject: Option<String>,
    },
}

#[derive(Subcommand)]
enum HeisOp {
    /// Apply an element of the double to a Fock-space element
    Act {
        /// The operator: an arity-2 JSON tensor
        #[arg(long)]
        op: String,
        /// The element acted on: a partition or arity-1 JSON tensor
        #[arg(long)]
        on: String,
        #[arg(short = 'D', long = "max-degree", default_value_t = 8)]
        max_degree: u32,
    },
    /// Verify the action is an injective algebra map and the
    /// straightening relation holds
    Verify {
        /// Run every check (currently implied)
        #[arg(long)]
        all: bool,
        #[arg(short = 'D', long = "max-degree", default_value_t = 6)]
        max_degree: u32,
    },
    /// Commutator table of a generator presentation
    Commutators {
        #[arg(long)]
        presentation: u8,
        /// Largest generator index
        #[arg(long, default_value_t = 5)]
        max: u32,
    },
}

#[derive(Subcommand)]
enum SshOp {
    /// Beck-Chevalley for the Hopf square plus both coherence cubes
    VerifyHopf {
        #[arg(short = 'D', long = "max-degree", default_value_t = 5)]
        max_degree: u32,
    },
    /// The straightening square for one Schur generator
    VerifyDeltam {
        /// The generator, as a partition ("" or "0" for the unit)
        #[arg(long = "F")]
        f: String,
        #[arg(short = 'D', long = "max-degree", default_value_t = 6)]
        max_degree: u32,
    },
    /// Everything: Hopf square, cubes, composition isomorphisms, and the
    /// straightening squares for small generators
    VerifyAll {
        #[arg(short = 'D', long = "max-degree", default_value_t = 5)]
        max_degree: u32,
    },
}

#[derive(Subcommand)]
enum WreathOp {
    /// Validate a character table and verify the decomposition shadow
    Verify {
        /// Path to a table document, or a bundled name (trivial, z2, z3, s3)
        #[arg(long)]
        table: String,
        #[arg(short = 'D', long = "max-degree", default_value_t = 4)]
        max_degree: u32,
    },
}

enum CmdOutcome {
    /// Computation result, always exit 0 when produced
    Value { text: String, json: serde_json::Value },
    /// Verification result; exit 1 when failed
    Verdict(Report),
}

enum CmdFailure {
    Input(String),
}

impl From<CoreError> for CmdFailure {
    fn from(e: CoreError) -> Self {
        CmdFailure::Input(e.to_string())
    }
}

fn parse_element(s: &str) -> Result<SymTensor, CmdFailure> {
    let trimmed = s.trim();
    if trimmed.starts_with('{') {
        let t: SymTensor = serde_json::from_str(trimmed)
            .map_err(|e| CmdFailure::Input(format!("cannot parse tensor JSON: {e}")))?;
        Ok(t)
    } else {
        let p = Partition::parse_text(trimmed)?;
        Ok(SymTensor::schur(p))
    }
}

fn element_output(t: &SymTensor) -> CmdOutcome {
    CmdOutcome::Value {
        text: t.render(),
        json: serde_json::to_value(t).expect("tensor serializes"),
    }
}

fn run(cli: &Cli) -> Result<CmdOutcome, CmdFailure> {
    match &cli.command {
        Command::Symfunc { op } => match op {
            SymfuncOp::Mult { a, b } => {
                let x = parse_element(a)?;
                let y = parse_element(b)?;
                Ok(element_output(&multiply(&x, &y)?))
            }
            SymfuncOp::Coprod { f } => {
                let x = parse_element(f)?;
                Ok(element_output(&coproduct(&x)?))
            }
            SymfuncOp::Inner { a, b } => {
                let x = parse_element(a)?;
                let y = parse_element(b)?;
                let v = inner(&x, &y)?;
                Ok(CmdOutcome::Value { text: v.to_string(), json: json!({ "inner": v.to_string() }) })
            }
            SymfuncOp::Basis { kind, n } => {
                let kind = match kind {
                    BasisKindArg::Elementary => BasisKind::Elementary,
                    BasisKindArg::Homogeneous => BasisKind::Homogeneous,
                    BasisKindArg::Powersum => BasisKind::PowerSum,
                };
                Ok(element_output(&basis_element(kind, *n)?))
            }
        },
        Command::Psh { op } => match op {
            PshOp::Check { max_degree, tensor_power, inject } => {
                if *tensor_power == 0 {
                    return Err(CmdFailure::Input("tensor power must be positive".into()));
                }
                let alg = if inject.as_deref() == Some("negate-constant") {
                    mutants::lambda_with_negated_constant(*max_degree)
                } else {
                    PshAlgebra::lambda_power(*tensor_power, *max_degree)
                };
                Ok(CmdOutcome::Verdict(check_psh_axioms(&alg, *max_degree)))
            }
        },
        Command::Heis { op } => match op {
            HeisOp::Act { op, on, max_degree } => {
                let u = HeisElement::from_tensor(
                    serde_json::from_str(op)
                        .map_err(|e| CmdFailure::Input(format!("cannot parse operator JSON: {e}")))?,
                )?;
                let z = parse_element(on)?;
                Ok(element_output(&fock_apply(&u, &z, *max_degree)?))
            }
            HeisOp::Verify { all: _, max_degree } => {
                let mut report = verify_phi_algebra(*max_degree, 3.min(*max_degree));
                report.merge(verify_injectivity((*max_degree).min(5)));
                Ok(CmdOutcome::Verdict(report))
            }
            HeisOp::Commutators { presentation, max } => {
                let table = commutator_table(*presentation, *max)
                    .map_err(|e| CmdFailure::Input(e.to_string()))?;
                let report = table.to_report();
                if cli.format == Format::Json {
                    Ok(CmdOutcome::Value {
                        text: report.render_text(),
                        json: serde_json::to_value(&table).expect("table serializes"),
                    })
                } else {
                    Ok(CmdOutcome::Verdict(report))
                }
            }
        },
        Command::Ssh { op } => match op {
            SshOp::VerifyHopf { max_degree } => {
                let model = SshModel::new(*max_degree);
                Ok(CmdOutcome::Verdict(verify_hopf_square(&model)?))
            }
            SshOp::VerifyDeltam { f, max_degree } => {
                let f = Partition::parse_text(f)?;
                let model = SshModel::new(*max_degree);
                let (mut report, blocks) = verify_deltam(&model, &f)?;
                if cli.format == Format::Json {
                    let audit = serde_json::to_value(&blocks.blocks).expect("blocks serialize");
                    report.push(
                        "block-audit",
                        true,
                        serde_json::to_string(&audit).expect("audit serializes"),
                    );
                }
                Ok(CmdOutcome::Verdict(report))
            }
            SshOp::VerifyAll { max_degree } => {
                let model = SshModel::new(*max_degree);
                let mut report = verify_all(&model, 2.min(max_degree.saturating_sub(1)))?;
                report.merge(verify_mackey_isos(&model, 2.min(*max_degree))?);
                Ok(CmdOutcome::Verdict(report))
            }
        },
        Command::Wreath { op } => match op {
            WreathOp::Verify { table, max_degree } => {
                let parsed = if bundled_names().contains(&table.as_str()) {
                    bundled_table(table).expect("bundled")
                } else {
                    let doc = std::fs::read_to_string(table)
                        .map_err(|e| CmdFailure::Input(format!("cannot read {table}: {e}")))?;
                    load_character_table(&doc)?
                };
                Ok(CmdOutcome::Verdict(verify_decomposition(&parsed, *max_degree)?))
            }
        },
        Command::Selftest { max_degree } => Ok(CmdOutcome::Verdict(selftest(*max_degree, cli.seed)?)),
    }
}

/// The full property suite at one bound: ring axioms for the flagship
/// instance and its square, the action checks, the generator tables, the
/// categorified structure, the wreath instances, and the seeded mate
/// calculus.
fn selftest(d: u32, seed: u64) -> Result<Report, CmdFailure> {
    let mut report = Report::new(format!("selftest at degree {d}"));

    let alg = PshAlgebra::lambda(d);
    report.merge(check_psh_axioms(&alg, d));
    let sq = PshAlgebra::lambda_power(2, d.saturating_sub(1).max(1));
    report.merge(check_psh_axioms(&sq, d.saturating_sub(1).max(1)));

    report.merge(verify_phi_algebra(d, 2.min(d)));
    report.merge(verify_injectivity(d.min(4)));

    for presentation in [2u8, 3] {
        let table =
            commutator_table(presentation, 3).map_err(|e| CmdFailure::Input(e.to_string()))?;
        report.push(
            format!("presentation {presentation} table"),
            table.all_match(),
            "computed commutators match",
        );
    }

    let model = SshModel::new(d);
    report.merge(verify_hopf_square(&model)?);
    report.merge(verify_mackey_isos(&model, 2.min(d))?);
    for f in [
        Partition::empty(),
        Partition::row(1),
    ] {
        if f.size() + 1 <= d {
            let (r, _) = verify_deltam(&model, &f)?;
            report.merge(r);
        }
    }

    for name in ["trivial", "z2", "s3"] {
        let table = bundled_table(name).expect("bundled");
        let r = verify_decomposition(&table, d.min(3))?;
        report.push(
            format!("wreath {name}"),
            r.passed(),
            r.first_failure()
                .map(|c| format!("{}: {}", c.name, c.details))
                .unwrap_or_else(|| "axioms and primitive ranks".into()),
        );
    }

    // seeded mate calculus
    let mut rng = sampling::rng(seed);
    let mut done = 0;
    let mut mates_ok = true;
    let mut detail = String::from("triangles, round trips, verdict agreement on 20 quintets");
    while done < 20 {
        let Ok(q) = sampling::random_quintet(&mut rng, 3, 3) else { continue };
        done += 1;
        let tri = q
            .f
            .iter()
            .chain(&q.g)
            .chain(&q.h)
            .chain(&q.i)
            .all(|m| triangle_identities_hold(m).unwrap_or(false));
        let rm = right_mate(&q).and_then(|m| left_mate(&m));
        let round = rm.map(|b| b.alpha.same_blocks(&q.alpha)).unwrap_or(false);
        let l = check_bc(&q, MateSide::Left).map(|o| o.ok).unwrap_or(false);
        let r = check_bc(&q, MateSide::Right).map(|o| o.ok).unwrap_or(true);
        if !(tri && round && l == r) {
            mates_ok = false;
            detail = format!("failure on seeded quintet {done}");
            break;
        }
    }
    report.push("mate calculus", mates_ok, detail);

    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(CmdOutcome::Value { text, json }) => {
            match cli.format {
                Format::Text => println!("{text}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("json")),
            }
            ExitCode::SUCCESS
        }
        Ok(CmdOutcome::Verdict(report)) => {
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => {
                    let v = json!({
                        "title": report.title,
                        "passed": report.passed(),
                        "checks": serde_json::to_value(&report.checks).expect("checks"),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CmdFailure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
