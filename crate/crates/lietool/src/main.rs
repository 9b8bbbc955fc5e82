//! Command-line front end for the exact Lie algebra toolkit.
//!
//! Every subcommand loads its inputs from JSON files, runs one analysis,
//! and prints a deterministic report to stdout in text or JSON form.
//! Identical inputs, seed, and flags produce byte-identical output.
//!
//! Exit codes classify the outcome:
//!
//! * `0`: the analysis ran and the verdict is affirmative, or the
//!   command only reports data.
//! * `1`: the analysis ran and the verdict is a definite negative
//!   (not solvable, not semisimple, no absorbing chain).
//! * `2`: a mathematical obstruction or an inconclusive search
//!   (a characteristic polynomial with no rational roots, an exhausted
//!   trial budget, a dimension cap, an incoherent tower).
//! * `3`: unusable input (unreadable or malformed files, failed
//!   validation, elements outside the algebra, usage errors).

mod report;

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lietheory::exactla::{format_rational, rat_int};
use lietheory::io::{self, IoError};
use lietheory::{
    a_omega, cartan_solvable, condition3_witness, decompose_semisimple, fitting_decompose,
    fitting_trace, killing_form, radical, semisimple_check, tower_decompose,
    tower_derivation_inner, tower_verdicts, validate_tower, weight_decomposition, FormsError,
    InnerVerdict, LieAlgebra, LimitVerdict, Rat, Representation, StructureError, Subspace,
    TowerError, WeightError,
};

use report::{digest_file, AnalysisReport, InputDigest};

#[derive(Parser)]
#[command(
    name = "lietool",
    version,
    about = "Exact structure analysis for Lie algebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials before a decomposition search falls back or gives up.
    #[arg(long, global = true, default_value_t = 32)]
    trial_budget: usize,
    /// Largest witness subalgebra the absorbing-chain search will accept.
    #[arg(long, global = true, default_value_t = 64)]
    dim_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Representation,
    Tower,
    Derivation,
}

#[derive(Subcommand)]
enum Command {
    /// Load one input file, validate it, and report its shape.
    Check {
        /// What the file is supposed to contain.
        #[arg(long, value_enum)]
        kind: Kind,
        file: PathBuf,
    },
    /// Print the Killing form's Gram matrix and determinant.
    Killing { file: PathBuf },
    /// Decide solvability by the trace-form criterion.
    Solvable {
        file: PathBuf,
        /// Representation supplying the trace form (default: adjoint).
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Test semisimplicity by nondegeneracy of the Killing form.
    Semisimple { file: PathBuf },
    /// Compute the radical and certify it as a solvable ideal.
    Radical { file: PathBuf },
    /// Split a module into weight spaces of a nilpotent subalgebra.
    Weights {
        file: PathBuf,
        /// Elements spanning the nilpotent subalgebra, separated by ';'.
        #[arg(long)]
        subalgebra: String,
        /// Representation to decompose (default: adjoint).
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Fitting decomposition of one element's action.
    Fitting {
        file: PathBuf,
        /// The acting element, for example "h" or "2e + 1/3*f".
        #[arg(long)]
        element: String,
        /// Representation the element acts in (default: adjoint).
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Split a semisimple algebra into its simple ideals.
    Decompose { file: PathBuf },
    /// Search for an absorbing subalgebra over the given generators.
    Condition3 {
        file: PathBuf,
        /// Generating elements, separated by ';'.
        #[arg(long)]
        generators: String,
    },
    /// Stable lower-central term of an absorbing subalgebra.
    Aomega {
        file: PathBuf,
        /// Elements spanning the subalgebra, separated by ';'.
        #[arg(long)]
        subalgebra: String,
    },
    /// Level-by-level solvability and semisimplicity verdicts for a tower.
    TowerVerdicts { file: PathBuf },
    /// Simple-ideal decompositions at every level, matched across embeddings.
    TowerDecompose { file: PathBuf },
    /// Decide whether a tower derivation is inner within the horizon.
    TowerDerivation {
        file: PathBuf,
        /// Derivation file carrying one matrix per level.
        #[arg(long)]
        derivation: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Killing { .. } => "killing",
            Command::Solvable { .. } => "solvable",
            Command::Semisimple { .. } => "semisimple",
            Command::Radical { .. } => "radical",
            Command::Weights { .. } => "weights",
            Command::Fitting { .. } => "fitting",
            Command::Decompose { .. } => "decompose",
            Command::Condition3 { .. } => "condition3",
            Command::Aomega { .. } => "aomega",
            Command::TowerVerdicts { .. } => "tower-verdicts",
            Command::TowerDecompose { .. } => "tower-decompose",
            Command::TowerDerivation { .. } => "tower-derivation",
        }
    }
}

/// A terminal outcome that carries no report: the message goes to
/// stderr and the code to the shell.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::input(e.to_string())
    }
}

fn structure_failure(e: StructureError) -> Failure {
    let code = match e {
        StructureError::NotSemisimple { .. } | StructureError::NoAbsorbingChain => 1,
        StructureError::NoWitnessWithinCap | StructureError::Inconclusive { .. } => 2,
        StructureError::NotSubalgebra | StructureError::AmbientMismatch { .. } => 3,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn tower_failure(e: TowerError) -> Failure {
    let code = match e {
        TowerError::NotSemisimpleLevel { .. } => 1,
        TowerError::InconclusiveLevel { .. } => 2,
        _ => 3,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn weight_failure(e: WeightError) -> Failure {
    let code = match e {
        WeightError::NotSplit { .. } => 2,
        _ => 3,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn digest(path: &Path) -> Result<InputDigest, Failure> {
    digest_file(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn vector_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(io::rational_to_value).collect())
}

fn subspace_summary(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": io::subspace_to_value(s),
    })
}

fn parse_subspace(input: &str, algebra: &LieAlgebra) -> Result<Subspace, Failure> {
    let vectors = io::parse_elements(input, algebra)?;
    Subspace::from_vectors(&vectors, algebra.dim()).map_err(|e| Failure::input(e.to_string()))
}

/// Loads a representation file and insists it is over the same algebra
/// as the one already loaded, labels included, so that reports and
/// element names stay coherent.
fn load_rep_for(algebra: &LieAlgebra, path: &Path) -> Result<Representation, Failure> {
    let rep = io::load_representation(path)?;
    if rep.algebra() != algebra {
        return Err(Failure::input(format!(
            "{}: representation is over a different algebra than the input file",
            path.display()
        )));
    }
    Ok(rep)
}

fn run(cli: &Cli) -> Result<(i32, AnalysisReport), Failure> {
    let command = cli.command.name().to_string();
    match &cli.command {
        Command::Check { kind, file } => {
            let results = match kind {
                Kind::Algebra => {
                    let algebra = io::load_algebra(file)?;
                    json!({
                        "kind": "algebra",
                        "dim": algebra.dim(),
                        "basis": algebra.labels(),
                        "valid": true,
                    })
                }
                Kind::Representation => {
                    let rep = io::load_representation(file)?;
                    json!({
                        "kind": "representation",
                        "algebra_dim": rep.algebra().dim(),
                        "module_dim": rep.module_dim(),
                        "valid": true,
                    })
                }
                Kind::Tower => {
                    let tower = io::load_tower(file)?;
                    let validation = validate_tower(&tower);
                    json!({
                        "kind": "tower",
                        "levels": tower.levels.len(),
                        "level_dims": tower.levels.iter().map(LieAlgebra::dim).collect::<Vec<_>>(),
                        "valid": validation.is_valid(),
                    })
                }
                Kind::Derivation => {
                    let derivation = io::load_derivation(file)?;
                    json!({
                        "kind": "derivation",
                        "levels": derivation.per_level.len(),
                        "shapes": derivation
                            .per_level
                            .iter()
                            .map(|m| json!([m.rows(), m.cols()]))
                            .collect::<Vec<_>>(),
                        "valid": true,
                    })
                }
            };
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::Killing { file } => {
            let algebra = io::load_algebra(file)?;
            let form = killing_form(&algebra);
            let det = form.determinant();
            let results = json!({
                "dim": algebra.dim(),
                "gram": io::matrix_to_value(form.gram()),
                "determinant": format_rational(&det),
                "nondegenerate": det != rat_int(0),
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::Solvable { file, rep } => {
            let algebra = io::load_algebra(file)?;
            let mut inputs = vec![digest(file)?];
            let loaded;
            let rep_ref = match rep {
                Some(path) => {
                    loaded = load_rep_for(&algebra, path)?;
                    inputs.push(digest(path)?);
                    Some(&loaded)
                }
                None => None,
            };
            let verdict = cartan_solvable(&algebra, rep_ref).map_err(|e| match e {
                FormsError::KernelNotSolvable => Failure {
                    code: 2,
                    message: e.to_string(),
                },
                other => Failure::input(other.to_string()),
            })?;
            let results = json!({
                "solvable": verdict.solvable,
                "oracle_agreement": verdict.oracle_agreement,
                "witness": verdict.witness.as_ref().map(|(x, y)| json!({
                    "left": vector_value(x),
                    "right": vector_value(y),
                })),
                "trace_form": match rep {
                    Some(path) => path.display().to_string(),
                    None => "adjoint".to_string(),
                },
            });
            let code = if verdict.solvable { 0 } else { 1 };
            Ok((
                code,
                AnalysisReport {
                    command,
                    inputs,
                    seed: None,
                    results,
                },
            ))
        }

        Command::Semisimple { file } => {
            let algebra = io::load_algebra(file)?;
            let check = semisimple_check(&algebra);
            let results = json!({
                "semisimple": check.semisimple,
                "killing_determinant": format_rational(&check.killing_det),
            });
            let code = if check.semisimple { 0 } else { 1 };
            Ok((
                code,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::Radical { file } => {
            let algebra = io::load_algebra(file)?;
            let r = radical(&algebra);
            let is_solvable = algebra
                .is_solvable_subalgebra(&r)
                .map_err(|e| Failure::input(e.to_string()))?;
            let results = json!({
                "radical": subspace_summary(&r),
                "is_ideal": algebra.is_ideal(&r),
                "is_solvable": is_solvable,
                "semisimple": r.is_zero(),
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::Weights {
            file,
            subalgebra,
            rep,
        } => {
            let algebra = io::load_algebra(file)?;
            let mut inputs = vec![digest(file)?];
            let representation = match rep {
                Some(path) => {
                    let r = load_rep_for(&algebra, path)?;
                    inputs.push(digest(path)?);
                    r
                }
                None => Representation::adjoint(&algebra),
            };
            let h = parse_subspace(subalgebra, &algebra)?;
            let pieces = weight_decomposition(&representation, &h).map_err(weight_failure)?;
            let results = json!({
                "subalgebra_dim": h.dim(),
                "module_dim": representation.module_dim(),
                "weight_count": pieces.len(),
                "weights": pieces.iter().map(|(w, space)| json!({
                    "values": w.values().iter().map(format_rational).collect::<Vec<_>>(),
                    "space": subspace_summary(space),
                })).collect::<Vec<_>>(),
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs,
                    seed: None,
                    results,
                },
            ))
        }

        Command::Fitting { file, element, rep } => {
            let algebra = io::load_algebra(file)?;
            let mut inputs = vec![digest(file)?];
            let x = io::parse_element(element, &algebra)?;
            let op = match rep {
                Some(path) => {
                    let r = load_rep_for(&algebra, path)?;
                    inputs.push(digest(path)?);
                    r.operator_of(&x)
                        .map_err(|e| Failure::input(e.to_string()))?
                }
                None => algebra.ad(&x).map_err(|e| Failure::input(e.to_string()))?,
            };
            let split = fitting_decompose(&op);
            let results = json!({
                "element": vector_value(&x),
                "operator_dim": op.rows(),
                "null_component": subspace_summary(&split.null_component),
                "one_component": subspace_summary(&split.one_component),
                "trace": format_rational(&op.trace()),
                "invertible_part_trace": format_rational(&fitting_trace(&op)),
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs,
                    seed: None,
                    results,
                },
            ))
        }

        Command::Decompose { file } => {
            let algebra = io::load_algebra(file)?;
            let decomposition = decompose_semisimple(&algebra, cli.seed, cli.trial_budget)
                .map_err(structure_failure)?;
            let results = json!({
                "ideal_count": decomposition.ideals.len(),
                "dims": decomposition.ideals.iter().map(Subspace::dim).collect::<Vec<_>>(),
                "ideals": decomposition.ideals.iter().map(subspace_summary).collect::<Vec<_>>(),
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: Some(cli.seed),
                    results,
                },
            ))
        }

        Command::Condition3 { file, generators } => {
            let algebra = io::load_algebra(file)?;
            let gens = io::parse_elements(generators, &algebra)?;
            let witness =
                condition3_witness(&algebra, &gens, cli.dim_cap).map_err(structure_failure)?;
            let results = json!({
                "subalgebra": subspace_summary(&witness.subalgebra),
                "exponent": witness.exponent,
                "dim_cap": cli.dim_cap,
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::Aomega { file, subalgebra } => {
            let algebra = io::load_algebra(file)?;
            let a = parse_subspace(subalgebra, &algebra)?;
            let stable = a_omega(&algebra, &a).map_err(structure_failure)?;
            let results = json!({
                "subalgebra_dim": a.dim(),
                "stable_term": subspace_summary(&stable),
                "is_ideal": algebra.is_ideal(&stable),
            });
            Ok((
                0,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::TowerVerdicts { file } => {
            let tower = io::load_tower(file)?;
            let verdicts = tower_verdicts(&tower).map_err(tower_failure)?;
            let (limit, code) = match verdicts.limit {
                LimitVerdict::LocallySolvable => (json!("locally-solvable"), 0),
                LimitVerdict::Semisimple => (json!("semisimple"), 0),
                LimitVerdict::Inconclusive { level } => {
                    (json!({ "inconclusive_at_level": level }), 2)
                }
            };
            let results = json!({
                "levels": verdicts.levels.iter().map(|l| json!({
                    "radical_dim": l.radical.dim(),
                    "killing_determinant": format_rational(&l.killing_det),
                    "solvable": l.solvable,
                    "semisimple": l.semisimple,
                })).collect::<Vec<_>>(),
                "radical_monotone": verdicts.radical_monotone,
                "limit": limit,
            });
            Ok((
                code,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: None,
                    results,
                },
            ))
        }

        Command::TowerDecompose { file } => {
            let tower = io::load_tower(file)?;
            let decomposition =
                tower_decompose(&tower, cli.seed, cli.trial_budget).map_err(tower_failure)?;
            let results = json!({
                "per_level": decomposition.per_level.iter().map(|level| json!({
                    "ideal_count": level.ideals.len(),
                    "dims": level.ideals.iter().map(Subspace::dim).collect::<Vec<_>>(),
                    "ideals": level.ideals.iter().map(subspace_summary).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "matchings": decomposition.matchings.iter().map(|m| json!({
                    "assignments": m.assignments,
                    "injective": m.injective,
                })).collect::<Vec<_>>(),
                "perp_intersections_zero": decomposition.perp_intersections_zero,
                "coherent": decomposition.coherent,
            });
            let code = if decomposition.coherent { 0 } else { 2 };
            Ok((
                code,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?],
                    seed: Some(cli.seed),
                    results,
                },
            ))
        }

        Command::TowerDerivation { file, derivation } => {
            let tower = io::load_tower(file)?;
            let der = io::load_derivation(derivation)?;
            let innerness = tower_derivation_inner(&tower, &der).map_err(tower_failure)?;
            let (verdict, code) = match innerness.verdict {
                InnerVerdict::Inner => ("inner", 0),
                InnerVerdict::NotInnerWithinHorizon => ("not-inner-within-horizon", 2),
            };
            let results = json!({
                "verdict": verdict,
                "witnesses": innerness.witnesses.iter().map(|w| vector_value(w)).collect::<Vec<_>>(),
                "compatible": innerness.compatible,
                "stable_from": innerness.stable_from,
                "witness": innerness.witness.as_ref().map(|(element, level)| json!({
                    "element": vector_value(element),
                    "level": level,
                })),
            });
            Ok((
                code,
                AnalysisReport {
                    command,
                    inputs: vec![digest(file)?, digest(derivation)?],
                    seed: None,
                    results,
                },
            ))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok((code, report)) => {
            let rendered = match cli.format {
                Format::Text => report.render_text(),
                Format::Json => report.render_json(),
            };
            print!("{rendered}");
            std::process::exit(code);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
