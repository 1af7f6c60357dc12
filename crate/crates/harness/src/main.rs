//! `dent`: command-line front end for the two-spinor invariant library.
//!
//! Subcommands: `catalog`, `invariants`, `evolve`, `sweep`, `verify`, `fw`.
//! Exit codes: 0 on success, 1 when a verification property fails, 2 on
//! usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dirac_entanglement::evolution::{evolve_two_lab, Schedule};
use dirac_entanglement::foldy::{fw_invariants, fw_transform_state, FWContext, FWFieldData};
use dirac_entanglement::invariants::{all_invariants, degree4_products, InvariantRecord};
use dirac_entanglement::states::{catalog, CATALOG_NAMES};
use dirac_entanglement::{Complex64 as C64, TwoSpinorState};
use dirac_entanglement_harness::io::{
    load_scenario, load_spec, resolve_state, to_json_full_precision, StateFile,
};
use dirac_entanglement_harness::suites::run_suite;
use dirac_entanglement_harness::sweep::sweep;
use dirac_entanglement_harness::HarnessError;

#[derive(Parser)]
#[command(
    name = "dent",
    version,
    about = "Entanglement invariants of two Dirac spinors: catalog, evolution, sweeps, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or print the documented example states.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Compute the five invariants and the degree-4 products of a state.
    Invariants {
        /// Catalog name or state-file path.
        #[arg(long)]
        state: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evolve a state in both labs and print the result with invariants.
    Evolve {
        /// Catalog name or state-file path.
        #[arg(long)]
        state: String,
        /// Hamiltonian spec file for Alice's lab.
        #[arg(long)]
        ham_a: PathBuf,
        /// Hamiltonian spec file for Bob's lab.
        #[arg(long)]
        ham_b: PathBuf,
        /// Evolution time in Alice's lab.
        #[arg(long)]
        t_a: f64,
        /// Evolution time in Bob's lab.
        #[arg(long)]
        t_b: f64,
        /// Midpoint steps per schedule segment.
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Run a (t_A, t_B) sweep scenario and write a CSV table.
    Sweep {
        #[arg(long)]
        scenario: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// One of: algebra, lorentz, invariance, evolution, fw, all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Tolerance cap for agreement-type properties.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Transform a state to the Foldy-Wouthuysen picture and cross-check
    /// the compensated invariants against the original picture.
    Fw {
        /// Catalog name or state-file path.
        #[arg(long)]
        state: String,
        /// Hamiltonian spec file for Alice's lab (mass > 0; may carry an
        /// "fw_fields" block).
        #[arg(long)]
        ham_a: PathBuf,
        /// Hamiltonian spec file for Bob's lab.
        #[arg(long)]
        ham_b: PathBuf,
        /// Transformation order applied in both labs.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        order: u8,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print all catalog names.
    List,
    /// Print one catalog entry as a state document with expected magnitudes.
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
    abs: f64,
}

impl From<C64> for ComplexOut {
    fn from(z: C64) -> Self {
        Self {
            re: z.re,
            im: z.im,
            abs: z.norm(),
        }
    }
}

#[derive(Serialize)]
struct RecordOut {
    i1: ComplexOut,
    i2: ComplexOut,
    i2a: ComplexOut,
    i2b: ComplexOut,
    i3: ComplexOut,
}

impl From<&InvariantRecord> for RecordOut {
    fn from(r: &InvariantRecord) -> Self {
        Self {
            i1: r.i1.into(),
            i2: r.i2.into(),
            i2a: r.i2a.into(),
            i2b: r.i2b.into(),
            i3: r.i3.into(),
        }
    }
}

#[derive(Serialize)]
struct Degree4Out {
    name: &'static str,
    re: f64,
    im: f64,
    abs: f64,
    parity: &'static str,
}

#[derive(Serialize)]
struct InvariantsOut {
    invariants: RecordOut,
    degree4: Vec<Degree4Out>,
}

fn invariants_output(state: &TwoSpinorState) -> InvariantsOut {
    let rec = all_invariants(state);
    let degree4 = degree4_products(&rec)
        .into_iter()
        .map(|p| Degree4Out {
            name: p.name,
            re: p.value.re,
            im: p.value.im,
            abs: p.value.norm(),
            parity: p.parity.label(),
        })
        .collect();
    InvariantsOut {
        invariants: RecordOut::from(&rec),
        degree4,
    }
}

fn invariants_csv(out: &InvariantsOut) -> String {
    let mut header = Vec::new();
    let mut row = Vec::new();
    for (name, c) in [
        ("i1", &out.invariants.i1),
        ("i2", &out.invariants.i2),
        ("i2a", &out.invariants.i2a),
        ("i2b", &out.invariants.i2b),
        ("i3", &out.invariants.i3),
    ] {
        for (suffix, v) in [("re", c.re), ("im", c.im), ("abs", c.abs)] {
            header.push(format!("{name}_{suffix}"));
            row.push(format!("{v:.17e}"));
        }
    }
    for p in &out.degree4 {
        for (suffix, v) in [("re", p.re), ("im", p.im), ("abs", p.abs)] {
            header.push(format!("{}_{suffix}", p.name));
            row.push(format!("{v:.17e}"));
        }
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in CATALOG_NAMES {
                    println!("{name}");
                }
            }
            CatalogAction::Show { name } => {
                let entry = catalog(&name)?;
                #[derive(Serialize)]
                struct ExpectedOut {
                    i1: f64,
                    i2: f64,
                    i2a: f64,
                    i2b: f64,
                    i3: f64,
                }
                #[derive(Serialize)]
                struct CatalogOut {
                    #[serde(flatten)]
                    state: StateFile,
                    expected_magnitudes: ExpectedOut,
                }
                let out = CatalogOut {
                    state: StateFile::from_state(Some(entry.name), &entry.state),
                    expected_magnitudes: ExpectedOut {
                        i1: entry.expected.i1,
                        i2: entry.expected.i2,
                        i2a: entry.expected.i2a,
                        i2b: entry.expected.i2b,
                        i3: entry.expected.i3,
                    },
                };
                println!("{}", to_json_full_precision(&out));
            }
        },
        Command::Invariants { state, format } => {
            let state = resolve_state(&state)?;
            let out = invariants_output(&state);
            match format {
                Format::Json => println!("{}", to_json_full_precision(&out)),
                Format::Csv => print!("{}", invariants_csv(&out)),
            }
        }
        Command::Evolve {
            state,
            ham_a,
            ham_b,
            t_a,
            t_b,
            steps,
        } => {
            let state = resolve_state(&state)?;
            let (spec_a, _) = load_spec(&ham_a)?;
            let (spec_b, _) = load_spec(&ham_b)?;
            let sched_a = Schedule::constant(spec_a, t_a);
            let sched_b = Schedule::constant(spec_b, t_b);
            let evolved = evolve_two_lab(&state, &sched_a, &sched_b, steps.max(1))?;
            #[derive(Serialize)]
            struct EvolveOut {
                #[serde(flatten)]
                state: StateFile,
                invariants: RecordOut,
            }
            let out = EvolveOut {
                state: StateFile::from_state(None, &evolved),
                invariants: RecordOut::from(&all_invariants(&evolved)),
            };
            println!("{}", to_json_full_precision(&out));
        }
        Command::Sweep { scenario, out } => {
            let scenario = load_scenario(&scenario)?;
            let table = sweep(&scenario)?;
            std::fs::write(&out, table.to_csv()).map_err(|source| HarnessError::Io {
                path: out.clone(),
                source,
            })?;
            println!("wrote {} rows to {}", table.rows.len(), out.display());
        }
        Command::Verify {
            suite,
            seed,
            trials,
            tol,
        } => {
            let report = run_suite(&suite, seed, trials, tol)?;
            print!("{}", report.render());
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Fw {
            state,
            ham_a,
            ham_b,
            order,
        } => {
            let state = resolve_state(&state)?;
            let (spec_a, fields_a) = load_spec(&ham_a)?;
            let (spec_b, fields_b) = load_spec(&ham_b)?;
            let ctx_a = FWContext::new(spec_a, fields_a.unwrap_or_else(FWFieldData::zero))?;
            let ctx_b = FWContext::new(spec_b, fields_b.unwrap_or_else(FWFieldData::zero))?;
            let order = order as usize;
            let fw_state = fw_transform_state(&state, &ctx_a, &ctx_b, order, order);
            let rec_fw = fw_invariants(&fw_state, &ctx_a, &ctx_b, order, order);
            let rec_orig = all_invariants(&state);
            let max_dev = [
                rec_fw.i1 - rec_orig.i1,
                rec_fw.i2 - rec_orig.i2,
                rec_fw.i2a - rec_orig.i2a,
                rec_fw.i2b - rec_orig.i2b,
                rec_fw.i3 - rec_orig.i3,
            ]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
            #[derive(Serialize)]
            struct FwOut {
                order: usize,
                state_fw: StateFile,
                invariants_fw: RecordOut,
                invariants_original: RecordOut,
                max_deviation: f64,
            }
            let out = FwOut {
                order,
                state_fw: StateFile::from_state(None, &fw_state),
                invariants_fw: RecordOut::from(&rec_fw),
                invariants_original: RecordOut::from(&rec_orig),
                max_deviation: max_dev,
            };
            println!("{}", to_json_full_precision(&out));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
