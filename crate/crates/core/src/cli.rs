//! Command-line front end. Exit codes: 0 the property holds, 1 it fails,
//! 2 the input was rejected.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{analyze, decide, hull, member_by_pairs, witness, DEFAULT_BUDGET, DEFAULT_SEED};
use crate::c0::{c0_analyze, CompactifiedSpace, DEFAULT_INFINITY_LABEL};
use crate::error::{Error, Result};
use crate::io::{emit_dot, parse_row, parse_subspace, C0Doc, ReportDocument, SubspaceSpec, WitnessDoc, FORMAT_VERSION};
use crate::pair::Mode;
use crate::relation::{extract_relations, RelationRecord, RelationSystem};
use crate::scalar::Scalar;
use crate::space::{FunctionVec, Subspace};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kakutani", version, about = "Decide sublattice/subalgebra structure of subspaces of C(X) exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: decisions, hulls, relations, separation and a witness.
    Analyze(Common),
    /// Relation system representing the hull.
    Relations(Common),
    /// Canonical basis of the hull.
    Hull(Common),
    /// Explicit pair whose max/product leaves the subspace.
    Witness(Common),
    /// Exact membership and two-point membership of a function.
    CheckMember {
        #[command(flatten)]
        common: Common,
        /// Comma-separated values, one per point, e.g. `1,1/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        function: String,
    },
    /// Graphviz graph of the relation system.
    Dot(Common),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Lattice,
    Algebra,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Lattice => Mode::Lattice,
            ModeArg::Algebra => Mode::Algebra,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Input JSON document, or `-` for stdin.
    input: PathBuf,
    /// Overrides the document's `mode` (default lattice).
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Read the input as a subspace of C₀(T) instead of C(X).
    #[arg(long)]
    c0: bool,
    #[arg(long)]
    infinity_label: Option<String>,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Input after `--c0` handling: the subspace that is actually analysed.
struct Problem {
    spec: SubspaceSpec,
    mode: Mode,
    compact: Option<CompactifiedSpace>,
    work: Subspace,
}

impl Problem {
    fn load(common: &Common) -> Result<Problem> {
        let bytes = if common.input.as_os_str() == "-" {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map_err(|e| Error::Format(e.to_string()))?;
            buf
        } else {
            fs::read(&common.input).map_err(|e| Error::Format(format!("{}: {e}", common.input.display())))?
        };
        let spec = parse_subspace(&bytes)?;
        let mode = common.mode.map(Mode::from).or(spec.mode).unwrap_or(Mode::Lattice);
        let (compact, work) = if common.c0 || spec.c0 {
            let label = common
                .infinity_label
                .as_deref()
                .or(spec.infinity_label.as_deref())
                .unwrap_or(DEFAULT_INFINITY_LABEL);
            let cs = CompactifiedSpace::new(&spec.space, label)?;
            let lifted = cs.embed_subspace(&spec.subspace)?;
            (Some(cs), lifted)
        } else {
            (None, spec.subspace.clone())
        };
        Ok(Problem { spec, mode, compact, work })
    }

    fn exit(&self, holds: bool) -> i32 {
        if holds {
            EXIT_HOLDS
        } else {
            EXIT_FAILS
        }
    }

    /// Relations and hull as presented to the user: over `T` under `--c0`.
    fn relations_and_hull(&self) -> Result<(RelationSystem, Subspace, bool)> {
        match &self.compact {
            Some(cs) => {
                let r = c0_analyze(cs, &self.spec.subspace, self.mode)?;
                Ok((r.relations, r.hull, r.holds))
            }
            None => {
                let relations = extract_relations(&self.work, self.mode);
                let h = hull(&self.work, self.mode);
                let holds = h == self.work;
                Ok((relations, h, holds))
            }
        }
    }

    fn function(&self, text: &str) -> Result<FunctionVec> {
        let f = FunctionVec::new(&self.spec.space, parse_row(text)?)?;
        match &self.compact {
            Some(cs) => cs.embed(&f),
            None => Ok(f),
        }
    }

    fn present(&self, values: &[Scalar]) -> Vec<Scalar> {
        match &self.compact {
            Some(cs) => values[..cs.base().len()].to_vec(),
            None => values.to_vec(),
        }
    }
}

#[derive(Serialize)]
struct RelationsDoc {
    format: u32,
    mode: Mode,
    holds: bool,
    points: Vec<String>,
    relations: Vec<RelationRecord>,
}

#[derive(Serialize)]
struct HullDoc {
    format: u32,
    mode: Mode,
    holds: bool,
    points: Vec<String>,
    basis: Vec<Vec<Scalar>>,
    hull: Vec<Vec<Scalar>>,
}

#[derive(Serialize)]
struct WitnessReport {
    format: u32,
    mode: Mode,
    seed: u64,
    budget: usize,
    holds: bool,
    witness: Option<WitnessDoc>,
    note: Option<String>,
}

#[derive(Serialize)]
struct MemberDoc {
    format: u32,
    function: Vec<Scalar>,
    member: bool,
    member_by_pairs: bool,
    is_sublattice: bool,
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn execute(command: &Command) -> Result<(i32, String)> {
    match command {
        Command::Analyze(common) => {
            let p = Problem::load(common)?;
            let report = analyze(&p.work, p.mode, common.seed, common.budget);
            let mut doc = ReportDocument::new(&p.spec, &p.work, &report, p.mode, common.seed, common.budget);
            let holds = match p.mode {
                Mode::Lattice => report.is_sublattice,
                Mode::Algebra => report.is_subalgebra,
            };
            if let Some(cs) = &p.compact {
                let c0 = c0_analyze(cs, &p.spec.subspace, p.mode)?;
                doc.c0 = Some(C0Doc::new(cs.infinity_label(), &c0));
            }
            Ok((p.exit(holds), json(&doc)))
        }
        Command::Relations(common) => {
            let p = Problem::load(common)?;
            let (relations, _, holds) = p.relations_and_hull()?;
            let doc = RelationsDoc {
                format: FORMAT_VERSION,
                mode: p.mode,
                holds,
                points: relations.space().labels().to_vec(),
                relations: relations.records(),
            };
            Ok((p.exit(holds), json(&doc)))
        }
        Command::Hull(common) => {
            let p = Problem::load(common)?;
            let (_, h, holds) = p.relations_and_hull()?;
            let doc = HullDoc {
                format: FORMAT_VERSION,
                mode: p.mode,
                holds,
                points: p.spec.space.labels().to_vec(),
                basis: p.spec.subspace.basis().vectors().to_vec(),
                hull: h.basis().vectors().to_vec(),
            };
            Ok((p.exit(holds), json(&doc)))
        }
        Command::Witness(common) => {
            let p = Problem::load(common)?;
            let holds = decide(&p.work, p.mode);
            let (found, note) = if holds {
                (None, None)
            } else {
                match witness(&p.work, p.mode, common.seed, common.budget)? {
                    Some(w) => (
                        Some(WitnessDoc {
                            op: w.op,
                            f: p.present(w.f.values()),
                            g: p.present(w.g.values()),
                            combined: p.present(w.combined.values()),
                        }),
                        None,
                    ),
                    None => (None, Some("no explicit witness found within budget".to_string())),
                }
            };
            let doc = WitnessReport {
                format: FORMAT_VERSION,
                mode: p.mode,
                seed: common.seed,
                budget: common.budget,
                holds,
                witness: found,
                note,
            };
            Ok((p.exit(holds), json(&doc)))
        }
        Command::CheckMember { common, function } => {
            let p = Problem::load(common)?;
            let f = p.function(function)?;
            let member = p.work.contains(&f)?;
            let doc = MemberDoc {
                format: FORMAT_VERSION,
                function: p.present(f.values()),
                member,
                member_by_pairs: member_by_pairs(&f, &p.work)?,
                is_sublattice: decide(&p.work, Mode::Lattice),
            };
            Ok((p.exit(member), json(&doc)))
        }
        Command::Dot(common) => {
            let p = Problem::load(common)?;
            let (relations, _, holds) = p.relations_and_hull()?;
            Ok((p.exit(holds), emit_dot(&relations)))
        }
    }
}

/// Runs one invocation (`args[0]` is the program name) without touching the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
