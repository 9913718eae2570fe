//! The `assoc2` command line. [`run`] parses arguments, reads structure
//! files, dispatches to the library and renders a report; the binary only
//! prints the outcome.
//!
//! Exit codes: 0 pass (or equivalent), 1 the mathematics says no (failed
//! check, not a cocycle, inequivalent, failed precondition), 2 bad input.
//! On exit 2 nothing is written to stdout.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra2::{
    build_end_algebra, check_algebra, check_derivation, check_homomorphism, Homomorphism2, HomotopyDerivation,
    TwoTermAlgebra, TwoTermComplex,
};
use crate::cohom2::{d2_residual, reduce_cocycle, second_cohomology, Cochain2, CochainDims, Residual};
use crate::deform2::{
    check_generates, check_nijenhuis, check_trivializing, nijenhuis_deformation, NijenhuisCandidate, PolyStructure,
};
use crate::error::{input_err, Error, Result};
use crate::exactlin::{rat, Rational};
use crate::ext2::{
    build_extension, check_equivalence, extract_cocycle, extract_representation, Equivalence, Extension2,
};
use crate::fixtures;
use crate::io::{tensor_json, vector_json, Cochain2File, FileValue};
use crate::random;
use crate::rep2::{adjoint_representation, check_representation, Representation2};
use crate::report::{CheckReport, CoefficientFailure};
use crate::xmod::{
    check_crossed_module, check_xmod_representation, from_strict, semidirect_product, to_strict, xmod_adjoint,
    xmod_check_equivalence, xmod_check_generates, xmod_check_nijenhuis, xmod_check_trivializing, xmod_d2_residual,
    xmod_extension_build, xmod_extension_extract, xmod_h2, xmod_is_coboundary, xmod_nijenhuis_deformation,
    CrossedModule, XCochain2, XCochainDims, XEquivalence, XModExtension, XModRepresentation, XNijenhuisCandidate,
    XPolyStructure,
};

#[derive(Parser, Debug)]
#[command(name = "assoc2", version, about = "Exact computations with associative 2-algebras and crossed modules")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Maximum number of violations listed in a report (all are counted).
    #[arg(long, default_value_t = 20, global = true)]
    pub max_violations: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check axioms.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Dimensions of Z², B², H² and representative cocycles.
    Cohomology {
        algebra: PathBuf,
        /// Representation file; the adjoint representation if omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Test or reduce a 2-cochain.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Infinitesimal deformations.
    #[command(subcommand)]
    Deform(DeformCmd),
    /// Nijenhuis operators and their deformations.
    #[command(subcommand)]
    Nijenhuis(NijenhuisCmd),
    /// Abelian extensions.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Crossed-module versions of the commands above.
    #[command(subcommand)]
    Xmod(XmodCmd),
    /// Endomorphism 2-algebra of a two-term complex.
    #[command(subcommand)]
    Endalg(EndalgCmd),
    /// Print the adjoint representation of a 2-algebra.
    Adjoint { algebra: PathBuf },
    /// Print a shipped fixture.
    Fixture { name: FixtureName },
    /// Print a seeded random structure.
    Random {
        #[command(subcommand)]
        what: RandomCmd,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// 2-algebra axioms.
    Algebra { file: PathBuf },
    /// Representation axioms.
    Rep { algebra: PathBuf, rep: PathBuf },
    /// Crossed-module axioms.
    Xmod { file: PathBuf },
    /// Crossed-module representation axioms.
    XmodRep { xmod: PathBuf, rep: PathBuf },
    /// Homomorphism conditions from SRC to TGT.
    Hom { src: PathBuf, tgt: PathBuf, hom: PathBuf },
    /// Homotopy derivation conditions.
    Derivation { algebra: PathBuf, derivation: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum CocycleCmd {
    /// Evaluate the 2-cocycle conditions.
    Check {
        algebra: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Write a cocycle as an H² class plus a coboundary.
    Reduce {
        algebra: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Print only the reduced representative as a cochain file.
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum DeformCmd {
    /// Does `structure + λ·cochain` satisfy the axioms identically in λ?
    /// A `theta2` tensor in the cochain file adds `λ²θ2` to l3.
    Check { algebra: PathBuf, cochain: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum NijenhuisCmd {
    Check {
        algebra: PathBuf,
        candidate: PathBuf,
    },
    /// Print the induced deformation as a cochain file with `theta2`.
    Apply {
        algebra: PathBuf,
        candidate: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExtCmd {
    /// Print the extension built from a 2-cocycle.
    Build {
        algebra: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    Extract {
        extension: PathBuf,
        /// Print only one part as a structure file.
        #[arg(long, value_enum)]
        emit: Option<ExtPart>,
    },
    Equiv {
        first: PathBuf,
        second: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtPart {
    Representation,
    Cocycle,
}

#[derive(Subcommand, Debug)]
pub enum XmodCmd {
    /// Dimensions of Z², B², H² and representative cocycles.
    Cohomology {
        xmod: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Test a 2-cochain.
    #[command(subcommand)]
    Cocycle(XCocycleCmd),
    /// Infinitesimal deformations.
    #[command(subcommand)]
    Deform(XDeformCmd),
    /// Nijenhuis operators and their deformations.
    #[command(subcommand)]
    Nijenhuis(XNijenhuisCmd),
    /// Abelian extensions.
    #[command(subcommand)]
    Ext(XExtCmd),
    /// Print the strict 2-algebra of a crossed module.
    ToStrict { xmod: PathBuf },
    /// Print the crossed module of a strict 2-algebra.
    FromStrict { algebra: PathBuf },
    /// Print the semidirect product with a representation (adjoint if omitted).
    Semidirect {
        xmod: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Print the adjoint representation.
    Adjoint { xmod: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum XCocycleCmd {
    Check {
        xmod: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum XDeformCmd {
    Check { xmod: PathBuf, cochain: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum XNijenhuisCmd {
    Check { xmod: PathBuf, candidate: PathBuf },
    Apply { xmod: PathBuf, candidate: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum XExtCmd {
    Build {
        xmod: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    Extract {
        extension: PathBuf,
        #[arg(long, value_enum)]
        emit: Option<ExtPart>,
    },
    Equiv {
        first: PathBuf,
        second: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum EndalgCmd {
    /// Print End(V) for a two-term complex file.
    Build { complex: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum RandomCmd {
    /// A fixture transported along a random isomorphism with `F2 ≠ 0`.
    Isomorph { algebra: PathBuf },
    /// A random 2-cochain (usually not a cocycle).
    Cochain2 {
        algebra: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// A random element of Z².
    Cocycle {
        algebra: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// A random crossed-module 2-cochain.
    XmodCochain {
        xmod: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// A random crossed-module 2-cocycle.
    XmodCocycle {
        xmod: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixtureName {
    #[value(name = "fix_z")]
    FixZ,
    #[value(name = "fix_u")]
    FixU,
    #[value(name = "fix_d")]
    FixD,
    #[value(name = "fix_l")]
    FixL,
    #[value(name = "fix_r22")]
    FixR22,
    #[value(name = "fix_x")]
    FixX,
    #[value(name = "fix_x_f")]
    FixXF,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Equivalent,
    Inequivalent,
    NotCocycle,
    Precondition,
    RepresentationMismatch,
    NotStrict,
    InvalidExtension,
    Unsupported,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Equivalent => "equivalent",
            Verdict::Inequivalent => "inequivalent",
            Verdict::NotCocycle => "not_cocycle",
            Verdict::Precondition => "precondition",
            Verdict::RepresentationMismatch => "representation_mismatch",
            Verdict::NotStrict => "not_strict",
            Verdict::InvalidExtension => "invalid_extension",
            Verdict::Unsupported => "unsupported",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass | Verdict::Equivalent => 0,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ViolationRow {
    pub condition: String,
    pub tuple: Vec<usize>,
    /// Power of λ for polynomial checks.
    pub degree: Option<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub verdict: Verdict,
    pub violation_count: usize,
    pub violations: Vec<ViolationRow>,
    pub data: BTreeMap<String, Value>,
}

impl Report {
    fn new(command: &str, verdict: Verdict) -> Self {
        Report {
            command: command.to_string(),
            verdict,
            violation_count: 0,
            violations: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    /// Pass iff the report has no violations.
    fn from_check(command: &str, r: &CheckReport) -> Self {
        let mut rep = Report::new(command, if r.passed() { Verdict::Pass } else { Verdict::Fail });
        rep.add_check(r);
        rep
    }

    fn add_check(&mut self, r: &CheckReport) {
        for (id, v) in r.violations() {
            self.push(ViolationRow {
                condition: id.to_string(),
                tuple: v.tuple.clone(),
                degree: None,
                lhs: v.lhs.0.clone(),
                rhs: v.rhs.0.clone(),
            });
        }
    }

    fn add_coefficients(&mut self, fs: &[CoefficientFailure]) {
        for f in fs {
            let zero = vec![rat(0); f.residual.0.len()];
            self.push(ViolationRow {
                condition: f.condition.clone(),
                tuple: f.tuple.clone(),
                degree: Some(f.degree),
                lhs: f.residual.0.clone(),
                rhs: zero,
            });
        }
    }

    fn add_residual(&mut self, r: &Residual) {
        for fam in &r.families {
            for (ix, v) in fam.values.nonzero_entries_by_input() {
                let zero = vec![rat(0); v.len()];
                self.push(ViolationRow { condition: fam.id.to_string(), tuple: ix, degree: None, lhs: v, rhs: zero });
            }
        }
    }

    fn push(&mut self, row: ViolationRow) {
        self.violation_count += 1;
        self.violations.push(row);
    }

    fn set(&mut self, key: &str, v: Value) {
        self.data.insert(key.to_string(), v);
    }

    pub fn to_json(&self, max: usize) -> String {
        let rows: Vec<Value> = self
            .violations
            .iter()
            .take(max)
            .map(|r| {
                let mut o = json!({
                    "condition": r.condition,
                    "tuple": r.tuple,
                    "lhs": vector_json(&r.lhs),
                    "rhs": vector_json(&r.rhs),
                });
                if let Some(d) = r.degree {
                    o["degree"] = json!(d);
                }
                o
            })
            .collect();
        let mut doc = json!({
            "command": self.command,
            "verdict": self.verdict.name(),
            "violation_count": self.violation_count,
            "violations": rows,
        });
        for (k, v) in &self.data {
            doc[k] = v.clone();
        }
        let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_human(&self, max: usize) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict.name().to_uppercase());
        if self.violation_count > 0 {
            let vec_str =
                |v: &[Rational]| format!("[{}]", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
            let graded = self.violations.iter().any(|r| r.degree.is_some());
            let mut header = vec!["condition".to_string(), "tuple".into()];
            if graded {
                header.push("λ^k".into());
            }
            header.extend(["lhs".to_string(), "rhs".into()]);
            let mut rows = vec![header];
            for r in self.violations.iter().take(max) {
                let mut row = vec![r.condition.clone(), format!("{:?}", r.tuple)];
                if graded {
                    row.push(r.degree.map_or("-".into(), |d| d.to_string()));
                }
                row.extend([vec_str(&r.lhs), vec_str(&r.rhs)]);
                rows.push(row);
            }
            let mut w = vec![0usize; rows[0].len()];
            for row in &rows {
                for (wi, c) in w.iter_mut().zip(row) {
                    *wi = (*wi).max(c.chars().count());
                }
            }
            for row in &rows {
                let cells: Vec<String> =
                    row.iter().zip(&w).map(|(c, wi)| format!("{c}{}", " ".repeat(wi - c.chars().count()))).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
            if self.violation_count > max {
                out.push_str(&format!("... {} more\n", self.violation_count - max));
            }
        }
        for (k, v) in &self.data {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
        out
    }
}

enum Output {
    Report(Report),
    Raw(String),
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    match dispatch(&cli.command) {
        Ok(Output::Raw(s)) => Outcome { code: 0, stdout: s, stderr: String::new() },
        Ok(Output::Report(r)) => render(cli, &r),
        Err(e) if e.is_input_error() => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(e) => {
            let verdict = match &e {
                Error::NotCocycle(_) => Verdict::NotCocycle,
                Error::RepresentationMismatch(_) => Verdict::RepresentationMismatch,
                Error::NotStrict => Verdict::NotStrict,
                Error::InvalidExtension(_) => Verdict::InvalidExtension,
                Error::Precondition { .. } => Verdict::Precondition,
                _ => Verdict::Unsupported,
            };
            let mut r = Report::new(&name, verdict);
            r.set("message", Value::String(e.to_string()));
            render(cli, &r)
        }
    }
}

fn render(cli: &Cli, r: &Report) -> Outcome {
    let stdout = match cli.format {
        Format::Json => r.to_json(cli.max_violations),
        Format::Human => r.to_human(cli.max_violations),
    };
    Outcome { code: r.verdict.exit_code(), stdout, stderr: String::new() }
}

fn command_name(c: &Command) -> String {
    let s = match c {
        Command::Check(k) => match k {
            CheckCmd::Algebra { .. } => "check algebra",
            CheckCmd::Rep { .. } => "check rep",
            CheckCmd::Xmod { .. } => "check xmod",
            CheckCmd::XmodRep { .. } => "check xmod-rep",
            CheckCmd::Hom { .. } => "check hom",
            CheckCmd::Derivation { .. } => "check derivation",
        },
        Command::Cohomology { .. } => "cohomology",
        Command::Cocycle(CocycleCmd::Check { .. }) => "cocycle check",
        Command::Cocycle(CocycleCmd::Reduce { .. }) => "cocycle reduce",
        Command::Deform(_) => "deform check",
        Command::Nijenhuis(NijenhuisCmd::Check { .. }) => "nijenhuis check",
        Command::Nijenhuis(NijenhuisCmd::Apply { .. }) => "nijenhuis apply",
        Command::Ext(ExtCmd::Build { .. }) => "ext build",
        Command::Ext(ExtCmd::Extract { .. }) => "ext extract",
        Command::Ext(ExtCmd::Equiv { .. }) => "ext equiv",
        Command::Xmod(x) => match x {
            XmodCmd::Cohomology { .. } => "xmod cohomology",
            XmodCmd::Cocycle(_) => "xmod cocycle check",
            XmodCmd::Deform(_) => "xmod deform check",
            XmodCmd::Nijenhuis(XNijenhuisCmd::Check { .. }) => "xmod nijenhuis check",
            XmodCmd::Nijenhuis(XNijenhuisCmd::Apply { .. }) => "xmod nijenhuis apply",
            XmodCmd::Ext(XExtCmd::Build { .. }) => "xmod ext build",
            XmodCmd::Ext(XExtCmd::Extract { .. }) => "xmod ext extract",
            XmodCmd::Ext(XExtCmd::Equiv { .. }) => "xmod ext equiv",
            XmodCmd::ToStrict { .. } => "xmod to-strict",
            XmodCmd::FromStrict { .. } => "xmod from-strict",
            XmodCmd::Semidirect { .. } => "xmod semidirect",
            XmodCmd::Adjoint { .. } => "xmod adjoint",
        },
        Command::Endalg(_) => "endalg build",
        Command::Adjoint { .. } => "adjoint",
        Command::Fixture { .. } => "fixture",
        Command::Random { .. } => "random",
    };
    s.to_string()
}

/// Read and decode a structure file; every error names the file.
pub fn load<T: FileValue>(path: &Path) -> Result<T> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| input_err(&shown, format!("cannot read: {e}")))?;
    T::from_json(&text).map_err(|e| match e {
        Error::Input { location, message } => input_err(format!("{shown}: {location}"), message),
        Error::Shape(m) => input_err(&shown, m),
        other => other,
    })
}

fn load_rep(g: &TwoTermAlgebra, rep: &Option<PathBuf>) -> Result<Representation2> {
    let r = match rep {
        Some(p) => load::<Representation2>(p)?,
        None => adjoint_representation(g),
    };
    r.check_shapes(g).map_err(|e| input_err("representation", e.to_string()))?;
    Ok(r)
}

fn load_xrep(x: &CrossedModule, rep: &Option<PathBuf>) -> Result<XModRepresentation> {
    let r = match rep {
        Some(p) => load::<XModRepresentation>(p)?,
        None => xmod_adjoint(x),
    };
    r.check_shapes(x).map_err(|e| input_err("representation", e.to_string()))?;
    Ok(r)
}

fn shape_check(what: &Path, r: Result<()>) -> Result<()> {
    r.map_err(|e| input_err(what.display().to_string(), e.to_string()))
}

fn cochain_json<T: FileValue>(v: &T) -> Value {
    serde_json::to_value(v.to_file()).expect("structure files serialize")
}

fn dispatch(c: &Command) -> Result<Output> {
    let report = |r: Report| Ok(Output::Report(r));
    let raw = |s: String| Ok(Output::Raw(s));
    let name = command_name(c);
    match c {
        Command::Check(k) => report(run_check(&name, k)?),
        Command::Cohomology { algebra, rep } => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r = load_rep(&g, rep)?;
            let h = second_cohomology(&g, &r)?;
            let mut out = Report::new(&name, Verdict::Pass);
            out.set("dim_z2", json!(h.dim_z2()));
            out.set("dim_b2", json!(h.dim_b2()));
            out.set("dim_h2", json!(h.dim_h2()));
            out.set("representatives", Value::Array(h.representatives.iter().map(cochain_json).collect()));
            report(out)
        }
        Command::Cocycle(CocycleCmd::Check { algebra, cochain, rep }) => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r = load_rep(&g, rep)?;
            let c: Cochain2 = load(cochain)?;
            shape_check(cochain, c.check_shapes(CochainDims::of(&g, &r)))?;
            crate::cohom2::verify_inputs(&g, &r)?;
            let res = d2_residual(&g, &r, &c)?;
            let mut out = Report::new(&name, if res.is_zero() { Verdict::Pass } else { Verdict::NotCocycle });
            out.add_residual(&res);
            report(out)
        }
        Command::Cocycle(CocycleCmd::Reduce { algebra, cochain, rep, emit }) => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r = load_rep(&g, rep)?;
            let c: Cochain2 = load(cochain)?;
            shape_check(cochain, c.check_shapes(CochainDims::of(&g, &r)))?;
            let red = reduce_cocycle(&g, &r, &c)?;
            if *emit {
                return raw(red.representative.to_json());
            }
            let mut out = Report::new(&name, Verdict::Pass);
            out.set("coordinates", vector_json(&red.coords));
            out.set("coboundary", json!(red.coords.iter().all(num::Zero::is_zero)));
            out.set("representative", cochain_json(&red.representative));
            out.set("correction", cochain_json(&red.correction));
            report(out)
        }
        Command::Deform(DeformCmd::Check { algebra, cochain }) => {
            let g: TwoTermAlgebra = load(algebra)?;
            let c: Cochain2File = load(cochain)?;
            let p = PolyStructure::new(g, c.cochain, c.theta2)
                .map_err(|e| input_err(cochain.display().to_string(), e.to_string()))?;
            let v = check_generates(&p)?;
            let mut out = Report::new(&name, if v.generates() { Verdict::Pass } else { Verdict::Fail });
            out.add_coefficients(&v.failures);
            out.set("cocycle_ok", json!(v.cocycle_ok));
            out.set("standalone_ok", json!(v.standalone_ok));
            let samples: Vec<Value> = (1..=3)
                .map(|l| json!({ "lambda": l, "passes": check_algebra(&p.specialize(&rat(l))).map(|r| r.passed()).unwrap_or(false) }))
                .collect();
            out.set("samples", Value::Array(samples));
            report(out)
        }
        Command::Nijenhuis(NijenhuisCmd::Check { algebra, candidate }) => {
            let g: TwoTermAlgebra = load(algebra)?;
            let n: NijenhuisCandidate = load(candidate)?;
            shape_check(candidate, n.check_shapes(&g))?;
            crate::error::require("algebra", &check_algebra(&g)?)?;
            let r = check_nijenhuis(&g, &n)?;
            let mut out = Report::from_check(&name, &r);
            if r.passed() {
                let p = nijenhuis_deformation(&g, &n)?;
                out.set("trivializing", json!(check_trivializing(&p, &n)?.passed()));
            }
            report(out)
        }
        Command::Nijenhuis(NijenhuisCmd::Apply { algebra, candidate }) => {
            let g: TwoTermAlgebra = load(algebra)?;
            let n: NijenhuisCandidate = load(candidate)?;
            shape_check(candidate, n.check_shapes(&g))?;
            let p = nijenhuis_deformation(&g, &n)?;
            raw(Cochain2File { cochain: p.first_order, theta2: p.second_order_l3 }.to_json())
        }
        Command::Ext(ExtCmd::Build { algebra, cochain, rep }) => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r = load_rep(&g, rep)?;
            let c: Cochain2 = load(cochain)?;
            shape_check(cochain, c.check_shapes(CochainDims::of(&g, &r)))?;
            raw(build_extension(&g, &r, &c)?.to_json())
        }
        Command::Ext(ExtCmd::Extract { extension, emit }) => {
            let e: Extension2 = load(extension)?;
            let rep = extract_representation(&e)?;
            let coc = extract_cocycle(&e)?;
            match emit {
                Some(ExtPart::Representation) => raw(rep.to_json()),
                Some(ExtPart::Cocycle) => raw(coc.to_json()),
                None => {
                    let mut out = Report::new(&name, Verdict::Pass);
                    out.set("representation", cochain_json(&rep));
                    out.set("cocycle", cochain_json(&coc));
                    report(out)
                }
            }
        }
        Command::Ext(ExtCmd::Equiv { first, second }) => {
            let e1: Extension2 = load(first)?;
            let e2: Extension2 = load(second)?;
            match check_equivalence(&e1, &e2)? {
                Equivalence::Equivalent { witness, map } => {
                    let mut out = Report::new(&name, Verdict::Equivalent);
                    out.set("witness", cochain_json(&witness));
                    out.set("map", cochain_json(&map));
                    report(out)
                }
                Equivalence::Inequivalent { rank_d1, rank_with_difference } => {
                    let mut out = Report::new(&name, Verdict::Inequivalent);
                    out.set("certificate", json!({ "rank_d1": rank_d1, "rank_with_difference": rank_with_difference }));
                    report(out)
                }
            }
        }
        Command::Xmod(x) => run_xmod(&name, x),
        Command::Endalg(EndalgCmd::Build { complex }) => {
            let v: TwoTermComplex = load(complex)?;
            raw(build_end_algebra(&v)?.algebra.to_json())
        }
        Command::Adjoint { algebra } => {
            let g: TwoTermAlgebra = load(algebra)?;
            raw(adjoint_representation(&g).to_json())
        }
        Command::Fixture { name } => raw(match name {
            FixtureName::FixZ => fixtures::fix_z().to_json(),
            FixtureName::FixU => fixtures::fix_u().to_json(),
            FixtureName::FixD => fixtures::fix_d().to_json(),
            FixtureName::FixL => fixtures::fix_l().to_json(),
            FixtureName::FixR22 => fixtures::fix_r22().to_json(),
            FixtureName::FixX => fixtures::fix_x().to_json(),
            FixtureName::FixXF => fixtures::fix_x_f().to_json(),
        }),
        Command::Random { what, seed } => run_random(what, *seed).map(Output::Raw),
    }
}

fn run_check(name: &str, k: &CheckCmd) -> Result<Report> {
    let r = match k {
        CheckCmd::Algebra { file } => check_algebra(&load::<TwoTermAlgebra>(file)?)?,
        CheckCmd::Rep { algebra, rep } => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r: Representation2 = load(rep)?;
            shape_check(rep, r.check_shapes(&g))?;
            crate::error::require("algebra", &check_algebra(&g)?)?;
            check_representation(&g, &r)?
        }
        CheckCmd::Xmod { file } => check_crossed_module(&load::<CrossedModule>(file)?)?,
        CheckCmd::XmodRep { xmod, rep } => {
            let x: CrossedModule = load(xmod)?;
            let r: XModRepresentation = load(rep)?;
            shape_check(rep, r.check_shapes(&x))?;
            check_xmod_representation(&x, &r)?
        }
        CheckCmd::Hom { src, tgt, hom } => {
            let (g, t): (TwoTermAlgebra, TwoTermAlgebra) = (load(src)?, load(tgt)?);
            let h: Homomorphism2 = load(hom)?;
            let shapes = [g.dim0(), t.dim0(), g.dim1(), t.dim1()];
            let got = [h.f0.shape()[0], h.f0.out_dim(), h.f1.shape()[0], h.f1.out_dim()];
            if shapes != got {
                return Err(input_err(
                    hom.display().to_string(),
                    format!("dims {got:?} do not match the algebras {shapes:?}"),
                ));
            }
            crate::error::require("source algebra", &check_algebra(&g)?)?;
            crate::error::require("target algebra", &check_algebra(&t)?)?;
            check_homomorphism(&g, &t, &h)?
        }
        CheckCmd::Derivation { algebra, derivation } => {
            let g: TwoTermAlgebra = load(algebra)?;
            let d: HomotopyDerivation = load(derivation)?;
            if d.d0.shape()[0] != g.dim0() || d.d1.shape()[0] != g.dim1() {
                return Err(input_err(derivation.display().to_string(), "dims do not match the algebra"));
            }
            crate::error::require("algebra", &check_algebra(&g)?)?;
            check_derivation(&g, &d)?
        }
    };
    Ok(Report::from_check(name, &r))
}

fn run_xmod(name: &str, c: &XmodCmd) -> Result<Output> {
    let report = |r: Report| Ok(Output::Report(r));
    let raw = |s: String| Ok(Output::Raw(s));
    match c {
        XmodCmd::Cohomology { xmod, rep } => {
            let x: CrossedModule = load(xmod)?;
            let r = load_xrep(&x, rep)?;
            let h = xmod_h2(&x, &r)?;
            let mut out = Report::new(name, Verdict::Pass);
            out.set("dim_z2", json!(h.dim_z2()));
            out.set("dim_b2", json!(h.dim_b2()));
            out.set("dim_h2", json!(h.dim_h2()));
            out.set("representatives", Value::Array(h.representatives.iter().map(cochain_json).collect()));
            report(out)
        }
        XmodCmd::Cocycle(XCocycleCmd::Check { xmod, cochain, rep }) => {
            let x: CrossedModule = load(xmod)?;
            let r = load_xrep(&x, rep)?;
            let c: XCochain2 = load(cochain)?;
            shape_check(cochain, c.check_shapes(XCochainDims::of(&x, &r)))?;
            crate::error::require("crossed module", &check_crossed_module(&x)?)?;
            crate::error::require("representation", &check_xmod_representation(&x, &r)?)?;
            let res = xmod_d2_residual(&x, &r, &c)?;
            let mut out = Report::new(name, if res.is_zero() { Verdict::Pass } else { Verdict::NotCocycle });
            out.add_residual(&res);
            if res.is_zero() {
                out.set("coboundary", json!(xmod_is_coboundary(&x, &r, &c)?.is_some()));
            }
            report(out)
        }
        XmodCmd::Deform(XDeformCmd::Check { xmod, cochain }) => {
            let x: CrossedModule = load(xmod)?;
            let c: XCochain2 = load(cochain)?;
            let p = XPolyStructure::new(x, c).map_err(|e| input_err(cochain.display().to_string(), e.to_string()))?;
            let v = xmod_check_generates(&p)?;
            let mut out = Report::new(name, if v.generates() { Verdict::Pass } else { Verdict::Fail });
            out.add_coefficients(&v.failures);
            out.set("cocycle_ok", json!(v.cocycle_ok));
            out.set("standalone_ok", json!(v.standalone_ok));
            report(out)
        }
        XmodCmd::Nijenhuis(XNijenhuisCmd::Check { xmod, candidate }) => {
            let x: CrossedModule = load(xmod)?;
            let n: XNijenhuisCandidate = load(candidate)?;
            shape_check(candidate, n.check_shapes(&x))?;
            let r = xmod_check_nijenhuis(&x, &n)?;
            let mut out = Report::from_check(name, &r);
            if r.passed() {
                let p = xmod_nijenhuis_deformation(&x, &n)?;
                out.set("trivializing", json!(xmod_check_trivializing(&p, &n)?.passed()));
            }
            report(out)
        }
        XmodCmd::Nijenhuis(XNijenhuisCmd::Apply { xmod, candidate }) => {
            let x: CrossedModule = load(xmod)?;
            let n: XNijenhuisCandidate = load(candidate)?;
            shape_check(candidate, n.check_shapes(&x))?;
            raw(xmod_nijenhuis_deformation(&x, &n)?.first_order.to_json())
        }
        XmodCmd::Ext(XExtCmd::Build { xmod, cochain, rep }) => {
            let x: CrossedModule = load(xmod)?;
            let r = load_xrep(&x, rep)?;
            let c: XCochain2 = load(cochain)?;
            shape_check(cochain, c.check_shapes(XCochainDims::of(&x, &r)))?;
            raw(xmod_extension_build(&x, &r, &c)?.to_json())
        }
        XmodCmd::Ext(XExtCmd::Extract { extension, emit }) => {
            let e: XModExtension = load(extension)?;
            let (rep, coc) = xmod_extension_extract(&e)?;
            match emit {
                Some(ExtPart::Representation) => raw(rep.to_json()),
                Some(ExtPart::Cocycle) => raw(coc.to_json()),
                None => {
                    let mut out = Report::new(name, Verdict::Pass);
                    out.set("representation", cochain_json(&rep));
                    out.set("cocycle", cochain_json(&coc));
                    report(out)
                }
            }
        }
        XmodCmd::Ext(XExtCmd::Equiv { first, second }) => {
            let e1: XModExtension = load(first)?;
            let e2: XModExtension = load(second)?;
            match xmod_check_equivalence(&e1, &e2)? {
                XEquivalence::Equivalent { witness, f0, f1 } => {
                    let mut out = Report::new(name, Verdict::Equivalent);
                    out.set("witness", cochain_json(&witness));
                    out.set("map", json!({ "f0": tensor_json(&f0), "f1": tensor_json(&f1) }));
                    report(out)
                }
                XEquivalence::Inequivalent { rank_d1, rank_with_difference } => {
                    let mut out = Report::new(name, Verdict::Inequivalent);
                    out.set("certificate", json!({ "rank_d1": rank_d1, "rank_with_difference": rank_with_difference }));
                    report(out)
                }
            }
        }
        XmodCmd::ToStrict { xmod } => raw(to_strict(&load::<CrossedModule>(xmod)?)?.to_json()),
        XmodCmd::FromStrict { algebra } => raw(from_strict(&load::<TwoTermAlgebra>(algebra)?)?.to_json()),
        XmodCmd::Semidirect { xmod, rep } => {
            let x: CrossedModule = load(xmod)?;
            let r = load_xrep(&x, rep)?;
            raw(semidirect_product(&x, &r)?.to_json())
        }
        XmodCmd::Adjoint { xmod } => raw(xmod_adjoint(&load::<CrossedModule>(xmod)?).to_json()),
    }
}

fn run_random(what: &RandomCmd, seed: u64) -> Result<String> {
    let mut rng = random::rng(seed);
    match what {
        RandomCmd::Isomorph { algebra } => {
            let g: TwoTermAlgebra = load(algebra)?;
            crate::error::require("algebra", &check_algebra(&g)?)?;
            Ok(random::isomorph(&mut rng, &g)?.0.to_json())
        }
        RandomCmd::Cochain2 { algebra, rep, density } => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r = load_rep(&g, rep)?;
            check_density(*density)?;
            Ok(random::cochain2(&mut rng, CochainDims::of(&g, &r), *density).to_json())
        }
        RandomCmd::Cocycle { algebra, rep } => {
            let g: TwoTermAlgebra = load(algebra)?;
            let r = load_rep(&g, rep)?;
            Ok(random::cocycle(&mut rng, &second_cohomology(&g, &r)?).to_json())
        }
        RandomCmd::XmodCochain { xmod, rep, density } => {
            let x: CrossedModule = load(xmod)?;
            let r = load_xrep(&x, rep)?;
            check_density(*density)?;
            Ok(random::xcochain2(&mut rng, XCochainDims::of(&x, &r), *density).to_json())
        }
        RandomCmd::XmodCocycle { xmod, rep } => {
            let x: CrossedModule = load(xmod)?;
            let r = load_xrep(&x, rep)?;
            Ok(random::xcocycle(&mut rng, &xmod_h2(&x, &r)?).to_json())
        }
    }
}

fn check_density(d: f64) -> Result<()> {
    if (0.0..=1.0).contains(&d) {
        Ok(())
    } else {
        Err(input_err("--density", format!("{d} is not in [0, 1]")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_then_check() {
        let dir = std::env::temp_dir().join(format!("assoc2-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let out = run(["assoc2", "fixture", "fix_u"]);
        assert_eq!(out.code, 0);
        let path = dir.join("u.json");
        std::fs::write(&path, &out.stdout).unwrap();
        let p = path.to_str().unwrap();
        let r = run(["assoc2", "check", "algebra", p]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "check algebra: PASS\n"));
        let r = run(["assoc2", "--format", "json", "cohomology", p]);
        assert_eq!(r.code, 0);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["verdict"], "pass");
        let r = run(["assoc2", "check", "algebra", dir.join("missing.json").to_str().unwrap()]);
        assert_eq!(r.code, 2);
        assert!(r.stdout.is_empty() && r.stderr.contains("missing.json"));
    }
}
