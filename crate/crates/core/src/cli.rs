//! Command-line front end.
//!
//! Exit statuses: 0 when every check passes, 1 when a check fails, 2 on
//! usage or parse errors, 3 when a budget or cap runs out. `--porcelain`
//! switches to line-oriented `key=value` output.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::classify::{self, group_order};
use crate::diagram::{parse_diagram, CoxeterDiagram};
use crate::error::Error;
use crate::lab::{self, LabOptions, DEFAULT_ELEMENT_CAP};
use crate::rigidity::rigidity_report;
use crate::twist::{self, TwistSpec};
use crate::words::{self, ElementOrder, GeneratorMap, Word, WordEngine, DEFAULT_BUDGET, DEFAULT_ORDER_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "coxrig", version, about = "Coxeter diagrams, word problem and reflection rigidity checks")]
pub struct Cli {
    /// Machine-readable key=value output.
    #[arg(long, global = true)]
    pub porcelain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArg {
    /// Maximum braid-class size explored by the word problem.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rigidity hypotheses: conditions (1)-(3), evenness, finiteness.
    Check { file: PathBuf },
    /// Irreducible components, types, orders and spherical subsets.
    Classify {
        file: PathBuf,
        /// Comma-separated vertex subset (default: all vertices).
        #[arg(long)]
        subset: Option<String>,
    },
    /// Reduced and canonical form of a word.
    Reduce {
        file: PathBuf,
        word: Vec<String>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Order of the element a word represents.
    Order {
        file: PathBuf,
        word: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Whether a word represents a reflection.
    IsReflection {
        file: PathBuf,
        word: Vec<String>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Conjugate B by the longest element of J.
    Twist {
        file: PathBuf,
        /// Comma-separated spherical separator.
        #[arg(long = "j")]
        j: String,
        /// Comma-separated side to conjugate; A is the complement.
        #[arg(long = "b")]
        b: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Certify a group isomorphism given by generator maps (`s -> word` lines).
    VerifyIso {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        fwd: PathBuf,
        #[arg(long)]
        back: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Brute-force experiments on a finite diagram.
    Lab {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
        #[arg(long = "max-size")]
        max_size: Option<usize>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// I2(2k) against I2(k) x A1 for odd k.
    Example1 {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Twist of the 2-3-2 path into the star.
    Example2 {
        #[command(flatten)]
        budget: BudgetArg,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Ordered key/value report rendered either as `key=value` or as aligned text.
#[derive(Default)]
struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    fn kv(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    fn diagram(&mut self, prefix: &str, d: &CoxeterDiagram) {
        self.kv(format!("{prefix}.vertices"), d.vertices().join(" "));
        for (i, j, m) in d.edges() {
            self.kv(format!("{prefix}.edge"), format!("{} {} {}", d.name(i), d.name(j), m));
        }
    }

    fn render(&self, porcelain: bool) -> String {
        let sep = if porcelain { "=" } else { ": " };
        self.entries
            .iter()
            .map(|(k, v)| format!("{k}{sep}{v}\n"))
            .collect()
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn code(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(e) if e.is_resource_limit() => EXIT_LIMIT,
            _ => EXIT_USAGE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Io(..) => "io",
            CliError::Domain(e) => match e {
                Error::BudgetExceeded(_) => "budget",
                Error::CapExceeded(_) => "cap",
                Error::SearchLimit(_) => "search-limit",
                Error::Syntax { .. }
                | Error::DuplicateVertex(_)
                | Error::EmptyVertexName
                | Error::LabelTooSmall { .. }
                | Error::BadLabel(_)
                | Error::ConflictingEdge { .. }
                | Error::Loop(_)
                | Error::TooManyVertices(..) => "parse",
                Error::UnknownVertex(_) => "unknown-vertex",
                _ => "invalid",
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<CoxeterDiagram, CliError> {
    Ok(parse_diagram(&read(path)?)?)
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

fn word_arg(parts: &[String]) -> Word {
    Word::parse(&parts.join(" "))
}

fn subsets(sets: &[classify::SphericalSubset]) -> String {
    sets.iter()
        .map(|s| format!("{{{}}}", s.vertices.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(command: &Command, out: &mut Report) -> Result<i32, CliError> {
    match command {
        Command::Check { file } => {
            let d = load(file)?;
            let r = rigidity_report(&d)?;
            out.kv("condition1", verdict(r.condition1.holds));
            for (s, t) in &r.condition1.violations {
                out.kv("condition1.violation", format!("{s},{t}"));
            }
            out.kv("condition2", verdict(r.condition2.holds));
            for (s, t, u) in &r.condition2.violations {
                out.kv("condition2.violation", format!("{s},{t},{u}"));
            }
            out.kv("condition3", verdict(r.condition3.holds));
            for ((s, t), c) in &r.condition3.counts {
                out.kv("condition3.count", format!("{s},{t} {c}"));
            }
            for ((s, t), sets) in &r.condition3.witnesses {
                let listed: Vec<String> = sets.iter().map(|v| format!("{{{}}}", v.join(","))).collect();
                out.kv("condition3.meeting", format!("{s},{t} {}", listed.join(" ")));
            }
            out.kv("even", r.is_even);
            out.kv("finite", r.is_finite);
            let theorems: Vec<String> = r.applicable.iter().map(ToString::to_string).collect();
            out.kv("applicable", if theorems.is_empty() { "none".into() } else { theorems.join(",") });
            Ok(code(r.conditions_hold()))
        }
        Command::Classify { file, subset } => {
            let d = load(file)?;
            let names = match subset {
                Some(s) => split_list(s),
                None => d.vertices().to_vec(),
            };
            for comp in classify::irreducible_components(&d, &names)? {
                let ty = classify::classify_component(&d, &comp)?;
                out.kv(
                    "component",
                    format!("{{{}}} {}", comp.join(","), ty.map_or("infinite".into(), |t| t.to_string())),
                );
            }
            out.kv("spherical", classify::is_spherical(&d, &names)?);
            out.kv("order", classify::parabolic_order(&d, &names)?);
            if subset.is_none() {
                out.kv("spherical_subsets", subsets(&classify::spherical_subsets(&d)?));
                out.kv("maximal_spherical", subsets(&classify::maximal_spherical_subsets(&d)?));
            }
            Ok(EXIT_OK)
        }
        Command::Reduce { file, word, budget } => {
            let engine = WordEngine::with_budget(load(file)?, budget.budget);
            let w = word_arg(word);
            out.kv("reduced", engine.reduce(&w)?);
            out.kv("canonical", engine.canonical(&w)?);
            out.kv("length", engine.length(&w)?);
            Ok(EXIT_OK)
        }
        Command::Order { file, word, cap, budget } => {
            let engine = WordEngine::with_budget(load(file)?, budget.budget);
            match engine.element_order(&word_arg(word), *cap)? {
                ElementOrder::Finite(n) => {
                    out.kv("order", n);
                    Ok(EXIT_OK)
                }
                ElementOrder::ExceedsCap(c) => {
                    out.kv("order", format!("exceeds-cap {c}"));
                    Ok(EXIT_LIMIT)
                }
            }
        }
        Command::IsReflection { file, word, budget } => {
            let engine = WordEngine::with_budget(load(file)?, budget.budget);
            let w = word_arg(word);
            let yes = engine.is_reflection(&w)?;
            out.kv("canonical", engine.canonical(&w)?);
            out.kv("reflection", yes);
            Ok(code(yes))
        }
        Command::Twist { file, j, b, budget } => {
            let d = load(file)?;
            let spec = TwistSpec::with_complement(&d, &split_list(j), &split_list(b))?;
            let t = twist::apply_twist(&d, &spec)?;
            out.kv("longest", &t.longest);
            out.kv("sigma", &t.sigma);
            out.diagram("twisted", &t.twisted);
            for (s, w) in t.inverse.images() {
                out.kv("image", format!("{s} = {w}"));
            }
            let ok = words::verify_isomorphism(&t.substitution, &t.inverse, budget.budget)?;
            out.kv("isomorphism", if ok { "verified" } else { "failed" });
            Ok(code(ok))
        }
        Command::VerifyIso { source, target, fwd, back, budget } => {
            let d1 = load(source)?;
            let d2 = load(target)?;
            let f = GeneratorMap::parse(d1.clone(), d2.clone(), &read(fwd)?)?;
            let g = GeneratorMap::parse(d2, d1, &read(back)?)?;
            let fh = words::check_homomorphism(&f, budget.budget)?;
            let gh = words::check_homomorphism(&g, budget.budget)?;
            let iso = fh && gh && words::verify_isomorphism(&f, &g, budget.budget)?;
            out.kv("forward_homomorphism", fh);
            out.kv("backward_homomorphism", gh);
            out.kv("isomorphism", if iso { "verified" } else { "failed" });
            Ok(code(iso))
        }
        Command::Lab { file, cap, max_size, budget } => {
            let d = load(file)?;
            let opts = LabOptions {
                cap: *cap,
                max_size: *max_size,
                budget: budget.budget,
            };
            let r = lab::run_lab(&d, opts)?;
            out.kv("order", r.order);
            out.kv("formula_order", r.engine.formula_order);
            out.kv("laws", r.laws_hold);
            out.kv("pair_orders_match", r.engine.pair_orders_match);
            out.kv("reflection_test_agrees", r.engine.reflection_test_agrees);
            out.kv("reflections", r.reflection_count);
            out.kv("conjugacy_lemma", r.conjugacy_lemma);
            out.kv("generating_sets", r.records.len());
            for (i, rec) in r.records.iter().enumerate() {
                let types = classify::maximal_spherical_subsets(&rec.induced)
                    .map(|m| m.iter().map(|s| s.type_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                out.kv(
                    "record",
                    format!("{i} [{}] reflections={} type={types}", rec.induced.vertices().join(" "), rec.reflections.len()),
                );
            }
            for c in &r.rigidity.classes {
                let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
                out.kv(
                    "reflection_class",
                    format!("reflections={} records={} isomorphic={}", c.reflection_count, members.join(","), c.pairwise_isomorphic),
                );
            }
            out.kv("reflection_rigidity", r.rigidity.passes());
            out.kv("size_lemma", r.size_lemma);
            out.kv("max_spherical_correspondence", r.correspondence.iter().all(|c| c.is_ok()));
            match &r.main_theorem {
                None => out.kv("main_theorem", "hypotheses-fail"),
                Some(rows) => {
                    for (i, transfer, psi) in rows {
                        let psi = match psi {
                            Ok(p) => p.to_string(),
                            Err(e) => format!("error {e}"),
                        };
                        out.kv("psi", format!("record={i} transfer={transfer} map={psi}"));
                    }
                    out.kv("main_theorem", "checked");
                }
            }
            out.kv("passed", r.passed());
            Ok(code(r.passed()))
        }
        Command::Example1 { k, cap } => {
            let r = lab::compare_dihedral_presentations(*k, *cap)?;
            out.kv("k", r.k);
            out.kv("order_left", r.order_left);
            out.kv("order_right", r.order_right);
            match &r.isomorphism {
                Some(images) => {
                    let shown: Vec<String> = images.iter().map(|(s, w)| format!("{s}->{}", w.letters().join("."))).collect();
                    out.kv("isomorphism", shown.join(" "));
                }
                None => out.kv("isomorphism", "none"),
            }
            out.kv("isomorphisms", r.isomorphism_count);
            out.kv("reflections_left", r.reflections_left);
            out.kv("reflections_right", r.reflections_right);
            out.kv("reflection_compatible_isomorphisms", r.reflection_compatible);
            out.kv("passed", r.passed());
            Ok(code(r.passed()))
        }
        Command::Example2 { budget } => {
            let demo = twist::twist_demo(budget.budget)?;
            out.diagram("source", &demo.source);
            out.diagram("twisted", &demo.result.twisted);
            for (s, w) in demo.result.inverse.images() {
                out.kv("image", format!("{s} = {w}"));
            }
            out.kv(
                "matches_star",
                demo.matches_expected.as_ref().map_or("no".to_string(), |m| m.to_string()),
            );
            out.kv("isomorphism", if demo.isomorphism_verified { "verified" } else { "failed" });
            out.kv("diagrams_isomorphic", demo.diagrams_isomorphic);
            let star_order = group_order(&demo.expected);
            out.kv("group_order", star_order);
            out.kv("passed", demo.passed());
            Ok(code(demo.passed()))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                let first = text.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error=usage reason={first}\n{text}"),
                }
            };
        }
    };
    let mut report = Report::default();
    match execute(&cli.command, &mut report) {
        Ok(code) => Outcome {
            code,
            stdout: report.render(cli.porcelain),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: report.render(cli.porcelain),
            stderr: format!("error={} reason={}\n", e.kind(), e),
        },
    }
}
