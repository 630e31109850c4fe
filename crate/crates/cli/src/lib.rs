//! Command-line front end for the `shirshov-core` engine.
//!
//! [`run`] parses an argument vector, dispatches to the engine and returns
//! the exit code together with the text to print. Exit codes: 0 success or
//! positive verdict, 1 negative verdict, 2 usage error, 3 parse error,
//! 4 budget exceeded.

pub mod error;
pub mod expr;
pub mod format;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use shirshov_core::constructions::{self, EmbedSpec, Example, ProductOrder, StructureTable};
use shirshov_core::gsbasis::{CompletionBudget, GsReport};
use shirshov_core::invariants::{self, LcsVerdict};
use shirshov_core::oracle::{self, Membership};
use shirshov_core::{FieldSpec, GsBasis, LieElement, Presentation, Word};

pub use error::CliError;
pub use expr::parse_expression;
pub use format::{parse_presentation, print_basis, print_presentation};

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub code: i32,
    /// what the binary prints on stdout: the human text, or the JSON
    /// document when `--json` is given
    pub stdout: String,
    pub stderr: String,
    pub document: Option<Value>,
}

#[derive(Parser, Debug)]
#[command(name = "gs", version, about = "Gröbner–Shirshov bases for finitely presented Lie algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Degree bound for compositions, completion and enumeration
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: usize,
    /// Largest free degree of brackets generated by the oracle and lcs spans
    #[arg(long, global = true, default_value_t = 8)]
    lift_bound: usize,
    /// Largest relator set completion may build before giving up
    #[arg(long, global = true, default_value_t = 400)]
    max_relators: usize,
    /// Seed for sampling commands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit a machine-readable JSON document
    #[arg(long, global = true)]
    json: bool,
    /// Write the resulting presentation to this file
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check compositions of the (interreduced) relators
    Check { file: PathBuf },
    /// Complete the relators to a Gröbner–Shirshov basis
    Complete { file: PathBuf },
    /// Normal form of an expression
    Nf {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Ideal membership of an expression
    Member {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Quotient dimensions per degree
    Hilbert {
        file: PathBuf,
        /// Count with the brute-force oracle instead of irreducible words
        #[arg(long)]
        oracle: bool,
    },
    /// Irreducible words up to the degree bound
    BasisWords { file: PathBuf },
    /// Basis words commuting with the minimal letter
    Center {
        file: PathBuf,
        #[arg(long)]
        letter: Option<String>,
    },
    /// H1 and H2 ranks of an overlap-free presentation
    Homology { file: PathBuf },
    /// Membership in the n-th lower central term
    Lcs {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        n: usize,
    },
    /// Bounded residual nilpotence check of a Rips-type presentation
    RnCheck { file: PathBuf },
    /// Sampled check of the insertion lemma on an embedding presentation
    LemmaL1 {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Build a presentation from others
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Print a named fixture
    Example {
        /// V, Gamma, wi, S2, sl2, heisenberg or filiform4
        name: String,
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Quotient (or ideal) dimensions by brute-force linear algebra
    OracleDims {
        file: PathBuf,
        #[arg(long)]
        ideal: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    Rips {
        file: PathBuf,
    },
    Sq {
        file: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// A and B are files of structure-constant relators `x_i x_j - (linear)`
    Embed {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        n: usize,
    },
    Htilde {
        file: PathBuf,
    },
    FreeProduct {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::FirstBelow)]
        order: Order,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    FirstBelow,
    SecondBelow,
}

/// Human text, JSON document and verdict code of a successful command.
struct Outcome {
    code: i32,
    text: String,
    doc: Value,
}

impl Outcome {
    fn ok(text: String, doc: Value) -> Self {
        Outcome { code: 0, text, doc }
    }

    fn verdict(positive: bool, text: String, doc: Value) -> Self {
        Outcome {
            code: if positive { 0 } else { 1 },
            text,
            doc,
        }
    }
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return CommandResult {
                code,
                stdout: if code == 0 { rendered.clone() } else { String::new() },
                stderr: if code == 0 { String::new() } else { rendered },
                document: None,
            };
        }
    };
    let json = cli.global.json;
    match dispatch(&cli) {
        Ok(out) => {
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&out.doc).expect("serializable");
                s.push('\n');
                s
            } else {
                out.text
            };
            CommandResult {
                code: out.code,
                stdout,
                stderr: String::new(),
                document: Some(out.doc),
            }
        }
        Err(e) => {
            let doc = json!({ "error": e.to_string(), "exit_code": e.exit_code() });
            CommandResult {
                code: e.exit_code(),
                stdout: if json {
                    format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
                } else {
                    String::new()
                },
                stderr: format!("error: {e}\n"),
                document: Some(doc),
            }
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Presentation, CliError> {
    Ok(parse_presentation(&read(path)?)?.0)
}

fn load_basis(path: &Path, degree: usize, global: &Global) -> Result<GsBasis, CliError> {
    let budget = CompletionBudget {
        max_relators: global.max_relators,
        ..CompletionBudget::default()
    };
    Ok(GsBasis::complete_with(&load(path)?, degree, budget)?)
}

fn words(g: &GsBasis, ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| g.alphabet().format_word(w.letters())).collect()
}

fn bound_json(d: usize) -> Value {
    if d == usize::MAX {
        json!("all")
    } else {
        json!(d)
    }
}

fn basis_doc(g: &GsBasis) -> Value {
    json!({
        "field": g.field().to_string(),
        "generators": g.alphabet().names(),
        "relators": g.relators().iter().map(|r| r.to_string_with(g.alphabet())).collect::<Vec<_>>(),
        "metadata": g.presentation().metadata(),
        "certification": {
            "checked_degree": bound_json(g.checked_degree()),
            "overlap_free": g.is_overlap_free(),
            "certified": g.is_certified(),
        },
    })
}

/// Writes the basis to `-o` when given; otherwise returns it as text.
fn emit_basis(global: &Global, command: &str, g: &GsBasis) -> Result<Outcome, CliError> {
    let text = print_basis(g);
    let doc = json!({ "command": command, "presentation": basis_doc(g) });
    match &global.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display()), doc))
        }
        None => Ok(Outcome::ok(text, doc)),
    }
}

fn report_doc(g: &GsBasis, report: &GsReport, bound: usize) -> Value {
    let a = g.alphabet();
    json!({
        "command": "check",
        "verdict": report.solvable,
        "certified": report.certified,
        "overlap_free": report.overlap_free,
        "degree_bound": bound,
        "checked": report.checked,
        "relators": g.relators().len(),
        "unchecked": report.unchecked.iter().map(|(i, j, w)| json!({
            "left": i, "right": j, "ambiguity": a.format_word(w.letters()),
        })).collect::<Vec<_>>(),
        "failures": report.failures.iter().map(|f| json!({
            "left": f.left,
            "right": f.right,
            "ambiguity": a.format_word(f.ambiguity.letters()),
            "normal_form": f.normal_form.to_string_with(a),
        })).collect::<Vec<_>>(),
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let d = g.max_degree;
    match &cli.command {
        Command::Check { file } => {
            let p = load(file)?;
            let (basis, report) = GsBasis::check(&p, d)?;
            let verdict = if report.certified {
                "certified".to_string()
            } else if report.solvable {
                format!("certified up to degree {d}")
            } else {
                "not a Gröbner–Shirshov basis".to_string()
            };
            let mut text = format!(
                "verdict: {verdict}\noverlap_free: {}\nchecked compositions: {}\nunchecked compositions: {}\n",
                report.overlap_free,
                report.checked,
                report.unchecked.len()
            );
            for f in &report.failures {
                text.push_str(&format!(
                    "composition at {}: {}\n",
                    basis.alphabet().format_word(f.ambiguity.letters()),
                    f.normal_form.to_string_with(basis.alphabet())
                ));
            }
            Ok(Outcome::verdict(report.solvable, text, report_doc(&basis, &report, d)))
        }
        Command::Complete { file } => {
            let basis = load_basis(file, d, g)?;
            emit_basis(g, "complete", &basis)
        }
        Command::Nf { file, expr } => {
            let basis = load_basis(file, d, g)?;
            let f = parse_expression(expr, basis.alphabet(), basis.field())?;
            let nf = basis.reduce(&f);
            let s = nf.to_string_with(basis.alphabet());
            let canonical = basis.certified_up_to(f.degree());
            Ok(Outcome::ok(
                format!("{s}\n"),
                json!({
                    "command": "nf", "input": expr, "normal_form": s,
                    "degree_bound": d, "canonical": canonical,
                }),
            ))
        }
        Command::Member { file, expr } => {
            let basis = load_basis(file, d, g)?;
            let f = parse_expression(expr, basis.alphabet(), basis.field())?;
            if basis.certified_up_to(f.degree()) {
                let member = basis.reduce(&f).is_zero();
                let word = if member { "member" } else { "non-member" };
                Ok(Outcome::verdict(
                    member,
                    format!("{word}\n"),
                    json!({ "command": "member", "verdict": word, "method": "normal-form", "degree_bound": d }),
                ))
            } else {
                let m = oracle::is_member(&f, basis.presentation(), g.lift_bound)?;
                let word = match m {
                    Membership::Member => "member",
                    Membership::NotProven => "not-proven",
                };
                Ok(Outcome::verdict(
                    m == Membership::Member,
                    format!("{word} (lift bound {})\n", g.lift_bound),
                    json!({ "command": "member", "verdict": word, "method": "oracle", "lift_bound": g.lift_bound }),
                ))
            }
        }
        Command::Hilbert { file, oracle: use_oracle } => {
            if *use_oracle {
                let t = oracle::quotient_dims(&load(file)?, d, g.lift_bound)?;
                let text = format!(
                    "{}\n(oracle, lift bound {}, stabilized {})\n",
                    join(&t.dims),
                    g.lift_bound,
                    t.stabilized
                );
                return Ok(Outcome::ok(
                    text,
                    json!({
                        "command": "hilbert", "source": "oracle", "dims": t.dims,
                        "degree_bound": d, "lift_bound": g.lift_bound, "stabilized": t.stabilized,
                    }),
                ));
            }
            let basis = load_basis(file, d, g)?;
            let t = invariants::hilbert(&basis, d)?;
            Ok(Outcome::ok(
                format!("{}\n", join(&t.dims)),
                json!({ "command": "hilbert", "source": "irreducible-count", "dims": t.dims, "degree_bound": d }),
            ))
        }
        Command::BasisWords { file } => {
            let basis = load_basis(file, d, g)?;
            let ws = words(&basis, &basis.irreducible_words(d)?);
            let text: String = ws.iter().map(|w| format!("{w}\n")).collect();
            Ok(Outcome::ok(
                text,
                json!({ "command": "basis-words", "degree_bound": d, "words": ws }),
            ))
        }
        Command::Center { file, letter } => {
            let basis = load_basis(file, d + 1, g)?;
            let x = match letter {
                Some(name) => basis.presentation().letter(name)?,
                None => 0,
            };
            let offenders = words(&basis, &invariants::center_truncated(&basis, x, d)?);
            let text = if offenders.is_empty() {
                format!("no basis word of degree <= {d} commutes with {}\n", basis.alphabet().name(x))
            } else {
                offenders.iter().map(|w| format!("{w}\n")).collect()
            };
            Ok(Outcome::verdict(
                offenders.is_empty(),
                text,
                json!({
                    "command": "center", "letter": basis.alphabet().name(x),
                    "degree_bound": d, "offending": offenders,
                }),
            ))
        }
        Command::Homology { file } => {
            let basis = load_basis(file, d, g)?;
            let h = invariants::homology_ranks(&basis)?;
            Ok(Outcome::ok(
                format!("h1 = {}\nh2 = {}\n", h.h1, h.h2),
                json!({
                    "command": "homology", "h1": h.h1, "h2": h.h2,
                    "matrix": [h.rows, h.cols], "rank": h.rank, "overlap_free": h.overlap_free,
                }),
            ))
        }
        Command::Lcs { file, expr, n } => {
            let basis = load_basis(file, d.max(g.lift_bound), g)?;
            let f = parse_expression(expr, basis.alphabet(), basis.field())?;
            let v = invariants::lcs_membership(&basis, &f, *n, g.lift_bound)?;
            let word = verdict_name(v);
            Ok(Outcome::verdict(
                v == LcsVerdict::Member,
                format!("{word} (lift bound {})\n", g.lift_bound),
                json!({ "command": "lcs", "verdict": word, "n": n, "lift_bound": g.lift_bound }),
            ))
        }
        Command::RnCheck { file } => {
            let basis = load_basis(file, d.max(g.lift_bound), g)?;
            let r = invariants::residual_nilpotence_check(&basis, d, g.lift_bound)?;
            let mut text = format!("C = {}\n", r.c);
            let mut entries = Vec::new();
            for e in &r.entries {
                let w = basis.alphabet().format_word(e.word.letters());
                text.push_str(&format!("{w}\tn = {}\t{}\n", e.n, verdict_name(e.verdict)));
                entries.push(json!({ "word": w, "length": e.length, "n": e.n, "verdict": verdict_name(e.verdict) }));
            }
            Ok(Outcome::verdict(
                r.all_non_member(),
                text,
                json!({
                    "command": "rn-check", "C": r.c, "degree_bound": d,
                    "lift_bound": r.lift_bound, "entries": entries,
                }),
            ))
        }
        Command::LemmaL1 { file, samples } => {
            let basis = load_basis(file, d, g)?;
            let r = invariants::lemma_l1_check(&basis, *samples, g.seed)?;
            let a = basis.alphabet();
            let mut text = format!("{}/{} passed (seed {})\n", r.passes, r.samples, r.seed);
            for f in &r.failures {
                text.push_str(&format!(
                    "u = {}, j = {}: expected {}, got {}\n",
                    a.format_word(f.u.letters()),
                    a.name(f.j),
                    a.format_word(f.expected.letters()),
                    f.got.as_ref().map_or("0".to_string(), |w| a.format_word(w.letters()))
                ));
            }
            Ok(Outcome::verdict(
                r.failures.is_empty(),
                text,
                json!({ "command": "lemma-l1", "samples": r.samples, "passes": r.passes, "seed": r.seed }),
            ))
        }
        Command::Construct { which } => {
            let basis = match which {
                Construct::Rips { file } => constructions::rips(&load(file)?)?,
                Construct::Sq { file, q, m, n } => constructions::sq_embedding(&load_basis(file, d, g)?, *q, *m, *n)?,
                Construct::Embed { a, b, h, n } => {
                    let a = StructureTable::from_presentation(&load(a)?)?;
                    let b = StructureTable::from_presentation(&load(b)?)?;
                    let h = load_basis(h, d, g)?;
                    constructions::embed_construction(&EmbedSpec { a, b, h, n_h: *n })?
                }
                Construct::Htilde { file } => constructions::h_tilde(&load_basis(file, d, g)?)?,
                Construct::FreeProduct { first, second, order } => {
                    let order = match order {
                        Order::FirstBelow => ProductOrder::FirstBelow,
                        Order::SecondBelow => ProductOrder::SecondBelow,
                    };
                    constructions::free_product(&load_basis(first, d, g)?, &load_basis(second, d, g)?, order)?
                }
            };
            emit_basis(g, "construct", &basis)
        }
        Command::Example { name, index, field } => {
            let field: FieldSpec = field.parse().map_err(|e: shirshov_core::Error| CliError::Parse(e.to_string()))?;
            let which: Example = match (name.to_ascii_lowercase().as_str(), index) {
                ("wi", Some(i)) => Example::Wi(*i),
                ("wi", None) => return Err(CliError::Usage("example wi needs --index".into())),
                _ => name.parse()?,
            };
            let p = constructions::example(which, field)?;
            let text = print_presentation(&p);
            let doc = json!({ "command": "example", "name": name, "presentation": text });
            match &g.output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    Ok(Outcome::ok(format!("wrote {}\n", path.display()), doc))
                }
                None => Ok(Outcome::ok(text, doc)),
            }
        }
        Command::OracleDims { file, ideal } => {
            let p = load(file)?;
            let t = if *ideal {
                oracle::ideal_dims(&p, d, g.lift_bound)?
            } else {
                oracle::quotient_dims(&p, d, g.lift_bound)?
            };
            let kind = if *ideal { "ideal" } else { "quotient" };
            Ok(Outcome::ok(
                format!("{}\n({kind}, lift bound {}, stabilized {})\n", join(&t.dims), g.lift_bound, t.stabilized),
                json!({
                    "command": "oracle-dims", "kind": kind, "dims": t.dims,
                    "degree_bound": d, "lift_bound": g.lift_bound, "stabilized": t.stabilized,
                }),
            ))
        }
    }
}

fn verdict_name(v: LcsVerdict) -> &'static str {
    match v {
        LcsVerdict::Member => "member",
        LcsVerdict::NotProven => "not-proven",
        LcsVerdict::NonMemberAtBound => "non-member-at-bound",
    }
}

fn join(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Parses an expression against a presentation's alphabet and field.
pub fn element(p: &Presentation, text: &str) -> Result<LieElement, CliError> {
    parse_expression(text, p.alphabet(), p.field())
}
