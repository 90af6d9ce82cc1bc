use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use colalg::analysis::{centroid_space, search_operators, structure_subspaces, SearchConfig, DEFAULT_SEARCH_BUDGET};
use colalg::audit::{run_audit, AuditOptions};
use colalg::axioms::{check_bimodule, check_identity_with, check_operator_with, check_representation, CheckOptions};
use colalg::constructions::{bimodule_to_representation, run_recipe, Params, Recipe};
use colalg::corpus::generate_corpus;
use colalg::io::{parse_document, serialize_document, Document};
use colalg::{AxiomReport, Error, Identity, LinearMap, Predicate, Scalar, Variant};

#[derive(Parser)]
#[command(
    name = "colalg",
    version,
    about = "Exact checks and constructions for graded algebras given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and run the grading and bicharacter checks.
    Validate { file: PathBuf },
    /// Check an identity exhaustively on basis tuples.
    Check {
        file: PathBuf,
        #[arg(long)]
        identity: String,
        #[arg(long)]
        variant: Option<String>,
    },
    /// Check a named map of the document against an operator predicate.
    Operator {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        weight: Option<String>,
        /// Operation the predicate refers to.
        #[arg(long)]
        op: Option<String>,
    },
    /// Run a construction and write its output.
    Construct {
        #[arg(long)]
        recipe: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        #[arg(long = "in", value_name = "FILE", required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Skip re-checking the output's claims.
        #[arg(long)]
        no_verify: bool,
    },
    /// Centers, Leibniz kernel or centroid of an algebra.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        what: What,
    },
    /// Enumerate all even maps over GF(p) satisfying a predicate.
    Search {
        file: PathBuf,
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u128,
        #[arg(long)]
        op: Option<String>,
        /// Print at most this many maps.
        #[arg(long)]
        limit: Option<usize>,
        /// Allow p = 2.
        #[arg(long)]
        allow_char2: bool,
    },
    /// Run every construction on the seeded corpus and report the verdicts.
    Audit {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Add per-row wall-clock times to the text report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Centers,
    Kernel,
    Centroid2,
    Centroid3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// What a command produced: text for stdout and whether a violation was found.
struct Outcome {
    text: String,
    violation: bool,
}

fn read(path: &PathBuf) -> colalg::Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    parse_document(&text)
}

fn write(path: &PathBuf, contents: &str) -> colalg::Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn render_report(title: &str, r: &AxiomReport) -> String {
    format!("{title}: {r}")
}

fn render_map(m: &LinearMap) -> String {
    let entries: Vec<String> = m.entries().iter().map(|(r, c, x)| format!("({r},{c})={x}")).collect();
    format!("{{{}}}", entries.join(", "))
}

fn weight(w: &Option<String>) -> colalg::Result<Option<Scalar>> {
    w.as_deref().map(str::parse).transpose()
}

fn run(cmd: Command) -> colalg::Result<Outcome> {
    let mut out = String::new();
    let mut violation = false;
    match cmd {
        Command::Validate { file } => {
            let doc = read(&file)?;
            let a = doc.algebra();
            let _ = writeln!(
                out,
                "ok: dimension {} over {}, operations [{}]",
                a.dim(),
                a.field,
                a.ops.keys().cloned().collect::<Vec<_>>().join(", ")
            );
            if let Document::Bimodule(b) = &doc {
                let _ = writeln!(out, "module of dimension {}", b.module_dim());
            }
        }
        Command::Check {
            file,
            identity,
            variant,
        } => {
            let doc = read(&file)?;
            let id = Identity::parse(&identity)?;
            let mut opts = CheckOptions::default();
            if let Some(v) = variant {
                opts.variant = Variant::parse(&v)?;
            } else if let Some(v) = doc.algebra().variant {
                opts.variant = v;
            }
            let report = if id.is_module_kind() {
                let b = doc.bimodule()?;
                if id == Identity::Representation3 {
                    check_representation(&bimodule_to_representation(b)?, &opts)?
                } else {
                    check_bimodule(b, id, &opts)?
                }
            } else {
                check_identity_with(doc.algebra(), id, &opts)?
            };
            violation = !report.passed();
            out.push_str(&render_report(id.as_str(), &report));
        }
        Command::Operator {
            file,
            map,
            predicate,
            weight: w,
            op,
        } => {
            let doc = read(&file)?;
            let a = doc.algebra();
            let pred = Predicate::parse(&predicate)?;
            let report = check_operator_with(
                a,
                a.map(&map)?,
                pred,
                weight(&w)?.as_ref(),
                op.as_deref(),
                &CheckOptions::default(),
            )?;
            violation = !report.passed();
            out.push_str(&render_report(pred.as_str(), &report));
        }
        Command::Construct {
            recipe,
            params,
            inputs,
            out: dest,
            no_verify,
        } => {
            let recipe = Recipe::parse(&recipe)?;
            let params = Params::parse(&params)?;
            let docs = inputs.iter().map(read).collect::<colalg::Result<Vec<_>>>()?;
            let built = run_recipe(recipe, &docs, &params, !no_verify)?;
            write(&dest, &serialize_document(&built.output))?;
            let _ = writeln!(out, "wrote {}", dest.display());
            for (claim, r) in &built.reports {
                out.push_str(&render_report(claim, r));
            }
            violation = !built.passed();
        }
        Command::Analyze { file, what } => {
            let doc = read(&file)?;
            let a = doc.algebra();
            let labels = a.labels();
            match what {
                What::Centers | What::Kernel => {
                    let s = structure_subspaces(a)?;
                    if matches!(what, What::Centers) {
                        let _ = writeln!(out, "left center: {}", s.left_center.render(&labels));
                        let _ = writeln!(out, "right center: {}", s.right_center.render(&labels));
                        let _ = writeln!(out, "center: {}", s.center.render(&labels));
                    } else {
                        let _ = writeln!(out, "Leibniz kernel: {}", s.leibniz_kernel.render(&labels));
                    }
                }
                What::Centroid2 | What::Centroid3 => {
                    let arity = if matches!(what, What::Centroid2) { 2 } else { 3 };
                    let maps = centroid_space(a, arity)?;
                    let _ = writeln!(out, "centroid dimension {}", maps.len());
                    for m in &maps {
                        let _ = writeln!(out, "  {}", render_map(m));
                    }
                }
            }
        }
        Command::Search {
            file,
            predicate,
            prime,
            weight: w,
            budget,
            op,
            limit,
            allow_char2,
        } => {
            let doc = read(&file)?;
            let mut cfg = SearchConfig::new(prime, Predicate::parse(&predicate)?);
            cfg.weight = weight(&w)?;
            cfg.budget = budget;
            cfg.op = op;
            cfg.result_cap = limit;
            cfg.allow_p2 = allow_char2;
            let r = search_operators(doc.algebra(), &cfg)?;
            let _ = writeln!(out, "{} of {} maps satisfy {}", r.count, r.enumerated, cfg.predicate);
            for m in &r.maps {
                let _ = writeln!(out, "  {}", render_map(m));
            }
            if r.truncated {
                let _ = writeln!(out, "  ... {} more", r.count - r.maps.len() as u64);
            }
        }
        Command::Audit {
            seed,
            out: dest,
            format,
            timing,
        } => {
            let opts = AuditOptions {
                timing,
                ..Default::default()
            };
            let report = run_audit(&generate_corpus(seed), &opts);
            let text = match format {
                Format::Text => format!("audit seed {seed}\n{}", report.to_text()),
                Format::Machine => report.to_machine(),
            };
            violation = report.witness_count() > 0;
            match dest {
                Some(p) => {
                    write(&p, &text)?;
                    let _ = writeln!(out, "wrote {}", p.display());
                    let _ = writeln!(out, "{}", report.summary_line());
                }
                None => out = text,
            }
        }
    }
    Ok(Outcome { text: out, violation })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(o.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(if o.violation { 1 } else { 0 })
        }
        Err(e) => {
            let mut msg = format!("error: {e}\n");
            if let Some(r) = e.report() {
                msg.push_str(&r.to_string());
            }
            let _ = std::io::stderr().write_all(msg.as_bytes());
            ExitCode::from(2)
        }
    }
}
