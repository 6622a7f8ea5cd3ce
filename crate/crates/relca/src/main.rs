use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _};
use clap::{Parser, Subcommand, ValueEnum};

use relca::report::{EnumerationJson, FamilyJson, OracleJson};
use relca::{dot, rcf, render, tbox};
use relca_core::engine::{self, Family};
use relca_core::space::{enumerate_acceptable, DEFAULT_BUDGET};
use relca_core::{oracle, RelationalContextFamily};

#[derive(Parser)]
#[command(name = "relca", version, about = "Relational concept analysis")]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Semantics {
    Lfp,
    Gfp,
}

#[derive(clap::Args)]
struct Target {
    /// Relational context family in `.rcf` format.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Semantics::Lfp, conflicts_with = "solution")]
    semantics: Semantics,
    /// Use this solution file instead of a fixed point.
    #[arg(long)]
    solution: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Least fixed point: the family reached from the initial contexts.
    Lfp {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Greatest fixed point: the family reached from the full attribute language.
    Gfp {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// All acceptable families between the two fixed points, as JSON.
    Enumerate {
        file: PathBuf,
        #[arg(long, env = "RELCA_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        no_prune: bool,
    },
    /// Whether a solution file is acceptable. Exits with 1 when it is not.
    Check { file: PathBuf, solution: PathBuf },
    /// Graphviz rendering of the concept lattices.
    ExportDot {
        #[command(flatten)]
        target: Target,
        /// Only this context.
        #[arg(long)]
        context: Option<String>,
        /// Label nodes with introduced attributes and objects only.
        #[arg(long)]
        reduced: bool,
    },
    /// Description-logic axioms and assertions.
    ExportTbox {
        #[command(flatten)]
        target: Target,
    },
    /// Brute-force enumeration of the whole family space, as JSON.
    Oracle {
        file: PathBuf,
        #[arg(long, env = "RELCA_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

fn load(path: &Path) -> anyhow::Result<RelationalContextFamily> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc = rcf::parse_rcf(&text).with_context(|| format!("{}", path.display()))?;
    Ok(doc.to_family()?)
}

fn load_solution(path: &Path, family: &RelationalContextFamily) -> anyhow::Result<Family> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    rcf::parse_solution(&text, family).with_context(|| format!("{}", path.display()))
}

fn resolve(t: &Target) -> anyhow::Result<(RelationalContextFamily, Family)> {
    let r = load(&t.file)?;
    let f = match (&t.solution, t.semantics) {
        (Some(p), _) => load_solution(p, &r)?,
        (None, Semantics::Lfp) => engine::rca_lfp(&r)?,
        (None, Semantics::Gfp) => engine::rca_gfp(&r)?,
    };
    if !engine::is_acceptable(&f, &r) {
        eprintln!("warning: the family is not acceptable");
    }
    Ok((r, f))
}

fn fixed_point_text(f: &Family, r: &RelationalContextFamily) -> String {
    let mut s = rcf::write_solution(f, r, true);
    for x in 0..f.len() {
        let l = f.lattice(x);
        s.push_str(&format!("# lattice {} ({} concepts)\n", l.context().id(), l.len()));
        for c in l.concepts() {
            let intent: Vec<String> = c.intent.ones().map(|m| render::attribute_ascii(r, &l.context().attributes()[m])).collect();
            let name = render::concept_name(r, x, &c.extent);
            if intent.is_empty() {
                s.push_str(&format!("#   {name}:\n"));
            } else {
                s.push_str(&format!("#   {name}: {}\n", intent.join(", ")));
            }
        }
    }
    s
}

fn fixed_point(file: &Path, json: bool, lfp: bool) -> anyhow::Result<String> {
    let r = load(file)?;
    let f = if lfp { engine::rca_lfp(&r)? } else { engine::rca_gfp(&r)? };
    Ok(if json { serde_json::to_string_pretty(&FamilyJson::new(&f, &r, true))? + "\n" } else { fixed_point_text(&f, &r) })
}

fn check(file: &Path, solution: &Path) -> anyhow::Result<(String, bool)> {
    let r = load(file)?;
    let f = load_solution(solution, &r)?;
    let mut s = String::new();
    if !engine::is_well_formed(&f, &r) {
        s.push_str("not well-formed: some attribute names a non-concept\n");
    }
    for (x, a) in engine::missing_attributes(&f, &r) {
        s.push_str(&format!("not saturated: context {} lacks {}\n", r.contexts()[x].id(), render::ascii(&r, &a)));
    }
    for (x, a) in engine::unsupported_attributes(&f, &r) {
        let z = r.relations()[a.relation].codomain();
        let target = a.target.as_ref().map(|t| render::concept_name(&r, z, t)).unwrap_or_default();
        s.push_str(&format!(
            "not self-supported: context {} has {}, but {target} is not a concept of context {}\n",
            r.contexts()[x].id(),
            render::ascii(&r, &a),
            r.contexts()[z].id()
        ));
    }
    let ok = engine::is_acceptable(&f, &r);
    s.push_str(if ok { "acceptable\n" } else { "not acceptable\n" });
    Ok((s, ok))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let (text, ok) = match cli.command {
        Command::Lfp { file, json } => (fixed_point(&file, json, true)?, true),
        Command::Gfp { file, json } => (fixed_point(&file, json, false)?, true),
        Command::Enumerate { file, budget, no_prune } => {
            let r = load(&file)?;
            let report = enumerate_acceptable(&r, budget, !no_prune)?;
            (serde_json::to_string_pretty(&EnumerationJson::new(&report, &r))? + "\n", true)
        }
        Command::Check { file, solution } => check(&file, &solution)?,
        Command::ExportDot { target, context, reduced } => {
            let (r, f) = resolve(&target)?;
            let xs: Vec<usize> = match context {
                Some(id) => match r.context_index(&id) {
                    Some(x) => vec![x],
                    None => bail!("unknown context {id}"),
                },
                None => (0..r.len()).collect(),
            };
            (xs.into_iter().map(|x| dot::export_dot(&f, &r, x, reduced)).collect(), true)
        }
        Command::ExportTbox { target } => {
            let (r, f) = resolve(&target)?;
            (tbox::export_tbox(&f, &r).to_text(), true)
        }
        Command::Oracle { file, budget } => {
            let r = load(&file)?;
            let entries = oracle::oracle_enumerate(&r, budget)?;
            (serde_json::to_string_pretty(&OracleJson::new(&entries, &r))? + "\n", true)
        }
    };
    match &cli.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
