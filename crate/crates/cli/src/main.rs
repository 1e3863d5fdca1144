use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nacomp::completion::{complete, extend, is_complete};
use nacomp::enumerate::{InstanceBudget, EXHAUSTIVE_BOUND};
use nacomp::format::{self, Document, NamedMap};
use nacomp::uniform::{choice_of_filter, filter_converges, is_intersection_closed, minimal_cauchy_filters};
use nacomp::verify::{self, Suite};
use nacomp::{zeta_closure, Error, NaSpace, PointSet};

#[derive(Parser)]
#[command(name = "nacomp", version, about = "Completion of finite non-Archimedean spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report T0, completeness and intersection-closedness.
    Check { file: PathBuf, name: String },
    /// Zeta-closure of a subset, with a witness pair for every excluded point.
    Closure {
        file: PathBuf,
        name: String,
        /// Comma-separated point labels.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Size and new points of the completion.
    Complete {
        file: PathBuf,
        name: String,
        /// Also print the completion and `j` in the file format.
        #[arg(long)]
        emit: bool,
    },
    /// Extend a map into a complete space over the completion of its domain.
    Extend { file: PathBuf, map: String },
    /// Minimal Cauchy filters of an intersection-closed T0 space.
    Cauchy { file: PathBuf, name: String },
    /// Run the property suites on enumerated and sampled instances.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        exhaustive_to: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// Domain error or counterexample: exit 1.
    Domain(String),
    /// Counterexample already printed.
    Silent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn space<'a>(doc: &'a Document, name: &str) -> Result<&'a NaSpace, Failure> {
    doc.space(name)
        .ok_or_else(|| Failure::Usage(format!("no space named `{name}`")))
}

fn show_set(space: &NaSpace, set: &PointSet) -> String {
    let names: Vec<&str> = set.iter().map(|x| space.names()[x].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn check(doc: &Document, name: &str) -> Outcome {
    let x = space(doc, name)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "space {name}: {}, {}",
        plural(x.size(), "point"),
        plural(x.generators().len(), "generator")
    );
    match x.t0_violation() {
        None => {
            let _ = writeln!(out, "t0: true");
            let c = is_complete(x)?;
            match c.witness {
                None => {
                    let _ = writeln!(out, "complete: true");
                }
                Some(f) => {
                    let _ = writeln!(out, "complete: false (no limit: {})", f.describe(x));
                }
            }
        }
        Some((a, b)) => {
            let _ = writeln!(
                out,
                "t0: false ({} and {} are never separated)",
                x.names()[a],
                x.names()[b]
            );
            let _ = writeln!(out, "complete: undefined (not T0)");
        }
    }
    if is_intersection_closed(x) {
        let _ = writeln!(out, "intersection-closed: true");
    } else {
        let gens = x.generators();
        let (g, h) = (0..gens.len())
            .flat_map(|i| (i + 1..gens.len()).map(move |j| (i, j)))
            .find(|&(i, j)| {
                !x.contains(&gens[i].meet(&gens[j]).expect("same carrier"))
                    .unwrap_or(true)
            })
            .map(|(i, j)| (&gens[i], &gens[j]))
            .expect("a generator pair witnesses failure");
        let _ = writeln!(
            out,
            "intersection-closed: false (meet of {} and {} is missing)",
            g.display_with(x.names()),
            h.display_with(x.names())
        );
    }
    Ok(out)
}

fn parse_set(x: &NaSpace, text: &str) -> Result<PointSet, Failure> {
    let mut set = PointSet::empty(x.size());
    for label in text.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        let i = x
            .carrier()
            .index_of(label)
            .ok_or_else(|| Failure::Usage(format!("unknown point `{label}`")))?;
        set.insert(i);
    }
    Ok(set)
}

fn closure(doc: &Document, name: &str, set: &str) -> Outcome {
    let x = space(doc, name)?;
    let m = parse_set(x, set)?;
    let report = zeta_closure(x, &m)?;
    let status = match (report.is_closed(), report.is_dense()) {
        (true, true) => "closed, dense",
        (true, false) => "closed",
        (false, true) => "dense",
        (false, false) => "not closed",
    };
    let mut out = format!("closure: {} ({status})\n", show_set(x, &report.closure));
    for w in &report.witnesses {
        let _ = writeln!(
            out,
            "excluded {}: {} and {} agree on the set",
            x.names()[w.point],
            w.first.display_with(x.names()),
            w.second.display_with(x.names())
        );
    }
    Ok(out)
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn hat_name(doc: &Document, name: &str) -> String {
    let mut hat = format!("{name}_hat");
    while doc.space(&hat).is_some() || doc.map(&hat).is_some() {
        hat.push('_');
    }
    hat
}

fn complete_cmd(doc: &Document, name: &str, emit: bool) -> Outcome {
    let x = space(doc, name)?;
    let c = complete(x)?;
    let mut out = format!(
        "completion has {}; {}\n",
        plural(c.hat_space.size(), "point"),
        plural(c.new_points.len(), "new point")
    );
    for &i in &c.new_points {
        let _ = writeln!(out, "new point {}: {}", c.hat_space.names()[i], c.points[i].describe(x));
    }
    if emit {
        let hat = hat_name(doc, name);
        let mut completed = Document::default();
        completed.add_space(name, x.clone())?;
        completed.add_space(&hat, c.hat_space.clone())?;
        let j = if name == "j" { "j_" } else { "j" };
        completed.add_map(j, name, &hat, c.j.clone())?;
        out.push('\n');
        out.push_str(&format::emit(&completed));
    }
    Ok(out)
}

fn extend_cmd(doc: &Document, map: &str) -> Outcome {
    let NamedMap {
        name,
        domain,
        codomain,
        map: u,
    } = doc
        .map(map)
        .ok_or_else(|| Failure::Usage(format!("no map named `{map}`")))?;
    let c = complete(u.domain())?;
    let hat_u = extend(&c, u)?;
    let hat = hat_name(doc, domain);
    let mut out = Document::default();
    out.add_space(&hat, c.hat_space.clone())?;
    if codomain != &hat {
        out.add_space(codomain, u.codomain().clone())?;
    }
    out.add_map(&format!("{name}_hat"), &hat, codomain, hat_u)?;
    Ok(format::emit(&out))
}

fn cauchy_cmd(doc: &Document, name: &str) -> Outcome {
    let x = space(doc, name)?;
    let filters = minimal_cauchy_filters(x)?;
    let mut out = format!("{}\n", plural(filters.len(), "minimal Cauchy filter"));
    for filter in &filters {
        let f = choice_of_filter(x, filter)?;
        let mut limit = None;
        for p in 0..x.size() {
            if filter_converges(x, filter, p)? {
                limit = Some(p);
            }
        }
        let limit = limit.map_or("no limit".to_string(), |p| format!("converges to {}", x.names()[p]));
        let _ = writeln!(
            out,
            "filter on {} <-> choice {}; {limit}",
            show_set(x, &filter.generator),
            f.describe(x)
        );
    }
    Ok(out)
}

fn verify_cmd(max_size: usize, exhaustive_to: usize, samples: usize, seed: u64, names: &[String]) -> Outcome {
    if exhaustive_to > EXHAUSTIVE_BOUND {
        return Err(Failure::Usage(format!("--exhaustive-to is at most {EXHAUSTIVE_BOUND}")));
    }
    let budget =
        InstanceBudget::new(max_size, exhaustive_to, samples, seed).map_err(|e| Failure::Usage(e.to_string()))?;
    let suites = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|n| Suite::from_name(n).ok_or_else(|| Failure::Usage(format!("unknown suite `{n}`"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    let mut failed = 0;
    for &suite in &suites {
        let report = verify::run_suite(suite, &budget)?;
        println!("{}", report.summary());
        if let Some(c) = &report.failure {
            failed += 1;
            println!("counterexample: {}", c.message);
            print!("{}", c.to_nas());
        }
    }
    if failed > 0 {
        println!("{failed} of {} failed", plural(suites.len(), "suite"));
        return Err(Failure::Silent);
    }
    Ok(format!("all {} passed\n", plural(suites.len(), "suite")))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file, name } => check(&load(&file)?, &name),
        Command::Closure { file, name, set } => closure(&load(&file)?, &name, &set),
        Command::Complete { file, name, emit } => complete_cmd(&load(&file)?, &name, emit),
        Command::Extend { file, map } => extend_cmd(&load(&file)?, &map),
        Command::Cauchy { file, name } => cauchy_cmd(&load(&file)?, &name),
        Command::Verify {
            max_size,
            exhaustive_to,
            samples,
            seed,
            suite,
        } => verify_cmd(max_size, exhaustive_to, samples, seed, &suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Silent) => ExitCode::from(1),
    }
}
