use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cindep::criteria::{evaluate_all, gk_extend, support_graph};
use cindep::dist::{read_distribution, write_distribution, VariableSchema};
use cindep::families::{self, CommonCause, KirkupParams};
use cindep::info::{entropy_profile, info_diagram3};
use cindep::scalar::parse_rational;
use cindep::structures::{
    canonical_orbit_form, closure, meet_irreducibles, orbit_count, read_catalog, read_structure,
    satisfies_axiom, write_structure, Axiom, Rule,
};
use cindep::{CIStructure, Distribution, Profile, Rational, Units, Variable};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cindep", version, about = "Conditional independence implications for discrete distributions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy profile and three-variable information diagrams
    Info {
        file: PathBuf,
        /// Designated triple A,X,Y; repeatable
        #[arg(long, value_parser = triple)]
        roles: Vec<Triple>,
        #[arg(long, default_value = "nats")]
        units: Units,
    },
    /// Elementary CI structure of a distribution
    Ci {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Axiom verdicts for a structure or distribution file
    Axioms {
        file: PathBuf,
        /// Comma-separated axioms; all of them by default
        #[arg(long, value_delimiter = ',')]
        axiom: Vec<Axiom>,
    },
    /// Closure of a structure under inference rules
    Closure {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "semigraphoid")]
        rules: Vec<Rule>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Dual structure
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Append the Gács-Körner common variable of X and Y
    Gk {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value = "G")]
        name: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Full criterion report for the roles A,X,Y
    Criteria {
        file: PathBuf,
        #[arg(long, value_parser = triple)]
        roles: Triple,
        /// Auxiliary variable G for the conditional criteria
        #[arg(long)]
        aux: Option<String>,
    },
    /// Write a distribution from a parametric family
    Generate(GenerateArgs),
    /// Counts over a catalog of structures, one per line
    CatalogStats {
        file: PathBuf,
        /// Keep structures satisfying all of these axioms
        #[arg(long, value_delimiter = ',')]
        filter: Vec<Axiom>,
        #[arg(long)]
        orbits: bool,
        #[arg(long)]
        irreducibles: bool,
        /// Ground set size for bare statement lists
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// List families and their parameters
    #[arg(long)]
    list: bool,
    #[arg(short, long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    family: Option<Family>,
}

#[derive(Subcommand)]
enum Family {
    GroupSum {
        #[arg(long)]
        k: u32,
    },
    Kirkup {
        #[arg(long, value_parser = rational, default_value = "1/2")]
        alpha: Rational,
        #[arg(long, value_parser = rational, default_value = "1/2")]
        beta: Rational,
        #[arg(long, value_parser = rational, default_value = "1/2")]
        gamma: Rational,
        #[arg(long, value_parser = rational, default_value = "0")]
        delta: Rational,
        #[arg(long, value_parser = rational, default_value = "0")]
        epsilon: Rational,
    },
    IntersectionViolator {
        #[arg(long, default_value_t = 1)]
        variant: u8,
        #[arg(long, value_parser = rational, value_delimiter = ',', required = true)]
        masses: Vec<Rational>,
    },
    Tight {
        #[arg(long, value_parser = rational, default_value = "1/2")]
        x_bias: Rational,
        #[arg(long, value_parser = rational, default_value = "1/2")]
        a_bias: Rational,
    },
    NonGk,
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        cards: Vec<u32>,
        /// Variable names; X1, X2, .. by default
        #[arg(long, value_delimiter = ',')]
        names: Vec<String>,
        #[arg(long, default_value_t = 100)]
        bound: u64,
        #[arg(long)]
        sparse: bool,
    },
    CommonCause {
        #[arg(long)]
        input: PathBuf,
        /// JSON list of {"weight", "table"} rank-one terms
        #[arg(long)]
        supplied: Option<PathBuf>,
        #[arg(long, default_value = "C")]
        name: String,
    },
}

#[derive(Clone)]
struct Triple([String; 3]);

fn triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
    match <[String; 3]>::try_from(parts) {
        Ok(t) if t.iter().all(|p| !p.is_empty()) => Ok(Triple(t)),
        _ => Err(format!("expected three names A,X,Y, got '{s}'")),
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    /// exit 1
    Domain(String),
    /// exit 2
    Usage(String),
}

impl From<cindep::Error> for Failure {
    fn from(e: cindep::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_distribution(path: &Path) -> Result<Distribution, Failure> {
    let text = read_text(path)?;
    read_distribution(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

fn emit_json(value: &Value) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    emit(&text, None)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Info { file, roles, units } => info(&file, &roles, units),
        Command::Ci { file, out } => {
            let d = load_distribution(&file)?;
            let s = d.ci_structure();
            eprintln!("{} elementary statements hold", s.len());
            emit(&write_structure(&s), out.as_deref())
        }
        Command::Axioms { file, axiom } => axioms(&file, &axiom),
        Command::Closure { file, rules, out } => {
            let s = read_structure(&read_text(&file)?)?;
            let c = closure(&s, &rules)?;
            eprintln!("{} statements, {} added", c.len(), c.len() - s.len());
            emit(&write_structure(&c), out.as_deref())
        }
        Command::Dual { file, out } => {
            let s = read_structure(&read_text(&file)?)?;
            emit(&write_structure(&s.dual()), out.as_deref())
        }
        Command::Gk { file, x, y, name, out } => {
            let d = load_distribution(&file)?;
            let graph = support_graph(&d, &x, &y)?;
            let e = gk_extend(&d, &x, &y, &name)?;
            eprintln!("{} components", graph.component_count());
            emit(&write_distribution(&e), out.as_deref())
        }
        Command::Criteria { file, roles, aux } => criteria(&file, &roles, aux.as_deref()),
        Command::Generate(args) => generate(args),
        Command::CatalogStats { file, filter, orbits, irreducibles, n } => {
            catalog_stats(&file, &filter, orbits, irreducibles, n)
        }
    }
}

fn info(file: &Path, roles: &[Triple], units: Units) -> Outcome {
    let d = load_distribution(file)?;
    let p: Profile = entropy_profile(&d);
    let p = p.in_units(units);
    let mut report = p.to_json();
    let mut diagrams = Vec::new();
    for Triple([a, x, y]) in roles {
        let dia = info_diagram3(&p, a, x, y)?;
        eprintln!("({a}, {x}, {y}):\n{dia}");
        diagrams.push(json!({
            "roles": [a, x, y],
            "atoms": serde_json::to_value(dia).expect("diagram serializes"),
        }));
    }
    report["diagrams"] = Value::Array(diagrams);
    emit_json(&report)
}

fn axioms(file: &Path, selected: &[Axiom]) -> Outcome {
    let text = read_text(file)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", file.display())))?;
    let (s, labels): (CIStructure, Vec<String>) = if value.get("variables").is_some() {
        let d: Distribution = read_distribution(&text)?;
        (d.ci_structure(), d.schema().names().map(str::to_string).collect())
    } else {
        let s = read_structure(&text)?;
        let labels = (1..=s.ground_size()).map(|e| e.to_string()).collect();
        (s, labels)
    };
    let list: &[Axiom] = if selected.is_empty() { &Axiom::ALL } else { selected };
    let mut verdicts = Vec::new();
    for &ax in list {
        let v = satisfies_axiom(&s, ax);
        let witness = v.witness.map(|w| {
            json!({
                "rule": w.rule.name(),
                "instance": w.instance.render(&labels),
            })
        });
        match &witness {
            Some(w) => eprintln!("{ax}: false, witness {}", w["instance"].as_str().unwrap_or_default()),
            None => eprintln!("{ax}: true"),
        }
        verdicts.push(json!({"axiom": ax.name(), "holds": v.holds, "witness": witness}));
    }
    emit_json(&json!({ "n": s.ground_size(), "labels": labels, "verdicts": verdicts }))
}

fn criteria(file: &Path, roles: &Triple, aux: Option<&str>) -> Outcome {
    let d = load_distribution(file)?;
    let [a, x, y] = &roles.0;
    let report = evaluate_all(&d, a, x, y, aux)?;
    let i = &report.intersection;
    let c = &report.composition;
    eprintln!(
        "intersection: premises {}, conclusion {}\ncomposition: premises {}, conclusion {}",
        i.premises_hold, i.conclusion_holds, c.premises_hold, c.conclusion_holds
    );
    let unsound = report.unsound_entries();
    if !unsound.is_empty() {
        eprintln!("warning: criteria certified a failing conclusion: {}", unsound.join(", "));
    }
    emit_json(&serde_json::to_value(&report).expect("report serializes"))
}

fn generate(args: GenerateArgs) -> Outcome {
    if args.list {
        if args.family.is_some() {
            return Err(Failure::Usage("--list takes no family".into()));
        }
        let mut text = String::new();
        for (name, params) in families::CATALOG {
            text.push_str(&format!("{name} {params}\n").replace(" \n", "\n"));
        }
        return emit(&text, None);
    }
    let Some(family) = args.family else {
        return Err(Failure::Usage("generate needs a family or --list".into()));
    };
    let d = match family {
        Family::GroupSum { k } => families::group_sum_family(k)?,
        Family::Kirkup { alpha, beta, gamma, delta, epsilon } => {
            families::kirkup_family(&KirkupParams::new(alpha, beta, gamma, delta, epsilon))?
        }
        Family::IntersectionViolator { variant, masses } => {
            let free: [Rational; 4] = masses
                .try_into()
                .map_err(|_| Failure::Usage("--masses takes exactly four values".into()))?;
            families::intersection_violator(variant, free)?
        }
        Family::Tight { x_bias, a_bias } => families::tight_violation_family(x_bias, a_bias)?,
        Family::NonGk => families::non_gk_example(),
        Family::Random { seed, cards, names, bound, sparse } => {
            if !names.is_empty() && names.len() != cards.len() {
                return Err(Failure::Usage("--names and --cards differ in length".into()));
            }
            let vars = cards
                .iter()
                .enumerate()
                .map(|(k, &c)| {
                    let name = names.get(k).cloned().unwrap_or_else(|| format!("X{}", k + 1));
                    Variable::new(name, c)
                })
                .collect();
            let schema = VariableSchema::new(vars)?;
            if sparse {
                families::random_sparse_distribution(seed, &schema, bound)?
            } else {
                families::random_rational_distribution(seed, &schema, bound)?
            }
        }
        Family::CommonCause { input, supplied, name } => {
            let pair = load_distribution(&input)?;
            let strategy = match supplied {
                None => CommonCause::PerCell,
                Some(path) => CommonCause::Supplied(read_terms(&path)?),
            };
            families::common_cause_extension(&pair, &name, &strategy)?
        }
    };
    eprintln!("{} outcomes in the support", d.support_size());
    emit(&write_distribution(&d), args.out.as_deref())
}

/// `[{"weight": "1/2", "table": [["1/2", "1/2"], ["0", "0"]]}, ..]`
fn read_terms(path: &Path) -> Result<Vec<(Rational, Vec<Vec<Rational>>)>, Failure> {
    let bad = |what: &str| Failure::Domain(format!("{}: {what}", path.display()));
    let value: Value = serde_json::from_str(&read_text(path)?).map_err(|e| bad(&e.to_string()))?;
    let terms = value.as_array().ok_or_else(|| bad("expected a list of terms"))?;
    let number = |v: &Value| -> Result<Rational, Failure> {
        let s = v.as_str().ok_or_else(|| bad("masses must be strings"))?;
        Ok(parse_rational(s)?)
    };
    terms
        .iter()
        .map(|t| {
            let weight = number(t.get("weight").ok_or_else(|| bad("term without weight"))?)?;
            let rows = t
                .get("table")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term without table"))?;
            let table = rows
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("table rows must be lists"))?
                        .iter()
                        .map(number)
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((weight, table))
        })
        .collect()
}

fn catalog_stats(file: &Path, filter: &[Axiom], orbits: bool, irreducibles: bool, n: Option<usize>) -> Outcome {
    let family = read_catalog(&read_text(file)?, n)?;
    let total = family.len();
    let kept: Vec<CIStructure> = family
        .into_iter()
        .filter(|s| filter.iter().all(|&ax| satisfies_axiom(s, ax).holds))
        .collect();
    let mut report = json!({
        "structures": total,
        "filter": filter.iter().map(|a| a.name()).collect::<Vec<_>>(),
        "count": kept.len(),
    });
    eprintln!("{} of {} structures kept", kept.len(), total);
    if orbits {
        let k = orbit_count(&kept)?;
        eprintln!("{k} orbits");
        report["orbits"] = json!(k);
    }
    if irreducibles {
        report["irreducibles"] = match meet_irreducibles(&kept) {
            Ok(irr) => {
                let forms: std::collections::BTreeSet<CIStructure> = irr.iter().map(canonical_orbit_form).collect();
                eprintln!("{} meet-irreducible, {} orbits", irr.len(), forms.len());
                json!({"count": irr.len(), "orbits": forms.len()})
            }
            Err(e @ cindep::Error::NotMeetClosed(..)) => {
                eprintln!("{e}");
                json!({"error": e.to_string()})
            }
            Err(e) => return Err(e.into()),
        };
    }
    emit_json(&report)
}
