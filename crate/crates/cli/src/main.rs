//! `opsplit`: command-line front end for the identity engine.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use opsplit::concrete::{derive, Construction, LinOp, StructConstAlgebra, Verdict};
use opsplit::exactla::{Field, FieldChoice, Fp101, Rationals};
use opsplit::freealg::{
    enumerate_assoc_types, enumerate_monomials, Context, OpAlphabet, Polynomial,
};
use opsplit::identmod::{
    find_new_identities, is_consequence, lifting_generators, lifting_module, minimize_generators,
    parse_rule_file, parse_system_file, symmetric_span, system_to_text, ExpansionRule,
    IdentitySystem,
};
use opsplit::splitkit::{disuccessor_system, rename_system};
use opsplit::{repro, varieties, Error};

#[derive(Parser)]
#[command(
    name = "opsplit",
    version,
    about = "Polynomial identities for algebras with several operations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct FieldArg {
    /// p101, rational or both
    #[arg(long, default_value = "p101")]
    field: FieldChoice,
}

#[derive(Subcommand)]
enum Command {
    /// List association types of a degree.
    Types {
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Comma-separated operation names.
        #[arg(long, default_value = "mul")]
        ops: String,
    },
    /// Count (or list) multilinear monomials of a degree.
    Monomials {
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value = "mul")]
        ops: String,
        #[arg(long)]
        list: bool,
    },
    /// Apply an expansion rule to a polynomial.
    Expand {
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Lifting module of a system in a degree.
    Lift {
        #[arg(long)]
        system: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        field: FieldArg,
        /// Write the lifting generators as a system file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identities satisfied by the expansion of a system.
    Newids {
        #[arg(long)]
        system: String,
        #[arg(long)]
        rule: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        field: FieldArg,
        /// Write the minimal generators as a system file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal generating subset of a system's identities in one degree.
    Minimize {
        #[arg(long)]
        system: String,
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether a polynomial (optionally expanded) follows from a system.
    Consequence {
        #[arg(long)]
        system: String,
        #[arg(long)]
        rule: Option<String>,
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Disuccessor of a system.
    Split {
        system: String,
        /// Keep only identities of this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Compare the split module with a catalog system.
        #[arg(long)]
        check: Option<String>,
        /// Renames applied before the comparison, as `old=new,...`.
        #[arg(long)]
        rename: Option<String>,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Browse the built-in systems and rules.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check a structure-constant algebra against a system.
    Verify {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        system: String,
        /// Operator file; repeat for constructions taking two operators.
        #[arg(long)]
        rb: Vec<PathBuf>,
        #[arg(long)]
        construct: Option<Construction>,
        /// Write the derived algebra.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reproduction table.
    Repro {
        /// Run only checks whose name contains this text, or a criterion number.
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Dump { name: String },
}

#[derive(clap::Args, Clone)]
struct PolyInput {
    /// Polynomial file in the term-per-line format.
    #[arg(long, conflicts_with = "expr")]
    poly: Option<PathBuf>,
    /// Inline expression such as `pm(x,y,z,t)`.
    expr: Option<String>,
}

/// A command's printed report and whether its verdict passed.
struct Report {
    text: String,
    pass: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, pass: true }
    }
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn alphabet(ops: &str) -> Res<OpAlphabet> {
    Ok(OpAlphabet::new(
        &ops.split(',').map(str::trim).collect::<Vec<_>>(),
    )?)
}

/// A catalog name or a path to a system file.
fn load_system(s: &str) -> Res<IdentitySystem> {
    if Path::new(s).is_file() {
        Ok(parse_system_file(&read(Path::new(s))?)?)
    } else {
        Ok(varieties::get_system(s)?)
    }
}

fn load_rule(s: &str) -> Res<ExpansionRule> {
    if Path::new(s).is_file() {
        Ok(parse_rule_file(&read(Path::new(s))?)?)
    } else {
        Ok(varieties::get_rule(s)?)
    }
}

/// The catalog context for an alphabet, so shorthands like `pm` parse.
fn context_for(a: &OpAlphabet) -> Context {
    [
        varieties::bracket_context(),
        varieties::product_context(),
        varieties::dendriform_context(),
        varieties::quadri_context(),
        varieties::triangle_context(),
    ]
    .into_iter()
    .find(|c| c.alphabet() == a)
    .unwrap_or_else(|| Context::new(a))
}

fn load_poly(input: &PolyInput, a: &OpAlphabet) -> Res<Polynomial> {
    match (&input.poly, &input.expr) {
        (Some(p), _) => Ok(opsplit::freealg::text::parse_polynomial(&read(p)?, a)?),
        (None, Some(e)) => Ok(Polynomial::from_tree_poly(&context_for(a).parse(e)?)?),
        (None, None) => Err(Failure::Usage(
            "give a polynomial with --poly FILE or as an expression".into(),
        )),
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Res<()> {
    if let Some(p) = out {
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn default_degree(system: &IdentitySystem, degree: Option<usize>) -> usize {
    degree.unwrap_or_else(|| system.max_degree())
}

fn tag(choice: FieldChoice, name: &str) -> String {
    if choice == FieldChoice::Both {
        format!("[{name}]\n")
    } else {
        String::new()
    }
}

/// Runs `$body` with `$f` bound to each field selected by `$choice` and
/// concatenates the reports.
macro_rules! per_field {
    ($choice:expr, |$f:ident| $body:expr) => {{
        let choice: FieldChoice = $choice;
        let mut text = String::new();
        let mut pass = true;
        if choice != FieldChoice::Rational {
            let $f = &Fp101::new();
            let r: Report = $body?;
            text += &tag(choice, "p101");
            text += &r.text;
            pass &= r.pass;
        }
        if choice != FieldChoice::P101 {
            let $f = &Rationals;
            let r: Report = $body?;
            text += &tag(choice, "rational");
            text += &r.text;
            pass &= r.pass;
        }
        Ok::<Report, Failure>(Report { text, pass })
    }};
}

fn lift<F: Field>(f: &F, system: &IdentitySystem, d: usize) -> Res<Report> {
    let gens = lifting_generators(system, d)?;
    let m = lifting_module(f, system, d)?;
    Ok(Report::ok(format!(
        "generators {}\nlifting dim {}\nambient {}\n",
        gens.len(),
        m.dim(),
        m.ambient()
    )))
}

fn newids<F: Field>(
    f: &F,
    system: &IdentitySystem,
    rule: &ExpansionRule,
    d: usize,
) -> Res<(Report, Vec<Polynomial>)> {
    let r = find_new_identities(f, system, rule, d)?;
    let mut s = String::new();
    let _ = writeln!(s, "degree {}", r.degree);
    let _ = writeln!(s, "generators {}", r.generator_count);
    let _ = writeln!(s, "block {}x{}", r.block_rows, r.block_cols);
    let _ = writeln!(s, "lifting dim {}", r.lifting_dim);
    let _ = writeln!(s, "expansion rank {}", r.expansion_rank);
    let _ = writeln!(s, "identity dim {}", r.dim());
    let _ = writeln!(s, "minimal generators {}", r.minimal.len());
    for (i, p) in r.minimal.iter().enumerate() {
        let _ = writeln!(s, "identity {}", i + 1);
        s += &p.to_text();
    }
    Ok((Report::ok(s), r.minimal))
}

fn minimize<F: Field>(f: &F, system: &IdentitySystem, d: usize) -> Res<(Report, Vec<Polynomial>)> {
    let ids = system.of_degree(d);
    let context = if d > 1 {
        // identities already implied from lower degrees
        let lower = IdentitySystem::new(
            system.name(),
            system.alphabet(),
            system
                .identities()
                .iter()
                .filter(|p| p.degree() < d)
                .cloned()
                .collect(),
        )?;
        lifting_module(f, &lower, d)?
    } else {
        symmetric_span(f, system.alphabet(), d, &[])?
    };
    let kept = minimize_generators(f, &ids, &context)?;
    Ok((
        Report::ok(format!(
            "degree {d}: {} of {} identities kept\n",
            kept.len(),
            ids.len()
        )),
        kept,
    ))
}

fn consequence<F: Field>(
    f: &F,
    p: &Polynomial,
    system: &IdentitySystem,
    rule: Option<&ExpansionRule>,
) -> Res<Report> {
    let c = is_consequence(f, p, system, rule)?;
    let text = if c {
        "consequence\n"
    } else {
        "not a consequence\n"
    };
    Ok(Report {
        text: text.into(),
        pass: c,
    })
}

fn module_equal<F: Field>(
    f: &F,
    a: &IdentitySystem,
    b: &IdentitySystem,
    degrees: &[usize],
) -> Res<Report> {
    let mut s = String::new();
    let mut pass = true;
    for &d in degrees {
        let x = symmetric_span(f, a.alphabet(), d, &a.of_degree(d))?;
        let y = symmetric_span(f, b.alphabet(), d, &b.of_degree(d))?;
        let eq = x.equal(&y)?;
        pass &= eq;
        let _ = writeln!(
            s,
            "degree {d}: dims {} and {}, {}",
            x.dim(),
            y.dim(),
            if eq { "equal" } else { "different" }
        );
    }
    Ok(Report { text: s, pass })
}

fn parse_renames(s: &str) -> Res<Vec<(String, String)>> {
    s.split(',')
        .map(|pair| {
            pair.split_once('=')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .ok_or_else(|| Failure::Usage(format!("bad rename `{pair}`, expected old=new")))
        })
        .collect()
}

fn fmt_verdict(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "PASS\n".into(),
        Verdict::Fail {
            identity,
            tuple,
            value,
        } => {
            let tuple: Vec<String> = tuple.iter().map(|i| format!("e{}", i + 1)).collect();
            let value: Vec<String> = value.iter().map(|c| c.to_string()).collect();
            format!(
                "FAIL identity {} on ({}) gives [{}]\n",
                identity + 1,
                tuple.join(", "),
                value.join(", ")
            )
        }
    }
}

fn run(cli: Cli) -> Res<Report> {
    match cli.command {
        Command::Types { degree, ops } => {
            let a = alphabet(&ops)?;
            let types = enumerate_assoc_types(degree, &a)?;
            let mut s = format!("{} types\n", types.len());
            for t in &types {
                s += &t.render(&a);
                s.push('\n');
            }
            Ok(Report::ok(s))
        }
        Command::Monomials { degree, ops, list } => {
            let a = alphabet(&ops)?;
            let ms = enumerate_monomials(degree, &a)?;
            let mut s = format!("{} monomials\n", ms.len());
            if list {
                for m in &ms {
                    let _ = writeln!(s, "{} {}", m.column(), m.to_tree(a.len()).render(&a));
                }
            }
            Ok(Report::ok(s))
        }
        Command::Expand { rule, input } => {
            let rule = load_rule(&rule)?;
            let p = load_poly(&input, rule.source())?;
            Ok(Report::ok(rule.expand(&p)?.to_text()))
        }
        Command::Lift {
            system,
            degree,
            field,
            out,
        } => {
            let sys = load_system(&system)?;
            let r = per_field!(field.field, |f| lift(f, &sys, degree))?;
            let gens = IdentitySystem::new(
                &format!("{}-lift{degree}", sys.name()),
                sys.alphabet(),
                lifting_generators(&sys, degree)?,
            )?;
            write_out(&out, &system_to_text(&gens))?;
            Ok(r)
        }
        Command::Newids {
            system,
            rule,
            degree,
            field,
            out,
        } => {
            let sys = load_system(&system)?;
            let rule = load_rule(&rule)?;
            let mut minimal = Vec::new();
            let r = per_field!(field.field, |f| newids(f, &sys, &rule, degree).map(
                |(r, m)| {
                    minimal = m;
                    r
                }
            ))?;
            let found = IdentitySystem::new(
                &format!("{}-{}", sys.name(), rule.name()),
                rule.source(),
                minimal,
            )?;
            write_out(&out, &system_to_text(&found))?;
            Ok(r)
        }
        Command::Minimize {
            system,
            degree,
            field,
            out,
        } => {
            let sys = load_system(&system)?;
            let d = default_degree(&sys, degree);
            let mut kept = Vec::new();
            let r = per_field!(field.field, |f| minimize(f, &sys, d).map(|(r, k)| {
                kept = k;
                r
            }))?;
            let mut s = r.text;
            let min = IdentitySystem::new(sys.name(), sys.alphabet(), kept)?;
            s += &system_to_text(&min);
            write_out(&out, &system_to_text(&min))?;
            Ok(Report::ok(s))
        }
        Command::Consequence {
            system,
            rule,
            input,
            field,
        } => {
            let sys = load_system(&system)?;
            let rule = rule.map(|r| load_rule(&r)).transpose()?;
            let a = rule.as_ref().map_or(sys.alphabet(), |r| r.source()).clone();
            let p = load_poly(&input, &a)?;
            per_field!(field.field, |f| consequence(f, &p, &sys, rule.as_ref()))
        }
        Command::Split {
            system,
            degree,
            check,
            rename,
            field,
            out,
        } => {
            let sys = load_system(&system)?;
            let mut split = disuccessor_system(&sys)?;
            if let Some(d) = degree {
                split = IdentitySystem::new(split.name(), split.alphabet(), split.of_degree(d))?;
            }
            let text = system_to_text(&split);
            write_out(&out, &text)?;
            let Some(check) = check else {
                return Ok(Report::ok(text));
            };
            let target = load_system(&check)?;
            let renames = rename
                .map(|r| parse_renames(&r))
                .transpose()?
                .unwrap_or_default();
            let pairs: Vec<(&str, &str)> = renames
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .collect();
            let renamed = rename_system(&split, target.alphabet(), &pairs, split.name())?;
            let mut degrees: Vec<usize> = renamed
                .identities()
                .iter()
                .map(Polynomial::degree)
                .collect();
            degrees.sort_unstable();
            degrees.dedup();
            per_field!(field.field, |f| module_equal(
                f, &renamed, &target, &degrees
            ))
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            let mut s = String::from("systems\n");
            for n in varieties::system_names() {
                let e = varieties::get_entry(n)?;
                let _ = writeln!(s, "  {n:<28} {}", e.note);
            }
            s += "rules\n";
            for n in varieties::rule_names() {
                let e = varieties::get_rule_entry(n)?;
                let _ = writeln!(s, "  {n:<28} {}", e.note);
            }
            Ok(Report::ok(s))
        }
        Command::Catalog {
            action: CatalogAction::Dump { name },
        } => {
            if varieties::system_names().contains(&name.as_str()) {
                Ok(Report::ok(system_to_text(&varieties::get_system(&name)?)))
            } else {
                Ok(Report::ok(varieties::get_rule(&name)?.to_text()))
            }
        }
        Command::Verify {
            algebra,
            system,
            rb,
            construct,
            out,
        } => {
            let mut a = StructConstAlgebra::from_text(&read(&algebra)?)?;
            let sys = load_system(&system)?;
            if let Some(c) = construct {
                let rs = rb
                    .iter()
                    .map(|p| Ok(LinOp::from_text(&read(p)?)?))
                    .collect::<Res<Vec<_>>>()?;
                a = derive(&a, c, &rs)?;
                write_out(&out, &a.to_text())?;
            } else if !rb.is_empty() {
                return Err(Failure::Usage("--rb needs --construct".into()));
            }
            let v = a.satisfies(&sys)?;
            Ok(Report {
                text: fmt_verdict(&v),
                pass: v.is_pass(),
            })
        }
        Command::Repro {
            only,
            field,
            timings,
            out,
        } => {
            let results = repro::run(field.field, only.as_deref());
            if results.is_empty() {
                return Err(Failure::Usage("no check matches --only".into()));
            }
            let text = repro::render(&results, timings);
            write_out(&out, &text)?;
            Ok(Report {
                text,
                pass: results.iter().all(|r| r.pass),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            print!("{}", r.text);
            if r.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
