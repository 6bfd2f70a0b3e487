//! The `quiverspec` command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input or the question is rejected by
//! the mathematics (invalid quiver, undecided search), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::QuiverError;
use crate::explorer::{
    classify_two_maximal, cospectral_polynomials, enumerate_class, is_r_maximal, probe_conjecture,
    recognize_diagram, ClassLimits, Maximality, RadiusWitness, TwoMaximalVerdict,
};
use crate::json::big_list;
use crate::mutation::{mutate_seq, MutationSequence};
use crate::quiver::{parse_quiver, ValuedQuiver};
use crate::roots::parse_rational;
use crate::spectral::{
    bounds_report, cospectral, exchange_polynomial, exchange_spectrum, is_acyclic, radius_cmp,
    real_root_form, RadiusVerdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "quiverspec",
    version,
    about = "Spectra and mutation classes of valued cluster quivers"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Restrict every input to the full subquiver on these 1-based vertices.
    #[arg(long, global = true, value_name = "i,j,...")]
    vertices: Option<String>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Input {
    /// Quiver file, or `-` for standard input.
    file: PathBuf,
}

#[derive(Args, Debug)]
struct LimitsArg {
    /// Search limits, e.g. `max_quivers=1000,max_entry=8,max_depth=5`.
    #[arg(long, value_name = "k=v,...")]
    limits: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check the quiver and print its minimal symmetrizer.
    Validate(Input),
    /// Print the exchange matrix B and the adjacency matrices A and C.
    Matrix(Input),
    /// Apply a mutation sequence and print the resulting quiver file.
    Mutate {
        #[command(flatten)]
        input: Input,
        /// 1-based vertices, applied left to right.
        #[arg(long, value_name = "k1,k2,...")]
        seq: String,
    },
    /// Print the exchange polynomial.
    Charpoly(Input),
    /// Compare the exchange spectral radius with a rational threshold.
    Radius {
        #[command(flatten)]
        input: Input,
        #[arg(long = "r", value_name = "RATIONAL")]
        r: Option<String>,
    },
    /// Decide whether the quiver has no oriented cycles.
    Acyclic(Input),
    /// Decide whether two quivers have the same exchange polynomial.
    Cospectral { first: PathBuf, second: PathBuf },
    /// Print the bounds chain between exchange radius, adjacency radius and max degree.
    Bounds(Input),
    /// Enumerate the mutation class up to isomorphism.
    Mutclass {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: LimitsArg,
    },
    /// Decide whether every member of the class has radius at most r.
    Rmaximal {
        #[command(flatten)]
        input: Input,
        #[arg(long = "r", value_name = "RATIONAL", default_value = "2")]
        r: String,
        #[command(flatten)]
        limits: LimitsArg,
    },
    /// Decide 2-maximality and name the class.
    Classify2 {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: LimitsArg,
    },
    /// Recognize Dynkin and extended Dynkin trees.
    Diagram(Input),
    /// Group the mutation class by exchange polynomial.
    Partition {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: LimitsArg,
    },
    /// Look for cospectral members not joined by sink/source mutations.
    Probe {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: LimitsArg,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<QuiverError> for Failure {
    fn from(e: QuiverError) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// Text or JSON result plus the exit code to report with it.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&o.json).expect("serializable") + "\n"
            } else {
                o.text
            };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "quiverspec: {}", f.message);
            f.code
        }
    }
}

fn read_quiver(path: &Path, vertices: Option<&str>) -> Result<ValuedQuiver, Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let q = parse_quiver(&text).map_err(|e| Failure {
        code: EXIT_DOMAIN,
        message: format!("{}: {e}", path.display()),
    })?;
    q.validate()?;
    match vertices {
        None => Ok(q),
        Some(list) => {
            let seq: MutationSequence = list
                .parse()
                .map_err(|_| usage(format!("bad vertex list {list:?}")))?;
            Ok(q.full_subquiver(seq.steps())?)
        }
    }
}

fn parse_limits(arg: &LimitsArg) -> Result<ClassLimits, Failure> {
    match &arg.limits {
        None => Ok(ClassLimits::default()),
        Some(s) => s.parse().map_err(|e: QuiverError| usage(e.to_string())),
    }
}

fn parse_threshold(s: &str) -> Result<BigRational, Failure> {
    parse_rational(s).ok_or_else(|| usage(QuiverError::BadRational(s.to_string()).to_string()))
}

fn symbol(o: std::cmp::Ordering) -> &'static str {
    match o {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    }
}

/// `radius > 2 (≈2.2360680)`
fn verdict_text(v: &RadiusVerdict) -> String {
    format!(
        "radius {} {} (≈{:.7})",
        symbol(v.ordering),
        v.certificate.threshold,
        v.approx
    )
}

fn witness_json(w: &RadiusWitness) -> Value {
    json!({
        "word": w.word.one_based(),
        "key": w.key,
        "matrix": w.matrix.matrix(),
        "verdict": w.verdict,
    })
}

fn execute(cli: &Cli) -> Outcome {
    let vs = cli.vertices.as_deref();
    let load = |p: &Path| read_quiver(p, vs);
    match &cli.verb {
        Verb::Validate(i) => {
            let q = load(&i.file)?;
            let d = q.validate()?;
            let comps = q.connected_components();
            let show = |xs: Vec<String>| xs.join(", ");
            let text = format!(
                "valid: n = {}, {} arrow{}\nsymmetrizer: ({})\ncomponents: {}\n",
                q.order(),
                q.arrows().len(),
                if q.arrows().len() == 1 { "" } else { "s" },
                show(d.iter().map(ToString::to_string).collect()),
                show(
                    comps
                        .iter()
                        .map(|c| format!(
                            "{{{}}}",
                            show(c.iter().map(|v| (v + 1).to_string()).collect())
                        ))
                        .collect()
                ),
            );
            let one_based: Vec<Vec<usize>> = comps
                .iter()
                .map(|c| c.iter().map(|v| v + 1).collect())
                .collect();
            let mut j = q.to_json();
            j["symmetrizer"] = big_list(&d);
            j["components"] = json!(one_based);
            Ok(Output::ok(text, j))
        }
        Verb::Matrix(i) => {
            let q = load(&i.file)?;
            let b = q.exchange_matrix()?;
            let adj = b.adjacency();
            let text = format!("B\n{}A\n{}C\n{}", b.matrix(), adj.a, adj.c);
            Ok(Output::ok(
                text,
                json!({"b": b.matrix(), "a": adj.a, "c": adj.c, "symmetrizer": big_list(b.symmetrizer())}),
            ))
        }
        Verb::Mutate { input, seq } => {
            let q = load(&input.file)?;
            let seq: MutationSequence =
                seq.parse().map_err(|e: QuiverError| usage(e.to_string()))?;
            let m = mutate_seq(&q.exchange_matrix()?, &seq)?;
            let r = m.to_quiver();
            let mut j = r.to_json();
            j["matrix"] = json!(m.matrix());
            Ok(Output::ok(r.to_text(), j))
        }
        Verb::Charpoly(i) => {
            let q = load(&i.file)?;
            let f = exchange_polynomial(&q.exchange_matrix()?);
            let g = real_root_form(&f)?;
            Ok(Output::ok(
                format!("{f}\n"),
                json!({"exchange_polynomial": f.to_string(), "coefficients": f, "real_root_form": g}),
            ))
        }
        Verb::Radius { input, r } => {
            let q = load(&input.file)?;
            let b = q.exchange_matrix()?;
            let spectrum = exchange_spectrum(&b);
            match r {
                Some(r) => {
                    let v = radius_cmp(&q, &parse_threshold(r)?)?;
                    Ok(Output::ok(
                        format!("{}\n", verdict_text(&v)),
                        json!({"verdict": v, "spectrum": spectrum}),
                    ))
                }
                None => {
                    let approx = crate::spectral::radius_approx(&b);
                    Ok(Output::ok(
                        format!("radius ≈ {approx:.7}\n"),
                        json!({"approx": approx, "spectrum": spectrum}),
                    ))
                }
            }
        }
        Verb::Acyclic(i) => {
            let q = load(&i.file)?;
            let a = is_acyclic(&q)?;
            let text = if a { "acyclic\n" } else { "not acyclic\n" };
            Ok(Output::ok(text.to_string(), json!({"acyclic": a})))
        }
        Verb::Cospectral { first, second } => {
            let (p, q) = (load(first)?, load(second)?);
            let same = cospectral(&p, &q)?;
            let (f, g) = (
                exchange_polynomial(&p.exchange_matrix()?),
                exchange_polynomial(&q.exchange_matrix()?),
            );
            let text = if same {
                format!("cospectral: {f}\n")
            } else {
                format!("not cospectral: {f} vs {g}\n")
            };
            Ok(Output::ok(
                text,
                json!({"cospectral": same, "polynomials": [f.to_string(), g.to_string()]}),
            ))
        }
        Verb::Bounds(i) => {
            let q = load(&i.file)?;
            let r = bounds_report(&q)?;
            let mut text = format!(
                "λ ≈ {:.7} ≤ μ ≈ {:.7} ≤ h = {}\nλ {} h\n",
                r.lambda_approx,
                r.mu_approx,
                r.h,
                symbol(r.lambda_vs_h)
            );
            if let Some(w) = &r.regular_witness {
                let vs: Vec<String> = w.iter().map(|v| (v + 1).to_string()).collect();
                let _ = writeln!(text, "regular component: {{{}}}", vs.join(", "));
            }
            let mut j = serde_json::to_value(&r).expect("serializable");
            if let Some(w) = &r.regular_witness {
                j["regular_witness"] = json!(w.iter().map(|v| v + 1).collect::<Vec<_>>());
            }
            Ok(Output::ok(text, j))
        }
        Verb::Mutclass { input, limits } => {
            let q = load(&input.file)?;
            let c = enumerate_class(&q.exchange_matrix()?, &parse_limits(limits)?);
            let mut text = format!(
                "{} members ({})\n",
                c.len(),
                if c.complete { "complete" } else { "truncated" }
            );
            for (k, m) in &c.members {
                let _ = writeln!(text, "{}  {}", m.word, k);
            }
            let groups = crate::explorer::cospectral_partition(&c);
            let _ = writeln!(text, "{} cospectral groups", groups.len());
            Ok(Output::ok(text, c.to_json()))
        }
        Verb::Rmaximal { input, r, limits } => {
            let q = load(&input.file)?;
            let r = parse_threshold(r)?;
            let v = is_r_maximal(&q.exchange_matrix()?, &r, &parse_limits(limits)?);
            let explored = v.class.len();
            let (text, code) = match (&v.status, &v.witness) {
                (Maximality::NotMaximal, Some(w)) => (
                    format!(
                        "NOT {r}-maximal; witness mutation {}; {}\n",
                        w.word,
                        verdict_text(&w.verdict)
                    ),
                    EXIT_OK,
                ),
                (Maximality::Maximal, _) => (
                    format!("{r}-maximal; class closed with {explored} members\n"),
                    EXIT_OK,
                ),
                _ => (
                    format!(
                        "undecided: search stopped after {explored} members without a witness\n"
                    ),
                    EXIT_DOMAIN,
                ),
            };
            let j = json!({
                "r": r.to_string(),
                "status": v.status,
                "complete": v.complete,
                "explored": explored,
                "witness": v.witness.as_ref().map(witness_json),
            });
            Ok(Output {
                text,
                json: j,
                code,
            })
        }
        Verb::Classify2 { input, limits } => {
            let q = load(&input.file)?;
            let v = classify_two_maximal(&q.exchange_matrix()?, &parse_limits(limits)?)?;
            let out = match &v {
                TwoMaximalVerdict::TwoMaximal(t) => Output::ok(
                    format!("2-maximal; type {t}\n"),
                    json!({"status": "two_maximal", "type": t.to_string()}),
                ),
                TwoMaximalVerdict::Not(w) => Output::ok(
                    format!(
                        "NOT 2-maximal; witness mutation {}; {}\n",
                        w.word,
                        verdict_text(&w.verdict)
                    ),
                    json!({"status": "not_maximal", "witness": witness_json(w)}),
                ),
                TwoMaximalVerdict::Undecided => Output {
                    text: "undecided: limits reached before closure\n".to_string(),
                    json: json!({"status": "undecided"}),
                    code: EXIT_DOMAIN,
                },
            };
            Ok(out)
        }
        Verb::Diagram(i) => {
            let q = load(&i.file)?;
            let r = recognize_diagram(&q)?;
            Ok(Output::ok(
                format!("{}; {}\n", r.diagram, verdict_text(&r.verdict)),
                json!({"diagram": r.diagram.to_string(), "verdict": r.verdict}),
            ))
        }
        Verb::Partition { input, limits } => {
            let q = load(&input.file)?;
            let c = enumerate_class(&q.exchange_matrix()?, &parse_limits(limits)?);
            if !c.complete {
                return Err(QuiverError::IncompleteClass.into());
            }
            let groups = cospectral_polynomials(&c);
            let mut text = String::new();
            for (f, keys) in &groups {
                let _ = writeln!(text, "{f}: {} members", keys.len());
                for k in keys {
                    let _ = writeln!(text, "  {} {k}", c.members[k].word);
                }
            }
            let j: Vec<Value> = groups
                .iter()
                .map(|(f, keys)| {
                    let words: Vec<Vec<usize>> =
                        keys.iter().map(|k| c.members[k].word.one_based()).collect();
                    json!({"polynomial": f.to_string(), "members": keys, "words": words})
                })
                .collect();
            Ok(Output::ok(text, json!({"size": c.len(), "groups": j})))
        }
        Verb::Probe { input, limits } => {
            let q = load(&input.file)?;
            let c = enumerate_class(&q.exchange_matrix()?, &parse_limits(limits)?);
            let r = probe_conjecture(&c)?;
            let mut text = format!(
                "{} cospectral groups, {} pairs checked, {} joined by sink/source mutations, {} candidates\n",
                r.groups,
                r.pairs_checked(),
                r.verified.len(),
                r.candidates.len()
            );
            for (a, b) in &r.candidates {
                let _ = writeln!(text, "candidate: {a} ~ {b}");
            }
            Ok(Output::ok(
                text,
                serde_json::to_value(&r).expect("serializable"),
            ))
        }
    }
}
