use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use marked_order::families::{ps_polynomial_in_y, Family, FamilySpec, FlagSpec};
use marked_order::input::{parse_document, Document};
use marked_order::marked::{count_bruteforce, ehrhart_polynomial, natural_labeling_for, product_formula_polynomial};
use marked_order::order_poly::{count_maps_bruteforce, omega};
use marked_order::polynomial::{MultiPoly, UniPoly};
use marked_order::random::MarkedParams;
use marked_order::verify::{family_report, oracle_equality, random_oracle_trials};
use marked_order::{Config, Error, Exec, Poset, SkewShape, DEFAULT_NODE_BUDGET};
use serde_json::{json, Value};

const BUDGET_VAR: &str = "MARKED_ORDER_NODE_BUDGET";

/// Exact counting for marked posets, order polynomials and their families.
#[derive(Parser)]
#[command(name = "marked-order", version, about, long_about = None)]
struct Cli {
    /// emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// run single-threaded
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// order polynomial of a poset or skew shape
    OrderPoly { input: String },
    /// multivariate counting polynomial in the gap variables
    MarkedPoly { input: String },
    /// univariate Ehrhart polynomial of a marked poset
    Ehrhart { input: String },
    /// direct count of integer extensions
    Count { input: String },
    /// check that every coefficient is nonnegative
    CheckPositivity {
        input: String,
        /// also check the gap-variable polynomial
        #[arg(long)]
        gaps: bool,
    },
    /// compare formulas against direct counts
    OracleCheck {
        /// a document, or `random` for seeded random marked posets
        input: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// emit a family instance
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Subcommand)]
enum Gen {
    /// Pitman-Stanley instance
    Ps(FamilyArgs),
    /// Gelfand-Tsetlin instance; with --a and --b a flagged face
    Gt(FamilyArgs),
    /// cell poset of a skew shape
    Skew {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        mu: Vec<usize>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    y: Vec<i64>,
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    z: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    a: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',')]
    b: Option<Vec<i64>>,
}

enum Failure {
    Verification,
    Input(String),
    SizeLimit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_size_limit() {
            Failure::SizeLimit(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    cfg: Config,
    json: bool,
    out: Vec<u8>,
}

impl Ctx {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.extend_from_slice(s.as_ref().as_bytes());
        self.out.push(b'\n');
    }

    fn emit(&mut self, v: Value) {
        let s = serde_json::to_string_pretty(&v).expect("json values serialize");
        self.line(s);
    }
}

fn node_budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite() && *v >= 1.0)
            .map(|v| v as u64)
            .ok_or_else(|| Failure::Input(format!("{BUDGET_VAR} must be a positive number, got {s:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn read_document(path: &str) -> Result<Document, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {path}: {e}")))?
    };
    Ok(parse_document(&text)?)
}

fn uni_json(p: &UniPoly) -> Value {
    let multi = p.to_multi(0, 1).expect("single variable embeds");
    json!({ "text": p.render("n"), "polynomial": multi.to_json() })
}

fn multi_json(p: &MultiPoly) -> Value {
    json!({ "text": p.render("t"), "polynomial": p.to_json() })
}

fn order_poly(ctx: &mut Ctx, doc: &Document) -> Outcome {
    let poset = doc.to_poset()?;
    let w = omega(&poset, &ctx.cfg)?;
    if ctx.json {
        ctx.emit(json!({ "order_polynomial": uni_json(&w) }));
    } else {
        ctx.line(w.render("n"));
    }
    Ok(())
}

fn marked_poly(ctx: &mut Ctx, doc: &Document) -> Outcome {
    let m = doc.to_marked()?;
    let labeling = natural_labeling_for(&m)?;
    let f = product_formula_polynomial(&m, &labeling, &ctx.cfg)?;
    if ctx.json {
        ctx.emit(json!({
            "labeling": labeling.labels(&m),
            "region": labeling.region(&m),
            "gaps": labeling.gaps(&m),
            "marked_polynomial": multi_json(&f),
        }));
    } else {
        ctx.line(format!("labeling: {}", labeling.labels(&m).join(", ")));
        ctx.line(format!("region: {}", labeling.region(&m)));
        ctx.line(format!("polynomial: {}", f.render("t")));
    }
    Ok(())
}

fn ehrhart(ctx: &mut Ctx, doc: &Document) -> Outcome {
    let m = doc.to_marked()?;
    let e = ehrhart_polynomial(&m, &ctx.cfg)?;
    if ctx.json {
        ctx.emit(json!({ "ehrhart_polynomial": uni_json(&e) }));
    } else {
        ctx.line(e.render("n"));
    }
    Ok(())
}

fn count(ctx: &mut Ctx, doc: &Document) -> Outcome {
    let m = doc.to_marked()?;
    let c = count_bruteforce(&m, &ctx.cfg)?;
    if ctx.json {
        ctx.emit(json!({ "count": c.to_string() }));
    } else {
        ctx.line(c.to_string());
    }
    Ok(())
}

fn check_positivity(ctx: &mut Ctx, doc: &Document, gaps: bool) -> Outcome {
    let mut checked: Vec<(&str, MultiPoly)> = Vec::new();
    match doc {
        Document::Poset(_) | Document::Shape(_) => {
            let w = omega(&doc.to_poset()?, &ctx.cfg)?;
            checked.push(("order polynomial", w.to_multi(0, 1)?));
        }
        Document::Marked(_) | Document::Family(_) => {
            let m = doc.to_marked()?;
            checked.push(("ehrhart polynomial", ehrhart_polynomial(&m, &ctx.cfg)?.to_multi(0, 1)?));
            if let Document::Family(Family::PitmanStanley(s)) = doc {
                checked.push(("polynomial in y", ps_polynomial_in_y(s.k, s.m, &ctx.cfg)?));
            }
            if gaps {
                let labeling = natural_labeling_for(&m)?;
                checked.push(("gap polynomial", product_formula_polynomial(&m, &labeling, &ctx.cfg)?));
            }
        }
    }
    let mut positive = true;
    let mut reports = Vec::new();
    for (name, p) in &checked {
        let negatives = p.negative_terms();
        positive &= negatives.is_empty();
        if !ctx.json {
            if negatives.is_empty() {
                ctx.line(format!("{name}: nonnegative"));
            }
            for (exp, c) in &negatives {
                ctx.line(format!("{name}: coefficient {c} at exponent {exp:?}"));
            }
        }
        let offenders: Vec<Value> = negatives
            .iter()
            .map(|(exp, c)| json!({ "exp": exp, "coefficient": c.to_string() }))
            .collect();
        reports.push(json!({ "name": name, "polynomial": p.to_json(), "negative_terms": offenders }));
    }
    if ctx.json {
        ctx.emit(json!({ "positive": positive, "checked": reports }));
    }
    if positive {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn oracle_check(ctx: &mut Ctx, input: &str, trials: usize, seed: u64) -> Outcome {
    let mut rows: Vec<(String, String, String)> = Vec::new();
    if input == "random" {
        for (i, (_, o)) in random_oracle_trials(seed, trials, MarkedParams::default(), &ctx.cfg)?
            .into_iter()
            .enumerate()
        {
            rows.push((format!("trial {i}"), o.formula.to_string(), o.bruteforce.to_string()));
        }
    } else {
        let doc = read_document(input)?;
        match &doc {
            Document::Poset(_) | Document::Shape(_) => {
                let p: Poset = doc.to_poset()?;
                let w = omega(&p, &ctx.cfg)?;
                for n in 1..=3 {
                    let direct = count_maps_bruteforce(&p, n as u64, &ctx.cfg)?;
                    rows.push((format!("n={n}"), w.evaluate_int(n).to_string(), direct.to_string()));
                }
            }
            Document::Marked(m) => {
                let o = oracle_equality(m, &ctx.cfg)?;
                rows.push(("formula".into(), o.formula.to_string(), o.bruteforce.to_string()));
            }
            Document::Family(f) => {
                let r = family_report(f, &[1, 2, 3], &ctx.cfg)?;
                rows.push(("formula".into(), r.formula.to_string(), r.bruteforce.to_string()));
                rows.push(("tableaux".into(), r.tableaux.to_string(), r.bruteforce.to_string()));
                for (n, predicted, counted) in &r.dilations {
                    rows.push((format!("ehrhart n={n}"), predicted.to_string(), counted.to_string()));
                }
            }
        }
    }
    let failures = rows.iter().filter(|(_, a, b)| a != b).count();
    if ctx.json {
        let checks: Vec<Value> = rows
            .iter()
            .map(|(name, a, b)| json!({ "check": name, "computed": a, "oracle": b, "agree": a == b }))
            .collect();
        ctx.emit(json!({ "checks": checks, "failures": failures }));
    } else {
        for (name, a, b) in rows.iter().filter(|(_, a, b)| a != b) {
            ctx.line(format!("MISMATCH {name}: computed {a}, oracle {b}"));
        }
        ctx.line(format!("{} of {} checks agree", rows.len() - failures, rows.len()));
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn family_doc(name: &str, args: &FamilyArgs) -> Result<Value, Failure> {
    let spec = FamilySpec::new(args.k, args.m, args.y.clone(), args.z.clone())?;
    let family = match (name, &args.a, &args.b) {
        ("ps", None, None) => Family::PitmanStanley(spec),
        ("ps", _, _) => return Err(Failure::Input("flags only apply to gt".into())),
        ("gt", None, None) => Family::GelfandTsetlin(spec),
        ("gt", Some(a), Some(b)) => {
            let flags = FlagSpec {
                a: a.clone(),
                b: b.clone(),
            };
            flags.validate(spec.k, spec.m)?;
            Family::Flagged(spec, flags)
        }
        _ => return Err(Failure::Input("flags need both --a and --b".into())),
    };
    Ok(serde_json::to_value(family.to_json()).expect("family serializes"))
}

fn gen(ctx: &mut Ctx, g: &Gen) -> Outcome {
    let doc = match g {
        Gen::Ps(args) => family_doc("ps", args)?,
        Gen::Gt(args) => family_doc("gt", args)?,
        Gen::Skew { lambda, mu } => {
            let shape = SkewShape::new(lambda.clone(), mu.clone())?;
            serde_json::to_value(Poset::skew_shape(&shape)?.to_json()).expect("poset serializes")
        }
    };
    ctx.emit(doc);
    Ok(())
}

fn run(cli: &Cli, ctx: &mut Ctx) -> Outcome {
    match &cli.command {
        Command::OrderPoly { input } => order_poly(ctx, &read_document(input)?),
        Command::MarkedPoly { input } => marked_poly(ctx, &read_document(input)?),
        Command::Ehrhart { input } => ehrhart(ctx, &read_document(input)?),
        Command::Count { input } => count(ctx, &read_document(input)?),
        Command::CheckPositivity { input, gaps } => check_positivity(ctx, &read_document(input)?, *gaps),
        Command::OracleCheck { input, trials, seed } => oracle_check(ctx, input, *trials, *seed),
        Command::Gen(g) => gen(ctx, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = node_budget().and_then(|budget| {
        let exec = if cli.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        };
        let mut ctx = Ctx {
            cfg: Config::default().with_node_budget(budget).with_exec(exec),
            json: cli.json,
            out: Vec::new(),
        };
        let result = run(&cli, &mut ctx);
        let _ = io::stdout().write_all(&ctx.out);
        result
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::SizeLimit(msg)) => {
            eprintln!("size limit: {msg}");
            ExitCode::from(3)
        }
    }
}
