//! `braidsat` command line.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use braidsat_core::braid::closure_components;
use braidsat_core::fdtc::classify_fdtc;
use braidsat_core::garside::{conjugate_test, full_twist_count, normal_form, super_summit_set, DEFAULT_SSS_BUDGET};
use braidsat_core::invariants::{alexander, genus_positive_braid, prime_factor_count};
use braidsat_core::reduction::{extract_regular_form, find_round_reduction};
use braidsat_core::satellite::{build_satellite, companion_stats, verify_main_theorem};
use braidsat_core::{BraidError, BraidWord, RegularForm, SatelliteSpec};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "braidsat", version, about = "Braid group computations: normal forms, reductions, satellites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Abort when a super summit set grows past this many elements.
    #[arg(long, global = true, default_value_t = DEFAULT_SSS_BUDGET)]
    max_size: usize,
    /// Echoed into the report; the computations themselves are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BraidArg {
    /// `Bn: letters` or `{"n": .., "letters": [..]}`.
    #[arg(long)]
    braid: String,
}

#[derive(Args)]
struct SatelliteArgs {
    /// Companion braid, `Bn: letters`.
    #[arg(long)]
    companion: String,
    /// `i:Bn: letters`, the pattern for the i-th closure component (1-based). Repeatable.
    #[arg(long)]
    pattern: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form.
    Nf(BraidArg),
    /// Super summit set.
    Sss(BraidArg),
    /// Conjugacy test.
    Conjugate {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        braid2: String,
    },
    /// Search the super summit set for a preserved round multicurve.
    Reduce(BraidArg),
    /// Classify a positive braid with a full twist.
    Fdtc(BraidArg),
    /// Alexander polynomial of the closure.
    Alexander(BraidArg),
    #[command(subcommand)]
    Satellite(SatelliteCommand),
    /// Everything at once.
    Analyze(BraidArg),
}

#[derive(Subcommand)]
enum SatelliteCommand {
    /// Render the satellite braid.
    Build(SatelliteArgs),
    /// Compare the twist threshold with full positivity of the rendered braid.
    Verify(SatelliteArgs),
}

enum Failure {
    Core(BraidError),
    Usage(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(BraidError::BudgetExceeded(_)) => 3,
            Failure::Core(BraidError::Internal(_)) => 1,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Core(BraidError::Parse { token, message }) => {
                json!({"kind": "parse", "token": token, "message": message})
            }
            Failure::Core(BraidError::BudgetExceeded(n)) => {
                json!({"kind": "budget", "budget": n, "message": self.to_string()})
            }
            Failure::Core(BraidError::Internal(_)) => json!({"kind": "internal", "message": self.to_string()}),
            _ => json!({"kind": "precondition", "message": self.to_string()}),
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(m) => write!(f, "{m}"),
        }
    }
}

type Outcome = Result<Map<String, Value>, Failure>;

fn parse_braid(text: &str) -> Result<BraidWord, Failure> {
    let t = text.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| {
            Failure::Core(BraidError::Parse { token: t.to_string(), message: e.to_string() })
        });
    }
    Ok(t.parse()?)
}

fn parse_spec(args: &SatelliteArgs) -> Result<SatelliteSpec, Failure> {
    let companion = parse_braid(&args.companion)?;
    let k = closure_components(&companion).len();
    let mut given: BTreeMap<usize, BraidWord> = BTreeMap::new();
    for p in &args.pattern {
        let (idx, rest) = p
            .split_once(':')
            .ok_or_else(|| Failure::Usage(format!("pattern `{p}` is not of the form i:Bn: letters")))?;
        let i: usize = idx.trim().parse().map_err(|_| {
            Failure::Core(BraidError::Parse { token: idx.to_string(), message: "expected a component index".into() })
        })?;
        if i == 0 || i > k {
            return Err(Failure::Usage(format!("component {i} out of range, the companion closure has {k}")));
        }
        if given.insert(i, parse_braid(rest)?).is_some() {
            return Err(Failure::Usage(format!("component {i} has two patterns")));
        }
    }
    let patterns = (1..=k).map(|i| given.remove(&i).unwrap_or_else(|| BraidWord::identity(1))).collect();
    Ok(SatelliteSpec::new(companion, patterns)?)
}

fn to_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

fn word_json(w: &BraidWord) -> Value {
    json!({"n": w.strands(), "letters": w.letters()})
}

fn nf(w: &BraidWord) -> Outcome {
    let f = normal_form(w);
    let mut m = to_map(json!(f));
    m.insert("inf".into(), json!(f.inf()));
    m.insert("sup".into(), json!(f.sup()));
    Ok(m)
}

fn sss(w: &BraidWord, budget: usize) -> Outcome {
    let s = super_summit_set(w, budget)?;
    Ok(to_map(json!({
        "inf_s": s.inf_s(),
        "sup_s": s.sup_s(),
        "size": s.len(),
        "elements": s.elements(),
    })))
}

fn regular_form_json(r: &RegularForm) -> Value {
    json!({
        "exterior": word_json(r.exterior()),
        "sizes": r.sizes(),
        "interiors": r.interiors().iter().map(word_json).collect::<Vec<_>>(),
    })
}

fn reduce(w: &BraidWord, budget: usize) -> Result<(Value, Option<RegularForm>), Failure> {
    let Some(red) = find_round_reduction(w, budget)? else {
        let v = json!({"reducible": false, "message": "no round reduction found in the super summit set"});
        return Ok((v, None));
    };
    let (rf, a) = extract_regular_form(&red.representative.to_word(), &red.partition)?;
    let conjugator = normal_form(&red.conjugator.concat(&a)?).to_word();
    let mut v = json!({
        "reducible": true,
        "partition": red.partition,
        "conjugator": word_json(&conjugator),
        "representative": red.representative,
        "block_permutation": red.block_permutation,
    });
    v.as_object_mut().unwrap().append(&mut to_map(regular_form_json(&rf)));
    Ok((v, Some(rf)))
}

fn fdtc(w: &BraidWord) -> Outcome {
    let v = classify_fdtc(w)?;
    let mut m = to_map(json!(v));
    m.insert("partition".into(), json!(v.partition()));
    Ok(m)
}

fn alexander_json(w: &BraidWord) -> Outcome {
    let d = alexander(w)?;
    let knot = closure_components(w).len() == 1;
    let mut m = Map::new();
    m.insert("polynomial".into(), json!(d.to_string()));
    m.insert("coefficients".into(), json!(d));
    if knot && w.is_positive() {
        m.insert("genus".into(), json!(genus_positive_braid(w)?));
        m.insert("prime_factors".into(), json!(prime_factor_count(w)?));
    }
    Ok(m)
}

fn build(spec: &SatelliteSpec) -> Outcome {
    let (w, rf) = build_satellite(spec)?;
    Ok(to_map(json!({"rendered": word_json(&w), "regular_form": regular_form_json(&rf)})))
}

/// Companion and patterns read back from a regular form, undoing the framing correction.
fn spec_from_regular_form(r: &RegularForm) -> Option<SatelliteSpec> {
    let stats = companion_stats(r.exterior()).ok()?;
    let patterns = stats
        .iter()
        .zip(r.interiors())
        .map(|(st, inner)| BraidWord::full_twist(inner.strands()).pow(st.writhe).concat(inner))
        .collect::<Result<Vec<_>, _>>()
        .ok()?;
    SatelliteSpec::new(r.exterior().clone(), patterns).ok()
}

fn analyze(w: &BraidWord, budget: usize) -> Outcome {
    let start = Instant::now();
    let f = normal_form(w);
    let s = super_summit_set(w, budget)?;
    let (reduction, rf) = reduce(w, budget)?;
    // the verdict is a conjugacy invariant, so a summit element with a full twist will do
    let summit = s.elements()[0].to_word();
    let fdtc = [("input", w), ("summit_representative", &summit)].into_iter().find_map(|(on, x)| {
        let v = classify_fdtc(x).ok()?;
        let mut m = to_map(json!(v));
        m.insert("partition".into(), json!(v.partition()));
        m.insert("applied_to".into(), json!(on));
        m.insert("word".into(), word_json(x));
        Some(m)
    });
    let spec = rf.as_ref().and_then(spec_from_regular_form).filter(|s| s.is_nontrivial());
    let thresholds = match &spec {
        Some(s) => Some(verify_main_theorem(s)?),
        None => None,
    };
    let alex = if closure_components(w).len() == 1 { Some(alexander_json(w)?) } else { None };
    Ok(to_map(json!({
        "normal_form": f,
        "inf": f.inf(),
        "sup": f.sup(),
        "full_twists": full_twist_count(w).count,
        "inf_s": s.inf_s(),
        "sup_s": s.sup_s(),
        "sss_size": s.len(),
        "components": closure_components(w).len(),
        "reduction": reduction,
        "fdtc": fdtc,
        "satellite": spec.map(|s| json!({
            "companion": word_json(s.companion()),
            "patterns": s.patterns().iter().map(word_json).collect::<Vec<_>>(),
        })),
        "thresholds": thresholds,
        "alexander": alex,
        "timing_ms": start.elapsed().as_secs_f64() * 1000.0,
    })))
}

fn run(cli: &Cli) -> Outcome {
    let budget = cli.max_size;
    let (name, input, mut out) = match &cli.command {
        Command::Nf(a) => {
            let w = parse_braid(&a.braid)?;
            ("nf", word_json(&w), nf(&w)?)
        }
        Command::Sss(a) => {
            let w = parse_braid(&a.braid)?;
            ("sss", word_json(&w), sss(&w, budget)?)
        }
        Command::Conjugate { braid, braid2 } => {
            let (a, b) = (parse_braid(braid)?, parse_braid(braid2)?);
            let c = conjugate_test(&a, &b, budget)?;
            ("conjugate", json!([word_json(&a), word_json(&b)]), to_map(json!({"conjugate": c})))
        }
        Command::Reduce(a) => {
            let w = parse_braid(&a.braid)?;
            ("reduce", word_json(&w), to_map(reduce(&w, budget)?.0))
        }
        Command::Fdtc(a) => {
            let w = parse_braid(&a.braid)?;
            ("fdtc", word_json(&w), fdtc(&w)?)
        }
        Command::Alexander(a) => {
            let w = parse_braid(&a.braid)?;
            ("alexander", word_json(&w), alexander_json(&w)?)
        }
        Command::Satellite(SatelliteCommand::Build(a)) => {
            let s = parse_spec(a)?;
            ("satellite build", json!(s), build(&s)?)
        }
        Command::Satellite(SatelliteCommand::Verify(a)) => {
            let s = parse_spec(a)?;
            ("satellite verify", json!(s), to_map(json!(verify_main_theorem(&s)?)))
        }
        Command::Analyze(a) => {
            let w = parse_braid(&a.braid)?;
            ("analyze", word_json(&w), analyze(&w, budget)?)
        }
    };
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(name));
    m.insert("input".into(), input);
    if let Some(seed) = cli.seed {
        m.insert("seed".into(), json!(seed));
    }
    m.append(&mut out);
    Ok(m)
}

fn print_text(m: &Map<String, Value>) {
    for (k, v) in m {
        match v {
            Value::String(s) => println!("{k}: {s}"),
            other => println!("{k}: {other}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(m) => {
            if cli.json {
                println!("{}", Value::Object(m));
            } else {
                print_text(&m);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({"schema_version": SCHEMA_VERSION, "error": e.to_json()}));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
