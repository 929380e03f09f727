use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use legch_core::augment::{augmented_graph, realized_graph, Augmentation};
use legch_core::braid::BraidWord;
use legch_core::dga::differential;
use legch_core::monodromy::{certify_order, closed_form_mu, designated_m, orbit, verify_prop62_with, EpsPowers};
use legch_core::rmoves::demo;
use legch_core::z2poly::{poly_to_json, GenId, GeneratorMap};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::config::Config;
use crate::report::VerificationReport;
use crate::suite;

#[derive(Debug, Parser)]
#[command(name = "legch", version, about = "Degree-0 DGA, augmentations and monodromy of positive braid closures")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomized corpora; overrides the config file.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// TOML file with guards and corpus sizes.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, gradings and differential of the degree-0 presentation.
    Dga(BraidArgs),
    /// The canonical augmentation and its graph.
    Augment {
        #[command(flatten)]
        braid: BraidArgs,
        /// Also write the augmented graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Monodromy of a torus knot on degree-0 generators.
    Monodromy {
        #[arg(long, num_args = 2, value_names = ["P", "Q"], required = true)]
        torus: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Emit::Mu)]
        emit: Emit,
        /// Orbit index; defaults to the designated one.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Applies the four move maps to the bundled toy presentations.
    Moves {
        #[arg(long)]
        demo: bool,
    },
    /// Verification report. Without options runs every check.
    Certify {
        #[arg(long, num_args = 2, value_names = ["P", "Q"], conflicts_with = "torus_range")]
        torus: Option<Vec<u32>>,
        /// Every coprime pair with `2 <= p, q <= N`.
        #[arg(long, value_name = "N")]
        torus_range: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Mu,
    Orbit,
    Eps,
    Prop62,
    Certificate,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "torus", requires = "word")]
    pub strands: Option<i64>,
    /// Comma- or space-separated letters, e.g. "1,2,1".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "torus", requires = "strands")]
    pub word: Option<String>,
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub torus: Option<Vec<u32>>,
}

impl BraidArgs {
    pub fn braid(&self) -> Result<BraidWord, CliError> {
        match (&self.torus, self.strands, &self.word) {
            (Some(t), _, _) => Ok(BraidWord::torus(t[0], t[1])?),
            (None, Some(q), Some(w)) => Ok(BraidWord::parse(q, w)?),
            _ => Err(CliError::Usage("give --torus P Q or --strands Q --word W".into())),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit status 2.
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<legch_core::Error> for CliError {
    fn from(e: legch_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// What a command printed, plus its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("values serialize")
}

pub fn load_config(cli: &Cli) -> Result<Config, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path).map_err(CliError::Usage)?,
        None => Config::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let cfg = load_config(cli)?;
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Dga(args) => cmd_dga(&args.braid()?, json),
        Command::Augment { braid, dot } => cmd_augment(&braid.braid()?, dot.as_ref(), json),
        Command::Monodromy { torus, emit, m } => cmd_monodromy(torus[0], torus[1], *emit, *m, &cfg, json),
        Command::Moves { demo } => {
            if !demo {
                return Err(CliError::Usage("nothing to do; pass --demo".into()));
            }
            cmd_moves(json)
        }
        Command::Certify { torus, torus_range } => cmd_certify(torus.as_deref(), *torus_range, &cfg, json),
    }
}

pub fn cmd_dga(b: &BraidWord, json: bool) -> Result<Output, CliError> {
    let d = differential(b);
    if json {
        return Ok(Output::ok(pretty(&d.to_json())));
    }
    let mut out = String::new();
    for c in d.crossings().iter() {
        let _ = writeln!(out, "{} at position {}, degree 0", c.label, c.position);
    }
    for m in 1..=b.strands() as usize {
        let _ = writeln!(out, "∂(a{m}) = {}", d.render(d.boundary_of_a(m)));
    }
    Ok(Output::ok(out))
}

pub fn cmd_augment(b: &BraidWord, dot: Option<&PathBuf>, json: bool) -> Result<Output, CliError> {
    let x = Augmentation::construct(b)?;
    let check = x.verify(b);
    let sigma = b.permutation();
    let graph = augmented_graph(&sigma);
    let realized = realized_graph(b, x.crossings());
    let realizes = realized == graph.edges();
    let expected_size = b.strands() as usize - sigma.cycles().len();
    let ok = check.is_augmentation() && realizes && x.len() == expected_size;
    let table = b.crossings();
    let selected: Vec<(String, usize)> = x
        .crossings()
        .iter()
        .filter_map(|&g| table.by_id(g))
        .map(|c| (c.label.to_string(), c.position))
        .collect();

    if let Some(path) = dot {
        let labels: Vec<&String> = selected.iter().map(|(l, _)| l).collect();
        let text = format!("// selected crossings: {}\n{}", serde_json::to_string(&labels).unwrap(), graph.to_dot("augmented"));
        std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }

    let body = if json {
        pretty(&json!({
            "strands": b.strands(),
            "word": b.letters(),
            "permutation": sigma.cycles(),
            "X": selected.iter().map(|(l, p)| json!({"label": l, "position": p})).collect::<Vec<_>>(),
            "graph": {
                "vertices": graph.size(),
                "cycle_edges": graph.cycle_edges().collect::<Vec<_>>(),
                "chords": graph.chords().iter().map(|c| json!({"plus": c.plus, "minus": c.minus, "label": c.label})).collect::<Vec<_>>(),
            },
            "realized_edges": realized,
            "realizes_graph": realizes,
            "eps_boundaries": check.boundaries.iter().map(|v| v.bit()).collect::<Vec<_>>(),
            "is_augmentation": check.is_augmentation(),
            "expected_size": expected_size,
        }))
    } else {
        let shown: Vec<String> = selected.iter().map(|(l, p)| format!("{l}@pos{p}")).collect();
        let mut out = format!("X = [{}]\n", shown.join(", "));
        let _ = writeln!(out, "permutation {sigma}");
        let edges: Vec<String> = graph.edges().iter().map(|(s, t)| format!("{s}->{t}")).collect();
        let _ = writeln!(out, "graph {}", edges.join(" "));
        let _ = writeln!(out, "realized graph equal: {realizes}");
        for (m, v) in check.boundaries.iter().enumerate() {
            let _ = writeln!(out, "ε(∂a{}) = {}", m + 1, v.bit());
        }
        out
    };
    Ok(Output { body, code: if ok { 0 } else { 1 } })
}

fn torus_names(p: u32, q: u32) -> Result<impl Fn(GenId) -> String, CliError> {
    let table = BraidWord::torus(p, q)?.crossings();
    Ok(move |g: GenId| {
        table
            .by_id(g)
            .and_then(|c| c.torus)
            .map_or_else(|| g.to_string(), |t| t.to_string())
    })
}

fn require_knot(p: u32, q: u32) -> Result<(), CliError> {
    if p < 2 || q < 2 {
        return Err(CliError::Usage(format!("torus ({p},{q}) needs p, q >= 2")));
    }
    let g = p.gcd(&q);
    if g != 1 {
        return Err(CliError::Usage(format!("gcd ≠ 1: gcd({p}, {q}) = {g}")));
    }
    Ok(())
}

fn map_output(mu: &GeneratorMap, name: impl Fn(GenId) -> String, json: bool) -> String {
    if json {
        let v: serde_json::Map<String, Value> = mu.iter().map(|(g, p)| (name(g), poly_to_json(p, &name))).collect();
        return pretty(&Value::Object(v));
    }
    let mut out = String::new();
    for (g, p) in mu.iter() {
        let _ = writeln!(out, "μ({}) = {}", name(g), p.render_with(&name));
    }
    out
}

pub fn cmd_monodromy(p: u32, q: u32, emit: Emit, m: Option<u32>, cfg: &Config, json: bool) -> Result<Output, CliError> {
    require_knot(p, q)?;
    let limit = cfg.guards.max_symbolic_crossings;
    let body = match emit {
        Emit::Mu => {
            let size = (p * (q - 1)) as usize;
            if size > limit {
                return Err(CliError::Usage(format!("{size} crossings exceed max_symbolic_crossings = {limit}")));
            }
            map_output(&closed_form_mu(p, q)?, torus_names(p, q)?, json)
        }
        Emit::Orbit => {
            let m = m.or_else(|| designated_m(p, q)).ok_or_else(|| CliError::Usage("pass --m".into()))?;
            let r = orbit(p, q, m)?;
            if json {
                pretty(&to_value(&r))
            } else {
                let seq: String = r.sequence.iter().map(u8::to_string).collect();
                format!("orbit of {} (m = {m}): {seq}, minimal period {}\n", r.base, r.minimal_period)
            }
        }
        Emit::Eps => {
            let b = BraidWord::torus(p, q)?;
            let powers = EpsPowers::new(p, q, &Augmentation::construct(&b)?, (p + q) as usize)?;
            let name = torus_names(p, q)?;
            let names: Vec<String> = b.ids().iter().map(|&g| name(g)).collect();
            let rows: Vec<Vec<u8>> = (0..=powers.max_power()).map(|k| powers.at(k).iter().map(|v| v.bit()).collect()).collect();
            if json {
                pretty(&json!({"crossings": names, "powers": rows, "first_return": powers.first_return()}))
            } else {
                let mut out = format!("k  {}\n", names.join(" "));
                for (k, row) in rows.iter().enumerate() {
                    let bits: String = row.iter().map(u8::to_string).collect();
                    let _ = writeln!(out, "{k}  {bits}");
                }
                let _ = writeln!(out, "first return {:?}", powers.first_return());
                out
            }
        }
        Emit::Prop62 => {
            let r = verify_prop62_with(p, q, limit)?;
            if json {
                pretty(&to_value(&r))
            } else {
                let mut out = String::new();
                for row in &r.rows {
                    let _ = writeln!(out, "{:<5} {:?} {} = {}", row.holds, row.level, row.lhs, row.rhs);
                }
                if let Some(why) = &r.chain_skipped {
                    let _ = writeln!(out, "chain rows skipped: {why}");
                }
                out
            }
        }
        Emit::Certificate => {
            let c = certify_order(p, q, limit)?;
            if json {
                pretty(&to_value(&c))
            } else {
                format!("order {:?}, first return {:?}, certified {}\n", c.order, c.eps_first_return, c.certified())
            }
        }
    };
    Ok(Output::ok(body))
}

pub fn cmd_moves(json: bool) -> Result<Output, CliError> {
    let demos = demo()?;
    let ok = demos.iter().all(|d| d.chain_map && d.codomain_augmentation && d.pullback_is_augmentation);
    let body = if json {
        pretty(&to_value(&demos))
    } else {
        let mut out = String::new();
        for d in &demos {
            let _ = writeln!(out, "{}: chain map {}, pulled-back augmentation {}", d.name, d.chain_map, d.pullback_is_augmentation);
            for (g, image) in &d.images {
                let _ = writeln!(out, "  {g} ↦ {image}");
            }
        }
        out
    };
    Ok(Output { body, code: if ok { 0 } else { 1 } })
}

pub fn cmd_certify(torus: Option<&[u32]>, range: Option<u32>, cfg: &Config, json: bool) -> Result<Output, CliError> {
    let checks = match (torus, range) {
        (Some(t), _) => {
            require_knot(t[0], t[1])?;
            suite::torus_checks(&[(t[0], t[1])], cfg)
        }
        (None, Some(n)) => suite::torus_checks(&suite::coprime_pairs(2, n), cfg),
        (None, None) => suite::full_suite(cfg),
    };
    let report = VerificationReport::new(checks);
    let mut body = if json { report.to_json() } else { report.to_table() };
    if json {
        body.push('\n');
    }
    Ok(Output { body, code: report.exit_code() })
}
