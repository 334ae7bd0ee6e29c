//! `arclat`: command-line front end. Everything is printed as JSON except
//! `render`, whose output format is chosen with `--format`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 semantic error.

use std::collections::BTreeSet;
use std::process::ExitCode;

use arclat::arcs_a::{delta_a, delta_a_inv, enumerate_arcs_a, DiagramA};
use arclat::arcs_b::{delta_b_orb, delta_b_orb_inv, enumerate_arcs_b, enumerate_diagrams_b, DiagramB, TypeBArc};
use arclat::catalog::{
    bicambrian_bipartite, bicambrian_linear, cambrian_congruence, hom_congruence, parabolic_congruence,
    CongruenceB, Designation, HomVariant,
};
use arclat::forcing::{arrows_b, forcing_b};
use arclat::render::{render_a, render_b, Format, RenderSpec};
use arclat::shards::check::{check, GeometryReport};
use arclat::shards::ShardComplex;
use arclat::verify::{LatticeJson, Suite};
use arclat::weak::{Family, Permutation, SignedPermutation, WeakOrder};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Arc enumeration grows exponentially; beyond this rank it stops being useful.
const MAX_ARC_RANK: usize = 8;

#[derive(Parser)]
#[command(name = "arclat", version, about = "Noncrossing arc diagrams and lattice congruences of the weak order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a permutation to its arc diagram or a diagram back to its permutation.
    Map(MapArgs),
    /// Elements, size or Hasse diagram of a quotient of the type-B weak order.
    Quotient(QuotientArgs),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Draw the arc diagram of a permutation or a diagram.
    Render(RenderArgs),
    /// List arcs, diagrams or group elements.
    Enumerate(EnumerateArgs),
    /// Congruence generated by contracting arcs, or whether one arc forces another.
    Forcing(ForcingArgs),
    /// Arrows between type-B arcs.
    Arrows(ArrowsArgs),
    /// Shard geometry of the reflection arrangement, cross-checked against arcs.
    Shards(ShardsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    A,
    B,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ObjectArgs {
    /// Permutation in one-line notation, e.g. "[2,1,3]" or "[-1,2]".
    #[arg(long)]
    perm: Option<String>,
    /// Diagram as JSON: {"n": .., "arcs": [..]}.
    #[arg(long)]
    diagram: Option<String>,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    #[command(flatten)]
    object: ObjectArgs,
}

#[derive(Args)]
#[group(multiple = false)]
struct QuotientOutput {
    /// Print the quotient elements (bottoms of their classes).
    #[arg(long)]
    list: bool,
    /// Print the number of quotient elements (default).
    #[arg(long)]
    count: bool,
    /// Print elements and cover relations of the quotient lattice.
    #[arg(long)]
    hasse: bool,
}

#[derive(Args)]
struct QuotientArgs {
    /// identity, full, parabolic:s0,s2, simion, nonhom, delta, delta_mirror,
    /// cambrian:RLR, bicambrian:bipartite, bicambrian:linear, or JSON
    /// {"n": .., "contracted": [..]}.
    #[arg(long)]
    congruence: String,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    output: QuotientOutput,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Ascii,
    Tikz,
}

impl From<RenderFormat> for Format {
    fn from(f: RenderFormat) -> Self {
        match f {
            RenderFormat::Svg => Format::Svg,
            RenderFormat::Ascii => Format::Ascii,
            RenderFormat::Tikz => Format::Tikz,
        }
    }
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    #[command(flatten)]
    object: ObjectArgs,
    #[arg(long, value_enum, default_value = "svg")]
    format: RenderFormat,
    #[arg(long)]
    width: Option<f64>,
    #[arg(long)]
    height: Option<f64>,
    #[arg(long)]
    spacing: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Arcs,
    Diagrams,
    Elements,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    #[arg(long, value_enum)]
    what: What,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct ForcingArgs {
    #[arg(long)]
    n: usize,
    /// Type-B arc as JSON, e.g. {"kind":"orbifold","top":1,"right":[]}.
    #[arg(long)]
    from: String,
    /// Second arc; prints whether `from` forces it instead of the generated congruence.
    #[arg(long)]
    to: Option<String>,
}

#[derive(Args)]
struct ArrowsArgs {
    #[arg(long)]
    n: usize,
    /// Keep only arrows leaving this arc.
    #[arg(long)]
    from: Option<String>,
}

#[derive(Args)]
struct ShardsArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Semantic(String),
}

impl From<arclat::Error> for Failure {
    fn from(e: arclat::Error) -> Self {
        Failure::Semantic(e.to_string())
    }
}

enum Outcome {
    Pass,
    Fail,
}

type CliResult<T> = Result<T, Failure>;

/// Syntax errors are usage errors; well-formed JSON describing an invalid
/// object is a semantic one.
fn parse_json<T: DeserializeOwned>(what: &str, s: &str) -> CliResult<T> {
    serde_json::from_str(s).map_err(|e| {
        let msg = format!("{what}: {e}");
        if e.is_data() {
            Failure::Semantic(msg)
        } else {
            Failure::Usage(msg)
        }
    })
}

fn emit<T: Serialize + ?Sized>(value: &T) -> CliResult<()> {
    let s = serde_json::to_string(value).map_err(|e| Failure::Semantic(e.to_string()))?;
    println!("{s}");
    Ok(())
}

fn arc_rank(n: usize) -> CliResult<usize> {
    if n == 0 || n > MAX_ARC_RANK {
        return Err(Failure::Semantic(format!("n must lie in 1..={MAX_ARC_RANK}")));
    }
    Ok(n)
}

fn diagram_a(s: &str) -> CliResult<DiagramA> {
    let d: DiagramA = parse_json("diagram", s)?;
    Ok(DiagramA::new(d.n, d.arcs)?)
}

fn diagram_b(s: &str) -> CliResult<DiagramB> {
    let d: DiagramB = parse_json("diagram", s)?;
    Ok(DiagramB::new(d.n, d.arcs)?)
}

fn arc_b(n: usize, s: &str) -> CliResult<TypeBArc> {
    let a: TypeBArc = parse_json("arc", s)?;
    if a.max_point() > n {
        return Err(Failure::Semantic(format!("arc {a:?} exceeds {n} points")));
    }
    Ok(a)
}

fn congruence(spec: &str, n: usize) -> CliResult<CongruenceB> {
    let n = arc_rank(n)?;
    if spec.trim_start().starts_with('{') {
        let c: CongruenceB = parse_json("congruence", spec)?;
        if c.n != n {
            return Err(Failure::Semantic(format!("congruence is on {} points, not {n}", c.n)));
        }
        if !c.is_valid() {
            return Err(Failure::Semantic("contracted set is not closed under superarcs".into()));
        }
        return Ok(c);
    }
    let (head, arg) = spec.split_once(':').map_or((spec, None), |(h, a)| (h, Some(a)));
    let c = match (head, arg) {
        ("identity", None) => CongruenceB::identity(n),
        ("full", None) => CongruenceB::full(n),
        ("parabolic", Some(gens)) => {
            let mut j = BTreeSet::new();
            for g in gens.split(',') {
                let i = g
                    .trim()
                    .strip_prefix('s')
                    .and_then(|i| i.parse::<usize>().ok())
                    .filter(|&i| i < n)
                    .ok_or_else(|| Failure::Semantic(format!("{g:?} is not a generator s0..s{}", n - 1)))?;
                j.insert(i);
            }
            parabolic_congruence(n, &j)?
        }
        ("hom", Some(v)) => hom_congruence(n, v.parse::<HomVariant>()?)?,
        ("cambrian", Some(word)) => {
            let d: Designation = word.parse()?;
            if d.n() != n {
                return Err(Failure::Semantic(format!("designation {word:?} needs {} letters", n - 1)));
            }
            cambrian_congruence(&d)?
        }
        ("bicambrian", Some("bipartite")) => bicambrian_bipartite(n)?,
        ("bicambrian", Some("linear")) => bicambrian_linear(n)?,
        (v, None) if v.parse::<HomVariant>().is_ok() => hom_congruence(n, v.parse()?)?,
        _ => return Err(Failure::Semantic(format!("unknown congruence {spec:?}"))),
    };
    Ok(c)
}

fn map(args: &MapArgs) -> CliResult<()> {
    match (args.kind, &args.object.perm, &args.object.diagram) {
        (Kind::A, Some(p), _) => emit(&delta_a(&parse_json::<Permutation>("permutation", p)?)),
        (Kind::B, Some(p), _) => emit(&delta_b_orb(&parse_json::<SignedPermutation>("permutation", p)?)),
        (Kind::A, None, Some(d)) => emit(&delta_a_inv(&diagram_a(d)?)?),
        (Kind::B, None, Some(d)) => emit(&delta_b_orb_inv(&diagram_b(d)?)?),
        (_, None, None) => Err(Failure::Usage("one of --perm or --diagram is required".into())),
    }
}

fn quotient(args: &QuotientArgs) -> CliResult<()> {
    let c = congruence(&args.congruence, args.n)?;
    let o = &args.output;
    if o.list {
        emit(&c.quotient_elements())
    } else if o.hasse {
        let w = WeakOrder::<SignedPermutation>::new(args.n)?;
        let lattice = c.quotient_lattice(&w)?;
        emit(&LatticeJson::new(c.quotient_elements(), &lattice))
    } else {
        emit(&c.quotient_elements().len())
    }
}

fn verify(args: &VerifyArgs) -> CliResult<Outcome> {
    let suite: Suite = args.suite.parse()?;
    let report = suite.run(args.n)?;
    emit(&report)?;
    Ok(if report.pass { Outcome::Pass } else { Outcome::Fail })
}

fn render(args: &RenderArgs) -> CliResult<()> {
    let format = Format::from(args.format);
    let render_with = |n: usize| -> CliResult<RenderSpec> {
        let d = RenderSpec::default_for(format, n);
        Ok(RenderSpec::new(
            format,
            args.width.unwrap_or(d.width),
            args.height.unwrap_or(d.height),
            args.spacing.unwrap_or(d.spacing),
        )?)
    };
    let out = match (args.kind, &args.object.perm, &args.object.diagram) {
        (Kind::A, Some(p), _) => {
            let d = delta_a(&parse_json::<Permutation>("permutation", p)?);
            render_a(&d, &render_with(d.n)?)
        }
        (Kind::A, None, Some(s)) => {
            let d = diagram_a(s)?;
            render_a(&d, &render_with(d.n)?)
        }
        (Kind::B, Some(p), _) => {
            let d = delta_b_orb(&parse_json::<SignedPermutation>("permutation", p)?);
            render_b(&d, &render_with(d.n)?)
        }
        (Kind::B, None, Some(s)) => {
            let d = diagram_b(s)?;
            render_b(&d, &render_with(d.n)?)
        }
        (_, None, None) => return Err(Failure::Usage("one of --perm or --diagram is required".into())),
    };
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(())
}

fn enumerate(args: &EnumerateArgs) -> CliResult<()> {
    let n = arc_rank(args.n)?;
    match (args.kind, args.what) {
        (Kind::A, What::Arcs) => emit(&enumerate_arcs_a(n)),
        (Kind::B, What::Arcs) => emit(&enumerate_arcs_b(n)),
        (Kind::A, What::Elements) => emit(WeakOrder::<Permutation>::new(n)?.elements()),
        (Kind::B, What::Elements) => emit(WeakOrder::<SignedPermutation>::new(n)?.elements()),
        (Kind::A, What::Diagrams) => {
            let w = WeakOrder::<Permutation>::new(n)?;
            emit(&w.elements().iter().map(delta_a).collect::<Vec<_>>())
        }
        (Kind::B, What::Diagrams) => emit(&enumerate_diagrams_b(n)?),
    }
}

fn forcing(args: &ForcingArgs) -> CliResult<()> {
    let n = arc_rank(args.n)?;
    let from = arc_b(n, &args.from)?;
    match &args.to {
        Some(to) => {
            let to = arc_b(n, to)?;
            emit(&serde_json::json!({ "forces": forcing_b(&from, &to) }))
        }
        None => emit(&CongruenceB::from_generators(n, &[from])),
    }
}

fn arrows(args: &ArrowsArgs) -> CliResult<()> {
    let n = arc_rank(args.n)?;
    let from = args.from.as_deref().map(|s| arc_b(n, s)).transpose()?;
    let edges: Vec<_> = arrows_b(n).into_iter().filter(|e| from.is_none_or(|a| e.source == a)).collect();
    emit(&edges)
}

fn shards(args: &ShardsArgs) -> CliResult<Outcome> {
    let report: GeometryReport = match args.kind {
        Kind::A => check(&ShardComplex::new(Family::A, args.n)?, &WeakOrder::<Permutation>::new(args.n)?)?,
        Kind::B => check(&ShardComplex::new(Family::B, args.n)?, &WeakOrder::<SignedPermutation>::new(args.n)?)?,
    };
    emit(&report)?;
    Ok(if report.all_pass() { Outcome::Pass } else { Outcome::Fail })
}

fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("ARCLAT_THREADS") else {
        return Ok(());
    };
    let threads: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("ARCLAT_THREADS={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(format!("cannot configure worker threads: {e}")))
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    configure_threads()?;
    let pass = |r: CliResult<()>| r.map(|()| Outcome::Pass);
    match &cli.command {
        Command::Map(a) => pass(map(a)),
        Command::Quotient(a) => pass(quotient(a)),
        Command::Verify(a) => verify(a),
        Command::Render(a) => pass(render(a)),
        Command::Enumerate(a) => pass(enumerate(a)),
        Command::Forcing(a) => pass(forcing(a)),
        Command::Arrows(a) => pass(arrows(a)),
        Command::Shards(a) => shards(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Semantic(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
