use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cluster_lattice::circle::parse_arc_list;
use cluster_lattice::lattice::{
    equiv_classes, hasse_export, nondeg_equiv_iso_check, nondeg_extremes, ts_enumerate_window,
    HasseGraph, HasseInput,
};
use cluster_lattice::noncrossing::{enumeration_guard, nc_enumerate, nnc_count, nnc_enumerate};
use cluster_lattice::oracle::{compare_with_classification, window_closure, ClosureMode, Window};
use cluster_lattice::render::{render, RenderFormat, RenderObject, RenderSpec};
use cluster_lattice::verify;
use cluster_lattice::{
    aisle_generated, approx_triangle, catalan, coaisle_presentation, heart, thick_generated,
    ts_join, ts_leq, ts_meet, Arc, Error, Partition, TStructure, ThickSubcat,
};

/// Writes to stdout and exits quietly once the reader has gone away.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        out!($($arg)*);
        out!("\n");
    }};
}

#[derive(Parser)]
#[command(
    name = "cluster-lattice",
    version,
    about = "Non-crossing partitions, thick subcategories and t-structures of the type A cluster category with n limit points"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive non-crossing partitions.
    Nc {
        #[arg(value_enum)]
        action: ListOrCount,
        #[arg(long)]
        n: usize,
    },
    /// Non-exhaustive non-crossing partitions.
    Nnc {
        #[arg(value_enum)]
        action: ListOrCount,
        #[arg(long)]
        n: usize,
    },
    /// Kreweras complement of an exhaustive partition.
    Kreweras {
        #[arg(long)]
        p: String,
        #[arg(long)]
        n: Option<usize>,
        /// Also apply the complement a second time and compare with the rotation.
        #[arg(long)]
        twice: bool,
    },
    /// Thick subcategories.
    Thick {
        #[command(subcommand)]
        action: ThickCmd,
    },
    /// T-structures.
    Tstruct {
        #[command(subcommand)]
        action: TsCmd,
    },
    /// Orders, lattices and Hasse diagrams.
    Lattice {
        #[command(subcommand)]
        action: LatticeCmd,
    },
    /// Brute-force window closures.
    Oracle {
        #[command(subcommand)]
        action: OracleCmd,
    },
    /// Disc diagrams and Hasse diagrams.
    Render(RenderArgs),
    /// Runs the acceptance suite.
    Verify {
        /// Run only the criterion with this id (1, 2, ..., 7a, 7b, 8).
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListOrCount {
    List,
    Count,
}

#[derive(Subcommand)]
enum ThickCmd {
    /// Smallest thick subcategory containing the arcs.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        arcs: String,
    },
    /// Membership of an arc.
    Member {
        #[arg(long, alias = "partition")]
        p: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        arc: String,
    },
}

#[derive(Subcommand)]
enum TsCmd {
    /// Aisle and coaisle membership of an arc.
    Member {
        #[arg(long)]
        ts: String,
        #[arg(long)]
        arc: String,
    },
    /// Coaisle as Kreweras blocks with lower bounds.
    Coaisle {
        #[arg(long)]
        ts: String,
    },
    /// Arcs of the heart.
    Heart {
        #[arg(long)]
        ts: String,
    },
    /// Approximation triangle of an arc, printed as JSON.
    Approx {
        #[arg(long)]
        ts: String,
        #[arg(long)]
        arc: String,
    },
    Meet {
        #[arg(long)]
        ts: String,
        #[arg(long)]
        other: String,
    },
    Join {
        #[arg(long)]
        ts: String,
        #[arg(long)]
        other: String,
    },
    /// Smallest t-structure whose aisle contains the arcs.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        arcs: String,
    },
    /// Degeneracy, boundedness and equivalence class.
    Classify {
        #[arg(long)]
        ts: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Nc,
    Nnc,
    /// T-structures with decoration offsets in [-W, W].
    Ts,
    /// Equivalence classes of t-structures.
    Classes,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Covering relation of a finite family.
    Hasse {
        #[arg(long, value_enum)]
        what: Family,
        #[arg(long)]
        n: usize,
        #[arg(long = "W", default_value_t = 0)]
        w: i64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Aisle inclusion between two t-structures.
    Leq {
        #[arg(long)]
        ts: String,
        #[arg(long)]
        other: String,
    },
    /// Non-degenerate equivalence classes against the partition lattice.
    Equiv {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Thick,
    Aisle,
}

impl From<Mode> for ClosureMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Thick => ClosureMode::Thick,
            Mode::Aisle => ClosureMode::Aisle,
        }
    }
}

#[derive(Args)]
struct OracleInput {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    n: usize,
    #[arg(long = "W")]
    w: i64,
    /// Seed set; omit together with --seed for the empty set.
    #[arg(long, conflicts_with = "seed")]
    arcs: Option<String>,
    /// Draw one to three random arcs with offsets in [-2, 2] instead.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Closure of the seed set inside the window.
    Close(OracleInput),
    /// Closure against the classification.
    Compare(OracleInput),
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectKind {
    Arcs,
    Thick,
    Aisle,
    Coaisle,
    Hasse,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Svg,
    Dot,
    Json,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    object: ObjectKind,
    #[arg(long, value_enum, default_value_t = OutFormat::Svg)]
    format: OutFormat,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    arcs: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    ts: Option<String>,
    /// Family for Hasse diagrams.
    #[arg(long, value_enum)]
    what: Option<Family>,
    #[arg(long = "W", default_value_t = 0)]
    w: i64,
    #[arg(long, default_value_t = 400)]
    size: u32,
    /// Leave out labels.
    #[arg(long)]
    no_annotate: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_partition(p: &str, n: Option<usize>) -> Result<Partition, Error> {
    match n {
        Some(n) => Partition::parse_compact(n, p),
        None => p.parse(),
    }
}

fn parse_ts(s: &str) -> Result<TStructure, Error> {
    s.parse()
}

fn parse_arc(s: &str) -> Result<Arc, Error> {
    s.parse()
}

fn check_arcs(n: usize, arcs: &[Arc]) -> Result<(), Error> {
    let model = cluster_lattice::CircleModel::new(n)?;
    arcs.iter().try_for_each(|a| model.check_arc(a))
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn arcs_text(arcs: &[Arc]) -> String {
    let parts: Vec<String> = arcs.iter().map(ToString::to_string).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(";")
    }
}

fn hasse_for(what: Family, n: usize, w: i64) -> anyhow::Result<HasseGraph> {
    let graph = match what {
        Family::Nc => hasse_export(HasseInput::Partitions(
            &nc_enumerate(n)?.collect::<Vec<_>>(),
        ))?,
        Family::Nnc => hasse_export(HasseInput::Partitions(
            &nnc_enumerate(n)?.collect::<Vec<_>>(),
        ))?,
        Family::Ts => hasse_export(HasseInput::TStructures(&ts_enumerate_window(
            n,
            -w,
            w,
            enumeration_guard(),
        )?))?,
        Family::Classes => hasse_export(HasseInput::Classes(&equiv_classes(n)?))?,
    };
    Ok(graph)
}

fn oracle_seed(input: &OracleInput) -> anyhow::Result<Vec<Arc>> {
    let arcs = match (&input.arcs, input.seed) {
        (Some(a), _) => parse_arc_list(a)?,
        (None, Some(seed)) => {
            use rand_free::random_arcs;
            random_arcs(input.n, seed)
        }
        (None, None) => Vec::new(),
    };
    check_arcs(input.n, &arcs)?;
    Ok(arcs)
}

/// Small deterministic generator for `--seed`, so the binary needs no RNG crate.
mod rand_free {
    use cluster_lattice::{make_arc, Arc, MarkedPoint};

    fn next(state: &mut u64) -> u64 {
        // splitmix64
        *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn random_arcs(n: usize, seed: u64) -> Vec<Arc> {
        let mut state = seed;
        let count = 1 + next(&mut state) % 3;
        let mut out = Vec::new();
        while (out.len() as u64) < count {
            let mut point = || {
                let i = 1 + (next(&mut state) % n as u64) as usize;
                let k = (next(&mut state) % 5) as i64 - 2;
                MarkedPoint::new(i, k)
            };
            let (p, q) = (point(), point());
            if let Some(a) = make_arc(p, q).arc() {
                out.push(a);
            }
        }
        out
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let as_json = cli.json;
    match cli.command {
        Command::Nc { action, n } | Command::Nnc { action, n }
            if matches!(action, ListOrCount::Count) =>
        {
            let exhaustive = matches!(cli.command, Command::Nc { .. });
            let count = if exhaustive {
                let c = nc_enumerate(n)?.count() as u128;
                if c != catalan(n as u64) {
                    bail!("enumeration gave {c}, Catalan({n}) = {}", catalan(n as u64));
                }
                c
            } else {
                let c = nnc_enumerate(n)?.count() as u128;
                if c != nnc_count(n as u64) {
                    bail!(
                        "enumeration gave {c}, formula gives {}",
                        nnc_count(n as u64)
                    );
                }
                c
            };
            if as_json {
                outln!(
                    "{}",
                    json(
                        &serde_json::json!({ "n": n, "count": count.to_string().parse::<u64>()? })
                    )?
                );
            } else {
                outln!("{count}");
            }
        }
        Command::Nc { n, .. } | Command::Nnc { n, .. } => {
            let all: Vec<Partition> = if matches!(cli.command, Command::Nc { .. }) {
                nc_enumerate(n)?.collect()
            } else {
                nnc_enumerate(n)?.collect()
            };
            if as_json {
                outln!("{}", json(&all)?);
            } else {
                for p in &all {
                    outln!("{}", p.to_set_notation());
                }
            }
        }
        Command::Kreweras { p, n, twice } => {
            let p = parse_partition(&p, n)?;
            let k = p.kreweras()?;
            if twice {
                let kk = k.kreweras()?;
                let ok = kk == p.rotate(1);
                if as_json {
                    outln!(
                        "{}",
                        json(
                            &serde_json::json!({ "complement": k, "twice": kk, "rotation_ok": ok })
                        )?
                    );
                } else {
                    outln!("{kk}");
                    outln!("rotation assertion {}", if ok { "OK" } else { "FAILED" });
                }
                return Ok(ok);
            }
            if as_json {
                outln!("{}", json(&k)?);
            } else {
                outln!("{k}");
            }
        }
        Command::Thick { action } => match action {
            ThickCmd::Gen { n, arcs } => {
                let arcs = parse_arc_list(&arcs)?;
                check_arcs(n, &arcs)?;
                let t = thick_generated(&arcs, n);
                if as_json {
                    outln!("{}", json(&t)?);
                } else {
                    outln!("{}", t.partition);
                }
            }
            ThickCmd::Member { p, n, arc } => {
                let partition = parse_partition(&p, n)?;
                let arc = parse_arc(&arc)?;
                check_arcs(partition.n().max(2), &[arc])?;
                if arc.intervals().1 > partition.n() {
                    return Err(Error::IntervalOutOfRange {
                        index: arc.intervals().1,
                        n: partition.n(),
                    }
                    .into());
                }
                let member = ThickSubcat::new(partition).contains(&arc);
                if as_json {
                    outln!(
                        "{}",
                        json(&serde_json::json!({ "arc": arc, "member": member }))?
                    );
                } else {
                    outln!("{member}");
                }
            }
        },
        Command::Tstruct { action } => run_tstruct(action, as_json)?,
        Command::Lattice { action } => match action {
            LatticeCmd::Hasse { what, n, w, format } => {
                let graph = hasse_for(what, n, w)?;
                match format {
                    GraphFormat::Dot => out!("{}", graph.to_dot()),
                    GraphFormat::Json => outln!("{}", json(&graph)?),
                }
            }
            LatticeCmd::Leq { ts, other } => {
                let leq = ts_leq(&parse_ts(&ts)?, &parse_ts(&other)?)?;
                if as_json {
                    outln!("{}", json(&serde_json::json!({ "leq": leq }))?);
                } else {
                    outln!("{leq}");
                }
            }
            LatticeCmd::Equiv { n } => {
                let iso = nondeg_equiv_iso_check(n)?;
                let extremes = nondeg_extremes(n)?;
                if as_json {
                    outln!(
                        "{}",
                        json(
                            &serde_json::json!({ "isomorphic_to_nc": iso, "extremes": extremes })
                        )?
                    );
                } else {
                    outln!("non-degenerate classes isomorphic to NC_{n}: {iso}");
                    outln!(
                        "top: {} (bounded above: {}, bounded below: {})",
                        extremes.top.partition,
                        extremes.top_bounded_above,
                        extremes.top_bounded_below
                    );
                    outln!(
                        "bottom: {} (bounded above: {}, bounded below: {})",
                        extremes.bottom.partition,
                        extremes.bottom_bounded_above,
                        extremes.bottom_bounded_below
                    );
                }
                return Ok(iso);
            }
        },
        Command::Oracle { action } => match action {
            OracleCmd::Close(input) => {
                let arcs = oracle_seed(&input)?;
                let report = window_closure(&arcs, Window::new(input.w), input.mode.into());
                if as_json {
                    outln!("{}", json(&report)?);
                } else {
                    outln!("{}", arcs_text(&report.arcs));
                    outln!("saturated at boundary: {}", report.saturated_at_boundary);
                }
            }
            OracleCmd::Compare(input) => {
                let arcs = oracle_seed(&input)?;
                let report = compare_with_classification(
                    &arcs,
                    Window::new(input.w),
                    input.n,
                    input.mode.into(),
                )?;
                if as_json {
                    outln!("{}", json(&report)?);
                } else {
                    outln!("seed: {}", arcs_text(&arcs));
                    outln!("closure size: {}", report.closure_size);
                    outln!("unsound: {}", arcs_text(&report.unsound));
                    outln!("missing inside margin: {}", arcs_text(&report.missing));
                    if let Some(c) = report.connectivity_agrees {
                        outln!("connectivity agrees: {c}");
                    }
                    outln!("agrees: {}", report.agrees());
                }
                return Ok(report.agrees());
            }
        },
        Command::Render(args) => run_render(args)?,
        Command::Verify { only } => {
            let mut all_ok = true;
            let mut matched = false;
            for (id, f) in verify::CRITERIA {
                if only.as_deref().is_some_and(|o| o != id) {
                    continue;
                }
                matched = true;
                let report = f()?;
                all_ok &= report.passed;
                if as_json {
                    outln!("{}", json(&report)?);
                } else {
                    outln!("{report}");
                }
            }
            if !matched {
                bail!("no criterion with id {}", only.unwrap_or_default());
            }
            return Ok(all_ok);
        }
    }
    Ok(true)
}

fn run_tstruct(action: TsCmd, as_json: bool) -> anyhow::Result<()> {
    let print_ts = |ts: &TStructure| -> anyhow::Result<()> {
        if as_json {
            outln!("{}", json(ts)?);
        } else {
            outln!("{ts}");
        }
        Ok(())
    };
    match action {
        TsCmd::Member { ts, arc } => {
            let ts = parse_ts(&ts)?;
            let arc = parse_arc(&arc)?;
            check_arcs(ts.n(), &[arc])?;
            let co = coaisle_presentation(&ts);
            let (aisle, coaisle) = (ts.aisle_contains(&arc), co.contains(&arc));
            if as_json {
                outln!(
                    "{}",
                    json(&serde_json::json!({ "arc": arc, "aisle": aisle, "coaisle": coaisle }))?
                );
            } else {
                outln!("aisle: {aisle}");
                outln!("coaisle: {coaisle}");
            }
        }
        TsCmd::Coaisle { ts } => {
            let co = coaisle_presentation(&parse_ts(&ts)?);
            if as_json {
                outln!("{}", json(&co)?);
            } else {
                let bounds: Vec<String> = co.bounds.iter().map(ToString::to_string).collect();
                outln!("{}; {}", co.partition, bounds.join(","));
            }
        }
        TsCmd::Heart { ts } => {
            let arcs = heart(&parse_ts(&ts)?);
            if as_json {
                outln!("{}", json(&arcs)?);
            } else {
                outln!("{}", arcs_text(&arcs));
            }
        }
        TsCmd::Approx { ts, arc } => {
            let ts = parse_ts(&ts)?;
            let arc = parse_arc(&arc)?;
            check_arcs(ts.n(), &[arc])?;
            outln!("{}", json(&approx_triangle(&ts, &arc)?)?);
        }
        TsCmd::Meet { ts, other } => print_ts(&ts_meet(&parse_ts(&ts)?, &parse_ts(&other)?)?)?,
        TsCmd::Join { ts, other } => print_ts(&ts_join(&parse_ts(&ts)?, &parse_ts(&other)?)?)?,
        TsCmd::Gen { n, arcs } => {
            let arcs = parse_arc_list(&arcs)?;
            check_arcs(n, &arcs)?;
            print_ts(&aisle_generated(&arcs, n))?;
        }
        TsCmd::Classify { ts } => {
            let ts = parse_ts(&ts)?;
            let class = ts.equiv_class();
            let facts = serde_json::json!({
                "class": class,
                "left_nondegenerate": ts.is_left_nondegenerate(),
                "right_nondegenerate": ts.is_right_nondegenerate(),
                "nondegenerate": ts.is_nondegenerate(),
                "bounded_above": ts.is_bounded_above(),
                "bounded_below": ts.is_bounded_below(),
                "heart_size": heart(&ts).len(),
            });
            if as_json {
                outln!("{}", json(&facts)?);
            } else {
                outln!("class: {} Z={:?}", class.partition, class.z_indices);
                for key in [
                    "left_nondegenerate",
                    "right_nondegenerate",
                    "nondegenerate",
                    "bounded_above",
                    "bounded_below",
                    "heart_size",
                ] {
                    outln!("{key}: {}", facts[key]);
                }
            }
        }
    }
    Ok(())
}

fn run_render(args: RenderArgs) -> anyhow::Result<()> {
    let spec = RenderSpec {
        format: match args.format {
            OutFormat::Svg => RenderFormat::Svg,
            OutFormat::Dot => RenderFormat::Dot,
            OutFormat::Json => RenderFormat::Json,
        },
        annotate: !args.no_annotate,
        size: args.size,
    };
    let need = |v: &Option<String>, flag: &str| -> anyhow::Result<String> {
        v.clone()
            .with_context(|| format!("--{flag} is required for this object"))
    };
    let output = match args.object {
        ObjectKind::Arcs => {
            let n = args.n.context("--n is required for arcs")?;
            let arcs = match &args.arcs {
                Some(a) => parse_arc_list(a)?,
                None => Vec::new(),
            };
            check_arcs(n, &arcs)?;
            render(&RenderObject::Arcs { n, arcs: &arcs }, &spec)?
        }
        ObjectKind::Thick => {
            let t = ThickSubcat::new(parse_partition(&need(&args.p, "p")?, args.n)?);
            render(&RenderObject::Thick(&t), &spec)?
        }
        ObjectKind::Aisle => render(
            &RenderObject::Aisle(&parse_ts(&need(&args.ts, "ts")?)?),
            &spec,
        )?,
        ObjectKind::Coaisle => render(
            &RenderObject::Coaisle(&parse_ts(&need(&args.ts, "ts")?)?),
            &spec,
        )?,
        ObjectKind::Hasse => {
            let what = args.what.context("--what is required for Hasse diagrams")?;
            let n = args.n.context("--n is required for Hasse diagrams")?;
            render(&RenderObject::Hasse(&hasse_for(what, n, args.w)?), &spec)?
        }
    };
    let output = if output.ends_with('\n') {
        output
    } else {
        output + "\n"
    };
    match args.out {
        Some(path) => {
            fs::write(&path, output).with_context(|| format!("writing {}", path.display()))?
        }
        None => out!("{output}"),
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::GuardExceeded { .. }) => 3,
        Some(Error::Internal(_)) => 1,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
