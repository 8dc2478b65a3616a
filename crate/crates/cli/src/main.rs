mod input;
mod output;
mod svg;

use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use highway_core::cross::{
    approx_cross_1eps, approx_cross_const, cross_decision, exact_cross_small, optimal_cross_infinite,
};
use highway_core::line::{
    optimal_line_at_orientation, optimal_line_free_infinite, optimal_line_l2_approx, optimal_line_l2_exact,
};
use highway_core::oracle::{
    adversarial_diameter_instance, oracle_cross, oracle_line, GridSpec, OracleBest, OrientationSpec,
};
use highway_core::travel::{diameter_given_cross, diameter_given_line};
use highway_core::{CrossCenter, Facility, HighwayLine, Metric, Point, PointSet, SolveReport, SpeedProfile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Place a highway or a highway cross minimizing the travel-time diameter
/// of a planar point set.
#[derive(Parser)]
#[command(name = "highway", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an optimal or approximate facility for a point file.
    Solve(SolveArgs),
    /// Decide whether one cross serves every pair of a pair file within a budget.
    Decide(DecideArgs),
    /// Travel-time diameter of a given facility.
    Eval(EvalArgs),
    /// Brute-force grid search for the best facility.
    Oracle(OracleArgs),
    /// Write a test instance as a point file.
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FacilityKind {
    Line,
    Cross,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    L1,
    L2,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::L1 => Metric::L1,
            MetricArg::L2 => Metric::L2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Approx,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    /// `n` points uniform in a square of side `side`.
    Uniform,
    /// Points on the unit circle from the value sets `a` and `b`.
    Disjointness,
    /// Two-point octagon instance where the axes are not optimal.
    Octagon,
    /// Five points whose infinite-speed optimum moves when one is added.
    Incremental,
    /// Instance on which the median highways are far from optimal.
    Median,
}

fn parse_speed(s: &str) -> Result<SpeedProfile, String> {
    if s.eq_ignore_ascii_case("inf") {
        return Ok(SpeedProfile::infinite());
    }
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    SpeedProfile::new(v).map_err(|e| e.to_string())
}

fn parse_orientation(s: &str) -> Result<OrientationSpec, String> {
    if s == "free" {
        return Ok(OrientationSpec::Free);
    }
    let phi = s
        .strip_prefix("fixed:")
        .ok_or_else(|| format!("expected fixed:<radians> or free, got {s}"))?;
    let phi: f64 = phi.parse().map_err(|_| format!("not an angle: {phi}"))?;
    if !phi.is_finite() {
        return Err(format!("not an angle: {phi}"));
    }
    Ok(OrientationSpec::Fixed(phi))
}

fn parse_center(s: &str) -> Result<Point, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b, got {s}"))?;
    let a: f64 = a.trim().parse().map_err(|_| format!("not a number: {a}"))?;
    let b: f64 = b.trim().parse().map_err(|_| format!("not a number: {b}"))?;
    Ok(Point::new(a, b))
}

#[derive(Args)]
struct FacilityArgs {
    #[arg(long, value_enum, default_value = "line")]
    facility: FacilityKind,
    #[arg(long, value_enum, default_value = "l2")]
    metric: MetricArg,
    /// Highway speed, a number greater than 1 or `inf`.
    #[arg(long, value_parser = parse_speed)]
    speed: SpeedProfile,
    /// Highway direction: `fixed:<radians>` or `free`.
    #[arg(long, value_parser = parse_orientation, default_value = "fixed:0")]
    orientation: OrientationSpec,
}

#[derive(Args)]
struct GridArgs {
    /// Grid points per axis of each oracle scan.
    #[arg(long, default_value_t = 200)]
    resolution: usize,
    /// Oracle refinement rounds.
    #[arg(long, default_value_t = 4)]
    rounds: usize,
    /// Grid points refined per round.
    #[arg(long, default_value_t = 4)]
    keep: usize,
}

impl GridArgs {
    fn spec(&self) -> GridSpec {
        GridSpec::new(self.resolution, self.rounds, self.keep)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also draw the points and the facility as an SVG figure.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    facility: FacilityArgs,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    /// Accuracy of the approximate cross solver; without it the median
    /// highways are used.
    #[arg(long)]
    epsilon: Option<f64>,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutputArgs,
    input: PathBuf,
}

#[derive(Args)]
struct DecideArgs {
    #[arg(long, value_enum, default_value = "cross")]
    facility: FacilityKind,
    #[arg(long, value_parser = parse_speed)]
    speed: SpeedProfile,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Pair file, one `x1,y1,x2,y2` per line.
    input: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    facility: FacilityArgs,
    /// Offset of the highway along its normal `(-sin phi, cos phi)`.
    #[arg(long, allow_hyphen_values = true)]
    offset: Option<f64>,
    /// Cross center `a,b`.
    #[arg(long, value_parser = parse_center, allow_hyphen_values = true)]
    center: Option<Point>,
    #[command(flatten)]
    out: OutputArgs,
    input: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    facility: FacilityArgs,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutputArgs,
    input: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10.0)]
    side: f64,
    /// First value set of the disjointness instance, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    a: Vec<f64>,
    /// Second value set of the disjointness instance, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    b: Vec<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Why a command failed; decides the exit status.
enum Failure {
    /// Unsupported or inconsistent options (status 2).
    Config(String),
    /// Unreadable or malformed input (status 3).
    Parse(String),
    /// Output could not be written (status 1).
    Io(String),
}

impl From<highway_core::Error> for Failure {
    fn from(e: highway_core::Error) -> Self {
        match e {
            highway_core::Error::L1RequiresAxisAligned => Failure::Config(L1_MESSAGE.into()),
            other => Failure::Config(other.to_string()),
        }
    }
}

const L1_MESSAGE: &str = "L1 metric requires axis-aligned highway: \
    a highway of arbitrary direction does not make sense for the Manhattan metric";

type Outcome<T> = Result<T, Failure>;

fn load_points(path: &Path) -> Outcome<PointSet> {
    let pts = input::read_points(path).map_err(Failure::Parse)?;
    PointSet::new(pts).map_err(|e| Failure::Parse(e.to_string()))
}

fn emit(text: &str, path: Option<&Path>) -> Outcome<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_combination(f: &FacilityArgs) -> Outcome<()> {
    match f.facility {
        FacilityKind::Line => {
            if f.metric == MetricArg::L1 {
                match f.orientation {
                    OrientationSpec::Free => return Err(Failure::Config(L1_MESSAGE.into())),
                    OrientationSpec::Fixed(phi) => {
                        let phi = highway_core::geom::normalize_angle(phi);
                        if phi != 0.0 && (phi - FRAC_PI_2).abs() > 1e-12 {
                            return Err(Failure::Config(L1_MESSAGE.into()));
                        }
                    }
                }
            }
        }
        FacilityKind::Cross => {
            if f.metric == MetricArg::L2 && !f.speed.is_infinite() {
                return Err(Failure::Config(
                    "highway crosses with finite speed are supported under the L1 metric only (use --metric l1)".into(),
                ));
            }
        }
    }
    Ok(())
}

fn oracle_value(best: &OracleBest, f: &FacilityArgs, n: usize, elapsed: f64) -> Value {
    let method = match best.facility {
        Facility::Line(_) => "oracle_line",
        Facility::Cross(_) => "oracle_cross",
    };
    json!({
        "schema": output::SCHEMA,
        "command": "oracle",
        "points": n,
        "metric": Metric::from(f.metric).to_string(),
        "speed": output::speed(&f.speed),
        "facility": output::facility(&best.facility),
        "diameter": best.diameter,
        "witness": [output::point(best.witness.0), output::point(best.witness.1)],
        "guarantee": output::guarantee(None),
        "method": method,
        "shape": Value::Null,
        "elapsed_seconds": elapsed,
    })
}

fn run_oracle(ps: &PointSet, f: &FacilityArgs, grid: &GridSpec) -> Outcome<OracleBest> {
    Ok(match f.facility {
        FacilityKind::Line => oracle_line(ps, f.metric.into(), f.speed, f.orientation, grid)?,
        FacilityKind::Cross => oracle_cross(ps, f.speed, grid),
    })
}

fn solve_line(ps: &PointSet, f: &FacilityArgs, mode: Mode) -> Outcome<SolveReport> {
    let metric = Metric::from(f.metric);
    Ok(match (f.orientation, mode) {
        (OrientationSpec::Fixed(phi), Mode::Exact) => optimal_line_at_orientation(ps, metric, f.speed, phi)?,
        (OrientationSpec::Fixed(_), _) => {
            return Err(Failure::Config(
                "approx mode needs --orientation free or --facility cross; a fixed orientation is solved exactly".into(),
            ))
        }
        (OrientationSpec::Free, _) if f.speed.is_infinite() => optimal_line_free_infinite(ps)?,
        (OrientationSpec::Free, Mode::Exact) => optimal_line_l2_exact(ps, f.speed)?,
        (OrientationSpec::Free, _) => optimal_line_l2_approx(ps, f.speed)?,
    })
}

fn solve_cross(ps: &PointSet, speed: SpeedProfile, mode: Mode, eps: Option<f64>) -> Outcome<SolveReport> {
    if speed.is_infinite() {
        return Ok(optimal_cross_infinite(ps));
    }
    Ok(match (mode, eps) {
        (Mode::Exact, _) => exact_cross_small(ps, speed)?,
        (_, Some(e)) => approx_cross_1eps(ps, speed, e)?,
        (_, None) => approx_cross_const(ps, speed),
    })
}

fn solve(args: &SolveArgs) -> Outcome<()> {
    let f = &args.facility;
    check_combination(f)?;
    let ps = load_points(&args.input)?;
    let start = Instant::now();
    let (value, facility, shape) = if args.mode == Mode::Oracle {
        let best = run_oracle(&ps, f, &args.grid.spec())?;
        let mut v = oracle_value(&best, f, ps.len(), start.elapsed().as_secs_f64());
        v["command"] = json!("solve");
        (v, best.facility, None)
    } else {
        let report = match f.facility {
            FacilityKind::Line => solve_line(&ps, f, args.mode)?,
            FacilityKind::Cross => solve_cross(&ps, f.speed, args.mode, args.epsilon)?,
        };
        let v = output::solve_report(&report, &f.speed, ps.len(), start.elapsed().as_secs_f64());
        (v, report.facility, report.shape)
    };
    if let Some(path) = &args.out.svg {
        let text = svg::render(ps.points(), &facility, shape.as_ref());
        emit(&text, Some(path))?;
    }
    emit(&output::to_string(&value), args.out.output.as_deref())
}

fn decide(args: &DecideArgs) -> Outcome<()> {
    if args.facility != FacilityKind::Cross {
        return Err(Failure::Config("the decision procedure is available for crosses only".into()));
    }
    let pairs = input::read_pairs(&args.input).map_err(Failure::Parse)?;
    let start = Instant::now();
    let found = cross_decision(&pairs, args.delta, args.speed)?;
    let value = json!({
        "schema": output::SCHEMA,
        "command": "decide",
        "pairs": pairs.len(),
        "speed": output::speed(&args.speed),
        "delta": args.delta,
        "feasible": found.is_some(),
        "center": found.map_or(Value::Null, |c| output::point(c.center())),
        "elapsed_seconds": start.elapsed().as_secs_f64(),
    });
    emit(&output::to_string(&value), args.output.as_deref())
}

fn eval(args: &EvalArgs) -> Outcome<()> {
    let f = &args.facility;
    check_combination(f)?;
    let ps = load_points(&args.input)?;
    let start = Instant::now();
    let (facility, d) = match f.facility {
        FacilityKind::Line => {
            let OrientationSpec::Fixed(phi) = f.orientation else {
                return Err(Failure::Config("eval needs --orientation fixed:<radians>".into()));
            };
            let offset = args
                .offset
                .ok_or_else(|| Failure::Config("eval of a line needs --offset".into()))?;
            let h = HighwayLine::new(phi, offset, f.speed);
            (Facility::Line(h), diameter_given_line(&ps, &h, f.metric.into())?)
        }
        FacilityKind::Cross => {
            let c = args
                .center
                .ok_or_else(|| Failure::Config("eval of a cross needs --center a,b".into()))?;
            let sigma = CrossCenter::new(c.x, c.y, f.speed);
            (Facility::Cross(sigma), diameter_given_cross(&ps, &sigma))
        }
    };
    let value = json!({
        "schema": output::SCHEMA,
        "command": "eval",
        "points": ps.len(),
        "metric": Metric::from(f.metric).to_string(),
        "speed": output::speed(&f.speed),
        "facility": output::facility(&facility),
        "diameter": d.value,
        "witness": [output::point(d.witness.0), output::point(d.witness.1)],
        "elapsed_seconds": start.elapsed().as_secs_f64(),
    });
    if let Some(path) = &args.out.svg {
        emit(&svg::render(ps.points(), &facility, None), Some(path))?;
    }
    emit(&output::to_string(&value), args.out.output.as_deref())
}

fn oracle(args: &OracleArgs) -> Outcome<()> {
    let f = &args.facility;
    check_combination(f)?;
    let ps = load_points(&args.input)?;
    let start = Instant::now();
    let best = run_oracle(&ps, f, &args.grid.spec())?;
    let value = oracle_value(&best, f, ps.len(), start.elapsed().as_secs_f64());
    if let Some(path) = &args.out.svg {
        emit(&svg::render(ps.points(), &best.facility, None), Some(path))?;
    }
    emit(&output::to_string(&value), args.out.output.as_deref())
}

fn generate(args: &GenArgs) -> Outcome<()> {
    let coords = |c: &[(f64, f64)]| c.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>();
    let (points, header) = match args.kind {
        GenKind::Uniform => {
            if args.n == 0 || !(args.side > 0.0 && args.side.is_finite()) {
                return Err(Failure::Config("uniform instances need --n >= 1 and a positive --side".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let pts = (0..args.n)
                .map(|_| Point::new(rng.gen_range(0.0..args.side), rng.gen_range(0.0..args.side)))
                .collect();
            (pts, format!("uniform n={} side={} seed={}", args.n, args.side, args.seed))
        }
        GenKind::Disjointness => {
            let ps = adversarial_diameter_instance(&args.a, &args.b)?;
            (ps.points().to_vec(), "set-disjointness points on the unit circle".into())
        }
        GenKind::Octagon => {
            let mut pts = coords(&[(-7.0, 0.0), (7.0, 1.0)]);
            for (a, b) in [(2.0, 1.0), (1.0, 2.0)] {
                for (sx, sy) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                    pts.push(Point::new(sx * a, sy * b));
                }
            }
            (pts, "octagon with two far points".into())
        }
        GenKind::Incremental => (
            coords(&[(0.0, 9.0), (0.0, 11.0), (9.0, 0.0), (11.0, 0.0), (3.0, 10.0)]),
            "four points plus one that moves the infinite-speed optimum".into(),
        ),
        GenKind::Median => {
            let e = 1e-3;
            (
                coords(&[
                    (1.0, 0.0),
                    (-1.0, 0.0),
                    (0.0, 1.0),
                    (0.0, -1.0),
                    (-0.5, 0.25 + e),
                    (-0.5, -0.25 - e),
                    (e, -0.5),
                ]),
                "median highways lower-bound instance".into(),
            )
        }
    };
    emit(&input::write_points(&points, &header), args.output.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(a) => solve(a),
        Command::Decide(a) => decide(a),
        Command::Eval(a) => eval(a),
        Command::Oracle(a) => oracle(a),
        Command::Gen(a) => generate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
