use std::f64::consts::PI;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use cusp_iso::cusp::{PolygonalCuspDoc, RegularCusp};
use cusp_iso::fillpair::{length_lower_bound, verify_bound_pipeline, CombinatorialMap};
use cusp_iso::hyperbolic::{
    boundary_geodesic, fixed_base_angle_derivatives, fixed_base_angles, ideal_apex_angle_sum,
    ideal_apex_min, ideal_apex_slope, isosceles_angle_sum, CuspTriangle, FiniteTriangle,
};
use cusp_iso::json::format_real;
use cusp_iso::suites::{run_suite, Suite, SuiteConfig, Tolerances};
use cusp_iso::{Error, PolygonalCusp, DEFAULT_SEED};
use serde_json::value::RawValue;

#[derive(Parser, Debug)]
#[command(
    name = "cusp-iso",
    version,
    about = "Isoperimetric bounds for hyperbolic polygonal cusps and filling pairs"
)]
struct Cli {
    /// Output format. JSON is canonical; human output rounds.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    output: Format,

    /// Seed for every randomized check.
    #[arg(long, env = "CUSP_ISO_SEED", default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,

    /// Override a named tolerance, e.g. `soundness=1e-8`. Repeatable.
    #[arg(long = "tolerance-override", value_name = "NAME=VALUE", global = true)]
    tolerance_override: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

/// A real, or `auto` for the right-angled regular value.
#[derive(Debug, Clone, Copy)]
enum Amount {
    Auto,
    Value(f64),
}

impl FromStr for Amount {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Amount::Auto);
        }
        s.parse::<f64>()
            .map(Amount::Value)
            .map_err(|e| format!("expected a number or `auto`: {e}"))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length lower bound for filling pairs on a once-punctured genus-g surface.
    Bound {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        genus: u64,
    },
    /// Regular cusp from a side count and one of perimeter, area or angle;
    /// or measurements of a cusp read from a JSON document.
    Cusp {
        #[arg(long)]
        p: Option<usize>,
        /// Perimeter (`auto`: right-angled, 2p ln(√2+1)).
        #[arg(long = "L")]
        perimeter: Option<Amount>,
        /// Area (`auto`: right-angled, pπ/2).
        #[arg(long = "A")]
        area: Option<Amount>,
        /// Interior angle in radians.
        #[arg(long)]
        theta: Option<f64>,
        /// Cusp document `{"vertices": [[x, y], ...], "width": w}`.
        #[arg(long, conflicts_with_all = ["p", "perimeter", "area", "theta"])]
        input: Option<PathBuf>,
    },
    /// Triangle kernels: `--sides a b c`, `--side l --theta t` (one ideal
    /// vertex), `--base c --total l [--x x]`, or `--a a --b b [--x x]`.
    Triangle {
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
        sides: Option<Vec<f64>>,
        #[arg(long)]
        side: Option<f64>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        base: Option<f64>,
        #[arg(long)]
        total: Option<f64>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        x: Option<f64>,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long = "L")]
        perimeter: Option<Amount>,
        #[arg(long = "A")]
        area: Option<Amount>,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        /// Random configurations checked directly per case.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        grid: Option<usize>,
        /// Include per-restart values in the reports.
        #[arg(long)]
        trace: bool,
    },
    /// Run the filling-pair pipeline on a map document.
    Fillpair { path: PathBuf },
}

/// One value in a flat record.
enum Field {
    Real(f64),
    Reals(Vec<f64>),
    Int(i64),
    Text(String),
    Raw(Box<RawValue>),
}

impl Field {
    fn json(&self) -> String {
        match self {
            Field::Real(v) => format_real(*v),
            Field::Reals(vs) => format!(
                "[{}]",
                vs.iter()
                    .map(|v| format_real(*v))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            Field::Int(v) => v.to_string(),
            Field::Text(s) => serde_json::to_string(s).expect("strings serialize"),
            Field::Raw(r) => r.get().to_string(),
        }
    }

    fn plain(&self, human: bool) -> String {
        match self {
            Field::Real(v) if human => format!("{v:.6}"),
            Field::Reals(vs) if human => vs
                .iter()
                .map(|v| format!("{v:.6}"))
                .collect::<Vec<_>>()
                .join(" "),
            Field::Reals(vs) => vs
                .iter()
                .map(|v| format_real(*v))
                .collect::<Vec<_>>()
                .join(";"),
            Field::Text(s) => s.clone(),
            other => other.json(),
        }
    }
}

#[derive(Default)]
struct Record(Vec<(String, Field)>);

impl Record {
    fn put(mut self, key: &str, f: Field) -> Self {
        self.0.push((key.to_string(), f));
        self
    }

    fn real(self, key: &str, v: f64) -> Self {
        self.put(key, Field::Real(v))
    }

    fn reals(self, key: &str, v: Vec<f64>) -> Self {
        self.put(key, Field::Reals(v))
    }

    fn int(self, key: &str, v: i64) -> Self {
        self.put(key, Field::Int(v))
    }

    fn raw<T: serde::Serialize>(self, key: &str, v: &T) -> Result<Self, Error> {
        Ok(self.put(key, Field::Raw(serde_json::value::to_raw_value(v)?)))
    }

    fn emit(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                writeln!(out, "{{")?;
                for (k, (key, f)) in self.0.iter().enumerate() {
                    let comma = if k + 1 < self.0.len() { "," } else { "" };
                    writeln!(
                        out,
                        "  {}: {}{comma}",
                        serde_json::to_string(key).expect("key"),
                        f.json()
                    )?;
                }
                writeln!(out, "}}")
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["key", "value"])?;
                for (key, f) in &self.0 {
                    w.write_record([key.as_str(), &f.plain(false)])?;
                }
                w.flush()
            }
            Format::Human => {
                let width = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (key, f) in &self.0 {
                    writeln!(out, "{key:width$}  {}", f.plain(true))?;
                }
                Ok(())
            }
        }
    }
}

fn silver() -> f64 {
    (2f64.sqrt() + 1.0).ln()
}

fn cmd_bound(genus: usize) -> Result<Record, Error> {
    let bound = length_lower_bound(genus)?;
    let p = 8 * genus - 4;
    let cusp = RegularCusp::from_angle(p, PI / 2.0)?;
    Ok(Record::default()
        .int("genus", genus as i64)
        .real("bound", bound)
        .real("side_length", cusp.l)
        .int("cusp_sides", p as i64)
        .real("cusp_angle", cusp.theta)
        .real("cusp_area", cusp.area())
        .real("cusp_perimeter", cusp.perimeter()))
}

fn measure(record: Record, cusp: &PolygonalCusp) -> Result<Record, Error> {
    Ok(record
        .raw("cusp", cusp)?
        .reals("side_lengths", cusp.side_lengths())
        .reals("angles", cusp.angles())
        .real("perimeter", cusp.perimeter())
        .real("area", cusp.area()))
}

fn cmd_cusp(
    p: Option<usize>,
    perimeter: Option<Amount>,
    area: Option<Amount>,
    theta: Option<f64>,
    input: Option<PathBuf>,
) -> Result<Record, Error> {
    if let Some(path) = input {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        let doc: PolygonalCuspDoc = serde_json::from_str(&text)?;
        let cusp = PolygonalCusp::try_from(doc)?;
        return measure(Record::default().int("p", cusp.side_count() as i64), &cusp);
    }
    let p = p.ok_or_else(|| Error::InvalidInput("--p is required without --input".into()))?;
    let regular = match (perimeter, area, theta) {
        (Some(l), None, None) => RegularCusp::from_perimeter(
            p,
            match l {
                Amount::Auto => 2.0 * p as f64 * silver(),
                Amount::Value(v) => v,
            },
        )?,
        (None, Some(a), None) => RegularCusp::from_area(
            p,
            match a {
                Amount::Auto => p as f64 * PI / 2.0,
                Amount::Value(v) => v,
            },
        )?,
        (None, None, Some(t)) => RegularCusp::from_angle(p, t)?,
        _ => {
            return Err(Error::InvalidInput(
                "give exactly one of --L, --A, --theta".into(),
            ))
        }
    };
    let record = Record::default()
        .int("p", p as i64)
        .real("l", regular.l)
        .real("theta", regular.theta);
    measure(record, &regular.realize()?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_triangle(
    sides: Option<Vec<f64>>,
    side: Option<f64>,
    theta: Option<f64>,
    base: Option<f64>,
    total: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    x: Option<f64>,
) -> Result<Record, Error> {
    match (sides, side, theta, base, total, a, b) {
        (Some(s), None, None, None, None, None, None) if x.is_none() => {
            let t = FiniteTriangle::new(s[0], s[1], s[2])?;
            Ok(Record::default().reals("sides", s).reals("angles", t.angles()?.to_vec()).real("area", t.area()?))
        }
        (None, Some(l), Some(th), None, None, None, None) if x.is_none() => {
            let t = CuspTriangle::new(l, th)?;
            Ok(Record::default().real("l", t.l).real("theta", t.theta).real("phi", t.phi).real("area", t.area()))
        }
        (None, None, None, Some(c), Some(l), None, None) => {
            let x = x.unwrap_or(l / 2.0);
            let angles = fixed_base_angles(c, l, x)?;
            let slopes = fixed_base_angle_derivatives(c, l, x)?;
            Ok(Record::default()
                .real("base", c)
                .real("total", l)
                .real("x", x)
                .reals("angles", angles.to_vec())
                .real("angle_sum", angles.iter().sum())
                .reals("derivatives", slopes.to_vec())
                .real("angle_sum_derivative", slopes.iter().sum())
                .real("isosceles_angle_sum", isosceles_angle_sum(c, l)?))
        }
        (None, None, None, None, None, Some(a), Some(b)) => {
            let x = x.unwrap_or((a * b).sqrt());
            let (ca, ra) = boundary_geodesic(a, x)?;
            let (cb, rb) = boundary_geodesic(b, x)?;
            Ok(Record::default()
                .real("a", a)
                .real("b", b)
                .real("x", x)
                .real("angle_sum", ideal_apex_angle_sum(a, b, x)?)
                .real("slope", ideal_apex_slope(a, b, x))
                .real("minimum", ideal_apex_min(a, b))
                .real("argmin", (a * b).sqrt())
                .reals("geodesic_a", vec![ca, ra])
                .reals("geodesic_b", vec![cb, rb]))
        }
        _ => Err(Error::InvalidInput(
            "choose one of: --sides A B C | --side L --theta T | --base C --total L [--x X] | --a A --b B [--x X]".into(),
        )),
    }
}

fn amount(v: Option<Amount>) -> Option<f64> {
    match v {
        Some(Amount::Value(x)) => Some(x),
        _ => None,
    }
}

struct Outcome {
    passed: bool,
}

fn cmd_verify(cli: &Cli, tolerances: Tolerances, out: &mut impl Write) -> Result<Outcome, Error> {
    let Command::Verify {
        suite,
        p,
        perimeter,
        area,
        restarts,
        samples,
        grid,
        trace,
    } = &cli.command
    else {
        unreachable!("dispatched on verify");
    };
    let cfg = SuiteConfig {
        seed: cli.seed,
        samples: *samples,
        restarts: *restarts,
        grid: *grid,
        p: *p,
        perimeter: amount(*perimeter),
        area: amount(*area),
        tolerances,
        trace: *trace,
    };
    if (perimeter.is_some() || area.is_some()) && p.is_none() {
        return Err(Error::InvalidInput("--L and --A need --p".into()));
    }
    let reports = run_suite(suite.parse()?, &cfg)?;
    let passed = reports.iter().all(|r| r.passed);
    let io = |e: io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    match cli.output {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports)?;
            writeln!(out).map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "check", "passed", "measured", "tolerance"])
                .map_err(|e| io(e.into()))?;
            for c in reports.iter().flat_map(|r| &r.checks) {
                w.write_record([
                    c.suite,
                    &c.name,
                    &c.passed.to_string(),
                    &format_real(c.measured),
                    &format_real(c.tolerance),
                ])
                .map_err(|e| io(e.into()))?;
            }
            w.flush().map_err(io)?;
        }
        Format::Human => {
            for c in reports.iter().flat_map(|r| &r.checks) {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{tag} {:<12} {:<80} {:.3e}",
                    c.suite, c.name, c.measured
                )
                .map_err(io)?;
            }
        }
    }
    for c in reports.iter().flat_map(|r| &r.checks).filter(|c| !c.passed) {
        eprintln!("failed: [{}] {}", c.suite, c.name);
    }
    Ok(Outcome { passed })
}

fn cmd_fillpair(path: &PathBuf, format: Format, out: &mut impl Write) -> Result<Outcome, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let map = CombinatorialMap::from_json(&text)?;
    let report = verify_bound_pipeline(&map)?;
    let io = |e: io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out).map_err(io)?;
        }
        Format::Csv | Format::Human => {
            let sides: Vec<String> = report
                .polygons
                .iter()
                .map(|p| p.sides.to_string())
                .collect();
            let forest: Vec<String> = report
                .spread_forest
                .edges
                .iter()
                .map(|e| e.to_string())
                .collect();
            let mut rec = Record::default()
                .int("genus", report.genus.g as i64)
                .int("intersections", report.genus.i as i64)
                .int("faces", report.genus.r as i64)
                .put("case", Field::Text(format!("{:?}", report.case)))
                .put("spread_forest", Field::Text(forest.join(" ")))
                .put("glued_sides", Field::Text(sides.join(" ")))
                .int("cusp_sides", report.cusp_sides as i64)
                .real("regular_perimeter", report.regular_perimeter)
                .real("bound", report.bound);
            for id in &report.identities {
                rec = rec.put(
                    &id.name,
                    Field::Text(format!(
                        "{} = {} ({})",
                        id.lhs,
                        id.rhs,
                        if id.holds { "ok" } else { "FAILED" }
                    )),
                );
            }
            rec.emit(format, out).map_err(io)?;
        }
    }
    for id in report.identities.iter().filter(|id| !id.holds) {
        eprintln!("identity failed: {} ({} vs {})", id.name, id.lhs, id.rhs);
    }
    Ok(Outcome {
        passed: report.passed,
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let mut tolerances = Tolerances::default();
    for spec in &cli.tolerance_override {
        let (name, value) = spec.split_once('=').ok_or_else(|| {
            Error::InvalidInput(format!("tolerance override {spec:?} is not NAME=VALUE"))
        })?;
        let value: f64 = value.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("tolerance value {value:?} is not a number"))
        })?;
        tolerances.set(name.trim(), value)?;
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io = |e: io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    let record = match &cli.command {
        Command::Bound { genus } => cmd_bound(*genus as usize)?,
        Command::Cusp {
            p,
            perimeter,
            area,
            theta,
            input,
        } => cmd_cusp(*p, *perimeter, *area, *theta, input.clone())?,
        Command::Triangle {
            sides,
            side,
            theta,
            base,
            total,
            a,
            b,
            x,
        } => cmd_triangle(sides.clone(), *side, *theta, *base, *total, *a, *b, *x)?,
        Command::Verify { .. } => return cmd_verify(cli, tolerances, &mut out),
        Command::Fillpair { path } => return cmd_fillpair(path, cli.output, &mut out),
    };
    record.emit(cli.output, &mut out).map_err(io)?;
    Ok(Outcome { passed: true })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { passed: true }) => ExitCode::SUCCESS,
        Ok(Outcome { passed: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
