//! Named verification suites. Each suite runs a family of checks and
//! reports the worst measured discrepancy of each against its tolerance.

use std::f64::consts::PI;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::value::{to_raw_value, RawValue};

use crate::cusp::{regular_angle, RegularCusp};
use crate::error::{Error, Result};
use crate::hyperbolic::{
    apex_case_value, fixed_base_angle_derivatives, fixed_base_angles, ideal_apex_angle_sum,
    isosceles_angle_sum, ApexCase,
};
use crate::json;
use crate::optimize::{
    perimeter_comparison, verify_apex_optimum, verify_fixed_base_optimum, verify_max_area,
    verify_min_perimeter, verify_perimeter_gap, SearchBudget,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    FixedBase,
    IdealApex,
    MaxArea,
    MinPerimeter,
    PerimeterGap,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "lemma24",
        "lemma26",
        "theorem12",
        "lemma29",
        "final_lemma",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FixedBase => "lemma24",
            Suite::IdealApex => "lemma26",
            Suite::MaxArea => "theorem12",
            Suite::MinPerimeter => "lemma29",
            Suite::PerimeterGap => "final_lemma",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma24" => Suite::FixedBase,
            "lemma26" => Suite::IdealApex,
            "theorem12" => Suite::MaxArea,
            "lemma29" => Suite::MinPerimeter,
            "final_lemma" => Suite::PerimeterGap,
            "all" => Suite::All,
            other => {
                return Err(Error::invalid(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

/// Tolerances used by the suites, overridable by name.
#[derive(Debug, Clone, Serialize)]
pub struct Tolerances {
    /// Allowed excess of any sample over a regular optimum.
    pub soundness: f64,
    /// Allowed gap between the best restart and the regular optimum.
    pub attainment: f64,
    /// Closed forms against direct evaluation.
    pub closed_form: f64,
    /// First derivatives against central differences.
    pub finite_difference: f64,
    /// Second derivative of the compact-polygon perimeter against second differences.
    pub curvature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            soundness: 1e-7,
            attainment: 1e-4,
            closed_form: 1e-10,
            finite_difference: 1e-5,
            curvature: 1e-4,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 5] = [
        "soundness",
        "attainment",
        "closed_form",
        "finite_difference",
        "curvature",
    ];

    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::invalid(format!(
                "tolerance {name} must be positive, got {value}"
            )));
        }
        let slot = match name {
            "soundness" => &mut self.soundness,
            "attainment" => &mut self.attainment,
            "closed_form" => &mut self.closed_form,
            "finite_difference" => &mut self.finite_difference,
            "curvature" => &mut self.curvature,
            other => {
                return Err(Error::invalid(format!(
                    "unknown tolerance {other:?}; expected one of {}",
                    Tolerances::NAMES.join(", ")
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub restarts: usize,
    /// Grid size for the one-dimensional searches; each suite has its own default.
    pub grid: Option<usize>,
    pub p: Option<usize>,
    pub perimeter: Option<f64>,
    pub area: Option<f64>,
    pub tolerances: Tolerances,
    /// Keep per-restart values in optimization reports.
    pub trace: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: crate::DEFAULT_SEED,
            samples: 100,
            restarts: 20,
            grid: None,
            p: None,
            perimeter: None,
            area: None,
            tolerances: Tolerances::default(),
            trace: false,
        }
    }
}

impl SuiteConfig {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            samples: self.samples,
            geometric_samples: self.samples,
            restarts: self.restarts,
            soundness_tol: self.tolerances.soundness,
            attainment_tol: self.tolerances.attainment,
            trace: self.trace,
        }
    }
}

/// One assertion: `measured` is compared against `tolerance` (for margin
/// checks the sign convention is stated in `name`).
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    #[serde(serialize_with = "json::real")]
    pub measured: f64,
    #[serde(serialize_with = "json::real")]
    pub tolerance: f64,
    /// The worst instance, kept for failed checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Instance,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub reports: Vec<Box<RawValue>>,
}

/// A serialized instance or report, kept verbatim so reals keep 17 digits.
pub type Instance = Option<Box<RawValue>>;

fn raw<T: Serialize + ?Sized>(v: &T) -> Result<Instance> {
    Ok(Some(to_raw_value(v)?))
}

fn fields(pairs: &[(&str, f64)]) -> Instance {
    let body: Vec<String> = pairs
        .iter()
        .map(|(k, v)| format!("\"{k}\":{}", json::format_real(*v)))
        .collect();
    RawValue::from_string(format!("{{{}}}", body.join(","))).ok()
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
    reports: Vec<Box<RawValue>>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checks: Vec::new(),
            reports: Vec::new(),
        }
    }

    /// Passes when `measured ≤ tolerance`.
    fn at_most(
        &mut self,
        name: impl Into<String>,
        measured: f64,
        tolerance: f64,
        instance: Instance,
    ) {
        let passed = measured <= tolerance;
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed,
            measured,
            tolerance,
            instance: if passed { None } else { instance },
        });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool, measured: f64, instance: Instance) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed: ok,
            measured,
            tolerance: 0.0,
            instance: if ok { None } else { instance },
        });
    }

    fn report<T: Serialize>(&mut self, r: &T) -> Result<()> {
        self.reports.push(raw(r)?.expect("serialized"));
        Ok(())
    }

    fn finish(self, seed: u64) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            seed,
            passed: self.checks.iter().all(|c| c.passed),
            checks: self.checks,
            reports: self.reports,
        }
    }
}

/// Tracks the largest value seen and the instance that produced it.
struct Worst(f64, Instance);

impl Worst {
    fn new() -> Self {
        Worst(0.0, None)
    }

    fn see(&mut self, v: f64, instance: impl FnOnce() -> Instance) {
        if v.is_nan() || v > self.0 {
            self.0 = v;
            self.1 = instance();
        }
    }
}

fn silver() -> f64 {
    (2f64.sqrt() + 1.0).ln()
}

fn run_fixed_base(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rec = Recorder::new("lemma24");
    let tol = &cfg.tolerances;
    let grid = cfg.grid.unwrap_or(2000);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut argmin, mut closed, mut fd) = (Worst::new(), Worst::new(), Worst::new());
    let mut grid_sound = true;
    for _ in 0..50 {
        let c = rng.gen_range(0.2f64.ln()..3f64.ln()).exp();
        let l = c + rng.gen_range(0.05..5.0);
        let r = verify_fixed_base_optimum(c, l, grid)?;
        let step = c / (grid + 1) as f64;
        argmin.see(r.gap / step, || {
            fields(&[("c", c), ("l", l), ("argmin", r.optimizer_argument[0])])
        });
        grid_sound &= r.sound;

        let direct: f64 = fixed_base_angles(c, l, l / 2.0)?.iter().sum();
        let err = (isosceles_angle_sum(c, l)? - direct).abs();
        closed.see(err, || {
            fields(&[("c", c), ("l", l), ("closed_form_error", err)])
        });

        let (lo, hi) = ((l - c) / 2.0, (l + c) / 2.0);
        for k in 1..=5 {
            let x = lo + (hi - lo) * (0.1 + 0.8 * k as f64 / 6.0);
            let h = 1e-6;
            let plus = fixed_base_angles(c, l, x + h)?;
            let minus = fixed_base_angles(c, l, x - h)?;
            let exact = fixed_base_angle_derivatives(c, l, x)?;
            for j in 0..3 {
                let err = ((plus[j] - minus[j]) / (2.0 * h) - exact[j]).abs();
                fd.see(err, || {
                    fields(&[
                        ("c", c),
                        ("l", l),
                        ("x", x),
                        ("angle", j as f64),
                        ("error", err),
                    ])
                });
            }
        }
    }
    rec.at_most(
        "grid argmin within one step of l/2 (in steps)",
        argmin.0,
        1.0,
        argmin.1,
    );
    rec.holds(
        "no grid point beats the isosceles sum",
        grid_sound,
        0.0,
        None,
    );
    rec.at_most(
        "isosceles closed form vs direct sum",
        closed.0,
        tol.closed_form,
        closed.1,
    );
    rec.at_most(
        "angle derivatives vs central differences",
        fd.0,
        tol.finite_difference,
        fd.1,
    );

    let sums = [2.0, 3.0, 4.0, 5.0].map(|l| isosceles_angle_sum(1.0, l));
    let sums = sums.into_iter().collect::<Result<Vec<_>>>()?;
    let drop = sums
        .windows(2)
        .map(|w| w[0] - w[1])
        .fold(f64::INFINITY, f64::min);
    rec.holds(
        "isosceles sum decreasing in l (smallest drop)",
        drop > 0.0,
        drop,
        fields(&[
            ("l=2", sums[0]),
            ("l=3", sums[1]),
            ("l=4", sums[2]),
            ("l=5", sums[3]),
        ]),
    );
    rec.report(&verify_fixed_base_optimum(1.0, 3.0, grid)?)?;
    Ok(rec.finish(cfg.seed))
}

fn run_apex(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rec = Recorder::new("lemma26");
    let tol = &cfg.tolerances;
    let grid = cfg.grid.unwrap_or(20_000);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut argmin, mut joins, mut minimum) = (Worst::new(), Worst::new(), Worst::new());
    let mut sound = true;
    for _ in 0..50 {
        let a = rng.gen_range(0.1f64.ln()..10f64.ln()).exp();
        let b = a * rng.gen_range(1.01f64.ln()..100f64.ln()).exp();
        let r = verify_apex_optimum(a, b, grid)?;
        let dlog = ((100.0 * b / a).ln()) / (grid - 1) as f64;
        let step = r.optimizer_argument[0] * (dlog.exp() - 1.0);
        argmin.see(r.gap / step, || {
            fields(&[("a", a), ("b", b), ("argmin", r.optimizer_argument[0])])
        });
        sound &= r.sound;
        let at_root = ideal_apex_angle_sum(a, b, (a * b).sqrt())?;
        let err = (at_root - r.reference_value).abs();
        minimum.see(err, || {
            fields(&[
                ("a", a),
                ("b", b),
                ("value_at_root", at_root),
                ("closed_form", r.reference_value),
            ])
        });
        for (x, left, right) in [
            (a, ApexCase::Below, ApexCase::Between),
            (b, ApexCase::Between, ApexCase::Beyond),
        ] {
            let jump = (apex_case_value(a, b, x, left)? - apex_case_value(a, b, x, right)?).abs();
            joins.see(jump, || {
                fields(&[("a", a), ("b", b), ("x", x), ("jump", jump)])
            });
        }
    }
    rec.at_most(
        "grid argmin within one step of sqrt(ab) (in steps)",
        argmin.0,
        1.0,
        argmin.1,
    );
    rec.holds(
        "no grid point beats the closed-form minimum",
        sound,
        0.0,
        None,
    );
    rec.at_most(
        "case formulas agree at x = a and x = b",
        joins.0,
        tol.closed_form,
        joins.1,
    );
    rec.at_most(
        "angle sum at sqrt(ab) vs 2 asin(2 sqrt(ab) / (a + b))",
        minimum.0,
        1e-9,
        minimum.1,
    );

    // Half-angle of the regular cusp as a function of side length.
    let n = 5000;
    let ls: Vec<f64> = (0..n)
        .map(|k| 1e-3 + (20.0 - 1e-3) * k as f64 / (n - 1) as f64)
        .collect();
    let thetas: Vec<f64> = ls.iter().map(|&l| regular_angle(l)).collect();
    let drop = thetas
        .windows(2)
        .map(|w| w[0] - w[1])
        .fold(f64::INFINITY, f64::min);
    rec.holds(
        "regular angle strictly decreasing on [1e-3, 20] (smallest drop)",
        drop > 0.0,
        drop,
        None,
    );
    rec.at_most(
        "regular angle near pi at l = 1e-3",
        PI - thetas[0],
        1e-2,
        None,
    );
    rec.at_most("regular angle near 0 at l = 20", thetas[n - 1], 1e-2, None);
    let l0 = RegularCusp::from_angle(4, PI / 2.0)?.l;
    rec.at_most(
        "side with half-angle pi/4 equals 2 ln(sqrt2 + 1)",
        (l0 - 2.0 * silver()).abs(),
        1e-12,
        None,
    );
    rec.report(&verify_apex_optimum(1.0, 4.0, grid.max(100_000))?)?;
    Ok(rec.finish(cfg.seed))
}

fn cases_or(custom: Option<(usize, f64)>, default: Vec<(usize, f64)>) -> Vec<(usize, f64)> {
    custom.map_or(default, |c| vec![c])
}

fn run_max_area(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rec = Recorder::new("theorem12");
    let custom = match (cfg.p, cfg.perimeter) {
        (Some(p), Some(l)) => Some((p, l)),
        (Some(p), None) => Some((p, 2.0 * p as f64 * silver())),
        (None, Some(_)) => return Err(Error::invalid("a perimeter override needs a side count")),
        (None, None) => None,
    };
    let cases = cases_or(
        custom,
        vec![
            (3, 3.0),
            (4, 8.0 * silver()),
            (6, 12.0),
            (12, 24.0 * silver()),
        ],
    );
    for (p, l) in cases {
        let r = verify_max_area(p, l, &cfg.budget(), cfg.seed)?;
        let inst = raw(&r)?;
        rec.at_most(
            format!("p={p} L={l}: no area above the regular one"),
            r.worst_excess,
            cfg.tolerances.soundness,
            inst.clone(),
        );
        rec.at_most(
            format!("p={p} L={l}: best restart reaches the regular area"),
            r.gap,
            cfg.tolerances.attainment,
            inst,
        );
        rec.report(&r)?;
    }
    Ok(rec.finish(cfg.seed))
}

fn run_min_perimeter(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rec = Recorder::new("lemma29");
    let custom = match (cfg.p, cfg.area) {
        (Some(p), Some(a)) => Some((p, a)),
        (Some(p), None) => Some((p, p as f64 * PI / 2.0)),
        (None, Some(_)) => return Err(Error::invalid("an area override needs a side count")),
        (None, None) => None,
    };
    for (p, a) in cases_or(custom, vec![(4, 2.0 * PI), (12, 6.0 * PI)]) {
        let r = verify_min_perimeter(p, a, &cfg.budget(), cfg.seed)?;
        let inst = raw(&r)?;
        rec.at_most(
            format!("p={p} A={a}: no perimeter below the regular one"),
            r.worst_excess,
            cfg.tolerances.soundness,
            inst.clone(),
        );
        rec.at_most(
            format!("p={p} A={a}: best restart reaches the regular perimeter"),
            r.gap,
            cfg.tolerances.attainment,
            inst,
        );
        rec.report(&r)?;
    }
    Ok(rec.finish(cfg.seed))
}

fn run_final(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rec = Recorder::new("final_lemma");
    let r = verify_perimeter_gap(200.0, 0.01, cfg.tolerances.curvature)?;
    let inst = raw(&r)?;
    rec.at_most("h(4) = 0", r.h_at_4.abs(), 1e-12, inst.clone());
    rec.holds(
        "h strictly increasing on (4, 200] (smallest increment)",
        r.increasing,
        r.min_increment,
        inst.clone(),
    );
    rec.holds(
        "h positive on (4, 200] (minimum)",
        r.positive,
        r.min_h,
        inst.clone(),
    );
    rec.holds(
        "h' positive on (4, 200] (minimum)",
        r.slope_positive,
        r.min_slope,
        inst.clone(),
    );
    rec.holds(
        "h'' negative on (4, 200] (maximum)",
        r.concave,
        r.max_curvature,
        inst.clone(),
    );
    rec.at_most(
        "closed-form h'' vs second differences of f",
        r.max_curvature_error,
        cfg.tolerances.curvature,
        inst,
    );
    let mut slack = f64::INFINITY;
    let mut worst = None;
    let mut all = true;
    for n1 in 5..=30 {
        for n2 in 3..=30 {
            let c = perimeter_comparison(n1, n2)?;
            let s = c.f_n1 + c.g_n2 - c.g_m;
            all &= c.holds;
            if s < slack {
                slack = s;
                worst = raw(&c)?;
            }
        }
    }
    rec.holds(
        "f(n1) + g(n2) > g(n1 + n2 - 4) for 5 <= n1 <= 30, 3 <= n2 <= 30 (least slack)",
        all,
        slack,
        worst,
    );
    rec.report(&r)?;
    Ok(rec.finish(cfg.seed))
}

/// Run one suite, or every suite for [`Suite::All`].
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    Ok(match suite {
        Suite::FixedBase => vec![run_fixed_base(cfg)?],
        Suite::IdealApex => vec![run_apex(cfg)?],
        Suite::MaxArea => vec![run_max_area(cfg)?],
        Suite::MinPerimeter => vec![run_min_perimeter(cfg)?],
        Suite::PerimeterGap => vec![run_final(cfg)?],
        Suite::All => vec![
            run_fixed_base(cfg)?,
            run_apex(cfg)?,
            run_max_area(cfg)?,
            run_min_perimeter(cfg)?,
            run_final(cfg)?,
        ],
    })
}
