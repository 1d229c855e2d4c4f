//! Instance files, random generation, run reports, SVG rendering and the
//! benchmark suites behind the command-line front end.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cover_general::{fptas_general, gonzalez_2approx, solve_exact_general};
use crate::cover_restricted::{
    fptas_restricted, shrink, fptas_restricted_fast, sixapprox_restricted, solve_bipartition_restricted,
    solve_exact_restricted,
};
use crate::geom::{Disk, GeomError, Instance, Point};
use crate::oracles::{brute_pierce_delta, grid_refine_cover_general};
use crate::piercing::{candidate_deltas, decide_fast, decide_naive, solve_bipartition, solve_exact};

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: negative radius {radius}")]
    NegativeRadius { line: usize, radius: f64 },
    #[error("header announces {expected} disks but {found} were given")]
    CountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Formats `x` with at most twelve significant digits, always with a
/// decimal point or exponent, independent of locale.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    let s = if rounded.abs() < 1e-6 || rounded.abs() >= 1e15 {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    };
    if s.contains('.') || s.contains('e') || s.contains("inf") || s.contains("NaN") {
        s
    } else {
        s + ".0"
    }
}

/// Parses the `disks <n>` format; blank lines and `#` comments are ignored.
pub fn parse_instance(text: &str) -> Result<Instance, IoError> {
    let mut expected: Option<usize> = None;
    let mut disks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if expected.is_none() {
            if fields.len() != 2 || fields[0] != "disks" {
                return Err(IoError::Malformed {
                    line,
                    msg: "expected header `disks <n>`".into(),
                });
            }
            let n = fields[1].parse::<usize>().map_err(|_| IoError::Malformed {
                line,
                msg: format!("invalid disk count `{}`", fields[1]),
            })?;
            expected = Some(n);
            continue;
        }
        if fields.len() != 3 {
            return Err(IoError::Malformed {
                line,
                msg: format!("expected `x y r`, found {} fields", fields.len()),
            });
        }
        let mut vals = [0.0; 3];
        for (v, f) in vals.iter_mut().zip(&fields) {
            *v = f.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| IoError::Malformed {
                line,
                msg: format!("invalid number `{f}`"),
            })?;
        }
        if vals[2] < 0.0 {
            return Err(IoError::NegativeRadius {
                line,
                radius: vals[2],
            });
        }
        disks.push(Disk::at(vals[0], vals[1], vals[2]));
    }
    let expected = expected.ok_or(IoError::Malformed {
        line: 1,
        msg: "missing header `disks <n>`".into(),
    })?;
    if expected != disks.len() {
        return Err(IoError::CountMismatch {
            expected,
            found: disks.len(),
        });
    }
    Ok(Instance::new(disks)?)
}

pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = format!("disks {}\n", instance.len());
    for d in instance.disks() {
        let _ = writeln!(
            out,
            "{} {} {}",
            fmt_num(d.center.x),
            fmt_num(d.center.y),
            fmt_num(d.radius)
        );
    }
    out
}

pub fn read_instance(path: &Path) -> Result<Instance, IoError> {
    parse_instance(&fs::read_to_string(path)?)
}

/// `n` disks with centers uniform in `[0, box_size]²` and radii uniform in
/// `(0, r_max]`, deterministic per seed.
pub fn generate(n: usize, seed: u64, box_size: f64, r_max: f64) -> Instance {
    assert!(n >= 1, "at least one disk");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let disks = (0..n)
        .map(|_| {
            let x = rng.gen_range(0.0..=box_size);
            let y = rng.gen_range(0.0..=box_size);
            let r = r_max * (1.0 - rng.gen::<f64>());
            Disk::at(x, y, r)
        })
        .collect();
    Instance::new(disks).expect("generated disks are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Pierce,
    CoverGeneral,
    CoverRestricted,
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::Pierce => "pierce",
            Problem::CoverGeneral => "cover-general",
            Problem::CoverRestricted => "cover-restricted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Bipartition,
    Approx,
    Gonzalez,
    Sixapprox,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Bipartition => "bipartition",
            Mode::Approx => "approx",
            Mode::Gonzalez => "gonzalez",
            Mode::Sixapprox => "sixapprox",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("mode `{mode}` is not available for problem `{problem}`")]
    Unsupported { problem: &'static str, mode: &'static str },
    #[error("--eps is required for mode approx")]
    MissingEps,
    #[error("--eps is only accepted with mode approx")]
    UnexpectedEps,
    #[error("{0}")]
    Solver(String),
}

impl SolveError {
    /// Flag-combination errors are usage errors; solver errors mean invalid input.
    pub fn is_usage(&self) -> bool {
        !matches!(self, SolveError::Solver(_))
    }
}

/// One solver run as a CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub problem: Problem,
    pub mode: Mode,
    pub n: usize,
    pub eps: Option<f64>,
    pub radius: f64,
    pub c1: Point,
    pub c2: Point,
    pub seed: u64,
    pub wall_ms: Option<f64>,
}

impl RunReport {
    pub fn csv_header(with_time: bool) -> String {
        let mut h = "problem,algorithm,n,eps,radius,c1x,c1y,c2x,c2y,seed".to_string();
        if with_time {
            h.push_str(",wall_ms");
        }
        h
    }

    pub fn csv_row(&self) -> String {
        let mut row = format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.problem.name(),
            self.mode.name(),
            self.n,
            self.eps.map(fmt_num).unwrap_or_default(),
            fmt_num(self.radius),
            fmt_num(self.c1.x),
            fmt_num(self.c1.y),
            fmt_num(self.c2.x),
            fmt_num(self.c2.y),
            self.seed
        );
        if let Some(t) = self.wall_ms {
            let _ = write!(row, ",{t:.3}");
        }
        row
    }
}

/// Runs one solver. Returns the report; `wall_ms` is filled in only when
/// `timing` is set.
pub fn run_solver(
    instance: &Instance,
    problem: Problem,
    mode: Mode,
    eps: Option<f64>,
    tol: f64,
    seed: u64,
    timing: bool,
) -> Result<RunReport, SolveError> {
    match (mode, eps) {
        (Mode::Approx, None) => return Err(SolveError::MissingEps),
        (Mode::Approx, Some(_)) => {}
        (_, Some(_)) => return Err(SolveError::UnexpectedEps),
        _ => {}
    }
    let unsupported = || SolveError::Unsupported {
        problem: problem.name(),
        mode: mode.name(),
    };
    let solver_err = |e: &dyn std::fmt::Display| SolveError::Solver(e.to_string());
    let start = Instant::now();
    let (radius, c1, c2) = match problem {
        Problem::Pierce => {
            let s = match mode {
                Mode::Exact => solve_exact(instance),
                Mode::Bipartition => solve_bipartition(instance),
                _ => return Err(unsupported()),
            };
            (s.delta, s.p1, s.p2)
        }
        Problem::CoverGeneral => {
            let s = match mode {
                Mode::Exact => solve_exact_general(instance, tol).map_err(|e| solver_err(&e))?,
                Mode::Approx => fptas_general(instance, eps.unwrap()).map_err(|e| solver_err(&e))?,
                Mode::Gonzalez => gonzalez_2approx(instance),
                _ => return Err(unsupported()),
            };
            (s.r, s.c1, s.c2)
        }
        Problem::CoverRestricted => {
            let s = match mode {
                Mode::Exact => solve_exact_restricted(instance),
                Mode::Bipartition => solve_bipartition_restricted(instance),
                Mode::Approx => {
                    fptas_restricted_fast(instance, eps.unwrap()).map_err(|e| solver_err(&e))?
                }
                Mode::Sixapprox => sixapprox_restricted(instance),
                Mode::Gonzalez => return Err(unsupported()),
            };
            (s.r, s.c1, s.c2)
        }
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    Ok(RunReport {
        problem,
        mode,
        n: instance.len(),
        eps,
        radius,
        c1,
        c2,
        seed,
        wall_ms: timing.then_some(elapsed),
    })
}

/// SVG drawing: input disks stroked, solution disks dashed, centers as crosses.
pub fn render_svg(instance: &Instance, c1: Point, c2: Point, r: f64) -> String {
    let mut all: Vec<Disk> = instance.disks().to_vec();
    all.push(Disk { center: c1, radius: r });
    all.push(Disk { center: c2, radius: r });
    let (lo, hi) = crate::geom::bounding_box(&all);
    let pad = 0.05 * lo.dist(hi).max(1.0);
    let (w, h) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
    // Flip y so the drawing uses the mathematical orientation.
    let tx = |p: Point| (p.x - lo.x + pad, hi.y - p.y + pad);
    let stroke = 0.003 * w.max(h);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"800\" height=\"{}\">\n",
        fmt_num(w),
        fmt_num(h),
        fmt_num((800.0 * h / w).round())
    );
    for d in instance.disks() {
        let (x, y) = tx(d.center);
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
            fmt_num(x),
            fmt_num(y),
            fmt_num(d.radius),
            fmt_num(stroke)
        );
    }
    for (c, color) in [(c1, "crimson"), (c2, "royalblue")] {
        let (x, y) = tx(c);
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>",
            fmt_num(x),
            fmt_num(y),
            fmt_num(r),
            fmt_num(stroke),
            fmt_num(4.0 * stroke),
            fmt_num(2.0 * stroke)
        );
        let arm = 4.0 * stroke;
        let _ = writeln!(
            out,
            "  <path d=\"M {} {} L {} {} M {} {} L {} {}\" stroke=\"{color}\" stroke-width=\"{}\"/>",
            fmt_num(x - arm),
            fmt_num(y - arm),
            fmt_num(x + arm),
            fmt_num(y + arm),
            fmt_num(x - arm),
            fmt_num(y + arm),
            fmt_num(x + arm),
            fmt_num(y - arm),
            fmt_num(stroke)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Solver value against its oracle bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub problem: Problem,
    pub n: usize,
    pub solver: f64,
    pub oracle_lower: f64,
    pub oracle_upper: f64,
    pub slack: f64,
}

impl CheckReport {
    pub fn agrees(&self) -> bool {
        self.solver >= self.oracle_lower - self.slack && self.solver <= self.oracle_upper + self.slack
    }

    pub fn csv_header() -> &'static str {
        "problem,n,solver,oracle_lower,oracle_upper,agree"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.problem.name(),
            self.n,
            fmt_num(self.solver),
            fmt_num(self.oracle_lower),
            fmt_num(self.oracle_upper),
            self.agrees()
        )
    }
}

/// Runs the exact solver of `problem` and the matching brute-force oracle.
pub fn run_check(instance: &Instance, problem: Problem, tol: f64) -> Result<CheckReport, SolveError> {
    let err = |e: &dyn std::fmt::Display| SolveError::Solver(e.to_string());
    let (solver, lo, hi, slack) = match problem {
        Problem::Pierce => {
            let s = solve_exact(instance).delta;
            let o = brute_pierce_delta(instance).map_err(|e| err(&e))?.delta;
            (s, o, o, 1e-9 * (1.0 + o))
        }
        Problem::CoverRestricted => {
            let s = solve_exact_restricted(instance).r;
            let r_max = instance.max_radius();
            let shrunk = Instance::new(shrink(instance, r_max).map_err(|e| err(&e))?)
                .map_err(|e| err(&e))?;
            let o = brute_pierce_delta(&shrunk).map_err(|e| err(&e))?.delta + r_max;
            (s, o, o, 1e-9 * (1.0 + o))
        }
        Problem::CoverGeneral => {
            let s = solve_exact_general(instance, tol).map_err(|e| err(&e))?.r;
            let b = grid_refine_cover_general(instance, tol.max(1e-4)).map_err(|e| err(&e))?;
            (s, b.r_lower, b.r_upper, 1e-3 * instance.diameter())
        }
    };
    Ok(CheckReport {
        problem,
        n: instance.len(),
        solver,
        oracle_lower: lo,
        oracle_upper: hi,
        slack,
    })
}

// ---------------------------------------------------------------------------
// Benchmarks
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ratios,
    Agreement,
    Scaling,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Ratios => "ratios",
            Suite::Agreement => "agreement",
            Suite::Scaling => "scaling",
        }
    }
}

/// Box size and largest radius of benchmark instances.
pub const BENCH_BOX: f64 = 100.0;
pub const BENCH_R_MAX: f64 = 10.0;

fn bench_instance(seed: u64, k: u64, n: usize) -> Instance {
    generate(n, seed.wrapping_mul(1_000_003).wrapping_add(k), BENCH_BOX, BENCH_R_MAX)
}

/// Approximation ratios against exact solvers and the piercing oracle.
pub fn bench_ratios(seed: u64, count: usize) -> String {
    let mut out = String::from(
        "instance,n,pierce_exact,pierce_oracle,pierce_ratio,restricted_exact,sixapprox_ratio,\
         fptas_restricted_ratio,fptas_fast_ratio,general_exact,gonzalez_ratio,fptas_general_ratio\n",
    );
    let ratio = |a: f64, b: f64| if b > 0.0 { a / b } else { 1.0 };
    for k in 0..count {
        let n = 3 + k % 6;
        let inst = bench_instance(seed, k as u64, n);
        let pe = solve_exact(&inst).delta;
        let po = brute_pierce_delta(&inst).map(|s| s.delta).unwrap_or(f64::NAN);
        let re = solve_exact_restricted(&inst).r;
        let six = sixapprox_restricted(&inst).r;
        let fr = fptas_restricted(&inst, 0.25).map(|s| s.r).unwrap_or(f64::NAN);
        let ff = fptas_restricted_fast(&inst, 0.25).map(|s| s.r).unwrap_or(f64::NAN);
        let ge = solve_exact_general(&inst, 1e-4).map(|s| s.r).unwrap_or(f64::NAN);
        let gz = gonzalez_2approx(&inst).r;
        let fg = fptas_general(&inst, 0.5).map(|s| s.r).unwrap_or(f64::NAN);
        let _ = writeln!(
            out,
            "{k},{n},{},{},{},{},{},{},{},{},{},{}",
            fmt_num(pe),
            fmt_num(po),
            fmt_num(ratio(pe, po)),
            fmt_num(re),
            fmt_num(ratio(six, re)),
            fmt_num(ratio(fr, re)),
            fmt_num(ratio(ff, re)),
            fmt_num(ge),
            fmt_num(ratio(gz, ge)),
            fmt_num(ratio(fg, ge)),
        );
    }
    out
}

/// Fast versus naive piercing decisions at query values spread around the
/// optimum.
pub fn bench_agreement(seed: u64, count: usize) -> String {
    let mut out = String::from("instance,n,delta,naive,fast,agree\n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let n = 3 + k % 8;
        let inst = bench_instance(seed, k as u64, n);
        let cands = candidate_deltas(&inst);
        let top = cands.last().map_or(1.0, |c| c.value).max(1.0);
        for _ in 0..5 {
            let delta = rng.gen_range(0.0..1.2 * top);
            let a = decide_naive(&inst, delta).is_some();
            let b = decide_fast(&inst, delta).is_some();
            let _ = writeln!(out, "{k},{n},{},{a},{b},{}", fmt_num(delta), a == b);
        }
    }
    out
}

pub const SCALING_SIZES: [usize; 5] = [8, 16, 32, 64, 128];

/// Median wall time of the approximate and bipartition solvers per size.
pub fn bench_scaling(seed: u64, reps: usize) -> String {
    let mut out = String::from("n,algorithm,median_ms\n");
    type Runner = fn(&Instance);
    let runs: [(&str, Runner); 5] = [
        ("cover-general/gonzalez", |i| {
            gonzalez_2approx(i);
        }),
        ("cover-restricted/sixapprox", |i| {
            sixapprox_restricted(i);
        }),
        ("cover-restricted/approx-0.25", |i| {
            let _ = fptas_restricted_fast(i, 0.25);
        }),
        ("cover-restricted/bipartition", |i| {
            solve_bipartition_restricted(i);
        }),
        ("pierce/bipartition", |i| {
            solve_bipartition(i);
        }),
    ];
    for &n in &SCALING_SIZES {
        for (name, run) in runs.iter() {
            let mut times: Vec<f64> = (0..reps.max(1))
                .map(|k| {
                    let inst = bench_instance(seed, (n * 1000 + k) as u64, n);
                    let t = Instant::now();
                    run(&inst);
                    t.elapsed().as_secs_f64() * 1e3
                })
                .collect();
            times.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let _ = writeln!(out, "{n},{name},{:.3}", times[times.len() / 2]);
        }
    }
    out
}

/// Runs a suite and writes `<suite>.csv` into `dir`.
pub fn run_bench(suite: Suite, seed: u64, count: usize, dir: &Path) -> Result<PathBuf, IoError> {
    fs::create_dir_all(dir)?;
    let body = match suite {
        Suite::Ratios => bench_ratios(seed, count),
        Suite::Agreement => bench_agreement(seed, count),
        Suite::Scaling => bench_scaling(seed, count.clamp(1, 5)),
    };
    let path = dir.join(format!("{}.csv", suite.name()));
    fs::write(&path, body)?;
    Ok(path)
}
