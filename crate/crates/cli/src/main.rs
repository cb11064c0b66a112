use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symcenter::multiset_centers::{center_through, fixed_set_sample};
use symcenter::oracle::{
    check_equivariance, equivariance_suite, iff_suite, lemma_aux_suite, oracle_suite, theorem_suite,
    triangles::triangle_demo_suite, CenterId, TrialReport,
};
use symcenter::polygon_centers::center_through_polygon;
use symcenter::report::{analyze, Analysis};
use symcenter::scene::{SceneFile, Shape};
use symcenter::svg::{render_svg, DEFAULT_WIDTH};
use symcenter::{CenterValue, Class, Error, DEFAULT_ANGLE_TOL};

#[derive(Parser)]
#[command(name = "symcenter", version, about = "Symmetry groups and centers of plane point sets and polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the symmetry group, class, fixed set and centers of a scene as JSON.
    Report {
        file: PathBuf,
        /// Angle tolerance in turns for constructed (non-rational) angles.
        #[arg(long, default_value_t = DEFAULT_ANGLE_TOL)]
        tol: f64,
        /// Decimal digits for coordinates that are not rational.
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
    /// Run a verification suite, or the per-scene checks on a file.
    Verify {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Similarities per object (equivariance, scene checks), objects
        /// (theorem) or random multisets (oracle).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Relative tolerance for values that are not rational.
        #[arg(long)]
        tol: Option<f64>,
        /// Largest polygon order for the lemma-aux suite.
        #[arg(long, default_value_t = 10)]
        max: usize,
        /// Objects per center for the equivariance suite.
        #[arg(long, default_value_t = 20)]
        objects: usize,
    },
    /// Write an SVG figure of a scene with its centers.
    Svg {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WIDTH)]
        width: u32,
        #[arg(long, default_value_t = DEFAULT_ANGLE_TOL)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Equivariance,
    Iff,
    LemmaAux,
    Theorem,
    Oracle,
    Triangles,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn io(path: &Path, e: std::io::Error) -> Failure {
        Failure { code: 4, message: format!("{}: {e}", path.display()) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Invalid(_) | Error::Empty => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn load(path: &Path) -> Result<Shape, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let scene = SceneFile::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    scene.shape().map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn report(file: &Path, tol: f64, precision: usize) -> Result<(), Failure> {
    let shape = load(file)?;
    let a = analyze(&shape, tol)?;
    println!("{}", a.report(precision).to_json());
    Ok(())
}

fn svg(file: &Path, output: &Path, width: u32, tol: f64) -> Result<(), Failure> {
    let shape = load(file)?;
    let a = analyze(&shape, tol)?;
    fs::write(output, render_svg(&a, width)).map_err(|e| Failure::io(output, e))
}

/// Equivariance of every center defined on the scene, the class flags, and
/// the affine roundtrip through five fixed points.
fn verify_scene(shape: &Shape, trials: usize, seed: u64, tol: f64) -> Result<TrialReport, Failure> {
    let mut report = TrialReport::new("scene", seed);
    for id in CenterId::ALL {
        if id.evaluate(shape).is_ok() {
            report.absorb(check_equivariance(id, shape, trials, seed, tol));
        }
    }
    let a: Analysis = analyze(shape, DEFAULT_ANGLE_TOL)?;
    if let (Some(eq), Some(col)) = (a.x_eq_centroid(), a.triple_collinear()) {
        let class = a.class;
        report.check(eq == (class == Class::A), || {
            (shape.describe(), format!("class {class}"), format!("X equals centroid: {eq}"))
        });
        report.check(col == (class != Class::C), || {
            (shape.describe(), format!("class {class}"), format!("centers collinear: {col}"))
        });
        let (x, y) = (a.x.clone().expect("x"), a.y.clone().expect("y"));
        for i in 0..5 {
            let target = fixed_set_sample(&a.fixed, 2 * i - 3, 7 - 3 * i);
            let coef = match shape {
                Shape::Multiset(m) => center_through(m, &target)?,
                Shape::Polygon(p) => center_through_polygon(p, &target)?,
                Shape::Labeled(_) => unreachable!("labeled scenes have no flags"),
            };
            let got = coef.evaluate(&a.centroid, &x, &y);
            let want = CenterValue::exact(target.clone());
            let ok = match got.exact_point() {
                Some(p) => *p == target,
                None => got.distance(&want).to_f64() <= 1e-9 * shape.extent(),
            };
            report.check(ok, || (shape.describe(), target.to_string(), got.to_string()));
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    file: Option<&Path>,
    suite: Option<Suite>,
    trials: Option<usize>,
    seed: u64,
    tol: Option<f64>,
    max: usize,
    objects: usize,
) -> Result<bool, Failure> {
    let report = match (file, suite) {
        (Some(_), Some(_)) => return Err(Failure::usage("give either a scene file or --suite, not both")),
        (None, None) => return Err(Failure::usage("give a scene file or --suite")),
        (Some(f), None) => verify_scene(&load(f)?, trials.unwrap_or(100), seed, tol.unwrap_or(1e-6))?,
        (None, Some(s)) => match s {
            Suite::Equivariance => equivariance_suite(objects, trials.unwrap_or(100), seed, tol.unwrap_or(1e-6)),
            Suite::Iff => iff_suite(seed),
            Suite::LemmaAux => {
                if max < 3 {
                    return Err(Failure::usage("--max must be at least 3"));
                }
                lemma_aux_suite(max, seed)
            }
            Suite::Theorem => theorem_suite(trials.unwrap_or(200), seed, tol.unwrap_or(1e-9)),
            Suite::Oracle => oracle_suite(trials.unwrap_or(500), seed),
            Suite::Triangles => triangle_demo_suite(),
        },
    };
    println!("{}", report.to_json());
    eprintln!("{}", report.summary());
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report { file, tol, precision } => report(file, *tol, *precision).map(|_| true),
        Command::Verify { file, suite, trials, seed, tol, max, objects } => {
            verify(file.as_deref(), *suite, *trials, *seed, *tol, *max, *objects)
        }
        Command::Svg { file, output, width, tol } => svg(file, output, *width, *tol).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
